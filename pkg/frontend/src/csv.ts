/** CSV reading with strict schema validation.
 *
 * The figures are pure consumers of the CSV contracts of the computation
 * package; any schema mismatch is reported as a column diff, never guessed
 * around.
 */

export interface Table {
  header: string[];
  /** Row-major raw cells. */
  rows: string[][];
}

export class CsvError extends Error {}

export function parseCsv(text: string): Table {
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new CsvError("empty file: missing header row");
  }
  const header = lines[0].split(",");
  const rows: string[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== header.length) {
      throw new CsvError(
        `row ${i + 1}: expected ${header.length} cells, got ${cells.length}`,
      );
    }
    rows.push(cells);
  }
  return { header, rows };
}

/** Assert the header matches `expected` exactly, with a readable diff. */
export function requireSchema(table: Table, expected: string[]): void {
  const got = table.header.join(",");
  const want = expected.join(",");
  if (got !== want) {
    const missing = expected.filter((c) => !table.header.includes(c));
    const extra = table.header.filter((c) => !expected.includes(c));
    throw new CsvError(
      `schema mismatch: expected "${want}", got "${got}"` +
        (missing.length ? `; missing: ${missing.join(", ")}` : "") +
        (extra.length ? `; unexpected: ${extra.join(", ")}` : ""),
    );
  }
  if (table.rows.length === 0) {
    throw new CsvError("no rows: the CSV contains only a header");
  }
}

export function column(table: Table, name: string): string[] {
  const i = table.header.indexOf(name);
  if (i < 0) throw new CsvError(`no such column: "${name}"`);
  return table.rows.map((r) => r[i]);
}

/** Numeric column; empty cells become NaN, anything else non-numeric throws. */
export function numColumn(table: Table, name: string): number[] {
  return column(table, name).map((c, i) => {
    if (c === "") return NaN;
    const v = Number(c);
    if (Number.isNaN(v)) {
      throw new CsvError(`row ${i + 2}, column "${name}": not a number: "${c}"`);
    }
    return v;
  });
}
