import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

const CLI = join(__dirname, "..", "dist", "cli.js");
const GOLDEN = join(__dirname, "golden");

function run(args: string[]): { code: number; stderr: string } {
  try {
    execFileSync("node", [CLI, ...args], { stdio: ["ignore", "pipe", "pipe"] });
    return { code: 0, stderr: "" };
  } catch (err: any) {
    return { code: err.status ?? -1, stderr: String(err.stderr ?? "") };
  }
}

describe("expsum-plot CLI (requires `npm run build` first)", () => {
  const dir = mkdtempSync(join(tmpdir(), "expsum-plot-"));

  it("renders every kind from the golden CSVs", () => {
    const jobs: [string, string][] = [
      ["SEMICIRCLE_HIST", "semicircle.csv"],
      ["HORIZONTAL_HIST", "horizontal.csv"],
      ["RATIO_CURVE", "ratio_table.csv"],
      ["ALPHA_SCATTER", "exponents.csv"],
    ];
    for (const [kind, csv] of jobs) {
      const out = join(dir, `${kind}.svg`);
      expect(run([kind, join(GOLDEN, csv), out]).code, kind).toBe(0);
      expect(readFileSync(out, "utf-8")).toMatch(/^<svg xmlns/);
    }
  });

  it("re-running produces a byte-identical file", () => {
    const out1 = join(dir, "a.svg");
    const out2 = join(dir, "b.svg");
    run(["SEMICIRCLE_HIST", join(GOLDEN, "semicircle.csv"), out1, "--bins", "20"]);
    run(["SEMICIRCLE_HIST", join(GOLDEN, "semicircle.csv"), out2, "--bins", "20"]);
    expect(readFileSync(out1)).toEqual(readFileSync(out2));
  });

  it("exits 1 with a no-rows error on a header-only CSV", () => {
    const empty = join(dir, "empty.csv");
    writeFileSync(empty, "p,a1,a2,value_normalized\n");
    const r = run(["SEMICIRCLE_HIST", empty, join(dir, "x.svg")]);
    expect(r.code).toBe(1);
    expect(r.stderr).toMatch(/no rows/);
  });

  it("exits 1 on a schema mismatch", () => {
    const r = run(["SEMICIRCLE_HIST", join(GOLDEN, "horizontal.csv"), join(dir, "x.svg")]);
    expect(r.code).toBe(1);
    expect(r.stderr).toMatch(/schema mismatch/);
  });

  it("exits 2 on usage errors", () => {
    expect(run([]).code).toBe(2);
    expect(run(["NOPE", "a.csv", "b.svg"]).code).toBe(2);
    expect(run(["SEMICIRCLE_HIST", "a.csv", "b.svg", "--bins", "x"]).code).toBe(2);
  });
});
