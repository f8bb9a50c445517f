#!/usr/bin/env node
/** plot <kind> <in.csv> <out.svg> [--bins N] */

import { readFileSync, writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";
import { CsvError, parseCsv } from "./csv.js";
import { FIGURE_KINDS, FigureKind, render } from "./figures.js";

function usage(): never {
  console.error(
    `usage: expsum-plot <kind> <in.csv> <out.svg> [--bins N]\n` +
      `kinds: ${FIGURE_KINDS.join(", ")}`,
  );
  process.exit(2);
}

export function main(argv: string[]): number {
  const positional: string[] = [];
  let bins = 40;
  for (let i = 0; i < argv.length; i++) {
    if (argv[i] === "--bins") {
      const v = Number(argv[++i]);
      if (!Number.isInteger(v) || v < 2) {
        console.error(`--bins must be an integer >= 2, got "${argv[i]}"`);
        return 2;
      }
      bins = v;
    } else if (argv[i].startsWith("--")) {
      console.error(`unknown flag: ${argv[i]}`);
      return 2;
    } else {
      positional.push(argv[i]);
    }
  }
  if (positional.length !== 3) usage();
  const [kindRaw, input, output] = positional;
  if (!(FIGURE_KINDS as string[]).includes(kindRaw)) {
    console.error(`unknown kind "${kindRaw}"; kinds: ${FIGURE_KINDS.join(", ")}`);
    return 2;
  }
  let svg: string;
  try {
    svg = render(kindRaw as FigureKind, parseCsv(readFileSync(input, "utf-8")), bins);
  } catch (err) {
    if (err instanceof CsvError) {
      console.error(`csv error: ${err.message}`);
      return 1;
    }
    throw err;
  }
  writeFileSync(output, svg, "utf-8");
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
