#!/usr/bin/env npx tsx
/**
 * Convergence curves — SVG plotter
 *
 * Reads a convergence table CSV (schema: cells,err_h,err_hu,err_hv,
 * err_E11,err_E12,err_E22) and writes a log-log figure of L1 error
 * against cell count, one curve per conserved component.  Components
 * with identically zero error are left out; a single-row table yields
 * lone markers.
 *
 * Usage:
 *   npx tsx src/plot_convergence.ts --in table.csv --out figure.svg
 */

import { writeFileSync } from "fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { buildConvergenceFigure } from "./convergence.js";
import { readConvergenceCsv } from "./schema.js";

interface Options {
  in: string;
  out: string;
}

async function main(): Promise<void> {
  const args = (await yargs(hideBin(process.argv))
    .usage("$0 --in [file] --out [file]")
    .string("in")
    .describe("in", "convergence table CSV")
    .demandOption("in")
    .string("out")
    .describe("out", "output SVG path")
    .demandOption("out")
    .help("help")
    .parse()) as unknown as Options;

  const table = readConvergenceCsv(args.in);
  const svg = buildConvergenceFigure(table);
  writeFileSync(args.out, svg);
  console.log(`SVG -> ${args.out} (${table.cells.length} rows)`);
}

main().catch((err) => {
  console.error("Fatal:", err.message || err);
  process.exit(1);
});
