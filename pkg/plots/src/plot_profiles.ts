#!/usr/bin/env npx tsx
/**
 * Exact vs numerical profiles — SVG plotter
 *
 * Reads one exact-solution profile CSV plus any number of numerical
 * profile CSVs (schema: x,h,u,v,P11,P12,P22) and writes a figure with
 * one panel per requested variable, all six when --vars is omitted.
 * The exact solution is drawn as a line, each numerical run as dots;
 * mismatched x-ranges are plotted on the union range.
 *
 * Usage:
 *   npx tsx src/plot_profiles.ts --exact exact.csv \
 *       --numeric run1.csv run2.csv [--vars h P11] --out figure.svg
 */

import { writeFileSync } from "fs";
import { basename } from "path";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { buildProfilesFigure, checkVariables } from "./profiles.js";
import { readProfileCsv } from "./schema.js";

interface Options {
  exact: string;
  numeric: (string | number)[];
  vars: (string | number)[];
  out: string;
}

async function main(): Promise<void> {
  const args = (await yargs(hideBin(process.argv))
    .usage("$0 --exact [file] --numeric [files..] --out [file]")
    .string("exact")
    .describe("exact", "exact-solution profile CSV")
    .demandOption("exact")
    .array("numeric")
    .describe("numeric", "numerical profile CSVs")
    .default("numeric", [])
    .array("vars")
    .describe("vars", "variables to plot (default: all six)")
    .default("vars", [])
    .string("out")
    .describe("out", "output SVG path")
    .demandOption("out")
    .help("help")
    .parse()) as unknown as Options;

  const vars = checkVariables(args.vars.map(String));
  const exact = readProfileCsv(args.exact, "exact");
  const numerics = args.numeric.map((p) =>
    readProfileCsv(String(p), basename(String(p), ".csv"))
  );

  const svg = buildProfilesFigure(exact, numerics, vars);
  writeFileSync(args.out, svg);
  console.log(`SVG -> ${args.out} (${vars.length} panels)`);
}

main().catch((err) => {
  console.error("Fatal:", err.message || err);
  process.exit(1);
});
