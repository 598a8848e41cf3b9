/**
 * Readers for the two CSV schemas the solver writes.
 *
 * Profile files:     x,h,u,v,P11,P12,P22   (one row per sample point)
 * Convergence files: cells,err_h,err_hu,err_hv,err_E11,err_E12,err_E22
 *
 * Anything that does not match the documented header, or rows that are
 * not plain finite numbers, is rejected with SchemaError so a wrong or
 * stale file fails loudly instead of producing an empty-looking figure.
 */

import { readFileSync } from "fs";
import Papa from "papaparse";

export const PROFILE_FIELDS = ["x", "h", "u", "v", "P11", "P12", "P22"] as const;
export const CONVERGENCE_FIELDS = [
  "cells", "err_h", "err_hu", "err_hv", "err_E11", "err_E12", "err_E22",
] as const;

export type ProfileField = (typeof PROFILE_FIELDS)[number];
export type VariableName = Exclude<ProfileField, "x">;

export class SchemaError extends Error {}

/** One profile file: a label plus column arrays of equal length. */
export interface ProfileSeries {
  label: string;
  x: number[];
  h: number[];
  u: number[];
  v: number[];
  P11: number[];
  P12: number[];
  P22: number[];
}

export interface ConvergenceTable {
  cells: number[];
  errors: Record<string, number[]>; // keyed by err_* column name
}

function parseRows(path: string, expected: readonly string[]): number[][] {
  const parsed = Papa.parse<string[]>(readFileSync(path, "utf-8").trim(), {
    header: false,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    throw new SchemaError(`${path}: ${parsed.errors[0].message}`);
  }
  const [header, ...rows] = parsed.data;
  if (!header || header.join(",") !== expected.join(",")) {
    throw new SchemaError(
      `${path}: expected header "${expected.join(",")}", got "${(header ?? []).join(",")}"`
    );
  }
  if (rows.length === 0) {
    throw new SchemaError(`${path}: no data rows`);
  }
  return rows.map((cells, i) => {
    if (cells.length !== expected.length) {
      throw new SchemaError(`${path} row ${i + 2}: ${cells.length} fields`);
    }
    return cells.map((c) => {
      const v = Number(c);
      if (c.trim() === "" || !Number.isFinite(v)) {
        throw new SchemaError(`${path} row ${i + 2}: bad number "${c}"`);
      }
      return v;
    });
  });
}

export function readProfileCsv(path: string, label: string): ProfileSeries {
  const rows = parseRows(path, PROFILE_FIELDS);
  const col = (j: number) => rows.map((r) => r[j]);
  const series: ProfileSeries = {
    label,
    x: col(0), h: col(1), u: col(2), v: col(3),
    P11: col(4), P12: col(5), P22: col(6),
  };
  for (let i = 1; i < series.x.length; i++) {
    if (!(series.x[i] > series.x[i - 1])) {
      throw new SchemaError(`${path}: x not strictly increasing at row ${i + 2}`);
    }
  }
  return series;
}

export function readConvergenceCsv(path: string): ConvergenceTable {
  const rows = parseRows(path, CONVERGENCE_FIELDS);
  return {
    cells: rows.map((r) => r[0]),
    errors: Object.fromEntries(
      CONVERGENCE_FIELDS.slice(1).map((name, j) => [name, rows.map((r) => r[j + 1])])
    ),
  };
}
