/**
 * Figure layout for exact-vs-numerical profile comparisons: one panel
 * per variable, exact solution as a line, each numerical run as dots.
 */

import { ProfileSeries, VariableName, PROFILE_FIELDS } from "./schema.js";
import { LegendEntry, buildFigure, buildLegend, buildPanel } from "./svg.js";

export const ALL_VARIABLES = PROFILE_FIELDS.slice(1) as readonly VariableName[];

const EXACT_COLOR = "#222";
const NUMERIC_COLORS = ["#4361ee", "#e63946", "#2d6a4f", "#f77f00", "#9d4edd"];

const PANEL_W = 250;
const PANEL_H = 165;
const COLS = 3;

export function checkVariables(vars: string[]): VariableName[] {
  if (vars.length === 0) return [...ALL_VARIABLES];
  for (const v of vars) {
    if (!(ALL_VARIABLES as readonly string[]).includes(v)) {
      throw new Error(`unknown variable "${v}" (use ${ALL_VARIABLES.join(", ")})`);
    }
  }
  return vars as VariableName[];
}

export function buildProfilesFigure(
  exact: ProfileSeries,
  numerics: ProfileSeries[],
  vars: VariableName[]
): string {
  const cols = Math.min(COLS, vars.length);
  const rows = Math.ceil(vars.length / cols);
  const width = 12 + cols * (PANEL_W + 6);
  const height = 36 + rows * (PANEL_H + 8);

  let body = "";
  vars.forEach((name, i) => {
    body += buildPanel({
      x: 12 + (i % cols) * (PANEL_W + 6),
      y: 36 + Math.floor(i / cols) * (PANEL_H + 8),
      width: PANEL_W,
      height: PANEL_H,
      title: name,
      xLabel: "x",
      lines: [{ xs: exact.x, ys: exact[name], color: EXACT_COLOR, label: exact.label }],
      markers: numerics.map((sr, j) => ({
        xs: sr.x,
        ys: sr[name],
        color: NUMERIC_COLORS[j % NUMERIC_COLORS.length],
        label: sr.label,
      })),
    });
  });

  const legend: LegendEntry[] = [
    { color: EXACT_COLOR, label: exact.label },
    ...numerics.map((sr, j) => ({
      color: NUMERIC_COLORS[j % NUMERIC_COLORS.length],
      label: sr.label,
      marker: true,
    })),
  ];
  body += buildLegend(legend, 16, 26);

  return buildFigure(width, height, "Exact vs numerical profiles", body);
}
