/**
 * Log-log convergence figure: L1 error of each conserved component
 * against the cell count, one curve per component.
 */

import { ConvergenceTable } from "./schema.js";
import {
  LineSeries,
  MarkerSeries,
  buildFigure,
  buildLegend,
  buildPanel,
} from "./svg.js";

const COLORS = ["#222", "#4361ee", "#e63946", "#2d6a4f", "#f77f00", "#9d4edd"];

export function buildConvergenceFigure(table: ConvergenceTable): string {
  const lines: LineSeries[] = [];
  const markers: MarkerSeries[] = [];
  const legend = [];

  let idx = 0;
  for (const [name, errs] of Object.entries(table.errors)) {
    // zero error (an identically-constant component) has no log-log image
    const xs: number[] = [];
    const ys: number[] = [];
    errs.forEach((e, i) => {
      if (e > 0) {
        xs.push(table.cells[i]);
        ys.push(e);
      }
    });
    if (xs.length === 0) {
      idx++;
      continue;
    }
    const color = COLORS[idx % COLORS.length];
    const label = name.replace(/^err_/, "");
    if (xs.length > 1) lines.push({ xs, ys, color, label });
    markers.push({ xs, ys, color, label, r: 2 });
    legend.push({ color, label, marker: xs.length === 1 });
    idx++;
  }

  const body =
    buildPanel({
      x: 10,
      y: 34,
      width: 420,
      height: 300,
      title: "L1 error vs resolution",
      xLabel: "cells",
      yLabel: "L1 error",
      xScale: "log",
      yScale: "log",
      lines,
      markers,
    }) + buildLegend(legend, 60, 26);

  return buildFigure(440, 344, "Convergence", body);
}
