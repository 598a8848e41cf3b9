/**
 * Minimal SVG chart building blocks: one axes panel at a time, composed
 * into a figure by the callers.  Panels are emitted as <g class="panel">
 * groups so a figure's panel count is visible in the markup.
 */

export interface LineSeries {
  xs: number[];
  ys: number[];
  color: string;
  label: string;
  width?: number;
  dash?: string; // stroke-dasharray
}

export interface MarkerSeries {
  xs: number[];
  ys: number[];
  color: string;
  label: string;
  r?: number;
}

export type ScaleKind = "linear" | "log";

export interface PanelOpts {
  x: number; // translate offset of the panel group
  y: number;
  width: number;
  height: number;
  title: string;
  xLabel?: string;
  yLabel?: string;
  xScale?: ScaleKind;
  yScale?: ScaleKind;
  lines?: LineSeries[];
  markers?: MarkerSeries[];
}

export interface LegendEntry {
  color: string;
  label: string;
  marker?: boolean; // dot sample instead of a line sample
}

export function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function niceTicks(min: number, max: number, count: number): number[] {
  const range = max - min || 1;
  const rough = range / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rough)));
  const nice = [1, 2, 5, 10].map((m) => m * mag);
  const step = nice.find((n) => n >= rough) ?? rough;
  const start = Math.ceil(min / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= max + step * 0.01; v += step) ticks.push(v);
  return ticks;
}

/** Powers of ten inside [min, max]; 2 and 5 mantissas when under two decades. */
export function logTicks(min: number, max: number): number[] {
  const lo = Math.floor(Math.log10(min));
  const hi = Math.ceil(Math.log10(max));
  const mantissas = hi - lo <= 2 ? [1, 2, 5] : [1];
  const ticks: number[] = [];
  for (let e = lo; e <= hi; e++) {
    for (const m of mantissas) {
      const v = m * Math.pow(10, e);
      if (v >= min * 0.999 && v <= max * 1.001) ticks.push(v);
    }
  }
  return ticks;
}

function fmtTick(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(0).replace("e", "e");
  return String(parseFloat(v.toPrecision(4)));
}

function range(values: number[], scale: ScaleKind): [number, number] {
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (scale === "log") {
    // multiplicative padding keeps decade ticks inside the frame
    return [lo / 1.5, hi * 1.5];
  }
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const pad = (hi - lo) * 0.06;
  return [lo - pad, hi + pad];
}

/** One framed axes area with ticks, grid, series, and a title. */
export function buildPanel(opts: PanelOpts): string {
  const lines = opts.lines ?? [];
  const markers = opts.markers ?? [];
  const xScale: ScaleKind = opts.xScale ?? "linear";
  const yScale: ScaleKind = opts.yScale ?? "linear";

  const ml = 46, mr = 8, mt = 16, mb = 30;
  const pw = opts.width - ml - mr;
  const ph = opts.height - mt - mb;

  const allX = [...lines, ...markers].flatMap((s) => s.xs);
  const allY = [...lines, ...markers].flatMap((s) => s.ys);
  const [x0, x1] = range(allX, xScale);
  const [y0, y1] = range(allY, yScale);

  const tx = (v: number) => (xScale === "log" ? Math.log10(v) : v);
  const ty = (v: number) => (yScale === "log" ? Math.log10(v) : v);
  const xOf = (v: number) =>
    ml + ((tx(v) - tx(x0)) / (tx(x1) - tx(x0) || 1)) * pw;
  const yOf = (v: number) =>
    mt + ph - ((ty(v) - ty(y0)) / (ty(y1) - ty(y0) || 1)) * ph;

  const xTicks = xScale === "log" ? logTicks(x0, x1) : niceTicks(x0, x1, 4);
  const yTicks = yScale === "log" ? logTicks(y0, y1) : niceTicks(y0, y1, 4);

  let s = `<g class="panel" transform="translate(${opts.x},${opts.y})">\n`;

  for (const v of yTicks) {
    const y = yOf(v).toFixed(1);
    s += `<line x1="${ml}" y1="${y}" x2="${ml + pw}" y2="${y}" stroke="#eee" stroke-width="0.5"/>\n`;
  }

  for (const sr of lines) {
    const pts = sr.xs
      .map((x, i) => `${xOf(x).toFixed(1)},${yOf(sr.ys[i]).toFixed(1)}`)
      .join(" ");
    s += `<polyline fill="none" stroke="${sr.color}" stroke-width="${sr.width ?? 1.2}"${sr.dash ? ` stroke-dasharray="${sr.dash}"` : ""} points="${pts}"/>\n`;
  }
  for (const sr of markers) {
    for (let i = 0; i < sr.xs.length; i++) {
      s += `<circle cx="${xOf(sr.xs[i]).toFixed(1)}" cy="${yOf(sr.ys[i]).toFixed(1)}" r="${sr.r ?? 1.6}" fill="${sr.color}"/>\n`;
    }
  }

  // frame drawn after the data so series never overpaint the axes
  s += `<line x1="${ml}" y1="${mt}" x2="${ml}" y2="${mt + ph}" stroke="#333" stroke-width="0.7"/>\n`;
  s += `<line x1="${ml}" y1="${mt + ph}" x2="${ml + pw}" y2="${mt + ph}" stroke="#333" stroke-width="0.7"/>\n`;

  for (const v of xTicks) {
    const x = xOf(v).toFixed(1);
    s += `<line x1="${x}" y1="${mt + ph}" x2="${x}" y2="${mt + ph + 3}" stroke="#333" stroke-width="0.5"/>\n`;
    s += `<text x="${x}" y="${mt + ph + 12}" text-anchor="middle" font-size="6.5" fill="#666">${esc(fmtTick(v))}</text>\n`;
  }
  for (const v of yTicks) {
    const y = yOf(v);
    s += `<line x1="${ml - 3}" y1="${y.toFixed(1)}" x2="${ml}" y2="${y.toFixed(1)}" stroke="#333" stroke-width="0.5"/>\n`;
    s += `<text x="${ml - 5}" y="${(y + 2.5).toFixed(1)}" text-anchor="end" font-size="6.5" fill="#666">${esc(fmtTick(v))}</text>\n`;
  }

  s += `<text x="${ml + pw / 2}" y="${mt - 6}" text-anchor="middle" font-size="8" font-weight="600" fill="#222">${esc(opts.title)}</text>\n`;
  if (opts.xLabel) {
    s += `<text x="${ml + pw / 2}" y="${opts.height - 4}" text-anchor="middle" font-size="7" fill="#444">${esc(opts.xLabel)}</text>\n`;
  }
  if (opts.yLabel) {
    const cy = mt + ph / 2;
    s += `<text x="10" y="${cy}" text-anchor="middle" font-size="7" fill="#444" transform="rotate(-90,10,${cy})">${esc(opts.yLabel)}</text>\n`;
  }

  s += `</g>\n`;
  return s;
}

export function buildLegend(entries: LegendEntry[], x: number, y: number): string {
  let s = `<g class="legend" transform="translate(${x},${y})">\n`;
  let dx = 0;
  for (const e of entries) {
    if (e.marker) {
      s += `<circle cx="${dx + 7}" cy="0" r="2" fill="${e.color}"/>\n`;
    } else {
      s += `<line x1="${dx}" y1="0" x2="${dx + 14}" y2="0" stroke="${e.color}" stroke-width="1.2"/>\n`;
    }
    s += `<text x="${dx + 18}" y="2.5" font-size="7" fill="#444">${esc(e.label)}</text>\n`;
    dx += 18 + e.label.length * 4.2 + 14;
  }
  s += `</g>\n`;
  return s;
}

export function buildFigure(
  width: number,
  height: number,
  title: string,
  body: string
): string {
  let s = `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">\n`;
  s += `<rect width="${width}" height="${height}" fill="#fff"/>\n`;
  s += `<text x="${width / 2}" y="14" text-anchor="middle" font-size="10" font-weight="600" fill="#222">${esc(title)}</text>\n`;
  s += body;
  s += `</svg>\n`;
  return s;
}
