import { describe, expect, it } from "vitest";
import { fileURLToPath } from "url";
import path from "path";
import { buildConvergenceFigure } from "../src/convergence.js";
import { buildProfilesFigure, checkVariables } from "../src/profiles.js";
import { readConvergenceCsv, readProfileCsv } from "../src/schema.js";

const DIR = path.dirname(fileURLToPath(import.meta.url));
const fix = (name: string) => path.join(DIR, "fixtures", name);

const panels = (svg: string) => svg.split('<g class="panel"').length - 1;

describe("profiles figure", () => {
  const exact = readProfileCsv(fix("dambreak_exact.csv"), "exact");
  const hll = readProfileCsv(fix("dambreak_hll_200.csv"), "hll 200");

  it("renders one panel per variable, six by default", () => {
    const svg = buildProfilesFigure(exact, [hll], checkVariables([]));
    expect(panels(svg)).toBe(6);
    expect(svg).toContain("<svg");
    expect(svg).toContain("</svg>");
  });

  it("renders a requested subset", () => {
    const svg = buildProfilesFigure(exact, [hll], checkVariables(["h", "P11"]));
    expect(panels(svg)).toBe(2);
  });

  it("rejects unknown variable names", () => {
    expect(() => checkVariables(["depth"])).toThrow(/unknown variable/);
  });

  it("is deterministic", () => {
    const a = buildProfilesFigure(exact, [hll], checkVariables([]));
    const b = buildProfilesFigure(exact, [hll], checkVariables([]));
    expect(a).toBe(b);
  });
});

describe("convergence figure", () => {
  it("renders a single log-log panel", () => {
    const svg = buildConvergenceFigure(readConvergenceCsv(fix("dambreak_convergence.csv")));
    expect(panels(svg)).toBe(1);
    // identically-zero columns never reach the log axes
    expect(svg).not.toContain(">hv<");
    expect(svg).not.toContain(">E12<");
    expect(svg).toContain(">h<");
    expect(svg).toContain(">E11<");
  });

  it("handles a single row without crashing", () => {
    const svg = buildConvergenceFigure(readConvergenceCsv(fix("single_row_convergence.csv")));
    expect(panels(svg)).toBe(1);
    expect(svg).toContain("<circle");
  });
});
