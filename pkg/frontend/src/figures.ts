/** The four figure kinds, each a pure function CSV table -> SVG string. */

import { CsvError, Table, column, numColumn, requireSchema } from "./csv.js";
import {
  HEIGHT,
  MARGIN,
  WIDTH,
  axes,
  document,
  el,
  fmt,
  linearScale,
  logScale,
  ticks,
} from "./svg.js";

export type FigureKind =
  | "SEMICIRCLE_HIST"
  | "HORIZONTAL_HIST"
  | "RATIO_CURVE"
  | "ALPHA_SCATTER";

export const FIGURE_KINDS: FigureKind[] = [
  "SEMICIRCLE_HIST",
  "HORIZONTAL_HIST",
  "RATIO_CURVE",
  "ALPHA_SCATTER",
];

const PLOT_X0 = MARGIN.left;
const PLOT_X1 = WIDTH - MARGIN.right;
const PLOT_Y0 = HEIGHT - MARGIN.bottom;
const PLOT_Y1 = MARGIN.top;

interface Histogram {
  edges: number[];
  density: number[];
}

function histogram(values: number[], bins: number, lo: number, hi: number): Histogram {
  const counts = new Array<number>(bins).fill(0);
  const w = (hi - lo) / bins;
  let inside = 0;
  for (const v of values) {
    if (v < lo || v > hi) continue;
    const i = Math.min(bins - 1, Math.floor((v - lo) / w));
    counts[i]++;
    inside++;
  }
  const edges = Array.from({ length: bins + 1 }, (_, i) => lo + i * w);
  const density = counts.map((c) => (inside ? c / (inside * w) : 0));
  return { edges, density };
}

function bars(h: Histogram, xs: (v: number) => number, ys: (v: number) => number): string {
  const out: string[] = [];
  for (let i = 0; i < h.density.length; i++) {
    const x = xs(h.edges[i]);
    const xNext = xs(h.edges[i + 1]);
    const y = ys(h.density[i]);
    out.push(
      el("rect", {
        x,
        y,
        width: xNext - x,
        height: PLOT_Y0 - y,
        fill: "#7aa6c2",
        stroke: "#46728e",
        "stroke-width": 0.5,
      }),
    );
  }
  return out.join("\n");
}

/** Density of the semicircle law on [-2, 2]: (1/2*pi) * sqrt(4 - x^2). */
export function semicircleDensity(x: number): number {
  if (x <= -2 || x >= 2) return 0;
  return Math.sqrt(4 - x * x) / (2 * Math.PI);
}

export function semicircleHist(table: Table, bins: number): string {
  requireSchema(table, ["p", "a1", "a2", "value_normalized"]);
  const values = numColumn(table, "value_normalized");
  const h = histogram(values, bins, -2, 2);
  const yMax = Math.max(...h.density, semicircleDensity(0)) * 1.1;
  const xs = linearScale([-2, 2], [PLOT_X0, PLOT_X1]);
  const ys = linearScale([0, yMax], [PLOT_Y0, PLOT_Y1]);
  const body: string[] = [bars(h, xs, ys)];
  const pts: string[] = [];
  for (let i = 0; i <= 200; i++) {
    const x = -2 + (4 * i) / 200;
    pts.push(`${fmt(xs(x))},${fmt(ys(semicircleDensity(x)))}`);
  }
  body.push(
    el("polyline", {
      points: pts.join(" "),
      fill: "none",
      stroke: "#c0392b",
      "stroke-width": 2,
    }),
  );
  const p = column(table, "p")[0];
  body.push(
    axes(xs, ys, "normalized value", "density",
      `normalized cubic sums, p=${p}, n=${values.length}`,
      ticks(xs.domain, 8), ticks(ys.domain, 6)),
  );
  return document(body.join("\n"));
}

export function horizontalHist(table: Table, bins: number): string {
  requireSchema(table, ["p", "re", "im", "abs"]);
  const re = numColumn(table, "re");
  const lo = Math.min(...re);
  const hi = Math.max(...re);
  const pad = 0.05 * (hi - lo || 1);
  const h = histogram(re, bins, lo - pad, hi + pad);
  const yMax = Math.max(...h.density) * 1.1;
  const xs = linearScale([lo - pad, hi + pad], [PLOT_X0, PLOT_X1]);
  const ys = linearScale([0, yMax], [PLOT_Y0, PLOT_Y1]);
  const body = [
    bars(h, xs, ys),
    axes(xs, ys, "Re S / sqrt(p)", "density",
      `horizontal scan, ${re.length} primes`,
      ticks(xs.domain, 8), ticks(ys.domain, 6)),
  ];
  return document(body.join("\n"));
}

const CURVE_COLORS = ["#2c6e91", "#c0392b", "#27ae60", "#8e5aa2", "#d4881e", "#555555"];

export function ratioCurve(table: Table): string {
  requireSchema(table, ["p", "H", "n", "bound", "ratio", "skipped"]);
  const p = numColumn(table, "p");
  const ratio = numColumn(table, "ratio");
  const bound = column(table, "bound");
  const skipped = numColumn(table, "skipped");
  interface Pt { p: number; ratio: number }
  const series = new Map<string, Pt[]>();
  for (let i = 0; i < p.length; i++) {
    if (skipped[i] || !Number.isFinite(ratio[i]) || ratio[i] <= 0) continue;
    const key = bound[i];
    if (!series.has(key)) series.set(key, []);
    series.get(key)!.push({ p: p[i], ratio: ratio[i] });
  }
  if (series.size === 0) {
    throw new CsvError("no measured (non-skipped) ratio rows to plot");
  }
  let pLo = Infinity, pHi = -Infinity, rLo = Infinity, rHi = -Infinity;
  for (const pts of series.values()) {
    for (const pt of pts) {
      pLo = Math.min(pLo, pt.p); pHi = Math.max(pHi, pt.p);
      rLo = Math.min(rLo, pt.ratio); rHi = Math.max(rHi, pt.ratio);
    }
  }
  if (pLo === pHi) { pLo /= 1.5; pHi *= 1.5; }
  if (rLo === rHi) { rLo /= 1.5; rHi *= 1.5; }
  const xs = logScale([pLo, pHi], [PLOT_X0, PLOT_X1]);
  const ys = logScale([rLo / 1.2, rHi * 1.2], [PLOT_Y0, PLOT_Y1]);
  const body: string[] = [];
  const names = [...series.keys()].sort();
  names.forEach((name, si) => {
    const pts = series.get(name)!.sort((a, b) => a.p - b.p || a.ratio - b.ratio);
    const color = CURVE_COLORS[si % CURVE_COLORS.length];
    const path = pts.map((pt) => `${fmt(xs(pt.p))},${fmt(ys(pt.ratio))}`).join(" ");
    body.push(
      el("polyline", { points: path, fill: "none", stroke: color, "stroke-width": 1.5 }),
    );
    for (const pt of pts) {
      body.push(el("circle", { cx: xs(pt.p), cy: ys(pt.ratio), r: 3, fill: color }));
    }
    body.push(
      el("text", {
        x: PLOT_X1 - 8, y: PLOT_Y1 + 16 + 16 * si,
        "text-anchor": "end", "font-family": "monospace", "font-size": 12, fill: color,
      }, name),
    );
  });
  const logTicks = (d: [number, number]) => {
    const out: number[] = [];
    for (let e = Math.ceil(Math.log10(d[0])); e <= Math.floor(Math.log10(d[1])); e++) {
      out.push(Math.pow(10, e));
    }
    return out.length >= 2 ? out : d;
  };
  body.push(
    axes(xs, ys, "p (log)", "observed / bound (log)", "monitored bound ratios",
      logTicks(xs.domain), logTicks(ys.domain),
      (v) => v.toExponential(0), (v) => v.toExponential(0)),
  );
  return document(body.join("\n"));
}

export function alphaScatter(table: Table): string {
  requireSchema(table, ["p", "r1", "r2", "alpha"]);
  const p = numColumn(table, "p");
  const alpha = numColumn(table, "alpha");
  const pHi = Math.max(...p);
  const aHi = Math.max(...alpha, 1);
  const xs = linearScale([0, pHi * 1.02], [PLOT_X0, PLOT_X1]);
  const ys = linearScale([0, aHi * 1.05], [PLOT_Y0, PLOT_Y1]);
  const body: string[] = [];
  // 1/2 reference: alpha ~ 1/2 is the square-root-exponent benchmark
  body.push(
    el("line", {
      x1: xs(0), y1: ys(0.5), x2: xs(pHi * 1.02), y2: ys(0.5),
      stroke: "#c0392b", "stroke-width": 1.5, "stroke-dasharray": "6 4",
    }),
  );
  for (let i = 0; i < p.length; i++) {
    body.push(
      el("circle", { cx: xs(p[i]), cy: ys(alpha[i]), r: 2, fill: "#2c6e91", "fill-opacity": "0.6" }),
    );
  }
  body.push(
    axes(xs, ys, "p", "alpha = ln(max r) / ln p",
      `minimal exponent growth, ${p.length} primes`,
      ticks(xs.domain, 8), ticks(ys.domain, 6)),
  );
  return document(body.join("\n"));
}

export function render(kind: FigureKind, table: Table, bins: number): string {
  switch (kind) {
    case "SEMICIRCLE_HIST":
      return semicircleHist(table, bins);
    case "HORIZONTAL_HIST":
      return horizontalHist(table, bins);
    case "RATIO_CURVE":
      return ratioCurve(table);
    case "ALPHA_SCATTER":
      return alphaScatter(table);
  }
}
