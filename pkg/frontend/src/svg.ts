/** Minimal deterministic SVG assembly.
 *
 * All numbers are formatted through one fixed-precision function so that the
 * same input always yields byte-identical output; no dates, no randomness,
 * no environment-dependent fonts (labels use a generic monospace family).
 */

export const WIDTH = 720;
export const HEIGHT = 480;
export const MARGIN = { top: 36, right: 24, bottom: 48, left: 64 };

export function fmt(v: number): string {
  if (!Number.isFinite(v)) return "0";
  // fixed 3-decimal coordinates keep files small and rendering stable
  const s = v.toFixed(3);
  return s === "-0.000" ? "0.000" : s;
}

export interface Scale {
  (v: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const f = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as Scale;
  f.domain = domain;
  f.range = range;
  return f;
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
  const inner = linearScale([Math.log10(domain[0]), Math.log10(domain[1])], range);
  const f = ((v: number) => inner(Math.log10(v))) as Scale;
  f.domain = domain;
  f.range = range;
  return f;
}

/** Round ticks covering the domain, at most `n` of them. */
export function ticks(domain: [number, number], n: number): number[] {
  const [lo, hi] = domain;
  const span = hi - lo || 1;
  const step0 = Math.pow(10, Math.floor(Math.log10(span / n)));
  const err = (span / n) / step0;
  const step = step0 * (err >= 7.5 ? 10 : err >= 3.5 ? 5 : err >= 1.5 ? 2 : 1);
  const out: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + 1e-12; v += step) {
    out.push(Math.abs(v) < step / 1e6 ? 0 : v);
  }
  return out;
}

export function tickLabel(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 10000 || a < 0.001) return v.toExponential(1);
  return String(parseFloat(v.toPrecision(6)));
}

export interface Element {
  toString(): string;
}

export function el(tag: string, attrs: Record<string, string | number>, body = ""): string {
  const parts = Object.entries(attrs)
    .map(([k, v]) => `${k}="${typeof v === "number" ? fmt(v) : v}"`)
    .join(" ");
  return body === "" && tag !== "text"
    ? `<${tag} ${parts}/>`
    : `<${tag} ${parts}>${body}</${tag}>`;
}

export function text(x: number, y: number, body: string, anchor = "middle", size = 12): string {
  return el(
    "text",
    {
      x,
      y,
      "text-anchor": anchor,
      "font-family": "monospace",
      "font-size": size,
      fill: "#333",
    },
    escapeXml(body),
  );
}

export function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function axes(
  xs: Scale,
  ys: Scale,
  xLabel: string,
  yLabel: string,
  title: string,
  xTicks: number[],
  yTicks: number[],
  xTickText?: (v: number) => string,
  yTickText?: (v: number) => string,
): string {
  const fx = xTickText ?? tickLabel;
  const fy = yTickText ?? tickLabel;
  const body: string[] = [];
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right;
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  body.push(el("line", { x1: x0, y1: y0, x2: x1, y2: y0, stroke: "#333" }));
  body.push(el("line", { x1: x0, y1: y0, x2: x0, y2: y1, stroke: "#333" }));
  for (const t of xTicks) {
    const px = xs(t);
    body.push(el("line", { x1: px, y1: y0, x2: px, y2: y0 + 5, stroke: "#333" }));
    body.push(text(px, y0 + 20, fx(t)));
  }
  for (const t of yTicks) {
    const py = ys(t);
    body.push(el("line", { x1: x0 - 5, y1: py, x2: x0, y2: py, stroke: "#333" }));
    body.push(text(x0 - 8, py + 4, fy(t), "end"));
  }
  body.push(text((x0 + x1) / 2, HEIGHT - 10, xLabel));
  body.push(
    el(
      "g",
      { transform: `translate(16 ${fmt((y0 + y1) / 2)}) rotate(-90)` },
      text(0, 0, yLabel),
    ),
  );
  body.push(text((x0 + x1) / 2, 20, title, "middle", 14));
  return body.join("\n");
}

export function document(body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
    `viewBox="0 0 ${WIDTH} ${HEIGHT}">\n` +
    `<rect x="0" y="0" width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>\n` +
    body +
    `\n</svg>\n`
  );
}
