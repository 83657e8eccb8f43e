// Minimal deterministic SVG chart builders: fixed element order, fixed
// decimal formatting, no ids or timestamps, so identical data gives
// identical bytes.

export interface Point {
  x: number;
  y: number;
}

export interface Series {
  name: string;
  color: string;
  points: Point[];
}

export interface BoxStats {
  min: number;
  q1: number;
  median: number;
  q3: number;
  max: number;
}

const W = 640;
const H = 420;
const MARGIN = { top: 44, right: 24, bottom: 52, left: 72 };

function fmt(v: number): string {
  return Number(v.toFixed(2)).toString();
}

function esc(s: string): string {
  return s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}

// Type-7 (linear interpolation) quantile of a sorted copy.
export function quantile(values: number[], f: number): number {
  const sorted = [...values].sort((a, b) => a - b);
  if (sorted.length === 0) {
    throw new Error('quantile of empty list');
  }
  const pos = (sorted.length - 1) * f;
  const lo = Math.floor(pos);
  const hi = Math.ceil(pos);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo);
}

export function boxStats(values: number[]): BoxStats {
  return {
    min: quantile(values, 0),
    q1: quantile(values, 0.25),
    median: quantile(values, 0.5),
    q3: quantile(values, 0.75),
    max: quantile(values, 1),
  };
}

function linearTicks(lo: number, hi: number, count: number): number[] {
  if (lo === hi) {
    return [lo];
  }
  const span = hi - lo;
  const step0 = Math.pow(10, Math.floor(Math.log10(span / count)));
  let step = step0;
  for (const k of [1, 2, 5, 10]) {
    step = step0 * k;
    if (span / step <= count) break;
  }
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
    ticks.push(Number(t.toPrecision(12)));
  }
  return ticks;
}

function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.floor(Math.log10(lo)); e <= Math.ceil(Math.log10(hi)); e++) {
    const t = Math.pow(10, e);
    if (t >= lo / 1.0001 && t <= hi * 1.0001) {
      ticks.push(t);
    }
  }
  return ticks.length >= 2 ? ticks : [lo, hi];
}

interface Scale {
  (v: number): number;
  ticks: number[];
}

function makeScale(lo: number, hi: number, pxLo: number, pxHi: number, log: boolean): Scale {
  if (log) {
    const la = Math.log10(lo);
    const lb = Math.log10(hi);
    const span = lb - la || 1;
    const f = ((v: number) => pxLo + ((Math.log10(v) - la) / span) * (pxHi - pxLo)) as Scale;
    f.ticks = logTicks(lo, hi);
    return f;
  }
  const span = hi - lo || 1;
  const f = ((v: number) => pxLo + ((v - lo) / span) * (pxHi - pxLo)) as Scale;
  f.ticks = linearTicks(lo, hi, 6);
  return f;
}

function tickLabel(v: number): string {
  if (v !== 0 && (Math.abs(v) < 0.001 || Math.abs(v) >= 10000)) {
    return v.toExponential(0).replace('e+', 'e').replace('e-', 'e-');
  }
  return Number(v.toPrecision(6)).toString();
}

function axes(xs: Scale, ys: Scale, xLabel: string, yLabel: string, title: string): string[] {
  const parts: string[] = [];
  const x0 = MARGIN.left;
  const x1 = W - MARGIN.right;
  const y0 = H - MARGIN.bottom;
  const y1 = MARGIN.top;
  parts.push(`<text x="${W / 2}" y="24" text-anchor="middle" font-size="15" font-weight="bold">${esc(title)}</text>`);
  parts.push(`<line x1="${x0}" y1="${y0}" x2="${x1}" y2="${y0}" stroke="#333"/>`);
  parts.push(`<line x1="${x0}" y1="${y0}" x2="${x0}" y2="${y1}" stroke="#333"/>`);
  for (const t of xs.ticks) {
    const px = fmt(xs(t));
    parts.push(`<line x1="${px}" y1="${y0}" x2="${px}" y2="${y0 + 5}" stroke="#333"/>`);
    parts.push(`<text x="${px}" y="${y0 + 18}" text-anchor="middle" font-size="11">${tickLabel(t)}</text>`);
  }
  for (const t of ys.ticks) {
    const py = fmt(ys(t));
    parts.push(`<line x1="${x0 - 5}" y1="${py}" x2="${x0}" y2="${py}" stroke="#333"/>`);
    parts.push(`<line x1="${x0}" y1="${py}" x2="${x1}" y2="${py}" stroke="#ddd"/>`);
    parts.push(`<text x="${x0 - 8}" y="${py}" text-anchor="end" dominant-baseline="middle" font-size="11">${tickLabel(t)}</text>`);
  }
  parts.push(`<text x="${(x0 + x1) / 2}" y="${H - 12}" text-anchor="middle" font-size="12">${esc(xLabel)}</text>`);
  parts.push(`<text x="18" y="${(y0 + y1) / 2}" text-anchor="middle" font-size="12" transform="rotate(-90 18 ${(y0 + y1) / 2})">${esc(yLabel)}</text>`);
  return parts;
}

function wrap(body: string[]): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" viewBox="0 0 ${W} ${H}">\n` +
    `<rect width="${W}" height="${H}" fill="white"/>\n` +
    body.join('\n') +
    '\n</svg>\n'
  );
}

export function scatterSvg(
  title: string,
  xLabel: string,
  yLabel: string,
  series: Series[],
  logY: boolean,
): string {
  const xs = series.flatMap((s) => s.points.map((p) => p.x));
  const ys = series.flatMap((s) => s.points.map((p) => p.y));
  const xScale = makeScale(Math.min(...xs), Math.max(...xs), MARGIN.left, W - MARGIN.right, false);
  const yScale = makeScale(Math.min(...ys), Math.max(...ys), H - MARGIN.bottom, MARGIN.top, logY);
  const parts = axes(xScale, yScale, xLabel, yLabel, title);
  series.forEach((s, si) => {
    for (const p of s.points) {
      parts.push(`<circle cx="${fmt(xScale(p.x))}" cy="${fmt(yScale(p.y))}" r="3" fill="${s.color}" fill-opacity="0.75"/>`);
    }
    const lx = W - MARGIN.right - 150;
    const ly = MARGIN.top + 8 + si * 18;
    parts.push(`<rect x="${lx}" y="${ly - 8}" width="10" height="10" fill="${s.color}"/>`);
    parts.push(`<text x="${lx + 16}" y="${ly}" font-size="12" dominant-baseline="middle">${esc(s.name)}</text>`);
  });
  return wrap(parts);
}

export function boxPlotSvg(
  title: string,
  yLabel: string,
  boxes: { label: string; color: string; stats: BoxStats }[],
  logY: boolean,
): string {
  const all = boxes.flatMap((b) => [b.stats.min, b.stats.max]);
  const yScale = makeScale(Math.min(...all), Math.max(...all), H - MARGIN.bottom, MARGIN.top, logY);
  const x0 = MARGIN.left;
  const x1 = W - MARGIN.right;
  const slot = (x1 - x0) / boxes.length;
  const xTicks = ((v: number) => v) as Scale;
  xTicks.ticks = [];
  const parts = axes(xTicks, yScale, '', yLabel, title);
  boxes.forEach((b, i) => {
    const cx = x0 + slot * (i + 0.5);
    const bw = Math.min(slot * 0.5, 80);
    const s = b.stats;
    const [yMin, yQ1, yMed, yQ3, yMax] = [s.min, s.q1, s.median, s.q3, s.max].map((v) => yScale(v));
    parts.push(`<line x1="${fmt(cx)}" y1="${fmt(yMin)}" x2="${fmt(cx)}" y2="${fmt(yQ1)}" stroke="#333"/>`);
    parts.push(`<line x1="${fmt(cx)}" y1="${fmt(yQ3)}" x2="${fmt(cx)}" y2="${fmt(yMax)}" stroke="#333"/>`);
    parts.push(`<line x1="${fmt(cx - bw / 4)}" y1="${fmt(yMin)}" x2="${fmt(cx + bw / 4)}" y2="${fmt(yMin)}" stroke="#333"/>`);
    parts.push(`<line x1="${fmt(cx - bw / 4)}" y1="${fmt(yMax)}" x2="${fmt(cx + bw / 4)}" y2="${fmt(yMax)}" stroke="#333"/>`);
    parts.push(
      `<rect x="${fmt(cx - bw / 2)}" y="${fmt(yQ3)}" width="${fmt(bw)}" height="${fmt(yQ1 - yQ3)}" fill="${b.color}" fill-opacity="0.5" stroke="#333"/>`,
    );
    parts.push(`<line x1="${fmt(cx - bw / 2)}" y1="${fmt(yMed)}" x2="${fmt(cx + bw / 2)}" y2="${fmt(yMed)}" stroke="#000" stroke-width="2"/>`);
    parts.push(`<text x="${fmt(cx)}" y="${H - MARGIN.bottom + 18}" text-anchor="middle" font-size="12">${esc(b.label)}</text>`);
  });
  return wrap(parts);
}
