import * as fs from 'fs';
import * as path from 'path';

import { BenchRow, categoryId, parseBenchCsv } from './csv.js';
import { boxPlotSvg, boxStats, scatterSvg, Series } from './svg.js';

export interface PlotConfig {
  input: string;
  outDir: string;
  format?: 'svg'; // vector output only
  logTime?: boolean; // default true: the three algorithms span orders of magnitude
}

const ALGORITHMS = [
  { key: 'cellularTime' as const, label: 'cellular', color: '#1f77b4' },
  { key: 'edgeGraphTime' as const, label: 'edge graph', color: '#ff7f0e' },
  { key: 'cubicalTime' as const, label: 'cubical', color: '#2ca02c' },
];

function groupByCategory(rows: BenchRow[]): Map<number, BenchRow[]> {
  const groups = new Map<number, BenchRow[]>();
  for (const row of rows) {
    const id = categoryId(row);
    const got = groups.get(id);
    if (got) {
      got.push(row);
    } else {
      groups.set(id, [row]);
    }
  }
  return groups;
}

function timeSeries(rows: BenchRow[], x: (r: BenchRow) => number): Series[] {
  return ALGORITHMS.map((alg) => ({
    name: alg.label,
    color: alg.color,
    points: rows.map((r) => ({ x: x(r), y: r[alg.key] })),
  }));
}

export function makePlots(cfg: PlotConfig): string[] {
  if (cfg.format !== undefined && cfg.format !== 'svg') {
    throw new Error(`unsupported image format: ${cfg.format}`);
  }
  const logY = cfg.logTime !== false;
  const yLabel = logY ? 'seconds (log scale)' : 'seconds';
  const rows = parseBenchCsv(fs.readFileSync(cfg.input, 'utf-8'));
  if (rows.length === 0) {
    console.warn('input CSV has a header but no data rows; nothing to plot');
    return [];
  }
  fs.mkdirSync(cfg.outDir, { recursive: true });
  const written: string[] = [];
  const write = (name: string, svg: string) => {
    const file = path.join(cfg.outDir, name);
    fs.writeFileSync(file, svg, 'utf-8');
    written.push(file);
  };

  const groups = [...groupByCategory(rows).entries()].sort((a, b) => a[0] - b[0]);
  const variableP: BenchRow[] = [];
  for (const [id, group] of groups) {
    const fixedP = group.every((r) => r.p === group[0].p);
    if (!fixedP) {
      variableP.push(...group);
      continue;
    }
    const boxes = ALGORITHMS.map((alg) => ({
      label: alg.label,
      color: alg.color,
      stats: boxStats(group.map((r) => r[alg.key])),
    }));
    write(
      `box_category_${id}.svg`,
      boxPlotSvg(`Runtimes, category ${id} (p = ${group[0].p})`, yLabel, boxes, logY),
    );
  }

  if (variableP.length > 0) {
    write(
      'scatter_time_vs_p.svg',
      scatterSvg('Runtime vs edge probability', 'edge probability p', yLabel, timeSeries(variableP, (r) => r.p), logY),
    );
  }
  write(
    'scatter_time_vs_cycles.svg',
    scatterSvg(
      'Runtime vs short-cycle count',
      'simple 3-cycles + 4-cycles',
      yLabel,
      timeSeries(rows, (r) => r.totalCycles),
      logY,
    ),
  );
  return written;
}
