// Parser for the benchmark's detailed_results.csv. The schema is fixed;
// anything else is a hard error so plots never silently draw wrong columns.

export const EXPECTED_COLUMNS = [
  'graph_name',
  'n',
  'p',
  'num_3_cycles',
  'num_4_cycles',
  'total_cycles',
  'h1_dim',
  'cellular_time',
  'edge_graph_time',
  'cubical_time',
  'ratio_edgegraph_over_cellular',
  'ratio_cubical_over_cellular',
  'ratio_cubical_over_edgegraph',
  'fastest',
] as const;

export interface BenchRow {
  graphName: string;
  n: number;
  p: number;
  num3Cycles: number;
  num4Cycles: number;
  totalCycles: number;
  h1Dim: number;
  cellularTime: number;
  edgeGraphTime: number;
  cubicalTime: number;
  fastest: string;
}

export class SchemaError extends Error {}

export function parseBenchCsv(text: string): BenchRow[] {
  const lines = text.split(/\r?\n/).filter((ln) => ln.length > 0);
  if (lines.length === 0) {
    throw new SchemaError('input CSV is empty (no header line)');
  }
  const header = lines[0].split(',');
  for (const col of EXPECTED_COLUMNS) {
    if (!header.includes(col)) {
      throw new SchemaError(`missing column: ${col}`);
    }
  }
  if (header.join(',') !== EXPECTED_COLUMNS.join(',')) {
    throw new SchemaError('column order or extra columns differ from the benchmark schema');
  }

  const rows: BenchRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i].split(',');
    if (fields.length !== EXPECTED_COLUMNS.length) {
      throw new SchemaError(
        `row ${i + 1} has ${fields.length} fields, expected ${EXPECTED_COLUMNS.length}`,
      );
    }
    const num = (k: number): number => {
      const v = Number(fields[k]);
      if (!Number.isFinite(v)) {
        throw new SchemaError(`row ${i + 1}, column ${EXPECTED_COLUMNS[k]}: not a number: ${fields[k]}`);
      }
      return v;
    };
    rows.push({
      graphName: fields[0],
      n: num(1),
      p: num(2),
      num3Cycles: num(3),
      num4Cycles: num(4),
      totalCycles: num(5),
      h1Dim: num(6),
      cellularTime: num(7),
      edgeGraphTime: num(8),
      cubicalTime: num(9),
      fastest: fields[13],
    });
  }
  return rows;
}

// Graph names look like cat3_g017; anything else lands in category 0.
export function categoryId(row: BenchRow): number {
  const m = /^cat(\d+)_/.exec(row.graphName);
  return m ? Number(m[1]) : 0;
}
