import { describe, expect, it } from 'vitest';

import { EXPECTED_COLUMNS, SchemaError, categoryId, parseBenchCsv } from '../src/csv.js';

const HEADER = EXPECTED_COLUMNS.join(',');
const ROW1 = 'cat1_g000,48,0.07,2,12,14,15,0.000338,0.000468,0.005933,1.384615,17.553254,12.677350,cellular';
const ROW2 = 'cat3_g001,60,0.115,9,30,39,22,0.001200,0.002400,0.040000,2.000000,33.333333,16.666667,cellular';

describe('parseBenchCsv', () => {
  it('parses well-formed rows', () => {
    const rows = parseBenchCsv(`${HEADER}\n${ROW1}\n${ROW2}\n`);
    expect(rows).toHaveLength(2);
    expect(rows[0].graphName).toBe('cat1_g000');
    expect(rows[0].n).toBe(48);
    expect(rows[0].p).toBeCloseTo(0.07);
    expect(rows[0].totalCycles).toBe(14);
    expect(rows[0].cellularTime).toBeCloseTo(0.000338);
    expect(rows[1].fastest).toBe('cellular');
  });

  it('returns no rows for a header-only file', () => {
    expect(parseBenchCsv(`${HEADER}\n`)).toEqual([]);
  });

  it('names the missing column', () => {
    const withoutH1 = EXPECTED_COLUMNS.filter((c) => c !== 'h1_dim').join(',');
    expect(() => parseBenchCsv(`${withoutH1}\n`)).toThrow(/missing column: h1_dim/);
  });

  it('rejects reordered or extended headers', () => {
    const reordered = [...EXPECTED_COLUMNS].reverse().join(',');
    expect(() => parseBenchCsv(`${reordered}\n`)).toThrow(SchemaError);
    expect(() => parseBenchCsv(`${HEADER},extra\n`)).toThrow(SchemaError);
  });

  it('rejects rows with the wrong field count', () => {
    expect(() => parseBenchCsv(`${HEADER}\na,b,c\n`)).toThrow(/row 2/);
  });

  it('rejects non-numeric fields', () => {
    const bad = ROW1.replace('0.07', 'seven');
    expect(() => parseBenchCsv(`${HEADER}\n${bad}\n`)).toThrow(/column p/);
  });

  it('rejects empty input', () => {
    expect(() => parseBenchCsv('')).toThrow(SchemaError);
  });
});

describe('categoryId', () => {
  it('reads the category from the graph name', () => {
    const rows = parseBenchCsv(`${HEADER}\n${ROW1}\n${ROW2}\n`);
    expect(categoryId(rows[0])).toBe(1);
    expect(categoryId(rows[1])).toBe(3);
  });

  it('falls back to 0 for foreign names', () => {
    const row = parseBenchCsv(`${HEADER}\n${ROW1.replace('cat1_g000', 'mygraph')}\n`)[0];
    expect(categoryId(row)).toBe(0);
  });
});
