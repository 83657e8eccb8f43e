// Usage: node dist/main.js <detailed_results.csv> <output-dir> [--linear-time]

import { makePlots } from './plots.js';

function main(argv: string[]): number {
  const positional = argv.filter((a) => !a.startsWith('--'));
  const flags = new Set(argv.filter((a) => a.startsWith('--')));
  for (const f of flags) {
    if (f !== '--linear-time') {
      console.error(`unknown flag: ${f}`);
      return 2;
    }
  }
  if (positional.length !== 2) {
    console.error('usage: node dist/main.js <detailed_results.csv> <output-dir> [--linear-time]');
    return 2;
  }
  try {
    const written = makePlots({
      input: positional[0],
      outDir: positional[1],
      logTime: !flags.has('--linear-time'),
    });
    for (const file of written) {
      console.log(file);
    }
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    return 1;
  }
}

process.exit(main(process.argv.slice(2)));
