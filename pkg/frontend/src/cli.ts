#!/usr/bin/env node
/**
 * Command line wrapper around renderFile.
 *
 * Usage: plotview render <input.csv> -o <out.png> [--style heatmap|surface] [--fixed-scale]
 *
 * Exit codes: 0 success, 1 schema/grid/I-O failure, 2 usage error.
 */

import { CsvError } from "./csv";
import { renderFile, Style } from "./render";

const USAGE =
  "usage: plotview render <input.csv> -o <out.png> [--style heatmap|surface] [--fixed-scale]";

interface ParsedArgs {
  input: string;
  output: string;
  style: Style;
  fixedScale: boolean;
}

class UsageError extends Error {}

function parseArgs(argv: string[]): ParsedArgs {
  if (argv.length === 0 || argv[0] !== "render") {
    throw new UsageError(`expected the render subcommand\n${USAGE}`);
  }
  let input: string | undefined;
  let output: string | undefined;
  let style: Style = "heatmap";
  let fixedScale = false;
  let i = 1;
  while (i < argv.length) {
    const arg = argv[i];
    if (arg === "-o" || arg === "--output") {
      if (i + 1 >= argv.length) {
        throw new UsageError(`${arg} needs a value\n${USAGE}`);
      }
      output = argv[i + 1];
      i += 2;
    } else if (arg === "--style") {
      const v = argv[i + 1];
      if (v !== "heatmap" && v !== "surface") {
        throw new UsageError(`--style must be heatmap or surface, got ${JSON.stringify(v ?? "")}\n${USAGE}`);
      }
      style = v;
      i += 2;
    } else if (arg === "--fixed-scale") {
      fixedScale = true;
      i += 1;
    } else if (arg.startsWith("-")) {
      throw new UsageError(`unknown flag ${JSON.stringify(arg)}\n${USAGE}`);
    } else if (input === undefined) {
      input = arg;
      i += 1;
    } else {
      throw new UsageError(`unexpected argument ${JSON.stringify(arg)}\n${USAGE}`);
    }
  }
  if (input === undefined) {
    throw new UsageError(`missing input CSV path\n${USAGE}`);
  }
  if (output === undefined) {
    throw new UsageError(`missing -o <out.png>\n${USAGE}`);
  }
  return { input, output, style, fixedScale };
}

/** Run the CLI; returns the process exit code. */
export function main(argv: string[]): number {
  let args: ParsedArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }
  try {
    renderFile(args.input, args.output, { style: args.style, fixedScale: args.fixedScale });
  } catch (err) {
    if (err instanceof CsvError) {
      console.error(`error: ${args.input}: ${err.message}`);
    } else {
      console.error(`error: ${(err as Error).message}`);
    }
    return 1;
  }
  return 0;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
