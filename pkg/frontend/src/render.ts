/**
 * End-to-end rendering: CSV file in, PNG file out.
 *
 * The input file is never modified; the output file is written through a
 * temporary sibling and renamed into place, so a failed render leaves no
 * partial file behind.
 */

import * as fs from "fs";
import * as path from "path";

import { inferDimension, parseSweepCsv, SweepTable } from "./csv";
import { renderHeatmap, ValueScale } from "./heatmap";
import { encodePng } from "./png";
import { Raster } from "./raster";
import { renderSurface } from "./surface";

export type Style = "heatmap" | "surface";

export interface RenderOptions {
  style: Style;
  /** pin the color scale to [0, ln d] instead of the data range */
  fixedScale: boolean;
}

/** Color/height scale for a table under the chosen scaling mode. */
export function valueScale(table: SweepTable, fixedScale: boolean): ValueScale {
  if (fixedScale) {
    return { lo: 0, hi: Math.log(inferDimension(table)) };
  }
  let lo = Infinity;
  let hi = -Infinity;
  for (const row of table.values) {
    for (const v of row) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  return { lo, hi };
}

/** Render parsed data to an image in memory. */
export function renderTable(table: SweepTable, options: RenderOptions): Raster {
  const scale = valueScale(table, options.fixedScale);
  return options.style === "surface"
    ? renderSurface(table, scale)
    : renderHeatmap(table, scale);
}

/** Read, render, and atomically write; throws CsvError or fs errors. */
export function renderFile(csvPath: string, outPath: string, options: RenderOptions): void {
  const text = fs.readFileSync(csvPath, "utf8");
  const table = parseSweepCsv(text);
  const img = renderTable(table, options);
  const png = encodePng(img.width, img.height, img.pixels);
  const dir = path.dirname(outPath);
  const tmp = path.join(dir, `.${path.basename(outPath)}.${process.pid}.tmp`);
  fs.writeFileSync(tmp, png);
  try {
    fs.renameSync(tmp, outPath);
  } catch (err) {
    fs.rmSync(tmp, { force: true });
    throw err;
  }
}
