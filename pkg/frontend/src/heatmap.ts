/**
 * Heatmap rendering: phi across, cycle count up, color = irreality in nats.
 */

import { normalize, Rgb, viridis } from "./colormap";
import { SweepTable } from "./csv";
import { drawText, drawTextVertical, GLYPH_HEIGHT, measureText } from "./font";
import { Raster } from "./raster";

const INK: Rgb = [30, 30, 30];

export interface ValueScale {
  lo: number;
  hi: number;
}

export interface HeatmapLayout {
  width: number;
  height: number;
  originX: number;
  originY: number;
  cellW: number;
  cellH: number;
  plotW: number;
  plotH: number;
}

function clamp(x: number, lo: number, hi: number): number {
  return Math.max(lo, Math.min(hi, x));
}

export function computeHeatmapLayout(table: SweepTable): HeatmapLayout {
  const phiCount = table.phiValues.length;
  const nCount = table.nValues.length;
  const cellW = clamp(Math.floor(512 / phiCount), 6, 120);
  const cellH = clamp(Math.floor(320 / nCount), 6, 48);
  const plotW = cellW * phiCount;
  const plotH = cellH * nCount;
  const originX = 64;
  const originY = 16;
  return {
    width: originX + plotW + 96,
    height: originY + plotH + 44,
    originX,
    originY,
    cellW,
    cellH,
    plotW,
    plotH,
  };
}

/** Pixel center of a grid cell; j indexes nValues, increasing upward. */
export function cellCenter(layout: HeatmapLayout, i: number, j: number, nCount: number): [number, number] {
  const x = layout.originX + i * layout.cellW + Math.floor(layout.cellW / 2);
  const y = layout.originY + (nCount - 1 - j) * layout.cellH + Math.floor(layout.cellH / 2);
  return [x, y];
}

export function formatTick(v: number): string {
  return v.toFixed(3);
}

function tickIndices(count: number, want: number): number[] {
  if (count <= want) {
    return Array.from({ length: count }, (_, i) => i);
  }
  const picks = new Set<number>();
  for (let k = 0; k < want; k++) {
    picks.add(Math.round((k * (count - 1)) / (want - 1)));
  }
  return [...picks].sort((a, b) => a - b);
}

/** Vertical colorbar with numeric end labels and a unit caption. */
export function drawColorbar(
  img: Raster,
  x: number,
  y: number,
  height: number,
  scale: ValueScale,
): void {
  const barW = 14;
  for (let k = 0; k < height; k++) {
    const t = 1 - k / Math.max(1, height - 1);
    const c = viridis(t);
    img.hLine(x, y + k, barW, c);
  }
  img.hLine(x, y, barW, INK);
  img.hLine(x, y + height - 1, barW, INK);
  img.vLine(x, y, height, INK);
  img.vLine(x + barW - 1, y, height, INK);
  drawText(img, x + barW + 3, y - 3, formatTick(scale.hi), INK);
  drawText(img, x + barW + 3, y + height - GLYPH_HEIGHT + 3, formatTick(scale.lo), INK);
  drawTextVertical(img, x + barW + 3, y + Math.floor(height / 2) - 45, "irreality (nats)", INK);
}

/** Render the grid as a heatmap; returns the image. */
export function renderHeatmap(table: SweepTable, scale: ValueScale): Raster {
  const layout = computeHeatmapLayout(table);
  const img = new Raster(layout.width, layout.height);
  const phiCount = table.phiValues.length;
  const nCount = table.nValues.length;

  for (let i = 0; i < phiCount; i++) {
    for (let j = 0; j < nCount; j++) {
      const t = normalize(table.values[i][j], scale.lo, scale.hi);
      img.fillRect(
        layout.originX + i * layout.cellW,
        layout.originY + (nCount - 1 - j) * layout.cellH,
        layout.cellW,
        layout.cellH,
        viridis(t),
      );
    }
  }

  // frame
  img.hLine(layout.originX, layout.originY - 1, layout.plotW, INK);
  img.hLine(layout.originX, layout.originY + layout.plotH, layout.plotW, INK);
  img.vLine(layout.originX - 1, layout.originY - 1, layout.plotH + 2, INK);
  img.vLine(layout.originX + layout.plotW, layout.originY - 1, layout.plotH + 2, INK);

  // x ticks: phi in radians
  const bottom = layout.originY + layout.plotH;
  for (const i of tickIndices(phiCount, 6)) {
    const cx = layout.originX + i * layout.cellW + Math.floor(layout.cellW / 2);
    img.vLine(cx, bottom + 1, 3, INK);
    const label = formatTick(table.phiValues[i]);
    drawText(img, cx - Math.floor(measureText(label) / 2), bottom + 6, label, INK);
  }
  const xTitle = "phi (rad)";
  drawText(
    img,
    layout.originX + Math.floor((layout.plotW - measureText(xTitle)) / 2),
    bottom + 20,
    xTitle,
    INK,
  );

  // y ticks: integer cycle counts, increasing upward
  for (const j of tickIndices(nCount, 10)) {
    const cy = layout.originY + (nCount - 1 - j) * layout.cellH + Math.floor(layout.cellH / 2);
    img.hLine(layout.originX - 4, cy, 3, INK);
    const label = String(table.nValues[j]);
    drawText(img, layout.originX - 8 - measureText(label), cy - 3, label, INK);
  }
  drawTextVertical(
    img,
    6,
    layout.originY + Math.floor(layout.plotH / 2) - Math.floor(measureText("n (cycles)") / 2),
    "n (cycles)",
    INK,
  );

  drawColorbar(
    img,
    layout.originX + layout.plotW + 14,
    layout.originY + 6,
    Math.max(40, layout.plotH - 12),
    scale,
  );
  return img;
}
