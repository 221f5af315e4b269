/**
 * Isometric surface rendering: height and color both encode irreality.
 *
 * Cells are drawn back to front (painter's algorithm over i + j), so near
 * peaks correctly occlude the far side of the surface.
 */

import { normalize, Rgb, viridis } from "./colormap";
import { SweepTable } from "./csv";
import { drawText, measureText } from "./font";
import { drawColorbar, ValueScale } from "./heatmap";
import { Raster } from "./raster";

const INK: Rgb = [30, 30, 30];
const HEIGHT_PX = 140;

function darken(c: Rgb, f: number): Rgb {
  return [Math.round(c[0] * f), Math.round(c[1] * f), Math.round(c[2] * f)];
}

interface Projection {
  width: number;
  height: number;
  project(i: number, j: number, t: number): [number, number];
}

function makeProjection(phiCount: number, nCount: number): Projection {
  const si = 400 / Math.max(1, phiCount - 1);
  const sj = 220 / Math.max(1, nCount - 1);
  const ix = 0.866 * si;
  const iy = 0.5 * si;
  const jx = -0.866 * sj;
  const jy = 0.5 * sj;
  const originX = 24 + 0.866 * sj * (nCount - 1);
  const originY = 28 + HEIGHT_PX;
  const width = Math.ceil(originX + 0.866 * si * (phiCount - 1)) + 120;
  const height = Math.ceil(originY + 0.5 * si * (phiCount - 1) + 0.5 * sj * (nCount - 1)) + 48;
  return {
    width,
    height,
    project(i: number, j: number, t: number): [number, number] {
      return [originX + i * ix + j * jx, originY + i * iy + j * jy - t * HEIGHT_PX];
    },
  };
}

/** Render the grid as an isometric surface; returns the image. */
export function renderSurface(table: SweepTable, scale: ValueScale): Raster {
  const phiCount = table.phiValues.length;
  const nCount = table.nValues.length;
  const proj = makeProjection(phiCount, nCount);
  const img = new Raster(proj.width, proj.height);

  const t = (i: number, j: number) => normalize(table.values[i][j], scale.lo, scale.hi);

  // quads ordered far to near; within a diagonal the order cannot overlap
  const quads: Array<[number, number]> = [];
  for (let i = 0; i < phiCount - 1; i++) {
    for (let j = 0; j < nCount - 1; j++) {
      quads.push([i, j]);
    }
  }
  quads.sort((a, b) => a[0] + a[1] - (b[0] + b[1]) || a[0] - b[0]);

  for (const [i, j] of quads) {
    const corners: Array<[number, number]> = [
      proj.project(i, j, t(i, j)),
      proj.project(i + 1, j, t(i + 1, j)),
      proj.project(i + 1, j + 1, t(i + 1, j + 1)),
      proj.project(i, j + 1, t(i, j + 1)),
    ];
    const mean = (t(i, j) + t(i + 1, j) + t(i + 1, j + 1) + t(i, j + 1)) / 4;
    const fill = viridis(mean);
    img.fillConvexPolygon(corners, fill);
    const edge = darken(fill, 0.55);
    for (let k = 0; k < 4; k++) {
      const [x0, y0] = corners[k];
      const [x1, y1] = corners[(k + 1) % 4];
      img.line(x0, y0, x1, y1, edge);
    }
  }

  // single-row or single-column grids degenerate to a ridge line
  if (phiCount === 1 || nCount === 1) {
    for (let i = 0; i < phiCount; i++) {
      for (let j = 0; j < nCount; j++) {
        const [x, y] = proj.project(i, j, t(i, j));
        img.fillRect(Math.round(x) - 1, Math.round(y) - 1, 3, 3, viridis(t(i, j)));
      }
    }
  }

  // axis direction labels along the two base edges
  const [phiX, phiY] = proj.project(phiCount - 1, 0, 0);
  drawText(img, Math.round(phiX) - measureText("phi (rad)") - 6, Math.round(phiY) + 10, "phi (rad)", INK);
  const [nX, nY] = proj.project(0, nCount - 1, 0);
  drawText(img, Math.round(nX) + 6, Math.round(nY) + 10, "n (cycles)", INK);

  drawColorbar(img, proj.width - 92, 24, Math.max(60, proj.height - 96), scale);
  return img;
}
