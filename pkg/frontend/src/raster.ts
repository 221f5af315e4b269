/** In-memory RGB image with simple drawing primitives. */

import { Rgb } from "./colormap";

export class Raster {
  readonly width: number;
  readonly height: number;
  readonly pixels: Uint8Array;

  constructor(width: number, height: number, background: Rgb = [255, 255, 255]) {
    if (!Number.isInteger(width) || !Number.isInteger(height) || width < 1 || height < 1) {
      throw new Error(`invalid raster size ${width}x${height}`);
    }
    this.width = width;
    this.height = height;
    this.pixels = new Uint8Array(width * height * 3);
    this.fillRect(0, 0, width, height, background);
  }

  set(x: number, y: number, color: Rgb): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) {
      return; // clip silently; callers draw labels near edges
    }
    const k = (y * this.width + x) * 3;
    this.pixels[k] = color[0];
    this.pixels[k + 1] = color[1];
    this.pixels[k + 2] = color[2];
  }

  get(x: number, y: number): Rgb {
    const k = (y * this.width + x) * 3;
    return [this.pixels[k], this.pixels[k + 1], this.pixels[k + 2]];
  }

  fillRect(x: number, y: number, w: number, h: number, color: Rgb): void {
    const x1 = Math.max(0, x);
    const y1 = Math.max(0, y);
    const x2 = Math.min(this.width, x + w);
    const y2 = Math.min(this.height, y + h);
    for (let yy = y1; yy < y2; yy++) {
      for (let xx = x1; xx < x2; xx++) {
        this.set(xx, yy, color);
      }
    }
  }

  hLine(x: number, y: number, w: number, color: Rgb): void {
    this.fillRect(x, y, w, 1, color);
  }

  vLine(x: number, y: number, h: number, color: Rgb): void {
    this.fillRect(x, y, 1, h, color);
  }

  /** Solid line between two points (integer Bresenham). */
  line(x0: number, y0: number, x1: number, y1: number, color: Rgb): void {
    let x = Math.round(x0);
    let y = Math.round(y0);
    const xe = Math.round(x1);
    const ye = Math.round(y1);
    const dx = Math.abs(xe - x);
    const dy = -Math.abs(ye - y);
    const sx = x < xe ? 1 : -1;
    const sy = y < ye ? 1 : -1;
    let err = dx + dy;
    for (;;) {
      this.set(x, y, color);
      if (x === xe && y === ye) break;
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        x += sx;
      }
      if (e2 <= dx) {
        err += dx;
        y += sy;
      }
    }
  }

  /** Fill a convex polygon given as [x, y] pairs (scanline). */
  fillConvexPolygon(points: Array<[number, number]>, color: Rgb): void {
    const ys = points.map((p) => p[1]);
    const yMin = Math.max(0, Math.ceil(Math.min(...ys)));
    const yMax = Math.min(this.height - 1, Math.floor(Math.max(...ys)));
    for (let y = yMin; y <= yMax; y++) {
      let xLeft = Infinity;
      let xRight = -Infinity;
      for (let i = 0; i < points.length; i++) {
        const [ax, ay] = points[i];
        const [bx, by] = points[(i + 1) % points.length];
        if ((ay <= y && by >= y) || (by <= y && ay >= y)) {
          if (ay === by) {
            xLeft = Math.min(xLeft, ax, bx);
            xRight = Math.max(xRight, ax, bx);
          } else {
            const x = ax + ((y - ay) * (bx - ax)) / (by - ay);
            xLeft = Math.min(xLeft, x);
            xRight = Math.max(xRight, x);
          }
        }
      }
      if (xLeft <= xRight) {
        this.fillRect(Math.ceil(xLeft), y, Math.floor(xRight) - Math.ceil(xLeft) + 1, 1, color);
      }
    }
  }
}
