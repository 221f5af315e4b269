/**
 * Perceptually uniform color mapping.
 *
 * Anchor colors follow the widely published viridis table; intermediate
 * values interpolate linearly in RGB, which is visually indistinguishable
 * at this anchor density and keeps the output deterministic.
 */

export type Rgb = [number, number, number];

const ANCHORS: Rgb[] = [
  [68, 1, 84],
  [71, 19, 101],
  [72, 36, 117],
  [70, 52, 128],
  [65, 68, 135],
  [59, 82, 139],
  [53, 95, 141],
  [47, 108, 142],
  [42, 120, 142],
  [37, 132, 142],
  [33, 145, 140],
  [30, 156, 137],
  [34, 168, 132],
  [47, 180, 124],
  [68, 191, 112],
  [94, 201, 98],
  [122, 209, 81],
  [155, 217, 60],
  [189, 223, 38],
  [223, 227, 24],
  [253, 231, 37],
];

/** Map t in [0, 1] (clamped) to an RGB triple. */
export function viridis(t: number): Rgb {
  const x = Math.max(0, Math.min(1, t)) * (ANCHORS.length - 1);
  const i = Math.min(Math.floor(x), ANCHORS.length - 2);
  const f = x - i;
  const lo = ANCHORS[i];
  const hi = ANCHORS[i + 1];
  return [
    Math.round(lo[0] + f * (hi[0] - lo[0])),
    Math.round(lo[1] + f * (hi[1] - lo[1])),
    Math.round(lo[2] + f * (hi[2] - lo[2])),
  ];
}

/** Normalize a value into [0, 1] over [lo, hi]; constant ranges map to 0. */
export function normalize(value: number, lo: number, hi: number): number {
  if (hi <= lo) {
    return 0;
  }
  return Math.max(0, Math.min(1, (value - lo) / (hi - lo)));
}
