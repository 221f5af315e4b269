/**
 * Sweep CSV parsing and validation.
 *
 * The producer emits one row per (phi, n) cell with the exact header below,
 * LF line endings, and a complete rectangular grid.  Every deviation is
 * reported with the 1-based line number where it was detected.
 */

export const EXPECTED_HEADER = "phi_rad,n,max_irreality_nats,bloch_norm";

/** Rectangular sweep grid, phi-major: values[i][j] belongs to (phi[i], n[j]). */
export interface SweepTable {
  phiValues: number[];
  nValues: number[];
  /** max irreality in nats per cell */
  values: number[][];
  /** Bloch norm per cell */
  norms: number[][];
}

/** Schema or grid violation, carrying the offending 1-based line number. */
export class CsvError extends Error {
  readonly line: number;

  constructor(line: number, message: string) {
    super(`line ${line}: ${message}`);
    this.name = "CsvError";
    this.line = line;
  }
}

interface Row {
  phi: number;
  n: number;
  value: number;
  norm: number;
  line: number;
}

function parseFinite(raw: string, field: string, line: number): number {
  if (raw === "" || !/^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$/.test(raw)) {
    throw new CsvError(line, `field ${field}: ${JSON.stringify(raw)} is not a number`);
  }
  const x = Number(raw);
  if (!Number.isFinite(x)) {
    throw new CsvError(line, `field ${field}: ${JSON.stringify(raw)} is not finite`);
  }
  return x;
}

function parseRow(text: string, line: number): Row {
  if (text.includes("\r")) {
    throw new CsvError(line, "carriage return found; the schema requires LF line endings");
  }
  const parts = text.split(",");
  if (parts.length !== 4) {
    throw new CsvError(line, `expected 4 comma-separated fields, got ${parts.length}`);
  }
  const phi = parseFinite(parts[0], "phi_rad", line);
  if (phi < 0) {
    throw new CsvError(line, `field phi_rad: ${parts[0]} is negative`);
  }
  const n = parseFinite(parts[1], "n", line);
  if (!Number.isInteger(n) || n < 1) {
    throw new CsvError(line, `field n: ${JSON.stringify(parts[1])} is not a positive integer`);
  }
  const value = parseFinite(parts[2], "max_irreality_nats", line);
  if (value < 0) {
    throw new CsvError(line, `field max_irreality_nats: ${parts[2]} is negative`);
  }
  const norm = parseFinite(parts[3], "bloch_norm", line);
  if (norm < 0 || norm > 1 + 1e-9) {
    throw new CsvError(line, `field bloch_norm: ${parts[3]} is outside [0, 1]`);
  }
  return { phi, n, value, norm, line };
}

/**
 * Parse CSV text into a validated SweepTable.
 *
 * Throws CsvError on a malformed header, a malformed row, a duplicate
 * (phi, n) cell, or an incomplete grid (the message lists the missing
 * cells).
 */
export function parseSweepCsv(text: string): SweepTable {
  const lines = text.split("\n");
  if (lines.length > 0 && lines[lines.length - 1] === "") {
    lines.pop(); // trailing newline
  }
  if (lines.length === 0 || lines[0] === "") {
    throw new CsvError(1, "empty input");
  }
  if (lines[0] !== EXPECTED_HEADER) {
    if (lines[0].includes("\r")) {
      throw new CsvError(1, "carriage return found; the schema requires LF line endings");
    }
    throw new CsvError(
      1,
      `expected header ${JSON.stringify(EXPECTED_HEADER)}, got ${JSON.stringify(lines[0])}`,
    );
  }
  if (lines.length === 1) {
    throw new CsvError(1, "no data rows after the header");
  }

  const rows: Row[] = [];
  for (let i = 1; i < lines.length; i++) {
    rows.push(parseRow(lines[i], i + 1));
  }

  // distinct axis values in first-seen order, then sorted ascending
  const phiValues = [...new Set(rows.map((r) => r.phi))].sort((a, b) => a - b);
  const nValues = [...new Set(rows.map((r) => r.n))].sort((a, b) => a - b);

  const phiIndex = new Map(phiValues.map((v, i) => [v, i]));
  const nIndex = new Map(nValues.map((v, i) => [v, i]));
  const values = phiValues.map(() => new Array<number>(nValues.length).fill(NaN));
  const norms = phiValues.map(() => new Array<number>(nValues.length).fill(NaN));
  const seen = phiValues.map(() => new Array<number>(nValues.length).fill(0));

  for (const row of rows) {
    const i = phiIndex.get(row.phi)!;
    const j = nIndex.get(row.n)!;
    if (seen[i][j] !== 0) {
      throw new CsvError(
        row.line,
        `duplicate cell (phi=${row.phi}, n=${row.n}); first seen at line ${seen[i][j]}`,
      );
    }
    seen[i][j] = row.line;
    values[i][j] = row.value;
    norms[i][j] = row.norm;
  }

  const missing: string[] = [];
  for (let i = 0; i < phiValues.length; i++) {
    for (let j = 0; j < nValues.length; j++) {
      if (seen[i][j] === 0) {
        missing.push(`(phi=${phiValues[i]}, n=${nValues[j]})`);
      }
    }
  }
  if (missing.length > 0) {
    const shown = missing.slice(0, 20).join(", ");
    const more = missing.length > 20 ? ` and ${missing.length - 20} more` : "";
    throw new CsvError(
      lines.length,
      `incomplete grid: missing ${missing.length} cell(s): ${shown}${more}`,
    );
  }

  return { phiValues, nValues, values, norms };
}

/**
 * Infer the Hilbert-space dimension behind a sweep grid.
 *
 * The commuting column of a sweep attains ln d exactly, so when
 * exp(max value) sits within 1e-6 of an integer >= 2 that integer is d;
 * otherwise round up, which can only widen a fixed color scale.
 */
export function inferDimension(table: SweepTable): number {
  let top = 0;
  for (const row of table.values) {
    for (const v of row) {
      if (v > top) top = v;
    }
  }
  const x = Math.exp(top);
  const nearest = Math.round(x);
  if (nearest >= 2 && Math.abs(x - nearest) <= 1e-6) {
    return nearest;
  }
  return Math.max(2, Math.ceil(x));
}
