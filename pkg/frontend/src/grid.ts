/**
 * Client-side state of the judgment grid.
 *
 * The only derivation the model performs is the reciprocal mirror: the
 * lower triangle is always exactly 1/(upper entry).  Everything else —
 * inconsistency, bounds, rankings — is the server's job.
 */

import type { MatrixDocument } from "./api.js";

export class GridModel {
  labels: string[];
  /** upper[i][j] for i < j; null = not yet entered. */
  private upper: (number | null)[][];
  /** Fixed utility per concept; null = unknown (to be solved for). */
  known: (number | null)[];

  constructor(labels: string[]) {
    if (labels.length < 2) {
      throw new Error("a judgment grid needs at least two concepts");
    }
    this.labels = [...labels];
    this.upper = labels.map(() => labels.map(() => null));
    this.known = labels.map(() => null);
  }

  get size(): number {
    return this.labels.length;
  }

  /** Set the editable upper-triangle judgment m[i][j], i < j, value > 0. */
  setJudgment(i: number, j: number, value: number | null): void {
    if (!(i >= 0 && j > i && j < this.size)) {
      throw new Error(`not an upper-triangle cell: (${i}, ${j})`);
    }
    if (value !== null && !(value > 0)) {
      throw new Error(`judgment must be strictly positive, got ${value}`);
    }
    this.upper[i][j] = value;
  }

  /** Displayed value at any cell: 1 on the diagonal, mirror below it. */
  valueAt(i: number, j: number): number | null {
    if (i === j) return 1;
    if (i < j) return this.upper[i][j];
    const u = this.upper[j][i];
    return u === null ? null : 1 / u;
  }

  isComplete(): boolean {
    for (let i = 0; i < this.size; i++) {
      for (let j = i + 1; j < this.size; j++) {
        if (this.upper[i][j] === null) return false;
      }
    }
    return true;
  }

  knownCount(): number {
    return this.known.filter((v) => v !== null).length;
  }

  unknownCount(): number {
    return this.size - this.knownCount();
  }

  /** Solve needs a full grid plus at least one known and one unknown concept. */
  canSolve(): boolean {
    return this.isComplete() && this.knownCount() >= 1 && this.unknownCount() >= 1;
  }

  toDocument(): MatrixDocument {
    if (!this.isComplete()) {
      throw new Error("grid is incomplete");
    }
    const n = this.size;
    const matrix = Array.from({ length: n }, (_, i) =>
      Array.from({ length: n }, (_, j) => this.valueAt(i, j) as number),
    );
    const known: Record<string, number> = {};
    this.known.forEach((v, i) => {
      if (v !== null) known[this.labels[i]] = v;
    });
    return { labels: [...this.labels], matrix, known };
  }

  /** Change the concept count, discarding all entered state. */
  resize(n: number): void {
    if (n < 2) throw new Error("a judgment grid needs at least two concepts");
    this.labels = Array.from({ length: n }, (_, i) => `c${i + 1}`);
    this.upper = this.labels.map(() => this.labels.map(() => null));
    this.known = this.labels.map(() => null);
  }
}

/** Compact display formatting; the mirror matches 1/x to this precision. */
export function fmt(x: number | null | undefined, digits = 4): string {
  if (x === null || x === undefined) return "–";
  return Number(x.toPrecision(digits)).toString();
}
