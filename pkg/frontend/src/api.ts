/**
 * Typed client for the ranking service's JSON API.
 *
 * The UI never computes inconsistency, bounds, or rankings itself; every
 * displayed number comes back through one of these calls.  The live check
 * keeps at most one request in flight: a newer edit aborts the older call
 * (latest wins).
 */

export interface MatrixDocument {
  labels: string[];
  matrix: number[][];
  known: Record<string, number>;
}

export interface WorstTriad {
  indices: [number, number, number];
  labels: [string, string, string];
  kappa: number;
}

export interface MMatrixEvidence {
  is_m_matrix: boolean;
  in_z_class: boolean;
  inverse_nonnegative: boolean;
  min_inverse_entry: number | null;
  s: number;
  spectral_radius: number;
  semipositive_witness: number[] | null;
}

export interface CheckReport {
  n: number;
  r: number;
  k: number;
  kappa: number;
  kappa_minor: number;
  alpha: number;
  bound: number | null;
  guaranteed: boolean;
  scalar_case: boolean;
  m_matrix_evidence: MMatrixEvidence;
  worst_triad: WorstTriad | null;
}

export interface EngineError {
  kind: "singular" | "infeasible";
  detail: string;
}

export interface RankReport {
  n: number;
  k: number;
  r: number;
  labels: string[];
  known: Record<string, number>;
  kappa: number;
  kappa_minor: number;
  bound: number | null;
  guaranteed: boolean;
  scalar_case: boolean;
  worst_triad: WorstTriad | null;
  ranking: Record<string, number> | null;
  diagnostics: { residual: number; condition_estimate: number } | null;
  error: EngineError | null;
}

export interface CompareReport {
  labels: string[];
  hre_error: EngineError | null;
  eigenvector_error: EngineError | null;
  comparison: {
    labels: string[];
    kendall_tau: number;
    [extra: string]: unknown;
  } | null;
  eigenvector: Record<string, number>;
  dominant_eigenvalue: number;
  hre?: Record<string, number>;
}

/** Success or an HTTP error payload (422 validation, 409 engine failure). */
export type ApiResult<T> =
  | { ok: true; value: T }
  | { ok: false; status: number; body: Record<string, unknown> };

export class ApiClient {
  private checkAbort: AbortController | null = null;

  constructor(readonly baseUrl: string = "") {}

  private async post<T>(
    path: string,
    body: unknown,
    signal?: AbortSignal,
  ): Promise<ApiResult<T>> {
    const resp = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    const data = await resp.json();
    return resp.ok
      ? { ok: true, value: data as T }
      : { ok: false, status: resp.status, body: data };
  }

  /**
   * Live solvability check.  Aborts any still-running check first; returns
   * null when this call was itself superseded before completing.
   */
  async check(doc: MatrixDocument): Promise<ApiResult<CheckReport> | null> {
    this.checkAbort?.abort();
    const controller = new AbortController();
    this.checkAbort = controller;
    try {
      return await this.post<CheckReport>("/api/check", doc, controller.signal);
    } catch (err) {
      if (controller.signal.aborted) return null;
      throw err;
    } finally {
      if (this.checkAbort === controller) this.checkAbort = null;
    }
  }

  rank(doc: MatrixDocument): Promise<ApiResult<RankReport>> {
    return this.post<RankReport>("/api/rank", doc);
  }

  compare(doc: MatrixDocument): Promise<ApiResult<CompareReport>> {
    return this.post<CompareReport>("/api/compare", doc);
  }

  async boundTable(nMax: number): Promise<ApiResult<Record<string, Record<string, number>>>> {
    const resp = await fetch(`${this.baseUrl}/api/bound-table?n_max=${nMax}`);
    const data = await resp.json();
    return resp.ok
      ? { ok: true, value: data }
      : { ok: false, status: resp.status, body: data };
  }
}
