/**
 * Interactive revise-and-resolve UI.
 *
 * An editable upper-triangular judgment grid (lower triangle mirrors the
 * reciprocals read-only), per-concept known-value toggles, a live
 * inconsistency/solvability badge fed by debounced /api/check calls, a
 * ranking panel (/api/rank) and a method-comparison panel (/api/compare).
 * Engine failures arrive as banners and leave the grid editable.
 */

import { ApiClient } from "./api.js";
import type { CheckReport, CompareReport, RankReport } from "./api.js";
import { GridModel, fmt } from "./grid.js";

export interface AppOptions {
  baseUrl?: string;
  /** Quiet period after an edit before /api/check fires. */
  debounceMs?: number;
  size?: number;
}

export class App {
  readonly model: GridModel;
  readonly api: ApiClient;
  private readonly root: HTMLElement;
  private readonly debounceMs: number;
  private debounceTimer: ReturnType<typeof setTimeout> | undefined;
  private readonly pending = new Set<Promise<void>>();
  /** Inputs currently holding a rejected (non-positive / empty) value. */
  private readonly invalid = new Set<HTMLInputElement>();

  constructor(root: HTMLElement, options: AppOptions = {}) {
    this.root = root;
    this.api = new ApiClient(options.baseUrl ?? "");
    this.debounceMs = options.debounceMs ?? 300;
    this.model = new GridModel(
      Array.from({ length: options.size ?? 3 }, (_, i) => `c${i + 1}`),
    );
    this.buildShell();
    this.rebuildGrid();
  }

  // ------------------------------------------------------------------ DOM

  private buildShell(): void {
    this.root.innerHTML = `
      <div class="hre-app">
        <section class="grid-panel">
          <label class="size-control">concepts
            <input id="size" type="number" min="2" max="9" value="${this.model.size}">
          </label>
          <table id="grid"></table>
          <p class="hint">Judgments are positive ratios (how many times the row
          concept outranks the column concept); the 1–9 scale is a convention,
          not a limit. Mark reference concepts as known and give their values.</p>
          <div id="badge" class="badge badge-neutral"></div>
        </section>
        <section class="actions">
          <button id="solve" disabled>Solve ranking</button>
          <button id="compare-btn" disabled>Compare methods</button>
        </section>
        <div id="banner" class="banner" hidden></div>
        <section id="ranking" class="panel" hidden></section>
        <section id="comparison" class="panel" hidden></section>
      </div>`;
    this.el<HTMLInputElement>("#size").addEventListener("change", (ev) => {
      const n = Number((ev.target as HTMLInputElement).value);
      if (Number.isInteger(n) && n >= 2 && n <= 9) {
        this.model.resize(n);
        this.rebuildGrid();
      }
    });
    this.el<HTMLButtonElement>("#solve").addEventListener("click", () => {
      this.track(this.solve());
    });
    this.el<HTMLButtonElement>("#compare-btn").addEventListener("click", () => {
      this.track(this.compareMethods());
    });
  }

  private el<T extends Element>(selector: string): T {
    const found = this.root.querySelector<T>(selector);
    if (!found) throw new Error(`missing element ${selector}`);
    return found;
  }

  private rebuildGrid(): void {
    const n = this.model.size;
    const table = this.el<HTMLTableElement>("#grid");
    table.innerHTML = "";
    this.invalid.clear();

    const head = table.insertRow();
    head.insertCell();
    for (let j = 0; j < n; j++) {
      const cell = head.insertCell();
      const input = document.createElement("input");
      input.type = "text";
      input.className = "label-input";
      input.id = `label-${j}`;
      input.value = this.model.labels[j];
      input.addEventListener("input", () => this.onLabelEdit(j, input.value));
      cell.appendChild(input);
    }
    head.insertCell().textContent = "known";

    for (let i = 0; i < n; i++) {
      const row = table.insertRow();
      const header = row.insertCell();
      header.id = `row-label-${i}`;
      header.className = "row-label";
      header.textContent = this.model.labels[i];
      for (let j = 0; j < n; j++) {
        const cell = row.insertCell();
        cell.id = `cell-${i}-${j}`;
        if (i === j) {
          cell.className = "diagonal";
          cell.textContent = "1";
        } else if (i < j) {
          const input = document.createElement("input");
          input.type = "text";
          input.className = "judgment";
          input.id = `judgment-${i}-${j}`;
          input.addEventListener("input", () =>
            this.onJudgmentEdit(i, j, input),
          );
          cell.appendChild(input);
        } else {
          cell.className = "mirror";
          cell.textContent = "–";
        }
      }
      const knownCell = row.insertCell();
      knownCell.className = "known-cell";
      const toggle = document.createElement("input");
      toggle.type = "checkbox";
      toggle.id = `known-toggle-${i}`;
      const value = document.createElement("input");
      value.type = "text";
      value.id = `known-value-${i}`;
      value.className = "known-value";
      value.value = "1";
      value.disabled = true;
      const onKnownChange = () => this.onKnownEdit(i, toggle, value);
      toggle.addEventListener("change", onKnownChange);
      value.addEventListener("input", onKnownChange);
      knownCell.append(toggle, value);
    }

    this.refreshControls();
    this.renderBadge(null);
    this.el<HTMLElement>("#ranking").hidden = true;
    this.el<HTMLElement>("#comparison").hidden = true;
    this.hideBanner();
  }

  // --------------------------------------------------------------- editing

  private onLabelEdit(j: number, value: string): void {
    this.model.labels[j] = value;
    this.el<HTMLElement>(`#row-label-${j}`).textContent = value;
  }

  private onJudgmentEdit(i: number, j: number, input: HTMLInputElement): void {
    const raw = input.value.trim();
    const mirror = this.el<HTMLTableCellElement>(`#cell-${j}-${i}`);
    const parsed = raw === "" ? null : Number(raw);
    if (parsed !== null && !(Number.isFinite(parsed) && parsed > 0)) {
      input.classList.add("invalid");
      input.title = "judgments must be strictly positive numbers";
      this.invalid.add(input);
      this.refreshControls();
      return;
    }
    input.classList.remove("invalid");
    input.title = "";
    this.invalid.delete(input);
    this.model.setJudgment(i, j, parsed);
    mirror.textContent = parsed === null ? "–" : fmt(1 / parsed);
    this.refreshControls();
    this.scheduleCheck();
  }

  private onKnownEdit(
    i: number,
    toggle: HTMLInputElement,
    value: HTMLInputElement,
  ): void {
    value.disabled = !toggle.checked;
    if (!toggle.checked) {
      this.model.known[i] = null;
      value.classList.remove("invalid");
      this.invalid.delete(value);
    } else {
      const parsed = Number(value.value.trim());
      if (Number.isFinite(parsed) && parsed > 0) {
        value.classList.remove("invalid");
        this.invalid.delete(value);
        this.model.known[i] = parsed;
      } else {
        value.classList.add("invalid");
        value.title = "known values must be strictly positive numbers";
        this.invalid.add(value);
        this.model.known[i] = null;
      }
    }
    this.refreshControls();
    this.scheduleCheck();
  }

  private ready(): boolean {
    return this.model.canSolve() && this.invalid.size === 0;
  }

  private refreshControls(): void {
    const enabled = this.ready();
    this.el<HTMLButtonElement>("#solve").disabled = !enabled;
    this.el<HTMLButtonElement>("#compare-btn").disabled = !enabled;
  }

  // ---------------------------------------------------------- live check

  private scheduleCheck(): void {
    clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = undefined;
      this.track(this.runCheck());
    }, this.debounceMs);
  }

  private track(work: Promise<void>): void {
    const entry = work.finally(() => this.pending.delete(entry));
    this.pending.add(entry);
  }

  /** Resolves once no debounce is armed and no request is in flight. */
  async settle(): Promise<void> {
    while (this.debounceTimer !== undefined || this.pending.size > 0) {
      if (this.debounceTimer !== undefined) {
        await new Promise((r) => setTimeout(r, this.debounceMs + 5));
      }
      await Promise.allSettled([...this.pending]);
    }
  }

  private async runCheck(): Promise<void> {
    if (!this.ready()) {
      this.renderBadge(null);
      return;
    }
    const result = await this.api.check(this.model.toDocument());
    if (result === null) return; // superseded by a newer edit
    if (!result.ok) {
      this.renderBadgeError(String(result.body.detail ?? "invalid input"));
      return;
    }
    this.renderBadge(result.value);
  }

  private renderBadge(report: CheckReport | null): void {
    const badge = this.el<HTMLElement>("#badge");
    this.highlightTriad(report?.worst_triad ?? null);
    if (report === null) {
      badge.className = "badge badge-neutral";
      badge.textContent = this.ready()
        ? "checking…"
        : "enter every judgment and mark at least one known and one unknown concept";
      return;
    }
    const bound = report.scalar_case
      ? "scalar case (trivially solvable)"
      : `bound ${fmt(report.bound)}`;
    badge.className = `badge ${report.guaranteed ? "badge-ok" : "badge-bad"}`;
    badge.textContent =
      `K(M) = ${fmt(report.kappa)} · K(minor) = ${fmt(report.kappa_minor)} · ` +
      `${bound} · ${report.guaranteed ? "guaranteed" : "not guaranteed"}`;
  }

  private renderBadgeError(detail: string): void {
    const badge = this.el<HTMLElement>("#badge");
    badge.className = "badge badge-bad";
    badge.textContent = `invalid judgments: ${detail}`;
    this.highlightTriad(null);
  }

  private highlightTriad(
    triad: { indices: [number, number, number] } | null,
  ): void {
    for (const cell of this.root.querySelectorAll(".worst-triad")) {
      cell.classList.remove("worst-triad");
    }
    if (!triad) return;
    const [i, j, k] = triad.indices;
    // kappa(i, j, k) compares m_ij with m_ik * m_kj.
    for (const [a, b] of [
      [i, j],
      [i, k],
      [k, j],
    ]) {
      this.root
        .querySelector(`#cell-${a}-${b}`)
        ?.classList.add("worst-triad");
    }
  }

  // ----------------------------------------------------------------- solve

  private async solve(): Promise<void> {
    if (!this.ready()) return;
    this.hideBanner();
    const result = await this.api.rank(this.model.toDocument());
    const panel = this.el<HTMLElement>("#ranking");
    if (!result.ok) {
      panel.hidden = true;
      if (result.status === 409) {
        const report = result.body.report as RankReport | undefined;
        this.showEngineBanner(
          String(result.body.kind),
          String(result.body.detail),
          report,
        );
      } else {
        this.showBanner(String(result.body.detail ?? "request failed"));
      }
      return;
    }
    this.renderRanking(result.value);
  }

  private renderRanking(report: RankReport): void {
    const panel = this.el<HTMLElement>("#ranking");
    panel.hidden = false;
    const ranking = report.ranking ?? {};
    const ordered = [...report.labels].sort(
      (a, b) => (ranking[b] ?? 0) - (ranking[a] ?? 0),
    );
    const maxValue = Math.max(...Object.values(ranking), 0);
    const rows = ordered
      .map((label) => {
        const value = ranking[label];
        const knownMark = label in report.known ? " (known)" : "";
        const width = maxValue > 0 ? (100 * value) / maxValue : 0;
        return `<li class="rank-row${knownMark ? " known" : ""}">
            <span class="rank-label">${escapeHtml(label)}${knownMark}</span>
            <span class="rank-bar" style="width: ${width.toFixed(1)}%"></span>
            <span class="rank-value">${fmt(value, 6)}</span>
          </li>`;
      })
      .join("");
    const note = report.scalar_case
      ? `<p class="note">Single unknown: its value is a plain weighted mean
         of the references (scalar case).</p>`
      : "";
    panel.innerHTML = `<h2>Ranking</h2><ol class="ranking-list">${rows}</ol>${note}`;
  }

  private showEngineBanner(
    kind: string,
    detail: string,
    report: RankReport | undefined,
  ): void {
    let extra = "";
    if (report) {
      const bound = report.bound === null ? "–" : fmt(report.bound);
      const triad = report.worst_triad;
      const triadText = triad
        ? ` Worst triad (${triad.labels.join(", ")}) has deviation ${fmt(triad.kappa)}.`
        : "";
      extra =
        ` K(minor) = ${fmt(report.kappa_minor)} against bound ${bound}.` +
        triadText +
        " Revise the highlighted judgments and try again.";
    }
    this.showBanner(`${kind}: ${detail}.${extra}`);
  }

  private showBanner(text: string): void {
    const banner = this.el<HTMLElement>("#banner");
    banner.hidden = false;
    banner.textContent = text;
  }

  private hideBanner(): void {
    const banner = this.el<HTMLElement>("#banner");
    banner.hidden = true;
    banner.textContent = "";
  }

  // --------------------------------------------------------------- compare

  private async compareMethods(): Promise<void> {
    if (!this.ready()) return;
    const result = await this.api.compare(this.model.toDocument());
    const panel = this.el<HTMLElement>("#comparison");
    if (!result.ok) {
      panel.hidden = true;
      this.showBanner(String(result.body.detail ?? "request failed"));
      return;
    }
    this.renderComparison(result.value);
  }

  private renderComparison(report: CompareReport): void {
    const panel = this.el<HTMLElement>("#comparison");
    panel.hidden = false;
    const rows = report.labels
      .map((label) => {
        const hreCell = report.hre
          ? fmt(report.hre[label], 6)
          : `<span class="method-error">${escapeHtml(report.hre_error?.kind ?? "–")}</span>`;
        return `<tr><td>${escapeHtml(label)}</td><td>${hreCell}</td>
          <td>${fmt(report.eigenvector[label], 6)}</td></tr>`;
      })
      .join("");
    const tau =
      report.comparison === null
        ? report.hre_error
          ? `<p class="method-error">weighted-mean ranking unavailable
             (${escapeHtml(report.hre_error.kind)}: ${escapeHtml(report.hre_error.detail)})</p>`
        : ""
        : `<p>Kendall tau = ${fmt(report.comparison.kendall_tau)}</p>`;
    panel.innerHTML = `<h2>Method comparison</h2>
      <table class="compare-table">
        <tr><th>concept</th><th>weighted-mean</th><th>eigenvector</th></tr>
        ${rows}
      </table>
      ${tau}
      <p>dominant eigenvalue = ${fmt(report.dominant_eigenvalue, 6)}</p>`;
  }
}

function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}
