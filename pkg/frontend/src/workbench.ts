/** Headless controller: applies session actions and keeps the diff panel
 * reconciled with the compute service after every action.
 *
 * Visibility is never computed client-side; the panel is exactly the last
 * /api/extract + /api/verify responses.  At most one refresh is in flight:
 * stale responses are discarded (latest wins).  When the service is
 * unreachable, editing continues and the panel is marked stale.
 */

import { ApiError, BudgetSpec, Client } from "./api.js";
import { GraphDoc, LayoutDoc, Verdict, VerifyReport } from "./documents.js";
import { SessionState, initialState, loadLayout, saveLayout } from "./session.js";

export type DiffStatus =
  | "empty" // no target loaded: realized edges only
  | "match" // verify ok
  | "mismatch" // verify reports missing/extra edges
  | "violation" // disjoint-mode overlap; pair flagged, panel stale
  | "invalid" // semantic error (e.g. size mismatch); panel stale
  | "offline"; // service unreachable; panel stale

export interface DiffPanel {
  status: DiffStatus;
  stale: boolean;
  realized: GraphDoc | null;
  report: VerifyReport | null;
  violation: [string, string] | null;
  detail: string | null;
}

const EMPTY_PANEL: DiffPanel = {
  status: "empty",
  stale: false,
  realized: null,
  report: null,
  violation: null,
  detail: null,
};

function violationPair(detail: string): [string, string] | null {
  const match = /'([^']*)' and '([^']*)'/.exec(detail);
  return match ? [match[1] as string, match[2] as string] : null;
}

export class Workbench {
  state: SessionState = initialState();
  diff: DiffPanel = EMPTY_PANEL;
  deciding = false;
  onChange: (() => void) | null = null;

  private seq = 0;

  constructor(public readonly client: Client) {}

  /** Apply a pure session action, then reconcile the diff panel. */
  async apply(action: (state: SessionState) => SessionState): Promise<DiffPanel> {
    this.state = action(this.state);
    return this.refresh();
  }

  async refresh(): Promise<DiffPanel> {
    const ticket = ++this.seq;
    const { layout, target, mapping } = this.state;
    try {
      const realized = await this.client.extract(layout);
      const report = target === null ? null : await this.client.verify(layout, target, mapping);
      if (ticket !== this.seq) return this.diff;
      this.diff = {
        status: report === null ? "empty" : report.ok ? "match" : "mismatch",
        stale: false,
        realized,
        report,
        violation: null,
        detail: null,
      };
    } catch (exc) {
      if (ticket !== this.seq) return this.diff;
      if (exc instanceof ApiError) {
        this.diff = {
          ...this.diff,
          status: exc.kind === "overlap_violation" ? "violation" : "invalid",
          stale: true,
          violation: exc.kind === "overlap_violation" ? violationPair(exc.detail) : null,
          detail: exc.detail,
        };
      } else {
        this.diff = { ...this.diff, status: "offline", stale: true };
      }
    }
    this.onChange?.();
    return this.diff;
  }

  saveLayout(): string {
    return saveLayout(this.state);
  }

  /** Run the representability search on the current target. */
  async decide(mode: "trvg" | "itrvg", budget?: BudgetSpec, screens = false): Promise<Verdict> {
    const target = this.state.target;
    if (target === null) throw new Error("no target graph loaded");
    this.deciding = true;
    this.onChange?.();
    try {
      return await this.client.decide(target, mode, budget, screens);
    } finally {
      this.deciding = false;
      this.onChange?.();
    }
  }

  /** Put a Yes verdict's certificate on the canvas. */
  async importCertificate(verdict: Verdict): Promise<DiffPanel> {
    if (verdict.certificate === undefined) throw new Error("verdict carries no certificate");
    const certificate: LayoutDoc = verdict.certificate;
    return this.apply((state) => loadLayout(state, certificate));
  }

  /** Server-rendered SVG of the working layout (also the export format). */
  async exportSvg(options?: {
    edges?: boolean;
    strips?: string[];
    bbox?: boolean;
    scale?: number;
  }): Promise<string> {
    return this.client.render(this.state.layout, options);
  }
}
