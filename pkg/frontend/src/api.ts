/** Typed client for the compute service; the only channel to the backend. */

import {
  ClassifyResult,
  GraphDoc,
  LayoutDoc,
  Verdict,
  VerifyReport,
} from "./documents.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly kind: string,
    public readonly detail: string,
  ) {
    super(`${kind}: ${detail}`);
    this.name = "ApiError";
  }
}

export interface BudgetSpec {
  max_nodes?: number;
  max_seconds?: number;
}

export type MappingSpec = "identity" | "search" | Record<string, number>;

export interface ClassifyQuery {
  bipartite?: string;
  multipartite?: string;
  dn2?: string;
}

async function errorFrom(res: Response): Promise<ApiError> {
  let kind = "http_error";
  let detail = `status ${res.status}`;
  try {
    const body = (await res.json()) as { error?: string; detail?: string };
    if (typeof body.error === "string") kind = body.error;
    if (typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body; keep the status fallback
  }
  return new ApiError(res.status, kind, detail);
}

export class Client {
  constructor(public readonly baseUrl: string) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const res = await fetch(this.baseUrl + path, init);
    if (!res.ok) throw await errorFrom(res);
    return res;
  }

  private async postJson(path: string, body: unknown): Promise<Response> {
    return this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  async extract(layout: LayoutDoc): Promise<GraphDoc> {
    const res = await this.postJson("/api/extract", layout);
    return (await res.json()) as GraphDoc;
  }

  async verify(
    layout: LayoutDoc,
    graph: GraphDoc,
    mapping: MappingSpec = "identity",
  ): Promise<VerifyReport> {
    const res = await this.postJson("/api/verify", { layout, graph, mapping });
    return (await res.json()) as VerifyReport;
  }

  async decide(
    graph: GraphDoc,
    mode: "trvg" | "itrvg" = "trvg",
    budget?: BudgetSpec,
    screens = false,
  ): Promise<Verdict> {
    const body: Record<string, unknown> = { graph, mode };
    if (budget !== undefined) body["budget"] = budget;
    if (screens) body["screens"] = true;
    const res = await this.postJson("/api/decide", body);
    return (await res.json()) as Verdict;
  }

  async fixture(name: string): Promise<unknown> {
    const res = await this.request(`/api/fixture/${encodeURIComponent(name)}`);
    return res.json();
  }

  async render(
    layout: LayoutDoc,
    options?: { edges?: boolean; strips?: string[]; bbox?: boolean; scale?: number },
  ): Promise<string> {
    const body: Record<string, unknown> = { layout };
    if (options !== undefined) body["options"] = options;
    const res = await this.postJson("/api/render", body);
    return res.text();
  }

  async classify(query: ClassifyQuery): Promise<ClassifyResult> {
    const params = new URLSearchParams(query as Record<string, string>);
    const res = await this.request(`/api/classify?${params}`);
    return (await res.json()) as ClassifyResult;
  }
}
