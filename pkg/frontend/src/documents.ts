/** Document types shared with the HTTP service, plus client-side validation.
 *
 * Validation mirrors the server's schema rules so file loads fail fast with
 * the same JSON-path errors; visibility semantics stay server-side.
 * Coordinates are exact: JSON integers, decimal strings ("-6.35") or
 * rational strings ("1/3").  Loaded coordinate strings are kept verbatim so
 * save -> load is byte identity.
 */

export type Coord = number | string;
export type ModeName = "trvg" | "itrvg";

export interface RectDoc {
  id: string;
  x: [Coord, Coord];
  y: [Coord, Coord];
}

export interface LayoutDoc {
  mode: ModeName;
  rects: RectDoc[];
}

export interface GraphDoc {
  n: number;
  edges: [number, number][];
  labels?: string[];
  parts?: number[];
}

export interface VerifyReport {
  ok: boolean;
  missing: [number, number][];
  extra: [number, number][];
  bijection?: number[];
}

export interface Verdict {
  outcome: "yes" | "no" | "unknown";
  nodes: number;
  evidence?: { kind: string; [key: string]: unknown };
  certificate?: LayoutDoc;
}

export interface ClassifyResult {
  family: string;
  args: number[];
  status: "TRVG" | "non-TRVG" | "open";
}

export class SchemaError extends Error {
  constructor(public readonly path: string, public readonly detail: string) {
    super(`${path}: ${detail}`);
    this.name = "SchemaError";
  }
}

const DECIMAL_RE = /^-?\d+(\.\d+)?$/;
const RATIONAL_RE = /^-?\d+\/[1-9]\d*$/;

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function checkCoord(value: unknown, path: string): Coord {
  if (typeof value === "number") {
    if (!Number.isInteger(value)) {
      throw new SchemaError(path, "float coordinates are inexact; use a string");
    }
    return value;
  }
  if (typeof value === "string") {
    if (DECIMAL_RE.test(value) || RATIONAL_RE.test(value)) return value;
    throw new SchemaError(path, `not an exact decimal or rational: ${JSON.stringify(value)}`);
  }
  throw new SchemaError(path, "coordinate must be an integer or a string");
}

/** Numeric value of an exact coordinate, for geometry and display only. */
export function coordValue(coord: Coord): number {
  if (typeof coord === "number") return coord;
  const slash = coord.indexOf("/");
  if (slash >= 0) {
    return Number(coord.slice(0, slash)) / Number(coord.slice(slash + 1));
  }
  return Number(coord);
}

/** Exact coordinate for a number produced by editing (integer or short decimal). */
export function coordFromNumber(value: number): Coord {
  if (Number.isInteger(value)) return value;
  const text = value.toFixed(4).replace(/0+$/, "").replace(/\.$/, "");
  return text.includes(".") ? text : Number(text);
}

function checkInterval(value: unknown, path: string): [Coord, Coord] {
  if (!Array.isArray(value) || value.length !== 2) {
    throw new SchemaError(path, "expected [lo, hi]");
  }
  const lo = checkCoord(value[0], `${path}[0]`);
  const hi = checkCoord(value[1], `${path}[1]`);
  if (coordValue(lo) >= coordValue(hi)) {
    throw new SchemaError(path, "lo must be less than hi");
  }
  return [lo, hi];
}

export function validateLayoutDoc(value: unknown, path = "$"): LayoutDoc {
  if (!isRecord(value)) throw new SchemaError(path, "expected an object");
  const mode = value["mode"];
  if (mode !== "trvg" && mode !== "itrvg") {
    throw new SchemaError(`${path}.mode`, `expected 'trvg' or 'itrvg', got ${JSON.stringify(mode)}`);
  }
  const rectsRaw = value["rects"];
  if (!Array.isArray(rectsRaw)) throw new SchemaError(`${path}.rects`, "expected a list");
  const rects: RectDoc[] = [];
  const seen = new Set<string>();
  rectsRaw.forEach((item, idx) => {
    const rpath = `${path}.rects[${idx}]`;
    if (!isRecord(item)) throw new SchemaError(rpath, "expected an object");
    const id = item["id"];
    if (typeof id !== "string" || id === "") {
      throw new SchemaError(`${rpath}.id`, "expected a nonempty string");
    }
    if (seen.has(id)) throw new SchemaError(`${path}.rects`, `duplicate id ${JSON.stringify(id)}`);
    seen.add(id);
    rects.push({
      id,
      x: checkInterval(item["x"], `${rpath}.x`),
      y: checkInterval(item["y"], `${rpath}.y`),
    });
  });
  return { mode, rects };
}

export function validateGraphDoc(value: unknown, path = "$"): GraphDoc {
  if (!isRecord(value)) throw new SchemaError(path, "expected an object");
  const n = value["n"];
  if (typeof n !== "number" || !Number.isInteger(n) || n < 0) {
    throw new SchemaError(`${path}.n`, "expected a nonnegative integer");
  }
  const edgesRaw = value["edges"];
  if (!Array.isArray(edgesRaw)) throw new SchemaError(`${path}.edges`, "expected a list");
  const seen = new Set<string>();
  const edges: [number, number][] = [];
  edgesRaw.forEach((item, idx) => {
    const epath = `${path}.edges[${idx}]`;
    if (
      !Array.isArray(item) ||
      item.length !== 2 ||
      !item.every((e) => typeof e === "number" && Number.isInteger(e))
    ) {
      throw new SchemaError(epath, "expected [u, v] with integer endpoints");
    }
    const [u, v] = item as [number, number];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw new SchemaError(epath, `endpoint out of range 0..${n - 1}`);
    }
    if (u === v) throw new SchemaError(epath, "self loops are not allowed");
    const key = `${Math.min(u, v)},${Math.max(u, v)}`;
    if (seen.has(key)) throw new SchemaError(epath, `duplicate edge [${key}]`);
    seen.add(key);
    edges.push([u, v]);
  });
  const doc: GraphDoc = { n, edges };
  const labelsRaw = value["labels"];
  if (labelsRaw !== undefined && labelsRaw !== null) {
    if (!Array.isArray(labelsRaw) || labelsRaw.length !== n) {
      throw new SchemaError(`${path}.labels`, `expected ${n} strings`);
    }
    labelsRaw.forEach((text, idx) => {
      if (typeof text !== "string" || text === "") {
        throw new SchemaError(`${path}.labels[${idx}]`, "expected a nonempty string");
      }
    });
    doc.labels = labelsRaw as string[];
  }
  const partsRaw = value["parts"];
  if (partsRaw !== undefined && partsRaw !== null) {
    if (!Array.isArray(partsRaw) || partsRaw.length !== n) {
      throw new SchemaError(`${path}.parts`, "expected one part index per vertex");
    }
    partsRaw.forEach((p, idx) => {
      if (typeof p !== "number" || !Number.isInteger(p) || p < 0) {
        throw new SchemaError(`${path}.parts[${idx}]`, "expected a nonnegative integer");
      }
    });
    doc.parts = partsRaw as number[];
  }
  return doc;
}

/** Canonical client-side text form: fixed key order, two-space indent. */
export function serializeLayout(doc: LayoutDoc): string {
  const ordered = {
    mode: doc.mode,
    rects: doc.rects.map((r) => ({ id: r.id, x: r.x, y: r.y })),
  };
  return JSON.stringify(ordered, null, 2) + "\n";
}

export function parseLayout(text: string): LayoutDoc {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (exc) {
    throw new SchemaError("$", `not valid JSON: ${(exc as Error).message}`);
  }
  return validateLayoutDoc(raw);
}

export function serializeGraph(doc: GraphDoc): string {
  const ordered: Record<string, unknown> = { n: doc.n, edges: doc.edges };
  if (doc.labels !== undefined) ordered["labels"] = doc.labels;
  if (doc.parts !== undefined) ordered["parts"] = doc.parts;
  return JSON.stringify(ordered, null, 2) + "\n";
}

export function parseGraph(text: string): GraphDoc {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (exc) {
    throw new SchemaError("$", `not valid JSON: ${(exc as Error).message}`);
  }
  return validateGraphDoc(raw);
}

/** Display id for a target vertex: its label, else the rect at that index. */
export function vertexRectId(vertex: number, target: GraphDoc, layout: LayoutDoc): string | null {
  if (target.labels !== undefined) return target.labels[vertex] ?? null;
  return layout.rects[vertex]?.id ?? null;
}
