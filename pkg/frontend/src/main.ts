/** Browser entry point: canvas editing, toolbar and the live diff panel. */

import { ApiError, Client } from "./api.js";
import {
  GraphDoc,
  LayoutDoc,
  SchemaError,
  Verdict,
  coordValue,
  serializeGraph,
  vertexRectId,
} from "./documents.js";
import * as session from "./session.js";
import { Workbench } from "./workbench.js";

const PIXELS_PER_UNIT = 24;
const PADDING = 2;
const FIXTURES = ["fig1_k5", "fig6a_G", "fig6b_itrvg", "fig7a_Gprime", "graph_Gprime"];

const apiBase =
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8000";
const workbench = new Workbench(new Client(apiBase));

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS("http://www.w3.org/2000/svg", tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

function download(name: string, text: string, type: string): void {
  const url = URL.createObjectURL(new Blob([text], { type }));
  const link = el("a", { href: url, download: name });
  link.click();
  URL.revokeObjectURL(url);
}

function describeError(exc: unknown): string {
  if (exc instanceof ApiError) return `${exc.kind}: ${exc.detail}`;
  if (exc instanceof SchemaError) return exc.message;
  return String(exc);
}

// --- static page structure -------------------------------------------------

const banner = el("div", { id: "banner" });
const toolbar = el("div", { id: "toolbar" });
const canvasHolder = el("div", { id: "canvas" });
const panel = el("div", { id: "panel" });
document.body.append(banner, toolbar, el("div", { id: "split" }), panel);
document.getElementById("split")!.append(canvasHolder);

const fixtureSelect = el("select");
for (const name of FIXTURES) fixtureSelect.append(el("option", { value: name }, name));
const loadFixtureBtn = el("button", {}, "load fixture");

const modeSelect = el("select");
modeSelect.append(el("option", { value: "trvg" }, "trvg"), el("option", { value: "itrvg" }, "itrvg"));

const mappingSelect = el("select");
mappingSelect.append(
  el("option", { value: "identity" }, "identity"),
  el("option", { value: "search" }, "search"),
);

const snapBox = el("input", { type: "checkbox", checked: "" }) as HTMLInputElement;
const addBtn = el("button", {}, "add rect");
const deleteBtn = el("button", {}, "delete");
const undoBtn = el("button", {}, "undo");
const redoBtn = el("button", {}, "redo");
const saveBtn = el("button", {}, "save layout");
const exportBtn = el("button", {}, "export SVG");
const clearTargetBtn = el("button", {}, "clear target");
const fileInput = el("input", { type: "file", accept: ".json" }) as HTMLInputElement;
const budgetInput = el("input", { type: "number", value: "100000000", size: "12" }) as HTMLInputElement;
const decideBtn = el("button", {}, "decide target");
const importBtn = el("button", { disabled: "" }, "import certificate");

toolbar.append(
  fixtureSelect, loadFixtureBtn,
  el("span", { class: "sep" }, "mode"), modeSelect,
  el("span", { class: "sep" }, "mapping"), mappingSelect,
  el("label", {}, "snap"), snapBox,
  addBtn, deleteBtn, undoBtn, redoBtn,
  el("span", { class: "sep" }, "file"), fileInput, saveBtn, exportBtn, clearTargetBtn,
  el("span", { class: "sep" }, "budget nodes"), budgetInput, decideBtn, importBtn,
);

let lastVerdict: Verdict | null = null;

// --- canvas rendering ------------------------------------------------------

interface DragState {
  id: string;
  kind: "move" | "resize";
  startX: number;
  startY: number;
  node: SVGElement;
}
let drag: DragState | null = null;

function worldBounds(layout: LayoutDoc): { x0: number; y0: number; x1: number; y1: number } {
  if (layout.rects.length === 0) return { x0: 0, y0: 0, x1: 10, y1: 6 };
  const xs = layout.rects.flatMap((r) => [coordValue(r.x[0]), coordValue(r.x[1])]);
  const ys = layout.rects.flatMap((r) => [coordValue(r.y[0]), coordValue(r.y[1])]);
  return {
    x0: Math.min(...xs) - PADDING,
    y0: Math.min(...ys) - PADDING,
    x1: Math.max(...xs) + PADDING,
    y1: Math.max(...ys) + PADDING,
  };
}

function center(layout: LayoutDoc, id: string): [number, number] | null {
  const rect = layout.rects.find((r) => r.id === id);
  if (rect === undefined) return null;
  return [
    (coordValue(rect.x[0]) + coordValue(rect.x[1])) / 2,
    (coordValue(rect.y[0]) + coordValue(rect.y[1])) / 2,
  ];
}

function edgeLine(
  layout: LayoutDoc,
  aId: string,
  bId: string,
  cls: string,
  toSvgY: (y: number) => number,
): SVGElement | null {
  const a = center(layout, aId);
  const b = center(layout, bId);
  if (a === null || b === null) return null;
  return svgEl("line", {
    x1: String(a[0] * PIXELS_PER_UNIT),
    y1: String(toSvgY(a[1])),
    x2: String(b[0] * PIXELS_PER_UNIT),
    y2: String(toSvgY(b[1])),
    class: cls,
  });
}

function renderCanvas(): void {
  const { layout } = workbench.state;
  const bounds = worldBounds(layout);
  const width = (bounds.x1 - bounds.x0) * PIXELS_PER_UNIT;
  const height = (bounds.y1 - bounds.y0) * PIXELS_PER_UNIT;
  const toSvgY = (y: number): number => (bounds.y1 - y) * PIXELS_PER_UNIT;
  const svg = svgEl("svg", {
    viewBox: `${bounds.x0 * PIXELS_PER_UNIT} 0 ${width} ${height}`,
    width: String(width),
    height: String(height),
  });

  const violating = new Set(workbench.diff.violation ?? []);
  const { realized, report } = workbench.diff;
  if (realized !== null && realized.labels !== undefined) {
    for (const [u, v] of realized.edges) {
      const line = edgeLine(layout, realized.labels[u]!, realized.labels[v]!, "edge", toSvgY);
      if (line !== null) svg.append(line);
    }
  }
  if (report !== null && workbench.state.target !== null) {
    const target = workbench.state.target;
    for (const [kind, pairs] of [["missing", report.missing], ["extra", report.extra]] as const) {
      for (const [u, v] of pairs) {
        const aId = vertexRectId(u, target, layout);
        const bId = vertexRectId(v, target, layout);
        if (aId === null || bId === null) continue;
        const line = edgeLine(layout, aId, bId, kind, toSvgY);
        if (line !== null) svg.append(line);
      }
    }
  }

  for (const rect of layout.rects) {
    const x = coordValue(rect.x[0]) * PIXELS_PER_UNIT;
    const w = (coordValue(rect.x[1]) - coordValue(rect.x[0])) * PIXELS_PER_UNIT;
    const h = (coordValue(rect.y[1]) - coordValue(rect.y[0])) * PIXELS_PER_UNIT;
    const y = toSvgY(coordValue(rect.y[1]));
    const classes = ["box"];
    if (rect.id === workbench.state.selection) classes.push("selected");
    if (violating.has(rect.id)) classes.push("violating");
    const group = svgEl("g", {});
    const node = svgEl("rect", {
      x: String(x), y: String(y), width: String(w), height: String(h),
      class: classes.join(" "),
    });
    node.addEventListener("pointerdown", (ev) => startDrag(ev as PointerEvent, rect.id, "move", group));
    const handle = svgEl("rect", {
      x: String(x + w - 5), y: String(y), width: "5", height: "5", class: "handle",
    });
    handle.addEventListener("pointerdown", (ev) => {
      ev.stopPropagation();
      startDrag(ev as PointerEvent, rect.id, "resize", group);
    });
    const label = svgEl("text", { x: String(x + 3), y: String(y + 13), class: "label" });
    label.textContent = rect.id;
    group.append(node, label, handle);
    svg.append(group);
  }
  canvasHolder.replaceChildren(svg);
}

function startDrag(ev: PointerEvent, id: string, kind: "move" | "resize", node: SVGElement): void {
  ev.preventDefault();
  void workbench.apply((s) => session.select(s, id));
  drag = { id, kind, startX: ev.clientX, startY: ev.clientY, node };
}

window.addEventListener("pointermove", (ev) => {
  if (drag === null) return;
  const dx = ev.clientX - drag.startX;
  const dy = ev.clientY - drag.startY;
  drag.node.setAttribute("transform", `translate(${dx}, ${dy})`);
});

window.addEventListener("pointerup", (ev) => {
  if (drag === null) return;
  const dx = (ev.clientX - drag.startX) / PIXELS_PER_UNIT;
  const dy = -(ev.clientY - drag.startY) / PIXELS_PER_UNIT;
  const { id, kind } = drag;
  drag = null;
  if (dx === 0 && dy === 0) {
    renderCanvas();
    return;
  }
  const action = kind === "move" ? session.moveRect : session.resizeRect;
  void workbench.apply((s) => action(s, id, dx, dy)).catch(reportActionError);
});

// --- diff panel ------------------------------------------------------------

function renderPanel(): void {
  const { diff, state } = workbench;
  panel.replaceChildren();
  panel.append(el("h3", {}, "diff"));
  const status = el("div", { class: `status ${diff.status}` },
    `${diff.status}${diff.stale ? " (stale)" : ""}`);
  panel.append(status);
  if (diff.detail !== null) panel.append(el("div", { class: "detail" }, diff.detail));
  if (diff.violation !== null) {
    panel.append(el("div", { class: "detail" },
      `overlap: ${diff.violation[0]} / ${diff.violation[1]}`));
  }
  if (diff.realized !== null) {
    panel.append(el("div", {}, `realized edges: ${diff.realized.edges.length}`));
  }
  if (diff.report !== null && state.target !== null) {
    const { report, realized } = { report: diff.report, realized: diff.realized };
    panel.append(el("div", {}, `missing: ${report.missing.length}  extra: ${report.extra.length}`));
    const list = el("ul");
    const name = (v: number): string =>
      (realized !== null && vertexRectId(v, state.target as GraphDoc, state.layout)) || String(v);
    for (const [u, v] of report.missing) list.append(el("li", { class: "missing" }, `- ${name(u)}—${name(v)}`));
    for (const [u, v] of report.extra) list.append(el("li", { class: "extra" }, `+ ${name(u)}—${name(v)}`));
    panel.append(list);
  }
  if (state.target !== null) {
    panel.append(el("div", {}, `target: n=${state.target.n}, ${state.target.edges.length} edges`));
  }
  if (lastVerdict !== null) {
    panel.append(el("div", { class: "verdict" },
      `decide: ${lastVerdict.outcome} (${lastVerdict.nodes} nodes` +
      `${lastVerdict.evidence ? ", " + lastVerdict.evidence.kind : ""})`));
  }
  if (workbench.deciding) panel.append(el("div", { class: "progress" }, "searching…"));
}

function renderAll(): void {
  banner.textContent = workbench.diff.status === "offline"
    ? "compute service unreachable — editing continues, verification stale"
    : "";
  banner.style.display = workbench.diff.status === "offline" ? "block" : "none";
  modeSelect.value = workbench.state.layout.mode;
  mappingSelect.value = workbench.state.mapping;
  snapBox.checked = workbench.state.snap;
  undoBtn.disabled = !session.canUndo(workbench.state);
  redoBtn.disabled = !session.canRedo(workbench.state);
  importBtn.disabled = lastVerdict?.certificate === undefined;
  renderCanvas();
  renderPanel();
}

function reportActionError(exc: unknown): void {
  banner.textContent = describeError(exc);
  banner.style.display = "block";
}

// --- toolbar wiring ---------------------------------------------------------

loadFixtureBtn.addEventListener("click", () => {
  void (async () => {
    const doc = await workbench.client.fixture(fixtureSelect.value);
    if (typeof doc === "object" && doc !== null && "rects" in doc) {
      await workbench.apply((s) => session.loadLayout(s, doc));
    } else {
      await workbench.apply((s) => session.setTarget(s, doc));
    }
  })().catch(reportActionError);
});

modeSelect.addEventListener("change", () => {
  void workbench.apply((s) => session.setMode(s, modeSelect.value as "trvg" | "itrvg"))
    .catch(reportActionError);
});
mappingSelect.addEventListener("change", () => {
  void workbench.apply((s) => session.setMapping(s, mappingSelect.value as "identity" | "search"))
    .catch(reportActionError);
});
snapBox.addEventListener("change", () => {
  void workbench.apply((s) => session.setSnap(s, snapBox.checked)).catch(reportActionError);
});
addBtn.addEventListener("click", () => {
  void workbench.apply((s) => session.addRect(s)).catch(reportActionError);
});
deleteBtn.addEventListener("click", () => {
  const id = workbench.state.selection;
  if (id === null) return;
  void workbench.apply((s) => session.deleteRect(s, id)).catch(reportActionError);
});
undoBtn.addEventListener("click", () => {
  void workbench.apply(session.undo).catch(reportActionError);
});
redoBtn.addEventListener("click", () => {
  void workbench.apply(session.redo).catch(reportActionError);
});
saveBtn.addEventListener("click", () => {
  download("layout.json", workbench.saveLayout(), "application/json");
});
exportBtn.addEventListener("click", () => {
  void workbench.exportSvg({ edges: true })
    .then((svg) => download("layout.svg", svg, "image/svg+xml"))
    .catch(reportActionError);
});
clearTargetBtn.addEventListener("click", () => {
  void workbench.apply((s) => session.setTarget(s, null)).catch(reportActionError);
});
fileInput.addEventListener("change", () => {
  const file = fileInput.files?.[0];
  if (file === undefined) return;
  void file.text().then(async (text) => {
    const doc: unknown = JSON.parse(text);
    if (typeof doc === "object" && doc !== null && "rects" in doc) {
      await workbench.apply((s) => session.loadLayout(s, doc));
    } else {
      await workbench.apply((s) => session.setTarget(s, doc));
    }
  }).catch(reportActionError);
  fileInput.value = "";
});
decideBtn.addEventListener("click", () => {
  const budget = Number(budgetInput.value);
  void workbench.decide(workbench.state.layout.mode, { max_nodes: budget })
    .then((verdict) => {
      lastVerdict = verdict;
      renderAll();
    })
    .catch(reportActionError);
});
importBtn.addEventListener("click", () => {
  if (lastVerdict === null) return;
  void workbench.importCertificate(lastVerdict).catch(reportActionError);
});

// expose the target graph for copy/paste workflows in the console
(window as unknown as Record<string, unknown>)["trvgWorkbench"] = {
  workbench,
  saveTarget: (): string | null =>
    workbench.state.target === null ? null : serializeGraph(workbench.state.target),
};

workbench.onChange = renderAll;
renderAll();
void workbench.refresh();
