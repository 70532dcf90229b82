/** Session state and pure edit actions.
 *
 * Every action returns a fresh state whose working layout is a valid
 * LayoutDoc; mutating actions first push the serialized current layout on
 * the undo stack, so a single undo restores the prior text exactly.
 */

import {
  Coord,
  GraphDoc,
  LayoutDoc,
  ModeName,
  RectDoc,
  SchemaError,
  coordFromNumber,
  coordValue,
  parseLayout,
  serializeLayout,
  validateGraphDoc,
  validateLayoutDoc,
} from "./documents.js";

export type MappingChoice = "identity" | "search";

export interface SessionState {
  layout: LayoutDoc;
  target: GraphDoc | null;
  mapping: MappingChoice;
  selection: string | null;
  snap: boolean;
  undoStack: string[];
  redoStack: string[];
}

export function initialState(): SessionState {
  return {
    layout: { mode: "trvg", rects: [] },
    target: null,
    mapping: "identity",
    selection: null,
    snap: true,
    undoStack: [],
    redoStack: [],
  };
}

export function saveLayout(state: SessionState): string {
  return serializeLayout(state.layout);
}

function pushUndo(state: SessionState, layout: LayoutDoc): SessionState {
  validateLayoutDoc(layout);
  return {
    ...state,
    layout,
    undoStack: [...state.undoStack, serializeLayout(state.layout)],
    redoStack: [],
  };
}

function findRect(state: SessionState, id: string): RectDoc {
  const rect = state.layout.rects.find((r) => r.id === id);
  if (rect === undefined) throw new SchemaError("$.rects", `no rectangle ${JSON.stringify(id)}`);
  return rect;
}

function freshId(state: SessionState): string {
  const used = new Set(state.layout.rects.map((r) => r.id));
  let k = 1;
  while (used.has(`r${k}`)) k += 1;
  return `r${k}`;
}

function snapValue(state: SessionState, value: number): number {
  return state.snap ? Math.round(value) : value;
}

/** New unit square placed to the right of everything, selected. */
export function addRect(state: SessionState, id?: string): SessionState {
  const rectId = id ?? freshId(state);
  const xs = state.layout.rects.map((r) => coordValue(r.x[1]));
  const lo = snapValue(state, xs.length > 0 ? Math.max(...xs) + 1 : 0);
  const rect: RectDoc = {
    id: rectId,
    x: [coordFromNumber(lo), coordFromNumber(lo + 1)],
    y: [0, 1],
  };
  const next = pushUndo(state, {
    ...state.layout,
    rects: [...state.layout.rects, rect],
  });
  return { ...next, selection: rectId };
}

export function setRectCoords(
  state: SessionState,
  id: string,
  x: [Coord, Coord],
  y: [Coord, Coord],
): SessionState {
  findRect(state, id);
  return pushUndo(state, {
    ...state.layout,
    rects: state.layout.rects.map((r) => (r.id === id ? { id, x, y } : r)),
  });
}

export function moveRect(state: SessionState, id: string, dx: number, dy: number): SessionState {
  const rect = findRect(state, id);
  const x0 = snapValue(state, coordValue(rect.x[0]) + dx);
  const y0 = snapValue(state, coordValue(rect.y[0]) + dy);
  const width = coordValue(rect.x[1]) - coordValue(rect.x[0]);
  const height = coordValue(rect.y[1]) - coordValue(rect.y[0]);
  return setRectCoords(
    state,
    id,
    [coordFromNumber(x0), coordFromNumber(x0 + width)],
    [coordFromNumber(y0), coordFromNumber(y0 + height)],
  );
}

/** Drag the upper-right corner; the lower-left corner stays put. */
export function resizeRect(state: SessionState, id: string, dx: number, dy: number): SessionState {
  const rect = findRect(state, id);
  const x1 = snapValue(state, coordValue(rect.x[1]) + dx);
  const y1 = snapValue(state, coordValue(rect.y[1]) + dy);
  if (x1 <= coordValue(rect.x[0]) || y1 <= coordValue(rect.y[0])) {
    throw new SchemaError("$.rects", "resize would empty the rectangle");
  }
  return setRectCoords(
    state,
    id,
    [rect.x[0], coordFromNumber(x1)],
    [rect.y[0], coordFromNumber(y1)],
  );
}

export function deleteRect(state: SessionState, id: string): SessionState {
  findRect(state, id);
  const next = pushUndo(state, {
    ...state.layout,
    rects: state.layout.rects.filter((r) => r.id !== id),
  });
  return { ...next, selection: state.selection === id ? null : state.selection };
}

export function setMode(state: SessionState, mode: ModeName): SessionState {
  if (mode === state.layout.mode) return state;
  return pushUndo(state, { ...state.layout, mode });
}

/** Round every coordinate to the integer grid. */
export function snapAll(state: SessionState): SessionState {
  const rects = state.layout.rects.map((r) => {
    const x0 = Math.round(coordValue(r.x[0]));
    const y0 = Math.round(coordValue(r.y[0]));
    const x1 = Math.max(x0 + 1, Math.round(coordValue(r.x[1])));
    const y1 = Math.max(y0 + 1, Math.round(coordValue(r.y[1])));
    return { id: r.id, x: [x0, x1] as [Coord, Coord], y: [y0, y1] as [Coord, Coord] };
  });
  return pushUndo(state, { ...state.layout, rects });
}

/** Replace the working layout from a document or its text form. */
export function loadLayout(state: SessionState, value: unknown): SessionState {
  const doc = typeof value === "string" ? parseLayout(value) : validateLayoutDoc(value);
  const next = pushUndo(state, doc);
  return { ...next, selection: null };
}

export function setTarget(state: SessionState, value: unknown | null): SessionState {
  if (value === null) return { ...state, target: null };
  const doc = typeof value === "string" ? JSON.parse(value) : value;
  return { ...state, target: validateGraphDoc(doc) };
}

export function setMapping(state: SessionState, mapping: MappingChoice): SessionState {
  return { ...state, mapping };
}

export function setSnap(state: SessionState, snap: boolean): SessionState {
  return { ...state, snap };
}

export function select(state: SessionState, id: string | null): SessionState {
  if (id !== null) findRect(state, id);
  return { ...state, selection: id };
}

export function canUndo(state: SessionState): boolean {
  return state.undoStack.length > 0;
}

export function canRedo(state: SessionState): boolean {
  return state.redoStack.length > 0;
}

export function undo(state: SessionState): SessionState {
  const previous = state.undoStack[state.undoStack.length - 1];
  if (previous === undefined) return state;
  return {
    ...state,
    layout: parseLayout(previous),
    undoStack: state.undoStack.slice(0, -1),
    redoStack: [...state.redoStack, serializeLayout(state.layout)],
    selection: null,
  };
}

export function redo(state: SessionState): SessionState {
  const next = state.redoStack[state.redoStack.length - 1];
  if (next === undefined) return state;
  return {
    ...state,
    layout: parseLayout(next),
    undoStack: [...state.undoStack, serializeLayout(state.layout)],
    redoStack: state.redoStack.slice(0, -1),
    selection: null,
  };
}
