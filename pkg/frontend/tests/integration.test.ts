/** End to end against the real compute service: the scripted criterion
 * scenario plus the session I/O loop, with the diff panel reconciled
 * against a direct verify call after every action.
 */

import { ChildProcess, spawn } from "node:child_process";
import { createServer } from "node:net";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, Client } from "../src/api.js";
import { GraphDoc, LayoutDoc, VerifyReport, validateGraphDoc, validateLayoutDoc } from "../src/documents.js";
import * as s from "../src/session.js";
import { DiffPanel, Workbench } from "../src/workbench.js";

let server: ChildProcess;
let client: Client;

async function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const probe = createServer();
    probe.listen(0, "127.0.0.1", () => {
      const address = probe.address();
      if (address === null || typeof address === "string") {
        reject(new Error("no port"));
        return;
      }
      probe.close(() => resolve(address.port));
    });
  });
}

beforeAll(async () => {
  const port = await freePort();
  server = spawn("python3", ["-m", "trvg", "serve", "--port", String(port)], {
    stdio: ["ignore", "ignore", "pipe"],
  });
  client = new Client(`http://127.0.0.1:${port}`);
  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      await client.fixture("fig1_k5");
      break;
    } catch {
      if (Date.now() > deadline) throw new Error("service did not come up");
      await new Promise((r) => setTimeout(r, 200));
    }
  }
});

afterAll(() => {
  server.kill("SIGTERM");
});

/** Apply an action, then check the panel equals a direct verify call —
 * reports when the call succeeds, matching error state when it rejects. */
async function applyReconciled(
  wb: Workbench,
  action: (state: s.SessionState) => s.SessionState,
): Promise<DiffPanel> {
  const diff = await wb.apply(action);
  try {
    const direct = await client.verify(
      wb.state.layout,
      wb.state.target as GraphDoc,
      wb.state.mapping,
    );
    expect(diff.report).toEqual(direct);
  } catch (exc) {
    expect(exc).toBeInstanceOf(ApiError);
    const err = exc as ApiError;
    expect(diff.status).toBe(err.kind === "overlap_violation" ? "violation" : "invalid");
    expect(diff.detail).toBe(err.detail);
  }
  return diff;
}

describe("criterion scenario", () => {
  it("matches the target, shows exact losses on a drag, and undoes", async () => {
    const wb = new Workbench(client);
    const layoutDoc = validateLayoutDoc(await wb.client.fixture("fig6b_itrvg"));
    const targetDoc = validateGraphDoc(await wb.client.fixture("fig6a_G"));
    await wb.apply((st) => s.setTarget(st, targetDoc));

    // loading fig6b against fig6a_G: 0 missing / 0 extra
    let diff = await applyReconciled(wb, (st) => s.loadLayout(st, layoutDoc));
    expect(diff.status).toBe("match");
    expect(diff.report).toMatchObject({ ok: true, missing: [], extra: [] });
    expect(diff.realized?.edges.length).toBe(28);

    // drag D3 off-screen: exactly its realized edges go missing
    const before = wb.saveLayout();
    diff = await applyReconciled(wb, (st) => s.moveRect(st, "D3", 97.3, 0));
    expect(diff.status).toBe("mismatch");
    expect(diff.report?.missing).toEqual([[10, 11], [10, 12]]);
    expect(diff.report?.extra).toEqual([]);
    const labels = targetDoc.labels!;
    const lost = diff.report!.missing.map(([u, v]) => [labels[u], labels[v]]);
    expect(lost).toEqual([["D3", "E1"], ["D3", "E2"]]);

    // undo restores the prior serialized layout exactly and the match
    diff = await applyReconciled(wb, s.undo);
    expect(wb.saveLayout()).toBe(before);
    expect(diff.status).toBe("match");
  });

  it("keeps panel and direct verify equal across a whole edit session", async () => {
    const wb = new Workbench(client);
    const targetDoc = validateGraphDoc(await wb.client.fixture("graph_Gprime"));
    await wb.apply((st) => s.setTarget(st, targetDoc));
    const fig7a = validateLayoutDoc(await wb.client.fixture("fig7a_Gprime"));

    // the script deliberately walks through an overlap violation and a
    // size mismatch and recovers from both via undo
    const script: ((st: s.SessionState) => s.SessionState)[] = [
      (st) => s.loadLayout(st, fig7a),
      (st) => s.moveRect(st, "B1", 0.5, 0),
      (st) => s.resizeRect(st, "C1", 1, 1),
      s.undo,
      s.undo,
      s.redo,
      (st) => s.deleteRect(st, "A1"),
      s.undo,
      s.undo,
      (st) => s.setMode(st, "itrvg"),
      (st) => s.setMode(st, "trvg"),
      (st) => s.setMapping(st, "search"),
    ];
    for (const action of script) {
      await applyReconciled(wb, action);
    }
    const final = await applyReconciled(wb, (st) => st);
    expect(final.status).toBe("match");
  });
});

describe("edit feedback", () => {
  it("shows K4 after deleting one square from the K5 layout", async () => {
    const wb = new Workbench(client);
    const fig1 = validateLayoutDoc(await wb.client.fixture("fig1_k5"));
    await wb.apply((st) => s.loadLayout(st, fig1));
    const diff = await wb.apply((st) => s.deleteRect(st, "r3"));
    expect(diff.realized?.n).toBe(4);
    expect(diff.realized?.edges.length).toBe(6);
  });

  it("flags the overlapping pair in disjoint mode and recovers", async () => {
    const wb = new Workbench(client);
    let st = s.loadLayout(s.initialState(), {
      mode: "trvg",
      rects: [
        { id: "a", x: [0, 2], y: [0, 2] },
        { id: "b", x: [5, 7], y: [1, 3] },
      ],
    });
    await wb.apply(() => st);
    const diff = await wb.apply((cur) => s.moveRect(cur, "b", -4, 0));
    expect(diff.status).toBe("violation");
    expect(diff.violation).toEqual(["a", "b"]);
    expect(diff.stale).toBe(true);
    const healed = await wb.apply(s.undo);
    expect(healed.status).toBe("empty");
    expect(healed.violation).toBeNull();
    expect(healed.realized?.edges).toEqual([[0, 1]]);
  });

  it("keeps editing offline and marks the panel stale", async () => {
    const wb = new Workbench(new Client("http://127.0.0.1:9"));
    const diff = await wb.apply((st) => s.addRect(st));
    expect(diff.status).toBe("offline");
    expect(diff.stale).toBe(true);
    expect(wb.state.layout.rects.length).toBe(1);
  });
});

describe("session I/O", () => {
  it("save then load round-trips the layout byte for byte", async () => {
    const wb = new Workbench(client);
    const fig6b = validateLayoutDoc(await wb.client.fixture("fig6b_itrvg"));
    await wb.apply((st) => s.loadLayout(st, fig6b));
    const saved = wb.saveLayout();
    await wb.apply((st) => s.loadLayout(st, saved));
    expect(wb.saveLayout()).toBe(saved);
  });

  it("decides a bipartite target and imports the certificate", async () => {
    const wb = new Workbench(client);
    const k34: GraphDoc = {
      n: 7,
      edges: [0, 1, 2].flatMap((u) => [3, 4, 5, 6].map((v) => [u, v] as [number, number])),
    };
    await wb.apply((st) => s.setTarget(st, k34));
    const verdict = await wb.decide("trvg", { max_nodes: 100_000_000 });
    expect(verdict.outcome).toBe("yes");
    expect(verdict.nodes).toBe(142);
    expect(verdict.certificate).toBeDefined();
    const diff = await wb.importCertificate(verdict);
    expect(diff.status).toBe("match");
    expect(diff.report).toMatchObject({ ok: true, missing: [], extra: [] });
    const direct: VerifyReport = await client.verify(wb.state.layout, k34, "identity");
    expect(diff.report).toEqual(direct);
  });

  it("reports no-certificate outcomes without touching the canvas", async () => {
    const wb = new Workbench(client);
    const k44: GraphDoc = {
      n: 8,
      edges: [0, 1, 2, 3].flatMap((u) => [4, 5, 6, 7].map((v) => [u, v] as [number, number])),
    };
    await wb.apply((st) => s.setTarget(st, k44));
    const verdict = await wb.decide("trvg");
    expect(verdict.outcome).toBe("no");
    expect(verdict.evidence?.kind).toBe("exhausted");
    await expect(wb.importCertificate(verdict)).rejects.toThrow("no certificate");
    expect(wb.state.layout.rects.length).toBe(0);
  });

  it("exports exactly the server's rendering of the same layout", async () => {
    const wb = new Workbench(client);
    const fig1 = validateLayoutDoc(await wb.client.fixture("fig1_k5"));
    await wb.apply((st) => s.loadLayout(st, fig1));
    const exported = await wb.exportSvg({ edges: true });
    const direct = await client.render(fig1 as LayoutDoc, { edges: true });
    expect(exported).toBe(direct);
    expect(exported.startsWith("<svg")).toBe(true);
  });

  it("surfaces server schema errors with their json path", async () => {
    let thrown: unknown = null;
    try {
      await client.decide({ n: 2, edges: [[0, 5]] });
    } catch (exc) {
      thrown = exc;
    }
    expect(thrown).toBeInstanceOf(ApiError);
    expect((thrown as ApiError).status).toBe(400);
    expect((thrown as ApiError).detail).toContain("$.graph.edges[0]");
  });
});
