/** Deterministic force-directed layout with the frozen row pinned below.
 *
 * Mutable vertices relax horizontally on one row (springs along principal
 * arrows, uniform repulsion); each frozen copy i' is pinned directly under
 * its base vertex i, mirroring the usual diagrams.
 */

import type { RenderEdge } from "./types.js";

export interface LayoutOptions {
  width?: number;
  rowY?: number;
  frozenY?: number;
  iterations?: number;
}

export type Positions = Record<string, { x: number; y: number }>;

const SPRING = 0.08;
const REPEL = 3200;
const TARGET = 120;

export function layoutQuiver(
  mutable: string[],
  frozen: string[],
  edges: RenderEdge[],
  options: LayoutOptions = {},
): Positions {
  const width = options.width ?? Math.max(480, 140 * mutable.length);
  const rowY = options.rowY ?? 110;
  const frozenY = options.frozenY ?? 260;
  const iterations = options.iterations ?? 120;

  const order = [...mutable].sort();
  const xs: Record<string, number> = {};
  order.forEach((id, i) => {
    xs[id] = ((i + 1) * width) / (order.length + 1);
  });

  const principalEdges = edges.filter(
    (e) => !frozen.includes(e.from) && !frozen.includes(e.to),
  );
  for (let step = 0; step < iterations; step += 1) {
    const force: Record<string, number> = {};
    order.forEach((id) => (force[id] = 0));
    for (const e of principalEdges) {
      const d = xs[e.to] - xs[e.from];
      const stretch = Math.abs(d) - TARGET;
      const pull = SPRING * stretch * Math.sign(d || 1);
      force[e.from] += pull;
      force[e.to] -= pull;
    }
    for (const a of order) {
      for (const b of order) {
        if (a === b) continue;
        const d = xs[a] - xs[b];
        const dist = Math.max(Math.abs(d), 24);
        force[a] += (REPEL / (dist * dist)) * Math.sign(d || 1);
      }
    }
    for (const id of order) {
      xs[id] = Math.min(width - 40, Math.max(40, xs[id] + force[id]));
    }
  }

  const positions: Positions = {};
  for (const id of order) {
    positions[id] = { x: Math.round(xs[id]), y: rowY };
  }
  for (const id of frozen) {
    const base = id.endsWith("'") ? id.slice(0, -1) : id;
    const under = positions[base] ?? {
      x: 40 + 60 * frozen.indexOf(id),
      y: rowY,
    };
    positions[id] = { x: under.x, y: frozenY };
  }
  return positions;
}
