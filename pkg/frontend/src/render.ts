/** Build the render model from a seed payload, and emit SVG.
 *
 * The arrows are read off the exchange matrix exactly the way the service
 * itself converts matrices to quivers: a positive entry b[i][j] is b arrows
 * from column vertex j into row vertex i; a negative entry in a frozen row
 * is an arrow out of the frozen vertex.  This is what keeps the picture and
 * the server's seed in lockstep -- the invariant the tests snapshot.
 */

import { layoutQuiver, type Positions } from "./layout.js";
import type { RenderEdge, RenderModel, RenderNode, SeedPayload } from "./types.js";

export function edgesFromMatrix(seed: SeedPayload): RenderEdge[] {
  const { rows, cols, frozen, b } = seed.matrix;
  const out: RenderEdge[] = [];
  rows.forEach((rowId, i) => {
    cols.forEach((colId, j) => {
      const n = b[i][j];
      if (n > 0) {
        out.push({ from: colId, to: rowId, multiplicity: n });
      } else if (n < 0 && frozen.includes(rowId)) {
        out.push({ from: rowId, to: colId, multiplicity: -n });
      }
    });
  });
  out.sort((a, z) => (a.from + ">" + a.to).localeCompare(z.from + ">" + z.to));
  return out;
}

export function buildModel(
  seed: SeedPayload,
  selected: string | null = null,
  positions?: Positions,
): RenderModel {
  const edges = edgesFromMatrix(seed);
  const pos = positions ?? layoutQuiver(seed.mutable, seed.frozen, edges);
  const nodes: RenderNode[] = seed.matrix.rows.map((id) => ({
    id,
    label: seed.names[id] ?? id,
    x: pos[id].x,
    y: pos[id].y,
    frozen: seed.frozen.includes(id),
    selected: id === selected,
  }));
  return { nodes, edges, variables: { ...seed.variables } };
}

const NODE_R = 22;

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Static SVG markup for a model; the ghost (what-if preview) overlays in a
 * lighter stroke and never replaces the committed picture. */
export function renderSvg(
  model: RenderModel,
  ghost: RenderModel | null = null,
  width = 560,
  height = 330,
): string {
  const byId: Record<string, RenderNode> = {};
  for (const n of model.nodes) byId[n.id] = n;
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}">`,
    `<defs><marker id="arrow" viewBox="0 0 8 8" refX="7" refY="4" ` +
      `markerWidth="7" markerHeight="7" orient="auto">` +
      `<path d="M0,0 L8,4 L0,8 z"/></marker></defs>`,
  ];
  const drawEdges = (m: RenderModel, cls: string) => {
    for (const e of m.edges) {
      const a = byId[e.from] ?? m.nodes.find((n) => n.id === e.from);
      const b = byId[e.to] ?? m.nodes.find((n) => n.id === e.to);
      if (!a || !b) continue;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const len = Math.max(Math.hypot(dx, dy), 1);
      const sx = a.x + (dx / len) * NODE_R;
      const sy = a.y + (dy / len) * NODE_R;
      const tx = b.x - (dx / len) * (NODE_R + 4);
      const ty = b.y - (dy / len) * (NODE_R + 4);
      for (let k = 0; k < e.multiplicity; k += 1) {
        const off = (k - (e.multiplicity - 1) / 2) * 7;
        const nx = (-dy / len) * off;
        const ny = (dx / len) * off;
        parts.push(
          `<line class="${cls}" x1="${sx + nx}" y1="${sy + ny}" ` +
            `x2="${tx + nx}" y2="${ty + ny}" marker-end="url(#arrow)"/>`,
        );
      }
    }
  };
  drawEdges(model, "edge");
  for (const n of model.nodes) {
    const cls = n.frozen ? "node frozen" : n.selected ? "node selected" : "node";
    parts.push(
      `<g class="${cls}" data-vertex="${escapeXml(n.id)}">` +
        `<circle cx="${n.x}" cy="${n.y}" r="${NODE_R}"/>` +
        `<text x="${n.x}" y="${n.y + 5}" text-anchor="middle">` +
        `${escapeXml(n.label)}</text></g>`,
    );
  }
  if (ghost) {
    drawEdges(ghost, "edge ghost");
  }
  parts.push("</svg>");
  return parts.join("");
}
