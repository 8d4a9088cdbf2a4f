// SVG rendering of the layered Hasse diagram.  Produces plain strings
// so it is testable without a DOM.

import type { Layout } from "./poset.js";
import type { NodeState } from "./viewmodel.js";

const WIDTH = 720;
const LAYER_GAP = 72;
const MARGIN = 40;
const RADIUS = 11;

const STATE_CLASS: Record<NodeState, string> = {
  alive: "node-alive",
  eliminated: "node-eliminated",
  known: "node-known",
  recommended: "node-recommended",
};

export function nodePosition(layout: Layout, id: number): { x: number; y: number } {
  const node = layout.nodes.get(id);
  if (!node) throw new Error(`node ${id} missing from layout`);
  const usable = WIDTH - 2 * MARGIN;
  const step = usable / (node.layerSize + 1);
  return {
    x: MARGIN + step * (node.x + 1),
    y: MARGIN + (layout.maxHeight - node.height) * LAYER_GAP,
  };
}

export function svgHeight(layout: Layout): number {
  return 2 * MARGIN + Math.max(0, layout.maxHeight - 1) * LAYER_GAP;
}

export function renderSvg(layout: Layout, states: Map<number, NodeState>): string {
  const parts: string[] = [];
  const height = svgHeight(layout);
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${height}" class="hasse">`,
  );
  for (const [upper, lower] of layout.edges) {
    const a = nodePosition(layout, upper);
    const b = nodePosition(layout, lower);
    const dead =
      states.get(upper) === "eliminated" || states.get(lower) === "eliminated";
    parts.push(
      `<line x1="${a.x.toFixed(1)}" y1="${a.y}" x2="${b.x.toFixed(1)}" y2="${b.y}"` +
        ` class="edge${dead ? " edge-eliminated" : ""}"/>`,
    );
  }
  const ids = [...layout.nodes.keys()].sort((a, b) => a - b);
  for (const id of ids) {
    const { x, y } = nodePosition(layout, id);
    const cls = STATE_CLASS[states.get(id) ?? "alive"];
    parts.push(
      `<g class="node ${cls}" data-node="${id}">` +
        `<circle cx="${x.toFixed(1)}" cy="${y}" r="${RADIUS}"/>` +
        `<text x="${x.toFixed(1)}" y="${y + 4}" text-anchor="middle">${id}</text></g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}
