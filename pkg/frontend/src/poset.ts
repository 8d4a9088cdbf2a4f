// Display-side order helpers: heights, down-set reachability, and the
// layered layout.  Pure derivation from the poset JSON for drawing;
// every search decision still comes from the service.

import type { PosetJson } from "./types.js";

export interface LayoutNode {
  id: number;
  height: number; // 1 = minimal element layer
  x: number; // deterministic slot within the layer, ordered by id
  layerSize: number;
}

export interface Layout {
  nodes: Map<number, LayoutNode>;
  edges: [number, number][]; // [upper, lower]
  maxHeight: number;
}

/** Longest-chain height per node (minimal elements have height 1). */
export function nodeHeights(poset: PosetJson): Map<number, number> {
  const below = new Map<number, number[]>();
  for (const id of poset.nodes) below.set(id, []);
  for (const [upper, lower] of poset.covers) below.get(upper)!.push(lower);
  const heights = new Map<number, number>();
  const visit = (id: number): number => {
    const known = heights.get(id);
    if (known !== undefined) return known;
    let best = 0;
    for (const child of below.get(id) ?? []) best = Math.max(best, visit(child));
    heights.set(id, best + 1);
    return best + 1;
  };
  for (const id of poset.nodes) visit(id);
  return heights;
}

/** Down-set of a node (everything it dominates, itself included). */
export function downSet(poset: PosetJson, generator: number): Set<number> {
  const below = new Map<number, number[]>();
  for (const id of poset.nodes) below.set(id, []);
  for (const [upper, lower] of poset.covers) below.get(upper)!.push(lower);
  const members = new Set<number>();
  const stack = [generator];
  while (stack.length) {
    const v = stack.pop()!;
    if (members.has(v)) continue;
    members.add(v);
    for (const child of below.get(v) ?? []) stack.push(child);
  }
  return members;
}

/**
 * Layered layout: one row per height, minimal element at the bottom,
 * nodes ordered left to right by id.  Deterministic, so screenshots are
 * reproducible.
 */
export function layeredLayout(poset: PosetJson): Layout {
  const heights = nodeHeights(poset);
  const layers = new Map<number, number[]>();
  for (const id of [...poset.nodes].sort((a, b) => a - b)) {
    const h = heights.get(id)!;
    if (!layers.has(h)) layers.set(h, []);
    layers.get(h)!.push(id);
  }
  const nodes = new Map<number, LayoutNode>();
  let maxHeight = 0;
  for (const [h, ids] of layers) {
    maxHeight = Math.max(maxHeight, h);
    ids.forEach((id, slot) => {
      nodes.set(id, { id, height: h, x: slot, layerSize: ids.length });
    });
  }
  return { nodes, edges: poset.covers.map(([u, l]) => [u, l]), maxHeight };
}
