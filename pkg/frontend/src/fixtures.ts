// Built-in posets, byte-identical to the library's fixture JSON.

import type { PosetJson } from "./types.js";

/** 17 nodes, degree 4, height 6. */
export const SAMPLE_POSET: PosetJson = {
  covers: [
    [1, 0], [2, 0], [3, 0], [4, 2], [5, 3], [6, 3], [7, 3], [8, 3],
    [9, 4], [10, 4], [10, 5], [11, 5], [12, 7], [13, 10], [13, 11],
    [14, 12], [15, 13], [16, 14],
  ],
  nodes: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16],
};

/** Complete 5-ary tree of height 3 (31 nodes). */
export const TREE_POSET: PosetJson = {
  covers: [
    [1, 0], [2, 0], [3, 0], [4, 0], [5, 0],
    [6, 1], [7, 1], [8, 1], [9, 1], [10, 1],
    [11, 2], [12, 2], [13, 2], [14, 2], [15, 2],
    [16, 3], [17, 3], [18, 3], [19, 3], [20, 3],
    [21, 4], [22, 4], [23, 4], [24, 4], [25, 4],
    [26, 5], [27, 5], [28, 5], [29, 5], [30, 5],
  ],
  nodes: [
    0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15,
    16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30,
  ],
};

/** 34 nodes, degree 4, height 6; the walkthrough instance. */
export const DEMO_POSET: PosetJson = {
  covers: [
    [1, 0], [2, 0], [3, 0], [4, 0], [5, 1], [6, 1], [7, 2], [8, 2],
    [8, 3], [9, 3], [10, 4], [11, 4], [12, 5], [13, 5], [14, 5],
    [15, 6], [16, 3], [16, 10], [17, 10], [18, 11], [19, 11],
    [20, 12], [21, 12], [22, 12], [22, 14], [23, 15], [24, 15],
    [25, 2], [25, 15], [25, 16], [26, 16], [27, 16], [28, 17],
    [29, 17], [30, 10], [30, 19], [31, 19], [32, 19],
    [33, 22], [33, 24], [33, 27], [33, 28],
  ],
  nodes: [
    0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17,
    18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33,
  ],
};

/** Generator of the demo poset's marked ideal. */
export const DEMO_IDEAL_GENERATOR = 27;

export const FIXTURES: Record<string, PosetJson> = {
  sample: SAMPLE_POSET,
  tree: TREE_POSET,
  demo: DEMO_POSET,
};
