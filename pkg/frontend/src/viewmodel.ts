// View model derivation.  Node states come solely from the service
// payload: alive = the service's current sub-poset, the recommendation
// is its pending decision, and the known-in-ideal region is the
// down-set of the last positive node.

import { downSet } from "./poset.js";
import type { PosetJson, SessionPayload, TranscriptEntry } from "./types.js";

export type NodeState = "alive" | "eliminated" | "known" | "recommended";

export interface ViewModel {
  states: Map<number, NodeState>;
  budgetUsed: number;
  budgetTotal: number;
  status: "active" | "concluded";
  recommended: number | null;
  conclusion: string | null;
  transcriptRows: string[];
}

export function deriveViewModel(poset: PosetJson, payload: SessionPayload): ViewModel {
  const alive = new Set(payload.alive);
  const known =
    payload.last_positive !== null ? downSet(poset, payload.last_positive) : new Set<number>();
  const recommended =
    payload.decision.kind === "query" ? payload.decision.node : null;
  const states = new Map<number, NodeState>();
  for (const id of poset.nodes) {
    if (id === recommended) states.set(id, "recommended");
    else if (known.has(id)) states.set(id, "known");
    else if (alive.has(id)) states.set(id, "alive");
    else states.set(id, "eliminated");
  }
  let conclusion: string | null = null;
  if (payload.decision.kind === "conclude") {
    conclusion =
      payload.decision.result.kind === "empty"
        ? "the hidden ideal is empty"
        : `the hidden ideal is generated by node ${payload.decision.result.generator}`;
  }
  return {
    states,
    budgetUsed: payload.k0 - payload.budget,
    budgetTotal: payload.k0,
    status: payload.status,
    recommended,
    conclusion,
    transcriptRows: payload.transcript.entries.map(formatEntry),
  };
}

export function formatEntry(entry: TranscriptEntry): string {
  const answer = entry.positive ? "yes" : "no";
  return `node ${entry.node} (height ${entry.height}, ${entry.size} alive, budget ${entry.budget}) -> ${answer}`;
}

export function budgetGauge(vm: ViewModel): string {
  const spent = "●".repeat(vm.budgetUsed);
  const left = "○".repeat(vm.budgetTotal - vm.budgetUsed);
  return `${spent}${left} ${vm.budgetTotal - vm.budgetUsed}/${vm.budgetTotal} positives left`;
}
