// Browser wiring: session lifecycle, diagram repaints, answer clicks,
// and the what-if panel.  Every state change round-trips through the
// service; the client never decides a query itself.

import { AdvisorApiError, AdvisorClient } from "./api.js";
import { DEMO_POSET, FIXTURES } from "./fixtures.js";
import { layeredLayout, type Layout } from "./poset.js";
import { renderSvg } from "./render.js";
import { budgetGauge, deriveViewModel } from "./viewmodel.js";
import type { Decision, PosetJson, SessionPayload, WhatIf } from "./types.js";

interface AppState {
  client: AdvisorClient;
  poset: PosetJson;
  layout: Layout;
  session: SessionPayload | null;
  busy: boolean;
}

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
};

function describeDecision(decision: Decision): string {
  if (decision.kind === "query") {
    return `query node ${decision.node} (height ${decision.height}, rule: ${decision.branch})`;
  }
  return decision.result.kind === "empty"
    ? "concluded: the ideal is empty"
    : `concluded: ideal generated by node ${decision.result.generator}`;
}

function describePreview(side: "yes" | "no", whatif: WhatIf): string {
  const preview = whatif[side];
  const next =
    preview.decision.kind === "query"
      ? `next: node ${preview.decision.node} at height ${preview.decision.height}`
      : describeDecision(preview.decision);
  return (
    `${side === "yes" ? "If YES" : "If NO"}: ${preview.alive.length} nodes stay ` +
    `(height ${preview.height}, budget ${preview.budget}); ${next}`
  );
}

function showError(message: string): void {
  const banner = $("error-banner");
  banner.textContent = message;
  banner.classList.remove("hidden");
  window.setTimeout(() => banner.classList.add("hidden"), 6000);
}

function repaint(state: AppState): void {
  const payload = state.session;
  const diagram = $("diagram");
  if (!payload) {
    diagram.innerHTML = renderSvg(
      state.layout,
      new Map(state.poset.nodes.map((id) => [id, "alive"] as const)),
    );
    $("status-line").textContent = "no active session";
    $("budget-gauge").textContent = "";
    $("transcript").innerHTML = "";
    return;
  }
  const vm = deriveViewModel(state.poset, payload);
  diagram.innerHTML = renderSvg(state.layout, vm.states);
  $("status-line").textContent = describeDecision(payload.decision);
  $("budget-gauge").textContent = budgetGauge(vm);
  $("transcript").innerHTML = vm.transcriptRows
    .map((row) => `<li>${row}</li>`)
    .join("");
  const active = vm.status === "active";
  ($("btn-yes") as HTMLButtonElement).disabled = !active || state.busy;
  ($("btn-no") as HTMLButtonElement).disabled = !active || state.busy;
  ($("btn-whatif") as HTMLButtonElement).disabled = !active || state.busy;
  if (vm.conclusion) {
    $("conclusion-text").textContent = vm.conclusion;
    $("conclusion-modal").classList.remove("hidden");
  }
}

async function startSession(state: AppState): Promise<void> {
  const k = Number.parseInt(($("k-input") as HTMLInputElement).value, 10);
  try {
    state.session = await state.client.createSession(state.poset, k);
  } catch (err) {
    showError(err instanceof Error ? err.message : String(err));
    return;
  }
  $("whatif-panel").classList.add("hidden");
  $("conclusion-modal").classList.add("hidden");
  repaint(state);
}

async function submit(state: AppState, positive: boolean): Promise<void> {
  const payload = state.session;
  if (!payload || payload.decision.kind !== "query" || state.busy) return;
  state.busy = true;
  try {
    state.session = await state.client.submitAnswer(
      payload.id,
      payload.decision.node,
      positive,
    );
    $("whatif-panel").classList.add("hidden");
  } catch (err) {
    if (err instanceof AdvisorApiError && err.status === 409) {
      showError("recommendation changed; refreshing the session");
      state.session = await state.client.getSession(payload.id);
    } else {
      showError(err instanceof Error ? err.message : String(err));
    }
  } finally {
    state.busy = false;
  }
  repaint(state);
}

async function toggleWhatif(state: AppState): Promise<void> {
  const payload = state.session;
  const panel = $("whatif-panel");
  if (!payload || payload.status !== "active") return;
  if (!panel.classList.contains("hidden")) {
    panel.classList.add("hidden");
    return;
  }
  try {
    const whatif = await state.client.whatif(payload.id);
    $("whatif-yes").textContent = describePreview("yes", whatif);
    $("whatif-no").textContent = describePreview("no", whatif);
    panel.classList.remove("hidden");
  } catch (err) {
    showError(err instanceof Error ? err.message : String(err));
  }
}

function loadPoset(state: AppState, poset: PosetJson): void {
  state.poset = poset;
  state.layout = layeredLayout(poset);
  state.session = null;
  repaint(state);
}

export function initApp(): void {
  const baseUrl =
    new URLSearchParams(window.location.search).get("service") ?? "";
  const state: AppState = {
    client: new AdvisorClient(baseUrl),
    poset: DEMO_POSET,
    layout: layeredLayout(DEMO_POSET),
    session: null,
    busy: false,
  };

  const select = $("fixture-select") as HTMLSelectElement;
  for (const name of Object.keys(FIXTURES)) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    if (name === "demo") option.selected = true;
    select.appendChild(option);
  }
  select.addEventListener("change", () => loadPoset(state, FIXTURES[select.value]));

  ($("file-input") as HTMLInputElement).addEventListener("change", async (event) => {
    const file = (event.target as HTMLInputElement).files?.[0];
    if (!file) return;
    try {
      const parsed = JSON.parse(await file.text());
      if (!Array.isArray(parsed.nodes) || !Array.isArray(parsed.covers)) {
        throw new Error("poset JSON needs 'nodes' and 'covers'");
      }
      loadPoset(state, parsed);
    } catch (err) {
      showError(err instanceof Error ? err.message : String(err));
    }
  });

  $("btn-start").addEventListener("click", () => void startSession(state));
  $("btn-yes").addEventListener("click", () => void submit(state, true));
  $("btn-no").addEventListener("click", () => void submit(state, false));
  $("btn-whatif").addEventListener("click", () => void toggleWhatif(state));
  $("btn-close-conclusion").addEventListener("click", () =>
    $("conclusion-modal").classList.add("hidden"),
  );

  repaint(state);
}

if (typeof document !== "undefined" && document.getElementById("diagram")) {
  initApp();
}
