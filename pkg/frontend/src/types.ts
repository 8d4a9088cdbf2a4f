// Wire types mirroring the advisor service's JSON payloads.

export interface PosetJson {
  nodes: number[];
  covers: [number, number][]; // [upper, lower]: upper covers lower
  labels?: Record<string, string>;
}

export interface QueryDecision {
  kind: "query";
  node: number;
  height: number;
  branch: string;
}

export interface ConcludeDecision {
  kind: "conclude";
  result: IdealJson;
}

export type Decision = QueryDecision | ConcludeDecision;

export interface IdealJson {
  kind: "empty" | "principal";
  generator?: number;
}

export interface TranscriptEntry {
  node: number;
  positive: boolean;
  height: number;
  budget: number;
  size: number;
  derived?: boolean;
}

export interface TranscriptJson {
  k0: number;
  entries: TranscriptEntry[];
  result: IdealJson | null;
}

export interface SessionPayload {
  id: string;
  status: "active" | "concluded";
  k0: number;
  budget: number;
  alive: number[];
  last_positive: number | null;
  decision: Decision;
  transcript: TranscriptJson;
  created: string;
  updated: string;
}

export interface Preview {
  alive: number[];
  height: number;
  budget: number;
  decision: Decision;
}

export interface WhatIf {
  yes: Preview;
  no: Preview;
}

export interface ApiError {
  error: string;
  message: string;
}
