/** Wire types for the clusterq exploration service. */

export interface MatrixPayload {
  rows: string[];
  cols: string[];
  frozen: string[];
  b: number[][];
}

export interface SeedPayload {
  matrix: MatrixPayload;
  variables: Record<string, string>;
  pretty: Record<string, string>;
  names: Record<string, string>;
  frozen: string[];
  mutable: string[];
}

export interface SessionInfo {
  id: string;
  seed: SeedPayload;
  history: string[];
}

export interface MutateResponse extends SessionInfo {
  changed: { vertex: string; variable: string; pretty: string };
}

export interface WhatifResponse {
  id: string;
  seed: SeedPayload;
  committed: boolean;
}

export interface VariableAnalysis {
  vertex: string;
  laurent: string;
  pretty: string;
  kind: string;
  f_polynomial: string;
  g_vector: Record<string, number>;
  sigma_w: Record<string, number>;
  w: Record<string, number>;
  character: string;
}

/** One directed arrow of the rendered quiver, multiplicity folded in. */
export interface RenderEdge {
  from: string;
  to: string;
  multiplicity: number;
}

export interface RenderNode {
  id: string;
  label: string;
  x: number;
  y: number;
  frozen: boolean;
  selected: boolean;
}

export interface RenderModel {
  nodes: RenderNode[];
  edges: RenderEdge[];
  variables: Record<string, string>;
}
