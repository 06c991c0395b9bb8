/** Wire types for the simplification service (trace_version 1). */

export interface TraceEntry {
  position: number;
  original: string;
  probabilities: [number, number];
  fetched: string[];
  complexity_filtered: string[];
  survivors: string[];
  chosen: string | null;
  candidate_scores: [string, number][];
  article_fixed: boolean;
  cosine_filter_skipped: boolean;
  error: string | null;
}

export interface SimplifyResponse {
  simplified: string;
  trace: TraceEntry[];
  pp_score: number;
  trace_version: string;
}

export type Mode = "we" | "transformer";

export interface SimplifyRequest {
  sentence: string;
  mode: Mode;
  phi: number;
  model?: string;
}
