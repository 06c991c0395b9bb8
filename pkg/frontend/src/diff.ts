/** Positional diff segments derived from the trace.
 *
 * Token-count preservation makes positional diffing exact, so highlights
 * come straight from trace positions rather than text diffing.  Joining
 * the segment texts with single spaces reproduces the service's
 * "simplified" string verbatim.
 */

import type { SimplifyResponse, TraceEntry } from "./types.js";

export type TokenKind = "plain" | "replaced" | "article";

export interface TokenSegment {
  text: string;
  kind: TokenKind;
  trace?: TraceEntry;
}

export function tokenHighlights(response: SimplifyResponse): TokenSegment[] {
  const tokens = response.simplified.split(" ");
  const replacedAt = new Map<number, TraceEntry>();
  for (const entry of response.trace) {
    if (entry.chosen !== null) {
      replacedAt.set(entry.position, entry);
    }
  }
  return tokens.map((text, index) => {
    const trace = replacedAt.get(index);
    if (trace) {
      return { text, kind: "replaced" as const, trace };
    }
    const next = replacedAt.get(index + 1);
    if (next && next.article_fixed) {
      return { text, kind: "article" as const, trace: next };
    }
    return { text, kind: "plain" as const };
  });
}

export function joinSegments(segments: TokenSegment[]): string {
  return segments.map((segment) => segment.text).join(" ");
}
