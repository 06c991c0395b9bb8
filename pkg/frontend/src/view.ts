/** DOM rendering for results, traces, and inline errors. */

import { tokenHighlights } from "./diff.js";
import type { SimplifyResponse, TraceEntry } from "./types.js";

export function renderResult(container: HTMLElement, response: SimplifyResponse): void {
  container.textContent = "";
  const sentence = document.createElement("p");
  sentence.className = "result-sentence";
  const segments = tokenHighlights(response);
  segments.forEach((segment, index) => {
    const span = document.createElement("span");
    span.textContent = segment.text;
    span.className = `token ${segment.kind}`;
    span.dataset.position = String(index);
    if (segment.kind === "replaced" && segment.trace) {
      span.title = `replaced ${segment.trace.original}`;
    }
    if (segment.kind === "article") {
      span.title = "article re-agreed with the replacement";
    }
    sentence.appendChild(span);
    if (index < segments.length - 1) {
      sentence.appendChild(document.createTextNode(" "));
    }
  });
  container.appendChild(sentence);

  const score = document.createElement("p");
  score.className = "pp-score";
  score.textContent = `combined perplexity: ${response.pp_score.toFixed(3)}`;
  container.appendChild(score);

  container.appendChild(renderTraceList(response.trace));
}

export function renderTraceList(trace: TraceEntry[]): HTMLElement {
  const list = document.createElement("div");
  list.className = "trace-list";
  for (const entry of trace) {
    const details = document.createElement("details");
    details.className = "trace-entry";
    const summary = document.createElement("summary");
    summary.textContent =
      entry.chosen === null
        ? `${entry.original} (position ${entry.position}): kept`
        : `${entry.original} (position ${entry.position}) → ${entry.chosen}`;
    details.appendChild(summary);

    const body = document.createElement("dl");
    const rows: [string, string][] = [
      ["complex probability", entry.probabilities[1].toFixed(3)],
      ["synonyms fetched", entry.fetched.join(", ") || "none"],
      ["after complexity filter", entry.complexity_filtered.join(", ") || "none"],
      ["survivors", entry.survivors.join(", ") || "none"],
      [
        "candidate scores",
        entry.candidate_scores.map(([text, value]) => `${value.toFixed(4)} | ${text}`).join("\n") ||
          "none",
      ],
    ];
    if (entry.cosine_filter_skipped) {
      rows.push(["cosine filter", "skipped (no vector for the target word)"]);
    }
    if (entry.error) {
      rows.push(["error", entry.error]);
    }
    for (const [label, value] of rows) {
      const dt = document.createElement("dt");
      dt.textContent = label;
      const dd = document.createElement("dd");
      dd.textContent = value;
      body.appendChild(dt);
      body.appendChild(dd);
    }
    details.appendChild(body);
    list.appendChild(details);
  }
  return list;
}

export function renderError(container: HTMLElement, message: string): void {
  container.textContent = "";
  const banner = document.createElement("p");
  banner.className = "error-banner";
  banner.setAttribute("role", "alert");
  banner.textContent = message;
  container.appendChild(banner);
}

export function clearError(container: HTMLElement): void {
  container.textContent = "";
}
