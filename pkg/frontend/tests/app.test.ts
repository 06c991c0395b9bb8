import { beforeEach, describe, expect, it } from "vitest";

import { SimplifyClient } from "../src/api.js";
import { initApp } from "../src/app.js";
import type { AppHandles } from "../src/app.js";
import type { SimplifyResponse } from "../src/types.js";
import table5 from "./fixtures/table5_response.json";

const TABLE5_SENTENCE = "oregano is an indispensable ingredient in greek cuisine .";
const response = table5 as unknown as SimplifyResponse;

function clientReturning(
  behavior: () => Promise<SimplifyResponse>,
): SimplifyClient {
  const fetchImpl = async () => {
    const body = await behavior();
    return new Response(JSON.stringify(body), {
      status: 200,
      headers: { "Content-Type": "application/json" },
    });
  };
  return new SimplifyClient("http://svc", fetchImpl);
}

function downClient(): SimplifyClient {
  return new SimplifyClient("http://svc", async () => {
    throw new TypeError("connection refused");
  });
}

function submit(handles: AppHandles): void {
  handles.form.dispatchEvent(new Event("submit", { cancelable: true }));
}

async function settle(): Promise<void> {
  // let pending promise callbacks run
  await new Promise((resolve) => setTimeout(resolve, 0));
  await new Promise((resolve) => setTimeout(resolve, 0));
}

describe("initApp", () => {
  let root: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = '<div id="app"></div>';
    root = document.getElementById("app") as HTMLElement;
  });

  it("disables submit for empty input", () => {
    const handles = initApp(root, clientReturning(async () => response));
    expect(handles.submit.disabled).toBe(true);
    handles.sentence.value = "some words";
    handles.sentence.dispatchEvent(new Event("input"));
    expect(handles.submit.disabled).toBe(false);
    handles.sentence.value = "   ";
    handles.sentence.dispatchEvent(new Event("input"));
    expect(handles.submit.disabled).toBe(true);
  });

  it("renders highlights exactly at trace-replaced positions", async () => {
    const handles = initApp(root, clientReturning(async () => response));
    handles.sentence.value = TABLE5_SENTENCE;
    handles.sentence.dispatchEvent(new Event("input"));
    submit(handles);
    await settle();

    const spans = handles.current.querySelectorAll<HTMLElement>(".result-sentence .token");
    expect(spans.length).toBe(response.simplified.split(" ").length);

    const highlighted = Array.from(spans)
      .filter((span) => span.classList.contains("replaced"))
      .map((span) => Number(span.dataset.position));
    const expected = response.trace
      .filter((entry) => entry.chosen !== null)
      .map((entry) => entry.position);
    expect(highlighted).toEqual(expected);

    const articles = Array.from(spans)
      .filter((span) => span.classList.contains("article"))
      .map((span) => Number(span.dataset.position));
    expect(articles).toEqual([2]); // "an" -> "a" before the replaced word
  });

  it("renders the service's simplified text verbatim", async () => {
    const handles = initApp(root, clientReturning(async () => response));
    handles.sentence.value = TABLE5_SENTENCE;
    submit(handles);
    await settle();

    const sentence = handles.current.querySelector(".result-sentence") as HTMLElement;
    expect(sentence.textContent).toBe(response.simplified);
  });

  it("shows trace details per replaced word", async () => {
    const handles = initApp(root, clientReturning(async () => response));
    handles.sentence.value = TABLE5_SENTENCE;
    submit(handles);
    await settle();

    const entries = handles.current.querySelectorAll(".trace-entry");
    expect(entries.length).toBe(response.trace.length);
    const text = (entries[1] as HTMLElement).textContent ?? "";
    expect(text).toContain("indispensable");
    expect(text).toContain("necessary");
  });

  it("keeps the previous result intact across a phi change", async () => {
    let phiSeen = 0;
    const second: SimplifyResponse = {
      ...response,
      simplified: "oregano is a vital ingredient in greek cuisine .",
      trace: [response.trace[1] as SimplifyResponse["trace"][number]],
    };
    const client = clientReturning(async () => (phiSeen++ === 0 ? response : second));
    const handles = initApp(root, client);
    handles.sentence.value = TABLE5_SENTENCE;

    submit(handles);
    await settle();
    expect(handles.previous.textContent).toBe("");

    handles.phi.value = "0.5";
    handles.phi.dispatchEvent(new Event("input"));
    submit(handles);
    await settle();

    const previousSentence = handles.previous.querySelector(".result-sentence") as HTMLElement;
    expect(previousSentence.textContent).toBe(response.simplified);
    const currentSentence = handles.current.querySelector(".result-sentence") as HTMLElement;
    expect(currentSentence.textContent).toBe(second.simplified);
  });

  it("service down shows an inline error and preserves form state", async () => {
    const handles = initApp(root, downClient());
    handles.sentence.value = TABLE5_SENTENCE;
    handles.phi.value = "0.25";
    handles.mode.value = "transformer";
    submit(handles);
    await settle();

    const banner = handles.error.querySelector(".error-banner") as HTMLElement;
    expect(banner.textContent).toBe("service unavailable");
    expect(handles.sentence.value).toBe(TABLE5_SENTENCE);
    expect(handles.phi.value).toBe("0.25");
    expect(handles.mode.value).toBe("transformer");
    expect(handles.current.textContent).toBe("");
  });

  it("api errors surface inline without blocking later submissions", async () => {
    let failFirst = true;
    const fetchImpl = async () => {
      if (failFirst) {
        failFirst = false;
        return new Response(JSON.stringify({ error: "bad phi" }), { status: 400 });
      }
      return new Response(JSON.stringify(response), { status: 200 });
    };
    const handles = initApp(root, new SimplifyClient("http://svc", fetchImpl));
    handles.sentence.value = TABLE5_SENTENCE;

    submit(handles);
    await settle();
    expect(handles.error.textContent).toContain("bad phi");

    submit(handles);
    await settle();
    expect(handles.error.textContent).toBe("");
    const sentence = handles.current.querySelector(".result-sentence") as HTMLElement;
    expect(sentence.textContent).toBe(response.simplified);
  });
});
