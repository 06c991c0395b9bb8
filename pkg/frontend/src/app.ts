/** View wiring: form state, submission, and side-by-side result panes. */

import {
  ApiError,
  RequestSuperseded,
  ServiceUnreachableError,
  SimplifyClient,
} from "./api.js";
import { clearError, renderError, renderResult } from "./view.js";
import type { Mode, SimplifyResponse } from "./types.js";

export interface AppHandles {
  form: HTMLFormElement;
  sentence: HTMLTextAreaElement;
  mode: HTMLSelectElement;
  phi: HTMLInputElement;
  phiValue: HTMLElement;
  model: HTMLInputElement;
  submit: HTMLButtonElement;
  error: HTMLElement;
  current: HTMLElement;
  previous: HTMLElement;
}

export function buildDom(root: HTMLElement): AppHandles {
  root.innerHTML = `
    <form id="simplify-form">
      <label>sentence
        <textarea id="sentence" rows="3" placeholder="one tokenized sentence"></textarea>
      </label>
      <div class="controls">
        <label>mode
          <select id="mode">
            <option value="we">word embedding</option>
            <option value="transformer">transformer</option>
          </select>
        </label>
        <label>bigram factor φ
          <input id="phi" type="range" min="0" max="1" step="0.05" value="0" />
          <output id="phi-value">0.00</output>
        </label>
        <label>model
          <input id="model" type="text" value="default" />
        </label>
        <button id="submit" type="submit" disabled>simplify</button>
      </div>
    </form>
    <div id="error-area"></div>
    <div class="panes">
      <section>
        <h2>result</h2>
        <div id="current-result"></div>
      </section>
      <section>
        <h2>previous result</h2>
        <div id="previous-result"></div>
      </section>
    </div>
  `;
  return {
    form: root.querySelector("#simplify-form") as HTMLFormElement,
    sentence: root.querySelector("#sentence") as HTMLTextAreaElement,
    mode: root.querySelector("#mode") as HTMLSelectElement,
    phi: root.querySelector("#phi") as HTMLInputElement,
    phiValue: root.querySelector("#phi-value") as HTMLElement,
    model: root.querySelector("#model") as HTMLInputElement,
    submit: root.querySelector("#submit") as HTMLButtonElement,
    error: root.querySelector("#error-area") as HTMLElement,
    current: root.querySelector("#current-result") as HTMLElement,
    previous: root.querySelector("#previous-result") as HTMLElement,
  };
}

export function initApp(root: HTMLElement, client: SimplifyClient): AppHandles {
  const handles = buildDom(root);
  let lastResponse: SimplifyResponse | null = null;

  const syncControls = () => {
    handles.submit.disabled = handles.sentence.value.trim() === "";
    handles.phiValue.textContent = Number(handles.phi.value).toFixed(2);
  };
  handles.sentence.addEventListener("input", syncControls);
  handles.phi.addEventListener("input", syncControls);
  syncControls();

  handles.form.addEventListener("submit", (event) => {
    event.preventDefault();
    const sentence = handles.sentence.value.trim();
    if (sentence === "") {
      return;
    }
    clearError(handles.error);

    void client
      .simplify({
        sentence,
        mode: handles.mode.value as Mode,
        phi: Number(handles.phi.value),
        model: handles.model.value || undefined,
      })
      .then((response) => {
        if (lastResponse !== null) {
          renderResult(handles.previous, lastResponse);
        }
        renderResult(handles.current, response);
        lastResponse = response;
      })
      .catch((error: unknown) => {
        if (error instanceof RequestSuperseded) {
          return; // a newer submission took over
        }
        if (error instanceof ApiError) {
          renderError(handles.error, `request rejected (${error.status}): ${error.message}`);
        } else if (error instanceof ServiceUnreachableError) {
          renderError(handles.error, "service unavailable");
        } else {
          renderError(handles.error, "unexpected error");
        }
      });
  });

  return handles;
}

export function bootstrap(): void {
  const root = document.getElementById("app");
  if (!root) {
    return;
  }
  const params = new URLSearchParams(window.location.search);
  const baseUrl = params.get("api") ?? "http://127.0.0.1:8000";
  initApp(root, new SimplifyClient(baseUrl));
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  bootstrap();
}
