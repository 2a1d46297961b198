/** DOM glue: wire the store to clicks, hovers and the inspector panel. */

import { FetchTransport, HttpError, ServiceClient } from "./api.js";
import { renderSvg } from "./render.js";
import { ViewState } from "./state.js";

const state = new ViewState(
  new ServiceClient(new FetchTransport(window.location.origin.replace(/:\d+$/, ":8472"))),
);

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function toast(message: string): void {
  const box = el("toast");
  box.textContent = message;
  box.classList.add("visible");
  setTimeout(() => box.classList.remove("visible"), 2500);
}

function redraw(): void {
  el("canvas").innerHTML = renderSvg(state.model(), state.ghostModel());
  el("history").textContent =
    state.history.length > 0 ? state.history.join(" . ") : "(initial seed)";
  const panel = el("inspector");
  const info = state.inspector;
  if (!info) {
    panel.innerHTML = "<em>click a vertex, then “inspect”</em>";
  } else {
    panel.innerHTML = [
      `<h3>vertex ${info.vertex}</h3>`,
      `<dl>`,
      `<dt>variable</dt><dd><code>${info.pretty}</code></dd>`,
      `<dt>Laurent form</dt><dd><code>${info.laurent}</code></dd>`,
      `<dt>F-polynomial</dt><dd><code>${info.f_polynomial}</code></dd>`,
      `<dt>g-vector</dt><dd><code>${JSON.stringify(info.g_vector)}</code></dd>`,
      `<dt>character</dt><dd><code>${info.character}</code></dd>`,
      `</dl>`,
    ].join("");
  }
  hookVertices();
}

function hookVertices(): void {
  for (const g of Array.from(document.querySelectorAll("#canvas g.node"))) {
    const vertex = (g as SVGGElement).dataset.vertex!;
    const frozen = g.classList.contains("frozen");
    if (frozen) continue; // visually locked, not clickable
    g.addEventListener("click", () => {
      state
        .clickMutate(vertex)
        .then(() => state.inspect(vertex))
        .then(redraw)
        .catch(showError);
    });
    g.addEventListener("mouseenter", () => {
      state.hoverWhatif(vertex).then(redraw).catch(showError);
    });
    g.addEventListener("mouseleave", () => {
      state.clearWhatif();
      redraw();
    });
  }
}

function showError(error: unknown): void {
  toast(error instanceof HttpError ? error.message : String(error));
}

function boot(): void {
  el("start").addEventListener("click", () => {
    const graph = (el("graph") as HTMLSelectElement).value;
    state.start(graph).then(redraw).catch(showError);
  });
  el("undo").addEventListener("click", () => {
    state.undo().then(redraw).catch(showError);
  });
  el("redo").addEventListener("click", () => {
    state.redo().then(redraw).catch(showError);
  });
  state.start("a3").then(redraw).catch(showError);
}

document.addEventListener("DOMContentLoaded", boot);
