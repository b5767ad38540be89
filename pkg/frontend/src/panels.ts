// DOM for the four studio panels: templates, editor, visualization,
// recommendations. Pure rendering over the store's state; every user action
// maps one-to-one onto a store action (and so onto one API call).

import { EditorViewState } from "./store";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;");
}

// Source text with <mark> around each inserted range, for the editor pane.
export function highlightedSource(source: string, ranges: [number, number][]): string {
  if (ranges.length === 0) {
    return escapeHtml(source);
  }
  const ordered = [...ranges].sort((a, b) => a[0] - b[0]);
  const parts: string[] = [];
  let cursor = 0;
  for (const [start, end] of ordered) {
    parts.push(escapeHtml(source.slice(cursor, start)));
    parts.push(`<mark>${escapeHtml(source.slice(start, end))}</mark>`);
    cursor = end;
  }
  parts.push(escapeHtml(source.slice(cursor)));
  return parts.join("");
}

export interface PanelActions {
  uploadDataset(file: File): void;
  chooseTemplate(viz: string): void;
  acceptRecommendation(interaction: string): void;
  undo(): void;
  exportFiles(): void;
  beginEdit(): void;
  commitEdit(source: string): void;
}

export function renderTemplatesPanel(
  host: HTMLElement,
  vizTypes: string[],
  state: EditorViewState,
  actions: PanelActions,
): void {
  host.innerHTML = `
    <h2>Templates</h2>
    <label class="upload">Dataset <input type="file" accept=".csv,.json"></label>
    <div class="dataset-info">${
      state.datasetName
        ? `${escapeHtml(state.datasetName)}: ${state.attributes
            .map((a) => `${escapeHtml(a.name)} (${a.type})`)
            .join(", ")}`
        : "no dataset loaded"
    }</div>
    <div class="template-list"></div>
  `;
  const input = host.querySelector("input")!;
  input.addEventListener("change", () => {
    const file = input.files?.[0];
    if (file) actions.uploadDataset(file);
  });
  const list = host.querySelector(".template-list")!;
  for (const viz of vizTypes) {
    const button = document.createElement("button");
    button.textContent = viz;
    button.disabled = state.sessionId === null;
    button.classList.toggle("active", state.viz === viz);
    button.addEventListener("click", () => actions.chooseTemplate(viz));
    list.appendChild(button);
  }
}

export function renderEditorPanel(
  host: HTMLElement,
  state: EditorViewState,
  actions: PanelActions,
): void {
  host.innerHTML = `
    <h2>Editor</h2>
    <div class="editor-toolbar">
      <button class="undo" ${state.canUndo ? "" : "disabled"}>undo</button>
      <button class="export" ${state.sessionId ? "" : "disabled"}>export</button>
      <button class="edit" ${state.sessionId ? "" : "disabled"}>edit</button>
    </div>
    ${state.summary ? `<div class="summary">${escapeHtml(state.summary)}</div>` : ""}
    <pre class="source"><code>${highlightedSource(state.source, state.highlights)}</code></pre>
  `;
  host.querySelector<HTMLButtonElement>(".undo")!.addEventListener("click", () => actions.undo());
  host.querySelector<HTMLButtonElement>(".export")!.addEventListener("click", () => actions.exportFiles());
  host.querySelector<HTMLButtonElement>(".edit")!.addEventListener("click", () => {
    const textarea = document.createElement("textarea");
    textarea.value = state.source;
    const pre = host.querySelector(".source")!;
    pre.replaceWith(textarea);
    const commit = document.createElement("button");
    commit.textContent = "apply";
    commit.className = "apply";
    textarea.after(commit);
    commit.addEventListener("click", () => actions.commitEdit(textarea.value));
  });
  const mark = host.querySelector("mark");
  mark?.scrollIntoView?.({ block: "center" });
}

export function renderVisualizationPanel(host: HTMLElement, state: EditorViewState): void {
  let banner = "";
  if (state.renderStatus === "error" && state.renderError) {
    banner = `<div class="render-error">${escapeHtml(state.renderError)}</div>`;
  } else if (state.renderStatus === "rendering") {
    banner = `<div class="render-pending">rendering…</div>`;
  }
  host.querySelector(".banner")!.innerHTML = banner;
}

export function renderRecommendationPanel(
  host: HTMLElement,
  state: EditorViewState,
  actions: PanelActions,
): void {
  host.innerHTML = `<h2>Recommended interactions</h2><ol class="recs"></ol>`;
  const list = host.querySelector(".recs")!;
  for (const rec of state.recommendations) {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.textContent = rec.interaction;
    button.title = rec.summary;
    button.addEventListener("click", () => actions.acceptRecommendation(rec.interaction));
    item.appendChild(button);
    list.appendChild(item);
  }
  if (state.recommendations.length === 0) {
    list.innerHTML = "<li class='empty'>nothing to suggest</li>";
  }
}
