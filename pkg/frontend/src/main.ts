import { Api } from "./api";
import {
  PanelActions,
  renderEditorPanel,
  renderRecommendationPanel,
  renderTemplatesPanel,
  renderVisualizationPanel,
} from "./panels";
import { renderInSandbox } from "./sandbox";
import { StudioStore } from "./store";
import "./style.css";

const api = new Api("");
const store = new StudioStore(api);

const templatesHost = document.getElementById("templates-panel")!;
const editorHost = document.getElementById("editor-panel")!;
const vizHost = document.getElementById("viz-panel")!;
const recsHost = document.getElementById("recs-panel")!;
const toastHost = document.getElementById("toast")!;

let vizTypes: string[] = [];
let lastSvg: string | null = null;
let renderQueued = false;

async function renderPreview(): Promise<void> {
  const { sessionId, source } = store.state;
  if (!sessionId || !source) return;
  if (renderQueued) return;
  renderQueued = true;
  store.noteRenderStarted();
  const outcome = await renderInSandbox(
    vizHost.querySelector(".stage")!,
    source,
    api.dataUrl(sessionId),
  );
  renderQueued = false;
  store.noteRenderResult(outcome.error);
  lastSvg = outcome.svg;
  // With no template selected the service cannot rank interactions; ask it
  // to classify the rendered output instead.
  if (outcome.svg && (store.state.viz === null || store.state.classificationStale)) {
    try {
      await store.classifyRender(outcome.svg);
    } catch (error) {
      store.showError(error);
    }
  }
}

function download(name: string, content: string): void {
  const anchor = document.createElement("a");
  anchor.href = URL.createObjectURL(new Blob([content]));
  anchor.download = name;
  anchor.click();
  URL.revokeObjectURL(anchor.href);
}

const actions: PanelActions = {
  uploadDataset(file) {
    file.text().then(async (text) => {
      try {
        const format = file.name.endsWith(".json") ? "json" : "csv";
        await store.createSession(file.name.replace(/\.(csv|json)$/, ""), format, text);
      } catch (error) {
        store.showError(error);
      }
    });
  },
  chooseTemplate(viz) {
    store
      .selectTemplate(viz)
      .then(renderPreview)
      .catch((error) => store.showError(error));
  },
  acceptRecommendation(interaction) {
    store
      .accept(interaction)
      .then(renderPreview)
      .catch((error) => store.showError(error));
  },
  undo() {
    store
      .undo()
      .then(renderPreview)
      .catch((error) => store.showError(error));
  },
  exportFiles() {
    store
      .exportFiles(lastSvg ?? undefined)
      .then((files) => files.forEach((f) => download(f.name, f.content)))
      .catch((error) => store.showError(error));
  },
  beginEdit() {
    // handled inside the editor panel
  },
  commitEdit(source) {
    store
      .editSource(source)
      .then(renderPreview)
      .catch((error) => store.showError(error));
  },
};

function renderAll(): void {
  const state = store.state;
  renderTemplatesPanel(templatesHost, vizTypes, state, actions);
  renderEditorPanel(editorHost, state, actions);
  renderVisualizationPanel(vizHost, state);
  renderRecommendationPanel(recsHost, state, actions);
  toastHost.textContent = state.toast ?? "";
}

store.subscribe(renderAll);

api
  .meta()
  .then((meta) => {
    vizTypes = meta.viz_types;
    renderAll();
  })
  .catch(() => {
    toastHost.textContent = "service unreachable; start it with: vizsmith serve";
  });

renderAll();
