// Editor view state and the actions behind the four panels. All chart logic
// (fitting, ranking, splicing) happens on the service; this store only moves
// state between the API and the panels, so the displayed source is always the
// service's source byte for byte.

import {
  Api,
  ApiError,
  ExportedFile,
  Recommendation,
  SessionInfo,
} from "./api";

export type RenderStatus = "idle" | "rendering" | "ok" | "error";

export interface EditorViewState {
  sessionId: string | null;
  datasetName: string | null;
  attributes: { name: string; type: string }[];
  source: string;
  viz: string | null;
  state: string[];
  highlights: [number, number][];
  summary: string | null;
  recommendations: Recommendation[];
  canUndo: boolean;
  renderStatus: RenderStatus;
  renderError: string | null;
  toast: string | null;
  classificationStale: boolean;
}

function initialState(): EditorViewState {
  return {
    sessionId: null,
    datasetName: null,
    attributes: [],
    source: "",
    viz: null,
    state: [],
    highlights: [],
    summary: null,
    recommendations: [],
    canUndo: false,
    renderStatus: "idle",
    renderError: null,
    toast: null,
    classificationStale: false,
  };
}

type Listener = (state: EditorViewState) => void;

export class StudioStore {
  private view = initialState();
  private listeners: Listener[] = [];
  // True while a shown recommendation list is still unanswered; a non-reaction
  // action (edit, template switch, export) turns it into one ignore event.
  private pendingIgnore = false;

  constructor(private api: Api) {}

  get state(): EditorViewState {
    return this.view;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private update(patch: Partial<EditorViewState>): void {
    this.view = { ...this.view, ...patch };
    for (const listener of this.listeners) {
      listener(this.view);
    }
  }

  private async flushIgnore(): Promise<void> {
    if (this.pendingIgnore && this.view.sessionId) {
      this.pendingIgnore = false;
      try {
        await this.api.ignore(this.view.sessionId);
      } catch {
        // feedback loss is not fatal to the editing session
      }
    }
    this.pendingIgnore = false;
  }

  private applySession(info: SessionInfo): void {
    this.update({
      sessionId: info.id,
      datasetName: info.dataset_name,
      attributes: info.attributes.map((a) => ({ name: a.name, type: a.type })),
      source: info.source ?? "",
      viz: info.viz,
      state: info.state,
      canUndo: info.can_undo,
      classificationStale: info.classification_stale,
    });
  }

  async createSession(name: string, format: "csv" | "json", data: string): Promise<void> {
    const info = await this.api.createSession(name, format, data);
    this.view = initialState();
    this.applySession(info);
  }

  async selectTemplate(viz: string): Promise<void> {
    const id = this.requireSession();
    await this.flushIgnore();
    const fitted = await this.api.selectTemplate(id, viz);
    this.update({
      source: fitted.source,
      viz: fitted.viz,
      state: [],
      highlights: [],
      summary: null,
      canUndo: false,
      toast: null,
    });
    await this.refreshRecommendations();
  }

  async refreshRecommendations(): Promise<void> {
    const id = this.requireSession();
    try {
      const list = await this.api.recommendations(id);
      this.pendingIgnore = list.recommendations.length > 0;
      this.update({ recommendations: list.recommendations });
    } catch (error) {
      if (error instanceof ApiError && error.code === "UnknownVizType") {
        this.update({ recommendations: [] });
        return;
      }
      throw error;
    }
  }

  async accept(interaction: string): Promise<void> {
    const id = this.requireSession();
    this.pendingIgnore = false;
    const result = await this.api.accept(id, interaction);
    this.update({
      source: result.source,
      state: result.state,
      highlights: result.inserted_ranges,
      summary: result.summary,
      canUndo: true,
      toast: null,
    });
    await this.refreshRecommendations();
  }

  async undo(): Promise<void> {
    const id = this.requireSession();
    this.pendingIgnore = false;
    const result = await this.api.undo(id);
    const info = await this.api.getSession(id);
    this.update({
      source: result.source,
      state: result.state,
      highlights: [],
      summary: null,
      canUndo: info.can_undo,
    });
    await this.refreshRecommendations();
  }

  async editSource(source: string): Promise<void> {
    const id = this.requireSession();
    await this.flushIgnore();
    const info = await this.api.setSource(id, source);
    // A user edit invalidates highlight offsets into the previous source.
    this.update({
      source: info.source ?? "",
      viz: info.viz,
      state: info.state,
      highlights: [],
      summary: null,
      canUndo: info.can_undo,
      classificationStale: info.classification_stale,
    });
  }

  async classifyRender(svg: string): Promise<string> {
    const id = this.requireSession();
    const verdict = await this.api.classify(id, svg);
    this.update({ viz: verdict.viz === "unknown" ? null : verdict.viz, classificationStale: false });
    if (verdict.viz !== "unknown") {
      await this.refreshRecommendations();
    }
    return verdict.viz;
  }

  async exportFiles(svg?: string): Promise<ExportedFile[]> {
    const id = this.requireSession();
    await this.flushIgnore();
    const result = await this.api.exportFiles(id, svg);
    this.update({ toast: `exported ${result.files.map((f) => f.name).join(", ")}` });
    return result.files;
  }

  noteRenderStarted(): void {
    this.update({ renderStatus: "rendering", renderError: null });
  }

  noteRenderResult(error: string | null): void {
    this.update({
      renderStatus: error === null ? "ok" : "error",
      renderError: error,
    });
  }

  showError(error: unknown): void {
    const message =
      error instanceof ApiError ? `${error.code}: ${error.message}` : String(error);
    this.update({ toast: message });
  }

  private requireSession(): string {
    if (!this.view.sessionId) {
      throw new Error("no active session");
    }
    return this.view.sessionId;
  }
}
