// @vitest-environment happy-dom
import { describe, expect, it, vi } from "vitest";

import {
  PanelActions,
  highlightedSource,
  renderEditorPanel,
  renderRecommendationPanel,
} from "../src/panels";
import type { EditorViewState } from "../src/store";

function viewState(overrides: Partial<EditorViewState> = {}): EditorViewState {
  return {
    sessionId: "s1",
    datasetName: "iris",
    attributes: [],
    source: "const a = 1;\nconst b = 2;\n",
    viz: "scatterplot",
    state: [],
    highlights: [],
    summary: null,
    recommendations: [],
    canUndo: false,
    renderStatus: "idle",
    renderError: null,
    toast: null,
    classificationStale: false,
    ...overrides,
  };
}

function noopActions(overrides: Partial<PanelActions> = {}): PanelActions {
  return {
    uploadDataset: vi.fn(),
    chooseTemplate: vi.fn(),
    acceptRecommendation: vi.fn(),
    undo: vi.fn(),
    exportFiles: vi.fn(),
    beginEdit: vi.fn(),
    commitEdit: vi.fn(),
    ...overrides,
  };
}

describe("highlightedSource", () => {
  it("wraps inserted ranges in mark tags", () => {
    const html = highlightedSource("abcdef", [[2, 4]]);
    expect(html).toBe("ab<mark>cd</mark>ef");
  });

  it("escapes html in and out of ranges", () => {
    const html = highlightedSource("<a> & <b>", [[0, 3]]);
    expect(html).toBe("<mark>&lt;a&gt;</mark> &amp; &lt;b&gt;");
  });

  it("handles multiple ranges in order", () => {
    const html = highlightedSource("0123456789", [[6, 8], [1, 3]]);
    expect(html).toBe("0<mark>12</mark>345<mark>67</mark>89");
  });
});

describe("editor panel", () => {
  it("renders highlighted source and the augmentation summary", () => {
    const host = document.createElement("div");
    renderEditorPanel(
      host,
      viewState({
        source: "abcdef",
        highlights: [[2, 4]],
        summary: "adds hover",
        canUndo: true,
      }),
      noopActions(),
    );
    expect(host.querySelector("mark")?.textContent).toBe("cd");
    expect(host.querySelector(".summary")?.textContent).toBe("adds hover");
    expect(host.querySelector<HTMLButtonElement>(".undo")?.disabled).toBe(false);
  });

  it("undo button maps to the undo action", () => {
    const host = document.createElement("div");
    const actions = noopActions();
    renderEditorPanel(host, viewState({ canUndo: true }), actions);
    host.querySelector<HTMLButtonElement>(".undo")!.click();
    expect(actions.undo).toHaveBeenCalledOnce();
  });
});

describe("recommendation panel", () => {
  it("renders ranked buttons that accept on click", () => {
    const host = document.createElement("div");
    const actions = noopActions();
    renderRecommendationPanel(
      host,
      viewState({
        recommendations: [
          { interaction: "hover", score: 0.7, rank: 1, summary: "s1" },
          { interaction: "zoom", score: 0.1, rank: 2, summary: "s2" },
        ],
      }),
      actions,
    );
    const buttons = [...host.querySelectorAll("button")];
    expect(buttons.map((b) => b.textContent)).toEqual(["hover", "zoom"]);
    buttons[0].click();
    expect(actions.acceptRecommendation).toHaveBeenCalledWith("hover");
  });
});
