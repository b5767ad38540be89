// Typed client for the /v1 session API. Every studio action that reaches the
// engine goes through one of these calls; the client never makes decisions.

export interface AttributeInfo {
  name: string;
  type: string;
  distinct_count: number;
  null_count: number;
}

export interface SessionInfo {
  id: string;
  dataset_name: string;
  attributes: AttributeInfo[];
  row_count: number;
  viz: string | null;
  state: string[];
  source: string | null;
  can_undo: boolean;
  classification_stale: boolean;
}

export interface FitResult {
  source: string;
  viz: string;
  binding: Record<string, string>;
  scales: Record<string, string>;
  dropped_rows: number;
}

export interface Recommendation {
  interaction: string;
  score: number;
  rank: number;
  summary: string;
}

export interface RecommendationList {
  viz: string;
  state: string[];
  recommendations: Recommendation[];
}

export interface AugmentResult {
  source: string;
  inserted_ranges: [number, number][];
  summary: string;
  state: string[];
}

export interface UndoResult {
  source: string;
  state: string[];
}

export interface ClassifyResult {
  viz: string;
  confidence: number;
}

export interface ExportedFile {
  name: string;
  content: string;
}

export interface MetaInfo {
  version: string;
  viz_types: string[];
  interactions: string[];
}

export class ApiError extends Error {
  constructor(
    public code: string,
    message: string,
    public status: number,
    public detail: Record<string, unknown> = {},
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<never> {
  let code = `HTTP${response.status}`;
  let message = response.statusText;
  let detail: Record<string, unknown> = {};
  try {
    const body = await response.json();
    if (body && typeof body.code === "string") {
      code = body.code;
      message = body.message ?? message;
      detail = body.detail ?? {};
    }
  } catch {
    // non-JSON error body; keep the HTTP status
  }
  throw new ApiError(code, message, response.status, detail);
}

export class Api {
  constructor(
    private baseUrl: string = "",
    private fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      await parseError(response);
    }
    return (await response.json()) as T;
  }

  meta(): Promise<MetaInfo> {
    return this.request("GET", "/v1/meta");
  }

  createSession(name: string, format: "csv" | "json", data: string): Promise<SessionInfo> {
    return this.request("POST", "/v1/sessions", { name, format, data });
  }

  getSession(id: string): Promise<SessionInfo> {
    return this.request("GET", `/v1/sessions/${id}`);
  }

  selectTemplate(id: string, viz: string): Promise<FitResult> {
    return this.request("POST", `/v1/sessions/${id}/template`, { viz });
  }

  recommendations(id: string): Promise<RecommendationList> {
    return this.request("GET", `/v1/sessions/${id}/recommendations`);
  }

  accept(id: string, interaction: string): Promise<AugmentResult> {
    return this.request("POST", `/v1/sessions/${id}/accept`, { interaction });
  }

  undo(id: string): Promise<UndoResult> {
    return this.request("POST", `/v1/sessions/${id}/undo`);
  }

  ignore(id: string): Promise<void> {
    return this.request("POST", `/v1/sessions/${id}/feedback`, { reaction: "ignore" });
  }

  setSource(id: string, source: string): Promise<SessionInfo> {
    return this.request("PUT", `/v1/sessions/${id}/source`, { source });
  }

  classify(id: string, svg: string): Promise<ClassifyResult> {
    return this.request("POST", `/v1/sessions/${id}/classify`, { svg });
  }

  exportFiles(id: string, svg?: string): Promise<{ files: ExportedFile[] }> {
    return this.request("POST", `/v1/sessions/${id}/export`, svg ? { svg } : {});
  }

  dataUrl(id: string): string {
    return `${this.baseUrl}/v1/sessions/${id}/data`;
  }
}
