/** Typed client for the palette service. All color math lives server-side;
 * every hex string shown in the UI originates from one of these calls. */

export type PaletteFamily = "qualitative" | "sequential" | "diverging" | "divergingx";
export type CvdKind = "deutan" | "protan" | "tritan";

export const PARAM_KEYS = [
  "h1", "h2", "h3", "c1", "c2", "c3", "cmax", "cmax1", "cmax2",
  "l1", "l2", "l3", "p1", "p2", "p3", "p4",
] as const;
export type ParamKey = (typeof PARAM_KEYS)[number];

export interface PaletteInfo {
  name: string;
  type: string;
  source: "builtin" | "registered";
  params: Partial<Record<ParamKey, number>> & { fixup?: boolean };
}

export interface Trace {
  n: number;
  colors: string[];
  hue: number[];
  chroma: number[];
  luminance: number[];
  fixup_fired: boolean[];
  degenerate_hue: boolean;
}

export interface GenerateResponse {
  colors: string[];
  clamped: boolean[];
  trace: Trace | null;
}

export interface PlaneGrid {
  mode: "hue-chroma" | "luminance-chroma";
  x_label: string;
  y_label: string;
  x_values: number[];
  y_values: number[];
  cells: (string | null)[][];
  fixed: Record<string, number>;
  snapped: SnappedColor | null;
}

export interface SnappedColor {
  h: number;
  c: number;
  l: number;
  max_chroma: number;
  hex: string;
}

export interface AnalyzeResponse {
  trace: Trace;
  type: { type: string; low_confidence: boolean } | null;
  projection: unknown;
}

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

async function request<T>(base: string, path: string, body?: unknown): Promise<T> {
  const resp = await fetch(base + path, body === undefined ? {} : {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  const payload = await resp.json();
  if (!resp.ok) {
    const detail = typeof payload.error === "string"
      ? payload.error : JSON.stringify(payload.error);
    throw new ApiError(detail, resp.status);
  }
  return payload as T;
}

export class Client {
  constructor(readonly base: string = "") {}

  palettes(type?: string): Promise<{ palettes: PaletteInfo[] }> {
    const query = type ? `?type=${encodeURIComponent(type)}` : "";
    return request(this.base, `/palettes${query}`);
  }

  generate(body: Record<string, unknown>): Promise<GenerateResponse> {
    return request(this.base, "/generate", body);
  }

  cvd(colors: string[], kind: CvdKind, severity: number): Promise<{ colors: string[] }> {
    return request(this.base, "/cvd", { colors, kind, severity });
  }

  analyze(colors: string[]): Promise<AnalyzeResponse> {
    return request(this.base, "/analyze", { colors });
  }

  pick(body: Record<string, unknown>): Promise<PlaneGrid> {
    return request(this.base, "/pick", body);
  }

  register(body: Record<string, unknown>): Promise<{ ok: boolean }> {
    return request(this.base, "/register", body);
  }
}
