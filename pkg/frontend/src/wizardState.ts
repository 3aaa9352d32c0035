/** Wizard state, its URL round trip, and the /generate request it implies.
 *
 * The URL query string is the sharable source of truth: serializing a
 * state and parsing it back must yield an identical /generate body.
 */

import { PARAM_KEYS, type CvdKind, type PaletteFamily, type ParamKey } from "./api.js";

export type OutputFormat = "hex" | "json" | "registry";

export interface WizardState {
  family: PaletteFamily;
  palette: string | null;
  n: number;
  params: Partial<Record<ParamKey, number>>;
  rev: boolean;
  darkMode: boolean;
  cvdKinds: CvdKind[];
  cvdSeverity: number;
  format: OutputFormat;
}

export const SLIDER_RANGES: Record<string, { min: number; max: number; step: number }> = {
  hue: { min: -360, max: 360, step: 1 },
  chroma: { min: 0, max: 180, step: 1 },
  luminance: { min: 0, max: 100, step: 1 },
  power: { min: 0.4, max: 3, step: 0.05 },
};

export function rangeFor(key: ParamKey) {
  if (key.startsWith("h")) return SLIDER_RANGES.hue;
  if (key.startsWith("c")) return SLIDER_RANGES.chroma;
  if (key.startsWith("l")) return SLIDER_RANGES.luminance;
  return SLIDER_RANGES.power;
}

/** Sliders applicable per palette family; the rest stay hidden. */
export const FAMILY_PARAMS: Record<PaletteFamily, ParamKey[]> = {
  qualitative: ["h1", "h2", "c1", "l1"],
  sequential: ["h1", "h2", "c1", "c2", "cmax", "l1", "l2", "p1", "p2"],
  diverging: ["h1", "h2", "c1", "cmax", "l1", "l2", "p1", "p2"],
  divergingx: ["h1", "h2", "h3", "c1", "c2", "c3", "cmax1", "cmax2",
               "l1", "l2", "l3", "p1", "p2", "p3", "p4"],
};

export function defaultWizardState(): WizardState {
  return {
    family: "qualitative",
    palette: "Set 2",
    n: 5,
    params: {},
    rev: false,
    darkMode: false,
    cvdKinds: [],
    cvdSeverity: 1,
    format: "hex",
  };
}

const CVD_KINDS: CvdKind[] = ["deutan", "protan", "tritan"];

export function serializeWizardState(state: WizardState): string {
  const query = new URLSearchParams();
  query.set("view", "wizard");
  query.set("type", state.family);
  if (state.palette) query.set("palette", state.palette);
  query.set("n", String(state.n));
  for (const key of FAMILY_PARAMS[state.family]) {
    const value = state.params[key];
    if (value !== undefined) query.set(key, String(value));
  }
  if (state.rev) query.set("rev", "1");
  if (state.darkMode) query.set("dark", "1");
  if (state.cvdKinds.length) {
    query.set("cvd", state.cvdKinds.join(","));
    query.set("severity", String(state.cvdSeverity));
  }
  if (state.format !== "hex") query.set("fmt", state.format);
  return query.toString();
}

export function parseWizardState(queryString: string): WizardState {
  const query = new URLSearchParams(queryString);
  const state = defaultWizardState();
  const family = query.get("type");
  if (family && family in FAMILY_PARAMS) state.family = family as PaletteFamily;
  state.palette = query.get("palette");
  const n = Number(query.get("n"));
  if (Number.isInteger(n) && n >= 1 && n <= 40) state.n = n;
  for (const key of PARAM_KEYS) {
    const raw = query.get(key);
    if (raw !== null && raw !== "" && Number.isFinite(Number(raw))) {
      state.params[key] = Number(raw);
    }
  }
  state.rev = query.get("rev") === "1";
  state.darkMode = query.get("dark") === "1";
  const cvd = query.get("cvd");
  if (cvd) {
    state.cvdKinds = cvd.split(",").filter((k): k is CvdKind =>
      (CVD_KINDS as string[]).includes(k));
    const severity = Number(query.get("severity"));
    if (Number.isFinite(severity) && severity >= 0 && severity <= 1) {
      state.cvdSeverity = severity;
    }
  }
  const fmt = query.get("fmt");
  if (fmt === "json" || fmt === "registry") state.format = fmt;
  return state;
}

/** The canonical /generate body for a state; key order is fixed so equal
 * states produce byte-identical JSON. */
export function generateBody(state: WizardState): Record<string, unknown> {
  const body: Record<string, unknown> = { type: state.family, n: state.n };
  if (state.palette) body.palette = state.palette;
  for (const key of FAMILY_PARAMS[state.family]) {
    const value = state.params[key];
    if (value !== undefined) body[key] = value;
  }
  if (state.rev) body.rev = true;
  return body;
}

/** Export-box text for the selected output format. */
export function exportText(state: WizardState, colors: string[]): string {
  if (state.format === "json") return JSON.stringify(colors);
  if (state.format === "registry") {
    const record: Record<string, unknown> = {
      name: state.palette ?? "custom",
      type: state.family === "sequential"
        ? (state.params.h2 !== undefined ? "sequential-multi" : "sequential-single")
        : state.family,
    };
    for (const key of FAMILY_PARAMS[state.family]) {
      const value = state.params[key];
      if (value !== undefined) record[key] = value;
    }
    return JSON.stringify(record, null, 2);
  }
  return colors.join("\n");
}
