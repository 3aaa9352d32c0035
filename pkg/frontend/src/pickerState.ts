/** Color picker state: one HCL plane slice, a current in-gamut triple,
 * and the palette accumulated so far. */

export type PlaneMode = "hue-chroma" | "luminance-chroma";

export interface PickerState {
  mode: PlaneMode;
  h: number;
  c: number;
  l: number;
  hex: string;
  palette: string[];
}

export function defaultPickerState(): PickerState {
  return { mode: "hue-chroma", h: 0, c: 50, l: 70, hex: "", palette: [] };
}

export const HEX_PATTERN = /^#[0-9a-fA-F]{6}$/;

export function isValidHexInput(value: string): boolean {
  return HEX_PATTERN.test(value.trim());
}

/** Body for the /pick request covering the current plane and triple; the
 * query part lets the server snap the triple into the gamut. */
export function pickBody(state: PickerState): Record<string, unknown> {
  const query = { h: state.h, c: state.c, l: state.l };
  if (state.mode === "hue-chroma") {
    return { mode: state.mode, l: state.l, query };
  }
  return { mode: state.mode, h: state.h, query };
}

export function serializePickerState(state: PickerState): string {
  const query = new URLSearchParams();
  query.set("view", "picker");
  query.set("mode", state.mode);
  query.set("h", String(state.h));
  query.set("c", String(state.c));
  query.set("l", String(state.l));
  if (state.palette.length) query.set("colors", state.palette.map(c => c.slice(1)).join(","));
  return query.toString();
}

export function parsePickerState(queryString: string): PickerState {
  const query = new URLSearchParams(queryString);
  const state = defaultPickerState();
  if (query.get("mode") === "luminance-chroma") state.mode = "luminance-chroma";
  for (const key of ["h", "c", "l"] as const) {
    const raw = Number(query.get(key));
    if (Number.isFinite(raw)) state[key] = raw;
  }
  state.c = Math.max(0, state.c);
  state.l = Math.min(100, Math.max(0, state.l));
  const colors = query.get("colors");
  if (colors) {
    state.palette = colors.split(",")
      .map(c => `#${c.toUpperCase()}`)
      .filter(c => HEX_PATTERN.test(c));
  }
  return state;
}
