/** End-to-end checks against the real palette service. The Python
 * package must be installed (pip install -e .. --no-build-isolation). */

import { type ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Client } from "../src/api.js";
import { swatchStrip } from "../src/render.js";
import {
  defaultWizardState,
  generateBody,
  parseWizardState,
  serializeWizardState,
} from "../src/wizardState.js";
import { defaultPickerState, pickBody } from "../src/pickerState.js";

let server: ChildProcess;
let client: Client;

beforeAll(async () => {
  server = spawn("python3", ["-m", "hclkit.cli", "serve", "--port", "0"], {
    stdio: ["ignore", "ignore", "pipe"],
  });
  const base = await new Promise<string>((resolve, reject) => {
    let buffer = "";
    const timer = setTimeout(() => reject(new Error(`service did not start: ${buffer}`)), 15000);
    server.stderr!.on("data", (chunk: Buffer) => {
      buffer += chunk.toString();
      const match = buffer.match(/serving on (http:\/\/[^/\s]+)\//);
      if (match) {
        clearTimeout(timer);
        resolve(match[1]);
      }
    });
    server.on("exit", code => reject(new Error(`service exited early (${code}): ${buffer}`)));
  });
  client = new Client(base);
}, 20000);

afterAll(() => {
  server?.kill();
});

describe("wizard against the live service", () => {
  it("shows the reference hexes for Set 2 at n=4", async () => {
    const state = defaultWizardState();
    state.palette = "Set 2";
    state.n = 4;
    const resp = await client.generate(generateBody(state));
    expect(resp.colors).toEqual(["#ED90A4", "#ABB150", "#00C1B2", "#ACA2EC"]);
    const strip = swatchStrip(resp.colors, state.palette!);
    for (const hex of resp.colors) expect(strip).toContain(`background:${hex}`);
    expect(resp.trace?.n).toBe(4);
  });

  it("lists the builtin qualitative palettes for the preset dropdown", async () => {
    const { palettes } = await client.palettes("qualitative");
    expect(palettes.map(p => p.name)).toContain("Set 2");
    expect(palettes).toHaveLength(9);
  });

  it("URL round trip reproduces an identical request and response", async () => {
    const state = defaultWizardState();
    state.family = "sequential";
    state.palette = "Purples 3";
    state.n = 9;
    state.params = { p1: 1.1, cmax: 60 };
    const restored = parseWizardState(serializeWizardState(state));
    const bodyA = generateBody(state);
    const bodyB = generateBody(restored);
    expect(JSON.stringify(bodyB)).toBe(JSON.stringify(bodyA));
    const [respA, respB] = await Promise.all([client.generate(bodyA), client.generate(bodyB)]);
    expect(respB).toEqual(respA);
  });

  it("cvd preview strip transforms the current palette", async () => {
    const base = await client.generate({ type: "qualitative", palette: "Set 2", n: 4 });
    const preview = await client.cvd(base.colors, "deutan", 0);
    expect(preview.colors).toEqual(base.colors);
  });
});

describe("picker against the live service", () => {
  it("hex entry #E495A5 lands the sliders near (L 70, C 50, H 0)", async () => {
    const resp = await client.analyze(["#E495A5"]);
    const h = ((resp.trace.hue[0] % 360) + 360) % 360;
    expect(Math.abs(resp.trace.luminance[0] - 70)).toBeLessThanOrEqual(1);
    expect(Math.abs(resp.trace.chroma[0] - 50)).toBeLessThanOrEqual(1);
    expect(Math.min(h, 360 - h)).toBeLessThanOrEqual(1);
  });

  it("snaps out-of-gamut chroma requests to the boundary", async () => {
    const state = defaultPickerState();
    state.h = 120;
    state.l = 50;
    state.c = 180;
    const grid = await client.pick(pickBody(state));
    expect(grid.snapped).not.toBeNull();
    expect(grid.snapped!.c).toBeCloseTo(69.06, 1);
    expect(grid.snapped!.c).toBe(grid.snapped!.max_chroma);
    expect(grid.snapped!.hex).toMatch(/^#[0-9A-F]{6}$/);
  });

  it("plane grid cells are displayable hexes or gaps", async () => {
    const grid = await client.pick({ mode: "hue-chroma", l: 70 });
    const flat = grid.cells.flat();
    expect(flat.some(c => c === null)).toBe(true);
    for (const cell of flat) {
      if (cell !== null) expect(cell).toMatch(/^#[0-9A-F]{6}$/);
    }
  });
});
