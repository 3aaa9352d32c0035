import { describe, expect, it } from "vitest";

import type { PlaneGrid, Trace } from "../src/api.js";
import { escapeHtml, planeGridSvg, spectrumChart, swatchStrip } from "../src/render.js";

const trace: Trace = {
  n: 3,
  colors: ["#112233", "#445566", "#778899"],
  hue: [250, 250, 250],
  chroma: [40, 25, 10],
  luminance: [20, 50, 80],
  fixup_fired: [false, false, false],
  degenerate_hue: false,
};

describe("renderers", () => {
  it("swatch strip shows one cell per color with its fill", () => {
    const html = swatchStrip(["#AA0000", "#00BB00"], "demo");
    expect(html.match(/class="swatch"/g)).toHaveLength(2);
    expect(html).toContain("background:#AA0000");
    expect(html).toContain("demo");
  });

  it("escapes labels", () => {
    expect(swatchStrip(["#AA0000"], "<b>")).not.toContain("<b>");
    expect(escapeHtml('<&">')).toBe("&lt;&amp;&quot;&gt;");
  });

  it("spectrum chart draws three curves", () => {
    const svg = spectrumChart(trace);
    expect(svg.match(/<polyline/g)).toHaveLength(3);
    expect(svg).toContain("var(--hue-line)");
  });

  it("suppresses the hue curve for degenerate traces", () => {
    const svg = spectrumChart({ ...trace, degenerate_hue: true });
    expect(svg.match(/<polyline/g)).toHaveLength(2);
  });

  it("is deterministic", () => {
    expect(spectrumChart(trace)).toBe(spectrumChart(trace));
  });

  it("plane grid renders only in-gamut cells and tags coordinates", () => {
    const grid: PlaneGrid = {
      mode: "hue-chroma",
      x_label: "hue",
      y_label: "chroma",
      x_values: [0, 4, 8],
      y_values: [0, 4],
      cells: [["#111111", "#222222", "#333333"], ["#444444", null, "#666666"]],
      fixed: { luminance: 70 },
      snapped: null,
    };
    const svg = planeGridSvg(grid, { x: 4, y: 0 });
    expect(svg.match(/<rect/g)).toHaveLength(5);
    expect(svg).toContain('data-x="4"');
    expect(svg).toContain("plane-cursor");
  });
});
