/** Pure HTML/SVG string builders. No DOM access here, so every piece of
 * markup the panels show can be unit-tested in node. */

import type { PlaneGrid, Trace } from "./api.js";

export function escapeHtml(value: string): string {
  return value.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function swatchStrip(colors: string[], title = ""): string {
  const cells = colors.map(c =>
    `<div class="swatch" style="background:${escapeHtml(c)}" title="${escapeHtml(c)}"></div>`,
  ).join("");
  const label = title ? `<span class="strip-label">${escapeHtml(title)}</span>` : "";
  return `<div class="strip">${label}<div class="strip-cells">${cells}</div></div>`;
}

const f2 = (value: number) => value.toFixed(2);

/** Line chart of the HCL trajectories: hue in red against the right axis,
 * chroma (green) and luminance (blue) against the left. */
export function spectrumChart(trace: Trace, width = 420, height = 180): string {
  const margin = { left: 34, right: 40, top: 8, bottom: 8 };
  const plotW = width - margin.left - margin.right;
  const plotH = height - margin.top - margin.bottom;
  const n = trace.n;
  const x = (i: number) => margin.left + (n > 1 ? (plotW * i) / (n - 1) : plotW / 2);

  const leftMax = Math.max(100, Math.ceil(Math.max(...trace.chroma) / 20) * 20);
  const hueMin = Math.min(...trace.hue) < 0 ? -360 : 0;
  const yLeft = (v: number) => margin.top + plotH * (1 - v / leftMax);
  const yHue = (v: number) => margin.top + plotH * (1 - (v - hueMin) / (360 - hueMin));

  const line = (values: number[], y: (v: number) => number, stroke: string) => {
    const points = values.map((v, i) => `${f2(x(i))},${f2(y(v))}`).join(" ");
    return `<polyline points="${points}" fill="none" stroke="${stroke}" stroke-width="2"/>`;
  };

  const gridlines: string[] = [];
  for (let tick = 0; tick <= leftMax; tick += 20) {
    const y = f2(yLeft(tick));
    gridlines.push(`<line x1="${margin.left}" y1="${y}" x2="${margin.left + plotW}" y2="${y}" class="gridline"/>`);
    gridlines.push(`<text x="${margin.left - 4}" y="${y}" class="tick left">${tick}</text>`);
  }
  for (let tick = hueMin; tick <= 360; tick += 120) {
    gridlines.push(`<text x="${margin.left + plotW + 4}" y="${f2(yHue(tick))}" class="tick hue">${tick}</text>`);
  }

  const curves = [
    trace.degenerate_hue ? "" : line(trace.hue, yHue, "var(--hue-line)"),
    line(trace.chroma, yLeft, "var(--chroma-line)"),
    line(trace.luminance, yLeft, "var(--luminance-line)"),
  ].join("");
  return `<svg viewBox="0 0 ${width} ${height}" class="spectrum">${gridlines.join("")}${curves}</svg>`;
}

/** The in-gamut plane slice as a clickable grid; empty cells are gaps.
 * Each rect carries its data coordinates for the click handler. */
export function planeGridSvg(grid: PlaneGrid, current?: { x: number; y: number }): string {
  const xs = grid.x_values;
  const ys = grid.y_values;
  const stepX = xs.length > 1 ? xs[1] - xs[0] : 1;
  const stepY = ys.length > 1 ? ys[1] - ys[0] : 1;
  const width = 440;
  const height = 280;
  const sx = width / (xs[xs.length - 1] - xs[0] + stepX);
  const sy = height / (ys[ys.length - 1] - ys[0] + stepY);
  const parts: string[] = [];
  for (let j = 0; j < ys.length; j++) {
    const row = grid.cells[j];
    for (let i = 0; i < xs.length; i++) {
      const hex = row[i];
      if (hex === null) continue;
      const px = (xs[i] - xs[0]) * sx;
      const py = height - (ys[j] - ys[0] + stepY) * sy;
      parts.push(
        `<rect x="${f2(px)}" y="${f2(py)}" width="${f2(stepX * sx + 0.5)}" ` +
        `height="${f2(stepY * sy + 0.5)}" fill="${hex}" data-x="${xs[i]}" data-y="${ys[j]}"/>`,
      );
    }
  }
  if (current) {
    const cx = (current.x - xs[0] + stepX / 2) * sx;
    const cy = height - (current.y - ys[0] + stepY / 2) * sy;
    parts.push(`<circle cx="${f2(cx)}" cy="${f2(cy)}" r="6" class="plane-cursor"/>`);
  }
  return `<svg viewBox="0 0 ${width} ${height}" class="plane" ` +
    `data-x-label="${grid.x_label}" data-y-label="${grid.y_label}">${parts.join("")}</svg>`;
}

export function errorBanner(message: string): string {
  return `<div class="banner">${escapeHtml(message)}</div>`;
}
