/** HCL color picker panel: a plane slice from the service, synchronized
 * sliders and hex entry, and an accumulating palette list. The current
 * triple is kept in-gamut by the server's snap response. */

import { Client, type PlaneGrid } from "./api.js";
import { errorBanner, planeGridSvg, swatchStrip } from "./render.js";
import { Scheduler } from "./scheduler.js";
import { type PickerState, isValidHexInput, pickBody } from "./pickerState.js";

export class PickerPanel {
  private readonly root: HTMLElement;
  private readonly scheduler: Scheduler<PlaneGrid>;

  constructor(
    container: HTMLElement,
    private readonly client: Client,
    private readonly state: PickerState,
    private readonly onStateChange: () => void,
  ) {
    this.root = container;
    this.scheduler = new Scheduler(
      () => this.client.pick(pickBody(this.state)),
      grid => this.applyGrid(grid),
      error => this.showError(error),
    );
    this.build();
  }

  start(): void {
    this.syncControls();
    void this.scheduler.fire();
  }

  refreshFromState(): void {
    this.syncControls();
    this.scheduler.schedule();
  }

  private build(): void {
    const slider = (name: string, min: number, max: number, step: number) => `
      <label class="slider-row"><span class="param-name">${name}</span>
        <input type="range" name="${name}" min="${min}" max="${max}" step="${step}">
        <output name="out-${name}"></output>
      </label>`;
    this.root.innerHTML = `
      <div class="banner-slot"></div>
      <div class="picker-grid">
        <div class="plane-slot"></div>
        <form class="controls">
          <label>Plane
            <select name="mode">
              <option value="hue-chroma">hue-chroma at fixed L</option>
              <option value="luminance-chroma">luminance-chroma at fixed H</option>
            </select>
          </label>
          ${slider("h", 0, 360, 1)}
          ${slider("c", 0, 180, 1)}
          ${slider("l", 0, 100, 1)}
          <label>Hex <input type="text" name="hex" spellcheck="false" placeholder="#RRGGBB">
            <span class="field-error" hidden></span>
          </label>
          <div class="current-color"><div class="swatch big"></div><code class="current-hex"></code></div>
          <button type="button" name="add">add to palette</button>
          <div class="picked-slot"></div>
          <textarea class="export-box" rows="4" readonly></textarea>
        </form>
      </div>`;
    this.root.querySelectorAll<HTMLInputElement>("input[type=range]").forEach(input => {
      input.addEventListener("input", () => {
        this.state[input.name as "h" | "c" | "l"] = Number(input.value);
        this.syncOutputs();
        this.onStateChange();
        this.scheduler.schedule();
      });
    });
    this.select("mode").addEventListener("change", () => {
      this.state.mode = this.select("mode").value as PickerState["mode"];
      this.onStateChange();
      void this.scheduler.fire();
    });
    const hexInput = this.input("hex");
    hexInput.addEventListener("change", () => void this.onHexEntry(hexInput.value));
    this.root.querySelector<HTMLButtonElement>("button[name=add]")!
      .addEventListener("click", () => {
        if (this.state.hex) {
          this.state.palette.push(this.state.hex);
          this.renderPicked();
          this.onStateChange();
        }
      });
    this.root.querySelector<HTMLElement>(".plane-slot")!
      .addEventListener("click", event => {
        const rect = event.target as SVGRectElement;
        if (rect.tagName !== "rect") return;
        const x = Number(rect.dataset.x);
        const y = Number(rect.dataset.y);
        if (this.state.mode === "hue-chroma") {
          this.state.h = x;
          this.state.c = y;
        } else {
          this.state.c = x;
          this.state.l = y;
        }
        this.syncControls();
        this.onStateChange();
        void this.scheduler.fire();
      });
  }

  private async onHexEntry(value: string): Promise<void> {
    const errorSlot = this.root.querySelector<HTMLElement>(".field-error")!;
    if (!isValidHexInput(value)) {
      errorSlot.textContent = "expected #RRGGBB";
      errorSlot.hidden = false;
      return;
    }
    errorSlot.hidden = true;
    try {
      // the service owns the math: its trace carries the HCL coordinates
      const resp = await this.client.analyze([value.trim()]);
      this.state.h = Math.round(((resp.trace.hue[0] % 360) + 360) % 360 * 10) / 10;
      this.state.c = Math.round(resp.trace.chroma[0] * 10) / 10;
      this.state.l = Math.round(resp.trace.luminance[0] * 10) / 10;
      this.syncControls();
      this.onStateChange();
      void this.scheduler.fire();
    } catch (error) {
      this.showError(error);
    }
  }

  private applyGrid(grid: PlaneGrid): void {
    this.clearError();
    const current = this.state.mode === "hue-chroma"
      ? { x: this.state.h, y: this.state.c }
      : { x: this.state.c, y: this.state.l };
    this.root.querySelector<HTMLElement>(".plane-slot")!.innerHTML =
      planeGridSvg(grid, current);
    if (grid.snapped) {
      // out-of-gamut requests come back snapped to the chroma boundary
      this.state.c = grid.snapped.c;
      this.state.hex = grid.snapped.hex;
      this.syncControls();
      const preview = this.root.querySelector<HTMLElement>(".current-color .swatch")!;
      preview.style.background = grid.snapped.hex;
      this.root.querySelector(".current-hex")!.textContent = grid.snapped.hex;
      this.input("hex").value = grid.snapped.hex;
    }
  }

  private renderPicked(): void {
    this.root.querySelector<HTMLElement>(".picked-slot")!.innerHTML =
      this.state.palette.length ? swatchStrip(this.state.palette, "picked") : "";
    this.root.querySelector<HTMLTextAreaElement>(".export-box")!.value =
      this.state.palette.join("\n");
  }

  private syncControls(): void {
    this.select("mode").value = this.state.mode;
    for (const key of ["h", "c", "l"] as const) {
      this.range(key).value = String(this.state[key]);
    }
    this.syncOutputs();
    this.renderPicked();
  }

  private syncOutputs(): void {
    for (const key of ["h", "c", "l"] as const) {
      this.root.querySelector<HTMLOutputElement>(`output[name="out-${key}"]`)!
        .textContent = String(this.state[key]);
    }
  }

  private showError(error: unknown): void {
    this.root.querySelector(".banner-slot")!.innerHTML =
      errorBanner(`service error: ${error instanceof Error ? error.message : String(error)}`);
  }

  private clearError(): void {
    this.root.querySelector(".banner-slot")!.innerHTML = "";
  }

  private select(name: string): HTMLSelectElement {
    return this.root.querySelector<HTMLSelectElement>(`select[name="${name}"]`)!;
  }

  private input(name: string): HTMLInputElement {
    return this.root.querySelector<HTMLInputElement>(`input[name="${name}"]`)!;
  }

  private range(name: string): HTMLInputElement {
    return this.root.querySelector<HTMLInputElement>(`input[type=range][name="${name}"]`)!;
  }
}
