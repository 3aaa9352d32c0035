/** Palette wizard panel: sliders bound to the live parameter record, a
 * swatch strip, the HCL spectrum chart, optional CVD preview strips, and
 * an export box. The panel never computes colors itself; everything
 * displayed comes back from the service. */

import { Client, type CvdKind, type GenerateResponse, type PaletteInfo, type ParamKey } from "./api.js";
import { errorBanner, escapeHtml, spectrumChart, swatchStrip } from "./render.js";
import { Scheduler } from "./scheduler.js";
import {
  FAMILY_PARAMS,
  type WizardState,
  exportText,
  generateBody,
  rangeFor,
} from "./wizardState.js";

const CVD_KINDS: CvdKind[] = ["deutan", "protan", "tritan"];

export class WizardPanel {
  private readonly root: HTMLElement;
  private palettes: PaletteInfo[] = [];
  private lastColors: string[] = [];
  private readonly scheduler: Scheduler<GenerateResponse>;
  private readonly cvdScheduler: Scheduler<{ kind: CvdKind; colors: string[] }[]>;

  constructor(
    container: HTMLElement,
    private readonly client: Client,
    private readonly state: WizardState,
    private readonly onStateChange: () => void,
  ) {
    this.root = container;
    this.scheduler = new Scheduler(
      () => this.client.generate(generateBody(this.state)),
      resp => this.applyGenerate(resp),
      error => this.showError(error),
    );
    this.cvdScheduler = new Scheduler(
      () => Promise.all(this.state.cvdKinds.map(async kind => ({
        kind,
        colors: (await this.client.cvd(this.lastColors, kind, this.state.cvdSeverity)).colors,
      }))),
      strips => this.applyCvd(strips),
      error => this.showError(error),
    );
    this.build();
  }

  async start(): Promise<void> {
    try {
      this.palettes = (await this.client.palettes()).palettes;
    } catch (error) {
      this.showError(error);
    }
    this.fillPresetOptions();
    this.syncControls();
    void this.scheduler.fire();
  }

  refreshFromState(): void {
    this.fillPresetOptions();
    this.syncControls();
    this.scheduler.schedule();
  }

  private build(): void {
    const sliderRows = (["n"] as (ParamKey | "n")[]).concat(FAMILY_PARAMS.divergingx)
      .map(key => {
        const range = key === "n" ? { min: 1, max: 21, step: 1 } : rangeFor(key);
        return `<label class="slider-row" data-param="${key}">
          <span class="param-name">${key}</span>
          <input type="range" name="${key}" min="${range.min}" max="${range.max}" step="${range.step}">
          <output name="out-${key}"></output>
          <button type="button" class="clear" data-clear="${key}" title="use palette default">×</button>
        </label>`;
      }).join("");
    const cvdToggles = CVD_KINDS.map(kind =>
      `<label><input type="checkbox" name="cvd-${kind}"> ${kind}</label>`).join("");
    this.root.innerHTML = `
      <div class="banner-slot"></div>
      <div class="wizard-grid">
        <form class="controls">
          <label>Type
            <select name="family">
              <option value="qualitative">qualitative</option>
              <option value="sequential">sequential</option>
              <option value="diverging">diverging</option>
              <option value="divergingx">divergingx</option>
            </select>
          </label>
          <label>Palette
            <select name="palette"><option value="">(custom)</option></select>
          </label>
          ${sliderRows}
          <label><input type="checkbox" name="rev"> reverse</label>
          <fieldset class="cvd-box"><legend>CVD preview</legend>
            ${cvdToggles}
            <label class="slider-row"><span class="param-name">severity</span>
              <input type="range" name="severity" min="0" max="1" step="0.05">
              <output name="out-severity"></output>
            </label>
          </fieldset>
          <label><input type="checkbox" name="dark"> dark mode</label>
        </form>
        <div class="results">
          <div class="swatch-slot"></div>
          <div class="cvd-slot"></div>
          <div class="chart-slot"></div>
          <label>Export as
            <select name="format">
              <option value="hex">hex list</option>
              <option value="json">JSON array</option>
              <option value="registry">registry record</option>
            </select>
          </label>
          <textarea class="export-box" rows="6" readonly></textarea>
        </div>
      </div>`;
    this.root.querySelectorAll<HTMLInputElement>("input[type=range]").forEach(input => {
      input.addEventListener("input", () => this.onControlChange(input.name, input.value));
    });
    this.select("family").addEventListener("change", () => {
      this.state.family = this.select("family").value as WizardState["family"];
      this.state.palette = null;
      this.fillPresetOptions();
      this.changed();
    });
    this.select("palette").addEventListener("change", () => this.onPresetChange());
    this.select("format").addEventListener("change", () => {
      this.state.format = this.select("format").value as WizardState["format"];
      this.renderExport();
      this.onStateChange();
    });
    this.checkbox("rev").addEventListener("change", () => {
      this.state.rev = this.checkbox("rev").checked;
      this.changed();
    });
    this.checkbox("dark").addEventListener("change", () => {
      this.state.darkMode = this.checkbox("dark").checked;
      document.body.classList.toggle("dark", this.state.darkMode);
      this.onStateChange();
    });
    for (const kind of CVD_KINDS) {
      this.checkbox(`cvd-${kind}`).addEventListener("change", () => {
        this.state.cvdKinds = CVD_KINDS.filter(k => this.checkbox(`cvd-${k}`).checked);
        this.changed();
      });
    }
    this.root.querySelectorAll<HTMLButtonElement>("button[data-clear]").forEach(button => {
      button.addEventListener("click", () => {
        delete this.state.params[button.dataset.clear as ParamKey];
        this.syncControls();
        this.changed();
      });
    });
  }

  private onControlChange(name: string, raw: string): void {
    const value = Number(raw);
    if (name === "n") {
      this.state.n = value;
    } else if (name === "severity") {
      this.state.cvdSeverity = value;
    } else {
      this.state.params[name as ParamKey] = value;
    }
    this.syncOutputs();
    this.changed();
  }

  private onPresetChange(): void {
    const name = this.select("palette").value || null;
    this.state.palette = name;
    const info = this.palettes.find(p => p.name === name);
    if (info) {
      // load the preset's parameters into the sliders; further slider
      // moves then become explicit overrides on top of the name
      this.state.params = {};
      for (const [key, value] of Object.entries(info.params)) {
        if (typeof value === "number") this.state.params[key as ParamKey] = value;
      }
    }
    this.syncControls();
    this.changed();
  }

  private changed(): void {
    this.onStateChange();
    this.scheduler.schedule();
  }

  private applyGenerate(resp: GenerateResponse): void {
    this.clearError();
    this.lastColors = resp.colors.filter((c): c is string => c !== null);
    this.slot("swatch-slot").innerHTML = swatchStrip(this.lastColors, this.state.palette ?? "palette");
    this.slot("chart-slot").innerHTML = resp.trace ? spectrumChart(resp.trace) : "";
    this.renderExport();
    if (this.state.cvdKinds.length) {
      void this.cvdScheduler.fire();
    } else {
      this.slot("cvd-slot").innerHTML = "";
    }
  }

  private applyCvd(strips: { kind: CvdKind; colors: string[] }[]): void {
    this.slot("cvd-slot").innerHTML =
      strips.map(s => swatchStrip(s.colors, s.kind)).join("");
  }

  private renderExport(): void {
    this.root.querySelector<HTMLTextAreaElement>(".export-box")!.value =
      exportText(this.state, this.lastColors);
  }

  private fillPresetOptions(): void {
    const select = this.select("palette");
    const families = this.state.family === "sequential"
      ? ["sequential-single", "sequential-multi"] : [this.state.family];
    const options = this.palettes.filter(p => families.includes(p.type))
      .map(p => `<option value="${escapeHtml(p.name)}">${escapeHtml(p.name)}</option>`);
    select.innerHTML = `<option value="">(custom)</option>${options.join("")}`;
    select.value = this.state.palette ?? "";
  }

  /** Push current state into the controls (used on boot and URL restore). */
  private syncControls(): void {
    this.select("family").value = this.state.family;
    this.select("palette").value = this.state.palette ?? "";
    this.select("format").value = this.state.format;
    this.range("n").value = String(this.state.n);
    this.range("severity").value = String(this.state.cvdSeverity);
    this.checkbox("rev").checked = this.state.rev;
    this.checkbox("dark").checked = this.state.darkMode;
    document.body.classList.toggle("dark", this.state.darkMode);
    for (const kind of CVD_KINDS) {
      this.checkbox(`cvd-${kind}`).checked = this.state.cvdKinds.includes(kind);
    }
    const visible = new Set<string>(FAMILY_PARAMS[this.state.family]);
    this.root.querySelectorAll<HTMLElement>(".slider-row[data-param]").forEach(row => {
      const key = row.dataset.param!;
      if (key === "n") return;
      row.hidden = !visible.has(key);
      const value = this.state.params[key as ParamKey];
      if (value !== undefined) this.range(key).value = String(value);
    });
    this.syncOutputs();
  }

  private syncOutputs(): void {
    this.root.querySelectorAll<HTMLInputElement>("input[type=range]").forEach(input => {
      const out = this.root.querySelector<HTMLOutputElement>(`output[name="out-${input.name}"]`);
      if (!out) return;
      if (input.name !== "n" && input.name !== "severity"
          && this.state.params[input.name as ParamKey] === undefined) {
        out.textContent = "auto";
      } else {
        out.textContent = input.value;
      }
    });
  }

  private showError(error: unknown): void {
    // non-blocking: the last good palette stays on screen
    this.root.querySelector(".banner-slot")!.innerHTML =
      errorBanner(`service error: ${error instanceof Error ? error.message : String(error)}`);
  }

  private clearError(): void {
    this.root.querySelector(".banner-slot")!.innerHTML = "";
  }

  private slot(cls: string): HTMLElement {
    return this.root.querySelector<HTMLElement>(`.${cls}`)!;
  }

  private select(name: string): HTMLSelectElement {
    return this.root.querySelector<HTMLSelectElement>(`select[name="${name}"]`)!;
  }

  private range(name: string): HTMLInputElement {
    return this.root.querySelector<HTMLInputElement>(`input[type=range][name="${name}"]`)!;
  }

  private checkbox(name: string): HTMLInputElement {
    return this.root.querySelector<HTMLInputElement>(`input[type=checkbox][name="${name}"]`)!;
  }
}
