/** App shell: tab switching between the wizard and the picker, with the
 * active panel's state mirrored into the sharable URL query string. */

import { Client } from "./api.js";
import { PickerPanel } from "./picker.js";
import {
  defaultPickerState,
  parsePickerState,
  serializePickerState,
} from "./pickerState.js";
import { WizardPanel } from "./wizard.js";
import {
  defaultWizardState,
  parseWizardState,
  serializeWizardState,
} from "./wizardState.js";

function boot(): void {
  const client = new Client("");
  const query = window.location.search.replace(/^\?/, "");
  const view = new URLSearchParams(query).get("view") === "picker" ? "picker" : "wizard";
  const wizardState = view === "wizard" ? parseWizardState(query) : defaultWizardState();
  const pickerState = view === "picker" ? parsePickerState(query) : defaultPickerState();

  let active = view;
  const syncUrl = () => {
    const serialized = active === "wizard"
      ? serializeWizardState(wizardState)
      : serializePickerState(pickerState);
    window.history.replaceState(null, "", `?${serialized}`);
  };

  const wizardRoot = document.getElementById("wizard")!;
  const pickerRoot = document.getElementById("picker")!;
  const wizard = new WizardPanel(wizardRoot, client, wizardState, syncUrl);
  const picker = new PickerPanel(pickerRoot, client, pickerState, syncUrl);

  const tabs = document.querySelectorAll<HTMLButtonElement>("nav button");
  const showTab = (name: string) => {
    active = name === "picker" ? "picker" : "wizard";
    wizardRoot.hidden = active !== "wizard";
    pickerRoot.hidden = active !== "picker";
    tabs.forEach(t => t.classList.toggle("active", t.dataset.tab === active));
    syncUrl();
  };
  tabs.forEach(tab => tab.addEventListener("click", () => showTab(tab.dataset.tab!)));

  showTab(active);
  void wizard.start();
  picker.start();
}

boot();
