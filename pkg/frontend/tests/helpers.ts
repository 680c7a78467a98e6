import { App } from "../src/app.js";
import type { AppOptions } from "../src/app.js";

export function mountApp(options: AppOptions = {}): App {
  document.body.innerHTML = '<div id="root"></div>';
  return new App(document.getElementById("root")!, {
    debounceMs: 0,
    ...options,
  });
}

export function setInput(id: string, value: string): void {
  const input = document.getElementById(id) as HTMLInputElement;
  input.value = value;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

export function setKnown(index: number, value: string | null): void {
  const toggle = document.getElementById(
    `known-toggle-${index}`,
  ) as HTMLInputElement;
  toggle.checked = value !== null;
  toggle.dispatchEvent(new Event("change", { bubbles: true }));
  if (value !== null) {
    setInput(`known-value-${index}`, value);
  }
}

/** Fill the upper triangle of the worked 3-concept example (a, b, c). */
export function enterWorkedExample(): void {
  setInput("label-0", "a");
  setInput("label-1", "b");
  setInput("label-2", "c");
  setInput("judgment-0-1", "0.5");
  setInput("judgment-0-2", "2");
  setInput("judgment-1-2", "4");
  setKnown(2, "1");
}

export function text(selector: string): string {
  return document.querySelector(selector)?.textContent ?? "";
}

export function clickButton(id: string): void {
  (document.getElementById(id) as HTMLButtonElement).click();
}
