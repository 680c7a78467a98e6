import { App } from "./app.js";

const root = document.getElementById("app");
if (root) {
  // Same-origin when served by the ranking service's --ui-dir mount;
  // point elsewhere with <body data-api-base="http://host:port">.
  new App(root, { baseUrl: document.body.dataset.apiBase ?? "" });
}
