// Live preview: runs the session program inside an isolated iframe against
// the session dataset and hands back the serialized SVG (or the runtime
// error). The frame is rebuilt on every render so state never leaks between
// runs.

const DEFAULT_TIMEOUT_MS = 3000;

// Pinned chart runtime; the vendored copy keeps the sandbox offline-safe,
// with the canonical URL as fallback.
const D3_SOURCES = ["/vendor/d3.v7.min.js", "https://d3js.org/d3.v7.min.js"];

export interface RenderOutcome {
  svg: string | null;
  error: string | null;
}

export function buildSandboxDocument(source: string, dataUrl: string): string {
  // The program loads rows from the session data endpoint; rewrite relative
  // fetches so they resolve inside the srcdoc frame.
  const patched = source.split(JSON.stringify(dataUrl)).join(JSON.stringify(new URL(dataUrl, location?.origin ?? "http://localhost").toString()));
  const scripts = D3_SOURCES.map((src) => `<script src="${src}"><\/script>`).join("");
  return `<!doctype html><html><head>${scripts}</head><body>
<div id="controls"></div><div id="chart"></div>
<script>
window.addEventListener("error", function (event) {
  parent.postMessage({ kind: "sandbox-error", message: String(event.message) }, "*");
});
window.addEventListener("unhandledrejection", function (event) {
  parent.postMessage({ kind: "sandbox-error", message: String(event.reason) }, "*");
});
try {
${patched}
} catch (error) {
  parent.postMessage({ kind: "sandbox-error", message: String(error) }, "*");
}
var tries = 0;
var poll = setInterval(function () {
  var svg = document.querySelector("#chart svg");
  tries += 1;
  if (svg || tries > 25) {
    clearInterval(poll);
    parent.postMessage(
      { kind: "sandbox-svg", svg: svg ? svg.outerHTML : null },
      "*"
    );
  }
}, 100);
<\/script></body></html>`;
}

export function renderInSandbox(
  host: HTMLElement,
  source: string,
  dataUrl: string,
  timeoutMs: number = DEFAULT_TIMEOUT_MS,
): Promise<RenderOutcome> {
  host.querySelector("iframe.sandbox")?.remove();
  const frame = document.createElement("iframe");
  frame.className = "sandbox";
  frame.setAttribute("sandbox", "allow-scripts allow-same-origin");
  frame.srcdoc = buildSandboxDocument(source, dataUrl);

  return new Promise<RenderOutcome>((resolve) => {
    let settled = false;
    let firstError: string | null = null;

    const finish = (outcome: RenderOutcome) => {
      if (settled) return;
      settled = true;
      window.removeEventListener("message", onMessage);
      clearTimeout(timer);
      resolve(outcome);
    };

    const onMessage = (event: MessageEvent) => {
      if (event.source !== frame.contentWindow) return;
      const data = event.data ?? {};
      if (data.kind === "sandbox-error" && firstError === null) {
        firstError = data.message;
      } else if (data.kind === "sandbox-svg") {
        finish({ svg: data.svg, error: firstError });
      }
    };

    const timer = setTimeout(
      () => finish({ svg: null, error: firstError ?? `render timed out after ${timeoutMs}ms` }),
      timeoutMs,
    );

    window.addEventListener("message", onMessage);
    host.appendChild(frame);
  });
}
