/**
 * DOM wiring: pointers, wheel, file loading, readouts.
 *
 * This layer converts browser events into InputEvent values and forwards
 * them to the pure reducer; it never touches view numbers directly.  Drag
 * deltas are scaled from pixels to degrees here (grab-the-scene feel, scale
 * proportional to the current field of view), because pixel geometry is
 * presentation, not state.
 */

import { PanoramaRenderer } from "./renderer.js";
import {
  FOVMAX_MAX_DEG,
  FOVMAX_MIN_DEG,
  initialState,
  onInput,
  panoramaFailed,
  panoramaLoaded,
  withFps,
  type InputEvent,
  type ViewerState,
} from "./state.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (el === null) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
}

const canvas = byId<HTMLCanvasElement>("view");
const readout = byId<HTMLSpanElement>("readout");
const status = byId<HTMLSpanElement>("status");
const filePicker = byId<HTMLInputElement>("file");
const fovMaxSlider = byId<HTMLInputElement>("fovmax");
const meshSelect = byId<HTMLSelectElement>("mesh");

fovMaxSlider.min = String(FOVMAX_MIN_DEG);
fovMaxSlider.max = String(FOVMAX_MAX_DEG);

let state: ViewerState = initialState();
let renderer: PanoramaRenderer | null = null;

try {
  renderer = new PanoramaRenderer(canvas);
  renderer.onRecovered = () => {
    status.textContent = "GPU context recovered";
  };
} catch (err) {
  state = panoramaFailed(state, err instanceof Error ? err.message : String(err));
}

function dispatch(event: InputEvent): void {
  state = onInput(state, event);
}

async function loadFrom(source: Blob, name: string): Promise<void> {
  status.textContent = `decoding ${name}`;
  try {
    const bitmap = await createImageBitmap(source);
    renderer?.setPanorama(bitmap);
    state = panoramaLoaded(state, {
      name,
      width: bitmap.width,
      height: bitmap.height,
    });
  } catch (err) {
    const reason = err instanceof Error ? err.message : String(err);
    state = panoramaFailed(state, `could not decode ${name}: ${reason}`);
  }
}

filePicker.addEventListener("change", () => {
  const file = filePicker.files?.[0];
  if (file !== undefined) {
    void loadFrom(file, file.name);
  }
});

const sourceParam = new URLSearchParams(window.location.search).get("src");
if (sourceParam !== null) {
  void (async () => {
    try {
      const response = await fetch(sourceParam);
      if (!response.ok) {
        throw new Error(`HTTP ${response.status}`);
      }
      await loadFrom(await response.blob(), sourceParam);
    } catch (err) {
      const reason = err instanceof Error ? err.message : String(err);
      state = panoramaFailed(state, `could not fetch ${sourceParam}: ${reason}`);
    }
  })();
}

let dragging = false;
let lastX = 0;
let lastY = 0;

canvas.addEventListener("pointerdown", (event) => {
  dragging = true;
  lastX = event.clientX;
  lastY = event.clientY;
  canvas.setPointerCapture(event.pointerId);
});

canvas.addEventListener("pointermove", (event) => {
  if (!dragging) {
    return;
  }
  const degPerPixel = state.fovDeg / Math.max(1, canvas.clientWidth);
  dispatch({
    type: "drag",
    dyawDeg: (lastX - event.clientX) * degPerPixel,
    dpitchDeg: (event.clientY - lastY) * degPerPixel,
  });
  lastX = event.clientX;
  lastY = event.clientY;
});

canvas.addEventListener("pointerup", (event) => {
  dragging = false;
  canvas.releasePointerCapture(event.pointerId);
});

canvas.addEventListener(
  "wheel",
  (event) => {
    event.preventDefault();
    const unitScale = event.deltaMode === 0 ? 1 : 33;
    dispatch({
      type: "wheel",
      deltaY: event.deltaY * unitScale,
      shiftKey: event.shiftKey,
    });
  },
  { passive: false },
);

fovMaxSlider.addEventListener("input", () => {
  dispatch({ type: "setFovMax", valueDeg: Number(fovMaxSlider.value) });
});

meshSelect.addEventListener("change", () => {
  dispatch({ type: "setMesh", side: Number(meshSelect.value) });
});

function updatePanel(): void {
  readout.textContent =
    `yaw ${state.yawDeg.toFixed(1)}°  ` +
    `pitch ${state.pitchDeg.toFixed(1)}°  ` +
    `fov ${state.fovDeg.toFixed(1)}°  ` +
    `fov max ${state.fovMaxDeg.toFixed(1)}°  ` +
    `${state.fps.toFixed(0)} fps`;
  if (document.activeElement !== fovMaxSlider) {
    fovMaxSlider.value = String(Math.round(state.fovMaxDeg));
  }
  meshSelect.value = String(state.meshSide);
  if (state.status === "ready") {
    const p = state.panorama;
    status.textContent = p === null ? "" : `${p.name} (${p.width}×${p.height})`;
  } else {
    status.textContent = state.message;
  }
}

let lastFrame = performance.now();
let smoothedDt = 16.7;
let panelClock = 0;

function frame(now: number): void {
  const dt = now - lastFrame;
  lastFrame = now;
  smoothedDt += (dt - smoothedDt) * 0.1;

  renderer?.draw(state);

  panelClock += dt;
  if (panelClock > 250) {
    panelClock = 0;
    state = withFps(state, state.status === "ready" ? 1000 / smoothedDt : 0);
    updatePanel();
  }
  requestAnimationFrame(frame);
}

updatePanel();
requestAnimationFrame(frame);
