/**
 * Viewer state and the input reducer.
 *
 * Everything here is pure: events go in, a new frozen state comes out, and
 * replaying a recorded event sequence from the same starting state lands on
 * the same final state, number for number.  The DOM layer owns the messy
 * part (pixels, pointers, decoding) and talks to this module only through
 * InputEvent values, so the whole interaction contract is testable without
 * a browser.
 */

export const FOV_MIN_DEG = 10;
export const FOV_MAX_DEG = 355;
export const FOVMAX_MIN_DEG = 1;
export const FOVMAX_MAX_DEG = 179;
export const PITCH_LIMIT_DEG = 90;
export const MESH_SIDES = [200, 400, 800] as const;

/** Degrees of field-of-view change per wheel delta unit (5 per notch). */
export const WHEEL_DEG_PER_UNIT = 0.05;

export type MeshSide = (typeof MESH_SIDES)[number];

/** What the state keeps about a loaded panorama; the texture lives with the renderer. */
export interface PanoramaHandle {
  readonly name: string;
  readonly width: number;
  readonly height: number;
}

export interface ViewerState {
  readonly yawDeg: number;
  readonly pitchDeg: number;
  readonly fovDeg: number;
  readonly fovMaxDeg: number;
  readonly meshSide: MeshSide;
  readonly panorama: PanoramaHandle | null;
  readonly status: "empty" | "ready" | "error";
  /** User-visible message for the empty and error states. */
  readonly message: string;
  /** Presentation telemetry, written only by the render loop. */
  readonly fps: number;
}

export type InputEvent =
  | { readonly type: "drag"; readonly dyawDeg: number; readonly dpitchDeg: number }
  | { readonly type: "wheel"; readonly deltaY: number; readonly shiftKey: boolean }
  | { readonly type: "setFovMax"; readonly valueDeg: number }
  | { readonly type: "setMesh"; readonly side: number };

const VIEW_DEFAULTS = {
  yawDeg: 0,
  pitchDeg: 0,
  fovDeg: 90,
  fovMaxDeg: 60,
} as const;

export function initialState(): ViewerState {
  return Object.freeze({
    ...VIEW_DEFAULTS,
    meshSide: 200 as MeshSide,
    panorama: null,
    status: "empty" as const,
    message: "drop a panorama or pick one to start",
    fps: 0,
  });
}

function clamp(value: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, value));
}

/** Wrap into [-180, 180) so panning never runs out of road. */
function wrapYaw(deg: number): number {
  const turned = (((deg + 180) % 360) + 360) % 360;
  return turned - 180;
}

function nearestMeshSide(side: number): MeshSide {
  let best: MeshSide = MESH_SIDES[0];
  for (const candidate of MESH_SIDES) {
    if (Math.abs(candidate - side) < Math.abs(best - side)) {
      best = candidate;
    }
  }
  return best;
}

/** A decoded panorama arrived: ready state, view reset to the defaults. */
export function panoramaLoaded(state: ViewerState, handle: PanoramaHandle): ViewerState {
  return Object.freeze({
    ...state,
    ...VIEW_DEFAULTS,
    panorama: handle,
    status: "ready" as const,
    message: "",
  });
}

/** Decoding failed: keep running, surface the reason. */
export function panoramaFailed(state: ViewerState, reason: string): ViewerState {
  return Object.freeze({
    ...state,
    panorama: null,
    status: "error" as const,
    message: reason,
  });
}

/** Render-loop telemetry; nothing but the readout field changes. */
export function withFps(state: ViewerState, fps: number): ViewerState {
  if (fps === state.fps) {
    return state;
  }
  return Object.freeze({ ...state, fps });
}

/**
 * Apply one input event.
 *
 * Drag moves exactly (yaw, pitch), wheel moves exactly the field of view,
 * shift+wheel and the slider move exactly the threshold, and every value is
 * clamped to its legal range.  Inputs before a panorama is ready are
 * ignored, and an event that changes nothing returns the same object, so
 * reference equality doubles as the redraw check.
 */
export function onInput(state: ViewerState, event: InputEvent): ViewerState {
  if (state.status !== "ready") {
    return state;
  }
  switch (event.type) {
    case "drag": {
      const yawDeg = wrapYaw(state.yawDeg + event.dyawDeg);
      const pitchDeg = clamp(
        state.pitchDeg + event.dpitchDeg,
        -PITCH_LIMIT_DEG,
        PITCH_LIMIT_DEG,
      );
      if (yawDeg === state.yawDeg && pitchDeg === state.pitchDeg) {
        return state;
      }
      return Object.freeze({ ...state, yawDeg, pitchDeg });
    }
    case "wheel": {
      const step = event.deltaY * WHEEL_DEG_PER_UNIT;
      if (event.shiftKey) {
        const fovMaxDeg = clamp(state.fovMaxDeg + step, FOVMAX_MIN_DEG, FOVMAX_MAX_DEG);
        return fovMaxDeg === state.fovMaxDeg
          ? state
          : Object.freeze({ ...state, fovMaxDeg });
      }
      const fovDeg = clamp(state.fovDeg + step, FOV_MIN_DEG, FOV_MAX_DEG);
      return fovDeg === state.fovDeg ? state : Object.freeze({ ...state, fovDeg });
    }
    case "setFovMax": {
      const fovMaxDeg = clamp(event.valueDeg, FOVMAX_MIN_DEG, FOVMAX_MAX_DEG);
      return fovMaxDeg === state.fovMaxDeg
        ? state
        : Object.freeze({ ...state, fovMaxDeg });
    }
    case "setMesh": {
      const meshSide = nearestMeshSide(event.side);
      return meshSide === state.meshSide ? state : Object.freeze({ ...state, meshSide });
    }
  }
}

/** Fold a recorded event sequence; the backbone of the determinism tests. */
export function replay(state: ViewerState, script: readonly InputEvent[]): ViewerState {
  let current = state;
  for (const event of script) {
    current = onInput(current, event);
  }
  return current;
}
