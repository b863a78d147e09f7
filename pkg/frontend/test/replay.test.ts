import { describe, expect, it } from "vitest";

import {
  initialState,
  onInput,
  panoramaLoaded,
  replay,
  withFps,
  type InputEvent,
  type ViewerState,
} from "../src/state.js";

const HANDLE = { name: "pano.png", width: 1024, height: 512 };

function ready(): ViewerState {
  return panoramaLoaded(initialState(), HANDLE);
}

/** Small deterministic generator so the script is fixed but not hand-picked. */
function* lcg(seed: number): Generator<number> {
  let x = seed >>> 0;
  while (true) {
    x = (1664525 * x + 1013904223) >>> 0;
    yield x / 2 ** 32;
  }
}

function buildScript(seed: number, length: number): InputEvent[] {
  const rand = lcg(seed);
  const next = () => rand.next().value as number;
  const script: InputEvent[] = [];
  for (let i = 0; i < length; i++) {
    switch (Math.floor(next() * 4)) {
      case 0:
        script.push({
          type: "drag",
          dyawDeg: (next() - 0.5) * 90,
          dpitchDeg: (next() - 0.5) * 90,
        });
        break;
      case 1:
        script.push({ type: "wheel", deltaY: (next() - 0.5) * 600, shiftKey: next() < 0.5 });
        break;
      case 2:
        script.push({ type: "setFovMax", valueDeg: next() * 250 - 30 });
        break;
      default:
        script.push({ type: "setMesh", side: Math.floor(next() * 1000) });
    }
  }
  return script;
}

describe("replay determinism", () => {
  it("five hundred mixed events replay to an identical final state", () => {
    const script = buildScript(20230917, 500);
    const a = replay(ready(), script);
    const b = replay(ready(), script);
    expect(b).toEqual(a);
    expect(b.yawDeg).toBe(a.yawDeg);
    expect(b.pitchDeg).toBe(a.pitchDeg);
    expect(b.fovDeg).toBe(a.fovDeg);
    expect(b.fovMaxDeg).toBe(a.fovMaxDeg);
    expect(b.meshSide).toBe(a.meshSide);
  });

  it("replay equals step-by-step application", () => {
    const script = buildScript(424242, 200);
    let stepped = ready();
    for (const event of script) {
      stepped = onInput(stepped, event);
    }
    expect(replay(ready(), script)).toEqual(stepped);
  });

  it("a frozen script replays without being disturbed", () => {
    const script = buildScript(7, 50).map((e) => Object.freeze(e));
    Object.freeze(script);
    const first = replay(ready(), script);
    expect(replay(ready(), script)).toEqual(first);
  });

  it("a hand-checked script reproduces its worked-out final state", () => {
    const script: InputEvent[] = [
      { type: "wheel", deltaY: -200, shiftKey: false }, // fov 90 -> 80
      { type: "drag", dyawDeg: 30, dpitchDeg: 50 }, // yaw 30, pitch 50
      { type: "drag", dyawDeg: 0, dpitchDeg: 55 }, // pitch clamps at 90
      { type: "wheel", deltaY: 400, shiftKey: true }, // fovMax 60 -> 80
      { type: "setFovMax", valueDeg: 200 }, // clamps at 179
      { type: "drag", dyawDeg: 200, dpitchDeg: 0 }, // yaw 230 wraps to -130
      { type: "setMesh", side: 1000 }, // snaps to 800
    ];
    const final = replay(ready(), script);
    expect(final.fovDeg).toBe(80);
    expect(final.yawDeg).toBe(-130);
    expect(final.pitchDeg).toBe(90);
    expect(final.fovMaxDeg).toBe(179);
    expect(final.meshSide).toBe(800);
    expect(final.status).toBe("ready");
  });

  it("telemetry updates between events do not disturb the view", () => {
    const script = buildScript(99, 100);
    const plain = replay(ready(), script);
    let interleaved = ready();
    for (const event of script) {
      interleaved = withFps(onInput(interleaved, event), Math.random() * 120);
    }
    expect(interleaved.yawDeg).toBe(plain.yawDeg);
    expect(interleaved.pitchDeg).toBe(plain.pitchDeg);
    expect(interleaved.fovDeg).toBe(plain.fovDeg);
    expect(interleaved.fovMaxDeg).toBe(plain.fovMaxDeg);
    expect(interleaved.meshSide).toBe(plain.meshSide);
  });
});
