/**
 * Scalar mirror of the core projection pipeline.
 *
 * The renderer runs this math on the GPU per mesh vertex; this module runs
 * the identical sequence in plain numbers.  It exists so the shader uniforms
 * and the parity tests share one source of truth, and it must stay in exact
 * step with the vector files the core emits: rotate the direction into the
 * view frame, contract it radially through the plane projection taken from
 * the pole behind the viewer, then apply a pinhole normalized so the field
 * edge lands on u = +/-1.
 */

export interface ViewParams {
  /** View azimuth in radians; positive turns the camera to the right. */
  yaw: number;
  /** View altitude in radians; positive looks up. */
  pitch: number;
  /** Full horizontal field of view in radians, (0, 2*pi). */
  fov: number;
  /** Threshold field of view in radians, (0, pi); beyond it the shrink engages. */
  fovMax: number;
}

export type Vec3 = readonly [number, number, number];
export type Vec2 = readonly [number, number];

/** min(1, fovMax/fov): the coefficient of the radial contraction. */
export function shrinkFactor(fov: number, fovMax: number): number {
  if (!(fov > 0 && fov < 2 * Math.PI)) {
    throw new RangeError(`fov must be in (0, 2*pi) radians, got ${fov}`);
  }
  if (!(fovMax > 0 && fovMax < Math.PI)) {
    throw new RangeError(`fovMax must be in (0, pi) radians, got ${fovMax}`);
  }
  return Math.min(1, fovMax / fov);
}

/**
 * Tangent of the half-angle where the contracted field edge ends up.
 *
 * The edge starts fov/2 off axis; contracting moves it to 2*atan(t) with
 * t = rho*tan(fov/4).  Dividing the pinhole output by tan of that angle,
 * 2t/(1 - t^2), pins the original edge to |u| = 1.  If the contracted edge
 * still reaches 90 degrees or beyond, no finite normalizer can frame it,
 * so the nominal fovMax cone is framed instead.  Same branch, same epsilon
 * as the core.
 */
export function edgeTangent(view: ViewParams, rho: number): number {
  const t = rho * Math.tan(0.25 * view.fov);
  if (t >= 1 - 1e-12) {
    return Math.tan(0.5 * view.fovMax);
  }
  return (2 * t) / (1 - t * t);
}

/** Rotate a world direction into the camera frame: yaw about +y, then pitch. */
export function rotateView(p: Vec3, yaw: number, pitch: number): Vec3 {
  const [x, y, z] = p;
  const cy = Math.cos(yaw);
  const sy = Math.sin(yaw);
  const cp = Math.cos(pitch);
  const sp = Math.sin(pitch);
  const x1 = cy * x + sy * z;
  const z1 = cy * z - sy * x;
  const y2 = cp * y + sp * z1;
  const z2 = cp * z1 - sp * y;
  return [x1, y2, z2];
}

function pinhole(p: Vec3, tangent: number): Vec2 {
  const [x, y, z] = p;
  if (z >= -1e-9) {
    throw new RangeError("direction at or behind the camera plane");
  }
  return [x / -z / tangent, y / -z / tangent];
}

/** Plain perspective: rotate and apply the pinhole scaled to the field edge. */
export function perspectiveProject(view: ViewParams, dir: Vec3): Vec2 {
  return pinhole(rotateView(dir, view.yaw, view.pitch), Math.tan(0.5 * view.fov));
}

/**
 * The full contraction pipeline for one direction.
 *
 * With rho = 1 this hands off to the perspective path outright, mirroring
 * the core's degeneration guarantee.  Otherwise: plane coordinate
 * w = 2(x + iy)/(1 - z), scale by rho, lift back to the sphere, pinhole.
 */
export function mobiusProject(view: ViewParams, dir: Vec3): Vec2 {
  const rho = shrinkFactor(view.fov, view.fovMax);
  if (rho === 1) {
    return perspectiveProject(view, dir);
  }
  const [x, y, z] = rotateView(dir, view.yaw, view.pitch);
  const denom = Math.max(1 - z, 1e-12);
  const wx = (rho * 2 * x) / denom;
  const wy = (rho * 2 * y) / denom;
  const s = wx * wx + wy * wy;
  const q: Vec3 = [(4 * wx) / (s + 4), (4 * wy) / (s + 4), (s - 4) / (s + 4)];
  return pinhole(q, edgeTangent(view, rho));
}

/**
 * Pinhole scale for the current view, as the shader consumes it.  The
 * degenerate case frames tan(fov/2) through the same dispatch
 * mobiusProject uses, so a uniform computed here always agrees with the
 * scalar pipeline.
 */
export function frameNormalizer(view: ViewParams, rho: number): number {
  return rho === 1 ? Math.tan(0.5 * view.fov) : edgeTangent(view, rho);
}

/**
 * Project one parity-record direction under the record's own projection
 * kind.  The viewer renders only the contraction family, so only the two
 * kinds it can draw are accepted here.
 */
export function projectRecord(kind: string, view: ViewParams, dir: Vec3): Vec2 {
  if (kind === "mobius") {
    return mobiusProject(view, dir);
  }
  if (kind === "perspective") {
    return perspectiveProject(view, dir);
  }
  throw new RangeError(`viewer cannot project kind "${kind}"`);
}

export function degToRad(deg: number): number {
  return (deg * Math.PI) / 180;
}
