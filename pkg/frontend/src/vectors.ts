/**
 * Parser for the core-emitted parity vector files.
 *
 * One record per line, space-separated key=value tokens: the full
 * projection description plus a unit direction and the plane point the
 * core maps it to, all printed at 17 significant digits so every double
 * survives the text round trip exactly.  All records in one file share the
 * projection; it is read from the first line.
 */

import type { Vec2, Vec3, ViewParams } from "./projection.js";
import { degToRad } from "./projection.js";

export interface SpecParams {
  readonly kind: string;
  readonly view: ViewParams;
  readonly aspect: number;
  readonly panniniD: number;
}

export interface ParityRecord {
  readonly dir: Vec3;
  readonly plane: Vec2;
}

export interface ParityFile {
  readonly spec: SpecParams;
  readonly records: readonly ParityRecord[];
}

const DEFAULTS: Record<string, number> = {
  yaw_deg: 0,
  pitch_deg: 0,
  fov_deg: 90,
  fov_max_deg: 60,
  aspect: 4 / 3,
  pannini_d: 1,
};

function numberField(fields: Map<string, string>, key: string, lineNo: number): number {
  const raw = fields.get(key) ?? String(DEFAULTS[key] ?? "");
  const value = Number(raw);
  if (raw === "" || !Number.isFinite(value)) {
    throw new Error(`line ${lineNo}: field "${key}" is missing or not a number`);
  }
  return value;
}

function parseLine(line: string, lineNo: number): { spec: SpecParams; record: ParityRecord } {
  const fields = new Map<string, string>();
  for (const token of line.split(/\s+/)) {
    const eq = token.indexOf("=");
    if (eq <= 0) {
      throw new Error(`line ${lineNo}: token "${token}" is not key=value`);
    }
    fields.set(token.slice(0, eq), token.slice(eq + 1));
  }
  const kind = fields.get("kind");
  if (kind === undefined) {
    throw new Error(`line ${lineNo}: record has no "kind" field`);
  }
  const spec: SpecParams = {
    kind,
    view: {
      yaw: degToRad(numberField(fields, "yaw_deg", lineNo)),
      pitch: degToRad(numberField(fields, "pitch_deg", lineNo)),
      fov: degToRad(numberField(fields, "fov_deg", lineNo)),
      fovMax: degToRad(numberField(fields, "fov_max_deg", lineNo)),
    },
    aspect: numberField(fields, "aspect", lineNo),
    panniniD: numberField(fields, "pannini_d", lineNo),
  };
  const record: ParityRecord = {
    dir: [
      numberField(fields, "dir_x", lineNo),
      numberField(fields, "dir_y", lineNo),
      numberField(fields, "dir_z", lineNo),
    ],
    plane: [numberField(fields, "u", lineNo), numberField(fields, "v", lineNo)],
  };
  return { spec, record };
}

export function parseVectorFile(text: string): ParityFile {
  let spec: SpecParams | null = null;
  const records: ParityRecord[] = [];
  const lines = text.split(/\r?\n/);
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i]!.trim();
    if (line === "") {
      continue;
    }
    const parsed = parseLine(line, i + 1);
    if (spec === null) {
      spec = parsed.spec;
    }
    records.push(parsed.record);
  }
  if (spec === null) {
    throw new Error("no records found");
  }
  return { spec, records };
}
