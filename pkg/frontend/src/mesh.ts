/**
 * Sphere mesh for the vertex-stage warp.
 *
 * The sphere is gridded in texture space: vertex (i, j) of an n-per-side
 * mesh carries (u, v) = (j/n, i/n), and the shader derives azimuth and
 * altitude from that pair.  Working in texture space makes the seam
 * handling exact: the j = 0 and j = n columns describe the same world
 * directions (azimuth -pi and +pi) but carry u = 0 and u = 1, so no
 * triangle ever interpolates texture coordinates across the wrap.
 */

export interface SphereMesh {
  /** Interleaved (u, v) pairs, (n+1)^2 vertices in row-major rows. */
  readonly uv: Float32Array;
  /** Triangle list, 6*n^2 indices into uv. */
  readonly indices: Uint32Array;
  readonly vertexCount: number;
  readonly side: number;
}

export function buildSphereMesh(side: number): SphereMesh {
  if (!Number.isInteger(side) || side < 2) {
    throw new RangeError(`mesh side must be an integer >= 2, got ${side}`);
  }
  const rows = side + 1;
  const uv = new Float32Array(rows * rows * 2);
  let k = 0;
  for (let i = 0; i < rows; i++) {
    const v = i / side;
    for (let j = 0; j < rows; j++) {
      uv[k++] = j / side;
      uv[k++] = v;
    }
  }
  const indices = new Uint32Array(side * side * 6);
  let m = 0;
  for (let i = 0; i < side; i++) {
    for (let j = 0; j < side; j++) {
      const a = i * rows + j;
      const b = a + 1;
      const c = a + rows;
      const d = c + 1;
      indices[m++] = a;
      indices[m++] = c;
      indices[m++] = b;
      indices[m++] = b;
      indices[m++] = c;
      indices[m++] = d;
    }
  }
  return { uv, indices, vertexCount: rows * rows, side };
}
