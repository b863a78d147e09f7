/**
 * GLSL for the forward warp.
 *
 * The vertex stage runs the same pipeline as mobiusProject in
 * projection.ts: texture-space grid coordinate to direction, rotate into
 * the view frame, radial contraction conjugated through the plane
 * projection, pinhole.  The normalizer and the contraction coefficient
 * arrive as uniforms computed in double precision on the CPU, so the two
 * implementations cannot drift apart on the parts that are cheap to share.
 *
 * The homogeneous w is set to -z: the hardware divide performs the pinhole,
 * and vertices behind the camera plane clip themselves.  Triangles that
 * straddle the fold are finished off in the fragment stage.
 */

export const VERTEX_SHADER = `#version 300 es

in vec2 a_uv;

uniform float u_yaw;
uniform float u_pitch;
uniform float u_rho;
uniform float u_norm;
uniform float u_aspect;

out vec2 v_uv;
out float v_front;

const float PI = 3.14159265358979;

void main() {
  v_uv = a_uv;

  float az = (a_uv.x - 0.5) * 2.0 * PI;
  float alt = (0.5 - a_uv.y) * PI;
  float ca = cos(alt);
  vec3 p = vec3(sin(az) * ca, sin(alt), -cos(az) * ca);

  float cy = cos(u_yaw);
  float sy = sin(u_yaw);
  float cp = cos(u_pitch);
  float sp = sin(u_pitch);
  p = vec3(cy * p.x + sy * p.z, p.y, cy * p.z - sy * p.x);
  p = vec3(p.x, cp * p.y + sp * p.z, cp * p.z - sp * p.y);

  vec3 q = p;
  if (u_rho < 1.0) {
    vec2 w = u_rho * 2.0 * p.xy / max(1.0 - p.z, 1e-9);
    float s = dot(w, w);
    q = vec3(4.0 * w, s - 4.0) / (s + 4.0);
  }

  v_front = -q.z;
  gl_Position = vec4(q.x / u_norm, q.y * u_aspect / u_norm, 0.0, -q.z);
}
`;

export const FRAGMENT_SHADER = `#version 300 es
precision highp float;

in vec2 v_uv;
in float v_front;

uniform sampler2D u_panorama;

out vec4 outColor;

void main() {
  if (v_front < 1e-4) {
    discard;
  }
  outColor = texture(u_panorama, v_uv);
}
`;
