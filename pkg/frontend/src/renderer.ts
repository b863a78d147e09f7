/**
 * WebGL2 renderer: a textured sphere mesh pushed through the vertex-stage
 * warp.
 *
 * The renderer owns every GPU object and nothing else; view parameters
 * arrive per draw call from the state.  Context loss is survivable: the
 * lost event is absorbed, and on restore the pipeline, mesh, and texture
 * are rebuilt from the kept decoded image, then onRecovered fires so the
 * caller can schedule a frame.
 */

import { buildSphereMesh } from "./mesh.js";
import { degToRad, frameNormalizer, shrinkFactor } from "./projection.js";
import { FRAGMENT_SHADER, VERTEX_SHADER } from "./shaders.js";
import type { ViewerState } from "./state.js";

export type PanoramaSource = ImageBitmap | HTMLImageElement | HTMLCanvasElement;

export class RendererError extends Error {}

interface Uniforms {
  yaw: WebGLUniformLocation | null;
  pitch: WebGLUniformLocation | null;
  rho: WebGLUniformLocation | null;
  norm: WebGLUniformLocation | null;
  aspect: WebGLUniformLocation | null;
}

function compile(gl: WebGL2RenderingContext, type: number, source: string): WebGLShader {
  const shader = gl.createShader(type);
  if (shader === null) {
    throw new RendererError("could not allocate a shader object");
  }
  gl.shaderSource(shader, source);
  gl.compileShader(shader);
  if (!gl.getShaderParameter(shader, gl.COMPILE_STATUS)) {
    const log = gl.getShaderInfoLog(shader) ?? "no log";
    gl.deleteShader(shader);
    throw new RendererError(`shader compile failed: ${log}`);
  }
  return shader;
}

export class PanoramaRenderer {
  private readonly canvas: HTMLCanvasElement;
  private gl: WebGL2RenderingContext | null = null;
  private program: WebGLProgram | null = null;
  private vao: WebGLVertexArrayObject | null = null;
  private uvBuffer: WebGLBuffer | null = null;
  private indexBuffer: WebGLBuffer | null = null;
  private texture: WebGLTexture | null = null;
  private uniforms: Uniforms | null = null;
  private meshSide = 0;
  private indexCount = 0;
  private source: PanoramaSource | null = null;
  private contextLost = false;

  /** Called after a successful rebuild following GPU context loss. */
  onRecovered: (() => void) | null = null;

  constructor(canvas: HTMLCanvasElement) {
    this.canvas = canvas;
    canvas.addEventListener("webglcontextlost", (event) => {
      event.preventDefault();
      this.contextLost = true;
    });
    canvas.addEventListener("webglcontextrestored", () => {
      this.contextLost = false;
      this.initPipeline();
      if (this.source !== null) {
        this.uploadTexture(this.source);
      }
      this.onRecovered?.();
    });
    this.initPipeline();
  }

  private initPipeline(): void {
    const gl = this.canvas.getContext("webgl2");
    if (gl === null) {
      throw new RendererError("WebGL2 is not available in this browser");
    }
    this.gl = gl;

    const program = gl.createProgram();
    gl.attachShader(program, compile(gl, gl.VERTEX_SHADER, VERTEX_SHADER));
    gl.attachShader(program, compile(gl, gl.FRAGMENT_SHADER, FRAGMENT_SHADER));
    gl.bindAttribLocation(program, 0, "a_uv");
    gl.linkProgram(program);
    if (!gl.getProgramParameter(program, gl.LINK_STATUS)) {
      throw new RendererError(`program link failed: ${gl.getProgramInfoLog(program) ?? "no log"}`);
    }
    this.program = program;
    this.uniforms = {
      yaw: gl.getUniformLocation(program, "u_yaw"),
      pitch: gl.getUniformLocation(program, "u_pitch"),
      rho: gl.getUniformLocation(program, "u_rho"),
      norm: gl.getUniformLocation(program, "u_norm"),
      aspect: gl.getUniformLocation(program, "u_aspect"),
    };

    this.vao = gl.createVertexArray();
    this.uvBuffer = gl.createBuffer();
    this.indexBuffer = gl.createBuffer();
    this.texture = gl.createTexture();
    this.meshSide = 0;

    gl.bindTexture(gl.TEXTURE_2D, this.texture);
    // Horizontal wrap matches the panorama's periodic azimuth; vertical
    // clamp matches the sampler's pole handling.
    gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_WRAP_S, gl.REPEAT);
    gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_WRAP_T, gl.CLAMP_TO_EDGE);
    gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_MIN_FILTER, gl.LINEAR_MIPMAP_LINEAR);
    gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_MAG_FILTER, gl.LINEAR);

    gl.clearColor(0.07, 0.07, 0.09, 1.0);
    gl.disable(gl.DEPTH_TEST);
    gl.disable(gl.CULL_FACE);
  }

  private uploadTexture(source: PanoramaSource): void {
    const gl = this.gl;
    if (gl === null) {
      return;
    }
    gl.bindTexture(gl.TEXTURE_2D, this.texture);
    gl.texImage2D(gl.TEXTURE_2D, 0, gl.RGBA, gl.RGBA, gl.UNSIGNED_BYTE, source);
    gl.generateMipmap(gl.TEXTURE_2D);
  }

  /** Keep and upload a decoded panorama; kept so context restore can re-upload. */
  setPanorama(source: PanoramaSource): void {
    this.source = source;
    this.uploadTexture(source);
  }

  private ensureMesh(side: number): void {
    const gl = this.gl;
    if (gl === null || side === this.meshSide) {
      return;
    }
    const mesh = buildSphereMesh(side);
    gl.bindVertexArray(this.vao);
    gl.bindBuffer(gl.ARRAY_BUFFER, this.uvBuffer);
    gl.bufferData(gl.ARRAY_BUFFER, mesh.uv, gl.STATIC_DRAW);
    gl.enableVertexAttribArray(0);
    gl.vertexAttribPointer(0, 2, gl.FLOAT, false, 0, 0);
    gl.bindBuffer(gl.ELEMENT_ARRAY_BUFFER, this.indexBuffer);
    gl.bufferData(gl.ELEMENT_ARRAY_BUFFER, mesh.indices, gl.STATIC_DRAW);
    this.meshSide = side;
    this.indexCount = mesh.indices.length;
  }

  private fitCanvas(): void {
    const dpr = window.devicePixelRatio || 1;
    const width = Math.max(1, Math.round(this.canvas.clientWidth * dpr));
    const height = Math.max(1, Math.round(this.canvas.clientHeight * dpr));
    if (this.canvas.width !== width || this.canvas.height !== height) {
      this.canvas.width = width;
      this.canvas.height = height;
    }
  }

  /** Aspect ratio of the current drawing buffer (frames the vertical FOV). */
  aspect(): number {
    return this.canvas.width / Math.max(1, this.canvas.height);
  }

  draw(state: ViewerState): void {
    const gl = this.gl;
    if (gl === null || this.contextLost || state.status !== "ready") {
      return;
    }
    this.fitCanvas();
    this.ensureMesh(state.meshSide);

    const view = {
      yaw: degToRad(state.yawDeg),
      pitch: degToRad(state.pitchDeg),
      fov: degToRad(state.fovDeg),
      fovMax: degToRad(state.fovMaxDeg),
    };
    const rho = shrinkFactor(view.fov, view.fovMax);
    const norm = frameNormalizer(view, rho);

    gl.viewport(0, 0, this.canvas.width, this.canvas.height);
    gl.clear(gl.COLOR_BUFFER_BIT);
    gl.useProgram(this.program);
    gl.bindVertexArray(this.vao);
    gl.bindTexture(gl.TEXTURE_2D, this.texture);
    const u = this.uniforms!;
    gl.uniform1f(u.yaw, view.yaw);
    gl.uniform1f(u.pitch, view.pitch);
    gl.uniform1f(u.rho, rho);
    gl.uniform1f(u.norm, norm);
    gl.uniform1f(u.aspect, this.aspect());
    gl.drawElements(gl.TRIANGLES, this.indexCount, gl.UNSIGNED_INT, 0);
  }
}
