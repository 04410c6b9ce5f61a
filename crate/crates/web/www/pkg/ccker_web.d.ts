/* tslint:disable */
/* eslint-disable */

/**
 * Exponent, case and OR witnesses for the `(d, l, q)` shape.
 */
export function analyze_shape(d: number, l: number, q: number): string;

/**
 * `r_clique(q, t)` for `3 <= q <= q_max` and `1 <= t <= t_max`; `null` where `t > q`.
 */
export function clique_exponents(q_max: number, t_max: number): string;

/**
 * Kernelizes a seeded random URFC instance and, when small, checks the
 * solution counts on both sides.
 */
export function kernelize_random(n: number, d: number, l: number, q: number, density: number, seed: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze_shape: (a: number, b: number, c: number) => [number, number];
    readonly clique_exponents: (a: number, b: number) => [number, number];
    readonly kernelize_random: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
