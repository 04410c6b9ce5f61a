/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const analyze_shape: (a: number, b: number, c: number) => [number, number];
export const clique_exponents: (a: number, b: number) => [number, number];
export const kernelize_random: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
