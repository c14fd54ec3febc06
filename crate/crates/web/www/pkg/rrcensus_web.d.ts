/* tslint:disable */
/* eslint-disable */

/**
 * The three Weyl dimensions together with the census at degree `m`.
 */
export function dims_and_census(n: number, m: number): string;

/**
 * Coefficients of the product, congruence and difference-condition sides.
 */
export function identity_table(n: number, max: number): string;

/**
 * For the selected cell `x = x_ab`, marks every cell `y` that forms a
 * quadratic leading term with it at the same or an adjacent degree.
 */
export function leading_term_neighbours(n: number, a: number, b: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly dims_and_census: (a: number, b: number) => [number, number, number, number];
    readonly identity_table: (a: number, b: number) => [number, number, number, number];
    readonly leading_term_neighbours: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
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
