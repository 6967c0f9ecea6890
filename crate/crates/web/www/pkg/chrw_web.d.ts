/* tslint:disable */
/* eslint-disable */

/**
 * P_up(t) from every method on a shared grid.
 */
export class Curves {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    chrw: Float64Array;
    exact: Float64Array;
    max_dev_chrw: number;
    max_dev_rabi_rwa: number;
    max_dev_rwa_rf: number;
    photon_n: number;
    rabi_freq: number;
    rabi_rwa: Float64Array;
    rwa_rf: Float64Array;
    t: Float64Array;
}

/**
 * Rabi frequency against drive amplitude. Points where the self-consistent
 * solve fails hold NaN so the plot shows a gap.
 */
export class RabiSweep {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    amplitude: Float64Array;
    chrw: Float64Array;
    rabi_rwa: Float64Array;
    second_order: Float64Array;
}

/**
 * Fourier spectra of the exact and CHRW P_up(t) over forty Rabi periods,
 * with the exact peaks labelled against the ω / Ω_R comb.
 */
export class SpectrumView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    chrw: Float64Array;
    exact: Float64Array;
    frequency: Float64Array;
    peak_frequency: Float64Array;
    peak_label: string[];
    peak_weight: Float64Array;
    rabi_freq: number;
    resolution: number;
}

export function dynamics(delta: number, epsilon: number, amplitude: number, omega: number, t_max: number, samples: number): Curves;

export function rabi_sweep(delta: number, epsilon: number, omega: number, a_max: number, points: number): RabiSweep;

export function spectrum(delta: number, epsilon: number, amplitude: number, omega: number, threshold: number): SpectrumView;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_curves_free: (a: number, b: number) => void;
    readonly __wbg_get_curves_chrw: (a: number) => [number, number];
    readonly __wbg_get_curves_exact: (a: number) => [number, number];
    readonly __wbg_get_curves_max_dev_chrw: (a: number) => number;
    readonly __wbg_get_curves_max_dev_rabi_rwa: (a: number) => number;
    readonly __wbg_get_curves_max_dev_rwa_rf: (a: number) => number;
    readonly __wbg_get_curves_photon_n: (a: number) => number;
    readonly __wbg_get_curves_rabi_freq: (a: number) => number;
    readonly __wbg_get_curves_rabi_rwa: (a: number) => [number, number];
    readonly __wbg_get_curves_rwa_rf: (a: number) => [number, number];
    readonly __wbg_get_curves_t: (a: number) => [number, number];
    readonly __wbg_get_rabisweep_amplitude: (a: number) => [number, number];
    readonly __wbg_get_rabisweep_chrw: (a: number) => [number, number];
    readonly __wbg_get_rabisweep_rabi_rwa: (a: number) => [number, number];
    readonly __wbg_get_rabisweep_second_order: (a: number) => [number, number];
    readonly __wbg_get_spectrumview_chrw: (a: number) => [number, number];
    readonly __wbg_get_spectrumview_exact: (a: number) => [number, number];
    readonly __wbg_get_spectrumview_frequency: (a: number) => [number, number];
    readonly __wbg_get_spectrumview_peak_frequency: (a: number) => [number, number];
    readonly __wbg_get_spectrumview_peak_label: (a: number) => [number, number];
    readonly __wbg_get_spectrumview_peak_weight: (a: number) => [number, number];
    readonly __wbg_get_spectrumview_rabi_freq: (a: number) => number;
    readonly __wbg_get_spectrumview_resolution: (a: number) => number;
    readonly __wbg_rabisweep_free: (a: number, b: number) => void;
    readonly __wbg_set_curves_chrw: (a: number, b: number, c: number) => void;
    readonly __wbg_set_curves_exact: (a: number, b: number, c: number) => void;
    readonly __wbg_set_curves_max_dev_chrw: (a: number, b: number) => void;
    readonly __wbg_set_curves_max_dev_rabi_rwa: (a: number, b: number) => void;
    readonly __wbg_set_curves_max_dev_rwa_rf: (a: number, b: number) => void;
    readonly __wbg_set_curves_photon_n: (a: number, b: number) => void;
    readonly __wbg_set_curves_rabi_freq: (a: number, b: number) => void;
    readonly __wbg_set_curves_rabi_rwa: (a: number, b: number, c: number) => void;
    readonly __wbg_set_curves_rwa_rf: (a: number, b: number, c: number) => void;
    readonly __wbg_set_curves_t: (a: number, b: number, c: number) => void;
    readonly __wbg_set_rabisweep_amplitude: (a: number, b: number, c: number) => void;
    readonly __wbg_set_rabisweep_chrw: (a: number, b: number, c: number) => void;
    readonly __wbg_set_rabisweep_rabi_rwa: (a: number, b: number, c: number) => void;
    readonly __wbg_set_rabisweep_second_order: (a: number, b: number, c: number) => void;
    readonly __wbg_set_spectrumview_chrw: (a: number, b: number, c: number) => void;
    readonly __wbg_set_spectrumview_exact: (a: number, b: number, c: number) => void;
    readonly __wbg_set_spectrumview_frequency: (a: number, b: number, c: number) => void;
    readonly __wbg_set_spectrumview_peak_frequency: (a: number, b: number, c: number) => void;
    readonly __wbg_set_spectrumview_peak_label: (a: number, b: number, c: number) => void;
    readonly __wbg_set_spectrumview_peak_weight: (a: number, b: number, c: number) => void;
    readonly __wbg_set_spectrumview_rabi_freq: (a: number, b: number) => void;
    readonly __wbg_set_spectrumview_resolution: (a: number, b: number) => void;
    readonly __wbg_spectrumview_free: (a: number, b: number) => void;
    readonly dynamics: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly rabi_sweep: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly spectrum: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_drop_slice: (a: number, b: number) => void;
    readonly __externref_table_alloc: () => number;
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
