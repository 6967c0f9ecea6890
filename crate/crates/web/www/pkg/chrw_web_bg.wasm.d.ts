/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_curves_free: (a: number, b: number) => void;
export const __wbg_get_curves_chrw: (a: number) => [number, number];
export const __wbg_get_curves_exact: (a: number) => [number, number];
export const __wbg_get_curves_max_dev_chrw: (a: number) => number;
export const __wbg_get_curves_max_dev_rabi_rwa: (a: number) => number;
export const __wbg_get_curves_max_dev_rwa_rf: (a: number) => number;
export const __wbg_get_curves_photon_n: (a: number) => number;
export const __wbg_get_curves_rabi_freq: (a: number) => number;
export const __wbg_get_curves_rabi_rwa: (a: number) => [number, number];
export const __wbg_get_curves_rwa_rf: (a: number) => [number, number];
export const __wbg_get_curves_t: (a: number) => [number, number];
export const __wbg_get_rabisweep_amplitude: (a: number) => [number, number];
export const __wbg_get_rabisweep_chrw: (a: number) => [number, number];
export const __wbg_get_rabisweep_rabi_rwa: (a: number) => [number, number];
export const __wbg_get_rabisweep_second_order: (a: number) => [number, number];
export const __wbg_get_spectrumview_chrw: (a: number) => [number, number];
export const __wbg_get_spectrumview_exact: (a: number) => [number, number];
export const __wbg_get_spectrumview_frequency: (a: number) => [number, number];
export const __wbg_get_spectrumview_peak_frequency: (a: number) => [number, number];
export const __wbg_get_spectrumview_peak_label: (a: number) => [number, number];
export const __wbg_get_spectrumview_peak_weight: (a: number) => [number, number];
export const __wbg_get_spectrumview_rabi_freq: (a: number) => number;
export const __wbg_get_spectrumview_resolution: (a: number) => number;
export const __wbg_rabisweep_free: (a: number, b: number) => void;
export const __wbg_set_curves_chrw: (a: number, b: number, c: number) => void;
export const __wbg_set_curves_exact: (a: number, b: number, c: number) => void;
export const __wbg_set_curves_max_dev_chrw: (a: number, b: number) => void;
export const __wbg_set_curves_max_dev_rabi_rwa: (a: number, b: number) => void;
export const __wbg_set_curves_max_dev_rwa_rf: (a: number, b: number) => void;
export const __wbg_set_curves_photon_n: (a: number, b: number) => void;
export const __wbg_set_curves_rabi_freq: (a: number, b: number) => void;
export const __wbg_set_curves_rabi_rwa: (a: number, b: number, c: number) => void;
export const __wbg_set_curves_rwa_rf: (a: number, b: number, c: number) => void;
export const __wbg_set_curves_t: (a: number, b: number, c: number) => void;
export const __wbg_set_rabisweep_amplitude: (a: number, b: number, c: number) => void;
export const __wbg_set_rabisweep_chrw: (a: number, b: number, c: number) => void;
export const __wbg_set_rabisweep_rabi_rwa: (a: number, b: number, c: number) => void;
export const __wbg_set_rabisweep_second_order: (a: number, b: number, c: number) => void;
export const __wbg_set_spectrumview_chrw: (a: number, b: number, c: number) => void;
export const __wbg_set_spectrumview_exact: (a: number, b: number, c: number) => void;
export const __wbg_set_spectrumview_frequency: (a: number, b: number, c: number) => void;
export const __wbg_set_spectrumview_peak_frequency: (a: number, b: number, c: number) => void;
export const __wbg_set_spectrumview_peak_label: (a: number, b: number, c: number) => void;
export const __wbg_set_spectrumview_peak_weight: (a: number, b: number, c: number) => void;
export const __wbg_set_spectrumview_rabi_freq: (a: number, b: number) => void;
export const __wbg_set_spectrumview_resolution: (a: number, b: number) => void;
export const __wbg_spectrumview_free: (a: number, b: number) => void;
export const dynamics: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const rabi_sweep: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const spectrum: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_drop_slice: (a: number, b: number) => void;
export const __externref_table_alloc: () => number;
export const __wbindgen_start: () => void;
