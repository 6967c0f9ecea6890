use std::f64::consts::SQRT_2;

use chrw_core::chrw::{population_up, solve};
use chrw_core::exact::{population_up_exact, IntegratorConfig};
use chrw_core::spectrum::{comb_match, find_peaks, fourier_spectrum, rabi_window, CombLabel, Spectrum};
use chrw_core::{DriveParams, TimeSeries};

const SAMPLES: usize = 8192;

fn spectra(p: &DriveParams) -> (Spectrum, Spectrum, f64) {
    let s = solve(p).unwrap();
    let dt = rabi_window(s.rabi_freq, 40.0) / SAMPLES as f64;
    let exact = population_up_exact(p, 0.0, dt, SAMPLES, &IntegratorConfig::default()).unwrap();
    let chrw = TimeSeries::sample(0.0, dt, SAMPLES, |t| population_up(&s, p, t)).unwrap();
    (fourier_spectrum(&exact, 8).unwrap(), fourier_spectrum(&chrw, 8).unwrap(), s.rabi_freq)
}

#[test]
fn resonant_bias_dominant_lines() {
    let p = DriveParams::new(1.0, 1.0, SQRT_2, SQRT_2).unwrap();
    let (exact, chrw, omega_r) = spectra(&p);
    for sp in [&exact, &chrw] {
        let peaks = find_peaks(sp, 1e-2);
        assert!((peaks[0].0 - 0.4643).abs() < sp.resolution, "{:?}", &peaks[..3]);
        assert!(peaks[..3].iter().any(|pk| (pk.0 - SQRT_2).abs() < sp.resolution));
    }
    // every line above 1e-3 belongs to the comb
    for m in comb_match(&find_peaks(&chrw, 1e-3), SQRT_2, omega_r, chrw.resolution) {
        assert_ne!(m.label, CombLabel::Unclassified, "{m:?}");
    }
}

#[test]
fn weak_drive_far_detuned_heaviest_line_is_upper_sideband() {
    let p = DriveParams::new(1.0, 0.6, 0.1, 0.1).unwrap();
    let (exact, chrw, omega_r) = spectra(&p);
    for sp in [&exact, &chrw] {
        let top = find_peaks(sp, 1e-2)[0].0;
        assert!((top - (omega_r + 0.1)).abs() < sp.resolution, "top line at {top}");
    }
}

#[test]
fn chrw_and_exact_line_sets_agree_off_resonance() {
    let p = DriveParams::new(1.0, 1.0, 1.0, 2.0).unwrap();
    let (exact, chrw, _) = spectra(&p);
    let a = find_peaks(&exact, 1e-2);
    let b = find_peaks(&chrw, 1e-2);
    assert_eq!(a.len(), b.len(), "{a:?}\n{b:?}");
    for (x, y) in a.iter().zip(&b) {
        assert!((x.0 - y.0).abs() < exact.resolution);
    }
}
