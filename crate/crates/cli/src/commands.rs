use chrw_core::baselines::{rabi_rwa_frequency, rabi_rwa_population, RwaRf};
use chrw_core::chrw::{
    bloch_siegert_shift_2nd, population_up, rabi_frequency_2nd, rabi_r0, resonance_shift_numeric,
    second_order_bs_reference, solve, ChrwSolution,
};
use chrw_core::exact::{population_up_exact, IntegratorConfig};
use chrw_core::model::time_grid;
use chrw_core::spectrum::{comb_match, find_peaks, fourier_spectrum, rabi_window, DEFAULT_PAD_FACTOR, PEAK_FLOOR};
use chrw_core::{DriveParams, TimeSeries};
use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::args::{Axis, Method, Quantity};
use crate::error::CliError;
use crate::output::{fmt15, number, Output, Table};
use crate::settings::{apply, Base, Sweep, Window};

pub fn cmd_solve(b: &Base) -> Result<Output, CliError> {
    let s = solve(&b.params)?;
    let p = &b.params;
    let mut m = Map::new();
    let mut put = |k: &str, v: f64| {
        m.insert(k.into(), number(v));
    };
    put("delta", b.freq_out(p.delta));
    put("epsilon", b.freq_out(p.epsilon));
    put("amplitude", b.freq_out(p.amplitude));
    put("omega", b.freq_out(p.omega));
    put("xi", s.xi);
    put("zeta", s.zeta);
    put("x_norm", s.x_norm);
    put("z_arg", s.z_arg);
    put("delta_tilde", b.freq_out(s.delta_tilde));
    put("epsilon_tilde", b.freq_out(s.epsilon_tilde));
    put("j_c", s.j_c);
    put("xi_big_tilde", b.freq_out(s.xi_big_tilde));
    put("a_tilde", b.freq_out(s.a_tilde));
    put("u", s.u);
    put("v", s.v);
    put("detuning_tilde", b.freq_out(s.detuning_tilde));
    put("rabi_freq", b.freq_out(s.rabi_freq));
    put("residual_norm", s.residual_norm);
    Ok(Output::Record(m))
}

fn rwa_rf(b: &Base) -> Result<RwaRf, CliError> {
    let rf = RwaRf::new(&b.params, b.photon_n)?;
    if rf.off_resonance {
        eprintln!(
            "warning: rwa_rf uses n = {} but n*omega + epsilon = {} is not zero",
            b.photon_n,
            fmt15(b.freq_out(b.photon_n as f64 * b.params.omega + b.params.epsilon))
        );
    }
    Ok(rf)
}

fn column(b: &Base, w: &Window, method: Method) -> Result<Vec<f64>, CliError> {
    let p = &b.params;
    let times = time_grid(0.0, w.dt(), w.samples);
    Ok(match method {
        Method::Chrw => {
            let s = solve(p)?;
            times.map(|t| population_up(&s, p, t)).collect()
        }
        Method::RabiRwa => times.map(|t| rabi_rwa_population(p, t)).collect(),
        Method::RwaRf => {
            let rf = rwa_rf(b)?;
            times.map(|t| rf.population(t)).collect()
        }
        Method::Exact => population_up_exact(p, 0.0, w.dt(), w.samples, &IntegratorConfig::default())?.values,
        Method::All => unreachable!("expanded by the caller"),
    })
}

const ALL: [Method; 4] = [Method::Chrw, Method::RabiRwa, Method::RwaRf, Method::Exact];

fn time_table(b: &Base, w: &Window, methods: &[Method]) -> Result<(Table, Vec<Vec<f64>>), CliError> {
    let cols = methods
        .iter()
        .map(|&m| column(b, w, m))
        .collect::<Result<Vec<_>, _>>()?;
    let mut headers = vec!["t".to_string()];
    headers.extend(methods.iter().map(|m| m.column().to_string()));
    let rows = time_grid(0.0, w.dt(), w.samples)
        .enumerate()
        .map(|(i, t)| std::iter::once(Some(t)).chain(cols.iter().map(|c| Some(c[i]))).collect())
        .collect();
    Ok((Table { headers, rows }, cols))
}

pub fn cmd_evolve(b: &Base, w: &Window, method: Method) -> Result<Output, CliError> {
    let methods: Vec<Method> = if method == Method::All { ALL.to_vec() } else { vec![method] };
    let (table, _) = time_table(b, w, &methods)?;
    Ok(Output::Table { table, footer: None })
}

pub fn cmd_compare(b: &Base, w: &Window) -> Result<Output, CliError> {
    let (table, cols) = time_table(b, w, &ALL)?;
    let exact = &cols[3];
    let mut footer = Map::new();
    for (m, col) in ALL[..3].iter().zip(&cols) {
        let dev = col.iter().zip(exact).map(|(a, e)| (a - e).abs()).fold(0.0, f64::max);
        footer.insert(format!("max_dev_{}", m.column()), number(dev));
    }
    footer.insert("photon_n".into(), Value::from(b.photon_n));
    Ok(Output::Table {
        table,
        footer: Some(footer),
    })
}

fn quantity(p: &DriveParams, q: Quantity) -> chrw_core::Result<f64> {
    Ok(match q {
        Quantity::Rabi => solve(p)?.rabi_freq,
        Quantity::Rabi2nd => rabi_frequency_2nd(p),
        Quantity::RabiRwaFreq => rabi_rwa_frequency(p),
        Quantity::BsShift => {
            let s0 = p.bare_splitting();
            let half = (0.25 * p.amplitude).max(0.05 * s0);
            resonance_shift_numeric(p.delta, p.epsilon, p.amplitude, (s0 - half).max(1e-3 * s0)..=(s0 + half))?
                .delta_omega
        }
        Quantity::BsShift2nd => bloch_siegert_shift_2nd(p),
        Quantity::BsRef => second_order_bs_reference(p),
        Quantity::RabiR0 => rabi_r0(p),
    })
}

fn sweep_point(base: DriveParams, s: &Sweep, x: f64, series: Option<(Axis, f64)>) -> Result<Vec<f64>, String> {
    let mut p = apply(base, s.axis, x)?;
    if let Some((axis, v)) = series {
        p = apply(p, axis, v)?;
    }
    if s.track_resonance {
        p = p.with_omega(p.bare_splitting());
    }
    p.validate().map_err(|e| e.to_string())?;
    s.quantities
        .iter()
        .map(|&q| quantity(&p, q).map_err(|e| format!("{}: {e}", q.column())))
        .collect()
}

pub fn cmd_sweep(b: &Base, s: &Sweep) -> Result<Output, CliError> {
    let series: Vec<Option<(Axis, f64)>> = match &s.series {
        Some((axis, values)) => values.iter().map(|&v| Some((*axis, v))).collect(),
        None => vec![None],
    };
    let jobs: Vec<(usize, usize)> = (0..s.values.len())
        .flat_map(|i| (0..series.len()).map(move |j| (i, j)))
        .collect();
    // rayon's indexed collect keeps job order whatever order workers finish in
    let results: Vec<Result<Vec<f64>, String>> = jobs
        .par_iter()
        .map(|&(i, j)| sweep_point(b.params, s, s.values[i], series[j]))
        .collect();

    let mut headers = vec![s.axis.column().to_string()];
    for sv in &series {
        for q in &s.quantities {
            headers.push(match sv {
                Some((axis, v)) => format!("{}_{}_{}", q.column(), axis.column(), fmt15(b.freq_out(*v))),
                None => q.column().to_string(),
            });
        }
    }
    let mut rows = Vec::with_capacity(s.values.len());
    for (i, &x) in s.values.iter().enumerate() {
        let mut row = vec![Some(b.freq_out(x))];
        for j in 0..series.len() {
            match &results[i * series.len() + j] {
                // every quantity is a frequency
                Ok(vals) => row.extend(vals.iter().map(|&v| Some(b.freq_out(v)))),
                Err(e) => {
                    eprintln!("warning: {} = {}: {e}", s.axis.column(), fmt15(b.freq_out(x)));
                    row.extend(s.quantities.iter().map(|_| None));
                }
            }
        }
        rows.push(row);
    }
    Ok(Output::Table {
        table: Table { headers, rows },
        footer: None,
    })
}

pub struct SpectrumOptions {
    pub method: Method,
    pub pad: Option<usize>,
    pub threshold: Option<f64>,
}

pub fn cmd_spectrum(b: &Base, w: &Window, opts: &SpectrumOptions) -> Result<Output, CliError> {
    let p = &b.params;
    let methods: Vec<Method> = match opts.method {
        Method::All => vec![Method::Exact, Method::Chrw],
        m @ (Method::Exact | Method::Chrw) => vec![m],
        other => {
            return Err(CliError::Usage(format!(
                "spectrum supports exact, chrw or all, not {}",
                other.column()
            )))
        }
    };
    let pad = opts.pad.unwrap_or(DEFAULT_PAD_FACTOR);
    let threshold = opts.threshold.unwrap_or(PEAK_FLOOR);
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(CliError::Usage(format!("threshold must lie in (0, 1], got {threshold}")));
    }
    let sol: ChrwSolution = solve(p)?;

    let mut spectra = Vec::new();
    for &m in &methods {
        let values = column(b, w, m)?;
        let series = TimeSeries::new(0.0, w.dt(), values)?;
        spectra.push((m, fourier_spectrum(&series, pad)?));
    }

    let resolution = spectra[0].1.resolution;
    let mut peaks = Vec::new();
    for (m, sp) in &spectra {
        for c in comb_match(&find_peaks(sp, threshold), p.omega, sol.rabi_freq, resolution) {
            let mut o = Map::new();
            o.insert("method".into(), Value::from(m.column()));
            o.insert("nu".into(), number(b.freq_out(c.frequency)));
            o.insert("weight".into(), number(c.weight));
            o.insert("label".into(), Value::from(c.label.to_string()));
            o.insert("residual".into(), number(b.freq_out(c.residual)));
            peaks.push(Value::Object(o));
        }
    }

    let mut headers = vec!["nu".to_string()];
    headers.extend(methods.iter().map(|m| m.column().to_string()));
    let freqs = &spectra[0].1.frequencies;
    let rows = freqs
        .iter()
        .enumerate()
        .map(|(k, &nu)| {
            std::iter::once(Some(b.freq_out(nu)))
                .chain(spectra.iter().map(|(_, sp)| Some(sp.magnitudes[k])))
                .collect()
        })
        .collect();

    let mut footer = Map::new();
    footer.insert("omega".into(), number(b.freq_out(p.omega)));
    footer.insert("rabi_freq".into(), number(b.freq_out(sol.rabi_freq)));
    footer.insert("resolution".into(), number(b.freq_out(resolution)));
    footer.insert("peaks".into(), Value::Array(peaks));
    Ok(Output::Table {
        table: Table { headers, rows },
        footer: Some(footer),
    })
}

/// Forty Rabi periods of the CHRW solution (forty drive periods when the
/// Rabi frequency vanishes), sampled at least four times per period of the
/// fastest first-order line `ω + Ω_R`.
pub fn default_spectrum_window(p: &DriveParams) -> Result<Window, CliError> {
    let rabi = solve(p)?.rabi_freq;
    let t_max = if rabi > 1e-9 * p.omega {
        rabi_window(rabi, 40.0)
    } else {
        40.0 * p.period()
    };
    let needed = (t_max * 2.0 * (p.omega + rabi) / std::f64::consts::PI).ceil() as usize;
    Ok(Window {
        t_max,
        samples: needed.max(8192),
    })
}
