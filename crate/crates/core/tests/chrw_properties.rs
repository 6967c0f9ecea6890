use chrw_core::chrw::{a_tilde_bracket_form, generalized_rabi_frequency, rabi_frequency_2nd, renormalize, solve};
use chrw_core::special::bessel_j;
use chrw_core::DriveParams;
use proptest::prelude::*;

fn params() -> impl Strategy<Value = DriveParams> {
    (0.1f64..3.0, -3.0f64..3.0, 0.0f64..1.5, 0.2f64..3.0)
        .prop_map(|(d, e, ratio, w)| DriveParams::new(d, e, ratio * w, w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn solver_converges(p in params()) {
        let s = solve(&p).unwrap();
        prop_assert!(s.residual_norm < 1e-10);
    }

    #[test]
    fn rabi_frequency_even_in_bias(p in params()) {
        let a = generalized_rabi_frequency(&p).unwrap();
        let b = generalized_rabi_frequency(&p.with_epsilon(-p.epsilon)).unwrap();
        prop_assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }

    #[test]
    fn splitting_identity_at_solution(p in params()) {
        let s = solve(&p).unwrap();
        let j0 = bessel_j(0, s.z_arg).unwrap();
        let c = s.coupling(&p) / s.x_norm;
        let lhs = s.xi_big_tilde.powi(2) + (1.0 - j0 * j0) * c * c;
        prop_assert!((lhs - p.bare_splitting().powi(2)).abs() < 1e-9);
    }

    #[test]
    fn renormalized_drive_forms_agree(p in params()) {
        let s = solve(&p).unwrap();
        let bracket = a_tilde_bracket_form(&p, s.xi, s.zeta).unwrap();
        let bessel = renormalize(&p, s.xi, s.zeta).unwrap().a_tilde;
        prop_assert!((bracket - bessel).abs() < 1e-9, "{bracket} vs {bessel}");
    }

    #[test]
    fn weak_drive_matches_second_order(
        d in 0.2f64..2.0, e in -2.0f64..2.0, ratio in 0.0f64..0.05, w in 0.2f64..3.0,
    ) {
        let p = DriveParams::new(d, e, ratio * w, w).unwrap();
        let full = generalized_rabi_frequency(&p).unwrap();
        let second = rabi_frequency_2nd(&p);
        prop_assert!((full - second).abs() < 1e-3 * full.max(1e-300), "{full} vs {second}");
    }
}

#[test]
fn second_order_close_to_full_at_resonant_bias() {
    let p = DriveParams::new(1.0, 1.0, 2f64.sqrt(), 2f64.sqrt()).unwrap();
    assert!((rabi_frequency_2nd(&p) - 0.5).abs() < 1e-12);
    let full = generalized_rabi_frequency(&p).unwrap();
    assert!((full - 0.4643).abs() < 1e-3);
    assert!(rabi_frequency_2nd(&p) / full < 1.1);
}
