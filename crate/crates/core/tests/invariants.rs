use lseries_core::cplx::{self, c};
use lseries_core::ltest::{l_star, l_value, TestFunction};
use lseries_core::modforms::{build_j, synth_harmonic, FourierExpansion};
use lseries_core::specfun::{bernoulli_poly, exp_int_e, gamma, hurwitz_zeta};
use lseries_core::Complex64;
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::f64::consts::PI;

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

fn cx(re: std::ops::Range<f64>, im: std::ops::Range<f64>) -> impl Strategy<Value = Complex64> {
    (re, im).prop_map(|(x, y)| c(x, y))
}

fn synth(k: i32, holo: &[(i64, Complex64)], nonholo: &[(i64, Complex64)]) -> FourierExpansion {
    synth_harmonic(k, holo.iter().copied().collect(), nonholo.iter().copied().collect::<BTreeMap<_, _>>()).unwrap()
}

#[test]
fn known_values() {
    assert!(close(gamma(cplx::re(0.5)).unwrap(), cplx::re(PI.sqrt()), 1e-14));
    // E_1(1) and E_1(−2π) from an independent arbitrary-precision evaluation
    assert!(close(exp_int_e(cplx::re(1.0), cplx::re(1.0)).unwrap(), cplx::re(0.219_383_934_395_520_27), 1e-14));
    let e = exp_int_e(cplx::re(1.0), cplx::re(-2.0 * PI)).unwrap();
    assert!(close(e, c(-107.473_240_821_131_91, -PI), 1e-13), "{e}");
    assert!(close(hurwitz_zeta(cplx::re(2.0), cplx::re(1.0)).unwrap(), cplx::re(PI * PI / 6.0), 1e-14));
}

#[test]
fn j_central_value() {
    let v = l_star(&build_j(40).unwrap(), 0.0).unwrap();
    assert!(close(v.value, c(-50.354_862_165_668, -PI), 1e-11), "{:?}", v);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_recurrence(z in cx(0.2..5.0, -3.0..3.0)) {
        prop_assert!(close(gamma(z + 1.0).unwrap(), z * gamma(z).unwrap(), 1e-12));
    }

    #[test]
    fn exp_int_recurrence(s in cx(-2.0..3.0, -1.0..1.0), z in cx(0.1..20.0, -10.0..10.0)) {
        // s E_{s+1}(z) + z E_s(z) = e^{−z}
        let lhs = s * exp_int_e(s + 1.0, z).unwrap() + z * exp_int_e(s, z).unwrap();
        prop_assert!(close(lhs, (-z).exp(), 1e-11), "{} vs {}", lhs, (-z).exp());
    }

    #[test]
    fn bernoulli_translation(n in 1usize..12, z in cx(-2.0..2.0, -2.0..2.0)) {
        let d = bernoulli_poly(n, z + 1.0).unwrap() - bernoulli_poly(n, z).unwrap();
        prop_assert!(close(d, n as f64 * z.powu(n as u32 - 1), 1e-10));
    }

    #[test]
    fn hurwitz_shift(s in cx(1.5..6.0, -2.0..2.0), z in cx(0.3..4.0, -2.0..2.0)) {
        let d = hurwitz_zeta(s, z).unwrap() - hurwitz_zeta(s, z + 1.0).unwrap();
        prop_assert!(close(d, z.powc(-s), 1e-10));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn l_value_is_linear(
        a in cx(-2.0..2.0, -2.0..2.0),
        b in cx(-2.0..2.0, -2.0..2.0),
        alpha in cx(-1.0..1.0, -1.0..1.0),
        beta in cx(-1.0..1.0, -1.0..1.0),
        s in 0.1f64..2.5,
    ) {
        let f = synth(0, &[(1, a), (2, cplx::re(1.0))], &[(-1, b)]);
        let g = synth(0, &[(1, cplx::re(0.5)), (3, b)], &[(-1, cplx::re(1.0)), (-2, a)]);
        let h = f.combine(alpha, &g, beta).unwrap();
        let phi = TestFunction::phi_sw(s, c(0.5, 1.0));
        let lf = l_value(&f, &phi).unwrap();
        let lg = l_value(&g, &phi).unwrap();
        let lh = l_value(&h, &phi).unwrap();
        let want = alpha * lf.value + beta * lg.value;
        let budget = lh.error_estimate + alpha.norm() * lf.error_estimate + beta.norm() * lg.error_estimate;
        prop_assert!((lh.value - want).norm() <= budget + 1e-13 * (1.0 + want.norm()));
    }
}
