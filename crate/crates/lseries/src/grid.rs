//! Invariant grid for the special-function kernels.
//!
//! Each family compares two routes to the same quantity. The Hurwitz
//! reduction of the Lerch function is checked against a self-contained
//! Euler–Maclaurin evaluation.

use lseries_core::cplx::{self, c};
use lseries_core::specfun::{
    bernoulli_poly, cal_ei, digamma, exp_int_e, hurwitz_zeta, hurwitz_zeta_star, inc_gamma_upper, lerch_zeta,
    polygamma,
};
use lseries_core::Complex64;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Default)]
pub struct GridReport {
    pub assertions: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl GridReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn assert_close(&mut self, what: impl FnOnce() -> String, got: lseries_core::Result<Complex64>, want: Complex64, tol: f64) {
        self.assertions += 1;
        match got {
            Ok(g) if (g - want).norm() <= tol => {}
            Ok(g) => self.failures.push(format!("{}: {g} vs {want} (|Δ| = {:.3e})", what(), (g - want).norm())),
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }

    fn assert_true(&mut self, what: impl FnOnce() -> String, ok: bool) {
        self.assertions += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

const B2J: [f64; 8] =
    [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0];

/// Euler–Maclaurin `ζ(s, z)` with 24 direct terms and 8 correction terms,
/// for `Re s > 1` and `Re z > 0`.
pub fn hurwitz_euler_maclaurin(s: Complex64, z: Complex64) -> Complex64 {
    const N: usize = 24;
    let mut sum: Complex64 = (0..N).map(|n| (z + n as f64).powc(-s)).sum();
    let x = z + N as f64;
    sum += x.powc(1.0 - s) / (s - 1.0) + 0.5 * x.powc(-s);
    let mut rising = s;
    let mut fact = 2.0;
    for (j, b) in B2J.iter().enumerate() {
        let k = 2 * j + 2;
        sum += *b / fact * rising * x.powc(-s - (k as f64 - 1.0));
        rising *= (s + k as f64 - 1.0) * (s + k as f64);
        fact *= ((k + 1) * (k + 2)) as f64;
    }
    sum
}

fn z_grid() -> Vec<Complex64> {
    vec![
        c(0.3, 0.0),
        c(0.5, 0.5),
        c(1.0, 0.0),
        c(1.5, -2.0),
        c(2.0, 1.0),
        c(3.0, 3.0),
        c(0.25, 1.0),
        c(4.5, -0.5),
        c(0.8, 4.0),
        c(6.0, 0.0),
        c(0.1, -0.7),
        c(2.5, 0.0),
    ]
}

pub fn specfun_grid(tol: f64) -> GridReport {
    let start = Instant::now();
    let mut g = GridReport::default();

    // Γ(r+1, z) = rΓ(r, z) + z^r e^{−z}
    let rs = [c(-2.5, 0.0), c(-1.0, 0.0), c(-0.5, 0.0), c(0.0, 0.0), c(0.5, 0.0), c(1.0, 0.0), c(2.5, 0.0), c(1.0, 1.0), c(-0.3, 0.7)];
    let zs = [c(0.1, 0.0), c(0.5, 0.5), c(1.0, 0.0), c(2.0, -1.0), c(3.0, 3.0), c(5.0, 0.0), c(0.0, 8.0), c(-2.0, 1.0), c(12.0, 0.0), c(20.0, 5.0)];
    for &r in &rs {
        for &z in &zs {
            let want = inc_gamma_upper(r, z).map(|v| r * v + cplx::pow(z, r) * (-z).exp());
            match want {
                Ok(w) => g.assert_close(|| format!("Γ recurrence r={r} z={z}"), inc_gamma_upper(r + 1.0, z), w, tol),
                Err(e) => g.assert_true(|| format!("Γ recurrence r={r} z={z}: {e}"), false),
            }
        }
    }

    // E_s(z) = z^{s−1} Γ(1−s, z)
    let ss = [c(-2.0, 0.0), c(-0.5, 0.0), c(0.0, 0.0), c(0.5, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(3.5, 0.0), c(0.5, 1.0)];
    let mut ez = z_grid();
    ez.extend([c(-3.0, 2.0), c(9.0, -6.0), c(15.0, 0.0)]);
    for &s in &ss {
        for &z in &ez {
            match inc_gamma_upper(1.0 - s, z) {
                Ok(gv) => {
                    let want = cplx::pow(z, s - 1.0) * gv;
                    g.assert_close(|| format!("E_s/Γ s={s} z={z}"), exp_int_e(s, z), want, tol)
                }
                Err(e) => g.assert_true(|| format!("E_s/Γ s={s} z={z}: {e}"), false),
            }
        }
    }

    // EI(w) − E_1(w) = iπ for w < 0
    for j in 0..40 {
        let w = -0.05 - 0.3 * j as f64;
        let got = cal_ei(w).and_then(|ei| exp_int_e(cplx::re(1.0), cplx::re(w)).map(|e1| ei - e1));
        g.assert_close(|| format!("EI − E_1 at {w}"), got, c(0.0, PI), tol);
    }

    // ζ(−m, z) = −B_{m+1}(z)/(m+1)
    for m in 0..=6usize {
        for &z in &z_grid() {
            let want = bernoulli_poly(m + 1, z).map(|b| -b / (m + 1) as f64);
            match want {
                Ok(w) => g.assert_close(|| format!("ζ(−{m}, {z})"), hurwitz_zeta_star(-(m as f64), z), w, tol),
                Err(e) => g.assert_true(|| format!("B_{}({z}): {e}", m + 1), false),
            }
        }
    }

    // Lerch at a = 0 against Euler–Maclaurin; at a = 1/2 against the
    // alternating split 2^{−s}(ζ(s, z/2) − ζ(s, (z+1)/2))
    let ls = [c(1.5, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(2.5, 1.0), c(4.0, 0.0)];
    for &s in &ls {
        for &z in z_grid().iter().take(10) {
            g.assert_close(
                || format!("Lerch→Hurwitz s={s} z={z}"),
                lerch_zeta(s, cplx::re(0.0), z),
                hurwitz_euler_maclaurin(s, z),
                tol,
            );
            let split = hurwitz_zeta(s, z / 2.0)
                .and_then(|a| hurwitz_zeta(s, (z + 1.0) / 2.0).map(|b| cplx::pow(cplx::re(2.0), -s) * (a - b)));
            match split {
                Ok(w) => g.assert_close(|| format!("Lerch a=1/2 s={s} z={z}"), lerch_zeta(s, cplx::re(0.5), z), w, tol),
                Err(e) => g.assert_true(|| format!("Lerch a=1/2 s={s} z={z}: {e}"), false),
            }
        }
    }

    // ψ^{(m)}(z) = (−1)^{m+1} m! ζ(m+1, z), and ψ(z+1) = ψ(z) + 1/z
    let mut fact = 1.0;
    for m in 1..=4u32 {
        fact *= m as f64;
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        for &z in &z_grid() {
            let want = hurwitz_zeta(cplx::re((m + 1) as f64), z).map(|h| sign * fact * h);
            match want {
                Ok(w) => g.assert_close(|| format!("ψ^({m})({z})"), polygamma(m, z), w, tol),
                Err(e) => g.assert_true(|| format!("ζ({}, {z}): {e}", m + 1), false),
            }
        }
    }
    for &z in &z_grid() {
        let want = digamma(z).map(|p| p + 1.0 / z);
        match want {
            Ok(w) => g.assert_close(|| format!("ψ recurrence at {z}"), digamma(z + 1.0), w, tol),
            Err(e) => g.assert_true(|| format!("ψ({z}): {e}"), false),
        }
    }

    // e^x |E_s(x)| ≤ 1 on [5, 50]
    for &s in &[-2.0, 0.0, 1.0, 3.0] {
        for j in 0..=45 {
            let x = 5.0 + j as f64;
            let scaled = exp_int_e(cplx::re(s), cplx::re(x)).map(|e| e.norm() * x.exp());
            g.assert_true(
                || format!("E_{s} decay at {x}: {scaled:?}"),
                matches!(scaled, Ok(v) if v.is_finite() && v <= 1.0),
            );
        }
    }

    g.elapsed = start.elapsed();
    g
}
