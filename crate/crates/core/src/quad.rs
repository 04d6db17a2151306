//! Adaptive panel-subdivision Gauss–Legendre quadrature for complex-valued
//! integrands on real intervals, straight complex segments and half-lines.

use crate::cplx::ZERO;
use crate::error::{Error, Result};
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    /// Panels are also accepted once the refinement difference is below
    /// `rel_tol` times the panel value.
    pub rel_tol: f64,
    pub max_depth: u32,
    /// Gauss–Legendre order on each panel.
    pub base_nodes: usize,
    /// Upper truncation point for integrals to infinity.
    pub t_cutoff: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            rel_tol: 1e-13,
            max_depth: 40,
            base_nodes: 16,
            t_cutoff: 200.0,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol >= 0.0) {
            return Err(Error::Config(
                "abs_tol must be positive and rel_tol non-negative",
            ));
        }
        if self.base_nodes < 8 {
            return Err(Error::Config("base_nodes must be at least 8"));
        }
        if !(self.t_cutoff >= 1.0) {
            return Err(Error::Config("t_cutoff must be at least 1"));
        }
        if self.max_depth == 0 {
            return Err(Error::Config("max_depth must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentIntegral {
    pub value: Complex64,
    pub est_error: f64,
    pub panels_used: usize,
}

impl SegmentIntegral {
    pub fn zero() -> Self {
        Self {
            value: ZERO,
            est_error: 0.0,
            panels_used: 0,
        }
    }

    fn absorb(&mut self, other: SegmentIntegral) {
        self.value += other.value;
        self.est_error += other.est_error;
        self.panels_used += other.panels_used;
    }
}

/// Gauss–Legendre nodes and weights on `[−1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Newton iteration on `P_n` from the Tricomi initial guesses.
    pub fn new(n: usize) -> Self {
        let mut nodes = alloc::vec![0.0; n];
        let mut weights = alloc::vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    fn apply<F>(&self, f: &mut F, a: f64, b: f64) -> Result<(Complex64, f64)>
    where
        F: FnMut(f64) -> Result<Complex64>,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let mut acc = ZERO;
        let mut abs_acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let v = f(mid + half * x)?;
            acc += v * w;
            abs_acc += v.norm() * w;
        }
        Ok((acc * half, abs_acc * half.abs()))
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Adaptive integration engine holding one rule for repeated use.
#[derive(Debug, Clone)]
pub struct Quadrature {
    cfg: QuadratureConfig,
    rule: GaussLegendre,
}

impl Quadrature {
    pub fn new(cfg: QuadratureConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self {
            cfg,
            rule: GaussLegendre::new(cfg.base_nodes),
        })
    }

    pub fn config(&self) -> &QuadratureConfig {
        &self.cfg
    }

    /// `∫_a^b f(x) dx` for a complex-valued `f` on a finite real interval.
    pub fn integrate<F>(&self, mut f: F, a: f64, b: f64) -> Result<SegmentIntegral>
    where
        F: FnMut(f64) -> Result<Complex64>,
    {
        self.integrate_tol(&mut f, a, b, self.cfg.abs_tol)
    }

    fn integrate_tol<F>(&self, f: &mut F, a: f64, b: f64, tol: f64) -> Result<SegmentIntegral>
    where
        F: FnMut(f64) -> Result<Complex64>,
    {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Quadrature {
                lo: a,
                hi: b,
                reason: "non-finite limits",
            });
        }
        if a == b {
            return Ok(SegmentIntegral::zero());
        }
        let total_len = (b - a).abs();
        let mut out = SegmentIntegral::zero();
        let (coarse, _) = self.rule.apply(f, a, b)?;
        let mut stack: Vec<(f64, f64, Complex64, u32)> = alloc::vec![(a, b, coarse, 0)];
        while let Some((lo, hi, whole, depth)) = stack.pop() {
            let mid = 0.5 * (lo + hi);
            let (left, left_abs) = self.rule.apply(f, lo, mid)?;
            let (right, right_abs) = self.rule.apply(f, mid, hi)?;
            let fine = left + right;
            let diff = (fine - whole).norm();
            let share = tol * (hi - lo).abs() / total_len;
            let roundoff = 64.0 * f64::EPSILON * (left_abs + right_abs);
            let accept = diff <= share.max(self.cfg.rel_tol * fine.norm()).max(roundoff);
            if accept {
                out.absorb(SegmentIntegral {
                    value: fine,
                    est_error: diff.min(share.max(roundoff)),
                    panels_used: 2,
                });
                continue;
            }
            if depth + 1 >= self.cfg.max_depth
                || (mid - lo).abs() <= 4.0 * f64::EPSILON * lo.abs().max(1.0)
            {
                return Err(Error::Quadrature {
                    lo,
                    hi,
                    reason: "maximum subdivision depth reached",
                });
            }
            stack.push((mid, hi, right, depth + 1));
            stack.push((lo, mid, left, depth + 1));
        }
        Ok(out)
    }

    /// `∫_{z0}^{z1} g(z) dz` along the straight segment.
    pub fn integrate_segment<G>(
        &self,
        mut g: G,
        z0: Complex64,
        z1: Complex64,
    ) -> Result<SegmentIntegral>
    where
        G: FnMut(Complex64) -> Result<Complex64>,
    {
        let dz = z1 - z0;
        let len = dz.norm();
        if len == 0.0 {
            return Ok(SegmentIntegral::zero());
        }
        let mut h = |x: f64| -> Result<Complex64> { Ok(g(z0 + dz * x)? * dz) };
        let tol = self.cfg.abs_tol;
        self.integrate_tol(&mut h, 0.0, 1.0, tol)
    }

    /// `∫_a^∞ f(t) dt` on panels of doubling width, stopping once two
    /// consecutive panels fall below tolerance or at `t_cutoff`. Reaching the
    /// cutoff adds the last panel's mass to the error estimate.
    pub fn integrate_to_infinity<F>(&self, mut f: F, a: f64) -> Result<SegmentIntegral>
    where
        F: FnMut(f64) -> Result<Complex64>,
    {
        let cutoff = self.cfg.t_cutoff.max(a + 1.0);
        let mut out = SegmentIntegral::zero();
        let mut lo = a;
        let mut width = 1.0;
        let mut quiet = 0;
        let tol = self.cfg.abs_tol;
        let mut panel_tol = 0.25 * tol;
        while lo < cutoff {
            let hi = (lo + width).min(cutoff);
            let piece = self.integrate_tol(&mut f, lo, hi, panel_tol)?;
            let small = piece.value.norm() <= 1e-3 * tol;
            out.absorb(piece);
            lo = hi;
            if small {
                quiet += 1;
                if quiet >= 2 {
                    return Ok(out);
                }
            } else {
                quiet = 0;
            }
            width *= 2.0;
            panel_tol = (0.5 * panel_tol).max(1e-3 * tol);
            if lo >= cutoff {
                out.est_error += piece.value.norm();
            }
        }
        Ok(out)
    }
}

/// One-shot segment integral with its own rule.
pub fn integrate_segment<G>(
    g: G,
    z0: Complex64,
    z1: Complex64,
    cfg: &QuadratureConfig,
) -> Result<SegmentIntegral>
where
    G: FnMut(Complex64) -> Result<Complex64>,
{
    Quadrature::new(*cfg)?.integrate_segment(g, z0, z1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cplx::{c, I, ONE};

    #[test]
    fn rule_is_exact_for_polynomials() {
        let rule = GaussLegendre::new(16);
        let s: f64 = rule.weights.iter().sum();
        assert!((s - 2.0).abs() < 1e-14);
        let x30: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(x, w)| w * x.powi(30))
            .sum();
        assert!((x30 - 2.0 / 31.0).abs() < 1e-14);
    }

    #[test]
    fn segment_examples() {
        let cfg = QuadratureConfig::default();
        let one = integrate_segment(|_| Ok(ONE), I, I + 1.0, &cfg).unwrap();
        assert!((one.value - ONE).norm() < 1e-15);
        let z = integrate_segment(Ok, I, I + 1.0, &cfg).unwrap();
        assert!((z.value - c(0.5, 1.0)).norm() < 1e-15);
        let e = integrate_segment(|z| Ok((2.0 * PI * I * z).exp()), I, I + 1.0, &cfg).unwrap();
        assert!(e.value.norm() < 1e-15);
    }

    #[test]
    fn half_line() {
        let q = Quadrature::new(QuadratureConfig::default()).unwrap();
        let v = q
            .integrate_to_infinity(|t| Ok(Complex64::new((-t).exp() / t, 0.0)), 1.0)
            .unwrap();
        assert!((v.value.re - 0.219_383_934_395_520_3).abs() < 1e-13);
    }

    #[test]
    fn peaked_integrand_subdivides() {
        let q = Quadrature::new(QuadratureConfig::default()).unwrap();
        let v = q
            .integrate(|x| Ok(Complex64::new(1.0 / (1e-4 + x * x), 0.0)), -1.0, 1.0)
            .unwrap();
        let want = 2.0 * (1.0 / 1e-2) * (1.0f64 / 1e-2).atan();
        assert!((v.value.re - want).abs() < 1e-9 * want);
        assert!(v.panels_used > 2);
    }
}
