use super::eisenstein::{build_j_series, build_jsq_series};
use super::qseries::QSeries;
use crate::cplx::{self, ZERO};
use crate::error::{Error, Result};
use crate::specfun::inc_gamma_upper;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use core::f64::consts::PI;
use num_complex::Complex64;
use num_traits::ToPrimitive;
#[allow(unused_imports)]
use num_traits::Float;

/// Default number of positive-index coefficients kept for `J`.
pub const DEFAULT_J_PRECISION: i64 = 40;

/// Fourier expansion at `∞` of a harmonic Maass cusp form or of a synthetic
/// expansion with the same shape:
/// `Σ a(n) e^{2πinz} + Σ_{n<0} b(n) Γ(1−k, −4πny) e^{2πinz}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierExpansion {
    pub name: String,
    pub weight: i32,
    pub level: u32,
    pub holo: BTreeMap<i64, Complex64>,
    pub nonholo: BTreeMap<i64, Complex64>,
    /// Depth of the principal part, `a(n) = 0` for `n < −n0`.
    pub n0: u64,
    /// `C_f` in `|a(n)|, |b(−n)| ≤ K e^{C_f √n}`.
    pub growth_const: f64,
    /// `K` in the same bound, fitted to the stored coefficients.
    pub bound_const: f64,
    /// Whether coefficients beyond the stored range are zero.
    pub finite_support: bool,
    /// Whether the expansion is a genuine modular form (functional equation applies).
    pub modular: bool,
    /// Exact holomorphic coefficients when the form was built from q-series.
    pub exact: Option<QSeries>,
}

/// Value of an expansion at a point with the bound on the omitted tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointValue {
    pub z: Complex64,
    pub value: Complex64,
    pub truncation_error: f64,
}

impl FourierExpansion {
    fn fit_bound(&mut self) {
        let c = self.growth_const;
        let k = self
            .holo
            .iter()
            .chain(self.nonholo.iter())
            .filter(|(n, _)| **n != 0)
            .map(|(n, a)| a.norm() * (-c * (n.unsigned_abs() as f64).sqrt()).exp())
            .fold(0.0, f64::max);
        self.bound_const = k;
    }

    fn validate(&self) -> Result<()> {
        if let Some(a0) = self.holo.get(&0) {
            if *a0 != ZERO {
                return Err(Error::ConstantTerm(format!("{a0}")));
            }
        }
        if let Some((n, _)) = self.nonholo.iter().find(|(n, _)| **n >= 0) {
            return Err(Error::InvalidExpansion(format!(
                "non-holomorphic coefficient at n = {n} ≥ 0"
            )));
        }
        if !self.nonholo.is_empty() && self.weight > 0 {
            return Err(Error::InvalidExpansion(format!(
                "weight {} ≥ 1 admits no non-holomorphic part (weakly holomorphic cusp form)",
                self.weight
            )));
        }
        if self.level == 0 {
            return Err(Error::InvalidExpansion(
                "level must be positive".to_string(),
            ));
        }
        Ok(())
    }

    /// Largest stored holomorphic index.
    pub fn max_index(&self) -> i64 {
        self.holo.keys().next_back().copied().unwrap_or(0).max(0)
    }

    pub fn is_weakly_holomorphic(&self) -> bool {
        self.nonholo.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.holo.values().all(|a| *a == ZERO) && self.nonholo.values().all(|b| *b == ZERO)
    }

    /// Bound on `Σ_{n>N} |a(n)| e^{−2πny}` beyond the stored range.
    pub fn tail_bound(&self, y: f64) -> f64 {
        if self.finite_support || self.bound_const == 0.0 {
            return 0.0;
        }
        let start = self.max_index() + 1;
        let mut total = 0.0;
        for n in start..start + 10_000 {
            let t = self.bound_const
                * (self.growth_const * (n as f64).sqrt() - 2.0 * PI * n as f64 * y).exp();
            total += t;
            if t <= 1e-40 * total.max(1e-300) || t < 1e-300 {
                break;
            }
        }
        total
    }

    /// Linear combination `α·self + β·other`; weights and levels must agree.
    pub fn combine(&self, alpha: Complex64, other: &Self, beta: Complex64) -> Result<Self> {
        if self.weight != other.weight || self.level != other.level {
            return Err(Error::InvalidExpansion(
                "combining expansions of different weight or level".to_string(),
            ));
        }
        let merge = |a: &BTreeMap<i64, Complex64>, b: &BTreeMap<i64, Complex64>| {
            let mut out = BTreeMap::new();
            for (n, v) in a {
                *out.entry(*n).or_insert(ZERO) += alpha * v;
            }
            for (n, v) in b {
                *out.entry(*n).or_insert(ZERO) += beta * v;
            }
            out
        };
        let mut out = Self {
            name: format!("({alpha})·{} + ({beta})·{}", self.name, other.name),
            weight: self.weight,
            level: self.level,
            holo: merge(&self.holo, &other.holo),
            nonholo: merge(&self.nonholo, &other.nonholo),
            n0: self.n0.max(other.n0),
            growth_const: self.growth_const.max(other.growth_const),
            bound_const: 0.0,
            finite_support: self.finite_support && other.finite_support,
            modular: false,
            exact: None,
        };
        out.fit_bound();
        Ok(out)
    }
}

fn from_qseries(name: &str, series: QSeries, growth_const: f64) -> Result<FourierExpansion> {
    let mut holo = BTreeMap::new();
    for (n, c) in series.terms() {
        let v = c.to_f64().ok_or_else(|| {
            Error::InvalidExpansion(format!("coefficient of q^{n} overflows f64"))
        })?;
        holo.insert(n, cplx::re(v));
    }
    let n0 = (-series.min_exponent()).max(0) as u64;
    let mut f = FourierExpansion {
        name: name.to_string(),
        weight: 0,
        level: 1,
        holo,
        nonholo: BTreeMap::new(),
        n0,
        growth_const,
        bound_const: 0.0,
        finite_support: false,
        modular: true,
        exact: Some(series),
    };
    f.validate()?;
    f.fit_bound();
    Ok(f)
}

/// The Hauptmodul `J = j − 744` with coefficients at `−1 ..= prec − 1`.
pub fn build_j(prec: i64) -> Result<FourierExpansion> {
    from_qseries("J", build_j_series(prec)?, 4.0 * PI)
}

/// `J² − 393768`, the constant obtained from the q-expansion itself.
pub fn build_jsq(prec: i64) -> Result<FourierExpansion> {
    from_qseries("Jsq", build_jsq_series(prec)?, 4.0 * PI * 2f64.sqrt())
}

/// An expansion of harmonic shape with finitely many coefficients. It is
/// not checked for modularity and is flagged non-modular.
pub fn synth_harmonic(
    k: i32,
    holo: BTreeMap<i64, Complex64>,
    nonholo: BTreeMap<i64, Complex64>,
) -> Result<FourierExpansion> {
    let n0 = holo.keys().next().map(|n| (-n).max(0) as u64).unwrap_or(0);
    let mut f = FourierExpansion {
        name: "synth".to_string(),
        weight: k,
        level: 1,
        holo: holo
            .into_iter()
            .filter(|(n, a)| *n == 0 || *a != ZERO)
            .collect(),
        nonholo,
        n0,
        growth_const: 1.0,
        bound_const: 0.0,
        finite_support: true,
        modular: false,
        exact: None,
    };
    f.validate()?;
    f.holo.remove(&0);
    f.fit_bound();
    Ok(f)
}

/// Image under `ξ_k`, or of `f^c` under `ξ_k` when `conjugate_first` is set:
/// frequency `−n` for each `n < 0` carries `−(−4πn)^{1−k} \bar b(n)`
/// (`b(n)` without the conjugation).
pub fn xi_image(f: &FourierExpansion, conjugate_first: bool) -> FourierExpansion {
    let k = f.weight;
    let holo = f
        .nonholo
        .iter()
        .filter(|(_, b)| **b != ZERO)
        .map(|(n, b)| {
            let factor = (-4.0 * PI * *n as f64).powi(1 - k);
            let b = if conjugate_first { *b } else { b.conj() };
            (-n, -b * factor)
        })
        .collect();
    let mut out = FourierExpansion {
        name: format!("xi({})", f.name),
        weight: 2 - k,
        level: f.level,
        holo,
        nonholo: BTreeMap::new(),
        n0: 0,
        growth_const: f.growth_const,
        bound_const: 0.0,
        finite_support: true,
        modular: f.modular,
        exact: None,
    };
    out.fit_bound();
    out
}

/// Evaluates the expansion at `z` with `Im z > 0`, failing when the tail bound
/// exceeds `tol`.
pub fn eval_expansion_with(f: &FourierExpansion, z: Complex64, tol: f64) -> Result<PointValue> {
    let y = z.im;
    if !(y > 0.0) {
        return Err(Error::Domain {
            func: "eval_expansion",
            detail: format!("Im z = {y} must be positive"),
        });
    }
    let tail = f.tail_bound(y);
    if tail > tol {
        return Err(Error::InsufficientPrecision { bound: tail, tol });
    }
    let q = (Complex64::new(0.0, 2.0 * PI) * z).exp();
    let mut value = ZERO;
    let mut abs_sum = 0.0;
    for (&n, &a) in &f.holo {
        let t = a * cplx::powi(q, n as i32);
        value += t;
        abs_sum += t.norm();
    }
    let order = cplx::re(1.0 - f.weight as f64);
    for (&n, &b) in &f.nonholo {
        let g = inc_gamma_upper(order, cplx::re(-4.0 * PI * n as f64 * y))?;
        let t = b * g * cplx::powi(q, n as i32);
        value += t;
        abs_sum += t.norm();
    }
    Ok(PointValue {
        z,
        value,
        truncation_error: tail + 8.0 * f64::EPSILON * abs_sum,
    })
}

pub fn eval_expansion(f: &FourierExpansion, z: Complex64) -> Result<PointValue> {
    eval_expansion_with(f, z, 1e-12)
}
