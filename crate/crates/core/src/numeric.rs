//! Double-precision evaluation of multiple zeta values
//!
//! ```text
//! zeta(k1,...,kr) = sum_{0 < m1 < ... < mr} 1 / (m1^k1 ... mr^kr)
//! ```
//!
//! with the increasing convention: the last exponent sits on the largest
//! variable and must be at least 2.
//!
//! The nested sum is truncated at `mr <= M`, accumulating every inner partial
//! sum `H_M(k1..kj)` in one pass. The remainder
//! `sum_{m > M} H_{m-1}(k1..k_{r-1}) m^-kr` is enclosed between two bounds,
//! built recursively from polynomials in `log(m/M)` that bound the growth of
//! each inner partial sum beyond `M`. The midpoint is added to the partial sum
//! and the half-width (plus a rounding allowance) is reported as the error.
//! `M` grows geometrically until the error meets the tolerance.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::ToPrimitive;

use crate::algebra::{stuffle, Combination, Index};
use crate::error::{Error, Result};
use crate::report::{Mismatch, Report};

/// Smallest tolerance the double-precision accumulation can honestly support.
pub const TOLERANCE_FLOOR: f64 = 1e-10;

pub const DEFAULT_TOLERANCE: f64 = 1e-6;

pub const DEFAULT_MAX_DEPTH: usize = 4;

const FIRST_CUTOFF: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericConfig {
    tolerance: f64,
    max_terms: u64,
    max_depth: usize,
}

impl NumericConfig {
    /// `tolerance` must be positive and finite; `max_terms` caps the outer
    /// summation length and must be at least 10.
    pub fn new(tolerance: f64, max_terms: u64) -> Result<Self> {
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tolerance}")));
        }
        if max_terms < 10 {
            return Err(Error::InvalidParameter(format!("max_terms must be at least 10, got {max_terms}")));
        }
        Ok(NumericConfig { tolerance, max_terms, max_depth: DEFAULT_MAX_DEPTH })
    }

    /// Raises (or lowers) the depth guard, which defaults to 4.
    pub fn with_max_depth(mut self, max_depth: usize) -> Self {
        self.max_depth = max_depth;
        self
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn max_terms(&self) -> u64 {
        self.max_terms
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig { tolerance: DEFAULT_TOLERANCE, max_terms: 1 << 24, max_depth: DEFAULT_MAX_DEPTH }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub error_bound: f64,
}

impl EvalResult {
    pub fn exact(value: f64) -> Self {
        EvalResult { value, error_bound: 0.0 }
    }
}

/// Formats with 12 significant digits.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&magnitude) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

impl std::fmt::Display for EvalResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} +/- {:.1e}", format_sig12(self.value), self.error_bound)
    }
}

/// Polynomials with nonnegative coefficients, lowest degree first.
mod poly {
    /// `p(u + delta)`.
    pub fn shift(p: &[f64], delta: f64) -> Vec<f64> {
        let mut out = vec![0.0; p.len()];
        for (i, &c) in p.iter().enumerate() {
            // binomial expansion of (u + delta)^i
            let mut binom = 1.0;
            for t in (0..=i).rev() {
                out[t] += c * binom * delta.powi((i - t) as i32);
                binom = binom * t as f64 / (i - t + 1) as f64;
            }
        }
        out
    }

    /// `c + int_0^L p(u) du` as a polynomial in `L`.
    pub fn integrate(p: &[f64], c: f64) -> Vec<f64> {
        let mut out = Vec::with_capacity(p.len() + 1);
        out.push(c);
        out.extend(p.iter().enumerate().map(|(i, &a)| a / (i + 1) as f64));
        out
    }

    /// `int_0^inf p(u) e^(-s u) du`.
    pub fn laplace(p: &[f64], s: f64) -> f64 {
        let mut factorial = 1.0;
        let mut s_pow = s;
        let mut total = 0.0;
        for (i, &c) in p.iter().enumerate() {
            if i > 0 {
                factorial *= i as f64;
                s_pow *= s;
            }
            total += c * factorial / s_pow;
        }
        total
    }
}

/// Lower and upper bounds for `sum_{m > M} H_{m-1}(k1..k_{r-1}) m^-kr`, given
/// the partial sums `partial[j] = H_M(k1..kj)`.
fn tail_bounds(parts: &[u32], partial: &[f64], cutoff: u64) -> (f64, f64) {
    let m = cutoff as f64;
    let delta = (1.0 / m).ln_1p();
    let r = parts.len();

    // Upper: H_{n-1}(k1..kj) <= upper(log(n/M)) for all n > M.
    // Lower: H_{n-1}(k1..kj) >= lower(max(0, log(n/base))) for all n > M.
    let mut upper = vec![1.0];
    let mut lower = vec![1.0];
    let mut base = m + 1.0;
    for j in 1..r {
        let k = parts[j - 1];
        if k >= 2 {
            let s = (k - 1) as f64;
            let tail = m.powf(-s) * poly::laplace(&poly::shift(&upper, delta), s);
            upper = vec![partial[j] + tail];
            lower = vec![partial[j]];
            base = m + 1.0;
        } else {
            upper = poly::integrate(&poly::shift(&upper, delta), partial[j]);
            lower = poly::integrate(&lower, partial[j]);
            base += 1.0;
        }
    }

    let s = (parts[r - 1] - 1) as f64;
    let hi = m.powf(-s) * poly::laplace(&poly::shift(&upper, delta), s);
    let b1 = base + 1.0;
    let lo = b1.powf(-s) * poly::laplace(&lower, s) + lower[0] * ((m + 1.0).powf(-s) - b1.powf(-s)) / s;
    (lo, hi)
}

/// Numerical value of `zeta(ix)` within `cfg.tolerance`.
pub fn zeta_numeric(ix: &Index, cfg: &NumericConfig) -> Result<EvalResult> {
    if ix.is_empty() {
        return Ok(EvalResult::exact(1.0));
    }
    if !ix.is_admissible() {
        return Err(Error::Divergent(ix.clone()));
    }
    if ix.depth() > cfg.max_depth {
        return Err(Error::DepthLimit { index: ix.clone(), depth: ix.depth(), limit: cfg.max_depth });
    }

    let parts = ix.parts();
    let exponents: Vec<i32> = parts.iter().map(|&k| -(k as i32)).collect();
    let r = parts.len();
    // Neumaier-compensated running sums; partial[j] tracks H_n(k1..kj).
    let mut sums = vec![0.0; r + 1];
    let mut comps = vec![0.0; r + 1];
    let mut partial = vec![0.0; r + 1];
    sums[0] = 1.0;
    partial[0] = 1.0;

    // Every term is positive, so a relative error per term carries over to
    // the sums: each level adds the error of powi, one product and the
    // compensated addition.
    let relative_rounding: f64 = parts.iter().map(|&k| (k + 4) as f64).sum::<f64>() * f64::EPSILON;

    let mut n: u64 = 0;
    let mut cutoff = FIRST_CUTOFF.min(cfg.max_terms);
    loop {
        while n < cutoff {
            n += 1;
            let x = n as f64;
            // descending j so partial[j-1] still holds H_{n-1}
            for j in (1..=r).rev() {
                let term = partial[j - 1] * x.powi(exponents[j - 1]);
                let t = sums[j] + term;
                if sums[j].abs() >= term.abs() {
                    comps[j] += (sums[j] - t) + term;
                } else {
                    comps[j] += (term - t) + sums[j];
                }
                sums[j] = t;
                partial[j] = sums[j] + comps[j];
            }
        }
        let (lo, hi) = tail_bounds(parts, &partial, n);
        let value = partial[r] + 0.5 * (lo + hi);
        let rounding = (relative_rounding + n as f64 * f64::EPSILON * f64::EPSILON) * value.abs() * 2.0;
        let error_bound = 0.5 * (hi - lo).max(0.0) + rounding;
        if error_bound <= cfg.tolerance {
            return Ok(EvalResult { value, error_bound });
        }
        if n >= cfg.max_terms {
            return Err(Error::Precision { index: ix.clone(), best_bound: error_bound, terms: n });
        }
        cutoff = (cutoff * 4).min(cfg.max_terms);
    }
}

/// Linear extension of [`zeta_numeric`]; the error bound is the
/// coefficient-weighted sum of the per-term bounds.
pub fn eval_combination(u: &Combination, cfg: &NumericConfig) -> Result<EvalResult> {
    ZetaCache::new(*cfg).eval(u)
}

/// Memoized [`zeta_numeric`] for one configuration. Each index is evaluated
/// at most once per cache; concurrent callers may race to fill an entry but
/// always store the same value.
#[derive(Debug)]
pub struct ZetaCache {
    cfg: NumericConfig,
    values: RwLock<HashMap<Index, EvalResult>>,
}

impl ZetaCache {
    pub fn new(cfg: NumericConfig) -> Self {
        ZetaCache { cfg, values: RwLock::new(HashMap::new()) }
    }

    pub fn config(&self) -> &NumericConfig {
        &self.cfg
    }

    pub fn zeta(&self, ix: &Index) -> Result<EvalResult> {
        if let Some(hit) = self.values.read().unwrap_or_else(|e| e.into_inner()).get(ix) {
            return Ok(*hit);
        }
        let r = zeta_numeric(ix, &self.cfg)?;
        let mut values = self.values.write().unwrap_or_else(|e| e.into_inner());
        Ok(*values.entry(ix.clone()).or_insert(r))
    }

    pub fn eval(&self, u: &Combination) -> Result<EvalResult> {
        let mut value = 0.0;
        let mut error_bound = 0.0;
        for (ix, c) in u.iter() {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let z = self.zeta(ix)?;
            value += c * z.value;
            error_bound += c.abs() * z.error_bound;
        }
        Ok(EvalResult { value, error_bound })
    }
}

/// Checks `zeta(u * v) = zeta(u) zeta(v)` numerically.
pub fn check_homomorphism(u: &Index, v: &Index, cfg: &NumericConfig) -> Result<Report> {
    check_homomorphism_with(&ZetaCache::new(*cfg), u, v)
}

/// [`check_homomorphism`] drawing values from a shared cache.
pub fn check_homomorphism_with(cache: &ZetaCache, u: &Index, v: &Index) -> Result<Report> {
    let product = stuffle(&Combination::from(u.clone()), &Combination::from(v.clone()));
    let lhs = cache.eval(&product)?;
    let (a, b) = (cache.zeta(u)?, cache.zeta(v)?);
    let rhs = a.value * b.value;
    let rhs_bound = a.value.abs() * b.error_bound + b.value.abs() * a.error_bound + a.error_bound * b.error_bound;
    let mut mismatches = Vec::new();
    if (lhs.value - rhs).abs() > lhs.error_bound + rhs_bound + cache.cfg.tolerance {
        mismatches.push(Mismatch {
            degree: u.weight() + v.weight(),
            index: None,
            expected: format_sig12(rhs),
            actual: format_sig12(lhs.value),
        });
    }
    Ok(Report::new(format!("homomorphism {u}*{v}"), u.weight() + v.weight(), mismatches))
}

/// `pi^(2n) / (2n+1)!`, the magnitude of the `x^(2n)` Taylor coefficient of
/// `sin(pi x)/(pi x)`.
pub fn sine_coefficient(n: u32) -> f64 {
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    (1..=2 * n + 1).fold(pi2.powi(n as i32), |acc, i| acc / i as f64)
}

/// Compares `zeta(2,...,2)` (n twos) with the sine coefficient for
/// `n = 1..=nmax`.
pub fn check_sine_coefficients(nmax: u32, cfg: &NumericConfig) -> Result<Report> {
    if nmax < 1 {
        return Err(Error::InvalidParameter("sine check needs nmax >= 1".to_string()));
    }
    let mut mismatches = Vec::new();
    for n in 1..=nmax {
        let ix = Index::repeated(2, n as usize);
        let z = zeta_numeric(&ix, cfg)?;
        let expected = sine_coefficient(n);
        if (z.value - expected).abs() > z.error_bound + cfg.tolerance {
            mismatches.push(Mismatch {
                degree: 2 * n as u64,
                index: Some(ix),
                expected: format_sig12(expected),
                actual: format_sig12(z.value),
            });
        }
    }
    Ok(Report::new("sine", nmax as u64, mismatches))
}
