//! The specific series built from the harmonic algebra and exact checks of
//! the identities relating them.
//!
//! Notation used throughout:
//!
//! * `A = sum_{n>=2} ((-1)^(n-1)/n) [n] x^n`, built by [`log_gamma_series`].
//! * `B = -sum_{m>=2} ([m]/m) x^m`, which is `A` with `x -> -x`.
//! * `S(k)`, the signed sum over compositions of `k` with parts at least 2
//!   weighted by `prod (k_j - 1)/k_j!` ([`s_poly`]).
//!
//! The chain checked here is
//!
//! ```text
//! exp_*(A) exp_*(B) = 1 + sum_n (-1)^n [2,...,2] x^(2n)       (main)
//! exp_*(A)          = 1 + sum_k (-1)^k S(k) x^k               (sakata)
//! sum_k (-1)^k S(k) * S(m-k) = 0               for odd m      (odd)
//!                            = (-1)^n [2,...,2] for m = 2n    (eq2)
//! ```

mod compositions;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use compositions::{compositions, compositions_min2};

use crate::algebra::{coeff, stuffle, Coefficient, Combination, Index};
use crate::error::{Error, Result};
use crate::report::{Mismatch, Report};
use crate::series::TruncatedSeries;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn sign(exponent: usize) -> Coefficient {
    if exponent.is_multiple_of(2) {
        Coefficient::one()
    } else {
        -Coefficient::one()
    }
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what()))
    }
}

/// `S(k) = sum (-1)^r prod_j (k_j - 1)/k_j! [k_1,...,k_r]` over compositions
/// of `k` with every part at least 2; `S(0) = 1` and `S(1) = 0`.
pub fn s_poly(k: u32) -> Combination {
    if k == 0 {
        return Combination::one();
    }
    Combination::from_terms(compositions_min2(k).into_iter().map(|parts| {
        let mut c = sign(parts.len());
        for &p in &parts {
            c *= Coefficient::new(BigInt::from(p - 1), factorial(p));
        }
        (Index::new(parts).expect("composition parts are positive"), c)
    }))
}

/// `A = sum_{n=2}^{N} ((-1)^(n-1)/n) [n] x^n` at truncation order `N`.
pub fn log_gamma_series(order: usize) -> TruncatedSeries {
    let mut a = TruncatedSeries::zero(order);
    for n in 2..=order {
        let c = sign(n - 1) * coeff(1, n as i64);
        a.set_coefficient(n, Combination::term(Index::repeated(n as u32, 1), c))
            .expect("degree within order");
    }
    a
}

/// `1 + sum_{n>=1} (-1)^n [2,...,2] x^(2n)` (n twos) at order `N`.
pub fn rhs_main(order: usize) -> TruncatedSeries {
    let mut rhs = TruncatedSeries::one(order);
    for n in (1..).take_while(|n| 2 * n <= order) {
        rhs.set_coefficient(2 * n, Combination::term(Index::repeated(2, n), sign(n)))
            .expect("degree within order");
    }
    rhs
}

/// `1 + sum_{k=2}^{N} (-1)^k S(k) x^k`, the claimed value of `exp_*(A)`.
pub fn sakata_rhs(order: usize) -> TruncatedSeries {
    let mut rhs = TruncatedSeries::zero(order);
    for k in 0..=order {
        rhs.set_coefficient(k, s_poly(k as u32).scale(&sign(k))).expect("degree within order");
    }
    rhs
}

/// Coefficientwise comparison of two combinations of the same degree.
pub fn combination_mismatches(degree: u64, expected: &Combination, actual: &Combination) -> Vec<Mismatch> {
    let mut support: Vec<&Index> = expected.indices().chain(actual.indices()).collect();
    support.sort();
    support.dedup();
    support
        .into_iter()
        .filter_map(|ix| {
            let (e, a) = (expected.coefficient_of(ix), actual.coefficient_of(ix));
            (e != a).then(|| Mismatch::exact(degree, Some(ix.clone()), &e, &a))
        })
        .collect()
}

/// Compares two series degree by degree.
pub fn compare_series(
    identity: &str,
    parameter: u64,
    expected: &TruncatedSeries,
    actual: &TruncatedSeries,
) -> Result<Report> {
    if expected.order() != actual.order() {
        return Err(Error::OrderMismatch { left: expected.order(), right: actual.order() });
    }
    let mismatches = expected
        .coeffs()
        .iter()
        .zip(actual.coeffs())
        .enumerate()
        .flat_map(|(n, (e, a))| combination_mismatches(n as u64, e, a))
        .collect();
    Ok(Report::new(identity, parameter, mismatches))
}

/// `exp_*(A) = 1 + sum_k (-1)^k S(k) x^k` through degree `N`.
pub fn verify_sakata(order: usize) -> Result<Report> {
    require(order >= 2, || format!("sakata needs order >= 2, got {order}"))?;
    let lhs = log_gamma_series(order).exp()?;
    compare_series("sakata", order as u64, &sakata_rhs(order), &lhs)
}

/// `exp_*(A) exp_*(B) = 1 + sum_n (-1)^n [2,...,2] x^(2n)` through degree `N`.
pub fn verify_main(order: usize) -> Result<Report> {
    require(order >= 2, || format!("main needs order >= 2, got {order}"))?;
    let a = log_gamma_series(order);
    let lhs = a.exp()?.mul(&a.flip().exp()?)?;
    compare_series("main", order as u64, &rhs_main(order), &lhs)
}

/// The reduced form of the main identity, with both exponentials replaced by
/// their `S(k)` expansions: `(sum (-1)^k S(k) x^k) * (sum S(l) x^l)`.
pub fn verify_eq3(order: usize) -> Result<Report> {
    require(order >= 2, || format!("eq3 needs order >= 2, got {order}"))?;
    let s = sakata_rhs(order);
    let lhs = s.mul(&s.flip())?;
    compare_series("eq3", order as u64, &rhs_main(order), &lhs)
}

/// `sum_{k=0}^{m} (-1)^k S(k) * S(m-k)`, the degree-`m` coefficient of the
/// reduced product.
pub fn alternating_convolution(m: u32) -> Combination {
    let polys: Vec<Combination> = (0..=m).map(s_poly).collect();
    let mut out = Combination::zero();
    for k in 0..=m as usize {
        let (left, right) = (&polys[k], &polys[m as usize - k]);
        if left.is_zero() || right.is_zero() {
            continue;
        }
        out.add_scaled(&sign(k), &stuffle(left, right));
    }
    out
}

/// `sum_{k=0}^{2n} (-1)^k S(k) * S(2n-k)`.
pub fn eq2_lhs(n: u32) -> Result<Combination> {
    require(n >= 1, || "eq2 needs n >= 1".to_string())?;
    Ok(alternating_convolution(2 * n))
}

/// `sum_{k=0}^{2n} (-1)^k S(k) * S(2n-k) = (-1)^n [2,...,2]`.
pub fn verify_eq2(n: u32) -> Result<Report> {
    let lhs = eq2_lhs(n)?;
    let rhs = Combination::term(Index::repeated(2, n as usize), sign(n as usize));
    Ok(Report::new("eq2", n as u64, combination_mismatches(2 * n as u64, &rhs, &lhs)))
}

/// For odd `n`, `sum_{k=0}^{n} (-1)^k S(k) * S(n-k) = 0`.
pub fn verify_odd_vanishing(n: u32) -> Result<Report> {
    require(n % 2 == 1, || format!("odd vanishing needs an odd n, got {n}"))?;
    let lhs = alternating_convolution(n);
    Ok(Report::new("odd", n as u64, combination_mismatches(n as u64, &Combination::zero(), &lhs)))
}

/// LHS minus RHS of
/// `sum_{m=2}^{k-2} (-1)^m C(k,m) (m-1)(k-m-1) = (1 + (-1)^k)(k-1)`.
pub fn binomial_lemma_residual(k: u32) -> Result<BigInt> {
    require(k >= 4, || format!("binomial lemma needs k >= 4, got {k}"))?;
    let k_big = BigInt::from(k);
    let mut binom = BigInt::one(); // C(k, m), advanced incrementally
    let mut lhs = BigInt::zero();
    for m in 1..=k - 2 {
        binom = binom * BigInt::from(k - m + 1) / BigInt::from(m);
        if m >= 2 {
            let term = &binom * BigInt::from(m - 1) * BigInt::from(k - m - 1);
            if m % 2 == 0 {
                lhs += term;
            } else {
                lhs -= term;
            }
        }
    }
    let rhs = if k.is_multiple_of(2) { BigInt::from(2) * (k_big - 1) } else { BigInt::zero() };
    Ok(lhs - rhs)
}

/// Residual of the binomial lemma for every `k` in `4..=kmax`.
pub fn verify_binomial(kmax: u32) -> Result<Report> {
    require(kmax >= 4, || format!("binomial lemma needs kmax >= 4, got {kmax}"))?;
    let mut mismatches = Vec::new();
    for k in 4..=kmax {
        let residual = binomial_lemma_residual(k)?;
        if !residual.is_zero() {
            mismatches.push(Mismatch {
                degree: k as u64,
                index: None,
                expected: "0".to_string(),
                actual: residual.to_string(),
            });
        }
    }
    Ok(Report::new("binomial", kmax as u64, mismatches))
}

/// Coefficient of `ix` in `eq2_lhs(weight/2)` as predicted by the case
/// analysis on the parts of `ix`:
///
/// * a part equal to 1 never occurs, since every `S(k)` has parts at least 2;
/// * `h > 0` parts at least 4 give 0 (binomial cancellation over the split parts);
/// * otherwise all parts are 2 or 3, and any 3 gives 0;
/// * all parts equal to 2 gives `(-1)^n`.
pub fn predicted_coefficient(ix: &Index) -> Result<Coefficient> {
    let w = ix.weight();
    if w == 0 || w % 2 == 1 {
        return Err(Error::OddWeight(ix.clone()));
    }
    let parts = ix.parts();
    let has_one = parts.contains(&1);
    let h = parts.iter().filter(|&&k| k >= 4).count();
    let h_three = parts.iter().filter(|&&k| k == 3).count();
    if has_one || h > 0 || h_three > 0 {
        return Ok(Coefficient::zero());
    }
    Ok(sign((w / 2) as usize))
}

/// Checks [`predicted_coefficient`] against the computed `eq2_lhs(n)` on every
/// composition of `2n` (parts at least 1).
pub fn verify_case_analysis(n: u32) -> Result<Report> {
    let lhs = eq2_lhs(n)?;
    let mut mismatches = Vec::new();
    let all = compositions(2 * n);
    for parts in all.iter() {
        let ix = Index::new(parts.clone())?;
        let predicted = predicted_coefficient(&ix)?;
        let actual = lhs.coefficient_of(&ix);
        if predicted != actual {
            mismatches.push(Mismatch::exact(2 * n as u64, Some(ix), &predicted, &actual));
        }
    }
    // The enumeration covers every index of weight 2n, so the support of the
    // computed side cannot escape it.
    debug_assert!(lhs.indices().all(|ix| ix.weight() == 2 * n as u64));
    Ok(Report::new("cases", n as u64, mismatches))
}

/// Number of nonzero predictions among all compositions of `2n`.
pub fn predicted_support(n: u32) -> usize {
    compositions(2 * n)
        .into_iter()
        .filter(|parts| {
            let ix = Index::new(parts.clone()).expect("positive parts");
            predicted_coefficient(&ix).map(|c| !c.is_zero()).unwrap_or(false)
        })
        .count()
}
