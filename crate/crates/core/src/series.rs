//! Truncated formal power series `c0 + c1 x + ... + cN x^N` whose coefficients
//! are combinations in the harmonic algebra, multiplied with the stuffle
//! product. Everything is exact; there is no floating point here.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{stuffle, Coefficient, Combination};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    // always order + 1 entries
    coeffs: Vec<Combination>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![Combination::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Combination::one();
        s
    }

    /// Builds a series from explicit coefficients; missing degrees are zero
    /// and degrees above `order` are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Combination>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// `c x^degree`, or zero if `degree > order`.
    pub fn monomial(order: usize, degree: usize, c: Combination) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, degree: usize) -> Result<&Combination> {
        self.coeffs.get(degree).ok_or(Error::DegreeOutOfRange { degree, order: self.order() })
    }

    pub fn coeffs(&self) -> &[Combination] {
        &self.coeffs
    }

    pub fn set_coefficient(&mut self, degree: usize, c: Combination) -> Result<()> {
        let order = self.order();
        let slot = self.coeffs.get_mut(degree).ok_or(Error::DegreeOutOfRange { degree, order })?;
        *slot = c;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Combination::is_zero)
    }

    /// Degree-`n` coefficient is homogeneous of weight `n` for every `n`.
    pub fn is_weight_homogeneous(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(n, c)| c.is_homogeneous(n as u64))
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    /// Cauchy product with stuffle on coefficients, truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        let one = Coefficient::one();
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=order - i].iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out.coeffs[i + j].add_scaled(&one, &stuffle(a, b));
            }
        }
        Ok(out)
    }

    /// `exp_*(f) = sum_n f^n / n!`, accumulated through the recurrence
    /// `t_n = t_{n-1} * f / n`. Requires a zero constant term, so `f^n` has no
    /// terms below degree `n` and the sum is finite at any truncation order.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut sum = Self::one(order);
        let mut term = Self::one(order);
        for n in 1..=order {
            let inv_n = Coefficient::new(BigInt::one(), BigInt::from(n));
            term = term.mul(self)?.scale(&inv_n);
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term)?;
        }
        Ok(sum)
    }

    /// Substitution `x -> -x`.
    pub fn flip(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }
}

pub fn series_mul(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<TruncatedSeries> {
    f.mul(g)
}

pub fn series_exp(f: &TruncatedSeries) -> Result<TruncatedSeries> {
    f.exp()
}

pub fn series_flip(f: &TruncatedSeries) -> TruncatedSeries {
    f.flip()
}

pub fn series_coefficient(f: &TruncatedSeries, degree: usize) -> Result<Combination> {
    f.coefficient(degree).cloned()
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
