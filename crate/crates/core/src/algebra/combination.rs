use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Index;

/// Exact rational coefficient. `BigRational` keeps itself in lowest terms with
/// a positive denominator after every operation.
pub type Coefficient = BigRational;

pub fn coeff(numer: i64, denom: i64) -> Coefficient {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `p/q` text, with `/q` dropped when `q = 1`.
pub fn format_coefficient(c: &Coefficient) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `p/q` or `p` (optionally signed) into a reduced rational.
pub fn parse_coefficient(s: &str) -> Option<Coefficient> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| BigRational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// A finite rational linear combination of indices, i.e. an element of the
/// harmonic algebra. Zero coefficients are never stored, so structural
/// equality is equality of elements.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Combination {
    terms: BTreeMap<Index, Coefficient>,
}

impl Combination {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `1·[]`.
    pub fn one() -> Self {
        Self::from(Index::empty())
    }

    pub fn term(index: Index, c: Coefficient) -> Self {
        let mut out = Self::zero();
        out.add_term(index, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Index, Coefficient)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (ix, c) in terms {
            out.add_term(ix, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical index order.
    pub fn iter(&self) -> btree_map::Iter<'_, Index, Coefficient> {
        self.terms.iter()
    }

    pub fn indices(&self) -> impl Iterator<Item = &Index> {
        self.terms.keys()
    }

    pub fn coefficient_of(&self, ix: &Index) -> Coefficient {
        self.terms.get(ix).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn add_term(&mut self, ix: Index, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(ix) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Coefficient, other: &Combination) {
        if c.is_zero() {
            return;
        }
        for (ix, d) in &other.terms {
            self.add_term(ix.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Combination {
        if c.is_zero() {
            return Combination::zero();
        }
        Combination {
            terms: self.terms.iter().map(|(ix, d)| (ix.clone(), c * d)).collect(),
        }
    }

    /// `a·u + b·v` in canonical form.
    pub fn linear_combine(a: &Coefficient, u: &Combination, b: &Coefficient, v: &Combination) -> Combination {
        let mut out = u.scale(a);
        out.add_scaled(b, v);
        out
    }

    /// True when every index in the support has the given weight.
    pub fn is_homogeneous(&self, weight: u64) -> bool {
        self.terms.keys().all(|ix| ix.weight() == weight)
    }

    pub fn is_admissible(&self) -> bool {
        self.terms.keys().all(Index::is_admissible)
    }

    /// The stuffle (harmonic) product; see [`crate::algebra::stuffle`].
    pub fn stuffle(&self, other: &Combination) -> Combination {
        super::stuffle(self, other)
    }
}

impl From<Index> for Combination {
    fn from(ix: Index) -> Self {
        Combination::term(ix, Coefficient::one())
    }
}

impl Add for &Combination {
    type Output = Combination;

    fn add(self, rhs: &Combination) -> Combination {
        let mut out = self.clone();
        out.add_scaled(&Coefficient::one(), rhs);
        out
    }
}

impl Sub for &Combination {
    type Output = Combination;

    fn sub(self, rhs: &Combination) -> Combination {
        let mut out = self.clone();
        out.add_scaled(&-Coefficient::one(), rhs);
        out
    }
}

impl Neg for &Combination {
    type Output = Combination;

    fn neg(self) -> Combination {
        self.scale(&-Coefficient::one())
    }
}

impl Mul for &Combination {
    type Output = Combination;

    fn mul(self, rhs: &Combination) -> Combination {
        self.stuffle(rhs)
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (ix, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if magnitude.is_one() {
                write!(f, "{ix}")?;
            } else {
                write!(f, "{}*{ix}", format_coefficient(&magnitude))?;
            }
        }
        Ok(())
    }
}

// Serialized as a map from index text to "p/q" text, in canonical order.
impl Serialize for Combination {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (ix, c) in &self.terms {
            map.serialize_entry(&ix.to_string(), &format_coefficient(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Combination {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct TermsVisitor;

        impl<'de> Visitor<'de> for TermsVisitor {
            type Value = Combination;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from index text to rational text")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Combination, A::Error> {
                let mut out = Combination::zero();
                while let Some((ix, c)) = access.next_entry::<Index, String>()? {
                    let c = parse_coefficient(&c)
                        .ok_or_else(|| serde::de::Error::custom(format!("bad coefficient {c:?}")))?;
                    out.add_term(ix, c);
                }
                Ok(out)
            }
        }

        deserializer.deserialize_map(TermsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ix(s: &str) -> Index {
        s.parse().unwrap()
    }

    fn one() -> Coefficient {
        Coefficient::one()
    }

    #[test]
    fn linear_combine_cancels() {
        let two = Combination::from(ix("[2]"));
        let zero = Combination::linear_combine(&one(), &two, &-one(), &two);
        assert!(zero.is_zero());
        assert_eq!(zero.len(), 0);
    }

    #[test]
    fn linear_combine_like_terms() {
        let two = Combination::from(ix("[2]"));
        let half = coeff(1, 2);
        assert_eq!(Combination::linear_combine(&half, &two, &half, &two), two);
    }

    #[test]
    fn linear_combine_disjoint() {
        let a = Combination::from(ix("[2]"));
        let b = Combination::from(ix("[3]"));
        let sum = Combination::linear_combine(&one(), &a, &one(), &b);
        assert_eq!(sum.len(), 2);
        assert_eq!(sum.to_string(), "[2] + [3]");
    }

    #[test]
    fn coefficient_of_absent_is_zero() {
        let a = Combination::from(ix("[2]"));
        assert_eq!(a.coefficient_of(&ix("[3]")), Coefficient::zero());
    }

    #[test]
    fn coefficients_stay_reduced() {
        let c = Combination::term(ix("[4]"), coeff(6, -8));
        assert_eq!(c.coefficient_of(&ix("[4]")), coeff(-3, 4));
        assert_eq!(*c.coefficient_of(&ix("[4]")).denom(), BigInt::from(4));
    }

    #[test]
    fn zero_and_unit_are_distinct() {
        assert_ne!(Combination::zero(), Combination::one());
        assert_eq!(Combination::zero().to_string(), "0");
        assert_eq!(Combination::one().to_string(), "[]");
    }

    #[test]
    fn text_form() {
        let c = Combination::from_terms([
            (ix("[4]"), coeff(-1, 8)),
            (ix("[2,2]"), coeff(1, 4)),
            (ix("[]"), coeff(-1, 1)),
            (ix("[3]"), coeff(2, 1)),
        ]);
        assert_eq!(c.to_string(), "-[] + 2*[3] + 1/4*[2,2] - 1/8*[4]");
    }

    #[test]
    fn coefficient_text() {
        assert_eq!(format_coefficient(&coeff(-3, 6)), "-1/2");
        assert_eq!(format_coefficient(&coeff(4, 2)), "2");
        assert_eq!(parse_coefficient("-1/2"), Some(coeff(-1, 2)));
        assert_eq!(parse_coefficient("7"), Some(coeff(7, 1)));
        assert_eq!(parse_coefficient("1/0"), None);
    }
}
