//! The harmonic (stuffle) product.
//!
//! On indices the product is defined by `[] * l = l * [] = l` and
//!
//! ```text
//! [k] * [l] = [[k_] * [l], k_r] + [[k] * [l_], l_s] + [[k_] * [l_], k_r + l_s]
//! ```
//!
//! where `k_` drops the last entry `k_r`. It extends bilinearly to
//! combinations. Each recursive call strictly decreases the total depth, so
//! the recursion terminates; identical subproducts recur exponentially often,
//! so index-level results are memoized.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Coefficient, Combination, Index};

/// Index-level product: terms with positive integer multiplicities.
type IndexProduct = Arc<Vec<(Index, u128)>>;

// Keyed by the canonically ordered pair; the product is commutative.
// Entries are written once, racing writers compute identical values.
static CACHE: LazyLock<RwLock<HashMap<(Index, Index), IndexProduct>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Drops every memoized index product.
pub fn clear_stuffle_cache() {
    CACHE.write().unwrap_or_else(|e| e.into_inner()).clear();
}

pub fn stuffle_cache_len() -> usize {
    CACHE.read().unwrap_or_else(|e| e.into_inner()).len()
}

fn index_product(k: &Index, l: &Index) -> IndexProduct {
    if k.is_empty() {
        return Arc::new(vec![(l.clone(), 1)]);
    }
    if l.is_empty() {
        return Arc::new(vec![(k.clone(), 1)]);
    }
    let key = if k <= l { (k.clone(), l.clone()) } else { (l.clone(), k.clone()) };
    if let Some(hit) = CACHE.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Arc::clone(hit);
    }

    let (kr, ls) = (k.last().unwrap(), l.last().unwrap());
    let (k_init, l_init) = (k.init(), l.init());
    let mut acc: HashMap<Index, u128> = HashMap::new();
    let mut append = |product: &IndexProduct, tail: u32| {
        for (ix, m) in product.iter() {
            let slot = acc.entry(ix.pushed(tail)).or_insert(0);
            *slot = slot.checked_add(*m).expect("stuffle multiplicity overflow");
        }
    };
    append(&index_product(&k_init, l), kr);
    append(&index_product(k, &l_init), ls);
    append(&index_product(&k_init, &l_init), kr + ls);

    let mut terms: Vec<(Index, u128)> = acc.into_iter().collect();
    terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let product = Arc::new(terms);

    let mut cache = CACHE.write().unwrap_or_else(|e| e.into_inner());
    Arc::clone(cache.entry(key).or_insert(product))
}

/// Stuffle product of two single indices.
pub fn stuffle_indices(k: &Index, l: &Index) -> Combination {
    Combination::from_terms(
        index_product(k, l)
            .iter()
            .map(|(ix, m)| (ix.clone(), Coefficient::from_integer(BigInt::from(*m)))),
    )
}

/// Bilinear stuffle product of two combinations.
pub fn stuffle(u: &Combination, v: &Combination) -> Combination {
    let mut out = Combination::zero();
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            let c = ca * cb;
            if c.is_zero() {
                continue;
            }
            for (ix, m) in index_product(a, b).iter() {
                out.add_term(ix.clone(), &c * Coefficient::from_integer(BigInt::from(*m)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff;

    fn ix(s: &str) -> Index {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Combination {
        Combination::from(ix(s))
    }

    #[test]
    fn unit_rule() {
        assert_eq!(stuffle(&Combination::one(), &c("[2,3]")), c("[2,3]"));
        assert_eq!(stuffle(&c("[2,3]"), &Combination::one()), c("[2,3]"));
    }

    #[test]
    fn depth_one_products() {
        let p = stuffle(&c("[2]"), &c("[3]"));
        assert_eq!(p, Combination::from_terms([(ix("[2,3]"), coeff(1, 1)), (ix("[3,2]"), coeff(1, 1)), (ix("[5]"), coeff(1, 1))]));
        assert_eq!(p.coefficient_of(&ix("[5]")), coeff(1, 1));

        let p = stuffle(&c("[1]"), &c("[1]"));
        assert_eq!(p, Combination::from_terms([(ix("[1,1]"), coeff(2, 1)), (ix("[2]"), coeff(1, 1))]));

        let p = stuffle(&c("[2]"), &c("[2]"));
        assert_eq!(p, Combination::from_terms([(ix("[2,2]"), coeff(2, 1)), (ix("[4]"), coeff(1, 1))]));
        assert_eq!(p.coefficient_of(&ix("[2,2]")), coeff(2, 1));
    }

    #[test]
    fn zero_annihilates() {
        assert!(stuffle(&Combination::zero(), &c("[2]")).is_zero());
    }

    #[test]
    fn depth_two_by_depth_one() {
        // [1,2]*[3] = [1,2,3] + [1,3,2] + [3,1,2] + [1,5] + [4,2]
        let p = stuffle(&c("[1,2]"), &c("[3]"));
        let expected = Combination::from_terms(
            ["[1,2,3]", "[1,3,2]", "[3,1,2]", "[1,5]", "[4,2]"].map(|s| (ix(s), coeff(1, 1))),
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn bilinear_scaling() {
        let u = Combination::term(ix("[2]"), coeff(1, 2));
        let v = Combination::term(ix("[2]"), coeff(-1, 3));
        let p = stuffle(&u, &v);
        assert_eq!(p.coefficient_of(&ix("[2,2]")), coeff(-1, 3));
        assert_eq!(p.coefficient_of(&ix("[4]")), coeff(-1, 6));
    }
}
