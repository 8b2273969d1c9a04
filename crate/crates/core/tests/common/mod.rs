#![allow(dead_code)]

use std::collections::BTreeMap;

use mzv_core::algebra::coeff;
use mzv_core::{Combination, Index};
use proptest::prelude::*;

/// Quasi-shuffle product by brute force: for every output length `L`, every
/// pair of strictly increasing maps `[r] -> [L]`, `[s] -> [L]` whose images
/// cover `[L]`, add the entries landing in each slot.
pub fn quasi_shuffle_oracle(u: &[u32], v: &[u32]) -> BTreeMap<Vec<u32>, u64> {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                go(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, n, k, &mut Vec::new(), &mut out);
        out
    }

    let (r, s) = (u.len(), v.len());
    let mut out = BTreeMap::new();
    for len in r.max(s)..=r + s {
        let right_sets = subsets(len, s);
        for left in subsets(len, r) {
            for right in &right_sets {
                let mut covered = vec![false; len];
                let mut word = vec![0u32; len];
                for (i, &p) in left.iter().enumerate() {
                    covered[p] = true;
                    word[p] += u[i];
                }
                for (j, &p) in right.iter().enumerate() {
                    covered[p] = true;
                    word[p] += v[j];
                }
                if covered.iter().all(|&c| c) {
                    *out.entry(word).or_insert(0) += 1;
                }
            }
        }
    }
    out
}

pub fn oracle_combination(u: &Index, v: &Index) -> Combination {
    Combination::from_terms(
        quasi_shuffle_oracle(u.parts(), v.parts())
            .into_iter()
            .map(|(w, m)| (Index::new(w).unwrap(), coeff(m as i64, 1))),
    )
}

/// Every index (parts at least 1) of weight at most `max_weight`, including `[]`.
pub fn all_indices(max_weight: u32) -> Vec<Index> {
    let mut out = vec![Index::empty()];
    for w in 1..=max_weight {
        for parts in mzv_core::identities::compositions(w) {
            out.push(Index::new(parts).unwrap());
        }
    }
    out
}

pub fn index_strategy(max_weight: u32) -> impl Strategy<Value = Index> {
    (0..=max_weight).prop_flat_map(|w| {
        let comps = if w == 0 { vec![vec![]] } else { mzv_core::identities::compositions(w) };
        proptest::sample::select(comps).prop_map(|p| Index::new(p).unwrap())
    })
}

pub fn admissible_strategy(max_weight: u32) -> impl Strategy<Value = Index> {
    index_strategy(max_weight).prop_filter("admissible", Index::is_admissible)
}

/// Small combination of indices with bounded weight and small rational coefficients.
pub fn combination_strategy(max_weight: u32, max_terms: usize) -> impl Strategy<Value = Combination> {
    proptest::collection::vec((index_strategy(max_weight), -4i64..=4, 1i64..=3), 0..=max_terms)
        .prop_map(|terms| Combination::from_terms(terms.into_iter().map(|(ix, n, d)| (ix, coeff(n, d)))))
}

/// Homogeneous combination of the given weight (zero allowed).
pub fn homogeneous_strategy(weight: u32, max_terms: usize) -> BoxedStrategy<Combination> {
    if weight == 0 {
        return (-3i64..=3).prop_map(|n| Combination::term(Index::empty(), coeff(n, 1))).boxed();
    }
    let comps = mzv_core::identities::compositions(weight);
    proptest::collection::vec((proptest::sample::select(comps), -4i64..=4, 1i64..=3), 0..=max_terms)
        .prop_map(|terms| {
            Combination::from_terms(terms.into_iter().map(|(p, n, d)| (Index::new(p).unwrap(), coeff(n, d))))
        })
        .boxed()
}

/// Weight-graded series with zero constant term: the degree-n coefficient has weight n.
pub fn graded_series_strategy(order: usize, max_terms: usize) -> impl Strategy<Value = mzv_core::TruncatedSeries> {
    let degrees: Vec<BoxedStrategy<Combination>> =
        (1..=order).map(|n| homogeneous_strategy(n as u32, max_terms)).collect();
    degrees.prop_map(move |coeffs| {
        mzv_core::TruncatedSeries::from_coeffs(order, std::iter::once(Combination::zero()).chain(coeffs))
    })
}
