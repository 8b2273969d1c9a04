//! Workloads shared by the criterion benches.

use mzv_core::{Combination, Index};

/// All indices of the given weight with every part at least 2.
pub fn admissible_min2(weight: u32) -> Vec<Index> {
    mzv_core::identities::compositions_min2(weight)
        .into_iter()
        .map(|parts| Index::new(parts).expect("positive parts"))
        .collect()
}

/// Sum of every index of the given weight with parts at least 2.
pub fn dense_combination(weight: u32) -> Combination {
    admissible_min2(weight).into_iter().map(|ix| (ix, mzv_core::algebra::coeff(1, 1))).fold(
        Combination::zero(),
        |mut acc, (ix, c)| {
            acc.add_term(ix, c);
            acc
        },
    )
}
