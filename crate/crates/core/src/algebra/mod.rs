//! Exact representation of the harmonic algebra: indices, rational linear
//! combinations of indices, and the stuffle product.

mod combination;
mod index;
mod stuffle;

pub use combination::{coeff, format_coefficient, parse_coefficient, Coefficient, Combination};
pub use index::Index;
pub use stuffle::{clear_stuffle_cache, stuffle, stuffle_cache_len, stuffle_indices};

pub fn weight(ix: &Index) -> u64 {
    ix.weight()
}

pub fn is_admissible(ix: &Index) -> bool {
    ix.is_admissible()
}

pub fn linear_combine(a: &Coefficient, u: &Combination, b: &Coefficient, v: &Combination) -> Combination {
    Combination::linear_combine(a, u, b, v)
}

pub fn coefficient_of(u: &Combination, ix: &Index) -> Coefficient {
    u.coefficient_of(ix)
}
