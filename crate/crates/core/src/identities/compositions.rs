//! Ordered compositions of an integer, listed by depth and then
//! lexicographically.

fn compose(k: u32, min_part: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in min_part..=rest {
            prefix.push(first);
            go(rest - first, min_part, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if k > 0 {
        go(k, min_part, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Compositions of `k` into at least one part, every part at least 2.
pub fn compositions_min2(k: u32) -> Vec<Vec<u32>> {
    compose(k, 2)
}

/// Compositions of `k` into at least one positive part (`2^(k-1)` of them).
pub fn compositions(k: u32) -> Vec<Vec<u32>> {
    compose(k, 1)
}
