//! Deterministic divide-and-conquer reduction over an index range.
//!
//! Both the parallel and the sequential evaluator split the range at the same
//! midpoints, so they build the *same* reduction tree and produce identical
//! results for any associative `combine` — bit-for-bit, even for exact
//! rational values whose intermediate forms depend on grouping. Balanced
//! splitting also keeps intermediate numerators and denominators near-optimal
//! when summing rationals, which is why the harmonic-number and partial-sum
//! code routes through here.

/// Reduce `map(lo) ⊕ map(lo+1) ⊕ … ⊕ map(hi)` with balanced splitting.
///
/// With the `parallel` feature enabled (the default) subranges longer than
/// `grain` are evaluated on rayon's thread pool; otherwise evaluation is
/// sequential. The reduction tree is identical either way.
///
/// `combine` must be associative. `grain` is the maximum leaf length; values
/// below 1 are treated as 1.
pub fn map_reduce<T, M, C>(lo: u64, hi: u64, grain: u64, map: &M, combine: &C) -> T
where
    T: Send,
    M: Fn(u64) -> T + Sync,
    C: Fn(T, T) -> T + Sync,
{
    assert!(lo <= hi, "empty index range");
    #[cfg(feature = "parallel")]
    {
        if hi - lo >= grain.max(1) {
            let mid = lo + (hi - lo) / 2;
            let (a, b) = rayon::join(
                || map_reduce(lo, mid, grain, map, combine),
                || map_reduce(mid + 1, hi, grain, map, combine),
            );
            return combine(a, b);
        }
    }
    map_reduce_seq(lo, hi, grain, map, combine)
}

/// Sequential evaluator with the same reduction tree as [`map_reduce`].
pub fn map_reduce_seq<T, M, C>(lo: u64, hi: u64, grain: u64, map: &M, combine: &C) -> T
where
    M: Fn(u64) -> T,
    C: Fn(T, T) -> T,
{
    assert!(lo <= hi, "empty index range");
    if hi - lo < grain.max(1) {
        let mut acc = map(lo);
        for i in lo + 1..=hi {
            acc = combine(acc, map(i));
        }
        acc
    } else {
        let mid = lo + (hi - lo) / 2;
        let a = map_reduce_seq(lo, mid, grain, map, combine);
        let b = map_reduce_seq(mid + 1, hi, grain, map, combine);
        combine(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // String concatenation is associative but not commutative, so it detects
    // any reordering or regrouping between the two evaluators.
    fn digits_par(lo: u64, hi: u64, grain: u64) -> String {
        map_reduce(lo, hi, grain, &|i| format!("{i},"), &|a, b| a + &b)
    }

    fn digits_seq(lo: u64, hi: u64, grain: u64) -> String {
        map_reduce_seq(lo, hi, grain, &|i| format!("{i},"), &|a, b| a + &b)
    }

    #[test]
    fn parallel_and_sequential_agree_exactly() {
        for grain in [1, 2, 3, 7, 64, 1000] {
            for (lo, hi) in [(0, 0), (1, 1), (0, 1), (5, 104), (1, 1000)] {
                assert_eq!(digits_par(lo, hi, grain), digits_seq(lo, hi, grain));
            }
        }
    }

    #[test]
    fn order_is_ascending() {
        assert_eq!(digits_seq(3, 7, 2), "3,4,5,6,7,");
        assert_eq!(digits_par(3, 7, 2), "3,4,5,6,7,");
    }

    #[test]
    fn single_element_range() {
        assert_eq!(digits_par(42, 42, 16), "42,");
    }

    #[test]
    fn grain_zero_behaves_like_grain_one() {
        assert_eq!(digits_seq(1, 9, 0), digits_seq(1, 9, 1));
    }
}
