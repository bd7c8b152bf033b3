//! Execution strategy for the exhaustive checks.
//!
//! Every brute-force loop in the crate (residuation triples, subset scans,
//! per-element witnesses) goes through these helpers. Results never depend on
//! the strategy: searches return the witness with the smallest index and maps
//! preserve input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled; otherwise identical
    /// to `Sequential`.
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// Smallest `i` in `0..len` with `f(i) == Some(_)`, together with the value.
    pub fn find_first<T, F>(self, len: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..len).into_par_iter().find_map_first(|i| f(i).map(|v| (i, v))),
            _ => (0..len).find_map(|i| f(i).map(|v| (i, v))),
        }
    }

    pub fn all<F>(self, len: usize, f: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..len).into_par_iter().all(f),
            _ => (0..len).all(f),
        }
    }

    /// Order-preserving map over `0..len`.
    pub fn map<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..len).into_par_iter().map(f).collect(),
            _ => (0..len).map(f).collect(),
        }
    }

    /// Order-preserving filter-map over `0..len` (u64 range for subset scans).
    pub fn filter_map_u64<T, F>(self, len: u64, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..len).into_par_iter().filter_map(f).collect(),
            _ => (0..len).filter_map(f).collect(),
        }
    }

    /// First triple `(a, b, c)` in lexicographic order with `f(a, b, c) == Some(_)`.
    pub fn find_triple<T, F>(self, n: usize, f: F) -> Option<((usize, usize, usize), T)>
    where
        T: Send,
        F: Fn(usize, usize, usize) -> Option<T> + Sync + Send,
    {
        self.find_first(n * n * n, |k| {
            let (a, r) = (k / (n * n), k % (n * n));
            f(a, r / n, r % n)
        })
        .map(|(k, v)| ((k / (n * n), (k / n) % n, k % n), v))
    }

    pub fn find_pair<T, F>(self, n: usize, f: F) -> Option<((usize, usize), T)>
    where
        T: Send,
        F: Fn(usize, usize) -> Option<T> + Sync + Send,
    {
        self.find_first(n * n, |k| f(k / n, k % n))
            .map(|(k, v)| ((k / n, k % n), v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_on_first_witness() {
        let pred = |a: usize, b: usize, c: usize| (a * b + c == 7).then_some(a + b + c);
        let s = Strategy::Sequential.find_triple(5, pred);
        let p = Strategy::Parallel.find_triple(5, pred);
        assert_eq!(s, p);
        assert_eq!(s.unwrap().0, (1, 3, 4));
    }

    #[test]
    fn map_preserves_order() {
        let v = Strategy::Parallel.map(100, |i| i * i);
        assert_eq!(v, (0..100).map(|i| i * i).collect::<Vec<_>>());
        let f = Strategy::Parallel.filter_map_u64(50, |i| (i % 7 == 0).then_some(i));
        assert_eq!(f, vec![0, 7, 14, 21, 28, 35, 42, 49]);
    }
}
