//! Execution strategy for exhaustive sweeps.
//!
//! Law checks are written as a search for the first counterexample over an
//! outer index range. With the `parallel` feature the outer range is split
//! across the rayon pool; the result is always the counterexample with the
//! smallest outer index, so both strategies report identical witnesses.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
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

/// First `Some` produced by `f` over `0..n`, in index order.
pub fn find_first<T, F>(strategy: Strategy, n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().find_map_first(f)
        }
        _ => (0..n).find_map(f),
    }
}

/// `f` applied to every index of `0..n`, collected in index order.
pub fn map_collect<T, F>(strategy: Strategy, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_on_first_hit() {
        let pred = |i: usize| (i % 7 == 3 && i > 20).then_some(i);
        let seq = find_first(Strategy::Sequential, 1000, pred);
        let par = find_first(Strategy::Parallel, 1000, pred);
        assert_eq!(seq, Some(24));
        assert_eq!(seq, par);
    }

    #[test]
    fn map_collect_preserves_order() {
        let v = map_collect(Strategy::Parallel, 100, |i| i * i);
        assert_eq!(v, (0..100).map(|i| i * i).collect::<Vec<_>>());
    }
}
