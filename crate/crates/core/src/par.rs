//! Execution strategy for the brute-force sweeps.
//!
//! With the `parallel` feature (default) sweeps can fan out over rayon's
//! pool; [`Exec::Sequential`] is always available and [`Exec::Parallel`]
//! silently degrades to it when the feature is off. Both strategies return
//! identical results: searches report the first hit in canonical order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Smallest index in `0..n` satisfying `pred`.
    pub fn find_first<F>(self, n: u64, pred: F) -> Option<u64>
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().find_first(|&i| pred(i));
        }
        (0..n).find(|&i| pred(i))
    }

    /// Indices in `0..n` whose `pred` holds, ascending.
    pub fn filter<F>(self, n: u64, pred: F) -> Vec<u64>
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().filter(|&i| pred(i)).collect();
        }
        (0..n).filter(|&i| pred(i)).collect()
    }

    /// `f` applied to every item, order preserved.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }
}
