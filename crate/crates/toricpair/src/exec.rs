//! Execution strategy for the data-parallel kernels.
//!
//! The crate's heavy loops (brute-force box scans, candidate minimality
//! filters, corpus verification, resolution sampling) are shaped as
//! map/filter over independent items. With the `parallel` feature (default)
//! they run on rayon; without it, or when `Parallelism::Sequential` is
//! selected, they run on plain iterators. Benchmarks compare both paths.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    #[cfg(feature = "parallel")]
    Rayon,
}

impl Default for Parallelism {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Parallelism::Rayon
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Parallelism::Sequential
    }
}

pub(crate) fn map_collect<T, U, F>(par: Parallelism, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match par {
        Parallelism::Sequential => items.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Parallelism::Rayon => items.into_par_iter().map(f).collect(),
    }
}

pub(crate) fn filter_collect<T, F>(par: Parallelism, items: Vec<T>, keep: F) -> Vec<T>
where
    T: Send,
    F: Fn(&T) -> bool + Sync + Send,
{
    match par {
        Parallelism::Sequential => items.into_iter().filter(|t| keep(t)).collect(),
        #[cfg(feature = "parallel")]
        Parallelism::Rayon => items.into_par_iter().filter(|t| keep(t)).collect(),
    }
}
