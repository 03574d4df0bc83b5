//! Guardrails and the execution strategy for exhaustive scans.
//!
//! Every scan walks an index range `0..n` whose order is canonical (it maps
//! to lexicographic order of the scanned vectors). With the `parallel`
//! feature the range is split across rayon workers; `find_first` still
//! returns the smallest matching index, so witnesses do not depend on the
//! schedule.

use crate::error::{Error, Result};

pub const DEFAULT_MAX_SCAN: u64 = 10_000_000;
pub const DEFAULT_MAX_SUBSPACES: u64 = 1_000_000;

/// Sets the number of worker threads for parallel scans. Only the first call
/// in a process takes effect; without the `parallel` feature this does
/// nothing.
pub fn configure_threads(n: usize) -> Result<()> {
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::BadShape(format!("thread pool: {e}")))?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    /// Cap on field-vector evaluations in one element scan.
    pub max_scan: u64,
    /// Cap on the number of subspaces one enumeration may produce.
    pub max_subspaces: u64,
    /// Run scans on the rayon pool. Ignored without the `parallel` feature.
    pub parallel: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            max_scan: DEFAULT_MAX_SCAN,
            max_subspaces: DEFAULT_MAX_SUBSPACES,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

impl ScanConfig {
    pub fn sequential() -> Self {
        ScanConfig { parallel: false, ..Self::default() }
    }

    pub fn with_max_scan(mut self, max_scan: u64) -> Self {
        self.max_scan = max_scan;
        self
    }

    pub fn guard(&self, what: &str, count: u128, limit: u64) -> Result<()> {
        if count > limit as u128 {
            return Err(Error::TooLarge { what: what.to_string(), count, limit });
        }
        Ok(())
    }

    /// Guard against `max_scan` and return the count as a range bound.
    pub(crate) fn scan_len(&self, what: &str, count: u128) -> Result<usize> {
        self.guard(what, count, self.max_scan)?;
        Ok(count as usize)
    }

    #[cfg(feature = "parallel")]
    fn use_pool(&self, n: usize) -> bool {
        self.parallel && n > 64
    }

    /// Smallest index `i < n` with `f(i) = Some(_)`.
    pub(crate) fn find_first<T, F>(&self, n: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.use_pool(n) {
            use rayon::prelude::*;
            return (0..n).into_par_iter().find_map_first(|i| f(i).map(|t| (i, t)));
        }
        (0..n).find_map(|i| f(i).map(|t| (i, t)))
    }

    pub(crate) fn all<F>(&self, n: usize, pred: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.use_pool(n) {
            use rayon::prelude::*;
            return (0..n).into_par_iter().all(pred);
        }
        (0..n).all(pred)
    }

    /// `f(i)` for every `i < n`, in index order.
    pub(crate) fn map_collect<T, F>(&self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.use_pool(n) {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// Maps over a slice of work items, preserving order.
    pub(crate) fn map_items<I, T, F>(&self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        self.map_collect(items.len(), |i| f(&items[i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn find_first_is_schedule_independent() {
        for cfg in [ScanConfig::default(), ScanConfig::sequential()] {
            let hit = cfg.find_first(100_000, |i| (i % 7919 == 7918).then_some(i * 2));
            assert_eq!(hit, Some((7918, 15836)));
            assert!(cfg.all(10_000, |i| i < 10_000));
            let squares = cfg.map_collect(1000, |i| i * i);
            assert_eq!(squares[999], 998_001);
        }
    }

    #[test]
    fn guard_rejects_large_counts() {
        let cfg = ScanConfig::default().with_max_scan(10);
        assert!(cfg.scan_len("x", 10).is_ok());
        assert!(matches!(cfg.scan_len("x", 11), Err(Error::TooLarge { count: 11, .. })));
    }
}
