use std::num::NonZeroUsize;
use std::thread;

/// Number of worker threads for a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Workers(NonZeroUsize);

impl Workers {
    /// `0` selects the available parallelism.
    pub fn new(n: usize) -> Self {
        NonZeroUsize::new(n).map(Workers).unwrap_or_default()
    }

    pub fn get(self) -> usize {
        self.0.get()
    }
}

impl Default for Workers {
    fn default() -> Self {
        Workers(thread::available_parallelism().unwrap_or(NonZeroUsize::MIN))
    }
}

/// Run `f` over contiguous sub-ranges of `lo..=hi` and concatenate the
/// results in range order.
pub(crate) fn split_map<T, F>(lo: i64, hi: i64, workers: Workers, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64, i64) -> Vec<T> + Sync,
{
    if lo > hi {
        return Vec::new();
    }
    let len = (hi - lo) as u64 + 1;
    let parts = (workers.get() as u64).min(len);
    if parts <= 1 {
        return f(lo, hi);
    }
    let chunk = len.div_ceil(parts) as i64;
    let bounds: Vec<(i64, i64)> = (0..parts as i64)
        .map(|i| (lo + i * chunk, (lo + (i + 1) * chunk - 1).min(hi)))
        .filter(|(a, b)| a <= b)
        .collect();
    let f = &f;
    thread::scope(|s| {
        let handles: Vec<_> = bounds.iter().map(|&(a, b)| s.spawn(move || f(a, b))).collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("scan worker panicked"))
            .collect()
    })
}
