//! Data-parallel map over a slice, with a sequential fallback.
//!
//! With the `parallel` feature (default) the work is spread over the rayon
//! thread pool; without it, or when [`Exec::Sequential`] is requested, items
//! are processed in order on the calling thread. Result order always follows
//! input order, so reports are identical in both modes.

/// How a sweep distributes its work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether this build can actually run in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

pub(crate) fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}
