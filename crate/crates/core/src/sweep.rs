//! Batch evaluation over independent inputs: several clique sizes, many
//! snapshot times, many streams.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs
//! items on the rayon thread pool; without it every call is sequential.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::community::TemporalCommunity;
use crate::error::Result;
use crate::oracle::snapshot_cpm;
use crate::pipeline::{self, Mode};
use crate::stream::{LinkStream, VertexId};
use crate::time::Time;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether work will actually be spread over threads in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Applies `f` to every item, preserving order.
pub fn map<I, O, F>(items: &[I], exec: Execution, f: F) -> Vec<O>
where
    I: Sync,
    O: Send,
    F: Fn(&I) -> O + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Fallible [`map`]; returns the first error in item order.
pub fn try_map<I, O, F>(items: &[I], exec: Execution, f: F) -> Result<Vec<O>>
where
    I: Sync,
    O: Send,
    F: Fn(&I) -> Result<O> + Sync + Send,
{
    map(items, exec, f).into_iter().collect()
}

/// Communities for each clique size in `ks`, each size percolated in a
/// single thread.
pub fn communities_by_k<T: Time>(
    stream: &LinkStream<T>,
    ks: &[usize],
    exec: Execution,
) -> Result<Vec<Vec<TemporalCommunity<T>>>> {
    try_map(ks, exec, |&k| pipeline::communities(stream, k, Mode::SingleThread))
}

/// Snapshot CPM communities at each of `times`.
pub fn snapshot_sweep<T: Time>(
    stream: &LinkStream<T>,
    times: &[T],
    k: usize,
    exec: Execution,
) -> Result<Vec<Vec<Vec<VertexId>>>> {
    try_map(times, exec, |&t| snapshot_cpm(stream, t, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::parse_durational;
    use crate::time::Tick;

    #[test]
    fn map_preserves_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map(&items, Execution::Sequential, |x| x * x);
        let par = map(&items, Execution::Parallel, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 998_001);
    }

    #[test]
    fn try_map_reports_first_error() {
        let items = [3usize, 2, 1];
        let err = try_map(&items, Execution::Parallel, |&k| crate::kclique::check_k(k).map(|_| k)).unwrap_err();
        assert_eq!(err, crate::error::Error::InvalidK(2));
    }

    #[test]
    fn sweeps_match_sequential() {
        let s: LinkStream<Tick> = parse_durational(include_str!("../tests/data/example.txt")).unwrap();
        let ks = [3, 4];
        assert_eq!(
            communities_by_k(&s, &ks, Execution::Sequential).unwrap(),
            communities_by_k(&s, &ks, Execution::Parallel).unwrap()
        );
        let times: Vec<Tick> = (0..14).collect();
        assert_eq!(
            snapshot_sweep(&s, &times, 3, Execution::Sequential).unwrap(),
            snapshot_sweep(&s, &times, 3, Execution::Parallel).unwrap()
        );
    }
}
