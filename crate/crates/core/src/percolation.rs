//! Percolation of a chronological k-clique stream into communities.
//!
//! Every community is represented by the temporal `(k - 1)`-cliques of its
//! k-cliques. For each `(k - 1)`-vertex set the [`TimeUf`] keeps the
//! chronological list of `(node, interval)` memberships: the set belongs to
//! the community of `node` over `interval`. A new k-clique looks at the last
//! membership of each of its `(k - 1)`-subsets. If that membership is still
//! running when the clique starts, the membership is stretched to cover the
//! clique and its community is merged with the clique's. Otherwise a new
//! membership is opened for the clique's community, creating that community
//! when none of the subsets had one.
//!
//! A vertex set that has never been seen behaves as if its list held only the
//! sentinel `(-1, [-1, -1])`, so no pass over the `(k - 1)`-cliques is needed
//! up front.

use std::collections::HashMap;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::kclique::{check_k, TemporalKClique};
use crate::stream::VertexId;
use crate::time::{Interval, Time};
use crate::unionfind::{NodeId, UnionFind};

/// Sorted `(k - 1)`-vertex set used as a [`TimeUf`] key.
pub type CliqueKey = SmallVec<[VertexId; 8]>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership<T> {
    pub node: NodeId,
    pub interval: Interval<T>,
}

/// Membership lists of the `(k - 1)`-vertex sets.
///
/// Intervals in a list are sorted and pairwise disjoint; only the last entry
/// is ever modified.
#[derive(Clone, Debug)]
pub struct TimeUf<T> {
    lists: HashMap<CliqueKey, Vec<Membership<T>>>,
}

impl<T: Time> Default for TimeUf<T> {
    fn default() -> Self {
        TimeUf {
            lists: HashMap::new(),
        }
    }
}

impl<T: Time> TimeUf<T> {
    /// Memberships of `key`, empty when the set was never seen.
    pub fn get(&self, key: &[VertexId]) -> &[Membership<T>] {
        self.lists.get(key).map_or(&[], Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[VertexId], &[Membership<T>])> {
        self.lists.iter().map(|(k, v)| (k.as_slice(), v.as_slice()))
    }

    pub fn entry_count(&self) -> usize {
        self.lists.values().map(Vec::len).sum()
    }

    /// Whether every list is sorted with intervals that overlap at most at an
    /// endpoint.
    pub fn is_well_formed(&self) -> bool {
        self.lists.values().all(|list| {
            list.windows(2).all(|w| w[0].interval.t1 <= w[1].interval.t0)
        })
    }
}

/// Union-find forest plus membership lists for one value of k.
#[derive(Clone, Debug)]
pub struct PercolationState<T> {
    uf: UnionFind,
    time_uf: TimeUf<T>,
    k: usize,
    last_t0: Option<T>,
    processed: usize,
}

impl<T: Time> PercolationState<T> {
    pub fn new(k: usize) -> Result<Self> {
        check_k(k)?;
        Ok(PercolationState {
            uf: UnionFind::new(),
            time_uf: TimeUf::default(),
            k,
            last_t0: None,
            processed: 0,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn time_uf(&self) -> &TimeUf<T> {
        &self.time_uf
    }

    pub fn union_find(&self) -> &UnionFind {
        &self.uf
    }

    pub fn cliques_processed(&self) -> usize {
        self.processed
    }

    pub fn make_set(&mut self) -> NodeId {
        self.uf.make_set()
    }

    pub fn union(&mut self, p: Option<NodeId>, q: NodeId) -> Result<NodeId> {
        self.uf.union(p, q)
    }

    pub fn find(&mut self, x: NodeId) -> Result<NodeId> {
        self.uf.find(x)
    }

    /// Adds one maximal k-clique. Cliques must arrive in non-decreasing order
    /// of start time.
    ///
    /// Subsets are visited by dropping the vertices of the clique from last to
    /// first.
    pub fn process(&mut self, clique: &TemporalKClique<T>) -> Result<()> {
        if clique.k() != self.k {
            return Err(Error::CliqueSize {
                expected: self.k,
                found: clique.k(),
            });
        }
        let Interval { t0, t1 } = clique.interval;
        if let Some(prev) = self.last_t0 {
            if t0 < prev {
                return Err(Error::OutOfOrder {
                    previous: prev.to_string(),
                    found: t0.to_string(),
                });
            }
        }
        self.last_t0 = Some(t0);
        self.processed += 1;

        let mut p: Option<NodeId> = None;
        let mut key: CliqueKey = SmallVec::with_capacity(self.k - 1);
        for skip in (0..self.k).rev() {
            key.clear();
            key.extend(
                clique
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v),
            );
            let list = self.time_uf.lists.get_mut(key.as_slice());
            match list.and_then(|l| l.last_mut()).filter(|m| t0 < m.interval.t1) {
                Some(last) => {
                    last.interval.t1 = last.interval.t1.max(t1);
                    let q = self.uf.find(last.node)?;
                    p = Some(self.uf.union(p, q)?);
                }
                None => {
                    let node = match p {
                        Some(node) => node,
                        None => {
                            let node = self.uf.make_set();
                            p = Some(node);
                            node
                        }
                    };
                    self.time_uf
                        .lists
                        .entry(key.clone())
                        .or_default()
                        .push(Membership {
                            node,
                            interval: clique.interval,
                        });
                }
            }
        }
        Ok(())
    }
}

/// Percolates a chronological clique sequence.
pub fn run_lscpm<T: Time>(
    cliques: impl IntoIterator<Item = TemporalKClique<T>>,
    k: usize,
) -> Result<PercolationState<T>> {
    let mut state = PercolationState::new(k)?;
    for clique in cliques {
        state.process(&clique)?;
    }
    Ok(state)
}
