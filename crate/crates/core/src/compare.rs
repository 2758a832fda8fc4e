//! Label-invariant comparison of community lists.

use std::collections::BTreeMap;
use std::fmt;

use crate::community::TemporalCommunity;
use crate::stream::VertexId;
use crate::time::{Interval, Time};

/// How two community lists relate under inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Refinement {
    /// Same communities, up to labels.
    Equal,
    /// Every community of `a` is included in some community of `b`.
    AInB,
    /// Every community of `b` is included in some community of `a`.
    BInA,
    None,
}

impl fmt::Display for Refinement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Refinement::Equal => "equal",
            Refinement::AInB => "a ⊆ b",
            Refinement::BInA => "b ⊆ a",
            Refinement::None => "none",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub equal: bool,
    pub refinement: Refinement,
    /// Ids of communities of `a` with no identical community in `b`.
    pub only_in_a: Vec<usize>,
    /// Ids of communities of `b` with no identical community in `a`.
    pub only_in_b: Vec<usize>,
    /// For each community of `a`, how many communities of `b` include it.
    pub containers_in_b: Vec<usize>,
    /// For each community of `b`, how many communities of `a` include it.
    pub containers_in_a: Vec<usize>,
}

type Members<T> = BTreeMap<VertexId, Vec<Interval<T>>>;

fn unmatched<T: Time>(xs: &[TemporalCommunity<T>], ys: &[TemporalCommunity<T>]) -> Vec<usize> {
    // multiset difference on member maps
    let mut pool: Vec<Option<&Members<T>>> = ys.iter().map(|c| Some(&c.members)).collect();
    let mut missing = Vec::new();
    for x in xs {
        match pool.iter_mut().find(|slot| slot.is_some_and(|m| *m == x.members)) {
            Some(slot) => *slot = None,
            None => missing.push(x.id),
        }
    }
    missing
}

fn container_counts<T: Time>(inner: &[TemporalCommunity<T>], outer: &[TemporalCommunity<T>]) -> Vec<usize> {
    inner
        .iter()
        .map(|c| outer.iter().filter(|o| o.includes(c)).count())
        .collect()
}

pub fn compare_communities<T: Time>(a: &[TemporalCommunity<T>], b: &[TemporalCommunity<T>]) -> Comparison {
    let only_in_a = unmatched(a, b);
    let only_in_b = unmatched(b, a);
    let equal = only_in_a.is_empty() && only_in_b.is_empty();
    let containers_in_b = container_counts(a, b);
    let containers_in_a = container_counts(b, a);
    let refinement = if equal {
        Refinement::Equal
    } else if containers_in_b.iter().all(|&n| n > 0) {
        Refinement::AInB
    } else if containers_in_a.iter().all(|&n| n > 0) {
        Refinement::BInA
    } else {
        Refinement::None
    };
    Comparison {
        equal,
        refinement,
        only_in_a,
        only_in_b,
        containers_in_b,
        containers_in_a,
    }
}

/// For every snapshot community (a vertex set observed at `t`), the number of
/// temporal communities whose members present at `t` include it.
pub fn snapshot_containers<T: Time>(communities: &[TemporalCommunity<T>], t: T, snapshot: &[Vec<VertexId>]) -> Vec<usize> {
    let present: Vec<Vec<VertexId>> = communities.iter().map(|c| c.vertices_at(t)).collect();
    snapshot
        .iter()
        .map(|set| {
            present
                .iter()
                .filter(|p| set.iter().all(|v| p.binary_search(v).is_ok()))
                .count()
        })
        .collect()
}
