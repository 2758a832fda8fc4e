//! Temporal communities and their extraction from a percolation state.

use std::collections::{BTreeMap, HashMap};

use crate::error::Result;
use crate::percolation::PercolationState;
use crate::stream::VertexId;
use crate::time::{merge_intervals, Interval, Tick, Time};
use crate::unionfind::NodeId;

/// A set of temporal vertices: each member vertex with the sorted, disjoint
/// intervals during which it belongs to the community.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TemporalCommunity<T = Tick> {
    pub id: usize,
    pub members: BTreeMap<VertexId, Vec<Interval<T>>>,
}

impl<T: Time> TemporalCommunity<T> {
    pub fn vertex_count(&self) -> usize {
        self.members.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.keys().copied()
    }

    /// Earliest instant at which any member is present.
    pub fn first_time(&self) -> Option<T> {
        self.members.values().filter_map(|ivs| ivs.first()).map(|iv| iv.t0).min()
    }

    pub fn last_time(&self) -> Option<T> {
        self.members.values().filter_map(|ivs| ivs.last()).map(|iv| iv.t1).max()
    }

    /// Whether `v` is a member at instant `t`.
    pub fn contains_at(&self, v: VertexId, t: T) -> bool {
        self.members
            .get(&v)
            .is_some_and(|ivs| ivs.iter().any(|iv| iv.contains(t)))
    }

    /// Members present at `t`, sorted.
    pub fn vertices_at(&self, t: T) -> Vec<VertexId> {
        self.members
            .iter()
            .filter(|(_, ivs)| ivs.iter().any(|iv| iv.contains(t)))
            .map(|(&v, _)| v)
            .collect()
    }

    /// Whether every temporal vertex of `other` is also a temporal vertex of
    /// `self`.
    pub fn includes(&self, other: &TemporalCommunity<T>) -> bool {
        other.members.iter().all(|(v, theirs)| {
            self.members
                .get(v)
                .is_some_and(|ours| theirs.iter().all(|iv| ours.iter().any(|o| o.covers(iv))))
        })
    }

    /// Total presence duration summed over members, via a caller-supplied
    /// length function (time types need not support subtraction).
    pub fn presence<D: std::iter::Sum>(&self, length: impl Fn(&Interval<T>) -> D) -> D {
        self.members.values().flatten().map(length).sum()
    }
}

/// Normalizes raw `(group, vertex, interval)` contributions into communities:
/// per-vertex intervals are unioned (touching intervals merge) and groups are
/// numbered `0..` by first appearance time, ties broken by content.
pub fn build_communities<G, T>(
    contributions: impl IntoIterator<Item = (G, VertexId, Interval<T>)>,
) -> Vec<TemporalCommunity<T>>
where
    G: std::hash::Hash + Eq,
    T: Time,
{
    let mut groups: HashMap<G, BTreeMap<VertexId, Vec<Interval<T>>>> = HashMap::new();
    for (g, v, iv) in contributions {
        groups.entry(g).or_default().entry(v).or_default().push(iv);
    }
    let mut communities: Vec<TemporalCommunity<T>> = groups
        .into_values()
        .map(|mut members| {
            for ivs in members.values_mut() {
                *ivs = merge_intervals(std::mem::take(ivs));
            }
            TemporalCommunity { id: 0, members }
        })
        .collect();
    communities.sort_by(|a, b| {
        a.first_time()
            .cmp(&b.first_time())
            .then_with(|| a.members.cmp(&b.members))
    });
    for (i, c) in communities.iter_mut().enumerate() {
        c.id = i;
    }
    communities
}

/// Turns a finished percolation into communities. Each membership
/// `(S, node, interval)` contributes every vertex of `S` over `interval` to
/// the community rooted at `find(node)`.
pub fn materialize<T: Time>(state: &mut PercolationState<T>) -> Result<Vec<TemporalCommunity<T>>> {
    let memberships: Vec<(Vec<VertexId>, NodeId, Interval<T>)> = state
        .time_uf()
        .iter()
        .flat_map(|(key, list)| list.iter().map(move |m| (key.to_vec(), m.node, m.interval)))
        .collect();
    let mut contributions = Vec::with_capacity(memberships.len() * state.k());
    for (key, node, interval) in memberships {
        let root = state.find(node)?;
        contributions.extend(key.into_iter().map(|v| (root, v, interval)));
    }
    Ok(build_communities(contributions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kclique::TemporalKClique;
    use crate::percolation::run_lscpm;

    fn iv(a: Tick, b: Tick) -> Interval<Tick> {
        Interval::new(a, b)
    }

    #[test]
    fn empty_state() {
        let mut state = PercolationState::<Tick>::new(3).unwrap();
        assert!(materialize(&mut state).unwrap().is_empty());
    }

    #[test]
    fn single_clique() {
        let mut state = run_lscpm([TemporalKClique::new(vec![0, 1, 2], 0, 5)], 3).unwrap();
        let got = materialize(&mut state).unwrap();
        assert_eq!(got.len(), 1);
        let expected: BTreeMap<_, _> = (0..3).map(|v| (v, vec![iv(0, 5)])).collect();
        assert_eq!(got[0].members, expected);
        assert_eq!(got[0].id, 0);
    }

    #[test]
    fn labels_follow_first_appearance() {
        let cliques = [
            TemporalKClique::new(vec![5, 6, 7], 0, 4),
            TemporalKClique::new(vec![0, 1, 2], 2, 5),
        ];
        let mut state = run_lscpm(cliques, 3).unwrap();
        let got = materialize(&mut state).unwrap();
        assert_eq!(got[0].vertices().collect::<Vec<_>>(), vec![5, 6, 7]);
        assert_eq!(got[1].vertices().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(got[1].id, 1);
    }

    #[test]
    fn touching_presence_merges() {
        let got = build_communities([(0, 1, iv(2, 5)), (0, 1, iv(5, 9)), (0, 2, iv(0, 1))]);
        assert_eq!(got[0].members[&1], vec![iv(2, 9)]);
        assert_eq!(got[0].first_time(), Some(0));
        assert_eq!(got[0].last_time(), Some(9));
    }

    #[test]
    fn inclusion_and_restriction() {
        let big = &build_communities([(0, 1, iv(0, 10)), (0, 2, iv(0, 4)), (0, 3, iv(6, 8))])[0];
        let small = &build_communities([(0, 1, iv(2, 3)), (0, 3, iv(6, 7))])[0];
        assert!(big.includes(small));
        assert!(!small.includes(big));
        assert_eq!(big.vertices_at(5), vec![1]);
        assert!(big.contains_at(3, 8));
        assert_eq!(big.presence(|iv| iv.t1 - iv.t0), 16);
    }
}
