//! Summary distributions over a community list.

use std::collections::BTreeMap;

use crate::community::TemporalCommunity;
use crate::time::Time;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommunityStats {
    /// Number of communities each vertex belongs to, indexed by vertex id.
    pub communities_per_vertex: Vec<usize>,
    /// community count -> number of vertices belonging to that many
    /// communities.
    pub membership_distribution: BTreeMap<usize, usize>,
    /// vertex count -> number of communities of that size.
    pub size_distribution: BTreeMap<usize, usize>,
}

pub fn community_stats<T: Time>(vertex_count: usize, communities: &[TemporalCommunity<T>]) -> CommunityStats {
    let mut per_vertex = vec![0usize; vertex_count];
    let mut sizes = BTreeMap::new();
    for c in communities {
        for v in c.vertices() {
            per_vertex[v as usize] += 1;
        }
        *sizes.entry(c.vertex_count()).or_insert(0) += 1;
    }
    let mut memberships = BTreeMap::new();
    for &n in &per_vertex {
        *memberships.entry(n).or_insert(0) += 1;
    }
    CommunityStats {
        communities_per_vertex: per_vertex,
        membership_distribution: memberships,
        size_distribution: sizes,
    }
}
