//! The static graph of links alive at the current stream position.
//!
//! Edges are inserted as links are read and dropped once their end time falls
//! strictly before the current begin time. End times sit in a min-heap; an
//! entry is stale when its pair has since been re-inserted with another end
//! time, and such entries are skipped when popped.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use crate::stream::{Link, VertexId};
use crate::time::Time;

#[inline]
fn key(x: VertexId, y: VertexId) -> (VertexId, VertexId) {
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

#[derive(Clone, Debug)]
pub struct WindowGraph<T> {
    adjacency: HashMap<VertexId, HashSet<VertexId>>,
    end_time: HashMap<(VertexId, VertexId), T>,
    expiry: BinaryHeap<Reverse<(T, VertexId, VertexId)>>,
}

impl<T: Time> Default for WindowGraph<T> {
    fn default() -> Self {
        WindowGraph {
            adjacency: HashMap::new(),
            end_time: HashMap::new(),
            expiry: BinaryHeap::new(),
        }
    }
}

impl<T: Time> WindowGraph<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts the link's pair as an edge ending at `link.e`, overwriting the
    /// end time if the pair is already present.
    pub fn add(&mut self, link: &Link<T>) {
        let (u, v) = key(link.u, link.v);
        self.adjacency.entry(u).or_default().insert(v);
        self.adjacency.entry(v).or_default().insert(u);
        self.end_time.insert((u, v), link.e);
        self.expiry.push(Reverse((link.e, u, v)));
    }

    /// Removes exactly the edges whose end time is strictly before `b`.
    pub fn expire(&mut self, b: T) {
        while let Some(&Reverse((end, u, v))) = self.expiry.peek() {
            if end >= b {
                break;
            }
            self.expiry.pop();
            if self.end_time.get(&(u, v)) != Some(&end) {
                continue;
            }
            self.end_time.remove(&(u, v));
            for (x, y) in [(u, v), (v, u)] {
                if let Some(nbrs) = self.adjacency.get_mut(&x) {
                    nbrs.remove(&y);
                    if nbrs.is_empty() {
                        self.adjacency.remove(&x);
                    }
                }
            }
        }
    }

    pub fn has_edge(&self, x: VertexId, y: VertexId) -> bool {
        self.end_time.contains_key(&key(x, y))
    }

    pub fn end_time(&self, x: VertexId, y: VertexId) -> Option<T> {
        self.end_time.get(&key(x, y)).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.end_time.len()
    }

    pub fn is_empty(&self) -> bool {
        self.end_time.is_empty()
    }

    pub fn neighbors(&self, x: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.get(&x).into_iter().flatten().copied()
    }

    pub fn degree(&self, x: VertexId) -> usize {
        self.adjacency.get(&x).map_or(0, HashSet::len)
    }

    /// Sorted common neighbours of `u` and `v`.
    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let (Some(nu), Some(nv)) = (self.adjacency.get(&u), self.adjacency.get(&v)) else {
            return Vec::new();
        };
        let (small, large) = if nu.len() <= nv.len() { (nu, nv) } else { (nv, nu) };
        let mut common: Vec<VertexId> = small.iter().copied().filter(|w| large.contains(w)).collect();
        common.sort_unstable();
        common
    }

    /// Minimum end time over all pairs of `clique`, which must be a clique of
    /// the current graph.
    pub fn clique_end(&self, clique: &[VertexId]) -> T {
        let mut end: Option<T> = None;
        for (i, &x) in clique.iter().enumerate() {
            for &y in &clique[i + 1..] {
                let e = self.end_time(x, y).expect("vertex set is not a clique of the window");
                end = Some(end.map_or(e, |m| m.min(e)));
            }
        }
        end.expect("clique has at least two vertices")
    }

    /// Every vertex set of size `k` containing `u` and `v` that is a clique of
    /// the current graph, each returned sorted. The edge `{u, v}` must be
    /// present.
    ///
    /// Reduces to listing `(k - 2)`-cliques in the subgraph induced by the
    /// common neighbours of `u` and `v`: those vertices directly for `k = 3`,
    /// its edges for `k = 4`, and a degeneracy-ordered recursive listing for
    /// larger `k`.
    pub fn cliques_containing_edge(&self, u: VertexId, v: VertexId, k: usize) -> Vec<Vec<VertexId>> {
        assert!(k >= 3, "clique size must be at least 3");
        debug_assert!(self.has_edge(u, v));
        let common = self.common_neighbors(u, v);
        let need = k - 2;
        if common.len() < need {
            return Vec::new();
        }
        let with_edge = |mut rest: Vec<VertexId>| {
            rest.push(u);
            rest.push(v);
            rest.sort_unstable();
            rest
        };
        match need {
            1 => common.into_iter().map(|w| with_edge(vec![w])).collect(),
            2 => {
                let mut out = Vec::new();
                for (i, &x) in common.iter().enumerate() {
                    for &y in &common[i + 1..] {
                        if self.has_edge(x, y) {
                            out.push(with_edge(vec![x, y]));
                        }
                    }
                }
                out
            }
            _ => {
                let induced = InducedGraph::build(self, &common);
                let mut out = Vec::new();
                induced.list_cliques(need, |local| {
                    out.push(with_edge(local.iter().map(|&i| common[i]).collect()));
                });
                out
            }
        }
    }
}

/// Dense copy of the subgraph induced by a small vertex set, with edges
/// oriented along a degeneracy ordering.
struct InducedGraph {
    out: Vec<Vec<usize>>,
}

impl InducedGraph {
    fn build<T: Time>(g: &WindowGraph<T>, vertices: &[VertexId]) -> Self {
        let n = vertices.len();
        let mut adjacent = vec![false; n * n];
        let mut degree = vec![0usize; n];
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(vertices[i], vertices[j]) {
                    adjacent[i * n + j] = true;
                    adjacent[j * n + i] = true;
                    degree[i] += 1;
                    degree[j] += 1;
                }
            }
        }

        // repeatedly peel a vertex of minimum remaining degree
        let mut rank = vec![usize::MAX; n];
        for r in 0..n {
            let next = (0..n)
                .filter(|&i| rank[i] == usize::MAX)
                .min_by_key(|&i| degree[i])
                .unwrap();
            rank[next] = r;
            for j in 0..n {
                if adjacent[next * n + j] && rank[j] == usize::MAX {
                    degree[j] -= 1;
                }
            }
        }

        let out = (0..n)
            .map(|i| (0..n).filter(|&j| adjacent[i * n + j] && rank[j] > rank[i]).collect())
            .collect();
        InducedGraph { out }
    }

    fn list_cliques(&self, size: usize, mut emit: impl FnMut(&[usize])) {
        let mut current = Vec::with_capacity(size);
        let all: Vec<usize> = (0..self.out.len()).collect();
        self.extend(size, &all, &mut current, &mut emit);
    }

    fn extend(&self, remaining: usize, candidates: &[usize], current: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
        if remaining == 0 {
            emit(current);
            return;
        }
        for &x in candidates {
            let next: Vec<usize> = self.out[x]
                .iter()
                .copied()
                .filter(|y| candidates.binary_search(y).is_ok())
                .collect();
            if next.len() + 1 < remaining {
                continue;
            }
            current.push(x);
            self.extend(remaining - 1, &next, current, emit);
            current.pop();
        }
    }
}
