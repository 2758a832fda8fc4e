//! Brute-force reference implementations, for checking the streaming engine
//! on small instances.
//!
//! Nothing here shares code with the window graph, the enumerator or the
//! union-find: cliques are found by testing every vertex subset against the
//! grid of event times, communities by explicit connected components of the
//! clique adjacency graph.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::community::{build_communities, TemporalCommunity};
use crate::error::{Error, Result};
use crate::kclique::{check_k, TemporalKClique};
use crate::stream::{LinkStream, VertexId};
use crate::time::{Interval, Time};

pub const MAX_VERTICES: usize = 24;
pub const MAX_LINKS: usize = 500;

type PairLinks<T> = HashMap<(VertexId, VertexId), Vec<Interval<T>>>;

fn pair_links<T: Time>(stream: &LinkStream<T>) -> PairLinks<T> {
    let mut pairs: PairLinks<T> = HashMap::new();
    for l in stream.links() {
        if let Some(iv) = l.interval() {
            pairs.entry((l.u.min(l.v), l.u.max(l.v))).or_default().push(iv);
        }
    }
    pairs
}

fn pairs_of(vertices: &[VertexId]) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    vertices
        .iter()
        .enumerate()
        .flat_map(move |(i, &x)| vertices[i + 1..].iter().map(move |&y| (x.min(y), x.max(y))))
}

/// The link of the pair `(x, y)` covering `interval`, if any.
fn covering_link<T: Time>(
    pairs: &PairLinks<T>,
    x: VertexId,
    y: VertexId,
    interval: &Interval<T>,
) -> Option<Interval<T>> {
    pairs
        .get(&(x.min(y), x.max(y)))?
        .iter()
        .copied()
        .find(|link| link.covers(interval))
}

/// Whether `(vertices, interval)` is a clique of the stream: the interval has
/// positive length and every pair is linked throughout it.
pub fn is_clique<T: Time>(stream: &LinkStream<T>, vertices: &[VertexId], interval: Interval<T>) -> bool {
    let pairs = pair_links(stream);
    interval.is_positive() && pairs_of(vertices).all(|(x, y)| covering_link(&pairs, x, y, &interval).is_some())
}

/// For a clique, whether starting it any earlier (`.0`) or ending it any later
/// (`.1`) still yields a clique. Links are closed intervals, so the clique
/// extends to the left exactly when every covering link begins strictly
/// before `t0`, and symmetrically on the right.
pub fn extensions<T: Time>(stream: &LinkStream<T>, vertices: &[VertexId], interval: Interval<T>) -> (bool, bool) {
    let pairs = pair_links(stream);
    let covering: Vec<Interval<T>> = pairs_of(vertices)
        .map(|(x, y)| covering_link(&pairs, x, y, &interval).expect("not a clique of the stream"))
        .collect();
    (
        covering.iter().all(|l| l.t0 < interval.t0),
        covering.iter().all(|l| l.t1 > interval.t1),
    )
}

/// All maximal k-cliques, found by checking every k-subset of vertices on the
/// grid of distinct event times.
pub fn oracle_enumerate<T: Time>(stream: &LinkStream<T>, k: usize) -> Result<BTreeSet<TemporalKClique<T>>> {
    check_k(k)?;
    if stream.vertex_count() > MAX_VERTICES || stream.len() > MAX_LINKS {
        return Err(Error::TooLarge(format!(
            "{} vertices and {} links (limits {MAX_VERTICES} and {MAX_LINKS})",
            stream.vertex_count(),
            stream.len()
        )));
    }
    let pairs = pair_links(stream);
    let mut grid: Vec<T> = stream.links().iter().flat_map(|l| [l.b, l.e]).collect();
    grid.sort_unstable();
    grid.dedup();

    let n = stream.vertex_count() as VertexId;
    let mut out = BTreeSet::new();
    let mut subset = Vec::with_capacity(k);
    for_each_subset(n, k, &mut subset, &pairs, &mut |vertices| {
        let pair_list: Vec<(VertexId, VertexId)> = pairs_of(vertices).collect();
        let alive = |seg: &Interval<T>| {
            pair_list
                .iter()
                .all(|&(x, y)| pairs[&(x, y)].iter().any(|l| l.covers(seg)))
        };
        let mut run: Option<Interval<T>> = None;
        for w in grid.windows(2) {
            let seg = Interval::new(w[0], w[1]);
            if alive(&seg) {
                run = Some(run.map_or(seg, |r| r.hull(&seg)));
            } else if let Some(r) = run.take() {
                out.insert(TemporalKClique::new(vertices.to_vec(), r.t0, r.t1));
            }
        }
        if let Some(r) = run {
            out.insert(TemporalKClique::new(vertices.to_vec(), r.t0, r.t1));
        }
    });
    Ok(out)
}

/// Visits every increasing k-subset of `0..n` whose pairs all have at least
/// one link.
fn for_each_subset<T>(
    n: VertexId,
    k: usize,
    subset: &mut Vec<VertexId>,
    pairs: &PairLinks<T>,
    visit: &mut impl FnMut(&[VertexId]),
) {
    if subset.len() == k {
        visit(subset);
        return;
    }
    let start = subset.last().map_or(0, |&v| v + 1);
    for v in start..n {
        if subset.iter().all(|&x| pairs.contains_key(&(x, v))) {
            subset.push(v);
            for_each_subset(n, k, subset, pairs, visit);
            subset.pop();
        }
    }
}

/// Adjacency of maximal k-cliques: `k - 1` shared vertices and a positive
/// length overlap.
pub fn adjacent<T: Time>(a: &TemporalKClique<T>, b: &TemporalKClique<T>, k: usize) -> bool {
    let shared = a.vertices.iter().filter(|v| b.vertices.contains(v)).count();
    shared == k - 1 && a.interval.overlaps_positively(&b.interval)
}

#[derive(Clone, Debug)]
pub struct OracleCommunities<T> {
    /// Indices into the input cliques, one list per connected component.
    pub components: Vec<Vec<usize>>,
    pub communities: Vec<TemporalCommunity<T>>,
}

/// Communities as connected components of the explicit clique adjacency graph.
pub fn oracle_communities<T: Time>(cliques: &[TemporalKClique<T>], k: usize) -> OracleCommunities<T> {
    let n = cliques.len();
    let mut neighbours = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if adjacent(&cliques[i], &cliques[j], k) {
                neighbours[i].push(j);
                neighbours[j].push(i);
            }
        }
    }
    let mut component = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        component[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &j in &neighbours[i] {
                if component[j] == usize::MAX {
                    component[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    let contributions = cliques.iter().enumerate().flat_map(|(i, c)| {
        let id = component[i];
        c.vertices.iter().map(move |&v| (id, v, c.interval))
    });
    OracleCommunities {
        components,
        communities: build_communities(contributions),
    }
}

/// Static clique percolation on the graph of links alive at `t`, using the
/// half-open convention `b <= t < e`. Returns the community vertex sets,
/// sorted.
pub fn snapshot_cpm<T: Time>(stream: &LinkStream<T>, t: T, k: usize) -> Result<Vec<Vec<VertexId>>> {
    check_k(k)?;
    let mut adjacency: HashMap<VertexId, BTreeSet<VertexId>> = HashMap::new();
    for l in stream.links().iter().filter(|l| l.b <= t && t < l.e) {
        adjacency.entry(l.u).or_default().insert(l.v);
        adjacency.entry(l.v).or_default().insert(l.u);
    }
    let mut vertices: Vec<VertexId> = adjacency.keys().copied().collect();
    vertices.sort_unstable();

    let mut cliques: Vec<Vec<VertexId>> = Vec::new();
    let mut current = Vec::with_capacity(k);
    static_cliques(&adjacency, &vertices, k, &mut current, &mut cliques);

    let n = cliques.len();
    let mut component: Vec<usize> = (0..n).collect();
    fn root(component: &mut [usize], mut i: usize) -> usize {
        while component[i] != i {
            i = component[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let shared = cliques[i].iter().filter(|v| cliques[j].contains(v)).count();
            if shared == k - 1 {
                let (ri, rj) = (root(&mut component, i), root(&mut component, j));
                component[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: HashMap<usize, BTreeSet<VertexId>> = HashMap::new();
    for (i, c) in cliques.iter().enumerate() {
        let r = root(&mut component, i);
        groups.entry(r).or_default().extend(c.iter().copied());
    }
    let mut out: Vec<Vec<VertexId>> = groups.into_values().map(|s| s.into_iter().collect()).collect();
    out.sort();
    Ok(out)
}

fn static_cliques(
    adjacency: &HashMap<VertexId, BTreeSet<VertexId>>,
    candidates: &[VertexId],
    k: usize,
    current: &mut Vec<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    for (i, &v) in candidates.iter().enumerate() {
        let next: Vec<VertexId> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|w| adjacency[&v].contains(w))
            .collect();
        current.push(v);
        static_cliques(adjacency, &next, k, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::{parse_durational, Link};
    use crate::time::Tick;

    fn example_stream() -> LinkStream<Tick> {
        parse_durational(include_str!("../tests/data/example.txt")).unwrap()
    }

    fn named(stream: &LinkStream<Tick>, names: &str, t0: Tick, t1: Tick) -> TemporalKClique<Tick> {
        let v = names
            .chars()
            .map(|c| stream.vertex(&c.to_string()).unwrap())
            .collect();
        TemporalKClique::new(v, t0, t1)
    }

    #[test]
    fn finds_the_four_example_cliques() {
        let s = example_stream();
        let got = oracle_enumerate(&s, 3).unwrap();
        let expected: BTreeSet<_> = [
            named(&s, "cde", 2, 13),
            named(&s, "efg", 3, 5),
            named(&s, "def", 4, 9),
            named(&s, "efg", 8, 12),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn no_triangle_no_clique() {
        let s = LinkStream::from_links([Link::new(0, 5, 0, 1), Link::new(0, 5, 1, 2)]);
        assert!(oracle_enumerate(&s, 3).unwrap().is_empty());
    }

    #[test]
    fn k_above_clique_number() {
        let s = example_stream();
        assert!(oracle_enumerate(&s, 4).unwrap().is_empty());
    }

    #[test]
    fn guard_on_size() {
        let links: Vec<_> = (0..30).map(|i| Link::new(0, 1, i, i + 1)).collect();
        let s = LinkStream::from_links(links);
        assert!(matches!(oracle_enumerate(&s, 3), Err(Error::TooLarge(_))));
    }

    #[test]
    fn returned_cliques_satisfy_definition() {
        let s = example_stream();
        for c in oracle_enumerate(&s, 3).unwrap() {
            assert!(is_clique(&s, &c.vertices, c.interval));
            assert_eq!(extensions(&s, &c.vertices, c.interval), (false, false));
        }
    }

    #[test]
    fn example_cliques_form_one_component() {
        let s = example_stream();
        let cliques: Vec<_> = oracle_enumerate(&s, 3).unwrap().into_iter().collect();
        let result = oracle_communities(&cliques, 3);
        assert_eq!(result.components.len(), 1);
        assert_eq!(result.communities[0].vertex_count(), 5);
    }

    #[test]
    fn disjoint_cliques_separate() {
        let cliques = [
            TemporalKClique::<Tick>::new(vec![0, 1, 2], 0, 5),
            TemporalKClique::new(vec![3, 4, 5], 0, 5),
        ];
        assert_eq!(oracle_communities(&cliques, 3).components.len(), 2);
    }

    #[test]
    fn zero_length_overlap_is_not_adjacency() {
        let cliques = [
            TemporalKClique::<Tick>::new(vec![0, 1, 2], 0, 5),
            TemporalKClique::new(vec![0, 1, 3], 5, 9),
        ];
        assert_eq!(oracle_communities(&cliques, 3).components.len(), 2);
    }

    #[test]
    fn snapshot_between_four_and_five() {
        let s = example_stream();
        let id = |c: &str| s.vertex(c).unwrap();
        let got = snapshot_cpm(&s, 4, 3).unwrap();
        assert_eq!(got.len(), 1);
        let mut expected = vec![id("c"), id("d"), id("e"), id("f"), id("g")];
        expected.sort();
        assert_eq!(got[0], expected);
        // {c,d,e} and {d,e,f} percolate; {e,f,g} joins through {e,f}
        for v in ["c", "d", "e", "f"] {
            assert!(got[0].contains(&id(v)));
        }
    }

    #[test]
    fn snapshot_without_clique() {
        let s = example_stream();
        assert!(snapshot_cpm(&s, 0, 3).unwrap().is_empty());
    }

    #[test]
    fn snapshot_of_one_clique() {
        let s = LinkStream::from_links([
            Link::new(0, 5, 0, 1),
            Link::new(0, 5, 1, 2),
            Link::new(0, 5, 0, 2),
        ]);
        assert_eq!(snapshot_cpm(&s, 2, 3).unwrap(), vec![vec![0, 1, 2]]);
        // half-open: nothing is alive at the common end time
        assert!(snapshot_cpm(&s, 5, 3).unwrap().is_empty());
    }
}
