//! Streaming enumeration of the maximal k-cliques of a link stream.
//!
//! Links are read in chronological order into a [`WindowGraph`]. Every
//! static k-clique of the window that contains the pair of the link just read
//! starts exactly at that link's begin time and lasts until the earliest end
//! time among its pairs. Cliques of zero length are dropped, and a clique
//! found again through another link with the same begin time is reported
//! once. Within one begin time, cliques are emitted in lexicographic order of
//! their vertex sets.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::stream::{LinkStream, VertexId};
use crate::time::{Interval, Tick, Time};
use crate::window::WindowGraph;

/// A maximal k-clique: a sorted vertex set together with the maximal
/// interval of positive length over which all its pairs are linked.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TemporalKClique<T = Tick> {
    pub vertices: Vec<VertexId>,
    pub interval: Interval<T>,
}

impl<T: Time> TemporalKClique<T> {
    /// Sorts `vertices`. Panics on repeated vertices or a zero-length interval.
    pub fn new(mut vertices: Vec<VertexId>, t0: T, t1: T) -> Self {
        vertices.sort_unstable();
        assert!(vertices.windows(2).all(|w| w[0] < w[1]), "repeated vertex in clique");
        let interval = Interval::new(t0, t1);
        assert!(interval.is_positive(), "clique interval must have positive length");
        TemporalKClique { vertices, interval }
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn t0(&self) -> T {
        self.interval.t0
    }

    pub fn t1(&self) -> T {
        self.interval.t1
    }
}

impl<T: fmt::Debug> fmt::Debug for TemporalKClique<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.vertices, self.interval)
    }
}

pub fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        Err(Error::InvalidK(k))
    } else {
        Ok(())
    }
}

/// Iterator over the maximal k-cliques of a stream, in non-decreasing order of
/// start time.
pub struct KCliqueEnumerator<'a, T> {
    links: &'a [crate::stream::Link<T>],
    next_link: usize,
    k: usize,
    window: WindowGraph<T>,
    ready: VecDeque<TemporalKClique<T>>,
}

impl<'a, T: Time> KCliqueEnumerator<'a, T> {
    pub fn new(stream: &'a LinkStream<T>, k: usize) -> Result<Self> {
        check_k(k)?;
        Ok(KCliqueEnumerator {
            links: stream.links(),
            next_link: 0,
            k,
            window: WindowGraph::new(),
            ready: VecDeque::new(),
        })
    }

    /// Reads every link sharing the next begin time and queues the cliques
    /// they start.
    fn read_batch(&mut self) {
        let b = self.links[self.next_link].b;
        let mut batch: Vec<TemporalKClique<T>> = Vec::new();
        while let Some(link) = self.links.get(self.next_link).filter(|l| l.b == b) {
            self.next_link += 1;
            self.window.add(link);
            self.window.expire(b);
            for vertices in self.window.cliques_containing_edge(link.u, link.v, self.k) {
                let end = self.window.clique_end(&vertices);
                if end > b {
                    batch.push(TemporalKClique {
                        vertices,
                        interval: Interval { t0: b, t1: end },
                    });
                }
            }
        }
        batch.sort_unstable();
        batch.dedup();
        self.ready.extend(batch);
    }
}

impl<T: Time> Iterator for KCliqueEnumerator<'_, T> {
    type Item = TemporalKClique<T>;

    fn next(&mut self) -> Option<Self::Item> {
        while self.ready.is_empty() && self.next_link < self.links.len() {
            self.read_batch();
        }
        self.ready.pop_front()
    }
}

/// Collects every maximal k-clique of `stream` in emission order.
pub fn enumerate_k_cliques<T: Time>(stream: &LinkStream<T>, k: usize) -> Result<Vec<TemporalKClique<T>>> {
    Ok(KCliqueEnumerator::new(stream, k)?.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::{parse_durational, Link};

    #[test]
    fn rejects_small_k() {
        let s = LinkStream::<Tick>::default();
        assert_eq!(enumerate_k_cliques(&s, 2).unwrap_err(), Error::InvalidK(2));
    }

    #[test]
    fn single_link_has_no_cliques() {
        let s = LinkStream::from_links([Link::new(0, 5, 0, 1)]);
        for k in 3..6 {
            assert!(enumerate_k_cliques(&s, k).unwrap().is_empty());
        }
    }

    #[test]
    fn triangle_with_staggered_links() {
        let s = LinkStream::from_links([
            Link::new(0, 10, 0, 1),
            Link::new(2, 8, 1, 2),
            Link::new(4, 6, 0, 2),
        ]);
        let got = enumerate_k_cliques(&s, 3).unwrap();
        assert_eq!(got, vec![TemporalKClique::new(vec![0, 1, 2], 4, 6)]);
    }

    #[test]
    fn zero_length_clique_is_dropped() {
        // {0,2} ends exactly when {1,2} begins
        let s = LinkStream::from_links([
            Link::new(0, 10, 0, 1),
            Link::new(0, 5, 0, 2),
            Link::new(5, 9, 1, 2),
        ]);
        assert!(enumerate_k_cliques(&s, 3).unwrap().is_empty());
    }

    #[test]
    fn same_begin_reported_once() {
        let s = LinkStream::from_links([
            Link::new(3, 10, 0, 1),
            Link::new(3, 8, 1, 2),
            Link::new(3, 9, 0, 2),
        ]);
        let got = enumerate_k_cliques(&s, 3).unwrap();
        assert_eq!(got, vec![TemporalKClique::new(vec![0, 1, 2], 3, 8)]);
    }

    #[test]
    fn repeated_clique_on_disjoint_intervals() {
        let s: LinkStream = parse_durational(
            "0 20 a b\n0 20 a c\n2 5 b c\n8 12 b c\n",
        )
        .unwrap();
        let got = enumerate_k_cliques(&s, 3).unwrap();
        assert_eq!(
            got,
            vec![
                TemporalKClique::new(vec![0, 1, 2], 2, 5),
                TemporalKClique::new(vec![0, 1, 2], 8, 12),
            ]
        );
    }

    #[test]
    fn batch_is_lexicographic() {
        let s = LinkStream::from_links([
            Link::new(0, 9, 0, 1),
            Link::new(0, 9, 0, 3),
            Link::new(0, 9, 1, 3),
            Link::new(0, 9, 2, 4),
            Link::new(0, 9, 0, 2),
            Link::new(0, 9, 0, 4),
        ]);
        let got: Vec<_> = enumerate_k_cliques(&s, 3)
            .unwrap()
            .into_iter()
            .map(|c| c.vertices)
            .collect();
        assert_eq!(got, vec![vec![0, 1, 3], vec![0, 2, 4]]);
    }
}
