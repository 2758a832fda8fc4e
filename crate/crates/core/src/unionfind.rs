use std::fmt;

use crate::error::{Error, Result};

/// Identifier of a union-find element, one per community seed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl fmt::Debug for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i{}", self.0)
    }
}

/// Disjoint-set forest with union by rank and path compression.
#[derive(Clone, Debug, Default)]
pub struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Creates a singleton set and returns its root. Ids are handed out
    /// consecutively from 0.
    pub fn make_set(&mut self) -> NodeId {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.rank.push(0);
        NodeId(id)
    }

    fn check(&self, x: NodeId) -> Result<()> {
        if (x.0 as usize) < self.parent.len() {
            Ok(())
        } else {
            Err(Error::UnknownNode(x.0))
        }
    }

    pub fn find(&mut self, x: NodeId) -> Result<NodeId> {
        self.check(x)?;
        let mut root = x.0;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x.0;
        while cur != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        Ok(NodeId(root))
    }

    /// Root lookup without compression.
    pub fn root(&self, x: NodeId) -> Result<NodeId> {
        self.check(x)?;
        let mut root = x.0;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        Ok(NodeId(root))
    }

    /// Merges the sets of `p` and `q` and returns the surviving root. With
    /// `p = None`, nothing is merged and the root of `q` is returned. On equal
    /// ranks the root of `p` survives.
    pub fn union(&mut self, p: Option<NodeId>, q: NodeId) -> Result<NodeId> {
        let rq = self.find(q)?;
        let Some(p) = p else {
            return Ok(rq);
        };
        let rp = self.find(p)?;
        if rp == rq {
            return Ok(rp);
        }
        let (a, b) = (rp.0 as usize, rq.0 as usize);
        if self.rank[a] < self.rank[b] {
            self.parent[a] = rq.0;
            Ok(rq)
        } else {
            if self.rank[a] == self.rank[b] {
                self.rank[a] += 1;
            }
            self.parent[b] = rp.0;
            Ok(rp)
        }
    }

    pub fn same_set(&mut self, a: NodeId, b: NodeId) -> Result<bool> {
        Ok(self.find(a)? == self.find(b)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fresh_ids() {
        let mut uf = UnionFind::new();
        assert_eq!(uf.make_set(), NodeId(0));
        assert_eq!(uf.make_set(), NodeId(1));
        let c = uf.make_set();
        assert_eq!(uf.find(c).unwrap(), c);
    }

    #[test]
    fn union_with_sentinel_is_find() {
        let mut uf = UnionFind::new();
        let a = uf.make_set();
        let b = uf.make_set();
        uf.union(Some(a), b).unwrap();
        assert_eq!(uf.union(None, b).unwrap(), a);
        assert_eq!(uf.len(), 2);
    }

    #[test]
    fn union_same_root_is_noop() {
        let mut uf = UnionFind::new();
        let a = uf.make_set();
        let b = uf.make_set();
        let r = uf.union(Some(a), b).unwrap();
        assert_eq!(uf.union(Some(b), a).unwrap(), r);
    }

    #[test]
    fn two_singletons_merge() {
        let mut uf = UnionFind::new();
        let a = uf.make_set();
        let b = uf.make_set();
        assert!(!uf.same_set(a, b).unwrap());
        assert_eq!(uf.union(Some(a), b).unwrap(), a);
        assert!(uf.same_set(a, b).unwrap());
    }

    #[test]
    fn unknown_id() {
        let mut uf = UnionFind::new();
        assert_eq!(uf.find(NodeId(3)), Err(Error::UnknownNode(3)));
        let a = uf.make_set();
        assert!(uf.union(Some(NodeId(7)), a).is_err());
    }

    proptest! {
        #[test]
        fn matches_naive_labelling(n in 1usize..40, ops in prop::collection::vec((0usize..40, 0usize..40), 0..80)) {
            let mut uf = UnionFind::new();
            let ids: Vec<NodeId> = (0..n).map(|_| uf.make_set()).collect();
            let mut label: Vec<usize> = (0..n).collect();
            for (a, b) in ops {
                let (a, b) = (a % n, b % n);
                uf.union(Some(ids[a]), ids[b]).unwrap();
                let (la, lb) = (label[a], label[b]);
                for l in label.iter_mut() {
                    if *l == lb {
                        *l = la;
                    }
                }
            }
            for i in 0..n {
                let r = uf.find(ids[i]).unwrap();
                prop_assert_eq!(uf.find(r).unwrap(), r);
                for j in 0..n {
                    prop_assert_eq!(uf.same_set(ids[i], ids[j]).unwrap(), label[i] == label[j]);
                }
            }
        }
    }
}
