//! Immutable finite simple graphs on vertices `0..n`.
//!
//! Adjacency is stored row-wise as fixed-width bit vectors so that
//! neighbourhood unions and BFS frontier expansion work a word at a time.

use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

/// Largest order accepted by general graph operations.
pub const MAX_ORDER: usize = 4096;

const WORD_BITS: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Iterates the indices of set bits in a word slice, in ascending order.
pub(crate) fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * WORD_BITS + bit)
        })
    })
}

#[inline]
pub(crate) fn set_bit(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

#[inline]
pub(crate) fn test_bit(words: &[u64], i: usize) -> bool {
    words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
}

/// The standard families used throughout: `P_t`, `C_t`, `K_t` and the edgeless graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Path,
    Cycle,
    Complete,
    Empty,
}

/// A finite simple undirected graph with dense vertex labels `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    bits: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Repeated pairs are rejected rather than merged: every constructor in
    /// this crate emits each edge once, so a repeat means a construction bug.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(order)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn edgeless(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        let words = words_for(order);
        Ok(Self {
            order,
            words,
            bits: vec![0; order * words],
            edge_count: 0,
        })
    }

    pub fn standard(kind: StandardKind, t: usize) -> Result<Self> {
        let mut g = Self::edgeless(t)?;
        match kind {
            StandardKind::Empty => {}
            StandardKind::Path => {
                for i in 1..t {
                    g.insert_edge(i - 1, i);
                }
            }
            StandardKind::Cycle => {
                if t < 3 {
                    return Err(Error::CycleTooShort(t));
                }
                for i in 0..t {
                    g.insert_edge(i, (i + 1) % t);
                }
            }
            StandardKind::Complete => {
                for v in 1..t {
                    for u in 0..v {
                        g.insert_edge(u, v);
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn path(t: usize) -> Result<Self> {
        Self::standard(StandardKind::Path, t)
    }

    pub fn cycle(t: usize) -> Result<Self> {
        Self::standard(StandardKind::Cycle, t)
    }

    pub fn complete(t: usize) -> Result<Self> {
        Self::standard(StandardKind::Complete, t)
    }

    pub fn empty(t: usize) -> Result<Self> {
        Self::standard(StandardKind::Empty, t)
    }

    /// The join `self ∨ other`: `self` keeps labels `0..|self|`, `other` is
    /// shifted by `|self|`, and every cross pair becomes an edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let shift = self.order;
        let mut g = Self::edgeless(self.order + other.order)?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + shift, v + shift);
        }
        for u in 0..self.order {
            for v in 0..other.order {
                g.insert_edge(u, v + shift);
            }
        }
        Ok(g)
    }

    /// Glues `other` onto `self` by identifying `other`'s vertex `v` with
    /// `self`'s vertex `u`.
    ///
    /// The merged vertex keeps label `u`; the remaining vertices of `other`
    /// follow `self`'s labels in their original relative order.
    pub fn identify(&self, u: usize, other: &Graph, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let map = |x: usize| -> usize {
            match x.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => self.order + x,
                std::cmp::Ordering::Greater => self.order + x - 1,
            }
        };
        let mut g = Self::edgeless(self.order + other.order - 1)?;
        for (a, b) in self.edges() {
            g.insert_edge(a, b);
        }
        for (a, b) in other.edges() {
            let (a, b) = (map(a), map(b));
            if !g.has_edge(a, b) {
                g.insert_edge(a, b);
            }
        }
        Ok(g)
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::BadParameters(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.order
            )));
        }
        let mut seen = vec![false; self.order];
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadParameters(format!(
                    "{p} appears twice in permutation"
                )));
            }
        }
        let mut g = Self::edgeless(self.order)?;
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// True iff a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        let mut next = vec![0u64; self.words];
        set_bit(&mut seen, 0);
        set_bit(&mut frontier, 0);
        let mut reached = 1;
        while reached < self.order {
            next.iter_mut().for_each(|w| *w = 0);
            for u in ones(&frontier) {
                for (n, r) in next.iter_mut().zip(self.row(u)) {
                    *n |= r;
                }
            }
            let mut added = 0;
            for (n, s) in next.iter_mut().zip(seen.iter_mut()) {
                *n &= !*s;
                *s |= *n;
                added += n.count_ones() as usize;
            }
            if added == 0 {
                return false;
            }
            reached += added;
            std::mem::swap(&mut frontier, &mut next);
        }
        true
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Number of 64-bit words in each adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v` as a bit vector.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && test_bit(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(v))
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        let w = self.words;
        set_bit(&mut self.bits[u * w..(u + 1) * w], v);
        set_bit(&mut self.bits[v * w..(v + 1) * w], u);
        self.edge_count += 1;
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        let w = self.words;
        self.bits[u * w + v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
        self.bits[v * w + u / WORD_BITS] &= !(1u64 << (u % WORD_BITS));
        self.edge_count -= 1;
    }
}

/// Free-function form of [`Graph::new`].
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<[usize; 2]> = self.edges().map(|(u, v)| [u, v]).collect();
        let mut s = serializer.serialize_struct("Graph", 3)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("edge_count", &self.edge_count)?;
        s.serialize_field("edges", &edges)?;
        s.end()
    }
}
