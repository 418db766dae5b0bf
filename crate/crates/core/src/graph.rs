//! Undirected simple graphs over dense vertex ids with word-parallel BFS.
//!
//! Every vertex owns a fixed-width row of `u64` words holding its
//! neighbourhood. Breadth-first search expands a whole frontier at once by
//! OR-ing rows, so one level costs `|frontier| * words` word operations.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest supported order.
pub const MAX_ORDER: usize = 512;

/// Distance / eccentricity sentinel for unreachable vertices.
pub const INFINITE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {order} is outside the supported range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop requested at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("edge {u}-{v} is already present")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is disconnected, so its radius is infinite")]
    Disconnected,
    #[error("not a permutation of 0..{order}")]
    InvalidPermutation { order: usize },
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterates the set bits of a word slice in increasing order.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange { order: n, max: MAX_ORDER });
        }
        let words = words_for(n);
        Ok(Graph { n, words, rows: vec![0; n * words] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::OrderOutOfRange { order: n, max: MAX_ORDER });
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v);
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    fn check_new_edge(&self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
        }
        Ok(())
    }

    /// Panics if either endpoint is out of range.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adds `uv` in place.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_new_edge(u, v)?;
        self.set(u, v);
        Ok(())
    }

    /// `G + uv` as a new graph.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Removes `uv` in place; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let present = u != v && self.has_edge(u, v);
        if present {
            self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
            self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
        }
        Ok(present)
    }

    /// Appends one isolated vertex and returns its id.
    pub(crate) fn push_vertex(&mut self) -> Result<usize, GraphError> {
        let n = self.n + 1;
        if n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange { order: n, max: MAX_ORDER });
        }
        let words = words_for(n);
        if words != self.words {
            let mut rows = vec![0; n * words];
            for v in 0..self.n {
                rows[v * words..v * words + self.words].copy_from_slice(self.row(v));
            }
            self.rows = rows;
            self.words = words;
        } else {
            self.rows.resize(n * words, 0);
        }
        self.n = n;
        Ok(n - 1)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Absent pairs `(u, v)` with `u < v`, each once, ordered by `u` then `v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("order already validated");
        for (u, v) in self.non_edges() {
            g.set(u, v);
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * (self.n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        let mut scratch = Scratch::new(self);
        self.sweep(0, INFINITE, &mut scratch).reached == self.n
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(GraphError::InvalidPermutation { order: self.n });
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Level-synchronous BFS from `src`, expanding at most `limit` levels.
    /// On return `scratch.frontier` holds the last non-empty level.
    pub(crate) fn sweep(&self, src: usize, limit: u32, s: &mut Scratch) -> Sweep {
        s.reset(self.words);
        s.visited[src / 64] |= 1 << (src % 64);
        s.frontier[src / 64] |= 1 << (src % 64);
        let mut reached = 1;
        let mut depth = 0;
        while reached < self.n && depth < limit {
            s.next.iter_mut().for_each(|w| *w = 0);
            for u in bits(&s.frontier) {
                for (acc, &w) in s.next.iter_mut().zip(self.row(u)) {
                    *acc |= w;
                }
            }
            let mut added = 0;
            for (acc, vis) in s.next.iter_mut().zip(s.visited.iter_mut()) {
                *acc &= !*vis;
                *vis |= *acc;
                added += acc.count_ones() as usize;
            }
            if added == 0 {
                break;
            }
            reached += added;
            depth += 1;
            std::mem::swap(&mut s.frontier, &mut s.next);
        }
        Sweep { depth, reached }
    }

    /// Hop distances from `v`; unreachable vertices get [`INFINITE`].
    pub fn bfs_distances(&self, v: usize) -> Result<Vec<u32>, GraphError> {
        self.check_vertex(v)?;
        let mut dist = vec![INFINITE; self.n];
        dist[v] = 0;
        let mut frontier = vec![v];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for w in self.neighbors(u) {
                    if dist[w] == INFINITE {
                        dist[w] = d;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        Ok(dist)
    }

    /// Eccentricity of `v`, or [`INFINITE`] when the graph is disconnected.
    pub fn eccentricity(&self, v: usize) -> Result<u32, GraphError> {
        self.check_vertex(v)?;
        let mut s = Scratch::new(self);
        Ok(self.sweep(v, INFINITE, &mut s).eccentricity(self.n))
    }

    /// True when every vertex lies within `limit` hops of `v`.
    pub(crate) fn reaches_all_within(&self, v: usize, limit: u32, s: &mut Scratch) -> bool {
        self.sweep(v, limit, s).reached == self.n
    }

    pub fn eccentricity_profile(&self) -> EccentricityProfile {
        let mut s = Scratch::new(self);
        let mut ecc = Vec::with_capacity(self.n);
        let mut eccentric = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let sweep = self.sweep(v, INFINITE, &mut s);
            let e = sweep.eccentricity(self.n);
            ecc.push(e);
            eccentric.push(if e == INFINITE { Vec::new() } else { bits(&s.frontier).collect() });
        }
        let radius = ecc.iter().copied().min().unwrap_or(INFINITE);
        let diameter = ecc.iter().copied().max().unwrap_or(INFINITE);
        let center = (0..self.n).filter(|&v| ecc[v] == radius).collect();
        EccentricityProfile { ecc, radius, diameter, center, eccentric }
    }

    /// `{ x : d(v, x) = e(v) }`.
    pub fn eccentric_vertices(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(v)?;
        let mut s = Scratch::new(self);
        if self.sweep(v, INFINITE, &mut s).reached != self.n {
            return Err(GraphError::Disconnected);
        }
        Ok(bits(&s.frontier).collect())
    }

    pub fn radius(&self) -> u32 {
        self.eccentricity_profile().radius
    }

    pub fn diameter(&self) -> u32 {
        self.eccentricity_profile().diameter
    }

    pub fn is_self_centered(&self) -> Result<bool, GraphError> {
        let p = self.eccentricity_profile();
        if !p.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(p.radius == p.diameter)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

pub(crate) struct Sweep {
    pub depth: u32,
    pub reached: usize,
}

impl Sweep {
    fn eccentricity(&self, n: usize) -> u32 {
        if self.reached == n {
            self.depth
        } else {
            INFINITE
        }
    }
}

/// Reusable BFS buffers.
pub(crate) struct Scratch {
    visited: Vec<u64>,
    frontier: Vec<u64>,
    next: Vec<u64>,
}

impl Scratch {
    pub fn new(g: &Graph) -> Self {
        Scratch { visited: vec![0; g.words], frontier: vec![0; g.words], next: vec![0; g.words] }
    }

    fn reset(&mut self, words: usize) {
        for buf in [&mut self.visited, &mut self.frontier, &mut self.next] {
            buf.clear();
            buf.resize(words, 0);
        }
    }
}

/// Per-vertex eccentricities with radius, diameter, center and eccentric sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccentricityProfile {
    /// [`INFINITE`] for every vertex of a disconnected graph.
    pub ecc: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<usize>,
    #[serde(skip)]
    eccentric: Vec<Vec<usize>>,
}

impl EccentricityProfile {
    pub fn is_connected(&self) -> bool {
        self.diameter != INFINITE
    }

    pub fn is_central(&self, v: usize) -> bool {
        self.ecc[v] == self.radius
    }

    pub fn is_self_centered(&self) -> bool {
        self.radius == self.diameter
    }

    /// Eccentric vertices of `v`; empty for disconnected graphs.
    pub fn eccentric_vertices(&self, v: usize) -> &[usize] {
        &self.eccentric[v]
    }
}
