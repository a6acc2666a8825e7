//! Finite simple graphs on at most [`MAX_ORDER`] vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so neighborhoods,
//! BFS frontiers and vertex subsets are all single machine words.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order (short-form graph6 limit).
pub const MAX_ORDER: usize = 62;

/// A set of vertex IDs of some host graph, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn range(start: usize, end: usize) -> Self {
        VertexSet(low_mask(end) & !low_mask(start))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Members in increasing order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for BitIter {}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The standard graphs used as building blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Path,
    Cycle,
    Complete,
    Empty,
}

/// A finite simple undirected graph with vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// The null graph (order 0).
    pub fn null() -> Self {
        Graph {
            n: 0,
            rows: Vec::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - (row & !mask).leading_zeros() as usize,
                    order: n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in BitIter(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub fn standard(kind: StandardKind, n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        match kind {
            StandardKind::Empty => {}
            StandardKind::Complete => {
                for v in 0..n {
                    g.rows[v] = low_mask(n) & !(1 << v);
                }
            }
            StandardKind::Path => {
                for v in 1..n {
                    g.link(v - 1, v);
                }
            }
            StandardKind::Cycle => {
                if n < 3 {
                    return Err(Error::Precondition(format!(
                        "cycle needs at least 3 vertices, got {n}"
                    )));
                }
                for v in 1..n {
                    g.link(v - 1, v);
                }
                g.link(n - 1, 0);
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::standard(StandardKind::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Graph::standard(StandardKind::Cycle, n)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::standard(StandardKind::Complete, n)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::standard(StandardKind::Empty, n)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in BitIter(self.rows[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.link(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
        Ok(())
    }

    #[inline]
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    /// Adds every edge between `a` and `b` (which must be disjoint).
    pub(crate) fn link_sets(&mut self, a: VertexSet, b: VertexSet) {
        for u in a.iter() {
            self.rows[u] |= b.bits();
        }
        for v in b.iter() {
            self.rows[v] |= a.bits();
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).iter().next() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            }),
            None => Ok(()),
        }
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let rows = (0..self.n)
            .map(|v| !self.rows[v] & mask & !(1 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Disjoint union; block `i` occupies `offsets[i]..offsets[i] + gs[i].order()`.
    pub fn disjoint_union(gs: &[Graph]) -> Result<(Graph, Vec<usize>)> {
        let total: usize = gs.iter().map(Graph::order).sum();
        let mut g = Graph::new(total)?;
        let mut offsets = Vec::with_capacity(gs.len());
        let mut off = 0;
        for h in gs {
            offsets.push(off);
            for v in 0..h.n {
                g.rows[off + v] = h.rows[v] << off;
            }
            off += h.n;
        }
        Ok((g, offsets))
    }

    /// `g ∨ h`: vertices of `g` first, then `h`, with all cross edges.
    pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
        let (mut out, _) = Graph::disjoint_union(&[g.clone(), h.clone()])?;
        out.link_sets(
            VertexSet::range(0, g.n),
            VertexSet::range(g.n, g.n + h.n),
        );
        Ok(out)
    }

    /// Induced subgraph on `s`, relabeled densely in increasing vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let members = s.to_vec();
        let mut rows = vec![0u64; members.len()];
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                if self.rows[u] >> v & 1 == 1 {
                    rows[i] |= 1 << j;
                }
            }
        }
        Ok(Graph {
            n: members.len(),
            rows,
        })
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::Precondition("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in BitIter(self.rows[u]) {
                rows[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Graph { n: self.n, rows })
    }

    /// BFS distances from `v`; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Result<Vec<Option<u32>>> {
        self.check_vertex(v)?;
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in BitIter(self.rows[u]) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Vertices reachable from `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in BitIter(frontier) {
                next |= self.rows[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        VertexSet(seen)
    }

    /// Connected components ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.iter().next() {
            let c = self.component_of(v);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// The null graph counts as disconnected here.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_of(0).len() == self.n
    }

    /// Regular degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Minimum number of vertices whose deletion disconnects the graph or
    /// leaves `K_1`. `K_n` reports `n - 1`; disconnected graphs report 0.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n;
        if n <= 1 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        let mut best = n - 1;
        // Every minimum separator misses some vertex among any best + 1
        // vertices, so trying those as sources covers all cuts.
        for s in 0..n {
            if s > best {
                break;
            }
            for t in (s + 1)..n {
                if self.has_edge(s, t) {
                    continue;
                }
                best = best.min(self.local_connectivity(s, t, best));
            }
        }
        best
    }

    /// Number of internally vertex-disjoint s-t paths (s, t non-adjacent),
    /// capped at `limit`. Unit-capacity max flow on the split graph.
    fn local_connectivity(&self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.n;
        // node 2v = v_in, 2v+1 = v_out; arc v_in -> v_out capacity 1 except s, t.
        let nodes = 2 * n;
        let mut cap = vec![vec![0u8; nodes]; nodes];
        for v in 0..n {
            cap[2 * v][2 * v + 1] = if v == s || v == t { u8::MAX } else { 1 };
            for u in BitIter(self.rows[v]) {
                cap[2 * v + 1][2 * u] = 1;
            }
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        let mut parent = vec![usize::MAX; nodes];
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for y in 0..nodes {
                    if cap[x][y] > 0 && parent[y] == usize::MAX {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let x = parent[y];
                cap[x][y] -= 1;
                cap[y][x] = cap[y][x].saturating_add(1);
                y = x;
            }
            flow += 1;
        }
        flow
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_graphs() {
        let p1 = Graph::path(1).unwrap();
        assert_eq!((p1.order(), p1.size()), (1, 0));
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3).unwrap());
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.size(), 6);
        assert_eq!(k4.regular_degree(), Some(3));
        assert!(Graph::cycle(2).is_err());
        assert_eq!(Graph::empty(0).unwrap(), Graph::null());
        assert!(Graph::new(63).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).unwrap().complement(), Graph::empty(4).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.complement().regular_degree(), Some(2));
        assert!(c5.complement().is_connected());
        let p4c = Graph::path(4).unwrap().complement();
        // complement of 0-1-2-3 is the path 1-3-0-2
        assert_eq!(p4c.edges(), vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn union_and_join() {
        let k2 = Graph::complete(2).unwrap();
        let (g, offsets) = Graph::disjoint_union(&[k2.clone(), k2.clone(), k2]).unwrap();
        assert_eq!((g.order(), g.size()), (6, 3));
        assert_eq!(offsets, vec![0, 2, 4]);
        let k1 = Graph::complete(1).unwrap();
        let (g, _) = Graph::disjoint_union(&[k1.clone(), k1.clone()]).unwrap();
        assert_eq!(g, Graph::empty(2).unwrap());
        let c3 = Graph::cycle(3).unwrap();
        let (g, _) = Graph::disjoint_union(&[c3.clone(), c3]).unwrap();
        assert_eq!((g.order(), g.size(), g.components().len()), (6, 6, 2));

        assert_eq!(Graph::join(&k1, &k1).unwrap(), Graph::complete(2).unwrap());
        let k23 = Graph::join(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k23.size(), 6);
        assert_eq!(k23.degrees(), vec![3, 3, 2, 2, 2]);
        let wheel = Graph::join(&k1, &Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(wheel.size(), 8);
    }

    #[test]
    fn induced() {
        let c5 = Graph::cycle(5).unwrap();
        let s = VertexSet::from_iter([0, 1, 2]);
        assert_eq!(c5.induced_subgraph(s).unwrap(), Graph::path(3).unwrap());
        assert_eq!(c5.induced_subgraph(VertexSet::EMPTY).unwrap(), Graph::null());
        let k5 = Graph::complete(5).unwrap();
        let s = VertexSet::from_iter([0, 2, 4]);
        assert_eq!(k5.induced_subgraph(s).unwrap(), Graph::complete(3).unwrap());
        assert!(c5.induced_subgraph(VertexSet::from_iter([7])).is_err());
    }

    #[test]
    fn distances() {
        let p5 = Graph::path(5).unwrap();
        let d: Vec<_> = p5.distances_from(0).unwrap();
        assert_eq!(d, (0..5).map(Some).collect::<Vec<_>>());
        let c3 = Graph::cycle(3).unwrap();
        let (g, _) = Graph::disjoint_union(&[c3.clone(), c3]).unwrap();
        assert_eq!(g.distances_from(0).unwrap()[4], None);
        let mut d: Vec<u32> = Graph::cycle(6)
            .unwrap()
            .distances_from(2)
            .unwrap()
            .into_iter()
            .map(Option::unwrap)
            .collect();
        d.sort();
        assert_eq!(d, vec![0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(Graph::complete(4).unwrap().vertex_connectivity(), 3);
        assert_eq!(Graph::cycle(5).unwrap().vertex_connectivity(), 2);
        assert_eq!(Graph::path(4).unwrap().vertex_connectivity(), 1);
        assert_eq!(Graph::complete(1).unwrap().vertex_connectivity(), 0);
        let k33 = Graph::join(&Graph::empty(3).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k33.vertex_connectivity(), 3);
        let (two_k3, _) =
            Graph::disjoint_union(&[Graph::cycle(3).unwrap(), Graph::cycle(3).unwrap()]).unwrap();
        assert_eq!(two_k3.vertex_connectivity(), 0);
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }
}
