//! Graph families whose metric subgraphs have prescribed shapes.
//!
//! Every builder lays vertices out in blocks: center first, then annulus,
//! then periphery, and reports the block ranges in a [`PartLayout`].

mod gallery;
mod theorem11;
mod theorem6;
mod theorem9;

use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use gallery::{gallery_graph, GalleryId, GALLERY_G6};
pub use theorem11::build_theorem11;
pub use theorem6::build_theorem6;
pub use theorem9::{build_theorem9, theorem9_block_orders, theorem9_case, theorem9_min_order, Parity, Theorem9Case};

/// Which family to build, with exactly that family's parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum ConstructionSpec {
    Theorem6 { n: usize },
    Theorem9 { k: usize, n: usize },
    Theorem11 { h: Graph },
    CircularJoin { parts: Vec<Graph> },
    NiceConnection { g: Graph, h: Graph, labeling: Option<NiceLabeling> },
    CompleteMinus { mode: CompleteMinusMode, m: usize },
    Circulant { n: usize, k: usize },
    Gallery { id: GalleryId },
}

impl ConstructionSpec {
    /// `floor(k / 3)` for families parameterized by a degree.
    pub fn q(&self) -> Option<usize> {
        match self {
            ConstructionSpec::Theorem9 { k, .. } | ConstructionSpec::Circulant { k, .. } => {
                Some(k / 3)
            }
            _ => None,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            ConstructionSpec::Theorem6 { .. } => "theorem6",
            ConstructionSpec::Theorem9 { .. } => "theorem9",
            ConstructionSpec::Theorem11 { .. } => "theorem11",
            ConstructionSpec::CircularJoin { .. } => "circular_join",
            ConstructionSpec::NiceConnection { .. } => "nice_connection",
            ConstructionSpec::CompleteMinus { .. } => "complete_minus",
            ConstructionSpec::Circulant { .. } => "circulant",
            ConstructionSpec::Gallery { .. } => "gallery",
        }
    }

    /// Builds the graph; the layout is present for the three-block families.
    pub fn build(&self) -> Result<(Graph, Option<PartLayout>)> {
        Ok(match self {
            ConstructionSpec::Theorem6 { n } => {
                let (g, l) = build_theorem6(*n)?;
                (g, Some(l))
            }
            ConstructionSpec::Theorem9 { k, n } => {
                let (g, l) = build_theorem9(*k, *n)?;
                (g, Some(l))
            }
            ConstructionSpec::Theorem11 { h } => {
                let (g, l) = build_theorem11(h)?;
                (g, Some(l))
            }
            ConstructionSpec::CircularJoin { parts } => (circular_join(parts)?, None),
            ConstructionSpec::NiceConnection { g, h, labeling } => {
                (nice_connection(g, h, labeling.as_ref())?, None)
            }
            ConstructionSpec::CompleteMinus { mode, m } => (complete_minus(*mode, *m)?, None),
            ConstructionSpec::Circulant { n, k } => (circulant_regular(*n, *k)?, None),
            ConstructionSpec::Gallery { id } => {
                let g = gallery_graph(*id)?;
                let layout = id.layout();
                (g, Some(layout))
            }
        })
    }
}

/// Block structure of a built graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartLayout {
    pub center: Range<usize>,
    pub annulus: Range<usize>,
    pub periphery: Range<usize>,
    /// Annulus cells `V_1..V_8` when the family partitions its annulus;
    /// empty for families attached by an explicit list.
    pub annulus_cells: Vec<Vec<usize>>,
    /// Periphery parts `H_1..H_8` (one part for families without a circular join).
    pub periphery_parts: Vec<Range<usize>>,
}

impl PartLayout {
    pub(crate) fn blocks(c: usize, a: usize, p: usize) -> Self {
        PartLayout {
            center: 0..c,
            annulus: c..c + a,
            periphery: c + a..c + a + p,
            annulus_cells: Vec::new(),
            periphery_parts: vec![c + a..c + a + p],
        }
    }

    pub fn center_set(&self) -> VertexSet {
        VertexSet::range(self.center.start, self.center.end)
    }

    pub fn annulus_set(&self) -> VertexSet {
        VertexSet::range(self.annulus.start, self.annulus.end)
    }

    pub fn periphery_set(&self) -> VertexSet {
        VertexSet::range(self.periphery.start, self.periphery.end)
    }

    pub fn order(&self) -> usize {
        self.periphery.end
    }
}

/// Circular join of at least three parts: consecutive parts (cyclically) are
/// completely linked. Part `i` occupies a consecutive block in input order.
pub fn circular_join(parts: &[Graph]) -> Result<Graph> {
    if parts.len() < 3 {
        return Err(Error::Precondition(format!(
            "circular join needs at least 3 parts, got {}",
            parts.len()
        )));
    }
    let (mut g, offsets) = Graph::disjoint_union(parts)?;
    let block = |i: usize| VertexSet::range(offsets[i], offsets[i] + parts[i].order());
    for i in 0..parts.len() {
        let j = (i + 1) % parts.len();
        g.link_sets(block(i), block(j));
    }
    Ok(g)
}

/// Vertex orderings `x_1..x_s` of the smaller graph and `y_1..y_t` of the larger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceLabeling {
    pub small: Vec<usize>,
    pub large: Vec<usize>,
}

/// Edges `x_i y_i` for `i <= s` and `x_1 y_j` for `j > s`.
pub(crate) fn nice_edges(small: &[usize], large: &[usize]) -> Vec<(usize, usize)> {
    large
        .iter()
        .enumerate()
        .map(|(j, &y)| (small[if j < small.len() { j } else { 0 }], y))
        .collect()
}

fn check_ordering(order: &[usize], n: usize, what: &str) -> Result<()> {
    let set: VertexSet = order.iter().copied().filter(|&v| v < n).collect();
    if order.len() != n || set.len() != n {
        return Err(Error::Precondition(format!(
            "{what} labeling is not a bijection onto 0..{n}"
        )));
    }
    Ok(())
}

/// Nice connection of `g` and `h` (`1 <= |g| <= |h|`). Vertices of `g` come
/// first. Without a labeling, `x_i` is vertex `i` of `g` and `y_j` vertex `j` of `h`.
pub fn nice_connection(g: &Graph, h: &Graph, labeling: Option<&NiceLabeling>) -> Result<Graph> {
    let (s, t) = (g.order(), h.order());
    if s == 0 || s > t {
        return Err(Error::Precondition(format!(
            "nice connection needs 1 <= |G| <= |H|, got |G| = {s}, |H| = {t}"
        )));
    }
    let (small, large): (Vec<usize>, Vec<usize>) = match labeling {
        Some(l) => {
            check_ordering(&l.small, s, "small-side")?;
            check_ordering(&l.large, t, "large-side")?;
            (l.small.clone(), l.large.iter().map(|&v| v + s).collect())
        }
        None => ((0..s).collect(), (s..s + t).collect()),
    };
    let (mut out, _) = Graph::disjoint_union(&[g.clone(), h.clone()])?;
    for (x, y) in nice_edges(&small, &large) {
        out.link(x, y);
    }
    Ok(out)
}

/// Which spanning structure is removed from `K_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CompleteMinusMode {
    /// Perfect matching `(0,1), (2,3), ...`.
    PerfectMatching,
    /// Hamiltonian cycle `0, 1, ..., m-1`.
    HamiltonianCycle,
    /// Hamiltonian path `0, 1, ..., m-1`.
    HamiltonianPath,
}

pub fn complete_minus(mode: CompleteMinusMode, m: usize) -> Result<Graph> {
    let removed = match mode {
        CompleteMinusMode::PerfectMatching => {
            if m < 2 || m % 2 == 1 {
                return Err(Error::Precondition(format!(
                    "K_m - PM needs even m >= 2, got {m}"
                )));
            }
            let k2 = Graph::complete(2)?;
            Graph::disjoint_union(&vec![k2; m / 2])?.0
        }
        CompleteMinusMode::HamiltonianCycle => {
            if m < 3 {
                return Err(Error::Precondition(format!("K_m - HC needs m >= 3, got {m}")));
            }
            Graph::cycle(m)?
        }
        CompleteMinusMode::HamiltonianPath => {
            if m < 2 {
                return Err(Error::Precondition(format!("K_m - HP needs m >= 2, got {m}")));
            }
            Graph::path(m)?
        }
    };
    Ok(removed.complement())
}

/// `k`-regular circulant on `Z_n` with offsets `1..=k/2`, plus `n/2` when `k`
/// is odd. Offset 1 makes `0, 1, ..., n-1` a hamiltonian cycle when `k >= 2`.
pub fn circulant_regular(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || k + 1 > n {
        return Err(Error::Precondition(format!(
            "circulant needs 1 <= k <= n - 1, got n = {n}, k = {k}"
        )));
    }
    if k * n % 2 == 1 {
        return Err(Error::Precondition(format!(
            "no {k}-regular graph of order {n}: k*n is odd"
        )));
    }
    let mut g = Graph::new(n)?;
    let mut offsets: Vec<usize> = (1..=k / 2).collect();
    if k % 2 == 1 {
        offsets.push(n / 2);
    }
    for v in 0..n {
        for &d in &offsets {
            g.link(v, (v + d) % n);
        }
    }
    Ok(g)
}
