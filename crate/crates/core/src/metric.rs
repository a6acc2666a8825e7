//! Eccentricities and the center / annulus / periphery decomposition.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub rad: u32,
    pub diam: u32,
}

/// Center, annulus and periphery of a connected graph.
///
/// When `rad == diam` the graph is self-centered: `center` and `periphery`
/// are both the whole vertex set and `annulus` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricPartition {
    pub center: VertexSet,
    pub annulus: VertexSet,
    pub periphery: VertexSet,
    pub self_centered: bool,
}

/// Structural flags used to name metric subgraphs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassTags {
    pub is_null: bool,
    pub is_connected: bool,
    pub is_path: bool,
    pub is_cycle: bool,
    pub is_complete: bool,
    pub regular_degree: Option<usize>,
}

impl ClassTags {
    /// Short label: null, path, cycle, complete, regular, connected or disconnected.
    pub fn label(&self) -> &'static str {
        if self.is_null {
            "null"
        } else if !self.is_connected {
            "disconnected"
        } else if self.is_path {
            "path"
        } else if self.is_cycle {
            "cycle"
        } else if self.is_complete {
            "complete"
        } else if self.regular_degree.is_some() {
            "regular"
        } else {
            "connected"
        }
    }
}

/// Eccentricity of `v`, or `None` if some vertex is unreachable.
pub fn eccentricity(g: &Graph, v: usize) -> Option<u32> {
    let n = g.order();
    let all = VertexSet::full(n).bits();
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    let mut depth = 0;
    while seen != all {
        let mut next = 0;
        for u in BitIter(frontier) {
            next |= g.row(u);
        }
        frontier = next & !seen;
        if frontier == 0 {
            return None;
        }
        seen |= frontier;
        depth += 1;
    }
    Some(depth)
}

pub fn eccentricity_profile(g: &Graph) -> Result<EccentricityProfile> {
    if g.is_null() {
        return Err(Error::NullGraph);
    }
    let ecc = (0..g.order())
        .map(|v| eccentricity(g, v).ok_or(Error::Disconnected))
        .collect::<Result<Vec<_>>>()?;
    let rad = *ecc.iter().min().unwrap_or(&0);
    let diam = *ecc.iter().max().unwrap_or(&0);
    Ok(EccentricityProfile { ecc, rad, diam })
}

impl MetricPartition {
    pub fn from_profile(p: &EccentricityProfile) -> Self {
        let mut center = VertexSet::EMPTY;
        let mut annulus = VertexSet::EMPTY;
        let mut periphery = VertexSet::EMPTY;
        for (v, &e) in p.ecc.iter().enumerate() {
            if e == p.rad {
                center.insert(v);
            }
            if e == p.diam {
                periphery.insert(v);
            }
            if p.rad < e && e < p.diam {
                annulus.insert(v);
            }
        }
        MetricPartition {
            center,
            annulus,
            periphery,
            self_centered: p.rad == p.diam,
        }
    }

    pub fn sizes(&self) -> (usize, usize, usize) {
        (self.center.len(), self.annulus.len(), self.periphery.len())
    }
}

pub fn metric_partition(g: &Graph) -> Result<MetricPartition> {
    Ok(MetricPartition::from_profile(&eccentricity_profile(g)?))
}

/// Central, annular and peripheral subgraphs, in that order.
pub fn metric_subgraphs(g: &Graph) -> Result<(Graph, Graph, Graph)> {
    let p = metric_partition(g)?;
    subgraphs_of(g, &p)
}

pub(crate) fn subgraphs_of(g: &Graph, p: &MetricPartition) -> Result<(Graph, Graph, Graph)> {
    Ok((
        g.induced_subgraph(p.center)?,
        g.induced_subgraph(p.annulus)?,
        g.induced_subgraph(p.periphery)?,
    ))
}

pub fn classify(g: &Graph) -> ClassTags {
    let n = g.order();
    if n == 0 {
        return ClassTags {
            is_null: true,
            ..ClassTags::default()
        };
    }
    let is_connected = g.is_connected();
    let regular_degree = g.regular_degree();
    let size = g.size();
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    ClassTags {
        is_null: false,
        is_connected,
        is_path: is_connected && size + 1 == n && max_deg <= 2,
        is_cycle: is_connected && n >= 3 && regular_degree == Some(2),
        is_complete: size == n * (n - 1) / 2,
        regular_degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_profile() {
        let p5 = Graph::path(5).unwrap();
        let prof = eccentricity_profile(&p5).unwrap();
        assert_eq!(prof.ecc, vec![4, 3, 2, 3, 4]);
        assert_eq!((prof.rad, prof.diam), (2, 4));
        let part = metric_partition(&p5).unwrap();
        assert_eq!(part.center.to_vec(), vec![2]);
        assert_eq!(part.annulus.to_vec(), vec![1, 3]);
        assert_eq!(part.periphery.to_vec(), vec![0, 4]);
        assert!(!part.self_centered);
    }

    #[test]
    fn complete_profile() {
        for n in 2..8 {
            let prof = eccentricity_profile(&Graph::complete(n).unwrap()).unwrap();
            assert!(prof.ecc.iter().all(|&e| e == 1));
        }
        let prof = eccentricity_profile(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!(prof.ecc, vec![0]);
    }

    #[test]
    fn self_centered_cycle() {
        let c6 = Graph::cycle(6).unwrap();
        let part = metric_partition(&c6).unwrap();
        assert!(part.self_centered);
        assert!(part.annulus.is_empty());
        assert_eq!(part.center, c6.vertices());
        assert_eq!(part.periphery, c6.vertices());
        let (c, a, p) = metric_subgraphs(&c6).unwrap();
        assert_eq!(c, c6);
        assert!(a.is_null());
        assert_eq!(p, c6);
    }

    #[test]
    fn rejects_disconnected_and_null() {
        let g = Graph::empty(2).unwrap();
        assert_eq!(eccentricity_profile(&g), Err(Error::Disconnected));
        assert_eq!(metric_partition(&Graph::null()), Err(Error::NullGraph));
    }

    #[test]
    fn classify_examples() {
        let t = classify(&Graph::path(1).unwrap());
        assert!(t.is_path && t.is_connected && t.is_complete);
        let t = classify(&Graph::cycle(8).unwrap());
        assert!(t.is_cycle && !t.is_path);
        assert_eq!(t.regular_degree, Some(2));
        assert_eq!(t.label(), "cycle");
        let t = classify(&Graph::null());
        assert_eq!(
            t,
            ClassTags {
                is_null: true,
                ..Default::default()
            }
        );
        assert_eq!(classify(&Graph::empty(2).unwrap()).label(), "disconnected");
        assert_eq!(classify(&Graph::complete(4).unwrap()).label(), "complete");
    }
}
