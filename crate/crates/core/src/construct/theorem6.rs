use super::{gallery_graph, GalleryId, PartLayout};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// Graph of order `n >= 13` whose metric subgraphs are the paths
/// `P_{n-12}`, `P_4` and `P_8`.
///
/// Order 13 is the gallery base graph (center `u = 0`, annulus path `1..=4`,
/// periphery path `5..=12`). Larger orders replace `u` by a path joined
/// completely to the annulus path.
pub fn build_theorem6(n: usize) -> Result<(Graph, PartLayout)> {
    if n < 13 {
        return Err(Error::Precondition(format!(
            "a graph whose metric subgraphs are all paths has order at least 13, got {n}"
        )));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let base = gallery_graph(GalleryId::G1Order13)?;
    if n == 13 {
        return Ok((base, PartLayout::blocks(1, 4, 8)));
    }
    let c = n - 12;
    let rest = base.induced_subgraph(VertexSet::range(1, 13))?;
    let (mut g, _) = Graph::disjoint_union(&[Graph::path(c)?, rest])?;
    g.link_sets(VertexSet::range(0, c), VertexSet::range(c, c + 4));
    Ok((g, PartLayout::blocks(c, 4, 8)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{eccentricity_profile, metric_subgraphs};

    #[test]
    fn base_graph() {
        let (g, layout) = build_theorem6(13).unwrap();
        assert_eq!((g.order(), g.size()), (13, 22));
        let prof = eccentricity_profile(&g).unwrap();
        assert_eq!((prof.rad, prof.diam), (2, 4));
        assert_eq!(layout.annulus, 1..5);
    }

    #[test]
    fn fourteen() {
        let (g, _) = build_theorem6(14).unwrap();
        assert_eq!(g.size(), 27);
        let (c, a, p) = metric_subgraphs(&g).unwrap();
        assert_eq!(c, Graph::path(2).unwrap());
        assert_eq!(a, Graph::path(4).unwrap());
        assert_eq!(p, Graph::path(8).unwrap());
    }

    #[test]
    fn too_small() {
        assert!(build_theorem6(12).is_err());
        assert!(build_theorem6(63).is_err());
    }
}
