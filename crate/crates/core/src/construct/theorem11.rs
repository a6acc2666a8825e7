use super::PartLayout;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::metric::eccentricity_profile;

/// Three copies `H_c, H_a, H_p` of `h`: `H_c` joined to `H_a`, and `H_a`
/// matched to `H_p` along the identity isomorphism. All three metric
/// subgraphs of the result are isomorphic to `h`.
///
/// Requires `h` non-null and either disconnected or of radius at least 4.
pub fn build_theorem11(h: &Graph) -> Result<(Graph, PartLayout)> {
    let k = h.order();
    if k == 0 {
        return Err(Error::NullGraph);
    }
    if h.is_connected() {
        let rad = eccentricity_profile(h)?.rad;
        if rad < 4 {
            return Err(Error::Precondition(format!(
                "seed graph is connected with radius {rad}; need a disconnected seed or radius at least 4"
            )));
        }
    }
    if 3 * k > MAX_ORDER {
        return Err(Error::OrderTooLarge(3 * k));
    }
    let (mut g, _) = Graph::disjoint_union(&[h.clone(), h.clone(), h.clone()])?;
    g.link_sets(VertexSet::range(0, k), VertexSet::range(k, 2 * k));
    for x in 0..k {
        g.link(k + x, 2 * k + x);
    }
    Ok((g, PartLayout::blocks(k, k, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::metric::{eccentricity_profile, metric_subgraphs};

    #[test]
    fn path_seed() {
        let p8 = Graph::path(8).unwrap();
        let (g, layout) = build_theorem11(&p8).unwrap();
        assert_eq!(g.order(), 24);
        let prof = eccentricity_profile(&g).unwrap();
        assert_eq!((prof.rad, prof.diam), (2, 4));
        let (c, a, p) = metric_subgraphs(&g).unwrap();
        for s in [&c, &a, &p] {
            assert!(are_isomorphic(s, &p8));
        }
        assert_eq!(layout.periphery, 16..24);
    }

    #[test]
    fn disconnected_seed() {
        let c3 = Graph::cycle(3).unwrap();
        let (h, _) = Graph::disjoint_union(&[c3.clone(), c3]).unwrap();
        let (g, _) = build_theorem11(&h).unwrap();
        assert_eq!(g.order(), 18);
        let (c, a, p) = metric_subgraphs(&g).unwrap();
        for s in [&c, &a, &p] {
            assert!(are_isomorphic(s, &h));
        }
    }

    #[test]
    fn rejects_small_radius() {
        assert!(build_theorem11(&Graph::cycle(5).unwrap()).is_err());
        assert!(build_theorem11(&Graph::path(7).unwrap()).is_err());
        assert!(build_theorem11(&Graph::null()).is_err());
        assert!(build_theorem11(&Graph::path(21).unwrap()).is_err());
    }
}
