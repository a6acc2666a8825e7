//! Graphs whose three metric subgraphs are connected and `k`-regular.
//!
//! The construction depends on `k mod 3` and the parity of `q = floor(k/3)`.
//! In each case the center is a `k`-regular circulant, the periphery a
//! circular join of eight parts `H_1..H_8`, and the annulus a complete graph
//! minus a perfect matching or a hamiltonian cycle, split into eight cells
//! `V_1..V_8`. Cell `V_i` is nicely connected to `H_i` and the center is
//! joined to the whole annulus. Annulus vertices are numbered `u_1..u_m` in
//! vertex order, which is how the cell lists below are written.

use serde::Serialize;

use super::{circulant_regular, circular_join, complete_minus, nice_edges, CompleteMinusMode, PartLayout};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem9Case {
    /// `k ≡ 0 (mod 3)`, `q` even.
    One,
    /// `k ≡ 0 (mod 3)`, `q` odd.
    Two,
    /// `k ≡ 1 (mod 3)`, `q` even.
    Three,
    /// `k ≡ 1 (mod 3)`, `q` odd.
    Four,
    /// `k ≡ 2 (mod 3)`, `q` even.
    Five,
    /// `k ≡ 2 (mod 3)`, `q` odd.
    Six,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Any,
    Even,
}

impl Theorem9Case {
    pub fn number(self) -> usize {
        self as usize + 1
    }

    /// `|A| + |P|`, so the center has order `n - offset`.
    fn offset(self, q: usize) -> usize {
        11 * q
            + match self {
                Theorem9Case::One => 5,
                Theorem9Case::Two => 7,
                Theorem9Case::Three => 10,
                Theorem9Case::Four => 9,
                Theorem9Case::Five => 12,
                Theorem9Case::Six => 13,
            }
    }
}

pub fn theorem9_case(k: usize) -> Result<(Theorem9Case, usize)> {
    if k < 2 {
        return Err(Error::Precondition(format!("degree k must be at least 2, got {k}")));
    }
    let q = k / 3;
    let case = match (k % 3, q % 2) {
        (0, 0) => Theorem9Case::One,
        (0, _) => Theorem9Case::Two,
        (1, 0) => Theorem9Case::Three,
        (1, _) => Theorem9Case::Four,
        (_, 0) => Theorem9Case::Five,
        _ => Theorem9Case::Six,
    };
    Ok((case, q))
}

/// Smallest admissible order and the parity constraint on admissible orders.
pub fn theorem9_min_order(k: usize) -> Result<(usize, Parity)> {
    let (case, q) = theorem9_case(k)?;
    Ok(match case {
        Theorem9Case::One => (14 * q + 6, Parity::Any),
        Theorem9Case::Two => (14 * q + 8, Parity::Even),
        Theorem9Case::Three => (14 * q + 12, Parity::Even),
        Theorem9Case::Four => (14 * q + 11, Parity::Any),
        Theorem9Case::Five => (14 * q + 15, Parity::Any),
        Theorem9Case::Six => (14 * q + 16, Parity::Even),
    })
}

fn complete_minus_pm(m: usize) -> Result<Graph> {
    complete_minus(CompleteMinusMode::PerfectMatching, m)
}

fn periphery_parts(case: Theorem9Case, q: usize) -> Result<Vec<Graph>> {
    let k = Graph::complete;
    Ok(match case {
        Theorem9Case::One => vec![
            k(q + 1)?,
            k(q)?,
            k(q)?,
            k(q + 1)?,
            k(q)?,
            k(q)?,
            k(q + 1)?,
            complete_minus_pm(q)?,
        ],
        Theorem9Case::Two => vec![
            k(q)?,
            k(q)?,
            complete_minus_pm(q + 1)?,
            complete_minus_pm(q + 1)?,
            k(q)?,
            k(q)?,
            complete_minus_pm(q + 1)?,
            complete_minus_pm(q + 1)?,
        ],
        Theorem9Case::Three => vec![
            k(q + 1)?,
            k(q + 1)?,
            complete_minus_pm(q)?,
            k(q + 2)?,
            k(q)?,
            k(q)?,
            k(q + 2)?,
            complete_minus_pm(q)?,
        ],
        Theorem9Case::Four => vec![
            k(q)?,
            k(q + 1)?,
            complete_minus_pm(q + 1)?,
            k(q + 1)?,
            k(q)?,
            k(q + 1)?,
            complete_minus_pm(q + 1)?,
            k(q + 1)?,
        ],
        Theorem9Case::Five | Theorem9Case::Six => vec![k(q + 1)?; 8],
    })
}

/// How the annulus is tied to the eight periphery parts.
enum Attachment {
    /// Cells `V_1..V_8` as 0-based annulus positions; `V_i` is nicely connected to `H_i`.
    Cells(Vec<Vec<usize>>),
    /// Explicit `(i, j)` pairs (1-based): `u_i` is joined to every vertex of `H_j`.
    Explicit(&'static [(usize, usize)]),
}

/// `K_m - PM` whose cells `V_1..V_8` are laid out consecutively with the
/// removed matching pairing `V_s` with `V_{s+4}` position by position.
fn paired_pm_annulus(sizes: [usize; 4]) -> Result<(Graph, Vec<Vec<usize>>)> {
    let m = 2 * sizes.iter().sum::<usize>();
    let mut cells: Vec<Vec<usize>> = Vec::with_capacity(8);
    let mut next = 0;
    for &s in sizes.iter().chain(&sizes) {
        cells.push((next..next + s).collect());
        next += s;
    }
    let mut a = Graph::complete(m)?;
    for s in 0..4 {
        for (&x, &y) in cells[s].iter().zip(&cells[s + 4]) {
            a.remove_edge(x, y)?;
        }
    }
    Ok((a, cells))
}

/// 1-based index runs `{start + 2j : j in js}` converted to 0-based positions.
fn run(start: usize, js: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    js.map(|j| start + 2 * j - 1).collect()
}

fn hc_cells(case: Theorem9Case, q: usize) -> Vec<Vec<usize>> {
    let (v2, v6, v3, v7, v4, v8) = match case {
        Theorem9Case::Two => (
            run(3, 0..=(q - 3) / 2),
            run(4, 0..=(q - 3) / 2),
            run(q, 1..=q.div_ceil(2)),
            run(q + 1, 1..=q.div_ceil(2)),
            run(2 * q + 1, 1..=q.div_ceil(2)),
            run(2 * q + 2, 1..=q.div_ceil(2)),
        ),
        Theorem9Case::Three => (
            run(3, 0..=(q - 2) / 2),
            run(4, 0..=(q - 2) / 2),
            run(q + 1, 1..=q / 2),
            run(q + 2, 1..=q / 2),
            run(2 * q + 1, 1..=(q + 2) / 2),
            run(2 * q + 2, 1..=(q + 2) / 2),
        ),
        Theorem9Case::Six => (
            run(3, 0..=(q - 1) / 2),
            run(4, 0..=(q - 1) / 2),
            run(q, 2..=(q + 3) / 2),
            run(q + 1, 2..=(q + 3) / 2),
            run(2 * q + 1, 2..=(q + 3) / 2),
            run(2 * q + 2, 2..=(q + 3) / 2),
        ),
        _ => unreachable!("only cases 2, 3 and 6 use K_m - HC cells"),
    };
    vec![vec![0], v2, v3, v4, vec![1], v6, v7, v8]
}

const SUBCASE_2_1: &[(usize, usize)] =
    &[(1, 1), (2, 2), (2, 3), (3, 6), (3, 7), (4, 8), (5, 4), (6, 5)];
const SUBCASE_4_1: &[(usize, usize)] =
    &[(1, 1), (2, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 8)];
const SUBCASE_5_1: &[(usize, usize)] =
    &[(1, 1), (2, 2), (2, 3), (2, 4), (3, 5), (4, 6), (4, 7), (4, 8)];

fn annulus(case: Theorem9Case, q: usize) -> Result<(Graph, Attachment)> {
    let hc = |m| complete_minus(CompleteMinusMode::HamiltonianCycle, m);
    Ok(match case {
        Theorem9Case::One => {
            let (a, cells) = paired_pm_annulus([1, q / 2, q / 2, q / 2])?;
            (a, Attachment::Cells(cells))
        }
        Theorem9Case::Two if q == 1 => (hc(6)?, Attachment::Explicit(SUBCASE_2_1)),
        Theorem9Case::Two => (hc(3 * q + 3)?, Attachment::Cells(hc_cells(case, q))),
        Theorem9Case::Three => (hc(3 * q + 4)?, Attachment::Cells(hc_cells(case, q))),
        Theorem9Case::Four if q == 1 => {
            // K_6 minus the matching u1u4, u2u5, u3u6
            let mut a = Graph::complete(6)?;
            for (x, y) in [(0, 3), (1, 4), (2, 5)] {
                a.remove_edge(x, y)?;
            }
            (a, Attachment::Explicit(SUBCASE_4_1))
        }
        Theorem9Case::Four => {
            let (a, cells) = paired_pm_annulus([1, (q - 1) / 2, q.div_ceil(2), q.div_ceil(2)])?;
            (a, Attachment::Cells(cells))
        }
        Theorem9Case::Five if q == 0 => (Graph::cycle(4)?, Attachment::Explicit(SUBCASE_5_1)),
        Theorem9Case::Five => {
            let (a, cells) = paired_pm_annulus([1, q / 2, q / 2, (q + 2) / 2])?;
            (a, Attachment::Cells(cells))
        }
        Theorem9Case::Six => (hc(3 * q + 5)?, Attachment::Cells(hc_cells(case, q))),
    })
}

/// Connected graph of order `n` whose metric subgraphs are all connected and
/// `k`-regular.
pub fn build_theorem9(k: usize, n: usize) -> Result<(Graph, PartLayout)> {
    let (case, q) = theorem9_case(k)?;
    let (n_min, parity) = theorem9_min_order(k)?;
    let odd = parity == Parity::Even && n % 2 == 1;
    if odd || n < n_min {
        let need = if parity == Parity::Even { "even and at least" } else { "at least" };
        return Err(Error::Precondition(format!(
            "case ({}) with k = {k}: order must be {need} {n_min}, got {n}",
            case.number()
        )));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let c = n - case.offset(q);
    let center = circulant_regular(c, k)?;
    let (ann, attachment) = annulus(case, q)?;
    let parts = periphery_parts(case, q)?;
    let periphery = circular_join(&parts)?;
    let a = ann.order();
    let (mut g, _) = Graph::disjoint_union(&[center, ann, periphery.clone()])?;
    debug_assert_eq!(g.order(), n);

    let mut part_ranges = Vec::with_capacity(8);
    let mut off = c + a;
    for h in &parts {
        part_ranges.push(off..off + h.order());
        off += h.order();
    }

    let annulus_cells = match attachment {
        Attachment::Cells(cells) => {
            for (cell, part) in cells.iter().zip(&part_ranges) {
                let small: Vec<usize> = cell.iter().map(|&x| c + x).collect();
                let large: Vec<usize> = part.clone().collect();
                for (x, y) in nice_edges(&small, &large) {
                    g.link(x, y);
                }
            }
            cells
                .into_iter()
                .map(|cell| cell.into_iter().map(|x| c + x).collect())
                .collect()
        }
        Attachment::Explicit(pairs) => {
            for &(i, j) in pairs {
                let part = &part_ranges[j - 1];
                g.link_sets(
                    VertexSet::from_iter([c + i - 1]),
                    VertexSet::range(part.start, part.end),
                );
            }
            Vec::new()
        }
    };
    g.link_sets(VertexSet::range(0, c), VertexSet::range(c, c + a));

    let layout = PartLayout {
        center: 0..c,
        annulus: c..c + a,
        periphery: c + a..n,
        annulus_cells,
        periphery_parts: part_ranges,
    };
    Ok((g, layout))
}

/// Orders `(|C|, |A|, |P|)` the construction produces.
pub fn theorem9_block_orders(k: usize, n: usize) -> Result<(usize, usize, usize)> {
    let (case, q) = theorem9_case(k)?;
    let a = match case {
        Theorem9Case::One => 3 * q + 2,
        Theorem9Case::Two | Theorem9Case::Four => 3 * q + 3,
        Theorem9Case::Three | Theorem9Case::Five => 3 * q + 4,
        Theorem9Case::Six => 3 * q + 5,
    };
    let off = case.offset(q);
    if n < off {
        return Err(Error::Precondition(format!("order {n} below the annulus/periphery size {off}")));
    }
    Ok((n - off, a, off - a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{eccentricity_profile, metric_subgraphs};

    #[test]
    fn min_order_table() {
        assert_eq!(theorem9_min_order(2).unwrap(), (15, Parity::Any));
        assert_eq!(theorem9_min_order(3).unwrap(), (22, Parity::Even));
        assert_eq!(theorem9_min_order(4).unwrap(), (25, Parity::Any));
        assert!(theorem9_min_order(1).is_err());
    }

    #[test]
    fn parity_even_iff_k_odd() {
        for k in 2..40 {
            let (_, parity) = theorem9_min_order(k).unwrap();
            assert_eq!(parity == Parity::Even, k % 2 == 1, "k = {k}");
        }
    }

    #[test]
    fn cycles_at_fifteen() {
        let (g, layout) = build_theorem9(2, 15).unwrap();
        let prof = eccentricity_profile(&g).unwrap();
        assert_eq!((prof.rad, prof.diam), (2, 4));
        let (c, a, p) = metric_subgraphs(&g).unwrap();
        assert_eq!(c, Graph::cycle(3).unwrap());
        assert_eq!(a, Graph::cycle(4).unwrap());
        assert_eq!(p, Graph::cycle(8).unwrap());
        assert_eq!(layout.center, 0..3);
        assert_eq!(g.size(), 35);
    }

    #[test]
    fn cubic_at_twenty_two() {
        let (g, layout) = build_theorem9(3, 22).unwrap();
        let (c, a, p) = metric_subgraphs(&g).unwrap();
        assert_eq!((c.order(), a.order(), p.order()), (4, 6, 12));
        for h in [&c, &a, &p] {
            assert_eq!(h.regular_degree(), Some(3));
            assert!(h.is_connected());
        }
        assert_eq!(layout.periphery_parts.len(), 8);
        assert!(layout.annulus_cells.is_empty());
    }

    #[test]
    fn center_grows_with_n() {
        let (g15, _) = build_theorem9(2, 15).unwrap();
        let (g16, l16) = build_theorem9(2, 16).unwrap();
        let (c, a, p) = metric_subgraphs(&g16).unwrap();
        assert_eq!(c, Graph::cycle(4).unwrap());
        let (_, a15, p15) = metric_subgraphs(&g15).unwrap();
        assert_eq!((a, p), (a15, p15));
        assert_eq!(l16.center, 0..4);
    }

    #[test]
    fn rejections_name_the_case() {
        let err = build_theorem9(3, 21).unwrap_err().to_string();
        assert!(err.contains("even") && err.contains("case (2)"), "{err}");
        let err = build_theorem9(4, 24).unwrap_err().to_string();
        assert!(err.contains("at least 25"), "{err}");
        assert!(build_theorem9(1, 20).is_err());
        assert!(matches!(build_theorem9(9, 64), Err(Error::OrderTooLarge(64))));
    }

    #[test]
    fn cell_sizes_match_tables() {
        // case 2.2, q = 3
        let cells = hc_cells(Theorem9Case::Two, 3);
        let sizes: Vec<usize> = cells.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 1, 2, 2, 1, 1, 2, 2]);
        // case 3, q = 2 and case 6, q = 1 cover all annulus positions exactly once
        for (case, q, m) in [(Theorem9Case::Three, 2, 10), (Theorem9Case::Six, 1, 8), (Theorem9Case::Six, 3, 14)] {
            let mut all: Vec<usize> = hc_cells(case, q).concat();
            all.sort();
            assert_eq!(all, (0..m).collect::<Vec<_>>());
        }
    }
}
