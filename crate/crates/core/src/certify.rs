//! Analysis reports and executable checks of the metric lemmas.

use serde::Serialize;

use crate::canon::are_isomorphic;
use crate::codec::encode_graph6;
use crate::construct::{theorem9_block_orders, ConstructionSpec, GalleryId, PartLayout};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::metric::{classify, eccentricity_profile, subgraphs_of, ClassTags, EccentricityProfile, MetricPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl BoundCheck {
    fn gate(name: &'static str, applies: bool, holds: impl FnOnce() -> (bool, String)) -> Self {
        if !applies {
            return BoundCheck {
                name,
                status: CheckStatus::NotApplicable,
                detail: "hypothesis not met".into(),
            };
        }
        let (ok, detail) = holds();
        BoundCheck {
            name,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgraphReport {
    pub order: usize,
    pub size: usize,
    pub class: &'static str,
    pub tags: ClassTags,
    pub connectivity: usize,
    pub graph6: Option<String>,
}

impl SubgraphReport {
    fn of(g: &Graph) -> Self {
        let tags = classify(g);
        SubgraphReport {
            order: g.order(),
            size: g.size(),
            class: tags.label(),
            tags,
            connectivity: g.vertex_connectivity(),
            graph6: encode_graph6(g).ok(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgraphReports {
    pub center: SubgraphReport,
    pub annulus: SubgraphReport,
    pub periphery: SubgraphReport,
}

/// Field names are part of the JSON output format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub order: usize,
    pub size: usize,
    pub rad: u32,
    pub diam: u32,
    pub ecc: Vec<u32>,
    pub center: Vec<usize>,
    pub annulus: Vec<usize>,
    pub periphery: Vec<usize>,
    pub self_centered: bool,
    pub subgraphs: SubgraphReports,
    pub checks: Vec<BoundCheck>,
}

impl AnalysisReport {
    pub fn failures(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "order {}  size {}  rad {}  diam {}{}\n",
            self.order,
            self.size,
            self.rad,
            self.diam,
            if self.self_centered { "  (self-centered)" } else { "" }
        );
        for (name, set, sub) in [
            ("center", &self.center, &self.subgraphs.center),
            ("annulus", &self.annulus, &self.subgraphs.annulus),
            ("periphery", &self.periphery, &self.subgraphs.periphery),
        ] {
            s += &format!(
                "{name:<10} {:?}\n           order {} size {} class {} connectivity {}\n",
                set, sub.order, sub.size, sub.class, sub.connectivity
            );
        }
        for c in &self.checks {
            let st = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::NotApplicable => "n/a",
            };
            s += &format!("{:<18} {st:<5} {}\n", c.name, c.detail);
        }
        s
    }
}

pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    let prof = eccentricity_profile(g)?;
    let part = MetricPartition::from_profile(&prof);
    let (c, a, p) = subgraphs_of(g, &part)?;
    let checks = bounds_from(g, &prof, &part, &a, &p);
    Ok(AnalysisReport {
        order: g.order(),
        size: g.size(),
        rad: prof.rad,
        diam: prof.diam,
        center: part.center.to_vec(),
        annulus: part.annulus.to_vec(),
        periphery: part.periphery.to_vec(),
        ecc: prof.ecc,
        self_centered: part.self_centered,
        subgraphs: SubgraphReports {
            center: SubgraphReport::of(&c),
            annulus: SubgraphReport::of(&a),
            periphery: SubgraphReport::of(&p),
        },
        checks,
    })
}

/// Every lemma-level inequality, gated on its hypothesis.
pub fn verify_bounds(g: &Graph) -> Result<Vec<BoundCheck>> {
    let prof = eccentricity_profile(g)?;
    let part = MetricPartition::from_profile(&prof);
    let (_, a, p) = subgraphs_of(g, &part)?;
    Ok(bounds_from(g, &prof, &part, &a, &p))
}

fn bounds_from(
    g: &Graph,
    prof: &EccentricityProfile,
    part: &MetricPartition,
    ann: &Graph,
    per: &Graph,
) -> Vec<BoundCheck> {
    let (rad, diam) = (prof.rad, prof.diam);
    let n = g.order();
    let has_annulus = !part.annulus.is_empty();
    let rad_of = |h: &Graph| eccentricity_profile(h).map(|p| p.rad).ok();
    let mut out = Vec::new();

    out.push(BoundCheck::gate("lemma1", true, || {
        let short: Vec<u32> = (rad + 1..=diam)
            .filter(|&k| prof.ecc.iter().filter(|&&e| e == k).count() < 2)
            .collect();
        (short.is_empty(), format!("levels with fewer than two vertices: {short:?}"))
    }));
    out.push(BoundCheck::gate("diam_le_2rad", true, || {
        (diam <= 2 * rad, format!("diam {diam}, 2 rad {}", 2 * rad))
    }));
    out.push(BoundCheck::gate("adjacent_ecc_gap", true, || {
        let bad = g
            .edges()
            .into_iter()
            .find(|&(u, v)| prof.ecc[u].abs_diff(prof.ecc[v]) > 1);
        (bad.is_none(), format!("first violating edge: {bad:?}"))
    }));
    out.push(BoundCheck::gate("lemma2", has_annulus, || {
        let a = part.annulus.len();
        (
            rad >= 2 && diam >= 4 && a >= 2,
            format!("rad {rad} >= 2, diam {diam} >= 4, |A| {a} >= 2"),
        )
    }));
    out.push(BoundCheck::gate("lemma3", !part.self_centered && per.is_connected(), || {
        let r = rad_of(per).unwrap_or(0);
        (
            r >= diam && per.order() >= 2 * diam as usize,
            format!("rad(P) {r} >= {diam}, |P| {} >= {}", per.order(), 2 * diam),
        )
    }));
    out.push(BoundCheck::gate("lemma4", ann.is_connected(), || {
        let r = rad_of(ann).unwrap_or(0);
        (r >= 2 && ann.order() >= 4, format!("rad(A) {r} >= 2, |A| {} >= 4", ann.order()))
    }));
    out.push(BoundCheck::gate(
        "lemma5",
        !part.self_centered && per.is_connected() && ann.is_connected(),
        || (n >= 13, format!("order {n} >= 13")),
    ));
    let k = g.min_degree().unwrap_or(0);
    out.push(BoundCheck::gate("lemma7", rad >= 3 && k >= 2, || {
        let rhs = 2 * rad as usize * (k + 1);
        (3 * n >= rhs, format!("3n = {} >= 2r(k+1) = {rhs}", 3 * n))
    }));
    out
}

/// Outcome of checking a built graph against its family's contract.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionVerdict {
    pub family: &'static str,
    /// First violated clause, if any.
    pub failure: Option<String>,
}

impl ConstructionVerdict {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn ensure(ok: bool, clause: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(clause())
    }
}

/// Checks `g` against the contract of the family described by `spec`.
/// Three-block families need their `layout`.
pub fn verify_construction(spec: &ConstructionSpec, g: &Graph, layout: Option<&PartLayout>) -> ConstructionVerdict {
    let failure = match layout {
        Some(l) => check_blocks(spec, g, l),
        None => check_plain(spec, g),
    }
    .err();
    ConstructionVerdict {
        family: spec.family(),
        failure,
    }
}

fn check_blocks(spec: &ConstructionSpec, g: &Graph, layout: &PartLayout) -> std::result::Result<(), String> {
    if let ConstructionSpec::Theorem6 { n } | ConstructionSpec::Theorem9 { n, .. } = spec {
        ensure(g.order() == *n, || format!("order {} differs from requested {n}", g.order()))?;
    }
    ensure(g.is_connected(), || "graph is disconnected".into())?;
    ensure(g.order() == layout.order(), || {
        format!("order {} differs from layout order {}", g.order(), layout.order())
    })?;
    let prof = eccentricity_profile(g).map_err(|e| e.to_string())?;
    ensure(prof.rad == 2, || format!("radius is {}, expected 2", prof.rad))?;
    ensure(prof.diam == 4, || format!("diameter is {}, expected 4", prof.diam))?;
    let part = MetricPartition::from_profile(&prof);
    for (name, got, want) in [
        ("center", part.center, layout.center_set()),
        ("annulus", part.annulus, layout.annulus_set()),
        ("periphery", part.periphery, layout.periphery_set()),
    ] {
        ensure(got == want, || format!("{name} is {:?}, layout says {:?}", got, want))?;
    }
    let (c, a, p) = subgraphs_of(g, &part).map_err(|e| e.to_string())?;
    let subs = [("center", &c), ("annulus", &a), ("periphery", &p)];
    let all_paths = |orders: [usize; 3]| -> std::result::Result<(), String> {
        for ((name, s), o) in subs.iter().zip(orders) {
            ensure(classify(s).is_path && s.order() == o, || format!("{name} is not P_{o}"))?;
        }
        Ok(())
    };
    let all_regular = |k: usize, orders: Option<[usize; 3]>| -> std::result::Result<(), String> {
        for (i, (name, s)) in subs.iter().enumerate() {
            ensure(s.is_connected(), || format!("{name} subgraph is disconnected"))?;
            ensure(s.regular_degree() == Some(k), || format!("{name} subgraph is not {k}-regular"))?;
            if let Some(o) = orders {
                ensure(s.order() == o[i], || format!("{name} has order {}, expected {}", s.order(), o[i]))?;
            }
        }
        Ok(())
    };
    match spec {
        ConstructionSpec::Theorem6 { n } => all_paths([n - 12, 4, 8]),
        ConstructionSpec::Theorem9 { k, n } => {
            let (bc, ba, bp) = theorem9_block_orders(*k, *n).map_err(|e| e.to_string())?;
            all_regular(*k, Some([bc, ba, bp]))
        }
        ConstructionSpec::Theorem11 { h } => {
            for (name, s) in subs {
                ensure(are_isomorphic(s, h), || format!("{name} subgraph is not isomorphic to H"))?;
            }
            Ok(())
        }
        ConstructionSpec::Gallery { id } => match id {
            GalleryId::G1Order13 => all_paths([1, 4, 8]),
            GalleryId::Theorem10_1 | GalleryId::Theorem10_2 | GalleryId::Theorem10_3 => {
                all_regular(2, Some([3, 4, 8]))
            }
            GalleryId::Remark2Order18 => {
                for (name, s) in subs {
                    ensure(s.regular_degree() == Some(3), || format!("{name} subgraph is not cubic"))?;
                }
                ensure(!p.is_connected(), || "periphery subgraph is connected".into())
            }
        },
        other => Err(format!("family {} has no three-block layout", other.family())),
    }
}

fn check_plain(spec: &ConstructionSpec, g: &Graph) -> std::result::Result<(), String> {
    match spec {
        ConstructionSpec::CircularJoin { parts } => {
            let order: usize = parts.iter().map(Graph::order).sum();
            let m = parts.len();
            let size: usize = parts.iter().map(Graph::size).sum::<usize>()
                + (0..m).map(|i| parts[i].order() * parts[(i + 1) % m].order()).sum::<usize>();
            ensure(g.order() == order, || format!("order {} != {order}", g.order()))?;
            ensure(g.size() == size, || format!("size {} != {size}", g.size()))
        }
        ConstructionSpec::NiceConnection { g: small, h: large, .. } => {
            let s = small.order();
            ensure(g.order() == s + large.order(), || "order is not |G| + |H|".into())?;
            let small_set = VertexSet::range(0, s);
            for y in s..g.order() {
                let k = g.neighbors(y).intersection(small_set).len();
                ensure(k == 1, || format!("vertex {y} of H has {k} neighbors in G"))?;
            }
            for x in 0..s {
                ensure(!g.neighbors(x).difference(small_set).is_empty(), || {
                    format!("vertex {x} of G has no neighbor in H")
                })?;
            }
            ensure(g.size() == small.size() + large.size() + large.order(), || "size mismatch".into())
        }
        ConstructionSpec::CompleteMinus { mode, m } => {
            use crate::construct::CompleteMinusMode::*;
            let comp = classify(&g.complement());
            ensure(g.order() == *m, || format!("order {} != {m}", g.order()))?;
            let ok = match mode {
                PerfectMatching => g.complement().regular_degree() == Some(1),
                HamiltonianCycle => comp.is_cycle,
                HamiltonianPath => comp.is_path,
            };
            ensure(ok, || format!("complement is not the removed {mode:?}"))
        }
        ConstructionSpec::Circulant { n, k } => {
            ensure(g.order() == *n, || format!("order {} != {n}", g.order()))?;
            ensure(g.regular_degree() == Some(*k), || format!("not {k}-regular"))?;
            ensure(*k < 2 || g.is_connected(), || "disconnected".into())
        }
        other => Err(format!("family {} needs a layout", other.family())),
    }
}

/// Builds `spec` and verifies the result.
pub fn build_and_verify(spec: &ConstructionSpec) -> Result<(Graph, Option<PartLayout>, ConstructionVerdict)> {
    let (g, layout) = spec.build()?;
    let v = verify_construction(spec, &g, layout.as_ref());
    Ok((g, layout, v))
}
