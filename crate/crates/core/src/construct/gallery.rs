//! Cached witnesses found by skeleton search.
//!
//! The cache is `data/gallery.g6`, one graph per line in [`GalleryId::ALL`]
//! order. Every graph is stored in block order (center, annulus, periphery).
//! `metricsub regen-gallery` rebuilds it, and a test fails if the shipped file
//! and a fresh regeneration disagree.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::PartLayout;
use crate::codec::read_graph6_lines;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GALLERY_G6: &str = include_str!("../../data/gallery.g6");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GalleryId {
    /// Order 13, size 22, metric subgraphs `P_1, P_4, P_8`.
    G1Order13,
    Theorem10_1,
    Theorem10_2,
    Theorem10_3,
    /// Order 18, all metric subgraphs cubic, periphery `2K_4`.
    Remark2Order18,
}

impl GalleryId {
    pub const ALL: [GalleryId; 5] = [
        GalleryId::G1Order13,
        GalleryId::Theorem10_1,
        GalleryId::Theorem10_2,
        GalleryId::Theorem10_3,
        GalleryId::Remark2Order18,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GalleryId::G1Order13 => "g1_order13",
            GalleryId::Theorem10_1 => "theorem10_1",
            GalleryId::Theorem10_2 => "theorem10_2",
            GalleryId::Theorem10_3 => "theorem10_3",
            GalleryId::Remark2Order18 => "remark2_order18",
        }
    }

    pub fn layout(self) -> PartLayout {
        match self {
            GalleryId::G1Order13 => PartLayout::blocks(1, 4, 8),
            GalleryId::Theorem10_1 | GalleryId::Theorem10_2 | GalleryId::Theorem10_3 => {
                PartLayout::blocks(3, 4, 8)
            }
            GalleryId::Remark2Order18 => PartLayout::blocks(4, 6, 8),
        }
    }

    fn index(self) -> usize {
        GalleryId::ALL.iter().position(|&g| g == self).unwrap_or(0)
    }
}

impl fmt::Display for GalleryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GalleryId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GalleryId::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::UnknownGalleryId(s.to_string()))
    }
}

fn cache() -> &'static Result<Vec<Graph>> {
    static CACHE: OnceLock<Result<Vec<Graph>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let graphs = read_graph6_lines(GALLERY_G6.as_bytes())?;
        if graphs.len() != GalleryId::ALL.len() {
            return Err(Error::Graph6(format!(
                "gallery cache holds {} graphs, expected {}",
                graphs.len(),
                GalleryId::ALL.len()
            )));
        }
        Ok(graphs)
    })
}

pub fn gallery_graph(id: GalleryId) -> Result<Graph> {
    match cache() {
        Ok(graphs) => Ok(graphs[id.index()].clone()),
        Err(e) => Err(e.clone()),
    }
}
