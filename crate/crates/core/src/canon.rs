//! Canonical labeling by individualization and refinement.
//!
//! The search tree starts from the ordered partition of vertices by
//! (degree, eccentricity within the component) and refines it to an equitable
//! partition. Each internal node individualizes a vertex of the first largest
//! non-singleton cell. The canonical labeling is the leaf whose relabeled
//! upper-triangle bit string is lexicographically least. Automorphisms found
//! at equal leaves prune the tree (orbit pruning plus backjumping), which keeps
//! highly symmetric graphs such as `K_n` cheap.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{BitIter, Graph};

/// Relabeling-invariant certificate: the order byte followed by the
/// canonical upper triangle (column order) packed eight bits per byte.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

type Cells = Vec<Vec<usize>>;

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Eccentricity of `v` within its own component.
fn component_eccentricity(g: &Graph, v: usize) -> u32 {
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    let mut depth = 0;
    loop {
        let mut next = 0;
        for u in BitIter(frontier) {
            next |= g.row(u);
        }
        frontier = next & !seen;
        if frontier == 0 {
            return depth;
        }
        seen |= frontier;
        depth += 1;
    }
}

fn initial_cells(g: &Graph) -> Cells {
    let mut keyed: Vec<((usize, u32), usize)> = (0..g.order())
        .map(|v| ((g.degree(v), component_eccentricity(g, v)), v))
        .collect();
    keyed.sort();
    let mut cells: Cells = Vec::new();
    let mut last = None;
    for (key, v) in keyed {
        if last == Some(key) {
            cells.last_mut().unwrap().push(v);
        } else {
            cells.push(vec![v]);
            last = Some(key);
        }
    }
    cells
}

/// Splits cells by neighbor counts into other cells until equitable. New
/// fragments replace the split cell in place, ordered by increasing count.
fn refine(g: &Graph, cells: &mut Cells) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cell_mask(&cells[s]);
            let mut i = 0;
            while i < cells.len() {
                if cells[i].len() == 1 {
                    i += 1;
                    continue;
                }
                let mut counted: Vec<(u32, usize)> = cells[i]
                    .iter()
                    .map(|&v| ((g.row(v) & splitter).count_ones(), v))
                    .collect();
                let first = counted[0].0;
                if counted.iter().all(|&(c, _)| c == first) {
                    i += 1;
                    continue;
                }
                counted.sort();
                let mut parts: Cells = Vec::new();
                let mut last = None;
                for (c, v) in counted {
                    if last == Some(c) {
                        parts.last_mut().unwrap().push(v);
                    } else {
                        parts.push(vec![v]);
                        last = Some(c);
                    }
                }
                let k = parts.len();
                cells.splice(i..=i, parts);
                i += k;
                changed = true;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

/// Upper triangle of the graph relabeled by `lab` (position -> vertex).
fn certificate(g: &Graph, lab: &[usize]) -> Vec<u8> {
    let n = lab.len();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    out.push(n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        let row = g.row(lab[j]);
        for &li in &lab[..j] {
            acc = acc << 1 | (row >> li & 1) as u8;
            k += 1;
            if k == 8 {
                out.push(acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(acc << (8 - k));
    }
    out
}

struct Leaf {
    cert: Vec<u8>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Canonizer<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl<'a> Canonizer<'a> {
    /// Orbit representatives under the stored automorphisms fixing `path`.
    fn orbits_fixing(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        for a in &self.automorphisms {
            if path.iter().all(|&v| a[v] == v) {
                for (v, &w) in a.iter().enumerate() {
                    let (rv, rw) = (find(&mut parent, v), find(&mut parent, w));
                    if rv != rw {
                        parent[rv.max(rw)] = rv.min(rw);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut a = vec![0; from.len()];
        for (&x, &y) in from.iter().zip(to) {
            a[x] = y;
        }
        self.automorphisms.push(a);
    }

    /// Returns `Some(level)` to unwind the search to the node at depth `level`.
    fn explore(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .max_by(|(i, a), (j, b)| a.len().cmp(&b.len()).then(j.cmp(i)))
            .map(|(i, _)| i);
        let Some(ti) = target else {
            return self.leaf(cells, path);
        };
        let depth = path.len();
        let mut candidates = cells[ti].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        let mut seen_autos = usize::MAX;
        let mut orbits: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() {
                if seen_autos != self.automorphisms.len() {
                    orbits = self.orbits_fixing(path);
                    seen_autos = self.automorphisms.len();
                }
                if explored.iter().any(|&w| orbits[w] == orbits[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[ti].iter().copied().filter(|&x| x != v).collect();
            child.splice(ti..=ti, [vec![v], rest]);
            refine(self.g, &mut child);
            path.push(v);
            let jump = self.explore(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: Cells, path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.into_iter().flatten().collect();
        let cert = certificate(self.g, &lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                cert: cert.clone(),
                lab: lab.clone(),
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                cert,
                lab,
                path: path.to_vec(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let level = common_prefix(path, &first.path);
            let from = first.lab.clone();
            self.record_automorphism(&from, &lab);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best set with first");
        match cert.cmp(&best.cert) {
            Ordering::Less => {
                self.best = Some(Leaf {
                    cert,
                    lab,
                    path: path.to_vec(),
                });
                None
            }
            Ordering::Equal => {
                let level = common_prefix(path, &best.path);
                let from = best.lab.clone();
                self.record_automorphism(&from, &lab);
                Some(level)
            }
            Ordering::Greater => None,
        }
    }
}

/// Canonical labeling as a list `lab` where position `i` holds the vertex
/// placed at `i`, plus the certificate.
fn canonize(g: &Graph) -> (Vec<usize>, Vec<u8>) {
    if g.order() == 0 {
        return (Vec::new(), vec![0]);
    }
    let mut cells = initial_cells(g);
    refine(g, &mut cells);
    let mut c = Canonizer {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    c.explore(cells, &mut Vec::new());
    let best = c.best.expect("search visits at least one leaf");
    (best.lab, best.cert)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(canonize(g).1)
}

/// Permutation `perm` with `perm[v]` = canonical position of `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let (lab, _) = canonize(g);
    let mut perm = vec![0; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    perm
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.permute(&canonical_labeling(g))
        .expect("canonical labeling is a permutation")
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h)
}

/// Number of automorphisms, by backtracking inside the cells of the
/// equitable partition (which every automorphism preserves).
pub fn automorphism_count(g: &Graph) -> u64 {
    let n = g.order();
    if n == 0 {
        return 1;
    }
    let mut cells = initial_cells(g);
    refine(g, &mut cells);
    let mut class = vec![0; n];
    for (i, c) in cells.iter().enumerate() {
        for &v in c {
            class[v] = i;
        }
    }
    fn extend(g: &Graph, class: &[usize], image: &mut Vec<usize>, used: u64) -> u64 {
        let v = image.len();
        if v == g.order() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.order() {
            if used >> w & 1 == 1 || class[w] != class[v] {
                continue;
            }
            let ok = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w));
            if ok {
                image.push(w);
                total += extend(g, class, image, used | 1 << w);
                image.pop();
            }
        }
        total
    }
    extend(g, &class, &mut Vec::with_capacity(n), 0)
}
