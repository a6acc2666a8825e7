//! Slow, independent reference implementations used as test oracles.
#![allow(dead_code)]

use metricsub::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn edge_count(m: &[Vec<bool>]) -> usize {
    m.iter().flatten().filter(|&&b| b).count() / 2
}

/// Floyd-Warshall distances; `usize::MAX` marks unreachable pairs.
pub fn apsp(m: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = m.len();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                d[i][j] = 0;
            } else if m[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Eccentricities, or `None` when disconnected.
pub fn ecc(m: &[Vec<bool>]) -> Option<Vec<usize>> {
    let d = apsp(m);
    let inf = usize::MAX / 4;
    d.iter()
        .map(|row| {
            let e = *row.iter().max().unwrap_or(&0);
            (e < inf).then_some(e)
        })
        .collect()
}

/// (center, annulus, periphery) vertex lists from the oracle eccentricities.
pub fn blocks(m: &[Vec<bool>]) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let e = ecc(m)?;
    let rad = *e.iter().min()?;
    let diam = *e.iter().max()?;
    let pick = |f: &dyn Fn(usize) -> bool| (0..e.len()).filter(|&v| f(e[v])).collect::<Vec<_>>();
    Some((pick(&|x| x == rad), pick(&|x| x > rad && x < diam), pick(&|x| x == diam)))
}

pub fn induced(m: &[Vec<bool>], vs: &[usize]) -> Vec<Vec<bool>> {
    vs.iter().map(|&u| vs.iter().map(|&v| m[u][v]).collect()).collect()
}

pub fn connected(m: &[Vec<bool>]) -> bool {
    !m.is_empty() && ecc(m).is_some()
}

pub fn regular(m: &[Vec<bool>]) -> Option<usize> {
    let degs: Vec<usize> = m.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let d = *degs.first()?;
    degs.iter().all(|&x| x == d).then_some(d)
}

pub fn is_path(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    connected(m) && edge_count(m) + 1 == n && m.iter().all(|r| r.iter().filter(|&&b| b).count() <= 2)
}

pub fn is_cycle(m: &[Vec<bool>]) -> bool {
    m.len() >= 3 && connected(m) && regular(m) == Some(2)
}

/// Lexicographically least adjacency bitstring over all relabelings.
pub fn brute_certificate(m: &[Vec<bool>]) -> (usize, Vec<bool>) {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let mut bits = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in i + 1..n {
                bits.push(m[perm[i]][perm[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| bits < *b) {
            best = Some(bits);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (n, best.unwrap_or_default())
}

pub fn brute_isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    brute_certificate(a) == brute_certificate(b)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn brute_automorphisms(m: &[Vec<bool>]) -> u64 {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        if (0..n).all(|i| (0..n).all(|j| m[i][j] == m[perm[i]][perm[j]])) {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            return count;
        }
    }
}

/// Smallest vertex set whose removal disconnects the graph or leaves one vertex.
pub fn brute_connectivity(m: &[Vec<bool>]) -> usize {
    let n = m.len();
    if n <= 1 || !connected(m) {
        return 0;
    }
    (0..1u64 << n)
        .filter_map(|s| {
            let keep: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 0).collect();
            let disconnects = keep.len() <= 1 || !connected(&induced(m, &keep));
            disconnects.then_some(s.count_ones() as usize)
        })
        .min()
        .map(|k| k.min(n - 1))
        .unwrap_or(n - 1)
}

/// Hamiltonian cycle by exhaustive search from vertex 0.
pub fn brute_hamiltonian(m: &[Vec<bool>]) -> bool {
    fn extend(m: &[Vec<bool>], path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = m.len();
        let last = *path.last().unwrap();
        if path.len() == n {
            return m[last][path[0]];
        }
        for v in 0..n {
            if !used[v] && m[last][v] {
                used[v] = true;
                path.push(v);
                if extend(m, path, used) {
                    return true;
                }
                path.pop();
                used[v] = false;
            }
        }
        false
    }
    let n = m.len();
    if n < 3 {
        return false;
    }
    let mut used = vec![false; n];
    used[0] = true;
    extend(m, &mut vec![0], &mut used)
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random spanning tree plus independent extra edges.
pub fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = random_graph(rng, n, p);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        if !g.has_edge(order[i], parent) {
            g.add_edge(order[i], parent).unwrap();
        }
    }
    g
}

pub fn random_perm(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
