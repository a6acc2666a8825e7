//! graph6 interchange and DOT output.
//!
//! Only the short graph6 form is supported: the order byte is `63 + n` with
//! `1 <= n <= 62`, followed by the upper triangle of the adjacency matrix in
//! column order (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits per byte,
//! big-endian within each group, zero padded, each byte offset by 63.

use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::metric::MetricPartition;

pub const CENTER_COLOR: &str = "#e4572e";
pub const ANNULUS_COLOR: &str = "#ffc914";
pub const PERIPHERY_COLOR: &str = "#4d9de0";

fn triangle_bits(g: &Graph) -> impl Iterator<Item = bool> + '_ {
    (1..g.order()).flat_map(move |j| (0..j).map(move |i| g.has_edge(i, j)))
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Graph6(format!(
            "order {n} outside the short-form range 1..=62"
        )));
    }
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut k = 0;
    for bit in triangle_bits(g) {
        acc = acc << 1 | bit as u8;
        k += 1;
        if k == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            k = 0;
        }
    }
    if k > 0 {
        out.push(((acc << (6 - k)) + 63) as char);
    }
    Ok(out)
}

pub fn decode_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::Graph6("empty string".into()));
    };
    if first == b'~' {
        return Err(Error::Graph6("long-form graph6 (order > 62) is not supported".into()));
    }
    if !(63..=63 + MAX_ORDER as u8).contains(&first) {
        return Err(Error::Graph6(format!("invalid order byte {first:#04x}")));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("order 0 cannot be encoded".into()));
    }
    let nbits = n * (n - 1) / 2;
    let body = &bytes[1..];
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for order {n}, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let bit = |idx: usize| (body[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    let mut g = Graph::new(n)?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                g.link(i, j);
            }
            idx += 1;
        }
    }
    for pad in nbits..body.len() * 6 {
        if bit(pad) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Reads one graph per non-empty line; lines starting with `#` are skipped.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Graph6(e.to_string()))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let token = line.strip_prefix(">>graph6<<").unwrap_or(line);
        out.push(decode_graph6(token).map_err(|e| match e {
            Error::Graph6(msg) => Error::Graph6(format!("line {}: {msg}", lineno + 1)),
            other => other,
        })?);
    }
    Ok(out)
}

pub fn write_graph6_lines(graphs: &[Graph]) -> Result<String> {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&encode_graph6(g)?);
        out.push('\n');
    }
    Ok(out)
}

/// DOT text. With a partition, vertices are filled by metric role; vertices of
/// a self-centered graph get the center color.
pub fn to_dot(g: &Graph, partition: Option<&MetricPartition>) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(p) = partition {
        out.push_str("  node [style=filled];\n");
        for v in 0..g.order() {
            let (role, color) = if p.center.contains(v) {
                ("center", CENTER_COLOR)
            } else if p.annulus.contains(v) {
                ("annulus", ANNULUS_COLOR)
            } else {
                ("periphery", PERIPHERY_COLOR)
            };
            let _ = writeln!(out, "  {v} [fillcolor=\"{color}\", role={role}];");
        }
    } else {
        for v in 0..g.order() {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
