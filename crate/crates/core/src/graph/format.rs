//! Text encodings: graph6 and a plain edge list.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with `0 <= u < v < n`.
//! Blank lines and `#` comments are ignored.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("invalid graph6 byte {b:#04x}")));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Parse("unsupported graph6 size prefix".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount { n, max: MAX_VERTICES });
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Parse(format!("graph6 body has {} bytes, expected {need} for n = {n}", body.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(s: &str) -> Result<Graph> {
    let mut lines =
        s.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim())).filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let [n, m] = parse_pair(line, header)?;
    let mut g = Graph::empty(n)?;
    let mut count = 0;
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        if u >= v || v >= n {
            return Err(Error::Parse(format!("line {line}: edge `{u} {v}` must satisfy 0 <= u < v < {n}")));
        }
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(Error::Parse(format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

fn parse_pair(line: usize, l: &str) -> Result<[usize; 2]> {
    let parts: Vec<&str> = l.split_whitespace().collect();
    let parse = |t: &str| {
        t.parse::<usize>().map_err(|_| Error::Parse(format!("line {line}: `{t}` is not a nonnegative integer")))
    };
    match parts.as_slice() {
        [a, b] => Ok([parse(a)?, parse(b)?]),
        _ => Err(Error::Parse(format!("line {line}: expected two integers, got `{l}`"))),
    }
}

/// Parses either format: a first significant line of two integers means an
/// edge list, anything else is read as graph6.
pub fn parse_graph(s: &str) -> Result<Graph> {
    let first = s
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Parse("no graph in input".into()))?;
    let looks_like_edges =
        first.split_whitespace().count() == 2 && first.split_whitespace().all(|t| t.parse::<usize>().is_ok());
    if looks_like_edges {
        parse_edge_list(s)
    } else {
        parse_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        // K̄_6, K_3, C_4 (0-1-2-3-0)
        assert_eq!(to_graph6(&Graph::empty(6).unwrap()), "E???");
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(to_graph6(&c4), "Cl");
        assert_eq!(parse_graph6("Cl").unwrap(), c4);
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
    }

    #[test]
    fn graph6_long_form() {
        let mut g = Graph::empty(64).unwrap();
        g.add_edge(0, 63).unwrap();
        g.add_edge(5, 17).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("Cl!").is_err());
        assert!(parse_graph6("?").is_err());
    }

    #[test]
    fn edge_list_parsing() {
        let text = "# a 6-cycle\n6 6\n0 1\n1 2\n\n2 3 # comment\n3 4\n4 5\n0 5\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(parse_graph(text).unwrap(), g);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("3 1\n2 1\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
    }
}
