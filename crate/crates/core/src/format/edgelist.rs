//! Plain edge lists: one `u v` pair per line, `#` comments, optional
//! `n <count>` header.

use super::FormatError;
use crate::graph::{Graph, MAX_VERTICES};

pub fn parse(text: &str) -> Result<Graph, FormatError> {
    let mut declared: Option<usize> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| FormatError::EdgeList { line: line_no, message };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if declared.is_some() || !pairs.is_empty() {
                return Err(err("the `n` header must come first".into()));
            }
            let [_, count] = tokens[..] else {
                return Err(err("expected `n <count>`".into()));
            };
            declared = Some(count.parse().map_err(|_| err(format!("bad vertex count `{count}`")))?);
            continue;
        }
        let [a, b] = tokens[..] else {
            return Err(err(format!("expected two vertex ids, found {} tokens", tokens.len())));
        };
        let a: usize = a.parse().map_err(|_| err(format!("bad vertex id `{a}`")))?;
        let b: usize = b.parse().map_err(|_| err(format!("bad vertex id `{b}`")))?;
        if a == b {
            return Err(err(format!("self-loop at vertex {a}")));
        }
        pairs.push((line_no, a, b));
    }
    let n = declared.unwrap_or_else(|| pairs.iter().map(|&(_, a, b)| a.max(b) + 1).max().unwrap_or(0));
    if n > MAX_VERTICES {
        return Err(FormatError::EdgeList { line: 1, message: format!("{n} vertices exceeds the limit of {MAX_VERTICES}") });
    }
    let mut g = Graph::new(n);
    for (line, a, b) in pairs {
        if a >= n || b >= n {
            return Err(FormatError::EdgeList { line, message: format!("vertex {} out of range for n = {n}", a.max(b)) });
        }
        g.add_edge(a, b);
    }
    Ok(g)
}

pub fn write(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.vertex_count());
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u, e.v));
    }
    s
}
