//! Graph text and JSON formats.
//!
//! Text: a header line `n m` followed by `m` lines `i j` with 1-indexed,
//! whitespace-separated endpoints. Blank lines are ignored.
//! JSON: `{"n": 4, "edges": [[1,2],[1,3]]}`.

use crate::error::{Error, Result};
use crate::graph::{make_graph, Edge, Graph};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(
            line,
            format!("expected two integers, found {text:?}"),
        ));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| parse_err(line, format!("{s:?} is not a nonnegative integer")))
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

pub fn parse_text(input: &str) -> Result<Graph> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing \"n m\" header"))?;
    let (n, m) = two_numbers(hline, header)?;
    let mut edges: Vec<Edge> = Vec::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            return Err(parse_err(
                line,
                format!("more than the {m} declared edge lines"),
            ));
        }
        edges.push(two_numbers(line, text)?);
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    make_graph(n, &edges)
}

pub fn to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

pub fn parse_json(input: &str) -> Result<Graph> {
    serde_json::from_str(input).map_err(|e| match e.classify() {
        serde_json::error::Category::Data => Error::Validation(e.to_string()),
        _ => parse_err(e.line(), e.to_string()),
    })
}

/// Accepts either format, choosing JSON when the input starts with `{`.
pub fn parse_any(input: &str) -> Result<Graph> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}
