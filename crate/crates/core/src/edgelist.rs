//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n 5
//! 0 1
//! 1 2
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. The first
//! significant line declares the order; every later one holds a pair of
//! distinct 0-based vertex ids.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::graph6::{self, Graph6Error};

/// Parse failure with the 1-based line it refers to.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("missing order declaration `n <order>`")]
    MissingHeader,
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
}

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut order = None;
    let mut pairs = Vec::new();
    let mut pair_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let syntax = |message: String| ParseError::Syntax { line, message };
        match order {
            None => match fields.as_slice() {
                ["n", count] => {
                    order = Some(
                        count
                            .parse::<usize>()
                            .map_err(|_| syntax(format!("invalid order `{count}`")))?,
                    );
                }
                _ => return Err(syntax(format!("expected `n <order>`, found `{content}`"))),
            },
            Some(_) => match fields.as_slice() {
                [a, b] => {
                    let id = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|_| syntax(format!("invalid vertex id `{s}`")))
                    };
                    pairs.push((id(a)?, id(b)?));
                    pair_lines.push(line);
                }
                _ => return Err(syntax(format!("expected `u v`, found `{content}`"))),
            },
        }
    }
    let order = order.ok_or(ParseError::MissingHeader)?;
    Graph::from_edge_list(order, &pairs).map_err(|source| {
        let line = match source {
            GraphError::SelfLoop { index, .. }
            | GraphError::VertexOutOfRange { index, .. }
            | GraphError::DuplicateEdge { index, .. } => pair_lines[index],
            _ => 0,
        };
        ParseError::Graph { line, source }
    })
}

/// Input formats accepted by [`parse_auto`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    Graph6,
}

/// Parses either format. Without an explicit format, the text is taken as
/// graph6 iff it is a single line of graph6 bytes with no spaces.
pub fn parse_auto(text: &str, format: Option<InputFormat>) -> Result<Graph, ParseError> {
    let format = format.unwrap_or(if graph6::looks_like_graph6(text) {
        InputFormat::Graph6
    } else {
        InputFormat::EdgeList
    });
    match format {
        InputFormat::EdgeList => parse(text),
        InputFormat::Graph6 => {
            let (line, content) = text
                .lines()
                .enumerate()
                .find(|(_, l)| !l.trim().is_empty())
                .map_or((1, ""), |(i, l)| (i + 1, l));
            graph6::decode(content).map_err(|source| ParseError::Graph6 { line, source })
        }
    }
}

/// Writes the document; `comments` become leading `#` lines.
pub fn write(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "n {}", g.order());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse("# a 5-cycle\n\nn 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
        assert_eq!((g.order(), g.size()), (5, 5));
    }

    #[test]
    fn write_then_parse() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 1), (3, 0)]).unwrap();
        let text = write(&g, &["star-ish".to_string()]);
        assert!(text.starts_with("# star-ish\nn 4\n"));
        assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn errors_name_the_line() {
        let err = parse("n 5\n5 x\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax {
                line: 2,
                message: "invalid vertex id `x`".into()
            }
        );
        assert!(err.to_string().starts_with("line 2:"));

        let err = parse("# c\nn 3\n0 1\n\n1 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Graph { line: 5, .. }));

        let err = parse("n 3\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Graph { line: 3, .. }));

        assert_eq!(parse("# only\n"), Err(ParseError::MissingHeader));
        assert!(matches!(
            parse("0 1\n"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
    }

    #[test]
    fn auto_detection() {
        let k2 = parse_auto("A_\n", None).unwrap();
        assert_eq!(k2.size(), 1);
        let same = parse_auto("n 2\n0 1\n", None).unwrap();
        assert_eq!(k2, same);
        assert!(parse_auto("A_", Some(InputFormat::EdgeList)).is_err());
        assert!(matches!(
            parse_auto("A", Some(InputFormat::Graph6)),
            Err(ParseError::Graph6 { line: 1, .. })
        ));
    }
}
