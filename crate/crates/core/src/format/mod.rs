//! Text formats: graph6 lines, plain edge lists, and input sniffing.

pub mod edgelist;
pub mod graph6;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6: input ended at offset {offset}, expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("graph6: unexpected trailing data at offset {offset}")]
    Trailing { offset: usize },
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: long form (n > 62) is not supported (offset {offset})")]
    LongForm { offset: usize },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

impl FormatError {
    /// Byte offset of a graph6 failure, when the error has one.
    pub fn offset(&self) -> Option<usize> {
        match *self {
            FormatError::BadByte { offset, .. }
            | FormatError::Truncated { offset, .. }
            | FormatError::Trailing { offset }
            | FormatError::LongForm { offset } => Some(offset),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

impl InputFormat {
    /// Guess from a file extension; `None` when the extension is unknown.
    pub fn from_extension(ext: &str) -> Option<Self> {
        match ext.to_ascii_lowercase().as_str() {
            "g6" | "graph6" => Some(InputFormat::Graph6),
            "txt" | "edges" | "edgelist" | "el" => Some(InputFormat::EdgeList),
            _ => None,
        }
    }

    /// Guess from content: edge lists contain whitespace-separated tokens on
    /// a data line, graph6 lines never do.
    pub fn sniff(text: &str) -> Self {
        let data = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty() && !l.starts_with(">>graph6<<"));
        match data {
            Some(line) if line.split_whitespace().count() > 1 => InputFormat::EdgeList,
            _ => InputFormat::Graph6,
        }
    }
}

/// Parses every graph in `text`: one per non-empty line for graph6, a single
/// graph for edge lists.
pub fn parse_graphs(text: &str, format: InputFormat) -> Result<Vec<Graph>, FormatError> {
    match format {
        InputFormat::Graph6 => {
            let mut out = Vec::new();
            let mut base = 0;
            for line in text.split_inclusive('\n') {
                let trimmed = line.trim_end();
                if !trimmed.is_empty() {
                    out.push(graph6::decode(trimmed).map_err(|e| shift(e, base))?);
                }
                base += line.len();
            }
            Ok(out)
        }
        InputFormat::EdgeList => Ok(vec![edgelist::parse(text)?]),
    }
}

fn shift(e: FormatError, base: usize) -> FormatError {
    match e {
        FormatError::BadByte { offset, byte } => FormatError::BadByte { offset: offset + base, byte },
        FormatError::Truncated { offset, expected } => FormatError::Truncated { offset: offset + base, expected },
        FormatError::Trailing { offset } => FormatError::Trailing { offset: offset + base },
        FormatError::LongForm { offset } => FormatError::LongForm { offset: offset + base },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sniffing() {
        assert_eq!(InputFormat::sniff("C~\n"), InputFormat::Graph6);
        assert_eq!(InputFormat::sniff("# k4\n0 1\n"), InputFormat::EdgeList);
        assert_eq!(InputFormat::sniff("n 4\n0 1\n"), InputFormat::EdgeList);
        assert_eq!(InputFormat::from_extension("G6"), Some(InputFormat::Graph6));
        assert_eq!(InputFormat::from_extension("csv"), None);
    }

    #[test]
    fn multi_line_offsets_are_absolute() {
        let err = parse_graphs("C~\nC~\nB\n", InputFormat::Graph6).unwrap_err();
        assert_eq!(err.offset(), Some(7));
        assert_eq!(parse_graphs("Bw\n\nC~\n", InputFormat::Graph6).unwrap().len(), 2);
    }
}
