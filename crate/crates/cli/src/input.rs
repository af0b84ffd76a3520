//! Reading graphs from a file or stdin.

use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use kcover::format::{parse_graphs, InputFormat};
use kcover::Graph;

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

impl From<Format> for InputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Graph6 => InputFormat::Graph6,
            Format::Edgelist => InputFormat::EdgeList,
        }
    }
}

/// Reads `file`, or stdin when `None`. The format is, in order: the flag,
/// the file extension, a guess from the content.
pub fn read_graphs(file: Option<&Path>, format: Option<Format>) -> Result<Vec<Graph>, String> {
    let (text, name) = match file {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            (text, path.display().to_string())
        }
        None => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).map_err(|e| format!("stdin: {e}"))?;
            (text, "<stdin>".to_string())
        }
    };
    let format = format
        .map(InputFormat::from)
        .or_else(|| file.and_then(|p| p.extension()).and_then(|e| e.to_str()).and_then(InputFormat::from_extension))
        .unwrap_or_else(|| InputFormat::sniff(&text));
    let graphs = parse_graphs(&text, format).map_err(|e| format!("{name}: {e}"))?;
    if graphs.is_empty() {
        return Err(format!("{name}: no graph in input"));
    }
    Ok(graphs)
}
