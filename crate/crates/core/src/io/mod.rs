//! Input parsers and report writers.

mod dot;
mod edgelist;
mod obo;
mod report;

use std::path::Path;

use thiserror::Error;

pub use dot::{layout_document, write_layout_dot, LayoutDocument, LayoutEdge, LayoutNode};
pub use edgelist::parse_edgelist;
pub use obo::parse_obo;
pub use report::{
    format_midpoint, parse_rank_csv, write_rank_csv, write_report_json, RankCsvRow, Report,
    ReportMeta,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{source_name}:{line}: {message}")]
pub struct ParseError {
    pub source_name: String,
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(source_name: &str, line: usize, message: impl Into<String>) -> Self {
        ParseError {
            source_name: source_name.to_string(),
            line,
            message: message.into(),
        }
    }
}

/// `(child, parent)` edges read from a hierarchy file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeDocument {
    pub edges: Vec<(String, String)>,
    pub source_name: String,
    /// 1-based line of each edge, strictly increasing.
    pub line_numbers: Vec<usize>,
}

impl EdgeDocument {
    pub(crate) fn push(&mut self, child: String, parent: String, line: usize) {
        self.edges.push((child, parent));
        self.line_numbers.push(line);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Edgelist,
    Obo,
}

/// `.obo` suffix or any `[Term]` line selects OBO; everything else is an edge list.
pub fn detect_format(path: &Path, text: &str) -> InputFormat {
    let obo_suffix = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("obo"));
    if obo_suffix || text.lines().any(|l| l.trim() == "[Term]") {
        InputFormat::Obo
    } else {
        InputFormat::Edgelist
    }
}

pub fn parse(
    format: InputFormat,
    text: &str,
    source_name: &str,
) -> Result<EdgeDocument, ParseError> {
    match format {
        InputFormat::Edgelist => parse_edgelist(text, source_name),
        InputFormat::Obo => parse_obo(text, source_name),
    }
}
