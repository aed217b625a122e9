use serde::{Deserialize, Serialize};

use super::ParseError;
use crate::comparison::ComparisonRecord;
use crate::poset::Poset;
use crate::rank::{RankRow, RankTable};

/// Render a doubled midpoint as an exact decimal (`3` → `1.5`, `4` → `2.0`).
pub fn format_midpoint(doubled: i64) -> String {
    let sign = if doubled < 0 { "-" } else { "" };
    let d = doubled.unsigned_abs();
    format!("{sign}{}.{}", d / 2, if d % 2 == 1 { 5 } else { 0 })
}

fn parse_midpoint(s: &str) -> Option<usize> {
    let (whole, frac) = s.split_once('.')?;
    let whole: usize = whole.parse().ok()?;
    match frac {
        "0" => Some(whole * 2),
        "5" => Some(whole * 2 + 1),
        _ => None,
    }
}

/// One row of the rank CSV.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCsvRow {
    pub element: String,
    pub up_height: usize,
    pub down_height: usize,
    pub r_top: usize,
    pub r_bottom: usize,
    pub width: usize,
    pub centrality: usize,
    pub midpoint: String,
    pub freese: usize,
}

impl From<&RankRow> for RankCsvRow {
    fn from(r: &RankRow) -> Self {
        RankCsvRow {
            element: r.id.clone(),
            up_height: r.up_height,
            down_height: r.down_height,
            r_top: r.r_top,
            r_bottom: r.r_bottom,
            width: r.width,
            centrality: r.centrality,
            midpoint: format_midpoint(r.midpoint_doubled as i64),
            freese: r.freese,
        }
    }
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("in-memory writer does not fail");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

/// Rank table as CSV, rows ordered by `(r_top, r_bottom, element)`.
pub fn write_rank_csv(rt: &RankTable) -> String {
    let mut w = csv_writer();
    if rt.rows().is_empty() {
        w.write_record([
            "element",
            "up_height",
            "down_height",
            "r_top",
            "r_bottom",
            "width",
            "centrality",
            "midpoint",
            "freese",
        ])
        .expect("in-memory write");
    }
    for row in rt.rows_by_rank() {
        w.serialize(RankCsvRow::from(row)).expect("in-memory write");
    }
    finish(w)
}

/// Read back a rank CSV into a table. Procedural ranks, which the CSV does
/// not carry, are restored from the heights they coincide with.
pub fn parse_rank_csv(text: &str, source_name: &str) -> Result<RankTable, ParseError> {
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, rec) in reader.deserialize::<RankCsvRow>().enumerate() {
        let line = i + 2;
        let r = rec.map_err(|e| ParseError::new(source_name, line, e.to_string()))?;
        let midpoint_doubled = parse_midpoint(&r.midpoint)
            .ok_or_else(|| ParseError::new(source_name, line, "malformed midpoint"))?;
        if r.r_top > r.r_bottom || r.up_height == 0 || r.down_height == 0 {
            return Err(ParseError::new(source_name, line, "inconsistent rank row"));
        }
        rows.push(RankRow {
            id: r.element,
            synthetic: false,
            up_height: r.up_height,
            down_height: r.down_height,
            r_top: r.r_top,
            r_bottom: r.r_bottom,
            width: r.width,
            centrality: r.centrality,
            midpoint_doubled,
            freese: r.freese,
            proc_top: r.up_height - 1,
            proc_bottom: r.down_height - 1,
            precise: r.width == 0,
        });
    }
    let height = rows.iter().map(|r| r.down_height).max().unwrap_or(0);
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(RankTable::from_rows(height, rows))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportMeta {
    pub source: String,
    pub element_count: usize,
    pub height: usize,
    pub chain_count: u128,
    pub graded: bool,
    pub bottom: String,
    pub top: String,
    pub spindle: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
struct ElementEntry<'a> {
    id: &'a str,
    synthetic: bool,
    up_height: usize,
    down_height: usize,
    r_top: usize,
    r_bottom: usize,
    width: usize,
    centrality: usize,
    midpoint: f64,
    midpoint_doubled: usize,
    freese: usize,
    proc_top: usize,
    proc_bottom: usize,
    precise: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report<'a> {
    pub meta: ReportMeta,
    #[serde(serialize_with = "serialize_elements")]
    pub elements: &'a RankTable,
    pub comparisons: &'a [ComparisonRecord],
}

fn serialize_elements<S: serde::Serializer>(rt: &&RankTable, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(rt.rows().iter().map(|r| ElementEntry {
        id: &r.id,
        synthetic: r.synthetic,
        up_height: r.up_height,
        down_height: r.down_height,
        r_top: r.r_top,
        r_bottom: r.r_bottom,
        width: r.width,
        centrality: r.centrality,
        // halves are exact in binary floating point
        midpoint: r.midpoint_doubled as f64 / 2.0,
        midpoint_doubled: r.midpoint_doubled,
        freese: r.freese,
        proc_top: r.proc_top,
        proc_bottom: r.proc_bottom,
        precise: r.precise,
    }))
}

impl ReportMeta {
    pub fn from_poset(p: &Poset, source: &str) -> Self {
        ReportMeta {
            source: source.to_string(),
            element_count: p.len(),
            height: p.height(),
            chain_count: p.chain_count(),
            graded: p.is_graded(),
            bottom: p.id(p.bottom()).to_string(),
            top: p.id(p.top()).to_string(),
            spindle: p.spindle_elements().into_iter().map(String::from).collect(),
        }
    }
}

/// JSON document with `meta`, `elements` and `comparisons`; two-space
/// indentation, trailing newline.
pub fn write_report_json(
    p: &Poset,
    rt: &RankTable,
    matrix: &[ComparisonRecord],
    source: &str,
) -> String {
    let report = Report {
        meta: ReportMeta::from_poset(p, source),
        elements: rt,
        comparisons: matrix,
    };
    let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::BoundingOptions;
    use crate::rank::standard_interval_rank;

    #[test]
    fn midpoint_rendering() {
        assert_eq!(format_midpoint(3), "1.5");
        assert_eq!(format_midpoint(4), "2.0");
        assert_eq!(format_midpoint(0), "0.0");
        assert_eq!(format_midpoint(-3), "-1.5");
        assert_eq!(parse_midpoint("1.5"), Some(3));
        assert_eq!(parse_midpoint("2.25"), None);
    }

    #[test]
    fn two_element_chain_csv() {
        let p = Poset::build(&[("b", "t")], &BoundingOptions::default()).unwrap();
        let rt = standard_interval_rank(&p);
        let csv = write_rank_csv(&rt);
        assert_eq!(
            csv,
            "element,up_height,down_height,r_top,r_bottom,width,centrality,midpoint,freese\n\
             t,1,2,0,0,0,2,0.0,3\n\
             b,2,1,1,1,0,2,1.0,1\n"
        );
        let back = parse_rank_csv(&csv, "mem").unwrap();
        assert_eq!(back.rows(), rt.rows());
    }

    #[test]
    fn empty_comparisons_serialize_as_empty_array() {
        let p = Poset::build(&[("b", "t")], &BoundingOptions::default()).unwrap();
        let rt = standard_interval_rank(&p);
        let json = write_report_json(&p, &rt, &[], "mem");
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["comparisons"], serde_json::json!([]));
        assert_eq!(v["meta"]["chain_count"], 1);
        assert!(json.contains("\n  \"meta\": {"));
        assert!(json.ends_with("}\n"));
    }
}
