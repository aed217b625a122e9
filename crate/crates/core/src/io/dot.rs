use std::collections::BTreeMap;
use std::fmt::Write;

use super::report::format_midpoint;
use crate::interval::IntInterval;
use crate::poset::Poset;
use crate::rank::RankTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoutNode {
    pub id: String,
    /// Twice the abscissa; nodes sharing a midpoint are spread one unit apart
    /// around zero.
    pub x_doubled: i64,
    /// Twice the rank midpoint.
    pub y_doubled: i64,
    pub interval: IntInterval,
    pub spindle: bool,
    pub synthetic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoutEdge {
    pub upper: String,
    pub lower: String,
    pub sep: IntInterval,
    pub sep_width: i64,
    /// Both ends precisely ranked on adjacent levels, i.e. the edge lies on a
    /// longest chain.
    pub spindle: bool,
}

/// Hasse diagram with every element placed at the midpoint of its rank
/// interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoutDocument {
    pub nodes: Vec<LayoutNode>,
    pub edges: Vec<LayoutEdge>,
}

pub fn layout_document(p: &Poset, rt: &RankTable) -> LayoutDocument {
    let mut levels: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
    for row in rt.rows() {
        levels
            .entry(row.midpoint_doubled)
            .or_default()
            .push(&row.id);
    }
    let mut x_of: BTreeMap<&str, i64> = BTreeMap::new();
    for ids in levels.values_mut() {
        ids.sort();
        let k = ids.len() as i64;
        for (i, id) in ids.iter().enumerate() {
            x_of.insert(id, 2 * i as i64 - (k - 1));
        }
    }
    let nodes = rt
        .rows()
        .iter()
        .map(|r| LayoutNode {
            id: r.id.clone(),
            x_doubled: x_of[r.id.as_str()],
            y_doubled: r.midpoint_doubled as i64,
            interval: r.interval(),
            spindle: r.width == 0,
            synthetic: r.synthetic,
        })
        .collect();

    let mut edges: Vec<LayoutEdge> = p
        .cover_edges()
        .into_iter()
        .map(|(lo, hi)| {
            let upper = rt.row(p.id(hi)).expect("table built from poset");
            let lower = rt.row(p.id(lo)).expect("table built from poset");
            let sep = lower.interval().subtract(upper.interval()).abs();
            LayoutEdge {
                upper: upper.id.clone(),
                lower: lower.id.clone(),
                sep,
                sep_width: sep.width(),
                spindle: upper.width == 0 && lower.width == 0 && lower.r_top == upper.r_top + 1,
            }
        })
        .collect();
    edges.sort_by(|a, b| (&a.upper, &a.lower).cmp(&(&b.upper, &b.lower)));
    LayoutDocument { nodes, edges }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", escape(s))
}

/// Graphviz document with pinned positions (`neato -n` compatible). The
/// vertical coordinate is the negated rank midpoint, so the top sits at 0.
pub fn write_layout_dot(p: &Poset, rt: &RankTable) -> String {
    let doc = layout_document(p, rt);
    let mut out = String::new();
    out.push_str("digraph intrank {\n");
    out.push_str("  graph [splines=false];\n");
    out.push_str("  node [shape=box];\n");
    out.push_str("  edge [dir=none];\n");
    for n in &doc.nodes {
        let mut attrs = vec![
            format!("label=\"{}\\n{}\"", escape(&n.id), n.interval),
            format!(
                "pos=\"{},{}!\"",
                format_midpoint(n.x_doubled),
                format_midpoint(-n.y_doubled)
            ),
        ];
        if n.spindle {
            attrs.push("penwidth=2".to_string());
        }
        if n.synthetic {
            attrs.push("style=dashed".to_string());
            attrs.push("synthetic=true".to_string());
        }
        writeln!(out, "  {} [{}];", quote(&n.id), attrs.join(", ")).unwrap();
    }
    for e in &doc.edges {
        let mut attrs = vec![format!("label=\"‖·‖={} W={}\"", e.sep, e.sep_width)];
        if e.spindle {
            attrs.push("style=bold".to_string());
        }
        writeln!(
            out,
            "  {} -> {} [{}];",
            quote(&e.upper),
            quote(&e.lower),
            attrs.join(", ")
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
