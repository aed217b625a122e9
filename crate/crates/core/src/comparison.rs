//! Pairwise comparison of standard rank intervals.

use serde::Serialize;

use crate::interval::{IntInterval, RelationClass};
use crate::poset::{Poset, PosetError};
use crate::rank::RankTable;

/// Comparison of `R⁺(a)` against `R⁺(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonRecord {
    pub a: String,
    pub b: String,
    pub relation: RelationClass,
    /// `R⁺(b) − R⁺(a)`.
    pub alpha: IntInterval,
    /// `‖R⁺(a), R⁺(b)‖`, except that identical rank intervals are at
    /// separation `[0,0]`.
    pub sep: IntInterval,
    pub sep_width: i64,
    /// `a ≠ b` but both carry the same rank interval.
    pub same_rank_group: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSelection {
    /// Every unordered pair, upper triangle in `(r_top, r_bottom, id)` order.
    All,
    /// Every cover edge, upper element first.
    Covers,
}

fn record(a: &str, x: IntInterval, b: &str, y: IntInterval) -> ComparisonRecord {
    let alpha = y.subtract(x);
    let relation = x.classify(&y);
    let sep = match relation {
        RelationClass::Equal => IntInterval::point(0),
        _ => alpha.abs(),
    };
    ComparisonRecord {
        a: a.to_string(),
        b: b.to_string(),
        relation,
        alpha,
        sep,
        sep_width: sep.width(),
        same_rank_group: a != b && x == y,
    }
}

pub fn compare_pair(rt: &RankTable, a: &str, b: &str) -> Result<ComparisonRecord, PosetError> {
    let x = rt.interval(a)?;
    let y = rt.interval(b)?;
    Ok(record(a, x, b, y))
}

/// Records for the selected pairs, in a deterministic order.
pub fn comparison_matrix(p: &Poset, rt: &RankTable, pairs: PairSelection) -> Vec<ComparisonRecord> {
    match pairs {
        PairSelection::All => {
            let rows = rt.rows_by_rank();
            let mut out = Vec::with_capacity(rows.len() * rows.len().saturating_sub(1) / 2);
            for (i, ra) in rows.iter().enumerate() {
                for rb in &rows[i + 1..] {
                    out.push(record(&ra.id, ra.interval(), &rb.id, rb.interval()));
                }
            }
            out
        }
        PairSelection::Covers => {
            let mut edges: Vec<(&str, &str)> = p
                .cover_edges()
                .into_iter()
                .map(|(lo, hi)| (p.id(hi), p.id(lo)))
                .collect();
            edges.sort();
            edges
                .into_iter()
                .map(|(upper, lower)| {
                    let x = rt.interval(upper).expect("table built from poset");
                    let y = rt.interval(lower).expect("table built from poset");
                    record(upper, x, lower, y)
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::BoundingOptions;
    use crate::rank::standard_interval_rank;

    fn n5() -> Poset {
        Poset::build(
            &[("⊥", "C"), ("C", "A"), ("A", "⊤"), ("⊥", "B"), ("B", "⊤")],
            &BoundingOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn self_comparison() {
        let p = n5();
        let rt = standard_interval_rank(&p);
        let r = compare_pair(&rt, "B", "B").unwrap();
        assert_eq!(r.relation, RelationClass::Equal);
        assert_eq!(r.alpha, IntInterval::new(-1, 1).unwrap());
        assert_eq!(r.sep, IntInterval::point(0));
        assert_eq!(r.sep_width, 0);
        assert!(!r.same_rank_group);
        assert!(compare_pair(&rt, "B", "Q").is_err());
    }

    #[test]
    fn n5_pairs() {
        let p = n5();
        let rt = standard_interval_rank(&p);
        // B = [1,2], A = [1,1]
        let r = compare_pair(&rt, "A", "B").unwrap();
        assert_eq!(r.relation, RelationClass::Subset);
        assert_eq!(r.alpha, IntInterval::new(0, 1).unwrap());
        let all = comparison_matrix(&p, &rt, PairSelection::All);
        assert_eq!(all.len(), 10);
        assert_eq!((all[0].a.as_str(), all[0].b.as_str()), ("⊤", "A"));
        let covers = comparison_matrix(&p, &rt, PairSelection::Covers);
        assert_eq!(covers.len(), 5);
        for c in &covers {
            assert!(p.lt_idx(p.index_of(&c.b).unwrap(), p.index_of(&c.a).unwrap()));
        }
    }
}
