//! Interval rank functions.
//!
//! The standard interval rank of `a` is `R⁺(a) = [h(↑a) − 1, h − h(↓a)]`,
//! the top rank and bottom rank of `a`. Both endpoints are strictly antitone,
//! so `R⁺` maps the poset into the dual weak interval order with `⊤ ↦ [0,0]`
//! and `⊥ ↦ [h−1, h−1]`, and it contains every other strict rank function of
//! that kind elementwise.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::interval::IntInterval;
use crate::poset::{Poset, PosetError};

pub const DEFAULT_MAX_ENUM_ELEMENTS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("rank assignment is missing element(s): {}", .missing.join(", "))]
    IncompleteAssignment { missing: Vec<String> },
    #[error("poset has {size} elements, enumeration is limited to {max}")]
    PosetTooLarge { size: usize, max: usize },
}

/// The interval order a rank assignment is meant to respect, in the
/// direction `a < b ⟹ R(a) ⊏ R(b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderTag {
    Weak,
    WeakDual,
    Strong,
    StrongDual,
    Subset,
    Superset,
}

impl OrderTag {
    pub const ALL: [OrderTag; 6] = [
        OrderTag::Weak,
        OrderTag::WeakDual,
        OrderTag::Strong,
        OrderTag::StrongDual,
        OrderTag::Subset,
        OrderTag::Superset,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            OrderTag::Weak => "weak",
            OrderTag::WeakDual => "weak-dual",
            OrderTag::Strong => "strong",
            OrderTag::StrongDual => "strong-dual",
            OrderTag::Subset => "subset",
            OrderTag::Superset => "superset",
        }
    }

    /// `R(a) ⊏ R(b)`: the order holds and the intervals differ.
    pub fn strictly_below(&self, x: &IntInterval, y: &IntInterval) -> bool {
        if x == y {
            return false;
        }
        match self {
            OrderTag::Weak => x.leq_weak(y),
            OrderTag::WeakDual => y.leq_weak(x),
            OrderTag::Strong => x.hi() < y.lo(),
            OrderTag::StrongDual => y.hi() < x.lo(),
            OrderTag::Subset => x.subset_of(y),
            OrderTag::Superset => y.subset_of(x),
        }
    }

    /// Required strict direction of each endpoint along `a < b`:
    /// `(lower endpoint increases, upper endpoint increases)`.
    ///
    /// The strong orders only imply these directions; they are not
    /// characterized by them.
    pub fn endpoint_directions(&self) -> (bool, bool) {
        match self {
            OrderTag::Weak | OrderTag::Strong => (true, true),
            OrderTag::WeakDual | OrderTag::StrongDual => (false, false),
            OrderTag::Subset => (false, true),
            OrderTag::Superset => (true, false),
        }
    }
}

impl fmt::Display for OrderTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OrderTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        OrderTag::ALL
            .into_iter()
            .find(|t| t.as_str() == norm)
            .ok_or_else(|| {
                format!(
                    "unknown order {s:?}; expected one of weak, weak-dual, strong, strong-dual, subset, superset"
                )
            })
    }
}

/// Per-element rank statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankRow {
    pub id: String,
    pub synthetic: bool,
    pub up_height: usize,
    pub down_height: usize,
    pub r_top: usize,
    pub r_bottom: usize,
    pub width: usize,
    pub centrality: usize,
    pub midpoint_doubled: usize,
    pub freese: usize,
    pub proc_top: usize,
    pub proc_bottom: usize,
    pub precise: bool,
}

impl RankRow {
    pub fn interval(&self) -> IntInterval {
        IntInterval::new(self.r_top as i64, self.r_bottom as i64)
            .expect("top rank never exceeds bottom rank")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    height: usize,
    rows: Vec<RankRow>,
    index: BTreeMap<String, usize>,
}

impl RankTable {
    /// Assemble a table from rows; row order is kept as element order.
    pub fn from_rows(height: usize, rows: Vec<RankRow>) -> Self {
        let index = rows
            .iter()
            .enumerate()
            .map(|(i, r)| (r.id.clone(), i))
            .collect();
        RankTable {
            height,
            rows,
            index,
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Rows in element order (lexicographic by id for tables built from a poset).
    pub fn rows(&self) -> &[RankRow] {
        &self.rows
    }

    pub fn row(&self, id: &str) -> Result<&RankRow, PosetError> {
        self.index
            .get(id)
            .map(|&i| &self.rows[i])
            .ok_or_else(|| PosetError::UnknownElement(id.to_string()))
    }

    pub fn interval(&self, id: &str) -> Result<IntInterval, PosetError> {
        self.row(id).map(RankRow::interval)
    }

    /// Rows ordered by `(r_top, r_bottom, id)`: top of the hierarchy first.
    pub fn rows_by_rank(&self) -> Vec<&RankRow> {
        let mut rows: Vec<&RankRow> = self.rows.iter().collect();
        rows.sort_by(|a, b| (a.r_top, a.r_bottom, &a.id).cmp(&(b.r_top, b.r_bottom, &b.id)));
        rows
    }

    /// Number of elements of each width, indexed by width.
    pub fn width_histogram(&self) -> Vec<usize> {
        let max = self.rows.iter().map(|r| r.width).max().unwrap_or(0);
        let mut hist = vec![0; max + 1];
        for r in &self.rows {
            hist[r.width] += 1;
        }
        hist
    }
}

/// Compute `R⁺` together with centrality, midpoint, Freese and procedural ranks.
pub fn standard_interval_rank(p: &Poset) -> RankTable {
    let h = p.height();
    let proc_top = procedural_rank_top(p);
    let proc_bottom = procedural_rank_bottom(p);
    let rows = (0..p.len())
        .map(|a| {
            let up = p.up_height_idx(a);
            let down = p.down_height_idx(a);
            let r_top = up - 1;
            let r_bottom = h - down;
            RankRow {
                id: p.id(a).to_string(),
                synthetic: p.is_synthetic(a),
                up_height: up,
                down_height: down,
                r_top,
                r_bottom,
                width: r_bottom - r_top,
                centrality: up + down - 1,
                midpoint_doubled: r_top + r_bottom,
                freese: h + down - up,
                proc_top: proc_top[a],
                proc_bottom: proc_bottom[a],
                precise: r_top == r_bottom,
            }
        })
        .collect();
    RankTable::from_rows(h, rows)
}

/// Freese's scalar rank `h + h(↓a) − h(↑a)`.
pub fn freese_rank(p: &Poset, a: &str) -> Result<usize, PosetError> {
    let i = p.index_of(a)?;
    Ok(p.height() + p.down_height_idx(i) - p.up_height_idx(i))
}

/// Layer index when maximal elements are sliced off one layer at a time.
/// Indexed by element.
pub fn procedural_rank_top(p: &Poset) -> Vec<usize> {
    peel(p.len(), |a| p.upper_covers(a), |a| p.lower_covers(a))
}

/// Layer index when minimal elements are sliced off one layer at a time.
/// Indexed by element.
pub fn procedural_rank_bottom(p: &Poset) -> Vec<usize> {
    peel(p.len(), |a| p.lower_covers(a), |a| p.upper_covers(a))
}

fn peel<'a>(
    n: usize,
    blockers: impl Fn(usize) -> &'a [usize],
    released: impl Fn(usize) -> &'a [usize],
) -> Vec<usize> {
    let mut remaining: Vec<usize> = (0..n).map(|a| blockers(a).len()).collect();
    let mut rank = vec![usize::MAX; n];
    let mut layer: Vec<usize> = (0..n).filter(|&a| remaining[a] == 0).collect();
    let mut k = 0;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &a in &layer {
            rank[a] = k;
            for &c in released(a) {
                remaining[c] -= 1;
                if remaining[c] == 0 {
                    next.push(c);
                }
            }
        }
        layer = next;
        k += 1;
    }
    rank
}

/// An interval per element, tagged with the order it should respect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankAssignment {
    pub order_tag: OrderTag,
    pub intervals: BTreeMap<String, IntInterval>,
}

impl RankAssignment {
    pub fn new(order_tag: OrderTag, intervals: BTreeMap<String, IntInterval>) -> Self {
        RankAssignment {
            order_tag,
            intervals,
        }
    }

    pub fn get(&self, id: &str) -> Option<IntInterval> {
        self.intervals.get(id).copied()
    }
}

/// `R̃(a) = [r̃_*(a), h − r̃^*(a) − 1]`, tagged for the dual weak order.
pub fn procedural_interval_rank(p: &Poset) -> RankAssignment {
    let h = p.height() as i64;
    let top = procedural_rank_top(p);
    let bottom = procedural_rank_bottom(p);
    let intervals = (0..p.len())
        .map(|a| {
            let iv = IntInterval::new(top[a] as i64, h - bottom[a] as i64 - 1)
                .expect("peeling layers fit inside the height");
            (p.id(a).to_string(), iv)
        })
        .collect();
    RankAssignment::new(OrderTag::WeakDual, intervals)
}

/// Standard ranks as an assignment for the dual weak order.
pub fn standard_assignment(rt: &RankTable) -> RankAssignment {
    let intervals = rt
        .rows()
        .iter()
        .map(|r| (r.id.clone(), r.interval()))
        .collect();
    RankAssignment::new(OrderTag::WeakDual, intervals)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// `R(a) ⊏ R(b)` fails.
    Relation,
    /// The lower endpoint does not move strictly in the required direction.
    LowerEndpoint,
    /// The upper endpoint does not move strictly in the required direction.
    UpperEndpoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// The smaller element of the pair.
    pub lower: String,
    pub upper: String,
    pub kind: ViolationKind,
    pub lower_interval: IntInterval,
    pub upper_interval: IntInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub order_tag: OrderTag,
    pub strict: bool,
    pub checked_pairs: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn pair_violations(
    tag: OrderTag,
    strict: bool,
    x: &IntInterval,
    y: &IntInterval,
) -> impl Iterator<Item = ViolationKind> {
    let relation = !tag.strictly_below(x, y);
    let (lo_up, hi_up) = tag.endpoint_directions();
    let moves = |a: i64, b: i64, up: bool| if up { a < b } else { a > b };
    let lower = strict && !moves(x.lo(), y.lo(), lo_up);
    let upper = strict && !moves(x.hi(), y.hi(), hi_up);
    [
        (relation, ViolationKind::Relation),
        (lower, ViolationKind::LowerEndpoint),
        (upper, ViolationKind::UpperEndpoint),
    ]
    .into_iter()
    .filter_map(|(bad, kind)| bad.then_some(kind))
}

fn assignment_vector(p: &Poset, ra: &RankAssignment) -> Result<Vec<IntInterval>, RankError> {
    for id in ra.intervals.keys() {
        p.index_of(id)?;
    }
    let missing: Vec<String> = p
        .ids()
        .iter()
        .filter(|id| !ra.intervals.contains_key(id.as_str()))
        .cloned()
        .collect();
    if !missing.is_empty() {
        return Err(RankError::IncompleteAssignment { missing });
    }
    Ok(p.ids().iter().map(|id| ra.intervals[id.as_str()]).collect())
}

/// Check that `ra` is a strict order homomorphism into its tagged interval
/// order over every comparable pair `a < b`, and with `strict` also that
/// both endpoint functions are strictly monotone in the tagged direction.
/// All violations are reported.
pub fn validate_rank_assignment(
    p: &Poset,
    ra: &RankAssignment,
    strict: bool,
) -> Result<ValidationReport, RankError> {
    let values = assignment_vector(p, ra)?;
    let mut checked = 0;
    let mut violations = Vec::new();
    for a in 0..p.len() {
        for &b in p.up_idx(a) {
            if a == b {
                continue;
            }
            checked += 1;
            for kind in pair_violations(ra.order_tag, strict, &values[a], &values[b]) {
                violations.push(Violation {
                    lower: p.id(a).to_string(),
                    upper: p.id(b).to_string(),
                    kind,
                    lower_interval: values[a],
                    upper_interval: values[b],
                });
            }
        }
    }
    Ok(ValidationReport {
        order_tag: ra.order_tag,
        strict,
        checked_pairs: checked,
        violations,
    })
}

/// Every assignment of intervals inside `[0, h−1]` that passes strict
/// validation for `order_tag`, in lexicographic order of the interval
/// sequence over element ids.
pub fn enumerate_strict_rank_functions(
    p: &Poset,
    order_tag: OrderTag,
    max_elements: usize,
) -> Result<Vec<RankAssignment>, RankError> {
    if p.len() > max_elements {
        return Err(RankError::PosetTooLarge {
            size: p.len(),
            max: max_elements,
        });
    }
    let top = p.height() as i64 - 1;
    let candidates: Vec<IntInterval> = (0..=top)
        .flat_map(|lo| (lo..=top).map(move |hi| IntInterval::new(lo, hi).unwrap()))
        .collect();

    // Search top-down so each element meets its assigned comparables early.
    let order = p.top_down_order();
    let mut comparable_before: Vec<Vec<usize>> = Vec::with_capacity(order.len());
    for (k, &a) in order.iter().enumerate() {
        comparable_before.push(
            order[..k]
                .iter()
                .copied()
                .filter(|&b| p.leq_idx(a, b) || p.leq_idx(b, a))
                .collect(),
        );
    }

    let n = p.len();
    let mut current: Vec<Option<IntInterval>> = vec![None; n];
    let mut found: Vec<Vec<IntInterval>> = Vec::new();
    let mut choice = vec![0usize; n];
    let mut depth = 0usize;
    loop {
        if depth == n {
            found.push(current.iter().map(|c| c.expect("complete")).collect());
            depth -= 1;
            current[order[depth]] = None;
            choice[depth] += 1;
            continue;
        }
        let a = order[depth];
        let mut placed = false;
        while choice[depth] < candidates.len() {
            let cand = candidates[choice[depth]];
            let ok = comparable_before[depth].iter().all(|&b| {
                let other = current[b].expect("assigned earlier");
                let (lower, upper) = if p.leq_idx(a, b) {
                    (cand, other)
                } else {
                    (other, cand)
                };
                pair_violations(order_tag, true, &lower, &upper)
                    .next()
                    .is_none()
            });
            if ok {
                current[a] = Some(cand);
                placed = true;
                break;
            }
            choice[depth] += 1;
        }
        if placed {
            depth += 1;
            if depth < n {
                choice[depth] = 0;
            }
        } else {
            if depth == 0 {
                break;
            }
            depth -= 1;
            current[order[depth]] = None;
            choice[depth] += 1;
        }
    }

    found.sort();
    Ok(found
        .into_iter()
        .map(|values| {
            let intervals = values
                .into_iter()
                .enumerate()
                .map(|(i, iv)| (p.id(i).to_string(), iv))
                .collect();
            RankAssignment::new(order_tag, intervals)
        })
        .collect())
}

/// The classical rank function `ρ` (with `ρ(⊤) = 0`, decreasing by one up
/// every cover) when the poset is graded. Indexed by element.
pub fn classical_rank(p: &Poset) -> Option<Vec<usize>> {
    if !p.is_graded() {
        return None;
    }
    Some((0..p.len()).map(|a| p.up_height_idx(a) - 1).collect())
}
