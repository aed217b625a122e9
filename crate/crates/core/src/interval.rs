//! Closed integer intervals, their setwise arithmetic and the three interval
//! orders (strong, weak, subset).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("malformed interval [{lo},{hi}]: lower endpoint exceeds upper endpoint")]
    MalformedInterval { lo: i64, hi: i64 },
}

/// A closed interval `[lo, hi]` of integers with `lo <= hi`.
///
/// Negative endpoints are allowed so that differences of rank intervals can
/// be represented; range checks against a poset height belong to the caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "[i64; 2]")]
pub struct IntInterval {
    lo: i64,
    hi: i64,
}

impl From<IntInterval> for [i64; 2] {
    fn from(x: IntInterval) -> Self {
        [x.lo, x.hi]
    }
}

impl TryFrom<[i64; 2]> for IntInterval {
    type Error = IntervalError;

    fn try_from([lo, hi]: [i64; 2]) -> Result<Self, Self::Error> {
        IntInterval::new(lo, hi)
    }
}

impl<'de> Deserialize<'de> for IntInterval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pair = <[i64; 2]>::deserialize(d)?;
        IntInterval::try_from(pair).map_err(serde::de::Error::custom)
    }
}

impl IntInterval {
    pub fn new(lo: i64, hi: i64) -> Result<Self, IntervalError> {
        if lo > hi {
            return Err(IntervalError::MalformedInterval { lo, hi });
        }
        Ok(IntInterval { lo, hi })
    }

    /// The degenerate interval `[v, v]`.
    pub const fn point(v: i64) -> Self {
        IntInterval { lo: v, hi: v }
    }

    pub const fn lo(&self) -> i64 {
        self.lo
    }

    pub const fn hi(&self) -> i64 {
        self.hi
    }

    pub const fn width(&self) -> i64 {
        self.hi - self.lo
    }

    /// Twice the midpoint, `lo + hi`. Kept doubled so midpoints compare exactly.
    pub const fn midpoint_doubled(&self) -> i64 {
        self.lo + self.hi
    }

    pub const fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub const fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Minkowski sum `[x_* + y_*, x^* + y^*]`.
    pub const fn add(self, other: Self) -> Self {
        IntInterval {
            lo: self.lo + other.lo,
            hi: self.hi + other.hi,
        }
    }

    /// Setwise difference `[x_* − y^*, x^* − y_*]`.
    pub const fn subtract(self, other: Self) -> Self {
        IntInterval {
            lo: self.lo - other.hi,
            hi: self.hi - other.lo,
        }
    }

    pub const fn negate(self) -> Self {
        IntInterval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    /// `{|z| : z ∈ x}` as an interval.
    pub fn abs(self) -> Self {
        let (a, b) = (self.lo.abs(), self.hi.abs());
        let lo = if self.contains(0) { 0 } else { a.min(b) };
        IntInterval { lo, hi: a.max(b) }
    }

    /// `‖x, y‖ = |x − y|`, the interval of distances between points of `x` and `y`.
    pub fn separation(self, other: Self) -> Self {
        self.subtract(other).abs()
    }

    /// Strong order: `x^* < y_*` or `x = y`.
    pub fn leq_strong(&self, other: &Self) -> bool {
        self.hi < other.lo || self == other
    }

    /// Weak order: componentwise `≤` on both endpoints.
    pub fn leq_weak(&self, other: &Self) -> bool {
        self.lo <= other.lo && self.hi <= other.hi
    }

    /// Containment `x ⊆ y`.
    pub fn subset_of(&self, other: &Self) -> bool {
        self.lo >= other.lo && self.hi <= other.hi
    }

    /// Classify the ordered pair `(self, other)` into exactly one relation.
    ///
    /// Ties on shared endpoints resolve with precedence
    /// equality > strong > containment > proper intersection.
    pub fn classify(&self, other: &Self) -> RelationClass {
        if self == other {
            RelationClass::Equal
        } else if self.hi < other.lo {
            RelationClass::StrongLt
        } else if other.hi < self.lo {
            RelationClass::StrongGt
        } else if self.subset_of(other) {
            RelationClass::Subset
        } else if other.subset_of(self) {
            RelationClass::Superset
        } else if self.leq_weak(other) {
            RelationClass::ProperLeft
        } else {
            RelationClass::ProperRight
        }
    }
}

impl fmt::Display for IntInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Which of the pairwise interval relations holds for an ordered pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationClass {
    Equal,
    StrongLt,
    StrongGt,
    Subset,
    Superset,
    /// Weakly below but overlapping.
    ProperLeft,
    /// Weakly above but overlapping.
    ProperRight,
}

impl RelationClass {
    pub const ALL: [RelationClass; 7] = [
        RelationClass::Equal,
        RelationClass::StrongLt,
        RelationClass::StrongGt,
        RelationClass::Subset,
        RelationClass::Superset,
        RelationClass::ProperLeft,
        RelationClass::ProperRight,
    ];

    pub fn symbol(&self) -> &'static str {
        match self {
            RelationClass::Equal => "=",
            RelationClass::StrongLt => "<_S",
            RelationClass::StrongGt => ">_S",
            RelationClass::Subset => "⊂",
            RelationClass::Superset => "⊃",
            RelationClass::ProperLeft => "∘_≤",
            RelationClass::ProperRight => "∘_≥",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RelationClass::Equal => "equal",
            RelationClass::StrongLt => "strong_lt",
            RelationClass::StrongGt => "strong_gt",
            RelationClass::Subset => "subset",
            RelationClass::Superset => "superset",
            RelationClass::ProperLeft => "proper_left",
            RelationClass::ProperRight => "proper_right",
        }
    }

    /// The relation obtained by swapping the pair.
    pub fn dual(&self) -> Self {
        match self {
            RelationClass::Equal => RelationClass::Equal,
            RelationClass::StrongLt => RelationClass::StrongGt,
            RelationClass::StrongGt => RelationClass::StrongLt,
            RelationClass::Subset => RelationClass::Superset,
            RelationClass::Superset => RelationClass::Subset,
            RelationClass::ProperLeft => RelationClass::ProperRight,
            RelationClass::ProperRight => RelationClass::ProperLeft,
        }
    }
}

impl fmt::Display for RelationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(lo: i64, hi: i64) -> IntInterval {
        IntInterval::new(lo, hi).unwrap()
    }

    fn points(x: IntInterval) -> impl Iterator<Item = i64> + Clone {
        x.lo()..=x.hi()
    }

    fn hull(values: impl Iterator<Item = i64>) -> IntInterval {
        let v: Vec<i64> = values.collect();
        iv(*v.iter().min().unwrap(), *v.iter().max().unwrap())
    }

    fn all_intervals(range: std::ops::RangeInclusive<i64>) -> Vec<IntInterval> {
        let mut out = Vec::new();
        for lo in range.clone() {
            for hi in lo..=*range.end() {
                out.push(iv(lo, hi));
            }
        }
        out
    }

    #[test]
    fn construction() {
        assert_eq!(iv(1, 3), IntInterval::point(1).add(iv(0, 2)));
        assert!(iv(2, 2).is_point());
        assert_eq!(
            IntInterval::new(3, 1),
            Err(IntervalError::MalformedInterval { lo: 3, hi: 1 })
        );
    }

    #[test]
    fn width_and_midpoint() {
        assert_eq!(iv(1, 3).width(), 2);
        assert_eq!(iv(2, 2).width(), 0);
        assert_eq!(iv(0, 4).width(), 4);
        assert_eq!(iv(1, 2).midpoint_doubled(), 3);
        assert_eq!(iv(2, 2).midpoint_doubled(), 4);
        assert_eq!(iv(0, 0).midpoint_doubled(), 0);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(iv(1, 2).add(iv(2, 3)), iv(3, 5));
        assert_eq!(iv(0, 0).add(iv(4, 7)), iv(4, 7));
        // brute force over {-1..2} + {-3..0}
        assert_eq!(iv(-1, 2).add(iv(-3, 0)), iv(-4, 2));
        assert_eq!(iv(1, 3).subtract(iv(1, 2)), iv(-1, 2));
        assert_eq!(iv(1, 1).subtract(iv(0, 0)), iv(1, 1));
        assert_eq!(iv(5, 5).subtract(iv(5, 5)), iv(0, 0));
        assert_eq!(iv(-1, 2).abs(), iv(0, 2));
        assert_eq!(iv(-3, -1).abs(), iv(1, 3));
        assert_eq!(iv(0, 0).abs(), iv(0, 0));
        assert_eq!(iv(1, 2).separation(iv(2, 3)), iv(0, 2));
        assert_eq!(iv(2, 2).separation(iv(3, 3)), iv(1, 1));
        assert_eq!(iv(1, 3).separation(iv(1, 3)), iv(0, 2));
    }

    #[test]
    fn order_examples() {
        assert!(iv(0, 0).leq_strong(&iv(1, 1)));
        assert!(!iv(1, 2).leq_strong(&iv(2, 3)));
        assert!(iv(1, 2).leq_strong(&iv(1, 2)));
        assert!(iv(1, 2).leq_weak(&iv(2, 3)));
        assert!(!iv(1, 3).leq_weak(&iv(2, 2)));
        assert!(iv(0, 0).leq_weak(&iv(0, 0)));
        assert!(iv(1, 1).subset_of(&iv(1, 2)));
        assert!(iv(1, 2).subset_of(&iv(1, 3)));
        assert!(!iv(0, 3).subset_of(&iv(1, 2)));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(iv(1, 1).classify(&iv(1, 2)), RelationClass::Subset);
        assert_eq!(iv(1, 2).classify(&iv(2, 2)), RelationClass::Superset);
        assert_eq!(iv(1, 2).classify(&iv(2, 3)), RelationClass::ProperLeft);
        assert_eq!(iv(2, 3).classify(&iv(1, 2)), RelationClass::ProperRight);
        assert_eq!(iv(0, 0).classify(&iv(1, 1)), RelationClass::StrongLt);
        assert_eq!(iv(4, 4).classify(&iv(1, 3)), RelationClass::StrongGt);
        assert_eq!(iv(2, 3).classify(&iv(2, 3)), RelationClass::Equal);
    }

    #[test]
    fn exhaustive_setwise_oracle() {
        let all = all_intervals(-5..=5);
        for &x in &all {
            let abs_oracle = hull(points(x).map(i64::abs));
            assert_eq!(x.abs(), abs_oracle, "abs {x}");
            assert_eq!(x.abs().lo() == 0, x.contains(0));
            for &y in &all {
                let px = points(x);
                let py = points(y);
                let sum = hull(px.clone().flat_map(|a| py.clone().map(move |b| a + b)));
                let diff = hull(px.clone().flat_map(|a| py.clone().map(move |b| a - b)));
                let sep = hull(px.flat_map(|a| py.clone().map(move |b| (a - b).abs())));
                assert_eq!(x.add(y), sum);
                assert_eq!(x.subtract(y), diff);
                assert_eq!(x.separation(y), sep);
                assert_eq!(x.separation(y), y.separation(x));
                assert_eq!(y.classify(&x), x.classify(&y).dual());
            }
        }
    }

    prop_compose! {
        fn interval()(a in -20i64..20, b in -20i64..20) -> IntInterval {
            iv(a.min(b), a.max(b))
        }
    }

    proptest! {
        #[test]
        fn strong_implies_weak(x in interval(), y in interval()) {
            if x.leq_strong(&y) && x != y {
                prop_assert!(x.leq_weak(&y));
            }
        }

        #[test]
        fn separation_symmetric(x in interval(), y in interval()) {
            prop_assert_eq!(x.separation(y), y.separation(x));
        }

        #[test]
        fn proper_containment_is_weakly_incomparable(x in interval(), y in interval()) {
            if y.lo() < x.lo() && x.hi() < y.hi() {
                prop_assert!(!x.leq_weak(&y) && !y.leq_weak(&x));
            }
        }

        #[test]
        fn classify_is_consistent_with_orders(x in interval(), y in interval()) {
            let rel = x.classify(&y);
            match rel {
                RelationClass::Equal => prop_assert_eq!(x, y),
                RelationClass::StrongLt => prop_assert!(x.leq_strong(&y)),
                RelationClass::StrongGt => prop_assert!(y.leq_strong(&x)),
                RelationClass::Subset => prop_assert!(x.subset_of(&y)),
                RelationClass::Superset => prop_assert!(y.subset_of(&x)),
                RelationClass::ProperLeft => prop_assert!(x.leq_weak(&y) && !x.leq_strong(&y)),
                RelationClass::ProperRight => prop_assert!(y.leq_weak(&x) && !y.leq_strong(&x)),
            }
        }
    }
}
