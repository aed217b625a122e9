//! Finite bounded posets built from DAG edge lists.
//!
//! Edges are `(child, parent)` pairs asserting `child < parent`. Construction
//! takes the reflexive-transitive closure, adds a synthetic bottom and top
//! when the data has several minimal or maximal elements, and keeps the
//! transitive reduction (the Hasse diagram) as the cover relation.
//!
//! Elements are indexed in lexicographic order of their ids, so every list
//! this module returns is already sorted by id.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

pub const DEFAULT_BOTTOM: &str = "_BOT_";
pub const DEFAULT_TOP: &str = "_TOP_";
pub const DEFAULT_CHAIN_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("edge list is empty")]
    EmptyInput,
    #[error("edge {index} has an empty element id")]
    EmptyId { index: usize },
    #[error("cycle detected: {}", .cycle.join(" < "))]
    CycleDetected { cycle: Vec<String> },
    #[error("poset has {size} element(s); at least 2 are required")]
    TooSmall { size: usize },
    #[error("synthetic bound id {0:?} collides with an element id")]
    DuplicateId(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("{a:?} is not below {b:?}")]
    NotComparable { a: String, b: String },
}

/// Names used for synthetic bounds when the input has no unique minimum or
/// maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundingOptions {
    pub bottom_name: String,
    pub top_name: String,
}

impl Default for BoundingOptions {
    fn default() -> Self {
        BoundingOptions {
            bottom_name: DEFAULT_BOTTOM.to_string(),
            top_name: DEFAULT_TOP.to_string(),
        }
    }
}

/// Maximal chains of a bounded poset, each listed from bottom to top as
/// element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSet {
    pub chains: Vec<Vec<usize>>,
    /// Exact number of maximal chains (saturating at `u128::MAX`), also when
    /// `chains` was truncated.
    pub count: u128,
    pub truncated: bool,
}

impl ChainSet {
    pub fn chain_ids<'p>(&self, poset: &'p Poset) -> Vec<Vec<&'p str>> {
        self.chains
            .iter()
            .map(|c| c.iter().map(|&i| poset.id(i)).collect())
            .collect()
    }
}

/// A finite bounded poset with cached closure, covers and heights.
#[derive(Debug, Clone)]
pub struct Poset {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    synthetic: Vec<bool>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    up_height: Vec<usize>,
    down_height: Vec<usize>,
    bottom: usize,
    top: usize,
    height: usize,
}

impl Poset {
    /// Build a bounded poset from `(child, parent)` edges.
    ///
    /// Duplicate and transitive edges are accepted and absorbed. Self-loops
    /// and longer cycles are rejected.
    pub fn build<S: AsRef<str>>(
        edges: &[(S, S)],
        options: &BoundingOptions,
    ) -> Result<Poset, PosetError> {
        if edges.is_empty() {
            return Err(PosetError::EmptyInput);
        }
        let mut names: Vec<String> = Vec::new();
        for (i, (c, p)) in edges.iter().enumerate() {
            let (c, p) = (c.as_ref(), p.as_ref());
            if c.is_empty() || p.is_empty() {
                return Err(PosetError::EmptyId { index: i });
            }
            if c == p {
                return Err(PosetError::CycleDetected {
                    cycle: vec![c.to_string(), c.to_string()],
                });
            }
            names.push(c.to_string());
            names.push(p.to_string());
        }
        names.sort();
        names.dedup();

        let lookup: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let n = names.len();
        let mut parents: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (c, p) in edges {
            let (c, p) = (lookup[c.as_ref()], lookup[p.as_ref()]);
            parents[c].push(p);
            children[p].push(c);
        }
        for list in parents.iter_mut().chain(children.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        if let Some(cycle) = find_cycle(&parents, &children) {
            return Err(PosetError::CycleDetected {
                cycle: cycle.into_iter().map(|i| names[i].clone()).collect(),
            });
        }

        let minimal: Vec<usize> = (0..n).filter(|&i| children[i].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| parents[i].is_empty()).collect();

        // Re-express edges over final names, adding synthetic bounds if needed.
        let mut final_edges: Vec<(String, String)> = Vec::new();
        for (c, ps) in parents.iter().enumerate() {
            for &p in ps {
                final_edges.push((names[c].clone(), names[p].clone()));
            }
        }
        let mut synthetic_names: HashSet<String> = HashSet::new();
        if minimal.len() > 1 {
            if lookup.contains_key(options.bottom_name.as_str()) {
                return Err(PosetError::DuplicateId(options.bottom_name.clone()));
            }
            for &m in &minimal {
                final_edges.push((options.bottom_name.clone(), names[m].clone()));
            }
            synthetic_names.insert(options.bottom_name.clone());
        }
        if maximal.len() > 1 {
            if lookup.contains_key(options.top_name.as_str())
                || synthetic_names.contains(&options.top_name)
            {
                return Err(PosetError::DuplicateId(options.top_name.clone()));
            }
            for &m in &maximal {
                final_edges.push((names[m].clone(), options.top_name.clone()));
            }
            synthetic_names.insert(options.top_name.clone());
        }
        let mut ids = names;
        ids.extend(synthetic_names.iter().cloned());
        ids.sort();
        Self::from_acyclic(ids, &final_edges, &synthetic_names)
    }

    fn from_acyclic(
        ids: Vec<String>,
        edges: &[(String, String)],
        synthetic_names: &HashSet<String>,
    ) -> Result<Poset, PosetError> {
        let n = ids.len();
        if n < 2 {
            return Err(PosetError::TooSmall { size: n });
        }
        let index: HashMap<String, usize> = ids
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let mut parents: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (c, p) in edges {
            parents[index[c]].push(index[p]);
            children[index[p]].push(index[c]);
        }
        for list in parents.iter_mut().chain(children.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }

        let top_down = topo_from_top(&parents, &children);

        // up(a) = {a} ∪ ⋃ up(p), filled top-down.
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut stamp = vec![usize::MAX; n];
        for &a in &top_down {
            let mut set = vec![a];
            stamp[a] = a;
            for &p in &parents[a] {
                for &x in &up[p] {
                    if stamp[x] != a {
                        stamp[x] = a;
                        set.push(x);
                    }
                }
            }
            set.sort_unstable();
            up[a] = set;
        }

        // An input edge a -> p is a cover unless p lies strictly above some
        // other parent of a.
        let mut upper_covers: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut lower_covers: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut above = vec![usize::MAX; n];
        for a in 0..n {
            for &q in &parents[a] {
                for &x in &up[q] {
                    if x != q {
                        above[x] = a;
                    }
                }
            }
            for &p in &parents[a] {
                if above[p] != a {
                    upper_covers[a].push(p);
                    lower_covers[p].push(a);
                }
            }
        }

        let mut down: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, ups) in up.iter().enumerate() {
            for &b in ups {
                down[b].push(a);
            }
        }

        let mut up_height = vec![1usize; n];
        for &a in &top_down {
            if let Some(h) = upper_covers[a].iter().map(|&b| up_height[b]).max() {
                up_height[a] = h + 1;
            }
        }
        let mut down_height = vec![1usize; n];
        for &a in top_down.iter().rev() {
            if let Some(h) = lower_covers[a].iter().map(|&b| down_height[b]).max() {
                down_height[a] = h + 1;
            }
        }

        let bottom = (0..n)
            .find(|&i| lower_covers[i].is_empty())
            .expect("acyclic input has a minimal element");
        let top = (0..n)
            .find(|&i| upper_covers[i].is_empty())
            .expect("acyclic input has a maximal element");
        debug_assert_eq!(up[bottom].len(), n);
        debug_assert_eq!(down[top].len(), n);
        let height = up_height[bottom];
        let synthetic = ids.iter().map(|s| synthetic_names.contains(s)).collect();

        Ok(Poset {
            ids,
            index,
            synthetic,
            upper_covers,
            lower_covers,
            up,
            down,
            up_height,
            down_height,
            bottom,
            top,
            height,
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Result<usize, PosetError> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| PosetError::UnknownElement(id.to_string()))
    }

    pub fn is_synthetic(&self, i: usize) -> bool {
        self.synthetic[i]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Size of the largest chain.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Elements covering `i`, sorted.
    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    /// Elements covered by `i`, sorted.
    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    /// All cover pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .upper_covers
            .iter()
            .enumerate()
            .flat_map(|(a, bs)| bs.iter().map(move |&b| (a, b)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn leq_idx(&self, a: usize, b: usize) -> bool {
        self.up[a].binary_search(&b).is_ok()
    }

    pub fn lt_idx(&self, a: usize, b: usize) -> bool {
        a != b && self.leq_idx(a, b)
    }

    pub fn leq(&self, a: &str, b: &str) -> Result<bool, PosetError> {
        Ok(self.leq_idx(self.index_of(a)?, self.index_of(b)?))
    }

    /// `↑a` as sorted indices.
    pub fn up_idx(&self, a: usize) -> &[usize] {
        &self.up[a]
    }

    /// `↓a` as sorted indices.
    pub fn down_idx(&self, a: usize) -> &[usize] {
        &self.down[a]
    }

    pub fn up_set(&self, a: &str) -> Result<Vec<&str>, PosetError> {
        let a = self.index_of(a)?;
        Ok(self.names(&self.up[a]))
    }

    pub fn down_set(&self, a: &str) -> Result<Vec<&str>, PosetError> {
        let a = self.index_of(a)?;
        Ok(self.names(&self.down[a]))
    }

    /// `Ξ(a) = ↑a ∪ ↓a`.
    pub fn hourglass(&self, a: &str) -> Result<Vec<&str>, PosetError> {
        let a = self.index_of(a)?;
        let mut set: Vec<usize> = self.up[a].iter().chain(&self.down[a]).copied().collect();
        set.sort_unstable();
        set.dedup();
        Ok(self.names(&set))
    }

    /// `[a, b] = ↑a ∩ ↓b`, defined only for `a ≤ b`.
    pub fn order_interval(&self, a: &str, b: &str) -> Result<Vec<&str>, PosetError> {
        let (ai, bi) = (self.index_of(a)?, self.index_of(b)?);
        if !self.leq_idx(ai, bi) {
            return Err(PosetError::NotComparable {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        let set: Vec<usize> = self.up[ai]
            .iter()
            .copied()
            .filter(|&c| self.leq_idx(c, bi))
            .collect();
        Ok(self.names(&set))
    }

    pub fn up_height_idx(&self, a: usize) -> usize {
        self.up_height[a]
    }

    pub fn down_height_idx(&self, a: usize) -> usize {
        self.down_height[a]
    }

    /// `h(↑a)`: size of the largest chain from `a` to the top.
    pub fn up_height(&self, a: &str) -> Result<usize, PosetError> {
        Ok(self.up_height[self.index_of(a)?])
    }

    /// `h(↓a)`: size of the largest chain from the bottom to `a`.
    pub fn down_height(&self, a: &str) -> Result<usize, PosetError> {
        Ok(self.down_height[self.index_of(a)?])
    }

    pub fn centrality_idx(&self, a: usize) -> usize {
        self.up_height[a] + self.down_height[a] - 1
    }

    /// `S(a) = h(↑a) + h(↓a) − 1`, the length of the longest chain through `a`.
    pub fn centrality(&self, a: &str) -> Result<usize, PosetError> {
        Ok(self.centrality_idx(self.index_of(a)?))
    }

    /// Number of maximal (bottom-to-top) chains, by path counting over covers.
    pub fn chain_count(&self) -> u128 {
        let mut paths = vec![0u128; self.len()];
        paths[self.top] = 1;
        for &a in &self.top_down_order() {
            if a == self.top {
                continue;
            }
            paths[a] = self.upper_covers[a]
                .iter()
                .fold(0u128, |acc, &b| acc.saturating_add(paths[b]));
        }
        paths[self.bottom]
    }

    /// Enumerate maximal chains depth-first, stopping after `cap` chains.
    pub fn maximal_chains(&self, cap: usize) -> ChainSet {
        let count = self.chain_count();
        let mut chains = Vec::new();
        let mut truncated = false;
        // Stack of (element, position of next upper cover to try).
        let mut path: Vec<usize> = vec![self.bottom];
        let mut cursor: Vec<usize> = vec![0];
        while let Some(&node) = path.last() {
            if node == self.top {
                if chains.len() == cap {
                    truncated = true;
                    break;
                }
                chains.push(path.clone());
                path.pop();
                cursor.pop();
                continue;
            }
            let pos = cursor.last_mut().expect("cursor tracks path");
            if let Some(&next) = self.upper_covers[node].get(*pos) {
                *pos += 1;
                path.push(next);
                cursor.push(0);
            } else {
                path.pop();
                cursor.pop();
            }
        }
        ChainSet {
            chains,
            count,
            truncated,
        }
    }

    pub fn is_spindle_idx(&self, a: usize) -> bool {
        self.centrality_idx(a) == self.height
    }

    /// Elements lying on at least one maximum-length chain.
    pub fn spindle_elements(&self) -> Vec<&str> {
        (0..self.len())
            .filter(|&a| self.is_spindle_idx(a))
            .map(|a| self.id(a))
            .collect()
    }

    /// Graded (equivalently Jordan–Dedekind) iff every element is a spindle element.
    pub fn is_graded(&self) -> bool {
        (0..self.len()).all(|a| self.is_spindle_idx(a))
    }

    pub fn is_jordan_dedekind(&self) -> bool {
        self.is_graded()
    }

    /// Elements ordered so that every element comes after all elements above it.
    pub fn top_down_order(&self) -> Vec<usize> {
        topo_from_top(&self.upper_covers, &self.lower_covers)
    }

    fn names(&self, set: &[usize]) -> Vec<&str> {
        set.iter().map(|&i| self.id(i)).collect()
    }
}

/// Kahn's algorithm from the maximal elements downward.
fn topo_from_top(parents: &[Vec<usize>], children: &[Vec<usize>]) -> Vec<usize> {
    let n = parents.len();
    let mut pending: Vec<usize> = parents.iter().map(Vec::len).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&i| pending[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    let mut head = 0;
    while head < queue.len() {
        let a = queue[head];
        head += 1;
        order.push(a);
        for &c in &children[a] {
            pending[c] -= 1;
            if pending[c] == 0 {
                queue.push(c);
            }
        }
    }
    order
}

/// Returns a cycle `x0 < x1 < ... < x0` if the edge relation has one.
fn find_cycle(parents: &[Vec<usize>], children: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = parents.len();
    let order = topo_from_top(parents, children);
    if order.len() == n {
        return None;
    }
    let mut placed = vec![false; n];
    for &a in &order {
        placed[a] = true;
    }
    // Every unplaced element has an unplaced parent; walk until a repeat.
    let start = (0..n).find(|&i| !placed[i])?;
    let mut seen_at: HashMap<usize, usize> = HashMap::new();
    let mut walk = vec![start];
    let mut cur = start;
    loop {
        seen_at.insert(cur, walk.len() - 1);
        cur = *parents[cur].iter().find(|&&p| !placed[p])?;
        if let Some(&pos) = seen_at.get(&cur) {
            let mut cycle = walk[pos..].to_vec();
            cycle.push(cur);
            return Some(cycle);
        }
        walk.push(cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n5() -> Poset {
        let edges = [("⊥", "C"), ("C", "A"), ("A", "⊤"), ("⊥", "B"), ("B", "⊤")];
        Poset::build(&edges, &BoundingOptions::default()).unwrap()
    }

    #[test]
    fn n5_structure() {
        let p = n5();
        assert_eq!(p.len(), 5);
        assert_eq!(p.height(), 4);
        let covers: Vec<(&str, &str)> = p
            .cover_edges()
            .into_iter()
            .map(|(a, b)| (p.id(a), p.id(b)))
            .collect();
        assert_eq!(
            covers,
            vec![("A", "⊤"), ("B", "⊤"), ("C", "A"), ("⊥", "B"), ("⊥", "C")]
        );
        assert_eq!(p.hourglass("B").unwrap(), vec!["B", "⊤", "⊥"]);
        assert_eq!(p.spindle_elements(), vec!["A", "C", "⊤", "⊥"]);
        assert!(!p.is_graded());
        let chains = p.maximal_chains(10);
        assert_eq!(chains.count, 2);
        assert!(!chains.truncated);
        assert_eq!(
            chains.chain_ids(&p),
            vec![vec!["⊥", "B", "⊤"], vec!["⊥", "C", "A", "⊤"]]
        );
    }

    #[test]
    fn rejects_cycles() {
        let err = Poset::build(&[("a", "b"), ("b", "a")], &BoundingOptions::default());
        assert!(matches!(err, Err(PosetError::CycleDetected { .. })));
        let err = Poset::build(&[("a", "a")], &BoundingOptions::default());
        assert!(matches!(err, Err(PosetError::CycleDetected { .. })));
        let err = Poset::build(
            &[("x", "a"), ("a", "b"), ("b", "c"), ("c", "a")],
            &BoundingOptions::default(),
        )
        .unwrap_err();
        match err {
            PosetError::CycleDetected { cycle } => {
                assert_eq!(cycle.first(), cycle.last());
                assert_eq!(cycle.len(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn adds_synthetic_bounds() {
        let p = Poset::build(
            &[("a", "r"), ("b", "r"), ("c", "s")],
            &BoundingOptions::default(),
        )
        .unwrap();
        assert_eq!(p.id(p.bottom()), DEFAULT_BOTTOM);
        assert_eq!(p.id(p.top()), DEFAULT_TOP);
        assert!(p.is_synthetic(p.bottom()) && p.is_synthetic(p.top()));
        assert!(!p.is_synthetic(p.index_of("a").unwrap()));
        assert_eq!(p.len(), 7);
        assert_eq!(p.height(), 4);
    }

    #[test]
    fn synthetic_name_collision() {
        let opts = BoundingOptions {
            bottom_name: "a".into(),
            top_name: "T".into(),
        };
        let err = Poset::build(&[("a", "r"), ("b", "r")], &opts).unwrap_err();
        assert_eq!(err, PosetError::DuplicateId("a".into()));
    }

    #[test]
    fn absorbs_transitive_and_duplicate_edges() {
        let p = Poset::build(
            &[("a", "b"), ("b", "c"), ("a", "c"), ("a", "b")],
            &BoundingOptions::default(),
        )
        .unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.cover_edges().len(), 2);
        assert!(p.is_graded());
        assert_eq!(p.maximal_chains(5).count, 1);
    }

    #[test]
    fn queries_and_errors() {
        let p = n5();
        assert!(p.leq("⊥", "⊤").unwrap());
        assert!(!p.leq("B", "A").unwrap());
        assert_eq!(p.up_set("⊤").unwrap(), vec!["⊤"]);
        assert_eq!(p.order_interval("C", "C").unwrap(), vec!["C"]);
        assert!(matches!(
            p.order_interval("B", "C"),
            Err(PosetError::NotComparable { .. })
        ));
        assert!(matches!(p.up_set("Z"), Err(PosetError::UnknownElement(_))));
        assert_eq!(p.centrality("⊤").unwrap(), p.height());
        assert_eq!(p.up_height("⊤").unwrap(), 1);
        assert_eq!(
            Poset::build::<&str>(&[], &BoundingOptions::default()).unwrap_err(),
            PosetError::EmptyInput
        );
        assert_eq!(
            Poset::build(&[("", "x")], &BoundingOptions::default()).unwrap_err(),
            PosetError::EmptyId { index: 0 }
        );
    }

    #[test]
    fn chain_enumeration_truncates() {
        let p = n5();
        let c = p.maximal_chains(1);
        assert_eq!(c.count, 2);
        assert_eq!(c.chains.len(), 1);
        assert!(c.truncated);
        let two = Poset::build(&[("b", "t")], &BoundingOptions::default()).unwrap();
        assert_eq!(two.maximal_chains(1).count, 1);
        assert!(!two.maximal_chains(1).truncated);
    }
}
