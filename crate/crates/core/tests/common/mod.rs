#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use intrank::{BoundingOptions, Poset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

pub const EX9_COVERS: [(&str, &str); 13] = [
    ("⊥", "A"),
    ("⊥", "B"),
    ("⊥", "E"),
    ("⊥", "J"),
    ("A", "H"),
    ("H", "K"),
    ("J", "C"),
    ("J", "K"),
    ("E", "C"),
    ("E", "K"),
    ("B", "⊤"),
    ("C", "⊤"),
    ("K", "⊤"),
];

pub fn build(edges: &[(String, String)]) -> Poset {
    Poset::build(edges, &BoundingOptions::default()).expect("valid fixture")
}

pub fn build_str(edges: &[(&str, &str)]) -> Poset {
    Poset::build(edges, &BoundingOptions::default()).expect("valid fixture")
}

pub fn ex9() -> Poset {
    build_str(&EX9_COVERS)
}

pub fn n5() -> Poset {
    build_str(&[("⊥", "C"), ("C", "A"), ("A", "⊤"), ("⊥", "B"), ("B", "⊤")])
}

/// Boolean lattice of subsets of {1,2,3}, ordered by inclusion.
pub fn boolean_b3() -> Poset {
    let name = |mask: u32| -> String {
        if mask == 0 {
            "∅".to_string()
        } else {
            (0..3)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| (b'1' + i as u8) as char)
                .collect()
        }
    };
    let mut edges = Vec::new();
    for mask in 0u32..8 {
        for bit in 0..3 {
            if mask & (1 << bit) == 0 {
                edges.push((name(mask), name(mask | (1 << bit))));
            }
        }
    }
    build(&edges)
}

/// Chain `c0 > c1 > ... > c{n-1}`.
pub fn chain(n: usize) -> Poset {
    let edges: Vec<(String, String)> = (1..n)
        .map(|i| (format!("c{i:02}"), format!("c{:02}", i - 1)))
        .collect();
    build(&edges)
}

/// Random DAG over `n` data nodes: each pair `i < j` of a shuffled order is
/// an edge with probability `density`. Every node takes part in at least one
/// edge so the node count is exact before bounding.
pub fn random_edges(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Vec<(String, String)> {
    assert!(n >= 2);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let name = |i: usize| format!("v{:02}", perm[i]);
    let mut edges = Vec::new();
    let mut touched = vec![false; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                edges.push((name(i), name(j)));
                touched[i] = true;
                touched[j] = true;
            }
        }
    }
    for i in 0..n {
        if !touched[i] {
            let j = if i + 1 < n { i + 1 } else { i - 1 };
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            edges.push((name(lo), name(hi)));
            touched[i] = true;
            touched[j] = true;
        }
    }
    edges
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Brute-force order oracle over a poset's element indices, built only from
/// the raw edge list (no use of the poset's closure or covers).
pub struct Oracle {
    pub ids: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub covers: BTreeSet<(usize, usize)>,
    pub bottom: usize,
    pub top: usize,
}

impl Oracle {
    /// `edges` are the data edges; synthetic bounds are added the same way
    /// the library documents (below every minimal, above every maximal).
    #[allow(clippy::needless_range_loop)]
    pub fn new(edges: &[(String, String)], bottom_name: &str, top_name: &str) -> Oracle {
        let mut ids: BTreeSet<String> = BTreeSet::new();
        for (c, p) in edges {
            ids.insert(c.clone());
            ids.insert(p.clone());
        }
        let data: Vec<String> = ids.iter().cloned().collect();
        let is_parent = |x: &str| edges.iter().any(|(_, p)| p == x);
        let is_child = |x: &str| edges.iter().any(|(c, _)| c == x);
        let minimal: Vec<String> = data.iter().filter(|x| !is_parent(x)).cloned().collect();
        let maximal: Vec<String> = data.iter().filter(|x| !is_child(x)).cloned().collect();
        let mut all_edges = edges.to_vec();
        if minimal.len() > 1 {
            ids.insert(bottom_name.to_string());
            for m in &minimal {
                all_edges.push((bottom_name.to_string(), m.clone()));
            }
        }
        if maximal.len() > 1 {
            ids.insert(top_name.to_string());
            for m in &maximal {
                all_edges.push((m.clone(), top_name.to_string()));
            }
        }
        let ids: Vec<String> = ids.into_iter().collect();
        let n = ids.len();
        let pos = |s: &str| ids.iter().position(|x| x == s).unwrap();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (c, p) in &all_edges {
            leq[pos(c)][pos(p)] = true;
        }
        // Floyd–Warshall closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut covers = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && leq[a][b]
                    && !(0..n).any(|c| c != a && c != b && leq[a][c] && leq[c][b])
                {
                    covers.insert((a, b));
                }
            }
        }
        let bottom = (0..n).find(|&a| (0..n).all(|b| leq[a][b])).unwrap();
        let top = (0..n).find(|&a| (0..n).all(|b| leq[b][a])).unwrap();
        Oracle {
            ids,
            leq,
            covers,
            bottom,
            top,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    /// All maximal chains (bottom to top) by exhaustive DFS over covers.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![vec![self.bottom]];
        while let Some(path) = stack.pop() {
            let last = *path.last().unwrap();
            if last == self.top {
                out.push(path);
                continue;
            }
            for &(a, b) in &self.covers {
                if a == last {
                    let mut next = path.clone();
                    next.push(b);
                    stack.push(next);
                }
            }
        }
        out
    }

    /// Longest chain inside the order interval `[a, b]`, by brute force over
    /// all chains.
    pub fn longest_between(&self, chains: &[Vec<usize>], a: usize, b: usize) -> usize {
        chains
            .iter()
            .filter_map(|c| {
                let i = c.iter().position(|&x| x == a)?;
                let j = c.iter().position(|&x| x == b)?;
                (i <= j).then_some(j - i + 1)
            })
            .max()
            .unwrap_or(0)
    }
}
