//! Simple undirected graphs and the two bipartite families under study.
//!
//! `build_gab(a, b)` produces the graph G(a, b): an independent block V1 of
//! size b-a joined completely to a block V2 of size a, plus a perfect
//! matching from V2 to a pendant block V3 of size a. `build_generalized`
//! stacks k matched blocks over a shared base block of size a, with block
//! A_i joined completely to the first i matched blocks.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Write as _;
use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
            edges: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range
    /// endpoints. Repeated edges are fine and count once.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameters(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.edges += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut component = vec![start];
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        component.push(v);
                        queue.push(v);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// Tests 2-colorability by breadth-first coloring.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// One line `u: v1 v2 ...` per vertex, neighbors ascending.
    pub fn adjacency_listing(&self) -> String {
        let mut out = String::new();
        for u in 0..self.n {
            let _ = write!(out, "{u}:");
            for v in self.neighbors(u) {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }
}

/// Parameters of G(a, b), requiring b > a >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GabConstruction {
    a: u64,
    b: u64,
}

impl GabConstruction {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a < 1 || b <= a {
            return Err(Error::InvalidParameters(format!(
                "G(a, b) needs b > a >= 1, got a = {a}, b = {b}"
            )));
        }
        Ok(GabConstruction { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn vertex_count(&self) -> u64 {
        self.a + self.b
    }

    pub fn edge_count(&self) -> u64 {
        (self.b - self.a) * self.a + self.a
    }

    /// Independent block joined completely to V2; size b - a.
    pub fn v1(&self) -> Range<u64> {
        0..self.b - self.a
    }

    /// Middle block of size a, matched into V3.
    pub fn v2(&self) -> Range<u64> {
        self.b - self.a..self.b
    }

    /// Pendant block of size a.
    pub fn v3(&self) -> Range<u64> {
        self.b..self.a + self.b
    }
}

pub fn build_gab(params: &GabConstruction) -> Graph {
    let a = params.a as usize;
    let b = params.b as usize;
    let mut g = Graph::empty(a + b);
    for u in 0..b - a {
        for v in b - a..b {
            g.add_edge_unchecked(u, v);
        }
    }
    for j in 0..a {
        g.add_edge_unchecked(b - a + j, b + j);
    }
    debug_assert_eq!(g.edge_count() as u64, params.edge_count());
    g
}

/// Parameters of the stacked construction: a base block A0 of size a,
/// upper blocks A1..Ak of sizes `parts`, and matched blocks B1..Bk of size
/// a each. Requires a >= 1, k >= 1, and every part >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedConstruction {
    a: u64,
    parts: Vec<u64>,
}

impl GeneralizedConstruction {
    pub fn new(a: u64, parts: Vec<u64>) -> Result<Self> {
        if a < 1 {
            return Err(Error::InvalidParameters(format!(
                "base block size must be at least 1, got {a}"
            )));
        }
        if parts.is_empty() {
            return Err(Error::InvalidParameters(
                "at least one upper block is required".into(),
            ));
        }
        if let Some(pos) = parts.iter().position(|&p| p < 1) {
            return Err(Error::InvalidParameters(format!(
                "upper block sizes must be at least 1, got 0 at position {pos}"
            )));
        }
        Ok(GeneralizedConstruction { a, parts })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn vertex_count(&self) -> u64 {
        let k = self.parts.len() as u64;
        self.a + self.parts.iter().sum::<u64>() + k * self.a
    }

    pub fn edge_count(&self) -> u64 {
        let k = self.parts.len() as u64;
        let joins: u64 = self
            .parts
            .iter()
            .enumerate()
            .map(|(idx, &ai)| ai * (idx as u64 + 1) * self.a)
            .sum();
        k * self.a + joins
    }

    /// Base block A0.
    pub fn a0_block(&self) -> Range<u64> {
        0..self.a
    }

    /// Upper block A_i, 1-based.
    pub fn a_block(&self, i: usize) -> Range<u64> {
        assert!(1 <= i && i <= self.parts.len());
        let start = self.a + self.parts[..i - 1].iter().sum::<u64>();
        start..start + self.parts[i - 1]
    }

    /// Matched block B_j, 1-based.
    pub fn b_block(&self, j: usize) -> Range<u64> {
        assert!(1 <= j && j <= self.parts.len());
        let start = self.a + self.parts.iter().sum::<u64>() + (j as u64 - 1) * self.a;
        start..start + self.a
    }
}

/// Matching convention: position p of A0 is matched to position p of every
/// B_j. Block A_i is joined completely to B_1..B_i.
pub fn build_generalized(params: &GeneralizedConstruction) -> Graph {
    let a = params.a as usize;
    let k = params.k();
    let mut g = Graph::empty(params.vertex_count() as usize);
    for j in 1..=k {
        let b_start = params.b_block(j).start as usize;
        for pos in 0..a {
            g.add_edge_unchecked(pos, b_start + pos);
        }
    }
    for i in 1..=k {
        let ai = params.a_block(i);
        for u in ai.start as usize..ai.end as usize {
            for j in 1..=i {
                for v in params.b_block(j) {
                    g.add_edge_unchecked(u, v as usize);
                }
            }
        }
    }
    debug_assert_eq!(g.edge_count() as u64, params.edge_count());
    g
}

/// Uniform random labeled tree on n >= 1 vertices, decoded from a seeded
/// random Prufer sequence. The same seed always yields the same tree.
pub fn random_tree(n: u64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameters(
            "a tree needs at least one vertex".into(),
        ));
    }
    let n = n as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.random_range(0..n))
        .collect();
    Ok(tree_from_prufer(n, &prufer))
}

fn tree_from_prufer(n: usize, prufer: &[usize]) -> Graph {
    let mut g = Graph::empty(n);
    if n == 1 {
        return g;
    }
    let mut degree = vec![1u32; n];
    for &v in prufer {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    for &v in prufer {
        let Reverse(leaf) = leaves.pop().expect("every step frees a leaf");
        g.add_edge_unchecked(leaf, v);
        degree[leaf] -= 1;
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain");
    let Reverse(v) = leaves.pop().expect("two leaves remain");
    g.add_edge_unchecked(u, v);
    g
}

/// Erdos-Renyi style random graph: each pair independently an edge with the
/// given probability, drawn in a fixed order from a seeded generator.
pub fn random_graph(n: usize, edge_probability: f64, seed: u64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&edge_probability),
        "edge probability must lie in [0, 1]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_probability) {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    g
}
