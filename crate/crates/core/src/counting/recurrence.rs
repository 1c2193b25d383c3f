use std::collections::HashMap;

use num_bigint::BigUint;

use crate::bitset::VertexSet;
use crate::counting::CountingLimits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::DensePolynomial;
use crate::sequence::IndependenceSequence;

pub fn sequence_by_recurrence(g: &Graph) -> Result<IndependenceSequence> {
    sequence_by_recurrence_with(g, &CountingLimits::default())
}

/// Counts independent sets through the deletion recurrence
/// I(G) = I(G - v) + x * I(G - N[v]), branching on a vertex of maximum
/// degree (lowest index on ties). Induced subgraphs are split into
/// connected components at every level and component results multiply;
/// results per connected vertex set are memoized under a byte budget.
///
/// Everything is sequential and the pivot and component order are fixed,
/// so a given graph always produces the identical computation.
pub fn sequence_by_recurrence_with(
    g: &Graph,
    limits: &CountingLimits,
) -> Result<IndependenceSequence> {
    let n = g.n();
    if n > limits.recurrence_cap {
        return Err(Error::SizeCapExceeded {
            engine: "recurrence",
            n,
            cap: limits.recurrence_cap,
        });
    }
    let mut memo = Memo {
        table: HashMap::new(),
        bytes: 0,
        budget: limits.memo_budget_bytes,
    };
    let poly = product_over_components(g, &VertexSet::full(n), &mut memo)?;
    Ok(IndependenceSequence::from_polynomial(poly))
}

struct Memo {
    table: HashMap<VertexSet, DensePolynomial>,
    bytes: usize,
    budget: usize,
}

impl Memo {
    fn insert(&mut self, key: VertexSet, value: DensePolynomial) -> Result<()> {
        self.bytes += key.heap_bytes() + value.heap_bytes();
        if self.bytes > self.budget {
            return Err(Error::MemoBudgetExceeded {
                budget: self.budget,
            });
        }
        self.table.insert(key, value);
        Ok(())
    }
}

fn product_over_components(
    g: &Graph,
    mask: &VertexSet,
    memo: &mut Memo,
) -> Result<DensePolynomial> {
    let mut result = DensePolynomial::one();
    for component in components_within(g, mask) {
        result = &result * &connected_polynomial(g, component, memo)?;
    }
    Ok(result)
}

fn connected_polynomial(g: &Graph, mask: VertexSet, memo: &mut Memo) -> Result<DensePolynomial> {
    if mask.len() == 1 {
        return Ok(DensePolynomial::from_coefficients(vec![
            BigUint::from(1u32),
            BigUint::from(1u32),
        ]));
    }
    if let Some(p) = memo.table.get(&mask) {
        return Ok(p.clone());
    }
    let pivot = max_degree_vertex(g, &mask);
    let mut without_pivot = mask.clone();
    without_pivot.remove(pivot);
    let deleted = product_over_components(g, &without_pivot, memo)?;
    let mut without_closed = without_pivot;
    without_closed.subtract(g.neighbor_set(pivot));
    let contracted = product_over_components(g, &without_closed, memo)?;
    let poly = &deleted + &contracted.shifted(1);
    memo.insert(mask, poly.clone())?;
    Ok(poly)
}

fn max_degree_vertex(g: &Graph, mask: &VertexSet) -> usize {
    let mut best = None;
    for v in mask.iter() {
        let degree = g.neighbor_set(v).intersection_len(mask);
        match best {
            Some((d, _)) if d >= degree => {}
            _ => best = Some((degree, v)),
        }
    }
    best.expect("mask is nonempty").1
}

/// Connected components of the subgraph induced by `mask`, in increasing
/// order of their smallest vertex.
fn components_within(g: &Graph, mask: &VertexSet) -> Vec<VertexSet> {
    let mut remaining = mask.clone();
    let mut components = Vec::new();
    while let Some(start) = remaining.first() {
        let mut component = VertexSet::empty(mask.capacity());
        component.insert(start);
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for v in g.neighbors(u) {
                if remaining.contains(v) && !component.contains(v) {
                    component.insert(v);
                    queue.push(v);
                }
            }
        }
        remaining.subtract(&component);
        components.push(component);
    }
    components
}
