use num_rational::Ratio;

use super::{delegate_to_graph, AlgorithmError, DynamicOrientation};
use crate::graph_core::{OrientedGraph, VertexId};

/// Default per-update flip cap for the static variant, as a multiple of
/// `m + n`.
pub const DEFAULT_BUDGET_FACTOR: u64 = 50;

/// Reorientation credit granted per insertion while the bound is `alpha`.
///
/// The adaptive variant rebuilds once total flips since the last rebuild
/// exceed the total credit. This is one reading of "add the bound plus one
/// per insertion"; keep the rule here so it can be revised in one place.
pub fn reorientation_credit(alpha: u32) -> u64 {
    alpha as u64 + 1
}

/// `ceil(beta * alpha)`; strictly larger than `alpha` for `beta > 1`.
pub fn next_alpha(alpha: u32, beta: Ratio<u64>) -> u32 {
    let (num, den) = (*beta.numer() as u128, *beta.denom() as u128);
    let scaled = (num * alpha as u128).div_ceil(den);
    scaled.max(alpha as u128 + 1).min(u32::MAX as u128) as u32
}

/// Outcome of one overflow cascade.
enum Cascade {
    Done(u64),
    /// Stopped before exceeding the budget; carries flips already made.
    OverBudget(u64),
}

/// Starting from `u`, empties every vertex whose out-degree exceeds `alpha`
/// by reversing all of its out-edges, until no such vertex remains or the
/// next reversal would push the flip count above `budget`.
fn cascade(
    graph: &mut OrientedGraph,
    stack: &mut Vec<VertexId>,
    alpha: u32,
    u: VertexId,
    budget: u64,
) -> Cascade {
    if graph.out_degree(u) <= alpha {
        return Cascade::Done(0);
    }
    stack.clear();
    stack.push(u);
    let mut flips = 0u64;
    while let Some(w) = stack.pop() {
        let d = graph.out_degree(w) as u64;
        if d <= alpha as u64 {
            continue;
        }
        if flips + d > budget {
            return Cascade::OverBudget(flips);
        }
        flips += graph.reverse_out_edges(w, |x, deg_x| {
            if deg_x == alpha + 1 {
                stack.push(x);
            }
        }) as u64;
    }
    Cascade::Done(flips)
}

/// Brodal–Fagerberg with a known bound `alpha` on the arboricity.
///
/// When an insertion lifts `u` above `alpha`, all out-edges of `u` are
/// reversed, and every vertex lifted above `alpha` by that is handled the
/// same way. With `alpha` at least twice the arboricity this terminates; a
/// per-update flip cap of `budget_factor * (m + n)` reports bounds that are
/// too small.
#[derive(Debug, Clone)]
pub struct BrodalFagerberg {
    graph: OrientedGraph,
    alpha: u32,
    budget_factor: u64,
    stack: Vec<VertexId>,
}

impl BrodalFagerberg {
    pub fn new(n: usize, alpha: u32) -> Self {
        Self {
            graph: OrientedGraph::new(n),
            alpha,
            budget_factor: DEFAULT_BUDGET_FACTOR,
            stack: Vec::new(),
        }
    }

    pub fn with_budget_factor(mut self, factor: u64) -> Self {
        self.budget_factor = factor;
        self
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.graph
    }

    fn budget(&self) -> u64 {
        self.budget_factor * (self.graph.m() + self.graph.n()) as u64
    }
}

impl DynamicOrientation for BrodalFagerberg {
    fn insert(&mut self, u: VertexId, v: VertexId) -> Result<(), AlgorithmError> {
        self.graph.insert_oriented(u, v)?;
        let budget = self.budget();
        if self.alpha == 0 {
            // no 0-orientation of a nonempty graph exists
            return Err(AlgorithmError::BudgetExceeded { flips: 0, budget });
        }
        match cascade(&mut self.graph, &mut self.stack, self.alpha, u, budget) {
            Cascade::Done(_) => Ok(()),
            Cascade::OverBudget(flips) => Err(AlgorithmError::BudgetExceeded { flips, budget }),
        }
    }

    delegate_to_graph!();
}

/// Brodal–Fagerberg without a known bound.
///
/// Starts with `alpha = 1`. Every insertion credits
/// [`reorientation_credit`]`(alpha)` and every flip debits one; a cascade
/// that would overdraw the balance is cut short and triggers a rebuild:
/// `alpha := ceil(beta * alpha)`, the orientation is cleared and all current
/// edges are inserted again under the new bound.
#[derive(Debug, Clone)]
pub struct AdaptiveBrodalFagerberg {
    graph: OrientedGraph,
    alpha: u32,
    beta: Ratio<u64>,
    credit: u64,
    debit: u64,
    rebuilds: u32,
    stack: Vec<VertexId>,
}

impl AdaptiveBrodalFagerberg {
    pub fn new(n: usize, beta: Ratio<u64>) -> Self {
        Self {
            graph: OrientedGraph::new(n),
            alpha: 1,
            beta,
            credit: 0,
            debit: 0,
            rebuilds: 0,
            stack: Vec::new(),
        }
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn rebuilds(&self) -> u32 {
        self.rebuilds
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.graph
    }

    /// Stores `u -> v`, credits the balance and runs a cascade limited by it.
    /// Returns false when the cascade was cut short.
    fn insert_with_credit(&mut self, u: VertexId, v: VertexId) -> Result<bool, AlgorithmError> {
        self.graph.insert_oriented(u, v)?;
        self.credit += reorientation_credit(self.alpha);
        let balance = self.credit.saturating_sub(self.debit);
        match cascade(&mut self.graph, &mut self.stack, self.alpha, u, balance) {
            Cascade::Done(f) => {
                self.debit += f;
                Ok(true)
            }
            Cascade::OverBudget(f) => {
                self.debit += f;
                Ok(false)
            }
        }
    }

    fn rebuild(&mut self) -> Result<(), AlgorithmError> {
        let mut pending: Vec<(VertexId, VertexId)> = self.graph.arcs().collect();
        loop {
            self.alpha = next_alpha(self.alpha, self.beta);
            self.rebuilds += 1;
            self.graph.clear();
            self.credit = 0;
            self.debit = 0;
            let mut cut_at = None;
            for (i, &(a, b)) in pending.iter().enumerate() {
                if !self.insert_with_credit(a, b)? {
                    cut_at = Some(i);
                    break;
                }
            }
            match cut_at {
                None => return Ok(()),
                Some(i) => {
                    let rest = pending.split_off(i + 1);
                    pending = self.graph.arcs().chain(rest).collect();
                }
            }
        }
    }
}

impl DynamicOrientation for AdaptiveBrodalFagerberg {
    fn insert(&mut self, u: VertexId, v: VertexId) -> Result<(), AlgorithmError> {
        if !self.insert_with_credit(u, v)? {
            self.rebuild()?;
        }
        Ok(())
    }

    delegate_to_graph!();
}
