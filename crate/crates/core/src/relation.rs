//! Significance relations over a score matrix and what can be read off them.
//!
//! `relation_at(scores, σ)` holds the ordered pairs `(i, j)` with
//! `D(i, j) >= σ`. Raising σ only removes pairs, and past the score bound the
//! relation is empty. For σ > 0 antisymmetry of the scores makes the relation
//! asymmetric; at σ = 0 every self-pair and every tied pair is present.
//!
//! Algorithm indices are 0-based throughout; renderers add one.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::HalfUnit;
use crate::score::ScoreMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignificanceRelation {
    sigma: HalfUnit,
    domain_size: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SignificanceRelation {
    /// A relation from an explicit edge set. Edges must stay inside the domain.
    pub fn from_edges(
        domain_size: usize,
        sigma: HalfUnit,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let edges: BTreeSet<_> = edges.into_iter().collect();
        assert!(
            edges
                .iter()
                .all(|&(i, j)| i < domain_size && j < domain_size),
            "edge outside domain"
        );
        SignificanceRelation {
            sigma,
            domain_size,
            edges,
        }
    }

    pub fn sigma(&self) -> HalfUnit {
        self.sigma
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges among `keep`, renumbered to positions in `keep`.
    pub fn restrict(&self, keep: &[usize]) -> SignificanceRelation {
        let pos = |x: usize| keep.iter().position(|&k| k == x);
        let edges = self
            .edges
            .iter()
            .filter_map(|&(i, j)| Some((pos(i)?, pos(j)?)));
        SignificanceRelation::from_edges(keep.len(), self.sigma, edges)
    }

    /// In- and out-degree over the asymmetric part.
    pub fn degrees(&self, node: usize) -> (usize, usize) {
        let parts = decompose(self);
        let indeg = parts.asymmetric.iter().filter(|e| e.1 == node).count();
        let outdeg = parts.asymmetric.iter().filter(|e| e.0 == node).count();
        (indeg, outdeg)
    }
}

/// Asymmetric part P(R) and symmetric part I(R).
///
/// Symmetric pairs are stored once as `(min, max)`; self-pairs as `(i, i)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelationParts {
    pub asymmetric: BTreeSet<(usize, usize)>,
    pub symmetric: BTreeSet<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankStructure {
    pub sigma: HalfUnit,
    /// Best level first; indices within a level ascending.
    pub levels: Vec<Vec<usize>>,
}

impl RankStructure {
    pub fn level_of(&self, algorithm: usize) -> Option<usize> {
        self.levels.iter().position(|l| l.contains(&algorithm))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub sigma: HalfUnit,
    pub edge_count: usize,
    pub cycle_free: bool,
    pub maximum_set: Vec<usize>,
    pub scc_list: Vec<Vec<usize>>,
    /// Peeled rank levels when the relation is cycle-free.
    pub levels: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
}

pub fn relation_at(scores: &ScoreMatrix, sigma: HalfUnit) -> Result<SignificanceRelation> {
    if sigma.is_negative() {
        return Err(Error::NegativeSigma(sigma.to_string()));
    }
    let k = scores.len();
    let edges = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| scores.get(i, j) >= sigma);
    Ok(SignificanceRelation::from_edges(k, sigma, edges))
}

pub fn decompose(relation: &SignificanceRelation) -> RelationParts {
    let mut parts = RelationParts::default();
    for &(i, j) in relation.edges() {
        if relation.contains(j, i) {
            parts.symmetric.insert((i.min(j), i.max(j)));
        } else {
            parts.asymmetric.insert((i, j));
        }
    }
    parts
}

/// Elements that are never second in an asymmetric pair.
pub fn maximum_set(relation: &SignificanceRelation) -> Vec<usize> {
    let parts = decompose(relation);
    let mut dominated = vec![false; relation.domain_size()];
    for &(_, j) in &parts.asymmetric {
        dominated[j] = true;
    }
    (0..relation.domain_size())
        .filter(|&i| !dominated[i])
        .collect()
}

/// Elements related to every element, themselves included.
pub fn best_set(relation: &SignificanceRelation) -> Vec<usize> {
    let k = relation.domain_size();
    (0..k)
        .filter(|&i| (0..k).all(|j| relation.contains(i, j)))
        .collect()
}

fn successors(k: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); k];
    for &(i, j) in edges {
        adj[i].push(j);
    }
    adj
}

/// Strongly connected components of the graph of P(R), by Tarjan's
/// algorithm with an explicit stack.
///
/// Each component is sorted, and components are ordered by smallest member.
pub fn strongly_connected_components(relation: &SignificanceRelation) -> Vec<Vec<usize>> {
    let k = relation.domain_size();
    let adj = successors(k, &decompose(relation).asymmetric);

    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; k];
    let mut low = vec![0; k];
    let mut on_stack = vec![false; k];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut components = Vec::new();

    for root in 0..k {
        if index[root] != UNVISITED {
            continue;
        }
        // (node, next successor position)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("component root is on the stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    components.sort_by_key(|c| c[0]);
    components
}

/// No P(R) cycle, no self-pair, and no mutual pair.
pub fn is_cycle_free(relation: &SignificanceRelation) -> bool {
    decompose(relation).symmetric.is_empty()
        && strongly_connected_components(relation)
            .iter()
            .all(|c| c.len() == 1)
}

/// Components witnessing that a relation is not cycle-free.
pub fn cyclic_components(relation: &SignificanceRelation) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = strongly_connected_components(relation)
        .into_iter()
        .filter(|c| c.len() > 1)
        .collect();
    for (i, j) in decompose(relation).symmetric {
        let pair = if i == j { vec![i] } else { vec![i, j] };
        if !out.iter().any(|c| pair.iter().all(|p| c.contains(p))) {
            out.push(pair);
        }
    }
    out.sort();
    out
}

/// Zero followed by the distinct positive scores, ascending.
///
/// The relation is constant for σ in each interval `(l[t], l[t+1]]`.
pub fn threshold_ladder(scores: &ScoreMatrix) -> Vec<HalfUnit> {
    let positive: BTreeSet<HalfUnit> = scores
        .rows()
        .flatten()
        .copied()
        .filter(|&d| d > HalfUnit::ZERO)
        .collect();
    std::iter::once(HalfUnit::ZERO).chain(positive).collect()
}

/// Smallest half-unit σ whose relation is cycle-free.
///
/// Candidates are every ladder value and every ladder value plus one half;
/// the latter is the smallest level excluding that realized score. Removing
/// edges never creates a cycle, so cycle-freeness is monotone over the
/// candidates and a binary search suffices.
pub fn minimal_cyclefree_sigma(scores: &ScoreMatrix) -> HalfUnit {
    let candidates: Vec<HalfUnit> = threshold_ladder(scores)
        .into_iter()
        .flat_map(|v| [v, v + HalfUnit::HALF])
        .collect();
    let free = |sigma: HalfUnit| {
        is_cycle_free(&relation_at(scores, sigma).expect("candidates are non-negative"))
    };
    let first = candidates.partition_point(|&s| !free(s));
    // the last candidate lies above every score, so the relation there is empty
    candidates[first]
}

/// Repeatedly removes the maximum set of what remains.
///
/// Requires a cycle-free relation; otherwise the error lists the cyclic
/// components (1-based in its message).
pub fn rank_peeling(scores: &ScoreMatrix, sigma: HalfUnit) -> Result<RankStructure> {
    let relation = relation_at(scores, sigma)?;
    peel_relation(&relation)
}

pub fn peel_relation(relation: &SignificanceRelation) -> Result<RankStructure> {
    if !is_cycle_free(relation) {
        return Err(Error::Cyclic(cyclic_components(relation)));
    }
    let parts = decompose(relation);
    let mut remaining: Vec<usize> = (0..relation.domain_size()).collect();
    let mut levels = Vec::new();
    while !remaining.is_empty() {
        let (top, rest): (Vec<usize>, Vec<usize>) = remaining.iter().partition(|&&i| {
            !parts
                .asymmetric
                .iter()
                .any(|&(a, b)| b == i && remaining.contains(&a))
        });
        debug_assert!(!top.is_empty(), "cycle-free relation has a maximal element");
        levels.push(top);
        remaining = rest;
    }
    Ok(RankStructure {
        sigma: relation.sigma(),
        levels,
    })
}

/// One entry per ladder value, plus a closing entry one half above the
/// largest score when the last ladder value is still cyclic.
pub fn sweep(scores: &ScoreMatrix) -> SweepReport {
    let entry = |sigma: HalfUnit| {
        let relation = relation_at(scores, sigma).expect("ladder is non-negative");
        let cycle_free = is_cycle_free(&relation);
        SweepEntry {
            sigma,
            edge_count: relation.edges().len(),
            cycle_free,
            maximum_set: maximum_set(&relation),
            scc_list: strongly_connected_components(&relation),
            levels: cycle_free
                .then(|| peel_relation(&relation).expect("checked cycle-free").levels),
        }
    };
    let ladder = threshold_ladder(scores);
    let mut entries: Vec<SweepEntry> = ladder.iter().map(|&s| entry(s)).collect();
    if entries.last().is_some_and(|e| !e.cycle_free) {
        let top = *ladder.last().expect("ladder starts with zero");
        entries.push(entry(top + HalfUnit::HALF));
    }
    SweepReport { entries }
}

/// P(R) edges with every edge implied by a longer path removed.
///
/// Only meaningful for cycle-free relations; a cyclic relation returns its
/// full asymmetric part.
pub fn transitive_reduction(relation: &SignificanceRelation) -> BTreeSet<(usize, usize)> {
    let asym = decompose(relation).asymmetric;
    if !is_cycle_free(relation) {
        return asym;
    }
    let k = relation.domain_size();
    let adj = successors(k, &asym);
    // reach[i][j]: a path of length >= 2 leads from i to j
    let mut reach = vec![vec![false; k]; k];
    for s in 0..k {
        let mut stack: Vec<usize> = adj[s]
            .iter()
            .flat_map(|&m| adj[m].iter().copied())
            .collect();
        while let Some(v) = stack.pop() {
            if !reach[s][v] {
                reach[s][v] = true;
                stack.extend(adj[v].iter().copied());
            }
        }
    }
    asym.into_iter().filter(|&(i, j)| !reach[i][j]).collect()
}
