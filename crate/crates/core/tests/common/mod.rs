//! Definition-scanning oracles and random instance generators shared by the
//! integration tests. Nothing here calls into the relation module's
//! algorithms; only the relation's edge set is read.

#![allow(dead_code)]

use rand::Rng;
use sigrank::{ObjectiveSense, PerformanceMatrix, SignificanceRelation};

/// Values drawn from a small set so equal components and equal ratios occur often.
pub fn random_matrix<R: Rng>(rng: &mut R, max_algs: usize, max_funcs: usize) -> PerformanceMatrix {
    const BASE: [f64; 7] = [1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0];
    let k = rng.gen_range(1..=max_algs);
    let m = rng.gen_range(1..=max_funcs);
    let values = (0..m)
        .map(|_| {
            let scale = 10f64.powi(rng.gen_range(-9..=3));
            (0..k)
                .map(|_| BASE[rng.gen_range(0..BASE.len())] * scale)
                .collect()
        })
        .collect();
    let sense = if rng.gen_bool(0.5) {
        ObjectiveSense::Minimize
    } else {
        ObjectiveSense::Maximize
    };
    PerformanceMatrix::new(
        (0..k).map(|i| format!("a{i}")).collect(),
        (0..m).map(|i| format!("f{i}")).collect(),
        values,
        sense,
    )
    .unwrap()
}

/// Same matrix with every function row multiplied by its own positive factor.
pub fn rescale_rows<R: Rng>(rng: &mut R, m: &PerformanceMatrix) -> PerformanceMatrix {
    let rows = m
        .rows()
        .iter()
        .map(|row| {
            let c = 10f64.powf(rng.gen_range(-3.0..3.0));
            row.iter().map(|v| v * c).collect()
        })
        .collect();
    PerformanceMatrix::new(
        m.algorithm_names().to_vec(),
        m.function_names().to_vec(),
        rows,
        m.sense(),
    )
    .unwrap()
}

fn in_r(r: &SignificanceRelation, i: usize, j: usize) -> bool {
    r.edges().contains(&(i, j))
}

fn in_p(r: &SignificanceRelation, i: usize, j: usize) -> bool {
    in_r(r, i, j) && !in_r(r, j, i)
}

pub fn brute_maximum_set(r: &SignificanceRelation) -> Vec<usize> {
    let k = r.domain_size();
    (0..k).filter(|&y| !(0..k).any(|x| in_p(r, x, y))).collect()
}

pub fn brute_best_set(r: &SignificanceRelation) -> Vec<usize> {
    let k = r.domain_size();
    (0..k).filter(|&x| (0..k).all(|y| in_r(r, x, y))).collect()
}

/// Literal cycle definition: distinct x1..xk with x1 P x2 P ... P xk and
/// (xk, x1) in R, searched over every sequence.
pub fn brute_has_cycle(r: &SignificanceRelation) -> bool {
    fn extend(r: &SignificanceRelation, path: &mut Vec<usize>) -> bool {
        let first = path[0];
        let last = *path.last().unwrap();
        if in_r(r, last, first) {
            return true;
        }
        for next in 0..r.domain_size() {
            if !path.contains(&next) && in_p(r, last, next) {
                path.push(next);
                if extend(r, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..r.domain_size()).any(|s| extend(r, &mut vec![s]))
}
