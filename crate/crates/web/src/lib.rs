//! Browser bindings: each export takes plain strings and returns JSON.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use sigrank::relation::{cyclic_components, transitive_reduction};
use sigrank::report::{to_dot, RenderOptions};
use sigrank::score::{midrank_awards, RATIO_TOLERANCE};
use sigrank::{
    best_set, bundled_cec05, decompose, is_cycle_free, maximum_set, minimal_cyclefree_sigma,
    parse_performance_csv, ratio_sign_decompose, relation_at, score_matrix, significance_score,
    sweep, threshold_ladder, HalfUnit, ObjectiveSense, PerformanceMatrix, PerformanceVector,
};

fn sense_of(s: &str) -> Result<ObjectiveSense, String> {
    s.parse()
}

fn numbers(s: &str) -> Result<Vec<f64>, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|_| format!("not a number: {t:?}")))
        .collect()
}

fn table(csv: &str, sense: ObjectiveSense) -> Result<PerformanceMatrix, String> {
    if csv.trim().is_empty() {
        return Ok(bundled_cec05().with_sense(sense));
    }
    parse_performance_csv(csv, sense, false).map_err(|e| e.to_string())
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

#[derive(Serialize)]
struct PairView {
    ratios: Vec<f64>,
    signs: Vec<i8>,
    awards: Vec<HalfUnit>,
    score: HalfUnit,
    bound: HalfUnit,
}

pub fn score_pair_json(x: &str, y: &str, sense: &str) -> Result<String, String> {
    let sense = sense_of(sense)?;
    let x = PerformanceVector::new(numbers(x)?).map_err(|e| format!("x: {e}"))?;
    let y = PerformanceVector::new(numbers(y)?).map_err(|e| format!("y: {e}"))?;
    let parts = ratio_sign_decompose(&x, &y, sense).map_err(|e| e.to_string())?;
    let awards = midrank_awards(&parts.ratios, RATIO_TOLERANCE);
    let score = significance_score(&x, &y, sense).map_err(|e| e.to_string())?;
    Ok(json(&PairView {
        bound: sigrank::score::score_bound(x.len()),
        ratios: parts.ratios,
        signs: parts.signs,
        awards,
        score,
    }))
}

#[derive(Serialize)]
struct RelationView {
    algorithms: Vec<String>,
    sigma: HalfUnit,
    sigma_star: HalfUnit,
    bound: HalfUnit,
    ladder: Vec<HalfUnit>,
    /// 1-based arcs of the asymmetric part, with their scores.
    arcs: Vec<(usize, usize, HalfUnit)>,
    reduced_arcs: Vec<(usize, usize)>,
    cycle_free: bool,
    maximum_set: Vec<usize>,
    best_set: Vec<usize>,
    cyclic_components: Vec<Vec<usize>>,
    levels: Option<Vec<Vec<usize>>>,
    dot: String,
}

pub fn relation_json(csv: &str, sense: &str, sigma: &str) -> Result<String, String> {
    let matrix = table(csv, sense_of(sense)?)?;
    let scores = score_matrix(&matrix);
    let sigma: HalfUnit = sigma.parse().map_err(|e: sigrank::Error| e.to_string())?;
    let relation = relation_at(&scores, sigma).map_err(|e| e.to_string())?;
    let names = matrix.algorithm_names().to_vec();
    let free = is_cycle_free(&relation);
    let view = RelationView {
        sigma,
        sigma_star: minimal_cyclefree_sigma(&scores),
        bound: scores.bound(),
        ladder: threshold_ladder(&scores),
        arcs: decompose(&relation)
            .asymmetric
            .iter()
            .map(|&(i, j)| (i + 1, j + 1, scores.get(i, j)))
            .collect(),
        reduced_arcs: transitive_reduction(&relation)
            .iter()
            .map(|&(i, j)| (i + 1, j + 1))
            .collect(),
        cycle_free: free,
        maximum_set: one_based(&maximum_set(&relation)),
        best_set: one_based(&best_set(&relation)),
        cyclic_components: cyclic_components(&relation)
            .iter()
            .map(|c| one_based(c))
            .collect(),
        levels: free.then(|| {
            sigrank::relation::peel_relation(&relation)
                .expect("checked cycle-free")
                .levels
                .iter()
                .map(|l| one_based(l))
                .collect()
        }),
        dot: to_dot(&relation, &names, &RenderOptions::default(), Some(&scores))
            .map_err(|e| e.to_string())?,
        algorithms: names,
    };
    Ok(json(&view))
}

pub fn sweep_json(csv: &str, sense: &str) -> Result<String, String> {
    let matrix = table(csv, sense_of(sense)?)?;
    Ok(json(&sweep(&score_matrix(&matrix))))
}

/// Score two performance vectors given as comma- or space-separated numbers.
#[wasm_bindgen]
pub fn score_pair(x: &str, y: &str, sense: &str) -> Result<String, String> {
    score_pair_json(x, y, sense)
}

/// The relation at `sigma` for a CSV table (empty text selects the bundled
/// CEC'05 table).
#[wasm_bindgen]
pub fn relation(csv: &str, sense: &str, sigma: &str) -> Result<String, String> {
    relation_json(csv, sense, sigma)
}

#[wasm_bindgen]
pub fn sweep_table(csv: &str, sense: &str) -> Result<String, String> {
    sweep_json(csv, sense)
}

#[wasm_bindgen]
pub fn bundled_table() -> String {
    sigrank::dataset::bundled_cec05_csv().to_string()
}
