//! Ranking optimization algorithms from benchmark tables with significance
//! relations.
//!
//! The pipeline: a [`PerformanceMatrix`] of per-function results is turned
//! into a [`ScoreMatrix`] of pairwise signed-rank scores; thresholding the
//! scores at a level σ gives a [`SignificanceRelation`]; the smallest σ at
//! which that relation has no cycles is found, and algorithms are stratified
//! into rank levels by peeling off maximum sets.

pub mod cli;
pub mod dataset;
pub mod error;
pub mod half;
pub mod oracle;
pub mod relation;
pub mod report;
pub mod score;

pub use dataset::{bundled_cec05, parse_performance_csv, PerformanceMatrix};
pub use error::{Error, Result};
pub use half::HalfUnit;
pub use relation::{
    best_set, decompose, is_cycle_free, maximum_set, minimal_cyclefree_sigma, rank_peeling,
    relation_at, strongly_connected_components, sweep, threshold_ladder, RankStructure,
    RelationParts, SignificanceRelation, SweepEntry, SweepReport,
};
pub use score::{
    midrank_awards, ratio_sign_decompose, score_matrix, significance_score, ObjectiveSense,
    PerformanceVector, RatioSignPair, ScoreMatrix,
};
