//! Pairwise significance scores between two performance vectors.
//!
//! Each component pair contributes its performance ratio (larger over
//! smaller) and a sign saying which side was better. Components are ranked
//! by ratio, ranks `1..=n` are handed out as award points, tied ratios share
//! their points equally, and the signed award points are summed into the
//! score `D`. Ratios make the score independent of each function's scale;
//! ranks make it independent of how far apart the functions' scales are.

use serde::{Deserialize, Serialize};

use crate::dataset::PerformanceMatrix;
use crate::error::{Error, Result};
use crate::half::HalfUnit;

/// Relative tolerance under which two ratios count as tied, and under which
/// a ratio counts as equal to one (a sign-0 component).
pub const RATIO_TOLERANCE: f64 = 1e-12;

/// How components with equal performance on both sides are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ZeroHandling {
    /// Equal components stay in the ranking, consume the lowest award
    /// points, and contribute nothing to the score.
    #[default]
    Keep,
    /// Equal components are removed before ranking, as the Wilcoxon signed
    /// rank statistic does.
    Drop,
}

/// The zero handling used by [`significance_score`] and [`score_matrix`].
pub const DEFAULT_ZERO_HANDLING: ZeroHandling = ZeroHandling::Keep;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectiveSense {
    /// Smaller values are better (errors, costs).
    #[default]
    Minimize,
    /// Larger values are better (fitness, quality).
    Maximize,
}

impl ObjectiveSense {
    pub fn flipped(self) -> Self {
        match self {
            ObjectiveSense::Minimize => ObjectiveSense::Maximize,
            ObjectiveSense::Maximize => ObjectiveSense::Minimize,
        }
    }
}

impl std::str::FromStr for ObjectiveSense {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "min" | "minimize" => Ok(ObjectiveSense::Minimize),
            "max" | "maximize" => Ok(ObjectiveSense::Maximize),
            other => Err(format!(
                "unknown objective sense {other:?} (expected min or max)"
            )),
        }
    }
}

/// Strictly positive performance values, one per benchmark function.
#[derive(Debug, Clone, PartialEq)]
pub struct PerformanceVector(Vec<f64>);

impl PerformanceVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::NonPositive { index, value });
        }
        Ok(PerformanceVector(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<f64>> for PerformanceVector {
    type Error = Error;
    fn try_from(values: Vec<f64>) -> Result<Self> {
        PerformanceVector::new(values)
    }
}

/// Per-component ratios (always `>= 1`) and signs (`+1` when `x` is better).
#[derive(Debug, Clone, PartialEq)]
pub struct RatioSignPair {
    pub ratios: Vec<f64>,
    pub signs: Vec<i8>,
}

pub(crate) fn approx_equal(a: f64, b: f64, tolerance: f64) -> bool {
    (a - b).abs() <= tolerance * a.abs().max(b.abs())
}

pub fn ratio_sign_decompose(
    x: &PerformanceVector,
    y: &PerformanceVector,
    sense: ObjectiveSense,
) -> Result<RatioSignPair> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let mut ratios = Vec::with_capacity(x.len());
    let mut signs = Vec::with_capacity(x.len());
    for (&a, &b) in x.values().iter().zip(y.values()) {
        let ratio = if a >= b { a / b } else { b / a };
        let larger = if approx_equal(ratio, 1.0, RATIO_TOLERANCE) {
            0
        } else if a > b {
            1
        } else {
            -1
        };
        let sign = match sense {
            ObjectiveSense::Maximize => larger,
            ObjectiveSense::Minimize => -larger,
        };
        ratios.push(ratio);
        signs.push(sign);
    }
    Ok(RatioSignPair { ratios, signs })
}

/// Award points for each component, aligned with the input order.
///
/// Components are ranked by non-decreasing ratio; a group of tied ratios
/// spanning ranks `p+1..=p+g` gives every member the midrank `p + (g+1)/2`.
pub fn midrank_awards(ratios: &[f64], tolerance: f64) -> Vec<HalfUnit> {
    let mut order: Vec<usize> = (0..ratios.len()).collect();
    order.sort_by(|&a, &b| ratios[a].total_cmp(&ratios[b]));

    let mut awards = vec![HalfUnit::ZERO; ratios.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len()
            && approx_equal(ratios[order[end - 1]], ratios[order[end]], tolerance)
        {
            end += 1;
        }
        // twice the midrank of ranks start+1..=end
        let twice = (start + 1 + end) as i64;
        for &i in &order[start..end] {
            awards[i] = HalfUnit::from_twice(twice);
        }
        start = end;
    }
    awards
}

/// Significance score `D` of `x` over `y`; positive when `x` is better.
pub fn significance_score(
    x: &PerformanceVector,
    y: &PerformanceVector,
    sense: ObjectiveSense,
) -> Result<HalfUnit> {
    significance_score_with(x, y, sense, DEFAULT_ZERO_HANDLING)
}

pub fn significance_score_with(
    x: &PerformanceVector,
    y: &PerformanceVector,
    sense: ObjectiveSense,
    zeros: ZeroHandling,
) -> Result<HalfUnit> {
    let RatioSignPair {
        mut ratios,
        mut signs,
    } = ratio_sign_decompose(x, y, sense)?;
    if zeros == ZeroHandling::Drop {
        let kept: Vec<(f64, i8)> = ratios
            .iter()
            .zip(&signs)
            .filter(|(_, &s)| s != 0)
            .map(|(&r, &s)| (r, s))
            .collect();
        ratios = kept.iter().map(|p| p.0).collect();
        signs = kept.iter().map(|p| p.1).collect();
    }
    let awards = midrank_awards(&ratios, RATIO_TOLERANCE);
    Ok(awards
        .iter()
        .zip(&signs)
        .map(|(&a, &s)| HalfUnit::from_twice(a.twice() * i64::from(s)))
        .sum())
}

/// The largest possible `|D|` over `n` components: `n(n+1)/2`.
pub fn score_bound(n: usize) -> HalfUnit {
    let n = n as i64;
    HalfUnit::from_twice(n * (n + 1))
}

/// Antisymmetric `k x k` table of pairwise scores.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScoreMatrix {
    size: usize,
    components: usize,
    entries: Vec<HalfUnit>,
}

impl ScoreMatrix {
    /// Builds a matrix from row-major entries. The caller is responsible for
    /// antisymmetry; [`ScoreMatrix::from_upper`] enforces it.
    pub fn from_rows(rows: Vec<Vec<HalfUnit>>, components: usize) -> Self {
        let size = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == size),
            "score matrix must be square"
        );
        ScoreMatrix {
            size,
            components,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds an antisymmetric matrix from a function of `i < j`.
    pub fn from_upper(
        size: usize,
        components: usize,
        mut upper: impl FnMut(usize, usize) -> HalfUnit,
    ) -> Self {
        let mut entries = vec![HalfUnit::ZERO; size * size];
        for i in 0..size {
            for j in i + 1..size {
                let d = upper(i, j);
                entries[i * size + j] = d;
                entries[j * size + i] = -d;
            }
        }
        ScoreMatrix {
            size,
            components,
            entries,
        }
    }

    /// Number of algorithms.
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Number of benchmark functions each score was computed over.
    pub fn components(&self) -> usize {
        self.components
    }

    pub fn get(&self, i: usize, j: usize) -> HalfUnit {
        self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[HalfUnit] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[HalfUnit]> {
        self.entries.chunks(self.size.max(1)).take(self.size)
    }

    pub fn bound(&self) -> HalfUnit {
        score_bound(self.components)
    }

    /// Scores restricted to `indices`, in the given order.
    pub fn submatrix(&self, indices: &[usize]) -> ScoreMatrix {
        let rows = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.get(i, j)).collect())
            .collect();
        ScoreMatrix::from_rows(rows, self.components)
    }
}

pub fn score_matrix(matrix: &PerformanceMatrix) -> ScoreMatrix {
    score_matrix_with(matrix, DEFAULT_ZERO_HANDLING)
}

pub fn score_matrix_with(matrix: &PerformanceMatrix, zeros: ZeroHandling) -> ScoreMatrix {
    let columns: Vec<PerformanceVector> = (0..matrix.algorithm_count())
        .map(|a| matrix.column(a))
        .collect();
    let sense = matrix.sense();
    ScoreMatrix::from_upper(columns.len(), matrix.function_count(), |i, j| {
        significance_score_with(&columns[i], &columns[j], sense, zeros)
            .expect("columns of a validated matrix share length and positivity")
    })
}
