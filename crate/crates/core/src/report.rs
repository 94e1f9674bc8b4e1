//! DOT, JSON, and plain-text renderings of relations, ranks, and sweeps.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::HalfUnit;
use crate::relation::{
    decompose, transitive_reduction, RankStructure, SignificanceRelation, SweepReport,
};
use crate::score::ScoreMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelMode {
    /// 1-based algorithm numbers.
    #[default]
    Index,
    Name,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeReduction {
    #[default]
    Full,
    TransitiveReduction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RenderOptions {
    pub label_mode: LabelMode,
    pub edge_reduction: EdgeReduction,
    /// Annotate arcs with their score; needs the score matrix.
    pub include_scores: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Directed graph of P(R): one node per algorithm, one arc per pair.
///
/// Nodes and arcs are emitted in index order so the output is byte-stable.
pub fn to_dot(
    relation: &SignificanceRelation,
    names: &[String],
    options: &RenderOptions,
    scores: Option<&ScoreMatrix>,
) -> Result<String> {
    let k = relation.domain_size();
    if names.len() != k {
        return Err(Error::LabelCount {
            expected: k,
            got: names.len(),
        });
    }
    let arcs = match options.edge_reduction {
        EdgeReduction::Full => decompose(relation).asymmetric,
        EdgeReduction::TransitiveReduction => transitive_reduction(relation),
    };

    let mut out = String::new();
    writeln!(out, "digraph significance {{").unwrap();
    writeln!(
        out,
        "  label={};",
        quote(&format!("sigma = {}", relation.sigma()))
    )
    .unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (i, name) in names.iter().enumerate() {
        let label = match options.label_mode {
            LabelMode::Index => (i + 1).to_string(),
            LabelMode::Name => name.clone(),
        };
        writeln!(
            out,
            "  {} [label={}, tooltip={}];",
            i + 1,
            quote(&label),
            quote(name)
        )
        .unwrap();
    }
    for (i, j) in arcs {
        match scores.filter(|_| options.include_scores) {
            Some(s) => writeln!(
                out,
                "  {} -> {} [label={}];",
                i + 1,
                j + 1,
                quote(&s.get(i, j).to_string())
            ),
            None => writeln!(out, "  {} -> {};", i + 1, j + 1),
        }
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// JSON shape of a rank listing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RanksDocument {
    pub sigma: HalfUnit,
    pub levels: Vec<Vec<String>>,
}

pub fn render_ranks(ranks: &RankStructure, names: &[String], format: Format) -> Result<String> {
    let k: usize = ranks.levels.iter().map(Vec::len).sum();
    if names.len() != k {
        return Err(Error::LabelCount {
            expected: k,
            got: names.len(),
        });
    }
    let levels: Vec<Vec<String>> = ranks
        .levels
        .iter()
        .map(|level| {
            let mut idx = level.clone();
            idx.sort_unstable();
            idx.into_iter().map(|i| names[i].clone()).collect()
        })
        .collect();
    Ok(match format {
        Format::Json => {
            let doc = RanksDocument {
                sigma: ranks.sigma,
                levels,
            };
            serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
        }
        Format::Text => {
            let mut out = format!("sigma = {}, {} levels\n", ranks.sigma, levels.len());
            for (t, (names, idx)) in levels.iter().zip(&ranks.levels).enumerate() {
                let mut idx = idx.clone();
                idx.sort_unstable();
                let items: Vec<String> = names
                    .iter()
                    .zip(idx)
                    .map(|(n, i)| format!("{n} ({})", i + 1))
                    .collect();
                writeln!(out, "{:>3}. {}", t + 1, items.join(", ")).unwrap();
            }
            out
        }
    })
}

/// Left-aligned columns padded to their widest cell.
pub(crate) fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let padded: Vec<String> = cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

pub fn render_sweep(report: &SweepReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("plain data serializes") + "\n",
        Format::Text => {
            let rows: Vec<Vec<String>> = report
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.sigma.to_string(),
                        e.edge_count.to_string(),
                        e.cycle_free.to_string(),
                        e.maximum_set.len().to_string(),
                        e.scc_list
                            .iter()
                            .map(Vec::len)
                            .max()
                            .unwrap_or(0)
                            .to_string(),
                        e.levels
                            .as_ref()
                            .map_or("-".to_string(), |l| l.len().to_string()),
                    ]
                })
                .collect();
            table(
                &[
                    "sigma",
                    "edges",
                    "cycle_free",
                    "max_set",
                    "largest_scc",
                    "levels",
                ],
                &rows,
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoresDocument {
    pub algorithms: Vec<String>,
    pub scores: Vec<Vec<HalfUnit>>,
}

pub fn render_scores(scores: &ScoreMatrix, names: &[String], format: Format) -> Result<String> {
    if names.len() != scores.len() {
        return Err(Error::LabelCount {
            expected: scores.len(),
            got: names.len(),
        });
    }
    Ok(match format {
        Format::Json => {
            let doc = ScoresDocument {
                algorithms: names.to_vec(),
                scores: scores.rows().map(<[HalfUnit]>::to_vec).collect(),
            };
            serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
        }
        Format::Text => {
            let mut header = vec![String::new()];
            header.extend((1..=names.len()).map(|i| i.to_string()));
            let rows: Vec<Vec<String>> = scores
                .rows()
                .enumerate()
                .map(|(i, row)| {
                    let mut r = vec![format!("{} {}", i + 1, names[i])];
                    r.extend(row.iter().map(HalfUnit::to_string));
                    r
                })
                .collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            table(&header, &rows)
        }
    })
}
