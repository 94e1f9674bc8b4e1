//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Algorithm numbers in messages are 1-based, in the bundled table's column
//! order.

mod common;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sigrank::dataset::{bundled_cec05_csv, CEC05_DIGEST};
use sigrank::oracle::permutation_average_oracle;
use sigrank::relation::peel_relation;
use sigrank::score::{score_bound, RATIO_TOLERANCE};
use sigrank::{
    best_set, bundled_cec05, decompose, is_cycle_free, maximum_set, midrank_awards,
    minimal_cyclefree_sigma, parse_performance_csv, rank_peeling, ratio_sign_decompose,
    relation_at, score_matrix, significance_score, strongly_connected_components, sweep,
    threshold_ladder, HalfUnit, ObjectiveSense, PerformanceVector, ScoreMatrix,
};

const TRIALS: usize = 1000;

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn h(v: i64) -> HalfUnit {
    HalfUnit::from_int(v)
}

/// 1-based index sets for comparison with the published numbering.
fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn levels_1(levels: &[Vec<usize>]) -> Vec<BTreeSet<usize>> {
    levels.iter().map(|l| set(l)).collect()
}

fn cec_scores() -> ScoreMatrix {
    score_matrix(&bundled_cec05())
}

fn criterion_1(o: &mut Outcome) {
    let x = PerformanceVector::new(vec![2.0, 8.0, 6.0]).unwrap();
    let y = PerformanceVector::new(vec![4.0, 2.0, 3.0]).unwrap();
    let parts = ratio_sign_decompose(&x, &y, ObjectiveSense::Maximize).unwrap();
    o.check(parts.ratios == [2.0, 4.0, 2.0], || {
        format!("ratios {:?}", parts.ratios)
    });
    o.check(parts.signs == [-1, 1, 1], || {
        format!("signs {:?}", parts.signs)
    });
    let awards = midrank_awards(&parts.ratios, RATIO_TOLERANCE);
    let expect = [HalfUnit::from_twice(3), h(3), HalfUnit::from_twice(3)];
    o.check(awards == expect, || format!("awards {awards:?}"));
    let d = significance_score(&x, &y, ObjectiveSense::Maximize).unwrap();
    o.check(d == h(3), || format!("D = {d}, expected 3"));
    let oracle = permutation_average_oracle(&x, &y, ObjectiveSense::Maximize).unwrap();
    o.check(oracle == h(3), || format!("oracle D = {oracle}"));
    let rel = relation_at(&ScoreMatrix::from_upper(2, 3, |_, _| d), h(2)).unwrap();
    o.check(rel.contains(0, 1), || {
        "x not related to y at sigma 2".into()
    });
}

fn criterion_2(o: &mut Outcome) {
    let scores = cec_scores();
    let r = relation_at(&scores, h(10)).unwrap();
    let max = set(&maximum_set(&r));
    o.check(max == BTreeSet::from([7]), || {
        format!("maximum set {max:?}, expected {{7}}")
    });
    let (_, out7) = r.degrees(6);
    o.check(out7 == 10, || {
        format!("G-CMA-ES out-degree {out7}, expected 10")
    });
    let (in3, _) = r.degrees(2);
    o.check(in3 == 10, || format!("CoEVO in-degree {in3}, expected 10"));
    let cyclic: Vec<BTreeSet<usize>> = strongly_connected_components(&r)
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| set(c))
        .collect();
    let expected = vec![BTreeSet::from([1, 4, 5, 10])];
    o.check(cyclic == expected, || {
        let d41 = scores.get(3, 0);
        format!(
            "non-singleton SCCs at sigma 10: {cyclic:?}, expected {expected:?} \
             (D(4,1) = {d41}; the 1-10-5-4 cycle needs D(4,1) >= 10)"
        )
    });
}

fn criterion_3(o: &mut Outcome) {
    let scores = cec_scores();
    let star = minimal_cyclefree_sigma(&scores);
    o.check(star > h(10) && star <= h(25), || {
        format!("sigma* = {star}, expected in (10, 25]")
    });
    for &s in threshold_ladder(&scores).iter().filter(|&&s| s >= star) {
        let free = is_cycle_free(&relation_at(&scores, s).unwrap());
        o.check(free, || {
            format!("cyclic at ladder value {s} >= sigma* {star}")
        });
    }
}

fn criterion_4(o: &mut Outcome) {
    let expected: Vec<BTreeSet<usize>> = vec![
        BTreeSet::from([7]),
        BTreeSet::from([1, 5, 10]),
        BTreeSet::from([4, 9, 11]),
        BTreeSet::from([2, 6, 8]),
        BTreeSet::from([3]),
    ];
    match rank_peeling(&cec_scores(), h(60)) {
        Ok(ranks) => {
            let got = levels_1(&ranks.levels);
            o.check(got == expected, || {
                format!("levels {got:?}, expected {expected:?}")
            });
        }
        Err(e) => o.check(false, || format!("peeling failed: {e}")),
    }
}

fn criterion_5(o: &mut Outcome) {
    let scores = cec_scores();
    match rank_peeling(&scores, h(100)) {
        Ok(ranks) => o.check(ranks.levels.len() == 4, || {
            format!("{} levels at sigma 100, expected 4", ranks.levels.len())
        }),
        Err(e) => o.check(false, || format!("peeling at 100 failed: {e}")),
    }
    let target = vec![
        BTreeSet::from([7]),
        BTreeSet::from([1, 2, 4, 5, 6, 8, 9, 10, 11]),
        BTreeSet::from([3]),
    ];
    let report = sweep(&scores);
    let hit = report
        .entries
        .iter()
        .find(|e| e.levels.as_deref().map(levels_1).as_ref() == Some(&target));
    o.check(hit.is_some(), || {
        let three: Vec<String> = report
            .entries
            .iter()
            .filter_map(|e| {
                let l = e.levels.as_ref()?;
                (l.len() == 3).then(|| format!("{}: {:?}", e.sigma, levels_1(l)))
            })
            .collect();
        format!(
            "no ladder entry gives {{7}} / nine others / {{3}}; 3-level entries: [{}]",
            three.join("; ")
        )
    });
}

fn criterion_6(o: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5157_2013);
    let mut tie_trials = 0;
    let mut cycle_free_trials = 0;
    for trial in 0..TRIALS {
        let m = common::random_matrix(&mut rng, 6, 8);
        let scores = score_matrix(&m);
        let k = scores.len();
        let n = m.function_count();

        // antisymmetry and zero diagonal
        for i in 0..k {
            o.check(scores.get(i, i) == HalfUnit::ZERO, || {
                format!("trial {trial}: D({i},{i}) != 0")
            });
            for j in 0..k {
                o.check(scores.get(i, j) == -scores.get(j, i), || {
                    format!("trial {trial}: D not antisymmetric at ({i},{j})")
                });
            }
        }

        // nestedness over adjacent ladder values
        let ladder = threshold_ladder(&scores);
        for w in ladder.windows(2) {
            let lo = relation_at(&scores, w[0]).unwrap();
            let hi = relation_at(&scores, w[1]).unwrap();
            o.check(hi.edges().is_subset(lo.edges()), || {
                format!("trial {trial}: R({}) not inside R({})", w[1], w[0])
            });
        }

        // emptiness past the bound
        let past = relation_at(&scores, score_bound(n) + HalfUnit::HALF).unwrap();
        o.check(past.is_empty(), || {
            format!("trial {trial}: relation non-empty past bound")
        });

        // horizontal scale-freeness
        let rescaled = score_matrix(&common::rescale_rows(&mut rng, &m));
        o.check(rescaled == scores, || {
            format!("trial {trial}: rescaling changed scores")
        });

        // sense duality and oracle equality, on every column pair
        for i in 0..k {
            for j in 0..k {
                let (x, y) = (m.column(i), m.column(j));
                let min_xy = significance_score(&x, &y, ObjectiveSense::Minimize).unwrap();
                let max_yx = significance_score(&y, &x, ObjectiveSense::Maximize).unwrap();
                o.check(min_xy == max_yx, || {
                    format!("trial {trial}: sense duality at ({i},{j})")
                });

                let parts = ratio_sign_decompose(&x, &y, m.sense()).unwrap();
                let mut sorted = parts.ratios.clone();
                sorted.sort_by(f64::total_cmp);
                let has_tie = sorted
                    .windows(2)
                    .any(|w| (w[1] - w[0]).abs() <= RATIO_TOLERANCE * w[1]);
                if has_tie {
                    tie_trials += 1;
                    let oracle = permutation_average_oracle(&x, &y, m.sense()).unwrap();
                    o.check(oracle == scores.get(i, j), || {
                        format!(
                            "trial {trial}: oracle {oracle} != D {} at ({i},{j})",
                            scores.get(i, j)
                        )
                    });
                }
            }
        }

        // relation queries against definition scans, at every ladder value and its half step
        for &s in &ladder {
            for sigma in [s, s + HalfUnit::HALF] {
                let r = relation_at(&scores, sigma).unwrap();
                o.check(maximum_set(&r) == common::brute_maximum_set(&r), || {
                    format!("trial {trial}: maximum set at {sigma}")
                });
                o.check(best_set(&r) == common::brute_best_set(&r), || {
                    format!("trial {trial}: best set at {sigma}")
                });
                let free = is_cycle_free(&r);
                o.check(free == !common::brute_has_cycle(&r), || {
                    format!("trial {trial}: cycle detection at {sigma}")
                });

                // peeling yields a linear extension of P(R)
                if free {
                    cycle_free_trials += 1;
                    let ranks = peel_relation(&r).unwrap();
                    let ok = decompose(&r)
                        .asymmetric
                        .iter()
                        .all(|&(a, b)| ranks.level_of(a) < ranks.level_of(b));
                    let placed: usize = ranks.levels.iter().map(Vec::len).sum();
                    o.check(ok && placed == k, || {
                        format!("trial {trial}: peeling at {sigma}")
                    });
                }
            }
        }
    }
    o.check(tie_trials > TRIALS, || {
        format!("only {tie_trials} tied pairs exercised the oracle")
    });
    o.check(cycle_free_trials > TRIALS, || {
        "too few cycle-free instances".into()
    });
}

fn criterion_7(o: &mut Outcome) {
    let m = bundled_cec05();
    let count: usize = m.rows().iter().map(Vec::len).sum();
    o.check(count == 275, || format!("{count} values, expected 275"));
    o.check(m.digest() == CEC05_DIGEST, || "digest mismatch".into());
    let f3 = m.cell("f3", "BLX-GL50");
    o.check(f3 == Some(5.71e2), || format!("(f3, BLX-GL50) = {f3:?}"));
    let f24 = m.cell("f24", "L-CMA-ES");
    o.check(f24 == Some(865.0), || format!("(f24, L-CMA-ES) = {f24:?}"));
    let again = parse_performance_csv(&m.to_csv(), m.sense(), false).unwrap();
    o.check(again == m, || {
        "serialize -> parse changed the matrix".into()
    });
    let raw = parse_performance_csv(bundled_cec05_csv(), ObjectiveSense::Minimize, false).unwrap();
    o.check(raw == m, || {
        "bundled text disagrees with bundled matrix".into()
    });
}

type Criterion = (&'static str, fn(&mut Outcome));

fn main() {
    let criteria: [Criterion; 7] = [
        ("worked example D((2,8,6),(4,2,3)) = 3, exact", criterion_1),
        (
            "CEC'05 sigma=10: winner 7, loser 3, single cycle {1,4,5,10}",
            criterion_2,
        ),
        (
            "minimal cycle-free sigma in (10, 25], cycle-free above it",
            criterion_3,
        ),
        (
            "CEC'05 sigma=60: five levels {7} {1,5,10} {4,9,11} {2,6,8} {3}",
            criterion_4,
        ),
        (
            "CEC'05 sigma=100: four levels; some level gives {7} / nine / {3}",
            criterion_5,
        ),
        (
            "property suite, 1000 random instances up to 6 x 8",
            criterion_6,
        ),
        ("bundled data integrity and CSV round trip", criterion_7),
    ];
    let mut failed = 0;
    for (n, (title, run)) in criteria.iter().enumerate() {
        let mut outcome = Outcome::new();
        run(&mut outcome);
        if outcome.failures.is_empty() {
            println!("PASS  [{}] {title}", n + 1);
        } else {
            failed += 1;
            println!("FAIL  [{}] {title}", n + 1);
            for f in outcome.failures.iter().take(10) {
                println!("        - {f}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
