//! Brute-force reference for tie sharing.
//!
//! Instead of midranks, every way of handing out the integer award points
//! inside each tie group is enumerated and the resulting scores averaged.
//! Equal sharing of a group's points is exactly that average, so this must
//! agree with [`crate::score::significance_score`].

use crate::error::{Error, Result};
use crate::half::HalfUnit;
use crate::score::{ratio_sign_decompose, ObjectiveSense, PerformanceVector, RATIO_TOLERANCE};

/// Upper limit on the number of enumerated orderings.
pub const ORACLE_GUARD: u128 = 1_000_000;

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Average signed award over all orderings within tie groups.
pub fn permutation_average_oracle(
    x: &PerformanceVector,
    y: &PerformanceVector,
    sense: ObjectiveSense,
) -> Result<HalfUnit> {
    let parts = ratio_sign_decompose(x, y, sense)?;
    let n = parts.ratios.len();

    // Tie groups: a component joins the group of any earlier component whose
    // ratio it equals under the tolerance.
    let mut group_of: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..i {
            let (a, b) = (parts.ratios[i], parts.ratios[j]);
            if (a - b).abs() <= RATIO_TOLERANCE * a.max(b) {
                group_of[i] = group_of[j];
                break;
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut leaders: Vec<usize> = Vec::new();
    for (i, &leader) in group_of.iter().enumerate() {
        match leaders.iter().position(|&l| l == leader) {
            Some(g) => groups[g].push(i),
            None => {
                leaders.push(leader);
                groups.push(vec![i]);
            }
        }
    }

    // Ranks available to a group: 1 + (number of components with a strictly
    // smaller ratio) up to that plus the group size.
    let rank_sets: Vec<Vec<usize>> = groups
        .iter()
        .map(|g| {
            let r = parts.ratios[g[0]];
            let below = groups
                .iter()
                .filter(|h| parts.ratios[h[0]] < r)
                .map(Vec::len)
                .sum::<usize>();
            (below + 1..=below + g.len()).collect()
        })
        .collect();

    let total: u128 = groups.iter().map(|g| factorial(g.len())).product();
    if total > ORACLE_GUARD {
        return Err(Error::OracleGuard(total));
    }

    let perms: Vec<Vec<Vec<usize>>> = rank_sets.iter().map(|r| permutations(r)).collect();
    let mut odometer = vec![0usize; groups.len()];
    let mut sum: i128 = 0;
    let mut count: i128 = 0;
    loop {
        let mut d: i128 = 0;
        for (g, members) in groups.iter().enumerate() {
            let ranks = &perms[g][odometer[g]];
            for (&component, &rank) in members.iter().zip(ranks) {
                d += rank as i128 * i128::from(parts.signs[component]);
            }
        }
        sum += d;
        count += 1;

        let mut g = 0;
        loop {
            if g == groups.len() {
                let twice = 2 * sum;
                debug_assert_eq!(twice % count, 0, "average must lie on the half grid");
                return Ok(HalfUnit::from_twice((twice / count) as i64));
            }
            odometer[g] += 1;
            if odometer[g] < perms[g].len() {
                break;
            }
            odometer[g] = 0;
            g += 1;
        }
    }
}
