//! Tie-grouped rankings and rank-correlation analysis.

use std::collections::HashSet;

use crate::centrality::{CentralityResult, Method};
use crate::error::{Error, Result};

/// Which side of a centrality result to rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Hub,
    Authority,
}

impl Side {
    pub fn scores<'a>(&self, result: &'a CentralityResult) -> &'a [f64] {
        match self {
            Side::Hub => &result.hub,
            Side::Authority => &result.authority,
        }
    }
}

/// Ranking as an ordered sequence of ex-aequo groups of 0-based node ids,
/// best group first. Within a group, members are ordered by score
/// descending with smaller id breaking ties.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    groups: Vec<Vec<usize>>,
    tie_tol: f64,
}

impl Ranking {
    /// Build a ranking from explicit groups (used mostly by tests and
    /// renderers); groups must partition `0..n` for some `n`.
    pub fn from_groups(groups: Vec<Vec<usize>>, tie_tol: f64) -> Result<Self> {
        let mut all: Vec<usize> = groups.iter().flatten().copied().collect();
        let n = all.len();
        all.sort_unstable();
        if all.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::InvalidParameter(format!(
                "groups do not partition 0..{n}"
            )));
        }
        Ok(Self { groups, tie_tol })
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn tie_tol(&self) -> f64 {
        self.tie_tol
    }

    pub fn n(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    /// Group index (0 = best) of every node.
    pub fn group_of(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.n()];
        for (g, group) in self.groups.iter().enumerate() {
            for &node in group {
                out[node] = g;
            }
        }
        out
    }

    /// Per-node rank value where ties are exact and larger means better;
    /// suitable as input to [`kendall_tau`].
    pub fn rank_values(&self) -> Vec<f64> {
        let num_groups = self.groups.len();
        self.group_of()
            .into_iter()
            .map(|g| (num_groups - g) as f64)
            .collect()
    }

    /// The top `k` node ids: whole tie groups are taken until at least `k`
    /// nodes are included, then the final group is truncated in its stored
    /// order (score descending, id ascending). `k` is capped at `n`.
    pub fn top_k_ids(&self, k: usize) -> Vec<usize> {
        let k = k.min(self.n());
        let mut out = Vec::with_capacity(k);
        for group in &self.groups {
            for &node in group {
                if out.len() == k {
                    return out;
                }
                out.push(node);
            }
        }
        out
    }
}

/// Sort scores descending and chain-merge consecutive values within
/// `tie_tol` into ex-aequo groups.
pub fn rank_with_ties(scores: &[f64], tie_tol: f64) -> Ranking {
    assert!(tie_tol >= 0.0, "tie tolerance must be nonnegative");
    let mut order: Vec<usize> = (0..scores.len()).collect();
    // descending score, ascending id on exact ties
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));

    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut prev_score = f64::INFINITY;
    for &node in &order {
        let score = scores[node];
        if !groups.is_empty() && (prev_score - score) <= tie_tol {
            groups.last_mut().unwrap().push(node);
        } else {
            groups.push(vec![node]);
        }
        prev_score = score;
    }
    Ranking { groups, tie_tol }
}

/// Number of ids shared by the top-k selections of two rankings.
pub fn topk_overlap(r1: &Ranking, r2: &Ranking, k: usize) -> usize {
    let top1: HashSet<usize> = r1.top_k_ids(k).into_iter().collect();
    r2.top_k_ids(k)
        .iter()
        .filter(|id| top1.contains(id))
        .count()
}

/// Kendall's tau-b between two score vectors, ties corrected in both.
///
/// Over all `n(n-1)/2` index pairs, with `C` concordant, `D` discordant,
/// `T1`/`T2` the pairs tied in the first/second vector:
/// `tau = (C - D) / sqrt((P - T1) * (P - T2))`.
/// Sorting plus merge-sort inversion counting keeps this `O(n log n)`.
pub fn kendall_tau(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let n = x.len();
    if n < 2 {
        return Err(Error::ZeroVariance);
    }
    if x.iter().chain(y.iter()).any(|v| v.is_nan()) {
        return Err(Error::InvalidParameter("scores must not be NaN".into()));
    }

    // canonicalize -0.0 so total order and equality agree
    let mut pairs: Vec<(f64, f64)> = x.iter().zip(y).map(|(&a, &b)| (a + 0.0, b + 0.0)).collect();
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));

    let pairs_in = |run: i64| run * (run - 1) / 2;

    // tied pairs in x, and in both, from runs of the (x, y)-sorted list
    let mut tied_x: i64 = 0;
    let mut tied_both: i64 = 0;
    let mut x_run: i64 = 1;
    let mut xy_run: i64 = 1;
    for i in 1..n {
        if pairs[i].0 == pairs[i - 1].0 {
            x_run += 1;
            if pairs[i].1 == pairs[i - 1].1 {
                xy_run += 1;
            } else {
                tied_both += pairs_in(xy_run);
                xy_run = 1;
            }
        } else {
            tied_x += pairs_in(x_run);
            x_run = 1;
            tied_both += pairs_in(xy_run);
            xy_run = 1;
        }
    }
    tied_x += pairs_in(x_run);
    tied_both += pairs_in(xy_run);

    // discordant pairs are strict inversions of the y sequence
    let mut ys: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    let mut buffer = vec![0.0f64; n];
    let discordant = count_inversions(&mut ys, &mut buffer);

    // ys is now sorted; count tied pairs in y
    let mut tied_y: i64 = 0;
    let mut y_run: i64 = 1;
    for i in 1..n {
        if ys[i] == ys[i - 1] {
            y_run += 1;
        } else {
            tied_y += pairs_in(y_run);
            y_run = 1;
        }
    }
    tied_y += pairs_in(y_run);

    let total = (n as i64) * (n as i64 - 1) / 2;
    if tied_x == total || tied_y == total {
        return Err(Error::ZeroVariance);
    }
    let numerator = total - tied_x - tied_y + tied_both - 2 * discordant;
    Ok(numerator as f64 / (((total - tied_x) as f64) * ((total - tied_y) as f64)).sqrt())
}

/// Merge-sort counting strict inversions (`left > right`); `data` ends up
/// sorted ascending.
fn count_inversions(data: &mut [f64], buffer: &mut [f64]) -> i64 {
    let n = data.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let (left, right) = data.split_at_mut(mid);
    let mut inversions = count_inversions(left, buffer) + count_inversions(right, buffer);

    let mut i = 0;
    let mut j = 0;
    let mut out = 0;
    while i < left.len() && j < right.len() {
        if left[i] <= right[j] {
            buffer[out] = left[i];
            i += 1;
        } else {
            inversions += (left.len() - i) as i64;
            buffer[out] = right[j];
            j += 1;
        }
        out += 1;
    }
    while i < left.len() {
        buffer[out] = left[i];
        i += 1;
        out += 1;
    }
    while j < right.len() {
        buffer[out] = right[j];
        j += 1;
        out += 1;
    }
    data.copy_from_slice(&buffer[..n]);
    inversions
}

/// Pairwise comparison matrices over one side of several results.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub methods: Vec<Method>,
    /// Kendall tau-b between tie-grouped rankings; diagonal is 1.
    pub tau: Vec<Vec<f64>>,
    /// Shared ids among top-k selections; diagonal is `min(k, n)`.
    pub topk_overlap: Vec<Vec<usize>>,
    pub k: usize,
}

/// Compare every pair of results on the chosen side.
///
/// Scores are first converted to tie-grouped rankings with `tie_tol`, and
/// tau is computed on the grouped rank values: nodes that a method cannot
/// distinguish (symmetric positions, zero-degree groups) then count as
/// honest ties instead of noise-ordered values.
pub fn comparison_report(
    results: &[CentralityResult],
    side: Side,
    k: usize,
    tie_tol: f64,
) -> Result<ComparisonReport> {
    if results.is_empty() {
        return Err(Error::InvalidParameter("no results to compare".into()));
    }
    let n = results[0].n();
    for result in results {
        if result.n() != n {
            return Err(Error::LengthMismatch {
                left: result.n(),
                right: n,
            });
        }
    }

    let rankings: Vec<Ranking> = results
        .iter()
        .map(|r| rank_with_ties(side.scores(r), tie_tol))
        .collect();
    let rank_values: Vec<Vec<f64>> = rankings.iter().map(Ranking::rank_values).collect();

    let m = results.len();
    let mut tau = vec![vec![1.0f64; m]; m];
    let mut overlap = vec![vec![0usize; m]; m];
    for i in 0..m {
        overlap[i][i] = topk_overlap(&rankings[i], &rankings[i], k);
        for j in (i + 1)..m {
            let t = kendall_tau(&rank_values[i], &rank_values[j])?;
            tau[i][j] = t;
            tau[j][i] = t;
            let o = topk_overlap(&rankings[i], &rankings[j], k);
            overlap[i][j] = o;
            overlap[j][i] = o;
        }
    }

    Ok(ComparisonReport {
        methods: results.iter().map(|r| r.method).collect(),
        tau,
        topk_overlap: overlap,
        k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_with_ties_basic() {
        let r = rank_with_ties(&[0.5, 0.5, 0.1], 1e-8);
        assert_eq!(r.groups(), &[vec![0, 1], vec![2]]);
    }

    #[test]
    fn rank_with_ties_hits_path() {
        let r = rank_with_ties(&[0.57735, 0.57735, 0.57735, 0.0], 1e-8);
        assert_eq!(r.groups(), &[vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn rank_with_ties_strict_order() {
        let r = rank_with_ties(&[0.1, 0.9, 0.5], 0.0);
        assert_eq!(r.groups(), &[vec![1], vec![2], vec![0]]);
        assert_eq!(r.rank_values(), vec![1.0, 3.0, 2.0]);
    }

    #[test]
    fn from_groups_validates_partition() {
        assert!(Ranking::from_groups(vec![vec![0, 2], vec![1]], 0.0).is_ok());
        assert!(Ranking::from_groups(vec![vec![0, 2]], 0.0).is_err());
        assert!(Ranking::from_groups(vec![vec![0], vec![0, 1]], 0.0).is_err());
    }

    #[test]
    fn top_k_respects_groups_and_truncation() {
        let r = Ranking::from_groups(vec![vec![4], vec![0, 1, 2], vec![3]], 0.0).unwrap();
        assert_eq!(r.top_k_ids(1), vec![4]);
        assert_eq!(r.top_k_ids(3), vec![4, 0, 1]);
        assert_eq!(r.top_k_ids(10), vec![4, 0, 1, 2, 3]);
    }

    #[test]
    fn overlap_of_published_top10_lists() {
        // two top-10 hub lists over 128 nodes sharing 8 entries
        let list_a = [15, 1, 3, 13, 10, 31, 12, 68, 26, 16];
        let list_b = [15, 1, 3, 13, 10, 31, 12, 16, 27, 25];
        let to_ranking = |top: &[usize]| {
            let mut groups: Vec<Vec<usize>> = top.iter().map(|&v| vec![v - 1]).collect();
            let rest: Vec<usize> = (0..128).filter(|v| !top.contains(&(v + 1))).collect();
            groups.push(rest);
            Ranking::from_groups(groups, 1e-8).unwrap()
        };
        let overlap = topk_overlap(&to_ranking(&list_a), &to_ranking(&list_b), 10);
        assert_eq!(overlap, 8);
    }

    fn tau_brute(x: &[f64], y: &[f64]) -> f64 {
        let n = x.len();
        let mut concordant = 0i64;
        let mut discordant = 0i64;
        let mut tied_x = 0i64;
        let mut tied_y = 0i64;
        for i in 0..n {
            for j in (i + 1)..n {
                let dx = (x[i] + 0.0).total_cmp(&(x[j] + 0.0));
                let dy = (y[i] + 0.0).total_cmp(&(y[j] + 0.0));
                if dx.is_eq() {
                    tied_x += 1;
                }
                if dy.is_eq() {
                    tied_y += 1;
                }
                if dx.is_eq() || dy.is_eq() {
                    continue;
                }
                if dx == dy {
                    concordant += 1;
                } else {
                    discordant += 1;
                }
            }
        }
        let total = (n as i64) * (n as i64 - 1) / 2;
        (concordant - discordant) as f64
            / (((total - tied_x) as f64) * ((total - tied_y) as f64)).sqrt()
    }

    #[test]
    fn tau_identical_and_reversed() {
        let x = [3.0, 1.0, 2.0, 5.0];
        assert_eq!(kendall_tau(&x, &x).unwrap(), 1.0);
        let rev = [2.0, 4.0, 3.0, 0.0];
        assert_eq!(kendall_tau(&x, &rev).unwrap(), -1.0);
    }

    #[test]
    fn tau_with_ties_matches_enumeration() {
        let x = [3.0, 2.0, 1.0, 1.0];
        let y = [3.0, 1.0, 2.0, 2.0];
        let fast = kendall_tau(&x, &y).unwrap();
        assert_eq!(fast, tau_brute(&x, &y));
        assert!((fast - 0.2).abs() < 1e-15);
    }

    #[test]
    fn tau_zero_variance_is_error() {
        assert!(matches!(
            kendall_tau(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]),
            Err(Error::ZeroVariance)
        ));
        assert!(matches!(
            kendall_tau(&[1.0], &[2.0]),
            Err(Error::ZeroVariance)
        ));
    }

    #[test]
    fn tau_is_symmetric() {
        let x = [1.0, 3.0, 2.0, 2.0, 0.5];
        let y = [2.0, 2.0, 1.0, 4.0, 4.0];
        assert_eq!(kendall_tau(&x, &y).unwrap(), kendall_tau(&y, &x).unwrap());
    }

    #[test]
    fn comparison_report_shape() {
        use crate::centrality::{CentralityResult, Normalization};
        let a = CentralityResult {
            method: Method::Hits,
            hub: vec![0.9, 0.3, 0.1],
            authority: vec![0.1, 0.3, 0.9],
            normalization: Normalization::TwoNorm,
        };
        let b = CentralityResult {
            method: Method::Bek,
            hub: vec![2.0, 1.5, 1.0],
            authority: vec![1.0, 1.5, 2.0],
            normalization: Normalization::RawExpDiagonal,
        };
        let report = comparison_report(&[a, b], Side::Hub, 2, 1e-8).unwrap();
        assert_eq!(report.methods, vec![Method::Hits, Method::Bek]);
        assert_eq!(report.tau[0][0], 1.0);
        assert_eq!(report.tau[0][1], 1.0);
        assert_eq!(report.tau[0][1], report.tau[1][0]);
        assert_eq!(report.topk_overlap[0][1], 2);
    }

    #[test]
    fn comparison_report_single_method() {
        use crate::centrality::{CentralityResult, Normalization};
        let a = CentralityResult {
            method: Method::Cqau,
            hub: vec![0.4, 0.6],
            authority: vec![0.6, 0.4],
            normalization: Normalization::OccupationSum,
        };
        let report = comparison_report(&[a], Side::Authority, 1, 1e-8).unwrap();
        assert_eq!(report.tau, vec![vec![1.0]]);
        assert_eq!(report.topk_overlap, vec![vec![1]]);
    }
}
