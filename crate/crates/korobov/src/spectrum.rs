use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::params::KorobovParams;
use crate::zeta::riemann_zeta;

/// Default cap on the best-first frontier size.
pub const FRONTIER_CAP: usize = 10_000_000;

/// Default budget on brute-force box enumeration, counted as `d * (2*kmax+1)^d`.
pub const BRUTE_FORCE_BUDGET: u64 = 10_000_000;

/// Univariate eigenvalue `r(k) = 1` for `k = 0`, else `gamma / |k|^(2*alpha)`.
pub fn univariate_r(k: i64, alpha: f64, gamma: f64) -> f64 {
    if k == 0 {
        1.0
    } else {
        gamma / (k.unsigned_abs() as f64).powf(2.0 * alpha)
    }
}

/// Product eigenvalue `prod_j r_{alpha_j, gamma_j}(k_j)` over `d` coordinates.
pub fn product_r(kvec: &[i64], params: &KorobovParams, d: usize) -> Result<f64> {
    if kvec.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: kvec.len(),
        });
    }
    let mut value = 1.0;
    for (i, &k) in kvec.iter().enumerate() {
        value *= univariate_r(k, params.alpha(i + 1), params.gamma(i + 1));
    }
    Ok(value)
}

/// Rank-ordered view of one coordinate's eigenvalue ladder.
///
/// Ranks are 1-based and count multiplicity: rank 1 is `k = 0` with value 1,
/// ranks `2m` and `2m+1` are `k = +m` and `k = -m` sharing the value at `|k| = m`.
#[derive(Debug, Clone, Copy)]
pub struct UnivariateLadder {
    alpha: f64,
    gamma: f64,
}

impl UnivariateLadder {
    pub fn new(alpha: f64, gamma: f64) -> Self {
        UnivariateLadder { alpha, gamma }
    }

    pub fn from_params(params: &KorobovParams, j: usize) -> Self {
        UnivariateLadder {
            alpha: params.alpha(j),
            gamma: params.gamma(j),
        }
    }

    /// Eigenvalue at frequency magnitude `|k|`.
    pub fn eigenvalue(&self, abs_k: u64) -> f64 {
        univariate_r(abs_k as i64, self.alpha, self.gamma)
    }

    /// `(k, eigenvalue)` at the given 1-based rank.
    pub fn rank_entry(&self, rank: u64) -> (i64, f64) {
        assert!(rank >= 1, "ladder rank is 1-based");
        let m = rank / 2;
        let k = if rank % 2 == 0 { m as i64 } else { -(m as i64) };
        (k, self.eigenvalue(m))
    }
}

/// One eigenpair of the approximation operator: the frequency vector and the
/// eigenvalue `prod_j r(k_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenEntry {
    pub index: Vec<i64>,
    pub value: f64,
}

fn degree(index: &[i64]) -> u64 {
    index.iter().map(|k| k.unsigned_abs()).sum()
}

/// Total order used for spectrum enumeration: value descending, then total
/// degree `sum |k_j|` ascending, then `(|k_1|, ..., |k_d|)` lexicographically
/// ascending, then sign pattern with `+` before `-` per coordinate.
pub fn spectral_cmp(a: &EigenEntry, b: &EigenEntry) -> Ordering {
    b.value
        .total_cmp(&a.value)
        .then_with(|| degree(&a.index).cmp(&degree(&b.index)))
        .then_with(|| {
            for (x, y) in a.index.iter().zip(&b.index) {
                match x.unsigned_abs().cmp(&y.unsigned_abs()) {
                    Ordering::Equal => {}
                    other => return other,
                }
            }
            Ordering::Equal
        })
        .then_with(|| {
            for (x, y) in a.index.iter().zip(&b.index) {
                match (*x < 0).cmp(&(*y < 0)) {
                    Ordering::Equal => {}
                    other => return other,
                }
            }
            Ordering::Equal
        })
}

/// Heap node over rank vectors `(|k_1|, ..., |k_active|)`; `Ord` mirrors
/// [`spectral_cmp`] so the max-heap pops the next entry to emit.
#[derive(Debug, Clone)]
struct Node {
    value: f64,
    degree: u64,
    ranks: Vec<u32>,
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value
            .total_cmp(&other.value)
            .then_with(|| other.degree.cmp(&self.degree))
            .then_with(|| other.ranks.cmp(&self.ranks))
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Node {}

/// Lazily emits the spectrum in [`spectral_cmp`] order via best-first search
/// over per-coordinate magnitudes, expanding signs at emission.
///
/// Coordinates whose weight is zero are pinned to `k_j = 0`; if every weight
/// is zero the positive spectrum is exhausted after `k = 0` and the null
/// eigenvalue's frequencies follow in degree-then-lex order.
pub struct SpectrumIterator {
    d: usize,
    active: usize,
    ladders: Vec<Vec<f64>>,
    alphas: Vec<f64>,
    gammas: Vec<f64>,
    frontier_cap: usize,
    heap: BinaryHeap<Node>,
    seen: HashSet<Vec<u32>>,
    pending: VecDeque<EigenEntry>,
    zero_degree: u64,
    failed: bool,
}

impl SpectrumIterator {
    pub fn new(params: &KorobovParams, d: usize) -> Self {
        assert!(d >= 1, "dimension must be at least 1");
        let gammas: Vec<f64> = (1..=d).map(|j| params.gamma(j)).collect();
        let alphas: Vec<f64> = (1..=d).map(|j| params.alpha(j)).collect();
        let active = gammas.iter().take_while(|g| **g > 0.0).count();

        let mut heap = BinaryHeap::new();
        let mut seen = HashSet::new();
        let mut pending = VecDeque::new();
        if active > 0 {
            let root = vec![0u32; active];
            seen.insert(root.clone());
            heap.push(Node {
                value: 1.0,
                degree: 0,
                ranks: root,
            });
        } else {
            pending.push_back(EigenEntry {
                index: vec![0; d],
                value: 1.0,
            });
        }
        SpectrumIterator {
            d,
            active,
            ladders: vec![vec![1.0]; active],
            alphas,
            gammas,
            frontier_cap: FRONTIER_CAP,
            heap,
            seen,
            pending,
            zero_degree: 0,
            failed: false,
        }
    }

    pub fn with_frontier_cap(mut self, cap: usize) -> Self {
        self.frontier_cap = cap;
        self
    }

    fn ladder_value(&mut self, coord: usize, rank: u32) -> f64 {
        let ladder = &mut self.ladders[coord];
        while ladder.len() <= rank as usize {
            let m = ladder.len() as i64;
            ladder.push(univariate_r(m, self.alphas[coord], self.gammas[coord]));
        }
        ladder[rank as usize]
    }

    fn node_value(&mut self, ranks: &[u32]) -> f64 {
        let mut value = 1.0;
        for coord in 0..ranks.len() {
            value *= self.ladder_value(coord, ranks[coord]);
        }
        value
    }

    /// Queues every signed variant of a magnitude vector, `+` before `-`.
    fn expand_signs(&mut self, ranks: &[u32], value: f64) {
        let positions: Vec<usize> = (0..ranks.len()).filter(|&c| ranks[c] > 0).collect();
        let z = positions.len();
        for mask in 0u64..(1u64 << z) {
            let mut index = vec![0i64; self.d];
            for (bit, &pos) in positions.iter().enumerate() {
                let magnitude = ranks[pos] as i64;
                index[pos] = if mask >> (z - 1 - bit) & 1 == 1 {
                    -magnitude
                } else {
                    magnitude
                };
            }
            self.pending.push_back(EigenEntry { index, value });
        }
    }

    /// Next block of null-spectrum frequencies: all magnitude vectors of the
    /// next total degree in lexicographic order, signs expanded.
    fn refill_null_block(&mut self) {
        self.zero_degree += 1;
        let mut stack = vec![0u32; self.d];
        self.fill_compositions(&mut stack, 0, self.zero_degree as u32);
    }

    fn fill_compositions(&mut self, partial: &mut Vec<u32>, coord: usize, remaining: u32) {
        if coord + 1 == self.d {
            partial[coord] = remaining;
            let ranks = partial.clone();
            self.expand_signs(&ranks, 0.0);
            partial[coord] = 0;
            return;
        }
        for head in 0..=remaining {
            partial[coord] = head;
            self.fill_compositions(partial, coord + 1, remaining - head);
        }
        partial[coord] = 0;
    }
}

impl Iterator for SpectrumIterator {
    type Item = Result<EigenEntry>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        loop {
            if let Some(entry) = self.pending.pop_front() {
                return Some(Ok(entry));
            }
            if self.active == 0 {
                self.refill_null_block();
                continue;
            }
            let node = self.heap.pop()?;
            for coord in 0..self.active {
                let mut child = node.ranks.clone();
                child[coord] += 1;
                if self.seen.insert(child.clone()) {
                    let value = self.node_value(&child);
                    self.heap.push(Node {
                        value,
                        degree: node.degree + 1,
                        ranks: child,
                    });
                }
            }
            if self.heap.len() > self.frontier_cap {
                self.failed = true;
                return Some(Err(Error::ResourceLimit {
                    what: "spectrum frontier",
                    limit: self.frontier_cap as u64,
                }));
            }
            let (ranks, value) = (node.ranks, node.value);
            let mut padded = ranks;
            padded.resize(self.d, 0);
            self.expand_signs(&padded, value);
        }
    }
}

/// First `n` eigenpairs in [`spectral_cmp`] order.
pub fn enumerate_top(params: &KorobovParams, d: usize, n: usize) -> Result<Vec<EigenEntry>> {
    SpectrumIterator::new(params, d).take(n).collect()
}

/// The `n`-th largest eigenvalue (1-based), ties counted with multiplicity.
pub fn nth_eigenvalue(params: &KorobovParams, d: usize, n: usize) -> Result<f64> {
    assert!(n >= 1, "eigenvalue rank is 1-based");
    match SpectrumIterator::new(params, d).nth(n - 1) {
        Some(entry) => Ok(entry?.value),
        None => unreachable!("spectrum is infinite for d >= 1"),
    }
}

/// Worst-case error of the optimal rank-`n` algorithm, `sqrt(lambda_{n+1})`;
/// `n = 0` returns 1 (approximating by zero).
pub fn worst_case_error(params: &KorobovParams, d: usize, n: usize) -> Result<f64> {
    if n == 0 {
        return Ok(1.0);
    }
    Ok(nth_eigenvalue(params, d, n + 1)?.sqrt())
}

/// All eigenpairs with `max_j |k_j| <= kmax`, sorted by [`spectral_cmp`].
///
/// Only a prefix of this list agrees with the true spectrum; see
/// [`certified_prefix_len`].
pub fn brute_force_spectrum(
    params: &KorobovParams,
    d: usize,
    kmax: u32,
) -> Result<Vec<EigenEntry>> {
    assert!(d >= 1, "dimension must be at least 1");
    let side = 2 * kmax as u128 + 1;
    let work = side
        .checked_pow(d as u32)
        .and_then(|boxes| boxes.checked_mul(d as u128));
    match work {
        Some(w) if w <= BRUTE_FORCE_BUDGET as u128 => {}
        _ => {
            return Err(Error::ResourceLimit {
                what: "brute-force box",
                limit: BRUTE_FORCE_BUDGET,
            })
        }
    }

    let mut entries = Vec::new();
    let mut kvec = vec![-(kmax as i64); d];
    loop {
        entries.push(EigenEntry {
            index: kvec.clone(),
            value: product_r(&kvec, params, d)?,
        });
        let mut coord = d;
        loop {
            if coord == 0 {
                let mut sorted = entries;
                sorted.sort_by(spectral_cmp);
                return Ok(sorted);
            }
            coord -= 1;
            if kvec[coord] < kmax as i64 {
                kvec[coord] += 1;
                break;
            }
            kvec[coord] = -(kmax as i64);
        }
    }
}

/// Length of the leading run of `entries` certified to match the true
/// spectrum: entries whose value exceeds every eigenvalue outside the box
/// `max_j |k_j| <= kmax`, i.e. exceeds `max_j r(kmax + 1)` in coordinate `j`.
pub fn certified_prefix_len(
    entries: &[EigenEntry],
    params: &KorobovParams,
    d: usize,
    kmax: u32,
) -> usize {
    let outside = (1..=d)
        .map(|j| univariate_r(kmax as i64 + 1, params.alpha(j), params.gamma(j)))
        .fold(0.0f64, f64::max);
    entries
        .iter()
        .take_while(|entry| entry.value > outside)
        .count()
}

/// Exact value of `sum_n lambda_{d,n}^tau` via the product identity
/// `prod_{j<=d} (1 + 2 gamma_j^tau zeta(2 alpha_j tau))`, finite iff
/// `2 alpha_1 tau > 1`.
pub fn eigen_sum_tau(params: &KorobovParams, d: usize, tau: f64) -> Result<f64> {
    assert!(d >= 1, "dimension must be at least 1");
    if !tau.is_finite() || tau <= 0.0 {
        return Err(Error::DomainError {
            message: format!("tau must be a positive real, got {tau}"),
        });
    }
    if 2.0 * params.alpha(1) * tau <= 1.0 {
        return Err(Error::DomainError {
            message: format!(
                "eigenvalue sum diverges: 2*alpha_1*tau = {} <= 1",
                2.0 * params.alpha(1) * tau
            ),
        });
    }
    let mut product = 1.0;
    for j in 1..=d {
        let z = riemann_zeta(2.0 * params.alpha(j) * tau)?;
        product *= 1.0 + 2.0 * params.gamma(j).powf(tau) * z.value;
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{SmoothnessSpec, WeightSpec};
    use proptest::prelude::*;

    fn params(w: WeightSpec, s: SmoothnessSpec) -> KorobovParams {
        KorobovParams::new(w, s).unwrap()
    }

    fn entries_of(list: &[(&[i64], f64)]) -> Vec<EigenEntry> {
        list.iter()
            .map(|(k, v)| EigenEntry {
                index: k.to_vec(),
                value: *v,
            })
            .collect()
    }

    #[test]
    fn univariate_values() {
        assert_eq!(univariate_r(0, 0.7, 0.3), 1.0);
        assert_eq!(univariate_r(2, 1.0, 0.5), 0.125);
        assert_eq!(univariate_r(-2, 1.0, 0.5), 0.125);
        assert_eq!(univariate_r(2, 2.0, 0.5), 0.5 / 16.0);
        assert_eq!(univariate_r(1, 0.6, 1.0), 1.0);
        assert_eq!(univariate_r(-3, 2.0, 0.0), 0.0);
    }

    #[test]
    fn product_is_coordinatewise() {
        let p = params(
            WeightSpec::Explicit(vec![1.0, 0.5]),
            SmoothnessSpec::Constant(1.0),
        );
        let v = product_r(&[1, 2], &p, 2).unwrap();
        assert!((v - 1.0 * (0.5 / 4.0)).abs() < 1e-16);
        assert_eq!(product_r(&[0, 0], &p, 2).unwrap(), 1.0);
        assert!(matches!(
            product_r(&[1, 2, 3], &p, 2),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 3
            })
        ));
    }

    #[test]
    fn ladder_rank_entries_pair_up() {
        let ladder = UnivariateLadder::new(1.0, 0.5);
        assert_eq!(ladder.rank_entry(1), (0, 1.0));
        assert_eq!(ladder.rank_entry(2), (1, 0.5));
        assert_eq!(ladder.rank_entry(3), (-1, 0.5));
        assert_eq!(ladder.rank_entry(4), (2, 0.125));
        assert_eq!(ladder.rank_entry(5), (-2, 0.125));
        for m in 1..50u64 {
            let (kp, vp) = ladder.rank_entry(2 * m);
            let (kn, vn) = ladder.rank_entry(2 * m + 1);
            assert_eq!(kp, -kn);
            assert_eq!(vp, vn);
            assert!(vp < ladder.rank_entry(2 * m - 1).1 || m == 1);
        }
    }

    #[test]
    fn enumerates_univariate_ladder() {
        let p = params(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0));
        let top = enumerate_top(&p, 1, 5).unwrap();
        let expected = entries_of(&[
            (&[0], 1.0),
            (&[1], 0.5),
            (&[-1], 0.5),
            (&[2], 0.125),
            (&[-2], 0.125),
        ]);
        assert_eq!(top, expected);
    }

    #[test]
    fn enumerates_bivariate_with_tie_order() {
        let p = params(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0));
        let top = enumerate_top(&p, 2, 9).unwrap();
        let expected = entries_of(&[
            (&[0, 0], 1.0),
            (&[0, 1], 0.5),
            (&[0, -1], 0.5),
            (&[1, 0], 0.5),
            (&[-1, 0], 0.5),
            (&[1, 1], 0.25),
            (&[1, -1], 0.25),
            (&[-1, 1], 0.25),
            (&[-1, -1], 0.25),
        ]);
        assert_eq!(top, expected);
    }

    #[test]
    fn weight_one_ties_resolved_by_degree() {
        let p = params(
            WeightSpec::Explicit(vec![1.0, 0.0]),
            SmoothnessSpec::Constant(1.0),
        );
        let top = enumerate_top(&p, 2, 5).unwrap();
        let expected = entries_of(&[
            (&[0, 0], 1.0),
            (&[1, 0], 1.0),
            (&[-1, 0], 1.0),
            (&[2, 0], 0.25),
            (&[-2, 0], 0.25),
        ]);
        assert_eq!(top, expected);
    }

    #[test]
    fn all_zero_weights_emit_null_spectrum_in_degree_lex_order() {
        let p = params(WeightSpec::Constant(0.0), SmoothnessSpec::Constant(1.0));
        let top = enumerate_top(&p, 3, 8).unwrap();
        let expected = entries_of(&[
            (&[0, 0, 0], 1.0),
            (&[0, 0, 1], 0.0),
            (&[0, 0, -1], 0.0),
            (&[0, 1, 0], 0.0),
            (&[0, -1, 0], 0.0),
            (&[1, 0, 0], 0.0),
            (&[-1, 0, 0], 0.0),
            (&[0, 0, 2], 0.0),
        ]);
        assert_eq!(top, expected);
    }

    #[test]
    fn nth_eigenvalue_counts_multiplicity() {
        let p = params(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0));
        assert_eq!(nth_eigenvalue(&p, 1, 1).unwrap(), 1.0);
        assert_eq!(nth_eigenvalue(&p, 1, 2).unwrap(), 0.5);
        assert_eq!(nth_eigenvalue(&p, 1, 3).unwrap(), 0.5);
        assert_eq!(nth_eigenvalue(&p, 1, 4).unwrap(), 0.125);
    }

    #[test]
    fn worst_case_error_square_roots_the_next_eigenvalue() {
        let p = params(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0));
        assert_eq!(worst_case_error(&p, 1, 0).unwrap(), 1.0);
        assert_eq!(worst_case_error(&p, 1, 1).unwrap(), 0.5f64.sqrt());
        assert_eq!(worst_case_error(&p, 1, 3).unwrap(), 0.125f64.sqrt());
        assert_eq!(worst_case_error(&p, 2, 0).unwrap(), 1.0);
    }

    #[test]
    fn first_eigenvalue_is_always_one() {
        for (w, s) in [
            (WeightSpec::PolyDecay(2.0), SmoothnessSpec::Constant(1.0)),
            (WeightSpec::Geometric(0.5), SmoothnessSpec::Constant(0.75)),
            (WeightSpec::Constant(0.0), SmoothnessSpec::Constant(2.0)),
        ] {
            let p = params(w, s);
            for d in 1..=3 {
                assert_eq!(nth_eigenvalue(&p, d, 1).unwrap(), 1.0);
            }
        }
    }

    #[test]
    fn brute_force_certified_prefix_matches_enumeration() {
        let cases = [
            (
                WeightSpec::PolyDecay(2.0),
                SmoothnessSpec::Constant(1.0),
                2usize,
                20u32,
            ),
            (
                WeightSpec::Explicit(vec![0.5, 0.25]),
                SmoothnessSpec::Explicit(vec![0.6, 1.0, 2.0]),
                3,
                12,
            ),
            (
                WeightSpec::Geometric(0.5),
                SmoothnessSpec::LogAffine {
                    base: 0.75,
                    slope: 0.25,
                },
                2,
                20,
            ),
            (WeightSpec::Constant(1.0), SmoothnessSpec::Constant(0.6), 1, 900),
        ];
        for (w, s, d, kmax) in cases {
            let p = params(w, s);
            let brute = brute_force_spectrum(&p, d, kmax).unwrap();
            let certified = certified_prefix_len(&brute, &p, d, kmax);
            assert!(certified >= 60, "certified only {certified}");
            let n = certified.min(200);
            let top = enumerate_top(&p, d, n).unwrap();
            for (a, b) in top.iter().zip(&brute) {
                assert_eq!(a.index, b.index);
                assert!((a.value - b.value).abs() <= 1e-15 * a.value.abs().max(1.0));
            }
        }
    }

    #[test]
    fn brute_force_budget_enforced() {
        let p = params(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0));
        assert!(matches!(
            brute_force_spectrum(&p, 6, 20),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn frontier_cap_fails_closed_and_fuses() {
        let p = params(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0));
        let mut it = SpectrumIterator::new(&p, 3).with_frontier_cap(5);
        let mut saw_error = false;
        for item in it.by_ref().take(1000) {
            if item.is_err() {
                saw_error = true;
                break;
            }
        }
        assert!(saw_error);
        assert!(it.next().is_none());
    }

    #[test]
    fn eigen_sum_matches_product_identity() {
        let p = params(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0));
        let s = eigen_sum_tau(&p, 1, 1.0).unwrap();
        assert!((s - 4.289868133696453).abs() < 1e-12);

        let p = params(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0));
        let s = eigen_sum_tau(&p, 2, 2.0).unwrap();
        assert!((s - 2.375179129268872).abs() < 1e-12);
    }

    #[test]
    fn eigen_sum_rejects_divergent_tau() {
        let p = params(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(0.6));
        assert!(matches!(
            eigen_sum_tau(&p, 2, 0.8),
            Err(Error::DomainError { .. })
        ));
        assert!(matches!(
            eigen_sum_tau(&p, 2, 5.0 / 6.0),
            Err(Error::DomainError { .. })
        ));
        assert!(eigen_sum_tau(&p, 2, 0.9).is_ok());
        assert!(matches!(
            eigen_sum_tau(&p, 1, -1.0),
            Err(Error::DomainError { .. })
        ));
    }

    #[test]
    fn partial_power_sums_stay_below_product_identity() {
        let p = params(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0));
        let bound = eigen_sum_tau(&p, 2, 2.0).unwrap();
        let mut running = 0.0;
        for item in SpectrumIterator::new(&p, 2).take(20_000) {
            running += item.unwrap().value.powi(2);
            assert!(running <= bound + 1e-12);
        }
        assert!(bound - running < 1e-6, "gap {}", bound - running);
    }

    fn arb_params() -> impl Strategy<Value = KorobovParams> {
        let weights = prop_oneof![
            (0.0..=1.0f64).prop_map(WeightSpec::Constant),
            (0.0..=4.0f64).prop_map(WeightSpec::PolyDecay),
            (0.0..=1.0f64).prop_map(WeightSpec::Geometric),
            proptest::collection::vec(0.0..=1.0f64, 1..5).prop_map(|mut v| {
                v.sort_by(|a, b| b.partial_cmp(a).unwrap());
                WeightSpec::Explicit(v)
            }),
        ];
        let smoothness = prop_oneof![
            (0.51..=3.0f64).prop_map(SmoothnessSpec::Constant),
            ((0.51..=2.0f64), (0.0..=0.5f64))
                .prop_map(|(base, slope)| SmoothnessSpec::LogAffine { base, slope }),
        ];
        (weights, smoothness).prop_map(|(w, s)| KorobovParams::new(w, s).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn enumeration_is_sorted_unique_and_recomputable(p in arb_params(), d in 1usize..=3) {
            let top = enumerate_top(&p, d, 300).unwrap();
            let mut seen = HashSet::new();
            for entry in &top {
                prop_assert!(seen.insert(entry.index.clone()));
                let recomputed = product_r(&entry.index, &p, d).unwrap();
                prop_assert!((entry.value - recomputed).abs() <= 1e-15 * recomputed.abs().max(1e-300));
            }
            for pair in top.windows(2) {
                prop_assert!(spectral_cmp(&pair[0], &pair[1]) == Ordering::Less);
                prop_assert!(pair[0].value >= pair[1].value);
            }
        }

        #[test]
        fn negating_frequencies_preserves_value(p in arb_params(), k in proptest::collection::vec(-50i64..=50, 1..4)) {
            let d = k.len();
            let flipped: Vec<i64> = k.iter().map(|x| -x).collect();
            prop_assert_eq!(
                product_r(&k, &p, d).unwrap().to_bits(),
                product_r(&flipped, &p, d).unwrap().to_bits()
            );
        }
    }
}
