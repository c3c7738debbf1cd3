use crate::error::{Error, Result};
use crate::params::KorobovParams;
use crate::spectrum::{eigen_sum_tau, univariate_r};

/// Default budget on counting-recursion nodes.
pub const NODE_BUDGET: u64 = 1_000_000_000;

/// Default budget on box-oracle lattice points, counted as `(2*kmax+1)^d`.
pub const BOX_BUDGET: u64 = 100_000_000;

/// Relative growth at `d_max + 1` above which [`c_tau_q`] reports the
/// supremum as still increasing.
pub const C_TAU_Q_GROWTH_TOL: f64 = 1e-6;

/// A well-formed information-complexity question: how many eigenvalues of
/// the `d`-variate operator exceed `epsilon^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityQuery {
    params: KorobovParams,
    d: usize,
    epsilon: f64,
}

impl ComplexityQuery {
    pub fn new(params: KorobovParams, d: usize, epsilon: f64) -> Result<Self> {
        assert!(d >= 1, "dimension must be at least 1");
        if !epsilon.is_finite() || epsilon <= 0.0 || epsilon >= 1.0 {
            return Err(Error::DomainError {
                message: format!("epsilon must lie strictly in (0, 1), got {epsilon}"),
            });
        }
        Ok(ComplexityQuery { params, d, epsilon })
    }

    pub fn params(&self) -> &KorobovParams {
        &self.params
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

/// Exact count of frequency vectors with `prod_j r(k_j) > epsilon^2`,
/// plus the work expended to find it.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityResult {
    pub count: u64,
    pub epsilon: f64,
    pub d: usize,
    pub nodes_visited: u64,
    pub upper_bound: Option<f64>,
}

/// Counts completions of a fixed prefix whose running product is `partial`
/// (invariant: `partial > eps2`). Signed frequencies are folded in as a
/// factor 2 per nonzero coordinate; once `partial * gamma_i <= eps2` every
/// remaining coordinate is pinned to zero because the weights are
/// nonincreasing, leaving exactly one completion.
fn count_rec(
    gammas: &[f64],
    alphas: &[f64],
    i: usize,
    partial: f64,
    eps2: f64,
    nodes: &mut u64,
    budget: u64,
) -> Result<u64> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::ResourceLimit {
            what: "counting recursion nodes",
            limit: budget,
        });
    }
    if i == gammas.len() {
        return Ok(1);
    }
    if partial * gammas[i] <= eps2 {
        return Ok(1);
    }
    let mut total = count_rec(gammas, alphas, i + 1, partial, eps2, nodes, budget)?;
    let mut k = 1i64;
    loop {
        let p = partial * univariate_r(k, alphas[i], gammas[i]);
        if p <= eps2 {
            break;
        }
        total += 2 * count_rec(gammas, alphas, i + 1, p, eps2, nodes, budget)?;
        k += 1;
    }
    Ok(total)
}

/// Exact information complexity `n(epsilon, d)` with the default node budget.
pub fn info_complexity(query: &ComplexityQuery) -> Result<ComplexityResult> {
    info_complexity_with_budget(query, NODE_BUDGET)
}

/// Exact information complexity `n(epsilon, d)` under an explicit node budget.
pub fn info_complexity_with_budget(
    query: &ComplexityQuery,
    node_budget: u64,
) -> Result<ComplexityResult> {
    let gammas: Vec<f64> = (1..=query.d).map(|j| query.params.gamma(j)).collect();
    let alphas: Vec<f64> = (1..=query.d).map(|j| query.params.alpha(j)).collect();
    let eps2 = query.epsilon * query.epsilon;
    let mut nodes = 0u64;
    let count = count_rec(&gammas, &alphas, 0, 1.0, eps2, &mut nodes, node_budget)?;
    Ok(ComplexityResult {
        count,
        epsilon: query.epsilon,
        d: query.d,
        nodes_visited: nodes,
        upper_bound: None,
    })
}

fn box_walk(tables: &[Vec<f64>], i: usize, partial: f64, kmax: i64, eps2: f64, count: &mut u64) {
    if i == tables.len() {
        if partial > eps2 {
            *count += 1;
        }
        return;
    }
    for k in -kmax..=kmax {
        box_walk(
            tables,
            i + 1,
            partial * tables[i][k.unsigned_abs() as usize],
            kmax,
            eps2,
            count,
        );
    }
}

/// Independent exhaustive count over the box `max_j |k_j| <= kmax`.
///
/// Fails with `InsufficientBox` unless the box provably contains every
/// counted vector, i.e. `r_j(kmax + 1) <= epsilon^2` for all coordinates.
pub fn count_box_oracle(query: &ComplexityQuery, kmax: u32) -> Result<u64> {
    let side = 2 * kmax as u128 + 1;
    match side.checked_pow(query.d as u32) {
        Some(points) if points <= BOX_BUDGET as u128 => {}
        _ => {
            return Err(Error::ResourceLimit {
                what: "box oracle lattice points",
                limit: BOX_BUDGET,
            })
        }
    }
    let eps2 = query.epsilon * query.epsilon;
    for j in 1..=query.d {
        if univariate_r(kmax as i64 + 1, query.params.alpha(j), query.params.gamma(j)) > eps2 {
            return Err(Error::InsufficientBox {
                kmax: kmax as u64,
                epsilon: query.epsilon,
            });
        }
    }
    let tables: Vec<Vec<f64>> = (1..=query.d)
        .map(|j| {
            (0..=kmax as i64)
                .map(|k| univariate_r(k, query.params.alpha(j), query.params.gamma(j)))
                .collect()
        })
        .collect();
    let mut count = 0u64;
    box_walk(&tables, 0, 1.0, kmax as i64, eps2, &mut count);
    Ok(count)
}

/// Closed-form bound `n(epsilon, d) <= 2 epsilon^{-2 tau} prod_j
/// (1 + 2 gamma_j^tau zeta(2 alpha_j tau))`, valid when `2 alpha_1 tau > 1`.
pub fn info_complexity_upper_bound(query: &ComplexityQuery, tau: f64) -> Result<f64> {
    let sum = eigen_sum_tau(&query.params, query.d, tau)?;
    Ok(2.0 * query.epsilon.powf(-2.0 * tau) * sum)
}

/// Truncated supremum `sup_d (sum_n lambda_{d,n}^tau)^{1/tau} d^{-q}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CTauQReport {
    /// Maximum of the supremand over `1 <= d <= d_max`.
    pub value: f64,
    /// Dimension attaining the maximum.
    pub attained_d: usize,
    /// True when the supremand at `d_max + 1` still exceeds the maximum by
    /// more than [`C_TAU_Q_GROWTH_TOL`] relative, so `value` is not yet a
    /// trustworthy supremum.
    pub still_increasing: bool,
}

/// Evaluates the tractability constant `C_{tau,q}` over dimensions up to
/// `d_max`, flagging whether the supremand is still growing past the cutoff.
pub fn c_tau_q(params: &KorobovParams, tau: f64, q: f64, d_max: usize) -> Result<CTauQReport> {
    assert!(d_max >= 1, "d_max must be at least 1");
    if !q.is_finite() || q < 0.0 {
        return Err(Error::DomainError {
            message: format!("q must be a nonnegative real, got {q}"),
        });
    }
    eigen_sum_tau(params, 1, tau)?;

    let supremand = |product: f64, d: usize| product.powf(1.0 / tau) * (d as f64).powf(-q);
    let mut product = 1.0;
    let mut best = f64::NEG_INFINITY;
    let mut attained_d = 1;
    for d in 1..=d_max {
        let z = crate::zeta::riemann_zeta(2.0 * params.alpha(d) * tau)?;
        product *= 1.0 + 2.0 * params.gamma(d).powf(tau) * z.value;
        let value = supremand(product, d);
        if value > best {
            best = value;
            attained_d = d;
        }
    }
    let z = crate::zeta::riemann_zeta(2.0 * params.alpha(d_max + 1) * tau)?;
    let probe = supremand(
        product * (1.0 + 2.0 * params.gamma(d_max + 1).powf(tau) * z.value),
        d_max + 1,
    );
    Ok(CTauQReport {
        value: best,
        attained_d,
        still_increasing: probe > best * (1.0 + C_TAU_Q_GROWTH_TOL),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{SmoothnessSpec, WeightSpec};
    use crate::spectrum::enumerate_top;

    fn params(w: WeightSpec, s: SmoothnessSpec) -> KorobovParams {
        KorobovParams::new(w, s).unwrap()
    }

    fn query(w: WeightSpec, s: SmoothnessSpec, d: usize, eps: f64) -> ComplexityQuery {
        ComplexityQuery::new(params(w, s), d, eps).unwrap()
    }

    fn count(w: WeightSpec, s: SmoothnessSpec, d: usize, eps: f64) -> u64 {
        info_complexity(&query(w, s, d, eps)).unwrap().count
    }

    #[test]
    fn univariate_counts() {
        assert_eq!(
            count(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0), 1, 0.5),
            3
        );
        assert_eq!(
            count(WeightSpec::Constant(0.9), SmoothnessSpec::Constant(1.0), 1, 0.999),
            1
        );
    }

    #[test]
    fn bivariate_count_with_cross_terms() {
        assert_eq!(
            count(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0), 2, 0.45),
            9
        );
    }

    #[test]
    fn threshold_is_strict() {
        assert_eq!(
            count(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0), 2, 0.5),
            5
        );
    }

    #[test]
    fn unweighted_case_counts_the_sign_box() {
        let c = count(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0), 3, 0.5);
        assert_eq!(c, 27);
    }

    #[test]
    fn epsilon_validation() {
        let p = params(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0));
        for bad in [0.0, 1.0, -0.2, 1.5, f64::NAN] {
            assert!(ComplexityQuery::new(p.clone(), 1, bad).is_err(), "eps={bad}");
        }
    }

    #[test]
    fn node_budget_fails_closed() {
        let q = query(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0), 8, 0.1);
        assert!(matches!(
            info_complexity_with_budget(&q, 100),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn reports_nodes_visited() {
        let q = query(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0), 2, 0.45);
        let r = info_complexity(&q).unwrap();
        assert_eq!(r.count, 9);
        assert!(r.nodes_visited >= r.count / 2);
        assert_eq!(r.epsilon, 0.45);
        assert_eq!(r.d, 2);
        assert_eq!(r.upper_bound, None);
    }

    #[test]
    fn box_oracle_agrees_on_small_cases() {
        let cases = [
            (WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0), 1, 0.5, 2u32),
            (WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0), 2, 0.45, 2),
            (WeightSpec::PolyDecay(2.0), SmoothnessSpec::Constant(1.0), 3, 0.2, 5),
            (
                WeightSpec::Explicit(vec![1.0, 0.5, 0.25]),
                SmoothnessSpec::Explicit(vec![0.6, 1.0, 2.0]),
                3,
                0.3,
                8,
            ),
            (WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0), 3, 0.5, 3),
            (WeightSpec::Geometric(0.5), SmoothnessSpec::Constant(0.75), 4, 0.25, 7),
        ];
        for (w, s, d, eps, kmax) in cases {
            let q = query(w.clone(), s.clone(), d, eps);
            let exact = info_complexity(&q).unwrap().count;
            let oracle = count_box_oracle(&q, kmax).unwrap();
            assert_eq!(exact, oracle, "{w:?} {s:?} d={d} eps={eps}");
        }
    }

    #[test]
    fn box_oracle_zero_weights() {
        let q = query(WeightSpec::Constant(0.0), SmoothnessSpec::Constant(1.0), 1, 0.5);
        assert_eq!(count_box_oracle(&q, 2).unwrap(), 1);
    }

    #[test]
    fn box_oracle_rejects_uncertified_radius() {
        let q = query(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(0.6), 2, 0.5);
        assert!(matches!(
            count_box_oracle(&q, 1),
            Err(Error::InsufficientBox { kmax: 1, .. })
        ));
        assert!(matches!(
            count_box_oracle(&q, 2),
            Err(Error::InsufficientBox { kmax: 2, .. })
        ));
        assert!(count_box_oracle(&q, 3).is_ok());
    }

    #[test]
    fn box_oracle_budget_enforced() {
        let q = query(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0), 5, 0.1);
        assert!(matches!(
            count_box_oracle(&q, 20),
            Err(Error::ResourceLimit { .. })
        ));
    }

    fn minimal_certified_kmax(p: &KorobovParams, d: usize, eps: f64) -> u32 {
        let eps2 = eps * eps;
        let mut kmax = 0u32;
        loop {
            let outside = (1..=d)
                .map(|j| univariate_r(kmax as i64 + 1, p.alpha(j), p.gamma(j)))
                .fold(0.0f64, f64::max);
            if outside <= eps2 {
                return kmax;
            }
            kmax += 1;
        }
    }

    #[test]
    fn exactness_grid_against_box_oracle() {
        let param_set = [
            (WeightSpec::Constant(1.0), SmoothnessSpec::Constant(0.6)),
            (WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0)),
            (WeightSpec::PolyDecay(2.0), SmoothnessSpec::Constant(0.6)),
            (
                WeightSpec::Explicit(vec![0.9, 0.5, 0.2, 0.1]),
                SmoothnessSpec::LogAffine {
                    base: 0.6,
                    slope: 0.3,
                },
            ),
        ];
        let mut feasible = 0;
        let mut infeasible = 0;
        for (w, s) in &param_set {
            let p = params(w.clone(), s.clone());
            for d in 1..=4usize {
                for eps in [0.3, 0.1, 0.03] {
                    let q = ComplexityQuery::new(p.clone(), d, eps).unwrap();
                    let kmax = minimal_certified_kmax(&p, d, eps);
                    let side = 2 * kmax as u128 + 1;
                    if side.pow(d as u32) <= BOX_BUDGET as u128 {
                        let oracle = count_box_oracle(&q, kmax).unwrap();
                        assert_eq!(info_complexity(&q).unwrap().count, oracle);
                        feasible += 1;
                    } else {
                        assert!(matches!(
                            count_box_oracle(&q, kmax),
                            Err(Error::ResourceLimit { .. })
                        ));
                        infeasible += 1;
                    }
                }
            }
        }
        assert!(feasible >= 40, "only {feasible} feasible cells");
        assert!(infeasible > 0);
    }

    #[test]
    fn count_matches_spectrum_enumeration() {
        let cases = [
            (WeightSpec::PolyDecay(2.0), SmoothnessSpec::Constant(1.0), 3, 0.1),
            (WeightSpec::Geometric(0.5), SmoothnessSpec::Constant(0.75), 2, 0.15),
            (
                WeightSpec::Explicit(vec![0.5, 0.25]),
                SmoothnessSpec::Explicit(vec![0.6, 1.0, 2.0]),
                3,
                0.2,
            ),
        ];
        for (w, s, d, eps) in cases {
            let q = query(w, s, d, eps);
            let n = info_complexity(&q).unwrap().count;
            let eps2 = eps * eps;
            let top = enumerate_top(q.params(), d, n as usize + 50).unwrap();
            let by_spectrum = top.iter().filter(|e| e.value > eps2).count() as u64;
            assert_eq!(n, by_spectrum);
            assert!(top[n as usize].value <= eps2);
        }
    }

    #[test]
    fn count_monotone_in_epsilon_and_dimension() {
        let p = params(WeightSpec::PolyDecay(1.5), SmoothnessSpec::Constant(0.8));
        let mut last = u64::MAX;
        for eps in [0.05, 0.1, 0.2, 0.4, 0.6, 0.8, 0.95] {
            let c = info_complexity(&ComplexityQuery::new(p.clone(), 3, eps).unwrap())
                .unwrap()
                .count;
            assert!(c <= last);
            last = c;
        }
        let mut last = 0u64;
        for d in 1..=6 {
            let c = info_complexity(&ComplexityQuery::new(p.clone(), d, 0.2).unwrap())
                .unwrap()
                .count;
            assert!(c >= last);
            last = c;
        }
    }

    #[test]
    fn upper_bound_examples() {
        let q = query(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0), 1, 0.6);
        let b = info_complexity_upper_bound(&q, 1.0).unwrap();
        assert!((b - 23.832600742758072).abs() < 1e-10);
        assert!(info_complexity(&q).unwrap().count as f64 <= b);

        let q = query(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0), 2, 0.45);
        let b = info_complexity_upper_bound(&q, 2.0).unwrap();
        assert!((b - 115.84473729096769).abs() < 1e-10);
        assert!(info_complexity(&q).unwrap().count as f64 <= b);
    }

    #[test]
    fn upper_bound_propagates_divergence() {
        let q = query(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(0.6), 2, 0.5);
        assert!(matches!(
            info_complexity_upper_bound(&q, 0.8),
            Err(Error::DomainError { .. })
        ));
    }

    #[test]
    fn upper_bound_dominates_across_tau() {
        let configs = [
            (WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0), 2),
            (WeightSpec::PolyDecay(2.0), SmoothnessSpec::Constant(1.0), 3),
            (WeightSpec::Geometric(0.5), SmoothnessSpec::Constant(0.75), 3),
        ];
        for (w, s, d) in configs {
            let p = params(w, s);
            for eps in [0.1, 0.3, 0.6, 0.9] {
                let q = ComplexityQuery::new(p.clone(), d, eps).unwrap();
                let n = info_complexity(&q).unwrap().count as f64;
                for tau in [0.6, 0.75, 1.0, 1.5, 2.0] {
                    if 2.0 * p.alpha(1) * tau <= 1.0 {
                        continue;
                    }
                    let b = info_complexity_upper_bound(&q, tau).unwrap();
                    assert!(n <= b, "n={n} bound={b} tau={tau} eps={eps}");
                }
            }
        }
    }

    #[test]
    fn c_tau_q_single_dimension_is_the_eigen_sum_root() {
        let p = params(WeightSpec::Constant(0.5), SmoothnessSpec::Constant(1.0));
        let r = c_tau_q(&p, 2.0, 0.0, 1).unwrap();
        let expected = eigen_sum_tau(&p, 1, 2.0).unwrap().sqrt();
        assert!((r.value - expected).abs() < 1e-12);
        assert_eq!(r.attained_d, 1);
    }

    #[test]
    fn c_tau_q_unweighted_keeps_growing() {
        let p = params(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0));
        let r = c_tau_q(&p, 1.0, 0.0, 10).unwrap();
        assert!((r.value - 2110762.773204956).abs() < 1e-4 * r.value.abs());
        assert_eq!(r.attained_d, 10);
        assert!(r.still_increasing);
    }

    #[test]
    fn c_tau_q_summable_weights_saturate() {
        let p = params(WeightSpec::PolyDecay(4.0), SmoothnessSpec::Constant(1.0));
        let r = c_tau_q(&p, 1.0, 0.0, 50).unwrap();
        assert!((r.value - 5.515437859963420).abs() < 1e-10);
        assert_eq!(r.attained_d, 50);
        assert!(!r.still_increasing);
    }

    #[test]
    fn c_tau_q_dimension_penalty_moves_the_argmax() {
        let p = params(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0));
        let r = c_tau_q(&p, 1.0, 10.0, 10).unwrap();
        assert_eq!(r.attained_d, 1);
        assert!((r.value - 4.289868133696453).abs() < 1e-10);
        assert!(!r.still_increasing);
    }

    #[test]
    fn c_tau_q_rejects_divergent_or_invalid_inputs() {
        let p = params(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(0.6));
        assert!(matches!(
            c_tau_q(&p, 0.8, 0.0, 5),
            Err(Error::DomainError { .. })
        ));
        let p = params(WeightSpec::Constant(1.0), SmoothnessSpec::Constant(1.0));
        assert!(matches!(
            c_tau_q(&p, 1.0, -1.0, 5),
            Err(Error::DomainError { .. })
        ));
    }
}
