use crate::complexity::{info_complexity, ComplexityQuery};
use crate::error::{Error, Result};
use crate::params::{DeltaEstimate, KorobovParams, WeightSpec};

/// Verdict that distinguishes proved answers from finite-sample evidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trivalent {
    Yes,
    No,
    /// The weight spec only supports a windowed estimate, not a certificate.
    EmpiricalOnly,
}

/// Tractability classification of the approximation problem for a weight and
/// smoothness family.
#[derive(Debug, Clone, PartialEq)]
pub struct TractabilityReport {
    /// Weight decay exponent driving every polynomial-tractability verdict.
    pub delta: DeltaEstimate,
    /// Strong polynomial tractability: holds iff `delta > 0`.
    pub strong_polynomial: Trivalent,
    /// Polynomial tractability; equivalent to the strong variant here.
    pub polynomial: Trivalent,
    /// Exponent of strong polynomial tractability,
    /// `2 * max(1/delta, 1/(2*alpha_1))`; absent when ruled out.
    pub p_str: Option<f64>,
    /// Curse of dimensionality: holds iff every weight equals 1.
    pub curse: Trivalent,
    /// `(t1, t2)`-weak tractability holds for every `t1 > 1` and `t2 > 0`,
    /// unconditionally.
    pub weak_t1_gt_1: bool,
    pub notes: Vec<String>,
}

fn exponent_from(delta: &DeltaEstimate, alpha_1: f64) -> f64 {
    2.0 * (1.0 / delta.value).max(1.0 / (2.0 * alpha_1))
}

/// Classifies tractability from the weight decay exponent and the limit of
/// the weights. Closed-form specs yield proved verdicts; explicit lists are
/// classified from windowed estimates and marked `EmpiricalOnly`.
pub fn classify(params: &KorobovParams) -> TractabilityReport {
    let delta = params.delta(None);
    let mut notes = Vec::new();

    let (strong_polynomial, p_str) = if delta.exact {
        if delta.value > 0.0 {
            (Trivalent::Yes, Some(exponent_from(&delta, params.alpha(1))))
        } else {
            (Trivalent::No, None)
        }
    } else {
        notes.push(
            "explicit weights: decay exponent sampled on a finite window, verdicts are \
             empirical rather than certificates"
                .to_string(),
        );
        (
            Trivalent::EmpiricalOnly,
            Some(exponent_from(&delta, params.alpha(1))),
        )
    };
    let polynomial = strong_polynomial;

    let curse = match params.weights() {
        WeightSpec::Constant(c) => {
            if *c == 1.0 {
                Trivalent::Yes
            } else {
                Trivalent::No
            }
        }
        WeightSpec::PolyDecay(a) => {
            if *a == 0.0 {
                Trivalent::Yes
            } else {
                Trivalent::No
            }
        }
        WeightSpec::Geometric(q) => {
            if *q == 1.0 {
                Trivalent::Yes
            } else {
                Trivalent::No
            }
        }
        WeightSpec::Explicit(_) => Trivalent::EmpiricalOnly,
    };
    match curse {
        Trivalent::No => notes.push(
            "no-curse verdict records that the limit hypothesis lim gamma_j = 1 fails; \
             no converse is claimed"
                .to_string(),
        ),
        Trivalent::EmpiricalOnly => notes.push(
            "curse verdict needs the limit of the weights, which a finite list does not \
             determine"
                .to_string(),
        ),
        Trivalent::Yes => {}
    }

    TractabilityReport {
        delta,
        strong_polynomial,
        polynomial,
        p_str,
        curse,
        weak_t1_gt_1: true,
        notes,
    }
}

/// Exact exponent of strong polynomial tractability,
/// `p = 2 * max(1/delta, 1/(2*alpha_1))`.
///
/// Fails with `NotApplicable` when strong polynomial tractability does not
/// hold (`delta = 0`) or cannot be certified (explicit weight lists).
pub fn spt_exponent(params: &KorobovParams) -> Result<f64> {
    let delta = params.delta(None);
    if !delta.exact {
        return Err(Error::NotApplicable {
            message: "explicit weights admit only an empirical decay estimate; \
                      no exact exponent"
                .to_string(),
        });
    }
    if delta.value == 0.0 {
        return Err(Error::NotApplicable {
            message: "weights do not decay polynomially, so strong polynomial \
                      tractability fails"
                .to_string(),
        });
    }
    Ok(exponent_from(&delta, params.alpha(1)))
}

/// Evidence for or against the curse of dimensionality at one `(epsilon, d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurseWitness {
    /// `3^d`, saturating at `u128::MAX`; a valid lower bound on the
    /// information complexity whenever `holds` is true.
    pub lower_bound: u128,
    /// Whether the curse hypothesis `gamma_j = 1` for all `j <= d` holds.
    pub holds: bool,
    /// Exact information complexity, when the node budget permits.
    pub exact_count: Option<u64>,
}

/// Checks the curse hypothesis at dimension `d` and, budget permitting,
/// confronts the `3^d` lower bound with the exact count for `epsilon <= 1/2`.
pub fn curse_witness(params: &KorobovParams, epsilon: f64, d: usize) -> Result<CurseWitness> {
    let query = ComplexityQuery::new(params.clone(), d, epsilon)?;
    let holds = (1..=d).all(|j| params.gamma(j) == 1.0);
    let lower_bound = 3u128.checked_pow(d as u32).unwrap_or(u128::MAX);
    let exact_count = info_complexity(&query).ok().map(|r| r.count);
    if holds && epsilon <= 0.5 {
        if let Some(count) = exact_count {
            assert!(
                count as u128 >= lower_bound,
                "count {count} fell below the 3^{d} bound"
            );
        }
    }
    Ok(CurseWitness {
        lower_bound,
        holds,
        exact_count,
    })
}

/// Least-squares fit of `ln n(epsilon, d)` against `ln(1/epsilon)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentFit {
    pub d: usize,
    pub epsilons: Vec<f64>,
    pub counts: Vec<u64>,
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual of the fit in log space.
    pub residual: f64,
}

/// Estimates the empirical complexity exponent at fixed dimension from exact
/// counts on a strictly decreasing accuracy grid of at least four points.
pub fn fit_exponent(params: &KorobovParams, d: usize, epsilon_grid: &[f64]) -> Result<ExponentFit> {
    if epsilon_grid.len() < 4 {
        return Err(Error::DomainError {
            message: format!(
                "exponent fit needs at least 4 grid points, got {}",
                epsilon_grid.len()
            ),
        });
    }
    for pair in epsilon_grid.windows(2) {
        if !(pair[1] < pair[0]) {
            return Err(Error::DomainError {
                message: "epsilon grid must be strictly decreasing".to_string(),
            });
        }
    }

    let mut counts = Vec::with_capacity(epsilon_grid.len());
    for &eps in epsilon_grid {
        let query = ComplexityQuery::new(params.clone(), d, eps)?;
        counts.push(info_complexity(&query)?.count);
    }

    let n = epsilon_grid.len() as f64;
    let xs: Vec<f64> = epsilon_grid.iter().map(|e| (1.0 / e).ln()).collect();
    let ys: Vec<f64> = counts.iter().map(|&c| (c as f64).ln()).collect();
    let x_mean = xs.iter().sum::<f64>() / n;
    let y_mean = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - x_mean).powi(2)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - x_mean) * (y - y_mean))
        .sum();
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let sse: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - (intercept + slope * x)).powi(2))
        .sum();
    let residual = (sse / n).sqrt();

    Ok(ExponentFit {
        d,
        epsilons: epsilon_grid.to_vec(),
        counts,
        slope,
        intercept,
        residual,
    })
}
