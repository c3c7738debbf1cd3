//! Worst-case `L2` approximation on weighted Korobov spaces.
//!
//! The spaces are reproducing-kernel Hilbert spaces of 1-periodic functions
//! on `[0,1]^d` whose Fourier coefficients decay according to a smoothness
//! sequence `alpha` and a coordinate weight sequence `gamma`. Approximating
//! the embedding into `L2` from `n` optimally chosen linear functionals is
//! governed by the eigenvalues `lambda_{d,1} >= lambda_{d,2} >= ...` of the
//! associated operator, which are exactly the products
//! `prod_j r(k_j)` with `r(0) = 1` and `r(k) = gamma_j / |k|^(2 alpha_j)`.
//!
//! This crate makes that theory computable:
//!
//! - [`spectrum`]: lazy enumeration of the eigenvalue sequence in a fixed
//!   deterministic order, plus the product identity for its power sums;
//! - [`complexity`]: the exact information complexity
//!   `n(epsilon, d) = #{k : prod_j r(k_j) > epsilon^2}`, an independent
//!   box-count oracle, and closed-form upper bounds;
//! - [`approximator`]: the optimal rank-`n` algorithm (truncation of the
//!   Fourier series to the top-`n` frequencies) with worst-case witnesses;
//! - [`tractability`]: classification into strong polynomial, polynomial,
//!   and weak tractability or the curse of dimensionality, driven by the
//!   weight decay exponent `delta = liminf ln(gamma_j^-1) / ln j`;
//! - [`zeta`]: the Riemann zeta values the closed forms need, with certified
//!   error bounds.
//!
//! Exponential-convergence settings (where accuracy enters through `ln(1/epsilon)`)
//! are out of scope.

pub mod approximator;
pub mod complexity;
pub mod error;
pub mod params;
pub mod spectrum;
pub mod tractability;
pub mod zeta;

pub use approximator::{
    approximate, h_norm, l2_error, l2_norm, optimal_index_set, worst_case_witness, FourierPoly,
};
pub use complexity::{
    c_tau_q, count_box_oracle, info_complexity, info_complexity_upper_bound,
    info_complexity_with_budget, CTauQReport, ComplexityQuery, ComplexityResult, BOX_BUDGET,
    NODE_BUDGET,
};
pub use error::{Error, Result};
pub use params::{
    parse_config, DeltaEstimate, KorobovParams, SmoothnessSpec, WeightSpec, DEFAULT_DELTA_WINDOW,
};
pub use spectrum::{
    brute_force_spectrum, certified_prefix_len, eigen_sum_tau, enumerate_top, nth_eigenvalue,
    product_r, spectral_cmp, univariate_r, worst_case_error, EigenEntry, SpectrumIterator,
    UnivariateLadder, BRUTE_FORCE_BUDGET, FRONTIER_CAP,
};
pub use tractability::{
    classify, curse_witness, fit_exponent, spt_exponent, CurseWitness, ExponentFit,
    TractabilityReport, Trivalent,
};
pub use zeta::{riemann_zeta, ZetaValue};
