use std::str::FromStr;

use crate::error::{Error, Result};

/// Coordinate weight sequence `1 >= gamma_1 >= gamma_2 >= ... >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightSpec {
    /// `gamma_j = c` for all j.
    Constant(f64),
    /// `gamma_j = j^-a`.
    PolyDecay(f64),
    /// `gamma_j = q^j`.
    Geometric(f64),
    /// Explicit leading weights; the last entry repeats as the tail.
    Explicit(Vec<f64>),
}

/// Smoothness exponent sequence `1/2 < alpha_1 <= alpha_2 <= ...`.
#[derive(Debug, Clone, PartialEq)]
pub enum SmoothnessSpec {
    /// `alpha_j = a` for all j.
    Constant(f64),
    /// `alpha_j = base + slope * ln(j)`.
    LogAffine { base: f64, slope: f64 },
    /// Explicit leading exponents; the last entry repeats as the tail.
    Explicit(Vec<f64>),
}

/// Validated weight/smoothness pair defining a weighted Korobov space family.
///
/// Construction enforces the admissible ranges and orderings once, so every
/// consumer can rely on `gamma` being nonincreasing in `[0, 1]` with
/// `gamma_1 <= 1`, and `alpha` nondecreasing with `alpha_1 > 1/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct KorobovParams {
    weights: WeightSpec,
    smoothness: SmoothnessSpec,
}

/// Decay exponent `delta = liminf_j ln(gamma_j^-1) / ln(j)`, either in closed
/// form (`exact`) or as a windowed sample minimum.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaEstimate {
    /// Nonnegative; `f64::INFINITY` encodes super-polynomial decay.
    pub value: f64,
    /// True when `value` is the exact liminf rather than a finite-window estimate.
    pub exact: bool,
    /// Sample window `(j_min, j_max)` used for the numeric path; `None` when exact.
    pub window: Option<(usize, usize)>,
}

/// Default sample window for numeric decay estimation.
pub const DEFAULT_DELTA_WINDOW: (usize, usize) = (2, 10_000);

fn check_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::RangeViolation {
            message: format!("{name} must be finite, got {x}"),
        })
    }
}

impl WeightSpec {
    fn validate(&self) -> Result<()> {
        match self {
            WeightSpec::Constant(c) => {
                check_finite("constant weight", *c)?;
                if !(0.0..=1.0).contains(c) {
                    return Err(Error::RangeViolation {
                        message: format!("constant weight must lie in [0, 1], got {c}"),
                    });
                }
            }
            WeightSpec::PolyDecay(a) => {
                check_finite("polynomial decay exponent", *a)?;
                if *a < 0.0 {
                    return Err(Error::RangeViolation {
                        message: format!("polynomial decay exponent must be >= 0, got {a}"),
                    });
                }
            }
            WeightSpec::Geometric(q) => {
                check_finite("geometric ratio", *q)?;
                if !(0.0..=1.0).contains(q) {
                    return Err(Error::RangeViolation {
                        message: format!("geometric ratio must lie in [0, 1], got {q}"),
                    });
                }
            }
            WeightSpec::Explicit(list) => {
                if list.is_empty() {
                    return Err(Error::RangeViolation {
                        message: "explicit weight list must be nonempty".into(),
                    });
                }
                for (i, &g) in list.iter().enumerate() {
                    check_finite("weight", g)?;
                    if !(0.0..=1.0).contains(&g) {
                        return Err(Error::RangeViolation {
                            message: format!("weight at j={} must lie in [0, 1], got {g}", i + 1),
                        });
                    }
                }
                for (i, pair) in list.windows(2).enumerate() {
                    if pair[1] > pair[0] {
                        return Err(Error::MonotonicityViolation {
                            sequence: "weight",
                            index: i + 2,
                            previous: pair[0],
                            value: pair[1],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `gamma_j` for 1-based coordinate `j`.
    pub fn gamma(&self, j: usize) -> f64 {
        assert!(j >= 1, "coordinate index is 1-based");
        match self {
            WeightSpec::Constant(c) => *c,
            WeightSpec::PolyDecay(a) => (j as f64).powf(-a),
            WeightSpec::Geometric(q) => q.powf(j as f64),
            WeightSpec::Explicit(list) => list[j.min(list.len()) - 1],
        }
    }
}

impl SmoothnessSpec {
    fn validate(&self) -> Result<()> {
        match self {
            SmoothnessSpec::Constant(a) => {
                check_finite("smoothness exponent", *a)?;
                if *a <= 0.5 {
                    return Err(Error::RangeViolation {
                        message: format!("smoothness exponent must be > 1/2, got {a}"),
                    });
                }
            }
            SmoothnessSpec::LogAffine { base, slope } => {
                check_finite("log-affine base", *base)?;
                check_finite("log-affine slope", *slope)?;
                if *base <= 0.5 {
                    return Err(Error::RangeViolation {
                        message: format!("log-affine base must be > 1/2, got {base}"),
                    });
                }
                if *slope < 0.0 {
                    return Err(Error::RangeViolation {
                        message: format!("log-affine slope must be >= 0, got {slope}"),
                    });
                }
            }
            SmoothnessSpec::Explicit(list) => {
                if list.is_empty() {
                    return Err(Error::RangeViolation {
                        message: "explicit smoothness list must be nonempty".into(),
                    });
                }
                for (i, &a) in list.iter().enumerate() {
                    check_finite("smoothness exponent", a)?;
                    if a <= 0.5 {
                        return Err(Error::RangeViolation {
                            message: format!(
                                "smoothness exponent at j={} must be > 1/2, got {a}",
                                i + 1
                            ),
                        });
                    }
                }
                for (i, pair) in list.windows(2).enumerate() {
                    if pair[1] < pair[0] {
                        return Err(Error::MonotonicityViolation {
                            sequence: "smoothness",
                            index: i + 2,
                            previous: pair[0],
                            value: pair[1],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `alpha_j` for 1-based coordinate `j`.
    pub fn alpha(&self, j: usize) -> f64 {
        assert!(j >= 1, "coordinate index is 1-based");
        match self {
            SmoothnessSpec::Constant(a) => *a,
            SmoothnessSpec::LogAffine { base, slope } => base + slope * (j as f64).ln(),
            SmoothnessSpec::Explicit(list) => list[j.min(list.len()) - 1],
        }
    }
}

impl KorobovParams {
    /// Validates both sequences and returns the pair, or the first violation.
    pub fn new(weights: WeightSpec, smoothness: SmoothnessSpec) -> Result<Self> {
        weights.validate()?;
        smoothness.validate()?;
        Ok(KorobovParams {
            weights,
            smoothness,
        })
    }

    pub fn weights(&self) -> &WeightSpec {
        &self.weights
    }

    pub fn smoothness(&self) -> &SmoothnessSpec {
        &self.smoothness
    }

    /// `gamma_j` for 1-based coordinate `j`.
    pub fn gamma(&self, j: usize) -> f64 {
        self.weights.gamma(j)
    }

    /// `alpha_j` for 1-based coordinate `j`.
    pub fn alpha(&self, j: usize) -> f64 {
        self.smoothness.alpha(j)
    }

    /// Weight decay exponent `liminf_j ln(gamma_j^-1) / ln(j)`.
    ///
    /// Closed-form specs resolve exactly: polynomial decay with exponent `a`
    /// gives `a`; geometric decay with ratio `q < 1` gives infinity (`q = 1`
    /// gives 0); a positive constant gives 0 and an all-zero sequence gives
    /// infinity. Explicit lists fall back to the minimum of the sampled ratio
    /// over `window` (default [`DEFAULT_DELTA_WINDOW`]); such estimates are
    /// marked inexact since no finite sample certifies a liminf.
    pub fn delta(&self, window: Option<(usize, usize)>) -> DeltaEstimate {
        let exact = |value: f64| DeltaEstimate {
            value,
            exact: true,
            window: None,
        };
        match &self.weights {
            WeightSpec::Constant(c) => {
                if *c == 0.0 {
                    exact(f64::INFINITY)
                } else {
                    exact(0.0)
                }
            }
            WeightSpec::PolyDecay(a) => exact(*a),
            WeightSpec::Geometric(q) => {
                if *q == 1.0 {
                    exact(0.0)
                } else {
                    exact(f64::INFINITY)
                }
            }
            WeightSpec::Explicit(_) => {
                let (j_min, j_max) = window.unwrap_or(DEFAULT_DELTA_WINDOW);
                assert!(
                    2 <= j_min && j_min < j_max,
                    "delta window must satisfy 2 <= j_min < j_max"
                );
                let mut best = f64::INFINITY;
                for j in j_min..=j_max {
                    let g = self.gamma(j);
                    if g == 0.0 {
                        continue;
                    }
                    let ratio = -g.ln() / (j as f64).ln();
                    if ratio < best {
                        best = ratio;
                    }
                }
                DeltaEstimate {
                    value: best,
                    exact: false,
                    window: Some((j_min, j_max)),
                }
            }
        }
    }
}

fn parse_f64(s: &str, what: &str) -> Result<f64> {
    s.trim().parse::<f64>().map_err(|_| Error::DomainError {
        message: format!("cannot parse {what} from {s:?}"),
    })
}

fn parse_f64_list(s: &str, what: &str) -> Result<Vec<f64>> {
    s.split(',').map(|tok| parse_f64(tok, what)).collect()
}

impl FromStr for WeightSpec {
    type Err = Error;

    /// Parses `const:C`, `poly:A`, `geom:Q`, or `list:G1,G2,...`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| Error::DomainError {
            message: format!("weight spec {s:?} must look like kind:values"),
        })?;
        match kind {
            "const" => Ok(WeightSpec::Constant(parse_f64(rest, "constant weight")?)),
            "poly" => Ok(WeightSpec::PolyDecay(parse_f64(rest, "decay exponent")?)),
            "geom" => Ok(WeightSpec::Geometric(parse_f64(rest, "geometric ratio")?)),
            "list" => Ok(WeightSpec::Explicit(parse_f64_list(rest, "weight")?)),
            other => Err(Error::DomainError {
                message: format!("unknown weight spec kind {other:?}"),
            }),
        }
    }
}

impl FromStr for SmoothnessSpec {
    type Err = Error;

    /// Parses `const:A`, `logaffine:BASE,SLOPE`, or `list:A1,A2,...`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| Error::DomainError {
            message: format!("smoothness spec {s:?} must look like kind:values"),
        })?;
        match kind {
            "const" => Ok(SmoothnessSpec::Constant(parse_f64(
                rest,
                "smoothness exponent",
            )?)),
            "logaffine" => {
                let vals = parse_f64_list(rest, "log-affine parameter")?;
                if vals.len() != 2 {
                    return Err(Error::DomainError {
                        message: format!("logaffine takes base,slope, got {rest:?}"),
                    });
                }
                Ok(SmoothnessSpec::LogAffine {
                    base: vals[0],
                    slope: vals[1],
                })
            }
            "list" => Ok(SmoothnessSpec::Explicit(parse_f64_list(
                rest,
                "smoothness exponent",
            )?)),
            other => Err(Error::DomainError {
                message: format!("unknown smoothness spec kind {other:?}"),
            }),
        }
    }
}

/// Parses a `key=value` config with `gamma` and `alpha` entries, e.g.
/// `gamma=poly:2` and `alpha=const:1`. Blank lines and `#` comments skipped.
pub fn parse_config(text: &str) -> Result<KorobovParams> {
    let mut gamma: Option<WeightSpec> = None;
    let mut alpha: Option<SmoothnessSpec> = None;
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::DomainError {
            message: format!("config line {line:?} must look like key=value"),
        })?;
        match key.trim() {
            "gamma" => gamma = Some(value.trim().parse()?),
            "alpha" => alpha = Some(value.trim().parse()?),
            other => {
                return Err(Error::DomainError {
                    message: format!("unknown config key {other:?}"),
                })
            }
        }
    }
    let gamma = gamma.ok_or_else(|| Error::DomainError {
        message: "config is missing gamma".into(),
    })?;
    let alpha = alpha.ok_or_else(|| Error::DomainError {
        message: "config is missing alpha".into(),
    })?;
    KorobovParams::new(gamma, alpha)
}
