use std::collections::{BTreeMap, HashSet};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::KorobovParams;
use crate::spectrum::{enumerate_top, product_r};

/// Finitely supported trigonometric polynomial `sum_k c_k e^(2 pi i k.x)`,
/// stored as a map from frequency vector to coefficient. Zero coefficients
/// are not stored, so iteration order over terms is the lexicographic order
/// of the support.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierPoly {
    d: usize,
    terms: BTreeMap<Vec<i64>, Complex64>,
}

impl FourierPoly {
    /// The zero polynomial in dimension `d`.
    pub fn new(d: usize) -> Self {
        assert!(d >= 1, "dimension must be at least 1");
        FourierPoly {
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        d: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, Complex64)>,
    ) -> Result<Self> {
        let mut poly = FourierPoly::new(d);
        for (index, coefficient) in terms {
            poly.set(index, coefficient)?;
        }
        Ok(poly)
    }

    /// Sets one coefficient; setting zero deletes the term.
    pub fn set(&mut self, index: Vec<i64>, coefficient: Complex64) -> Result<()> {
        if index.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: index.len(),
            });
        }
        if coefficient == Complex64::ZERO {
            self.terms.remove(&index);
        } else {
            self.terms.insert(index, coefficient);
        }
        Ok(())
    }

    /// The coefficient at `index`, zero when absent.
    pub fn coefficient(&self, index: &[i64]) -> Complex64 {
        self.terms
            .get(index)
            .copied()
            .unwrap_or(Complex64::ZERO)
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Complex64)> {
        self.terms.iter()
    }
}

/// `L2` norm `sqrt(sum_k |c_k|^2)`.
pub fn l2_norm(f: &FourierPoly) -> f64 {
    f.terms
        .values()
        .map(|c| c.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// `L2` distance `sqrt(sum_k |f_k - g_k|^2)` between two polynomials of the
/// same dimension.
pub fn l2_error(f: &FourierPoly, g: &FourierPoly) -> Result<f64> {
    if f.d != g.d {
        return Err(Error::DimensionMismatch {
            expected: f.d,
            got: g.d,
        });
    }
    let mut sum = 0.0;
    for (index, c) in &f.terms {
        sum += (c - g.coefficient(index)).norm_sqr();
    }
    for (index, c) in &g.terms {
        if !f.terms.contains_key(index) {
            sum += c.norm_sqr();
        }
    }
    Ok(sum.sqrt())
}

/// Korobov-space norm `sqrt(sum_k |c_k|^2 / r(k))`; infinite as soon as a
/// nonzero coefficient sits on a null eigenvalue.
pub fn h_norm(f: &FourierPoly, params: &KorobovParams) -> Result<f64> {
    let mut sum = 0.0;
    for (index, c) in &f.terms {
        let weight = c.norm_sqr();
        if weight == 0.0 {
            continue;
        }
        let r = product_r(index, params, f.d)?;
        if r == 0.0 {
            return Ok(f64::INFINITY);
        }
        sum += weight / r;
    }
    Ok(sum.sqrt())
}

/// The `n` frequencies kept by the optimal rank-`n` algorithm, in spectral
/// order.
pub fn optimal_index_set(params: &KorobovParams, d: usize, n: usize) -> Result<Vec<Vec<i64>>> {
    Ok(enumerate_top(params, d, n)?
        .into_iter()
        .map(|entry| entry.index)
        .collect())
}

/// Optimal rank-`n` approximation: orthogonal projection of `f` onto the
/// span of the top-`n` frequencies. Kept coefficients are untouched.
pub fn approximate(f: &FourierPoly, params: &KorobovParams, n: usize) -> Result<FourierPoly> {
    let keep: HashSet<Vec<i64>> = optimal_index_set(params, f.d, n)?.into_iter().collect();
    let mut out = FourierPoly::new(f.d);
    for (index, c) in &f.terms {
        if keep.contains(index) {
            out.terms.insert(index.clone(), *c);
        }
    }
    Ok(out)
}

/// A unit-norm function attaining the worst case of the rank-`n` algorithm,
/// together with its approximation error `sqrt(lambda_{n+1})`.
pub fn worst_case_witness(
    params: &KorobovParams,
    d: usize,
    n: usize,
) -> Result<(FourierPoly, f64)> {
    let entries = enumerate_top(params, d, n + 1)?;
    let extremal = &entries[n];
    let mut f = FourierPoly::new(d);
    f.set(
        extremal.index.clone(),
        Complex64::new(extremal.value.sqrt(), 0.0),
    )?;
    let error = l2_error(&f, &approximate(&f, params, n)?)?;
    Ok((f, error))
}
