//! Aperiodic correlation with exact root-of-unity arithmetic.
//!
//! Correlations of unit-root sequences are sums of roots of unity. Instead
//! of accumulating floats, every operation here counts how often each root
//! `omega_lambda^e` occurs; the result is a [`CorrelationValue`] holding the
//! integer count vector. Zero verdicts come from the cyclotomic divisibility
//! test, so a claimed zero-correlation zone is checked exactly. The complex
//! image is derived from the counts when a numeric value is wanted.

use num_complex::Complex64;

use crate::cyclotomic::root_sum_is_zero;
use crate::error::{Error, Result};
use crate::sequence::{unit_root, PhaseArray2D, PhaseSequence};

/// An exact sum of `lambda`-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationValue {
    lambda: u32,
    counts: Vec<i64>,
}

impl CorrelationValue {
    pub fn zero(lambda: u32) -> Self {
        assert!(lambda > 0, "modulus must be positive");
        Self {
            lambda,
            counts: vec![0; lambda as usize],
        }
    }

    pub fn from_counts(lambda: u32, counts: Vec<i64>) -> Result<Self> {
        if counts.len() != lambda as usize {
            return Err(Error::ShapeMismatch(format!(
                "{} counts for modulus {lambda}",
                counts.len()
            )));
        }
        Ok(Self { lambda, counts })
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// `counts[e]` = multiplicity of `omega_lambda^e`; cancellations are
    /// never pre-applied.
    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn add_root(&mut self, exponent: u32) {
        self.counts[(exponent % self.lambda) as usize] += 1;
    }

    /// Accumulate another value's counts. Panics on a modulus mismatch.
    pub fn merge(&mut self, other: &Self) {
        assert_eq!(self.lambda, other.lambda, "modulus mismatch in merge");
        for (c, o) in self.counts.iter_mut().zip(&other.counts) {
            *c += o;
        }
    }

    /// Product of the two represented sums: cyclic convolution of counts.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.lambda != other.lambda {
            return Err(Error::ModulusMismatch {
                left: self.lambda,
                right: other.lambda,
            });
        }
        let n = self.lambda as usize;
        let mut counts = vec![0i64; n];
        for (e, &ce) in self.counts.iter().enumerate() {
            if ce == 0 {
                continue;
            }
            for (f, &cf) in other.counts.iter().enumerate() {
                counts[(e + f) % n] += ce * cf;
            }
        }
        Ok(Self {
            lambda: self.lambda,
            counts,
        })
    }

    /// Complex conjugate: root `omega^e` maps to `omega^(lambda - e)`.
    pub fn conjugate(&self) -> Self {
        let n = self.lambda as usize;
        let mut counts = vec![0i64; n];
        for (e, &c) in self.counts.iter().enumerate() {
            counts[(n - e) % n] += c;
        }
        Self {
            lambda: self.lambda,
            counts,
        }
    }

    /// The count-weighted root sum as a complex float.
    pub fn complex(&self) -> Complex64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(e, &c)| unit_root(self.lambda, e as u32) * c as f64)
            .sum()
    }

    pub fn magnitude(&self) -> f64 {
        self.complex().norm()
    }

    /// Exact zero test via cyclotomic divisibility.
    pub fn is_zero(&self) -> bool {
        root_sum_is_zero(&self.counts, self.lambda)
    }

    /// Sum of absolute counts; bounds the float rounding error.
    pub fn total_terms(&self) -> u64 {
        self.counts.iter().map(|c| c.unsigned_abs()).sum()
    }
}

fn check_pair(a: &PhaseSequence, b: &PhaseSequence) -> Result<()> {
    if a.lambda() != b.lambda() {
        return Err(Error::ModulusMismatch {
            left: a.lambda(),
            right: b.lambda(),
        });
    }
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch(format!(
            "sequence lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

/// Aperiodic cross-correlation of `a` against `b` at shift `tau`.
///
/// For `0 <= tau < L` this is `sum_i omega^(a_i - b_(i+tau))`; negative
/// shifts use the conjugate symmetry `C(a,b)(-tau) = C(b,a)(tau)*`; shifts
/// with `|tau| >= L` are zero.
pub fn accf(a: &PhaseSequence, b: &PhaseSequence, tau: i64) -> Result<CorrelationValue> {
    check_pair(a, b)?;
    if tau < 0 {
        return Ok(accf(b, a, -tau)?.conjugate());
    }
    let lambda = a.lambda();
    let len = a.len() as i64;
    let mut value = CorrelationValue::zero(lambda);
    if tau >= len {
        return Ok(value);
    }
    let tau = tau as usize;
    let (pa, pb) = (a.phases(), b.phases());
    for i in 0..a.len() - tau {
        value.add_root(pa[i] + lambda - pb[i + tau]);
    }
    Ok(value)
}

/// Aperiodic autocorrelation: [`accf`] of a sequence with itself.
pub fn aacf(a: &PhaseSequence, tau: i64) -> Result<CorrelationValue> {
    accf(a, a, tau)
}

/// Code-level cross-correlation: the row-wise sum of [`accf`] values.
pub fn code_accf(
    rows1: &[PhaseSequence],
    rows2: &[PhaseSequence],
    tau: i64,
) -> Result<CorrelationValue> {
    if rows1.len() != rows2.len() {
        return Err(Error::ShapeMismatch(format!(
            "codes with {} and {} rows",
            rows1.len(),
            rows2.len()
        )));
    }
    let first = rows1
        .first()
        .ok_or_else(|| Error::ShapeMismatch("empty code".into()))?;
    let mut value = CorrelationValue::zero(first.lambda());
    for (r1, r2) in rows1.iter().zip(rows2) {
        value.merge(&accf(r1, r2, tau)?);
    }
    Ok(value)
}

/// 2-D aperiodic cross-correlation at shift `(tau1, tau2)`; all four sign
/// branches are implemented directly.
pub fn accf_2d(
    x: &PhaseArray2D,
    y: &PhaseArray2D,
    tau1: i64,
    tau2: i64,
) -> Result<CorrelationValue> {
    if x.lambda() != y.lambda() {
        return Err(Error::ModulusMismatch {
            left: x.lambda(),
            right: y.lambda(),
        });
    }
    if x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(Error::ShapeMismatch(format!(
            "arrays {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    let lambda = x.lambda();
    let (l1, l2) = (x.rows() as i64, x.cols() as i64);
    let mut value = CorrelationValue::zero(lambda);
    if tau1.abs() >= l1 || tau2.abs() >= l2 {
        return Ok(value);
    }
    let row_span = (l1 - tau1.abs()) as usize;
    let col_span = (l2 - tau2.abs()) as usize;
    for i in 0..row_span {
        for j in 0..col_span {
            let (xi, yi) = if tau1 >= 0 {
                (i, i + tau1 as usize)
            } else {
                (i + (-tau1) as usize, i)
            };
            let (xj, yj) = if tau2 >= 0 {
                (j, j + tau2 as usize)
            } else {
                (j + (-tau2) as usize, j)
            };
            value.add_root(x.at(xi, xj) + lambda - y.at(yi, yj));
        }
    }
    Ok(value)
}

/// 2-D aperiodic autocorrelation.
pub fn aacf_2d(x: &PhaseArray2D, tau1: i64, tau2: i64) -> Result<CorrelationValue> {
    accf_2d(x, x, tau1, tau2)
}

/// Cross-correlation of two Kronecker products evaluated factor-wise.
///
/// For outer pairs of length `M'` and inner pairs of length `N`,
/// `C(a1 (x) b1, a2 (x) b2)(tau)` splits into at most two products of
/// factor correlations; the result equals [`accf`] on the materialized
/// products. Only `tau >= 0` is accepted; callers reach negative shifts
/// through conjugate symmetry.
pub fn accf_via_kronecker(
    a1: &PhaseSequence,
    b1: &PhaseSequence,
    a2: &PhaseSequence,
    b2: &PhaseSequence,
    tau: i64,
) -> Result<CorrelationValue> {
    if tau < 0 {
        return Err(Error::ShiftOutOfRange(format!(
            "factored correlation needs tau >= 0, got {tau}"
        )));
    }
    check_pair(a1, a2)?;
    check_pair(b1, b2)?;
    if a1.lambda() != b1.lambda() {
        return Err(Error::ModulusMismatch {
            left: a1.lambda(),
            right: b1.lambda(),
        });
    }
    let inner_len = b1.len() as i64;
    let q = tau / inner_len;
    let r = tau % inner_len;
    let mut value = accf(a1, a2, q)?.mul(&accf(b1, b2, r)?)?;
    if r != 0 {
        let wrap = accf(a1, a2, q + 1)?.mul(&accf(b1, b2, r - inner_len)?)?;
        value.merge(&wrap);
    }
    Ok(value)
}

/// Open 1-D shift window `|tau| < bound`.
pub fn shifts_1d(bound: i64) -> impl Iterator<Item = i64> {
    (-bound + 1)..bound
}

/// Open 2-D shift window `|tau1| < bound1, |tau2| < bound2`, row-major.
pub fn shifts_2d(bound1: i64, bound2: i64) -> impl Iterator<Item = (i64, i64)> {
    ((-bound1 + 1)..bound1).flat_map(move |t1| ((-bound2 + 1)..bound2).map(move |t2| (t1, t2)))
}
