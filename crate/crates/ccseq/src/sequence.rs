//! Phase-domain sequences and 2-D arrays.
//!
//! Sequences store `Z_lambda` phases; the complex sequence is the image
//! under `psi`, which sends phase `e` to the unit root `omega_lambda^e`.
//! Working in the phase domain keeps everything exact: products of unit
//! roots become sums of phases.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::poly::MultivarPoly;

/// The unit root `omega_lambda^phase`.
pub fn unit_root(lambda: u32, phase: u32) -> Complex64 {
    let angle = TAU * (phase % lambda) as f64 / lambda as f64;
    Complex64::new(angle.cos(), angle.sin())
}

/// A sequence of `Z_lambda` phases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseSequence {
    lambda: u32,
    phases: Vec<u32>,
}

impl PhaseSequence {
    pub fn new(lambda: u32, phases: Vec<u32>) -> Result<Self> {
        if lambda == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        if let Some(&bad) = phases.iter().find(|&&p| p >= lambda) {
            return Err(Error::InvalidParameter(format!(
                "phase {bad} not reduced mod {lambda}"
            )));
        }
        Ok(Self { lambda, phases })
    }

    pub(crate) fn new_unchecked(lambda: u32, phases: Vec<u32>) -> Self {
        Self { lambda, phases }
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn phases(&self) -> &[u32] {
        &self.phases
    }

    /// Complex image under `psi`.
    pub fn psi(&self) -> Vec<Complex64> {
        self.phases
            .iter()
            .map(|&p| unit_root(self.lambda, p))
            .collect()
    }

    /// Phase-domain Kronecker product: `self` is the outer (slow) factor.
    ///
    /// `psi(a.kronecker(b))` equals the complex Kronecker product
    /// `psi(a) (x) psi(b)`, i.e. entry `i*|b| + j` is `a[i] + b[j]`.
    pub fn kronecker(&self, inner: &Self) -> Result<Self> {
        if self.lambda != inner.lambda {
            return Err(Error::ModulusMismatch {
                left: self.lambda,
                right: inner.lambda,
            });
        }
        let mut phases = Vec::with_capacity(self.len() * inner.len());
        for &a in &self.phases {
            for &b in &inner.phases {
                phases.push((a + b) % self.lambda);
            }
        }
        Ok(Self {
            lambda: self.lambda,
            phases,
        })
    }
}

/// An `L1 x L2` matrix of `Z_lambda` phases, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseArray2D {
    lambda: u32,
    rows: usize,
    cols: usize,
    phases: Vec<u32>,
}

impl PhaseArray2D {
    pub fn from_rows(rows: &[PhaseSequence]) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| Error::ShapeMismatch("array needs at least one row".into()))?;
        let lambda = first.lambda();
        let cols = first.len();
        let mut phases = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.lambda() != lambda {
                return Err(Error::ModulusMismatch {
                    left: lambda,
                    right: row.lambda(),
                });
            }
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row of length {} in array of width {cols}",
                    row.len()
                )));
            }
            phases.extend_from_slice(row.phases());
        }
        Ok(Self {
            lambda,
            rows: rows.len(),
            cols,
            phases,
        })
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> u32 {
        self.phases[i * self.cols + j]
    }

    /// Overwrite one phase, reduced mod lambda. Handy for mutation tests.
    pub fn set(&mut self, i: usize, j: usize, phase: u32) {
        self.phases[i * self.cols + j] = phase % self.lambda;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.phases[i * self.cols..(i + 1) * self.cols]
    }

    /// Complex image under the matrix map `Psi`.
    pub fn psi(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&p| unit_root(self.lambda, p))
                    .collect()
            })
            .collect()
    }
}

/// Materialize one polynomial per row into an array. All rows must share
/// one domain and modulus.
pub fn materialize_array(rows: &[MultivarPoly]) -> Result<PhaseArray2D> {
    let first = rows
        .first()
        .ok_or_else(|| Error::ShapeMismatch("array needs at least one row".into()))?;
    for poly in rows {
        if poly.domain() != first.domain() {
            return Err(Error::DomainMismatch(
                "array rows live over different domains".into(),
            ));
        }
        if poly.lambda() != first.lambda() {
            return Err(Error::ModulusMismatch {
                left: first.lambda(),
                right: poly.lambda(),
            });
        }
    }
    let rows: Vec<PhaseSequence> = rows.iter().map(MultivarPoly::materialize).collect();
    PhaseArray2D::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radix::{Domain, VarBlock};

    #[test]
    fn constant_poly_materializes_flat() {
        let domain = Domain::new(vec![VarBlock::new(2, 2)]);
        let poly = MultivarPoly::constant(domain, 4, 3);
        assert_eq!(poly.materialize().phases(), &[3, 3, 3, 3]);
    }

    #[test]
    fn single_variable_materializes_identity() {
        let domain = Domain::new(vec![VarBlock::new(2, 1)]);
        let mut poly = MultivarPoly::zero(domain, 2);
        poly.add_term(&[1], 1).unwrap();
        assert_eq!(poly.materialize().phases(), &[0, 1]);
    }

    #[test]
    fn nested_loop_oracle_for_quadratic_chain() {
        // single chain term v1*v2 over Z_3^2 with lambda = 3
        let domain = Domain::new(vec![VarBlock::new(3, 2)]);
        let mut poly = MultivarPoly::zero(domain, 3);
        poly.add_term(&[1, 1], 1).unwrap();
        let seq = poly.materialize();
        assert_eq!(seq.len(), 9);
        for v2 in 0..3u32 {
            for v1 in 0..3u32 {
                let j = (v1 + 3 * v2) as usize;
                assert_eq!(seq.phases()[j], v1 * v2 % 3);
            }
        }
    }

    #[test]
    fn kronecker_identity_factor() {
        let a = PhaseSequence::new(2, vec![0]).unwrap();
        let b = PhaseSequence::new(2, vec![0, 1, 1]).unwrap();
        assert_eq!(a.kronecker(&b).unwrap(), b);
    }

    #[test]
    fn kronecker_small_example() {
        let a = PhaseSequence::new(2, vec![0, 1]).unwrap();
        let b = PhaseSequence::new(2, vec![0, 0]).unwrap();
        assert_eq!(a.kronecker(&b).unwrap().phases(), &[0, 0, 1, 1]);
    }

    #[test]
    fn kronecker_rejects_modulus_mismatch() {
        let a = PhaseSequence::new(2, vec![0]).unwrap();
        let b = PhaseSequence::new(4, vec![0]).unwrap();
        assert!(a.kronecker(&b).is_err());
    }

    #[test]
    fn kronecker_matches_complex_product() {
        let a = PhaseSequence::new(6, vec![1, 4, 2]).unwrap();
        let b = PhaseSequence::new(6, vec![0, 3]).unwrap();
        let kron = a.kronecker(&b).unwrap();
        let via_phase = kron.psi();
        let (pa, pb) = (a.psi(), b.psi());
        for i in 0..a.len() {
            for j in 0..b.len() {
                let direct = pa[i] * pb[j];
                let got = via_phase[i * b.len() + j];
                assert!((direct - got).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn array_rows_match_materialized_sequences() {
        let domain = Domain::new(vec![VarBlock::new(2, 2)]);
        let mut p0 = MultivarPoly::zero(domain.clone(), 2);
        p0.add_term(&[1, 0], 1).unwrap();
        let mut p1 = MultivarPoly::zero(domain.clone(), 2);
        p1.add_term(&[1, 1], 1).unwrap();
        let arr = materialize_array(&[p0.clone(), p1.clone()]).unwrap();
        assert_eq!(arr.rows(), 2);
        assert_eq!(arr.cols(), 4);
        assert_eq!(arr.row(0), p0.materialize().phases());
        assert_eq!(arr.row(1), p1.materialize().phases());
    }

    #[test]
    fn single_constant_row_array() {
        let domain = Domain::new(vec![VarBlock::new(2, 2)]);
        let arr = materialize_array(&[MultivarPoly::zero(domain, 2)]).unwrap();
        assert_eq!(arr.rows(), 1);
        assert_eq!(arr.row(0), &[0, 0, 0, 0]);
    }

    #[test]
    fn phases_must_be_reduced() {
        assert!(PhaseSequence::new(2, vec![0, 2]).is_err());
    }

    #[test]
    fn array_rows_must_share_domain_and_modulus() {
        let d2 = Domain::new(vec![VarBlock::new(2, 1)]);
        let d3 = Domain::new(vec![VarBlock::new(3, 1)]);
        let p2 = MultivarPoly::zero(d2.clone(), 6);
        let p3 = MultivarPoly::zero(d3, 6);
        assert!(materialize_array(&[p2.clone(), p3]).is_err());
        let p2_other = MultivarPoly::zero(d2, 3);
        assert!(materialize_array(&[p2, p2_other]).is_err());
        assert!(materialize_array(&[]).is_err());
    }
}
