//! Multivariable polynomials over `Z_lambda`.
//!
//! A [`MultivarPoly`] is a sparse linear combination of monomials
//! `prod v_i^{e_i}` with coefficients in `Z_lambda`, where each variable
//! ranges over `Z_p` for the radix `p` of its [`Domain`] slot and exponents
//! stay within `0..p`. Exponents are *not* reduced: callers supply them
//! in range, matching how the constructions only ever form degree-two
//! chains and linear tails.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::radix::{Domain, MixedRadixIndex};
use crate::sequence::PhaseSequence;

/// Sparse polynomial over mixed-radix variables with `Z_lambda` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultivarPoly {
    lambda: u32,
    domain: Domain,
    /// exponent vector (one entry per variable, flat order) -> nonzero coeff
    terms: BTreeMap<Vec<u32>, u32>,
}

impl MultivarPoly {
    pub fn zero(domain: Domain, lambda: u32) -> Self {
        assert!(lambda > 0, "modulus must be positive");
        Self {
            lambda,
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(domain: Domain, lambda: u32, value: u32) -> Self {
        let mut poly = Self::zero(domain, lambda);
        let exps = vec![0; poly.domain.num_vars()];
        poly.accumulate(exps, value);
        poly
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    /// Iterate `(exponents, coefficient)` pairs in a deterministic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], u32)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    /// Add `coeff * prod v_i^{exponents[i]}`, validating exponent ranges.
    pub fn add_term(&mut self, exponents: &[u32], coeff: u32) -> Result<()> {
        if exponents.len() != self.domain.num_vars() {
            return Err(Error::DomainMismatch(format!(
                "term has {} exponents, domain has {} variables",
                exponents.len(),
                self.domain.num_vars()
            )));
        }
        for (position, &e) in exponents.iter().enumerate() {
            let radix = self.domain.var_radix(position);
            if e >= radix {
                return Err(Error::DigitOutOfRange {
                    digit: e,
                    radix,
                    position,
                });
            }
        }
        self.accumulate(exponents.to_vec(), coeff);
        Ok(())
    }

    fn accumulate(&mut self, exponents: Vec<u32>, coeff: u32) {
        use std::collections::btree_map::Entry;
        let coeff = coeff % self.lambda;
        match self.terms.entry(exponents) {
            Entry::Occupied(mut slot) => {
                let updated = (*slot.get() + coeff) % self.lambda;
                if updated == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = updated;
                }
            }
            Entry::Vacant(slot) => {
                if coeff != 0 {
                    slot.insert(coeff);
                }
            }
        }
    }

    /// Largest total degree among nonzero terms; 0 for the zero polynomial.
    pub fn order(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.lambda != other.lambda {
            return Err(Error::ModulusMismatch {
                left: self.lambda,
                right: other.lambda,
            });
        }
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(
                "polynomials live over different domains".into(),
            ));
        }
        Ok(())
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (exps, coeff) in other.terms() {
            out.accumulate(exps.to_vec(), coeff);
        }
        Ok(out)
    }

    /// Pointwise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (exps, coeff) in other.terms() {
            out.accumulate(exps.to_vec(), (self.lambda - coeff) % self.lambda);
        }
        Ok(out)
    }

    /// Add a constant to every point.
    pub fn add_constant(&self, value: u32) -> Self {
        let mut out = self.clone();
        out.accumulate(vec![0; out.domain.num_vars()], value);
        out
    }

    /// Multiply every term by the variable at `var`, raising its exponent.
    pub fn mul_var(&self, var: usize) -> Result<Self> {
        if var >= self.domain.num_vars() {
            return Err(Error::DomainMismatch(format!(
                "variable {var} outside domain of {} variables",
                self.domain.num_vars()
            )));
        }
        let radix = self.domain.var_radix(var);
        let mut out = Self::zero(self.domain.clone(), self.lambda);
        for (exps, coeff) in self.terms() {
            let mut exps = exps.to_vec();
            exps[var] += 1;
            if exps[var] >= radix {
                return Err(Error::DigitOutOfRange {
                    digit: exps[var],
                    radix,
                    position: var,
                });
            }
            out.accumulate(exps, coeff);
        }
        Ok(out)
    }

    /// Re-express this polynomial over `target`, sending variable `i` to
    /// `var_map[i]`. Radices must agree slot for slot.
    pub fn embed(&self, target: &Domain, var_map: &[usize]) -> Result<Self> {
        if var_map.len() != self.domain.num_vars() {
            return Err(Error::DomainMismatch(format!(
                "variable map covers {} of {} variables",
                var_map.len(),
                self.domain.num_vars()
            )));
        }
        for (src, &dst) in var_map.iter().enumerate() {
            if dst >= target.num_vars() {
                return Err(Error::DomainMismatch(format!(
                    "mapped variable {dst} outside target domain"
                )));
            }
            if self.domain.var_radix(src) != target.var_radix(dst) {
                return Err(Error::DomainMismatch(format!(
                    "radix mismatch mapping variable {src} to {dst}"
                )));
            }
        }
        let mut out = Self::zero(target.clone(), self.lambda);
        for (exps, coeff) in self.terms() {
            let mut new_exps = vec![0u32; target.num_vars()];
            for (src, &e) in exps.iter().enumerate() {
                new_exps[var_map[src]] = e;
            }
            out.accumulate(new_exps, coeff);
        }
        Ok(out)
    }

    /// Evaluate at a digit vector of the polynomial's own domain.
    pub fn eval_digits(&self, digits: &[u32]) -> Result<u32> {
        if digits.len() != self.domain.num_vars() {
            return Err(Error::DomainMismatch(format!(
                "point has {} digits, domain has {} variables",
                digits.len(),
                self.domain.num_vars()
            )));
        }
        for (position, &d) in digits.iter().enumerate() {
            let radix = self.domain.var_radix(position);
            if d >= radix {
                return Err(Error::DigitOutOfRange {
                    digit: d,
                    radix,
                    position,
                });
            }
        }
        Ok(self.eval_unchecked(digits))
    }

    /// Evaluate at a [`MixedRadixIndex`]; the point's domain must match.
    pub fn eval(&self, point: &MixedRadixIndex) -> Result<u32> {
        if point.domain() != &self.domain {
            return Err(Error::DomainMismatch(
                "point domain differs from polynomial domain".into(),
            ));
        }
        Ok(self.eval_unchecked(point.digits()))
    }

    fn eval_unchecked(&self, digits: &[u32]) -> u32 {
        let lambda = self.lambda as u64;
        let mut acc = 0u64;
        for (exps, coeff) in self.terms() {
            let mut term = coeff as u64 % lambda;
            for (&v, &e) in digits.iter().zip(exps) {
                for _ in 0..e {
                    term = term * (v as u64) % lambda;
                }
            }
            acc = (acc + term) % lambda;
        }
        acc as u32
    }

    /// Evaluate at every point of the domain in index order.
    pub fn materialize(&self) -> PhaseSequence {
        let phases = self
            .domain
            .points()
            .map(|digits| self.eval_unchecked(&digits))
            .collect();
        PhaseSequence::new_unchecked(self.lambda, phases)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radix::{to_mixed_radix, VarBlock};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn z3_square() -> Domain {
        Domain::new(vec![VarBlock::new(3, 2)])
    }

    /// Independent term-by-term evaluator used as the oracle.
    fn eval_oracle(poly: &MultivarPoly, digits: &[u32]) -> u32 {
        let lambda = poly.lambda() as u128;
        let mut total: u128 = 0;
        for (exps, coeff) in poly.terms() {
            let mut term = coeff as u128;
            for (&v, &e) in digits.iter().zip(exps) {
                term *= (v as u128).pow(e);
            }
            total += term;
        }
        (total % lambda) as u32
    }

    #[test]
    fn zero_poly_evaluates_to_zero() {
        let poly = MultivarPoly::zero(z3_square(), 3);
        for digits in z3_square().points() {
            assert_eq!(poly.eval_digits(&digits).unwrap(), 0);
        }
    }

    #[test]
    fn hand_arithmetic_example() {
        // 1 + 2*v1 + v1*v2 over Z_3^2 with lambda = 3, at (1, 2)
        let mut poly = MultivarPoly::constant(z3_square(), 3, 1);
        poly.add_term(&[1, 0], 2).unwrap();
        poly.add_term(&[1, 1], 1).unwrap();
        assert_eq!(poly.eval_digits(&[1, 2]).unwrap(), (1 + 2 + 2) % 3);
    }

    #[test]
    fn random_polys_match_oracle() {
        let mut rng = StdRng::seed_from_u64(7);
        let domain = Domain::new(vec![VarBlock::new(2, 2), VarBlock::new(5, 1)]);
        for _ in 0..50 {
            let lambda = 2 * rng.gen_range(1..=6);
            let mut poly = MultivarPoly::zero(domain.clone(), lambda);
            for _ in 0..rng.gen_range(0..8) {
                let exps: Vec<u32> = (0..domain.num_vars())
                    .map(|v| rng.gen_range(0..domain.var_radix(v)))
                    .collect();
                poly.add_term(&exps, rng.gen_range(0..lambda)).unwrap();
            }
            for digits in domain.points() {
                assert_eq!(
                    poly.eval_digits(&digits).unwrap(),
                    eval_oracle(&poly, &digits)
                );
            }
        }
    }

    #[test]
    fn addition_is_pointwise_mod_lambda() {
        let mut rng = StdRng::seed_from_u64(8);
        let domain = z3_square();
        for _ in 0..20 {
            let mut f = MultivarPoly::zero(domain.clone(), 6);
            let mut g = MultivarPoly::zero(domain.clone(), 6);
            for poly in [&mut f, &mut g] {
                for _ in 0..rng.gen_range(0..6) {
                    let exps: Vec<u32> = (0..2).map(|_| rng.gen_range(0..3)).collect();
                    poly.add_term(&exps, rng.gen_range(0..6)).unwrap();
                }
            }
            let sum = f.add(&g).unwrap();
            for digits in domain.points() {
                let expect =
                    (f.eval_digits(&digits).unwrap() + g.eval_digits(&digits).unwrap()) % 6;
                assert_eq!(sum.eval_digits(&digits).unwrap(), expect);
            }
        }
    }

    #[test]
    fn exponent_at_radix_is_rejected() {
        let mut poly = MultivarPoly::zero(z3_square(), 3);
        assert!(poly.add_term(&[3, 0], 1).is_err());
        assert!(poly.add_term(&[2, 2], 1).is_ok());
    }

    #[test]
    fn eval_rejects_mismatched_domain() {
        let poly = MultivarPoly::zero(z3_square(), 3);
        let other = Domain::new(vec![VarBlock::new(2, 2)]);
        let point = to_mixed_radix(1, &other).unwrap();
        assert!(poly.eval(&point).is_err());
    }

    #[test]
    fn order_tracks_highest_nonzero_term() {
        let mut poly = MultivarPoly::constant(z3_square(), 3, 2);
        assert_eq!(poly.order(), 0);
        poly.add_term(&[1, 2], 1).unwrap();
        assert_eq!(poly.order(), 3);
        // cancel the cubic term: order drops back
        poly.add_term(&[1, 2], 2).unwrap();
        assert_eq!(poly.order(), 0);
    }
}
