//! Golay complementary pairs from quadratic forms on `Z_2^m`.
//!
//! The classical Paterson construction: a chained quadratic
//! `f = (lambda/2) sum x_pi(b) x_pi(b+1) + sum g_b x_b` gives the pair
//! `(f + e, f + (lambda/2) x_pi(1) + e')` of length `2^m`, complementary for
//! every even modulus, permutation, linear part and pair of offsets.

use crate::error::{Error, Result};
use crate::poly::MultivarPoly;
use crate::radix::{Domain, VarBlock};
use crate::sequence::PhaseSequence;

/// Parameters of the quadratic-form pair: Boolean dimension `m`, an even
/// modulus, a permutation of `{1..m}`, linear coefficients and the two
/// constant offsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcpParams {
    m: usize,
    lambda: u32,
    pi: Vec<usize>,
    g: Vec<u32>,
    e: u32,
    e_prime: u32,
}

impl GcpParams {
    pub fn new(m: usize, lambda: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter(
                "Boolean dimension must be at least 1".into(),
            ));
        }
        if lambda == 0 || !lambda.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "modulus must be even and positive, got {lambda}"
            )));
        }
        Ok(Self {
            m,
            lambda,
            pi: (1..=m).collect(),
            g: vec![0; m],
            e: 0,
            e_prime: 0,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// Replace the chain permutation; `pi` lists the images of `1..=m`.
    pub fn with_permutation(mut self, pi: Vec<usize>) -> Result<Self> {
        if pi.len() != self.m {
            return Err(Error::InvalidParameter(format!(
                "permutation must have {} entries",
                self.m
            )));
        }
        let mut seen = vec![false; self.m + 1];
        for &v in &pi {
            if v < 1 || v > self.m || seen[v] {
                return Err(Error::InvalidParameter(format!(
                    "{pi:?} is not a permutation of 1..={}",
                    self.m
                )));
            }
            seen[v] = true;
        }
        self.pi = pi;
        Ok(self)
    }

    /// Replace the linear coefficients, reduced mod lambda.
    pub fn with_linear(mut self, g: Vec<u32>) -> Result<Self> {
        if g.len() != self.m {
            return Err(Error::InvalidParameter(format!(
                "need {} linear coefficients",
                self.m
            )));
        }
        self.g = g.into_iter().map(|c| c % self.lambda).collect();
        Ok(self)
    }

    /// Constant offsets of the two pair members, reduced mod lambda.
    pub fn with_offsets(mut self, e: u32, e_prime: u32) -> Self {
        self.e = e % self.lambda;
        self.e_prime = e_prime % self.lambda;
        self
    }

    pub fn domain(&self) -> Domain {
        Domain::new(vec![VarBlock::new(2, self.m)])
    }

    /// The shared quadratic `f`.
    pub fn quad_poly(&self) -> MultivarPoly {
        let mut poly = MultivarPoly::zero(self.domain(), self.lambda);
        let half = self.lambda / 2;
        for b in 0..self.m - 1 {
            let mut exps = vec![0u32; self.m];
            exps[self.pi[b] - 1] += 1;
            exps[self.pi[b + 1] - 1] += 1;
            poly.add_term(&exps, half).expect("chain term in range");
        }
        for (b, &coeff) in self.g.iter().enumerate() {
            let mut exps = vec![0u32; self.m];
            exps[b] = 1;
            poly.add_term(&exps, coeff).expect("linear term in range");
        }
        poly
    }

    /// Generating functions of the two members.
    pub fn pair_polys(&self) -> (MultivarPoly, MultivarPoly) {
        let f = self.quad_poly();
        let a = f.add_constant(self.e);
        let mut flip = MultivarPoly::zero(self.domain(), self.lambda);
        let mut exps = vec![0u32; self.m];
        exps[self.pi[0] - 1] = 1;
        flip.add_term(&exps, self.lambda / 2)
            .expect("flip term in range");
        let b = f
            .add(&flip)
            .expect("same domain")
            .add_constant(self.e_prime);
        (a, b)
    }
}

/// Materialize the complementary pair of length `2^m`.
pub fn paterson_pair(gp: &GcpParams) -> (PhaseSequence, PhaseSequence) {
    let (a, b) = gp.pair_polys();
    (a.materialize(), b.materialize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::{aacf, shifts_1d};

    #[test]
    fn one_variable_pair() {
        let gp = GcpParams::new(1, 2).unwrap();
        let (a, b) = paterson_pair(&gp);
        assert_eq!(a.phases(), &[0, 0]);
        assert_eq!(b.phases(), &[0, 1]);
    }

    #[test]
    fn two_variable_pair_matches_truth_table() {
        let gp = GcpParams::new(2, 2).unwrap();
        let (a, b) = paterson_pair(&gp);
        // f = x1 x2 with x1 least significant
        assert_eq!(a.phases(), &[0, 0, 0, 1]);
        assert_eq!(b.phases(), &[0, 1, 0, 0]);
    }

    #[test]
    fn rejects_odd_modulus() {
        assert!(GcpParams::new(2, 3).is_err());
        assert!(GcpParams::new(0, 2).is_err());
    }

    #[test]
    fn autocorrelations_cancel_at_every_nonzero_shift() {
        for (m, lambda, pi, g, e, ep) in [
            (1usize, 2u32, vec![1], vec![1], 0u32, 1u32),
            (2, 4, vec![2, 1], vec![3, 1], 2, 0),
            (3, 2, vec![2, 3, 1], vec![0, 1, 1], 1, 1),
            (3, 6, vec![3, 1, 2], vec![5, 0, 2], 4, 3),
        ] {
            let gp = GcpParams::new(m, lambda)
                .unwrap()
                .with_permutation(pi)
                .unwrap()
                .with_linear(g)
                .unwrap()
                .with_offsets(e, ep);
            let (a, b) = paterson_pair(&gp);
            for tau in shifts_1d(1 << m) {
                if tau == 0 {
                    continue;
                }
                let mut sum = aacf(&a, tau).unwrap();
                sum.merge(&aacf(&b, tau).unwrap());
                assert!(sum.is_zero(), "m={m} lambda={lambda} tau={tau}");
            }
        }
    }
}
