//! Mixed-radix domains and indexing.
//!
//! Every sequence and array in this crate is a function on a product of
//! cyclic groups `Z_{p_1}^{m_1} x ... x Z_{p_k}^{m_k}`. A [`Domain`] records
//! that product as an ordered list of blocks; a linear index is converted to
//! and from a digit vector with one fixed significance convention used by the
//! whole crate:
//!
//! * earlier-declared blocks vary fastest (they are least significant), and
//! * within a block the first digit is least significant, so a block over
//!   `Z_p^m` holds the base-`p` expansion `i = sum_g p^(g-1) * d_g`.
//!
//! The Kronecker factorisation of the constructed sequences only holds under
//! this convention; `correlation` tests pin it down.

use crate::error::{Error, Result};

/// A block of `count` variables, each ranging over `Z_radix`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarBlock {
    pub radix: u32,
    pub count: usize,
}

impl VarBlock {
    pub fn new(radix: u32, count: usize) -> Self {
        Self { radix, count }
    }

    /// Number of points in this block: `radix^count`.
    pub fn size(&self) -> u64 {
        (self.radix as u64).pow(self.count as u32)
    }
}

/// An ordered product of variable blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Domain {
    blocks: Vec<VarBlock>,
}

impl Domain {
    pub fn new(blocks: Vec<VarBlock>) -> Self {
        Self { blocks }
    }

    pub fn blocks(&self) -> &[VarBlock] {
        &self.blocks
    }

    /// Total number of points: the product of all block sizes.
    pub fn size(&self) -> u64 {
        self.blocks.iter().map(VarBlock::size).product()
    }

    /// Total number of variables across all blocks.
    pub fn num_vars(&self) -> usize {
        self.blocks.iter().map(|b| b.count).sum()
    }

    /// Radix of the flat variable at `var`, block order.
    pub fn var_radix(&self, var: usize) -> u32 {
        let mut remaining = var;
        for block in &self.blocks {
            if remaining < block.count {
                return block.radix;
            }
            remaining -= block.count;
        }
        panic!("variable index {var} out of range");
    }

    /// Radices of all variables in flat order.
    pub fn radices(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.radix, b.count))
            .collect()
    }

    /// Concatenate two domains: `self`'s variables stay least significant.
    pub fn extend(&self, other: &Domain) -> Domain {
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&other.blocks);
        Domain::new(blocks)
    }

    /// Decompose a linear index into digits, least significant first.
    pub fn digits_of(&self, index: u64) -> Result<Vec<u32>> {
        let size = self.size();
        if index >= size {
            return Err(Error::IndexOutOfRange { index, size });
        }
        let mut digits = Vec::with_capacity(self.num_vars());
        let mut rest = index;
        for radix in self.radices() {
            digits.push((rest % radix as u64) as u32);
            rest /= radix as u64;
        }
        Ok(digits)
    }

    /// Recompose a digit vector into its linear index.
    pub fn index_of(&self, digits: &[u32]) -> Result<u64> {
        let radices = self.radices();
        if digits.len() != radices.len() {
            return Err(Error::DomainMismatch(format!(
                "expected {} digits, got {}",
                radices.len(),
                digits.len()
            )));
        }
        let mut index = 0u64;
        let mut weight = 1u64;
        for (position, (&digit, &radix)) in digits.iter().zip(&radices).enumerate() {
            if digit >= radix {
                return Err(Error::DigitOutOfRange {
                    digit,
                    radix,
                    position,
                });
            }
            index += digit as u64 * weight;
            weight *= radix as u64;
        }
        Ok(index)
    }

    /// Iterate all points in index order without re-dividing each step.
    pub fn points(&self) -> PointIter {
        PointIter {
            radices: self.radices(),
            digits: vec![0; self.num_vars()],
            remaining: self.size(),
        }
    }
}

/// Odometer over a domain's digit vectors, index order.
pub struct PointIter {
    radices: Vec<u32>,
    digits: Vec<u32>,
    remaining: u64,
}

impl Iterator for PointIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.remaining == 0 {
            return None;
        }
        let out = self.digits.clone();
        self.remaining -= 1;
        for (digit, &radix) in self.digits.iter_mut().zip(&self.radices) {
            *digit += 1;
            if *digit < radix {
                break;
            }
            *digit = 0;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

/// A digit vector paired with the domain it indexes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedRadixIndex {
    digits: Vec<u32>,
    domain: Domain,
}

impl MixedRadixIndex {
    pub fn new(digits: Vec<u32>, domain: Domain) -> Result<Self> {
        // index_of validates digit ranges and length
        domain.index_of(&digits)?;
        Ok(Self { digits, domain })
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }
}

/// Decompose `index` over `domain`; earlier blocks vary fastest.
pub fn to_mixed_radix(index: u64, domain: &Domain) -> Result<MixedRadixIndex> {
    let digits = domain.digits_of(index)?;
    Ok(MixedRadixIndex {
        digits,
        domain: domain.clone(),
    })
}

/// Inverse of [`to_mixed_radix`].
pub fn from_mixed_radix(index: &MixedRadixIndex) -> Result<u64> {
    index.domain.index_of(&index.digits)
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Least common multiple of the profile's primes, doubled when an even
/// modulus is required and the lcm is odd.
pub fn default_modulus(factors: &[(u32, u32)], need_even: bool) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let lcm = factors
        .iter()
        .fold(1u32, |acc, &(p, _)| acc / gcd(acc, p) * p);
    if need_even && lcm % 2 != 0 {
        2 * lcm
    } else {
        lcm
    }
}

/// The prime-power shape `(p_1^{m_1}, ..., p_k^{m_k})` of a construction,
/// together with the phase modulus.
///
/// All derived sizes follow from the factors:
/// sequence length `L = prod p^m`, zero-correlation zone `Z = N = prod
/// p^{m-1}`, rows per code `M = prod p`, and set size `K = M^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadixProfile {
    factors: Vec<(u32, u32)>,
    lambda: u32,
}

impl RadixProfile {
    /// Validate and build a profile. Factors must be distinct primes, each
    /// with multiplicity at least 2 and dividing the modulus.
    pub fn new(factors: Vec<(u32, u32)>, lambda: u32) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter(
                "profile needs at least one (prime, exponent) factor".into(),
            ));
        }
        if lambda == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        for (i, &(p, m)) in factors.iter().enumerate() {
            if !is_prime(p) {
                return Err(Error::InvalidParameter(format!("{p} is not prime")));
            }
            if m < 2 {
                return Err(Error::InvalidParameter(format!(
                    "exponent of {p} must be at least 2, got {m}"
                )));
            }
            if !lambda.is_multiple_of(p) {
                return Err(Error::InvalidParameter(format!(
                    "{p} does not divide modulus {lambda}"
                )));
            }
            if factors[..i].iter().any(|&(q, _)| q == p) {
                return Err(Error::InvalidParameter(format!(
                    "prime {p} appears more than once"
                )));
            }
        }
        Ok(Self { factors, lambda })
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn modulus(&self) -> u32 {
        self.lambda
    }

    /// Sequence length `L = prod p^m`.
    pub fn seq_len(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, m)| (p as u64).pow(m))
            .product()
    }

    /// Zero-correlation zone width `Z = N = prod p^{m-1}`.
    pub fn zcz_width(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, m)| (p as u64).pow(m - 1))
            .product()
    }

    /// Rows per code (and groups in the set): `M = prod p`.
    pub fn rows_per_code(&self) -> u64 {
        self.factors.iter().map(|&(p, _)| p as u64).product()
    }

    /// Codes in the full set: `K = M^2`.
    pub fn set_size(&self) -> u64 {
        self.rows_per_code().pow(2)
    }

    /// Domain `prod Z_p^{m-1}` of the chained-quadratic part.
    pub fn r_domain(&self) -> Domain {
        Domain::new(
            self.factors
                .iter()
                .map(|&(p, m)| VarBlock::new(p, (m - 1) as usize))
                .collect(),
        )
    }

    /// Domain `prod Z_p` of the appended single variables (also the space
    /// the `s`, `t` and `gamma` labels live in).
    pub fn t_domain(&self) -> Domain {
        Domain::new(
            self.factors
                .iter()
                .map(|&(p, _)| VarBlock::new(p, 1))
                .collect(),
        )
    }

    /// Full sequence domain: `r_domain` (fast) then `t_domain` (slow).
    pub fn a_domain(&self) -> Domain {
        self.r_domain().extend(&self.t_domain())
    }

    /// Column domain of the 2-D arrays: `a_domain` with one trailing `Z_2`
    /// variable that selects the array half.
    pub fn array_column_domain(&self) -> Domain {
        self.a_domain()
            .extend(&Domain::new(vec![VarBlock::new(2, 1)]))
    }

    /// Check that `label` is a valid point of `prod Z_p`.
    pub fn check_label(&self, name: &str, label: &[u32]) -> Result<()> {
        if label.len() != self.num_factors() {
            return Err(Error::InvalidParameter(format!(
                "{name} has {} components, profile has {} factors",
                label.len(),
                self.num_factors()
            )));
        }
        for (&v, &(p, _)) in label.iter().zip(&self.factors) {
            if v >= p {
                return Err(Error::InvalidParameter(format!(
                    "{name} component {v} not in Z_{p}"
                )));
            }
        }
        Ok(())
    }
}
