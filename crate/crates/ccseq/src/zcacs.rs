//! 2-D Z-complementary array codes and code sets.
//!
//! Rows of each array come from one generating function on
//! `prod Z_p^{m-1} x prod Z_p x Z_2`: the trailing binary variable splits
//! every row into a left half driven by one `(s1, t1)` sequence and a right
//! half driven by `(s2, t2)`, with constant offsets taken from a Golay pair
//! evaluated at the row index. Sweeping `gamma` yields one array per row of
//! the underlying codes; sweeping a family of label quadruples with globally
//! distinct `t` components yields the full array code set.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gcp::GcpParams;
use crate::igc::{build_a, GroupLabel, IgcParams};
use crate::poly::MultivarPoly;
use crate::radix::RadixProfile;
use crate::sequence::{materialize_array, PhaseArray2D};

/// A `(s1, s2, t1, t2)` quadruple selecting one member array set;
/// `t1 != t2` always.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaQuad {
    s1: Vec<u32>,
    s2: Vec<u32>,
    t1: Vec<u32>,
    t2: Vec<u32>,
}

impl ZetaQuad {
    pub fn new(
        profile: &RadixProfile,
        s1: Vec<u32>,
        s2: Vec<u32>,
        t1: Vec<u32>,
        t2: Vec<u32>,
    ) -> Result<Self> {
        profile.check_label("s1", &s1)?;
        profile.check_label("s2", &s2)?;
        profile.check_label("t1", &t1)?;
        profile.check_label("t2", &t2)?;
        if t1 == t2 {
            return Err(Error::InvalidParameter(
                "the two t labels of a quad must differ".into(),
            ));
        }
        Ok(Self { s1, s2, t1, t2 })
    }

    pub fn s1(&self) -> &[u32] {
        &self.s1
    }

    pub fn s2(&self) -> &[u32] {
        &self.s2
    }

    pub fn t1(&self) -> &[u32] {
        &self.t1
    }

    pub fn t2(&self) -> &[u32] {
        &self.t2
    }
}

/// How to pick the family of quadruples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadStrategy {
    /// Pair consecutive `t` indices `(0,1), (2,3), ...` with both `s`
    /// labels zero.
    ConsecutivePairs,
    /// Pair a seeded shuffle of the `t` indices with random `s` labels.
    Seeded(u64),
}

/// Select `floor(M/2)` quadruples whose `t` components are globally
/// distinct, the largest family that constraint allows.
pub fn select_quads(profile: &RadixProfile, strategy: QuadStrategy) -> Result<Vec<ZetaQuad>> {
    let m = profile.rows_per_code();
    if m < 2 {
        return Err(Error::InvalidParameter(
            "need at least two t labels to form a quad".into(),
        ));
    }
    let labels = profile.t_domain();
    let digits = |idx: u64| labels.digits_of(idx).expect("label index");
    let zero = vec![0u32; profile.num_factors()];
    match strategy {
        QuadStrategy::ConsecutivePairs => (0..m / 2)
            .map(|i| {
                ZetaQuad::new(
                    profile,
                    zero.clone(),
                    zero.clone(),
                    digits(2 * i),
                    digits(2 * i + 1),
                )
            })
            .collect(),
        QuadStrategy::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut order: Vec<u64> = (0..m).collect();
            order.shuffle(&mut rng);
            (0..m as usize / 2)
                .map(|i| {
                    let s1 = digits(rng.gen_range(0..m));
                    let s2 = digits(rng.gen_range(0..m));
                    ZetaQuad::new(
                        profile,
                        s1,
                        s2,
                        digits(order[2 * i]),
                        digits(order[2 * i + 1]),
                    )
                })
                .collect()
        }
    }
}

/// Require globally distinct `t` components across the whole family.
pub fn check_quad_family(quads: &[ZetaQuad]) -> Result<()> {
    let mut seen: Vec<&[u32]> = Vec::with_capacity(2 * quads.len());
    for quad in quads {
        for t in [quad.t1(), quad.t2()] {
            if seen.contains(&t) {
                return Err(Error::InvalidParameter(format!(
                    "t label {t:?} appears twice across the family"
                )));
            }
            seen.push(t);
        }
    }
    Ok(())
}

fn check_moduli(params: &IgcParams, gp: &GcpParams) -> Result<()> {
    if params.profile().modulus() != gp.lambda() {
        return Err(Error::ModulusMismatch {
            left: params.profile().modulus(),
            right: gp.lambda(),
        });
    }
    Ok(())
}

/// Generating function of row `d` of the array tagged `gamma`: left half
/// `(s1, t1)` sequence offset by `a(d)`, right half `(s2, t2)` sequence
/// offset by `b(d)`, where `(a, b)` is the Golay pair of `gp`.
pub fn row_function(
    params: &IgcParams,
    gp: &GcpParams,
    quad: &ZetaQuad,
    gamma: &[u32],
    d: &[u32],
) -> Result<MultivarPoly> {
    check_moduli(params, gp)?;
    let profile = params.profile();
    profile.check_label("gamma", gamma)?;
    if d.len() != gp.m() {
        return Err(Error::InvalidParameter(format!(
            "row index has {} bits, pair dimension is {}",
            d.len(),
            gp.m()
        )));
    }
    let left_label = GroupLabel::new(profile, quad.s1.clone(), quad.t1.clone(), gamma.to_vec())?;
    let right_label = GroupLabel::new(profile, quad.s2.clone(), quad.t2.clone(), gamma.to_vec())?;
    let (pair_a, pair_b) = gp.pair_polys();
    let left_offset = pair_a.eval_digits(d)?;
    let right_offset = pair_b.eval_digits(d)?;

    let columns = profile.array_column_domain();
    let half_vars = profile.a_domain().num_vars();
    let identity: Vec<usize> = (0..half_vars).collect();
    let left = build_a(params, &left_label)?
        .embed(&columns, &identity)?
        .add_constant(left_offset);
    let right = build_a(params, &right_label)?
        .embed(&columns, &identity)?
        .add_constant(right_offset);
    // (1 - v'') left + v'' right = left + v'' (right - left)
    let switched = right.sub(&left)?.mul_var(half_vars)?;
    left.add(&switched)
}

/// Build the `M` arrays of one 2-D Z-complementary array code, one per
/// `gamma`, each `2^m x 2L`.
pub fn build_zcac(
    params: &IgcParams,
    gp: &GcpParams,
    quad: &ZetaQuad,
) -> Result<Vec<PhaseArray2D>> {
    check_moduli(params, gp)?;
    let profile = params.profile();
    let labels = profile.t_domain();
    let row_indices = gp.domain();
    let mut arrays = Vec::with_capacity(profile.rows_per_code() as usize);
    for gamma_idx in 0..profile.rows_per_code() {
        let gamma = labels.digits_of(gamma_idx)?;
        let rows: Vec<MultivarPoly> = row_indices
            .points()
            .map(|d| row_function(params, gp, quad, &gamma, &d))
            .collect::<Result<_>>()?;
        arrays.push(materialize_array(&rows)?);
    }
    Ok(arrays)
}

/// Build one array set per quadruple of the family.
pub fn build_zcacs(
    params: &IgcParams,
    gp: &GcpParams,
    quads: &[ZetaQuad],
) -> Result<Vec<Vec<PhaseArray2D>>> {
    if quads.is_empty() {
        return Err(Error::InvalidParameter("empty quad family".into()));
    }
    check_quad_family(quads)?;
    quads
        .iter()
        .map(|quad| build_zcac(params, gp, quad))
        .collect()
}
