//! Construction of inter-group complementary code sets.
//!
//! The generating function of each sequence is a chained quadratic over the
//! `prod Z_p^{m-1}` part plus linear tags on the first/last chain variables
//! (`gamma`, `t`) and on the appended `prod Z_p` variables (`s`). Codes
//! stack the `gamma` rows; the full set ranges over all `(s, t)` labels and
//! splits into groups by `t`: cross-correlations vanish everywhere across
//! groups and inside the zone `|tau| < Z` within a group.

use crate::error::{Error, Result};
use crate::poly::MultivarPoly;
use crate::radix::RadixProfile;
use crate::sequence::PhaseSequence;

/// The `(s, t, gamma)` tag of one constructed sequence: each component is a
/// point of `Z_{p_1} x ... x Z_{p_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupLabel {
    pub s: Vec<u32>,
    pub t: Vec<u32>,
    pub gamma: Vec<u32>,
}

impl GroupLabel {
    pub fn new(profile: &RadixProfile, s: Vec<u32>, t: Vec<u32>, gamma: Vec<u32>) -> Result<Self> {
        profile.check_label("s", &s)?;
        profile.check_label("t", &t)?;
        profile.check_label("gamma", &gamma)?;
        Ok(Self { s, t, gamma })
    }
}

/// One code of the set: the `M` rows obtained by sweeping `gamma`, tagged
/// with the `(s, t)` label it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseCode {
    lambda: u32,
    rows: Vec<PhaseSequence>,
    s: Vec<u32>,
    t: Vec<u32>,
}

impl PhaseCode {
    pub fn new(rows: Vec<PhaseSequence>, s: Vec<u32>, t: Vec<u32>) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| Error::ShapeMismatch("code needs at least one row".into()))?;
        let lambda = first.lambda();
        let len = first.len();
        for row in &rows {
            if row.lambda() != lambda {
                return Err(Error::ModulusMismatch {
                    left: lambda,
                    right: row.lambda(),
                });
            }
            if row.len() != len {
                return Err(Error::ShapeMismatch(format!(
                    "row of length {} in code of length {len}",
                    row.len()
                )));
            }
        }
        Ok(Self { lambda, rows, s, t })
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn rows(&self) -> &[PhaseSequence] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn seq_len(&self) -> usize {
        self.rows[0].len()
    }

    pub fn s(&self) -> &[u32] {
        &self.s
    }

    pub fn t(&self) -> &[u32] {
        &self.t
    }
}

/// Parameters of the code-set construction: the radix profile plus the free
/// choices left open by it (per-factor chain permutations, linear
/// coefficients and constants). Defaults are identity permutations and zero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IgcParams {
    profile: RadixProfile,
    /// per factor: images `pi(1), ..., pi(m-1)` of a permutation of `{1..m-1}`
    perms: Vec<Vec<usize>>,
    /// per factor: linear coefficients `c_{alpha,1..m-1}` in `Z_lambda`
    lin_coeffs: Vec<Vec<u32>>,
    /// per factor: constant term in `Z_lambda`
    consts: Vec<u32>,
}

impl IgcParams {
    pub fn new(profile: RadixProfile) -> Self {
        let perms = profile
            .factors()
            .iter()
            .map(|&(_, m)| (1..=(m - 1) as usize).collect())
            .collect();
        let lin_coeffs = profile
            .factors()
            .iter()
            .map(|&(_, m)| vec![0; (m - 1) as usize])
            .collect();
        let consts = vec![0; profile.num_factors()];
        Self {
            profile,
            perms,
            lin_coeffs,
            consts,
        }
    }

    pub fn profile(&self) -> &RadixProfile {
        &self.profile
    }

    pub fn permutation(&self, alpha: usize) -> &[usize] {
        &self.perms[alpha]
    }

    /// Replace the chain permutation of factor `alpha` (0-based). `perm`
    /// lists the images of `1..=m-1` and must be a bijection of that set.
    pub fn with_permutation(mut self, alpha: usize, perm: Vec<usize>) -> Result<Self> {
        let m = self.factor_m(alpha)?;
        let expect = (m - 1) as usize;
        if perm.len() != expect {
            return Err(Error::InvalidParameter(format!(
                "permutation for factor {alpha} must have {expect} entries"
            )));
        }
        let mut seen = vec![false; expect + 1];
        for &v in &perm {
            if v < 1 || v > expect || seen[v] {
                return Err(Error::InvalidParameter(format!(
                    "{perm:?} is not a permutation of 1..={expect}"
                )));
            }
            seen[v] = true;
        }
        self.perms[alpha] = perm;
        Ok(self)
    }

    /// Replace the linear coefficients of factor `alpha`; values are reduced
    /// mod lambda.
    pub fn with_linear_coeffs(mut self, alpha: usize, coeffs: Vec<u32>) -> Result<Self> {
        let m = self.factor_m(alpha)?;
        if coeffs.len() != (m - 1) as usize {
            return Err(Error::InvalidParameter(format!(
                "factor {alpha} takes {} linear coefficients",
                m - 1
            )));
        }
        let lambda = self.profile.modulus();
        self.lin_coeffs[alpha] = coeffs.into_iter().map(|c| c % lambda).collect();
        Ok(self)
    }

    /// Replace the constant term of factor `alpha`, reduced mod lambda.
    pub fn with_constant(mut self, alpha: usize, value: u32) -> Result<Self> {
        self.factor_m(alpha)?;
        self.consts[alpha] = value % self.profile.modulus();
        Ok(self)
    }

    fn factor_m(&self, alpha: usize) -> Result<u32> {
        self.profile
            .factors()
            .get(alpha)
            .map(|&(_, m)| m)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "factor index {alpha} out of range for {} factors",
                    self.profile.num_factors()
                ))
            })
    }

    /// Flat variable index of `v_{p_alpha, beta}` (1-based `beta`) inside
    /// the chained-quadratic domain.
    fn r_var(&self, alpha: usize, beta: usize) -> usize {
        let offset: usize = self.profile.factors()[..alpha]
            .iter()
            .map(|&(_, m)| (m - 1) as usize)
            .sum();
        offset + beta - 1
    }
}

/// The chained quadratic plus linear tail of a single factor, over its own
/// `Z_p^{m-1}` domain. Empty chain when `m = 2`.
pub fn build_f_alpha(params: &IgcParams, alpha: usize) -> MultivarPoly {
    let profile = params.profile();
    let (p, m) = profile.factors()[alpha];
    let lambda = profile.modulus();
    let weight = lambda / p;
    let vars = (m - 1) as usize;
    let domain = crate::radix::Domain::new(vec![crate::radix::VarBlock::new(p, vars)]);
    let mut poly = MultivarPoly::constant(domain, lambda, params.consts[alpha]);
    let pi = &params.perms[alpha];
    for beta in 1..vars {
        let mut exps = vec![0u32; vars];
        exps[pi[beta - 1] - 1] += 1;
        exps[pi[beta] - 1] += 1;
        poly.add_term(&exps, weight).expect("chain term in range");
    }
    for beta in 1..=vars {
        let mut exps = vec![0u32; vars];
        exps[beta - 1] = 1;
        poly.add_term(&exps, params.lin_coeffs[alpha][beta - 1])
            .expect("linear term in range");
    }
    poly
}

/// Sum of all per-factor chains over the joint `prod Z_p^{m-1}` domain.
pub fn build_f(params: &IgcParams) -> MultivarPoly {
    let domain = params.profile().r_domain();
    let mut poly = MultivarPoly::zero(domain.clone(), params.profile().modulus());
    for alpha in 0..params.profile().num_factors() {
        let f_alpha = build_f_alpha(params, alpha);
        let var_map: Vec<usize> = (0..f_alpha.domain().num_vars())
            .map(|beta| params.r_var(alpha, beta + 1))
            .collect();
        let embedded = f_alpha.embed(&domain, &var_map).expect("block embedding");
        poly = poly.add(&embedded).expect("same domain");
    }
    poly
}

/// The chained part tagged by `gamma` (on the first chain variable) and `t`
/// (on the last), over `prod Z_p^{m-1}`.
pub fn build_r(params: &IgcParams, t: &[u32], gamma: &[u32]) -> Result<MultivarPoly> {
    let profile = params.profile();
    profile.check_label("t", t)?;
    profile.check_label("gamma", gamma)?;
    let lambda = profile.modulus();
    let mut poly = build_f(params);
    for (alpha, &(p, m)) in profile.factors().iter().enumerate() {
        let weight = lambda / p;
        let pi = &params.perms[alpha];
        let vars = (m - 1) as usize;
        let first = params.r_var(alpha, pi[0]);
        let last = params.r_var(alpha, pi[vars - 1]);
        let mut exps = vec![0u32; poly.domain().num_vars()];
        exps[first] = 1;
        poly.add_term(&exps, weight * gamma[alpha] % lambda)?;
        let mut exps = vec![0u32; poly.domain().num_vars()];
        exps[last] = 1;
        poly.add_term(&exps, weight * t[alpha] % lambda)?;
    }
    Ok(poly)
}

/// The `s` tag on the appended `prod Z_p` variables.
pub fn build_t(params: &IgcParams, s: &[u32]) -> Result<MultivarPoly> {
    let profile = params.profile();
    profile.check_label("s", s)?;
    let lambda = profile.modulus();
    let domain = profile.t_domain();
    let mut poly = MultivarPoly::zero(domain, lambda);
    for (alpha, &(p, _)) in profile.factors().iter().enumerate() {
        let mut exps = vec![0u32; poly.domain().num_vars()];
        exps[alpha] = 1;
        poly.add_term(&exps, (lambda / p) * s[alpha] % lambda)?;
    }
    Ok(poly)
}

/// The full generating function of one sequence, over
/// `prod Z_p^{m-1} x prod Z_p`. Its materialization factors as the
/// Kronecker product of the `s` part (outer) with the chained part (inner).
pub fn build_a(params: &IgcParams, label: &GroupLabel) -> Result<MultivarPoly> {
    let profile = params.profile();
    let domain = profile.a_domain();
    let r_part = build_r(params, &label.t, &label.gamma)?;
    let t_part = build_t(params, &label.s)?;
    let r_vars = r_part.domain().num_vars();
    let r_map: Vec<usize> = (0..r_vars).collect();
    let t_map: Vec<usize> = (0..t_part.domain().num_vars())
        .map(|v| r_vars + v)
        .collect();
    r_part
        .embed(&domain, &r_map)?
        .add(&t_part.embed(&domain, &t_map)?)
}

/// Build the whole `(K, M, L, Z)` code set, ordered group-major: all codes
/// sharing a `t` label are adjacent, `s` sweeps fastest.
pub fn build_igc_codeset(params: &IgcParams) -> Vec<PhaseCode> {
    let profile = params.profile();
    let label_domain = profile.t_domain();
    let m = profile.rows_per_code();
    let mut codes = Vec::with_capacity((m * m) as usize);
    for t_idx in 0..m {
        let t = label_domain.digits_of(t_idx).expect("label index");
        for s_idx in 0..m {
            let s = label_domain.digits_of(s_idx).expect("label index");
            let rows: Vec<PhaseSequence> = (0..m)
                .map(|g_idx| {
                    let gamma = label_domain.digits_of(g_idx).expect("label index");
                    let label = GroupLabel {
                        s: s.clone(),
                        t: t.clone(),
                        gamma,
                    };
                    build_a(params, &label)
                        .expect("validated labels")
                        .materialize()
                })
                .collect();
            codes.push(PhaseCode::new(rows, s.clone(), t.clone()).expect("uniform rows"));
        }
    }
    codes
}
