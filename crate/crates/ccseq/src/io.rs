//! On-disk codeset documents.
//!
//! One JSON schema covers everything the generators emit. Phases are stored
//! as integers mod lambda, never as floats, so files round-trip losslessly
//! and a decoded set re-verifies bit for bit:
//!
//! ```text
//! {
//!   "kind": "gcp" | "igc" | "zcac" | "zcacs",
//!   "lambda": 6,
//!   "profile": [[2, 2], [3, 2]],
//!   "boolean_m": 2,                  // 2-D kinds and gcp only
//!   "labels": { ... },               // kind-specific tags
//!   "phases": [...]                  // codes: [code][row][col]
//! }                                  // arrays: [set][array][row][col]
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::igc::PhaseCode;
use crate::radix::RadixProfile;
use crate::sequence::{PhaseArray2D, PhaseSequence};
use crate::verify::{self, VerificationReport};
use crate::zcacs::ZetaQuad;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodesetKind {
    Gcp,
    Igc,
    Zcac,
    Zcacs,
}

/// `(s, t)` tag of one stored code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeLabel {
    pub s: Vec<u32>,
    pub t: Vec<u32>,
}

/// `(s1, s2, t1, t2)` tag of one stored array set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaLabel {
    pub s1: Vec<u32>,
    pub s2: Vec<u32>,
    pub t1: Vec<u32>,
    pub t2: Vec<u32>,
}

impl From<&ZetaQuad> for ZetaLabel {
    fn from(quad: &ZetaQuad) -> Self {
        Self {
            s1: quad.s1().to_vec(),
            s2: quad.s2().to_vec(),
            t1: quad.t1().to_vec(),
            t2: quad.t2().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labels {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub codes: Option<Vec<CodeLabel>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zetas: Option<Vec<ZetaLabel>>,
}

/// Phase payload: codes are `[code][row][col]`, array sets are
/// `[set][array][row][col]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PhaseData {
    Codes(Vec<Vec<Vec<u32>>>),
    Arrays(Vec<Vec<Vec<Vec<u32>>>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodesetDoc {
    pub kind: CodesetKind,
    pub lambda: u32,
    pub profile: Vec<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub boolean_m: Option<usize>,
    #[serde(default)]
    pub labels: Labels,
    pub phases: PhaseData,
}

impl CodesetDoc {
    /// Deterministic pretty JSON; identical documents give identical bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidParameter(format!("malformed codeset document: {e}")))
    }
}

pub fn encode_gcp(a: &PhaseSequence, b: &PhaseSequence, m: usize) -> CodesetDoc {
    CodesetDoc {
        kind: CodesetKind::Gcp,
        lambda: a.lambda(),
        profile: vec![],
        boolean_m: Some(m),
        labels: Labels::default(),
        phases: PhaseData::Codes(vec![vec![a.phases().to_vec(), b.phases().to_vec()]]),
    }
}

pub fn encode_igc(profile: &RadixProfile, codes: &[PhaseCode]) -> CodesetDoc {
    CodesetDoc {
        kind: CodesetKind::Igc,
        lambda: profile.modulus(),
        profile: profile.factors().to_vec(),
        boolean_m: None,
        labels: Labels {
            codes: Some(
                codes
                    .iter()
                    .map(|c| CodeLabel {
                        s: c.s().to_vec(),
                        t: c.t().to_vec(),
                    })
                    .collect(),
            ),
            zetas: None,
        },
        phases: PhaseData::Codes(
            codes
                .iter()
                .map(|c| c.rows().iter().map(|r| r.phases().to_vec()).collect())
                .collect(),
        ),
    }
}

fn arrays_to_phases(arrays: &[PhaseArray2D]) -> Vec<Vec<Vec<u32>>> {
    arrays
        .iter()
        .map(|a| (0..a.rows()).map(|i| a.row(i).to_vec()).collect())
        .collect()
}

pub fn encode_zcac(
    profile: &RadixProfile,
    m: usize,
    quad: &ZetaQuad,
    arrays: &[PhaseArray2D],
) -> CodesetDoc {
    CodesetDoc {
        kind: CodesetKind::Zcac,
        lambda: profile.modulus(),
        profile: profile.factors().to_vec(),
        boolean_m: Some(m),
        labels: Labels {
            codes: None,
            zetas: Some(vec![quad.into()]),
        },
        phases: PhaseData::Arrays(vec![arrays_to_phases(arrays)]),
    }
}

pub fn encode_zcacs(
    profile: &RadixProfile,
    m: usize,
    quads: &[ZetaQuad],
    sets: &[Vec<PhaseArray2D>],
) -> CodesetDoc {
    CodesetDoc {
        kind: CodesetKind::Zcacs,
        lambda: profile.modulus(),
        profile: profile.factors().to_vec(),
        boolean_m: Some(m),
        labels: Labels {
            codes: None,
            zetas: Some(quads.iter().map(Into::into).collect()),
        },
        phases: PhaseData::Arrays(sets.iter().map(|s| arrays_to_phases(s)).collect()),
    }
}

/// A decoded document, rebuilt into domain objects.
#[derive(Debug, Clone)]
pub enum DecodedSet {
    Gcp {
        a: PhaseSequence,
        b: PhaseSequence,
    },
    Igc {
        profile: RadixProfile,
        codes: Vec<PhaseCode>,
    },
    Zcac {
        profile: RadixProfile,
        boolean_m: usize,
        arrays: Vec<PhaseArray2D>,
    },
    Zcacs {
        profile: RadixProfile,
        boolean_m: usize,
        sets: Vec<Vec<PhaseArray2D>>,
    },
}

fn decode_arrays(lambda: u32, sets: &[Vec<Vec<u32>>]) -> Result<Vec<PhaseArray2D>> {
    sets.iter()
        .map(|rows| {
            let rows: Result<Vec<PhaseSequence>> = rows
                .iter()
                .map(|r| PhaseSequence::new(lambda, r.clone()))
                .collect();
            PhaseArray2D::from_rows(&rows?)
        })
        .collect()
}

pub fn decode(doc: &CodesetDoc) -> Result<DecodedSet> {
    match (doc.kind, &doc.phases) {
        (CodesetKind::Gcp, PhaseData::Codes(codes)) => {
            let [pair]: &[Vec<Vec<u32>>; 1] = codes
                .as_slice()
                .try_into()
                .map_err(|_| Error::ShapeMismatch("gcp document holds one code".into()))?;
            let [a, b]: &[Vec<u32>; 2] = pair
                .as_slice()
                .try_into()
                .map_err(|_| Error::ShapeMismatch("gcp code holds two rows".into()))?;
            Ok(DecodedSet::Gcp {
                a: PhaseSequence::new(doc.lambda, a.clone())?,
                b: PhaseSequence::new(doc.lambda, b.clone())?,
            })
        }
        (CodesetKind::Igc, PhaseData::Codes(codes)) => {
            let profile = RadixProfile::new(doc.profile.clone(), doc.lambda)?;
            let labels =
                doc.labels.codes.as_ref().ok_or_else(|| {
                    Error::InvalidParameter("igc document needs code labels".into())
                })?;
            if labels.len() != codes.len() {
                return Err(Error::ShapeMismatch(format!(
                    "{} labels for {} codes",
                    labels.len(),
                    codes.len()
                )));
            }
            let codes = codes
                .iter()
                .zip(labels)
                .map(|(rows, label)| {
                    profile.check_label("s", &label.s)?;
                    profile.check_label("t", &label.t)?;
                    let rows: Result<Vec<PhaseSequence>> = rows
                        .iter()
                        .map(|r| PhaseSequence::new(doc.lambda, r.clone()))
                        .collect();
                    PhaseCode::new(rows?, label.s.clone(), label.t.clone())
                })
                .collect::<Result<Vec<_>>>()?;
            let (k, m, l) = (
                profile.set_size() as usize,
                profile.rows_per_code() as usize,
                profile.seq_len() as usize,
            );
            if codes.len() != k || codes.iter().any(|c| c.row_count() != m || c.seq_len() != l) {
                return Err(Error::ShapeMismatch(format!(
                    "igc document must hold {k} codes of {m}x{l} for its profile"
                )));
            }
            Ok(DecodedSet::Igc { profile, codes })
        }
        (CodesetKind::Zcac, PhaseData::Arrays(sets)) => {
            let profile = RadixProfile::new(doc.profile.clone(), doc.lambda)?;
            let boolean_m = required_m(doc)?;
            let [arrays]: &[Vec<Vec<Vec<u32>>>; 1] = sets
                .as_slice()
                .try_into()
                .map_err(|_| Error::ShapeMismatch("zcac document holds one array set".into()))?;
            let arrays = decode_arrays(doc.lambda, arrays)?;
            check_array_dims(&profile, boolean_m, &arrays)?;
            Ok(DecodedSet::Zcac {
                profile,
                boolean_m,
                arrays,
            })
        }
        (CodesetKind::Zcacs, PhaseData::Arrays(sets)) => {
            let profile = RadixProfile::new(doc.profile.clone(), doc.lambda)?;
            let boolean_m = required_m(doc)?;
            let sets = sets
                .iter()
                .map(|s| decode_arrays(doc.lambda, s))
                .collect::<Result<Vec<_>>>()?;
            for set in &sets {
                check_array_dims(&profile, boolean_m, set)?;
            }
            Ok(DecodedSet::Zcacs {
                profile,
                boolean_m,
                sets,
            })
        }
        _ => Err(Error::ShapeMismatch(
            "phase nesting does not match document kind".into(),
        )),
    }
}

fn required_m(doc: &CodesetDoc) -> Result<usize> {
    doc.boolean_m
        .ok_or_else(|| Error::InvalidParameter("2-D document needs boolean_m".into()))
}

fn check_array_dims(
    profile: &RadixProfile,
    boolean_m: usize,
    arrays: &[PhaseArray2D],
) -> Result<()> {
    let count = profile.rows_per_code() as usize;
    let rows = 1usize << boolean_m;
    let cols = 2 * profile.seq_len() as usize;
    if arrays.len() != count || arrays.iter().any(|a| a.rows() != rows || a.cols() != cols) {
        return Err(Error::ShapeMismatch(format!(
            "array set must hold {count} arrays of {rows}x{cols} for its profile"
        )));
    }
    Ok(())
}

/// Verify a decoded document against the zone its parameters imply.
pub fn verify_document(doc: &CodesetDoc) -> Result<VerificationReport> {
    match decode(doc)? {
        DecodedSet::Gcp { a, b } => verify::verify_gcp(&a, &b),
        DecodedSet::Igc { profile, codes } => verify::verify_igc(&codes, profile.zcz_width()),
        DecodedSet::Zcac {
            profile,
            boolean_m,
            arrays,
        } => verify::verify_zcac(&arrays, 1u64 << boolean_m, profile.zcz_width()),
        DecodedSet::Zcacs {
            profile,
            boolean_m,
            sets,
        } => verify::verify_zcacs(&sets, 1u64 << boolean_m, profile.zcz_width()),
    }
}
