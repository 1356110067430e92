//! Complementary sequence sets over mixed-radix domains.
//!
//! This crate constructs inter-group complementary (IGC) code sets of
//! length `p_1^{m_1} ... p_k^{m_k}` and 2-D Z-complementary array code sets
//! of size `2^m x 2 p_1^{m_1} ... p_k^{m_k}` from multivariable generating
//! functions, and verifies every claimed correlation property by exhaustive
//! scans with exact root-of-unity arithmetic.
//!
//! The main pieces:
//!
//! * [`radix`]: mixed-radix domains, indexing and the size profile.
//! * [`poly`]: sparse multivariable polynomials over `Z_lambda`.
//! * [`sequence`]: phase sequences/arrays and their complex images.
//! * [`correlation`]: aperiodic correlation as exact root-count vectors.
//! * [`cyclotomic`]: the exact zero test behind every verdict.
//! * [`igc`], [`gcp`], [`zcacs`]: the constructions.
//! * [`verify`]: exhaustive checkers producing JSON-friendly reports.
//! * [`io`]: the codeset file format.
//!
//! ```
//! use ccseq::igc::{build_igc_codeset, IgcParams};
//! use ccseq::radix::RadixProfile;
//! use ccseq::verify::verify_igc;
//!
//! let profile = RadixProfile::new(vec![(2, 2)], 2)?;
//! let codes = build_igc_codeset(&IgcParams::new(profile.clone()));
//! assert_eq!(codes.len(), 4);
//! let report = verify_igc(&codes, profile.zcz_width())?;
//! assert!(report.passed);
//! # Ok::<(), ccseq::Error>(())
//! ```

pub mod correlation;
pub mod cyclotomic;
pub mod error;
pub mod gcp;
pub mod igc;
pub mod io;
pub mod poly;
pub mod radix;
pub mod sequence;
pub mod verify;
pub mod zcacs;

pub use error::{Error, Result};

// The guide's code blocks double as doctests so the book can never drift
// from the library.
#[cfg(doctest)]
pub mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(GettingStarted, "../../../book/src/getting-started.md");
    chapter!(
        MultivariableFunctions,
        "../../../book/src/concepts/multivariable-functions.md"
    );
    chapter!(
        ExactCorrelation,
        "../../../book/src/concepts/exact-correlation.md"
    );
    chapter!(GolayPairs, "../../../book/src/concepts/golay-pairs.md");
    chapter!(IgcCodeSets, "../../../book/src/concepts/igc-code-sets.md");
    chapter!(
        ArrayCodeSets,
        "../../../book/src/concepts/array-code-sets.md"
    );
    chapter!(Verification, "../../../book/src/concepts/verification.md");
    chapter!(CliAndFiles, "../../../book/src/cli.md");
}
