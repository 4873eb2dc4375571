//! Fusion combinatorics of free wreath products.
//!
//! Given the fusion ring of a compact quantum group `G` of Kac type, the
//! irreducibles of the free wreath product of `G` by the quantum permutation
//! group are indexed by words over `Irr(G)`. This crate implements that word
//! calculus symbolically:
//!
//! * [`ring`] — base fusion rings: user-supplied tables and built-in families
//!   (trivial, dual of a finite group, interval families),
//! * [`word`] — the word monoid with involution, concatenation and the
//!   `E`/`S`/`G` word-class taxonomy,
//! * [`fusion`] — tensor-product decompositions of word-indexed irreducibles
//!   and their dimensions as exact integer polynomials in the wreath
//!   parameter `n`,
//! * [`sets`] — finite word-set algebra (the `∘` operation, set conjugation)
//!   and mechanical verifiers for the stability and fullness word lemmas,
//! * [`powers`] — Powers-method bookkeeping: hypothesis checks, the exact
//!   `19/20` contraction count and support-growth certificates,
//! * [`oracles`] — exhaustive property sweeps (associativity, Frobenius,
//!   conjugation symmetry, dimension consistency) over bounded word universes.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line live in the companion `freewreath-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod fusion;
pub mod oracles;
pub mod poly;
pub mod powers;
pub mod report;
pub mod ring;
pub mod sets;
pub mod word;

pub use fusion::{decompose, mult_of, Decomposition, Dims};
pub use oracles::{fusion_property_report, OracleBounds};
pub use poly::DimPoly;
pub use powers::{build_certificate, check_hypotheses, contraction_count, contraction_count_to,
                 CertificateParams, PowersCertificate};
pub use report::{CheckItem, VerificationReport};
pub use ring::{BaseRing, IntervalStep, Label, RingError, RingId, RingTables};
pub use sets::{circ, conj_set, enumerate_class, enumerate_words, find_conjugator,
               verify_fullness, verify_stability, ClassId, LemmaError, WordSet};
pub use word::{classify, ones, parse_label, parse_word, Word, WordClass, WordError};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
