//! Exhaustive property sweeps for the fusion engine.
//!
//! Each check quantifies over an explicit bounded universe of words and
//! reports a witness pair or triple on failure. The associativity and
//! dimension-consistency items double as independent cross-checks of the
//! multiplicity bookkeeping in [`crate::fusion::decompose`].

use alloc::format;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::fusion::{decompose, Decomposition, Dims};
use crate::poly::DimPoly;
use crate::report::{CheckItem, VerificationReport};
use crate::ring::BaseRing;
use crate::sets::{enumerate_words, LemmaError};
use crate::word::{ones, Word};

/// Universe bounds for [`fusion_property_report`].
#[derive(Clone, Copy, Debug)]
pub struct OracleBounds {
    /// Word length bound for the pairwise checks.
    pub pair_maxlen: usize,
    /// Word length bound for the associativity triples.
    pub triple_maxlen: usize,
    /// Alphabet restriction (first `k` labels); required for generative rings.
    pub budget: Option<usize>,
    /// Upper `k` of the `ω(1^{k-1}) ⊗ ω(1)` recovery checks.
    pub recovery_max: usize,
    /// Word length bound for the positivity check (first two labels only).
    pub positivity_maxlen: usize,
    /// Evaluation point of the positivity check.
    pub eval_at: i64,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            pair_maxlen: 4,
            triple_maxlen: 3,
            budget: Some(2),
            recovery_max: 10,
            positivity_maxlen: 5,
            eval_at: 8,
        }
    }
}

fn pair_witness(ring: &BaseRing, x: &Word, y: &Word) -> alloc::string::String {
    format!("{} ⊗ {}", x.render(ring), y.render(ring))
}

/// Compares a decomposition against another one with all words involuted.
fn is_involuted_image(ring: &BaseRing, d: &Decomposition, image: &Decomposition) -> bool {
    d.term_count() == image.term_count()
        && d.terms().all(|(w, m)| image.mult(&w.involute(ring)) == m)
}

/// Runs every fusion-level property oracle over the bounded universes and
/// returns one report item per property.
pub fn fusion_property_report(
    ring: &BaseRing,
    bounds: &OracleBounds,
) -> Result<VerificationReport, LemmaError> {
    let mut report = VerificationReport::new();
    let words = enumerate_words(ring, bounds.pair_maxlen, bounds.budget)?;
    let universe = format!(
        "{} words of length <= {} ({} pairs)",
        words.len(),
        bounds.pair_maxlen,
        words.len() * words.len()
    );
    let empty = Word::empty(ring);

    let mut item =
        CheckItem::new("fusion.unit-law", universe.clone()).count("words", words.len() as u64);
    for w in &words {
        let left = decompose(ring, &empty, w)?;
        let right = decompose(ring, w, &empty)?;
        if left.term_count() != 1 || left.mult(w) != 1 || right != left {
            item.fail(w.render(ring));
            break;
        }
    }
    report.push(item);

    let mut item = CheckItem::new("fusion.frobenius-at-empty", universe.clone())
        .count("pairs", (words.len() * words.len()) as u64);
    'frob: for x in &words {
        let xbar = x.involute(ring);
        for y in &words {
            let expected = u64::from(*y == xbar);
            if decompose(ring, x, y)?.mult(&empty) != expected {
                item.fail(pair_witness(ring, x, y));
                break 'frob;
            }
        }
    }
    report.push(item);

    let mut item = CheckItem::new("fusion.conjugation-symmetry", universe.clone())
        .count("pairs", (words.len() * words.len()) as u64);
    'conj: for x in &words {
        for y in &words {
            let d = decompose(ring, x, y)?;
            let mirrored = decompose(ring, &y.involute(ring), &x.involute(ring))?;
            if !is_involuted_image(ring, &d, &mirrored) {
                item.fail(pair_witness(ring, x, y));
                break 'conj;
            }
        }
    }
    report.push(item);

    let triples = enumerate_words(ring, bounds.triple_maxlen, bounds.budget)?;
    let mut item = CheckItem::new(
        "fusion.associativity",
        format!(
            "{} words of length <= {} ({} triples)",
            triples.len(),
            bounds.triple_maxlen,
            triples.len().pow(3)
        ),
    )
    .count("triples", triples.len().pow(3) as u64);
    'assoc: for x in &triples {
        for y in &triples {
            let xy = decompose(ring, x, y)?;
            for z in &triples {
                let left = xy.tensor_right(ring, z)?;
                let right = decompose(ring, y, z)?.tensor_left(ring, x)?;
                if left != right {
                    item.fail(format!(
                        "{} ⊗ {} ⊗ {}",
                        x.render(ring),
                        y.render(ring),
                        z.render(ring)
                    ));
                    break 'assoc;
                }
            }
        }
    }
    report.push(item);

    let mut dims = Dims::new(ring);
    let mut item = CheckItem::new("fusion.dim-consistency", universe.clone())
        .count("pairs", (words.len() * words.len()) as u64);
    'dims: for x in &words {
        let px = dims.poly(x)?;
        for y in &words {
            let product = &px * &dims.poly(y)?;
            let mut sum = DimPoly::zero();
            for (z, m) in decompose(ring, x, y)?.terms() {
                sum = &sum + &dims.poly(z)?.scaled(m);
            }
            if sum != product {
                item.fail(pair_witness(ring, x, y));
                break 'dims;
            }
        }
    }
    report.push(item);

    let mut item = CheckItem::new(
        "fusion.snplus-recovery",
        format!("k = 2..={}", bounds.recovery_max),
    )
    .count("cases", bounds.recovery_max.saturating_sub(1) as u64);
    for k in 2..=bounds.recovery_max {
        let d = decompose(ring, &ones(ring, k - 1), &ones(ring, 1))?;
        let expected_ok = d.term_count() == 3
            && d.mult(&ones(ring, k)) == 1
            && d.mult(&ones(ring, k - 1)) == 1
            && d.mult(&ones(ring, k - 2)) == 1;
        if !expected_ok {
            item.fail(format!("k = {k}"));
            break;
        }
    }
    report.push(item);

    // positivity stays on the first two labels: that is the slice the
    // verifier suites exercise, and dimensions there must be positive at
    // any admissible evaluation point
    let pos_words = enumerate_words(ring, bounds.positivity_maxlen, Some(2))?;
    let eval = BigInt::from(bounds.eval_at);
    let mut item = CheckItem::new(
        "fusion.dim-positivity",
        format!(
            "{} words of length <= {} over the first two labels, at n = {}",
            pos_words.len(),
            bounds.positivity_maxlen,
            bounds.eval_at
        ),
    )
    .count("words", pos_words.len() as u64);
    for w in &pos_words {
        if dims.at(w, &eval)? <= BigInt::zero() {
            item.fail(w.render(ring));
            break;
        }
    }
    report.push(item);

    Ok(report)
}
