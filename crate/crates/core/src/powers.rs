//! Powers-method bookkeeping: hypothesis checks, the exact contraction
//! count and support-growth certificates.
//!
//! The certificate replays the combinatorial obligations of the contraction
//! argument: a conjugating word pushes the given support into `G₂`, the
//! hypothesis checks confirm the partition `M = E₁ ⊔ G₁` and the pairwise
//! disjointness needed by the averaging map, and the support trace iterates
//! the three-word conjugation while the norm bound shrinks by the exact
//! factor `19/20` per step until it drops below the threshold.
//!
//! Only upper bounds are tracked — no operator norms are ever claimed.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::fusion::decompose;
use crate::report::{CheckItem, VerificationReport};
use crate::ring::{BaseRing, Label};
use crate::sets::{
    circ, conjugating_words, conjugator_for, enumerate_class, enumerate_words, ClassId,
    LemmaError, WordSet,
};
use crate::word::{classify, Word};

/// The threshold `1/4` of the simplicity argument.
pub fn default_threshold() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(4))
}

/// The contraction factor `0.95` as the exact rational `19/20`.
pub fn contraction_factor() -> BigRational {
    BigRational::new(BigInt::from(19), BigInt::from(20))
}

/// Smallest `m ≥ 0` with `(19/20)^m · c0 < 1/4`, in exact rational
/// arithmetic (the comparison at the boundary is strict).
pub fn contraction_count(c0: &BigRational) -> Result<u64, LemmaError> {
    contraction_count_to(c0, &default_threshold())
}

/// Same as [`contraction_count`] with the threshold replaced by a caller
/// supplied `ε`, as in the unique-trace argument.
pub fn contraction_count_to(
    c0: &BigRational,
    threshold: &BigRational,
) -> Result<u64, LemmaError> {
    if !c0.is_positive() {
        return Err(LemmaError::NonPositive("c0"));
    }
    if !threshold.is_positive() {
        return Err(LemmaError::NonPositive("threshold"));
    }
    let factor = contraction_factor();
    let mut bound = c0.clone();
    let mut count = 0u64;
    while bound >= *threshold {
        bound *= &factor;
        count += 1;
    }
    Ok(count)
}

/// Verifies the averaging-map hypotheses on the finite slice: every word
/// lies in exactly one of `E₁`, `G₁`, and the three conjugating words have
/// pairwise disjoint `{x_t} ∘ G₁` products.
pub fn check_hypotheses(
    ring: &BaseRing,
    alpha: Label,
    maxlen: usize,
    budget: Option<usize>,
) -> Result<VerificationReport, LemmaError> {
    if ring.label_count() == Some(1) {
        return Err(LemmaError::NeedsTwoIrreducibles);
    }
    if ring.is_unit(alpha) {
        return Err(LemmaError::AlphaIsUnit);
    }
    let words = enumerate_words(ring, maxlen, budget)?;
    let universe = format!("{} words of length <= {maxlen}", words.len());
    let mut report = VerificationReport::new();

    let mut item = CheckItem::new("powers.partition-e1-g1", universe.clone())
        .count("words", words.len() as u64);
    for w in &words {
        let c = classify(ring, w);
        if c.e1 == c.g1 {
            item.fail(w.render(ring));
            break;
        }
    }
    report.push(item);

    let g1_slice = enumerate_class(ring, ClassId::G1, maxlen, budget)?;
    let xs = conjugating_words(ring, alpha);
    let products: Vec<WordSet> = xs
        .iter()
        .map(|x| circ(ring, &WordSet::singleton(x.clone()), &g1_slice))
        .collect::<Result<_, _>>()?;
    let mut item = CheckItem::new("powers.disjoint-conjugates", universe)
        .count("g1_slice", g1_slice.len() as u64);
    for (t, p) in products.iter().enumerate() {
        item.add_count(format!("x{}_circ_g1", t + 1), p.len() as u64);
    }
    'pairs: for t in 0..3 {
        for s in t + 1..3 {
            if let Some(w) = products[t].intersection(&products[s]).next() {
                item.fail(format!(
                    "{} in both x{} ∘ G1 and x{} ∘ G1",
                    w.render(ring),
                    t + 1,
                    s + 1
                ));
                break 'pairs;
            }
        }
    }
    report.push(item);

    Ok(report)
}

/// Inputs of [`build_certificate`] beyond the ring, support and `α`.
#[derive(Clone, Debug)]
pub struct CertificateParams {
    /// Starting norm bound `b₀`.
    pub c0: BigRational,
    /// Contraction target; `1/4` for the simplicity argument, a caller
    /// supplied `ε` for the unique-trace variant.
    pub threshold: BigRational,
    /// Hard cap on any traced support set; exceeding it truncates the trace.
    pub max_support: usize,
    /// Record the full word sets of the trace, not only their sizes.
    pub trace_sets: bool,
    /// Bounds of the slice used by the hypothesis checks.
    pub slice_maxlen: usize,
    pub slice_budget: usize,
}

impl CertificateParams {
    pub fn new(c0: BigRational) -> Self {
        CertificateParams {
            c0,
            threshold: default_threshold(),
            max_support: 100_000,
            trace_sets: false,
            slice_maxlen: 4,
            slice_budget: 2,
        }
    }
}

/// The replayed bookkeeping of the contraction argument.
#[derive(Clone, Debug, PartialEq)]
pub struct PowersCertificate {
    /// The conjugating word `x = (α, 1^k)`.
    pub conjugator: Word,
    /// Its unit-tail length `k` (longest support word plus one).
    pub k: usize,
    /// Partition and disjointness checks on the slice.
    pub hypothesis_report: VerificationReport,
    /// `G₂`-containment of the conjugated support and of every traced step.
    pub support_report: VerificationReport,
    /// `b_i = c0 · (19/20)^i` for `i = 0..=iterations`, exact.
    pub norm_bounds: Vec<BigRational>,
    /// First `m` with `b_m` below the threshold.
    pub iterations: u64,
    /// Sizes of `S₀, S₁, …` as far as the trace was computed.
    pub support_sizes: Vec<u64>,
    /// The traced sets themselves, when requested.
    pub supports: Option<Vec<WordSet>>,
    /// Set when a step would have exceeded `max_support`.
    pub truncated: bool,
}

impl PowersCertificate {
    /// True when every hypothesis and containment item passed.
    pub fn all_verified(&self) -> bool {
        self.hypothesis_report.all_pass() && self.support_report.all_pass()
    }
}

fn g2_containment_item(ring: &BaseRing, id: String, set: &WordSet) -> CheckItem {
    let mut item = CheckItem::new(id, format!("{} traced words", set.len()));
    item.add_count("size", set.len() as u64);
    for w in set.iter() {
        if !classify(ring, w).g2 {
            item.fail(w.render(ring));
            break;
        }
    }
    item
}

/// One trace step: `⋃_{t=1..3} {x_t} ∘ S ∘ {x̄_t}`, aborting as soon as the
/// accumulated set exceeds `cap`.
fn trace_step(
    ring: &BaseRing,
    xs: &[Word; 3],
    prev: &WordSet,
    cap: usize,
) -> Result<Option<WordSet>, LemmaError> {
    let mut acc = WordSet::empty_from_id(prev.ring_id());
    for x in xs {
        let xbar = x.involute(ring);
        for w in prev.iter() {
            let left = decompose(ring, x, w)?;
            for (mid, _) in left.terms() {
                let right = decompose(ring, mid, &xbar)?;
                for (out, _) in right.terms() {
                    acc.insert(out.clone())?;
                    if acc.len() > cap {
                        return Ok(None);
                    }
                }
            }
        }
    }
    Ok(Some(acc))
}

/// Builds the full certificate: conjugator and `S₀ ⊂ G₂`, hypothesis
/// checks, the exact norm-bound chain, and the support trace
/// `S_{i+1} = ⋃_t {x_t} ∘ S_i ∘ {x̄_t}` verified against `G₂` at every
/// recorded step. The trace stops (and `truncated` is set) when a step
/// would exceed `max_support`.
pub fn build_certificate(
    ring: &BaseRing,
    support: &WordSet,
    alpha: Label,
    params: &CertificateParams,
) -> Result<PowersCertificate, LemmaError> {
    let conj = conjugator_for(ring, support, alpha)?;
    let hypothesis_report =
        check_hypotheses(ring, alpha, params.slice_maxlen, Some(params.slice_budget))?;

    let iterations = contraction_count_to(&params.c0, &params.threshold)?;
    let factor = contraction_factor();
    let mut norm_bounds = Vec::with_capacity(iterations as usize + 1);
    let mut bound = params.c0.clone();
    norm_bounds.push(bound.clone());
    for _ in 0..iterations {
        bound *= &factor;
        norm_bounds.push(bound.clone());
    }

    let mut support_report = VerificationReport::new();
    support_report.push(conj.item);
    support_report.push(g2_containment_item(
        ring,
        String::from("powers.support0-in-g2"),
        &conj.conjugated_support,
    ));

    let xs = conjugating_words(ring, alpha);
    let mut sets = alloc::vec![conj.conjugated_support];
    let mut truncated = false;
    for step in 1..=iterations {
        match trace_step(ring, &xs, sets.last().unwrap(), params.max_support)? {
            Some(next) => {
                support_report.push(g2_containment_item(
                    ring,
                    format!("powers.support{step}-in-g2"),
                    &next,
                ));
                sets.push(next);
            }
            None => {
                truncated = true;
                break;
            }
        }
    }

    let support_sizes = sets.iter().map(|s| s.len() as u64).collect();
    Ok(PowersCertificate {
        conjugator: conj.word,
        k: conj.unit_tail,
        hypothesis_report,
        support_report,
        norm_bounds,
        iterations,
        support_sizes,
        supports: params.trace_sets.then_some(sets),
        truncated,
    })
}
