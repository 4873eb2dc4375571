//! Finite word-set algebra and the word-lemma verifiers.
//!
//! `A ∘ B` collects every word whose irreducible appears in some
//! `ω(x) ⊗ ω(y)` with `x ∈ A`, `y ∈ B`. The infinite classes `E₁`, `E₃`,
//! `G₁`, `G₂` are always handled through their finite slices — all words up
//! to a length bound over the first few labels — so the stability and
//! fullness lemmas become falsifiable checks over explicit universes, with
//! the first offending word (in canonical order) as the witness.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::fusion::decompose;
use crate::report::{CheckItem, VerificationReport};
use crate::ring::{BaseRing, Label, RingId};
use crate::word::{classify, ones, Word, WordClass, WordError};

/// A finite, deduplicated set of words over a common ring, iterated in
/// canonical (length, lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSet {
    ring: RingId,
    words: BTreeSet<Word>,
}

impl WordSet {
    pub fn empty(ring: &BaseRing) -> Self {
        WordSet { ring: ring.id(), words: BTreeSet::new() }
    }

    pub fn singleton(word: Word) -> Self {
        let ring = word.ring_id();
        let mut words = BTreeSet::new();
        words.insert(word);
        WordSet { ring, words }
    }

    pub fn from_words(
        ring: &BaseRing,
        iter: impl IntoIterator<Item = Word>,
    ) -> Result<Self, WordError> {
        let mut set = WordSet::empty(ring);
        for w in iter {
            set.insert(w)?;
        }
        Ok(set)
    }

    pub(crate) fn from_sorted(ring: RingId, words: BTreeSet<Word>) -> Self {
        WordSet { ring, words }
    }

    pub(crate) fn empty_from_id(ring: RingId) -> Self {
        WordSet { ring, words: BTreeSet::new() }
    }

    pub fn insert(&mut self, word: Word) -> Result<bool, WordError> {
        if word.ring_id() != self.ring {
            return Err(WordError::MixedRings);
        }
        Ok(self.words.insert(word))
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn union_with(&mut self, other: &WordSet) -> Result<(), WordError> {
        if other.ring != self.ring {
            return Err(WordError::MixedRings);
        }
        self.words.extend(other.words.iter().cloned());
        Ok(())
    }

    /// Words present in both sets, in canonical order.
    pub fn intersection<'a>(&'a self, other: &'a WordSet) -> impl Iterator<Item = &'a Word> {
        self.words.intersection(&other.words)
    }

    /// Length of the longest word, 0 for the empty set.
    pub fn max_word_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }
}

/// `A ∘ B`: the union over `(x,y) ∈ A×B` of the supports of the
/// decompositions of `ω(x) ⊗ ω(y)`.
pub fn circ(ring: &BaseRing, a: &WordSet, b: &WordSet) -> Result<WordSet, WordError> {
    if a.ring_id() != ring.id() || b.ring_id() != ring.id() {
        return Err(WordError::MixedRings);
    }
    let mut out = WordSet::empty(ring);
    for x in a.iter() {
        for y in b.iter() {
            out.union_with(&decompose(ring, x, y)?.support())?;
        }
    }
    Ok(out)
}

/// `Ā`: the set of involutions of the elements of `A`.
pub fn conj_set(ring: &BaseRing, a: &WordSet) -> WordSet {
    assert_eq!(a.ring_id(), ring.id(), "set used with a different ring");
    let words = a.iter().map(|w| w.involute(ring)).collect();
    WordSet::from_sorted(ring.id(), words)
}

/// Selector for the word classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassId {
    E1,
    E2,
    E3,
    S,
    G1,
    G2,
}

impl ClassId {
    pub fn holds(self, class: &WordClass) -> bool {
        match self {
            ClassId::E1 => class.e1,
            ClassId::E2 => class.e2,
            ClassId::E3 => class.e3,
            ClassId::S => class.s,
            ClassId::G1 => class.g1,
            ClassId::G2 => class.g2,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            ClassId::E1 => "E1",
            ClassId::E2 => "E2",
            ClassId::E3 => "E3",
            ClassId::S => "S",
            ClassId::G1 => "G1",
            ClassId::G2 => "G2",
        }
    }
}

impl core::str::FromStr for ClassId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_uppercase().replace('_', "").as_str() {
            "E1" => Ok(ClassId::E1),
            "E2" => Ok(ClassId::E2),
            "E3" => Ok(ClassId::E3),
            "S" => Ok(ClassId::S),
            "G1" => Ok(ClassId::G1),
            "G2" => Ok(ClassId::G2),
            other => Err(format!("unknown word class {other:?}")),
        }
    }
}

/// Precondition failures of the lemma verifiers and certificate builder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaError {
    /// The distinguished letter must be a non-unit irreducible.
    AlphaIsUnit,
    /// The lemmas assume at least two irreducibles (`G ≠ ℂ`).
    NeedsTwoIrreducibles,
    /// Generative rings need a label budget to slice their classes.
    BudgetRequired,
    /// A support word lies outside `S` (it has only unit letters).
    SupportOutsideS(String),
    EmptySupport,
    /// A rational parameter must be strictly positive.
    NonPositive(&'static str),
    Word(WordError),
}

impl fmt::Display for LemmaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaError::AlphaIsUnit => write!(f, "alpha must be a non-unit label"),
            LemmaError::NeedsTwoIrreducibles => {
                write!(f, "ring must have at least two irreducibles")
            }
            LemmaError::BudgetRequired => {
                write!(f, "generative ring requires a label budget")
            }
            LemmaError::SupportOutsideS(w) => {
                write!(f, "support word {w} is not contained in S")
            }
            LemmaError::EmptySupport => write!(f, "support set is empty"),
            LemmaError::NonPositive(what) => write!(f, "{what} must be positive"),
            LemmaError::Word(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LemmaError {}

impl From<WordError> for LemmaError {
    fn from(e: WordError) -> Self {
        LemmaError::Word(e)
    }
}

fn alphabet(ring: &BaseRing, budget: Option<usize>) -> Result<Vec<Label>, LemmaError> {
    ring.labels_within(budget).ok_or(LemmaError::BudgetRequired)
}

fn require_nonunit(ring: &BaseRing, alpha: Label) -> Result<(), LemmaError> {
    if ring.is_unit(alpha) {
        return Err(LemmaError::AlphaIsUnit);
    }
    Ok(())
}

fn require_nontrivial(ring: &BaseRing) -> Result<(), LemmaError> {
    if ring.label_count() == Some(1) {
        return Err(LemmaError::NeedsTwoIrreducibles);
    }
    Ok(())
}

/// All words of length at most `maxlen` over the first `budget` labels, in
/// canonical order.
pub fn enumerate_words(
    ring: &BaseRing,
    maxlen: usize,
    budget: Option<usize>,
) -> Result<Vec<Word>, LemmaError> {
    let letters = alphabet(ring, budget)?;
    let mut out = Vec::new();
    let mut layer = alloc::vec![Word::empty(ring)];
    out.extend(layer.iter().cloned());
    for _ in 0..maxlen {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &l in &letters {
                let mut letters_vec = w.letters().to_vec();
                letters_vec.push(l);
                next.push(Word::from_parts(ring.id(), letters_vec));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

/// The finite slice of a word class: all members of length at most `maxlen`
/// over the first `budget` labels.
pub fn enumerate_class(
    ring: &BaseRing,
    class: ClassId,
    maxlen: usize,
    budget: Option<usize>,
) -> Result<WordSet, LemmaError> {
    let words = enumerate_words(ring, maxlen, budget)?
        .into_iter()
        .filter(|w| class.holds(&classify(ring, w)));
    Ok(WordSet::from_words(ring, words)?)
}

fn universe_text(ring: &BaseRing, maxlen: usize, letters: &[Label]) -> String {
    let ids: Vec<String> =
        letters.iter().map(|&l| ring.label_id(l).into_owned()).collect();
    format!("words of length <= {maxlen} over labels [{}]", ids.join(", "))
}

/// The three conjugating words `x₁ = (α,1)`, `x₂ = (α,1³)`, `x₃ = (α,1⁵)`.
pub(crate) fn conjugating_words(ring: &BaseRing, alpha: Label) -> [Word; 3] {
    let make = |tail: usize| {
        let mut letters = alloc::vec![alpha];
        letters.extend(ones(ring, tail).letters());
        Word::from_parts(ring.id(), letters)
    };
    [make(1), make(3), make(5)]
}

/// `{x} ∘ set ∘ {x̄}` computed by two `circ` applications.
fn sandwich(ring: &BaseRing, x: &Word, set: &WordSet) -> Result<WordSet, WordError> {
    let left = circ(ring, &WordSet::singleton(x.clone()), set)?;
    circ(ring, &left, &WordSet::singleton(x.involute(ring)))
}

fn containment_item(
    ring: &BaseRing,
    id: &str,
    universe: String,
    produced: &WordSet,
    class: ClassId,
) -> CheckItem {
    let mut item = CheckItem::new(id, universe);
    item.add_count("produced", produced.len() as u64);
    for w in produced.iter() {
        if !class.holds(&classify(ring, w)) {
            item.fail(w.render(ring));
            break;
        }
    }
    item
}

/// Checks the stability properties of the word classes over finite slices:
///
/// 1. `S = E₃ ⊔ G₁` on every enumerated word,
/// 2. `(G₂ ∘ E₁) ∩ E₁ = ∅`,
/// 3. `({x_t} ∘ G₁) ∩ ({x_s} ∘ G₁) = ∅` for `t ≠ s`,
/// 4. `{x_t} ∘ G₂ ∘ {x̄_t} ⊂ G₂` for each `t`.
///
/// These hold universally for every Kac base ring; a failure is an
/// implementation bug, never a data issue.
pub fn verify_stability(
    ring: &BaseRing,
    alpha: Label,
    maxlen: usize,
    budget: Option<usize>,
) -> Result<VerificationReport, LemmaError> {
    require_nontrivial(ring)?;
    require_nonunit(ring, alpha)?;
    let letters = alphabet(ring, budget)?;
    let universe = universe_text(ring, maxlen, &letters);
    let words = enumerate_words(ring, maxlen, budget)?;
    let mut report = VerificationReport::new();

    let mut item = CheckItem::new("stability.partition", universe.clone())
        .count("words", words.len() as u64);
    for w in &words {
        let c = classify(ring, w);
        let exclusive = u8::from(c.e2) + u8::from(c.e3) + u8::from(c.g1) == 1;
        if !exclusive || c.s != (c.e3 || c.g1) {
            item.fail(w.render(ring));
            break;
        }
    }
    report.push(item);

    let e1_slice = enumerate_class(ring, ClassId::E1, maxlen, budget)?;
    let g1_slice = enumerate_class(ring, ClassId::G1, maxlen, budget)?;
    let g2_slice = enumerate_class(ring, ClassId::G2, maxlen, budget)?;

    let product = circ(ring, &g2_slice, &e1_slice)?;
    let mut item = CheckItem::new("stability.g2-e1-escapes-e1", universe.clone())
        .count("g2_slice", g2_slice.len() as u64)
        .count("e1_slice", e1_slice.len() as u64)
        .count("produced", product.len() as u64);
    for w in product.iter() {
        if classify(ring, w).e1 {
            item.fail(w.render(ring));
            break;
        }
    }
    report.push(item);

    let xs = conjugating_words(ring, alpha);
    let products: Vec<WordSet> = xs
        .iter()
        .map(|x| circ(ring, &WordSet::singleton(x.clone()), &g1_slice))
        .collect::<Result<_, _>>()?;
    let mut item = CheckItem::new("stability.disjoint-conjugates", universe.clone())
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

    for (t, x) in xs.iter().enumerate() {
        let conjugated = sandwich(ring, x, &g2_slice)?;
        let mut item = containment_item(
            ring,
            &format!("stability.g2-sandwich.x{}", t + 1),
            universe.clone(),
            &conjugated,
            ClassId::G2,
        );
        item.add_count("g2_slice", g2_slice.len() as u64);
        report.push(item);
    }

    Ok(report)
}

pub(crate) struct Conjugator {
    pub word: Word,
    pub unit_tail: usize,
    pub conjugated_support: WordSet,
    pub item: CheckItem,
}

pub(crate) fn conjugator_for(
    ring: &BaseRing,
    support: &WordSet,
    alpha: Label,
) -> Result<Conjugator, LemmaError> {
    require_nonunit(ring, alpha)?;
    if support.ring_id() != ring.id() {
        return Err(LemmaError::Word(WordError::MixedRings));
    }
    if support.is_empty() {
        return Err(LemmaError::EmptySupport);
    }
    for w in support.iter() {
        if !classify(ring, w).s {
            return Err(LemmaError::SupportOutsideS(w.render(ring)));
        }
    }
    let unit_tail = support.max_word_len() + 1;
    let mut letters = alloc::vec![alpha];
    letters.extend(ones(ring, unit_tail).letters());
    let word = Word::from_parts(ring.id(), letters);

    let conjugated_support = sandwich(ring, &word, support)?;
    let mut item = containment_item(
        ring,
        "conjugator.sandwich-in-g2",
        format!("{} support words conjugated by {}", support.len(), word.render(ring)),
        &conjugated_support,
        ClassId::G2,
    );
    item.add_count("support", support.len() as u64);
    item.add_count("unit_tail", unit_tail as u64);
    Ok(Conjugator { word, unit_tail, conjugated_support, item })
}

/// Finds the word `x = (α, 1^k)` with `k` one more than the longest support
/// word, and verifies by direct computation that `{x} ∘ G ∘ {x̄} ⊂ G₂`.
pub fn find_conjugator(
    ring: &BaseRing,
    support: &WordSet,
    alpha: Label,
) -> Result<(Word, VerificationReport), LemmaError> {
    let conj = conjugator_for(ring, support, alpha)?;
    let mut report = VerificationReport::new();
    report.push(conj.item);
    Ok((conj.word, report))
}

/// Checks the fullness-section word properties over finite slices:
///
/// 1. `{(α)} ∘ E₃ ∘ {(ᾱ)} ⊂ G₁`,
/// 2. `{1^i} ∘ G₁ ∘ {1^i} ⊂ E₃` for `i = 2, 4`,
/// 3. the two sets of item 2 are disjoint.
pub fn verify_fullness(
    ring: &BaseRing,
    alpha: Label,
    maxlen: usize,
    budget: Option<usize>,
) -> Result<VerificationReport, LemmaError> {
    require_nontrivial(ring)?;
    require_nonunit(ring, alpha)?;
    let letters = alphabet(ring, budget)?;
    let universe = universe_text(ring, maxlen, &letters);
    let mut report = VerificationReport::new();

    let e3_slice = enumerate_class(ring, ClassId::E3, maxlen, budget)?;
    let g1_slice = enumerate_class(ring, ClassId::G1, maxlen, budget)?;

    let alpha_word = Word::from_parts(ring.id(), alloc::vec![alpha]);
    let conjugated = sandwich(ring, &alpha_word, &e3_slice)?;
    let mut item = containment_item(
        ring,
        "fullness.alpha-e3-in-g1",
        universe.clone(),
        &conjugated,
        ClassId::G1,
    );
    item.add_count("e3_slice", e3_slice.len() as u64);
    report.push(item);

    let mut sandwiches = Vec::new();
    for i in [2usize, 4] {
        let unit_run = ones(ring, i);
        let conjugated = sandwich(ring, &unit_run, &g1_slice)?;
        let mut item = containment_item(
            ring,
            &format!("fullness.ones-sandwich.i{i}"),
            universe.clone(),
            &conjugated,
            ClassId::E3,
        );
        item.add_count("g1_slice", g1_slice.len() as u64);
        report.push(item);
        sandwiches.push(conjugated);
    }

    let mut item = CheckItem::new("fullness.i2-i4-disjoint", universe)
        .count("i2_produced", sandwiches[0].len() as u64)
        .count("i4_produced", sandwiches[1].len() as u64);
    if let Some(w) = sandwiches[0].intersection(&sandwiches[1]).next() {
        item.fail(w.render(ring));
    }
    report.push(item);

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{BaseRing, IntervalStep};
    use crate::word::parse_word;

    fn dual_z2() -> BaseRing {
        BaseRing::dual_group(
            alloc::vec!["e".into(), "g".into()],
            alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0]],
        )
        .unwrap()
    }

    fn set(ring: &BaseRing, words: &[&str]) -> WordSet {
        WordSet::from_words(ring, words.iter().map(|w| parse_word(ring, w).unwrap())).unwrap()
    }

    fn rendered(ring: &BaseRing, s: &WordSet) -> Vec<String> {
        s.iter().map(|w| w.render(ring)).collect()
    }

    #[test]
    fn circ_of_generators() {
        let ring = dual_z2();
        let g = set(&ring, &["(g)"]);
        let out = circ(&ring, &g, &g).unwrap();
        assert_eq!(rendered(&ring, &out), alloc::vec!["()", "(e)", "(g,g)"]);
    }

    #[test]
    fn circ_with_empty_word_is_identity() {
        let ring = dual_z2();
        let b = set(&ring, &["(g)", "(e,g)"]);
        let empty = set(&ring, &["()"]);
        let out = circ(&ring, &empty, &b).unwrap();
        assert_eq!(out, b);
    }

    #[test]
    fn circ_over_trivial_base() {
        let ring = BaseRing::trivial();
        let one = set(&ring, &["(1)"]);
        let out = circ(&ring, &one, &one).unwrap();
        assert_eq!(rendered(&ring, &out), alloc::vec!["()", "(1)", "(1,1)"]);
    }

    #[test]
    fn conj_set_examples() {
        let ring = dual_z2();
        let empty_word = set(&ring, &["()"]);
        assert_eq!(conj_set(&ring, &empty_word), empty_word);

        let a = set(&ring, &["(g,e)"]);
        assert_eq!(rendered(&ring, &conj_set(&ring, &a)), alloc::vec!["(e,g)"]);

        // a G₂ sample over the dual of ℤ/2 is involution-stable
        let g2 = enumerate_class(&ring, ClassId::G2, 3, Some(2)).unwrap();
        assert_eq!(conj_set(&ring, &g2), g2);
    }

    #[test]
    fn enumerate_class_slices() {
        let ring = dual_z2();
        let e2 = enumerate_class(&ring, ClassId::E2, 3, Some(2)).unwrap();
        assert_eq!(rendered(&ring, &e2), alloc::vec!["()", "(e)", "(e,e)", "(e,e,e)"]);

        let g2 = enumerate_class(&ring, ClassId::G2, 2, Some(2)).unwrap();
        assert_eq!(rendered(&ring, &g2), alloc::vec!["(g)", "(g,g)"]);

        // a length-1 word starting with the unit is the unit word itself
        let e3 = enumerate_class(&ring, ClassId::E3, 1, Some(2)).unwrap();
        assert!(e3.is_empty());
    }

    #[test]
    fn enumerate_requires_budget_on_generative_rings() {
        let ring = BaseRing::interval(IntervalStep::One, 8).unwrap();
        assert!(matches!(
            enumerate_class(&ring, ClassId::G1, 2, None),
            Err(LemmaError::BudgetRequired)
        ));
        let g1 = enumerate_class(&ring, ClassId::G1, 1, Some(2)).unwrap();
        assert_eq!(rendered(&ring, &g1), alloc::vec!["(1)"]);
    }

    #[test]
    fn stability_passes_on_dual_z2() {
        let ring = dual_z2();
        let g = ring.label_by_id("g").unwrap();
        let report = verify_stability(&ring, g, 4, Some(2)).unwrap();
        assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.items.len(), 6);
    }

    #[test]
    fn stability_rejects_trivial_ring() {
        let ring = BaseRing::trivial();
        assert_eq!(
            verify_stability(&ring, ring.unit(), 3, Some(1)),
            Err(LemmaError::NeedsTwoIrreducibles)
        );
    }

    #[test]
    fn stability_rejects_unit_alpha() {
        let ring = dual_z2();
        assert_eq!(
            verify_stability(&ring, ring.unit(), 3, Some(2)),
            Err(LemmaError::AlphaIsUnit)
        );
    }

    #[test]
    fn find_conjugator_examples() {
        let ring = dual_z2();
        let g = ring.label_by_id("g").unwrap();

        let (x, report) = find_conjugator(&ring, &set(&ring, &["(g)"]), g).unwrap();
        assert_eq!(x.render(&ring), "(g,e,e)"); // k = 2
        assert!(report.all_pass());

        let (x, report) = find_conjugator(&ring, &set(&ring, &["(e,g)"]), g).unwrap();
        assert_eq!(x.render(&ring), "(g,e,e,e)"); // k = 3
        assert!(report.all_pass());

        // a word of unit letters is outside S
        let err = find_conjugator(&ring, &set(&ring, &["(e,e)"]), g).unwrap_err();
        assert_eq!(err, LemmaError::SupportOutsideS("(e,e)".into()));
    }

    #[test]
    fn fullness_passes_on_dual_z2() {
        let ring = dual_z2();
        let g = ring.label_by_id("g").unwrap();
        let report = verify_fullness(&ring, g, 4, Some(2)).unwrap();
        assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.items.len(), 4);
    }

    #[test]
    fn fullness_sanity_slice() {
        // {1²} ∘ {(g)} ∘ {1²} contains only words starting with one or two
        // unit letters followed by g, all in E₃
        let ring = dual_z2();
        let out = sandwich(&ring, &ones(&ring, 2), &set(&ring, &["(g)"])).unwrap();
        assert!(!out.is_empty());
        for w in out.iter() {
            assert!(classify(&ring, w).e3);
            let units = w.letters().iter().take_while(|&&l| ring.is_unit(l)).count();
            assert!(units == 1 || units == 2, "leading unit run {units}");
        }

        let i4 = sandwich(&ring, &ones(&ring, 4), &set(&ring, &["(g)"])).unwrap();
        assert_eq!(out.intersection(&i4).count(), 0);
    }

    #[test]
    fn circ_is_monotone() {
        let ring = dual_z2();
        let small = set(&ring, &["(g)"]);
        let big = set(&ring, &["(g)", "(g,g)"]);
        let b = set(&ring, &["(e,g)", "(g)"]);
        let lhs = circ(&ring, &small, &b).unwrap();
        let rhs = circ(&ring, &big, &b).unwrap();
        for w in lhs.iter() {
            assert!(rhs.contains(w));
        }
    }

    #[test]
    fn conjugation_distributes_over_circ() {
        // (A ∘ B)⁻ = B̄ ∘ Ā
        let ring = dual_z2();
        let a = set(&ring, &["(g)", "(g,e)"]);
        let b = set(&ring, &["(e,g)", "(g,g)"]);
        let lhs = conj_set(&ring, &circ(&ring, &a, &b).unwrap());
        let rhs = circ(&ring, &conj_set(&ring, &b), &conj_set(&ring, &a)).unwrap();
        assert_eq!(lhs, rhs);
    }
}
