//! The word monoid over `Irr(G)` and its class taxonomy.
//!
//! Irreducibles of the free wreath product are indexed by finite words over
//! the base labels. The monoid is free: no reduction or normalisation is
//! ever applied, and a unit letter inside a word is a genuine letter.
//!
//! Words are immutable values ordered by (length, lexicographic label
//! index), which is the canonical output order everywhere in this crate.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::ring::{BaseRing, Label, RingId};

/// Errors from word construction and syntax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordError {
    /// Two operands were built over different rings.
    MixedRings,
    /// A letter or id does not belong to the ring.
    UnknownLabel(String),
    /// Malformed word text.
    Syntax(String),
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::MixedRings => write!(f, "operands belong to different rings"),
            WordError::UnknownLabel(id) => write!(f, "unknown label {id:?}"),
            WordError::Syntax(msg) => write!(f, "bad word syntax: {msg}"),
        }
    }
}

impl core::error::Error for WordError {}

/// An element `x ∈ M`: a finite (possibly empty) sequence of labels of a
/// fixed ring. The empty sequence is the word `∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    ring: RingId,
    letters: Vec<Label>,
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .cmp(&other.ring)
            .then_with(|| self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl Word {
    /// The empty word `∅` over the given ring.
    pub fn empty(ring: &BaseRing) -> Word {
        Word { ring: ring.id(), letters: Vec::new() }
    }

    /// A word from explicit letters, each checked against the ring.
    pub fn from_letters(
        ring: &BaseRing,
        letters: impl IntoIterator<Item = Label>,
    ) -> Result<Word, WordError> {
        let letters: Vec<Label> = letters.into_iter().collect();
        for &l in &letters {
            if !ring.contains(l) {
                return Err(WordError::UnknownLabel(l.index().to_string()));
            }
        }
        Ok(Word { ring: ring.id(), letters })
    }

    pub(crate) fn from_parts(ring: RingId, letters: Vec<Label>) -> Word {
        Word { ring, letters }
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn letters(&self) -> &[Label] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Juxtaposition `(x₁,…,x_k),(y₁,…,y_l) = (x₁,…,x_k,y₁,…,y_l)`.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.ring != other.ring {
            return Err(WordError::MixedRings);
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word { ring: self.ring, letters })
    }

    /// The involution `(x₁,…,x_k)⁻ = (x̄_k,…,x̄₁)`: reverse and dualize.
    pub fn involute(&self, ring: &BaseRing) -> Word {
        assert_eq!(self.ring, ring.id(), "word used with a different ring");
        let letters = self.letters.iter().rev().map(|&l| ring.dual(l)).collect();
        Word { ring: self.ring, letters }
    }

    /// Canonical text form: comma-separated label ids in parentheses,
    /// `()` for the empty word.
    pub fn render(&self, ring: &BaseRing) -> String {
        assert_eq!(self.ring, ring.id(), "word used with a different ring");
        let mut out = String::from("(");
        for (i, &l) in self.letters.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&ring.label_id(l));
        }
        out.push(')');
        out
    }
}

/// The word `1_G^k` of length `k`; `ones(ring, 0)` is `∅`.
pub fn ones(ring: &BaseRing, k: usize) -> Word {
    Word::from_parts(ring.id(), alloc::vec![ring.unit(); k])
}

/// Parses the textual word syntax `"(a,b,1)"`.
///
/// The token `1` always denotes the unit label, regardless of its declared
/// id. A token `#k` denotes the label with canonical index `k`, which keeps
/// every label reachable when a ring declares a non-unit label whose id the
/// `1` convention shadows (the generative families in particular).
pub fn parse_word(ring: &BaseRing, text: &str) -> Result<Word, WordError> {
    let body = text.trim();
    let body = body
        .strip_prefix('(')
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| WordError::Syntax(format!("expected \"(...)\", got {text:?}")))?;
    if body.trim().is_empty() {
        return Ok(Word::empty(ring));
    }
    let mut letters = Vec::new();
    for token in body.split(',') {
        letters.push(parse_label(ring, token)?);
    }
    Ok(Word::from_parts(ring.id(), letters))
}

/// Resolves a single label token: `1` for the unit, `#k` by index, or a
/// declared id.
pub fn parse_label(ring: &BaseRing, token: &str) -> Result<Label, WordError> {
    let token = token.trim();
    if token.is_empty() {
        return Err(WordError::Syntax("empty label token".to_string()));
    }
    if token == "1" {
        return Ok(ring.unit());
    }
    if let Some(index) = token.strip_prefix('#') {
        let index: usize = index
            .parse()
            .map_err(|_| WordError::Syntax(format!("bad label index {token:?}")))?;
        let label = Label::from_index(index);
        if !ring.contains(label) {
            return Err(WordError::UnknownLabel(token.to_string()));
        }
        return Ok(label);
    }
    ring.label_by_id(token).ok_or_else(|| WordError::UnknownLabel(token.to_string()))
}

/// Membership flags for the word classes.
///
/// `E₁` are the words starting with the unit (plus `∅`), `E₂` the words with
/// only unit letters, `E₃ = E₁ \ E₂`, `S = M \ E₂`, `G₁` the words starting
/// with a non-unit letter and `G₂ ⊂ G₁` those also ending with one. Exactly
/// one of `E₂`, `E₃`, `G₁` holds for every word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordClass {
    pub e1: bool,
    pub e2: bool,
    pub e3: bool,
    pub s: bool,
    pub g1: bool,
    pub g2: bool,
}

/// Computes class membership from the first letter, last letter and letter
/// content; `O(|x|)`, nothing is cached.
pub fn classify(ring: &BaseRing, x: &Word) -> WordClass {
    assert_eq!(x.ring_id(), ring.id(), "word used with a different ring");
    let only_units = x.letters().iter().all(|&l| ring.is_unit(l));
    let starts_nonunit = x.letters().first().map_or(false, |&l| !ring.is_unit(l));
    let ends_nonunit = x.letters().last().map_or(false, |&l| !ring.is_unit(l));

    let e2 = only_units;
    let g1 = starts_nonunit;
    let e3 = !e2 && !g1;
    WordClass { e1: e2 || e3, e2, e3, s: !e2, g1, g2: g1 && ends_nonunit }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::BaseRing;

    fn dual_z2() -> BaseRing {
        BaseRing::dual_group(
            alloc::vec!["e".to_string(), "g".to_string()],
            alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0]],
        )
        .unwrap()
    }

    fn dual_z3() -> BaseRing {
        BaseRing::dual_group(
            alloc::vec!["e".to_string(), "a".to_string(), "b".to_string()],
            alloc::vec![alloc::vec![0, 1, 2], alloc::vec![1, 2, 0], alloc::vec![2, 0, 1]],
        )
        .unwrap()
    }

    #[test]
    fn concat_monoid_unit() {
        let ring = dual_z2();
        let g = ring.label_by_id("g").unwrap();
        let x = Word::from_letters(&ring, [g]).unwrap();
        assert_eq!(Word::empty(&ring).concat(&x).unwrap(), x);
        let gg = x.concat(&x).unwrap();
        assert_eq!(gg.len(), 2);
        assert_eq!(gg.render(&ring), "(g,g)");
    }

    #[test]
    fn concat_builds_stability_word() {
        // (α) followed by 1_G³ is the x₂ of the stability checks
        let ring = dual_z2();
        let g = ring.label_by_id("g").unwrap();
        let alpha = Word::from_letters(&ring, [g]).unwrap();
        let x2 = alpha.concat(&ones(&ring, 3)).unwrap();
        assert_eq!(x2.render(&ring), "(g,e,e,e)");
        assert_eq!(x2.len(), 4);
    }

    #[test]
    fn concat_rejects_mixed_rings() {
        let r1 = dual_z2();
        let r2 = dual_z2();
        let x = ones(&r1, 1);
        let y = ones(&r2, 1);
        assert_eq!(x.concat(&y), Err(WordError::MixedRings));
    }

    #[test]
    fn involution_reverses_and_dualizes() {
        let ring = dual_z2();
        let g = ring.label_by_id("g").unwrap();
        assert_eq!(Word::empty(&ring).involute(&ring), Word::empty(&ring));
        // (α, 1_G)⁻ = (1_G, ᾱ)
        let x = Word::from_letters(&ring, [g, ring.unit()]).unwrap();
        assert_eq!(x.involute(&ring).render(&ring), "(e,g)");
    }

    #[test]
    fn involution_uses_group_inverses() {
        let ring = dual_z3();
        let a = ring.label_by_id("a").unwrap();
        let b = ring.label_by_id("b").unwrap();
        // over the dual of ℤ/3: (a,b)⁻ = (b̄,ā) = (a²,b²)... rendered (a,b)
        // since b̄ = a and ā = b
        let x = Word::from_letters(&ring, [a, b]).unwrap();
        assert_eq!(x.involute(&ring).letters(), &[a, b]);
        let y = Word::from_letters(&ring, [a, a]).unwrap();
        assert_eq!(y.involute(&ring).letters(), &[b, b]);
    }

    #[test]
    fn classify_empty_word() {
        let ring = dual_z2();
        let c = classify(&ring, &Word::empty(&ring));
        assert!(c.e1 && c.e2 && !c.e3 && !c.s && !c.g1 && !c.g2);
    }

    #[test]
    fn classify_unit_then_nonunit() {
        let ring = dual_z2();
        let g = ring.label_by_id("g").unwrap();
        let x = Word::from_letters(&ring, [ring.unit(), g]).unwrap();
        let c = classify(&ring, &x);
        assert!(c.e1 && !c.e2 && c.e3 && c.s && !c.g1 && !c.g2);
    }

    #[test]
    fn classify_single_nonunit() {
        let ring = dual_z2();
        let g = ring.label_by_id("g").unwrap();
        let c = classify(&ring, &Word::from_letters(&ring, [g]).unwrap());
        assert!(!c.e1 && !c.e2 && !c.e3 && c.s && c.g1 && c.g2);
    }

    #[test]
    fn ones_words() {
        let ring = dual_z2();
        assert_eq!(ones(&ring, 0), Word::empty(&ring));
        assert_eq!(ones(&ring, 2).render(&ring), "(e,e)");
        let c = classify(&ring, &ones(&ring, 5));
        assert!(c.e2 && !c.s);
    }

    #[test]
    fn parse_roundtrip_and_unit_alias() {
        let ring = dual_z2();
        let g = ring.label_by_id("g").unwrap();
        assert_eq!(parse_word(&ring, "()").unwrap(), Word::empty(&ring));
        assert_eq!(parse_word(&ring, " ( g , 1 ) ").unwrap().letters(), &[g, ring.unit()]);
        assert_eq!(parse_word(&ring, "(#1,#0)").unwrap().letters(), &[g, ring.unit()]);
        assert!(matches!(parse_word(&ring, "(h)"), Err(WordError::UnknownLabel(_))));
        assert!(matches!(parse_word(&ring, "g"), Err(WordError::Syntax(_))));
        assert!(matches!(parse_word(&ring, "(g,)"), Err(WordError::Syntax(_))));
    }

    #[test]
    fn parse_unit_alias_on_generative_ring() {
        let ring = BaseRing::interval(crate::ring::IntervalStep::One, 8).unwrap();
        // "1" is the unit (= label 0); the spin-1 label needs "#1"
        let w = parse_word(&ring, "(1,#1)").unwrap();
        assert_eq!(w.letters()[0], ring.unit());
        assert_eq!(w.letters()[1].index(), 1);
        assert_eq!(w.render(&ring), "(0,1)");
    }

    #[test]
    fn canonical_order_is_length_then_lex() {
        let ring = dual_z2();
        let g = ring.label_by_id("g").unwrap();
        let e = ring.unit();
        let mut words = alloc::vec![
            Word::from_letters(&ring, [g]).unwrap(),
            Word::empty(&ring),
            Word::from_letters(&ring, [g, e]).unwrap(),
            Word::from_letters(&ring, [e, g]).unwrap(),
        ];
        words.sort();
        let rendered: Vec<_> = words.iter().map(|w| w.render(&ring)).collect();
        assert_eq!(rendered, alloc::vec!["()", "(g)", "(e,g)", "(g,e)"]);
    }
}
