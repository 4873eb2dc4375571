//! Tensor-product decompositions of word-indexed irreducibles.
//!
//! The product of the irreducibles indexed by `x` and `y` decomposes over
//! the splits `x = u,t` and `y = t̄,v`: each matching split contributes the
//! concatenation `(u,v)` once and, when both `u` and `v` are nonempty, the
//! fused words `(u₁,…,γ,…,v_l)` with `γ` running over the base fusion of the
//! last letter of `u` with the first letter of `v`, weighted by the base
//! structure constants. A fused `γ` equal to the unit stays in the word as a
//! genuine letter.
//!
//! Dimensions follow from the seed `dim ω(α) = n·d_α - [α = 1_G]` and the
//! length-reducing recursion through `decompose`, with exact big-integer
//! polynomial arithmetic throughout.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::DimPoly;
use crate::ring::{BaseRing, RingId};
use crate::sets::WordSet;
use crate::word::{Word, WordError};

/// A finite direct-sum decomposition: words with strictly positive
/// multiplicities, iterated in canonical (length, lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    ring: RingId,
    terms: BTreeMap<Word, u64>,
}

impl Decomposition {
    fn new(ring: RingId) -> Self {
        Decomposition { ring, terms: BTreeMap::new() }
    }

    /// The decomposition of a single irreducible: `{x: 1}`.
    pub fn of_word(x: Word) -> Self {
        let mut d = Decomposition::new(x.ring_id());
        d.add(x, 1);
        d
    }

    fn add(&mut self, word: Word, mult: u64) {
        if mult == 0 {
            return;
        }
        let entry = self.terms.entry(word).or_insert(0);
        *entry = entry.checked_add(mult).expect("multiplicity overflow");
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, u64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    /// Multiplicity of `z`, zero when absent.
    pub fn mult(&self, z: &Word) -> u64 {
        self.terms.get(z).copied().unwrap_or(0)
    }

    /// Number of distinct summands.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The set of words appearing with nonzero multiplicity.
    pub fn support(&self) -> WordSet {
        WordSet::from_sorted(self.ring, self.terms.keys().cloned().collect())
    }

    /// Right-tensors every summand with `ω(y)` and accumulates:
    /// `Σ_w mult(w) · decompose(w, y)`.
    pub fn tensor_right(&self, ring: &BaseRing, y: &Word) -> Result<Decomposition, WordError> {
        let mut out = Decomposition::new(self.ring);
        for (w, m) in self.terms() {
            for (z, c) in decompose(ring, w, y)?.terms() {
                out.add(z.clone(), m.checked_mul(c).expect("multiplicity overflow"));
            }
        }
        Ok(out)
    }

    /// Left-tensors every summand with `ω(x)`:
    /// `Σ_w mult(w) · decompose(x, w)`.
    pub fn tensor_left(&self, ring: &BaseRing, x: &Word) -> Result<Decomposition, WordError> {
        let mut out = Decomposition::new(self.ring);
        for (w, m) in self.terms() {
            for (z, c) in decompose(ring, x, w)?.terms() {
                out.add(z.clone(), m.checked_mul(c).expect("multiplicity overflow"));
            }
        }
        Ok(out)
    }
}

/// Decomposes `ω(x) ⊗ ω(y)` into irreducibles with multiplicities.
///
/// For each `m = 0..=min(|x|,|y|)` the suffix `t` of `x` of length `m` is
/// compared letterwise against the prefix of `y`, which must equal `t̄`;
/// a given `m` contributes at most one split. Multiplicities from distinct
/// splits accumulate additively.
pub fn decompose(ring: &BaseRing, x: &Word, y: &Word) -> Result<Decomposition, WordError> {
    if x.ring_id() != ring.id() || y.ring_id() != ring.id() {
        return Err(WordError::MixedRings);
    }
    let xs = x.letters();
    let ys = y.letters();
    let mut out = Decomposition::new(ring.id());
    for m in 0..=xs.len().min(ys.len()) {
        let matches = (0..m).all(|i| ys[i] == ring.dual(xs[xs.len() - 1 - i]));
        if !matches {
            continue;
        }
        let u = &xs[..xs.len() - m];
        let v = &ys[m..];

        let mut concat = Vec::with_capacity(u.len() + v.len());
        concat.extend_from_slice(u);
        concat.extend_from_slice(v);
        out.add(Word::from_parts(ring.id(), concat), 1);

        if let (Some(&last), Some(&first)) = (u.last(), v.first()) {
            for (gamma, c) in ring.fuse(last, first).map_err(|_| WordError::MixedRings)? {
                let mut fused = Vec::with_capacity(u.len() + v.len() - 1);
                fused.extend_from_slice(&u[..u.len() - 1]);
                fused.push(gamma);
                fused.extend_from_slice(&v[1..]);
                out.add(Word::from_parts(ring.id(), fused), c);
            }
        }
    }
    Ok(out)
}

/// Multiplicity of `ω(z)` inside `ω(x) ⊗ ω(y)`; zero when `z` is absent.
pub fn mult_of(ring: &BaseRing, x: &Word, y: &Word, z: &Word) -> Result<u64, WordError> {
    if z.ring_id() != ring.id() {
        return Err(WordError::MixedRings);
    }
    Ok(decompose(ring, x, y)?.mult(z))
}

/// Dimension calculator with a memo table keyed by word.
///
/// Fills are idempotent (the polynomial of a word is determined by the
/// ring), so independent calculators — one per thread, say — always agree.
pub struct Dims<'r> {
    ring: &'r BaseRing,
    memo: BTreeMap<Word, DimPoly>,
}

impl<'r> Dims<'r> {
    pub fn new(ring: &'r BaseRing) -> Self {
        Dims { ring, memo: BTreeMap::new() }
    }

    /// `dim ω(x)` as an exact integer polynomial in the wreath parameter `n`.
    ///
    /// `dim ω(∅) = 1`, `dim ω(α) = n·d_α - [α = 1_G]`, and for longer words
    /// the product `ω(x') ⊗ ω(α)` is charged against its other summands, all
    /// of which are strictly shorter.
    pub fn poly(&mut self, x: &Word) -> Result<DimPoly, WordError> {
        if x.ring_id() != self.ring.id() {
            return Err(WordError::MixedRings);
        }
        if let Some(p) = self.memo.get(x) {
            return Ok(p.clone());
        }
        let poly = match x.letters() {
            [] => DimPoly::one(),
            [alpha] => {
                let correction =
                    if self.ring.is_unit(*alpha) { BigInt::one() } else { BigInt::zero() };
                DimPoly::linear(self.ring.dim(*alpha), -correction)
            }
            letters => {
                let head = Word::from_parts(x.ring_id(), letters[..letters.len() - 1].to_vec());
                let last =
                    Word::from_parts(x.ring_id(), alloc::vec![letters[letters.len() - 1]]);
                let mut poly = &self.poly(&head)? * &self.poly(&last)?;
                for (z, m) in decompose(self.ring, &head, &last)?.terms() {
                    if z == x {
                        debug_assert_eq!(m, 1, "long word must appear exactly once");
                        continue;
                    }
                    poly = &poly - &self.poly(z)?.scaled(m);
                }
                poly
            }
        };
        self.memo.insert(x.clone(), poly.clone());
        Ok(poly)
    }

    /// Exact integer evaluation of the dimension polynomial at `n = N`.
    pub fn at(&mut self, x: &Word, n: &BigInt) -> Result<BigInt, WordError> {
        Ok(self.poly(x)?.eval(n))
    }
}
