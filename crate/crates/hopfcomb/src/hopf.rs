//! Exact linear algebra over combinatorial bases: the φ-realized Hopf
//! algebras and their quotients and duals.
//!
//! The players, all graded and connected, all with integer structure
//! constants:
//!
//! - **FQSym** on permutations (`G` basis) and **WQSym** on packed words
//!   (`M` basis), with the product and coproduct dictated by the polynomial
//!   realization `r(m_u) = Σ_{φ(w)=u} w` and the alphabet-doubling trick —
//!   see [`m_product`], [`m_coproduct`], and the finite-alphabet oracle
//!   [`check_realization`];
//! - their **quotients** by a good congruence ([`project`], [`q_product`],
//!   [`q_coproduct`]): stalactic classes, and for the taïga congruence the
//!   algebra `PBTm` of binary trees with multiplicities, where the class of
//!   `w` *is* the tree `B(w)`;
//! - the **duals**: `S_u = M_u^#` multiplies by shifted shuffle
//!   ([`s_product`]), and the dual `P^m` basis of `PBTm` sits inside the `S`
//!   basis as fiber sums ([`pm_element`], [`pm_product`], [`pm_coproduct`]);
//! - the lifting operators [`bk_apply`] whose tree-indexed composites
//!   [`b_tree_apply`] solve the fixed-point equation `x = 1 + Σ_k B_k(x, x)`
//!   and recover `P^m_T` — the identity behind the hook-length formula;
//! - a degree-by-degree Hopf-axiom verifier, [`check_hopf_axioms`].
//!
//! Coefficients are exact `i64` integers; every structure constant appearing
//! here is small (the product rules are multiplicity free), and tests would
//! catch an overflow long before it could matter.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::BigUint;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::congruence::{canonical_form, class_of, classes, CongruenceExpr};
use crate::trees::{btm_of_word, enumerate_btm, fiber, hook_count, representative_word, Btm};
use crate::words::{
    apply_phi, enumerate_canonical, is_canonical, restrict, words_over, Letter, PhiMap, Word,
};

/// Errors from the Hopf-algebra layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    /// An index word was not a fixed point of the governing φ-map.
    #[error("word {0} is not canonical for φ = {1}")]
    NotCanonical(Word, PhiMap),
    /// An index of the wrong family was handed to an operation.
    #[error("invalid basis index: {0}")]
    InvalidIndex(String),
    /// `B_k` is only defined for `k ≥ 1`.
    #[error("B_k requires k >= 1")]
    InvalidArity,
    /// The two sides of a pairing are indexed by different families.
    #[error("incompatible index families in pairing")]
    IncompatiblePairing,
    /// A quotient operation gave different answers on different
    /// representatives of the same class — the congruence is not good for
    /// this φ at these degrees.
    #[error("representative dependence: {0}")]
    RepresentativeDependence(String),
    /// A regrouping that goodness guarantees to be exact failed; this can
    /// only happen if an invariant of the quotient construction is broken.
    #[error("quotient regrouping failed: {0}")]
    QuotientInconsistency(String),
}

/// A basis element of one of the algebras in play.
///
/// The same index family serves an algebra and its graded dual (`M_u`
/// versus `S_u`, `Q^m_T` versus `P^m_T`); which basis a combination lives in
/// is determined by the operations applied to it, and only matters for
/// rendering ([`render_index`]).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisIndex {
    /// `G_σ` in FQSym: `σ` a permutation (Std-canonical word).
    Permutation(Word),
    /// `M_u` in WQSym (or `S_u` in its dual): `u` a packed word.
    PackedWord(Word),
    /// `Q^{c}_w`: the class of `w` under the congruence `c`, represented by
    /// its canonical form (lexicographically least member).
    Class(CongruenceExpr, Word),
    /// `Q^m_T` in PBTm (or `P^m_T` in its dual): a binary tree with
    /// multiplicities standing for its taïga class.
    Btm(Btm),
}

impl BasisIndex {
    /// Homogeneous degree: word length, or tree size (sum of
    /// multiplicities).
    pub fn degree(&self) -> usize {
        match self {
            BasisIndex::Permutation(w) | BasisIndex::PackedWord(w) => w.len(),
            BasisIndex::Class(_, w) => w.len(),
            BasisIndex::Btm(t) => t.size(),
        }
    }

    /// True for the degree-0 index of each family — the algebra unit, which
    /// renders as `1`.
    pub fn is_unit(&self) -> bool {
        self.degree() == 0
    }
}

impl Serialize for BasisIndex {
    /// Family-tagged maps, e.g. `{"family":"class","congruence":"stal",
    /// "representative":"1121"}`; trees serialize structurally.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            BasisIndex::Permutation(w) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("family", "permutation")?;
                m.serialize_entry("word", &w.to_string())?;
                m.end()
            }
            BasisIndex::PackedWord(w) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("family", "packed-word")?;
                m.serialize_entry("word", &w.to_string())?;
                m.end()
            }
            BasisIndex::Class(c, w) => {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("family", "class")?;
                m.serialize_entry("congruence", &c.to_string())?;
                m.serialize_entry("representative", &w.to_string())?;
                m.end()
            }
            BasisIndex::Btm(t) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("family", "btm")?;
                m.serialize_entry("tree", t)?;
                m.end()
            }
        }
    }
}

/// An exact integer linear combination of basis indices.
///
/// Zero coefficients are never stored, so the zero element is the empty map
/// and equality is structural. The index type defaults to [`BasisIndex`] but
/// raw [`Word`]s (for realizations) and index pairs (for tensors) are used
/// too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<I: Ord = BasisIndex> {
    terms: BTreeMap<I, i64>,
}

/// An element of the two-fold tensor square, `Σ c · (a ⊗ b)`.
pub type Tensor2 = LinComb<(BasisIndex, BasisIndex)>;

/// Three-fold tensors, used only while verifying coassociativity.
type Tensor3 = LinComb<(BasisIndex, BasisIndex, BasisIndex)>;

impl<I: Ord> Default for LinComb<I> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<I: Ord + Clone> LinComb<I> {
    /// The zero element.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single term `1·i`.
    pub fn single(i: I) -> Self {
        Self::term(i, 1)
    }

    /// The single term `c·i` (zero when `c == 0`).
    pub fn term(i: I, c: i64) -> Self {
        let mut x = Self::zero();
        x.add_term(i, c);
        x
    }

    /// Adds `c·i`, dropping the entry if the total cancels.
    pub fn add_term(&mut self, i: I, c: i64) {
        use std::collections::btree_map::Entry;
        if c == 0 {
            return;
        }
        match self.terms.entry(i) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// In-place sum.
    pub fn add_assign(&mut self, other: &Self) {
        for (i, &c) in &other.terms {
            self.add_term(i.clone(), c);
        }
    }

    /// `self + other`.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// `c · self`.
    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(i, &k)| (i.clone(), k * c))
                .collect(),
        }
    }

    /// Coefficient of `i` (0 when absent).
    pub fn coeff(&self, i: &I) -> i64 {
        self.terms.get(i).copied().unwrap_or(0)
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Synonym of [`LinComb::is_zero`], for the container idiom.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `(index, coefficient)` in index order.
    pub fn iter(&self) -> impl Iterator<Item = (&I, i64)> {
        self.terms.iter().map(|(i, &c)| (i, c))
    }

    /// Pushes the combination through an index map, merging collisions by
    /// adding coefficients (the linear extension of `f`).
    pub fn map_indices<J: Ord + Clone>(&self, f: impl Fn(&I) -> J) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (i, c) in self.iter() {
            out.add_term(f(i), c);
        }
        out
    }
}

impl<I: Ord + Clone> FromIterator<(I, i64)> for LinComb<I> {
    fn from_iter<T: IntoIterator<Item = (I, i64)>>(it: T) -> Self {
        let mut out = Self::zero();
        for (i, c) in it {
            out.add_term(i, c);
        }
        out
    }
}

impl<I: Ord + Serialize> Serialize for LinComb<I> {
    /// A JSON array of `{"coeff": c, "index": i}` objects in index order;
    /// tensor indices serialize as two-element arrays.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a, J> {
            coeff: i64,
            index: &'a J,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (i, c) in &self.terms {
            seq.serialize_element(&Term {
                coeff: *c,
                index: i,
            })?;
        }
        seq.end()
    }
}

/// Wraps a canonical word in the index family matching its φ-map.
fn index_for(phi: PhiMap, w: Word) -> BasisIndex {
    match phi {
        PhiMap::Std => BasisIndex::Permutation(w),
        PhiMap::Pack => BasisIndex::PackedWord(w),
    }
}

fn require_canonical(phi: PhiMap, w: &Word) -> Result<(), HopfError> {
    if is_canonical(phi, w) {
        Ok(())
    } else {
        Err(HopfError::NotCanonical(w.clone(), phi))
    }
}

/// The word inside a `Permutation` or `PackedWord` index.
fn index_word(ix: &BasisIndex) -> Result<&Word, HopfError> {
    match ix {
        BasisIndex::Permutation(w) | BasisIndex::PackedWord(w) => Ok(w),
        other => Err(HopfError::InvalidIndex(format!(
            "expected a word-family index, got {}",
            render_index(other, false)
        ))),
    }
}

/// The word inside a `PackedWord` index (the S basis of WQSym's dual).
fn s_word(ix: &BasisIndex) -> Result<&Word, HopfError> {
    match ix {
        BasisIndex::PackedWord(w) => Ok(w),
        other => Err(HopfError::InvalidIndex(format!(
            "expected a packed-word index, got {}",
            render_index(other, true)
        ))),
    }
}

/// The polynomial realization `r(m_u) = Σ_{φ(w) = u} w` cut to the finite
/// alphabet `{1..N}`: every length-`|u|` word over that alphabet whose
/// φ-image is `u`, each with coefficient 1. An alphabet too small for `u`
/// truncates the sum, possibly to zero.
pub fn realize(phi: PhiMap, u: &Word, n: usize) -> Result<LinComb<Word>, HopfError> {
    require_canonical(phi, u)?;
    Ok(realize_over(phi, u, 1, n as Letter))
}

/// Realization over the alphabet interval `[lo, hi]` (empty when `lo > hi`).
fn realize_over(phi: PhiMap, u: &Word, lo: Letter, hi: Letter) -> LinComb<Word> {
    if u.is_empty() {
        return LinComb::single(Word::empty());
    }
    if lo > hi {
        return LinComb::zero();
    }
    words_over(lo, hi, u.len())
        .into_iter()
        .filter(|w| apply_phi(phi, w) == *u)
        .map(|w| (w, 1))
        .collect()
}

/// The m-basis product: `m_u × m_v = Σ m_w` over the canonical words `w` of
/// length `|u| + |v|` whose length-`|u|` prefix φ-maps to `u` and whose
/// suffix φ-maps to `v`. All coefficients are 1; on the `Std` side the term
/// count is the binomial `C(|u|+|v|, |u|)`.
pub fn m_product(phi: PhiMap, u: &Word, v: &Word) -> Result<LinComb<BasisIndex>, HopfError> {
    require_canonical(phi, u)?;
    require_canonical(phi, v)?;
    let k = u.len();
    let n = k + v.len();
    Ok(enumerate_canonical(phi, n)
        .into_iter()
        .filter(|w| apply_phi(phi, &w.factor(0, k)) == *u && apply_phi(phi, &w.factor(k, n)) == *v)
        .map(|w| (index_for(phi, w), 1))
        .collect())
}

/// The coproduct obtained from the alphabet-doubling trick: cut the values
/// of `u` at every threshold `i = 0..max(u)` and φ-normalize the low and
/// high subwords,
/// `Δ(m_u) = Σ_i m_{φ(u|_{1..i})} ⊗ m_{φ(u|_{i+1..max})}`.
pub fn m_coproduct(phi: PhiMap, u: &Word) -> Result<Tensor2, HopfError> {
    require_canonical(phi, u)?;
    let top = u.max_letter();
    let mut out = Tensor2::zero();
    for i in 0..=top {
        let low = if i == 0 {
            Word::empty()
        } else {
            restrict(u, 1, i).expect("interval 1..=i is valid")
        };
        let high = if i == top {
            Word::empty()
        } else {
            restrict(u, i + 1, top).expect("interval i+1..=top is valid")
        };
        let l = apply_phi(phi, &low);
        let h = apply_phi(phi, &high);
        out.add_term((index_for(phi, l), index_for(phi, h)), 1);
    }
    Ok(out)
}

/// Verifies both realization identities for the pair `(u, v)` over the
/// alphabet `{1..N}` and its disjoint doubled copy `{N+1..2N}`:
///
/// - **product**: concatenating `r(u)` and `r(v)` termwise equals
///   `Σ r(w)` over the terms of `m_u × m_v`;
/// - **coproduct**: realizing over the doubled alphabet and reducing each
///   word to its (low, high) subword pair — the normal form for the
///   congruence letting low and high letters commute — equals
///   `(r_{low} ⊗ r_{high})(Δ)`; checked for `u` and for `v` separately.
///
/// Returns `false` as soon as either identity fails.
pub fn check_realization(phi: PhiMap, u: &Word, v: &Word, n: usize) -> Result<bool, HopfError> {
    require_canonical(phi, u)?;
    require_canonical(phi, v)?;
    let hi = n as Letter;

    let ru = realize_over(phi, u, 1, hi);
    let rv = realize_over(phi, v, 1, hi);
    let mut lhs: LinComb<Word> = LinComb::zero();
    for (wu, cu) in ru.iter() {
        for (wv, cv) in rv.iter() {
            lhs.add_term(wu.concat(wv), cu * cv);
        }
    }
    let mut rhs: LinComb<Word> = LinComb::zero();
    for (ix, c) in m_product(phi, u, v)?.iter() {
        for (w, cw) in realize_over(phi, index_word(ix)?, 1, hi).iter() {
            rhs.add_term(w.clone(), c * cw);
        }
    }
    if lhs != rhs {
        return Ok(false);
    }

    for x in [u, v] {
        if !doubling_holds(phi, x, hi)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The alphabet-doubling identity for one canonical word `x`: the words
/// over `{1..2N}` realizing `x`, each reduced to its (low, high) subword
/// pair, against the realization of `Δ(x)` with the left legs over
/// `{1..N}` and the right legs over `{N+1..2N}`.
fn doubling_holds(phi: PhiMap, x: &Word, n: Letter) -> Result<bool, HopfError> {
    if n == 0 {
        // Both alphabets are empty; each side is `ε ⊗ ε` when `x = ε` and
        // zero otherwise, so the identity holds vacuously.
        return Ok(true);
    }
    let mut lhs: LinComb<(Word, Word)> = LinComb::zero();
    for w in words_over(1, 2 * n, x.len()) {
        if apply_phi(phi, &w) != *x {
            continue;
        }
        let low = restrict(&w, 1, n).expect("interval 1..=n is valid");
        let high = restrict(&w, n + 1, 2 * n).expect("interval n+1..=2n is valid");
        lhs.add_term((low, high), 1);
    }
    let mut rhs: LinComb<(Word, Word)> = LinComb::zero();
    for (pair, c) in m_coproduct(phi, x)?.iter() {
        let ra = realize_over(phi, index_word(&pair.0)?, 1, n);
        let rb = realize_over(phi, index_word(&pair.1)?, n + 1, 2 * n);
        for (wa, ca) in ra.iter() {
            for (wb, cb) in rb.iter() {
                rhs.add_term((wa.clone(), wb.clone()), c * ca * cb);
            }
        }
    }
    Ok(lhs == rhs)
}

/// Projects word indices onto the quotient by `c`, identifying each basis
/// element with its congruence class: `ClassIndex` in general, `BtmIndex`
/// when `c` is the taïga congruence (whose classes *are* binary trees with
/// multiplicities, via `B`). Coefficients of merged indices add. Indices
/// already projected pass through unchanged.
pub fn project(c: &CongruenceExpr, x: &LinComb<BasisIndex>) -> LinComb<BasisIndex> {
    x.map_indices(|ix| project_index(c, ix))
}

/// [`project`] on a single index.
pub fn project_index(c: &CongruenceExpr, ix: &BasisIndex) -> BasisIndex {
    match ix {
        BasisIndex::Permutation(w) | BasisIndex::PackedWord(w) => {
            if *c == CongruenceExpr::Taiga {
                BasisIndex::Btm(btm_of_word(w))
            } else {
                BasisIndex::Class(c.clone(), canonical_form(c, w))
            }
        }
        other => other.clone(),
    }
}

/// The canonical-word representative of a quotient index for `c`: the stored
/// canonical form of a `Class`, or the reversed-preorder reading of a `Btm`
/// (taïga only).
fn quotient_rep(c: &CongruenceExpr, ix: &BasisIndex) -> Result<Word, HopfError> {
    match ix {
        BasisIndex::Class(c2, w) if c2 == c => Ok(w.clone()),
        BasisIndex::Btm(t) if *c == CongruenceExpr::Taiga => Ok(representative_word(t)),
        other => Err(HopfError::InvalidIndex(format!(
            "index {} does not belong to the quotient by {c}",
            render_index(other, false)
        ))),
    }
}

/// All class members of a quotient index (used by the `_checked` variants).
fn quotient_members(c: &CongruenceExpr, ix: &BasisIndex) -> Result<Vec<Word>, HopfError> {
    let rep = quotient_rep(c, ix)?;
    Ok(class_of(c, &rep).members().iter().cloned().collect())
}

/// Product in the quotient of the φ-algebra by a good congruence: computed
/// on class representatives via [`m_product`], then projected. Well defined
/// exactly when `(c, φ)` is good; [`q_product_checked`] verifies that on
/// the spot.
pub fn q_product(
    c: &CongruenceExpr,
    phi: PhiMap,
    a: &BasisIndex,
    b: &BasisIndex,
) -> Result<LinComb<BasisIndex>, HopfError> {
    let u = quotient_rep(c, a)?;
    let v = quotient_rep(c, b)?;
    Ok(project(c, &m_product(phi, &u, &v)?))
}

/// Coproduct in the quotient: computed on a representative via
/// [`m_coproduct`], each tensor leg projected independently.
pub fn q_coproduct(c: &CongruenceExpr, phi: PhiMap, a: &BasisIndex) -> Result<Tensor2, HopfError> {
    let u = quotient_rep(c, a)?;
    let mut out = Tensor2::zero();
    for (pair, k) in m_coproduct(phi, &u)?.iter() {
        out.add_term((project_index(c, &pair.0), project_index(c, &pair.1)), k);
    }
    Ok(out)
}

/// [`q_product`] recomputed on *every* pair of class members. If any pair
/// disagrees with the representative-based answer, returns
/// [`HopfError::RepresentativeDependence`] — a proof that `(c, φ)` is not
/// good at these degrees. Cost grows with the class sizes; intended for
/// verification, not bulk computation.
pub fn q_product_checked(
    c: &CongruenceExpr,
    phi: PhiMap,
    a: &BasisIndex,
    b: &BasisIndex,
) -> Result<LinComb<BasisIndex>, HopfError> {
    let reference = q_product(c, phi, a, b)?;
    for u in quotient_members(c, a)? {
        for v in quotient_members(c, b)? {
            let p = project(c, &m_product(phi, &u, &v)?);
            if p != reference {
                return Err(HopfError::RepresentativeDependence(format!(
                    "π(m_{u} × m_{v}) differs from the representative expansion"
                )));
            }
        }
    }
    Ok(reference)
}

/// [`q_coproduct`] recomputed on every class member, with the same
/// representative-dependence detection as [`q_product_checked`].
pub fn q_coproduct_checked(
    c: &CongruenceExpr,
    phi: PhiMap,
    a: &BasisIndex,
) -> Result<Tensor2, HopfError> {
    let reference = q_coproduct(c, phi, a)?;
    for u in quotient_members(c, a)? {
        let mut via_u = Tensor2::zero();
        for (pair, k) in m_coproduct(phi, &u)?.iter() {
            via_u.add_term((project_index(c, &pair.0), project_index(c, &pair.1)), k);
        }
        if via_u != reference {
            return Err(HopfError::RepresentativeDependence(format!(
                "π(Δ(m_{u})) differs from the representative expansion"
            )));
        }
    }
    Ok(reference)
}

/// All interleavings of `a` and `b`, each sequence keeping its internal
/// order. `C(|a|+|b|, |b|)` results; they are pairwise distinct words
/// whenever `a` and `b` use disjoint letters.
fn shuffles(a: &[Letter], b: &[Letter]) -> Vec<Vec<Letter>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for tail in shuffles(&a[1..], b) {
        let mut w = Vec::with_capacity(a.len() + b.len());
        w.push(a[0]);
        w.extend(tail);
        out.push(w);
    }
    for tail in shuffles(a, &b[1..]) {
        let mut w = Vec::with_capacity(a.len() + b.len());
        w.push(b[0]);
        w.extend(tail);
        out.push(w);
    }
    out
}

/// The dual (S-basis) product of WQSym#: the shifted shuffle
/// `S_u · S_v = Σ_{w ∈ u ⧢ v[+max(u)]} S_w`. Every coefficient is 1 and
/// the term count is exactly `C(|u|+|v|, |v|)`.
pub fn s_product(u: &Word, v: &Word) -> Result<LinComb<BasisIndex>, HopfError> {
    require_canonical(PhiMap::Pack, u)?;
    require_canonical(PhiMap::Pack, v)?;
    let shifted = v.shift(u.max_letter());
    Ok(shuffles(u.letters(), shifted.letters())
        .into_iter()
        .map(|ls| (BasisIndex::PackedWord(Word::from_letters(&ls)), 1))
        .collect())
}

/// The dual PBTm basis element expanded in WQSym#:
/// `P^m_T = Σ_{B(u) = T} S_u`, the sum over the fiber of `T`.
pub fn pm_element(t: &Btm) -> LinComb<BasisIndex> {
    fiber(t)
        .into_iter()
        .map(|w| (BasisIndex::PackedWord(w), 1))
        .collect()
}

/// Product of the dual PBTm basis: expands `P^m_{T1} · P^m_{T2}` through
/// [`s_product`] on the two fibers and regroups the S-terms into whole
/// fibers again. The regrouping is audited — every tree that appears must
/// account for exactly `f(T)` distinct words of coefficient 1 (its full
/// fiber, set-compared outright up to size 7, counted by the hook formula
/// beyond) — so a failure, which would disprove the quotient construction,
/// surfaces as [`HopfError::QuotientInconsistency`].
pub fn pm_product(t1: &Btm, t2: &Btm) -> Result<LinComb<BasisIndex>, HopfError> {
    let mut expansion: LinComb<BasisIndex> = LinComb::zero();
    for u in fiber(t1) {
        for v in fiber(t2) {
            expansion.add_assign(&s_product(&u, &v)?);
        }
    }
    let mut groups: BTreeMap<Btm, Vec<Word>> = BTreeMap::new();
    for (ix, c) in expansion.iter() {
        let w = s_word(ix)?;
        if c != 1 {
            return Err(HopfError::QuotientInconsistency(format!(
                "coefficient {c} ≠ 1 on S_{w}"
            )));
        }
        groups.entry(btm_of_word(w)).or_default().push(w.clone());
    }
    let mut out = LinComb::zero();
    for (t, mut words) in groups {
        if t.is_empty() {
            // Only P^m_∅ · P^m_∅ = P^m_∅ reaches here.
            out.add_term(BasisIndex::Btm(t), 1);
            continue;
        }
        let expected = hook_count(&t).expect("nonempty tree");
        if BigUint::from(words.len()) != expected {
            return Err(HopfError::QuotientInconsistency(format!(
                "tree {t} received {} words; its fiber has {expected}",
                words.len()
            )));
        }
        if t.size() <= 7 {
            words.sort();
            if words != fiber(&t) {
                return Err(HopfError::QuotientInconsistency(format!(
                    "tree {t} received a word set different from its fiber"
                )));
            }
        }
        out.add_term(BasisIndex::Btm(t), 1);
    }
    Ok(out)
}

/// Coproduct of the dual PBTm basis, through the duality pairing: the
/// coefficient of `T' ⊗ T''` in `Δ(P^m_T)` is the coefficient of `Q^m_T`
/// in `Q^m_{T'} × Q^m_{T''}`, summed over all size splits of `|T|`.
pub fn pm_coproduct(t: &Btm) -> Result<Tensor2, HopfError> {
    let n = t.size();
    let target = BasisIndex::Btm(t.clone());
    let mut out = Tensor2::zero();
    for k in 0..=n {
        for t1 in enumerate_btm(k) {
            for t2 in enumerate_btm(n - k) {
                let prod = q_product(
                    &CongruenceExpr::Taiga,
                    PhiMap::Pack,
                    &BasisIndex::Btm(t1.clone()),
                    &BasisIndex::Btm(t2.clone()),
                )?;
                let c = prod.coeff(&target);
                out.add_term((BasisIndex::Btm(t1.clone()), BasisIndex::Btm(t2)), c);
            }
        }
    }
    Ok(out)
}

/// A coarse family tag for pairing compatibility.
fn family_key(ix: &BasisIndex) -> (u8, Option<&CongruenceExpr>) {
    match ix {
        BasisIndex::Permutation(_) => (0, None),
        BasisIndex::PackedWord(_) => (1, None),
        BasisIndex::Class(c, _) => (2, Some(c)),
        BasisIndex::Btm(_) => (3, None),
    }
}

/// The Kronecker duality pairing `⟨basis_i, dual_j⟩ = δ_{ij}`, extended
/// bilinearly: `⟨Q^m_T, P^m_{T'}⟩ = δ_{T,T'}` and likewise family by
/// family. A zero side pairs to 0 with anything; otherwise all indices on
/// both sides must share one family.
pub fn pairing(x: &LinComb<BasisIndex>, y: &LinComb<BasisIndex>) -> Result<i64, HopfError> {
    if x.is_zero() || y.is_zero() {
        return Ok(0);
    }
    let mut families = x
        .iter()
        .map(|(i, _)| family_key(i))
        .chain(y.iter().map(|(i, _)| family_key(i)));
    let first = families.next().expect("both sides are nonzero");
    if families.any(|f| f != first) {
        return Err(HopfError::IncompatiblePairing);
    }
    Ok(x.iter().map(|(i, c)| c * y.coeff(i)).sum())
}

/// The lifting operator `B_k` on WQSym#, extended bilinearly from
/// `B_k(S_u, S_v) = Σ S_{w·r}`, where `r = max(u) + 1` and `w` runs over
/// the interleavings of `u`, the run `r^{k-1}`, and `v` shifted above `r`.
/// Every result is a packed word of length `|u| + |v| + k` ending in its
/// future root letter: exactly the words whose insertion builds the tree
/// with root multiplicity `k`, left subtree from `u`, right from `v`. The
/// value shifts are forced by smaller-letters-left insertion and are pinned
/// down by the machine-checked identity [`b_tree_apply`]` = `[`pm_element`].
pub fn bk_apply(
    k: usize,
    x: &LinComb<BasisIndex>,
    y: &LinComb<BasisIndex>,
) -> Result<LinComb<BasisIndex>, HopfError> {
    if k == 0 {
        return Err(HopfError::InvalidArity);
    }
    let mut out = LinComb::zero();
    for (ixu, cu) in x.iter() {
        let u = s_word(ixu)?;
        let r = u.max_letter() + 1;
        let run = vec![r; k - 1];
        for (ixv, cv) in y.iter() {
            let v = s_word(ixv)?;
            let shifted = v.shift(r);
            for mid in shuffles(&run, shifted.letters()) {
                for mut w in shuffles(u.letters(), &mid) {
                    w.push(r);
                    out.add_term(BasisIndex::PackedWord(Word::from_letters(&w)), cu * cv);
                }
            }
        }
    }
    Ok(out)
}

/// Evaluates the full tree operator `B_T(1)`: every leaf contributes the
/// unit `S_ε` and every node of multiplicity `k` applies [`bk_apply`] to
/// the evaluations of its subtrees. The result solves the fixed-point
/// equation `x = 1 + Σ_{k≥1} B_k(x, x)` degreewise and equals
/// [`pm_element`]`(T)` — the identity that proves the hook-length formula.
pub fn b_tree_apply(t: &Btm) -> LinComb<BasisIndex> {
    match t {
        Btm::Empty => LinComb::single(BasisIndex::PackedWord(Word::empty())),
        Btm::Node { mult, left, right } => {
            let l = b_tree_apply(left);
            let r = b_tree_apply(right);
            bk_apply(*mult, &l, &r).expect("multiplicity ≥ 1 and packed legs")
        }
    }
}

/// The five Hopf algebras whose axioms [`check_hopf_axioms`] can grind
/// through degree by degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HopfAlgebraKind {
    /// Permutations with the `G` basis.
    FQSym,
    /// Packed words with the `M` basis.
    WQSym,
    /// The stalactic quotient of WQSym.
    StalacticQuotient,
    /// Binary trees with multiplicities (the taïga quotient), `Q^m` basis.
    Pbtm,
    /// The graded dual of the previous, `P^m` basis.
    PbtmDual,
}

impl fmt::Display for HopfAlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfAlgebraKind::FQSym => write!(f, "FQSym"),
            HopfAlgebraKind::WQSym => write!(f, "WQSym"),
            HopfAlgebraKind::StalacticQuotient => write!(f, "stalactic quotient"),
            HopfAlgebraKind::Pbtm => write!(f, "PBTm"),
            HopfAlgebraKind::PbtmDual => write!(f, "PBTm dual"),
        }
    }
}

impl FromStr for HopfAlgebraKind {
    type Err = HopfError;
    fn from_str(s: &str) -> Result<Self, HopfError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "fqsym" => Ok(HopfAlgebraKind::FQSym),
            "wqsym" => Ok(HopfAlgebraKind::WQSym),
            "stal" | "stalactic" => Ok(HopfAlgebraKind::StalacticQuotient),
            "pbtm" => Ok(HopfAlgebraKind::Pbtm),
            "pbtm-dual" | "pbtm#" => Ok(HopfAlgebraKind::PbtmDual),
            other => Err(HopfError::InvalidIndex(format!(
                "unknown algebra {other:?} (expected fqsym, wqsym, stal, pbtm or pbtm-dual)"
            ))),
        }
    }
}

/// Outcome of a degree-bounded Hopf-axiom verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    /// Which algebra was checked.
    pub algebra: HopfAlgebraKind,
    /// All identities were checked on basis elements of total degree up to
    /// this bound.
    pub max_degree: usize,
    /// `(x·y)·z = x·(y·z)` on all basis triples in degree.
    pub associativity_ok: bool,
    /// `(Δ⊗id)Δ = (id⊗Δ)Δ` on all basis elements in degree.
    pub coassociativity_ok: bool,
    /// `(ε⊗id)Δ(x) = x = (id⊗ε)Δ(x)` on all basis elements in degree.
    pub counit_ok: bool,
    /// `Δ(x·y) = Δ(x)·Δ(y)` on all basis pairs in degree.
    pub compatibility_ok: bool,
    /// Human-readable witnesses of failures (truncated to a handful).
    pub violations: Vec<String>,
}

impl AxiomReport {
    /// True when every verified identity held.
    pub fn all_ok(&self) -> bool {
        self.associativity_ok && self.coassociativity_ok && self.counit_ok && self.compatibility_ok
    }
}

/// Basis enumeration and memoized structure maps for one algebra.
struct HopfOps {
    kind: HopfAlgebraKind,
    product_cache: BTreeMap<(BasisIndex, BasisIndex), LinComb<BasisIndex>>,
    coproduct_cache: BTreeMap<BasisIndex, Tensor2>,
}

impl HopfOps {
    fn new(kind: HopfAlgebraKind) -> Self {
        HopfOps {
            kind,
            product_cache: BTreeMap::new(),
            coproduct_cache: BTreeMap::new(),
        }
    }

    fn basis(&self, n: usize) -> Vec<BasisIndex> {
        match self.kind {
            HopfAlgebraKind::FQSym => enumerate_canonical(PhiMap::Std, n)
                .into_iter()
                .map(BasisIndex::Permutation)
                .collect(),
            HopfAlgebraKind::WQSym => enumerate_canonical(PhiMap::Pack, n)
                .into_iter()
                .map(BasisIndex::PackedWord)
                .collect(),
            HopfAlgebraKind::StalacticQuotient => {
                classes(&CongruenceExpr::Stalactic, PhiMap::Pack, n)
                    .into_iter()
                    .map(|cl| {
                        BasisIndex::Class(CongruenceExpr::Stalactic, cl.representative().clone())
                    })
                    .collect()
            }
            HopfAlgebraKind::Pbtm | HopfAlgebraKind::PbtmDual => {
                enumerate_btm(n).into_iter().map(BasisIndex::Btm).collect()
            }
        }
    }

    fn unit(&self) -> BasisIndex {
        match self.kind {
            HopfAlgebraKind::FQSym => BasisIndex::Permutation(Word::empty()),
            HopfAlgebraKind::WQSym => BasisIndex::PackedWord(Word::empty()),
            HopfAlgebraKind::StalacticQuotient => {
                BasisIndex::Class(CongruenceExpr::Stalactic, Word::empty())
            }
            HopfAlgebraKind::Pbtm | HopfAlgebraKind::PbtmDual => BasisIndex::Btm(Btm::Empty),
        }
    }

    fn product(
        &mut self,
        a: &BasisIndex,
        b: &BasisIndex,
    ) -> Result<LinComb<BasisIndex>, HopfError> {
        let key = (a.clone(), b.clone());
        if let Some(p) = self.product_cache.get(&key) {
            return Ok(p.clone());
        }
        let p = match self.kind {
            HopfAlgebraKind::FQSym => m_product(PhiMap::Std, index_word(a)?, index_word(b)?)?,
            HopfAlgebraKind::WQSym => m_product(PhiMap::Pack, index_word(a)?, index_word(b)?)?,
            HopfAlgebraKind::StalacticQuotient => {
                q_product(&CongruenceExpr::Stalactic, PhiMap::Pack, a, b)?
            }
            HopfAlgebraKind::Pbtm => q_product(&CongruenceExpr::Taiga, PhiMap::Pack, a, b)?,
            HopfAlgebraKind::PbtmDual => match (a, b) {
                (BasisIndex::Btm(t1), BasisIndex::Btm(t2)) => pm_product(t1, t2)?,
                _ => {
                    return Err(HopfError::InvalidIndex(
                        "PBTm dual is indexed by trees".to_string(),
                    ))
                }
            },
        };
        self.product_cache.insert(key, p.clone());
        Ok(p)
    }

    fn coproduct(&mut self, a: &BasisIndex) -> Result<Tensor2, HopfError> {
        if let Some(d) = self.coproduct_cache.get(a) {
            return Ok(d.clone());
        }
        let d = match self.kind {
            HopfAlgebraKind::FQSym => m_coproduct(PhiMap::Std, index_word(a)?)?,
            HopfAlgebraKind::WQSym => m_coproduct(PhiMap::Pack, index_word(a)?)?,
            HopfAlgebraKind::StalacticQuotient => {
                q_coproduct(&CongruenceExpr::Stalactic, PhiMap::Pack, a)?
            }
            HopfAlgebraKind::Pbtm => q_coproduct(&CongruenceExpr::Taiga, PhiMap::Pack, a)?,
            HopfAlgebraKind::PbtmDual => match a {
                BasisIndex::Btm(t) => pm_coproduct(t)?,
                _ => {
                    return Err(HopfError::InvalidIndex(
                        "PBTm dual is indexed by trees".to_string(),
                    ))
                }
            },
        };
        self.coproduct_cache.insert(a.clone(), d.clone());
        Ok(d)
    }
}

/// Bilinear lift of the product to combinations.
fn product_lin(
    ops: &mut HopfOps,
    x: &LinComb<BasisIndex>,
    y: &LinComb<BasisIndex>,
) -> Result<LinComb<BasisIndex>, HopfError> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_assign(&ops.product(a, b)?.scale(ca * cb));
        }
    }
    Ok(out)
}

/// Linear lift of the coproduct to combinations.
fn coproduct_lin(ops: &mut HopfOps, x: &LinComb<BasisIndex>) -> Result<Tensor2, HopfError> {
    let mut out = Tensor2::zero();
    for (a, c) in x.iter() {
        out.add_assign(&ops.coproduct(a)?.scale(c));
    }
    Ok(out)
}

/// Componentwise product on tensors: `(a⊗b)·(c⊗d) = (a·c)⊗(b·d)`.
fn tensor_mul(ops: &mut HopfOps, s: &Tensor2, t: &Tensor2) -> Result<Tensor2, HopfError> {
    let mut out = Tensor2::zero();
    for (p, cp) in s.iter() {
        for (q, cq) in t.iter() {
            let left = ops.product(&p.0, &q.0)?;
            let right = ops.product(&p.1, &q.1)?;
            for (i, ci) in left.iter() {
                for (j, cj) in right.iter() {
                    out.add_term((i.clone(), j.clone()), cp * cq * ci * cj);
                }
            }
        }
    }
    Ok(out)
}

/// `(Δ ⊗ id)` applied to a two-fold tensor.
fn delta_left(ops: &mut HopfOps, t: &Tensor2) -> Result<Tensor3, HopfError> {
    let mut out = Tensor3::zero();
    for (p, c) in t.iter() {
        for (q, d) in ops.coproduct(&p.0)?.iter() {
            out.add_term((q.0.clone(), q.1.clone(), p.1.clone()), c * d);
        }
    }
    Ok(out)
}

/// `(id ⊗ Δ)` applied to a two-fold tensor.
fn delta_right(ops: &mut HopfOps, t: &Tensor2) -> Result<Tensor3, HopfError> {
    let mut out = Tensor3::zero();
    for (p, c) in t.iter() {
        for (q, d) in ops.coproduct(&p.1)?.iter() {
            out.add_term((p.0.clone(), q.0.clone(), q.1.clone()), c * d);
        }
    }
    Ok(out)
}

/// Exhaustively verifies the bialgebra axioms on all basis elements of
/// total degree ≤ `n`: associativity on triples, coassociativity and the
/// counit laws on single elements, and the product/coproduct compatibility
/// `Δ(x·y) = Δ(x)·Δ(y)` on pairs. (These graded connected bialgebras are
/// automatically Hopf; no antipode is computed.) Failures are collected
/// with witnesses rather than short-circuiting.
pub fn check_hopf_axioms(algebra: HopfAlgebraKind, n: usize) -> Result<AxiomReport, HopfError> {
    let mut ops = HopfOps::new(algebra);
    let basis: Vec<Vec<BasisIndex>> = (0..=n).map(|d| ops.basis(d)).collect();
    let unit = ops.unit();
    let mut report = AxiomReport {
        algebra,
        max_degree: n,
        associativity_ok: true,
        coassociativity_ok: true,
        counit_ok: true,
        compatibility_ok: true,
        violations: Vec::new(),
    };
    let note = |flag: &mut bool, violations: &mut Vec<String>, witness: String| {
        *flag = false;
        if violations.len() < 8 {
            violations.push(witness);
        }
    };

    for d1 in 0..=n {
        for d2 in 0..=(n - d1) {
            for d3 in 0..=(n - d1 - d2) {
                for a in &basis[d1] {
                    for b in &basis[d2] {
                        for c in &basis[d3] {
                            let ab = ops.product(a, b)?;
                            let bc = ops.product(b, c)?;
                            let left = product_lin(&mut ops, &ab, &LinComb::single(c.clone()))?;
                            let right = product_lin(&mut ops, &LinComb::single(a.clone()), &bc)?;
                            if left != right {
                                note(
                                    &mut report.associativity_ok,
                                    &mut report.violations,
                                    format!(
                                        "associativity fails on ({}, {}, {})",
                                        render_index(a, false),
                                        render_index(b, false),
                                        render_index(c, false)
                                    ),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    for degree_basis in &basis {
        for a in degree_basis {
            let delta = ops.coproduct(a)?;
            let left = delta_left(&mut ops, &delta)?;
            let right = delta_right(&mut ops, &delta)?;
            if left != right {
                note(
                    &mut report.coassociativity_ok,
                    &mut report.violations,
                    format!("coassociativity fails on {}", render_index(a, false)),
                );
            }
            let mut from_left = LinComb::zero();
            let mut from_right = LinComb::zero();
            for (pair, c) in delta.iter() {
                if pair.0 == unit {
                    from_left.add_term(pair.1.clone(), c);
                }
                if pair.1 == unit {
                    from_right.add_term(pair.0.clone(), c);
                }
            }
            let original = LinComb::single(a.clone());
            if from_left != original || from_right != original {
                note(
                    &mut report.counit_ok,
                    &mut report.violations,
                    format!("counit law fails on {}", render_index(a, false)),
                );
            }
        }
    }

    for d1 in 0..=n {
        for d2 in 0..=(n - d1) {
            for a in &basis[d1] {
                for b in &basis[d2] {
                    let ab = ops.product(a, b)?;
                    let lhs = coproduct_lin(&mut ops, &ab)?;
                    let da = ops.coproduct(a)?;
                    let db = ops.coproduct(b)?;
                    let rhs = tensor_mul(&mut ops, &da, &db)?;
                    if lhs != rhs {
                        note(
                            &mut report.compatibility_ok,
                            &mut report.violations,
                            format!(
                                "Δ(x·y) ≠ Δ(x)·Δ(y) on ({}, {})",
                                render_index(a, false),
                                render_index(b, false)
                            ),
                        );
                    }
                }
            }
        }
    }

    Ok(report)
}

/// Pretty name of a basis index: `G_σ`, `M_u` (dual: `S_u`), `Q^{c}_w`,
/// `Q^m_T` (dual: `P^m_T`). Every degree-0 index renders as `1`.
pub fn render_index(ix: &BasisIndex, dual: bool) -> String {
    if ix.is_unit() {
        return "1".to_string();
    }
    match ix {
        BasisIndex::Permutation(w) => format!("G_{w}"),
        BasisIndex::PackedWord(w) => format!("{}_{w}", if dual { "S" } else { "M" }),
        BasisIndex::Class(c, w) => format!("Q^{{{c}}}_{w}"),
        BasisIndex::Btm(t) => format!("{}_{t}", if dual { "P^m" } else { "Q^m" }),
    }
}

/// Renders a combination as `c·name + …` in index order (`0` when zero;
/// unit coefficients are left implicit, negatives join with ` - `).
pub fn render_lincomb(x: &LinComb<BasisIndex>, dual: bool) -> String {
    render_terms(x.iter().map(|(i, c)| (render_index(i, dual), c)))
}

/// Renders a tensor with `⊗` between the legs of each term.
pub fn render_tensor(t: &Tensor2, dual: bool) -> String {
    render_terms(t.iter().map(|(p, c)| {
        (
            format!("{}⊗{}", render_index(&p.0, dual), render_index(&p.1, dual)),
            c,
        )
    }))
}

fn render_terms(items: impl Iterator<Item = (String, i64)>) -> String {
    let mut out = String::new();
    for (name, c) in items {
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let magnitude = c.unsigned_abs();
        if magnitude != 1 {
            out.push_str(&magnitude.to_string());
            out.push('·');
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}
