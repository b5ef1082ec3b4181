//! Words over the positive integers and the φ-maps.
//!
//! A [`Word`] is a finite sequence of letters from the alphabet `{1, 2, 3, ...}`.
//! Two idempotent maps on words drive everything else in this crate:
//!
//! - **standardization** ([`standardize`]): replaces a word by the unique
//!   permutation with the same inversions, numbering positions part by part;
//! - **packing** ([`pack`]): renumbers the letters onto an initial segment
//!   `{1..k}` while preserving the ordered set partition of positions.
//!
//! The fixed points of these maps (permutations for `std`, packed words for
//! `pack`) are the *canonical words*; they index the bases of the Hopf
//! algebras in [`crate::hopf`]. Both maps factor through [`part`], the
//! ordered set partition of positions by letter, and both interact with
//! alphabet-interval restriction ([`restrict`]) — the combinatorial engine
//! behind coproducts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A letter of the alphabet `{1, 2, 3, ...}`. Zero is not a letter.
pub type Letter = u32;

/// Letter-occurrence counts of a word; keys are the distinct letters.
pub type Evaluation = BTreeMap<Letter, usize>;

/// Ordered set partition of positions `{1..n}`: one block of 1-indexed
/// positions per distinct letter, blocks ordered by increasing letter,
/// positions sorted inside each block.
pub type OrderedSetPartition = Vec<Vec<usize>>;

/// Errors from word construction and alphabet operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    /// A letter value of 0 was supplied; the alphabet starts at 1.
    #[error("letter 0 is not in the alphabet {{1,2,...}}")]
    ZeroLetter,
    /// `restrict` was called with an empty interval `lo > hi`.
    #[error("invalid alphabet interval [{lo},{hi}]: lower bound exceeds upper bound")]
    InvalidInterval { lo: Letter, hi: Letter },
    /// A word literal could not be parsed.
    #[error("malformed word literal {0:?}")]
    Parse(String),
}

/// A finite word over the positive integers.
///
/// Words order lexicographically (derived `Ord` on the letter sequence),
/// which is the order used for class representatives and sorted output
/// everywhere in the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    /// The empty word ε.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word, rejecting the non-letter 0.
    pub fn new(letters: Vec<Letter>) -> Result<Self, WordError> {
        if letters.contains(&0) {
            return Err(WordError::ZeroLetter);
        }
        Ok(Word(letters))
    }

    /// Builds a word from letters known to be ≥ 1.
    ///
    /// Panics on a zero letter; use [`Word::new`] for unchecked input.
    pub fn from_letters(letters: &[Letter]) -> Self {
        Word::new(letters.to_vec()).expect("letters must be >= 1")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Largest letter, or 0 for the empty word.
    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The factor `self[i..j]` (0-indexed, half-open), as a word.
    pub fn factor(&self, i: usize, j: usize) -> Word {
        Word(self.0[i..j].to_vec())
    }

    /// Every letter shifted up by `k`.
    pub fn shift(&self, k: Letter) -> Word {
        Word(self.0.iter().map(|&l| l + k).collect())
    }
}

impl std::ops::Index<usize> for Word {
    type Output = Letter;
    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl fmt::Display for Word {
    /// Digit string when all letters are ≤ 9 (e.g. `45142234212`),
    /// comma-separated otherwise (e.g. `3,13,3,2,13`); `ε` for the
    /// empty word. [`Word::from_str`] reads all three forms back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        if self.0.iter().all(|&l| l <= 9) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        let s = s.trim();
        if s.is_empty() || s == "ε" || s == "e" {
            return Ok(Word::empty());
        }
        let letters: Vec<Letter> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<Letter>())
                .collect::<Result<_, _>>()
                .map_err(|_| WordError::Parse(s.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as Letter))
                .collect::<Option<_>>()
                .ok_or_else(|| WordError::Parse(s.to_string()))?
        };
        Word::new(letters).map_err(|_| WordError::Parse(s.to_string()))
    }
}

/// The ordered set partition of positions of `w`: one block per distinct
/// letter (all its 1-indexed positions), blocks ordered by increasing letter.
///
/// `part(13231) = [{1,5},{3},{2,4}]`.
pub fn part(w: &Word) -> OrderedSetPartition {
    let mut by_letter: BTreeMap<Letter, Vec<usize>> = BTreeMap::new();
    for (i, &l) in w.letters().iter().enumerate() {
        by_letter.entry(l).or_default().push(i + 1);
    }
    by_letter.into_values().collect()
}

/// Letter-occurrence counts of `w`.
pub fn evaluation(w: &Word) -> Evaluation {
    let mut counts = Evaluation::new();
    for &l in w.letters() {
        *counts.entry(l).or_insert(0) += 1;
    }
    counts
}

/// Standardization: the permutation of `{1..n}` obtained by numbering the
/// positions of `w` block by block through `part(w)`, left to right inside
/// each block. It has the same inversions as `w`.
///
/// `standardize(&"151155".parse().unwrap()).to_string() == "142356"`.
pub fn standardize(w: &Word) -> Word {
    let mut out = vec![0; w.len()];
    let mut next = 1;
    for block in part(w) {
        for pos in block {
            out[pos - 1] = next;
            next += 1;
        }
    }
    Word(out)
}

/// Packing: renumbers the letters of `w` onto `{1..k}` (k = number of
/// distinct letters) preserving their relative order, so `part` is unchanged.
pub fn pack(w: &Word) -> Word {
    let mut distinct: Vec<Letter> = w.letters().to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let rank: BTreeMap<Letter, Letter> = distinct
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i as Letter + 1))
        .collect();
    Word(w.letters().iter().map(|l| rank[l]).collect())
}

/// The subword of letters lying in the alphabet interval `[lo, hi]`,
/// in their original order. Errors when `lo > hi`.
pub fn restrict(w: &Word, lo: Letter, hi: Letter) -> Result<Word, WordError> {
    if lo > hi {
        return Err(WordError::InvalidInterval { lo, hi });
    }
    Ok(Word(
        w.letters()
            .iter()
            .copied()
            .filter(|&l| lo <= l && l <= hi)
            .collect(),
    ))
}

/// One of the two idempotent word maps whose fibers carry a Hopf algebra:
/// standardization or packing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PhiMap {
    Std,
    Pack,
}

impl PhiMap {
    /// Applies the map; the result is always canonical (the map is idempotent).
    pub fn apply(self, w: &Word) -> Word {
        match self {
            PhiMap::Std => standardize(w),
            PhiMap::Pack => pack(w),
        }
    }

    /// True iff `w` is a fixed point: a permutation for `Std`, a packed word
    /// for `Pack`.
    pub fn is_canonical(self, w: &Word) -> bool {
        self.apply(w) == *w
    }
}

impl fmt::Display for PhiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiMap::Std => write!(f, "std"),
            PhiMap::Pack => write!(f, "pack"),
        }
    }
}

impl FromStr for PhiMap {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, WordError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "std" => Ok(PhiMap::Std),
            "pack" => Ok(PhiMap::Pack),
            other => Err(WordError::Parse(other.to_string())),
        }
    }
}

/// Dispatches to [`standardize`] or [`pack`].
pub fn apply_phi(phi: PhiMap, w: &Word) -> Word {
    phi.apply(w)
}

/// True iff `apply_phi(phi, w) == w`.
pub fn is_canonical(phi: PhiMap, w: &Word) -> bool {
    phi.is_canonical(w)
}

/// All canonical words of length `n`, lexicographically sorted: the `n!`
/// permutations for `Std`, the packed words (surjections onto an initial
/// segment, ordered Bell many) for `Pack`.
pub fn enumerate_canonical(phi: PhiMap, n: usize) -> Vec<Word> {
    match phi {
        PhiMap::Std => {
            let mut out = Vec::new();
            let mut current = Vec::with_capacity(n);
            let mut used = vec![false; n + 1];
            permutations_rec(n, &mut current, &mut used, &mut out);
            out
        }
        PhiMap::Pack => {
            let mut out = Vec::new();
            for k in 0..=n {
                if k == 0 && n > 0 {
                    continue;
                }
                let mut current = Vec::with_capacity(n);
                surjections_rec(n, k as Letter, 0, &mut current, &mut out);
            }
            out.sort();
            out
        }
    }
}

fn permutations_rec(n: usize, current: &mut Vec<Letter>, used: &mut [bool], out: &mut Vec<Word>) {
    if current.len() == n {
        out.push(Word(current.clone()));
        return;
    }
    for l in 1..=n {
        if !used[l] {
            used[l] = true;
            current.push(l as Letter);
            permutations_rec(n, current, used, out);
            current.pop();
            used[l] = false;
        }
    }
}

/// Words of length `n` over `{1..k}` using all `k` letters; `missing` tracks
/// how many letters of `{1..k}` are still unused (pruned against remaining
/// positions).
fn surjections_rec(
    n: usize,
    k: Letter,
    seen_mask: u32,
    current: &mut Vec<Letter>,
    out: &mut Vec<Word>,
) {
    let missing = k as usize - (seen_mask.count_ones() as usize);
    let remaining = n - current.len();
    if missing > remaining {
        return;
    }
    if current.len() == n {
        out.push(Word(current.clone()));
        return;
    }
    for l in 1..=k {
        current.push(l);
        surjections_rec(n, k, seen_mask | (1 << (l - 1)), current, out);
        current.pop();
    }
}

/// All words of length `n` over `{lo..hi}`, in lexicographic order.
/// The brute-force search space used by realization and the exhaustive
/// checkers.
pub fn words_over(lo: Letter, hi: Letter, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    words_over_rec(lo, hi, n, &mut current, &mut out);
    out
}

fn words_over_rec(
    lo: Letter,
    hi: Letter,
    n: usize,
    current: &mut Vec<Letter>,
    out: &mut Vec<Word>,
) {
    if current.len() == n {
        out.push(Word(current.clone()));
        return;
    }
    for l in lo..=hi {
        current.push(l);
        words_over_rec(lo, hi, n, current, out);
        current.pop();
    }
}

/// Exhaustively tests the refinement `phi ≺ pi`, i.e. `phi(pi(u)) = phi(u)`,
/// over all words of length ≤ `maxlen` with letters ≤ `maxlen`. Returns the
/// first counterexample (words scanned by length, then lexicographically).
///
/// `check_refinement(Std, Pack, 5)` holds; the converse fails at `11`.
pub fn check_refinement(phi: PhiMap, pi: PhiMap, maxlen: usize) -> (bool, Option<Word>) {
    for len in 0..=maxlen {
        for w in words_over(1, maxlen as Letter, len) {
            if phi.apply(&pi.apply(&w)) != phi.apply(&w) {
                return (false, Some(w));
            }
        }
    }
    (true, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn part_of_paper_examples() {
        assert_eq!(part(&w("13231")), vec![vec![1, 5], vec![3], vec![2, 4]]);
        assert_eq!(part(&w("1112")), vec![vec![1, 2, 3], vec![4]]);
        assert_eq!(part(&Word::empty()), Vec::<Vec<usize>>::new());
    }

    #[test]
    fn standardize_table() {
        // The four std rows of the reference table.
        assert_eq!(standardize(&w("7,2,14,3,7")), w("31524"));
        assert_eq!(standardize(&w("23,14,5,92")), w("3214"));
        assert_eq!(standardize(&w("42135")), w("42135"));
        assert_eq!(standardize(&w("151155")), w("142356"));
    }

    #[test]
    fn pack_table() {
        // The four pack rows of the reference table.
        assert_eq!(pack(&w("3,13,3,2,13")), w("23213"));
        assert_eq!(pack(&w("222582")), w("111231"));
        assert_eq!(pack(&w("42135")), w("42135"));
        assert_eq!(pack(&w("23112")), w("23112"));
    }

    #[test]
    fn standardize_numbers_within_parts_left_to_right() {
        assert_eq!(apply_phi(PhiMap::Std, &w("1121")), w("1243"));
    }

    #[test]
    fn evaluation_counts() {
        let ev = evaluation(&w("45142234212"));
        let expected: Evaluation = [(1, 2), (2, 4), (3, 1), (4, 3), (5, 1)]
            .into_iter()
            .collect();
        assert_eq!(ev, expected);
        assert_eq!(evaluation(&w("13231")), evaluation(&w("32131")));
        assert!(evaluation(&Word::empty()).is_empty());
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(restrict(&w("3112"), 1, 2).unwrap(), w("112"));
        assert_eq!(restrict(&w("3112"), 3, 3).unwrap(), w("3"));
        let full = w("45142234212");
        assert_eq!(restrict(&full, 1, full.max_letter()).unwrap(), full);
        assert_eq!(
            restrict(&w("12"), 3, 2),
            Err(WordError::InvalidInterval { lo: 3, hi: 2 })
        );
    }

    #[test]
    fn canonicity() {
        assert!(is_canonical(PhiMap::Std, &w("1423")));
        assert!(is_canonical(PhiMap::Pack, &w("1121")));
        assert!(!is_canonical(PhiMap::Std, &w("1121")));
    }

    #[test]
    fn enumerate_std_and_pack_counts() {
        assert_eq!(enumerate_canonical(PhiMap::Std, 3).len(), 6);
        let packed2 = enumerate_canonical(PhiMap::Pack, 2);
        assert_eq!(packed2, vec![w("11"), w("12"), w("21")]);
        assert_eq!(enumerate_canonical(PhiMap::Pack, 3).len(), 13);
        // Ordered Bell numbers 1, 1, 3, 13, 75, 541.
        let fubini = [1, 1, 3, 13, 75, 541];
        for (n, &count) in fubini.iter().enumerate() {
            assert_eq!(enumerate_canonical(PhiMap::Pack, n).len(), count);
        }
    }

    #[test]
    fn enumerate_pack_matches_bruteforce_fixed_points() {
        // Oracle: filter {1..n}^n for fixed points of pack.
        for n in 0..=5 {
            let fast = enumerate_canonical(PhiMap::Pack, n);
            let slow: Vec<Word> = words_over(1, n as Letter, n)
                .into_iter()
                .filter(|u| pack(u) == *u)
                .collect();
            assert_eq!(fast, slow, "packed-word enumeration diverges at n={n}");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_deduplicated() {
        for phi in [PhiMap::Std, PhiMap::Pack] {
            let all = enumerate_canonical(phi, 4);
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(all, sorted);
        }
    }

    #[test]
    fn refinement_std_pack() {
        assert_eq!(check_refinement(PhiMap::Std, PhiMap::Pack, 5), (true, None));
        let (ok, witness) = check_refinement(PhiMap::Pack, PhiMap::Std, 5);
        assert!(!ok);
        assert_eq!(witness, Some(w("11")));
        assert_eq!(check_refinement(PhiMap::Std, PhiMap::Std, 4), (true, None));
    }

    #[test]
    fn word_parsing_roundtrip() {
        for s in ["45142234212", "3,13,3,2,13", "ε", "1"] {
            let word: Word = s.parse().unwrap();
            let printed = word.to_string();
            let reparsed: Word = printed.parse().unwrap();
            assert_eq!(word, reparsed);
        }
        assert!("1a2".parse::<Word>().is_err());
        assert!("0".parse::<Word>().is_err());
        assert!("1,0,2".parse::<Word>().is_err());
    }

    proptest! {
        #[test]
        fn phi_maps_are_idempotent(letters in prop::collection::vec(1u32..9, 0..9)) {
            let word = Word::new(letters).unwrap();
            for phi in [PhiMap::Std, PhiMap::Pack] {
                let once = phi.apply(&word);
                prop_assert_eq!(phi.apply(&once), once);
            }
        }

        #[test]
        fn pack_preserves_part(letters in prop::collection::vec(1u32..20, 0..9)) {
            let word = Word::new(letters).unwrap();
            prop_assert_eq!(part(&pack(&word)), part(&word));
        }

        #[test]
        fn standardize_yields_a_permutation(letters in prop::collection::vec(1u32..9, 0..9)) {
            let word = Word::new(letters).unwrap();
            let mut letters: Vec<Letter> = standardize(&word).letters().to_vec();
            letters.sort_unstable();
            let expected: Vec<Letter> = (1..=word.len() as Letter).collect();
            prop_assert_eq!(letters, expected);
        }

        #[test]
        fn restrict_commutes_with_concat(
            a in prop::collection::vec(1u32..7, 0..6),
            b in prop::collection::vec(1u32..7, 0..6),
            lo in 1u32..7,
            span in 0u32..6,
        ) {
            let u = Word::new(a).unwrap();
            let v = Word::new(b).unwrap();
            let hi = lo + span;
            let lhs = restrict(&u.concat(&v), lo, hi).unwrap();
            let rhs = restrict(&u, lo, hi).unwrap().concat(&restrict(&v, lo, hi).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
