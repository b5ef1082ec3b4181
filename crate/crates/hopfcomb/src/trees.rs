//! Binary search trees with multiplicities and the hook length formula.
//!
//! A [`Bstm`] is a binary search tree whose nodes carry a letter and a
//! multiplicity; each letter appears at most once, letters in the left
//! subtree are strictly smaller than the node letter, letters in the right
//! subtree strictly larger. Inserting the letters of a word from right to
//! left yields its P-symbol; recording where each letter sat in the word
//! yields the Q-symbol of matching shape — a Robinson–Schensted-like
//! correspondence ([`rs_pair`] / [`rs_inverse`]).
//!
//! Forgetting the letters (but not the multiplicities) gives a [`Btm`]; the
//! letters are recoverable by numbering nodes in left-to-right infix order
//! ([`relabel`]). The packed words whose P-symbol has a given shape `T` form
//! the fiber of `T`, and their number is given by a hook-length-style
//! product formula ([`hook_count`]), verified against the brute-force
//! [`fiber`] oracle in the test suite.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigUint;
use num::One;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::words::{pack, Letter, PhiMap, Word};

/// Errors from tree parsing, pairing, and the hook formula.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    /// A tree literal could not be parsed.
    #[error("malformed tree literal {0:?}: {1}")]
    Parse(String, String),
    /// `rs_inverse` was given trees of different shape or with a node whose
    /// multiplicity does not match its position-set cardinality.
    #[error("P/Q pair mismatch: {0}")]
    InvalidPair(String),
    /// The hook formula is undefined on the empty tree.
    #[error("hook_count is undefined on the empty tree")]
    EmptyTree,
}

/// A binary search tree with multiplicities: distinct letters, each with a
/// multiplicity ≥ 1, smaller letters in the left subtree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bstm {
    Empty,
    Node {
        letter: Letter,
        mult: usize,
        left: Box<Bstm>,
        right: Box<Bstm>,
    },
}

/// The shape of a [`Bstm`] with letters forgotten: multiplicities ≥ 1 on
/// every node. The size `|T|` is the sum of multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Btm {
    Empty,
    Node {
        mult: usize,
        left: Box<Btm>,
        right: Box<Btm>,
    },
}

/// Position-recording tree of the insertion correspondence: same shape as
/// the P-symbol, each node holding the sorted 1-indexed positions of its
/// letter in the inserted word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSymbol {
    Empty,
    Node {
        positions: Vec<usize>,
        left: Box<QSymbol>,
        right: Box<QSymbol>,
    },
}

impl Bstm {
    pub fn node(letter: Letter, mult: usize, left: Bstm, right: Bstm) -> Bstm {
        assert!(letter >= 1 && mult >= 1);
        Bstm::Node {
            letter,
            mult,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn leaf(letter: Letter, mult: usize) -> Bstm {
        Bstm::node(letter, mult, Bstm::Empty, Bstm::Empty)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Bstm::Empty)
    }

    /// Sum of multiplicities.
    pub fn size(&self) -> usize {
        match self {
            Bstm::Empty => 0,
            Bstm::Node {
                mult, left, right, ..
            } => mult + left.size() + right.size(),
        }
    }

    /// True iff every letter appears once and the search-tree ordering
    /// holds at every node.
    pub fn is_search_tree(&self) -> bool {
        fn within(t: &Bstm, lo: Option<Letter>, hi: Option<Letter>) -> bool {
            match t {
                Bstm::Empty => true,
                Bstm::Node {
                    letter,
                    left,
                    right,
                    ..
                } => {
                    lo.is_none_or(|l| *letter > l)
                        && hi.is_none_or(|h| *letter < h)
                        && within(left, lo, Some(*letter))
                        && within(right, Some(*letter), hi)
                }
            }
        }
        within(self, None, None)
    }
}

impl Btm {
    pub fn node(mult: usize, left: Btm, right: Btm) -> Btm {
        assert!(mult >= 1);
        Btm::Node {
            mult,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn leaf(mult: usize) -> Btm {
        Btm::node(mult, Btm::Empty, Btm::Empty)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Btm::Empty)
    }

    /// Sum of multiplicities.
    pub fn size(&self) -> usize {
        match self {
            Btm::Empty => 0,
            Btm::Node { mult, left, right } => mult + left.size() + right.size(),
        }
    }

    /// Number of nodes.
    pub fn node_count(&self) -> usize {
        match self {
            Btm::Empty => 0,
            Btm::Node { left, right, .. } => 1 + left.node_count() + right.node_count(),
        }
    }
}

/// Canonical tree order: by size, then root multiplicity, then left and
/// right subtrees, recursively. Gives the deterministic ordering used by
/// [`enumerate_btm`] and by every sorted term map over tree indices.
impl Ord for Btm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| match (self, other) {
                (Btm::Empty, Btm::Empty) => Ordering::Equal,
                (
                    Btm::Node {
                        mult: m1,
                        left: l1,
                        right: r1,
                    },
                    Btm::Node {
                        mult: m2,
                        left: l2,
                        right: r2,
                    },
                ) => m1.cmp(m2).then_with(|| l1.cmp(l2)).then_with(|| r1.cmp(r2)),
                // Equal sizes rule out Empty-vs-Node: nodes have size >= 1.
                _ => unreachable!("empty and non-empty trees differ in size"),
            })
    }
}

impl PartialOrd for Btm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Inserts a letter: equal letters bump the multiplicity, smaller letters
/// descend left, larger letters descend right.
pub fn bstm_insert(t: Bstm, l: Letter) -> Bstm {
    match t {
        Bstm::Empty => Bstm::leaf(l, 1),
        Bstm::Node {
            letter,
            mult,
            left,
            right,
        } => match l.cmp(&letter) {
            Ordering::Equal => Bstm::Node {
                letter,
                mult: mult + 1,
                left,
                right,
            },
            Ordering::Less => Bstm::Node {
                letter,
                mult,
                left: Box::new(bstm_insert(*left, l)),
                right,
            },
            Ordering::Greater => Bstm::Node {
                letter,
                mult,
                left,
                right: Box::new(bstm_insert(*right, l)),
            },
        },
    }
}

/// The P-symbol: the word's letters inserted from right to left into the
/// empty tree (so the last letter of `w` becomes the root).
pub fn p_symbol(w: &Word) -> Bstm {
    w.letters()
        .iter()
        .rev()
        .fold(Bstm::Empty, |t, &l| bstm_insert(t, l))
}

/// The Q-symbol: same shape as `p_symbol(w)`, each node recording the
/// 1-indexed positions in `w` of the letter it holds.
pub fn q_symbol(w: &Word) -> QSymbol {
    fn build(t: &Bstm, w: &Word) -> QSymbol {
        match t {
            Bstm::Empty => QSymbol::Empty,
            Bstm::Node {
                letter,
                left,
                right,
                ..
            } => QSymbol::Node {
                positions: w
                    .letters()
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| *l == letter)
                    .map(|(i, _)| i + 1)
                    .collect(),
                left: Box::new(build(left, w)),
                right: Box::new(build(right, w)),
            },
        }
    }
    build(&p_symbol(w), w)
}

/// The Robinson–Schensted-like pair `(P(w), Q(w))`.
pub fn rs_pair(w: &Word) -> (Bstm, QSymbol) {
    (p_symbol(w), q_symbol(w))
}

/// Reconstructs the word from a P/Q pair: the letter of each P-node is
/// placed at every position in the matching Q-node's set. Errors when the
/// shapes differ, a multiplicity does not match its position-set size, or
/// the position sets do not tile `{1..n}`.
pub fn rs_inverse(p: &Bstm, q: &QSymbol) -> Result<Word, TreeError> {
    fn walk(p: &Bstm, q: &QSymbol, slots: &mut Vec<Option<Letter>>) -> Result<(), TreeError> {
        match (p, q) {
            (Bstm::Empty, QSymbol::Empty) => Ok(()),
            (
                Bstm::Node {
                    letter,
                    mult,
                    left: pl,
                    right: pr,
                },
                QSymbol::Node {
                    positions,
                    left: ql,
                    right: qr,
                },
            ) => {
                if positions.len() != *mult {
                    return Err(TreeError::InvalidPair(format!(
                        "letter {letter} has multiplicity {mult} but {} recorded positions",
                        positions.len()
                    )));
                }
                for &pos in positions {
                    let slot = slots.get_mut(pos.wrapping_sub(1)).ok_or_else(|| {
                        TreeError::InvalidPair(format!("position {pos} out of range"))
                    })?;
                    if slot.replace(*letter).is_some() {
                        return Err(TreeError::InvalidPair(format!("position {pos} used twice")));
                    }
                }
                walk(pl, ql, slots)?;
                walk(pr, qr, slots)
            }
            _ => Err(TreeError::InvalidPair("P and Q shapes differ".to_string())),
        }
    }
    let n = p.size();
    let mut slots: Vec<Option<Letter>> = vec![None; n];
    walk(p, q, &mut slots)?;
    let letters: Option<Vec<Letter>> = slots.into_iter().collect();
    let letters = letters.ok_or_else(|| {
        TreeError::InvalidPair("position sets do not cover every position".to_string())
    })?;
    Ok(Word::from_letters(&letters))
}

/// Forgets the letters, keeping shape and multiplicities.
pub fn strip(t: &Bstm) -> Btm {
    match t {
        Bstm::Empty => Btm::Empty,
        Bstm::Node {
            mult, left, right, ..
        } => Btm::Node {
            mult: *mult,
            left: Box::new(strip(left)),
            right: Box::new(strip(right)),
        },
    }
}

/// Restores letters to a shape by numbering nodes 1, 2, 3, … in
/// left-to-right infix order — the unique search-tree labelling with an
/// initial-segment alphabet.
pub fn relabel(t: &Btm) -> Bstm {
    fn walk(t: &Btm, next: &mut Letter) -> Bstm {
        match t {
            Btm::Empty => Bstm::Empty,
            Btm::Node { mult, left, right } => {
                let left = walk(left, next);
                let letter = *next;
                *next += 1;
                let right = walk(right, next);
                Bstm::Node {
                    letter,
                    mult: *mult,
                    left: Box::new(left),
                    right: Box::new(right),
                }
            }
        }
    }
    let mut next = 1;
    walk(t, &mut next)
}

/// The map `B`: the shape of the P-symbol.
pub fn btm_of_word(w: &Word) -> Btm {
    strip(&p_symbol(w))
}

/// A packed word in the fiber of `T`: the reversed preorder emission of
/// `relabel(T)` with each letter repeated by its multiplicity. Inserting it
/// rebuilds exactly `relabel(T)` (parents are inserted before children), so
/// `btm_of_word(representative_word(T)) = T`.
pub fn representative_word(t: &Btm) -> Word {
    fn preorder(t: &Bstm, out: &mut Vec<Letter>) {
        if let Bstm::Node {
            letter,
            mult,
            left,
            right,
        } = t
        {
            out.extend(std::iter::repeat_n(*letter, *mult));
            preorder(left, out);
            preorder(right, out);
        }
    }
    let mut letters = Vec::with_capacity(t.size());
    preorder(&relabel(t), &mut letters);
    letters.reverse();
    Word::from_letters(&letters)
}

/// All BTMs of size exactly `n` in canonical order. Counts for n = 0..7:
/// 1, 1, 3, 10, 36, 137, 543, 2219.
pub fn enumerate_btm(n: usize) -> Vec<Btm> {
    let mut by_size: Vec<Vec<Btm>> = vec![vec![Btm::Empty]];
    for size in 1..=n {
        let mut level = Vec::new();
        for mult in 1..=size {
            let rest = size - mult;
            for left_size in 0..=rest {
                for left in &by_size[left_size] {
                    for right in &by_size[rest - left_size] {
                        level.push(Btm::node(mult, left.clone(), right.clone()));
                    }
                }
            }
        }
        level.sort();
        by_size.push(level);
    }
    by_size.pop().expect("by_size has n+1 levels")
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// The hook length formula
/// `f(T) = |T|! / ∏_t (|t| · (m(root t) − 1)!)`,
/// the product running over all subtrees `t` of `T`. Counts the packed
/// words whose P-symbol has shape `T` (cross-checked against [`fiber`]).
/// Exact big-integer arithmetic; undefined on the empty tree.
pub fn hook_count(t: &Btm) -> Result<BigUint, TreeError> {
    fn denominator(t: &Btm) -> BigUint {
        match t {
            Btm::Empty => BigUint::one(),
            Btm::Node { mult, left, right } => {
                BigUint::from(t.size())
                    * factorial(mult - 1)
                    * denominator(left)
                    * denominator(right)
            }
        }
    }
    if t.is_empty() {
        return Err(TreeError::EmptyTree);
    }
    let numerator = factorial(t.size());
    let denominator = denominator(t);
    let (quotient, remainder) = num::Integer::div_rem(&numerator, &denominator);
    assert!(
        remainder == BigUint::from(0u32),
        "hook denominator must divide |T|! exactly"
    );
    Ok(quotient)
}

/// The fiber of `T`: all packed words `u` with `btm_of_word(u) = T`,
/// sorted. Brute force over the packed words of length `|T|` — this is the
/// verification oracle for [`hook_count`], exponential by design (callers
/// bound `|T|`; the CLI caps it at 8 by default).
pub fn fiber(t: &Btm) -> Vec<Word> {
    crate::words::enumerate_canonical(PhiMap::Pack, t.size())
        .into_iter()
        .filter(|u| btm_of_word(u) == *t)
        .collect()
}

/// Groups the packed words of length `n` by their P-symbol shape: the full
/// fiber decomposition at size `n`, computed with a single enumeration pass
/// instead of one [`fiber`] scan per tree.
pub fn fibers_by_tree(n: usize) -> std::collections::BTreeMap<Btm, Vec<Word>> {
    let mut groups: std::collections::BTreeMap<Btm, Vec<Word>> = std::collections::BTreeMap::new();
    for u in crate::words::enumerate_canonical(PhiMap::Pack, n) {
        groups.entry(btm_of_word(&u)).or_default().push(u);
    }
    groups
}

/// Sanity helper used by tests and examples: `pack`-canonicity of fiber
/// members is part of the fiber definition.
pub fn is_packed(w: &Word) -> bool {
    pack(w) == *w
}

impl fmt::Display for Btm {
    /// Nested parenthesis format: `(m left right)` with `.` for the empty
    /// tree, e.g. `(2 (1 . .) (2 . .))`. Parsed back by [`Btm::from_str`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Btm::Empty => write!(f, "."),
            Btm::Node { mult, left, right } => write!(f, "({mult} {left} {right})"),
        }
    }
}

impl fmt::Display for Bstm {
    /// Same shape as the [`Btm`] format with the letter prefixed:
    /// `(l:m left right)`, e.g. `(2:4 (1:2 . .) (4:3 (3:1 . .) (5:1 . .)))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bstm::Empty => write!(f, "."),
            Bstm::Node {
                letter,
                mult,
                left,
                right,
            } => {
                write!(f, "({letter}:{mult} {left} {right})")
            }
        }
    }
}

impl fmt::Display for QSymbol {
    /// Preorder list of position sets, slash-separated:
    /// `[5,6,9,11]/[3,10]/[1,4,8]/[7]/[2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn walk(q: &QSymbol, out: &mut Vec<String>) {
            if let QSymbol::Node {
                positions,
                left,
                right,
            } = q
            {
                let inner: Vec<String> = positions.iter().map(|p| p.to_string()).collect();
                out.push(format!("[{}]", inner.join(",")));
                walk(left, out);
                walk(right, out);
            }
        }
        if matches!(self, QSymbol::Empty) {
            return write!(f, ".");
        }
        let mut sets = Vec::new();
        walk(self, &mut sets);
        write!(f, "{}", sets.join("/"))
    }
}

struct TreeTokens<'a> {
    rest: &'a str,
}

impl<'a> TreeTokens<'a> {
    fn new(s: &'a str) -> Self {
        TreeTokens { rest: s }
    }

    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn eat(&mut self, c: char) -> Result<(), String> {
        self.skip_ws();
        self.rest = self
            .rest
            .strip_prefix(c)
            .ok_or_else(|| format!("expected {c:?} at {:?}", self.rest))?;
        Ok(())
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest.chars().next()
    }

    fn number(&mut self) -> Result<usize, String> {
        self.skip_ws();
        let digits: String = self
            .rest
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .collect();
        if digits.is_empty() {
            return Err(format!("expected a number at {:?}", self.rest));
        }
        self.rest = &self.rest[digits.len()..];
        digits
            .parse()
            .map_err(|_| format!("number {digits:?} out of range"))
    }
}

fn parse_btm(tokens: &mut TreeTokens) -> Result<Btm, String> {
    if tokens.peek() == Some('.') {
        tokens.eat('.')?;
        return Ok(Btm::Empty);
    }
    tokens.eat('(')?;
    let mult = tokens.number()?;
    if mult == 0 {
        return Err("multiplicity must be >= 1".to_string());
    }
    let left = parse_btm(tokens)?;
    let right = parse_btm(tokens)?;
    tokens.eat(')')?;
    Ok(Btm::node(mult, left, right))
}

fn parse_bstm(tokens: &mut TreeTokens) -> Result<Bstm, String> {
    if tokens.peek() == Some('.') {
        tokens.eat('.')?;
        return Ok(Bstm::Empty);
    }
    tokens.eat('(')?;
    let letter = tokens.number()?;
    tokens.eat(':')?;
    let mult = tokens.number()?;
    if letter == 0 || mult == 0 {
        return Err("letters and multiplicities must be >= 1".to_string());
    }
    let left = parse_bstm(tokens)?;
    let right = parse_bstm(tokens)?;
    tokens.eat(')')?;
    Ok(Bstm::Node {
        letter: letter as Letter,
        mult,
        left: Box::new(left),
        right: Box::new(right),
    })
}

impl FromStr for Btm {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, TreeError> {
        let mut tokens = TreeTokens::new(s);
        let tree = parse_btm(&mut tokens).map_err(|e| TreeError::Parse(s.to_string(), e))?;
        tokens.skip_ws();
        if !tokens.rest.is_empty() {
            return Err(TreeError::Parse(
                s.to_string(),
                format!("trailing input {:?}", tokens.rest),
            ));
        }
        Ok(tree)
    }
}

impl FromStr for Bstm {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, TreeError> {
        let mut tokens = TreeTokens::new(s);
        let tree = parse_bstm(&mut tokens).map_err(|e| TreeError::Parse(s.to_string(), e))?;
        tokens.skip_ws();
        if !tokens.rest.is_empty() {
            return Err(TreeError::Parse(
                s.to_string(),
                format!("trailing input {:?}", tokens.rest),
            ));
        }
        Ok(tree)
    }
}

impl Serialize for Btm {
    /// `null` for the empty tree, else `{"mult": m, "left": …, "right": …}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Btm::Empty => serializer.serialize_none(),
            Btm::Node { mult, left, right } => {
                let mut map = serializer.serialize_map(Some(3))?;
                map.serialize_entry("mult", mult)?;
                map.serialize_entry("left", left)?;
                map.serialize_entry("right", right)?;
                map.end()
            }
        }
    }
}

impl Serialize for Bstm {
    /// `null` for the empty tree, else
    /// `{"letter": l, "mult": m, "left": …, "right": …}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Bstm::Empty => serializer.serialize_none(),
            Bstm::Node {
                letter,
                mult,
                left,
                right,
            } => {
                let mut map = serializer.serialize_map(Some(4))?;
                map.serialize_entry("letter", letter)?;
                map.serialize_entry("mult", mult)?;
                map.serialize_entry("left", left)?;
                map.serialize_entry("right", right)?;
                map.end()
            }
        }
    }
}

impl Serialize for QSymbol {
    /// `null` for the empty tree, else
    /// `{"positions": [...], "left": …, "right": …}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            QSymbol::Empty => serializer.serialize_none(),
            QSymbol::Node {
                positions,
                left,
                right,
            } => {
                let mut map = serializer.serialize_map(Some(3))?;
                map.serialize_entry("positions", positions)?;
                map.serialize_entry("left", left)?;
                map.serialize_entry("right", right)?;
                map.end()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn tree(s: &str) -> Btm {
        s.parse().unwrap()
    }

    #[test]
    fn insertion_trace_of_541214() {
        // Stepwise insertion from the worked 541214 figure.
        let mut t = Bstm::Empty;
        for &l in w("541214").letters().iter().rev() {
            t = bstm_insert(t, l);
            assert!(t.is_search_tree());
        }
        let expected: Bstm = "(4:2 (1:2 . (2:1 . .)) (5:1 . .))".parse().unwrap();
        assert_eq!(t, expected);
        assert_eq!(p_symbol(&w("541214")), expected);
    }

    #[test]
    fn p_symbol_of_figure_word() {
        let p = p_symbol(&w("45142234212"));
        let expected: Bstm = "(2:4 (1:2 . .) (4:3 (3:1 . .) (5:1 . .)))".parse().unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "(2:4 (1:2 . .) (4:3 (3:1 . .) (5:1 . .)))");
        assert_eq!(p_symbol(&Word::empty()), Bstm::Empty);
    }

    #[test]
    fn q_symbol_of_figure_word() {
        let q = q_symbol(&w("45142234212"));
        assert_eq!(q.to_string(), "[5,6,9,11]/[3,10]/[1,4,8]/[7]/[2]");
    }

    #[test]
    fn rs_roundtrip() {
        let word = w("45142234212");
        let (p, q) = rs_pair(&word);
        assert_eq!(rs_inverse(&p, &q).unwrap(), word);

        let (p0, q0) = rs_pair(&Word::empty());
        assert_eq!(p0, Bstm::Empty);
        assert_eq!(rs_inverse(&p0, &q0).unwrap(), Word::empty());

        for n in 0..=5 {
            for u in crate::words::enumerate_canonical(PhiMap::Pack, n) {
                let (p, q) = rs_pair(&u);
                assert_eq!(rs_inverse(&p, &q).unwrap(), u);
            }
        }
    }

    #[test]
    fn rs_inverse_rejects_mismatches() {
        let (p, _) = rs_pair(&w("11"));
        let (_, q1) = rs_pair(&w("1"));
        assert!(matches!(
            rs_inverse(&p, &q1),
            Err(TreeError::InvalidPair(_))
        ));
        let q_bad = QSymbol::Node {
            positions: vec![1],
            left: Box::new(QSymbol::Empty),
            right: Box::new(QSymbol::Empty),
        };
        assert!(matches!(
            rs_inverse(&p, &q_bad),
            Err(TreeError::InvalidPair(_))
        ));
    }

    #[test]
    fn strip_and_relabel() {
        let b = btm_of_word(&w("45142234212"));
        assert_eq!(b, tree("(4 (2 . .) (3 (1 . .) (1 . .)))"));
        // Infix relabelling restores the letters of the packed figure tree.
        let relabelled = relabel(&b);
        assert_eq!(
            relabelled.to_string(),
            "(2:4 (1:2 . .) (4:3 (3:1 . .) (5:1 . .)))"
        );
        assert_eq!(p_symbol(&pack(&w("45142234212"))), relabelled);
        for n in 0..=5 {
            for t in enumerate_btm(n) {
                assert_eq!(strip(&relabel(&t)), t);
            }
        }
    }

    #[test]
    fn enumeration_counts_match_series() {
        let expected = [1, 1, 3, 10, 36, 137, 543, 2219];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_btm(n).len(), count, "BTM count at size {n}");
        }
    }

    #[test]
    fn size_two_trees_in_canonical_order() {
        assert_eq!(
            enumerate_btm(2),
            vec![
                tree("(1 . (1 . .))"),
                tree("(1 (1 . .) .)"),
                tree("(2 . .)")
            ]
        );
    }

    #[test]
    fn hook_count_examples() {
        assert_eq!(
            hook_count(&tree("(2 (1 . .) (2 . .))")).unwrap(),
            BigUint::from(12u32)
        );
        // Size-18 tree: 23,337,600 = 18!/((18·9·7·7·4·2)·(1!1!6!0!3!1!)).
        let big = tree("(2 (2 (7 . .) .) (1 (4 . .) (2 . .)))");
        assert_eq!(big.size(), 18);
        assert_eq!(hook_count(&big).unwrap(), BigUint::from(23_337_600u64));
        assert_eq!(hook_count(&tree("(5 . .)")).unwrap(), BigUint::one());
        assert_eq!(hook_count(&Btm::Empty), Err(TreeError::EmptyTree));
    }

    #[test]
    fn fiber_matches_hook_count() {
        for n in 1..=5 {
            for t in enumerate_btm(n) {
                let fiber = fiber(&t);
                assert!(fiber.iter().all(is_packed));
                assert_eq!(
                    BigUint::from(fiber.len()),
                    hook_count(&t).unwrap(),
                    "hook formula vs fiber at {t}"
                );
            }
        }
        assert_eq!(fiber(&tree("(3 . .)")), vec![w("111")]);
    }

    #[test]
    fn fibers_partition_packed_words() {
        for n in 0..=5 {
            let groups = fibers_by_tree(n);
            let total: usize = groups.values().map(Vec::len).sum();
            assert_eq!(
                total,
                crate::words::enumerate_canonical(PhiMap::Pack, n).len()
            );
            for (t, members) in &groups {
                assert_eq!(t.size(), n);
                for m in members {
                    assert_eq!(btm_of_word(m), *t);
                }
            }
        }
    }

    #[test]
    fn representative_words_hit_their_tree() {
        for n in 0..=5 {
            for t in enumerate_btm(n) {
                let rep = representative_word(&t);
                assert_eq!(btm_of_word(&rep), t, "representative of {t}");
                assert!(rep.is_empty() || is_packed(&rep));
            }
        }
    }

    #[test]
    fn tree_literals_roundtrip() {
        for s in [
            "(2 (1 . .) (2 . .))",
            ".",
            "(7 . .)",
            "(1 (1 . .) (1 . (2 . .)))",
        ] {
            let t: Btm = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        let bstm_text = "(2:4 (1:2 . .) (4:3 (3:1 . .) (5:1 . .)))";
        let t: Bstm = bstm_text.parse().unwrap();
        assert_eq!(t.to_string(), bstm_text);
        assert!("(0 . .)".parse::<Btm>().is_err());
        assert!("(2 . )".parse::<Btm>().is_err());
        assert!("(2 . .) junk".parse::<Btm>().is_err());
        assert!("(2 . .)".parse::<Bstm>().is_err());
    }

    #[test]
    fn json_mirrors_tree_structure() {
        let t = tree("(2 (1 . .) .)");
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "mult": 2,
                "left": {"mult": 1, "left": null, "right": null},
                "right": null,
            })
        );
    }

    proptest! {
        #[test]
        fn insertion_keeps_search_property(letters in prop::collection::vec(1u32..8, 0..10)) {
            let word = Word::new(letters).unwrap();
            let mut t = Bstm::Empty;
            for &l in word.letters().iter().rev() {
                t = bstm_insert(t, l);
                prop_assert!(t.is_search_tree());
            }
            prop_assert_eq!(t.size(), word.len());
        }

        #[test]
        fn multiplicities_match_evaluation(letters in prop::collection::vec(1u32..8, 1..10)) {
            let word = Word::new(letters).unwrap();
            let ev = crate::words::evaluation(&word);
            fn collect(t: &Bstm, out: &mut Vec<(Letter, usize)>) {
                if let Bstm::Node { letter, mult, left, right } = t {
                    out.push((*letter, *mult));
                    collect(left, out);
                    collect(right, out);
                }
            }
            let mut found = Vec::new();
            collect(&p_symbol(&word), &mut found);
            found.sort_unstable();
            let expected: Vec<(Letter, usize)> = ev.into_iter().collect();
            prop_assert_eq!(found, expected);
        }

        #[test]
        fn rs_roundtrip_random(letters in prop::collection::vec(1u32..8, 0..9)) {
            let word = Word::new(letters).unwrap();
            let (p, q) = rs_pair(&word);
            prop_assert_eq!(rs_inverse(&p, &q).unwrap(), word);
        }
    }
}
