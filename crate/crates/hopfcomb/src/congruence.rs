//! Rewrite-rule congruences on words, their lattice, and goodness checks.
//!
//! Three base congruences are generated by adjacent-transposition rewrite
//! rules (each preserves the evaluation, so every equivalence class lives
//! inside a finite anagram set):
//!
//! - **sylvester** `…ac…b… ≡ …ca…b…` for `a ≤ b < c` with the witness `b`
//!   strictly to the right of the swapped pair;
//! - **stalactic** `…xy… ≡ …yx…` for `x ≠ y` when `x` or `y` occurs again
//!   strictly to the right of the pair;
//! - **taïga**: both rule families together (= the lattice union of the
//!   previous two, which the test suite verifies rather than assumes).
//!
//! A fourth base, **sylvester#**, is the image of sylvester under the
//! Schützenberger involution (reverse + complement). Its rewrite rule is
//! reconstructed here as `…b…ac… ≡ …b…ca…` for `a < b ≤ c` with the witness
//! strictly to the *left*; this reconstruction is exercised operationally by
//! the hypoplactic (`sylv ∨ sylv#`) and Baxter (`sylv ∧ sylv#`) goodness
//! checks instead of being taken on faith.
//!
//! [`CongruenceExpr`] closes the bases under `union` (join: transitive
//! closure of the united relations) and `inter` (meet: pairwise
//! intersection). [`check_good`] certifies, by bounded exhaustive search,
//! the two axioms that make a congruence yield a Hopf-algebra quotient:
//! being a φ-congruence and interval-restriction compatibility.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::words::{evaluation, restrict, Letter, PhiMap, Word};

/// Errors from congruence expressions and class computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CongruenceError {
    /// `neighbors` is a rewrite-system notion; intersections have no rewrite
    /// system and support only set-level class computation.
    #[error("neighbors is undefined on intersection expressions; use class_of")]
    NeighborsOnIntersection,
    /// A congruence expression literal could not be parsed.
    #[error("malformed congruence expression {0:?}: {1}")]
    Parse(String, String),
}

/// A closed term over the base congruences and the lattice operations.
///
/// Parses from the prefix grammar `sylv | sylv# | stal | taiga |
/// union(e,e) | inter(e,e)` (whitespace-insensitive) and prints back in the
/// same grammar.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CongruenceExpr {
    Sylvester,
    SylvesterSharp,
    Stalactic,
    Taiga,
    Union(Box<CongruenceExpr>, Box<CongruenceExpr>),
    Intersection(Box<CongruenceExpr>, Box<CongruenceExpr>),
}

impl CongruenceExpr {
    /// True when the expression contains an `Intersection` node, in which
    /// case no rewrite system presents the congruence.
    fn has_intersection(&self) -> bool {
        match self {
            CongruenceExpr::Union(l, r) => l.has_intersection() || r.has_intersection(),
            CongruenceExpr::Intersection(_, _) => true,
            _ => false,
        }
    }
}

impl fmt::Display for CongruenceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceExpr::Sylvester => write!(f, "sylv"),
            CongruenceExpr::SylvesterSharp => write!(f, "sylv#"),
            CongruenceExpr::Stalactic => write!(f, "stal"),
            CongruenceExpr::Taiga => write!(f, "taiga"),
            CongruenceExpr::Union(l, r) => write!(f, "union({l},{r})"),
            CongruenceExpr::Intersection(l, r) => write!(f, "inter({l},{r})"),
        }
    }
}

impl FromStr for CongruenceExpr {
    type Err = CongruenceError;

    fn from_str(s: &str) -> Result<Self, CongruenceError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut chars = compact.as_str();
        let expr = parse_expr(&mut chars).map_err(|e| CongruenceError::Parse(s.to_string(), e))?;
        if !chars.is_empty() {
            return Err(CongruenceError::Parse(
                s.to_string(),
                format!("trailing input {chars:?}"),
            ));
        }
        Ok(expr)
    }
}

fn parse_expr(input: &mut &str) -> Result<CongruenceExpr, String> {
    for (name, expr) in [
        // "sylv#" must be tried before its prefix "sylv".
        ("sylv#", CongruenceExpr::SylvesterSharp),
        ("sylv", CongruenceExpr::Sylvester),
        ("stal", CongruenceExpr::Stalactic),
        ("taiga", CongruenceExpr::Taiga),
        ("taïga", CongruenceExpr::Taiga),
    ] {
        if let Some(rest) = input.strip_prefix(name) {
            *input = rest;
            return Ok(expr);
        }
    }
    for (name, binary) in [("union(", true), ("inter(", false)] {
        if let Some(rest) = input.strip_prefix(name) {
            *input = rest;
            let left = parse_expr(input)?;
            *input = input
                .strip_prefix(',')
                .ok_or_else(|| "expected ',' between operands".to_string())?;
            let right = parse_expr(input)?;
            *input = input
                .strip_prefix(')')
                .ok_or_else(|| "expected closing ')'".to_string())?;
            return Ok(if binary {
                CongruenceExpr::Union(Box::new(left), Box::new(right))
            } else {
                CongruenceExpr::Intersection(Box::new(left), Box::new(right))
            });
        }
    }
    Err(format!(
        "expected sylv, sylv#, stal, taiga, union(..) or inter(..) at {input:?}"
    ))
}

/// An equivalence class of words. All members share one evaluation; the
/// representative is the lexicographic minimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceClass {
    members: BTreeSet<Word>,
}

impl EquivalenceClass {
    fn new(members: BTreeSet<Word>) -> Self {
        assert!(!members.is_empty(), "equivalence classes are non-empty");
        EquivalenceClass { members }
    }

    /// Lexicographically smallest member.
    pub fn representative(&self) -> &Word {
        self.members.iter().next().expect("class is non-empty")
    }

    pub fn members(&self) -> &BTreeSet<Word> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains(w)
    }
}

fn swap_adjacent(w: &Word, i: usize) -> Word {
    let mut letters = w.letters().to_vec();
    letters.swap(i, i + 1);
    Word::from_letters(&letters)
}

/// Does one of the pair letters `{x, y}` at `(i, i+1)` occur again strictly
/// to the right of the pair?
fn stalactic_applies(w: &Word, i: usize) -> bool {
    let (x, y) = (w[i], w[i + 1]);
    if x == y {
        return false;
    }
    w.letters()[i + 2..].iter().any(|&b| b == x || b == y)
}

/// Sylvester: swap `(a, c)` or `(c, a)` at `(i, i+1)` when some `b` with
/// `a ≤ b < c` occurs strictly to the right of the pair.
fn sylvester_applies(w: &Word, i: usize) -> bool {
    let (a, c) = (w[i].min(w[i + 1]), w[i].max(w[i + 1]));
    if a == c {
        return false;
    }
    w.letters()[i + 2..].iter().any(|&b| a <= b && b < c)
}

/// Sylvester#: swap `(a, c)` or `(c, a)` at `(i, i+1)` when some `b` with
/// `a < b ≤ c` occurs strictly to the left of the pair.
fn sylvester_sharp_applies(w: &Word, i: usize) -> bool {
    let (a, c) = (w[i].min(w[i + 1]), w[i].max(w[i + 1]));
    if a == c {
        return false;
    }
    w.letters()[..i].iter().any(|&b| a < b && b <= c)
}

fn base_swap_applies(c: &CongruenceExpr, w: &Word, i: usize) -> bool {
    match c {
        CongruenceExpr::Sylvester => sylvester_applies(w, i),
        CongruenceExpr::SylvesterSharp => sylvester_sharp_applies(w, i),
        CongruenceExpr::Stalactic => stalactic_applies(w, i),
        CongruenceExpr::Taiga => sylvester_applies(w, i) || stalactic_applies(w, i),
        _ => unreachable!("base_swap_applies is only called on base congruences"),
    }
}

/// All words reachable from `w` by one rewrite-rule application, in either
/// direction. Undefined (an error) on intersection expressions, whose
/// classes are not generated by rewrites; use [`class_of`] there.
pub fn neighbors(c: &CongruenceExpr, w: &Word) -> Result<BTreeSet<Word>, CongruenceError> {
    if c.has_intersection() {
        return Err(CongruenceError::NeighborsOnIntersection);
    }
    let mut out = BTreeSet::new();
    neighbors_into(c, w, &mut out);
    Ok(out)
}

fn neighbors_into(c: &CongruenceExpr, w: &Word, out: &mut BTreeSet<Word>) {
    match c {
        CongruenceExpr::Union(l, r) => {
            neighbors_into(l, w, out);
            neighbors_into(r, w, out);
        }
        CongruenceExpr::Intersection(_, _) => {
            unreachable!("has_intersection is checked before descending")
        }
        base => {
            for i in 0..w.len().saturating_sub(1) {
                if base_swap_applies(base, w, i) {
                    out.insert(swap_adjacent(w, i));
                }
            }
        }
    }
}

/// One BFS expansion step: everything one rewrite away, or — for operands
/// that have no rewrite presentation — the operand's whole class.
fn expand_into(c: &CongruenceExpr, w: &Word, out: &mut BTreeSet<Word>) {
    match c {
        CongruenceExpr::Union(l, r) => {
            expand_into(l, w, out);
            expand_into(r, w, out);
        }
        CongruenceExpr::Intersection(_, _) => {
            out.extend(class_of(c, w).members);
        }
        base => {
            for i in 0..w.len().saturating_sub(1) {
                if base_swap_applies(base, w, i) {
                    out.insert(swap_adjacent(w, i));
                }
            }
        }
    }
}

/// The equivalence class of `w` under `c`.
///
/// Base and union expressions use breadth-first closure under the rewrite
/// rules (termination: every rule preserves the evaluation, so the search
/// stays inside the finite anagram set of `w`). An intersection class is the
/// set intersection of the operand classes — the meet of two equivalence
/// relations is computed blockwise, never by rewriting.
pub fn class_of(c: &CongruenceExpr, w: &Word) -> EquivalenceClass {
    if let CongruenceExpr::Intersection(l, r) = c {
        let left = class_of(l, w);
        let right = class_of(r, w);
        let members: BTreeSet<Word> = left.members.intersection(&right.members).cloned().collect();
        return EquivalenceClass::new(members);
    }
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    seen.insert(w.clone());
    let mut queue: VecDeque<Word> = VecDeque::new();
    queue.push_back(w.clone());
    let mut frontier = BTreeSet::new();
    while let Some(v) = queue.pop_front() {
        frontier.clear();
        expand_into(c, &v, &mut frontier);
        for next in &frontier {
            if !seen.contains(next) {
                seen.insert(next.clone());
                queue.push_back(next.clone());
            }
        }
    }
    EquivalenceClass::new(seen)
}

/// True iff `u ≡ v` under `c`. Short-circuits on unequal evaluations (every
/// congruence here preserves them).
pub fn are_equivalent(c: &CongruenceExpr, u: &Word, v: &Word) -> bool {
    if u == v {
        return true;
    }
    if evaluation(u) != evaluation(v) {
        return false;
    }
    match c {
        CongruenceExpr::Intersection(l, r) => are_equivalent(l, u, v) && are_equivalent(r, u, v),
        _ => class_of(c, u).contains(v),
    }
}

/// The lexicographically smallest member of the class of `w`: the
/// deterministic class representative used everywhere (indices, printing,
/// partition comparisons).
pub fn canonical_form(c: &CongruenceExpr, w: &Word) -> Word {
    class_of(c, w).representative().clone()
}

/// Partition of `enumerate_canonical(phi, n)` into congruence classes,
/// sorted by representative.
///
/// Anagrams of canonical words are canonical (permutations/packed words are
/// closed under letter rearrangement), so the classes computed on the full
/// word set already consist of canonical words only.
pub fn classes(c: &CongruenceExpr, phi: PhiMap, n: usize) -> Vec<EquivalenceClass> {
    let mut assigned: BTreeSet<Word> = BTreeSet::new();
    let mut out = Vec::new();
    for w in crate::words::enumerate_canonical(phi, n) {
        if assigned.contains(&w) {
            continue;
        }
        let class = class_of(c, &w);
        assigned.extend(class.members.iter().cloned());
        out.push(class);
    }
    out.sort_by(|a, b| a.representative().cmp(b.representative()));
    out
}

/// Certificate from the bounded-exhaustive goodness checkers. Each checker
/// fills the flag it verifies (and leaves the other vacuously true);
/// [`check_good`] runs both and merges. On any failure, `counterexample`
/// holds a pair of words witnessing it at length ≤ `max_length_checked`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodnessReport {
    pub phi_congruence_ok: bool,
    pub interval_ok: bool,
    pub max_length_checked: usize,
    pub counterexample: Option<(Word, Word)>,
}

impl GoodnessReport {
    pub fn is_good(&self) -> bool {
        self.phi_congruence_ok && self.interval_ok
    }
}

/// Memoized canonical forms: one BFS per class, assigning every member.
struct CanonCache<'a> {
    c: &'a CongruenceExpr,
    canon: HashMap<Word, Word>,
}

impl<'a> CanonCache<'a> {
    fn new(c: &'a CongruenceExpr) -> Self {
        CanonCache {
            c,
            canon: HashMap::new(),
        }
    }

    fn canonical(&mut self, w: &Word) -> Word {
        if let Some(r) = self.canon.get(w) {
            return r.clone();
        }
        let class = class_of(self.c, w);
        let rep = class.representative().clone();
        for member in class.members() {
            self.canon.insert(member.clone(), rep.clone());
        }
        rep
    }

    fn equivalent(&mut self, u: &Word, v: &Word) -> bool {
        u == v || self.canonical(u) == self.canonical(v)
    }
}

/// Exhaustively verifies that `c` is a φ-congruence at bounded scale:
/// for all words `u, v` of equal length ≤ `maxlen` over `{1..maxlen}`,
///
/// `u ≡ v  ⇔  φ(u) ≡ φ(v) and ev(u) = ev(v)`.
///
/// Pairs with distinct evaluations satisfy both sides vacuously (the rules
/// preserve evaluations), so the scan works one anagram set at a time,
/// comparing the congruence partition against the pullback of ≡ through φ.
pub fn check_phi_congruence(c: &CongruenceExpr, phi: PhiMap, maxlen: usize) -> GoodnessReport {
    let mut cache = CanonCache::new(c);
    for len in 0..=maxlen {
        let mut by_eval: BTreeMap<Vec<(Letter, usize)>, Vec<Word>> = BTreeMap::new();
        for w in crate::words::words_over(1, maxlen as Letter, len) {
            let ev: Vec<(Letter, usize)> = evaluation(&w).into_iter().collect();
            by_eval.entry(ev).or_default().push(w);
        }
        for group in by_eval.values() {
            // Partition the anagram set by ≡ and by the φ-pullback key.
            let mut class_ids: BTreeMap<Word, usize> = BTreeMap::new();
            let mut class_lists: Vec<Vec<Word>> = Vec::new();
            for w in group {
                if class_ids.contains_key(w) {
                    continue;
                }
                let class = class_of(c, w);
                let id = class_lists.len();
                let mut list: Vec<Word> = class.members().iter().cloned().collect();
                list.retain(|m| group.binary_search(m).is_ok());
                for member in &list {
                    class_ids.insert(member.clone(), id);
                }
                class_lists.push(list);
            }
            let mut key_to_class: BTreeMap<Word, usize> = BTreeMap::new();
            for (id, list) in class_lists.iter().enumerate() {
                let key0 = cache.canonical(&phi.apply(&list[0]));
                for member in &list[1..] {
                    let key = cache.canonical(&phi.apply(member));
                    if key != key0 {
                        // u ≡ v but φ(u) ≢ φ(v): forward implication fails.
                        return GoodnessReport {
                            phi_congruence_ok: false,
                            interval_ok: true,
                            max_length_checked: maxlen,
                            counterexample: Some((list[0].clone(), member.clone())),
                        };
                    }
                }
                if let Some(&other) = key_to_class.get(&key0) {
                    // φ(u) ≡ φ(v) with equal evaluations but u ≢ v:
                    // backward implication fails.
                    return GoodnessReport {
                        phi_congruence_ok: false,
                        interval_ok: true,
                        max_length_checked: maxlen,
                        counterexample: Some((class_lists[other][0].clone(), list[0].clone())),
                    };
                }
                key_to_class.insert(key0, id);
            }
        }
    }
    GoodnessReport {
        phi_congruence_ok: true,
        interval_ok: true,
        max_length_checked: maxlen,
        counterexample: None,
    }
}

/// Exhaustively verifies compatibility with alphabet-interval restriction at
/// bounded scale: for every word `u` of length ≤ `maxlen` over `{1..maxlen}`
/// and its class representative `r`, and every interval `[lo,hi] ⊆
/// [1,maxlen]`, the restrictions `u|[lo,hi]` and `r|[lo,hi]` stay equivalent.
///
/// Checking each word against its representative covers all congruent pairs
/// by transitivity, and — unlike edge-based scans — also works for
/// intersection congruences, which have no rewrite edges.
pub fn check_interval_compat(c: &CongruenceExpr, maxlen: usize) -> GoodnessReport {
    let mut cache = CanonCache::new(c);
    for len in 0..=maxlen {
        for u in crate::words::words_over(1, maxlen as Letter, len) {
            let r = cache.canonical(&u);
            if r == u {
                continue;
            }
            for lo in 1..=maxlen as Letter {
                for hi in lo..=maxlen as Letter {
                    let u_res = restrict(&u, lo, hi).expect("lo <= hi");
                    let r_res = restrict(&r, lo, hi).expect("lo <= hi");
                    if !cache.equivalent(&u_res, &r_res) {
                        return GoodnessReport {
                            phi_congruence_ok: true,
                            interval_ok: false,
                            max_length_checked: maxlen,
                            counterexample: Some((u, r)),
                        };
                    }
                }
            }
        }
    }
    GoodnessReport {
        phi_congruence_ok: true,
        interval_ok: true,
        max_length_checked: maxlen,
        counterexample: None,
    }
}

/// Conjunction of [`check_phi_congruence`] and [`check_interval_compat`] in
/// a single report: the bounded-exhaustive certificate that `c` is a φ-good
/// congruence at length ≤ `maxlen`. The counterexample (if any) comes from
/// the first failing check.
pub fn check_good(c: &CongruenceExpr, phi: PhiMap, maxlen: usize) -> GoodnessReport {
    let phi_report = check_phi_congruence(c, phi, maxlen);
    if !phi_report.phi_congruence_ok {
        return phi_report;
    }
    let interval_report = check_interval_compat(c, maxlen);
    GoodnessReport {
        phi_congruence_ok: true,
        interval_ok: interval_report.interval_ok,
        max_length_checked: maxlen,
        counterexample: interval_report.counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_canonical;
    use CongruenceExpr::{Intersection, Stalactic, Sylvester, SylvesterSharp, Taiga, Union};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn words(list: &[&str]) -> BTreeSet<Word> {
        list.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in [
            "sylv",
            "sylv#",
            "stal",
            "taiga",
            "union(sylv,stal)",
            "inter(sylv,sylv#)",
            "union(inter(sylv,sylv#),stal)",
        ] {
            let e: CongruenceExpr = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
        let spaced: CongruenceExpr = " union ( sylv , stal ) ".parse().unwrap();
        assert_eq!(spaced, Union(Box::new(Sylvester), Box::new(Stalactic)));
        assert!("sylvester".parse::<CongruenceExpr>().is_err());
        assert!("union(sylv)".parse::<CongruenceExpr>().is_err());
        assert!("union(sylv,stal".parse::<CongruenceExpr>().is_err());
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(neighbors(&Sylvester, &w("132")).unwrap(), words(&["312"]));
        assert_eq!(neighbors(&Stalactic, &w("122")).unwrap(), words(&["212"]));
        assert_eq!(neighbors(&Sylvester, &w("12")).unwrap(), BTreeSet::new());
        let inter = Intersection(Box::new(Sylvester), Box::new(SylvesterSharp));
        assert_eq!(
            neighbors(&inter, &w("12")),
            Err(CongruenceError::NeighborsOnIntersection)
        );
    }

    #[test]
    fn neighbors_are_symmetric() {
        for c in [Sylvester, SylvesterSharp, Stalactic, Taiga] {
            for u in crate::words::words_over(1, 4, 4) {
                for v in neighbors(&c, &u).unwrap() {
                    assert!(
                        neighbors(&c, &v).unwrap().contains(&u),
                        "{c}: {u} -> {v} but not back"
                    );
                }
            }
        }
    }

    #[test]
    fn taiga_class_of_13322() {
        let class = class_of(&Taiga, &w("13322"));
        let expected = words(&[
            "23132", "33122", "31232", "32312", "13232", "33212", "23312", "32132", "21332",
            "31322", "12332", "13322",
        ]);
        assert_eq!(*class.members(), expected);
        assert_eq!(class.representative(), &w("12332"));
    }

    #[test]
    fn stalactic_class_membership_and_canonical_form() {
        let big = w("51543151145312455");
        let class = class_of(&Stalactic, &big);
        // The grouped form a1^m1 ... ak^mk (letters by last occurrence) lies
        // in the class; the representative is the lexicographic minimum,
        // which differs from it.
        assert!(class.contains(&w("33111112444555555")));
        assert_eq!(canonical_form(&Stalactic, &big), w("11113312444555555"));
    }

    #[test]
    fn taiga_equivalences() {
        assert!(are_equivalent(&Taiga, &w("13232"), &w("21332")));
        assert!(are_equivalent(&Sylvester, &w("132"), &w("312")));
        assert!(!are_equivalent(&Taiga, &w("12"), &w("21")));
        assert_eq!(canonical_form(&Taiga, &w("33212")), w("12332"));
        assert_eq!(canonical_form(&Sylvester, &w("12")), w("12"));
    }

    #[test]
    fn class_counts() {
        assert_eq!(classes(&Taiga, PhiMap::Pack, 2).len(), 3);
        assert_eq!(classes(&Taiga, PhiMap::Pack, 3).len(), 10);
        assert_eq!(classes(&Sylvester, PhiMap::Std, 3).len(), 5);
    }

    #[test]
    fn classes_partition_canonical_words() {
        for (c, phi) in [(Taiga, PhiMap::Pack), (Sylvester, PhiMap::Std)] {
            for n in 0..=4 {
                let all = classes(&c, phi, n);
                let mut seen = BTreeSet::new();
                for class in &all {
                    for m in class.members() {
                        assert!(crate::words::is_canonical(phi, m));
                        assert!(seen.insert(m.clone()), "overlapping classes");
                    }
                }
                assert_eq!(seen.len(), enumerate_canonical(phi, n).len());
            }
        }
    }

    #[test]
    fn evaluation_is_preserved() {
        for c in [Sylvester, SylvesterSharp, Stalactic, Taiga] {
            for u in crate::words::words_over(1, 4, 4) {
                let ev = evaluation(&u);
                for m in class_of(&c, &u).members() {
                    assert_eq!(evaluation(m), ev);
                }
            }
        }
    }

    #[test]
    fn union_and_intersection_against_definitions() {
        // Join: coarsest on each anagram set; meet: blockwise intersection.
        let union = Union(Box::new(Sylvester), Box::new(Stalactic));
        let inter = Intersection(Box::new(Sylvester), Box::new(SylvesterSharp));
        for u in crate::words::words_over(1, 4, 4) {
            let cu = class_of(&union, &u);
            for m in class_of(&Sylvester, &u).members() {
                assert!(cu.contains(m));
            }
            for m in class_of(&Stalactic, &u).members() {
                assert!(cu.contains(m));
            }
            let ci = class_of(&inter, &u);
            for m in ci.members() {
                assert!(are_equivalent(&Sylvester, &u, m));
                assert!(are_equivalent(&SylvesterSharp, &u, m));
            }
        }
    }

    #[test]
    fn taiga_equals_union_of_sylvester_and_stalactic() {
        let union = Union(Box::new(Sylvester), Box::new(Stalactic));
        for n in 0..=5 {
            let a = classes(&Taiga, PhiMap::Pack, n);
            let b = classes(&union, PhiMap::Pack, n);
            assert_eq!(a, b, "partitions diverge at n={n}");
        }
    }

    #[test]
    fn goodness_reference_points() {
        assert!(check_good(&Sylvester, PhiMap::Std, 4).is_good());
        assert!(check_good(&Stalactic, PhiMap::Pack, 4).is_good());
        assert!(check_good(&Taiga, PhiMap::Pack, 4).is_good());

        let report = check_good(&Stalactic, PhiMap::Std, 4);
        assert!(!report.is_good());
        assert!(!report.phi_congruence_ok);
        let (u, v) = report.counterexample.expect("failure carries a witness");
        assert!(
            are_equivalent(&Stalactic, &u, &v)
                != are_equivalent(
                    &Stalactic,
                    &crate::words::standardize(&u),
                    &crate::words::standardize(&v)
                )
        );
    }

    #[test]
    fn baxter_and_hypoplactic_are_std_good() {
        let baxter = Intersection(Box::new(Sylvester), Box::new(SylvesterSharp));
        let hypoplactic = Union(Box::new(Sylvester), Box::new(SylvesterSharp));
        assert!(check_good(&baxter, PhiMap::Std, 4).is_good());
        assert!(check_good(&hypoplactic, PhiMap::Std, 4).is_good());
    }

    #[test]
    fn std_good_implies_pack_good() {
        // Refinement transfer: std ≺ pack, so std-goodness carries over.
        for c in [Sylvester, SylvesterSharp, Taiga] {
            if check_good(&c, PhiMap::Std, 4).is_good() {
                assert!(
                    check_good(&c, PhiMap::Pack, 4).is_good(),
                    "{c} is std-good but not pack-good"
                );
            }
        }
    }
}
