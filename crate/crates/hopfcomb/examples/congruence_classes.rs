//! Rewrite congruences on words and the lattice they generate.
//!
//! Four atomic congruences — sylvester, its mirror sylvester#, stalactic,
//! and taïga — are each defined by a local exchange of adjacent letters,
//! enabled by a witness letter elsewhere in the word. Unions and
//! intersections of congruences are congruences again, so arbitrary
//! lattice expressions such as `union(sylv,sylv#)` make sense.
//!
//! Run with `cargo run --example congruence_classes`.

use hopfcomb::congruence::{are_equivalent, canonical_form, class_of, classes};
use hopfcomb::{CongruenceExpr, PhiMap, Word};

fn main() {
    let w: Word = "13322".parse().unwrap();

    // One word, four atomic congruences: the classes differ in size.
    for c in [
        CongruenceExpr::Sylvester,
        CongruenceExpr::SylvesterSharp,
        CongruenceExpr::Stalactic,
        CongruenceExpr::Taiga,
    ] {
        let class = class_of(&c, &w);
        println!(
            "{c}-class of {w}: {} words, canonical form {}",
            class.len(),
            class.representative()
        );
    }

    // The taïga class is the one matching the insertion fiber: 12 words.
    let taiga = class_of(&CongruenceExpr::Taiga, &w);
    let members: Vec<String> = taiga.members().iter().map(|m| m.to_string()).collect();
    println!("taiga members: {}", members.join(" "));
    assert_eq!(taiga.len(), 12);
    assert_eq!(
        canonical_form(&CongruenceExpr::Taiga, &w),
        "12332".parse().unwrap()
    );

    // Lattice expressions parse from strings. The meet sylv ∧ sylv# only
    // identifies words that both factors identify: 2131 ≡ 1231 holds for
    // sylvester but not for its mirror, so the meet keeps them apart
    // while the join merges them.
    let baxter: CongruenceExpr = "inter(sylv,sylv#)".parse().unwrap();
    let hypo: CongruenceExpr = "union(sylv,sylv#)".parse().unwrap();
    let u: Word = "2131".parse().unwrap();
    let v: Word = "1231".parse().unwrap();
    println!(
        "2131 ≡ 1231?  sylv: {}, sylv#: {}, {baxter}: {}, {hypo}: {}",
        are_equivalent(&CongruenceExpr::Sylvester, &u, &v),
        are_equivalent(&CongruenceExpr::SylvesterSharp, &u, &v),
        are_equivalent(&baxter, &u, &v),
        are_equivalent(&hypo, &u, &v),
    );
    assert!(are_equivalent(&CongruenceExpr::Sylvester, &u, &v));
    assert!(!are_equivalent(&CongruenceExpr::SylvesterSharp, &u, &v));
    assert!(!are_equivalent(&baxter, &u, &v));
    assert!(are_equivalent(&hypo, &u, &v));

    // Taïga is exactly the join of sylvester and stalactic: the two
    // expressions cut the same partition of packed words.
    let join: CongruenceExpr = "union(sylv,stal)".parse().unwrap();
    for n in 0..=5 {
        let a = classes(&CongruenceExpr::Taiga, PhiMap::Pack, n);
        let b = classes(&join, PhiMap::Pack, n);
        assert_eq!(
            a.iter().map(|c| c.members().clone()).collect::<Vec<_>>(),
            b.iter().map(|c| c.members().clone()).collect::<Vec<_>>(),
            "partitions differ at length {n}"
        );
    }
    println!("taiga = union(sylv,stal) as partitions of packed words up to length 5");

    // Class counts over packed words of length n: each class corresponds
    // to one basis element of the quotient Hopf algebra in that degree.
    let counts: Vec<usize> = (0..=5)
        .map(|n| classes(&CongruenceExpr::Taiga, PhiMap::Pack, n).len())
        .collect();
    println!("taiga classes on packed words by length: {counts:?}");
    assert_eq!(counts, [1, 1, 3, 10, 36, 137]);
}
