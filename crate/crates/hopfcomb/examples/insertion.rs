//! Insertion into binary search trees with multiplicities.
//!
//! Reading a word right to left, each letter is inserted into a binary
//! search tree whose nodes carry a letter and a multiplicity; repeated
//! letters bump the multiplicity instead of creating a node. The resulting
//! P-symbol, together with the Q-symbol recording which positions went to
//! which node, is a bijection: `rs_inverse` recovers the word exactly.
//! Stripping the labels from the P-symbol leaves the tree shape B(w).
//!
//! Run with `cargo run --example insertion`.

use hopfcomb::trees::{btm_of_word, representative_word, rs_inverse, rs_pair, strip};
use hopfcomb::Word;

fn main() {
    let w: Word = "45142234212".parse().unwrap();
    let (p, q) = rs_pair(&w);
    println!("w = {w}");
    println!("P(w) = {p}");
    println!("Q(w) = {q}");
    assert_eq!(p.to_string(), "(2:4 (1:2 . .) (4:3 (3:1 . .) (5:1 . .)))");
    assert_eq!(q.to_string(), "[5,6,9,11]/[3,10]/[1,4,8]/[7]/[2]");

    // The pair (P, Q) determines the word.
    let recovered = rs_inverse(&p, &q).unwrap();
    println!("rs_inverse(P, Q) = {recovered}");
    assert_eq!(recovered, w);

    // Forgetting the letters leaves the shape B(w); different words can
    // share it. 1312 and 3112 insert to the same tree,
    let t = btm_of_word(&"1312".parse().unwrap());
    let s = btm_of_word(&"3112".parse().unwrap());
    println!("B(1312) = {t}");
    assert_eq!(t, s);
    assert_eq!(t.to_string(), "(1 (2 . .) (1 . .))");

    // and every shape designates one member of its fiber as representative.
    let rep = representative_word(&t);
    println!("representative of {t} = {rep}");
    assert_eq!(rep, "3112".parse().unwrap());
    assert_eq!(btm_of_word(&rep), t);

    // strip ∘ P is the same map as btm_of_word.
    assert_eq!(strip(&p), btm_of_word(&w));
    println!("B({w}) = {}", strip(&p));
}
