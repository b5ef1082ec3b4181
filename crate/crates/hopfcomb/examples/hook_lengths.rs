//! The hook-length formula for trees with multiplicities.
//!
//! The number of packed words inserting to a shape T (the fiber of T)
//! has a product formula: |T|! divided by, over all subtrees t of T,
//! the subtree size |t| and the factorial (m(root t) − 1)! of the root
//! multiplicity. This example checks the formula against brute-force
//! fiber enumeration and evaluates it on a size-18 tree.
//!
//! Run with `cargo run --example hook_lengths`.

use hopfcomb::trees::{enumerate_btm, fiber, hook_count};
use hopfcomb::{Btm, Word};

fn main() {
    // A small shape whose fiber is easy to list by hand.
    let t: Btm = "(2 (1 . .) (2 . .))".parse().unwrap();
    let words = fiber(&t);
    let count = hook_count(&t).unwrap();
    println!("fiber of {t}: {} words", words.len());
    for w in &words {
        println!("  {w}");
    }
    assert_eq!(count.to_string(), "12");
    assert_eq!(words.len(), 12);

    // Formula = brute force for every nonempty shape of size ≤ 6 (the
    // formula is undefined on the empty tree, whose fiber is {ε}).
    for n in 1..=6 {
        for t in enumerate_btm(n) {
            let predicted = hook_count(&t).unwrap();
            let actual = fiber(&t).len();
            assert_eq!(
                predicted.to_string(),
                actual.to_string(),
                "hook formula disagrees with the fiber of {t}"
            );
        }
    }
    println!("hook formula = |fiber| for all shapes of size ≤ 6");

    // The formula stays exact far beyond enumeration range.
    let big: Btm = "(2 (2 (7 . .) .) (1 (4 . .) (2 . .)))".parse().unwrap();
    let count = hook_count(&big).unwrap();
    println!("hook count of the size-18 shape {big} = {count}");
    assert_eq!(count.to_string(), "23337600");

    // Summing hook counts over all shapes of size n recovers the number
    // of packed words of length n (the ordered Bell numbers).
    let total: Vec<String> = (1..=5)
        .map(|n| {
            enumerate_btm(n)
                .iter()
                .map(|t| hook_count(t).unwrap())
                .sum::<num::BigUint>()
                .to_string()
        })
        .collect();
    println!("Σ_T hook(T) by size 1..5: {total:?}");
    assert_eq!(total, ["1", "3", "13", "75", "541"]);

    // Each length-n word lands in exactly one fiber.
    let w: Word = "13322".parse().unwrap();
    let t = hopfcomb::trees::btm_of_word(&w);
    assert!(fiber(&t).contains(&w));
    println!(
        "13322 lies in the fiber of {t} (hook count {})",
        hook_count(&t).unwrap()
    );
}
