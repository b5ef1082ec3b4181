//! FQSym and WQSym through their polynomial realization.
//!
//! A canonical word u is realized as the sum of all words over {1..N}
//! whose φ-image is u. Products of basis elements expand the pointwise
//! product of those sums; coproducts split the alphabet {1..max} at every
//! value. Both operations are computed combinatorially and the alphabet
//! picture is verified by `check_realization` on a doubled alphabet.
//!
//! Run with `cargo run --example fqsym_wqsym`.

use hopfcomb::hopf::{
    check_realization, m_coproduct, m_product, realize, render_lincomb, render_tensor,
};
use hopfcomb::{PhiMap, Word};

fn main() {
    // G_132 as a polynomial over the alphabet {1,2,3}: the words that
    // standardize to 132.
    let u: Word = "132".parse().unwrap();
    let poly = realize(PhiMap::Std, &u, 3).unwrap();
    let words: Vec<String> = poly.iter().map(|(w, _)| w.to_string()).collect();
    println!("G_132 over {{1..3}} = {}", words.join(" + "));
    assert_eq!(words, ["121", "131", "132", "232"]);

    // Products in FQSym: the paper's worked example.
    let p = m_product(PhiMap::Std, &"213".parse().unwrap(), &"1".parse().unwrap()).unwrap();
    println!("G_213 · G_1 = {}", render_lincomb(&p, false));
    assert_eq!(
        render_lincomb(&p, false),
        "G_2134 + G_2143 + G_3142 + G_3241"
    );

    // Coproducts in FQSym: split the values of 132 at 0, 1, 2, 3.
    let d = m_coproduct(PhiMap::Std, &"132".parse().unwrap()).unwrap();
    println!("Δ(G_132) = {}", render_tensor(&d, false));
    assert_eq!(
        render_tensor(&d, false),
        "1⊗G_132 + G_1⊗G_21 + G_12⊗G_1 + G_132⊗1"
    );

    // The same machinery with pack gives WQSym on packed words.
    let p = m_product(
        PhiMap::Pack,
        &"112".parse().unwrap(),
        &"11".parse().unwrap(),
    )
    .unwrap();
    println!("M_112 · M_11 = {}", render_lincomb(&p, false));
    assert_eq!(
        render_lincomb(&p, false),
        "M_11211 + M_11222 + M_11233 + M_11322 + M_22311"
    );

    let d = m_coproduct(PhiMap::Pack, &"3112".parse().unwrap()).unwrap();
    println!("Δ(M_3112) = {}", render_tensor(&d, false));
    assert_eq!(
        render_tensor(&d, false),
        "1⊗M_3112 + M_11⊗M_21 + M_112⊗M_1 + M_3112⊗1"
    );

    // The product law is exactly multiplication of realizations: checked
    // by expanding G_21 · G_12 over a doubled alphabet.
    for (phi, u, v) in [
        (PhiMap::Std, "21", "12"),
        (PhiMap::Std, "213", "1"),
        (PhiMap::Pack, "112", "11"),
        (PhiMap::Pack, "11", "121"),
    ] {
        let u: Word = u.parse().unwrap();
        let v: Word = v.parse().unwrap();
        assert!(check_realization(phi, &u, &v, 3).unwrap());
        println!("realization check ({phi}): {u} · {v} over {{1..3}} ∪ {{4..6}} ok");
    }
}
