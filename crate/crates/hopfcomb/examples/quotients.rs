//! Quotient Hopf algebras by good congruences.
//!
//! A congruence that is compatible with a φ-map (and with alphabet
//! intervals) descends the φ-algebra to classes: the product of two
//! classes is computed on representatives and projected back. `check_good`
//! certifies the compatibility exhaustively; the `*_checked` operations
//! recompute on every representative pair and report any disagreement.
//!
//! Run with `cargo run --example quotients`.

use hopfcomb::congruence::{canonical_form, check_good};
use hopfcomb::hopf::{
    m_product, project, q_coproduct, q_product, q_product_checked, render_lincomb, render_tensor,
    BasisIndex,
};
use hopfcomb::{CongruenceExpr, PhiMap, Word};

fn main() {
    let stal = CongruenceExpr::Stalactic;

    // Projecting a WQSym product term by term: the five M-terms of
    // M_112 · M_11 collapse onto five distinct stalactic classes.
    let p = m_product(
        PhiMap::Pack,
        &"112".parse().unwrap(),
        &"11".parse().unwrap(),
    )
    .unwrap();
    let projected = project(&stal, &p);
    println!("π(M_112 · M_11) = {}", render_lincomb(&projected, false));
    assert_eq!(
        render_lincomb(&projected, false),
        "Q^{stal}_11121 + Q^{stal}_11222 + Q^{stal}_11232 + Q^{stal}_11233 + Q^{stal}_12231"
    );

    // The same result computed intrinsically in the quotient.
    let a = BasisIndex::Class(stal.clone(), canonical_form(&stal, &"112".parse().unwrap()));
    let b = BasisIndex::Class(stal.clone(), canonical_form(&stal, &"11".parse().unwrap()));
    let q = q_product(&stal, PhiMap::Pack, &a, &b).unwrap();
    assert_eq!(q, projected);

    // The checked variant recomputes the product over every pair of class
    // members; agreement certifies representative independence here.
    let checked = q_product_checked(&stal, PhiMap::Pack, &a, &b).unwrap();
    assert_eq!(checked, q);
    println!("representative independence verified on all member pairs");

    // Coproducts descend the same way.
    let d = q_coproduct(&stal, PhiMap::Pack, &a).unwrap();
    println!("Δ(Q^{{stal}}_112) = {}", render_tensor(&d, false));

    // Goodness certificates: stalactic is pack-good, taïga is pack-good,
    // sylvester is std-good…
    for (c, phi) in [
        (CongruenceExpr::Stalactic, PhiMap::Pack),
        (CongruenceExpr::Taiga, PhiMap::Pack),
        (CongruenceExpr::Sylvester, PhiMap::Std),
    ] {
        let report = check_good(&c, phi, 5);
        println!("({c}, {phi}) good up to length 5: {}", report.is_good());
        assert!(report.is_good());
    }

    // …but stalactic is *not* std-compatible: the checker returns a
    // concrete pair of equivalent words with different standardizations.
    let report = check_good(&CongruenceExpr::Stalactic, PhiMap::Std, 5);
    assert!(!report.is_good());
    let (u, v) = report.counterexample.clone().unwrap();
    println!(
        "(stal, std) is not good: {u} ≡ {v} but std({u}) = {} ≠ {} = std({v})",
        hopfcomb::words::apply_phi(PhiMap::Std, &u),
        hopfcomb::words::apply_phi(PhiMap::Std, &v),
    );

    // For taïga, classes are tree shapes: the quotient basis is indexed
    // by trees with multiplicities and the product matches projection.
    let taiga = CongruenceExpr::Taiga;
    let t1 = hopfcomb::trees::btm_of_word(&"1312".parse::<Word>().unwrap());
    let t2 = hopfcomb::trees::btm_of_word(&"1".parse::<Word>().unwrap());
    let q = q_product(
        &taiga,
        PhiMap::Pack,
        &BasisIndex::Btm(t1),
        &BasisIndex::Btm(t2),
    )
    .unwrap();
    println!("Q^m_B(1312) · Q^m_B(1) = {}", render_lincomb(&q, false));
    assert_eq!(q.len(), 7);
}
