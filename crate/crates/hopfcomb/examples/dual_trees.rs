//! The tree algebra on the dual side: P^m elements and the B_k operators.
//!
//! Inside the dual of WQSym (basis S_u, shifted-shuffle product), each tree
//! shape T owns the element P^m_T = Σ_{B(u)=T} S_u — the sum over its
//! insertion fiber. These elements multiply with coefficient 1 (the dual
//! side of the quotient embedding), and they are generated from the unit
//! by the operators B_k: B_T(1) = P^m_T, which is the algebraic form of
//! the hook-length formula.
//!
//! Run with `cargo run --example dual_trees`.

use num::BigUint;

use hopfcomb::hopf::{
    b_tree_apply, bk_apply, pairing, pm_coproduct, pm_element, pm_product, q_product,
    render_lincomb, render_tensor, s_product, BasisIndex, LinComb,
};
use hopfcomb::trees::{enumerate_btm, hook_count};
use hopfcomb::{Btm, CongruenceExpr, PhiMap, Word};

fn main() {
    // P^m_T is the fiber sum: one S-term per word inserting to T.
    let t: Btm = "(1 (2 . .) (1 . .))".parse().unwrap();
    let x = pm_element(&t);
    println!("P^m_{t} = {}", render_lincomb(&x, true));
    assert_eq!(BigUint::from(x.len()), hook_count(&t).unwrap());

    // The building block is the shifted shuffle of S-words.
    let s = s_product(
        &"112".parse::<Word>().unwrap(),
        &"1".parse::<Word>().unwrap(),
    )
    .unwrap();
    println!("S_112 · S_1 = {}", render_lincomb(&s, true));
    assert_eq!(s.len(), 4); // C(4,1) interleavings, all with coefficient 1

    // Products of P^m elements: the worked size-4 × size-6 example.
    let t1: Btm = "(3 . (1 . .))".parse().unwrap();
    let t2: Btm = "(4 (2 . .) .)".parse().unwrap();
    let p = pm_product(&t1, &t2).unwrap();
    println!("P^m_{t1} · P^m_{t2} = {}", render_lincomb(&p, true));
    assert_eq!(p.len(), 6);

    // Hook counts are preserved: Σ hooks of the result trees equals
    // hook(T1)·hook(T2)·C(10,4).
    let total: BigUint = p
        .iter()
        .map(|(ix, _)| match ix {
            BasisIndex::Btm(t) => hook_count(t).unwrap(),
            _ => unreachable!("pm_product returns tree indices"),
        })
        .sum();
    println!("Σ hooks of the six product trees = {total}");
    assert_eq!(total, BigUint::from(6300u32));

    // B_k grafts two elements under a new root of multiplicity k; applied
    // recursively from the unit it rebuilds P^m_T for every shape.
    let one = LinComb::single(BasisIndex::PackedWord(Word::empty()));
    let b2 = bk_apply(2, &one, &one).unwrap();
    println!("B_2(1, 1) = {}", render_lincomb(&b2, true));
    assert_eq!(b2, pm_element(&"(2 . .)".parse().unwrap()));

    for n in 0..=4 {
        for t in enumerate_btm(n) {
            assert_eq!(b_tree_apply(&t), pm_element(&t), "B_T(1) ≠ P^m_T at {t}");
        }
    }
    println!("B_T(1) = P^m_T for every shape of size ≤ 4");

    // Duality: the coproduct of P^m is the transpose of the Q^m product,
    // and the pairing ⟨S_u, M_v⟩ = δ_{u,v} sees pm_element as dual to the
    // class projection.
    let t: Btm = "(2 (1 . .) .)".parse().unwrap();
    let d = pm_coproduct(&t).unwrap();
    println!("Δ#(P^m_{t}) = {}", render_tensor(&d, true));
    assert_eq!(d.len(), 6);

    let m = LinComb::single(BasisIndex::PackedWord("212".parse().unwrap()));
    let s = pm_element(&hopfcomb::trees::btm_of_word(&"212".parse().unwrap()));
    assert_eq!(pairing(&s, &m).unwrap(), 1);
    println!("⟨P^m_B(212), M_212⟩ = 1");

    // Transpose check on one concrete pair: the coefficient of T1⊗T2 in
    // Δ#(P^m_T) equals the coefficient of T in Q^m_T1 · Q^m_T2.
    let t1: Btm = "(1 . .)".parse().unwrap();
    let t2: Btm = "(1 (1 . .) .)".parse().unwrap();
    let c_coprod = d.coeff(&(BasisIndex::Btm(t1.clone()), BasisIndex::Btm(t2.clone())));
    let q = q_product(
        &CongruenceExpr::Taiga,
        PhiMap::Pack,
        &BasisIndex::Btm(t1),
        &BasisIndex::Btm(t2),
    )
    .unwrap();
    let c_prod = q.coeff(&BasisIndex::Btm(t));
    assert_eq!(c_coprod, c_prod);
    assert_eq!(c_coprod, 1);
    println!("⟨Δ#(P^m_T), T1⊗T2⟩ = ⟨P^m_T, Q^m_T1·Q^m_T2⟩ on the sample pair");
}
