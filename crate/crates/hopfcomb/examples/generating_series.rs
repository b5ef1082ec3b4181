//! Exact generating series: tree counts and the exponential fixed point.
//!
//! Two series are solved degreewise over exact rationals. The ordinary
//! series S of tree shapes satisfies S = 1 + tS²/(1−t); its coefficients
//! count shapes by size. The exponential fixed point x = 1 + ∫ eˢ·x(s)² ds
//! has n-th coefficient c_n with n!·c_n = #packed words of length n, and
//! c_n splits over shapes via the hook-length formula.
//!
//! Run with `cargo run --example generating_series`.

use num::{BigRational, BigUint, One};

use hopfcomb::series::{b_tree_eval, solve_btm_series, solve_exp_fixed_point, TruncatedSeries};
use hopfcomb::trees::{enumerate_btm, hook_count};

fn factorial(n: usize) -> BigRational {
    let mut f = BigUint::one();
    for k in 2..=n {
        f *= BigUint::from(k);
    }
    BigRational::from_integer(f.into())
}

fn main() {
    // Shape counts by size, straight from the functional equation.
    let order = 10;
    let s = solve_btm_series(order);
    let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    println!("S(t) = {}", coeffs.join(", "));
    assert_eq!(
        &coeffs[..8],
        ["1", "1", "3", "10", "36", "137", "543", "2219"]
    );

    // The equation itself holds as an identity of truncated series:
    // (1 − t)(S − 1) = tS².
    let one = TruncatedSeries::one(order);
    let t = TruncatedSeries::monomial(BigRational::one(), 1, order);
    let lhs = one
        .add(&t.scalar_mul(&-BigRational::one()))
        .mul(&s.add(&one.scalar_mul(&-BigRational::one())));
    let rhs = t.mul(&s.mul(&s));
    assert_eq!(lhs, rhs);
    println!("(1 − t)(S − 1) = tS² holds through order {order}");

    // Coefficients agree with brute-force enumeration.
    for n in 0..=6 {
        assert_eq!(
            s.coeff(n),
            &BigRational::from_integer(enumerate_btm(n).len().into())
        );
    }
    println!("coefficients match enumerate_btm through size 6");

    // The exponential fixed point: n!·c_n counts packed words.
    let x = solve_exp_fixed_point(6, 6).unwrap();
    let scaled: Vec<String> = (0..=6)
        .map(|n| (x.coeff(n) * factorial(n)).to_string())
        .collect();
    println!("n!·c_n = {}", scaled.join(", "));
    assert_eq!(scaled, ["1", "1", "3", "13", "75", "541", "4683"]);

    // Each shape T contributes z^{|T|}/(denominator of the hook formula):
    // multiplying the contribution by |T|! recovers hook(T), and summing
    // contributions of one size recovers c_n. (The empty tree contributes
    // the constant term c_0 = 1 on its own.)
    let (c0, d0) = b_tree_eval(&hopfcomb::Btm::Empty);
    assert_eq!((c0, d0), (BigRational::one(), 0));
    for n in 1..=5 {
        let mut total = BigRational::from_integer(0.into());
        for t in enumerate_btm(n) {
            let (c, deg) = b_tree_eval(&t);
            assert_eq!(deg, n);
            assert_eq!(
                &c * factorial(n),
                BigRational::from_integer(hook_count(&t).unwrap().into())
            );
            total += c;
        }
        assert_eq!(&total, x.coeff(n));
    }
    println!("Σ_T b_tree_eval(T) = c_n and |T|!·coeff = hook(T) through size 5");
}
