//! Truncated formal power series over exact rationals.
//!
//! A [`TruncatedSeries`] stores the coefficients `c_0 .. c_N` of a series
//! known modulo `z^{N+1}`; every operation (Cauchy product, integration,
//! fixed-point iteration) is exact — no floating point anywhere.
//!
//! Two fixed-point equations from the theory of binary trees with
//! multiplicities are solved here:
//!
//! - the ordinary generating series of BTMs, `S = 1 + t·S²/(1−t)`
//!   ([`solve_btm_series`]), with coefficients 1, 1, 3, 10, 36, 137, 543,
//!   2219, …;
//! - the exponential fixed point `x = 1 + Σ_{k≥1} ∫ s^{k−1}/(k−1)!·x(s)² ds`
//!   ([`solve_exp_fixed_point`]), whose normalized coefficients `n!·c_n`
//!   count the packed words: 1, 1, 3, 13, 75, 541, ….
//!
//! [`b_tree_eval`] evaluates the tree-indexed operator `B_T` at 1; the
//! result is always the monomial `f(T)·z^{|T|}/|T|!` with `f` the hook
//! count, which is the analytic face of the hook length formula.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::trees::Btm;

/// Errors from series computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    /// `solve_exp_fixed_point` needs at least as many `B_k` operators as the
    /// requested order: each `B_k` contributes valuation ≥ k, so retaining
    /// `K ≥ N` of them is exact at order `N`.
    #[error("truncation insufficient: {k} operators retained but order {order} requested")]
    TruncationInsufficient { order: usize, k: usize },
}

/// A power series over exact rationals, truncated after `z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// `coeffs[n]` is the coefficient of `z^n`; the length is `order + 1`.
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncatedSeries {
    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// `c·z^k`, truncated (the zero series when `k > order`).
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from explicit coefficients `c_0..c_N`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least c_0");
        TruncatedSeries { coeffs }
    }

    /// Truncation order `N`: coefficients are exact for `z^0 .. z^N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n` (zero beyond the stored range is *not* implied;
    /// panics past the truncation order, where the value is unknown).
    pub fn coeff(&self, n: usize) -> &BigRational {
        assert!(
            n <= self.order(),
            "coefficient {n} is beyond the truncation order"
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &other.coeffs[n])
                .collect(),
        }
    }

    /// Exact Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Term-by-term primitive with zero constant term:
    /// `Σ c_n z^n ↦ Σ c_n z^{n+1}/(n+1)`, truncated at the same order.
    pub fn integrate(&self) -> Self {
        let order = self.order();
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for n in 0..order {
            coeffs[n + 1] = &self.coeffs[n] / rat(n as i64 + 1);
        }
        TruncatedSeries { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for TruncatedSeries {
    /// `c0 + c1*z + c2*z^2 + …` with exact rationals printed as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| match n {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{n}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Serialize for TruncatedSeries {
    /// Array of `[numerator, denominator]` pairs; both rendered as decimal
    /// strings so arbitrarily large exact values survive JSON.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&[c.numer().to_string(), c.denom().to_string()])?;
        }
        seq.end()
    }
}

/// The geometric series `1/(1−t)` to the given order. Division by `(1−t)`
/// is implemented as multiplication by this series.
fn geometric(order: usize) -> TruncatedSeries {
    TruncatedSeries {
        coeffs: vec![BigRational::one(); order + 1],
    }
}

/// The ordinary generating series of BTMs to order `N`: the unique solution
/// of `S = 1 + t·S²/(1−t)` with `S(0) = 1`, by fixed-point iteration (the
/// correction has positive valuation, so `N+1` rounds converge exactly).
/// Coefficients: 1, 1, 3, 10, 36, 137, 543, 2219, …
pub fn solve_btm_series(order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let t = TruncatedSeries::monomial(BigRational::one(), 1, order);
    let geom = geometric(order);
    let step = |s: &TruncatedSeries| one.add(&t.mul(&s.mul(s)).mul(&geom));
    let mut s = one.clone();
    for _ in 0..=order {
        s = step(&s);
    }
    debug_assert_eq!(step(&s), s, "fixed point must be stable at order {order}");
    s
}

/// The truncated exponential `Σ_{k=1..K} s^{k−1}/(k−1)!` — the kernel
/// obtained by retaining the operators `B_1 .. B_K`.
fn exp_kernel(k: usize, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut factorial = BigRational::one();
    for (j, c) in coeffs.iter_mut().take(k).enumerate() {
        if j > 0 {
            factorial *= rat(j as i64);
        }
        *c = BigRational::one() / factorial.clone();
    }
    TruncatedSeries { coeffs }
}

/// Solves `x = 1 + Σ_{k=1..K} ∫ s^{k−1}/(k−1)!·x(s)² ds` to the given
/// order by fixed-point iteration. Requires `K ≥ order` (the dropped
/// operators only affect higher-order terms). The normalized coefficients
/// `n!·c_n` are the ordered Bell numbers 1, 1, 3, 13, 75, 541, … counting
/// packed words.
pub fn solve_exp_fixed_point(order: usize, k: usize) -> Result<TruncatedSeries, SeriesError> {
    if k < order {
        return Err(SeriesError::TruncationInsufficient { order, k });
    }
    let one = TruncatedSeries::one(order);
    let kernel = exp_kernel(k, order);
    let mut x = one.clone();
    for _ in 0..=order {
        x = one.add(&kernel.mul(&x.mul(&x)).integrate());
    }
    Ok(x)
}

/// Evaluates `B_T(1)` as a monomial `(coefficient, degree)`: at a node of
/// multiplicity `k` with child evaluations `L` and `R`,
/// `∫ s^{k−1}/(k−1)!·L(s)·R(s) ds`. The degree is `|T|` and
/// `coefficient · |T|!` equals the hook count of `T`; the empty tree
/// evaluates to the constant 1.
pub fn b_tree_eval(t: &Btm) -> (BigRational, usize) {
    match t {
        Btm::Empty => (BigRational::one(), 0),
        Btm::Node { mult, left, right } => {
            let (cl, dl) = b_tree_eval(left);
            let (cr, dr) = b_tree_eval(right);
            let degree = mult + dl + dr;
            let factorial_m1: BigRational = (1..*mult).map(|j| rat(j as i64)).product();
            let coeff = cl * cr / (factorial_m1 * rat(degree as i64));
            (coeff, degree)
        }
    }
}
