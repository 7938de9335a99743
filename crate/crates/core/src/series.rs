//! The universal series `U(x, σ_1, σ_2, ...)` and its specializations.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{CoefficientRing, Integers, Rationals};
use crate::sigma::{Monomial, SigmaPolynomial};
use crate::triangle::triangles;

/// The vectors `c_n(σ_1) = (γ_{n+1}(n), ..., γ_{2n}(n))` for `n = 1, 2, ...`,
/// where `γ_i(n) = sum_j t_{i,j}(n) (-σ_1)^j`. Only the current level is kept.
pub struct GammaVectors<R: CoefficientRing> {
    ring: R,
    sigma1: R::Elem,
    current: Vec<R::Elem>,
}

impl<R: CoefficientRing> GammaVectors<R> {
    pub fn new(ring: R, sigma1: R::Elem) -> Self {
        Self { ring, sigma1, current: Vec::new() }
    }

    /// The level of the last vector produced, 0 before the first call.
    pub fn level(&self) -> usize {
        self.current.len()
    }
}

impl<R: CoefficientRing> Iterator for GammaVectors<R> {
    type Item = Vec<R::Elem>;

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.current.len();
        let r = &self.ring;
        if n == 0 {
            self.current = vec![r.one()];
            return Some(self.current.clone());
        }
        // γ_m(n) sits at current[m - n - 1] for n < m <= 2n
        let gamma = |m: usize| (m > n && m <= 2 * n).then(|| &self.current[m - n - 1]);
        let next: Vec<R::Elem> = (n + 2..=2 * n + 2)
            .map(|i| {
                let mut v = r.zero();
                if let Some(g) = gamma(i - 1) {
                    let factor = r.sub(&r.from_i64(i as i64 - 2), &self.sigma1);
                    v = r.mul(&factor, g);
                }
                if let Some(g) = gamma(i - 2) {
                    v = r.add(&v, &r.scale(g, i as i64 - 3));
                }
                v
            })
            .collect();
        self.current = next;
        Some(self.current.clone())
    }
}

/// `c_1(σ_1), ..., c_{max_n}(σ_1)` over the rationals.
pub fn gamma_vectors(sigma1: &BigRational, max_n: usize) -> Vec<Vec<BigRational>> {
    GammaVectors::new(Rationals, sigma1.clone()).take(max_n).collect()
}

/// `U_0, ..., U_M` as σ-polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries {
    coeffs: Vec<SigmaPolynomial>,
}

/// `U` through `x^order`, with `U_n = -sum_i σ_i sum_j t_{i,j}(n) (-σ_1)^j`.
pub fn u_series(order: usize) -> USeries {
    let mut coeffs = vec![SigmaPolynomial::one()];
    for t in triangles().take(order) {
        let mut un = SigmaPolynomial::zero();
        for (i, j, v) in t.entries() {
            let mut m: Monomial = vec![1; j];
            m.push(i as u32);
            let c = if j % 2 == 0 { -v.clone() } else { v.clone() };
            un.add_term(m, c);
        }
        coeffs.push(un);
    }
    USeries { coeffs }
}

impl USeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &SigmaPolynomial {
        &self.coeffs[n]
    }

    pub fn coefficients(&self) -> &[SigmaPolynomial] {
        &self.coeffs
    }

    /// Evaluates every coefficient at `σ_k = values(k)`.
    pub fn eval_with(&self, values: impl Fn(u32) -> BigRational + Sync) -> Vec<BigRational> {
        self.coeffs.iter().map(|c| c.eval_with(&values)).collect()
    }

    /// The expansion written as `1 - σ_2 x - ((1 - σ_1)σ_3 + σ_4) x^2 - ...`.
    pub fn to_grouped_notation(&self) -> String {
        let mut out = String::from("1");
        for (n, un) in self.coeffs.iter().enumerate().skip(1) {
            let parts = (-un.clone()).split_by_top_index().expect("U_n is linear in σ_i, i >= 2");
            let mut pieces = Vec::new();
            for (i, p) in parts {
                let poly = p.into_iter().fold(SigmaPolynomial::zero(), |acc, (e, c)| {
                    acc + SigmaPolynomial::monomial(vec![1; e], c)
                });
                let piece = if poly == SigmaPolynomial::one() {
                    format!("σ_{i}")
                } else if poly.len() == 1 && poly.degree() == Some(0) {
                    format!("{poly}σ_{i}")
                } else {
                    format!("({poly})σ_{i}")
                };
                pieces.push(piece);
            }
            let body = if pieces.len() == 1 {
                pieces.pop().unwrap_or_default()
            } else {
                format!("({})", pieces.join(" + "))
            };
            let _ = match n {
                1 => write!(out, " - {body} x"),
                _ => write!(out, " - {body} x^{n}"),
            };
        }
        out
    }
}

/// Where the two sides of the functional equation first differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub power: usize,
    pub monomial: Monomial,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctionalEquationReport {
    pub order: usize,
    pub folds: u32,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
}

/// Compares `U · prod_{j<k} (1 - (σ_1 + j) x)` with `U` at
/// `σ̃_m = sum_j C(k,j) σ_{m-j}` coefficient-wise through the order of `u`.
pub fn check_functional_equation(u: &USeries, folds: u32) -> FunctionalEquationReport {
    let order = u.order();
    let mut factor = vec![SigmaPolynomial::one()];
    for j in 0..folds {
        let lin = -(SigmaPolynomial::sigma(1) + SigmaPolynomial::constant(j.into()));
        let mut next = vec![SigmaPolynomial::zero(); factor.len() + 1];
        for (d, c) in factor.iter().enumerate() {
            next[d] = &next[d] + c;
            next[d + 1] = &next[d + 1] + &(c * &lin);
        }
        factor = next;
    }
    let mismatches: Vec<Option<Mismatch>> = (0..=order)
        .into_par_iter()
        .map(|n| {
            let lhs = (0..=n.min(factor.len() - 1)).fold(SigmaPolynomial::zero(), |acc, m| {
                acc + &factor[m] * u.coeff(n - m)
            });
            let rhs = u.coeff(n).shift(folds);
            let diff = &lhs - &rhs;
            let first = diff.terms().next().map(|(m, _)| m.clone());
            first.map(|m| Mismatch {
                power: n,
                lhs: lhs.coeff(&m).to_string(),
                rhs: rhs.coeff(&m).to_string(),
                monomial: m,
            })
        })
        .collect();
    let mismatch = mismatches.into_iter().flatten().next();
    FunctionalEquationReport { order, folds, holds: mismatch.is_none(), mismatch }
}

/// The single-fold functional equation through `x^order`.
pub fn functional_equation_check(order: usize) -> bool {
    check_functional_equation(&u_series(order), 1).holds
}

/// `σ_0, ..., σ_n` of the cardinalities: the coefficients of `prod (1 + s_k t)`.
pub fn elementary_symmetric(cardinalities: &[u64]) -> Vec<BigInt> {
    let mut sigma = vec![BigInt::one()];
    for &s in cardinalities {
        sigma.push(BigInt::zero());
        for k in (1..sigma.len()).rev() {
            let lower = &sigma[k - 1] * BigInt::from(s);
            sigma[k] += lower;
        }
    }
    sigma
}

/// `U_0(σ), ..., U_n(σ)` at the elementary symmetric functions of the
/// cardinalities; the packing count is `sum_m U_m(σ) N^{n-m}`.
pub fn packing_polynomial(cardinalities: &[u64]) -> Vec<BigInt> {
    let n = cardinalities.len();
    let sigma = elementary_symmetric(cardinalities);
    let mut coeffs = vec![BigInt::one()];
    let gammas = GammaVectors::new(Integers, sigma.get(1).cloned().unwrap_or_default());
    for (m, c) in (1..=n).zip(gammas) {
        let value: BigInt = c
            .iter()
            .enumerate()
            .filter_map(|(k, g)| sigma.get(m + 1 + k).map(|s| s * g))
            .sum();
        coeffs.push(-value);
    }
    coeffs
}

/// `N^n U(1/N, σ_1, σ_2, ...)`, the number of packings of a generic family
/// with the given cardinalities in a group of order `N`.
pub fn packing_count(order: &BigInt, cardinalities: &[u64]) -> BigInt {
    packing_polynomial(cardinalities)
        .iter()
        .fold(BigInt::zero(), |acc, c| acc * order + c)
}

/// `U_0, ..., U_M` at `σ_1 = sigma1` and `σ_i = rule(i)` for `i >= 2`.
pub fn specialize_numeric(
    sigma1: &BigRational,
    rule: impl Fn(usize) -> BigRational,
    order: usize,
) -> Vec<BigRational> {
    let mut out = vec![BigRational::one()];
    for (n, c) in (1..=order).zip(GammaVectors::new(Rationals, sigma1.clone())) {
        let value: BigRational = c.iter().enumerate().map(|(k, g)| g * rule(n + 1 + k)).sum();
        out.push(-value);
    }
    out
}

/// Checks that `U` at `σ_k = C(n,k)` equals `prod_{j=1}^{n-1} (1 - jx)` through `x^{n+2}`.
pub fn singleton_identity_check(n: usize) -> bool {
    let order = n + 2;
    let sigma = elementary_symmetric(&vec![1; n]);
    let lhs: Vec<BigInt> = u_series(order)
        .coefficients()
        .iter()
        .map(|c| c.eval_integers(&sigma))
        .collect();
    let mut rhs = vec![BigInt::one()];
    for j in 1..n {
        let mut next = vec![BigInt::zero(); rhs.len() + 1];
        for (d, c) in rhs.iter().enumerate() {
            next[d] += c;
            next[d + 1] -= c * BigInt::from(j);
        }
        rhs = next;
    }
    rhs.resize(order + 1, BigInt::zero());
    rhs.truncate(order + 1);
    lhs == rhs
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    /// `α_0, ..., α_d` as decimal fractions.
    pub alphas: Vec<String>,
    /// `(n, residual)` over the whole range.
    pub residuals: Vec<(usize, String)>,
    pub all_zero: bool,
}

/// Solves `A x = b` exactly; errors when `A` is singular.
pub fn solve_rational(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Result<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let d = &f * &a[col][c];
                a[r][c] -= d;
            }
            let d = &f * &b[col];
            b[r] -= d;
        }
    }
    Ok((0..n).map(|k| &b[k] / &a[k][k]).collect())
}

/// Fits `[x^n] U(x, σ_1, P(2), P(3), ...) = sum_h α_h [x^{n+h}] U(x, σ_1, 1, 1, ...)`
/// on the first `d+1` values of `n_range` and reports residuals on all of it.
/// `p` lists the coefficients of `P`, constant term first.
pub fn polynomial_specialization_relation(
    p: &[BigRational],
    sigma1: &BigRational,
    n_range: RangeInclusive<usize>,
) -> Result<(Vec<BigRational>, RelationReport)> {
    let d = p.len().saturating_sub(1);
    let (lo, hi) = (*n_range.start(), *n_range.end());
    if lo == 0 || hi < lo + d {
        return Err(Error::Singular);
    }
    let eval_p = |s: usize| {
        let s = BigRational::from_integer(BigInt::from(s));
        p.iter().rev().fold(BigRational::zero(), |acc, c| acc * &s + c)
    };
    let left = specialize_numeric(sigma1, eval_p, hi);
    let basis = specialize_numeric(sigma1, |_| BigRational::one(), hi + d);
    let rows: Vec<Vec<BigRational>> =
        (lo..=lo + d).map(|n| (0..=d).map(|h| basis[n + h].clone()).collect()).collect();
    let rhs: Vec<BigRational> = (lo..=lo + d).map(|n| left[n].clone()).collect();
    let alphas = solve_rational(rows, rhs)?;
    let residuals: Vec<(usize, BigRational)> = (lo..=hi)
        .map(|n| {
            let fit: BigRational = alphas.iter().enumerate().map(|(h, a)| a * &basis[n + h]).sum();
            (n, &left[n] - fit)
        })
        .collect();
    let report = RelationReport {
        alphas: alphas.iter().map(ToString::to_string).collect(),
        all_zero: residuals.iter().all(|(_, r)| r.is_zero()),
        residuals: residuals.into_iter().map(|(n, r)| (n, r.to_string())).collect(),
    };
    Ok((alphas, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::{s_sequence, big_s_sequence};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s(i: u32) -> SigmaPolynomial {
        SigmaPolynomial::sigma(i)
    }

    fn c(v: i64) -> SigmaPolynomial {
        SigmaPolynomial::constant(v.into())
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn low_coefficients() {
        let u = u_series(3);
        assert_eq!(u.coeff(0), &c(1));
        assert_eq!(u.coeff(1), &-s(2));
        assert_eq!(u.coeff(2), &-((c(1) - s(1)) * s(3) + s(4)));
        assert_eq!(
            u.to_grouped_notation(),
            "1 - σ_2 x - ((1 - σ_1)σ_3 + σ_4) x^2 - ((2 - 3σ_1 + σ_1^2)σ_4 + (5 - 3σ_1)σ_5 + 3σ_6) x^3"
        );
    }

    #[test]
    fn structure_of_coefficients() {
        let u = u_series(8);
        for n in 1..=8 {
            let un = u.coeff(n);
            assert!(un.degree().unwrap() <= 2 * n as u32);
            for (m, _) in un.terms() {
                let top = *m.last().unwrap() as usize;
                let ones = m.iter().filter(|&&k| k == 1).count();
                assert_eq!(ones, m.len() - 1);
                assert!(top > n && top <= 2 * n && top + ones <= 2 * n);
            }
        }
    }

    #[test]
    fn gamma_rows() {
        let rows = gamma_vectors(&rat(0, 1), 5);
        let expect: [&[i64]; 5] = [&[1], &[1, 1], &[2, 5, 3], &[6, 26, 35, 15], &[24, 154, 340, 315, 105]];
        for (r, e) in rows.iter().zip(expect) {
            let e: Vec<BigRational> = e.iter().map(|&x| rat(x, 1)).collect();
            assert_eq!(r, &e);
        }
    }

    #[test]
    fn gamma_matches_triangles() {
        let sigma1 = rat(-7, 3);
        for (t, c) in triangles().zip(gamma_vectors(&sigma1, 9)) {
            for (k, g) in c.iter().enumerate() {
                let i = t.n() + 1 + k;
                let direct: BigRational = t
                    .row(i)
                    .unwrap()
                    .iter()
                    .enumerate()
                    .map(|(j, v)| BigRational::from_integer(v.clone()) * num_traits::pow(-sigma1.clone(), j))
                    .sum();
                assert_eq!(g, &direct);
            }
        }
    }

    #[test]
    fn functional_equation_single_and_triple() {
        let u = u_series(10);
        let r = check_functional_equation(&u, 1);
        assert!(r.holds, "{r:?}");
        let r = check_functional_equation(&u_series(6), 3);
        assert!(r.holds, "{r:?}");
        assert!(functional_equation_check(1));
    }

    #[test]
    fn functional_equation_detects_corruption() {
        let mut u = u_series(4);
        u.coeffs[3] = u.coeffs[3].clone() + s(5);
        let r = check_functional_equation(&u, 1);
        assert!(!r.holds);
        assert_eq!(r.mismatch.unwrap().power, 3);
    }

    #[test]
    fn elementary_symmetric_examples() {
        assert_eq!(elementary_symmetric(&[2, 2, 2]), ints(&[1, 6, 12, 8]));
        assert_eq!(elementary_symmetric(&[1, 1, 1, 1]), ints(&[1, 4, 6, 4, 1]));
        assert_eq!(elementary_symmetric(&[]), ints(&[1]));
    }

    #[test]
    fn packing_count_examples() {
        assert_eq!(packing_count(&8.into(), &[2, 2]), BigInt::from(32));
        assert_eq!(packing_count(&16.into(), &[2, 2, 2]), BigInt::from(1664));
        assert_eq!(packing_count(&5.into(), &[1, 1, 1]), BigInt::from(60));
        assert_eq!(packing_count(&5.into(), &[]), BigInt::one());
        assert_eq!(packing_polynomial(&[2, 2, 2]), ints(&[1, -12, 40, 0]));
    }

    #[test]
    fn packing_count_matches_symbolic_series() {
        let u = u_series(6);
        for cards in [vec![2u64, 3], vec![1, 4, 2], vec![3, 3, 2, 1], vec![2, 2, 2, 2, 2]] {
            let sigma = elementary_symmetric(&cards);
            let poly: Vec<BigInt> =
                (0..=cards.len()).map(|m| u.coeff(m).eval_integers(&sigma)).collect();
            assert_eq!(packing_polynomial(&cards), poly);
        }
    }

    #[test]
    fn sequences_from_specializations() {
        let s_vals = specialize_numeric(&rat(0, 1), |_| rat(-1, 1), 12);
        let big = specialize_numeric(&rat(-1, 1), |_| rat(-1, 1), 12);
        for (n, v) in s_sequence(12).iter().enumerate() {
            assert_eq!(s_vals[n + 1], BigRational::from_integer(v.clone()));
        }
        for (n, v) in big_s_sequence(12).iter().enumerate() {
            assert_eq!(big[n + 1], BigRational::from_integer(v.clone()));
        }
        // (1 + x) U(x, -1, -1, ...) = 2 U(x, 0, -1, -1, ...) - 1
        for n in 1..=12 {
            let lhs = &big[n] + &big[n - 1];
            assert_eq!(lhs, &s_vals[n] * rat(2, 1));
        }
    }

    #[test]
    fn rational_example() {
        for y in [rat(2, 3), rat(-5, 2), rat(7, 1)] {
            let alt = |i: usize| if i % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            let u = specialize_numeric(&y, alt, 12);
            assert_eq!(u[0], rat(1, 1));
            for n in 1..=12 {
                assert_eq!(u[n], -num_traits::pow(y.clone(), n - 1));
            }
        }
    }

    #[test]
    fn singleton_identity() {
        for n in 1..=8 {
            assert!(singleton_identity_check(n), "n = {n}");
        }
    }

    #[test]
    fn relation_fits() {
        let (alphas, report) =
            polynomial_specialization_relation(&[rat(1, 1)], &rat(0, 1), 1..=12).unwrap();
        assert_eq!(alphas, vec![rat(1, 1)]);
        assert!(report.all_zero);
        let (alphas, report) =
            polynomial_specialization_relation(&[rat(0, 1), rat(1, 1)], &rat(0, 1), 1..=12).unwrap();
        assert_eq!(alphas, vec![rat(1, 1), rat(1, 2)]);
        assert!(report.all_zero);
        let (alphas, report) = polynomial_specialization_relation(
            &[rat(0, 1), rat(0, 1), rat(1, 1)],
            &rat(-1, 1),
            1..=12,
        )
        .unwrap();
        assert_eq!(alphas, vec![rat(1, 2), rat(-1, 4), rat(1, 4)]);
        assert!(report.all_zero);
        assert_eq!(
            solve_rational(vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]], vec![rat(1, 1), rat(2, 1)]),
            Err(Error::Singular)
        );
    }

    #[test]
    fn numeric_matches_symbolic_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let u = u_series(8);
        for _ in 0..5 {
            let vals: Vec<BigRational> =
                (0..=16).map(|_| rat(rng.gen_range(-9..10), rng.gen_range(1..6))).collect();
            let symbolic = u.eval_with(|k| vals[k as usize].clone());
            let numeric = specialize_numeric(&vals[1], |i| vals[i].clone(), 8);
            assert_eq!(symbolic, numeric);
        }
    }

    proptest! {
        #[test]
        fn packing_count_symmetric_in_cards(mut cards in prop::collection::vec(1u64..5, 0..6), n in 1u64..40) {
            let a = packing_count(&n.into(), &cards);
            cards.reverse();
            prop_assert_eq!(a, packing_count(&n.into(), &cards));
        }

        #[test]
        fn singletons_give_falling_factorial(k in 0usize..8, n in 1u64..30) {
            let expect = (0..k as u64).fold(BigInt::one(), |acc, j| acc * (BigInt::from(n) - BigInt::from(j)));
            prop_assert_eq!(packing_count(&n.into(), &vec![1; k]), expect);
        }
    }
}
