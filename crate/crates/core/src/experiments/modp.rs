//! `s(n)` modulo a prime, its eventual period, and the comparison of
//! `(1 + x^{p-1}) sum s(n) x^n` with the reference constants `α_n`.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::IntegersModP;

/// The ten reference constants `α_0, ..., α_9` as fractions.
pub const REFERENCE_ALPHAS: [&str; 10] = [
    "-1",
    "2",
    "0",
    "1/3",
    "5/18",
    "149/540",
    "553/2025",
    "1849741/6804000",
    "775167119/2857680000",
    "325214957371/1200225600000",
];

pub fn reference_alphas() -> Vec<BigRational> {
    REFERENCE_ALPHAS
        .iter()
        .map(|s| s.parse().expect("well-formed constant"))
        .collect()
}

fn check_prime(p: u64) -> Result<()> {
    let prime = (2..=97).contains(&p) && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if prime {
        Ok(())
    } else {
        Err(Error::NotAPrime(p))
    }
}

/// γ-vectors at `σ_1 = 0` with entries summed by index class mod `p`.
///
/// The recurrence for `γ_i(n+1)` only sees `i mod p` through its
/// coefficients, so the folded vector evolves on its own and lives in a
/// finite set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FoldedGamma {
    p: u64,
    classes: Vec<u64>,
}

impl FoldedGamma {
    /// The state at `n = 1`, where only `γ_2 = 1` is nonzero.
    pub fn initial(p: u64) -> Result<Self> {
        check_prime(p)?;
        let mut classes = vec![0; p as usize];
        classes[(2 % p) as usize] = 1;
        Ok(Self { p, classes })
    }

    pub fn step(&self) -> Self {
        let p = self.p as i64;
        let m = self.p as usize;
        let classes = (0..m)
            .map(|r| {
                let a = (r as i64 - 2).rem_euclid(p) as u64;
                let b = (r as i64 - 3).rem_euclid(p) as u64;
                (a * self.classes[(r + m - 1) % m] + b * self.classes[(r + m - 2) % m]) % self.p
            })
            .collect();
        Self { p: self.p, classes }
    }

    /// `s(n) mod p` for the level this state describes.
    pub fn residue(&self) -> u64 {
        self.classes.iter().sum::<u64>() % self.p
    }

    pub fn classes(&self) -> &[u64] {
        &self.classes
    }
}

/// `s(1), ..., s(max_n)` reduced mod `p`.
pub fn s_mod_p(p: u64, max_n: usize) -> Result<Vec<u64>> {
    let mut state = FoldedGamma::initial(p)?;
    let mut out = Vec::with_capacity(max_n);
    for _ in 0..max_n {
        out.push(state.residue());
        state = state.step();
    }
    Ok(out)
}

/// Eventual period of an orbit: states `x_k` with `k >= preperiod` satisfy
/// `x_{k + period} = x_k`, and both numbers are minimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Period {
    pub preperiod: usize,
    pub period: usize,
}

/// Iterates `step` from `initial` until a state repeats. Indices count steps,
/// so `initial` is state 0.
pub fn find_period<S, F>(initial: S, mut step: F, max_steps: usize) -> Result<Period>
where
    S: Clone + Eq + Hash,
    F: FnMut(&S) -> S,
{
    let mut seen = HashMap::new();
    let mut state = initial;
    for k in 0..=max_steps {
        if let Some(&first) = seen.get(&state) {
            return Ok(Period { preperiod: first, period: k - first });
        }
        let next = step(&state);
        seen.insert(state, k);
        state = next;
    }
    Err(Error::PeriodUndetermined(max_steps))
}

/// Period of the folded γ-state mod `p`. State `k` describes `s(k + 1)`.
pub fn find_period_mod_p(p: u64, max_n: usize) -> Result<Period> {
    find_period(FoldedGamma::initial(p)?, FoldedGamma::step, max_n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientCheck {
    pub power: usize,
    pub computed: u64,
    pub expected: u64,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularAlphaReport {
    pub p: u64,
    pub period: Period,
    /// `α_0, ..., α_{p-2}` reduced mod `p`.
    pub alphas_mod_p: Vec<u64>,
    pub coefficients: Vec<CoefficientCheck>,
    pub agree: bool,
}

fn rational_mod_p(q: &BigRational, ring: &IntegersModP, index: usize) -> Result<u64> {
    let num = ring.reduce_big(q.numer());
    let den = ring.reduce_big(q.denom());
    let inv = ring.inv(den).ok_or(Error::NonInvertible { index, p: ring.p })?;
    Ok(num * inv % ring.p)
}

/// Compares the coefficients of `(1 + x^{p-1}) sum_{n>=1} s(n) x^n` mod `p`
/// with `x + sum_{n=0}^{p-2} α_n x^{p-n}`.
///
/// Coefficients are checked up to the power where the left side has become
/// periodic and a full period has been seen, so agreement there is agreement
/// of the whole series.
pub fn modular_alpha_check(p: u64) -> Result<ModularAlphaReport> {
    check_prime(p)?;
    let alphas = reference_alphas();
    if p - 1 > alphas.len() as u64 {
        return Err(Error::TooFewAlphas(p));
    }
    let ring = IntegersModP::new(p);
    let alphas_mod_p = alphas[..(p - 1) as usize]
        .iter()
        .enumerate()
        .map(|(i, a)| rational_mod_p(a, &ring, i))
        .collect::<Result<Vec<_>>>()?;

    let period = find_period_mod_p(p, 100_000)?;
    let shift = (p - 1) as usize;
    // s(n) is periodic for n > preperiod; c_m involves s(m - p + 1)
    let last = period.preperiod + shift + 2 * period.period + 1;
    let s = s_mod_p(p, last)?;
    let s_at = |n: isize| if n >= 1 { s[(n - 1) as usize] } else { 0 };

    let coefficients: Vec<CoefficientCheck> = (1..=last)
        .map(|m| {
            let computed = (s_at(m as isize) + s_at(m as isize - shift as isize)) % p;
            let expected = match m {
                1 => 1,
                m if m as u64 <= p => alphas_mod_p[p as usize - m],
                _ => 0,
            };
            CoefficientCheck { power: m, computed, expected, agree: computed == expected }
        })
        .collect();
    let agree = coefficients.iter().all(|c| c.agree);
    Ok(ModularAlphaReport { p, period, alphas_mod_p, coefficients, agree })
}

/// Exact `s(n) mod p` from big integers, for callers that already hold them.
pub fn reduce_sequence(values: &[BigInt], p: u64) -> Vec<u64> {
    let ring = IntegersModP::new(p);
    values.iter().map(|v| ring.reduce_big(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::s_sequence;

    #[test]
    fn small_primes_match_the_reduced_sequence() {
        assert_eq!(s_mod_p(2, 10).unwrap(), vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(s_mod_p(3, 10).unwrap(), vec![1, 2, 1, 1, 2, 2, 1, 1, 2, 2]);
    }

    #[test]
    fn folded_recurrence_agrees_with_big_integers() {
        let s = s_sequence(20);
        for p in [2, 3, 5, 7, 11, 13, 97] {
            assert_eq!(s_mod_p(p, 20).unwrap(), reduce_sequence(&s, p), "p = {p}");
        }
    }

    #[test]
    fn rejects_non_primes() {
        assert_eq!(s_mod_p(9, 3), Err(Error::NotAPrime(9)));
        assert_eq!(s_mod_p(101, 3), Err(Error::NotAPrime(101)));
        assert_eq!(modular_alpha_check(13).unwrap_err(), Error::TooFewAlphas(13));
    }

    #[test]
    fn detected_period_replays() {
        for p in [2, 3, 5, 7, 11, 13] {
            let per = find_period_mod_p(p, 10_000).unwrap();
            assert!(per.period >= 1);
            let total = per.preperiod + 3 * per.period + 1;
            let s = s_mod_p(p, total).unwrap();
            for k in per.preperiod..per.preperiod + 2 * per.period {
                assert_eq!(s[k], s[k + per.period], "p = {p}, k = {k}");
            }
        }
    }

    #[test]
    fn period_of_a_rho_shaped_orbit() {
        // 0 -> 1 -> 2 -> 3 -> 4 -> 2
        let per = find_period(0u32, |&x| if x == 4 { 2 } else { x + 1 }, 100).unwrap();
        assert_eq!(per, Period { preperiod: 2, period: 3 });
        assert_eq!(
            find_period(0u64, |&x| x + 1, 50),
            Err(Error::PeriodUndetermined(50))
        );
    }

    #[test]
    fn known_constants_agree_mod_small_primes() {
        for p in [5, 7, 11] {
            let report = modular_alpha_check(p).unwrap();
            let bad: Vec<_> = report.coefficients.iter().filter(|c| !c.agree).collect();
            assert!(report.agree, "p = {p}: {bad:?}");
        }
    }

    #[test]
    fn p_three_by_hand() {
        // x + 2x^2 - x^3 against (1 + x^2)(x + 2x^2 + x^3 + x^4 + ...) mod 3
        let report = modular_alpha_check(3).unwrap();
        assert_eq!(report.alphas_mod_p, vec![2, 2]);
        let first: Vec<u64> = report.coefficients.iter().take(4).map(|c| c.computed).collect();
        assert_eq!(first, vec![1, 2, 2, 0]);
        assert!(report.agree);
    }

    #[test]
    fn fractions_reduce_through_inverses() {
        let ring = IntegersModP::new(7);
        let q: BigRational = "5/18".parse().unwrap();
        let good = rational_mod_p(&q, &ring, 4).unwrap();
        assert_eq!(good * 18 % 7, 5);
        let zero_den = BigRational::new(BigInt::from(1), BigInt::from(14));
        assert_eq!(
            rational_mod_p(&zero_den, &ring, 3),
            Err(Error::NonInvertible { index: 3, p: 7 })
        );
    }
}
