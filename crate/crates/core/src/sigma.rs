//! Sparse polynomials in `σ_1, σ_2, ...` with big-integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// A monomial: the sorted multiset of σ-indices, each at least 1.
pub type Monomial = Vec<u32>;

/// Graded by `deg σ_i = i`. No zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SigmaPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SigmaPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(Vec::new(), c)
    }

    /// `σ_i`, with `σ_0 = 1`.
    pub fn sigma(i: u32) -> Self {
        if i == 0 {
            Self::one()
        } else {
            Self::monomial(vec![i], BigInt::one())
        }
    }

    /// `c` times the product of `σ_k` over `indices` (zeros are dropped as `σ_0 = 1`).
    pub fn monomial(mut indices: Vec<u32>, c: BigInt) -> Self {
        let mut p = Self::zero();
        indices.retain(|&k| k != 0);
        indices.sort_unstable();
        p.add_term(indices, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, monomial: &[u32]) -> BigInt {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    /// Largest graded degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn add_term(&mut self, monomial: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        debug_assert!(monomial.windows(2).all(|w| w[0] <= w[1]));
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Evaluates at `σ_k = values(k)`.
    pub fn eval_with(&self, mut values: impl FnMut(u32) -> BigRational) -> BigRational {
        let mut cache: HashMap<u32, BigRational> = HashMap::new();
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for k in m {
                let v = cache.entry(*k).or_insert_with(|| values(*k));
                term *= &*v;
            }
            total += term;
        }
        total
    }

    /// Evaluates at integer values `σ_k = values[k]` (missing entries are zero).
    pub fn eval_integers(&self, values: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter().fold(c.clone(), |acc, &k| {
                    acc * values.get(k as usize).cloned().unwrap_or_default()
                })
            })
            .sum()
    }

    /// Replaces every `σ_k` by `image(k)` and expands.
    pub fn substitute(&self, mut image: impl FnMut(u32) -> SigmaPolynomial) -> Self {
        let mut powers: HashMap<(u32, u32), SigmaPolynomial> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            let mut k = 0;
            while k < m.len() {
                let idx = m[k];
                let run = m[k..].iter().take_while(|&&x| x == idx).count() as u32;
                let base = powers.entry((idx, 1)).or_insert_with(|| image(idx)).clone();
                let power = powers.entry((idx, run)).or_insert_with(|| base.pow(run));
                term = &term * &*power;
                k += run as usize;
            }
            out = out + term;
        }
        out
    }

    /// The substitution `σ_m ↦ sum_{j=0}^{k} C(k,j) σ_{m-j}` with `σ_0 = 1`.
    pub fn shift(&self, folds: u32) -> Self {
        let binom: Vec<BigInt> = binomial_row(folds);
        self.substitute(|m| {
            let mut p = Self::zero();
            for (j, b) in binom.iter().enumerate() {
                let j = j as u32;
                if j <= m {
                    p = p + Self::sigma(m - j).scale(b);
                }
            }
            p
        })
    }

    /// Terms whose monomials contain exactly one index `>= 2` besides any
    /// number of `σ_1` factors, grouped by that index: `σ_i ↦ P_i(σ_1)` as
    /// coefficient lists. Returns `None` for other shapes.
    pub fn split_by_top_index(&self) -> Option<BTreeMap<u32, BTreeMap<usize, BigInt>>> {
        let mut out: BTreeMap<u32, BTreeMap<usize, BigInt>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let ones = m.iter().take_while(|&&k| k == 1).count();
            let rest = &m[ones..];
            if rest.len() != 1 {
                return None;
            }
            out.entry(rest[0]).or_default().insert(ones, c.clone());
        }
        Some(out)
    }
}

pub(crate) fn binomial_row(k: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..k {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    row
}

impl Add for SigmaPolynomial {
    type Output = SigmaPolynomial;
    fn add(mut self, rhs: SigmaPolynomial) -> SigmaPolynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add for &SigmaPolynomial {
    type Output = SigmaPolynomial;
    fn add(self, rhs: &SigmaPolynomial) -> SigmaPolynomial {
        self.clone() + rhs.clone()
    }
}

impl Neg for SigmaPolynomial {
    type Output = SigmaPolynomial;
    fn neg(self) -> SigmaPolynomial {
        Self { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Sub for SigmaPolynomial {
    type Output = SigmaPolynomial;
    fn sub(self, rhs: SigmaPolynomial) -> SigmaPolynomial {
        self + (-rhs)
    }
}

impl Sub for &SigmaPolynomial {
    type Output = SigmaPolynomial;
    fn sub(self, rhs: &SigmaPolynomial) -> SigmaPolynomial {
        self.clone() - rhs.clone()
    }
}

impl Mul for &SigmaPolynomial {
    type Output = SigmaPolynomial;
    fn mul(self, rhs: &SigmaPolynomial) -> SigmaPolynomial {
        let mut out = SigmaPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut m = Vec::with_capacity(a.len() + b.len());
                let (mut p, mut q) = (0, 0);
                while p < a.len() || q < b.len() {
                    if q == b.len() || (p < a.len() && a[p] <= b[q]) {
                        m.push(a[p]);
                        p += 1;
                    } else {
                        m.push(b[q]);
                        q += 1;
                    }
                }
                out.add_term(m, x * y);
            }
        }
        out
    }
}

impl Mul for SigmaPolynomial {
    type Output = SigmaPolynomial;
    fn mul(self, rhs: SigmaPolynomial) -> SigmaPolynomial {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &[u32]) -> fmt::Result {
    let mut k = 0;
    while k < m.len() {
        let run = m[k..].iter().take_while(|&&x| x == m[k]).count();
        write!(f, "σ_{}", m[k])?;
        if run > 1 {
            write!(f, "^{run}")?;
        }
        k += run;
    }
    Ok(())
}

impl fmt::Display for SigmaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // degree-ascending, then lexicographic
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (m.iter().sum::<u32>(), (*m).clone()));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_empty() || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write_monomial(f, m)?;
        }
        Ok(())
    }
}

/// JSON-friendly view: `[{"monomial": [..], "coefficient": ".."}]`.
#[derive(Serialize)]
pub struct TermView {
    pub monomial: Monomial,
    pub coefficient: String,
}

impl SigmaPolynomial {
    pub fn to_view(&self) -> Vec<TermView> {
        self.terms
            .iter()
            .map(|(m, c)| TermView { monomial: m.clone(), coefficient: c.to_string() })
            .collect()
    }
}
