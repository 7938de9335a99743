//! Genericity of subset families.
//!
//! A family is generic when no product `g_{i_1} ... g_{i_k}` (k >= 2, distinct
//! indices, `g_i` drawn from `D_i = S_i^{-1} S_i \ {e}`) equals the identity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SubsetFamily};

/// Default cap on the product of the `|D_i|`.
pub const DEFAULT_GENERICITY_BUDGET: u128 = 10_000_000;

/// A product of non-identity difference elements equal to the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Subset indices in multiplication order.
    pub ordering: Vec<usize>,
    /// `choices[k]` lies in `D_{ordering[k]}`.
    pub choices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericityReport {
    pub generic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl GenericityReport {
    fn from_witness(witness: Option<Witness>) -> Self {
        Self { generic: witness.is_none(), witness }
    }
}

/// Which enumeration to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Subset enumeration for abelian groups, ordered products otherwise.
    Auto,
    /// Every ordering of every index subset.
    Ordered,
    /// Index subsets only; abelian groups only.
    Unordered,
}

/// Decides genericity with the default budget.
pub fn is_generic(family: &SubsetFamily) -> Result<GenericityReport> {
    is_generic_with(family, Strategy::Auto, DEFAULT_GENERICITY_BUDGET)
}

pub fn is_generic_with(
    family: &SubsetFamily,
    strategy: Strategy,
    budget: u128,
) -> Result<GenericityReport> {
    let g = family.group();
    let diffs: Vec<Vec<usize>> = family
        .sets()
        .iter()
        .map(|s| {
            g.difference_set(s)
                .map(|d| d.into_iter().filter(|&x| x != g.identity()).collect())
        })
        .collect::<Result<_>>()?;
    let needed = diffs
        .iter()
        .filter(|d| !d.is_empty())
        .fold(1u128, |acc, d| acc.saturating_mul(d.len() as u128));
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let ordered = match strategy {
        Strategy::Auto => !g.is_abelian(),
        Strategy::Ordered => true,
        Strategy::Unordered if g.is_abelian() => false,
        Strategy::Unordered => return Err(Error::NotAbelian),
    };
    let witness = if ordered {
        ordered_witness(g, &diffs)
    } else {
        unordered_witness(g, &diffs)
    };
    Ok(GenericityReport::from_witness(witness))
}

fn unordered_witness(g: &FiniteGroup, diffs: &[Vec<usize>]) -> Option<Witness> {
    fn go(
        g: &FiniteGroup,
        diffs: &[Vec<usize>],
        k: usize,
        acc: usize,
        picked: &mut Vec<(usize, usize)>,
    ) -> bool {
        if k == diffs.len() {
            return false;
        }
        if go(g, diffs, k + 1, acc, picked) {
            return true;
        }
        for &d in &diffs[k] {
            let next = g.mul(acc, d);
            picked.push((k, d));
            if (picked.len() >= 2 && next == g.identity()) || go(g, diffs, k + 1, next, picked) {
                return true;
            }
            picked.pop();
        }
        false
    }
    let mut picked = Vec::new();
    go(g, diffs, 0, g.identity(), &mut picked).then(|| Witness {
        ordering: picked.iter().map(|p| p.0).collect(),
        choices: picked.iter().map(|p| p.1).collect(),
    })
}

fn ordered_witness(g: &FiniteGroup, diffs: &[Vec<usize>]) -> Option<Witness> {
    // g_1 g_2 ... g_k = e iff its cyclic rotations are, so the first factor
    // can be taken from the smallest index of the subset.
    fn extend(
        g: &FiniteGroup,
        diffs: &[Vec<usize>],
        first: usize,
        used: &mut [bool],
        acc: usize,
        picked: &mut Vec<(usize, usize)>,
    ) -> bool {
        for i in first + 1..diffs.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            for &d in &diffs[i] {
                let next = g.mul(acc, d);
                picked.push((i, d));
                if next == g.identity() || extend(g, diffs, first, used, next, picked) {
                    return true;
                }
                picked.pop();
            }
            used[i] = false;
        }
        false
    }
    let n = diffs.len();
    let mut used = vec![false; n];
    let mut picked = Vec::new();
    for first in 0..n {
        for &d in &diffs[first] {
            picked.clear();
            picked.push((first, d));
            used.iter_mut().for_each(|u| *u = false);
            if extend(g, diffs, first, &mut used, d, &mut picked) {
                return Some(Witness {
                    ordering: picked.iter().map(|p| p.0).collect(),
                    choices: picked.iter().map(|p| p.1).collect(),
                });
            }
        }
    }
    None
}

/// Checks that a witness really is one: distinct indices, at least two
/// factors, every factor a non-identity element of its difference set and
/// the ordered product the identity.
pub fn verify_witness(family: &SubsetFamily, w: &Witness) -> Result<bool> {
    let g = family.group();
    if w.ordering.len() < 2 || w.ordering.len() != w.choices.len() {
        return Ok(false);
    }
    let mut seen = vec![false; family.len()];
    let mut acc = g.identity();
    for (&i, &d) in w.ordering.iter().zip(&w.choices) {
        if i >= family.len() || std::mem::replace(&mut seen[i], true) {
            return Ok(false);
        }
        let diff = g.difference_set(&family.sets()[i])?;
        if d == g.identity() || diff.binary_search(&d).is_err() {
            return Ok(false);
        }
        acc = g.mul(acc, d);
    }
    Ok(acc == g.identity())
}

/// The generic family in `Z` with the given cardinalities:
/// `S_i = {0, k_i, ..., (s_i - 1) k_i}` with `k_1 = 1` and
/// `k_i = 1 + sum_{j<i} (s_j - 1) k_j`.
pub fn make_generic_in_z(cardinalities: &[u64]) -> Result<Vec<Vec<i64>>> {
    let mut span: i64 = 0;
    let mut out = Vec::with_capacity(cardinalities.len());
    for (i, &s) in cardinalities.iter().enumerate() {
        if s == 0 {
            return Err(Error::ZeroCardinality(i));
        }
        let step = span.checked_add(1).ok_or(Error::Overflow)?;
        let s = i64::try_from(s).map_err(|_| Error::Overflow)?;
        let set = (0..s)
            .map(|m| m.checked_mul(step).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        span = (s - 1)
            .checked_mul(step)
            .and_then(|w| span.checked_add(w))
            .ok_or(Error::Overflow)?;
        out.push(set);
    }
    Ok(out)
}

/// `sum_i (max S_i - min S_i)`; reduction modulo any `N > 2 * span` keeps a
/// family built by [`make_generic_in_z`] generic.
pub fn span_in_z(sets: &[Vec<i64>]) -> i64 {
    sets.iter()
        .map(|s| s.iter().max().unwrap_or(&0) - s.iter().min().unwrap_or(&0))
        .sum()
}

/// Reduces an integer family modulo `n` and decides genericity of the result
/// directly.
pub fn reduce_mod(sets: &[Vec<i64>], n: u64) -> Result<(SubsetFamily, bool)> {
    let group = FiniteGroup::cyclic(usize::try_from(n).map_err(|_| Error::Overflow)?)?;
    let modulus = n as i64;
    let mut reduced = Vec::with_capacity(sets.len());
    for (index, s) in sets.iter().enumerate() {
        let mut r: Vec<usize> = s.iter().map(|&x| x.rem_euclid(modulus) as usize).collect();
        r.sort_unstable();
        r.dedup();
        if r.len() != s.len() {
            return Err(Error::Collapse { index, modulus: n });
        }
        reduced.push(r);
    }
    let family = SubsetFamily::new(&group, reduced)?;
    let generic = is_generic(&family)?.generic;
    Ok((family, generic))
}
