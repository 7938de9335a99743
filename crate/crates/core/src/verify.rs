//! The cross-validation matrix: every closed formula in the crate checked
//! against an independent computation on small instances.

use num_bigint::BigInt;
use serde::Serialize;

use crate::brute::{
    alpha_via_boolean_moebius, count_packings_bruteforce, count_r_and_e, IntersectionGraph,
};
use crate::error::Result;
use crate::experiments::{find_period_mod_p, modular_alpha_check, ode_check_power_spec, s_mod_p};
use crate::genericity::{is_generic, make_generic_in_z, reduce_mod};
use crate::group::{FiniteGroup, SubsetFamily};
use crate::hyperforest::{
    enumerate_hypertrees, husimi_count, hyperforest_polynomial, moebius_all, moebius_closed_form,
};
use crate::series::{check_functional_equation, packing_count, packing_polynomial, singleton_identity_check, u_series};
use crate::triangle::{
    big_s_sequence, big_s_sequence_from_tables, first_row_stirling_check, s_sequence, s_sequence_from_tables,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// At most three subsets or vertices; runs in well under a second.
    Quick,
    /// Up to five subsets or vertices.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub level: Level,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

fn outcome(name: &str, result: Result<(bool, String)>) -> CheckOutcome {
    match result {
        Ok((passed, detail)) => CheckOutcome { name: name.to_string(), passed, detail },
        Err(e) => CheckOutcome { name: name.to_string(), passed: false, detail: format!("error: {e}") },
    }
}

fn cyclic_family(n: usize, sets: &[&[usize]]) -> Result<SubsetFamily> {
    SubsetFamily::new(&FiniteGroup::cyclic(n)?, sets.iter().map(|s| s.to_vec()).collect())
}

/// Generic families with at most `max_sets` subsets, each confirmed generic.
fn generic_families(max_sets: usize) -> Result<Vec<(String, SubsetFamily)>> {
    let mut out = vec![
        ("Z8 {0,1},{0,2}".to_string(), cyclic_family(8, &[&[0, 1], &[0, 2]])?),
        ("Z7 {0,1},{0,2}".to_string(), cyclic_family(7, &[&[0, 1], &[0, 2]])?),
        ("Z16 {0,1},{0,2},{0,4}".to_string(), cyclic_family(16, &[&[0, 1], &[0, 2], &[0, 4]])?),
    ];
    let cards: &[&[u64]] = &[&[3, 2], &[2, 2, 2], &[2, 2, 2, 2], &[2, 2, 2, 2, 1]];
    for (c, n) in cards.iter().zip([13u64, 17, 17, 16]) {
        if c.len() <= max_sets {
            let (family, _) = reduce_mod(&make_generic_in_z(c)?, n)?;
            out.push((format!("{c:?} reduced mod {n}"), family));
        }
    }
    out.retain(|(_, f)| f.len() <= max_sets);
    for (_, f) in &out {
        if !is_generic(f)?.generic {
            return Err(crate::Error::NotGenericOrTooSmall);
        }
    }
    Ok(out)
}

fn check_sequences(n: usize) -> Result<(bool, String)> {
    let ok = s_sequence(n) == s_sequence_from_tables(n) && big_s_sequence(n) == big_s_sequence_from_tables(n);
    Ok((ok, format!("s(n) and S(n) from γ-vectors and from full tables, n <= {n}")))
}

fn check_stirling(n: usize) -> Result<(bool, String)> {
    let ok = (1..=n).all(first_row_stirling_check);
    Ok((ok, format!("first row against Stirling numbers, n <= {n}")))
}

fn check_functional(order: usize, folds: u32) -> Result<(bool, String)> {
    let report = check_functional_equation(&u_series(order), folds);
    let detail = match &report.mismatch {
        None => format!("{folds}-fold equation through x^{order}"),
        Some(m) => format!("first mismatch at x^{} monomial {:?}: {} != {}", m.power, m.monomial, m.lhs, m.rhs),
    };
    Ok((report.holds, detail))
}

fn check_packing_counts(max_sets: usize) -> Result<(bool, String)> {
    let families = generic_families(max_sets)?;
    for (label, f) in &families {
        let formula = packing_count(&BigInt::from(f.group().order()), &f.cardinalities());
        let scan = count_packings_bruteforce(f)?;
        if formula != scan {
            return Ok((false, format!("{label}: formula {formula} != scan {scan}")));
        }
    }
    Ok((true, format!("{} generic families", families.len())))
}

fn check_boolean_moebius(max_sets: usize) -> Result<(bool, String)> {
    let mut families = generic_families(max_sets)?;
    families.push(("Z6 {0,1},{0,1}".into(), cyclic_family(6, &[&[0, 1], &[0, 1]])?));
    families.push(("Z5 {0,1,2},{0,2}".into(), cyclic_family(5, &[&[0, 1, 2], &[0, 2]])?));
    families.push(("Z6 {0,3},{0,2},{1}".into(), cyclic_family(6, &[&[0, 3], &[0, 2], &[1]])?));
    families.retain(|(_, f)| f.len() <= max_sets && f.group().order() <= 13);
    for (label, f) in &families {
        let a = alpha_via_boolean_moebius(f)?;
        let b = count_packings_bruteforce(f)?;
        if a != b {
            return Ok((false, format!("{label}: inversion {a} != scan {b}")));
        }
    }
    Ok((true, format!("{} families, generic and not", families.len())))
}

fn check_r_e() -> Result<(bool, String)> {
    let f = cyclic_family(8, &[&[0, 1], &[0, 2], &[0, 4]])?;
    let order = f.group().order() as u128;
    for g in IntersectionGraph::all(3) {
        let re = count_r_and_e(&f, &g)?;
        if re.r != re.e * order.pow(re.components as u32) {
            return Ok((false, format!("graph {:?}: R = {}, E = {}", g.edges(), re.r, re.e)));
        }
    }
    Ok((true, "#R = #E N^c for all graphs on 3 vertices".into()))
}

fn check_moebius(n: usize) -> Result<(bool, String)> {
    let mut count = 0;
    for k in 1..=n {
        for (f, mu) in moebius_all(k)? {
            if mu != moebius_closed_form(&f) {
                return Ok((false, format!("μ({f}) = {mu} on {k} vertices")));
            }
            count += 1;
        }
    }
    Ok((true, format!("{count} hyperforests on at most {n} vertices")))
}

fn check_hyperforest_sum(n: usize) -> Result<(bool, String)> {
    let samples: &[&[u64]] = &[&[2, 2], &[3, 1], &[2, 2, 2], &[3, 2, 1], &[2, 3, 2, 1], &[1, 2, 2, 3, 2]];
    let mut count = 0;
    for cards in samples.iter().filter(|c| c.len() <= n) {
        let hf = hyperforest_polynomial(cards)?;
        let mut pp = packing_polynomial(cards);
        pp.reverse();
        if hf != pp {
            return Ok((false, format!("cards {cards:?}")));
        }
        count += 1;
    }
    Ok((true, format!("{count} cardinality vectors, as polynomials in N")))
}

fn check_husimi(n: usize) -> Result<(bool, String)> {
    for v in 1..=n {
        for k in 1..v {
            let listed = enumerate_hypertrees(v, k)?.len();
            if BigInt::from(listed) != husimi_count(v, k) {
                return Ok((false, format!("n = {v}, k = {k}: {listed} listed")));
            }
        }
    }
    Ok((true, format!("hypertree counts, n <= {n}")))
}

fn check_modular(primes: &[u64]) -> Result<(bool, String)> {
    for &p in &[2, 3, 5] {
        let per = find_period_mod_p(p, 10_000)?;
        let s = s_mod_p(p, per.preperiod + 3 * per.period)?;
        if (per.preperiod..per.preperiod + 2 * per.period).any(|k| s[k] != s[k + per.period]) {
            return Ok((false, format!("period replay fails for p = {p}")));
        }
    }
    for &p in primes {
        if !modular_alpha_check(p)?.agree {
            return Ok((false, format!("constants disagree mod {p}")));
        }
    }
    Ok((true, format!("periods for p = 2, 3, 5; constants mod {primes:?}")))
}

fn check_ode(cases: &[(usize, usize, usize)]) -> Result<(bool, String)> {
    for &(r, mx, mz) in cases {
        let rep = ode_check_power_spec(r, mx, mz);
        if let Some(m) = rep.mismatch {
            return Ok((false, format!("r = {r}: x^{} y^{} z^{}", m.x_degree, m.y_degree, m.z_degree)));
        }
    }
    Ok((true, format!("{} truncations", cases.len())))
}

fn check_singletons(n: usize) -> Result<(bool, String)> {
    Ok(((1..=n).all(singleton_identity_check), format!("singleton families, n <= {n}")))
}

/// Runs every check at the given level. The result is deterministic.
pub fn verify(level: Level) -> VerificationReport {
    let quick = level == Level::Quick;
    let n = if quick { 3 } else { 5 };
    let mut checks = vec![
        outcome("sequences", check_sequences(if quick { 10 } else { 30 })),
        outcome("stirling-first-row", check_stirling(if quick { 6 } else { 12 })),
        outcome("functional-equation", check_functional(if quick { 6 } else { 10 }, 1)),
        outcome("packing-count", check_packing_counts(n)),
        outcome("boolean-moebius", check_boolean_moebius(n.min(4))),
        outcome("r-equals-e-n-c", check_r_e()),
        outcome("hyperforest-moebius", check_moebius(n)),
        outcome("hyperforest-sum", check_hyperforest_sum(n)),
        outcome("husimi", check_husimi(n + 1)),
        outcome("singletons", check_singletons(n + 1)),
        outcome("modular", check_modular(if quick { &[5] } else { &[5, 7, 11] })),
        outcome("ode", check_ode(if quick { &[(0, 3, 6)] } else { &[(0, 4, 8), (1, 3, 8), (2, 4, 10)] })),
    ];
    if !quick {
        checks.push(outcome("functional-equation-3-fold", check_functional(6, 3)));
    }
    let passed = checks.iter().all(|c| c.passed);
    VerificationReport { level, passed, checks }
}
