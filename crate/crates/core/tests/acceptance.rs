use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use packings::brute::{
    alpha_via_boolean_moebius, check_extension_bounds, complement_covering_count, complement_family,
    count_coverings_bruteforce, count_packings_bruteforce, count_r_and_e, tight_covering_family,
    IntersectionGraph,
};
use packings::cli::dispatch;
use packings::experiments::{asymptotic_report, find_period_mod_p, modular_alpha_check, s_mod_p};
use packings::genericity::{is_generic, make_generic_in_z, reduce_mod};
use packings::hyperforest::{
    alpha_via_hyperforest_sum, enumerate_hypertrees, moebius_all, moebius_closed_form,
    moebius_recursive, weighted_hypertree_sum, Hyperforest,
};
use packings::series::{
    check_functional_equation, gamma_vectors, packing_count, polynomial_specialization_relation,
    singleton_identity_check, specialize_numeric, u_series,
};
use packings::sigma::SigmaPolynomial;
use packings::triangle::{
    big_s_sequence, q_specialize, s_sequence, strip_leading_zeros, triangle, weighted_sum_sequence, WeightedSum,
};
use packings::{FiniteGroup, SubsetFamily};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn cyclic(n: usize, sets: &[&[usize]]) -> SubsetFamily {
    SubsetFamily::new(&FiniteGroup::cyclic(n).unwrap(), sets.iter().map(|s| s.to_vec()).collect()).unwrap()
}

/// Unsigned Stirling numbers of the first kind from `x(x+1)...(x+n-1)`.
fn rising_coefficients(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for k in 0..n {
        let mut next = vec![BigInt::zero(); c.len() + 1];
        for (d, v) in c.iter().enumerate() {
            next[d + 1] += v;
            next[d] += v * BigInt::from(k);
        }
        c = next;
    }
    c
}

/// Stirling numbers of the second kind by the triangular recurrence.
fn stirling2(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for j in 1..=m {
            let keep = if j < row.len() { &row[j] * BigInt::from(j) } else { BigInt::zero() };
            next[j] = keep + &row[j - 1];
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn criterion_families() -> Vec<(String, SubsetFamily, Option<i64>)> {
    let z2z9 = FiniteGroup::product(&[2, 9]).unwrap();
    let el = |a: usize, b: usize| z2z9.from_coords(&[a, b]).unwrap();
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let t = s3.from_permutation(&[1, 0, 2]).unwrap();
    let c = s3.from_permutation(&[1, 2, 0]).unwrap();
    let mut out = vec![
        ("Z8 {0,1},{0,2}".to_string(), cyclic(8, &[&[0, 1], &[0, 2]]), Some(32)),
        ("Z16 {0,1},{0,2},{0,4}".to_string(), cyclic(16, &[&[0, 1], &[0, 2], &[0, 4]]), Some(1664)),
        (
            "Z2xZ9 {(0,0),(1,0)},{(0,0),(0,1)}".to_string(),
            SubsetFamily::new(&z2z9, vec![vec![el(0, 0), el(1, 0)], vec![el(0, 0), el(0, 1)]]).unwrap(),
            None,
        ),
        (
            "Z2xZ9 {(0,0),(1,0)},{(0,0),(0,1)},{(0,0),(0,3)}".to_string(),
            SubsetFamily::new(
                &z2z9,
                vec![vec![el(0, 0), el(1, 0)], vec![el(0, 0), el(0, 1)], vec![el(0, 0), el(0, 3)]],
            )
            .unwrap(),
            None,
        ),
        ("Z7 {0,1},{0,2}".to_string(), cyclic(7, &[&[0, 1], &[0, 2]]), None),
        (
            "S3 {e,(01)},{e,(012)}".to_string(),
            SubsetFamily::new(&s3, vec![vec![0, t], vec![0, c]]).unwrap(),
            None,
        ),
        ("Z5 {0},{0},{0}".to_string(), cyclic(5, &[&[0], &[0], &[0]]), Some(60)),
    ];
    for (cards, n) in [(&[3u64, 2][..], 13u64), (&[2, 2, 2, 2][..], 17), (&[3, 2, 2][..], 23)] {
        let (family, _) = reduce_mod(&make_generic_in_z(cards).unwrap(), n).unwrap();
        out.push((format!("{cards:?} from Z, mod {n}"), family, None));
    }
    out
}

fn c1_triangle() -> Verdict {
    let known: [&str; 6] = [
        "1",
        "1 1\n1",
        "2 3 1\n5 3\n3",
        "6 11 6 1\n26 26 6\n35 15\n15",
        "24 50 35 10 1\n154 200 80 10\n340 255 45\n315 105\n105",
        "120 274 225 85 15 1\n1044 1604 855 190 15\n3304 3325 1050 105\n4900 2940 420\n3465 945\n945",
    ];
    for (k, expected) in (1..=6).zip(known) {
        let out = dispatch(["packings", "triangle", "--n", &k.to_string()]);
        ensure(out.code == 0, || format!("exit code {} for n = {k}", out.code))?;
        ensure(out.stdout.trim_end() == expected, || format!("T({k}) differs:\n{}", out.stdout))?;
    }
    Ok("T(1)..T(6) reproduced".into())
}

fn c2_stirling() -> Verdict {
    for n in 1..=12 {
        let t = triangle(n);
        let row = t.row(n + 1).ok_or("missing first row")?;
        let oracle = rising_coefficients(n);
        ensure(row == &oracle[1..], || format!("first row of T({n}) = {row:?}"))?;
    }
    Ok("first rows equal |S_1(n, j+1)| for n <= 12".into())
}

fn c3_sequences() -> Verdict {
    let known = [1i64, 2, 10, 82, 938, 13778, 247210, 5240338, 128149802, 3551246162];
    let s = s_sequence(15);
    ensure(s[..10].iter().zip(known).all(|(a, b)| *a == big(b)), || format!("s = {:?}", &s[..10]))?;
    let rows: [&[i64]; 5] = [&[1], &[1, 1], &[2, 5, 3], &[6, 26, 35, 15], &[24, 154, 340, 315, 105]];
    for (c, r) in gamma_vectors(&rat(0, 1), 5).iter().zip(rows) {
        let r: Vec<BigRational> = r.iter().map(|&x| rat(x, 1)).collect();
        ensure(c == &r, || format!("c_n(0) = {c:?}"))?;
    }
    let big_s = big_s_sequence(15);
    for n in 2..=15 {
        ensure(big(2) * &s[n - 1] == &big_s[n - 2] + &big_s[n - 1], || format!("2s(n) identity at n = {n}"))?;
    }
    Ok("s(1..10), c_1(0)..c_5(0), 2s(n) = S(n-1) + S(n) for n <= 15".into())
}

fn c4_useries() -> Verdict {
    let s = SigmaPolynomial::sigma;
    let c = |v: i64| SigmaPolynomial::constant(big(v));
    let known = [
        c(1),
        -s(2),
        -((c(1) - s(1)) * s(3) + s(4)),
        -((c(2) - c(3) * s(1) + s(1) * s(1)) * s(4) + (c(5) - c(3) * s(1)) * s(5) + c(3) * s(6)),
        -((c(6) - c(11) * s(1) + c(6) * s(1) * s(1) - s(1) * s(1) * s(1)) * s(5)
            + (c(26) - c(26) * s(1) + c(6) * s(2) * s(2)) * s(6)
            + (c(35) - c(15) * s(1)) * s(7)
            + c(15) * s(8)),
    ];
    let u = u_series(4);
    for n in 0..=3 {
        ensure(u.coeff(n) == &known[n], || format!("x^{n}: {}", u.coeff(n)))?;
    }
    let diff = u.coeff(4) - &known[4];
    let expected = c(-6) * s(1) * s(1) * s(6) + c(6) * s(2) * s(2) * s(6);
    ensure(diff == expected, || format!("x^4 differs by {diff}"))?;
    Ok(format!(
        "x^1..x^3 exact; x^4 differs from the reference only by {diff} (computed 6σ_1^2σ_6, reference 6σ_2^2σ_6)"
    ))
}

fn c5_functional() -> Verdict {
    let r = check_functional_equation(&u_series(10), 1);
    ensure(r.holds, || format!("{:?}", r.mismatch))?;
    let r = check_functional_equation(&u_series(6), 3);
    ensure(r.holds, || format!("3-fold: {:?}", r.mismatch))?;
    Ok("through x^10, 3-fold through x^6".into())
}

fn c6_theorem() -> Verdict {
    let families = criterion_families();
    for (label, f, alpha) in &families {
        ensure(is_generic(f).map_err(e)?.generic, || format!("{label} is not generic"))?;
        let formula = packing_count(&BigInt::from(f.group().order()), &f.cardinalities());
        let scan = count_packings_bruteforce(f).map_err(e)?;
        ensure(formula == scan, || format!("{label}: {formula} vs {scan}"))?;
        if let Some(a) = alpha {
            ensure(scan == big(*a), || format!("{label}: {scan} != {a}"))?;
        }
    }
    Ok(format!("{} generic families", families.len()))
}

fn c7_boolean() -> Verdict {
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let families = vec![
        cyclic(8, &[&[0, 1], &[0, 2]]),
        cyclic(6, &[&[0, 3], &[0, 3]]),
        cyclic(4, &[&[0, 2], &[0, 1], &[0]]),
        cyclic(12, &[&[0, 1, 2], &[0, 4], &[0, 6]]),
        cyclic(9, &[&[0, 3, 6], &[0, 1], &[2]]),
        SubsetFamily::new(&s3, vec![vec![0, 1, 2], vec![0, 3], vec![4, 5]]).unwrap(),
    ];
    let mut generic = 0;
    for f in &families {
        let a = alpha_via_boolean_moebius(f).map_err(e)?;
        let b = count_packings_bruteforce(f).map_err(e)?;
        ensure(a == b, || format!("{:?}: {a} vs {b}", f.sets()))?;
        generic += is_generic(f).map_err(e)?.generic as usize;
    }
    ensure(generic > 0 && generic < families.len(), || "need generic and non-generic families".into())?;
    Ok(format!("{} families ({generic} generic)", families.len()))
}

fn c8_r_gamma() -> Verdict {
    let fams = criterion_families();
    let samples = [cyclic(8, &[&[0, 1], &[0, 2], &[0, 4]]), fams[3].1.clone()];
    for f in &samples {
        ensure(is_generic(f).map_err(e)?.generic, || "sample not generic".into())?;
        let order = f.group().order() as u128;
        let graphs: Vec<_> = IntersectionGraph::all(3).collect();
        ensure(graphs.len() == 8, || "expected 8 graphs".into())?;
        for g in graphs {
            let re = count_r_and_e(f, &g).map_err(e)?;
            ensure(re.r == re.e * order.pow(re.components as u32), || {
                format!("graph {:?}: R = {}, E = {}, c = {}", g.edges(), re.r, re.e, re.components)
            })?;
        }
    }
    Ok("8 graphs x 2 families".into())
}

fn c9_moebius() -> Verdict {
    let mut total = 0;
    for n in 1..=5 {
        for (f, mu) in moebius_all(n).map_err(e)? {
            ensure(mu == moebius_closed_form(&f), || format!("μ({f}) = {mu}"))?;
            total += 1;
        }
    }
    for j in 2..=6 {
        let f = Hyperforest::new(j, &[(0..j).collect()]).map_err(e)?;
        let mu = moebius_recursive(&f).map_err(e)?;
        ensure(mu == -factorial(j - 2), || format!("μ(K_{j}) = {mu}"))?;
    }
    Ok(format!("{total} hyperforests on <= 5 vertices; single hyperedges j = 2..6"))
}

fn c10_hyperforest_sum() -> Verdict {
    let cards: [&[u64]; 6] = [&[3], &[2, 2], &[3, 1, 2], &[2, 2, 2, 2], &[1, 3, 2, 2, 1], &[2, 2, 2, 2, 2]];
    for c in cards {
        for n in 0..c.len() as i64 + 2 {
            let order = big(n + 7);
            let a = alpha_via_hyperforest_sum(&order, c).map_err(e)?;
            ensure(a == packing_count(&order, c), || format!("cards {c:?}, N = {order}"))?;
        }
    }
    for (label, f, _) in criterion_families() {
        if f.len() > 5 {
            continue;
        }
        let a = alpha_via_hyperforest_sum(&BigInt::from(f.group().order()), &f.cardinalities()).map_err(e)?;
        let b = count_packings_bruteforce(&f).map_err(e)?;
        ensure(a == b, || format!("{label}: {a} vs {b}"))?;
    }
    Ok("polynomial identity in N for 6 vectors; brute force on the criterion-6 families".into())
}

fn c11_husimi() -> Verdict {
    for n in 1..=6usize {
        for k in 0..n {
            let count = enumerate_hypertrees(n, k).map_err(e)?.len();
            let oracle = if n == 1 && k == 0 {
                BigInt::one()
            } else if k == 0 {
                BigInt::zero()
            } else {
                BigInt::from(n).pow(k as u32 - 1) * stirling2(n - 1, k)
            };
            ensure(BigInt::from(count) == oracle, || format!("n = {n}, k = {k}: {count} vs {oracle}"))?;
        }
        if n >= 2 {
            let trees = enumerate_hypertrees(n, n - 1).map_err(e)?.len();
            ensure(BigInt::from(trees) == BigInt::from(n).pow(n as u32 - 2), || format!("Cayley at n = {n}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        for n in 2..=6 {
            let w: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(-3i64..=4))).collect();
            for k in 1..n {
                let check = weighted_hypertree_sum(n, k, &w).map_err(e)?;
                ensure(check.holds, || format!("n = {n}, k = {k}, w = {w:?}: {} vs {}", check.lhs, check.rhs))?;
            }
        }
    }
    Ok("hypertree counts and Cayley for n <= 6; weighted identity for 3 random vectors".into())
}

fn c12_rational() -> Verdict {
    for y in [rat(1, 2), rat(-3, 1), rat(5, 7)] {
        let rule = |i: usize| if i % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        let got = specialize_numeric(&y, rule, 12);
        let mut expect = vec![rat(1, 1)];
        expect.extend((0..12).map(|k| -num_traits::pow(y.clone(), k)));
        ensure(got == expect, || format!("y = {y}"))?;
    }
    for n in 1..=8 {
        ensure(singleton_identity_check(n), || format!("singletons n = {n}"))?;
    }
    Ok("3 values of y through x^12; singletons n <= 8".into())
}

fn c13_q_rows() -> Verdict {
    let row = |x: BigRational, y: BigRational, scale: &dyn Fn(usize) -> BigRational, known: &[i64]| {
        let values: Vec<BigRational> = (2..2 + known.len() + 4).map(|i| q_specialize(i, &x, &y) * scale(i)).collect();
        let values = strip_leading_zeros(&values);
        let known: Vec<BigRational> = known.iter().map(|&v| rat(v, 1)).collect();
        ensure(values[..known.len()] == known[..], || format!("q({x}, {y}) row {values:?}"))
    };
    let one = |_: usize| rat(1, 1);
    let alt = |i: usize| if i % 2 == 1 { rat(1, 1) } else { rat(-1, 1) };
    let half = |_: usize| rat(1, 2);
    row(rat(1, 1), rat(-1, 1), &one, &[1, 0, 1, 2, 9, 44, 265, 1854])?;
    row(rat(1, 1), rat(0, 1), &one, &[1, 1, 3, 11, 53, 309, 2119])?;
    row(rat(1, 1), rat(1, 1), &one, &[1, 2, 7, 32, 181, 1214])?;
    row(rat(-1, 1), rat(1, 1), &alt, &[1, 2, 5, 16, 65, 326, 1957])?;
    row(rat(2, 1), rat(-1, 1), &half, &[1, 0, 2, 8, 60, 544, 6040])?;

    let sums: [(WeightedSum, &[i64]); 4] = [
        (WeightedSum::A, &[1, 0, 0, 1, 1, 8, 36, 229, 1625]),
        (WeightedSum::C, &[1, 0, 3, 26, 453, 11844]),
        (WeightedSum::E, &[1, 0, 0, 0, 0, 0, 0]),
        (WeightedSum::F, &[1, 2, 12, 84, 820, 9540]),
    ];
    for (kind, known) in sums {
        let seq = weighted_sum_sequence(kind, known.len() + 4);
        let seq = strip_leading_zeros(&seq);
        let known: Vec<BigRational> = known.iter().map(|&v| rat(v, 1)).collect();
        ensure(seq.len() >= known.len() && seq[..known.len()] == known[..], || format!("{kind:?}: {seq:?}"))?;
    }

    for kappa in 1..=3i64 {
        for i in 2..=10usize {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let v = q_specialize(i, &rat(kappa, 1), &rat(-(kappa + 1), kappa)) * rat(sign, kappa);
            ensure(v == rat(1, 1), || format!("κ = {kappa}, i = {i}: {v}"))?;
        }
    }
    for k in 0..=2u32 {
        let seq = weighted_sum_sequence(WeightedSum::Factorial(k), 10);
        ensure(seq.len() == 9 && seq.iter().all(|v| v == &rat(1, 1)), || format!("factorial identity k = {k}"))?;
    }
    Ok("5 q rows, a/c/e/f prefixes, both identities".into())
}

fn c14_relation() -> Verdict {
    let polys = [vec![rat(0, 1), rat(1, 1)], vec![rat(0, 1), rat(0, 1), rat(1, 1)]];
    for p in &polys {
        for sigma1 in [rat(0, 1), rat(-1, 1)] {
            let (_, report) = polynomial_specialization_relation(p, &sigma1, 1..=12).map_err(e)?;
            ensure(report.all_zero, || format!("P = {p:?}, σ_1 = {sigma1}: {:?}", report.residuals))?;
        }
    }
    Ok("P(s) = s and s^2 at σ_1 = 0, -1 over n = 1..12".into())
}

fn c15_modular() -> Verdict {
    let mut notes = Vec::new();
    for p in [2u64, 3, 5] {
        let per = find_period_mod_p(p, 100_000).map_err(e)?;
        let s = s_mod_p(p, per.preperiod + 3 * per.period + 1).map_err(e)?;
        for k in per.preperiod..per.preperiod + 2 * per.period {
            ensure(s[k] == s[k + per.period], || format!("replay fails at p = {p}"))?;
        }
        notes.push(format!("p={p}: ({}, {})", per.preperiod, per.period));
    }
    for p in [5u64, 7, 11] {
        let r = modular_alpha_check(p).map_err(e)?;
        ensure(r.agree, || format!("p = {p}: {:?}", r.coefficients.iter().find(|c| !c.agree)))?;
    }
    Ok(format!("periods {}; constants agree mod 5, 7, 11", notes.join(", ")))
}

fn c16_coverings() -> Verdict {
    let families = [
        cyclic(8, &[&[0, 1], &[0, 2]]),
        cyclic(10, &[&[0, 1], &[0, 2], &[0, 4]]),
        cyclic(7, &[&[0, 1, 2], &[0, 3]]),
    ];
    for f in &families {
        ensure(is_generic(f).map_err(e)?.generic, || format!("{:?} not generic", f.sets()))?;
        let closed = complement_covering_count(f).map_err(e)?;
        let scan = count_coverings_bruteforce(&complement_family(f).map_err(e)?).map_err(e)?;
        ensure(closed == scan, || format!("{:?}: {closed} vs {scan}", f.sets()))?;
    }
    for (f, expected) in [(cyclic(5, &[&[0, 1]]), 30), (cyclic(6, &[&[0, 1], &[0, 2]]), 24)] {
        let total: u64 = f.cardinalities().iter().sum();
        let alpha = count_packings_bruteforce(&f).map_err(e)?;
        let formula = factorial(f.group().order() - total as usize) * alpha;
        let scan = count_coverings_bruteforce(&tight_covering_family(&f).map_err(e)?).map_err(e)?;
        ensure(scan == formula && scan == big(expected), || format!("tight: {scan} vs {formula}"))?;
    }
    Ok("3 complement families; tight coverings in Z5 and Z6".into())
}

fn c17_asymptotics() -> Verdict {
    let report = asymptotic_report(400, 256).map_err(e)?;
    let rows: Vec<_> = report.rows.iter().filter(|r| [100, 200, 400].contains(&r.n)).collect();
    ensure(rows.len() == 3, || "missing rows".into())?;
    for w in rows.windows(2) {
        ensure(w[1].deviation.abs() < w[0].deviation.abs(), || format!("not decreasing at n = {}", w[1].n))?;
    }
    for r in &rows {
        ensure(r.corrected_deviation.abs() < r.deviation.abs(), || format!("no improvement at n = {}", r.n))?;
    }
    Ok(rows
        .iter()
        .map(|r| format!("n={}: {:.3e} -> {:.3e}", r.n, r.deviation, r.corrected_deviation))
        .collect::<Vec<_>>()
        .join(", "))
}

fn c18_bounds() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    let mut singletons = 0;
    for case in 0..10 {
        let order = rng.gen_range(5..=10usize);
        let group = FiniteGroup::cyclic(order).unwrap();
        let n = rng.gen_range(1..=3usize);
        let mut random_set = |max: usize| {
            let size = rng.gen_range(1..=max);
            let mut s: Vec<usize> = (0..size).map(|_| rng.gen_range(0..order)).collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        let sets: Vec<Vec<usize>> = (0..n).map(|_| random_set(3)).collect();
        let extra = if case % 3 == 0 { vec![case % order] } else { random_set(3) };
        singletons += (extra.len() == 1) as usize;
        let f = SubsetFamily::new(&group, sets).map_err(e)?;
        let b = check_extension_bounds(&f, &extra).map_err(e)?;
        ensure(b.within_bounds && b.singleton_equality, || format!("case {case}: {b:?}"))?;
    }
    ensure(singletons > 0, || "no singleton case".into())?;
    Ok(format!("10 random instances ({singletons} with a singleton)"))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, u64, fn() -> Verdict)> = vec![
        ("triangle fidelity", 1, c1_triangle),
        ("first-row Stirling identity", 1, c2_stirling),
        ("sequence fidelity", 1, c3_sequences),
        ("U expansion", 1, c4_useries),
        ("functional equation", 30, c5_functional),
        ("packing count vs brute force", 120, c6_theorem),
        ("Boolean Möbius inversion", 60, c7_boolean),
        ("#R = #E N^c", 60, c8_r_gamma),
        ("hyperforest Möbius function", 120, c9_moebius),
        ("hyperforest sum", 60, c10_hyperforest_sum),
        ("hypertree counts", 120, c11_husimi),
        ("rational specialization", 10, c12_rational),
        ("q rows and weighted sums", 10, c13_q_rows),
        ("specialization relation", 10, c14_relation),
        ("modular periodicity", 60, c15_modular),
        ("coverings", 60, c16_coverings),
        ("asymptotic trend", 120, c17_asymptotics),
        ("extension bounds", 60, c18_bounds),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let verdict = match verdict {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            v => v,
        };
        match verdict {
            Ok(msg) => println!("PASS {:>2} {name} [{elapsed:.2?} / {limit:?}]: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{elapsed:.2?} / {limit:?}]: {msg}", k + 1);
            }
        }
    }
    println!("{} of 18 criteria passed", 18 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
