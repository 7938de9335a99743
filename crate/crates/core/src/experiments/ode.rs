//! The specialization `f = U(x, -y, -z^{2+r}, -z^{3+r}, ...) - 1` and the
//! differential equation `f = x z (z^{r+1} + (y - (1+z)(1+r)) f + z(1+z) f_z)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::triangle::triangles;

/// Coefficients keyed by `(deg_x, deg_y, deg_z)`.
type Series = BTreeMap<(usize, usize, usize), BigInt>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OdeMismatch {
    pub x_degree: usize,
    pub y_degree: usize,
    pub z_degree: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OdeReport {
    pub r: usize,
    pub mx: usize,
    pub mz: usize,
    pub coefficients_checked: usize,
    pub holds: bool,
    pub mismatch: Option<OdeMismatch>,
}

fn specialization(r: usize, mx: usize, mz: usize) -> Series {
    let mut f = Series::new();
    for t in triangles().take(mx) {
        let n = t.n();
        for (i, j, v) in t.entries() {
            if i + r <= mz && !v.is_zero() {
                f.insert((n, j, i + r), v.clone());
            }
        }
    }
    f
}

fn bump(s: &mut Series, key: (usize, usize, usize), v: BigInt) {
    if v.is_zero() {
        return;
    }
    let e = s.entry(key).or_default();
    *e += v;
    if e.is_zero() {
        s.remove(&key);
    }
}

fn right_side(f: &Series, r: usize, mx: usize, mz: usize) -> Series {
    let mut out = Series::new();
    let keep = |n: usize, e: usize| n <= mx && e <= mz;
    if keep(1, r + 2) {
        bump(&mut out, (1, 0, r + 2), BigInt::from(1));
    }
    let k = BigInt::from(r + 1);
    for (&(n, j, e), v) in f {
        let n1 = n + 1;
        // x z y f
        if keep(n1, e + 1) {
            bump(&mut out, (n1, j + 1, e + 1), v.clone());
        }
        // -x z (1+z)(1+r) f
        if keep(n1, e + 1) {
            bump(&mut out, (n1, j, e + 1), -(v * &k));
        }
        if keep(n1, e + 2) {
            bump(&mut out, (n1, j, e + 2), -(v * &k));
        }
        // x z^2 (1+z) f_z
        let d = v * BigInt::from(e);
        if keep(n1, e + 1) {
            bump(&mut out, (n1, j, e + 1), d.clone());
        }
        if keep(n1, e + 2) {
            bump(&mut out, (n1, j, e + 2), d);
        }
    }
    out
}

/// Checks the equation coefficient by coefficient for `x`-degree at most
/// `mx` and `z`-degree at most `mz`, all `y`-degrees.
pub fn ode_check_power_spec(r: usize, mx: usize, mz: usize) -> OdeReport {
    let f = specialization(r, mx, mz);
    let rhs = right_side(&f, r, mx, mz);
    let mut keys: Vec<_> = f.keys().chain(rhs.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let mismatch = keys.iter().find_map(|key| {
        let l = f.get(key).cloned().unwrap_or_default();
        let rr = rhs.get(key).cloned().unwrap_or_default();
        (l != rr).then(|| OdeMismatch {
            x_degree: key.0,
            y_degree: key.1,
            z_degree: key.2,
            lhs: l.to_string(),
            rhs: rr.to_string(),
        })
    });
    OdeReport {
        r,
        mx,
        mz,
        coefficients_checked: keys.len(),
        holds: mismatch.is_none(),
        mismatch,
    }
}
