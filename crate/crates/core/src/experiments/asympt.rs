//! Growth of `s(n)` against `n^{n-1} / ((1 - ln 2)^{n-1/2} e^n)`, in
//! multiple-precision floating point.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::experiments::modp::reference_alphas;
use crate::ring::Integers;
use crate::series::GammaVectors;
use crate::triangle::s_sequence;

pub const DEFAULT_PRECISION: usize = 256;
pub const MAX_N: usize = 3000;
const MAX_PRECISION: usize = 1 << 16;
const RM: RoundingMode = RoundingMode::ToEven;

/// Precision, rounding and the constant cache bundled together.
struct Arith {
    p: usize,
    cc: Consts,
}

impl Arith {
    fn new(p: usize) -> Result<Self> {
        let cc = Consts::new().map_err(|_| Error::Precision(p))?;
        Ok(Self { p, cc })
    }

    fn int(&mut self, v: &BigInt) -> BigFloat {
        BigFloat::parse(&v.to_string(), Radix::Dec, self.p, RM, &mut self.cc)
    }

    fn small(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.p)
    }

    fn ratio(&mut self, q: &BigRational) -> BigFloat {
        let num = self.int(q.numer());
        let den = self.int(q.denom());
        num.div(&den, self.p, RM)
    }

    fn ln(&mut self, x: &BigFloat) -> BigFloat {
        x.ln(self.p, RM, &mut self.cc)
    }

    fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.p, RM, &mut self.cc)
    }

    fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }

    fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }

    fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, RM)
    }

    fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, RM)
    }

    fn text(&mut self, x: &BigFloat) -> Result<String> {
        if x.is_nan() || x.is_inf() {
            return Err(Error::Precision(self.p));
        }
        x.format(Radix::Dec, RM, &mut self.cc).map_err(|_| Error::Precision(self.p))
    }

    fn value(&mut self, x: &BigFloat) -> Result<(String, f64)> {
        let s = self.text(x)?;
        let f = s.parse::<f64>().map_err(|_| Error::Parse { what: "float", input: s.clone() })?;
        Ok((s, f))
    }
}

/// One sample point of the ratio `r(n)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticRow {
    pub n: usize,
    pub digits: usize,
    /// `r(n)` in decimal at the working precision.
    pub ratio: String,
    pub deviation: f64,
    /// `A_1(1 - ln 2) / n`.
    pub first_order: f64,
    /// `r(n) - 1 - A_1(1 - ln 2) / n`.
    pub corrected_deviation: f64,
}

/// Location and height of the largest entry of the first column `t_{i,0}(n)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeakData {
    pub n: usize,
    pub argmax: usize,
    /// `n / (2 (1 - ln 2))`.
    pub predicted: f64,
    pub argmax_ratio: f64,
    /// `t_{m,0}(n) sqrt(n) / s(n)`.
    pub peak_ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticReport {
    pub precision: usize,
    /// `1 - ln 2` in decimal.
    pub x: String,
    /// `11/24 - x/12`.
    pub a1: f64,
    pub rows: Vec<AsymptoticRow>,
    pub peak: Option<PeakData>,
}

fn sample_points(n_max: usize) -> Vec<usize> {
    let mut points: Vec<usize> = std::iter::successors(Some(50usize), |n| Some(n * 2))
        .take_while(|&n| n <= n_max)
        .collect();
    if n_max >= 1 && points.last() != Some(&n_max) {
        points.push(n_max);
    }
    points
}

fn required_precision(n_max: usize) -> usize {
    let n = n_max.max(2) as f64;
    // ln s(n) is about n ln n; its integer part eats into the mantissa
    64 + (n * n.ln() + n).log2().ceil() as usize
}

/// Ratios `r(n) = s(n) e^n (1 - ln 2)^{n - 1/2} / n^{n-1}` at
/// `n = 50, 100, 200, ...` up to `n_max` (and at `n_max` itself), together
/// with the peak of `t_{i,0}(n_max)`.
///
/// All arithmetic is done in the log domain with `precision` mantissa bits
/// and round-to-nearest-even, so the report is reproducible.
pub fn asymptotic_report(n_max: usize, precision: usize) -> Result<AsymptoticReport> {
    if n_max > MAX_N {
        return Err(Error::SizeGuard { what: "n_max", value: n_max, limit: MAX_N });
    }
    if precision < required_precision(n_max) || precision > MAX_PRECISION {
        return Err(Error::Precision(precision));
    }
    let mut a = Arith::new(precision)?;
    let two = a.small(2);
    let ln2 = a.ln(&two);
    let x = a.sub(&a.small(1), &ln2);
    let ln_x = a.ln(&x);
    let a1 = a.sub(
        &a.div(&a.small(11), &a.small(24)),
        &a.div(&x, &a.small(12)),
    );
    let (x_text, x_f64) = a.value(&x)?;
    let (_, a1_f64) = a.value(&a1)?;
    let half = a.div(&a.small(1), &two);

    let points = sample_points(n_max);
    let mut rows = Vec::with_capacity(points.len());
    let mut peak = None;
    let mut next_point = points.iter().peekable();
    for (level, c) in GammaVectors::new(Integers, BigInt::zero()).take(n_max).enumerate() {
        let n = level + 1;
        if next_point.peek() != Some(&&n) {
            continue;
        }
        next_point.next();
        let s: BigInt = c.iter().sum();
        let ln_s = {
            let v = a.int(&s);
            a.ln(&v)
        };
        let nf = a.small(n as i64);
        let ln_n = a.ln(&nf);
        let ln_r = {
            let t = a.add(&ln_s, &nf);
            let t = a.add(&t, &a.mul(&a.sub(&nf, &half), &ln_x));
            a.sub(&t, &a.mul(&a.small(n as i64 - 1), &ln_n))
        };
        let r = a.exp(&ln_r);
        let dev = a.sub(&r, &a.small(1));
        let first = a.div(&a1, &nf);
        let corrected = a.sub(&dev, &first);
        rows.push(AsymptoticRow {
            n,
            digits: s.to_string().trim_start_matches('-').len(),
            ratio: a.text(&r)?,
            deviation: a.value(&dev)?.1,
            first_order: a.value(&first)?.1,
            corrected_deviation: a.value(&corrected)?.1,
        });

        if n == n_max {
            // c holds t_{n+1,0}(n), ..., t_{2n,0}(n); ties go to the smaller index
            let (offset, top) = c
                .iter()
                .enumerate()
                .fold(None::<(usize, &BigInt)>, |best, (k, v)| match best {
                    Some((_, b)) if b >= v => best,
                    _ => Some((k, v)),
                })
                .expect("nonempty vector");
            let argmax = n + 1 + offset;
            let predicted = n as f64 / (2.0 * x_f64);
            let ln_top = {
                let v = a.int(top);
                a.ln(&v)
            };
            let ln_peak = a.sub(&a.add(&ln_top, &a.mul(&half, &ln_n)), &ln_s);
            let peak_ratio = a.exp(&ln_peak);
            peak = Some(PeakData {
                n,
                argmax,
                predicted,
                argmax_ratio: argmax as f64 / predicted,
                peak_ratio: a.value(&peak_ratio)?.1,
            });
        }
    }
    Ok(AsymptoticReport { precision, x: x_text, a1: a1_f64, rows, peak })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaErrorRow {
    pub n: usize,
    /// `ε_n = α_n - sum_{k>=1} k^{k-n} / k! (2/e^2)^k`.
    pub epsilon: String,
    /// `ε_n s(n+1) (1 - ln 2) (-1)^{n+1}`.
    pub scaled: f64,
    /// `1 - (1 - ln 2) / (12 n^2)`.
    pub predicted: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaErrorReport {
    pub precision: usize,
    pub rows: Vec<AlphaErrorRow>,
}

/// Compares the known `α_n` with the series `sum_k k^{k-n}/k! (2/e^2)^k`
/// and tabulates the rescaled error. Nothing is asserted.
pub fn alpha_error_report(precision: usize) -> Result<AlphaErrorReport> {
    if !(64..=MAX_PRECISION).contains(&precision) {
        return Err(Error::Precision(precision));
    }
    let mut a = Arith::new(precision)?;
    let alphas = reference_alphas();
    let s = s_sequence(alphas.len() + 1);
    let two = a.small(2);
    let ln2 = a.ln(&two);
    let x = a.sub(&a.small(1), &ln2);
    let log_base = a.sub(&ln2, &two);
    let (_, x_f64) = a.value(&x)?;
    // ratio of consecutive terms tends to 2/e, so this many terms reach 2^-precision
    let terms = 40 + (precision as f64 / (1.0 - (2.0f64).ln()) / std::f64::consts::LOG2_E).ceil() as usize;
    let logs: Vec<BigFloat> = (1..=terms as i64 + alphas.len() as i64)
        .map(|k| {
            let v = a.small(k);
            a.ln(&v)
        })
        .collect();

    let mut rows = Vec::with_capacity(alphas.len());
    for (n, alpha) in alphas.iter().enumerate() {
        let mut sum = a.small(0);
        let mut ln_fact = a.small(0);
        for k in 1..=terms + n {
            let ln_k = &logs[k - 1];
            ln_fact = a.add(&ln_fact, ln_k);
            let exponent = a.small(k as i64 - n as i64);
            let t = a.mul(&exponent, ln_k);
            let t = a.sub(&t, &ln_fact);
            let t = a.add(&t, &a.mul(&a.small(k as i64), &log_base));
            let term = a.exp(&t);
            sum = a.add(&sum, &term);
        }
        let alpha_f = a.ratio(alpha);
        let eps = a.sub(&alpha_f, &sum);
        if n == 0 {
            rows.push(AlphaErrorRow { n, epsilon: a.text(&eps)?, scaled: f64::NAN, predicted: f64::NAN });
            continue;
        }
        let s_next = a.int(&s[n]);
        let mut scaled = a.mul(&a.mul(&eps, &s_next), &x);
        if n % 2 == 0 {
            scaled = scaled.neg();
        }
        rows.push(AlphaErrorRow {
            n,
            epsilon: a.text(&eps)?,
            scaled: a.value(&scaled)?.1,
            predicted: 1.0 - x_f64 / 12.0 / (n * n) as f64,
        });
    }
    Ok(AlphaErrorReport { precision, rows })
}
