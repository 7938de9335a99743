use packings::experiments::{alpha_error_report, asymptotic_report, DEFAULT_PRECISION};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(500);
    let report = asymptotic_report(n_max, DEFAULT_PRECISION)?;
    println!("x = 1 - ln 2 = {}", report.x);
    println!("A_1(x) = {:.12}", report.a1);
    println!("{:>6} {:>8} {:>14} {:>14} {:>14}", "n", "digits", "r(n) - 1", "A_1/n", "remainder");
    for row in &report.rows {
        println!(
            "{:>6} {:>8} {:>14.6e} {:>14.6e} {:>14.6e}",
            row.n, row.digits, row.deviation, row.first_order, row.corrected_deviation
        );
    }
    if let Some(peak) = &report.peak {
        println!(
            "peak of t(i,0)({}) at i = {} (n/(2x) = {:.2}, ratio {:.5}), height * sqrt(n) / s(n) = {:.5}",
            peak.n, peak.argmax, peak.predicted, peak.argmax_ratio, peak.peak_ratio
        );
    }
    println!();
    println!("{:>3} {:>14} {:>14}", "n", "scaled error", "1 - x/(12n^2)");
    for row in alpha_error_report(DEFAULT_PRECISION)?.rows.iter().skip(1) {
        println!("{:>3} {:>14.8} {:>14.8}", row.n, row.scaled, row.predicted);
    }
    Ok(())
}
