use packings::verify::{verify, Level};

fn main() {
    let level = match std::env::args().nth(1).as_deref() {
        Some("full") => Level::Full,
        _ => Level::Quick,
    };
    let report = verify(level);
    for c in &report.checks {
        println!("{} {:<22} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    std::process::exit(if report.passed { 0 } else { 1 });
}
