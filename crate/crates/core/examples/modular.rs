use packings::experiments::{find_period_mod_p, modular_alpha_check, s_mod_p};

fn main() -> packings::Result<()> {
    for p in [2, 3, 5, 7, 11, 13, 97] {
        let period = find_period_mod_p(p, 1_000_000)?;
        let head: Vec<String> = s_mod_p(p, 12)?.iter().map(ToString::to_string).collect();
        print!("p = {p:>2}: preperiod {}, period {:>3}, s mod p = {}", period.preperiod, period.period, head.join(" "));
        match modular_alpha_check(p) {
            Ok(r) => println!(", reference constants {}", if r.agree { "agree" } else { "disagree" }),
            Err(e) => println!(", {e}"),
        }
    }
    Ok(())
}
