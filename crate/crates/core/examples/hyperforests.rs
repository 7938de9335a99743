use num_bigint::BigInt;
use packings::hyperforest::{
    alpha_via_hyperforest_sum, enumerate_hyperforests, enumerate_hypertrees, husimi_count, moebius_all,
    moebius_closed_form,
};

fn main() -> packings::Result<()> {
    for n in 1..=5 {
        println!("|HF({n})| = {}", enumerate_hyperforests(n)?.len());
    }
    for (f, mu) in moebius_all(4)?.iter().filter(|(f, _)| f.edges().len() == 2) {
        println!("μ({f}) = {mu} (closed form {})", moebius_closed_form(f));
    }
    for k in 1..5 {
        println!("HT_{k}(5): {} listed, {} predicted", enumerate_hypertrees(5, k)?.len(), husimi_count(5, k));
    }
    println!("packings of sizes 2,2,2 in a group of order 16: {}", alpha_via_hyperforest_sum(&BigInt::from(16), &[2, 2, 2])?);
    Ok(())
}
