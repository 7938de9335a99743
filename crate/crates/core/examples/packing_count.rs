use num_bigint::BigInt;
use packings::brute::count_packings_bruteforce;
use packings::genericity::is_generic;
use packings::series::{packing_count, packing_polynomial};
use packings::{FiniteGroup, SubsetFamily};

fn main() -> packings::Result<()> {
    let group = FiniteGroup::from_descriptor("Z16")?;
    let family = SubsetFamily::parse(&group, "0,1;0,2;0,4")?;
    let cards = family.cardinalities();
    println!("generic: {}", is_generic(&family)?.generic);
    println!("formula: {}", packing_count(&BigInt::from(16), &cards));
    println!("scan:    {}", count_packings_bruteforce(&family)?);

    let poly = packing_polynomial(&cards);
    let terms: Vec<String> = poly
        .iter()
        .enumerate()
        .map(|(m, c)| format!("{c} N^{}", cards.len() - m))
        .collect();
    println!("as a polynomial in N: {}", terms.join(" + "));
    Ok(())
}
