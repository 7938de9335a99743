use packings::brute::{
    check_extension_bounds, complement_covering_count, complement_family, count_coverings_bruteforce,
    count_packings_bruteforce, tight_covering_family,
};
use packings::{FiniteGroup, SubsetFamily};

fn main() -> packings::Result<()> {
    let z10 = FiniteGroup::cyclic(10)?;
    let family = SubsetFamily::parse(&z10, "0,1;0,2;0,4")?;
    println!("complements, closed form: {}", complement_covering_count(&family)?);
    println!("complements, scan:        {}", count_coverings_bruteforce(&complement_family(&family)?)?);

    let z6 = FiniteGroup::cyclic(6)?;
    let small = SubsetFamily::parse(&z6, "0,1;0,2")?;
    let tight = tight_covering_family(&small)?;
    println!(
        "tight coverings in Z6: {} (packings of the family: {})",
        count_coverings_bruteforce(&tight)?,
        count_packings_bruteforce(&small)?
    );
    println!("{:?}", check_extension_bounds(&small, &[3])?);
    Ok(())
}
