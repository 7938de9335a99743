use packings::genericity::{is_generic, make_generic_in_z, reduce_mod, span_in_z};
use packings::{FiniteGroup, SubsetFamily};

fn main() -> packings::Result<()> {
    let z4 = FiniteGroup::cyclic(4)?;
    let report = is_generic(&SubsetFamily::parse(&z4, "0,2;0,2")?)?;
    println!("Z4 {{0,2}},{{0,2}}: {report:?}");

    let s3 = FiniteGroup::symmetric(3)?;
    let t = s3.from_permutation(&[1, 0, 2])?;
    let c = s3.from_permutation(&[1, 2, 0])?;
    let family = SubsetFamily::new(&s3, vec![vec![0, t], vec![0, c]])?;
    println!("S3 transposition and 3-cycle: generic = {}", is_generic(&family)?.generic);

    let sets = make_generic_in_z(&[3, 2, 2])?;
    println!("generic in Z: {sets:?}, span {}", span_in_z(&sets));
    for n in [9, 11, 13, 23] {
        match reduce_mod(&sets, n) {
            Ok((_, generic)) => println!("  mod {n}: generic = {generic}"),
            Err(e) => println!("  mod {n}: {e}"),
        }
    }
    Ok(())
}
