use packings::brute::{alpha_via_boolean_moebius, count_packings_bruteforce, count_r_and_e, IntersectionGraph};
use packings::{FiniteGroup, SubsetFamily};

fn main() -> packings::Result<()> {
    let group = FiniteGroup::cyclic(8)?;
    let family = SubsetFamily::parse(&group, "0,1;0,2;0,4")?;
    for graph in IntersectionGraph::all(3) {
        let re = count_r_and_e(&family, &graph)?;
        println!("edges {:?}: #R = {}, #E = {}, components = {}", graph.edges(), re.r, re.e, re.components);
    }
    println!("inclusion-exclusion: {}", alpha_via_boolean_moebius(&family)?);
    println!("scan:                {}", count_packings_bruteforce(&family)?);
    Ok(())
}
