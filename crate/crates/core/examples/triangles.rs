use packings::triangle::{triangles, StirlingTables};

fn main() {
    for t in triangles().take(6) {
        println!("T({}):\n{t}\n", t.n());
    }
    let t = triangles().nth(7).unwrap();
    let st = StirlingTables::new(8);
    let first_row: Vec<String> = t.row(9).unwrap().iter().map(ToString::to_string).collect();
    let unsigned: Vec<String> = (1..=8).map(|k| st.s1(8, k).magnitude().to_string()).collect();
    println!("first row of T(8): {}", first_row.join(" "));
    println!("|S_1(8, k)|, k >= 1: {}", unsigned.join(" "));
}
