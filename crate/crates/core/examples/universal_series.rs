use packings::series::{check_functional_equation, u_series};

fn main() {
    let u = u_series(4);
    println!("U = {} + O(x^5)", u.to_grouped_notation());
    for folds in 1..=3 {
        let order = if folds == 1 { 10 } else { 6 };
        let report = check_functional_equation(&u_series(order), folds);
        println!("{folds}-fold functional equation through x^{order}: {}", if report.holds { "holds" } else { "fails" });
    }
}
