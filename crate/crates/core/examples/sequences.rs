use num_rational::BigRational;
use packings::triangle::{big_s_sequence, q_specialize, s_sequence, weighted_sum_sequence, WeightedSum};

fn main() {
    let s = s_sequence(12);
    let big = big_s_sequence(12);
    for n in 1..=12 {
        println!("{n:>3} s = {:<16} S = {}", s[n - 1], big[n - 1]);
    }
    let one = BigRational::from_integer(1.into());
    let q: Vec<String> = (2..=10).map(|i| q_specialize(i, &one, &one).to_string()).collect();
    println!("q_i(1, 1): {}", q.join(", "));
    for kind in [WeightedSum::A, WeightedSum::D, WeightedSum::Binomial(1)] {
        let v: Vec<String> = weighted_sum_sequence(kind, 10).iter().map(ToString::to_string).collect();
        println!("{kind:?}: {}", v.join(", "));
    }
}
