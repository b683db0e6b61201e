//! Membership, representations and Frobenius numbers.

use cishift::semigroup::{find_representation, find_representation_with_sum, frobenius, is_member};
use cishift::GeneratorSequence;

fn main() {
    let gens: GeneratorSequence = "7,9,12".parse().unwrap();
    println!("S = <{gens}>, Frobenius number {}", frobenius(&gens).unwrap());
    let gaps: Vec<u64> = (1..40).filter(|&b| !is_member(b, &gens)).collect();
    println!("gaps: {gaps:?}");

    for b in [31, 44, 100] {
        match find_representation(b, &gens) {
            Some(r) => println!("{b} = {:?} . ({gens})", r.coefficients),
            None => println!("{b} is a gap"),
        }
    }

    // 28m + 11 over (7m, 7m+4, 7m+7) with exactly four summands, m = 29.
    let rest: GeneratorSequence = "203,207,210".parse().unwrap();
    let r = find_representation_with_sum(823, &rest, 4).unwrap();
    println!("823 = {:?} . ({rest}), {} summands", r.coefficients, r.total());
}
