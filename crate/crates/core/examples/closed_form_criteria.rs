//! The closed-form tests for two and three offsets next to the split search.

use cishift::shiftscan::{ci_at, n2_criterion, n3_criterion, n3_criterion_with, N3Pairing};
use cishift::BaseSequence;

fn main() {
    println!("two offsets");
    for (a, b, j) in [(1, 2, 4), (1, 2, 5), (3, 9, 81), (2, 4, 10), (5, 7, 49)] {
        let base = BaseSequence::new(vec![a, b]).unwrap();
        let search = ci_at(&base, j).unwrap().is_some();
        match n2_criterion(a, b, j).unwrap() {
            Some(w) => println!(
                "  ({j},{},{}): CI, k={} alpha={} beta={} (search agrees: {})",
                j + a, j + b, w.k, w.alpha, w.beta, search
            ),
            None => println!("  ({j},{},{}): not CI (search agrees: {})", j + a, j + b, !search),
        }
    }

    println!("three offsets");
    for (a, b, c, j) in [(11, 16, 28, 812), (3, 8, 20, 420), (8, 17, 18, 648), (1, 2, 4, 20)] {
        let w = n3_criterion(a, b, c, j).unwrap();
        let printed = n3_criterion_with(a, b, c, j, N3Pairing::AsPrinted).unwrap();
        println!("  ({a},{b},{c}) at j={j}: {w:?}; other pairing: {}", printed.is_some());
    }
}
