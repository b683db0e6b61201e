//! Two periods above a_n^2 for the three worked families, plus the
//! converse predicate for the CI bases.

use cishift::shiftscan::{converse_predicate, eventual_report};
use cishift::BaseSequence;

fn main() {
    for text in ["11,16,28", "3,8,20", "8,17,18", "1,2,4"] {
        let base: BaseSequence = text.parse().unwrap();
        let r = eventual_report(&base).unwrap();
        println!("({base})");
        println!("  window ({}, {}]", r.threshold, r.threshold + 2 * r.period);
        println!("  residues mod {}: {:?}", r.period, r.residues);
        println!("  eventually empty: {}", r.eventually_empty);
        println!("  base CI: {}", r.base_is_ci);
        if r.base_is_ci {
            println!("  converse predicate: {}", converse_predicate(&base).unwrap());
        }
        for v in r.violations() {
            println!("  violation: {v}");
        }
    }
}
