//! Minimal binomial generators by degree, counted from factorization graphs.

use cishift::toricoracle::{betti_profile, factorizations, graph_components, OracleConfig};
use cishift::GeneratorSequence;

fn main() {
    for text in ["3,4,5", "4,6,9", "7,9,12", "28,31,36,48"] {
        let gens: GeneratorSequence = text.parse().unwrap();
        let p = betti_profile(&gens, &OracleConfig::default()).unwrap();
        let degrees: Vec<String> = p.counts.iter().map(|c| format!("{}x{}", c.count, c.degree)).collect();
        let verdict = if p.mu == gens.len() as u64 - 1 { "CI" } else { "not CI" };
        println!("({gens}) bound {}: mu={} [{}] {verdict}", p.bound, p.mu, degrees.join(" "));
    }

    let gens: GeneratorSequence = "3,4,5".parse().unwrap();
    let f = factorizations(9, &gens, 1000).unwrap();
    println!("degree 9 over ({gens}): {:?}, {} components", f.factorizations, graph_components(&f));

    let small = OracleConfig { bound: Some(8), ..OracleConfig::default() };
    println!("bound 8: {}", betti_profile(&gens, &small).unwrap_err());
}
