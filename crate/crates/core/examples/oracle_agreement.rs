//! Seeded sweep comparing the split search with the oracle.
//!
//!     cargo run --release --example oracle_agreement -- 500 99

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cishift::fixtures::{compare, random_sequence, DEFAULT_SEED};
use cishift::toricoracle::OracleConfig;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|s| s.parse().unwrap()).collect();
    let samples = args.first().copied().unwrap_or(300);
    let seed = args.get(1).copied().unwrap_or(DEFAULT_SEED);
    println!("seed {seed}");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let oracle = OracleConfig::default();
    let (mut ci, mut disagree) = (0, 0);
    for i in 0..samples {
        let gens = random_sequence(&mut rng, 3 + (i % 3) as usize, 50);
        let c = compare(&gens, &oracle).unwrap();
        ci += c.ci as u32;
        if !c.agree {
            disagree += 1;
            println!("disagree on ({gens}): split search {}, mu {}", c.ci, c.mu);
        }
    }
    println!("{samples} sequences, {ci} CI, {disagree} disagreements");
}
