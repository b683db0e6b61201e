//! Decide a generator sequence and print its certificate as text and JSON.
//!
//!     cargo run --example split_certificate -- 28,31,36,48

use cishift::{is_complete_intersection, verify_certificate, GeneratorSequence};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "28,31,36,48".into());
    let gens: GeneratorSequence = arg.parse().expect("comma-separated increasing integers");
    match is_complete_intersection(&gens) {
        Some(cert) => {
            println!("({gens}) is a complete intersection");
            println!("  {cert}");
            println!("  depth {}, verifies: {}", cert.depth(), verify_certificate(&gens, &cert));
            println!("{}", cert.to_json());
        }
        None => println!("({gens}) is not a complete intersection"),
    }
}
