//! Complete-intersection shifts of a base in a window, one row per member.
//!
//!     cargo run --example shift_scan -- 11,16,28 785 900

use cishift::shiftscan::{scan_certificates, ScanConfig, ScanRow};
use cishift::BaseSequence;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let base: BaseSequence = args.first().map_or("11,16,28", |s| s.as_str()).parse().unwrap();
    let from: u64 = args.get(1).map_or(785, |s| s.parse().unwrap());
    let to: u64 = args.get(2).map_or(900, |s| s.parse().unwrap());

    let found = scan_certificates(&base, from, to, &ScanConfig::default()).unwrap();
    println!("CI shifts of ({base}) in [{from}, {to}]: {}", found.len());
    for (j, cert) in &found {
        let row = ScanRow::new(&base, *j, cert).unwrap();
        let show = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        println!(
            "j={:<5} m={:<4} s={:<2} k={:<3} {cert}",
            row.j,
            show(row.m.map(|x| x.to_string())),
            show(row.s.map(|x| x.to_string())),
            show(row.k.map(|x| x.to_string())),
        );
    }
}
