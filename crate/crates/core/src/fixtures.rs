//! Self-contained checks of the three worked families and the criterion
//! sweeps, run by `cishift verify-paper`.
//!
//! Two fixtures are deliberately run with a broken configuration (the other
//! n = 3 pairing, a threshold of `a_n`) and pass only when the family check
//! fails under it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::delorme::is_complete_intersection;
use crate::error::Result;
use crate::seqcore::{gcd_all, BaseSequence, GeneratorSequence};
use crate::shiftscan::{
    ci_at, converse_predicate, eventual_report_with, n2_criterion, n3_criterion_with, scan,
    split_witness, N3Pairing, ScanConfig,
};
use crate::toricoracle::{minimal_generator_count, OracleConfig};

pub const DEFAULT_SEED: u64 = 1729;

/// Where the eventual regime is taken to start.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdRule {
    /// `j > a_n²`.
    Square,
    /// `j > a_n`; too early, used as a trap.
    Linear,
}

impl ThresholdRule {
    pub fn threshold(self, base: &BaseSequence) -> u64 {
        match self {
            ThresholdRule::Square => base.last() * base.last(),
            ThresholdRule::Linear => base.last(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub pairing: N3Pairing,
    pub threshold_rule: ThresholdRule,
    /// Random sequences in the oracle agreement sweep.
    pub oracle_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            pairing: N3Pairing::Corrected,
            threshold_rule: ThresholdRule::Square,
            oracle_samples: 150,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl FixtureResult {
    fn from_check(name: &str, check: Result<std::result::Result<String, String>>) -> Self {
        let (passed, detail) = match check {
            Ok(Ok(d)) => (true, d),
            Ok(Err(d)) => (false, d),
            Err(e) => (false, format!("error: {e}")),
        };
        Self {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

type Check = Result<std::result::Result<String, String>>;

fn base(v: &[u64]) -> BaseSequence {
    BaseSequence::new(v.to_vec()).expect("fixture base")
}

/// Non-negative `(x, y)` with `x·p + y·q = target` and optionally `x + y <= bound`.
pub fn two_term_solutions(target: u64, p: u64, q: u64, bound: Option<u64>) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for y in 0..=target / q {
        let rest = target - y * q;
        if rest % p == 0 && bound.is_none_or(|b| rest / p + y <= b) {
            out.push((rest / p, y));
        }
    }
    out
}

/// The (11,16,28) family: CI at every multiple of 28 from 56 on, isolating
/// `j + 11` with `k = 4`, and accepted by the n = 3 criterion above 784.
pub fn family_11_16_28(config: &SuiteConfig) -> Check {
    let b = base(&[11, 16, 28]);
    for m in 2..=20u64 {
        let j = 28 * m;
        let Some(cert) = ci_at(&b, j)? else {
            return Ok(Err(format!("j={j} not CI")));
        };
        let Some(w) = split_witness(&b, j, &cert)? else {
            return Ok(Err(format!("j={j}: top split {cert} has no witness")));
        };
        if (w.s, w.k, w.alphas.coefficients.as_slice()) != (1, 4, &[2, 1, 1][..]) {
            return Ok(Err(format!("j={j}: witness s={} k={} alpha={:?}", w.s, w.k, w.alphas.coefficients)));
        }
    }
    for m in 29..=40u64 {
        let j = 28 * m;
        match n3_criterion_with(11, 16, 28, j, config.pairing)? {
            Some(w) if w.s == 1 && w.k == 4 => {}
            other => return Ok(Err(format!("criterion at j={j} gave {other:?}"))),
        }
    }
    Ok(Ok("m=2..20 CI with s=1, k=4, alpha=(2,1,1); criterion accepts m=29..40".into()))
}

/// The (3,8,20) family: CI at j=28 by `31·(1) ⊔ 4·(7,9,12)`, yet empty past
/// the threshold, where `12 = 8β + 20γ` has no solution.
pub fn family_3_8_20(config: &SuiteConfig) -> Check {
    let b = base(&[3, 8, 20]);
    let Some(cert) = ci_at(&b, 28)? else {
        return Ok(Err("j=28 not CI".into()));
    };
    let top = cert.top_split().expect("four generators split");
    if (top.left_indices.as_slice(), top.k1, top.k2) != (&[1][..], 31, 4)
        || top.right_reduced.gens() != [7, 9, 12]
    {
        return Ok(Err(format!("j=28 top split is {cert}")));
    }
    let threshold = config.threshold_rule.threshold(&b);
    let report = eventual_report_with(&b, Some(threshold), &ScanConfig::default())?;
    if !report.eventually_empty {
        return Ok(Err(format!(
            "CI members {:?} above threshold {threshold}",
            report.members
        )));
    }
    if !two_term_solutions(12, 8, 20, None).is_empty() {
        return Ok(Err("12 = 8β + 20γ solvable".into()));
    }
    if n3_criterion_with(3, 8, 20, 420, config.pairing)?.is_some() {
        return Ok(Err("criterion accepts j=420".into()));
    }
    Ok(Ok(format!("j=28 CI; nothing in ({threshold}, {}]", threshold + 40)))
}

/// The (8,17,18) family: the base is CI but no shift past 324 is.
pub fn family_8_17_18(config: &SuiteConfig) -> Check {
    let b = base(&[8, 17, 18]);
    if is_complete_intersection(&b.as_generators()).is_none() {
        return Ok(Err("base not CI".into()));
    }
    let threshold = config.threshold_rule.threshold(&b);
    let report = eventual_report_with(&b, Some(threshold), &ScanConfig::default())?;
    if !report.eventually_empty {
        return Ok(Err(format!("CI members {:?} above threshold", report.members)));
    }
    if !two_term_solutions(34, 8, 18, Some(2)).is_empty() || !two_term_solutions(17, 4, 9, Some(2)).is_empty() {
        return Ok(Err("34 = 8β + 18γ solvable".into()));
    }
    if n3_criterion_with(8, 17, 18, 648, config.pairing)?.is_some() {
        return Ok(Err("criterion accepts j=648".into()));
    }
    if converse_predicate(&b)? {
        return Ok(Err("converse predicate holds".into()));
    }
    Ok(Ok("base CI, shifts past the threshold are not".into()))
}

/// Closed form against the split search for every `(a, b)`, `b <= 15`, over
/// `[max{ab, b(b-a)}, +2b]`.
pub fn n2_sweep() -> Check {
    let mut checked = 0;
    for b in 2..=15u64 {
        for a in 1..b {
            let base = base(&[a, b]);
            let lo = (a * b).max(b * (b - a));
            for j in lo..=lo + 2 * b {
                let closed = n2_criterion(a, b, j)?.is_some();
                let search = ci_at(&base, j)?.is_some();
                if closed != search {
                    return Ok(Err(format!("a={a} b={b} j={j}: closed form {closed}, search {search}")));
                }
                checked += 1;
            }
        }
    }
    Ok(Ok(format!("{checked} shifts agree")))
}

/// Three-offset criterion against the split search for primitive `(a, b, c)`,
/// `c <= 14`, over `(c², c² + 2c]`.
pub fn n3_sweep(config: &SuiteConfig) -> Check {
    let mut checked = 0;
    for c in 3..=14u64 {
        for b in 2..c {
            for a in (1..b).filter(|&a| gcd_all(&[a, b, c]) == 1) {
                let base = base(&[a, b, c]);
                for j in c * c + 1..=c * c + 2 * c {
                    let closed = n3_criterion_with(a, b, c, j, config.pairing)?.is_some();
                    let search = ci_at(&base, j)?.is_some();
                    if closed != search {
                        return Ok(Err(format!(
                            "({a},{b},{c}) j={j}: closed form {closed}, search {search}"
                        )));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(Ok(format!("{checked} shifts agree")))
}

/// Split-search verdict against the oracle's `mu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub gens: GeneratorSequence,
    pub ci: bool,
    pub mu: u64,
    pub agree: bool,
}

pub fn compare(gens: &GeneratorSequence, config: &OracleConfig) -> Result<Comparison> {
    let ci = is_complete_intersection(gens).is_some();
    let mu = minimal_generator_count(gens, config)?;
    let reduced_len = gens.len() as u64;
    let oracle_ci = reduced_len <= 1 || mu == reduced_len - 1;
    Ok(Comparison {
        gens: gens.clone(),
        ci,
        mu,
        agree: ci == oracle_ci,
    })
}

/// Random strictly increasing gcd-1 list of `len` entries in `2..=max`.
pub fn random_sequence(rng: &mut ChaCha8Rng, len: usize, max: u64) -> GeneratorSequence {
    loop {
        let mut v: Vec<u64> = (0..len).map(|_| rng.gen_range(2..=max)).collect();
        v.sort_unstable();
        v.dedup();
        if v.len() == len && gcd_all(&v) == 1 {
            return GeneratorSequence::new(v).expect("sorted distinct positive");
        }
    }
}

pub fn oracle_sweep(config: &SuiteConfig) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let oracle = OracleConfig::default();
    let mut ci = 0;
    for i in 0..config.oracle_samples {
        let len = 3 + i % 3;
        let gens = random_sequence(&mut rng, len, 40);
        let c = compare(&gens, &oracle)?;
        if !c.agree {
            return Ok(Err(format!("({gens}): split search {}, mu {}", c.ci, c.mu)));
        }
        ci += c.ci as usize;
    }
    Ok(Ok(format!(
        "seed {}: {} sequences agree ({ci} CI)",
        config.seed, config.oracle_samples
    )))
}

/// Windows above the threshold stay empty for the two finite families.
fn windows_empty() -> Check {
    let cfg = ScanConfig::default();
    for (b, lo, hi) in [(base(&[3, 8, 20]), 401, 456), (base(&[8, 17, 18]), 325, 360)] {
        let set = scan(&b, lo, hi, &cfg)?;
        if !set.members.is_empty() {
            return Ok(Err(format!("({b}) has CI members {:?} in [{lo}, {hi}]", set.members)));
        }
    }
    Ok(Ok("(3,8,20) on [401,456] and (8,17,18) on [325,360] empty".into()))
}

fn expect_failure(name: &str, check: Check) -> FixtureResult {
    let inner = FixtureResult::from_check(name, check);
    FixtureResult {
        name: name.to_string(),
        passed: !inner.passed,
        detail: if inner.passed {
            format!("broken configuration was not caught: {}", inner.detail)
        } else {
            format!("caught: {}", inner.detail)
        },
    }
}

/// Every fixture in a fixed order.
pub fn run_suite(config: &SuiteConfig) -> Vec<FixtureResult> {
    let printed = SuiteConfig {
        pairing: N3Pairing::AsPrinted,
        ..*config
    };
    let linear = SuiteConfig {
        threshold_rule: ThresholdRule::Linear,
        ..*config
    };
    vec![
        FixtureResult::from_check("family-11-16-28", family_11_16_28(config)),
        FixtureResult::from_check("family-3-8-20", family_3_8_20(config)),
        FixtureResult::from_check("family-8-17-18", family_8_17_18(config)),
        FixtureResult::from_check("eventual-windows", windows_empty()),
        FixtureResult::from_check("n2-criterion-sweep", n2_sweep()),
        FixtureResult::from_check("n3-criterion-sweep", n3_sweep(config)),
        FixtureResult::from_check("oracle-agreement", oracle_sweep(config)),
        expect_failure("trap-printed-pairing", family_11_16_28(&printed)),
        expect_failure("trap-linear-threshold", family_3_8_20(&linear)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_pass() {
        let cfg = SuiteConfig::default();
        for check in [family_11_16_28(&cfg), family_3_8_20(&cfg), family_8_17_18(&cfg)] {
            assert!(matches!(check, Ok(Ok(_))), "{check:?}");
        }
    }

    #[test]
    fn traps_are_caught() {
        let printed = SuiteConfig {
            pairing: N3Pairing::AsPrinted,
            ..SuiteConfig::default()
        };
        assert!(matches!(family_11_16_28(&printed), Ok(Err(_))));
        let linear = SuiteConfig {
            threshold_rule: ThresholdRule::Linear,
            ..SuiteConfig::default()
        };
        let check = family_3_8_20(&linear).unwrap();
        assert!(check.unwrap_err().contains("28"));
    }

    #[test]
    fn two_term_examples() {
        assert!(two_term_solutions(12, 8, 20, None).is_empty());
        assert!(two_term_solutions(34, 8, 18, Some(2)).is_empty());
        assert_eq!(two_term_solutions(44, 16, 28, Some(4)), vec![(1, 1)]);
    }

    #[test]
    fn compare_examples() {
        let c = compare(&"4,6,9".parse().unwrap(), &OracleConfig::default()).unwrap();
        assert_eq!((c.ci, c.mu, c.agree), (true, 2, true));
        let c = compare(&"3,4,5".parse().unwrap(), &OracleConfig::default()).unwrap();
        assert_eq!((c.ci, c.mu, c.agree), (false, 3, true));
    }

    #[test]
    fn sweep_is_seeded() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(random_sequence(&mut a, 4, 40), random_sequence(&mut b, 4, 40));
    }
}
