//! Acceptance checks, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are printed on every run.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cishift::delorme::is_complete_intersection;
use cishift::fixtures::{
    compare, family_11_16_28, family_3_8_20, random_sequence, run_suite, two_term_solutions,
    SuiteConfig, ThresholdRule, DEFAULT_SEED,
};
use cishift::seqcore::{gcd_all, shift, BaseSequence, GeneratorSequence};
use cishift::shiftscan::{
    ci_at, eventual_report, main_theorem_witness, n2_criterion, n3_criterion, scan,
    split_witness, N3Pairing, PeriodicityReport, ScanConfig,
};
use cishift::toricoracle::{minimal_generator_count, OracleConfig};

type Outcome = Result<String, String>;

fn base(v: &[u64]) -> BaseSequence {
    BaseSequence::new(v.to_vec()).unwrap()
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let out = f()?;
    let took = start.elapsed();
    match limit {
        Some(l) if took > l => Err(format!("{out}; took {took:.2?}, limit {l:?}")),
        _ => Ok(format!("{out} ({took:.2?})")),
    }
}

fn criterion_1() -> Outcome {
    let b = base(&[11, 16, 28]);
    for m in 2..=20u64 {
        let j = 28 * m;
        let cert = ci_at(&b, j).unwrap().ok_or(format!("m={m} not CI"))?;
        let w = split_witness(&b, j, &cert)
            .unwrap()
            .ok_or(format!("m={m}: no witness in {cert}"))?;
        if w.s != 1 || w.k != 4 || w.alphas.coefficients != [2, 1, 1] || w.alphas.total() != 4 {
            return Err(format!("m={m}: {w:?}"));
        }
    }
    Ok("m=2..20 CI, s=1, k=4, alpha=(2,1,1)".into())
}

fn criterion_2() -> Outcome {
    let b = base(&[3, 8, 20]);
    let cert = ci_at(&b, 28).unwrap().ok_or("j=28 not CI")?;
    let text = cert.to_string();
    if !text.starts_with("31·(1) ⊔ 4·(7,9,12)") {
        return Err(format!("j=28 certificate {text}"));
    }
    let cfg = ScanConfig::default();
    for (lo, hi) in [(401, 428), (429, 456)] {
        let set = scan(&b, lo, hi, &cfg).unwrap();
        if !set.members.is_empty() {
            return Err(format!("CI members {:?} in [{lo}, {hi}]", set.members));
        }
    }
    Ok(format!("j=28: {text}; (400,428] and (428,456] empty"))
}

fn criterion_3() -> Outcome {
    let b = base(&[8, 17, 18]);
    if is_complete_intersection(&b.as_generators()).is_none() {
        return Err("base not CI".into());
    }
    let cfg = ScanConfig::default();
    for (lo, hi) in [(325, 342), (343, 360)] {
        let set = scan(&b, lo, hi, &cfg).unwrap();
        if !set.members.is_empty() {
            return Err(format!("CI members {:?} in [{lo}, {hi}]", set.members));
        }
    }
    if !two_term_solutions(34, 8, 18, Some(2)).is_empty() {
        return Err("34 = 8β + 18γ, β+γ <= 2 solvable".into());
    }
    if n3_criterion(8, 17, 18, 648).unwrap().is_some() {
        return Err("criterion accepts j=648".into());
    }
    Ok("base CI; (324,342] and (342,360] empty; 34 = 8β + 18γ, β+γ <= 2 unsolvable".into())
}

/// Bases of the periodicity sweep: every base with two or three offsets and
/// `a_n <= 24`, and 400 seeded gcd-1 four-offset bases with `a_n <= 24`.
fn sweep_bases() -> Vec<BaseSequence> {
    let mut out = Vec::new();
    for c in 2..=24u64 {
        for a in 1..c {
            out.push(base(&[a, c]));
            for b in a + 1..c {
                out.push(base(&[a, b, c]));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..400 {
        out.push(base(random_sequence(&mut rng, 4, 24).gens()));
    }
    out
}

struct Sweep {
    bases: Vec<BaseSequence>,
    reports: Vec<PeriodicityReport>,
}

fn run_sweep() -> Sweep {
    let bases = sweep_bases();
    let reports = bases.iter().map(|b| eventual_report(b).unwrap()).collect();
    Sweep { bases, reports }
}

fn criterion_4(sweep: &Sweep) -> Outcome {
    let mut tested = 0;
    let mut members = 0;
    let mut exceptions = 0;
    for r in &sweep.reports {
        let primitive = r.base.gcd() == 1;
        for &j in &r.members {
            if j % r.period != 0 {
                if primitive {
                    return Err(format!("({}) has CI member j={j} off the multiples of {}", r.base, r.period));
                }
                exceptions += 1;
            }
        }
        if primitive {
            tested += 1;
            members += r.members.len();
        }
    }
    if tested < 20 {
        return Err(format!("only {tested} gcd-1 bases"));
    }
    Ok(format!(
        "{tested} gcd-1 bases, {members} CI members above a_n^2, all multiples of a_n \
         ({exceptions} off-multiple members on bases with a common factor, not counted)"
    ))
}

fn criterion_5(sweep: &Sweep) -> Outcome {
    let mut certs = 0;
    for r in sweep.reports.iter().filter(|r| r.base.gcd() == 1) {
        for &j in &r.members {
            let cert = ci_at(&r.base, j).unwrap().unwrap();
            let w = main_theorem_witness(&r.base, j, &cert)
                .unwrap()
                .ok_or(format!("({}) j={j}: top split {cert} lacks the expected shape", r.base))?;
            if w.alphas.total() != w.k || w.s == 0 || w.s >= r.base.len() {
                return Err(format!("({}) j={j}: {w:?}", r.base));
            }
            certs += 1;
        }
    }
    Ok(format!("{certs} certificates isolate j+a_s, 1 <= s <= n-1, with sum(alpha) = k"))
}

fn criterion_6(sweep: &Sweep) -> Outcome {
    match sweep.reports.iter().find(|r| !r.window_consistent) {
        Some(r) => Err(format!("({}) verdicts differ between the two periods", r.base)),
        None => Ok(format!("{} bases repeat position by position", sweep.bases.len())),
    }
}

fn criterion_7(sweep: &Sweep) -> Outcome {
    let recurring: Vec<_> = sweep.reports.iter().filter(|r| !r.residues.is_empty()).collect();
    match recurring.iter().find(|r| !r.base_is_ci) {
        Some(r) => Err(format!("({}) has residues {:?} but is not CI", r.base, r.residues)),
        None => Ok(format!("{} bases with recurring CI shifts, all CI", recurring.len())),
    }
}

/// Compares one sequence, skipping gcd > 1; bumps `(count, ci)`.
fn oracle_check(v: Vec<u64>, oracle: &OracleConfig, tally: &mut (usize, usize)) -> Result<(), String> {
    if gcd_all(&v) != 1 {
        return Ok(());
    }
    let g = GeneratorSequence::new(v).unwrap();
    let c = compare(&g, oracle).map_err(|e| format!("({g}): {e}"))?;
    if !c.agree {
        return Err(format!("({g}): split search {}, mu {}", c.ci, c.mu));
    }
    tally.0 += 1;
    tally.1 += c.ci as usize;
    Ok(())
}

fn criterion_8() -> Outcome {
    let oracle = OracleConfig::default();
    let mut exhaustive = (0, 0);
    for x in 1..=40u64 {
        for y in x + 1..=40 {
            for z in y + 1..=40 {
                oracle_check(vec![x, y, z], &oracle, &mut exhaustive)?;
                for w in z + 1..=40 {
                    oracle_check(vec![x, y, z, w], &oracle, &mut exhaustive)?;
                }
            }
        }
    }
    let mut random = (0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..200 {
        oracle_check(random_sequence(&mut rng, 5, 60).gens().to_vec(), &oracle, &mut random)?;
    }
    Ok(format!(
        "{} exhaustive length 3-4 sequences ({} CI) and {} length-5 with seed {DEFAULT_SEED} ({} CI) agree",
        exhaustive.0, exhaustive.1, random.0, random.1
    ))
}

fn criterion_9() -> Outcome {
    let oracle = OracleConfig::default();
    let mut checked = 0;
    for b in 2..=15u64 {
        for a in 1..b {
            let fam = base(&[a, b]);
            let lo = (a * b).max(b * (b - a));
            let mut mus = Vec::new();
            for j in lo..=lo + 2 * b {
                let closed = n2_criterion(a, b, j).unwrap().is_some();
                let search = ci_at(&fam, j).unwrap().is_some();
                if closed != search {
                    return Err(format!("a={a} b={b} j={j}: closed form {closed}, search {search}"));
                }
                let mu = minimal_generator_count(&shift(&fam, j).unwrap(), &oracle).unwrap();
                if !(2..=3).contains(&mu) {
                    return Err(format!("a={a} b={b} j={j}: mu={mu}"));
                }
                mus.push(mu);
                checked += 1;
            }
            let bu = b as usize;
            if let Some(i) = (0..=bu).find(|&i| mus[i] != mus[i + bu]) {
                return Err(format!("a={a} b={b}: mu({}) != mu({})", lo + i as u64, lo + (i + bu) as u64));
            }
        }
    }
    Ok(format!("{checked} shifts: closed form matches, mu in {{2,3}}, mu periodic in b"))
}

fn criterion_10() -> Outcome {
    let cfg = SuiteConfig::default();
    let printed = SuiteConfig {
        pairing: N3Pairing::AsPrinted,
        ..cfg
    };
    let linear = SuiteConfig {
        threshold_rule: ThresholdRule::Linear,
        ..cfg
    };
    if !matches!(family_11_16_28(&printed), Ok(Err(_))) {
        return Err("other pairing passes the (11,16,28) fixture".into());
    }
    if !matches!(family_3_8_20(&linear), Ok(Err(_))) {
        return Err("threshold a_n passes the (3,8,20) fixture".into());
    }
    if let Some(r) = run_suite(&cfg).into_iter().find(|r| !r.passed) {
        return Err(format!("fixture {} fails: {}", r.name, r.detail));
    }
    Ok("both broken configurations fail their fixture; full suite passes".into())
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut line = |n: u32, outcome: Outcome| {
        match &outcome {
            Ok(d) => println!("PASS criterion {n}: {d}"),
            Err(d) => {
                failed += 1;
                println!("FAIL criterion {n}: {d}");
            }
        }
    };
    line(1, timed(Some(Duration::from_secs(5)), criterion_1));
    line(2, timed(Some(Duration::from_secs(5)), criterion_2));
    line(3, timed(Some(Duration::from_secs(2)), criterion_3));
    let sweep = run_sweep();
    line(4, criterion_4(&sweep));
    line(5, criterion_5(&sweep));
    line(6, criterion_6(&sweep));
    line(7, criterion_7(&sweep));
    line(8, timed(Some(Duration::from_secs(600)), criterion_8));
    line(9, timed(None, criterion_9));
    line(10, timed(None, criterion_10));
    if failed == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 10 criteria fail");
        ExitCode::FAILURE
    }
}
