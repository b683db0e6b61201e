//! Complete intersections along a shift family `(j, j + a_1, ..., j + a_n)`.
//!
//! Above `j = a_n²` the complete-intersection shifts recur with period `a_n`.
//! This module scans windows of `j`, summarizes two consecutive periods
//! above the threshold, extracts the structure of the top split of a
//! certificate, and evaluates the closed-form criteria for two and three
//! offsets.
//!
//! Quantities read off a certificate are expressed for the gcd-reduced shift
//! `shift(base, j) / d`; `d` is recorded as `scale` (it is 1 whenever the
//! base has gcd 1).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::delorme::{is_complete_intersection, verify_certificate, CiCertificate};
use crate::error::{Error, Result};
use crate::semigroup::{find_representation_with_sum, is_member, Representation};
use crate::seqcore::{gcd, gcd_all, normalize, shift, BaseSequence, GeneratorSequence};

pub const DEFAULT_SCAN_BUDGET: u128 = 10_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    /// Refuse windows whose estimated cost exceeds this.
    pub budget: u128,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_SCAN_BUDGET,
        }
    }
}

/// Rough work estimate: window width × bipartitions × largest generator.
pub fn scan_cost(base: &BaseSequence, j_from: u64, j_to: u64) -> u128 {
    let width = (j_to.saturating_sub(j_from) + 1) as u128;
    let bipartitions = 1u128 << (base.len() + 1).min(100);
    width * bipartitions * (j_to as u128 + base.last() as u128)
}

/// Certificate iff `shift(base, j)` is a complete intersection.
pub fn ci_at(base: &BaseSequence, j: u64) -> Result<Option<CiCertificate>> {
    Ok(is_complete_intersection(&shift(base, j)?))
}

/// The members of `CI(a)` inside `[j_from, j_to]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiSet {
    pub base: BaseSequence,
    pub j_from: u64,
    pub j_to: u64,
    pub members: Vec<u64>,
}

impl CiSet {
    pub fn contains(&self, j: u64) -> bool {
        self.members.binary_search(&j).is_ok()
    }
}

fn check_window(base: &BaseSequence, j_from: u64, j_to: u64, config: &ScanConfig) -> Result<()> {
    if j_from == 0 || j_from > j_to {
        return Err(Error::Precondition(format!(
            "need 1 <= j_from <= j_to, got [{j_from}, {j_to}]"
        )));
    }
    j_to
        .checked_add(base.last())
        .ok_or(Error::Overflow("scan window"))?;
    let cost = scan_cost(base, j_from, j_to);
    if cost > config.budget {
        return Err(Error::WindowTooLarge {
            cost,
            budget: config.budget,
        });
    }
    Ok(())
}

/// Every complete-intersection shift in `[j_from, j_to]` with its certificate,
/// ordered by `j`.
pub fn scan_certificates(
    base: &BaseSequence,
    j_from: u64,
    j_to: u64,
    config: &ScanConfig,
) -> Result<Vec<(u64, CiCertificate)>> {
    check_window(base, j_from, j_to, config)?;
    let found: Vec<Option<CiCertificate>> = (j_from..=j_to)
        .into_par_iter()
        .map(|j| ci_at(base, j).expect("window checked for overflow"))
        .collect();
    Ok((j_from..=j_to)
        .zip(found)
        .filter_map(|(j, c)| c.map(|c| (j, c)))
        .collect())
}

pub fn scan(base: &BaseSequence, j_from: u64, j_to: u64, config: &ScanConfig) -> Result<CiSet> {
    let members = scan_certificates(base, j_from, j_to, config)?
        .into_iter()
        .map(|(j, _)| j)
        .collect();
    Ok(CiSet {
        base: base.clone(),
        j_from,
        j_to,
        members,
    })
}

/// CI occurrence over two periods above the threshold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicityReport {
    pub base: BaseSequence,
    pub threshold: u64,
    pub period: u64,
    /// Classes `r mod period` whose every shift in `(threshold, threshold + 2·period]` is CI.
    pub residues: Vec<u64>,
    pub eventually_empty: bool,
    /// Verdict at `j` equals verdict at `j + period` for `j` in the first window.
    pub window_consistent: bool,
    pub base_is_ci: bool,
    /// CI members found in `(threshold, threshold + 2·period]`.
    pub members: Vec<u64>,
}

impl PeriodicityReport {
    /// Violated structural properties, empty when all hold.
    ///
    /// Residues other than 0 are only flagged for bases with gcd 1 and at
    /// least two offsets; for bases with a common divisor the shifts coprime
    /// to it can be complete intersections off the multiples of `a_n`.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.window_consistent {
            out.push("verdicts do not repeat with the period".to_string());
        }
        if !self.residues.is_empty() && !self.base_is_ci {
            out.push("CI shifts recur but the base is not CI".to_string());
        }
        if self.base.len() >= 2 && self.base.gcd() == 1 && self.residues.iter().any(|&r| r != 0) {
            out.push(format!("recurring residues {:?} are not all 0", self.residues));
        }
        if self.residues.iter().any(|&r| r >= self.period) {
            out.push("residue outside 0..period".to_string());
        }
        out
    }
}

/// Default threshold `a_n²`.
pub fn default_threshold(base: &BaseSequence) -> Result<u64> {
    base.last()
        .checked_mul(base.last())
        .ok_or(Error::Overflow("threshold a_n^2"))
}

pub fn eventual_report(base: &BaseSequence) -> Result<PeriodicityReport> {
    eventual_report_with(base, None, &ScanConfig::default())
}

/// Scans `(J0, J0 + P]` and `(J0 + P, J0 + 2P]` with `P = a_n` and
/// `J0 = threshold.unwrap_or(a_n²)`.
pub fn eventual_report_with(
    base: &BaseSequence,
    threshold: Option<u64>,
    config: &ScanConfig,
) -> Result<PeriodicityReport> {
    let threshold = match threshold {
        Some(t) => t,
        None => default_threshold(base)?,
    };
    let period = base.last();
    let from = threshold + 1;
    let to = threshold
        .checked_add(2 * period)
        .ok_or(Error::Overflow("report window"))?;
    let set = scan(base, from, to, config)?;
    let ci = |j: u64| set.contains(j);
    let window_consistent = (from..=threshold + period).all(|j| ci(j) == ci(j + period));
    let mut residues: Vec<u64> = (0..period)
        .filter(|&r| (from..=to).filter(|j| j % period == r).all(ci))
        .collect();
    residues.sort_unstable();
    Ok(PeriodicityReport {
        base: base.clone(),
        threshold,
        period,
        residues,
        eventually_empty: set.members.is_empty(),
        window_consistent,
        base_is_ci: is_complete_intersection(&base.as_generators()).is_some(),
        members: set.members,
    })
}

/// Structure of the top split of a shift certificate: the shifted generator
/// `j + a_s` sits alone and the remaining ones share the factor `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainTheoremWitness {
    /// Offset index of the isolated generator, `1 <= s <= n - 1`.
    pub s: usize,
    pub k: u64,
    /// `j = a_n · m`.
    pub m: u64,
    /// `j + a_s` over the other reduced generators, using exactly `k` of them.
    pub alphas: Representation,
    /// gcd of the reduced offsets.
    pub kprime: u64,
    /// Common divisor removed from the shifted sequence.
    pub scale: u64,
}

/// Reads the witness off the top split without any threshold requirement.
/// `None` when the split does not have the expected shape.
pub fn split_witness(
    base: &BaseSequence,
    j: u64,
    cert: &CiCertificate,
) -> Result<Option<MainTheoremWitness>> {
    let gens = shift(base, j)?;
    if !verify_certificate(&gens, cert) {
        return Err(Error::InvalidCertificate(format!(
            "certificate does not verify for ({gens})"
        )));
    }
    let n = base.len();
    let (scale, reduced) = normalize(&gens);
    let Some(split) = cert.top_split() else {
        return Ok(None);
    };
    let Some(view) = split.singleton() else {
        return Ok(None);
    };
    let s = view.index;
    if s == 0 || s >= n || j % base.last() != 0 {
        return Ok(None);
    }
    let k = view.rest_multiplier;
    let offsets: Vec<u64> = base.entries().iter().map(|a| a / scale).collect();
    let kprime = gcd_all(&offsets);
    let j_red = j / scale;
    let singleton = reduced.get(s);
    let divides_rest = j_red % k == 0
        && offsets
            .iter()
            .enumerate()
            .all(|(i, &a)| i + 1 == s || a % k == 0);
    if !divides_rest || singleton % kprime != 0 || gcd(singleton / kprime, k) != 1 || k == kprime {
        return Ok(None);
    }
    let Some(alphas) = find_representation_with_sum(singleton, view.rest_reduced, k) else {
        return Ok(None);
    };
    Ok(Some(MainTheoremWitness {
        s,
        k,
        m: j / base.last(),
        alphas,
        kprime,
        scale,
    }))
}

/// [`split_witness`] for `j > a_n²`, where every certificate must have this shape.
pub fn main_theorem_witness(
    base: &BaseSequence,
    j: u64,
    cert: &CiCertificate,
) -> Result<Option<MainTheoremWitness>> {
    let threshold = default_threshold(base)?;
    if j <= threshold {
        return Err(Error::Precondition(format!(
            "witness extraction needs j > a_n^2 = {threshold}, got {j}"
        )));
    }
    split_witness(base, j, cert)
}

/// Criterion for `(j, j + a, j + b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct N2Witness {
    /// `gcd(j, b)`.
    pub k: u64,
    pub alpha: u64,
    pub beta: u64,
    /// `gcd(a, b - a)`.
    pub s_gcd: u64,
    /// Whether `b = s_gcd · k`; holds when `s_gcd = 1` but not in general.
    pub b_equals_sk: bool,
}

/// Finds `(x, y)` with `x·p + y·q = target`, smallest `y` first, optionally
/// with `x + y <= max_sum`.
fn solve_two(target: u64, p: u64, q: u64, max_sum: Option<u64>) -> Option<(u64, u64)> {
    let mut y = 0u64;
    while y.checked_mul(q)? <= target {
        let rest = target - y * q;
        if rest % p == 0 {
            let x = rest / p;
            if max_sum.is_none_or(|m| x + y <= m) {
                return Some((x, y));
            }
        }
        y += 1;
    }
    None
}

/// `(j, j + a, j + b)` with `j >= max{ab, b(b - a)}` is a complete intersection
/// iff, after removing `d = gcd(j, a, b)`, `k = gcd(j, b) != 1` and
/// `k(j + a) = αj + β(j + b)` has a non-negative solution. The returned
/// witness is scaled back by `d`, so `k = gcd(j, b)` of the inputs.
pub fn n2_criterion(a: u64, b: u64, j: u64) -> Result<Option<N2Witness>> {
    if !(0 < a && a < b) {
        return Err(Error::Precondition(format!("need 0 < a < b, got a={a}, b={b}")));
    }
    let bound = (a.checked_mul(b)).max(b.checked_mul(b - a)).ok_or(Error::Overflow("n2 bound"))?;
    if j < bound {
        return Err(Error::Precondition(format!(
            "criterion needs j >= max(ab, b(b-a)) = {bound}, got {j}"
        )));
    }
    let d = gcd(j, gcd(a, b));
    let (jr, ar, br) = (j / d, a / d, b / d);
    let k = gcd(jr, br);
    if k == 1 {
        return Ok(None);
    }
    let target = k
        .checked_mul(jr.checked_add(ar).ok_or(Error::Overflow("n2 target"))?)
        .ok_or(Error::Overflow("n2 target"))?;
    let Some((alpha, beta)) = solve_two(target, jr, jr + br, None) else {
        return Ok(None);
    };
    let s_gcd = gcd(a, b - a);
    let k_full = k * d;
    Ok(Some(N2Witness {
        k: k_full,
        alpha: alpha * d,
        beta: beta * d,
        s_gcd,
        b_equals_sk: s_gcd.checked_mul(k_full) == Some(b),
    }))
}

/// Which pairing of gcd condition and linear equation to use for three offsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum N3Pairing {
    /// `gcd(b,c)` with `ka = βb + γc`, or `gcd(a,c)` with `kb = βa + γc`.
    Corrected,
    /// `gcd(a,c)` with `ka = βb + γc`, or `gcd(b,c)` with `kb = βa + γc`,
    /// the sum bound only on the second. Rejects valid families; kept for
    /// regression checks.
    AsPrinted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct N3Witness {
    /// 1 when `j + a` is isolated, 2 when `j + b` is.
    pub s: usize,
    pub k: u64,
    /// `k - β - γ`, the coefficient of `j / k`.
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
}

pub fn n3_criterion(a: u64, b: u64, c: u64, j: u64) -> Result<Option<N3Witness>> {
    n3_criterion_with(a, b, c, j, N3Pairing::Corrected)
}

/// `(j, j + a, j + b, j + c)` with `j > c²` is a complete intersection iff
/// `c | j` and, writing `a, b, c` without their common divisor, either
/// `k = gcd(b, c) != 1` with `ka = βb + γc, β + γ <= k`, or
/// `k = gcd(a, c) != 1` with `kb = βa + γc, β + γ <= k`.
///
/// The criterion needs `gcd(a, b, c) | j`; otherwise shifts off the
/// multiples of `c` can be complete intersections, e.g. `(3,6,12)` at
/// `j = 148`, and a precondition error is returned.
pub fn n3_criterion_with(
    a: u64,
    b: u64,
    c: u64,
    j: u64,
    pairing: N3Pairing,
) -> Result<Option<N3Witness>> {
    if !(0 < a && a < b && b < c) {
        return Err(Error::Precondition(format!(
            "need 0 < a < b < c, got ({a}, {b}, {c})"
        )));
    }
    let threshold = c.checked_mul(c).ok_or(Error::Overflow("c^2"))?;
    if j <= threshold {
        return Err(Error::Precondition(format!(
            "criterion needs j > c^2 = {threshold}, got {j}"
        )));
    }
    let g = gcd(a, gcd(b, c));
    if j % g != 0 {
        return Err(Error::Precondition(format!(
            "offsets share the factor {} which does not divide j={j}",
            g / gcd(g, j)
        )));
    }
    if j % c != 0 {
        return Ok(None);
    }
    let (a, b, c) = (a / g, b / g, c / g);
    let branch = |s: usize, k: u64, lhs: u64, p: u64, q: u64, bounded: bool| -> Option<N3Witness> {
        if k == 1 {
            return None;
        }
        let (beta, gamma) = solve_two(k * lhs, p, q, bounded.then_some(k))?;
        Some(N3Witness {
            s,
            k,
            alpha: k.saturating_sub(beta + gamma),
            beta,
            gamma,
        })
    };
    let found = match pairing {
        N3Pairing::Corrected => branch(1, gcd(b, c), a, b, c, true)
            .or_else(|| branch(2, gcd(a, c), b, a, c, true)),
        N3Pairing::AsPrinted => branch(1, gcd(a, c), a, b, c, false)
            .or_else(|| branch(2, gcd(b, c), b, a, c, true)),
    };
    Ok(found)
}

/// For a CI base: does `k_{i+1}·a_i ∈ ⟨a_{i+1}, ..., a_n⟩` hold for every
/// `i < n`, with `k_i = gcd(a_i, ..., a_n)`? When it does, some large shift
/// of the family is a complete intersection. Bases with fewer than three
/// offsets satisfy it vacuously.
pub fn converse_predicate(base: &BaseSequence) -> Result<bool> {
    if is_complete_intersection(&base.as_generators()).is_none() {
        return Err(Error::NotCompleteIntersection(base.to_string()));
    }
    let a = base.entries();
    if a.len() < 3 {
        return Ok(true);
    }
    for i in 0..a.len() - 1 {
        let tail = GeneratorSequence::new(a[i + 1..].to_vec())?;
        let k = tail.gcd();
        let target = k.checked_mul(a[i]).ok_or(Error::Overflow("converse predicate"))?;
        if !is_member(target, &tail) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One CSV/table row of a scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub j: u64,
    pub m: Option<u64>,
    pub s: Option<usize>,
    pub k: Option<u64>,
}

impl ScanRow {
    pub fn new(base: &BaseSequence, j: u64, cert: &CiCertificate) -> Result<Self> {
        let witness = split_witness(base, j, cert)?;
        Ok(Self {
            j,
            m: (j % base.last() == 0).then(|| j / base.last()),
            s: witness.as_ref().map(|w| w.s),
            k: witness.as_ref().map(|w| w.k),
        })
    }
}
