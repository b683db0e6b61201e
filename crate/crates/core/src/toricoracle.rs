//! Brute-force count of minimal binomial generators of a monomial curve.
//!
//! For a generator list `g` the defining ideal is graded by the semigroup.
//! In degree `b`, join two factorizations of `b` when they share a generator
//! with positive coefficient; the ideal needs exactly `components - 1`
//! minimal generators of degree `b`. Summing over degrees gives `mu`, and
//! the curve is a complete intersection iff `mu = len(g) - 1`.
//!
//! This module shares no code with the split search in [`crate::delorme`]:
//! it keeps its own reachability table and never consults the semigroup
//! cache.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqcore::{normalize, GeneratorSequence};

pub const DEFAULT_FACTORIZATION_CAP: usize = 50_000;

/// All factorizations of one degree, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationSet {
    pub degree: u64,
    pub gens: GeneratorSequence,
    pub factorizations: Vec<Vec<u64>>,
}

impl FactorizationSet {
    pub fn len(&self) -> usize {
        self.factorizations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factorizations.is_empty()
    }
}

fn reach_table(gens: &[u64], upto: usize) -> Vec<bool> {
    let mut reach = vec![false; upto + 1];
    reach[0] = true;
    for &g in gens {
        let g = g as usize;
        for v in g..=upto {
            if reach[v - g] {
                reach[v] = true;
            }
        }
    }
    reach
}

/// Enumerates every `alpha >= 0` with `sum(alpha_i * g_i) = b` by depth-first
/// search over generator indices in increasing order.
pub fn factorizations(b: u64, gens: &GeneratorSequence, cap: usize) -> Result<FactorizationSet> {
    let g = gens.gens();
    let n = g.len();
    let width = b as usize + 1;
    // suffix[i][v]: v is reachable from gens[i..]; prunes dead branches.
    let mut suffix = vec![false; (n + 1) * width];
    suffix[n * width] = true;
    for i in (0..n).rev() {
        let gi = g[i] as usize;
        for v in 0..width {
            suffix[i * width + v] =
                suffix[(i + 1) * width + v] || (v >= gi && suffix[i * width + v - gi]);
        }
    }

    let mut out = Vec::new();
    let mut current = vec![0u64; n];
    fn dfs(
        i: usize,
        rest: usize,
        g: &[u64],
        suffix: &[bool],
        width: usize,
        current: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        cap: usize,
    ) -> bool {
        if i == g.len() {
            if rest == 0 {
                if out.len() == cap {
                    return false;
                }
                out.push(current.clone());
            }
            return true;
        }
        let gi = g[i] as usize;
        let mut t = 0;
        while t * gi <= rest {
            let left = rest - t * gi;
            if suffix[(i + 1) * width + left] {
                current[i] = t as u64;
                if !dfs(i + 1, left, g, suffix, width, current, out, cap) {
                    return false;
                }
            }
            t += 1;
        }
        current[i] = 0;
        true
    }
    if suffix[b as usize] && !dfs(0, b as usize, g, &suffix, width, &mut current, &mut out, cap) {
        return Err(Error::CapExceeded { degree: b, cap });
    }
    Ok(FactorizationSet {
        degree: b,
        gens: gens.clone(),
        factorizations: out,
    })
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
    }
}

/// Connected components of the factorization graph (shared positive
/// coordinate). Returns 0 for an empty set.
pub fn graph_components(fset: &FactorizationSet) -> usize {
    let n = fset.gens.len();
    let mut uf = UnionFind::new(fset.factorizations.len());
    let mut bucket: Vec<Option<usize>> = vec![None; n];
    for (v, alpha) in fset.factorizations.iter().enumerate() {
        for (i, &c) in alpha.iter().enumerate() {
            if c > 0 {
                match bucket[i] {
                    Some(first) => uf.union(first, v),
                    None => bucket[i] = Some(v),
                }
            }
        }
    }
    uf.components
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCount {
    pub degree: u64,
    pub count: u64,
}

/// Degrees and number of minimal generators of the defining ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiProfile {
    pub gens: GeneratorSequence,
    pub bound: u64,
    pub counts: Vec<DegreeCount>,
    pub mu: u64,
}

impl BettiProfile {
    pub fn count_at(&self, degree: u64) -> u64 {
        self.counts
            .iter()
            .find(|c| c.degree == degree)
            .map_or(0, |c| c.count)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Degree bound; `None` means `frobenius + 2·max(gens)`.
    pub bound: Option<u64>,
    pub cap: usize,
    /// Skip enumeration at degrees whose generator-incidence graph is
    /// already connected. Turn off to enumerate every degree.
    pub screening: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            bound: None,
            cap: DEFAULT_FACTORIZATION_CAP,
            screening: true,
        }
    }
}

/// Largest gap of `⟨gens⟩` (gcd 1), -1 if there is none. Local to the oracle.
fn oracle_frobenius(gens: &[u64]) -> i64 {
    let min = gens[0] as usize;
    let max = *gens.last().unwrap() as usize;
    if min == 1 {
        return -1;
    }
    let upto = (min - 1) * (max - 1) + min;
    let reach = reach_table(gens, upto);
    reach.iter().rposition(|&r| !r).map_or(-1, |f| f as i64)
}

pub fn default_bound(gens: &GeneratorSequence) -> u64 {
    (oracle_frobenius(gens.gens()) + 2 * gens.max() as i64) as u64
}

/// Components of the degree-`b` factorization graph, read off the incidence
/// of generator indices: `i` occurs in some factorization iff `b - g_i` is
/// reachable, and `i`, `k` co-occur iff `b - g_i - g_k` is.
fn screened_components(b: usize, gens: &[u64], reach: &[bool]) -> usize {
    let used: Vec<usize> = (0..gens.len())
        .filter(|&i| b >= gens[i] as usize && reach[b - gens[i] as usize])
        .collect();
    if used.len() < 2 {
        return used.len();
    }
    let mut uf = UnionFind::new(used.len());
    for x in 0..used.len() {
        for y in x + 1..used.len() {
            let pair = (gens[used[x]] + gens[used[y]]) as usize;
            if b >= pair && reach[b - pair] {
                uf.union(x, y);
            }
        }
    }
    uf.components
}

/// Counts minimal generators in every degree up to the bound, then checks a
/// guard window of `max(gens)` further degrees for stray disconnections.
pub fn betti_profile(gens: &GeneratorSequence, config: &OracleConfig) -> Result<BettiProfile> {
    if gens.gcd() != 1 {
        return Err(Error::Precondition(format!(
            "oracle needs gcd 1, got gcd {} for ({gens})",
            gens.gcd()
        )));
    }
    let bound = config.bound.unwrap_or_else(|| default_bound(gens));
    if bound < gens.max() {
        return Err(Error::Precondition(format!(
            "degree bound {bound} below the largest generator {}",
            gens.max()
        )));
    }
    let upto = bound
        .checked_add(gens.max())
        .ok_or(Error::Overflow("oracle degree bound"))? as usize;
    let reach = reach_table(gens.gens(), upto);

    let mut counts = Vec::new();
    for b in 1..=upto {
        if !reach[b] {
            continue;
        }
        if config.screening && screened_components(b, gens.gens(), &reach) < 2 {
            continue;
        }
        let fset = factorizations(b as u64, gens, config.cap)?;
        let components = graph_components(&fset);
        if config.screening {
            assert_eq!(
                components,
                screened_components(b, gens.gens(), &reach),
                "incidence screening disagrees with enumeration at degree {b} of ({gens})"
            );
        }
        if components > 1 {
            if b as u64 > bound {
                return Err(Error::BoundTooSmall { bound, degree: b as u64 });
            }
            counts.push(DegreeCount {
                degree: b as u64,
                count: components as u64 - 1,
            });
        }
    }
    let mu = counts.iter().map(|c| c.count).sum();
    Ok(BettiProfile {
        gens: gens.clone(),
        bound,
        counts,
        mu,
    })
}

/// Oracle verdict: `mu = len - 1` after gcd normalization.
pub fn is_ci_oracle(gens: &GeneratorSequence) -> Result<bool> {
    is_ci_oracle_with(gens, &OracleConfig::default())
}

pub fn is_ci_oracle_with(gens: &GeneratorSequence, config: &OracleConfig) -> Result<bool> {
    let (_, reduced) = normalize(gens);
    if reduced.len() <= 2 {
        return Ok(true);
    }
    let profile = betti_profile(&reduced, config)?;
    Ok(profile.mu == reduced.len() as u64 - 1)
}

/// `mu` of the gcd-normalized list (0 for a singleton, 1 for a pair).
pub fn minimal_generator_count(gens: &GeneratorSequence, config: &OracleConfig) -> Result<u64> {
    let (_, reduced) = normalize(gens);
    match reduced.len() {
        1 => Ok(0),
        2 => Ok(1),
        _ => Ok(betti_profile(&reduced, config)?.mu),
    }
}
