//! Membership, representations and Frobenius numbers of numerical semigroups.
//!
//! Everything here is bounded dynamic programming over the integers
//! `0..=b`. Membership tables are memoized per generator list in a shared
//! read-mostly cache, since scans ask many questions of the same lists.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqcore::GeneratorSequence;

/// Coefficients `alpha` with `sum(alpha_i * g_i) = target` for some generator list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Representation {
    pub target: u64,
    pub coefficients: Vec<u64>,
}

impl Representation {
    /// Total number of generators used, `sum(alpha_i)`.
    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    /// Re-evaluates the linear combination against `gens`.
    pub fn is_valid_for(&self, gens: &GeneratorSequence) -> bool {
        if self.coefficients.len() != gens.len() {
            return false;
        }
        let mut acc: u64 = 0;
        for (&c, &g) in self.coefficients.iter().zip(gens.gens()) {
            let Some(term) = c.checked_mul(g) else {
                return false;
            };
            let Some(next) = acc.checked_add(term) else {
                return false;
            };
            acc = next;
        }
        acc == self.target
    }
}

const CACHE_CAPACITY: usize = 16_384;

/// Shared memo of membership tables, keyed by generator list.
#[derive(Default)]
pub struct MembershipCache {
    tables: RwLock<HashMap<Vec<u64>, Arc<Vec<bool>>>>,
}

impl MembershipCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static MembershipCache {
        static CACHE: OnceLock<MembershipCache> = OnceLock::new();
        CACHE.get_or_init(MembershipCache::new)
    }

    pub fn clear(&self) {
        self.tables.write().expect("membership cache poisoned").clear();
    }

    pub fn is_member(&self, b: u64, gens: &GeneratorSequence) -> bool {
        if b == 0 || gens.min() == 1 {
            return true;
        }
        if b < gens.min() {
            return false;
        }
        let key = gens.gens();
        if let Some(table) = self.tables.read().expect("membership cache poisoned").get(key) {
            if (b as usize) < table.len() {
                return table[b as usize];
            }
        }
        let old_len = self
            .tables
            .read()
            .expect("membership cache poisoned")
            .get(key)
            .map_or(0, |t| t.len());
        let upto = (b as usize).max(2 * old_len).max(256);
        let table = Arc::new(membership_table(gens, upto));
        let answer = table[b as usize];
        let mut tables = self.tables.write().expect("membership cache poisoned");
        if tables.len() >= CACHE_CAPACITY {
            tables.clear();
        }
        let slot = tables.entry(key.to_vec()).or_default();
        if slot.len() < table.len() {
            *slot = table;
        }
        answer
    }
}

/// `reachable[v]` for `v in 0..=upto`.
pub fn membership_table(gens: &GeneratorSequence, upto: usize) -> Vec<bool> {
    let mut reachable = vec![false; upto + 1];
    reachable[0] = true;
    let gs: Vec<usize> = gens.gens().iter().map(|&g| g as usize).collect();
    for v in 1..=upto {
        reachable[v] = gs.iter().any(|&g| g <= v && reachable[v - g]);
    }
    reachable
}

/// Is `b` a non-negative integer combination of `gens`?
pub fn is_member(b: u64, gens: &GeneratorSequence) -> bool {
    MembershipCache::global().is_member(b, gens)
}

/// The representation of `b` with the fewest generators, ties broken by the
/// lexicographically smallest coefficient vector.
pub fn find_representation(b: u64, gens: &GeneratorSequence) -> Option<Representation> {
    if !is_member(b, gens) {
        return None;
    }
    const INF: u32 = u32::MAX;
    let n = gens.len();
    let width = b as usize + 1;
    // fewest[i][v]: fewest generators from gens[i..] summing to v.
    let mut fewest = vec![INF; (n + 1) * width];
    fewest[n * width] = 0;
    for i in (0..n).rev() {
        let g = gens.get(i) as usize;
        for v in 0..width {
            let skip = fewest[(i + 1) * width + v];
            let take = if v >= g && fewest[i * width + v - g] != INF {
                fewest[i * width + v - g] + 1
            } else {
                INF
            };
            fewest[i * width + v] = skip.min(take);
        }
    }
    if fewest[b as usize] == INF {
        return None;
    }
    let mut coefficients = vec![0u64; n];
    let mut v = b as usize;
    let mut budget = fewest[v];
    for (i, coeff) in coefficients.iter_mut().enumerate() {
        let g = gens.get(i) as usize;
        let mut t = 0usize;
        loop {
            let rest = fewest[(i + 1) * width + v - t * g];
            if rest != INF && rest as usize + t == budget as usize {
                break;
            }
            t += 1;
        }
        *coeff = t as u64;
        v -= t * g;
        budget -= t as u32;
    }
    debug_assert_eq!(v, 0);
    Some(Representation {
        target: b,
        coefficients,
    })
}

/// A representation of `b` using exactly `total` generators (counted with
/// multiplicity), lexicographically smallest if several exist.
pub fn find_representation_with_sum(
    b: u64,
    gens: &GeneratorSequence,
    total: u64,
) -> Option<Representation> {
    let lo = gens.min().checked_mul(total)?;
    if b < lo {
        return None;
    }
    if let Some(hi) = gens.max().checked_mul(total) {
        if b > hi {
            return None;
        }
    }
    let n = gens.len();
    let width = b as usize + 1;
    let layers = total as usize + 1;
    let idx = |i: usize, c: usize, v: usize| (i * layers + c) * width + v;
    // feasible[i][c][v]: v is a sum of exactly c generators from gens[i..].
    let mut feasible = vec![false; (n + 1) * layers * width];
    feasible[idx(n, 0, 0)] = true;
    for i in (0..n).rev() {
        let g = gens.get(i) as usize;
        for c in 0..layers {
            for v in 0..width {
                feasible[idx(i, c, v)] = feasible[idx(i + 1, c, v)]
                    || (c >= 1 && v >= g && feasible[idx(i, c - 1, v - g)]);
            }
        }
    }
    if !feasible[idx(0, total as usize, b as usize)] {
        return None;
    }
    let mut coefficients = vec![0u64; n];
    let (mut v, mut c) = (b as usize, total as usize);
    for (i, coeff) in coefficients.iter_mut().enumerate() {
        let g = gens.get(i) as usize;
        let mut t = 0usize;
        while !feasible[idx(i + 1, c - t, v - t * g)] {
            t += 1;
        }
        *coeff = t as u64;
        v -= t * g;
        c -= t;
    }
    debug_assert!(v == 0 && c == 0);
    Some(Representation {
        target: b,
        coefficients,
    })
}

/// Largest integer outside the semigroup, or -1 when `1` is a generator.
pub fn frobenius(gens: &GeneratorSequence) -> Result<i64> {
    let d = gens.gcd();
    if d != 1 {
        return Err(Error::FrobeniusUndefined(d));
    }
    if gens.min() == 1 {
        return Ok(-1);
    }
    let min = gens.min() as usize;
    // (min - 1)(max - 1) bounds the Frobenius number from above; the run of
    // `min` consecutive members at the end confirms the table reached it.
    let mut upto = (min - 1) * (gens.max() as usize - 1) + min;
    loop {
        let table = membership_table(gens, upto);
        if table[upto + 1 - min..].iter().all(|&r| r) {
            let f = table.iter().rposition(|&r| !r).expect("1 is not a member");
            return Ok(f as i64);
        }
        upto *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[u64]) -> GeneratorSequence {
        GeneratorSequence::new(v.to_vec()).unwrap()
    }

    /// Naive recursive membership: try every count of the first generator.
    fn naive_member(b: u64, gens: &[u64]) -> bool {
        match gens.split_first() {
            None => b == 0,
            Some((&g, rest)) => (0..=b / g).any(|t| naive_member(b - t * g, rest)),
        }
    }

    /// Every representation of `b`, lexicographic order.
    fn all_representations(b: u64, gens: &[u64]) -> Vec<Vec<u64>> {
        match gens.split_first() {
            None => {
                if b == 0 {
                    vec![vec![]]
                } else {
                    vec![]
                }
            }
            Some((&g, rest)) => {
                let mut out = Vec::new();
                for t in 0..=b / g {
                    for mut tail in all_representations(b - t * g, rest) {
                        tail.insert(0, t);
                        out.push(tail);
                    }
                }
                out
            }
        }
    }

    #[test]
    fn membership_examples() {
        let g = seq(&[3, 5]);
        assert!(is_member(0, &g));
        assert!(!is_member(7, &g));
        assert!(is_member(8, &g));
        assert!(naive_member(8, &[3, 5]) && !naive_member(7, &[3, 5]));
    }

    #[test]
    fn representation_examples() {
        assert_eq!(
            find_representation(9, &seq(&[3, 5])).unwrap().coefficients,
            vec![3, 0]
        );
        assert_eq!(all_representations(9, &[3, 5]), vec![vec![3, 0]]);
        assert!(find_representation(2, &seq(&[3, 5])).is_none());
        assert_eq!(
            find_representation(44, &seq(&[16, 28])).unwrap().coefficients,
            vec![1, 1]
        );
    }

    #[test]
    fn representation_prefers_fewest_then_lexicographic() {
        // 12 over (1, 4, 6): fewest is 2 generators, via (0,0,2) only.
        assert_eq!(
            find_representation(12, &seq(&[1, 4, 6])).unwrap().coefficients,
            vec![0, 0, 2]
        );
        // 10 over (1, 4, 6): two generators, (0,1,1) is the only one.
        assert_eq!(
            find_representation(10, &seq(&[1, 4, 6])).unwrap().coefficients,
            vec![0, 1, 1]
        );
        // 6 over (2, 3, 4): (0,2,0) and (1,0,1) tie on 2 generators.
        assert_eq!(
            find_representation(6, &seq(&[2, 3, 4])).unwrap().coefficients,
            vec![0, 2, 0]
        );
    }

    #[test]
    fn representation_with_sum_examples() {
        let g = seq(&[2, 4]);
        assert_eq!(
            find_representation_with_sum(6, &g, 2).unwrap().coefficients,
            vec![1, 1]
        );
        assert_eq!(
            find_representation_with_sum(6, &g, 3).unwrap().coefficients,
            vec![3, 0]
        );
        assert!(find_representation_with_sum(6, &seq(&[4, 5]), 1).is_none());
        assert_eq!(
            find_representation_with_sum(0, &g, 0).unwrap().coefficients,
            vec![0, 0]
        );
        assert_eq!(
            find_representation_with_sum(823, &seq(&[203, 207, 210]), 4)
                .unwrap()
                .coefficients,
            vec![2, 1, 1]
        );
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius(&seq(&[3, 5])), Ok(7));
        assert_eq!(frobenius(&seq(&[2, 3])), Ok(1));
        assert_eq!(frobenius(&seq(&[1, 7])), Ok(-1));
        assert_eq!(frobenius(&seq(&[4, 6])), Err(Error::FrobeniusUndefined(2)));
        // Sylvester: ab - a - b for coprime pairs.
        assert_eq!(frobenius(&seq(&[7, 11])), Ok(7 * 11 - 7 - 11));
        assert_eq!(frobenius(&seq(&[6, 9, 20])), Ok(43));
    }

    #[test]
    fn frobenius_matches_naive_scan() {
        for gens in [vec![3, 5], vec![2, 3], vec![5, 7, 9], vec![4, 9, 11, 14]] {
            let f = frobenius(&seq(&gens)).unwrap();
            assert!(!naive_member(f as u64, &gens));
            let cofinal = (f + 1) as u64..(f as u64 + 1 + gens[0] * 3);
            assert!(cofinal.into_iter().all(|b| naive_member(b, &gens)));
        }
    }

    #[test]
    fn dp_matches_naive_at_desk_scale() {
        let lists: &[&[u64]] = &[
            &[3, 5],
            &[4, 6, 9],
            &[7, 9, 12],
            &[5, 11, 23, 30],
            &[6, 10, 15],
            &[2, 29],
            &[13, 17, 19, 30],
        ];
        for gens in lists {
            let g = seq(gens);
            for b in 0..=200 {
                assert_eq!(is_member(b, &g), naive_member(b, gens), "{b} over {gens:?}");
            }
        }
    }

    fn arb_gens() -> impl Strategy<Value = GeneratorSequence> {
        proptest::collection::btree_set(1u64..=30, 1..=4)
            .prop_map(|s| GeneratorSequence::new(s.into_iter().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn membership_agrees_with_naive(g in arb_gens(), b in 0u64..=200) {
            prop_assert_eq!(is_member(b, &g), naive_member(b, g.gens()));
        }

        #[test]
        fn membership_is_consistent_with_predecessors(g in arb_gens(), b in 1u64..=200) {
            let via_pred = g.gens().iter().any(|&x| x <= b && is_member(b - x, &g));
            prop_assert_eq!(is_member(b, &g), via_pred);
        }

        #[test]
        fn membership_is_scale_invariant(g in arb_gens(), b in 0u64..=150, d in 1u64..=4) {
            let scaled = g.scaled_by(d).unwrap();
            prop_assert_eq!(is_member(b, &g), is_member(d * b, &scaled));
        }

        #[test]
        fn representation_is_minimal_and_lexicographic(g in arb_gens(), b in 0u64..=120) {
            let all = all_representations(b, g.gens());
            match find_representation(b, &g) {
                None => prop_assert!(all.is_empty()),
                Some(r) => {
                    prop_assert!(r.is_valid_for(&g));
                    let best = all.iter().map(|v| v.iter().sum::<u64>()).min().unwrap();
                    let expect = all.iter().find(|v| v.iter().sum::<u64>() == best).unwrap();
                    prop_assert_eq!(&r.coefficients, expect);
                }
            }
        }

        #[test]
        fn representation_with_sum_is_exact(g in arb_gens(), b in 0u64..=120, total in 0u64..=8) {
            let all = all_representations(b, g.gens());
            let expect = all.iter().find(|v| v.iter().sum::<u64>() == total);
            let got = find_representation_with_sum(b, &g, total);
            prop_assert_eq!(got.as_ref().map(|r| &r.coefficients), expect);
            if let Some(r) = got {
                prop_assert!(r.is_valid_for(&g));
                prop_assert_eq!(r.total(), total);
            }
        }
    }
}
