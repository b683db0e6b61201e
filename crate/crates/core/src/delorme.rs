//! Recursive complete-intersection test by gluing splits.
//!
//! A generator list `A` with `gcd(A) = 1` is a complete intersection exactly
//! when it splits as `A = k1·B1 ⊔ k2·B2` over a partition of its indices with
//! `gcd(k1, k2) = 1`, `k1 ∈ ⟨B2⟩`, `k2 ∈ ⟨B1⟩` and both `B1`, `B2` complete
//! intersections. Lists of length one or two are complete intersections.
//!
//! The search returns the first split in a fixed canonical order together
//! with membership witnesses, and [`verify_certificate`] re-checks every
//! condition from scratch.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::semigroup::{find_representation, is_member, Representation};
use crate::seqcore::{gcd, normalize, GeneratorSequence};

/// One gluing split of a generator list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelormeSplit {
    pub left_indices: Vec<usize>,
    pub right_indices: Vec<usize>,
    pub k1: u64,
    pub k2: u64,
    pub left_reduced: GeneratorSequence,
    pub right_reduced: GeneratorSequence,
}

impl DelormeSplit {
    /// Checks every split condition against `gens`.
    pub fn is_valid_for(&self, gens: &GeneratorSequence) -> bool {
        let n = gens.len();
        if self.left_indices.is_empty() || self.right_indices.is_empty() {
            return false;
        }
        let mut seen = vec![false; n];
        for &i in self.left_indices.iter().chain(&self.right_indices) {
            if i >= n || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        if !seen.iter().all(|&s| s) {
            return false;
        }
        let part_ok = |indices: &[usize], k: u64, reduced: &GeneratorSequence| {
            k > 0
                && reduced.len() == indices.len()
                && indices
                    .iter()
                    .zip(reduced.gens())
                    .all(|(&i, &b)| b.checked_mul(k) == Some(gens.get(i)))
        };
        part_ok(&self.left_indices, self.k1, &self.left_reduced)
            && part_ok(&self.right_indices, self.k2, &self.right_reduced)
            && gcd(self.k1, self.k2) == 1
            && is_member(self.k1, &self.right_reduced)
            && is_member(self.k2, &self.left_reduced)
    }

    /// Whether `k1 ∉ B2` and `k2 ∉ B1`. Always true for splits of a minimal
    /// generating system; lists with redundant generators may need splits
    /// where it fails.
    pub fn avoids_generators(&self) -> bool {
        !self.right_reduced.gens().contains(&self.k1) && !self.left_reduced.gens().contains(&self.k2)
    }

    /// The isolated one-element side, if any (left first).
    pub fn singleton(&self) -> Option<SingletonView<'_>> {
        if self.left_indices.len() == 1 {
            Some(SingletonView {
                index: self.left_indices[0],
                multiplier: self.k1,
                reduced: self.left_reduced.get(0),
                rest_indices: &self.right_indices,
                rest_multiplier: self.k2,
                rest_reduced: &self.right_reduced,
            })
        } else if self.right_indices.len() == 1 {
            Some(SingletonView {
                index: self.right_indices[0],
                multiplier: self.k2,
                reduced: self.right_reduced.get(0),
                rest_indices: &self.left_indices,
                rest_multiplier: self.k1,
                rest_reduced: &self.left_reduced,
            })
        } else {
            None
        }
    }
}

/// A split read as `g_index = multiplier·(reduced) ⊔ rest_multiplier·(rest_reduced)`.
#[derive(Debug, Clone, Copy)]
pub struct SingletonView<'a> {
    pub index: usize,
    pub multiplier: u64,
    pub reduced: u64,
    pub rest_indices: &'a [usize],
    pub rest_multiplier: u64,
    pub rest_reduced: &'a GeneratorSequence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitWitnesses {
    /// `k1` over `right_reduced`.
    pub k1: Representation,
    /// `k2` over `left_reduced`.
    pub k2: Representation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitNode {
    #[serde(flatten)]
    pub split: DelormeSplit,
    pub witnesses: SplitWitnesses,
    pub left: CiCertificate,
    pub right: CiCertificate,
}

/// Proof tree for the complete-intersection property of a gcd-normalized list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CiCertificate {
    Leaf { leaf: GeneratorSequence },
    Split(Box<SplitNode>),
}

impl CiCertificate {
    pub fn top_split(&self) -> Option<&DelormeSplit> {
        match self {
            CiCertificate::Leaf { .. } => None,
            CiCertificate::Split(node) => Some(&node.split),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            CiCertificate::Leaf { .. } => 0,
            CiCertificate::Split(node) => 1 + node.left.depth().max(node.right.depth()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

fn write_part(f: &mut fmt::Formatter<'_>, k: u64, reduced: &GeneratorSequence, sub: &CiCertificate) -> fmt::Result {
    write!(f, "{k}·({reduced})")?;
    if let CiCertificate::Split(_) = sub {
        write!(f, "[{sub}]")?;
    }
    Ok(())
}

/// Nested text form, e.g. `31·(1) ⊔ 4·(7,9,12)[7·(1) ⊔ 3·(3,4)]`.
impl fmt::Display for CiCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CiCertificate::Leaf { leaf } => write!(f, "({leaf})"),
            CiCertificate::Split(node) => {
                let s = &node.split;
                write_part(f, s.k1, &s.left_reduced, &node.left)?;
                f.write_str(" ⊔ ")?;
                write_part(f, s.k2, &s.right_reduced, &node.right)
            }
        }
    }
}

fn divisors_desc(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.extend(small.into_iter().rev());
    large
}

/// Lazily yields every valid split in canonical order: left index bitmask
/// ascending, then `k1` descending, then `k2` descending.
fn splits_iter(gens: &GeneratorSequence) -> impl Iterator<Item = DelormeSplit> + '_ {
    let n = gens.len();
    let masks = if n >= 2 { 1u64..(1u64 << n) - 1 } else { 0..0 };
    masks.flat_map(move |mask| {
        let (left, right): (Vec<usize>, Vec<usize>) = (0..n).partition(|&i| mask >> i & 1 == 1);
        let left_seq = gens.select(&left);
        let right_seq = gens.select(&right);
        let k1s = divisors_desc(left_seq.gcd());
        let k2s = divisors_desc(right_seq.gcd());
        let mut out = Vec::new();
        for &k1 in &k1s {
            let left_reduced = left_seq.divided_by(k1);
            for &k2 in &k2s {
                if gcd(k1, k2) != 1 {
                    continue;
                }
                let right_reduced = right_seq.divided_by(k2);
                if is_member(k1, &right_reduced) && is_member(k2, &left_reduced) {
                    out.push(DelormeSplit {
                        left_indices: left.clone(),
                        right_indices: right.clone(),
                        k1,
                        k2,
                        left_reduced: left_reduced.clone(),
                        right_reduced,
                    });
                }
            }
        }
        out
    })
}

/// All valid gluing splits of `gens` in canonical order.
///
/// `(k1, k2)` range over all divisor pairs of the two parts' gcds. Lists with
/// fewer than two entries have no splits.
pub fn enumerate_splits(gens: &GeneratorSequence) -> Vec<DelormeSplit> {
    splits_iter(gens).collect()
}

const MEMO_CAPACITY: usize = 1 << 18;

/// Memoizing decision procedure; verdicts are keyed by the normalized list.
#[derive(Default)]
pub struct CiDecider {
    memo: RwLock<HashMap<Vec<u64>, Option<CiCertificate>>>,
}

impl CiDecider {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static CiDecider {
        static DECIDER: OnceLock<CiDecider> = OnceLock::new();
        DECIDER.get_or_init(CiDecider::new)
    }

    pub fn clear(&self) {
        self.memo.write().expect("memo poisoned").clear();
    }

    pub fn decide(&self, gens: &GeneratorSequence) -> Option<CiCertificate> {
        let (_, reduced) = normalize(gens);
        if reduced.len() <= 2 {
            return Some(CiCertificate::Leaf { leaf: reduced });
        }
        if let Some(hit) = self.memo.read().expect("memo poisoned").get(reduced.gens()) {
            return hit.clone();
        }
        let verdict = self.search(&reduced);
        let mut memo = self.memo.write().expect("memo poisoned");
        if memo.len() >= MEMO_CAPACITY {
            memo.clear();
        }
        memo.insert(reduced.gens().to_vec(), verdict.clone());
        verdict
    }

    fn search(&self, reduced: &GeneratorSequence) -> Option<CiCertificate> {
        for split in splits_iter(reduced) {
            let Some(left) = self.decide(&split.left_reduced) else {
                continue;
            };
            let Some(right) = self.decide(&split.right_reduced) else {
                continue;
            };
            let witnesses = SplitWitnesses {
                k1: find_representation(split.k1, &split.right_reduced)?,
                k2: find_representation(split.k2, &split.left_reduced)?,
            };
            return Some(CiCertificate::Split(Box::new(SplitNode {
                split,
                witnesses,
                left,
                right,
            })));
        }
        None
    }
}

/// The first certificate in canonical order, or `None` if `gens` is not a
/// complete intersection. The certificate describes `gens / gcd(gens)`.
pub fn is_complete_intersection(gens: &GeneratorSequence) -> Option<CiCertificate> {
    CiDecider::global().decide(gens)
}

/// Re-checks a certificate bottom-up against `gens` (after gcd normalization).
pub fn verify_certificate(gens: &GeneratorSequence, cert: &CiCertificate) -> bool {
    let (_, reduced) = normalize(gens);
    verify_normalized(&reduced, cert)
}

fn verify_normalized(reduced: &GeneratorSequence, cert: &CiCertificate) -> bool {
    match cert {
        CiCertificate::Leaf { leaf } => reduced.len() <= 2 && leaf == reduced,
        CiCertificate::Split(node) => {
            let s = &node.split;
            let w = &node.witnesses;
            s.is_valid_for(reduced)
                && w.k1.target == s.k1
                && w.k1.is_valid_for(&s.right_reduced)
                && w.k2.target == s.k2
                && w.k2.is_valid_for(&s.left_reduced)
                && verify_certificate(&s.left_reduced, &node.left)
                && verify_certificate(&s.right_reduced, &node.right)
        }
    }
}
