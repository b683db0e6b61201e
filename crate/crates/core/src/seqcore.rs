//! Base sequences, shifted generator sequences and gcd normalization.
//!
//! A shift family is described by its offsets `a = (a_1 < ... < a_n)`; the
//! member at shift `j` is the generator list `(j, j + a_1, ..., j + a_n)`.
//! Both sequence types are strictly increasing lists of positive integers
//! and parse from / print to comma-separated integer lists.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// gcd of a slice; 0 for the empty slice.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

fn check_strictly_increasing(values: &[u64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::InvalidSequence("sequence must not be empty".into()));
    }
    if values[0] == 0 {
        return Err(Error::InvalidSequence("entries must be positive".into()));
    }
    if let Some(w) = values.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSequence(format!(
            "entries must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s);
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u64>()
                .map_err(|_| Error::Parse(format!("not a non-negative integer: {tok:?}")))
        })
        .collect()
}

fn write_list(f: &mut fmt::Formatter<'_>, values: &[u64]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Offsets `a_1 < ... < a_n` of a shift family (the implicit `a_0 = 0` is not stored).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct BaseSequence(Vec<u64>);

impl BaseSequence {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        check_strictly_increasing(&entries)?;
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// Number of offsets, `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The largest offset `a_n`, which is the period of the family.
    pub fn last(&self) -> u64 {
        *self.0.last().expect("non-empty by construction")
    }

    pub fn gcd(&self) -> u64 {
        gcd_all(&self.0)
    }

    /// The base read as a generator sequence in its own right.
    pub fn as_generators(&self) -> GeneratorSequence {
        GeneratorSequence(self.0.clone())
    }
}

impl TryFrom<Vec<u64>> for BaseSequence {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<BaseSequence> for Vec<u64> {
    fn from(b: BaseSequence) -> Self {
        b.0
    }
}

impl FromStr for BaseSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

impl fmt::Display for BaseSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// Exponents `g_0 < ... < g_m` of a monomial curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct GeneratorSequence(Vec<u64>);

impl GeneratorSequence {
    pub fn new(gens: Vec<u64>) -> Result<Self> {
        check_strictly_increasing(&gens)?;
        Ok(Self(gens))
    }

    pub fn gens(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }

    pub fn max(&self) -> u64 {
        *self.0.last().expect("non-empty by construction")
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }

    pub fn gcd(&self) -> u64 {
        gcd_all(&self.0)
    }

    /// Every entry divided by `d`. Caller guarantees `d` divides all entries.
    pub(crate) fn divided_by(&self, d: u64) -> GeneratorSequence {
        debug_assert!(d > 0 && self.0.iter().all(|g| g % d == 0));
        GeneratorSequence(self.0.iter().map(|g| g / d).collect())
    }

    /// Every entry multiplied by `d`, with overflow detection.
    pub fn scaled_by(&self, d: u64) -> Result<GeneratorSequence> {
        if d == 0 {
            return Err(Error::InvalidSequence("scale factor must be positive".into()));
        }
        self.0
            .iter()
            .map(|g| g.checked_mul(d).ok_or(Error::Overflow("scaled sequence")))
            .collect::<Result<Vec<_>>>()
            .map(GeneratorSequence)
    }

    /// Sub-sequence at the given (ascending) indices.
    pub(crate) fn select(&self, indices: &[usize]) -> GeneratorSequence {
        GeneratorSequence(indices.iter().map(|&i| self.0[i]).collect())
    }
}

impl TryFrom<Vec<u64>> for GeneratorSequence {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<GeneratorSequence> for Vec<u64> {
    fn from(g: GeneratorSequence) -> Self {
        g.0
    }
}

impl FromStr for GeneratorSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

impl fmt::Display for GeneratorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// The member `(j, j + a_1, ..., j + a_n)` of the shift family.
pub fn shift(base: &BaseSequence, j: u64) -> Result<GeneratorSequence> {
    if j == 0 {
        return Err(Error::Precondition("shift requires j >= 1".into()));
    }
    let mut gens = Vec::with_capacity(base.len() + 1);
    gens.push(j);
    for &a in base.entries() {
        gens.push(j.checked_add(a).ok_or(Error::Overflow("shifted sequence"))?);
    }
    Ok(GeneratorSequence(gens))
}

/// Splits off the common divisor: returns `(d, seq / d)` with `gcd(seq / d) = 1`.
pub fn normalize(seq: &GeneratorSequence) -> (u64, GeneratorSequence) {
    let d = seq.gcd();
    (d, seq.divided_by(d))
}

/// Consecutive differences `(a_1, a_2 - a_1, ..., a_n - a_{n-1})`.
pub fn differences(base: &BaseSequence) -> Vec<u64> {
    let mut prev = 0;
    base.entries()
        .iter()
        .map(|&a| {
            let d = a - prev;
            prev = a;
            d
        })
        .collect()
}
