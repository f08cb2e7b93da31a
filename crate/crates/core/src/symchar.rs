//! Integer partitions and irreducible characters of the symmetric group.
//!
//! Character values come from the Murnaghan–Nakayama rule, evaluated on the
//! beta-set (abacus) of the shape: removing a border strip of length `m`
//! moves one bead from position `b` to an empty position `b - m`, with sign
//! `(-1)^(beads strictly between)`. Results are memoized process-wide.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A partition `λ = (λ1 >= λ2 >= .. > 0)`; the empty partition is `∅`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

/// Cycle lengths of a permutation, as a partition of its order.
pub type CycleType = IntegerPartition;

impl IntegerPartition {
    /// Validates that `parts` is non-increasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts must be non-increasing: {parts:?}"
            )));
        }
        Ok(IntegerPartition { parts })
    }

    /// Sorts arbitrary positive parts into a partition (zeros are dropped).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition { parts }
    }

    pub fn empty() -> Self {
        IntegerPartition::default()
    }

    /// The one-row shape `(n)`, or `∅` for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column shape `(1^n)`.
    pub fn column(n: usize) -> Self {
        IntegerPartition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each part size: `m[i]` for parts equal to `i`.
    pub fn multiplicities(&self) -> HashMap<usize, usize> {
        let mut m = HashMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Conjugate (transposed) shape.
    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        IntegerPartition { parts }
    }

    /// Size of the centralizer of a permutation with this cycle type:
    /// `z = Π i^{m_i} m_i!`.
    pub fn centralizer_size(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| (i as u128).pow(m as u32) * (1..=m as u128).product::<u128>())
            .product()
    }
}

impl TryFrom<Vec<usize>> for IntegerPartition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        IntegerPartition::new(parts)
    }
}

impl From<IntegerPartition> for Vec<usize> {
    fn from(p: IntegerPartition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for IntegerPartition {
    /// `(2,1)`; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the JSON array form, e.g. `[2,1]` or `[]`.
impl FromStr for IntegerPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = serde_json::from_str(s.trim())
            .map_err(|e| Error::Parse(format!("invalid partition {s:?}: {e}")))?;
        IntegerPartition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first, `(1^n)` last.
pub fn all_partitions(n: usize) -> Vec<IntegerPartition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if remaining == 0 {
            out.push(IntegerPartition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn cycle_type(sigma: &Permutation) -> CycleType {
    IntegerPartition::from_unsorted(sigma.cycle_lengths())
}

type CharKey = (IntegerPartition, IntegerPartition);

fn cache() -> &'static RwLock<HashMap<CharKey, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<CharKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ^λ(μ)`: the irreducible character of `S_n` indexed by `λ`, at a
/// permutation of cycle type `μ`.
pub fn mn_character(lambda: &IntegerPartition, mu: &CycleType) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            partition: lambda.size(),
            expected: mu.size(),
        });
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = cache().read().expect("cache poisoned").get(&key) {
        return Ok(v);
    }
    let value = murnaghan_nakayama(&beta_set(lambda), mu.parts());
    // concurrent writers store the same value
    cache().write().expect("cache poisoned").insert(key, value);
    Ok(value)
}

/// First-column hook lengths `λ_i + (ℓ - i)`, descending, for `i = 1..ℓ`.
fn beta_set(lambda: &IntegerPartition) -> Vec<usize> {
    let l = lambda.len();
    lambda
        .parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i)
        .collect()
}

fn murnaghan_nakayama(beta: &[usize], strips: &[usize]) -> i64 {
    let Some((&m, rest)) = strips.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < m {
            continue;
        }
        let target = b - m;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&next, rest);
    }
    total
}

/// Number of standard Young tableaux of shape `λ`: `n! / Π hooks`.
///
/// Panics if `|λ| > 34` (the factorial leaves `u128`).
pub fn hook_dimension(lambda: &IntegerPartition) -> u64 {
    let n = lambda.size();
    assert!(n <= 34, "hook_dimension supports |λ| <= 34");
    let conj = lambda.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts[j] - i - 1;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    let fact: u128 = (1..=n as u128).product();
    u64::try_from(fact / hooks).expect("dimension fits in u64")
}
