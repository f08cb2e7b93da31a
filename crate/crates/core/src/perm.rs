use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, .., n}`, stored zero-based: `images[i] = p(i + 1) - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From zero-based images; fails unless the images form a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    /// From the one-line notation `p(1), .., p(n)`.
    pub fn from_one_based(values: &[usize]) -> Result<Self> {
        let images = values
            .iter()
            .map(|&v| {
                v.checked_sub(1)
                    .ok_or_else(|| Error::Parse("permutation values start at 1".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image of zero-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Lengths of the disjoint cycles, in no particular order.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// All permutations of order `n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::from_one_based(&values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.one_based()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
