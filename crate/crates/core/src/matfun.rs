//! Matrix functionals over exact rationals: the diagram product, determinant,
//! permanent, immanants and recombinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{diagrams, PartitionDiagram};
use crate::error::{Error, Result};
use crate::limits;
use crate::pachar::{character, ShapeIndex};
use crate::perm::Permutation;
use crate::scalars::rational::{self, Rational};
use crate::scalars::Poly;
use crate::symchar::{cycle_type, mn_character, IntegerPartition};

/// An `n × n` matrix of rationals, `a_{i,j}` at row `i`, column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixWire", into = "MatrixWire")]
pub struct SquareMatrix {
    n: usize,
    // row-major
    entries: Vec<Rational>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Parse("matrix must have at least one row".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Parse(format!(
                "matrix is not square: row of length {} in order {n}",
                bad.len()
            )));
        }
        Ok(SquareMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rational::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        SquareMatrix { n, entries }
    }

    /// Entries `p/q` with `|p| <= 9`, `1 <= q <= 5`, drawn from `rng`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let entries = (0..n * n)
            .map(|_| rational::from_frac(rng.random_range(-9..=9), rng.random_range(1..=5)))
            .collect();
        SquareMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Zero-based `a_{i+1, j+1}`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    n: usize,
    entries: Vec<Vec<String>>,
}

impl TryFrom<MatrixWire> for SquareMatrix {
    type Error = Error;
    fn try_from(w: MatrixWire) -> Result<Self> {
        let rows = w
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| rational::parse(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = SquareMatrix::from_rows(rows)?;
        if m.n != w.n {
            return Err(Error::Parse(format!(
                "declared order {} but entries have order {}",
                w.n, m.n
            )));
        }
        Ok(m)
    }
}

impl From<SquareMatrix> for MatrixWire {
    fn from(m: SquareMatrix) -> Self {
        MatrixWire {
            n: m.n,
            entries: m
                .rows()
                .map(|r| r.iter().map(rational::format).collect())
                .collect(),
        }
    }
}

fn check_order(d: &PartitionDiagram, a: &SquareMatrix) -> Result<()> {
    if d.order() != a.n {
        return Err(Error::OrderMismatch {
            left: d.order(),
            right: a.n,
        });
    }
    Ok(())
}

/// `Π_d A`: zero when `d` has no propagating block; otherwise, over each
/// propagating block `B`, the product of `a_{i,j}` for top `i ∈ B` and bottom
/// `j' ∈ B`, all multiplied together.
pub fn diagram_product(d: &PartitionDiagram, a: &SquareMatrix) -> Result<Rational> {
    check_order(d, a)?;
    let propagating = d.propagating_blocks();
    if propagating.is_empty() {
        return Ok(Rational::zero());
    }
    let mut product = Rational::one();
    for (i, &top) in d.top_labels().iter().enumerate() {
        if !propagating.contains(&(top as usize)) {
            continue;
        }
        for (j, &bottom) in d.bottom_labels().iter().enumerate() {
            if bottom == top {
                product *= a.get(i, j);
            }
        }
    }
    Ok(product)
}

/// `Imm^λ(A) = Σ_σ χ^λ(σ) Π a_{i,σ(i)}`, summed over all of `S_n`.
pub fn immanant(lambda: &IntegerPartition, a: &SquareMatrix) -> Result<Rational> {
    if lambda.size() != a.n {
        return Err(Error::SizeMismatch {
            partition: lambda.size(),
            expected: a.n,
        });
    }
    limits::check("immanant", a.n, limits::IMMANANT_MAX_N)?;
    let mut total = Rational::zero();
    for sigma in Permutation::all(a.n) {
        let chi = mn_character(lambda, &cycle_type(&sigma))?;
        if chi == 0 {
            continue;
        }
        let term: Rational = (0..a.n).map(|i| a.get(i, sigma.apply(i)).clone()).product();
        total += term * rational::from_int(chi);
    }
    Ok(total)
}

/// Determinant by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
pub fn determinant(a: &SquareMatrix) -> Rational {
    let n = a.n;
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = a
        .rows()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            scale *= &l;
            row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Rational::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 {
        BigInt::one()
    } else {
        m[n - 1][n - 1].clone()
    };
    Rational::new(sign * det, scale)
}

/// Permanent by Ryser's inclusion–exclusion formula over column subsets.
pub fn permanent(a: &SquareMatrix) -> Rational {
    let n = a.n;
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for subset in 1u64..(1 << n) {
        let mut prod = Rational::one();
        for i in 0..n {
            let row_sum: Rational = (0..n)
                .filter(|j| subset & (1 << j) != 0)
                .map(|j| a.get(i, j).clone())
                .sum();
            prod *= row_sum;
            if prod.is_zero() {
                break;
            }
        }
        let size = subset.count_ones() as usize;
        if (n - size).is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

/// `Rec^{λ*}(A) = Σ_d χ^{λ*}(d) Π_d A` over every diagram of order `n`.
/// Diagrams with no propagating block contribute nothing and are skipped.
pub fn recombinant(ix: &ShapeIndex, a: &SquareMatrix) -> Result<Poly> {
    if ix.level() != a.n {
        return Err(Error::OrderMismatch {
            left: ix.level(),
            right: a.n,
        });
    }
    limits::check("recombinant", a.n, limits::TABLE_MAX_N)?;
    let all: Vec<PartitionDiagram> = diagrams(a.n)?.collect();
    all.par_iter()
        .filter(|d| d.propagation_number() > 0)
        .map(|d| {
            let weight = diagram_product(d, a)?;
            if weight.is_zero() {
                return Ok(Poly::zero());
            }
            Ok(character(ix, d)?.scale(&weight))
        })
        .try_reduce(Poly::zero, |x, y| Ok(&x + &y))
}
