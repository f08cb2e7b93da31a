//! Irreducible characters of the partition algebra `P_n(r)` for generic `r`.
//!
//! The irreducible module indexed by `λ*` (with `k = |λ*| <= n`) is realized
//! as the cell module spanned by half-diagrams with `k` marked blocks, tensored
//! with the Specht module of `λ*`. A diagram acts monomially: it sends a
//! half-diagram to another one (or to zero), times a power of `r`, and
//! permutes the marks. The trace therefore only needs symmetric-group
//! character values at the cycle types of those mark permutations, and no
//! representation matrices are built.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{diagrams, PartitionDiagram};
use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::limits;
use crate::perm::Permutation;
use crate::scalars::{rational, Poly};
use crate::setpart::{block_count, canonical_labels, SetPartitions};
use crate::symchar::{all_partitions, cycle_type, hook_dimension, mn_character, IntegerPartition};

/// The shape `λ*` of an irreducible `P_n(r)`-module together with its level `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeIndex {
    shape: IntegerPartition,
    level: usize,
}

impl ShapeIndex {
    pub fn new(shape: IntegerPartition, level: usize) -> Result<Self> {
        if shape.size() > level {
            return Err(Error::ShapeTooLarge {
                shape: shape.to_string(),
                size: shape.size(),
                level,
            });
        }
        Ok(ShapeIndex { shape, level })
    }

    pub fn shape(&self) -> &IntegerPartition {
        &self.shape
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Number of marked blocks, `|λ*|`.
    pub fn marks(&self) -> usize {
        self.shape.size()
    }
}

impl fmt::Display for ShapeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at level {}", self.shape, self.level)
    }
}

/// Every shape with `|λ*| <= n`, by increasing size, each size in
/// reverse-lexicographic order.
pub fn shapes(n: usize) -> Vec<ShapeIndex> {
    (0..=n)
        .flat_map(all_partitions)
        .map(|shape| ShapeIndex { shape, level: n })
        .collect()
}

/// A set partition of `{1, .., n}` with some blocks marked. Marks are labelled
/// `1..k` in order of the marked blocks' least elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfDiagram {
    labels: Vec<u8>,
    // canonical block numbers of the marked blocks, ascending
    marked: Vec<u8>,
}

impl HalfDiagram {
    /// `labels` is any block labelling of `1..=n`; `marked` lists the labels
    /// (in that labelling) of the marked blocks.
    pub fn new<T: Copy + Eq>(raw: &[T], marked: &[T]) -> Result<Self> {
        let labels = canonical_labels(raw);
        let mut marks = Vec::with_capacity(marked.len());
        for m in marked {
            let pos = raw
                .iter()
                .position(|v| v == m)
                .ok_or_else(|| Error::Parse("marked label names no block".into()))?;
            marks.push(labels[pos]);
        }
        marks.sort_unstable();
        if marks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("block marked twice".into()));
        }
        Ok(HalfDiagram {
            labels,
            marked: marks,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of marked blocks.
    pub fn marks(&self) -> usize {
        self.marked.len()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Blocks as one-based vertex lists with their mark (`Some(label)`).
    pub fn blocks(&self) -> Vec<(Vec<usize>, Option<usize>)> {
        let mut blocks: Vec<(Vec<usize>, Option<usize>)> =
            vec![(Vec::new(), None); block_count(&self.labels)];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].0.push(i + 1);
        }
        for (label, &b) in self.marked.iter().enumerate() {
            blocks[b as usize].1 = Some(label + 1);
        }
        blocks
    }
}

impl fmt::Display for HalfDiagram {
    /// `{{1,2}*,{3}}`, a star after each marked block.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks()
            .into_iter()
            .map(|(vs, mark)| {
                let body: Vec<String> = vs.iter().map(ToString::to_string).collect();
                format!(
                    "{{{}}}{}",
                    body.join(","),
                    if mark.is_some() { "*" } else { "" }
                )
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Every half-diagram of order `n` with exactly `k` marked blocks.
pub fn enumerate_half_diagrams(n: usize, k: usize) -> Vec<HalfDiagram> {
    let mut out = Vec::new();
    for labels in SetPartitions::new(n) {
        let blocks = block_count(&labels);
        if blocks < k {
            continue;
        }
        for marked in k_subsets(blocks, k) {
            out.push(HalfDiagram {
                labels: labels.clone(),
                marked,
            });
        }
    }
    out
}

fn k_subsets(m: usize, k: usize) -> Vec<Vec<u8>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i as u8);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

type HalfDiagramCache = RwLock<HashMap<(usize, usize), Arc<Vec<HalfDiagram>>>>;

fn cached_half_diagrams(n: usize, k: usize) -> Arc<Vec<HalfDiagram>> {
    static CACHE: OnceLock<HalfDiagramCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().expect("cache poisoned").get(&(n, k)) {
        return Arc::clone(v);
    }
    let v = Arc::new(enumerate_half_diagrams(n, k));
    cache
        .write()
        .expect("cache poisoned")
        .entry((n, k))
        .or_insert(v)
        .clone()
}

/// Outcome of a diagram acting on a half-diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionResult {
    /// The marks could not all be carried through to distinct top blocks.
    Zero,
    Image {
        image: HalfDiagram,
        loops: usize,
        /// Mark `i` of the input becomes mark `induced_perm(i)` of the image.
        induced_perm: Permutation,
    },
}

/// Left action of `d` on `h`: `d`'s bottom row is glued onto `h`'s vertices.
pub fn act(d: &PartitionDiagram, h: &HalfDiagram) -> Result<ActionResult> {
    let n = d.order();
    if h.order() != n {
        return Err(Error::OrderMismatch {
            left: n,
            right: h.order(),
        });
    }
    // points 0..n: d's top row; n..2n: d's bottom row glued to h
    let mut dsu = Dsu::new(2 * n);
    dsu.union_by_labels(d.labels(), |p| p);
    dsu.union_by_labels(&h.labels, |p| p + n);

    let top_roots: Vec<usize> = (0..n).map(|p| dsu.find(p)).collect();
    let mut first_vertex = vec![usize::MAX; block_count(&h.labels)];
    for (i, &l) in h.labels.iter().enumerate().rev() {
        first_vertex[l as usize] = i;
    }

    let mut marked_roots = Vec::with_capacity(h.marked.len());
    for &b in &h.marked {
        let root = dsu.find(n + first_vertex[b as usize]);
        if !top_roots.contains(&root) || marked_roots.contains(&root) {
            return Ok(ActionResult::Zero);
        }
        marked_roots.push(root);
    }

    let mut middle_roots: Vec<usize> = (n..2 * n).map(|p| dsu.find(p)).collect();
    middle_roots.sort_unstable();
    middle_roots.dedup();
    let loops = middle_roots
        .iter()
        .filter(|r| !top_roots.contains(r))
        .count();

    let image_labels = canonical_labels(&top_roots);
    let image_block_of = |root: usize| {
        let pos = top_roots
            .iter()
            .position(|&r| r == root)
            .expect("root meets top");
        image_labels[pos]
    };
    let landed: Vec<u8> = marked_roots.iter().map(|&r| image_block_of(r)).collect();
    let mut image_marked = landed.clone();
    image_marked.sort_unstable();
    let images = landed
        .iter()
        .map(|b| image_marked.binary_search(b).expect("present"))
        .collect();
    Ok(ActionResult::Image {
        image: HalfDiagram {
            labels: image_labels,
            marked: image_marked,
        },
        loops,
        induced_perm: Permutation::from_images(images)?,
    })
}

/// Direct trace computation with no memoization.
pub fn character_uncached(ix: &ShapeIndex, d: &PartitionDiagram) -> Result<Poly> {
    check_level(ix, d)?;
    let k = ix.marks();
    let mut coeffs = vec![0i64; 2 * d.order() + 1];
    for h in cached_half_diagrams(d.order(), k).iter() {
        if let ActionResult::Image {
            image,
            loops,
            induced_perm,
        } = act(d, h)?
        {
            if &image == h {
                coeffs[loops] += mn_character(&ix.shape, &cycle_type(&induced_perm))?;
            }
        }
    }
    Ok(Poly::from_coeffs(
        coeffs.into_iter().map(rational::from_int).collect(),
    ))
}

fn check_level(ix: &ShapeIndex, d: &PartitionDiagram) -> Result<()> {
    if ix.level != d.order() {
        return Err(Error::OrderMismatch {
            left: ix.level,
            right: d.order(),
        });
    }
    Ok(())
}

/// Memo of character values keyed by shape and conjugation-canonical diagram.
/// Concurrent inserts of the same key store the same value.
#[derive(Default)]
pub struct CharacterCache {
    values: RwLock<HashMap<(IntegerPartition, PartitionDiagram), Poly>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by [`character`].
    pub fn global() -> &'static CharacterCache {
        static GLOBAL: OnceLock<CharacterCache> = OnceLock::new();
        GLOBAL.get_or_init(CharacterCache::new)
    }

    pub fn character(&self, ix: &ShapeIndex, d: &PartitionDiagram) -> Result<Poly> {
        check_level(ix, d)?;
        let key = (ix.shape.clone(), d.conjugation_canonical());
        if let Some(v) = self.values.read().expect("cache poisoned").get(&key) {
            return Ok(v.clone());
        }
        let value = character_uncached(ix, &key.1)?;
        self.values
            .write()
            .expect("cache poisoned")
            .insert(key, value.clone());
        Ok(value)
    }

    pub fn len(&self) -> usize {
        self.values.read().expect("cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `χ^{λ*}(d)`, a polynomial in `r` with integer coefficients.
pub fn character(ix: &ShapeIndex, d: &PartitionDiagram) -> Result<Poly> {
    CharacterCache::global().character(ix, d)
}

/// Stirling numbers of the second kind `S(n, t)` for `t = 0..=n`.
fn stirling_row(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for m in 1..=n {
        let mut next = vec![0u64; m + 1];
        for t in 1..=m {
            let stay = if t < m { t as u64 * row[t] } else { 0 };
            next[t] = stay + row[t - 1];
        }
        row = next;
    }
    row
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Dimension of the irreducible module: `f^{λ*} · Σ_{t>=k} S(n,t) C(t,k)`.
pub fn dimension(ix: &ShapeIndex) -> u64 {
    let k = ix.marks();
    let half: u64 = stirling_row(ix.level)
        .iter()
        .enumerate()
        .skip(k)
        .map(|(t, &s)| s * binomial(t, k))
        .sum();
    hook_dimension(&ix.shape) * half
}

/// One value of a character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub shape: IntegerPartition,
    pub diagram: PartitionDiagram,
    pub value: Poly,
}

/// Every character value at level `n`: shapes in [`shapes`] order, and for
/// each shape the diagrams in canonical enumeration order.
pub fn character_table(n: usize) -> Result<Vec<TableEntry>> {
    character_table_for(n, &shapes(n))
}

/// Character values at level `n` for the given shapes only.
pub fn character_table_for(n: usize, shapes: &[ShapeIndex]) -> Result<Vec<TableEntry>> {
    limits::check("character table", n, limits::TABLE_MAX_N)?;
    let basis: Vec<PartitionDiagram> = diagrams(n)?.collect();
    let mut out = Vec::with_capacity(basis.len() * shapes.len());
    for ix in shapes {
        let values: Vec<Poly> = basis
            .par_iter()
            .map(|d| character(ix, d))
            .collect::<Result<_>>()?;
        out.extend(basis.iter().zip(values).map(|(d, value)| TableEntry {
            shape: ix.shape.clone(),
            diagram: d.clone(),
            value,
        }));
    }
    Ok(out)
}
