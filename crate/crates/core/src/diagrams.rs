//! Partition diagrams of order `n`: set partitions of the `2n` vertices
//! `{1, .., n, 1', .., n'}`.
//!
//! Vertices are totally ordered `1 < 2 < .. < n < 1' < .. < n'`. A diagram is
//! stored as the restricted growth string of its blocks over that order, which
//! makes the representation canonical: blocks are numbered by least vertex,
//! and two diagrams are equal iff their label strings are equal. The derived
//! `Ord` compares label strings lexicographically, which is also the order in
//! which [`diagrams`] yields them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::limits;
use crate::perm::Permutation;
use crate::setpart::{block_count, canonical_labels, SetPartitions};

/// Largest order the label encoding can hold (two rows of at most 127).
pub const MAX_ORDER: usize = 127;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    Top,
    Bottom,
}

/// A vertex `i` (top) or `i'` (bottom), with `index` in `1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub row: Row,
    pub index: usize,
}

impl Vertex {
    pub fn top(index: usize) -> Self {
        Vertex {
            row: Row::Top,
            index,
        }
    }

    pub fn bottom(index: usize) -> Self {
        Vertex {
            row: Row::Bottom,
            index,
        }
    }

    /// Signed encoding: `+i` for top, `-i` for bottom.
    pub fn signed(self) -> i64 {
        match self.row {
            Row::Top => self.index as i64,
            Row::Bottom => -(self.index as i64),
        }
    }

    pub fn from_signed(v: i64) -> Result<Self> {
        match v {
            0 => Err(Error::Parse("vertex 0 does not exist".into())),
            v if v > 0 => Ok(Vertex::top(v as usize)),
            v => Ok(Vertex::bottom(v.unsigned_abs() as usize)),
        }
    }

    fn position(self, n: usize) -> usize {
        match self.row {
            Row::Top => self.index - 1,
            Row::Bottom => n + self.index - 1,
        }
    }

    fn at_position(pos: usize, n: usize) -> Self {
        if pos < n {
            Vertex::top(pos + 1)
        } else {
            Vertex::bottom(pos - n + 1)
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::Top => write!(f, "{}", self.index),
            Row::Bottom => write!(f, "{}'", self.index),
        }
    }
}

/// A partition diagram in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DiagramWire", into = "DiagramWire")]
pub struct PartitionDiagram {
    order: usize,
    // positions 0..n are the top row, n..2n the bottom row
    labels: Vec<u8>,
}

/// Result of stacking two diagrams: the glued diagram and the number of
/// components that were closed off in the middle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionResult {
    pub diagram: PartitionDiagram,
    pub loops: usize,
}

impl PartitionDiagram {
    /// Builds a diagram from an arbitrary block labelling of the `2n`
    /// positions (top row first).
    pub fn from_position_labels<T: Copy + Eq>(order: usize, raw: &[T]) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OutOfRange {
                value: order,
                min: 1,
                max: MAX_ORDER,
            });
        }
        if raw.len() != 2 * order {
            return Err(Error::Parse(format!(
                "expected {} vertex labels, got {}",
                2 * order,
                raw.len()
            )));
        }
        Ok(PartitionDiagram {
            order,
            labels: canonical_labels(raw),
        })
    }

    pub(crate) fn from_rgs(order: usize, labels: Vec<u8>) -> Self {
        debug_assert_eq!(labels.len(), 2 * order);
        PartitionDiagram { order, labels }
    }

    /// Builds a diagram from its blocks; every vertex must appear exactly once.
    pub fn from_blocks<B: AsRef<[Vertex]>>(order: usize, blocks: &[B]) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OutOfRange {
                value: order,
                min: 1,
                max: MAX_ORDER,
            });
        }
        let mut raw = vec![usize::MAX; 2 * order];
        for (b, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            for v in block {
                if v.index == 0 || v.index > order {
                    return Err(Error::Parse(format!("vertex {v} outside order {order}")));
                }
                let slot = &mut raw[v.position(order)];
                if *slot != usize::MAX {
                    return Err(Error::Parse(format!("vertex {v} appears twice")));
                }
                *slot = b;
            }
        }
        if let Some(pos) = raw.iter().position(|&b| b == usize::MAX) {
            return Err(Error::Parse(format!(
                "vertex {} is not covered",
                Vertex::at_position(pos, order)
            )));
        }
        Self::from_position_labels(order, &raw)
    }

    /// Builds a diagram from blocks in the signed encoding (`-i` for `i'`).
    pub fn from_signed_blocks<B: AsRef<[i64]>>(order: usize, blocks: &[B]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| b.as_ref().iter().map(|&v| Vertex::from_signed(v)).collect())
            .collect::<Result<Vec<Vec<Vertex>>>>()?;
        Self::from_blocks(order, &blocks)
    }

    /// `{{1,1'}, .., {n,n'}}`
    pub fn identity(order: usize) -> Self {
        Self::from_permutation(&Permutation::identity(order))
    }

    /// `{{1, p(1)'}, .., {n, p(n)'}}`
    pub fn from_permutation(p: &Permutation) -> Self {
        let n = p.order();
        let mut raw = vec![0usize; 2 * n];
        for i in 0..n {
            raw[i] = i;
            raw[n + p.apply(i)] = i;
        }
        PartitionDiagram {
            order: n,
            labels: canonical_labels(&raw),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Restricted growth string over the vertex order `1..n, 1'..n'`.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn top_labels(&self) -> &[u8] {
        &self.labels[..self.order]
    }

    pub fn bottom_labels(&self) -> &[u8] {
        &self.labels[self.order..]
    }

    pub fn block_count(&self) -> usize {
        block_count(&self.labels)
    }

    /// Blocks in canonical order, each listing top vertices then bottom
    /// vertices in ascending order.
    pub fn blocks(&self) -> Vec<Vec<Vertex>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (pos, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(Vertex::at_position(pos, self.order));
        }
        blocks
    }

    pub fn signed_blocks(&self) -> Vec<Vec<i64>> {
        self.blocks()
            .into_iter()
            .map(|b| b.into_iter().map(Vertex::signed).collect())
            .collect()
    }

    /// For each block, whether it meets the top and the bottom row.
    fn block_rows(&self) -> Vec<(bool, bool)> {
        let mut rows = vec![(false, false); self.block_count()];
        for (pos, &l) in self.labels.iter().enumerate() {
            if pos < self.order {
                rows[l as usize].0 = true;
            } else {
                rows[l as usize].1 = true;
            }
        }
        rows
    }

    /// Indices (canonical block numbers) of the blocks meeting both rows.
    pub fn propagating_blocks(&self) -> Vec<usize> {
        self.block_rows()
            .into_iter()
            .enumerate()
            .filter(|(_, (t, b))| *t && *b)
            .map(|(i, _)| i)
            .collect()
    }

    /// Number of blocks containing both a top and a bottom vertex.
    pub fn propagation_number(&self) -> usize {
        self.block_rows()
            .into_iter()
            .filter(|(t, b)| *t && *b)
            .count()
    }

    /// The permutation `p` with blocks `{i, p(i)'}`, if every block is such a pair.
    pub fn as_permutation(&self) -> Option<Permutation> {
        let n = self.order;
        if self.block_count() != n {
            return None;
        }
        // with n blocks, each block is a pair iff the top row uses every label
        // once and so does the bottom row
        let mut image = vec![usize::MAX; n];
        for (i, &l) in self.top_labels().iter().enumerate() {
            if l as usize != i {
                return None;
            }
        }
        for (j, &l) in self.bottom_labels().iter().enumerate() {
            let slot = &mut image[l as usize];
            if *slot != usize::MAX {
                return None;
            }
            *slot = j;
        }
        Permutation::from_images(image).ok()
    }

    pub fn is_permutation(&self) -> bool {
        self.as_permutation().is_some()
    }

    /// Stacks `self` above `lower`, gluing `self`'s bottom row to `lower`'s
    /// top row.
    pub fn compose(&self, lower: &PartitionDiagram) -> Result<CompositionResult> {
        let n = self.order;
        if lower.order != n {
            return Err(Error::OrderMismatch {
                left: n,
                right: lower.order,
            });
        }
        // points: 0..n upper top, n..2n middle, 2n..3n lower bottom
        let mut dsu = Dsu::new(3 * n);
        dsu.union_by_labels(&self.labels, |p| p);
        dsu.union_by_labels(&lower.labels, |p| p + n);

        let mut raw = Vec::with_capacity(2 * n);
        for p in 0..n {
            raw.push(dsu.find(p));
        }
        for p in 2 * n..3 * n {
            raw.push(dsu.find(p));
        }
        let mut middle: Vec<usize> = (n..2 * n).map(|p| dsu.find(p)).collect();
        middle.sort_unstable();
        middle.dedup();
        let loops = middle.iter().filter(|root| !raw.contains(root)).count();
        Ok(CompositionResult {
            diagram: PartitionDiagram {
                order: n,
                labels: canonical_labels(&raw),
            },
            loops,
        })
    }

    /// Relabels `i -> σ(i)` and `i' -> σ(i)'`.
    pub fn conjugate_by_permutation(&self, sigma: &Permutation) -> Result<Self> {
        let n = self.order;
        if sigma.order() != n {
            return Err(Error::OrderMismatch {
                left: n,
                right: sigma.order(),
            });
        }
        let mut raw = vec![0u8; 2 * n];
        for i in 0..n {
            raw[sigma.apply(i)] = self.labels[i];
            raw[n + sigma.apply(i)] = self.labels[n + i];
        }
        Ok(PartitionDiagram {
            order: n,
            labels: canonical_labels(&raw),
        })
    }

    /// Representative of the orbit under simultaneous relabelling of both
    /// rows: the least label string over all `n!` relabellings.
    pub fn conjugation_canonical(&self) -> Self {
        Permutation::all(self.order)
            .iter()
            .map(|s| {
                self.conjugate_by_permutation(s)
                    .expect("orders agree by construction")
            })
            .min()
            .expect("at least one permutation")
    }

    /// The diagram of order `n + 1` with singleton blocks `{n+1}` and
    /// `{(n+1)'}` appended.
    pub fn pad_with_singletons(&self) -> Result<Self> {
        let n = self.order;
        let mut raw: Vec<usize> = Vec::with_capacity(2 * n + 2);
        raw.extend(self.top_labels().iter().map(|&l| l as usize));
        raw.push(usize::MAX);
        raw.extend(self.bottom_labels().iter().map(|&l| l as usize));
        raw.push(usize::MAX - 1);
        Self::from_position_labels(n + 1, &raw)
    }
}

/// Lazily enumerates every diagram of order `n` in canonical order.
pub fn diagrams(n: usize) -> Result<impl Iterator<Item = PartitionDiagram>> {
    if n == 0 {
        return Err(Error::OutOfRange {
            value: 0,
            min: 1,
            max: limits::effective_max(limits::ENUMERATE_MAX_N),
        });
    }
    limits::check("diagram enumeration", n, limits::ENUMERATE_MAX_N)?;
    Ok(SetPartitions::new(2 * n).map(move |labels| PartitionDiagram::from_rgs(n, labels)))
}

/// All `Bell(2n)` diagrams of order `n`.
pub fn enumerate_diagrams(n: usize) -> Result<Vec<PartitionDiagram>> {
    Ok(diagrams(n)?.collect())
}

impl fmt::Display for PartitionDiagram {
    /// `{{1,2'},{2,1'}}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (b, block) in self.blocks().iter().enumerate() {
            if b > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (i, v) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the text form. The order is the largest vertex index present.
impl FromStr for PartitionDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        let order = blocks
            .iter()
            .flatten()
            .map(|v| v.index)
            .max()
            .ok_or_else(|| Error::Parse("diagram has no vertices".into()))?;
        PartitionDiagram::from_blocks(order, &blocks)
    }
}

fn parse_blocks(s: &str) -> Result<Vec<Vec<Vertex>>> {
    let err = || Error::Parse(format!("malformed diagram {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(err)?;
    let mut blocks = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let body_start = rest.strip_prefix('{').ok_or_else(err)?;
        let close = body_start.find('}').ok_or_else(err)?;
        let body = &body_start[..close];
        let mut block = Vec::new();
        for tok in body.split(',') {
            let (digits, row) = match tok.strip_suffix('\'') {
                Some(d) => (d, Row::Bottom),
                None => (tok, Row::Top),
            };
            let index: usize = digits.parse().map_err(|_| err())?;
            block.push(Vertex { row, index });
        }
        blocks.push(block);
        rest = &body_start[close + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            if r.is_empty() {
                return Err(err());
            }
            rest = r;
        } else if !rest.is_empty() {
            return Err(err());
        }
    }
    Ok(blocks)
}

#[derive(Serialize, Deserialize)]
struct DiagramWire {
    n: usize,
    blocks: Vec<Vec<i64>>,
}

impl TryFrom<DiagramWire> for PartitionDiagram {
    type Error = Error;
    fn try_from(w: DiagramWire) -> Result<Self> {
        PartitionDiagram::from_signed_blocks(w.n, &w.blocks)
    }
}

impl From<PartitionDiagram> for DiagramWire {
    fn from(d: PartitionDiagram) -> Self {
        DiagramWire {
            n: d.order,
            blocks: d.signed_blocks(),
        }
    }
}
