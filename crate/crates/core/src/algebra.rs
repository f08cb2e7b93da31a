//! The partition algebra `P_n(r)`: formal combinations of diagrams with
//! rational-function coefficients, multiplied by stacking. Each component
//! closed off in the middle of a stack contributes a factor `r`.

use std::collections::BTreeMap;
use std::ops::Add;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{diagrams, PartitionDiagram};
use crate::error::{Error, Result};
use crate::limits;
use crate::scalars::{rational, Poly, RatFunc};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "ElementWire", into = "ElementWire")]
pub struct AlgebraElement {
    order: usize,
    terms: BTreeMap<PartitionDiagram, RatFunc>,
}

impl AlgebraElement {
    pub fn zero(order: usize) -> Self {
        AlgebraElement {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(d: PartitionDiagram) -> Self {
        Self::term(d, RatFunc::one())
    }

    pub fn term(d: PartitionDiagram, coeff: RatFunc) -> Self {
        let mut e = Self::zero(d.order());
        e.add_term(d, coeff);
        e
    }

    /// Collects terms, summing repeated diagrams. All diagrams must have the
    /// given order.
    pub fn from_terms(
        order: usize,
        terms: impl IntoIterator<Item = (PartitionDiagram, RatFunc)>,
    ) -> Result<Self> {
        let mut e = Self::zero(order);
        for (d, c) in terms {
            if d.order() != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: d.order(),
                });
            }
            e.add_term(d, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, d: PartitionDiagram, coeff: RatFunc) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// The unit `{{1,1'}, .., {n,n'}}`.
    pub fn identity(order: usize) -> Self {
        Self::basis(PartitionDiagram::identity(order))
    }

    /// `E_ℓ = (1/r) · {{1,1'}, .., {ℓ-1,(ℓ-1)'}, {ℓ, .., n}, {ℓ', .., n'}}`.
    pub fn e_idempotent(order: usize, ell: usize) -> Result<Self> {
        if ell == 0 || ell > order {
            return Err(Error::OutOfRange {
                value: ell,
                min: 1,
                max: order,
            });
        }
        let mut raw = vec![0usize; 2 * order];
        for i in 0..order {
            let (top, bottom) = if i + 1 < ell {
                (i, i)
            } else {
                (usize::MAX, usize::MAX - 1)
            };
            raw[i] = top;
            raw[order + i] = bottom;
        }
        let d = PartitionDiagram::from_position_labels(order, &raw)?;
        let inv_r = RatFunc::one()
            .try_div(&Poly::r().into())
            .expect("r is nonzero");
        Ok(Self::term(d, inv_r))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartitionDiagram, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &PartitionDiagram) -> RatFunc {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut e = Self::zero(self.order);
        for (d, a) in &self.terms {
            e.add_term(d.clone(), a * c);
        }
        e
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut e = self.clone();
        for (d, c) in &other.terms {
            e.add_term(d.clone(), c.clone());
        }
        Ok(e)
    }

    /// Bilinear extension of `d1 · d2 = r^loops · (d1 stacked above d2)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut e = Self::zero(self.order);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let res = a.compose(b)?;
                let coeff =
                    &(ca * cb) * &RatFunc::from(Poly::monomial(rational::from_int(1), res.loops));
                e.add_term(res.diagram, coeff);
            }
        }
        Ok(e)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    /// Panics on order mismatch; use [`AlgebraElement::try_add`] otherwise.
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("orders must agree")
    }
}

fn r_power_counts_to_poly(counts: &[u64]) -> Poly {
    Poly::from_coeffs(
        counts
            .iter()
            .map(|&c| rational::from_int(c as i64))
            .collect(),
    )
}

/// Trace of left multiplication by `d` on the full diagram basis, i.e. the
/// character of the left regular representation at `d`.
pub fn left_regular_trace(d: &PartitionDiagram) -> Result<Poly> {
    let n = d.order();
    limits::check("regular representation trace", n, limits::TABLE_MAX_N)?;
    let basis: Vec<PartitionDiagram> = diagrams(n)?.collect();
    let counts = basis
        .par_iter()
        .fold(
            || vec![0u64; 2 * n + 1],
            |mut acc, b| {
                let res = d.compose(b).expect("same order");
                if &res.diagram == b {
                    acc[res.loops] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; 2 * n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(r_power_counts_to_poly(&counts))
}

/// Trace of left multiplication by `d` restricted to the span of `basis`.
///
/// The span must be closed under left multiplication by `d`; this is checked
/// and reported as [`Error::NotInvariant`].
pub fn left_ideal_trace_on(d: &PartitionDiagram, basis: &[PartitionDiagram]) -> Result<Poly> {
    let mut counts = vec![0u64; 2 * d.order() + 1];
    for b in basis {
        let res = d.compose(b)?;
        if !basis.contains(&res.diagram) {
            return Err(Error::NotInvariant(format!(
                "{d} · {b} = r^{} {}",
                res.loops, res.diagram
            )));
        }
        if &res.diagram == b {
            counts[res.loops] += 1;
        }
    }
    Ok(r_power_counts_to_poly(&counts))
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    diagram: PartitionDiagram,
    coeff: RatFunc,
}

#[derive(Serialize, Deserialize)]
struct ElementWire {
    n: usize,
    terms: Vec<TermWire>,
}

impl TryFrom<ElementWire> for AlgebraElement {
    type Error = Error;
    fn try_from(w: ElementWire) -> Result<Self> {
        AlgebraElement::from_terms(w.n, w.terms.into_iter().map(|t| (t.diagram, t.coeff)))
    }
}

impl From<AlgebraElement> for ElementWire {
    fn from(e: AlgebraElement) -> Self {
        ElementWire {
            n: e.order,
            terms: e
                .terms
                .into_iter()
                .map(|(diagram, coeff)| TermWire { diagram, coeff })
                .collect(),
        }
    }
}
