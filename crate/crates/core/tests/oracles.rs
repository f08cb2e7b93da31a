use std::collections::VecDeque;

use proptest::prelude::*;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use parec_core::algebra::{left_regular_trace, AlgebraElement};
use parec_core::diagrams::enumerate_diagrams;
use parec_core::pachar::{character, dimension, shapes};
use parec_core::scalars::rational;
use parec_core::{PartitionDiagram, Poly, RatFunc};

/// Stacks `upper` on `lower` as an explicit graph on 3n nodes and reads off
/// the connected components by breadth-first search.
fn stack(upper: &PartitionDiagram, lower: &PartitionDiagram) -> (PartitionDiagram, usize) {
    let n = upper.order();
    let mut adj = vec![Vec::new(); 3 * n];
    let mut link = |blocks: Vec<Vec<i64>>, offset: usize| {
        for block in blocks {
            let nodes: Vec<usize> = block
                .iter()
                .map(|&v| {
                    if v > 0 {
                        offset + v as usize - 1
                    } else {
                        offset + n + (-v) as usize - 1
                    }
                })
                .collect();
            for w in nodes.windows(2) {
                adj[w[0]].push(w[1]);
                adj[w[1]].push(w[0]);
            }
        }
    };
    link(upper.signed_blocks(), 0);
    link(lower.signed_blocks(), n);

    let mut seen = vec![false; 3 * n];
    let mut blocks = Vec::new();
    let mut loops = 0;
    for start in 0..3 * n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut component = Vec::new();
        while let Some(v) = queue.pop_front() {
            component.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let outer: Vec<i64> = component
            .iter()
            .filter_map(|&v| {
                if v < n {
                    Some(v as i64 + 1)
                } else if v >= 2 * n {
                    Some(-((v - 2 * n) as i64 + 1))
                } else {
                    None
                }
            })
            .collect();
        if outer.is_empty() {
            loops += 1;
        } else {
            blocks.push(outer);
        }
    }
    (
        PartitionDiagram::from_signed_blocks(n, &blocks).unwrap(),
        loops,
    )
}

#[test]
fn composition_matches_graph_stacking_at_order_two() {
    let all = enumerate_diagrams(2).unwrap();
    for a in &all {
        for b in &all {
            let got = a.compose(b).unwrap();
            let (want, loops) = stack(a, b);
            assert_eq!(got.diagram, want, "{a} ∘ {b}");
            assert_eq!(got.loops, loops, "{a} ∘ {b}");
        }
    }
}

#[test]
fn composition_matches_graph_stacking_at_order_three() {
    let all = enumerate_diagrams(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..3000 {
        let pick = sample(&mut rng, all.len(), 2);
        let (a, b) = (&all[pick.index(0)], &all[pick.index(1)]);
        let got = a.compose(b).unwrap();
        let (want, loops) = stack(a, b);
        assert_eq!((got.diagram, got.loops), (want, loops), "{a} ∘ {b}");
    }
}

#[test]
fn diagram_counts_are_bell_numbers() {
    for (n, bell) in [(1, 2), (2, 15), (3, 203), (4, 4140)] {
        let all = enumerate_diagrams(n).unwrap();
        assert_eq!(all.len(), bell);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn propagation_number_never_grows_under_composition() {
    let all = enumerate_diagrams(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..3000 {
        let pick = sample(&mut rng, all.len(), 2);
        let (a, b) = (&all[pick.index(0)], &all[pick.index(1)]);
        let c = a.compose(b).unwrap().diagram;
        assert!(c.propagation_number() <= a.propagation_number().min(b.propagation_number()));
    }
}

#[test]
fn regular_trace_matches_explicit_matrix() {
    let basis = enumerate_diagrams(2).unwrap();
    for d in &basis {
        // diagonal of the left-multiplication matrix: d·b lands back on b
        let mut diagonal = Poly::zero();
        for b in &basis {
            let (image, loops) = stack(d, b);
            if &image == b {
                diagonal += &Poly::monomial(rational::from_int(1), loops);
            }
        }
        assert_eq!(left_regular_trace(d).unwrap(), diagonal, "{d}");

        let mut decomposed = Poly::zero();
        for ix in shapes(2) {
            let chi = character(&ix, d).unwrap();
            decomposed += &chi.scale(&rational::from_int(dimension(&ix) as i64));
        }
        assert_eq!(decomposed, diagonal, "{d}");
    }
}

#[test]
fn characters_are_trace_functions() {
    let basis = enumerate_diagrams(2).unwrap();
    let value = |ix, a: &PartitionDiagram, b: &PartitionDiagram| {
        let c = a.compose(b).unwrap();
        character(ix, &c.diagram).unwrap().shift(c.loops)
    };
    for ix in &shapes(2) {
        for a in &basis {
            for b in &basis {
                assert_eq!(
                    value(ix, a, b),
                    value(ix, b, a),
                    "{} at {a}, {b}",
                    ix.shape()
                );
            }
        }
    }
}

fn element(order: usize) -> impl Strategy<Value = AlgebraElement> {
    let count = enumerate_diagrams(order).unwrap().len();
    prop::collection::vec((0..count, -3i64..=3, 0usize..=1), 0..5).prop_map(move |terms| {
        let basis = enumerate_diagrams(order).unwrap();
        AlgebraElement::from_terms(
            order,
            terms.into_iter().map(|(i, c, power)| {
                (
                    basis[i].clone(),
                    RatFunc::from(Poly::monomial(rational::from_int(c), power)),
                )
            }),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(a in element(2), b in element(2), c in element(2)) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(a in element(3), b in element(3), c in element(3)) {
        let left = a.multiply(&(&b + &c)).unwrap();
        let right = &a.multiply(&b).unwrap() + &a.multiply(&c).unwrap();
        prop_assert_eq!(left, right);
        let left = (&a + &b).multiply(&c).unwrap();
        let right = &a.multiply(&c).unwrap() + &b.multiply(&c).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_two_sided(a in element(3)) {
        let one = AlgebraElement::identity(3);
        prop_assert_eq!(one.multiply(&a).unwrap(), a.clone());
        prop_assert_eq!(a.multiply(&one).unwrap(), a);
    }
}
