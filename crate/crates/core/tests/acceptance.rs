//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or exceeds its time budget.
//!
//! Run with `cargo test -p parec-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use parec_core::algebra::{left_ideal_trace_on, left_regular_trace, AlgebraElement};
use parec_core::diagrams::enumerate_diagrams;
use parec_core::matfun::{determinant, immanant, permanent, recombinant, SquareMatrix};
use parec_core::pachar::{character, dimension, shapes, ShapeIndex};
use parec_core::scalars::rational;
use parec_core::symchar::{all_partitions, cycle_type, hook_dimension, mn_character};
use parec_core::{IntegerPartition, PartitionDiagram, Permutation, Poly};

type Outcome = Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget: Duration,
    run: Box<dyn Fn() -> Outcome>,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: parec_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn d(s: &str) -> PartitionDiagram {
    s.parse().expect("valid diagram literal")
}

fn empty_shape(n: usize) -> ShapeIndex {
    ShapeIndex::new(IntegerPartition::empty(), n).expect("empty shape fits every level")
}

/// Bell numbers from the Bell triangle.
fn bell(m: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    row[0]
}

// Every order-2 diagram with its χ^∅ value, as ascending coefficients in r.
const ORDER_TWO_TABLE: [(&str, &[i64]); 15] = [
    ("{{2',1',1,2}}", &[1]),
    ("{{2',1,2},{1'}}", &[1]),
    ("{{2'},{1',1,2}}", &[1]),
    ("{{2',1'},{1,2}}", &[0, 1]),
    ("{{2'},{1'},{1,2}}", &[0, 1]),
    ("{{2',1',1},{2}}", &[1]),
    ("{{2',1},{1',2}}", &[2]),
    ("{{2',1},{1'},{2}}", &[0, 1]),
    ("{{2',2},{1',1}}", &[2]),
    ("{{2',1',2},{1}}", &[1]),
    ("{{2',2},{1'},{1}}", &[0, 1]),
    ("{{2'},{1',1},{2}}", &[0, 1]),
    ("{{2'},{1',2},{1}}", &[0, 1]),
    ("{{2',1'},{1},{2}}", &[0, 1]),
    ("{{2'},{1'},{1},{2}}", &[0, 0, 1]),
];

fn order_two_table() -> Outcome {
    let ix = empty_shape(2);
    let basis = lib(enumerate_diagrams(2))?;
    let mut listed = Vec::new();
    for (text, coeffs) in ORDER_TWO_TABLE {
        let x = d(text);
        let got = lib(character(&ix, &x))?;
        ensure(got == Poly::from_ints(coeffs), || {
            format!("χ^∅({x}) = {got}")
        })?;
        listed.push(x);
    }
    listed.sort();
    ensure(listed == basis, || {
        "table rows are not the order-2 basis".into()
    })?;
    Ok("15/15 values equal".into())
}

fn closed_form(a: &SquareMatrix) -> Poly {
    let (a11, a12, a21, a22) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
    let quartic = a11 * a12 * a21 * a22;
    let quadratic = a11 * a21 + a11 * a12 + a12 * a22 + a21 * a22;
    let doubled = rational::from_int(2) * (a11 * a22 + a12 * a21);
    let linear = a11 + a12 + a21 + a22;
    Poly::from_coeffs(vec![quartic + quadratic + doubled, linear])
}

fn two_by_two_closed_form() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    let ix = empty_shape(2);
    for _ in 0..25 {
        let a = SquareMatrix::random(2, &mut rng);
        let rec = lib(recombinant(&ix, &a))?;
        ensure(rec == closed_form(&a), || {
            format!("Rec^∅ = {rec} for {a:?}")
        })?;
    }
    Ok("25/25 seeded matrices".into())
}

fn left_ideal_traces() -> Outcome {
    let ix = empty_shape(2);
    let span = [d("{{1,2},{1',2'}}"), d("{{1',2'},{1},{2}}")];
    for x in lib(enumerate_diagrams(2))? {
        let via_span = lib(left_ideal_trace_on(&x, &span))?;
        let via_cells = lib(character(&ix, &x))?;
        ensure(via_span == via_cells, || {
            format!("{x}: {via_span} vs {via_cells}")
        })?;
    }
    Ok("15/15 diagrams".into())
}

fn theorem_for(n: usize, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrices: Vec<SquareMatrix> = (0..10).map(|_| SquareMatrix::random(n, &mut rng)).collect();
    let mut checked = 0;
    for shape in all_partitions(n) {
        let ix = lib(ShapeIndex::new(shape.clone(), n))?;
        for a in &matrices {
            let rec = lib(recombinant(&ix, a))?;
            let imm = lib(immanant(&shape, a))?;
            ensure(rec.is_constant() && rec.coeff(0) == imm, || {
                format!(
                    "n={n} shape={shape}: Rec = {rec}, Imm = {}",
                    rational::format(&imm)
                )
            })?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn theorem_small() -> Outcome {
    let c2 = theorem_for(2, 24)?;
    let c3 = theorem_for(3, 34)?;
    Ok(format!("{} (shape, matrix) pairs at n = 2, 3", c2 + c3))
}

fn theorem_order_four() -> Outcome {
    Ok(format!(
        "{} (shape, matrix) pairs at n = 4",
        theorem_for(4, 44)?
    ))
}

fn vanishing() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for ix in shapes(n) {
            for x in lib(enumerate_diagrams(n))? {
                if x.propagation_number() < ix.marks() {
                    let v = lib(character(&ix, &x))?;
                    ensure(v.is_zero(), || format!("χ^{}({x}) = {v}", ix.shape()))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} values vanish"))
}

fn symmetric_block() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for shape in all_partitions(n) {
            let ix = lib(ShapeIndex::new(shape.clone(), n))?;
            for sigma in Permutation::all(n) {
                let x = PartitionDiagram::from_permutation(&sigma);
                let got = lib(character(&ix, &x))?;
                let want = lib(mn_character(&shape, &cycle_type(&sigma)))?;
                ensure(got == Poly::from_int(want), || {
                    format!("χ^{shape}({x}) = {got}, want {want}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} permutation values"))
}

fn padding() -> Outcome {
    let mut checked = 0;
    for n in 2..=3 {
        for low in shapes(n - 1) {
            let high = lib(ShapeIndex::new(low.shape().clone(), n))?;
            for x in lib(enumerate_diagrams(n - 1))? {
                let padded = lib(x.pad_with_singletons())?;
                let lhs = lib(character(&high, &padded))?;
                let rhs = &Poly::r() * &lib(character(&low, &x))?;
                ensure(lhs == rhs, || format!("{padded}: {lhs} vs r·({rhs})"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} padded diagrams"))
}

fn semisimple_bookkeeping() -> Outcome {
    for n in 1..=4 {
        let total: u64 = shapes(n).iter().map(|ix| dimension(ix).pow(2)).sum();
        ensure(total == bell(2 * n), || format!("n={n}: Σ dim² = {total}"))?;
    }
    let decompose = |x: &PartitionDiagram| -> Result<Poly, String> {
        let mut sum = Poly::zero();
        for ix in shapes(x.order()) {
            sum += &lib(character(&ix, x))?.scale(&rational::from_int(dimension(&ix) as i64));
        }
        Ok(sum)
    };
    for x in lib(enumerate_diagrams(2))? {
        let regular = lib(left_regular_trace(&x))?;
        ensure(regular == decompose(&x)?, || {
            format!("{x}: regular trace {regular}")
        })?;
    }
    let all3 = lib(enumerate_diagrams(3))?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in sample(&mut rng, all3.len(), 50) {
        let x = &all3[i];
        let regular = lib(left_regular_trace(x))?;
        ensure(regular == decompose(x)?, || {
            format!("{x}: regular trace {regular}")
        })?;
    }
    Ok("Σ dim² = Bell(2n) for n ≤ 4; 15 + 50 regular traces".into())
}

fn specializations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 1..=5 {
        for _ in 0..20 {
            let a = SquareMatrix::random(n, &mut rng);
            let det = determinant(&a);
            let perm = permanent(&a);
            let imm_det = lib(immanant(&IntegerPartition::column(n), &a))?;
            let imm_perm = lib(immanant(&IntegerPartition::row(n), &a))?;
            ensure(det == imm_det, || format!("n={n}: det mismatch"))?;
            ensure(perm == imm_perm, || format!("n={n}: perm mismatch"))?;
        }
    }
    Ok("100 matrices, n = 1..5".into())
}

fn symmetric_characters() -> Outcome {
    for n in 0..=6 {
        for lambda in all_partitions(n) {
            let chi = lib(mn_character(&lambda, &IntegerPartition::column(n)))?;
            ensure(chi == hook_dimension(&lambda) as i64, || {
                format!("{lambda}: {chi}")
            })?;
        }
    }
    for n in 1..=5 {
        let fact: i128 = (1..=n as i128).product();
        let classes = all_partitions(n);
        // centralizer order z_μ = Π i^{m_i} m_i!
        let z = |mu: &IntegerPartition| -> i128 {
            (1..=n)
                .map(|i| {
                    let m = mu.parts().iter().filter(|&&p| p == i).count() as u32;
                    (i as i128).pow(m) * (1..=m as i128).product::<i128>()
                })
                .product()
        };
        for a in &classes {
            for b in &classes {
                let mut sum = 0i128;
                for mu in &classes {
                    let x = lib(mn_character(a, mu))? as i128;
                    let y = lib(mn_character(b, mu))? as i128;
                    sum += fact / z(mu) * x * y;
                }
                let want = if a == b { fact } else { 0 };
                ensure(sum == want, || format!("⟨{a},{b}⟩ = {sum}"))?;
            }
        }
    }
    Ok("hook formula n ≤ 6, orthogonality n ≤ 5".into())
}

fn algebra_suite() -> Outcome {
    let two: Vec<AlgebraElement> = lib(enumerate_diagrams(2))?
        .into_iter()
        .map(AlgebraElement::basis)
        .collect();
    for a in &two {
        for b in &two {
            let ab = lib(a.multiply(b))?;
            for c in &two {
                let left = lib(ab.multiply(c))?;
                let right = lib(a.multiply(&lib(b.multiply(c))?))?;
                ensure(left == right, || "associativity fails at n = 2".into())?;
            }
        }
    }
    let three = lib(enumerate_diagrams(3))?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let pick = sample(&mut rng, three.len(), 3);
        let [a, b, c] = [0, 1, 2].map(|i| AlgebraElement::basis(three[pick.index(i)].clone()));
        let left = lib(lib(a.multiply(&b))?.multiply(&c))?;
        let right = lib(a.multiply(&lib(b.multiply(&c))?))?;
        ensure(left == right, || "associativity fails at n = 3".into())?;
    }
    for n in 1..=3 {
        for ell in 1..=n {
            let e = lib(AlgebraElement::e_idempotent(n, ell))?;
            ensure(lib(e.multiply(&e))? == e, || {
                format!("E_{ell} at n={n} not idempotent")
            })?;
        }
    }
    Ok("3375 + 500 triples associative; E_ℓ idempotent for n ≤ 3".into())
}

fn main() -> ExitCode {
    let criteria = vec![
        Criterion {
            id: "AC-01",
            title: "Order-2 table, empty shape",
            budget: secs(1),
            run: Box::new(order_two_table),
        },
        Criterion {
            id: "AC-02",
            title: "2x2 recombinant closed form",
            budget: secs(1),
            run: Box::new(two_by_two_closed_form),
        },
        Criterion {
            id: "AC-03",
            title: "Traces on a left-ideal span",
            budget: secs(1),
            run: Box::new(left_ideal_traces),
        },
        Criterion {
            id: "AC-04",
            title: "Recombinant equals immanant (n = 2, 3)",
            budget: secs(30),
            run: Box::new(theorem_small),
        },
        Criterion {
            id: "AC-04b",
            title: "Recombinant equals immanant (n = 4)",
            budget: secs(600),
            run: Box::new(theorem_order_four),
        },
        Criterion {
            id: "AC-05",
            title: "Vanishing below |λ*|",
            budget: secs(30),
            run: Box::new(vanishing),
        },
        Criterion {
            id: "AC-06",
            title: "Symmetric-group block",
            budget: secs(5),
            run: Box::new(symmetric_block),
        },
        Criterion {
            id: "AC-07",
            title: "Padding recursion",
            budget: secs(30),
            run: Box::new(padding),
        },
        Criterion {
            id: "AC-08",
            title: "Semisimple bookkeeping",
            budget: secs(60),
            run: Box::new(semisimple_bookkeeping),
        },
        Criterion {
            id: "AC-09",
            title: "Determinant and permanent specializations",
            budget: secs(5),
            run: Box::new(specializations),
        },
        Criterion {
            id: "AC-10",
            title: "Symmetric-group characters",
            budget: secs(5),
            run: Box::new(symmetric_characters),
        },
        Criterion {
            id: "AC-11",
            title: "Algebra associativity and idempotents",
            budget: secs(60),
            run: Box::new(algebra_suite),
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(detail) if elapsed <= c.budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; over budget {:?}", c.budget)),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "[{status}] {} {} ({:.2} s): {detail}",
            c.id,
            c.title,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
