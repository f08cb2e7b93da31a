//! Self-check suites. Each suite recomputes a known identity and reports one
//! line per check; the command-line `verify` subcommand prints the report.
//!
//! Random matrices come from a ChaCha8 generator seeded by the caller, so a
//! given seed always produces the same report.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{left_ideal_trace_on, left_regular_trace};
use crate::diagrams::{enumerate_diagrams, PartitionDiagram};
use crate::error::{Error, Result};
use crate::matfun::{immanant, recombinant, SquareMatrix};
use crate::pachar::{character, dimension, shapes, ShapeIndex};
use crate::perm::Permutation;
use crate::scalars::rational::Rational;
use crate::scalars::Poly;
use crate::symchar::{all_partitions, cycle_type, mn_character, IntegerPartition};

/// Default ceiling for `verify --n`; `slow` raises it by one.
pub const VERIFY_MAX_N: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Example,
    Theorem,
    Traces,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table1" => Ok(Suite::Table1),
            "example" => Ok(Suite::Example),
            "theorem" => Ok(Suite::Theorem),
            "traces" => Ok(Suite::Traces),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub n: usize,
    pub suite: Suite,
    pub seed: u64,
    pub slow: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {}: {}", c.name, c.detail)?;
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        writeln!(f, "{passed}/{} checks passed", self.checks.len())
    }
}

pub fn run(opts: &Options) -> Result<Report> {
    let max = VERIFY_MAX_N + usize::from(opts.slow);
    if opts.n == 0 {
        return Err(Error::OutOfRange {
            value: 0,
            min: 1,
            max,
        });
    }
    if opts.n > max {
        return Err(Error::ResourceLimit {
            what: "verification",
            n: opts.n,
            max,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut report = Report::default();
    let wants = |s: Suite| opts.suite == s || opts.suite == Suite::All;
    if wants(Suite::Table1) {
        table1(&mut report)?;
    }
    if wants(Suite::Example) {
        example(&mut report, &mut rng)?;
    }
    if wants(Suite::Theorem) {
        theorem(&mut report, opts.n, &mut rng)?;
    }
    if wants(Suite::Traces) {
        traces(&mut report, opts.n, &mut rng)?;
    }
    Ok(report)
}

/// The trivial-shape character on the fifteen order-2 diagrams, as
/// (set partition, value written as ascending coefficients in `r`).
const TABLE1: [(&str, &[i64]); 15] = [
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

fn table1(report: &mut Report) -> Result<()> {
    let empty = ShapeIndex::new(IntegerPartition::empty(), 2)?;
    let mut mismatches = Vec::new();
    for (text, coeffs) in TABLE1 {
        let d: PartitionDiagram = text.parse()?;
        let got = character(&empty, &d)?;
        if got != Poly::from_ints(coeffs) {
            mismatches.push(format!("{d} -> {got}"));
        }
    }
    let covers_basis = {
        let mut listed: Vec<PartitionDiagram> = TABLE1
            .iter()
            .map(|(t, _)| t.parse())
            .collect::<Result<_>>()?;
        listed.sort();
        listed == enumerate_diagrams(2)?
    };
    report.push(
        "table1 character values",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            "15/15 order-2 diagrams match".to_string()
        } else {
            mismatches.join("; ")
        },
    );
    report.push(
        "table1 covers the diagram basis",
        covers_basis,
        "listed diagrams are exactly the 15 of order 2",
    );
    Ok(())
}

/// The closed form for the trivial-shape recombinant of a 2×2 matrix.
pub fn trivial_recombinant_closed_form(a: &SquareMatrix) -> Poly {
    let e = |i: usize, j: usize| a.get(i, j).clone();
    let quartic = e(0, 0) * e(0, 1) * e(1, 0) * e(1, 1);
    let pairs = e(0, 0) * e(1, 0) + e(0, 0) * e(0, 1) + e(0, 1) * e(1, 1) + e(1, 0) * e(1, 1);
    let two = Rational::from_integer(2.into());
    let diag = two * (e(0, 0) * e(1, 1) + e(0, 1) * e(1, 0));
    let linear = e(0, 0) + e(0, 1) + e(1, 0) + e(1, 1);
    Poly::from_coeffs(vec![quartic + pairs + diag, linear])
}

fn example(report: &mut Report, rng: &mut ChaCha8Rng) -> Result<()> {
    let empty = ShapeIndex::new(IntegerPartition::empty(), 2)?;
    let mut failures = 0;
    for _ in 0..25 {
        let a = SquareMatrix::random(2, rng);
        if recombinant(&empty, &a)? != trivial_recombinant_closed_form(&a) {
            failures += 1;
        }
    }
    report.push(
        "example closed form",
        failures == 0,
        format!("{}/25 random 2x2 matrices match", 25 - failures),
    );

    let basis: [PartitionDiagram; 2] = ["{{1,2},{1',2'}}".parse()?, "{{1},{2},{1',2'}}".parse()?];
    let mut mismatches = Vec::new();
    for d in enumerate_diagrams(2)? {
        let via_ideal = left_ideal_trace_on(&d, &basis)?;
        let via_cells = character(&empty, &d)?;
        if via_ideal != via_cells {
            mismatches.push(format!("{d}: {via_ideal} vs {via_cells}"));
        }
    }
    report.push(
        "example left-ideal traces",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            "15/15 traces on span{{1,2},{1',2'}}, {{1},{2},{1',2'}} agree".to_string()
        } else {
            mismatches.join("; ")
        },
    );
    Ok(())
}

fn theorem(report: &mut Report, n: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let matrices: Vec<SquareMatrix> = (0..10).map(|_| SquareMatrix::random(n, rng)).collect();
    for shape in all_partitions(n) {
        let ix = ShapeIndex::new(shape.clone(), n)?;
        let mut good = 0;
        for a in &matrices {
            let rec = recombinant(&ix, a)?;
            if rec.is_constant() && rec.coeff(0) == immanant(&shape, a)? {
                good += 1;
            }
        }
        report.push(
            format!("theorem n={n} shape={shape}"),
            good == matrices.len(),
            format!("{good}/{} recombinants equal the immanant", matrices.len()),
        );
    }
    Ok(())
}

/// Bell numbers via the Bell triangle.
pub fn bell(m: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = vec![*row.last().expect("nonempty")];
        for v in &row {
            let last = *next.last().expect("nonempty");
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

fn traces(report: &mut Report, n: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let all = enumerate_diagrams(n)?;
    let ixs = shapes(n);

    let mut vanishing_bad = 0;
    let mut vanishing_checked = 0;
    for ix in &ixs {
        for d in all.iter().filter(|d| d.propagation_number() < ix.marks()) {
            vanishing_checked += 1;
            if !character(ix, d)?.is_zero() {
                vanishing_bad += 1;
            }
        }
    }
    report.push(
        format!("traces n={n} vanishing below |shape|"),
        vanishing_bad == 0,
        format!("{vanishing_checked} low-propagation values checked, {vanishing_bad} nonzero"),
    );

    let mut block_bad = 0;
    let perms = Permutation::all(n);
    for shape in all_partitions(n) {
        let ix = ShapeIndex::new(shape.clone(), n)?;
        for sigma in &perms {
            let d = PartitionDiagram::from_permutation(sigma);
            let expected = mn_character(&shape, &cycle_type(sigma))?;
            if character(&ix, &d)? != Poly::from_int(expected) {
                block_bad += 1;
            }
        }
    }
    report.push(
        format!("traces n={n} symmetric-group block"),
        block_bad == 0,
        format!(
            "{} permutation values checked, {block_bad} mismatched",
            perms.len() * all_partitions(n).len()
        ),
    );

    if n >= 2 {
        let lower = enumerate_diagrams(n - 1)?;
        let mut pad_bad = 0;
        let mut pad_checked = 0;
        for low_ix in shapes(n - 1) {
            let high_ix = ShapeIndex::new(low_ix.shape().clone(), n)?;
            for d in &lower {
                pad_checked += 1;
                let padded = character(&high_ix, &d.pad_with_singletons()?)?;
                if padded != &Poly::r() * &character(&low_ix, d)? {
                    pad_bad += 1;
                }
            }
        }
        report.push(
            format!("traces n={n} padding recursion"),
            pad_bad == 0,
            format!("{pad_checked} padded values checked, {pad_bad} mismatched"),
        );
    }

    let dim_sq: u64 = ixs.iter().map(|ix| dimension(ix).pow(2)).sum();
    report.push(
        format!("traces n={n} dimension count"),
        dim_sq == bell(2 * n),
        format!(
            "sum of squared dimensions {dim_sq}, Bell({}) = {}",
            2 * n,
            bell(2 * n)
        ),
    );

    let identity_ok = ixs.iter().all(|ix| {
        character(ix, &PartitionDiagram::identity(n)).ok()
            == Some(Poly::from_int(dimension(ix) as i64))
    });
    report.push(
        format!("traces n={n} identity trace"),
        identity_ok,
        "character at the identity equals the dimension",
    );

    let sampled: Vec<&PartitionDiagram> = if all.len() <= 50 {
        all.iter().collect()
    } else {
        let count = if n >= 4 { 5 } else { 50 };
        sample(rng, all.len(), count)
            .into_iter()
            .map(|i| &all[i])
            .collect()
    };
    let mut regular_bad = 0;
    for d in &sampled {
        let mut decomposed = Poly::zero();
        for ix in &ixs {
            decomposed += &character(ix, d)?.scale(&Rational::from_integer(dimension(ix).into()));
        }
        if decomposed != left_regular_trace(d)? {
            regular_bad += 1;
        }
    }
    report.push(
        format!("traces n={n} regular trace decomposition"),
        regular_bad == 0,
        format!(
            "{} diagrams checked, {regular_bad} mismatched",
            sampled.len()
        ),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let want = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (m, &b) in want.iter().enumerate() {
            assert_eq!(bell(m), b);
        }
    }

    #[test]
    fn all_suites_pass_at_order_two() {
        let report = run(&Options {
            n: 2,
            suite: Suite::All,
            seed: 7,
            slow: false,
        })
        .unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn guards() {
        let opts = |n, slow| Options {
            n,
            suite: Suite::Theorem,
            seed: 1,
            slow,
        };
        assert!(matches!(
            run(&opts(9, false)),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(matches!(
            run(&opts(4, false)),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(run(&opts(0, false)).is_err());
    }

    #[test]
    fn reports_are_reproducible() {
        let opts = Options {
            n: 2,
            suite: Suite::Example,
            seed: 99,
            slow: false,
        };
        assert_eq!(
            run(&opts).unwrap().to_string(),
            run(&opts).unwrap().to_string()
        );
    }
}
