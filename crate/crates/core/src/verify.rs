//! The acceptance checks: pinned oracles for the small-order artifacts and
//! exhaustive structural verification, runnable from the test suite and from
//! `parmon verify`.
//!
//! Checks either run symbolically over `Q(n)` (orders 1 and 2) or specialize
//! the parameter to random non-degenerate rationals and verify exactly over
//! `Q` (order 3). A specialized check can only be fooled by a parameter that
//! is a root of some fixed nonzero rational function, so two independent
//! points make false acceptance negligible; every arithmetic step remains
//! exact either way.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{AlgebraElement, Permutation};
use crate::arith::{rat, Polynomial, Rational, RationalFunction};
use crate::bijections::{
    bh_forward, bh_to_hr, diagram_rsk, diagram_rsk_inverse, enumerate_spt, hr_to_bh,
    SetPartitionTableau,
};
use crate::bratteli::{dimension_decomposition, enumerate_vt, vertices, Level, VacillatingTableau};
use crate::diagram::{bell_number, enumerate_diagrams_with_limit, PartitionDiagram};
use crate::monoid::{
    build_monoid_basis, multiplication_table_with_basis, rule_product, transition_matrix,
    MonoidBasis,
};
use crate::scalar::Scalar;
use crate::units::{build_system, DiagCtx, MatrixUnitSystem};
use crate::young::{GroupAlgebraElement, IntegerPartition};
use crate::DEFAULT_ORDER_LIMIT;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: String,
    pub name: String,
    pub passed: bool,
    /// Human-readable notes (counts, reported-but-not-required results).
    pub details: Vec<String>,
    /// Machine-readable description of the first failure, if any:
    /// `{check, inputs, expected, got}`.
    pub failure: Option<serde_json::Value>,
    pub millis: u128,
}

impl CheckOutcome {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!("{status} {} — {} [{} ms]", self.id, self.name, self.millis);
        for d in &self.details {
            line.push_str("\n      ");
            line.push_str(d);
        }
        line
    }
}

/// Settings for the randomized checks.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Number of independent evaluation points for specialized checks.
    pub trials: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 7, trials: 2 }
    }
}

struct Check {
    details: Vec<String>,
    failure: Option<serde_json::Value>,
}

impl Check {
    fn new() -> Self {
        Check {
            details: Vec::new(),
            failure: None,
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }

    fn fail(&mut self, check: &str, inputs: String, expected: String, got: String) {
        if self.failure.is_none() {
            self.failure = Some(serde_json::json!({
                "check": check,
                "inputs": inputs,
                "expected": expected,
                "got": got,
            }));
        }
    }

    fn require(&mut self, ok: bool, check: &str, inputs: &str, expected: &str, got: &str) {
        if !ok {
            self.fail(check, inputs.into(), expected.into(), got.into());
        }
    }

    fn finish(self, id: &str, name: &str, start: Instant) -> CheckOutcome {
        CheckOutcome {
            id: id.into(),
            name: name.into(),
            passed: self.failure.is_none(),
            details: self.details,
            failure: self.failure,
            millis: start.elapsed().as_millis(),
        }
    }
}

// ---- fixtures ----

fn fixture_json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).expect("fixture files are valid JSON")
}

pub fn fixture_k2_diagram_order() -> Vec<PartitionDiagram> {
    let v = fixture_json(include_str!("../fixtures/k2_diagram_order.json"));
    v.as_array()
        .expect("array")
        .iter()
        .map(|blocks| {
            PartitionDiagram::from_json(&serde_json::json!({"k": 2, "blocks": blocks}))
                .expect("valid fixture diagram")
        })
        .collect()
}

pub fn fixture_k2_table() -> Vec<Vec<usize>> {
    include_str!("../fixtures/k2_figure2_table.csv")
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(',')
                .map(|x| x.trim().parse::<usize>().expect("table entry") - 1)
                .collect()
        })
        .collect()
}

fn parse_rf_entry(v: &serde_json::Value) -> RationalFunction {
    let ints = |key: &str| -> Vec<i64> {
        v[key]
            .as_array()
            .expect("coefficient array")
            .iter()
            .map(|x| x.as_i64().expect("integer coefficient"))
            .collect()
    };
    RationalFunction::from_integer_coeffs(&ints("num"), &ints("den")).expect("valid fixture entry")
}

/// The two pinned order-2 idempotent expansions, as elements over the pinned
/// diagram order.
pub fn fixture_k2_idempotents() -> (
    AlgebraElement<RationalFunction>,
    AlgebraElement<RationalFunction>,
) {
    let v = fixture_json(include_str!("../fixtures/k2_idempotents.json"));
    let order = fixture_k2_diagram_order();
    let read = |key: &str| {
        let mut e = AlgebraElement::zero(2);
        for item in v[key].as_array().expect("array") {
            let d = order[item["diagram"].as_u64().expect("index") as usize - 1].clone();
            e.add_term(d, parse_rf_entry(item));
        }
        e
    };
    (read("four_term"), read("eight_term"))
}

fn parse_spt(v: &serde_json::Value) -> SetPartitionTableau {
    SetPartitionTableau::from_json(&serde_json::json!({ "rows": v })).expect("fixture tableau")
}

pub fn fixture_k2_rsk_pairs() -> Vec<(usize, SetPartitionTableau, SetPartitionTableau)> {
    let v = fixture_json(include_str!("../fixtures/k2_rsk_pairs.json"));
    v.as_array()
        .expect("array")
        .iter()
        .map(|item| {
            (
                item["diagram"].as_u64().expect("index") as usize - 1,
                parse_spt(&item["t1"]),
                parse_spt(&item["t2"]),
            )
        })
        .collect()
}

fn parse_partition_list(v: &serde_json::Value) -> Vec<IntegerPartition> {
    v.as_array()
        .expect("array")
        .iter()
        .map(|p| {
            IntegerPartition::new(
                p.as_array()
                    .expect("parts")
                    .iter()
                    .map(|x| x.as_u64().expect("part") as usize)
                    .collect(),
            )
            .expect("valid partition")
        })
        .collect()
}

pub struct InsertionFixture {
    pub tableau: SetPartitionTableau,
    pub padded: Vec<IntegerPartition>,
    pub path: VacillatingTableau,
}

pub fn fixture_k2_insertion_pairs() -> Vec<InsertionFixture> {
    let v = fixture_json(include_str!("../fixtures/k2_insertion_pairs.json"));
    v.as_array()
        .expect("array")
        .iter()
        .map(|item| InsertionFixture {
            tableau: parse_spt(&item["tableau"]),
            padded: parse_partition_list(&item["padded"]),
            path: VacillatingTableau::new(parse_partition_list(&item["path"]))
                .expect("fixture path"),
        })
        .collect()
}

/// Figure rows pinned for the transition matrix: 1-based row index to
/// (1-based column -> entry).
pub fn fixture_k2_transition_rows() -> Vec<(usize, Vec<RationalFunction>)> {
    let v = fixture_json(include_str!("../fixtures/k2_transition_diagonal_rows.json"));
    let mut out = Vec::new();
    for (row, cols) in v.as_object().expect("object") {
        let row_idx: usize = row.parse().expect("row index");
        let mut entries = vec![RationalFunction::zero(); 15];
        for (col, entry) in cols.as_object().expect("object") {
            let col_idx: usize = col.parse().expect("column index");
            entries[col_idx - 1] = parse_rf_entry(entry);
        }
        out.push((row_idx - 1, entries));
    }
    out.sort_by_key(|(r, _)| *r);
    out
}

// ---- shared helpers ----

fn symbolic_system(k: usize) -> MatrixUnitSystem<RationalFunction> {
    build_system(k, RationalFunction::variable(), DEFAULT_ORDER_LIMIT)
        .expect("symbolic construction succeeds")
}

/// A uniformly random rational with numerator and denominator in
/// `[1, 10^6]`, excluding the degenerate integers `{0, 1, .., 2k-2}`.
pub fn random_parameter(rng: &mut StdRng, k: usize) -> Rational {
    loop {
        let p: i64 = rng.gen_range(1..=1_000_000);
        let q: i64 = rng.gen_range(1..=1_000_000);
        let x = rat(p, q);
        if x.is_integer() {
            let v = x.to_integer();
            if v >= BigInt::zero() && v <= BigInt::from(2 * k as i64 - 2) {
                continue;
            }
        }
        return x;
    }
}

fn build_system_at_random(
    rng: &mut StdRng,
    k: usize,
) -> (Rational, MatrixUnitSystem<Rational>) {
    for _ in 0..16 {
        let x = random_parameter(rng, k);
        match build_system(k, x.clone(), DEFAULT_ORDER_LIMIT) {
            Ok(sys) => return (x, sys),
            Err(_) => continue,
        }
    }
    panic!("no non-degenerate parameter found in 16 draws");
}

/// The multiplication table at a seeded random non-degenerate parameter,
/// with every entry verified against the algebra product through the
/// integer-scaled fast path. Returns the parameter used alongside the table.
pub fn verified_table_randomized(
    seed: u64,
    k: usize,
    limit: usize,
) -> Result<(Rational, crate::monoid::MultiplicationTable), String> {
    let (x, sys) = random_specialized_system(seed, k, limit)?;
    let diagrams = enumerate_diagrams_with_limit(k, limit).map_err(|e| e.to_string())?;
    let rule = rule_table(&diagrams);
    let mut ctx = DiagCtx::new(k, limit).map_err(|e| e.to_string())?;
    ctx.fill_all();
    let n = diagrams.len();
    match closure_check_at_point(&sys, &rule, &diagrams, &ctx) {
        Ok(_) => {
            let entries = (0..n)
                .map(|a| (0..n).map(|b| rule[a * n + b] as usize).collect())
                .collect();
            Ok((
                x,
                crate::monoid::MultiplicationTable::from_verified_entries(diagrams, entries),
            ))
        }
        Err((a, b)) => Err(format!(
            "rule disagrees with the algebra at ({}, {}) for n = {x}",
            diagrams[a], diagrams[b]
        )),
    }
}

/// Builds a specialized system at a seeded random non-degenerate parameter.
pub fn random_specialized_system(
    seed: u64,
    k: usize,
    limit: usize,
) -> Result<(Rational, MatrixUnitSystem<Rational>), String> {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..16 {
        let x = random_parameter(&mut rng, k);
        match build_system(k, x.clone(), limit) {
            Ok(sys) => return Ok((x, sys)),
            Err(e) => match e {
                crate::units::UnitError::DegenerateParameter { .. } => continue,
                other => return Err(other.to_string()),
            },
        }
    }
    Err("no non-degenerate parameter found in 16 draws".into())
}

/// Exhaustive matrix-unit axioms over all pairs of units of a system.
fn check_unit_axioms<S: Scalar>(sys: &MatrixUnitSystem<S>, check: &mut Check, label: &str) {
    let n = sys.parameter();
    let mut flat: Vec<(usize, usize, usize, &AlgebraElement<S>)> = Vec::new();
    for (b, block) in sys.blocks().iter().enumerate() {
        for i in 0..block.paths.len() {
            for j in 0..block.paths.len() {
                flat.push((b, i, j, &block.units[i][j]));
            }
        }
    }
    let mut checked = 0usize;
    for &(b1, i1, j1, u) in &flat {
        for &(b2, i2, j2, v) in &flat {
            let prod = u.multiply(v, n).expect("orders agree");
            let ok = if b1 == b2 && j1 == i2 {
                prod == sys.blocks()[b1].units[i1][j2]
            } else {
                prod.is_zero()
            };
            checked += 1;
            if !ok {
                check.fail(
                    label,
                    format!("blocks ({b1},{i1},{j1}) x ({b2},{i2},{j2})"),
                    "matrix-unit product rule".into(),
                    format!("{prod:?}"),
                );
                return;
            }
        }
    }
    check.note(format!("{label}: {checked} unit products satisfy the axioms"));
}

// ---- criteria ----

/// Criterion 1: the three-letter symmetric group oracle. The displayed
/// expansions of the hook-shape units and their products hold exactly.
pub fn criterion1_young_oracle() -> CheckOutcome {
    let start = Instant::now();
    let mut check = Check::new();
    let lam = IntegerPartition::new(vec![2, 1]).unwrap();
    let expect = |pairs: &[(&[usize], i64)]| {
        let mut e = GroupAlgebraElement::zero(3);
        for (line, num) in pairs {
            let p = Permutation::from_one_line(line).unwrap();
            e = e.add(&GroupAlgebraElement::from_permutation(p, rat(*num, 3)));
        }
        e
    };
    let want11 = expect(&[(&[1, 2, 3], 1), (&[2, 1, 3], -1), (&[3, 1, 2], -1), (&[3, 2, 1], 1)]);
    let want12 = expect(&[(&[1, 3, 2], 1), (&[2, 3, 1], -1), (&[3, 1, 2], 1), (&[3, 2, 1], -1)]);
    let want21 = expect(&[(&[1, 3, 2], 1), (&[2, 1, 3], -1), (&[2, 3, 1], 1), (&[3, 1, 2], -1)]);
    let s11 = crate::young::young_unit(&lam, 1, 1).unwrap();
    let s12 = crate::young::young_unit(&lam, 1, 2).unwrap();
    let s21 = crate::young::young_unit(&lam, 2, 1).unwrap();
    for (name, got, want) in [
        ("s11", &s11, &want11),
        ("s12", &s12, &want12),
        ("s21", &s21, &want21),
    ] {
        check.require(
            got == want,
            "young-expansion",
            name,
            &format!("{want:?}"),
            &format!("{got:?}"),
        );
    }
    check.require(
        s12.mul(&s21) == s11,
        "young-product",
        "s12*s21",
        "s11",
        &format!("{:?}", s12.mul(&s21)),
    );
    check.require(
        s12.mul(&s12).is_zero(),
        "young-product",
        "s12*s12",
        "0",
        &format!("{:?}", s12.mul(&s12)),
    );
    check.require(
        s21.mul(&s21).is_zero(),
        "young-product",
        "s21*s21",
        "0",
        &format!("{:?}", s21.mul(&s21)),
    );
    check.note("three displayed hook-shape expansions match coefficient-for-coefficient");
    check.finish("c1", "three-letter Young unit oracle", start)
}

/// Criterion 2: symbolic matrix-unit axioms at order 2, completeness, and
/// the two pinned idempotent expansions.
pub fn criterion2_order2_units() -> CheckOutcome {
    let start = Instant::now();
    let mut check = Check::new();
    let sys = symbolic_system(2);
    check_unit_axioms(&sys, &mut check, "order-2 axioms");
    let one = AlgebraElement::one(2);
    check.require(
        sys.diagonal_sum() == one,
        "completeness",
        "sum of diagonal units",
        "identity",
        &format!("{:?}", sys.diagonal_sum()),
    );
    let (four, eight) = fixture_k2_idempotents();
    let empty_path =
        VacillatingTableau::new(vec![IntegerPartition::empty(); 5]).unwrap();
    let bubble = VacillatingTableau::new(vec![
        IntegerPartition::empty(),
        IntegerPartition::empty(),
        IntegerPartition::new(vec![1]).unwrap(),
        IntegerPartition::empty(),
        IntegerPartition::empty(),
    ])
    .unwrap();
    let returning = VacillatingTableau::new(vec![
        IntegerPartition::empty(),
        IntegerPartition::empty(),
        IntegerPartition::new(vec![1]).unwrap(),
        IntegerPartition::empty(),
        IntegerPartition::new(vec![1]).unwrap(),
    ])
    .unwrap();
    let got4 = sys.unit(&bubble, &bubble).unwrap();
    check.require(
        got4 == &four,
        "pinned-idempotent",
        "four-term diagonal unit",
        &format!("{four:?}"),
        &format!("{got4:?}"),
    );
    let got8 = sys.unit(&returning, &returning).unwrap();
    check.require(
        got8 == &eight,
        "pinned-idempotent",
        "eight-term diagonal unit",
        &format!("{eight:?}"),
        &format!("{got8:?}"),
    );
    // Orthogonality of the two pinned idempotents, both ways.
    let n = RationalFunction::variable();
    check.require(
        four.multiply(&eight, &n).unwrap().is_zero()
            && eight.multiply(&four, &n).unwrap().is_zero(),
        "pinned-idempotent",
        "four-term x eight-term",
        "0",
        "nonzero",
    );
    let _ = sys.unit(&empty_path, &empty_path).unwrap();
    check.finish("c2", "order-2 matrix-unit axioms and pinned idempotents", start)
}

/// Criterion 3: dimension decompositions at orders 2, 3, 4.
pub fn criterion3_dimensions() -> CheckOutcome {
    let start = Instant::now();
    let mut check = Check::new();
    let d2 = dimension_decomposition(2);
    let want2: Vec<(IntegerPartition, u64)> = vec![
        (IntegerPartition::empty(), 2),
        (IntegerPartition::new(vec![1]).unwrap(), 3),
        (IntegerPartition::new(vec![1, 1]).unwrap(), 1),
        (IntegerPartition::new(vec![2]).unwrap(), 1),
    ];
    for (mu, c) in &want2 {
        check.require(
            d2.get(mu) == Some(c),
            "dimension",
            &format!("order 2, vertex {mu}"),
            &c.to_string(),
            &format!("{:?}", d2.get(mu)),
        );
    }
    for k in [2usize, 3, 4] {
        let d = dimension_decomposition(k);
        let total: u64 = d.values().map(|c| c * c).sum();
        let want = bell_number(2 * k);
        check.require(
            total == want,
            "dimension",
            &format!("order {k} sum of squares"),
            &want.to_string(),
            &total.to_string(),
        );
        check.note(format!("order {k}: sum of squared multiplicities = {total}"));
    }
    check.finish("c3", "dimension decompositions (orders 2-4)", start)
}

/// Criterion 4: the pinned order-2 bijection tables and all round trips up
/// to order 3.
pub fn criterion4_bijections() -> CheckOutcome {
    let start = Instant::now();
    let mut check = Check::new();
    let order = fixture_k2_diagram_order();
    let enumerated = enumerate_diagrams_with_limit(2, DEFAULT_ORDER_LIMIT).unwrap();
    check.require(
        order == enumerated,
        "diagram-order",
        "order-2 enumeration",
        "pinned 15-diagram list",
        "differs",
    );
    for (idx, t1, t2) in fixture_k2_rsk_pairs() {
        let (a, b) = diagram_rsk(&order[idx]);
        check.require(
            a == t1 && b == t2,
            "rsk-fixture",
            &format!("diagram {}", idx + 1),
            "pinned tableau pair",
            &format!("({a:?}, {b:?})"),
        );
    }
    for (line, f) in fixture_k2_insertion_pairs().iter().enumerate() {
        let got = bh_forward(&f.tableau).unwrap();
        check.require(
            got.entries() == f.padded.as_slice(),
            "insertion-fixture",
            &format!("line {}", line + 1),
            &format!("{:?}", f.padded),
            &format!("{got:?}"),
        );
        let stripped = bh_to_hr(&got).unwrap();
        check.require(
            stripped == f.path,
            "strip-fixture",
            &format!("line {}", line + 1),
            &format!("{}", f.path),
            &format!("{stripped}"),
        );
    }
    for k in 1..=3usize {
        for d in enumerate_diagrams_with_limit(k, DEFAULT_ORDER_LIMIT).unwrap() {
            let (a, b) = diagram_rsk(&d);
            let back = diagram_rsk_inverse(&a, &b).unwrap();
            check.require(
                back == d,
                "rsk-round-trip",
                &format!("{d}"),
                &format!("{d}"),
                &format!("{back}"),
            );
        }
        for t in enumerate_spt(k).unwrap() {
            let back = crate::bijections::bh_inverse(&bh_forward(&t).unwrap()).unwrap();
            check.require(
                back == t,
                "insertion-round-trip",
                &format!("{t:?}"),
                &format!("{t:?}"),
                &format!("{back:?}"),
            );
        }
        for mu in vertices(Level::integer(k)) {
            for p in enumerate_vt(Level::integer(k), &mu).unwrap() {
                let back = bh_to_hr(&hr_to_bh(&p, 2 * k).unwrap()).unwrap();
                check.require(
                    back == p,
                    "padding-round-trip",
                    &format!("{p}"),
                    &format!("{p}"),
                    &format!("{back}"),
                );
            }
        }
        // The composite pair of every diagram lands on equal final vertices.
        for d in enumerate_diagrams_with_limit(k, DEFAULT_ORDER_LIMIT).unwrap() {
            let (p, q) = crate::monoid::composite_pair(&d).unwrap();
            check.require(
                p.final_partition() == q.final_partition(),
                "composite-pair",
                &format!("{d}"),
                "equal final vertices",
                &format!("{} vs {}", p.final_partition(), q.final_partition()),
            );
        }
    }
    check.note("round trips exhaustive for orders 1-3");
    check.finish("c4", "bijection fixtures and round trips", start)
}

/// Criterion 5: the order-2 multiplication table equals the pinned table.
pub fn criterion5_table_fixture() -> CheckOutcome {
    let start = Instant::now();
    let mut check = Check::new();
    let sys = symbolic_system(2);
    let basis = build_monoid_basis(&sys, DEFAULT_ORDER_LIMIT).unwrap();
    let table = multiplication_table_with_basis(&sys, &basis, DEFAULT_ORDER_LIMIT).unwrap();
    let want = fixture_k2_table();
    #[allow(clippy::needless_range_loop)]
    for i in 0..15 {
        for j in 0..15 {
            check.require(
                table.entries()[i][j] == want[i][j],
                "table-fixture",
                &format!("entry ({}, {})", i + 1, j + 1),
                &format!("{}", want[i][j] + 1),
                &format!("{}", table.entries()[i][j] + 1),
            );
        }
    }
    check.require(
        table.entries()[8] == (0..15).collect::<Vec<_>>(),
        "table-fixture",
        "identity row",
        "header row",
        "differs",
    );
    check.require(
        table.entries()[6].iter().all(|&e| e == 6),
        "table-fixture",
        "absorbing row",
        "constant",
        "differs",
    );
    check.finish("c5", "order-2 multiplication table fixture", start)
}

// ---- order-3 specialized machinery ----

/// A monoid basis with integer-scaled coefficient vectors: element `i` equals
/// `vecs[i] / dens[i]` over the indexed diagram basis.
struct ScaledBasis {
    vecs: Vec<Vec<(u32, BigInt)>>,
    dense: Vec<Vec<BigInt>>,
    dens: Vec<BigInt>,
}

fn scale_basis(
    basis: &MonoidBasis<Rational>,
    diagrams: &[PartitionDiagram],
    ctx: &DiagCtx,
) -> ScaledBasis {
    let n = diagrams.len();
    let mut vecs = Vec::with_capacity(n);
    let mut dense = Vec::with_capacity(n);
    let mut dens = Vec::with_capacity(n);
    for d in diagrams {
        let elem = &basis.elements()[d];
        let mut den = BigInt::one();
        for c in elem.terms().values() {
            den = den.lcm(c.denom());
        }
        let mut v: Vec<(u32, BigInt)> = elem
            .terms()
            .iter()
            .map(|(dg, c)| (ctx.id(dg), c.numer() * (&den / c.denom())))
            .collect();
        v.sort_by_key(|(id, _)| *id);
        let mut dv = vec![BigInt::zero(); n];
        for (id, c) in &v {
            dv[*id as usize] = c.clone();
        }
        vecs.push(v);
        dense.push(dv);
        dens.push(den);
    }
    ScaledBasis { vecs, dense, dens }
}

/// Precomputed combinatorial product table over diagram indices.
fn rule_table(diagrams: &[PartitionDiagram]) -> Vec<u16> {
    let n = diagrams.len();
    let index: HashMap<&PartitionDiagram, u16> = diagrams
        .iter()
        .enumerate()
        .map(|(i, d)| (d, i as u16))
        .collect();
    let rsks: Vec<(SetPartitionTableau, SetPartitionTableau)> =
        diagrams.iter().map(diagram_rsk).collect();
    let mut memo: HashMap<(u16, u16), u16> = HashMap::new();
    let mut interned: HashMap<SetPartitionTableau, u16> = HashMap::new();
    let mut intern = |t: &SetPartitionTableau| -> u16 {
        if let Some(&id) = interned.get(t) {
            return id;
        }
        let next = interned.len() as u16;
        interned.insert(t.clone(), next);
        next
    };
    let t1_ids: Vec<u16> = rsks.iter().map(|(a, _)| intern(a)).collect();
    let t2_ids: Vec<u16> = rsks.iter().map(|(_, b)| intern(b)).collect();
    let k = diagrams[0].order();
    let id_idx = index[&PartitionDiagram::identity(k)];
    let rev_idx = index[&PartitionDiagram::reverse(k)];
    let mut out = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            let r = if a as u16 == id_idx {
                b as u16
            } else if b as u16 == id_idx {
                a as u16
            } else if t2_ids[a] != t1_ids[b] {
                rev_idx
            } else {
                *memo.entry((t1_ids[a], t2_ids[b])).or_insert_with(|| {
                    let d = diagram_rsk_inverse(&rsks[a].0, &rsks[b].1)
                        .expect("valid equal-shape pair");
                    index[&d]
                })
            };
            out[a * n + b] = r;
        }
    }
    out
}

/// Verifies `m_a · m_b = m_{rule(a,b)}` for every ordered pair over `Q` at
/// the system's parameter, using integer-scaled vectors and the precomputed
/// diagram product table. Returns the number of verified pairs or the first
/// failing pair.
fn closure_check_at_point(
    sys: &MatrixUnitSystem<Rational>,
    rule: &[u16],
    diagrams: &[PartitionDiagram],
    ctx: &DiagCtx,
) -> Result<usize, (usize, usize)> {
    let k = sys.order();
    let n = diagrams.len();
    let basis = build_monoid_basis(sys, DEFAULT_ORDER_LIMIT).expect("basis builds");
    let scaled = scale_basis(&basis, diagrams, ctx);
    let x = sys.parameter();
    // Weights w_e = p^e q^(k-e) turn n^e into an integer factor after scaling
    // by q^k.
    let (p, q) = (x.numer().clone(), x.denom().clone());
    let mut w = Vec::with_capacity(k + 1);
    for e in 0..=k {
        w.push(p.pow(e as u32) * q.pow((k - e) as u32));
    }
    let qk = q.pow(k as u32);

    let threads = std::thread::available_parallelism()
        .map(|v| v.get())
        .unwrap_or(1)
        .min(n.max(1));
    let failed = std::sync::Mutex::new(Option::<(usize, usize)>::None);
    let counter = std::sync::atomic::AtomicUsize::new(0);
    let next_row = std::sync::atomic::AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| {
                let mut acc = vec![BigInt::zero(); n];
                loop {
                    let a = next_row.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if a >= n {
                        return;
                    }
                    if failed.lock().unwrap().is_some() {
                        return;
                    }
                    for b in 0..n {
                        for (ia, ca) in &scaled.vecs[a] {
                            for (ib, cb) in &scaled.vecs[b] {
                                let (ir, e) = ctx.product_cached(*ia, *ib);
                                let mut t = ca * cb;
                                t *= &w[e as usize];
                                acc[ir as usize] += t;
                            }
                        }
                        let c = rule[a * n + b] as usize;
                        let factor = &scaled.dens[a] * &scaled.dens[b] * &qk;
                        let dc = &scaled.dens[c];
                        let target = &scaled.dense[c];
                        let mut ok = true;
                        for t in 0..n {
                            let lhs = &acc[t] * dc;
                            let rhs = &target[t] * &factor;
                            if lhs != rhs {
                                ok = false;
                            }
                            acc[t] = BigInt::zero();
                        }
                        if !ok {
                            *failed.lock().unwrap() = Some((a, b));
                            return;
                        }
                        counter.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    }
                }
            });
        }
    });
    let failure = failed.into_inner().unwrap();
    match failure {
        Some(pair) => Err(pair),
        None => Ok(counter.into_inner()),
    }
}

/// Criterion 6: the closure law `m_a m_b = m_{rule(a,b)}`, exhaustively
/// symbolic at order 2 and exhaustive over two independent random rational
/// parameters at order 3.
pub fn criterion6_closure(cfg: VerifyConfig) -> CheckOutcome {
    let start = Instant::now();
    let mut check = Check::new();
    // Order 2, symbolic: the verified table recomputes every product.
    let sys2 = symbolic_system(2);
    let basis2 = build_monoid_basis(&sys2, DEFAULT_ORDER_LIMIT).unwrap();
    match multiplication_table_with_basis(&sys2, &basis2, DEFAULT_ORDER_LIMIT) {
        Ok(_) => check.note("order 2: 225 products verified symbolically"),
        Err(e) => check.fail("closure", "order 2".into(), "rule = algebra".into(), e.to_string()),
    }
    // Order 3, specialized: two independent points, all pairs.
    let diagrams = enumerate_diagrams_with_limit(3, DEFAULT_ORDER_LIMIT).unwrap();
    let rule = rule_table(&diagrams);
    let mut ctx = DiagCtx::new(3, DEFAULT_ORDER_LIMIT).unwrap();
    ctx.fill_all();
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let points = cfg.trials.max(2);
    for trial in 0..points {
        let (x, sys3) = build_system_at_random(&mut rng, 3);
        match closure_check_at_point(&sys3, &rule, &diagrams, &ctx) {
            Ok(pairs) => check.note(format!(
                "order 3, point {} (n = {}): {pairs} pairs verified exactly",
                trial + 1,
                crate::arith::format_rational(&x)
            )),
            Err((a, b)) => check.fail(
                "closure",
                format!("order 3 pair ({}, {}) at n = {}", diagrams[a], diagrams[b], x),
                "rule = algebra".into(),
                "products differ".into(),
            ),
        }
        if check.failure.is_some() {
            break;
        }
    }
    check.note("rule table is parameter-independent by construction; verified at every point");
    check.finish("c6", "monoid closure law (order 2 symbolic, order 3 at random points)", start)
}

/// Whether all roots of `p` lie in the given integer set (i.e. `p` is a
/// constant times a product of the corresponding linear factors).
fn roots_within(p: &Polynomial, roots: &[i64]) -> bool {
    let mut q = p.clone();
    for &r in roots {
        let lin = Polynomial::from_integers(&[-r, 1]);
        loop {
            let (quot, rem) = q.div_rem(&lin).expect("nonzero divisor");
            if rem.is_zero() {
                q = quot;
            } else {
                break;
            }
        }
    }
    q.is_constant()
}

/// Criterion 7: the transition matrix at order 2. Pinned diagonal rows match
/// exactly; the matrix is invertible with poles and zeros of the determinant
/// confined to `{0, 1, 2}`; agreement with the externally pinned determinant
/// value is reported but not required.
pub fn criterion7_transition_matrix(
) -> (CheckOutcome, TransitionReport) {
    let start = Instant::now();
    let mut check = Check::new();
    let sys = symbolic_system(2);
    let t = transition_matrix(&sys, DEFAULT_ORDER_LIMIT).unwrap();
    for (row, want) in fixture_k2_transition_rows() {
        #[allow(clippy::needless_range_loop)]
        for col in 0..15 {
            let got = t.entry(row, col);
            check.require(
                got == &want[col],
                "transition-row",
                &format!("row {}, column {}", row + 1, col + 1),
                &format!("{}", want[col]),
                &format!("{got}"),
            );
        }
    }
    let det = t.determinant();
    check.require(!det.is_zero(), "transition-det", "determinant", "nonzero", "zero");
    let degenerate = [0i64, 1, 2];
    check.require(
        roots_within(det.den(), &degenerate),
        "transition-det",
        "determinant pole set",
        "subset of {0,1,2}",
        &format!("{}", det.den()),
    );
    check.require(
        roots_within(det.num(), &degenerate),
        "transition-det",
        "determinant zero set",
        "subset of {0,1,2}",
        &format!("{}", det.num()),
    );
    // Reported, not required: the externally pinned determinant value
    // -1/(2 (n-2)^3 (n-1)^2 n^7).
    let m = |c: i64| Polynomial::from_integers(&[-c, 1]);
    let pinned_den = &(&(&Polynomial::from_integers(&[2]) * &m(2).pow(3)) * &m(1).pow(2))
        * &Polynomial::variable().pow(7);
    let pinned = RationalFunction::new(Polynomial::from_integers(&[-1]), pinned_den).unwrap();
    let matches = det == pinned;
    check.note(format!(
        "determinant = {det}; equals the pinned value: {matches} (reported, not required)"
    ));
    let outcome = check.finish("c7", "order-2 transition matrix partial oracle", start);
    (
        outcome,
        TransitionReport {
            determinant: det,
            matches_pinned: matches,
        },
    )
}

/// Reported (non-gating) results of the transition-matrix check.
pub struct TransitionReport {
    pub determinant: RationalFunction,
    pub matches_pinned: bool,
}

/// Criterion 8: monoid axioms of the combinatorial rule — exhaustive
/// associativity at order 2, sampled associativity at order 3, exact
/// identity and absorbing laws at orders 1-3.
pub fn criterion8_monoid_axioms(cfg: VerifyConfig) -> CheckOutcome {
    let start = Instant::now();
    let mut check = Check::new();
    for k in [2usize, 3] {
        let diagrams = enumerate_diagrams_with_limit(k, DEFAULT_ORDER_LIMIT).unwrap();
        let n = diagrams.len();
        let rule = rule_table(&diagrams);
        let r = |a: usize, b: usize| rule[a * n + b] as usize;
        if k == 2 {
            let mut checked = 0usize;
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if r(r(a, b), c) != r(a, r(b, c)) {
                            check.fail(
                                "associativity",
                                format!("({}, {}, {})", diagrams[a], diagrams[b], diagrams[c]),
                                "equal".into(),
                                "differs".into(),
                            );
                        }
                        checked += 1;
                    }
                }
            }
            check.note(format!("order 2: {checked} triples associative"));
        } else {
            let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0x5eed);
            let mut checked = 0usize;
            for _ in 0..10_000 {
                let (a, b, c) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if r(r(a, b), c) != r(a, r(b, c)) {
                    check.fail(
                        "associativity",
                        format!("({}, {}, {})", diagrams[a], diagrams[b], diagrams[c]),
                        "equal".into(),
                        "differs".into(),
                    );
                }
                checked += 1;
            }
            check.note(format!("order 3: {checked} random triples associative"));
        }
    }
    for k in 1..=3usize {
        let diagrams = enumerate_diagrams_with_limit(k, DEFAULT_ORDER_LIMIT).unwrap();
        let id = PartitionDiagram::identity(k);
        let absorbing = if k == 1 {
            PartitionDiagram::new(1, vec![vec![1], vec![-1]]).unwrap()
        } else {
            PartitionDiagram::reverse(k)
        };
        for d in &diagrams {
            let ok = rule_product(&id, d).unwrap() == *d
                && rule_product(d, &id).unwrap() == *d
                && rule_product(&absorbing, d).unwrap() == absorbing
                && rule_product(d, &absorbing).unwrap() == absorbing;
            check.require(
                ok,
                "identity-absorbing",
                &format!("order {k}, diagram {d}"),
                "identity and absorbing laws",
                "violated",
            );
        }
    }
    check.finish("c8", "monoid axioms of the product rule", start)
}

/// Runs the eight acceptance criteria in order.
pub fn run_acceptance(cfg: VerifyConfig) -> Vec<CheckOutcome> {
    vec![
        criterion1_young_oracle(),
        criterion2_order2_units(),
        criterion3_dimensions(),
        criterion4_bijections(),
        criterion5_table_fixture(),
        criterion6_closure(cfg),
        criterion7_transition_matrix().0,
        criterion8_monoid_axioms(cfg),
    ]
}

/// Verification mode for the command-line front end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Randomized,
}

/// The per-order invariant suite behind `parmon verify`: structural checks
/// for the requested order plus the pinned fixtures where they exist.
pub fn run_for_order(k: usize, mode: Mode, cfg: VerifyConfig) -> Vec<CheckOutcome> {
    let mut out = Vec::new();

    // Diagram monoid sanity at this order.
    let start = Instant::now();
    let mut check = Check::new();
    let diagrams = enumerate_diagrams_with_limit(k, DEFAULT_ORDER_LIMIT).unwrap();
    check.require(
        diagrams.len() as u64 == bell_number(2 * k),
        "enumeration",
        &format!("order {k}"),
        &bell_number(2 * k).to_string(),
        &diagrams.len().to_string(),
    );
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0xd1a6);
    let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if diagrams.len() <= 15 {
        let n = diagrams.len();
        Box::new((0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))))
    } else {
        let n = diagrams.len();
        Box::new((0..1000).map(move |_| {
            (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            )
        }))
    };
    for (a, b, c) in triples {
        let ab_c = diagrams[a]
            .compose(&diagrams[b])
            .unwrap()
            .diagram
            .compose(&diagrams[c])
            .unwrap();
        let a_bc = diagrams[a]
            .compose(&diagrams[b].compose(&diagrams[c]).unwrap().diagram)
            .unwrap();
        // Middle components differ between groupings; the projected diagram
        // must not.
        check.require(
            ab_c.diagram == a_bc.diagram,
            "compose-associativity",
            &format!("({a},{b},{c})"),
            "equal diagrams",
            "differ",
        );
    }
    out.push(check.finish("diagram", &format!("diagram monoid at order {k}"), start));

    // Bijection round trips at this order.
    let start = Instant::now();
    let mut check = Check::new();
    for d in &diagrams {
        let (a, b) = diagram_rsk(d);
        if diagram_rsk_inverse(&a, &b).as_ref() != Ok(d) {
            check.fail("rsk-round-trip", format!("{d}"), format!("{d}"), "differs".into());
        }
    }
    for t in enumerate_spt(k).unwrap() {
        let back = crate::bijections::bh_inverse(&bh_forward(&t).unwrap());
        if back.as_ref() != Ok(&t) {
            check.fail("insertion-round-trip", format!("{t:?}"), format!("{t:?}"), "differs".into());
        }
    }
    check.note(format!("round trips exhaustive over {} diagrams", diagrams.len()));
    out.push(check.finish("bijections", &format!("bijections at order {k}"), start));

    // Dimension decomposition at this order.
    let start = Instant::now();
    let mut check = Check::new();
    let total: u64 = dimension_decomposition(k).values().map(|c| c * c).sum();
    check.require(
        total == bell_number(2 * k),
        "dimension",
        &format!("order {k}"),
        &bell_number(2 * k).to_string(),
        &total.to_string(),
    );
    out.push(check.finish("dimension", &format!("dimension decomposition at order {k}"), start));

    // Units and closure.
    match mode {
        Mode::Symbolic => {
            let start = Instant::now();
            let mut check = Check::new();
            let sys = build_system(k, RationalFunction::variable(), DEFAULT_ORDER_LIMIT);
            match sys {
                Ok(sys) => {
                    check_unit_axioms(&sys, &mut check, &format!("order-{k} axioms"));
                    check.require(
                        sys.diagonal_sum() == AlgebraElement::one(k),
                        "completeness",
                        "diagonal sum",
                        "identity",
                        "differs",
                    );
                    let basis = build_monoid_basis(&sys, DEFAULT_ORDER_LIMIT).unwrap();
                    match multiplication_table_with_basis(&sys, &basis, DEFAULT_ORDER_LIMIT) {
                        Ok(table) => {
                            check.note(format!(
                                "closure verified symbolically over {} pairs",
                                table.diagrams().len() * table.diagrams().len()
                            ));
                        }
                        Err(e) => check.fail(
                            "closure",
                            format!("order {k}"),
                            "rule = algebra".into(),
                            e.to_string(),
                        ),
                    }
                }
                Err(e) => check.fail(
                    "construction",
                    format!("order {k}"),
                    "system builds".into(),
                    e.to_string(),
                ),
            }
            out.push(check.finish(
                "units+closure",
                &format!("matrix units and closure at order {k} (symbolic)"),
                start,
            ));
        }
        Mode::Randomized => {
            let start = Instant::now();
            let mut check = Check::new();
            let rule = rule_table(&diagrams);
            let mut ctx = DiagCtx::new(k, DEFAULT_ORDER_LIMIT).unwrap();
            ctx.fill_all();
            let mut rng = StdRng::seed_from_u64(cfg.seed);
            for trial in 0..cfg.trials.max(1) {
                let (x, sys) = build_system_at_random(&mut rng, k);
                if sys.diagonal_sum() != AlgebraElement::one(k) {
                    check.fail(
                        "completeness",
                        format!("n = {x}"),
                        "diagonal sum = identity".into(),
                        "differs".into(),
                    );
                    break;
                }
                match closure_check_at_point(&sys, &rule, &diagrams, &ctx) {
                    Ok(pairs) => check.note(format!(
                        "trial {} (n = {}): {pairs} pairs verified",
                        trial + 1,
                        crate::arith::format_rational(&x)
                    )),
                    Err((a, b)) => {
                        check.fail(
                            "closure",
                            format!("pair ({}, {}) at n = {x}", diagrams[a], diagrams[b]),
                            "rule = algebra".into(),
                            "differs".into(),
                        );
                        break;
                    }
                }
                // Sampled matrix-unit axioms at the same point.
                let mut flat: Vec<(usize, usize, usize)> = Vec::new();
                for (b, block) in sys.blocks().iter().enumerate() {
                    for i in 0..block.paths.len() {
                        for j in 0..block.paths.len() {
                            flat.push((b, i, j));
                        }
                    }
                }
                let mut sampled = 0usize;
                for _ in 0..200 {
                    let (b1, i1, j1) = flat[rng.gen_range(0..flat.len())];
                    let (b2, i2, j2) = flat[rng.gen_range(0..flat.len())];
                    let u = &sys.blocks()[b1].units[i1][j1];
                    let v = &sys.blocks()[b2].units[i2][j2];
                    let prod = u.multiply(v, sys.parameter()).expect("orders agree");
                    let ok = if b1 == b2 && j1 == i2 {
                        prod == sys.blocks()[b1].units[i1][j2]
                    } else {
                        prod.is_zero()
                    };
                    if !ok {
                        check.fail(
                            "unit-axioms",
                            format!("sampled pair at n = {x}"),
                            "matrix-unit product rule".into(),
                            "violated".into(),
                        );
                        break;
                    }
                    sampled += 1;
                }
                check.note(format!("trial {}: {sampled} sampled unit products satisfy the axioms", trial + 1));
            }
            out.push(check.finish(
                "units+closure",
                &format!("matrix units and closure at order {k} (randomized)"),
                start,
            ));
        }
    }

    if k == 2 {
        out.push(criterion5_table_fixture());
        out.push(criterion7_transition_matrix().0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        assert_eq!(fixture_k2_diagram_order().len(), 15);
        assert_eq!(fixture_k2_table().len(), 15);
        let (four, eight) = fixture_k2_idempotents();
        assert_eq!(four.terms().len(), 4);
        assert_eq!(eight.terms().len(), 8);
        assert_eq!(fixture_k2_rsk_pairs().len(), 15);
        assert_eq!(fixture_k2_insertion_pairs().len(), 7);
        assert_eq!(fixture_k2_transition_rows().len(), 7);
    }

    #[test]
    fn random_parameter_avoids_degenerate_integers() {
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..200 {
            let x = random_parameter(&mut rng, 3);
            if x.is_integer() {
                assert!(x.to_integer() > BigInt::from(4));
            }
        }
    }

    #[test]
    fn roots_within_detects_extra_factors() {
        // 2 n^2 (n-1): roots within {0,1}.
        let p = Polynomial::from_integers(&[0, 0, -2, 2]);
        assert!(roots_within(&p, &[0, 1]));
        assert!(!roots_within(&p, &[0]));
        // n^2 + 1 has no rational roots at all.
        let q = Polynomial::from_integers(&[1, 0, 1]);
        assert!(!roots_within(&q, &[0, 1, 2]));
    }
}
