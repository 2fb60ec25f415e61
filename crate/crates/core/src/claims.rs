//! Named verification claims with expected and computed values. Each claim
//! is deterministic: random corpora come from fixed seeds.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::depth::{symbolic_depth_function, symbolic_depths, DepthOptions, Strategy};
use crate::error::Result;
use crate::families::{self, in_e, TransversalIdeal};
use crate::functions::{decompose, evaluate, Recipe, StepFunction};
use crate::membership::{closure_filtration, in_power, integral_closure, is_integrally_closed, nu, nu_star};
use crate::monomial::{format_monomial, Decomposition, ExponentVector, MonomialIdeal, PrimaryComponent, Ring, VarSet};
use crate::oracle;
use crate::scalar::Coefficients;

/// One comparison inside a claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub id: &'static str,
    pub checks: Vec<Check>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.ok)
    }

    fn check(&mut self, label: impl Into<String>, expected: impl fmt::Debug, computed: impl fmt::Debug, ok: bool) {
        self.checks.push(Check {
            label: label.into(),
            expected: format!("{expected:?}"),
            computed: format!("{computed:?}"),
            ok,
        });
    }

    fn eq<T: fmt::Debug + PartialEq>(&mut self, label: impl Into<String>, expected: T, computed: T) {
        let ok = expected == computed;
        self.check(label, expected, computed, ok);
    }

    fn holds(&mut self, label: impl Into<String>, computed: bool) {
        self.check(label, true, computed, computed);
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", if self.passed() { "PASS" } else { "FAIL" }, self.id)?;
        for c in &self.checks {
            let mark = if c.ok { "ok" } else { "MISMATCH" };
            writeln!(f, "  {}: expected {} computed {} [{mark}]", c.label, c.expected, c.computed)?;
        }
        Ok(())
    }
}

/// A claim id with the acceptance criterion it belongs to.
#[derive(Debug, Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub criterion: u8,
    pub summary: &'static str,
    run: fn(&mut ClaimReport) -> Result<()>,
}

impl Claim {
    pub fn run(&self) -> ClaimReport {
        let mut report = ClaimReport { id: self.id, checks: Vec::new() };
        if let Err(e) = (self.run)(&mut report) {
            report.check("evaluation", "no error", e.to_string(), false);
        }
        report
    }
}

pub const CLAIMS: &[Claim] = &[
    Claim { id: "lemma4.2-m2", criterion: 1, summary: "typeA m=2: 1 below m, then 2", run: |r| type_a(r, 2) },
    Claim { id: "lemma4.2-m3", criterion: 1, summary: "typeA m=3: 1 below m, then 2", run: |r| type_a(r, 3) },
    Claim { id: "lemma4.3-m1", criterion: 2, summary: "typeB m=1: 2 exactly at t=m", run: |r| type_b(r, 1) },
    Claim { id: "lemma4.3-m2", criterion: 2, summary: "typeB m=2: 2 exactly at t=m", run: |r| type_b(r, 2) },
    Claim { id: "lemma4.3-m3", criterion: 2, summary: "typeB m=3: 2 exactly at t=m", run: |r| type_b(r, 3) },
    Claim { id: "lemma4.5-m2", criterion: 3, summary: "typeC d=0, m=2: 2 exactly at multiples of m", run: |r| type_c0(r, 2) },
    Claim { id: "lemma4.5-m3", criterion: 3, summary: "typeC d=0, m=3: 2 exactly at multiples of m", run: |r| type_c0(r, 3) },
    Claim { id: "lemma4.6", criterion: 4, summary: "periodic triple (4,2): containment exactly at t ≡ 2 mod 4", run: periodic_4_2 },
    Claim { id: "thm4.4-3-1", criterion: 4, summary: "typeC (3,1): 2 exactly at t ≡ 1 mod 3", run: |r| type_c(r, 3, 1, 9) },
    Claim { id: "thm4.4-3-2", criterion: 4, summary: "typeC (3,2): 2 exactly at t ≡ 2 mod 3", run: |r| type_c(r, 3, 2, 9) },
    Claim { id: "thm4.4-5-3", criterion: 4, summary: "typeC (5,3): 2 exactly at t ≡ 3 mod 5", run: |r| type_c(r, 5, 3, 5) },
    Claim { id: "thm2.8-claim1", criterion: 5, summary: "s=3: Q^t inside the sum of P_i^t exactly off E(3)", run: transversal_claim },
    Claim { id: "thm2.8-depth", criterion: 5, summary: "s=3: depth 2 on E(3), at least 3 off it", run: transversal_depth },
    Claim { id: "example6", criterion: 6, summary: "depths 2,1,2,2,2,2 with witness x^13*y^6*z^3", run: example6 },
    Claim { id: "thm2.7", criterion: 7, summary: "squarefree: depth at s dominates depth on E(s)", run: e_set_dominance },
    Claim { id: "prop5.1", criterion: 8, summary: "disjoint products: depth is the sum plus one", run: disjoint_products },
    Claim { id: "oracles", criterion: 9, summary: "membership agrees with brute force", run: oracles },
    Claim { id: "closure", criterion: 10, summary: "integral closure suite", run: closure },
    Claim { id: "homology", criterion: 11, summary: "homology conventions and Euler characteristic", run: homology },
    Claim { id: "planner", criterion: 12, summary: "planner round trip", run: planner },
    Claim { id: "box-stability", criterion: 13, summary: "larger candidate boxes give the same depths", run: box_stability },
];

pub fn find(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

/// Claims selected by an id, where `all` selects every claim.
pub fn select(id: &str) -> Option<Vec<&'static Claim>> {
    if id == "all" {
        return Some(CLAIMS.iter().collect());
    }
    find(id).map(|c| vec![c])
}

fn engine(decomposition: &Decomposition, t_max: u32, strategy: Strategy) -> Result<Vec<usize>> {
    symbolic_depths(decomposition, t_max, DepthOptions { strategy, ..Default::default() })
}

/// Compares containment and engine against `expected`, and checks that the
/// fast paths agree with the computed depth.
fn both_paths(r: &mut ClaimReport, triple: &families::MpqTriple, expected: &[usize]) -> Result<()> {
    let t_max = expected.len() as u32;
    let mpq: Vec<usize> = families::mpq_depth_sequence(triple, t_max)?.iter().map(|d| d.depth).collect();
    r.eq(format!("containment t=1..{t_max}"), expected.to_vec(), mpq);
    let rows = symbolic_depth_function(&families::assemble(triple)?, t_max, DepthOptions::default())?;
    let depths: Vec<usize> = rows.iter().map(|row| row.report.depth).collect();
    r.eq(format!("engine t=1..{t_max}"), expected.to_vec(), depths);
    let fast_ok = rows.iter().all(|row| row.at_least_1 == (row.report.depth >= 1) && row.at_least_2 == (row.report.depth >= 2));
    r.holds("fast paths agree with engine", fast_ok);
    Ok(())
}

fn type_a(r: &mut ClaimReport, m: u32) -> Result<()> {
    let expected: Vec<usize> = (1..=3 * m).map(|t| if t < m { 1 } else { 2 }).collect();
    both_paths(r, &families::type_a(m)?, &expected)
}

fn type_b(r: &mut ClaimReport, m: u32) -> Result<()> {
    let expected: Vec<usize> = (1..=3 * m + 2).map(|t| if t == m { 2 } else { 1 }).collect();
    both_paths(r, &families::type_b(m)?, &expected)
}

fn type_c0(r: &mut ClaimReport, m: u32) -> Result<()> {
    let expected: Vec<usize> = (1..=3 * m).map(|t| if t % m == 0 { 2 } else { 1 }).collect();
    both_paths(r, &families::type_c0(m)?, &expected)
}

fn periodic_4_2(r: &mut ClaimReport) -> Result<()> {
    let triple = families::periodic_triple(4, 2)?;
    let expected: Vec<bool> = (1..=12).map(|t| t % 4 == 2).collect();
    let computed: Vec<bool> = families::mpq_depth_sequence(&triple, 12)?.iter().map(|d| d.depth == 2).collect();
    r.eq("containment t=1..12", expected, computed);
    Ok(())
}

/// Containment over `t <= 3m`, engine over `t <= engine_max`.
fn type_c(r: &mut ClaimReport, m: u32, d: u32, engine_max: u32) -> Result<()> {
    let triple = families::type_c(m, d)?;
    let expected: Vec<usize> = (1..=3 * m).map(|t| if t % m == d { 2 } else { 1 }).collect();
    let mpq: Vec<usize> = families::mpq_depth_sequence(&triple, 3 * m)?.iter().map(|x| x.depth).collect();
    r.eq(format!("containment t=1..{}", 3 * m), expected.clone(), mpq);
    let depths = engine(&families::assemble(&triple)?, engine_max, Strategy::Auto)?;
    r.eq(format!("engine t=1..{engine_max}"), expected[..engine_max as usize].to_vec(), depths);
    Ok(())
}

fn transversal_claim(r: &mut ClaimReport) -> Result<()> {
    let ideal = TransversalIdeal::new(3)?;
    let expected: Vec<bool> = (1..=9).map(|t| !in_e(3, t)).collect();
    let mut computed = Vec::new();
    for t in 1..=9 {
        let (holds, witness) = ideal.containment(t)?;
        computed.push(holds);
        if t == 3 {
            let w = witness.map(|w| format_monomial(&ideal.ring, &w));
            r.eq("witness at t=3", Some("x11*x12*x21*x22*x31*x32".to_string()), w);
        }
    }
    r.eq("containment t=1..9", expected, computed);
    Ok(())
}

fn transversal_depth(r: &mut ClaimReport) -> Result<()> {
    let depths = engine(&TransversalIdeal::new(3)?.decomposition()?, 5, Strategy::Auto)?;
    for (t, &d) in (1..).zip(&depths) {
        if in_e(3, t) {
            r.eq(format!("t={t} in E(3)"), 2, d);
        } else {
            r.check(format!("t={t} off E(3)"), ">= 3", d, d >= 3);
        }
    }
    Ok(())
}

fn example6(r: &mut ClaimReport) -> Result<()> {
    let triple = families::example6();
    both_paths(r, &triple, &[2, 1, 2, 2, 2, 2])?;
    let witness = families::mpq_depth(&triple, 2)?.witness;
    let ring = Ring::new(["x", "y", "z"])?;
    r.eq(
        "witness at t=2",
        Some("x^13*y^6*z^3".to_string()),
        witness.map(|w| format_monomial(&ring, &w)),
    );
    Ok(())
}

fn random_squarefree(rng: &mut ChaCha8Rng, max_vars: usize) -> Result<MonomialIdeal> {
    let n = rng.gen_range(2..=max_vars);
    let ring = Ring::standard(n)?;
    let count = rng.gen_range(1..=n + 1);
    let gens = (0..count).map(|_| {
        let mut exps = vec![0; n];
        let size = rng.gen_range(1..=n.min(3));
        let mut vars: Vec<usize> = (0..n).collect();
        vars.shuffle(rng);
        for &v in &vars[..size] {
            exps[v] = 1;
        }
        ExponentVector::new(exps)
    });
    MonomialIdeal::new(&ring, gens)
}

/// The corpus shared by the E(s) claim and the box-stability claim.
fn squarefree_corpus() -> Result<Vec<Decomposition>> {
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    (0..20).map(|_| random_squarefree(&mut rng, 5)?.minimal_primes_squarefree()).collect()
}

fn e_set_dominance(r: &mut ClaimReport) -> Result<()> {
    for (k, dec) in squarefree_corpus()?.iter().enumerate() {
        let depths = engine(dec, 8, Strategy::Auto)?;
        for s in [2u32, 3] {
            let at_s = depths[s as usize - 1];
            let bad: Vec<u32> = (1..=8).filter(|&t| in_e(s, t) && depths[t as usize - 1] > at_s).collect();
            r.eq(format!("ideal {k} {} s={s}: t in E(s) with larger depth", dec.intersection()), Vec::<u32>::new(), bad);
        }
    }
    Ok(())
}

fn principal_x() -> Result<Decomposition> {
    let ring = Ring::new(["x", "y"])?;
    Decomposition::new(&ring, vec![PrimaryComponent::prime(&ring, VarSet::singleton(0))?])
}

fn squarefree(names: &[&str], rows: &[&[u32]]) -> Result<Decomposition> {
    let ring = Ring::new(names.iter().copied())?;
    MonomialIdeal::from_exponents(&ring, rows)?.minimal_primes_squarefree()
}

fn product_pairs() -> Result<Vec<(&'static str, Decomposition, Decomposition)>> {
    Ok(vec![
        ("(x) x typeB(1)", principal_x()?, families::assemble(&families::type_b(1)?)?),
        ("triangle x (uv)", squarefree(&["a", "b", "c"], &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])?, squarefree(&["u", "v"], &[&[1, 1]])?),
        ("path x typeA(2)", squarefree(&["a", "b", "c"], &[&[1, 1, 0], &[0, 1, 1]])?, families::assemble(&families::type_a(2)?)?),
    ])
}

fn disjoint_products(r: &mut ClaimReport) -> Result<()> {
    for (name, left, right) in product_pairs()? {
        let f = engine(&left, 3, Strategy::Auto)?;
        let g = engine(&right, 3, Strategy::Auto)?;
        let expected: Vec<usize> = f.iter().zip(&g).map(|(a, b)| a + b + 1).collect();
        let product = engine(&left.product_disjoint(&right)?, 3, Strategy::Auto)?;
        r.eq(format!("{name} t=1..3"), expected, product);
    }
    Ok(())
}

fn random_ideal(rng: &mut ChaCha8Rng, max_vars: usize, max_exp: u32) -> Result<MonomialIdeal> {
    let n = rng.gen_range(1..=max_vars);
    let ring = Ring::standard(n)?;
    let count = rng.gen_range(1..=4);
    let gens: Vec<ExponentVector> = (0..count)
        .map(|_| loop {
            let v: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if v.iter().any(|&e| e > 0) {
                break ExponentVector::new(v);
            }
        })
        .collect();
    MonomialIdeal::new(&ring, gens)
}

fn oracles(r: &mut ClaimReport) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut points, mut power_bad, mut nu_bad, mut floor_bad, mut star_bad) = (0usize, 0, 0, 0, 0);
    for _ in 0..50 {
        let ideal = random_ideal(&mut rng, 3, 4)?;
        let bounds: Vec<u32> = ideal.max_exponents().iter().map(|&b| 3 * b).collect();
        for a in oracle::box_points(&bounds) {
            points += 1;
            for t in 1..=3 {
                power_bad += usize::from(in_power(&a, &ideal, t)? != oracle::in_power_brute(&a, &ideal, t));
            }
            let n = nu(&a, &ideal)?.value;
            let star = nu_star(&a, &ideal)?.value;
            nu_bad += usize::from(n != oracle::nu_brute(&a, &ideal));
            floor_bad += usize::from(star.floor().to_integer() < n.into());
            star_bad += usize::from(star != oracle::nu_star_vertices(&a, &ideal));
        }
    }
    r.eq(format!("in_power disagreements over {points} points"), 0, power_bad);
    r.eq("nu disagreements", 0, nu_bad);
    r.eq("floor(nu*) < nu", 0, floor_bad);
    r.eq("nu* vertex disagreements", 0, star_bad);
    Ok(())
}

fn random_decomposition(rng: &mut ChaCha8Rng) -> Result<Decomposition> {
    let n = 3;
    let ring = Ring::standard(n)?;
    let pairs: [VarSet; 3] = [VarSet(0b011), VarSet(0b101), VarSet(0b110)];
    let mut supports: Vec<VarSet> = match rng.gen_range(0..3) {
        0 => vec![VarSet::full(n)],
        1 => vec![pairs[rng.gen_range(0..3)]],
        _ => pairs.to_vec(),
    };
    if supports.len() == 3 {
        supports.truncate(rng.gen_range(2..=3));
    }
    let components = supports
        .into_iter()
        .map(|s| {
            let mut gens: Vec<ExponentVector> = s
                .iter()
                .map(|i| {
                    let mut v = vec![0; n];
                    v[i] = rng.gen_range(1..=3);
                    ExponentVector::new(v)
                })
                .collect();
            let mut mixed = vec![0; n];
            for i in s.iter() {
                mixed[i] = rng.gen_range(0..=2);
            }
            gens.push(ExponentVector::new(mixed));
            let gens = gens.into_iter().filter(|g| !g.is_zero());
            PrimaryComponent::new(s, MonomialIdeal::new(&ring, gens)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Decomposition::new(&ring, components)
}

fn closure(r: &mut ClaimReport) -> Result<()> {
    let triangle = squarefree(&["x", "y", "z"], &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])?;
    let closed: Vec<bool> =
        (1..=4).map(|t| is_integrally_closed(&triangle.symbolic_power(t))).collect::<Result<_>>()?;
    r.eq("triangle symbolic powers t=1..4 closed", vec![true; 4], closed);

    let ring = Ring::new(["x", "y"])?;
    let i = MonomialIdeal::from_exponents(&ring, &[&[2, 0], &[0, 2]])?;
    let expected = MonomialIdeal::from_exponents(&ring, &[&[2, 0], &[1, 1], &[0, 2]])?;
    r.eq("closure of (x^2, y^2)", expected.to_string(), integral_closure(&i)?.to_string());

    // Powers of a power of the maximal ideal stay closed; powers of the
    // ideal of pure powers never are.
    let m2 = MonomialIdeal::prime(&ring, ring.all()).power(2);
    let m2_closed: Vec<bool> = (1..=4).map(|t| is_integrally_closed(&m2.power(t))).collect::<Result<_>>()?;
    r.eq("(x,y)^2 powers t=1..4 closed", vec![true; 4], m2_closed);
    let pure_closed: Vec<bool> = (1..=4).map(|t| is_integrally_closed(&i.power(t))).collect::<Result<_>>()?;
    r.eq("(x^2,y^2)^t t=1..4 closed", vec![false; 4], pure_closed);

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut failures = Vec::new();
    for k in 0..20 {
        let dec = random_decomposition(&mut rng)?;
        for t in 1..=2 {
            let power = dec.symbolic_power(t);
            let closed = integral_closure(&power)?;
            let filtration = closure_filtration(&dec, t)?;
            if !(power.is_contained_in(&closed)? && closed.is_contained_in(&filtration)?) {
                failures.push((k, t));
            }
        }
    }
    r.eq("sandwich failures on 20 decompositions, t<=2", Vec::<(usize, u32)>::new(), failures);
    Ok(())
}

fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let n = rng.gen_range(1..=7);
    let count = rng.gen_range(0..=5);
    let faces: Vec<VarSet> = (0..count).map(|_| VarSet(rng.gen_range(0..1u64 << n))).collect();
    SimplicialComplex::from_faces(n, faces)
}

fn homology(r: &mut ClaimReport) -> Result<()> {
    let q = Coefficients::Rational;
    let circle = SimplicialComplex::from_faces(3, [VarSet(0b011), VarSet(0b110), VarSet(0b101)]);
    r.eq("circle, indexed from j=-1", vec![0, 0, 1], circle.reduced_homology_dims(q)?);
    r.eq("simplex", vec![0, 0, 0, 0], SimplicialComplex::simplex(3).reduced_homology_dims(q)?);
    r.eq("{∅}", vec![1], SimplicialComplex::empty_face(3).reduced_homology_dims(q)?);
    r.eq("void", vec![0], SimplicialComplex::void(3).reduced_homology_dims(q)?);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut bad = 0;
    for _ in 0..100 {
        let c = random_complex(&mut rng);
        let dims = c.reduced_homology_dims(q)?;
        let alternating: i64 =
            dims.iter().enumerate().map(|(k, &d)| if k % 2 == 0 { -(d as i64) } else { d as i64 }).sum();
        bad += usize::from(alternating != c.reduced_euler_characteristic());
    }
    r.eq("Euler characteristic mismatches on 100 complexes", 0, bad);
    Ok(())
}

fn planner(r: &mut ClaimReport) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let (mut round_trip_bad, mut overline_bad) = (0, 0);
    for _ in 0..200 {
        let prefix: Vec<u32> = (0..rng.gen_range(0..=6)).map(|_| rng.gen_range(1..=5)).collect();
        let period: Vec<u32> = (0..rng.gen_range(1..=5)).map(|_| rng.gen_range(1..=5)).collect();
        let f = StepFunction::new(prefix, period)?;
        let recipe = decompose(&f)?;
        let g = evaluate(&recipe)?;
        round_trip_bad += usize::from(g.values(f.horizon()) != f.values(f.horizon()) || g != f);
        for node in recipe.nodes() {
            if let Recipe::Overline(child) = node {
                overline_bad += usize::from(evaluate(child)?.min() < 2);
            }
        }
    }
    r.eq("round trip failures on 200 functions", 0, round_trip_bad);
    r.eq("overline children below 2", 0, overline_bad);
    let example = decompose(&StepFunction::parse("2,1;2")?)?;
    r.eq(
        "recipe for 2,1,2,2,..",
        "(overline (star (star (const 2) (A 3)) (B 1)))".to_string(),
        example.to_string(),
    );
    Ok(())
}

fn box_stability(r: &mut ClaimReport) -> Result<()> {
    let mut cases: Vec<(String, Decomposition, u32)> = Vec::new();
    for m in [2, 3] {
        cases.push((format!("typeA m={m}"), families::assemble(&families::type_a(m)?)?, 3 * m));
        cases.push((format!("typeC d=0 m={m}"), families::assemble(&families::type_c0(m)?)?, 3 * m));
    }
    for m in 1..=3 {
        cases.push((format!("typeB m={m}"), families::assemble(&families::type_b(m)?)?, 3 * m + 2));
    }
    cases.push(("typeC (3,1)".into(), families::assemble(&families::type_c(3, 1)?)?, 9));
    cases.push(("transversal s=3".into(), TransversalIdeal::new(3)?.decomposition()?, 5));
    cases.push(("example6".into(), families::assemble(&families::example6())?, 6));
    for (k, dec) in squarefree_corpus()?.into_iter().enumerate() {
        cases.push((format!("squarefree corpus {k}"), dec, 8));
    }
    for (name, left, right) in product_pairs()? {
        cases.push((format!("product {name}"), left.product_disjoint(&right)?, 3));
    }
    let enlarged = Strategy::Box { extra: 2, dense: false };
    for (name, dec, t_max) in cases {
        let base = engine(&dec, t_max, Strategy::Auto)?;
        let wide = engine(&dec, t_max, enlarged)?;
        r.eq(format!("{name} t=1..{t_max}"), base, wide);
    }
    Ok(())
}

/// Runs every claim of one acceptance criterion.
pub fn run_criterion(criterion: u8) -> Vec<ClaimReport> {
    CLAIMS.iter().filter(|c| c.criterion == criterion).map(Claim::run).collect()
}
