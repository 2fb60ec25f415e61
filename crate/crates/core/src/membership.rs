//! Membership in powers and in integral closures of powers via the packing
//! numbers `nu` (integer) and `nu_star` (rational) of an exponent vector.
//!
//! For `I` with minimal generators `g_1, .., g_m`, `nu_a(I)` is the largest
//! `|v|` over `v in N^m` with `sum v_j g_j <= a`, and `nu*_a(I)` the same
//! maximum over real `v >= 0`. Then `x^a in I^t` iff `nu_a(I) >= t`, and `x^a`
//! lies in the integral closure of `I^t` iff `nu*_a(I) >= t`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lp;
use crate::monomial::{Decomposition, ExponentVector, MonomialIdeal};
use crate::{Exponent, Rational};

/// An optimal packing together with an attaining witness vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuValue<T> {
    pub value: T,
    /// Multiplicity of each minimal generator, in generator order.
    pub witness: Vec<T>,
}

/// Integer packing number.
pub type Nu = NuValue<u64>;

/// Rational packing number.
pub type NuStar = NuValue<Rational>;

fn check_input(a: &ExponentVector, ideal: &MonomialIdeal) -> Result<()> {
    ideal.require_proper_nonzero()?;
    if a.len() != ideal.ring().n() {
        return Err(Error::LengthMismatch { expected: ideal.ring().n(), got: a.len() });
    }
    Ok(())
}

/// `nu_a(I)` by memoized recursion: choose how often to use the first
/// generator, subtract, recurse on the rest.
pub fn nu(a: &ExponentVector, ideal: &MonomialIdeal) -> Result<Nu> {
    check_input(a, ideal)?;
    let gens = ideal.gens();
    let mut memo: HashMap<(usize, Vec<Exponent>), u64> = HashMap::new();
    let value = best_packing(gens, 0, a.entries().to_vec(), &mut memo);

    // Walk the memo table again to recover a witness.
    let mut witness = vec![0u64; gens.len()];
    let mut rest = a.entries().to_vec();
    let mut remaining = value;
    for (idx, g) in gens.iter().enumerate() {
        let mut k = 0u64;
        loop {
            let sub = best_packing(gens, idx + 1, rest.clone(), &mut memo);
            if sub + k == remaining {
                break;
            }
            for (r, gi) in rest.iter_mut().zip(g.iter()) {
                *r -= gi;
            }
            k += 1;
        }
        witness[idx] = k;
        remaining -= k;
    }
    debug_assert_eq!(remaining, 0);
    Ok(NuValue { value, witness })
}

fn max_copies(g: &[Exponent], a: &[Exponent]) -> u64 {
    g.iter()
        .zip(a)
        .filter(|(&gi, _)| gi > 0)
        .map(|(&gi, &ai)| (ai / gi) as u64)
        .min()
        .unwrap_or(0)
}

fn best_packing(
    gens: &[ExponentVector],
    idx: usize,
    a: Vec<Exponent>,
    memo: &mut HashMap<(usize, Vec<Exponent>), u64>,
) -> u64 {
    if idx == gens.len() {
        return 0;
    }
    if let Some(&v) = memo.get(&(idx, a.clone())) {
        return v;
    }
    let g = &gens[idx];
    let copies = max_copies(g, &a);
    let mut best = 0;
    let mut rest = a.clone();
    for k in 0..=copies {
        if k > 0 {
            for (r, gi) in rest.iter_mut().zip(g.iter()) {
                *r -= gi;
            }
        }
        best = best.max(k + best_packing(gens, idx + 1, rest.clone(), memo));
    }
    memo.insert((idx, a), best);
    best
}

/// `nu*_a(I)`, the optimum of the packing LP, with an optimal vertex.
pub fn nu_star(a: &ExponentVector, ideal: &MonomialIdeal) -> Result<NuStar> {
    check_input(a, ideal)?;
    let gens = ideal.gens();
    let n = ideal.ring().n();
    let objective = vec![Rational::one(); gens.len()];
    let matrix: Vec<Vec<Rational>> = (0..n)
        .map(|i| gens.iter().map(|g| Rational::from_integer(g[i].into())).collect())
        .collect();
    let rhs: Vec<Rational> = a.iter().map(|&v| Rational::from_integer(v.into())).collect();
    let sol = lp::maximize(&objective, &matrix, &rhs)
        .map_err(|e| Error::ConstructionBug(format!("packing LP failed: {e:?}")))?;
    Ok(NuValue { value: sol.value, witness: sol.x })
}

/// `x^a in I^t`.
pub fn in_power(a: &ExponentVector, ideal: &MonomialIdeal, t: u32) -> Result<bool> {
    check_input(a, ideal)?;
    if t == 0 {
        return Ok(true);
    }
    if t == 1 {
        return Ok(ideal.contains_exps(a));
    }
    Ok(nu(a, ideal)?.value >= t as u64)
}

/// `x^a` in the integral closure of `I^t`.
pub fn in_closure_of_power(a: &ExponentVector, ideal: &MonomialIdeal, t: u32) -> Result<bool> {
    check_input(a, ideal)?;
    if t == 0 || ideal.contains_exps(a) && t == 1 {
        return Ok(true);
    }
    Ok(nu_star(a, ideal)?.value >= Rational::from_integer(t.into()))
}

/// The integral closure, searched over the box with coordinate `i` bounded by
/// the largest exponent of `x_i` among the generators: beyond that bound,
/// lowering the coordinate stays inside the Newton polyhedron.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    ideal.require_proper_nonzero()?;
    let bounds = ideal.max_exponents();
    let mut points = Vec::new();
    let mut a = vec![0; bounds.len()];
    loop {
        points.push(a.clone());
        let mut k = 0;
        while k < a.len() && a[k] == bounds[k] {
            a[k] = 0;
            k += 1;
        }
        if k == a.len() {
            break;
        }
        a[k] += 1;
    }
    points.sort_by_key(|p| p.iter().map(|&v| v as u64).sum::<u64>());

    let mut found: Vec<ExponentVector> = Vec::new();
    for p in points {
        let p = ExponentVector::new(p);
        if found.iter().any(|f| f.divides(&p)) {
            continue;
        }
        if ideal.contains_exps(&p) || nu_star(&p, ideal)?.value >= Rational::one() {
            found.push(p);
        }
    }
    MonomialIdeal::new(ideal.ring(), found)
}

pub fn is_integrally_closed(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(integral_closure(ideal)? == *ideal)
}

/// `⋂_c closure(Q_c^t)` over the components of `decomposition`. It contains
/// the closure of the symbolic power.
pub fn closure_filtration(decomposition: &Decomposition, t: u32) -> Result<MonomialIdeal> {
    let mut acc: Option<MonomialIdeal> = None;
    for c in decomposition.components() {
        let closed = integral_closure(&c.ideal().power(t))?;
        acc = Some(match acc {
            None => closed,
            Some(prev) => prev.intersect(&closed)?,
        });
    }
    acc.ok_or_else(|| Error::InvalidComponent("empty decomposition".into()))
}

/// Checks a packing witness: `sum v_j g_j <= a` and `|v| = value`.
pub fn check_witness(a: &ExponentVector, ideal: &MonomialIdeal, nu: &NuStar) -> bool {
    let gens = ideal.gens();
    if nu.witness.len() != gens.len() || nu.witness.iter().any(|v| *v < Rational::zero()) {
        return false;
    }
    let total = nu.witness.iter().fold(Rational::zero(), |acc, v| acc + v);
    let fits = (0..a.len()).all(|i| {
        let used = gens
            .iter()
            .zip(&nu.witness)
            .fold(Rational::zero(), |acc, (g, v)| acc + v * Rational::from_integer(g[i].into()));
        used <= Rational::from_integer(a[i].into())
    });
    total == nu.value && fits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{PrimaryComponent, Ring, VarSet};
    use proptest::prelude::*;

    fn ring(n: usize) -> Ring {
        Ring::standard(n).unwrap()
    }

    fn ideal(r: &Ring, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(r, rows).unwrap()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn nu_examples() {
        let r = ring(2);
        let i = ideal(&r, &[&[2, 0], &[0, 3]]);
        let v = nu(&ev(&[5, 4]), &i).unwrap();
        assert_eq!(v.value, 3);
        // Generators are sorted, so y^3 comes first.
        assert_eq!(v.witness, vec![1, 2]);
        // Direct enumeration of all v with 2 v1 <= 5 and 3 v2 <= 4.
        let brute = (0..=2u64).flat_map(|a| (0..=1u64).map(move |b| a + b)).max().unwrap();
        assert_eq!(brute, 3);
        assert_eq!(nu(&ev(&[0, 0]), &i).unwrap().value, 0);
        let cube = ideal(&r, &[&[3, 0], &[0, 3]]);
        assert_eq!(nu(&ev(&[2, 2]), &cube).unwrap().value, 0);
        assert_eq!(nu(&ev(&[1]), &i), Err(Error::LengthMismatch { expected: 2, got: 1 }));
        assert_eq!(nu(&ev(&[1, 1]), &MonomialIdeal::zero(&r)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn nu_star_examples() {
        let r = ring(2);
        let i = ideal(&r, &[&[2, 0], &[0, 2]]);
        let v = nu_star(&ev(&[1, 1]), &i).unwrap();
        assert_eq!(v.value, q(1, 1));
        assert_eq!(v.witness, vec![q(1, 2), q(1, 2)]);
        assert!(check_witness(&ev(&[1, 1]), &i, &v));
        assert!(in_closure_of_power(&ev(&[1, 1]), &i, 1).unwrap());
        assert!(!in_power(&ev(&[1, 1]), &i, 1).unwrap());
        let a = ev(&[3, 1]);
        let scaled = ev(&[9, 3]);
        assert_eq!(
            nu_star(&scaled, &i).unwrap().value,
            nu_star(&a, &i).unwrap().value * q(3, 1)
        );
        assert_eq!(nu_star(&ev(&[0, 0]), &i).unwrap().value, q(0, 1));
    }

    #[test]
    fn power_membership_example() {
        let r = ring(5);
        let z4 = ideal(&r, &[&[0, 0, 4, 0, 0]]);
        assert!(!in_power(&ev(&[0, 0, 6, 0, 0]), &z4, 2).unwrap());
        assert!(in_power(&ev(&[0, 0, 8, 0, 0]), &z4, 2).unwrap());
    }

    #[test]
    fn closure_examples() {
        let r = ring(2);
        let i = ideal(&r, &[&[2, 0], &[0, 2]]);
        let closed = ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(integral_closure(&i).unwrap(), closed);
        assert!(!is_integrally_closed(&i).unwrap());
        assert!(is_integrally_closed(&closed).unwrap());
        let m3 = ideal(&r, &[&[1, 0], &[0, 1]]).power(3);
        assert!(is_integrally_closed(&m3).unwrap());
        let principal = ideal(&r, &[&[2, 1]]);
        assert!(is_integrally_closed(&principal).unwrap());
        assert_eq!(is_integrally_closed(&MonomialIdeal::zero(&r)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn closure_box_is_large_enough() {
        // Enlarging the search box by two in every direction finds nothing new.
        let r = ring(2);
        let i = ideal(&r, &[&[3, 0], &[1, 1], &[0, 4]]);
        let closed = integral_closure(&i).unwrap();
        for x in 0..=5u32 {
            for y in 0..=6u32 {
                let p = ev(&[x, y]);
                let member = nu_star(&p, &i).unwrap().value >= q(1, 1);
                assert_eq!(member, closed.contains_exps(&p), "{p:?}");
            }
        }
    }

    #[test]
    fn filtration_examples() {
        let r = ring(2);
        let comp = PrimaryComponent::new(
            VarSet::from_indices([0, 1]),
            ideal(&r, &[&[2, 0], &[0, 2]]),
        )
        .unwrap();
        let d = Decomposition::new(&r, vec![comp]).unwrap();
        assert_eq!(closure_filtration(&d, 1).unwrap(), ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]));

        let r3 = ring(3);
        let triangle = ideal(&r3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let d = triangle.minimal_primes_squarefree().unwrap();
        assert_eq!(closure_filtration(&d, 2).unwrap(), d.symbolic_power(2));
    }

    fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
        proptest::collection::vec(proptest::collection::vec(0u32..4, 2), 1..4).prop_filter_map(
            "proper",
            |rows| {
                let r = ring(2);
                let i = MonomialIdeal::new(&r, rows.into_iter().map(ExponentVector::new)).ok()?;
                (!i.is_unit()).then_some(i)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn nu_bounds_and_scaling(i in small_ideal(), a in proptest::collection::vec(0u32..7, 2), t in 1u32..4) {
            let a = ExponentVector::new(a);
            let int = nu(&a, &i).unwrap();
            let frac = nu_star(&a, &i).unwrap();
            prop_assert!(Rational::from_integer(int.value.into()) <= frac.value);
            prop_assert!(check_witness(&a, &i, &frac));
            let ta = a.scale(t);
            prop_assert!(nu(&ta, &i).unwrap().value >= t as u64 * int.value);
            prop_assert_eq!(nu_star(&ta, &i).unwrap().value, frac.value * Rational::from_integer(t.into()));
            prop_assert_eq!(in_power(&a, &i, t).unwrap(), i.power(t).contains_exps(&a));
        }

        #[test]
        fn closure_is_a_closure_operation(i in small_ideal(), j in small_ideal()) {
            let ci = integral_closure(&i).unwrap();
            prop_assert!(i.is_contained_in(&ci).unwrap());
            prop_assert_eq!(integral_closure(&ci).unwrap(), ci.clone());
            let ij = i.intersect(&j).unwrap();
            let cij = integral_closure(&ij).unwrap();
            prop_assert!(cij.is_contained_in(&ci).unwrap());
            prop_assert!(ci.power(2).is_contained_in(&integral_closure(&i.power(2)).unwrap()).unwrap());
        }
    }
}
