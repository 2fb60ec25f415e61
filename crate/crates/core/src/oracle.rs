//! Slow reference implementations used to cross-check the fast routines.

use num_traits::{One, Zero};

use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::{Exponent, Rational};

/// `x^a in I^t` by removing one generator at a time, without memoization.
pub fn in_power_brute(a: &[Exponent], ideal: &MonomialIdeal, t: u32) -> bool {
    if t == 0 {
        return true;
    }
    ideal.gens().iter().any(|g| {
        g.iter().zip(a).all(|(gi, ai)| gi <= ai) && {
            let rest: Vec<Exponent> = a.iter().zip(g.iter()).map(|(ai, gi)| ai - gi).collect();
            in_power_brute(&rest, ideal, t - 1)
        }
    })
}

/// Largest `t` with `x^a in I^t`, by [`in_power_brute`].
pub fn nu_brute(a: &[Exponent], ideal: &MonomialIdeal) -> u64 {
    let mut t = 0;
    while in_power_brute(a, ideal, t + 1) {
        t += 1;
    }
    t as u64
}

/// `nu*_a(I)` as the best vertex of the packing polytope, found by solving
/// every square subsystem of tight constraints.
pub fn nu_star_vertices(a: &[Exponent], ideal: &MonomialIdeal) -> Rational {
    let gens = ideal.gens();
    let n = a.len();
    let rhs: Vec<Rational> = a.iter().map(|&v| Rational::from_integer(v.into())).collect();
    let entry = |row: usize, g: usize| Rational::from_integer(gens[g][row].into());
    let mut best = Rational::zero();
    for k in 1..=n.min(gens.len()) {
        for cols in subsets(gens.len(), k) {
            for rows in subsets(n, k) {
                let matrix: Vec<Vec<Rational>> =
                    rows.iter().map(|&r| cols.iter().map(|&c| entry(r, c)).collect()).collect();
                let b: Vec<Rational> = rows.iter().map(|&r| rhs[r].clone()).collect();
                let Some(v) = solve(matrix, b) else { continue };
                if v.iter().any(|x| *x < Rational::zero()) {
                    continue;
                }
                let feasible = (0..n).all(|r| {
                    let used = cols.iter().zip(&v).fold(Rational::zero(), |acc, (&c, x)| acc + entry(r, c) * x);
                    used <= rhs[r]
                });
                if feasible {
                    let total = v.iter().fold(Rational::zero(), |acc, x| acc + x);
                    if total > best {
                        best = total;
                    }
                }
            }
        }
    }
    best
}

/// `x^a` in the integral closure of `I^t`, via [`nu_star_vertices`].
pub fn in_closure_brute(a: &[Exponent], ideal: &MonomialIdeal, t: u32) -> bool {
    nu_star_vertices(a, ideal) >= Rational::from_integer(t.into())
}

/// Every point of the box `[0, bound_1] x .. x [0, bound_n]`.
pub fn box_points(bounds: &[Exponent]) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut a = vec![0; bounds.len()];
    loop {
        out.push(ExponentVector::new(a.clone()));
        let mut k = 0;
        while k < a.len() && a[k] == bounds[k] {
            a[k] = 0;
            k += 1;
        }
        if k == a.len() {
            return out;
        }
        a[k] += 1;
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Unique solution of a square system, or `None` when singular.
fn solve(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let k = b.len();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Rational::one() / m[col][col].clone();
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone() * inv.clone();
                for c in col..k {
                    let delta = factor.clone() * m[col][c].clone();
                    m[r][c] -= delta;
                }
                let delta = factor * b[col].clone();
                b[r] -= delta;
            }
        }
    }
    Some((0..k).map(|i| b[i].clone() / m[i][i].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::membership::{in_power, nu_star};
    use crate::monomial::Ring;

    #[test]
    fn small_cases() {
        let r = Ring::standard(2).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[&[2, 0], &[0, 2]]).unwrap();
        assert!(in_power_brute(&[2, 2], &i, 2));
        assert!(!in_power_brute(&[1, 3], &i, 2));
        assert_eq!(nu_brute(&[4, 2], &i), 3);
        assert_eq!(nu_star_vertices(&[1, 1], &i), Rational::one());
        assert!(in_closure_brute(&[1, 1], &i, 1));
        for a in box_points(&[4, 4]) {
            assert_eq!(in_power(&a, &i, 2).unwrap(), in_power_brute(&a, &i, 2));
            assert_eq!(nu_star(&a, &i).unwrap().value, nu_star_vertices(&a, &i));
        }
    }
}
