//! Parameterized ideal families with prescribed symbolic depth functions.
//!
//! Most families are built from a triple `(M, P, Q)` of monomial ideals in
//! `k[x,y,z]` with radicals `(x,y,z)`, `(x,y)` and `(z)`. The ideal
//! `I = M ∩ (P,u) ∩ (Q,v)` in `k[x,y,z,u,v]` then has
//! `depth R/I^(t) = 2` if `M^t ⊆ P^t + Q^t` and `1` otherwise.

use rayon::prelude::*;

use crate::dominance::dominated_flags;
use crate::error::{Error, Result};
use crate::monomial::{Decomposition, ExponentVector, MonomialIdeal, PrimaryComponent, Ring, VarSet};

/// `t ∈ E(s)`: some `i >= 1` has `i(s-1) + 1 <= t <= is`.
pub fn in_e(s: u32, t: u32) -> bool {
    if s <= 1 {
        return true;
    }
    // Only i with is >= t can work, and i(s-1)+1 <= t bounds i from above.
    let (s, t) = (s as u64, t as u64);
    let i = t.div_ceil(s);
    i * (s - 1) < t
}

/// One of `M`, `P`, `Q`, stored as a power `base^exponent` so that the
/// heavily scaled triples stay small.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledIdeal {
    pub base: MonomialIdeal,
    pub exponent: u32,
}

impl ScaledIdeal {
    fn new(base: MonomialIdeal, exponent: u32) -> Self {
        ScaledIdeal { base, exponent }
    }

    /// `base^(exponent * t)`.
    pub fn power(&self, t: u32) -> MonomialIdeal {
        self.base.power(self.exponent * t)
    }

    pub fn ideal(&self) -> MonomialIdeal {
        self.power(1)
    }

    fn scaled(&self, k: u32) -> Self {
        ScaledIdeal { base: self.base.clone(), exponent: self.exponent * k }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpqTriple {
    pub m: ScaledIdeal,
    pub p: ScaledIdeal,
    pub q: ScaledIdeal,
}

fn xyz() -> Ring {
    Ring::new(["x", "y", "z"]).expect("valid names")
}

fn gens(rows: &[[u32; 3]]) -> MonomialIdeal {
    let r = xyz();
    MonomialIdeal::new(&r, rows.iter().map(|v| ExponentVector::new(v.to_vec()))).expect("three coordinates")
}

impl MpqTriple {
    /// Checks the radical conditions: `M` has pure powers of `x, y, z`, `P`
    /// lives on `x, y` with pure powers of both, `Q` is a power of `z`.
    pub fn new(m: ScaledIdeal, p: ScaledIdeal, q: ScaledIdeal) -> Result<Self> {
        let pure = |i: &MonomialIdeal, v: usize| {
            i.gens().iter().any(|g| g.support() == VarSet::singleton(v))
        };
        let xy = VarSet::from_indices([0, 1]);
        let z = VarSet::singleton(2);
        let ok = m.base.ring() == &xyz()
            && p.base.ring() == &xyz()
            && q.base.ring() == &xyz()
            && m.exponent > 0
            && p.exponent > 0
            && q.exponent > 0
            && (0..3).all(|v| pure(&m.base, v))
            && !m.base.is_unit()
            && p.base.support().is_subset(xy)
            && pure(&p.base, 0)
            && pure(&p.base, 1)
            && q.base.support() == z
            && !q.base.is_unit();
        if ok {
            Ok(MpqTriple { m, p, q })
        } else {
            Err(Error::InvalidComponent("triple violates the radical conditions".into()))
        }
    }

    /// Raises all three ideals to the `k`-th power.
    pub fn scaled(&self, k: u32) -> Self {
        MpqTriple { m: self.m.scaled(k), p: self.p.scaled(k), q: self.q.scaled(k) }
    }
}

/// `M ∩ (P,u) ∩ (Q,v)` in `k[x,y,z,u,v]`.
pub fn assemble(triple: &MpqTriple) -> Result<Decomposition> {
    let ring = Ring::new(["x", "y", "z", "u", "v"])?;
    let embed = |i: &MonomialIdeal| i.embed(&ring, 0);
    let var = |k: usize| MonomialIdeal::prime(&ring, VarSet::singleton(k));
    let m = PrimaryComponent::new(VarSet::from_indices([0, 1, 2]), embed(&triple.m.ideal())?)?;
    let pu = PrimaryComponent::new(
        VarSet::from_indices([0, 1, 3]),
        embed(&triple.p.ideal())?.sum(&var(3))?,
    )?;
    let qv = PrimaryComponent::new(
        VarSet::from_indices([2, 4]),
        embed(&triple.q.ideal())?.sum(&var(4))?,
    )?;
    Decomposition::new(&ring, vec![m, pu, qv])
}

/// Outcome of the containment test `M^t ⊆ P^t + Q^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpqDepth {
    pub t: u32,
    pub depth: usize,
    /// When the containment fails, the lexicographically largest product of
    /// generators of `M` lying outside `P^t + Q^t`.
    pub witness: Option<ExponentVector>,
}

const CHUNK: usize = 1 << 16;

/// `depth R/I^(t)` for the assembled ideal, decided by the containment.
pub fn mpq_depth(triple: &MpqTriple, t: u32) -> Result<MpqDepth> {
    if t == 0 {
        return Err(Error::ParameterOutOfRange("t must be at least 1".into()));
    }
    let target = triple.p.power(t).sum(&triple.q.power(t))?;
    let base: Vec<&ExponentVector> = triple.m.base.gens().iter().collect();
    let k = triple.m.exponent * t;

    // Enumerate all products of k generators of the base of M, i.e. the
    // multisets of size k, and test them in batches.
    let mut witness: Option<ExponentVector> = None;
    let mut batch: Vec<ExponentVector> = Vec::with_capacity(CHUNK);
    let mut flush = |batch: &mut Vec<ExponentVector>| {
        let flags = dominated_flags(target.gens(), batch);
        for (p, inside) in batch.drain(..).zip(flags) {
            if !inside && witness.as_ref().is_none_or(|w| p > *w) {
                witness = Some(p);
            }
        }
    };
    let mut counts = vec![0u32; base.len()];
    counts[0] = k;
    loop {
        let mut v = vec![0u32; 3];
        for (g, &c) in base.iter().zip(&counts) {
            for (vi, gi) in v.iter_mut().zip(g.iter()) {
                *vi += c * gi;
            }
        }
        batch.push(ExponentVector::new(v));
        if batch.len() == CHUNK {
            flush(&mut batch);
        }
        if !next_composition(&mut counts) {
            break;
        }
    }
    flush(&mut batch);
    Ok(MpqDepth { t, depth: if witness.is_some() { 1 } else { 2 }, witness })
}

/// Steps through the compositions of a fixed total into `counts.len()` parts,
/// starting from `(k, 0, .., 0)`.
fn next_composition(counts: &mut [u32]) -> bool {
    let len = counts.len();
    if len < 2 {
        return false;
    }
    // Find the rightmost nonzero part before the last one.
    let Some(i) = (0..len - 1).rev().find(|&i| counts[i] > 0) else {
        return false;
    };
    let tail = counts[len - 1];
    counts[len - 1] = 0;
    counts[i] -= 1;
    counts[i + 1] = tail + 1;
    true
}

/// [`mpq_depth`] for `t = 1..=t_max`, in parallel.
pub fn mpq_depth_sequence(triple: &MpqTriple, t_max: u32) -> Result<Vec<MpqDepth>> {
    (1..=t_max).into_par_iter().map(|t| mpq_depth(triple, t)).collect()
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(what.into()))
    }
}

/// `M = (x^{2m-2}, y^m, z^{2m})^2`, `P = (x^{2m-1}, y^{2m-1})`, `Q = (z)`:
/// depth 1 for `t < m`, 2 from `t = m` on.
pub fn type_a(m: u32) -> Result<MpqTriple> {
    require(m >= 2, "type A needs m >= 2")?;
    MpqTriple::new(
        ScaledIdeal::new(gens(&[[2 * m - 2, 0, 0], [0, m, 0], [0, 0, 2 * m]]), 2),
        ScaledIdeal::new(gens(&[[2 * m - 1, 0, 0], [0, 2 * m - 1, 0]]), 1),
        ScaledIdeal::new(gens(&[[0, 0, 1]]), 1),
    )
}

/// `M = (x^{2m}, y^{2m}, x y^{m-1} z, z^{2m})^2`, `P = (x^m, y^m)`,
/// `Q = (z^{2m+2})`: depth 2 exactly at `t = m`.
pub fn type_b(m: u32) -> Result<MpqTriple> {
    require(m >= 1, "type B needs m >= 1")?;
    MpqTriple::new(
        ScaledIdeal::new(
            gens(&[[2 * m, 0, 0], [0, 2 * m, 0], [1, m - 1, 1], [0, 0, 2 * m]]),
            2,
        ),
        ScaledIdeal::new(gens(&[[m, 0, 0], [0, m, 0]]), 1),
        ScaledIdeal::new(gens(&[[0, 0, 2 * m + 2]]), 1),
    )
}

/// `M = (x^{2m-2}, y^m, z^m)^2`, `P = (x^{2m-1}, y^{2m-1})`, `Q = (z)`:
/// depth 2 exactly when `m | t`.
pub fn type_c0(m: u32) -> Result<MpqTriple> {
    require(m >= 2, "the d = 0 periodic family needs m >= 2")?;
    MpqTriple::new(
        ScaledIdeal::new(gens(&[[2 * m - 2, 0, 0], [0, m, 0], [0, 0, m]]), 2),
        ScaledIdeal::new(gens(&[[2 * m - 1, 0, 0], [0, 2 * m - 1, 0]]), 1),
        ScaledIdeal::new(gens(&[[0, 0, 1]]), 1),
    )
}

/// Whether `(m, d)` satisfies `m >= 4`, `d >= 2` and `sqrt(m/2) <= d <= m/2`.
pub fn periodic_precondition(m: u32, d: u32) -> bool {
    m >= 4 && d >= 2 && m <= 2 * d * d && 2 * d <= m
}

/// `M = (x^{2m+1-d}, y^{m+2d-1}, z^{m+2d-1}, x y^{m-1} z)^2`,
/// `P = (x^{2m}, y^{2m})`, `Q = (z^2)`: the containment holds exactly when
/// `t ≡ d (mod m)`.
pub fn periodic_triple(m: u32, d: u32) -> Result<MpqTriple> {
    require(periodic_precondition(m, d), "needs m >= 4, d >= 2 and sqrt(m/2) <= d <= m/2")?;
    let e = m + 2 * d - 1;
    MpqTriple::new(
        ScaledIdeal::new(
            gens(&[[2 * m + 1 - d, 0, 0], [0, e, 0], [0, 0, e], [1, m - 1, 1]]),
            2,
        ),
        ScaledIdeal::new(gens(&[[2 * m, 0, 0], [0, 2 * m, 0]]), 1),
        ScaledIdeal::new(gens(&[[0, 0, 2]]), 1),
    )
}

/// A triple with depth 2 exactly when `t ≡ d (mod m)`.
///
/// For `d = 0` this is [`type_c0`]. For `1 <= d <= m/2` the pair is scaled to
/// `(cm, cd)` with `c = max(ceil(m / 2d^2), 2)`, which satisfies the
/// precondition of [`periodic_triple`], and the result is raised to the
/// `c`-th power. For `d > m/2` the triple for `(m, m - d)` is raised to the
/// `(m-1)`-th power, since `(m-1) t ≡ m - d` iff `t ≡ d (mod m)`.
pub fn type_c(m: u32, d: u32) -> Result<MpqTriple> {
    require(m >= 2 && d < m, "type C needs m >= 2 and 0 <= d < m")?;
    if d == 0 {
        return type_c0(m);
    }
    if 2 * d <= m {
        let c = m.div_ceil(2 * d * d).max(2);
        let (m1, d1) = (c * m, c * d);
        if !periodic_precondition(m1, d1) {
            return Err(Error::ConstructionBug(format!(
                "scaled pair ({m1}, {d1}) violates the periodic precondition"
            )));
        }
        return Ok(periodic_triple(m1, d1)?.scaled(c));
    }
    Ok(type_c(m, m - d)?.scaled(m - 1))
}

/// `M = (x^7, y^7, x^2 y^2 z, z^5)^2`, `P = (x^7, y^7)`, `Q = (z^2)`, with
/// depths `2, 1, 2, 2, ..`.
pub fn example6() -> MpqTriple {
    MpqTriple::new(
        ScaledIdeal::new(gens(&[[7, 0, 0], [0, 7, 0], [2, 2, 1], [0, 0, 5]]), 2),
        ScaledIdeal::new(gens(&[[7, 0, 0], [0, 7, 0]]), 1),
        ScaledIdeal::new(gens(&[[0, 0, 2]]), 1),
    )
    .expect("fixed triple")
}

/// The ideal `P_1 ∩ .. ∩ P_s ∩ Q` in `k[x_{i,j} : 1 <= i <= s, 1 <= j < s]`
/// with `P_i = (x_{i,1}, .., x_{i,s-1})` and `Q = (f_1, .., f_s)`,
/// `f_i = x_{i,1} .. x_{i,s-1}`. Its depth function drops to `s - 1` on
/// `E(s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalIdeal {
    pub s: u32,
    pub ring: Ring,
    pub p: Vec<MonomialIdeal>,
    pub q: MonomialIdeal,
}

impl TransversalIdeal {
    pub fn new(s: u32) -> Result<Self> {
        require(s >= 3, "needs s >= 3")?;
        require(s * (s - 1) <= Ring::MAX_VARS as u32, "too many variables")?;
        let s_us = s as usize;
        let width = s_us - 1;
        let sep = if s < 10 { "" } else { "_" };
        let names = (1..=s_us).flat_map(|i| (1..=width).map(move |j| format!("x{i}{sep}{j}")));
        let ring = Ring::new(names)?;
        let row = |i: usize| VarSet::from_indices((0..width).map(|j| i * width + j));
        let p = (0..s_us).map(|i| MonomialIdeal::prime(&ring, row(i))).collect();
        let f = (0..s_us).map(|i| {
            let mut v = vec![0; ring.n()];
            for k in row(i).iter() {
                v[k] = 1;
            }
            ExponentVector::new(v)
        });
        let q = MonomialIdeal::new(&ring, f)?;
        Ok(TransversalIdeal { s, ring, p, q })
    }

    /// The primes `P_i` followed by the `(s-1)^s` transversal primes
    /// `(x_{1,j_1}, .., x_{s,j_s})` whose intersection is `Q`.
    pub fn decomposition(&self) -> Result<Decomposition> {
        let s = self.s as usize;
        let width = s - 1;
        let mut comps: Vec<PrimaryComponent> = self
            .p
            .iter()
            .map(|p| PrimaryComponent::prime(&self.ring, p.support()))
            .collect::<Result<_>>()?;
        let mut choice = vec![0usize; s];
        loop {
            let support = VarSet::from_indices((0..s).map(|i| i * width + choice[i]));
            comps.push(PrimaryComponent::prime(&self.ring, support)?);
            let mut k = 0;
            while k < s && choice[k] + 1 == width {
                choice[k] = 0;
                k += 1;
            }
            if k == s {
                break;
            }
            choice[k] += 1;
        }
        Decomposition::new(&self.ring, comps)
    }

    /// The represented ideal.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        let mut acc = self.q.clone();
        for p in &self.p {
            acc = acc.intersect(p)?;
        }
        Ok(acc)
    }

    /// `Q^t ⊆ P_1^t + .. + P_s^t`, with a generator of `Q^t` outside the sum
    /// when the containment fails.
    pub fn containment(&self, t: u32) -> Result<(bool, Option<ExponentVector>)> {
        let mut sum = MonomialIdeal::zero(&self.ring);
        for p in &self.p {
            sum = sum.sum(&p.power(t))?;
        }
        let outside = self.q.power(t).first_outside(&sum)?;
        Ok((outside.is_none(), outside))
    }
}

/// `Q^t ⊆ P_1^t + .. + P_s^t` for the ideal of [`TransversalIdeal`].
pub fn transversal_containment(s: u32, t: u32) -> Result<bool> {
    require(t >= 1, "t must be at least 1")?;
    Ok(TransversalIdeal::new(s)?.containment(t)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depth::{symbolic_depths, DepthOptions};

    fn brute_in_e(s: u32, t: u32) -> bool {
        (1..=t).any(|i| i * (s - 1) < t && t <= i * s)
    }

    #[test]
    fn e_sets() {
        let e3: Vec<u32> = (1..=9).filter(|&t| in_e(3, t)).collect();
        assert_eq!(e3, vec![3, 5, 6, 7, 8, 9]);
        let e2: Vec<u32> = (1..=6).filter(|&t| in_e(2, t)).collect();
        assert_eq!(e2, vec![2, 3, 4, 5, 6]);
        for s in 1..=6 {
            for t in 1..=40 {
                if s >= 2 {
                    assert_eq!(in_e(s, t), brute_in_e(s, t), "s={s} t={t}");
                }
                if t > (s - 1) * (s - 1) {
                    assert!(in_e(s, t));
                }
            }
        }
    }

    #[test]
    fn fixed_triples() {
        let a = type_a(2).unwrap();
        assert_eq!(a.m.ideal(), gens(&[[2, 0, 0], [0, 2, 0], [0, 0, 4]]).power(2));
        assert_eq!(a.p.ideal(), gens(&[[3, 0, 0], [0, 3, 0]]));
        let b = type_b(1).unwrap();
        assert_eq!(b.m.ideal(), gens(&[[2, 0, 0], [0, 2, 0], [1, 0, 1], [0, 0, 2]]).power(2));
        assert_eq!(b.q.ideal(), gens(&[[0, 0, 4]]));
        let c = type_c0(2).unwrap();
        assert_eq!(c.m.ideal(), gens(&[[2, 0, 0], [0, 2, 0], [0, 0, 2]]).power(2));
        assert!(type_a(1).is_err());
        assert!(type_c(3, 3).is_err());
    }

    #[test]
    fn containment_witness_for_type_a() {
        let a = type_a(2).unwrap();
        let sum = a.p.ideal().sum(&a.q.ideal()).unwrap();
        assert!(!a.m.ideal().is_contained_in(&sum).unwrap());
        assert!(!sum.contains_exps(&[2, 2, 0]));
        assert!(a.m.ideal().contains_exps(&[2, 2, 0]));
        let r = mpq_depth(&a, 1).unwrap();
        assert_eq!(r.depth, 1);
    }

    #[test]
    fn type_a_sequence() {
        let seq: Vec<usize> = mpq_depth_sequence(&type_a(2).unwrap(), 4)
            .unwrap()
            .into_iter()
            .map(|r| r.depth)
            .collect();
        assert_eq!(seq, vec![1, 2, 2, 2]);
    }

    #[test]
    fn example6_witness() {
        let e = example6();
        let seq = mpq_depth_sequence(&e, 4).unwrap();
        let depths: Vec<usize> = seq.iter().map(|r| r.depth).collect();
        assert_eq!(depths, vec![2, 1, 2, 2]);
        assert_eq!(seq[1].witness, Some(ExponentVector::new(vec![13, 6, 3])));
    }

    #[test]
    fn periodic_parameters() {
        assert!(periodic_precondition(6, 2));
        assert!(periodic_precondition(8, 4));
        assert!(!periodic_precondition(3, 1));
        let t = periodic_triple(4, 2).unwrap();
        assert_eq!(mpq_depth(&t, 2).unwrap().depth, 2);
        assert_eq!(mpq_depth(&t, 3).unwrap().depth, 1);
        // (3,2) is the (3,1) triple squared.
        assert_eq!(type_c(3, 2).unwrap(), type_c(3, 1).unwrap().scaled(2));
    }

    #[test]
    fn type_c_small_patterns() {
        for (m, d) in [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (4, 1), (4, 3)] {
            let triple = type_c(m, d).unwrap();
            for r in mpq_depth_sequence(&triple, 3 * m).unwrap() {
                let expected = if r.t % m == d { 2 } else { 1 };
                assert_eq!(r.depth, expected, "m={m} d={d} t={}", r.t);
            }
        }
    }

    #[test]
    fn assembled_engine_matches_containment() {
        let triple = type_b(1).unwrap();
        let dec = assemble(&triple).unwrap();
        let engine = symbolic_depths(&dec, 3, DepthOptions::default()).unwrap();
        assert_eq!(engine, vec![2, 1, 1]);
    }

    #[test]
    fn transversal_structure() {
        let ideal = TransversalIdeal::new(3).unwrap();
        assert_eq!(ideal.ring.n(), 6);
        assert_eq!(ideal.q.gens().len(), 3);
        let dec = ideal.decomposition().unwrap();
        assert_eq!(dec.components().len(), 3 + 8);
        assert_eq!(dec.intersection(), ideal.ideal().unwrap());
        // Q is a complete intersection, so Q^(2) = Q^2.
        let q_primes = Decomposition::new(&ideal.ring, dec.components()[3..].to_vec()).unwrap();
        assert_eq!(q_primes.symbolic_power(2), ideal.q.power(2));
        assert!(transversal_containment(3, 4).unwrap());
        let (holds, witness) = ideal.containment(3).unwrap();
        assert!(!holds);
        // f_1 f_2 f_3 is the unique generator of Q^3 outside the sum.
        assert_eq!(witness, Some(ExponentVector::new(vec![1; 6])));
        assert!(!transversal_containment(3, 5).unwrap());
        assert!(TransversalIdeal::new(2).is_err());
    }
}
