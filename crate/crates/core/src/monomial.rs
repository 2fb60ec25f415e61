//! Monomial ideals stored by their minimal generators, and their
//! decompositions into primary components with variable-generated radicals.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Deref, Index};
use std::sync::Arc;

use crate::dominance::{dominated_flags, minimalize};
use crate::error::{Error, Result};
use crate::Exponent;

/// A set of variable indices, stored as a bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VarSet(pub u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> VarSet {
        if n >= 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> VarSet {
        VarSet(1 << i)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> VarSet {
        VarSet(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    /// Complement inside `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> VarSet {
        VarSet(!self.0 & VarSet::full(n).0)
    }

    pub fn shifted(self, offset: usize) -> VarSet {
        VarSet(self.0 << offset)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |&i| bits >> i & 1 == 1)
    }
}

/// Polynomial ring `k[x_1, .., x_n]`, identified by its variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    /// Degree complexes are indexed by variable subsets stored in a `u64`.
    pub const MAX_VARS: usize = 64;

    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Ring> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        if names.len() > Self::MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "at most {} variables are supported, got {}",
                Self::MAX_VARS,
                names.len()
            )));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("bad variable name {name:?}")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable {name:?}")));
            }
        }
        Ok(Ring { names: names.into() })
    }

    /// `k[x1, .., xn]`.
    pub fn standard(n: usize) -> Result<Ring> {
        Ring::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn all(&self) -> VarSet {
        VarSet::full(self.n())
    }

    /// Tensor product with a ring on fresh variables. Clashing names on the
    /// right get a numeric suffix. Returns the ring and the offset of the
    /// right-hand block.
    pub fn disjoint_union(&self, other: &Ring) -> Result<(Ring, usize)> {
        let mut names: Vec<String> = self.names.to_vec();
        let mut taken: HashSet<String> = names.iter().cloned().collect();
        for name in other.names.iter() {
            let mut candidate = name.clone();
            let mut k = 2;
            while taken.contains(&candidate) {
                candidate = format!("{name}_{k}");
                k += 1;
            }
            taken.insert(candidate.clone());
            names.push(candidate);
        }
        Ok((Ring::new(names)?, self.n()))
    }

    /// The ring with variable `j` removed.
    pub fn without(&self, j: usize) -> Result<Ring> {
        Ring::new(
            self.names
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, n)| n.clone()),
        )
    }

    pub fn format_set(&self, set: VarSet) -> String {
        let parts: Vec<&str> = set.iter().map(|i| self.names[i].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[{}]", self.names.join(","))
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector of a monomial `x^a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<Exponent>);

impl ExponentVector {
    pub fn new(entries: Vec<Exponent>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn entries(&self) -> &[Exponent] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Exponent> {
        self.0
    }

    /// `self <= other` componentwise, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn scale(&self, k: Exponent) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&a| a * k).collect())
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&a| a <= 1)
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_indices(self.0.iter().enumerate().filter(|(_, &a)| a > 0).map(|(i, _)| i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Deref for ExponentVector {
    type Target = [Exponent];

    fn deref(&self) -> &[Exponent] {
        &self.0
    }
}

impl Index<usize> for ExponentVector {
    type Output = Exponent;

    fn index(&self, i: usize) -> &Exponent {
        &self.0[i]
    }
}

impl From<Vec<Exponent>> for ExponentVector {
    fn from(v: Vec<Exponent>) -> Self {
        ExponentVector(v)
    }
}

/// Renders `x^a` as `x^2*y`, or `1` for the zero vector.
pub fn format_monomial(ring: &Ring, a: &[Exponent]) -> String {
    let parts: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| match e {
            1 => ring.names()[i].clone(),
            e => format!("{}^{}", ring.names()[i], e),
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// A monomial ideal given by its minimal generators, sorted
/// lexicographically. No generator divides another.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Minimalizes `raw_gens` to the divisibility antichain.
    pub fn new(ring: &Ring, raw_gens: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let raw: Vec<ExponentVector> = raw_gens.into_iter().collect();
        if let Some(bad) = raw.iter().find(|g| g.len() != ring.n()) {
            return Err(Error::LengthMismatch { expected: ring.n(), got: bad.len() });
        }
        Ok(Self::from_raw(ring.clone(), raw))
    }

    /// Convenience constructor from plain exponent rows.
    pub fn from_exponents(ring: &Ring, rows: &[&[Exponent]]) -> Result<Self> {
        Self::new(ring, rows.iter().map(|r| ExponentVector::new(r.to_vec())))
    }

    pub(crate) fn from_raw(ring: Ring, raw: Vec<ExponentVector>) -> Self {
        MonomialIdeal { ring, gens: minimalize(raw) }
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Ring) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: vec![ExponentVector::zeros(ring.n())] }
    }

    /// The prime ideal generated by the variables in `vars`.
    pub fn prime(ring: &Ring, vars: VarSet) -> Self {
        Self::from_raw(
            ring.clone(),
            vars.iter().map(|i| ExponentVector::unit(ring.n(), i)).collect(),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(ExponentVector::is_squarefree)
    }

    /// Fails with `ZeroIdeal`/`UnitIdeal` unless the ideal is nonzero and proper.
    pub fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Variables appearing in some minimal generator.
    pub fn support(&self) -> VarSet {
        self.gens.iter().fold(VarSet::EMPTY, |acc, g| acc.union(g.support()))
    }

    /// Largest exponent of each variable over the minimal generators.
    pub fn max_exponents(&self) -> Vec<Exponent> {
        let mut m = vec![0; self.ring.n()];
        for g in &self.gens {
            for (mi, &gi) in m.iter_mut().zip(g.iter()) {
                *mi = (*mi).max(gi);
            }
        }
        m
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Membership of `x^a`.
    pub fn contains(&self, a: &ExponentVector) -> Result<bool> {
        if a.len() != self.ring.n() {
            return Err(Error::LengthMismatch { expected: self.ring.n(), got: a.len() });
        }
        Ok(self.contains_exps(a))
    }

    /// Membership without the length check.
    pub fn contains_exps(&self, a: &[Exponent]) -> bool {
        self.gens.iter().any(|g| g.iter().zip(a).all(|(x, y)| x <= y))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let raw = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_raw(self.ring.clone(), raw))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.add(b));
            }
        }
        Ok(Self::from_raw(self.ring.clone(), raw))
    }

    /// Generators are the minimal pairwise lcms. Generators of one side that
    /// already lie in the other side pass through unpaired.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let left_in = dominated_flags(&other.gens, &self.gens);
        let right_in = dominated_flags(&self.gens, &other.gens);
        let mut raw = Vec::new();
        let mut left_rest = Vec::new();
        for (g, inside) in self.gens.iter().zip(left_in) {
            if inside {
                raw.push(g.clone());
            } else {
                left_rest.push(g);
            }
        }
        let mut right_rest = Vec::new();
        for (g, inside) in other.gens.iter().zip(right_in) {
            if inside {
                raw.push(g.clone());
            } else {
                right_rest.push(g);
            }
        }
        for a in &left_rest {
            for b in &right_rest {
                raw.push(a.lcm(b));
            }
        }
        Ok(Self::from_raw(self.ring.clone(), raw))
    }

    /// `I^t` by iterated multiplication, minimalizing after every step.
    /// `I^0` is the unit ideal.
    pub fn power(&self, t: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(&self.ring);
        for _ in 0..t {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// All powers `I^1, .., I^t_max`.
    pub fn powers(&self, t_max: u32) -> Vec<MonomialIdeal> {
        let mut out: Vec<MonomialIdeal> = Vec::with_capacity(t_max as usize);
        for t in 0..t_max {
            let next = match out.last() {
                None => self.clone(),
                Some(prev) => prev.product(self).expect("same ring"),
            };
            debug_assert_eq!(out.len(), t as usize);
            out.push(next);
        }
        out
    }

    /// `I : x_i`.
    pub fn colon_by_variable(&self, i: usize) -> Result<MonomialIdeal> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if i >= self.ring.n() {
            return Err(Error::ParameterOutOfRange(format!("no variable with index {i}")));
        }
        let raw = self
            .gens
            .iter()
            .map(|g| {
                let mut v = g.clone().into_inner();
                v[i] = v[i].saturating_sub(1);
                ExponentVector::new(v)
            })
            .collect();
        Ok(Self::from_raw(self.ring.clone(), raw))
    }

    /// `I : m` for the maximal homogeneous ideal `m`.
    pub fn colon_maximal(&self) -> Result<MonomialIdeal> {
        let mut acc = self.colon_by_variable(0)?;
        for i in 1..self.ring.n() {
            acc = acc.intersect(&self.colon_by_variable(i)?)?;
        }
        Ok(acc)
    }

    /// `I : m^infinity`, iterating `J -> J : m` to a fixpoint.
    pub fn saturate_maximal(&self) -> Result<MonomialIdeal> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let mut current = self.clone();
        loop {
            if current.is_unit() {
                return Ok(current);
            }
            let next = current.colon_maximal()?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `I ⊆ J`.
    pub fn is_contained_in(&self, other: &MonomialIdeal) -> Result<bool> {
        Ok(self.first_outside(other)?.is_none())
    }

    /// The first minimal generator of `self` (in lexicographic order) that is
    /// not a member of `other`.
    pub fn first_outside(&self, other: &MonomialIdeal) -> Result<Option<ExponentVector>> {
        self.check_ring(other)?;
        let flags = dominated_flags(&other.gens, &self.gens);
        Ok(self.gens.iter().zip(flags).find(|(_, inside)| !inside).map(|(g, _)| g.clone()))
    }

    /// The contraction `I R[x_j^{-1}] ∩ R_j`: set `x_j = 1` and drop the
    /// variable.
    pub fn invert_variable(&self, j: usize) -> Result<MonomialIdeal> {
        let ring = self.ring.without(j)?;
        let raw = self
            .gens
            .iter()
            .map(|g| {
                ExponentVector::new(
                    g.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &e)| e).collect(),
                )
            })
            .collect();
        Ok(Self::from_raw(ring, raw))
    }

    /// Sets every variable in `vars` to 1, keeping the ring.
    pub fn localize(&self, vars: VarSet) -> MonomialIdeal {
        let raw = self
            .gens
            .iter()
            .map(|g| {
                ExponentVector::new(
                    g.iter()
                        .enumerate()
                        .map(|(i, &e)| if vars.contains(i) { 0 } else { e })
                        .collect(),
                )
            })
            .collect();
        Self::from_raw(self.ring.clone(), raw)
    }

    /// The same generators in a larger ring, placed at `offset`.
    pub fn embed(&self, ring: &Ring, offset: usize) -> Result<MonomialIdeal> {
        if offset + self.ring.n() > ring.n() {
            return Err(Error::RingMismatch);
        }
        let raw = self
            .gens
            .iter()
            .map(|g| {
                let mut v = vec![0; ring.n()];
                v[offset..offset + g.len()].copy_from_slice(g);
                ExponentVector::new(v)
            })
            .collect();
        Ok(Self::from_raw(ring.clone(), raw))
    }

    /// Decomposition of a squarefree ideal into its minimal primes, one per
    /// minimal vertex cover of the generator supports.
    pub fn minimal_primes_squarefree(&self) -> Result<Decomposition> {
        self.require_proper_nonzero()?;
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = self.ring.n();
        if n > 24 {
            return Err(Error::TooLarge(format!("{n} variables for cover enumeration")));
        }
        let supports: Vec<u64> = self.gens.iter().map(|g| g.support().0).collect();
        let mut covers: Vec<u64> = (0u64..1 << n)
            .filter(|&s| supports.iter().all(|&g| g & s != 0))
            .collect();
        covers.sort_by_key(|s| s.count_ones());
        let mut minimal: Vec<u64> = Vec::new();
        for s in covers {
            if !minimal.iter().any(|&m| m & !s == 0) {
                minimal.push(s);
            }
        }
        minimal.sort_unstable();
        let components = minimal
            .into_iter()
            .map(|s| PrimaryComponent::prime(&self.ring, VarSet(s)))
            .collect::<Result<Vec<_>>>()?;
        Decomposition::new(&self.ring, components)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| format_monomial(&self.ring, g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {:?}", self.ring)
    }
}

/// A monomial ideal primary to the prime generated by `support`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrimaryComponent {
    support: VarSet,
    ideal: MonomialIdeal,
}

impl PrimaryComponent {
    /// Checks that generators live on `support`, that every variable of the
    /// support has a pure power in the ideal, and that the ideal is proper.
    pub fn new(support: VarSet, ideal: MonomialIdeal) -> Result<Self> {
        let n = ideal.ring().n();
        if support.is_empty() || !support.is_subset(VarSet::full(n)) {
            return Err(Error::InvalidComponent(format!(
                "support {} is empty or outside the ring",
                ideal.ring().format_set(support)
            )));
        }
        if ideal.is_zero() || ideal.is_unit() {
            return Err(Error::InvalidComponent("component must be nonzero and proper".into()));
        }
        if !ideal.support().is_subset(support) {
            return Err(Error::InvalidComponent(format!(
                "{ideal} has generators outside {}",
                ideal.ring().format_set(support)
            )));
        }
        for i in support.iter() {
            let pure = ideal.gens().iter().any(|g| g.support() == VarSet::singleton(i));
            if !pure {
                return Err(Error::InvalidComponent(format!(
                    "{ideal} contains no pure power of {}",
                    ideal.ring().names()[i]
                )));
            }
        }
        Ok(PrimaryComponent { support, ideal })
    }

    /// The prime `(x_i : i in support)`.
    pub fn prime(ring: &Ring, support: VarSet) -> Result<Self> {
        Self::new(support, MonomialIdeal::prime(ring, support))
    }

    pub fn support(&self) -> VarSet {
        self.support
    }

    /// The set `F` with `P_F = (x_i : i not in F)` the radical.
    pub fn face(&self) -> VarSet {
        self.support.complement(self.ideal.ring().n())
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// `Q^t`, still primary to the same prime.
    pub fn power(&self, t: u32) -> PrimaryComponent {
        PrimaryComponent { support: self.support, ideal: self.ideal.power(t) }
    }

    pub fn is_prime(&self) -> bool {
        self.ideal.gens().iter().all(|g| g.degree() == 1)
    }
}

/// An intersection of primary components with pairwise incomparable
/// supports; it represents an unmixed ideal whose minimal primes are the
/// component radicals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Decomposition {
    ring: Ring,
    components: Vec<PrimaryComponent>,
}

impl Decomposition {
    pub fn new(ring: &Ring, components: Vec<PrimaryComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidComponent("a decomposition needs a component".into()));
        }
        for c in &components {
            if c.ideal.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
        for (i, a) in components.iter().enumerate() {
            for b in &components[i + 1..] {
                if a.support.is_subset(b.support) || b.support.is_subset(a.support) {
                    return Err(Error::InvalidComponent(format!(
                        "supports {} and {} are comparable",
                        ring.format_set(a.support),
                        ring.format_set(b.support)
                    )));
                }
            }
        }
        Ok(Decomposition { ring: ring.clone(), components })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn components(&self) -> &[PrimaryComponent] {
        &self.components
    }

    /// The decomposition `⋂ Q^t` of the `t`-th symbolic power.
    pub fn power(&self, t: u32) -> Decomposition {
        Decomposition {
            ring: self.ring.clone(),
            components: self.components.iter().map(|c| c.power(t)).collect(),
        }
    }

    /// The represented ideal.
    pub fn intersection(&self) -> MonomialIdeal {
        let mut parts: Vec<&MonomialIdeal> = self.components.iter().map(|c| &c.ideal).collect();
        parts.sort_by_key(|p| p.gens().len());
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = acc.intersect(p).expect("same ring");
        }
        acc
    }

    /// `I^(t)`, the intersection of the component powers.
    pub fn symbolic_power(&self, t: u32) -> MonomialIdeal {
        self.power(t).intersection()
    }

    /// Decomposition of `IJ` for `J` on a disjoint block of fresh variables;
    /// the union of both component lists.
    pub fn product_disjoint(&self, other: &Decomposition) -> Result<Decomposition> {
        let (ring, offset) = self.ring.disjoint_union(&other.ring)?;
        let mut components = Vec::new();
        for c in &self.components {
            components.push(PrimaryComponent::new(c.support, c.ideal.embed(&ring, 0)?)?);
        }
        for c in &other.components {
            components.push(PrimaryComponent::new(
                c.support.shifted(offset),
                c.ideal.embed(&ring, offset)?,
            )?);
        }
        Decomposition::new(&ring, components)
    }
}
