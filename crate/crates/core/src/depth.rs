//! Depth of `R/I` from the local cohomology formula: the depth is the least
//! `|G_a| + j` over degrees `a` with `H̃_{j-1}(Δ_a(I)) != 0`.
//!
//! `Δ_a` only depends on `G_a` and on which generator exponents `a_+` reaches
//! coordinate by coordinate, so per coordinate the values `-1`, `0` and the
//! positive generator exponents suffice. For an unmixed ideal given by its
//! components the complex is determined by `G_a` and the set of components
//! not containing `x^{a_+}`; the engine enumerates those sets instead of
//! points and asks whether a degree realizing each one exists.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::complex::{DegreePoint, SimplicialComplex};
use crate::error::{Error, Result};
use crate::monomial::{Decomposition, ExponentVector, MonomialIdeal, PrimaryComponent, VarSet};
use crate::scalar::Coefficients;
use crate::Exponent;

/// How the unmixed engine decides which component patterns occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Explicit box when it is small, lcm search otherwise.
    #[default]
    Auto,
    /// Search over lcms of component generators.
    Lcm,
    /// Enumerate the candidate box. `extra` appends the next `extra`
    /// integers above the largest exponent of each coordinate; `dense` uses
    /// every integer from 0 instead of only generator exponents.
    Box { extra: u32, dense: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DepthOptions {
    pub coefficients: Coefficients,
    pub strategy: Strategy,
}

/// Explicit boxes up to this many points are preferred over the lcm search.
const AUTO_BOX_LIMIT: u128 = 2_000_000;
/// Hard limit for explicit enumeration.
const BOX_LIMIT: u128 = 200_000_000;

/// The depth together with a degree attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthReport {
    pub depth: usize,
    /// A degree `a` with `H̃_{j-1}(Δ_a) != 0` and `|G_a| + j = depth`.
    pub witness: DegreePoint,
    pub j: usize,
    pub complex: SimplicialComplex,
    /// How the candidate degrees were enumerated.
    pub candidates: Candidates,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Candidates {
    /// Explicit box with this many points (negative supports included).
    Box { points: u128 },
    /// Lcm search over this many components.
    Lcm { components: usize },
}

impl fmt::Display for Candidates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Candidates::Box { points } => write!(f, "box of {points} degrees"),
            Candidates::Lcm { components } => write!(f, "lcm search over {components} components"),
        }
    }
}

fn coordinate_values(max_and_exps: &[Vec<Exponent>], extra: u32, dense: bool) -> Vec<Vec<Exponent>> {
    max_and_exps
        .iter()
        .map(|exps| {
            let max = exps.iter().copied().max().unwrap_or(0);
            let mut values: Vec<Exponent> = if dense {
                (0..=max).collect()
            } else {
                std::iter::once(0).chain(exps.iter().copied()).collect()
            };
            values.extend((1..=extra).map(|k| max + k));
            values.sort_unstable();
            values.dedup();
            values
        })
        .collect()
}

fn exponents_per_coordinate<'a>(n: usize, gens: impl Iterator<Item = &'a ExponentVector>) -> Vec<Vec<Exponent>> {
    let mut out = vec![Vec::new(); n];
    for g in gens {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                out[i].push(e);
            }
        }
    }
    for v in &mut out {
        v.sort_unstable();
        v.dedup();
    }
    out
}

/// Homology lookups shared by one depth computation.
#[derive(Default)]
struct HomologyCache {
    lowest: HashMap<Vec<VarSet>, Option<i64>>,
}

impl HomologyCache {
    /// The least `j >= 0` with `H̃_{j-1} != 0`.
    fn first_j(&mut self, complex: &SimplicialComplex, coefficients: Coefficients) -> Result<Option<usize>> {
        if let Some(v) = self.lowest.get(complex.facets()) {
            return Ok(v.map(|d| (d + 1) as usize));
        }
        let v = complex.lowest_nonvanishing_degree(coefficients)?;
        self.lowest.insert(complex.facets().to_vec(), v);
        Ok(v.map(|d| (d + 1) as usize))
    }
}

// ---------------------------------------------------------------------------
// General ideals.

/// Depth of `R/I` for an arbitrary monomial ideal, by enumerating the
/// candidate box. Limited to 10 variables.
pub fn depth(ideal: &MonomialIdeal, options: DepthOptions) -> Result<DepthReport> {
    ideal.require_proper_nonzero()?;
    let n = ideal.ring().n();
    if n > 10 {
        return Err(Error::TooLarge(format!(
            "{n} variables; the general path handles at most 10, use a decomposition"
        )));
    }
    let (extra, dense) = match options.strategy {
        Strategy::Box { extra, dense } => (extra, dense),
        _ => (0, false),
    };
    let values = coordinate_values(&exponents_per_coordinate(n, ideal.gens().iter()), extra, dense);
    let points: u128 = values.iter().map(|v| v.len() as u128 + 1).product();
    if points > BOX_LIMIT {
        return Err(Error::TooLarge(format!("candidate box of {points} degrees")));
    }
    let localized: Vec<Vec<ExponentVector>> = (0..1u64 << n)
        .map(|f| ideal.localize(VarSet(f)).gens().to_vec())
        .collect();

    // Distinct complexes, keyed by G and the set of faces F ⊇ G (as bits).
    let mut seen: HashMap<(VarSet, Vec<u64>), DegreePoint> = HashMap::new();
    for_each_point(&values, true, |a| {
        let g = VarSet::from_indices((0..n).filter(|&i| a[i] < 0));
        let plus: Vec<Exponent> = a.iter().map(|&v| v.max(0) as Exponent).collect();
        let mut key = vec![0u64; (1usize << n).div_ceil(64)];
        for f in 0..1u64 << n {
            if g.is_subset(VarSet(f))
                && !localized[f as usize].iter().any(|gen| gen.iter().zip(&plus).all(|(x, y)| x <= y))
            {
                key[(f / 64) as usize] |= 1 << (f % 64);
            }
        }
        seen.entry((g, key)).or_insert_with(|| DegreePoint(a.to_vec()));
    });

    let mut entries: Vec<((VarSet, Vec<u64>), DegreePoint)> = seen.into_iter().collect();
    entries.sort_by(|x, y| (x.0 .0.len(), &x.1).cmp(&(y.0 .0.len(), &y.1)));
    let mut cache = HomologyCache::default();
    let mut best: Option<DepthReport> = None;
    for ((g, key), a) in entries {
        if best.as_ref().is_some_and(|b| g.len() >= b.depth) {
            break;
        }
        let faces = (0..1u64 << n)
            .filter(|&f| key[(f / 64) as usize] >> (f % 64) & 1 == 1)
            .map(|f| VarSet(f).difference(g));
        let complex = SimplicialComplex::from_faces(n, faces);
        if let Some(j) = cache.first_j(&complex, options.coefficients)? {
            let value = g.len() + j;
            if best.as_ref().is_none_or(|b| value < b.depth) {
                best = Some(DepthReport {
                    depth: value,
                    witness: a,
                    j,
                    complex,
                    candidates: Candidates::Box { points },
                });
            }
        }
    }
    best.ok_or_else(|| Error::ConstructionBug("no degree with nonvanishing cohomology".into()))
}

/// Calls `visit` on every point of the product of `values`, optionally with
/// `-1` prepended to every coordinate.
fn for_each_point(values: &[Vec<Exponent>], negatives: bool, mut visit: impl FnMut(&[i64])) {
    let n = values.len();
    let offset = usize::from(negatives);
    let mut idx = vec![0usize; n];
    let mut a = vec![0i64; n];
    loop {
        for i in 0..n {
            a[i] = if idx[i] < offset { -1 } else { values[i][idx[i] - offset] as i64 };
        }
        visit(&a);
        let mut k = 0;
        while k < n && idx[k] + 1 == values[k].len() + offset {
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            return;
        }
        idx[k] += 1;
    }
}

/// `depth R/I >= 1`, i.e. `I` is saturated with respect to the maximal ideal.
pub fn depth_at_least_1(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.require_proper_nonzero()?;
    Ok(ideal.saturate_maximal()? == *ideal)
}

/// `depth R/I >= 2`: depth at least one, every contraction `I_j` obtained by
/// inverting `x_j` has depth at least one, and `Δ_a` is connected for all
/// `a in N^n`.
pub fn depth_at_least_2(ideal: &MonomialIdeal) -> Result<bool> {
    if !depth_at_least_1(ideal)? {
        return Ok(false);
    }
    let n = ideal.ring().n();
    if n == 1 {
        return Ok(false);
    }
    for j in 0..n {
        let contracted = ideal.invert_variable(j)?;
        if !contracted.is_unit() && contracted.saturate_maximal()? != contracted {
            return Ok(false);
        }
    }
    if n > 24 {
        return Err(Error::TooLarge(format!("{n} variables for subset enumeration")));
    }
    let values = coordinate_values(&exponents_per_coordinate(n, ideal.gens().iter()), 0, false);
    let points: u128 = values.iter().map(|v| v.len() as u128).product();
    if points > BOX_LIMIT {
        return Err(Error::TooLarge(format!("candidate box of {points} degrees")));
    }
    let mut connected = true;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut failure: Option<Error> = None;
    for_each_point(&values, false, |a| {
        if !connected || failure.is_some() {
            return;
        }
        let point = DegreePoint(a.to_vec());
        match crate::complex::degree_complex(ideal, &point) {
            Ok(c) => {
                let key: Vec<u32> = c.facets().iter().map(|f| f.0 as u32).collect();
                if seen.insert(key) && !c.is_connected() {
                    connected = false;
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(connected),
    }
}

// ---------------------------------------------------------------------------
// Unmixed ideals given by a decomposition.

/// Decides which membership patterns over the components occur for degrees
/// in `N^n`. Pattern bit `c` is set when `x^a` lies in component `c`.
enum Patterns<'a> {
    Explicit { found: Vec<(u64, Vec<Exponent>)> },
    Lcm { components: &'a [PrimaryComponent], memo: HashMap<(u64, u64), Option<Vec<Exponent>>> },
}

impl<'a> Patterns<'a> {
    fn explicit(components: &[PrimaryComponent], n: usize, extra: u32, dense: bool) -> Result<Self> {
        let exps = exponents_per_coordinate(n, components.iter().flat_map(|c| c.ideal().gens()));
        let values = coordinate_values(&exps, extra, dense);
        let used = components.iter().fold(VarSet::EMPTY, |acc, c| acc.union(c.support()));
        let active: Vec<usize> = used.iter().collect();

        // Membership table of each component over the grid of its support.
        let tables: Vec<Table> = components
            .iter()
            .map(|c| {
                let coords: Vec<usize> = c.support().iter().collect();
                let mut strides = Vec::with_capacity(coords.len());
                let mut size = 1usize;
                for &i in &coords {
                    strides.push(size);
                    size *= values[i].len();
                }
                let mut member = vec![false; size];
                for g in c.ideal().gens() {
                    let idx: usize = coords
                        .iter()
                        .zip(&strides)
                        .map(|(&i, &s)| values[i].binary_search(&g[i]).expect("exponent in grid") * s)
                        .sum();
                    member[idx] = true;
                }
                // Prefix-or along each axis turns generator marks into the ideal.
                for (axis, &i) in coords.iter().enumerate() {
                    let stride = strides[axis];
                    let len = values[i].len();
                    for idx in 0..size {
                        let pos = idx / stride % len;
                        if pos > 0 && member[idx - stride] {
                            member[idx] = true;
                        }
                    }
                }
                Table { coords, strides, member }
            })
            .collect();

        let order = elimination_order(components, &active);
        let position: HashMap<usize, usize> = order.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        // A component's bit is known once its last coordinate is assigned.
        let complete_at: Vec<usize> = components
            .iter()
            .map(|c| c.support().iter().map(|i| position[&i]).max().unwrap_or(0))
            .collect();
        // Assigned coordinates that later levels still read.
        let keys: Vec<Vec<usize>> = (0..=order.len())
            .map(|k| {
                (0..k)
                    .filter(|&pos| {
                        components.iter().enumerate().any(|(c, comp)| {
                            complete_at[c] >= k && comp.support().contains(order[pos])
                        })
                    })
                    .collect()
            })
            .collect();
        let mut search = BoxSearch {
            values: &values,
            order: &order,
            tables: &tables,
            complete_at: &complete_at,
            keys: &keys,
            memo: HashMap::new(),
            idx: vec![0; n],
            work: 0,
        };
        let tails = search.solve(0)?;
        let found = tails
            .iter()
            .map(|(pattern, tail)| {
                let mut a = vec![0; n];
                for (&i, &v) in order.iter().zip(tail) {
                    a[i] = values[i][v as usize];
                }
                (*pattern, a)
            })
            .collect();
        Ok(Patterns::Explicit { found })
    }

    /// A degree in `N^n` lying in every component of `ones` and in no
    /// component of `zeros`.
    fn realize(&mut self, ones: u64, zeros: u64, n: usize) -> Option<Vec<Exponent>> {
        match self {
            Patterns::Explicit { found } => found
                .iter()
                .find(|(p, _)| p & ones == ones && p & zeros == 0)
                .map(|(_, a)| a.clone()),
            Patterns::Lcm { components, memo } => {
                if let Some(v) = memo.get(&(ones, zeros)) {
                    return v.clone();
                }
                let mut order: Vec<usize> = (0..components.len()).filter(|&c| ones >> c & 1 == 1).collect();
                order.sort_by_key(|&c| (components[c].ideal().gens().len(), c));
                let zero_ideals: Vec<&MonomialIdeal> = (0..components.len())
                    .filter(|&c| zeros >> c & 1 == 1)
                    .map(|c| components[c].ideal())
                    .collect();
                let mut visited = HashSet::new();
                let result = lcm_search(components, &order, 0, vec![0; n], &zero_ideals, &mut visited);
                memo.insert((ones, zeros), result.clone());
                result
            }
        }
    }
}

/// Membership of one component over the value grid of its support.
struct Table {
    coords: Vec<usize>,
    strides: Vec<usize>,
    member: Vec<bool>,
}

/// Inner iterations allowed for one explicit box search.
const BOX_WORK_LIMIT: u64 = 400_000_000;

/// Orders coordinates so that components are completed early: repeatedly
/// take the component needing the fewest new coordinates.
fn elimination_order(components: &[PrimaryComponent], active: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = Vec::new();
    let mut placed = VarSet::EMPTY;
    let mut pending: Vec<VarSet> = components.iter().map(|c| c.support()).collect();
    while !pending.is_empty() {
        let (k, _) = pending
            .iter()
            .enumerate()
            .min_by_key(|(_, s)| (s.difference(placed).len(), s.0))
            .expect("nonempty");
        let next = pending.swap_remove(k);
        for i in next.difference(placed).iter() {
            order.push(i);
        }
        placed = placed.union(next);
    }
    debug_assert!(active.iter().all(|i| placed.contains(*i)));
    order
}

/// Memoized search over the coordinates in elimination order. The patterns
/// reachable below a level depend only on the values of the coordinates that
/// unfinished components still read.
/// Patterns with the value indices realizing them.
type Realized = std::rc::Rc<Vec<(u64, Vec<u32>)>>;

struct BoxSearch<'v> {
    values: &'v [Vec<Exponent>],
    order: &'v [usize],
    tables: &'v [Table],
    complete_at: &'v [usize],
    keys: &'v [Vec<usize>],
    memo: HashMap<(usize, Vec<u32>), Realized>,
    idx: Vec<usize>,
    work: u64,
}

impl BoxSearch<'_> {
    /// Patterns of the components finishing at level `k` or later, each with
    /// the value indices of coordinates `order[k..]` realizing it.
    fn solve(&mut self, k: usize) -> Result<Realized> {
        if k == self.order.len() {
            return Ok(std::rc::Rc::new(vec![(0, Vec::new())]));
        }
        let key: Vec<u32> = self.keys[k].iter().map(|&pos| self.idx[self.order[pos]] as u32).collect();
        if let Some(hit) = self.memo.get(&(k, key.clone())) {
            return Ok(hit.clone());
        }
        let coord = self.order[k];
        let mut seen: HashMap<u64, usize> = HashMap::new();
        let mut out: Vec<(u64, Vec<u32>)> = Vec::new();
        for v in 0..self.values[coord].len() {
            self.idx[coord] = v;
            let mut bits = 0u64;
            for (c, t) in self.tables.iter().enumerate() {
                if self.complete_at[c] == k {
                    let cell: usize = t.coords.iter().zip(&t.strides).map(|(&i, &s)| self.idx[i] * s).sum();
                    if t.member[cell] {
                        bits |= 1 << c;
                    }
                }
            }
            let below = self.solve(k + 1)?;
            self.work += below.len() as u64 + 1;
            if self.work > BOX_WORK_LIMIT {
                return Err(Error::TooLarge("explicit candidate box search".into()));
            }
            for (p, tail) in below.iter() {
                let pattern = bits | p;
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(pattern) {
                    e.insert(out.len());
                    let mut rep = Vec::with_capacity(tail.len() + 1);
                    rep.push(v as u32);
                    rep.extend_from_slice(tail);
                    out.push((pattern, rep));
                }
            }
        }
        self.idx[coord] = 0;
        let out = std::rc::Rc::new(out);
        self.memo.insert((k, key), out.clone());
        Ok(out)
    }
}

/// Depth-first search for an lcm of one generator per component in `order`
/// that avoids all `zeros`. Every realizable pattern is realized by such an
/// lcm, since a degree inside the intersection is divisible by a minimal
/// generator of it, and minimal generators of an intersection are lcms.
fn lcm_search(
    components: &[PrimaryComponent],
    order: &[usize],
    pos: usize,
    current: Vec<Exponent>,
    zeros: &[&MonomialIdeal],
    visited: &mut HashSet<(usize, Vec<Exponent>)>,
) -> Option<Vec<Exponent>> {
    if pos == order.len() {
        return Some(current);
    }
    if !visited.insert((pos, current.clone())) {
        return None;
    }
    let ideal = components[order[pos]].ideal();
    if ideal.contains_exps(&current) {
        return lcm_search(components, order, pos + 1, current, zeros, visited);
    }
    for g in ideal.gens() {
        let next: Vec<Exponent> = current.iter().zip(g.iter()).map(|(&a, &b)| a.max(b)).collect();
        if zeros.iter().any(|z| z.contains_exps(&next)) {
            continue;
        }
        if let Some(found) = lcm_search(components, order, pos + 1, next, zeros, visited) {
            return Some(found);
        }
    }
    None
}

fn pattern_source<'a>(
    decomposition: &'a Decomposition,
    strategy: Strategy,
) -> Result<(Patterns<'a>, Candidates)> {
    let comps = decomposition.components();
    let n = decomposition.ring().n();
    if comps.len() > 64 {
        return Err(Error::TooLarge(format!("{} components", comps.len())));
    }
    let box_size = |extra: u32, dense: bool| -> u128 {
        let exps = exponents_per_coordinate(n, comps.iter().flat_map(|c| c.ideal().gens()));
        let values = coordinate_values(&exps, extra, dense);
        let used = comps.iter().fold(VarSet::EMPTY, |acc, c| acc.union(c.support()));
        used.iter().map(|i| values[i].len() as u128).product()
    };
    let lcm = || Patterns::Lcm { components: comps, memo: HashMap::new() };
    let with_negatives = |extra: u32, dense: bool| -> u128 {
        let exps = exponents_per_coordinate(n, comps.iter().flat_map(|c| c.ideal().gens()));
        coordinate_values(&exps, extra, dense).iter().map(|v| v.len() as u128 + 1).product()
    };
    Ok(match strategy {
        Strategy::Lcm => (lcm(), Candidates::Lcm { components: comps.len() }),
        Strategy::Box { extra, dense } => (
            Patterns::explicit(comps, n, extra, dense)?,
            Candidates::Box { points: with_negatives(extra, dense) },
        ),
        Strategy::Auto => {
            if box_size(0, false) <= AUTO_BOX_LIMIT {
                (Patterns::explicit(comps, n, 0, false)?, Candidates::Box { points: with_negatives(0, false) })
            } else {
                (lcm(), Candidates::Lcm { components: comps.len() })
            }
        }
    })
}

/// Negative supports `G` contained in some face `F_c`, by size.
fn negative_supports(decomposition: &Decomposition) -> Result<Vec<VarSet>> {
    let mut all: HashSet<u64> = HashSet::new();
    for c in decomposition.components() {
        let face = c.face();
        if face.len() > 24 {
            return Err(Error::TooLarge(format!("face with {} vertices", face.len())));
        }
        let mut sub = face.0;
        loop {
            all.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & face.0;
        }
    }
    let mut out: Vec<VarSet> = all.into_iter().map(VarSet).collect();
    out.sort_by_key(|g| (g.len(), g.0));
    Ok(out)
}

fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & mask;
        }
        Some(cur)
    })
}

fn complex_for(decomposition: &Decomposition, g: VarSet, zeros: u64) -> SimplicialComplex {
    let comps = decomposition.components();
    let facets = (0..comps.len())
        .filter(|&c| zeros >> c & 1 == 1)
        .map(|c| comps[c].face().difference(g));
    SimplicialComplex::from_faces(decomposition.ring().n(), facets)
}

/// Depth of `R/I` for the unmixed ideal `I` represented by `decomposition`.
pub fn depth_unmixed(decomposition: &Decomposition, options: DepthOptions) -> Result<DepthReport> {
    let comps = decomposition.components();
    let n = decomposition.ring().n();
    let (mut patterns, candidates) = pattern_source(decomposition, options.strategy)?;
    let mut cache = HomologyCache::default();
    let mut best: Option<DepthReport> = None;

    for g in negative_supports(decomposition)? {
        if best.as_ref().is_some_and(|b| g.len() >= b.depth) {
            break;
        }
        let relevant: u64 = (0..comps.len())
            .filter(|&c| comps[c].support().intersection(g).is_empty())
            .fold(0, |acc, c| acc | 1 << c);
        if relevant.count_ones() > 22 {
            return Err(Error::TooLarge(format!("{} components meet no negative coordinate", relevant.count_ones())));
        }
        let mut options_here: Vec<(usize, u64, SimplicialComplex)> = Vec::new();
        for zeros in subsets(relevant).filter(|&z| z != 0) {
            let complex = complex_for(decomposition, g, zeros);
            if let Some(j) = cache.first_j(&complex, options.coefficients)? {
                let value = g.len() + j;
                if best.as_ref().is_none_or(|b| value < b.depth) {
                    options_here.push((j, zeros, complex));
                }
            }
        }
        options_here.sort_by_key(|(j, zeros, _)| (*j, *zeros));
        for (j, zeros, complex) in options_here {
            if let Some(plus) = patterns.realize(relevant & !zeros, zeros, n) {
                let witness = DegreePoint(
                    (0..n).map(|i| if g.contains(i) { -1 } else { plus[i] as i64 }).collect(),
                );
                best = Some(DepthReport { depth: g.len() + j, witness, j, complex, candidates });
                break;
            }
        }
    }
    best.ok_or_else(|| Error::ConstructionBug("no degree with nonvanishing cohomology".into()))
}

/// `depth R/I >= 1` for an unmixed ideal: the maximal ideal is not a minimal prime.
pub fn depth_at_least_1_unmixed(decomposition: &Decomposition) -> bool {
    let all = decomposition.ring().all();
    decomposition.components().iter().all(|c| c.support() != all)
}

/// `depth R/I >= 2` for an unmixed ideal. Condition (ii) only involves the
/// components avoiding `x_j`, and condition (iii) only the patterns realized
/// in `N^n`.
pub fn depth_at_least_2_unmixed(decomposition: &Decomposition, strategy: Strategy) -> Result<bool> {
    if !depth_at_least_1_unmixed(decomposition) {
        return Ok(false);
    }
    let n = decomposition.ring().n();
    let all = decomposition.ring().all();
    let comps = decomposition.components();
    for j in 0..n {
        let rest = all.difference(VarSet::singleton(j));
        if comps.iter().any(|c| c.support() == rest) {
            return Ok(false);
        }
    }
    if comps.len() > 22 {
        return Err(Error::TooLarge(format!("{} components", comps.len())));
    }
    let (mut patterns, _) = pattern_source(decomposition, strategy)?;
    let everything: u64 = if comps.len() == 64 { u64::MAX } else { (1 << comps.len()) - 1 };
    for zeros in subsets(everything).filter(|&z| z != 0) {
        let complex = complex_for(decomposition, VarSet::EMPTY, zeros);
        if !complex.is_connected() && patterns.realize(everything & !zeros, zeros, n).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One row of a symbolic depth table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicDepth {
    pub t: u32,
    pub report: DepthReport,
    pub at_least_1: bool,
    pub at_least_2: bool,
}

/// `depth R/I^(t)` for `t = 1..=t_max`, evaluated in parallel over `t`.
pub fn symbolic_depth_function(
    decomposition: &Decomposition,
    t_max: u32,
    options: DepthOptions,
) -> Result<Vec<SymbolicDepth>> {
    if t_max == 0 {
        return Err(Error::ParameterOutOfRange("t_max must be at least 1".into()));
    }
    (1..=t_max)
        .into_par_iter()
        .map(|t| {
            let power = decomposition.power(t);
            let report = depth_unmixed(&power, options)?;
            Ok(SymbolicDepth {
                t,
                at_least_1: depth_at_least_1_unmixed(&power),
                at_least_2: depth_at_least_2_unmixed(&power, options.strategy)?,
                report,
            })
        })
        .collect()
}

/// Just the depth values of [`symbolic_depth_function`].
pub fn symbolic_depths(decomposition: &Decomposition, t_max: u32, options: DepthOptions) -> Result<Vec<usize>> {
    (1..=t_max)
        .into_par_iter()
        .map(|t| depth_unmixed(&decomposition.power(t), options).map(|r| r.depth))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Ring;
    use proptest::prelude::{prop_assert_eq, proptest, ProptestConfig, Strategy as _};
    use super::Strategy;

    fn ideal(names: &[&str], rows: &[&[u32]]) -> MonomialIdeal {
        let r = Ring::new(names.iter().copied()).unwrap();
        MonomialIdeal::from_exponents(&r, rows).unwrap()
    }

    fn d(i: &MonomialIdeal) -> usize {
        depth(i, DepthOptions::default()).unwrap().depth
    }

    #[test]
    fn small_depths() {
        assert_eq!(d(&ideal(&["x", "y"], &[&[1, 0], &[0, 1]])), 0);
        assert_eq!(d(&ideal(&["x", "y"], &[&[1, 1]])), 1);
        assert_eq!(d(&ideal(&["x", "y", "z"], &[&[1, 0, 0]])), 2);
        assert_eq!(d(&ideal(&["x", "y"], &[&[2, 0], &[1, 1]])), 0);
        let r = Ring::new(["x", "y"]).unwrap();
        assert_eq!(depth(&MonomialIdeal::unit(&r), DepthOptions::default()), Err(Error::UnitIdeal));
    }

    #[test]
    fn witness_is_consistent() {
        let i = ideal(&["x", "y", "z"], &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let report = depth(&i, DepthOptions::default()).unwrap();
        assert_eq!(report.depth, 1);
        let complex = crate::complex::degree_complex(&i, &report.witness).unwrap();
        assert_eq!(complex, report.complex);
        let dims = complex.reduced_homology_dims(Coefficients::Rational).unwrap();
        assert!(dims[report.j] > 0);
        assert_eq!(report.witness.negative_support().len() + report.j, report.depth);
    }

    #[test]
    fn fast_paths_on_small_ideals() {
        let m = ideal(&["x", "y"], &[&[1, 0], &[0, 1]]);
        assert!(!depth_at_least_1(&m).unwrap());
        let xy = ideal(&["x", "y"], &[&[1, 1]]);
        assert!(depth_at_least_1(&xy).unwrap());
        assert!(!depth_at_least_2(&xy).unwrap());
        let x = ideal(&["x", "y", "z"], &[&[1, 0, 0]]);
        assert!(depth_at_least_2(&x).unwrap());
    }

    #[test]
    fn triangle_symbolic_powers() {
        let i = ideal(&["x", "y", "z"], &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let dec = i.minimal_primes_squarefree().unwrap();
        for t in 1..=3 {
            let p = dec.power(t);
            let via_components = depth_unmixed(&p, DepthOptions::default()).unwrap().depth;
            assert_eq!(via_components, d(&p.intersection()), "t = {t}");
            assert_eq!(via_components, 1);
        }
    }

    fn random_squarefree() -> impl proptest::strategy::Strategy<Value = MonomialIdeal> {
        (2usize..=4).prop_flat_map(|n| {
            proptest::collection::vec(1u64..(1 << n), 1..4).prop_filter_map("proper", move |sets| {
                let r = Ring::standard(n).ok()?;
                let gens = sets.into_iter().map(|s| {
                    ExponentVector::new((0..n).map(|i| (s >> i & 1) as u32).collect())
                });
                MonomialIdeal::new(&r, gens).ok()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn unmixed_path_agrees_with_general(i in random_squarefree(), t in 1u32..4) {
            let dec = i.minimal_primes_squarefree().unwrap();
            let p = dec.power(t);
            let general = depth(&p.intersection(), DepthOptions::default()).unwrap().depth;
            for strategy in [Strategy::Auto, Strategy::Lcm, Strategy::Box { extra: 2, dense: true }] {
                let opts = DepthOptions { strategy, ..Default::default() };
                prop_assert_eq!(depth_unmixed(&p, opts).unwrap().depth, general);
            }
            prop_assert_eq!(depth_at_least_1_unmixed(&p), general >= 1);
            prop_assert_eq!(depth_at_least_2_unmixed(&p, Strategy::Lcm).unwrap(), general >= 2);
            prop_assert_eq!(depth_at_least_1(&p.intersection()).unwrap(), general >= 1);
            prop_assert_eq!(depth_at_least_2(&p.intersection()).unwrap(), general >= 2);
        }
    }
}
