//! Simplicial complexes given by facets, their reduced homology over a field,
//! and the degree complexes of monomial ideals.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{rank_fraction_free, rank_mod_p};
use crate::monomial::{Decomposition, MonomialIdeal, Ring, VarSet};
use crate::scalar::Coefficients;

/// A simplicial complex on the vertex set `{0, .., n-1}`, stored as its
/// facets. An empty facet list is the void complex; the single facet `∅`
/// is the complex `{∅}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal sets of `faces`.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = VarSet>) -> Self {
        let mut all: Vec<VarSet> = faces.into_iter().collect();
        all.sort_by_key(|f| std::cmp::Reverse(f.len()));
        all.dedup();
        let mut facets: Vec<VarSet> = Vec::new();
        for f in all {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty_face(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![VarSet::EMPTY] }
    }

    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![VarSet::full(n)] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// All faces, including `∅` unless the complex is void, grouped by
    /// cardinality.
    pub fn faces_by_size(&self) -> Vec<Vec<VarSet>> {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut by_size: Vec<Vec<VarSet>> = Vec::new();
        for facet in &self.facets {
            // Enumerate all subsets of the facet.
            let bits = facet.0;
            let mut sub = bits;
            loop {
                if seen.insert(sub) {
                    let size = sub.count_ones() as usize;
                    if by_size.len() <= size {
                        by_size.resize(size + 1, Vec::new());
                    }
                    by_size[size].push(VarSet(sub));
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        for level in &mut by_size {
            level.sort();
        }
        by_size
    }

    /// Dimensions of `H̃_j` for `j = -1, 0, .., dim`; entry `k` holds `j = k - 1`.
    /// The void complex has no faces and yields the single entry `0`.
    pub fn reduced_homology_dims(&self, coefficients: Coefficients) -> Result<Vec<usize>> {
        if self.is_void() {
            return Ok(vec![0]);
        }
        if let Some(big) = self.facets.iter().find(|f| f.len() > 20) {
            return Err(Error::TooLarge(format!("facet with {} vertices", big.len())));
        }
        let faces = self.faces_by_size();
        // ranks[k] = rank of the boundary map from faces of size k to size k - 1.
        let mut ranks = vec![0usize; faces.len() + 1];
        for k in 1..faces.len() {
            ranks[k] = boundary_rank(&faces[k], &faces[k - 1], coefficients);
        }
        Ok((0..faces.len())
            .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
            .collect())
    }

    /// The least `j` with `H̃_j != 0`, or `None` if all reduced homology vanishes.
    pub fn lowest_nonvanishing_degree(&self, coefficients: Coefficients) -> Result<Option<i64>> {
        if self.is_void() {
            return Ok(None);
        }
        // A complex with a cone point is acyclic; this covers most complexes
        // seen by the depth engine.
        let common = self.facets.iter().fold(VarSet::full(self.n), |acc, f| acc.intersection(*f));
        if !common.is_empty() {
            return Ok(None);
        }
        let dims = self.reduced_homology_dims(coefficients)?;
        Ok(dims.iter().position(|&d| d > 0).map(|k| k as i64 - 1))
    }

    /// Connectivity of the union of facets. `{∅}`, a point and the void
    /// complex count as connected.
    pub fn is_connected(&self) -> bool {
        let nonempty: Vec<VarSet> = self.facets.iter().copied().filter(|f| !f.is_empty()).collect();
        if nonempty.len() <= 1 {
            return true;
        }
        let mut reached = nonempty[0];
        let mut pending: Vec<VarSet> = nonempty[1..].to_vec();
        loop {
            let before = pending.len();
            pending.retain(|f| {
                if f.intersection(reached).is_empty() {
                    true
                } else {
                    reached = reached.union(*f);
                    false
                }
            });
            if pending.is_empty() {
                return true;
            }
            if pending.len() == before {
                return false;
            }
        }
    }

    /// Alternating count of faces, `∅` included: `-1 + f_0 - f_1 + ..`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_size()
            .iter()
            .enumerate()
            .map(|(k, level)| if k % 2 == 1 { level.len() as i64 } else { -(level.len() as i64) })
            .sum()
    }

    pub fn display_with(&self, ring: &Ring) -> String {
        if self.is_void() {
            return "void".into();
        }
        let parts: Vec<String> = self.facets.iter().map(|f| ring.format_set(*f)).collect();
        format!("<{}>", parts.join(", "))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<Vec<usize>> = self.facets.iter().map(|s| s.iter().collect()).collect();
        write!(f, "Complex{parts:?}")
    }
}

const RANK_PRIME: u64 = 2_147_483_647;

fn boundary_rank(upper: &[VarSet], lower: &[VarSet], coefficients: Coefficients) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<VarSet, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|face| {
            let mut row = vec![0i64; lower.len()];
            for (pos, v) in face.iter().enumerate() {
                let mut smaller = *face;
                smaller.0 &= !(1u64 << v);
                row[index[&smaller]] = if pos % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect();
    match coefficients {
        Coefficients::Prime(p) => rank_mod_p(&rows, p),
        Coefficients::Rational => {
            // The rank over GF(p) is a lower bound; when it is already maximal
            // the exact computation can be skipped.
            let modular = rank_mod_p(&rows, RANK_PRIME);
            if modular == rows.len().min(lower.len()) {
                modular
            } else {
                let big = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(BigInt::from).collect())
                    .collect();
                rank_fraction_free(big)
            }
        }
    }
}

/// An integer vector `a`; its negative coordinates form `G_a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreePoint(pub Vec<i64>);

impl DegreePoint {
    /// `G_a`.
    pub fn negative_support(&self) -> VarSet {
        VarSet::from_indices(self.0.iter().enumerate().filter(|(_, &v)| v < 0).map(|(i, _)| i))
    }

    /// `a_+`, negative entries replaced by zero.
    pub fn positive_part(&self) -> Vec<u32> {
        self.0.iter().map(|&v| v.max(0) as u32).collect()
    }
}

impl fmt::Display for DegreePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `Δ_a(I)`, the sets `F \ G_a` for `F ⊇ G_a` with `x^a ∉ I R_F`.
pub fn degree_complex(ideal: &MonomialIdeal, a: &DegreePoint) -> Result<SimplicialComplex> {
    ideal.require_proper_nonzero()?;
    let n = ideal.ring().n();
    if a.0.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: a.0.len() });
    }
    if n > 24 {
        return Err(Error::TooLarge(format!("{n} variables for subset enumeration")));
    }
    let g = a.negative_support();
    let plus = a.positive_part();
    let free = g.complement(n);
    let mut faces = Vec::new();
    // Enumerate H ⊆ [n] \ G; the face is H and F = G ∪ H.
    let mut h = free.0;
    loop {
        let f = VarSet(h).union(g);
        let inside = ideal
            .gens()
            .iter()
            .any(|gen| (0..n).all(|i| f.contains(i) || gen[i] <= plus[i]));
        if !inside {
            faces.push(VarSet(h));
        }
        if h == 0 {
            break;
        }
        h = (h - 1) & free.0;
    }
    Ok(SimplicialComplex::from_faces(n, faces))
}

/// `Δ_a(I)` for the unmixed ideal represented by `decomposition`, read off
/// from the components: facets `F \ G_a` with `G_a ⊆ F` and `x^{a_+} ∉ I_F`,
/// where `F` is the complement of a component's support.
pub fn degree_complex_unmixed(
    decomposition: &Decomposition,
    a: &DegreePoint,
) -> Result<SimplicialComplex> {
    let n = decomposition.ring().n();
    if a.0.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: a.0.len() });
    }
    let g = a.negative_support();
    let plus = a.positive_part();
    let facets = decomposition
        .components()
        .iter()
        .filter(|c| c.support().intersection(g).is_empty() && !c.ideal().contains_exps(&plus))
        .map(|c| c.face().difference(g));
    Ok(SimplicialComplex::from_faces(n, facets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{ExponentVector, PrimaryComponent};
    use proptest::prelude::*;

    fn set(v: &[usize]) -> VarSet {
        VarSet::from_indices(v.iter().copied())
    }

    fn dims(c: &SimplicialComplex) -> Vec<usize> {
        c.reduced_homology_dims(Coefficients::Rational).unwrap()
    }

    #[test]
    fn conventions() {
        let circle = SimplicialComplex::from_faces(3, [set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]);
        assert_eq!(dims(&circle), vec![0, 0, 1]);
        assert_eq!(dims(&SimplicialComplex::simplex(3)), vec![0, 0, 0, 0]);
        assert_eq!(dims(&SimplicialComplex::empty_face(3)), vec![1]);
        assert_eq!(dims(&SimplicialComplex::void(3)), vec![0]);
        assert_eq!(SimplicialComplex::void(3).lowest_nonvanishing_degree(Coefficients::Rational), Ok(None));
        assert_eq!(
            SimplicialComplex::empty_face(3).lowest_nonvanishing_degree(Coefficients::Rational),
            Ok(Some(-1))
        );
        assert_eq!(circle.lowest_nonvanishing_degree(Coefficients::Prime(2)), Ok(Some(1)));
    }

    #[test]
    fn connectivity() {
        let two = SimplicialComplex::from_faces(5, [set(&[2, 4]), set(&[0, 1, 3])]);
        assert!(!two.is_connected());
        assert_eq!(dims(&two)[1], 1);
        assert!(SimplicialComplex::from_faces(3, [set(&[0, 1]), set(&[1, 2])]).is_connected());
        assert!(SimplicialComplex::empty_face(2).is_connected());
        assert!(SimplicialComplex::void(2).is_connected());
    }

    #[test]
    fn real_projective_plane_depends_on_characteristic() {
        // Six-vertex triangulation of RP^2: H_1 has 2-torsion.
        let tri = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let c = SimplicialComplex::from_faces(6, tri.iter().map(|f| set(f)));
        assert_eq!(c.reduced_homology_dims(Coefficients::Rational).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(c.reduced_homology_dims(Coefficients::Prime(2)).unwrap(), vec![0, 0, 1, 1]);
    }

    #[test]
    fn degree_complex_of_xy() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[&[1, 1]]).unwrap();
        let c = degree_complex(&i, &DegreePoint(vec![0, 0])).unwrap();
        // Direct check over the four subsets: x^0 ∉ I R_F iff F misses a variable.
        assert_eq!(c.facets(), &[set(&[0]), set(&[1])]);
        let c = degree_complex(&i, &DegreePoint(vec![5, 5])).unwrap();
        assert!(c.is_void());
    }

    #[test]
    fn triangle_unmixed_complex() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
        let d = i.minimal_primes_squarefree().unwrap();
        let a = DegreePoint(vec![1, 1, 1]);
        assert!(degree_complex_unmixed(&d, &a).unwrap().is_void());
        assert_eq!(degree_complex_unmixed(&d, &a), degree_complex(&i, &a));
    }

    fn random_complex() -> impl Strategy<Value = SimplicialComplex> {
        (1usize..=7).prop_flat_map(|n| {
            proptest::collection::vec(0u64..(1 << n), 0..6)
                .prop_map(move |fs| SimplicialComplex::from_faces(n, fs.into_iter().map(VarSet)))
        })
    }

    fn small_decomposition() -> impl Strategy<Value = Decomposition> {
        // Components on random supports with random pure powers plus a mixed
        // generator, keeping only an antichain of supports.
        proptest::collection::vec((1u64..16, 1u32..4, 0u32..3), 1..4).prop_filter_map(
            "incomparable supports",
            |spec| {
                let r = Ring::standard(4).ok()?;
                let mut comps: Vec<PrimaryComponent> = Vec::new();
                for (bits, e, mixed) in spec {
                    let s = VarSet(bits);
                    if comps.iter().any(|c| c.support().is_subset(s) || s.is_subset(c.support())) {
                        continue;
                    }
                    let mut gens: Vec<ExponentVector> = s
                        .iter()
                        .map(|i| {
                            let mut v = vec![0; 4];
                            v[i] = e + 1;
                            ExponentVector::new(v)
                        })
                        .collect();
                    if mixed > 0 {
                        let mut v = vec![0; 4];
                        for i in s.iter() {
                            v[i] = mixed;
                        }
                        gens.push(ExponentVector::new(v));
                    }
                    comps.push(PrimaryComponent::new(s, MonomialIdeal::new(&r, gens).ok()?).ok()?);
                }
                Decomposition::new(&r, comps).ok()
            },
        )
    }

    proptest! {
        #[test]
        fn euler_characteristic_matches_homology(c in random_complex()) {
            let d = dims(&c);
            let alt: i64 = d.iter().enumerate()
                .map(|(k, &v)| if k % 2 == 0 { -(v as i64) } else { v as i64 })
                .sum();
            prop_assert_eq!(alt, c.reduced_euler_characteristic());
        }

        #[test]
        fn h0_counts_components(c in random_complex()) {
            prop_assume!(!c.is_void() && c.facets() != [VarSet::EMPTY]);
            let d = dims(&c);
            // Count components by merging facets.
            let mut groups: Vec<VarSet> = Vec::new();
            for f in c.facets() {
                let mut merged = *f;
                groups.retain(|g| {
                    if g.intersection(merged).is_empty() { true } else { merged = merged.union(*g); false }
                });
                groups.push(merged);
            }
            prop_assert_eq!(d[1], groups.len() - 1);
            prop_assert_eq!(c.is_connected(), groups.len() == 1);
        }

        #[test]
        fn unmixed_complex_agrees_with_definition(
            d in small_decomposition(),
            a in proptest::collection::vec(-1i64..4, 4),
        ) {
            let a = DegreePoint(a);
            let ideal = d.intersection();
            let direct = degree_complex(&ideal, &a).unwrap();
            prop_assert_eq!(degree_complex_unmixed(&d, &a).unwrap(), direct.clone());
            // Downward closure: every subset of a facet passes the membership test.
            let g = a.negative_support();
            for facet in direct.facets() {
                for sub in (0..16u64).map(VarSet).filter(|s| s.is_subset(*facet)) {
                    let f = sub.union(g);
                    let plus = a.positive_part();
                    let inside = ideal.gens().iter().any(|gen| (0..4).all(|i| f.contains(i) || gen[i] <= plus[i]));
                    prop_assert!(!inside);
                }
            }
        }
    }
}
