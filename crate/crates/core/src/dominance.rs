//! Componentwise dominance queries on exponent vectors.
//!
//! Both minimalization and batch containment reduce to a sweep in
//! lexicographic order: every divisor of a vector precedes it, so a point is
//! dominated iff some earlier point is below it on the remaining coordinates.
//! Coordinates that are constant over the whole input are ignored. With at
//! most two remaining coordinates the query is answered by a running minimum
//! or a Fenwick tree of prefix minima; otherwise by a scan.

use crate::monomial::ExponentVector;

struct Staircase {
    rest: Vec<usize>,
    kind: Kind,
}

enum Kind {
    Any(bool),
    Line(u32),
    Fenwick { keys: Vec<u32>, tree: Vec<u32> },
    Scan(Vec<Vec<u32>>),
}

impl Staircase {
    /// `active` are the coordinates that vary; the first one is the sweep
    /// coordinate and is not stored.
    fn new(active: &[usize], points: &[&ExponentVector]) -> Self {
        let rest: Vec<usize> = active.iter().skip(1).copied().collect();
        let kind = match rest.len() {
            0 => Kind::Any(false),
            1 => Kind::Line(u32::MAX),
            2 => {
                let mut keys: Vec<u32> = points.iter().map(|p| p[rest[0]]).collect();
                keys.sort_unstable();
                keys.dedup();
                let tree = vec![u32::MAX; keys.len() + 1];
                Kind::Fenwick { keys, tree }
            }
            _ => Kind::Scan(Vec::new()),
        };
        Staircase { rest, kind }
    }

    fn insert(&mut self, p: &ExponentVector) {
        match &mut self.kind {
            Kind::Any(seen) => *seen = true,
            Kind::Line(min) => *min = (*min).min(p[self.rest[0]]),
            Kind::Fenwick { keys, tree } => {
                let mut i = keys.partition_point(|&k| k < p[self.rest[0]]) + 1;
                let v = p[self.rest[1]];
                while i < tree.len() {
                    tree[i] = tree[i].min(v);
                    i += i & i.wrapping_neg();
                }
            }
            Kind::Scan(pts) => pts.push(self.rest.iter().map(|&c| p[c]).collect()),
        }
    }

    fn dominates(&self, p: &ExponentVector) -> bool {
        match &self.kind {
            Kind::Any(seen) => *seen,
            Kind::Line(min) => *min <= p[self.rest[0]],
            Kind::Fenwick { keys, tree } => {
                let mut i = keys.partition_point(|&k| k <= p[self.rest[0]]);
                let mut best = u32::MAX;
                while i > 0 {
                    best = best.min(tree[i]);
                    i -= i & i.wrapping_neg();
                }
                best <= p[self.rest[1]]
            }
            Kind::Scan(pts) => pts
                .iter()
                .any(|q| q.iter().zip(&self.rest).all(|(&qv, &c)| qv <= p[c])),
        }
    }
}

fn active_coordinates<'a>(points: impl Iterator<Item = &'a ExponentVector> + Clone) -> Vec<usize> {
    let mut it = points.clone();
    let Some(first) = it.next() else {
        return Vec::new();
    };
    (0..first.len())
        .filter(|&i| points.clone().any(|p| p[i] != first[i]))
        .collect()
}

/// Sorted antichain of the minimal elements of `points`.
pub(crate) fn minimalize(mut points: Vec<ExponentVector>) -> Vec<ExponentVector> {
    points.sort_unstable();
    points.dedup();
    if points.len() <= 1 {
        return points;
    }
    let active = active_coordinates(points.iter());
    let refs: Vec<&ExponentVector> = points.iter().collect();
    let mut stairs = Staircase::new(&active, &refs);
    let mut keep = vec![false; points.len()];
    for (i, p) in points.iter().enumerate() {
        if !stairs.dominates(p) {
            keep[i] = true;
            stairs.insert(p);
        }
    }
    let mut flags = keep.into_iter();
    points.retain(|_| flags.next().unwrap_or(false));
    points
}

/// For every query, whether some base point is componentwise below it.
pub(crate) fn dominated_flags(base: &[ExponentVector], queries: &[ExponentVector]) -> Vec<bool> {
    if base.is_empty() {
        return vec![false; queries.len()];
    }
    let all = base.iter().chain(queries.iter());
    let active = active_coordinates(all.clone());
    if active.is_empty() {
        return vec![true; queries.len()];
    }
    // Base points sort before equal queries.
    let mut events: Vec<(&ExponentVector, bool, usize)> = base
        .iter()
        .enumerate()
        .map(|(i, p)| (p, false, i))
        .chain(queries.iter().enumerate().map(|(i, p)| (p, true, i)))
        .collect();
    events.sort_unstable_by(|a, b| a.0.cmp(b.0).then(a.1.cmp(&b.1)));
    let refs: Vec<&ExponentVector> = all.collect();
    let mut stairs = Staircase::new(&active, &refs);
    let mut out = vec![false; queries.len()];
    for (p, is_query, idx) in events {
        if is_query {
            out[idx] = stairs.dominates(p);
        } else {
            stairs.insert(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_minimal(points: &[ExponentVector]) -> Vec<ExponentVector> {
        let mut out: Vec<ExponentVector> = points
            .iter()
            .filter(|p| !points.iter().any(|q| q != *p && q.divides(p)))
            .cloned()
            .collect();
        out.sort();
        out.dedup();
        out
    }

    proptest! {
        #[test]
        fn minimalize_matches_brute_force(
            dims in 1usize..6,
            raw in proptest::collection::vec(proptest::collection::vec(0u32..5, 6), 0..40)
        ) {
            let points: Vec<ExponentVector> =
                raw.into_iter().map(|v| ExponentVector::new(v[..dims].to_vec())).collect();
            prop_assert_eq!(minimalize(points.clone()), brute_minimal(&points));
        }

        #[test]
        fn dominated_flags_match_brute_force(
            dims in 1usize..6,
            base in proptest::collection::vec(proptest::collection::vec(0u32..5, 6), 0..12),
            queries in proptest::collection::vec(proptest::collection::vec(0u32..5, 6), 0..12)
        ) {
            let base: Vec<ExponentVector> =
                base.into_iter().map(|v| ExponentVector::new(v[..dims].to_vec())).collect();
            let queries: Vec<ExponentVector> =
                queries.into_iter().map(|v| ExponentVector::new(v[..dims].to_vec())).collect();
            let expected: Vec<bool> =
                queries.iter().map(|q| base.iter().any(|b| b.divides(q))).collect();
            prop_assert_eq!(dominated_flags(&base, &queries), expected);
        }
    }
}
