//! Dense primal simplex over an exact ordered field.
//!
//! Only problems of the form `max c·x` subject to `A x <= b`, `x >= 0` with
//! `b >= 0` are needed, so the slack basis is an initial feasible vertex and
//! no phase one is required. Bland's rule guarantees termination.

use crate::scalar::OrderedField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpError {
    /// Some right-hand side entry is negative.
    InfeasibleStart,
    /// The objective is unbounded above.
    Unbounded,
    /// Row lengths disagree with the objective.
    Shape,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution<F> {
    pub value: F,
    /// An optimal vertex.
    pub x: Vec<F>,
}

/// Solves `max c·x` s.t. `A x <= b`, `x >= 0`, assuming `b >= 0`.
pub fn maximize<F: OrderedField>(c: &[F], a: &[Vec<F>], b: &[F]) -> Result<LpSolution<F>, LpError> {
    let n = c.len();
    let m = a.len();
    if b.len() != m || a.iter().any(|row| row.len() != n) {
        return Err(LpError::Shape);
    }
    if b.iter().any(|v| v.is_negative()) {
        return Err(LpError::InfeasibleStart);
    }
    // Tableau columns: n structural, m slack, then the right-hand side.
    let width = n + m + 1;
    let mut rows: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            let mut r = Vec::with_capacity(width);
            r.extend(row.iter().cloned());
            r.extend((0..m).map(|k| if k == i { F::one() } else { F::zero() }));
            r.push(bi.clone());
            r
        })
        .collect();
    // Reduced costs of the objective row, stored as -c so that a negative
    // entry marks an improving column.
    let mut obj: Vec<F> = c.iter().map(|v| -v.clone()).collect();
    obj.extend((0..=m).map(|_| F::zero()));
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        // Ratio test; ties broken by the smallest basic variable index.
        let mut leave: Option<(usize, F)> = None;
        for (i, row) in rows.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = row[n + m].clone() / row[enter].clone();
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pivot_row, _)) = leave else {
            return Err(LpError::Unbounded);
        };
        pivot(&mut rows, &mut obj, pivot_row, enter);
        basis[pivot_row] = enter;
    }

    let mut x = vec![F::zero(); n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            x[var] = rows[i][n + m].clone();
        }
    }
    Ok(LpSolution { value: obj[n + m].clone(), x })
}

fn pivot<F: OrderedField>(rows: &mut [Vec<F>], obj: &mut [F], r: usize, col: usize) {
    let inv = F::one() / rows[r][col].clone();
    for v in rows[r].iter_mut() {
        *v = v.clone() * inv.clone();
    }
    let pivot_row = rows[r].clone();
    let eliminate = |target: &mut [F]| {
        let factor = target[col].clone();
        if factor.is_zero() {
            return;
        }
        for (t, p) in target.iter_mut().zip(&pivot_row) {
            *t = t.clone() - factor.clone() * p.clone();
        }
    };
    for (i, row) in rows.iter_mut().enumerate() {
        if i != r {
            eliminate(row);
        }
    }
    eliminate(obj);
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn two_variable_lp() {
        // max x + y s.t. 2x <= 1, 2y <= 1.
        let a = vec![vec![q(2, 1), q(0, 1)], vec![q(0, 1), q(2, 1)]];
        let sol = maximize(&[q(1, 1), q(1, 1)], &a, &[q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(sol.value, q(1, 1));
        assert_eq!(sol.x, vec![q(1, 2), q(1, 2)]);
    }

    #[test]
    fn degenerate_and_error_cases() {
        let a = vec![vec![q(1, 1), q(1, 1)], vec![q(1, 1), q(-1, 1)]];
        let sol = maximize(&[q(1, 1), q(0, 1)], &a, &[q(0, 1), q(0, 1)]).unwrap();
        assert_eq!(sol.value, q(0, 1));
        assert_eq!(
            maximize(&[q(1, 1)], &[vec![q(-1, 1)]], &[q(1, 1)]),
            Err(LpError::Unbounded)
        );
        assert_eq!(
            maximize(&[q(1, 1)], &[vec![q(1, 1)]], &[q(-1, 1)]),
            Err(LpError::InfeasibleStart)
        );
    }

    /// Vertex enumeration for two variables: the optimum of a bounded LP is
    /// attained at an intersection of two tight constraints.
    fn brute_force_2d(c: &[BigRational], a: &[Vec<BigRational>], b: &[BigRational]) -> BigRational {
        let mut lines: Vec<(Vec<BigRational>, BigRational)> =
            a.iter().cloned().zip(b.iter().cloned()).collect();
        lines.push((vec![q(1, 1), q(0, 1)], q(0, 1)));
        lines.push((vec![q(0, 1), q(1, 1)], q(0, 1)));
        let feasible = |x: &[BigRational]| {
            x.iter().all(|v| !v.is_negative())
                && a.iter().zip(b).all(|(row, bi)| {
                    row.iter().zip(x).fold(q(0, 1), |acc, (r, v)| acc + r * v) <= *bi
                })
        };
        let mut best: Option<BigRational> = None;
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let (r1, b1) = &lines[i];
                let (r2, b2) = &lines[j];
                let det = &r1[0] * &r2[1] - &r1[1] * &r2[0];
                if det == q(0, 1) {
                    continue;
                }
                // Both constraints tight; sign of the slack axes is handled
                // by treating x >= 0 rows as equalities x = 0.
                let x0 = (b1 * &r2[1] - &r1[1] * b2) / &det;
                let x1 = (&r1[0] * b2 - b1 * &r2[0]) / &det;
                let x = [x0, x1];
                if feasible(&x) {
                    let v = &c[0] * &x[0] + &c[1] * &x[1];
                    if best.as_ref().is_none_or(|b| v > *b) {
                        best = Some(v);
                    }
                }
            }
        }
        best.expect("bounded feasible region has a vertex")
    }

    proptest! {
        #[test]
        fn matches_vertex_enumeration(
            rows in proptest::collection::vec((1i64..5, 1i64..5, 0i64..8), 1..5),
            c0 in 0i64..4, c1 in 0i64..4,
        ) {
            let a: Vec<Vec<BigRational>> = rows.iter().map(|&(x, y, _)| vec![q(x, 1), q(y, 1)]).collect();
            let b: Vec<BigRational> = rows.iter().map(|&(_, _, r)| q(r, 1)).collect();
            let c = [q(c0, 1), q(c1, 1)];
            let sol = maximize(&c, &a, &b).unwrap();
            prop_assert_eq!(sol.value.clone(), brute_force_2d(&c, &a, &b));
            let attained = &c[0] * &sol.x[0] + &c[1] * &sol.x[1];
            prop_assert_eq!(attained, sol.value);
        }
    }
}
