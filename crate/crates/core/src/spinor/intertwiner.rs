//! Constant matrices `S` with `S Dp = D S`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::MatrixWeylOperator;
use crate::algebra::poly::{ParamPoly, Var};
use crate::algebra::scalar::GaussRational;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Matrix};
use crate::weyl::Exps;

/// Solution spaces up to this dimension get an exact invertibility decision
/// through the determinant of the general element.
const SYMBOLIC_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct IntertwinerReport {
    pub dim: usize,
    pub found: Option<CMatrix>,
    /// Dimension of the space of all (possibly singular) solutions.
    pub solution_dim: usize,
    /// True when "none found" is a proof rather than an exhausted search.
    pub exact: bool,
    /// Number of nonzero Weyl terms in `S Dp - D S` for the returned `S`.
    pub residual: usize,
}

impl IntertwinerReport {
    pub fn pass(&self) -> bool {
        self.found.is_some() && self.residual == 0
    }
}

/// Row of the linear system for entry `(r, c)` and one Weyl monomial:
/// `sum_k s_rk Dp_kc - sum_k D_rk s_kc`, unknown `s_ab` at `a * n + b`.
fn equations(d: &MatrixWeylOperator, dp: &MatrixWeylOperator) -> Vec<Vec<GaussRational>> {
    let n = d.dim;
    let mut rows = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let mut eqs: BTreeMap<(Exps, Exps), Vec<GaussRational>> = BTreeMap::new();
            let mut push = |var: usize, key: (Exps, Exps), v: GaussRational| {
                let row = eqs
                    .entry(key)
                    .or_insert_with(|| vec![GaussRational::zero(); n * n]);
                row[var] = &row[var] + &v;
            };
            for k in 0..n {
                for (a, b, v) in dp.get(k, c).terms() {
                    push(r * n + k, (*a, *b), v.clone());
                }
                for (a, b, v) in d.get(r, k).terms() {
                    push(k * n + c, (*a, *b), -v.clone());
                }
            }
            rows.extend(
                eqs.into_values()
                    .filter(|row| row.iter().any(|x| !x.is_zero())),
            );
        }
    }
    rows
}

fn to_matrix(n: usize, v: &[GaussRational]) -> CMatrix {
    CMatrix::from_fn(n, n, |r, c| v[r * n + c].clone())
}

fn combination(n: usize, basis: &[CMatrix], q: &[i64]) -> CMatrix {
    basis
        .iter()
        .zip(q)
        .filter(|(_, &k)| k != 0)
        .fold(CMatrix::zeros(n, n), |acc, (b, &k)| {
            &acc + &b.scale(&GaussRational::from_int(k))
        })
}

fn residual(s: &CMatrix, d: &MatrixWeylOperator, dp: &MatrixWeylOperator) -> usize {
    dp.left_mul(s)
        .sub(&d.right_mul(s))
        .entries()
        .iter()
        .map(|e| e.num_terms())
        .sum()
}

/// Integer points of `{0..=m}^k` in odometer order, produced lazily.
fn grid(k: usize, m: i64) -> impl Iterator<Item = Vec<i64>> {
    let mut next = Some(vec![0i64; k]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut q = cur.clone();
        if let Some(j) = q.iter().position(|&x| x < m) {
            q[j] += 1;
            q[..j].iter_mut().for_each(|x| *x = 0);
            next = Some(q);
        }
        Some(cur)
    })
}

pub fn intertwiner_search(
    d: &MatrixWeylOperator,
    dp: &MatrixWeylOperator,
) -> Result<IntertwinerReport> {
    if d.dim != dp.dim {
        return Err(Error::Dimension {
            expected: d.dim,
            found: dp.dim,
        });
    }
    let n = d.dim;
    let rows = equations(d, dp);
    let system = if rows.is_empty() {
        CMatrix::zeros(1, n * n)
    } else {
        Matrix::from_rows(rows)
    };
    let basis: Vec<CMatrix> = system.nullspace().iter().map(|v| to_matrix(n, v)).collect();
    let k = basis.len();
    let report = |found: Option<CMatrix>, exact: bool| {
        let residual = found.as_ref().map_or(0, |s| residual(s, d, dp));
        IntertwinerReport {
            dim: n,
            found,
            solution_dim: k,
            exact,
            residual,
        }
    };
    if k == 0 {
        return Ok(report(None, true));
    }

    let invertible = |s: &CMatrix| !s.det().is_zero();
    let id = CMatrix::identity(n);
    if basis.len() == n * n || residual(&id, d, dp) == 0 {
        return Ok(report(Some(id), true));
    }
    if let Some(s) = basis.iter().find(|s| invertible(s)) {
        return Ok(report(Some(s.clone()), true));
    }

    if k <= SYMBOLIC_LIMIT {
        let general: Matrix<ParamPoly> = basis
            .iter()
            .enumerate()
            .fold(Matrix::zeros(n, n), |acc, (j, b)| {
                &acc + &b.map(|x| ParamPoly::var(Var::Q(j as u8)).scale(x))
            });
        if general.det_division_free().is_zero() {
            return Ok(report(None, true));
        }
        // small and generic points first; then the full grid, on which a
        // nonzero polynomial of degree <= n per variable cannot vanish
        let generic = (1..=4i64).map(|t| {
            (0..k as i64)
                .map(|j| 1 + (t * (j + 1) * (j + 3)) % 17)
                .collect()
        });
        for q in grid(k, 1).chain(generic).chain(grid(k, n as i64)) {
            let s = combination(n, &basis, &q);
            if invertible(&s) {
                return Ok(report(Some(s), true));
            }
        }
        unreachable!("nonzero determinant polynomial vanishes on the whole grid");
    }

    for q in grid(k, 2).take(4096) {
        let s = combination(n, &basis, &q);
        if invertible(&s) {
            return Ok(report(Some(s), true));
        }
    }
    Ok(report(None, false))
}
