//! Index-level Lie algebra machinery shared by every bracket table:
//! Jacobi residuals, adjoint matrices, dense tables and basis changes.

use rayon::prelude::*;

use super::scalar::{Field, Ring};
use crate::linalg::Matrix;

/// Anything that can produce the coefficient vector of `[e_a, e_b]`.
pub trait LieBracket<C: Ring>: Sync {
    fn dim(&self) -> usize;
    fn bracket_vec(&self, a: usize, b: usize) -> Vec<C>;

    /// `[u, v]` for arbitrary coefficient vectors.
    fn bracket_of(&self, u: &[C], v: &[C]) -> Vec<C> {
        let n = self.dim();
        let mut out = vec![C::zero(); n];
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for (b, vb) in v.iter().enumerate() {
                if vb.is_zero() || a == b {
                    continue;
                }
                let w = ua.clone() * vb;
                for (o, c) in out.iter_mut().zip(self.bracket_vec(a, b)) {
                    if !c.is_zero() {
                        *o = o.clone() + &(w.clone() * &c);
                    }
                }
            }
        }
        out
    }
}

/// Bracket table stored densely: `table[a * n + b]` is `[e_a, e_b]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseAlgebra<C> {
    pub names: Vec<String>,
    table: Vec<Vec<C>>,
}

impl<C: Ring> DenseAlgebra<C> {
    pub fn zero(names: Vec<String>) -> Self {
        let n = names.len();
        DenseAlgebra {
            names,
            table: vec![vec![C::zero(); n]; n * n],
        }
    }

    pub fn from_bracket(alg: &impl LieBracket<C>, names: Vec<String>) -> Self {
        let n = alg.dim();
        assert_eq!(names.len(), n);
        let mut d = Self::zero(names);
        for a in 0..n {
            for b in 0..n {
                d.table[a * n + b] = alg.bracket_vec(a, b);
            }
        }
        d
    }

    /// Sets `[e_a, e_b] = v` and `[e_b, e_a] = -v`.
    pub fn set(&mut self, a: usize, b: usize, v: Vec<C>) {
        let n = self.names.len();
        self.table[b * n + a] = v.iter().map(|c| -c.clone()).collect();
        self.table[a * n + b] = v;
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> DenseAlgebra<D> {
        DenseAlgebra {
            names: self.names.clone(),
            table: self
                .table
                .iter()
                .map(|v| v.iter().map(&f).collect())
                .collect(),
        }
    }
}

impl<C: Field> DenseAlgebra<C> {
    /// Structure constants in the basis `e'_a = sum_b P[a][b] e_b`.
    /// Returns `None` when `P` is singular.
    pub fn change_basis(&self, p: &Matrix<C>) -> Option<Self> {
        let n = self.names.len();
        let pinv = p.inverse()?;
        let rows: Vec<Vec<C>> = (0..n).map(|a| p.row(a).to_vec()).collect();
        let mut out = Self::zero(self.names.iter().map(|s| format!("{s}'")).collect());
        for a in 0..n {
            for b in a + 1..n {
                let v = self.bracket_of(&rows[a], &rows[b]);
                // v is in the old basis; old e_e = sum_f pinv[e][f] e'_f
                let mut w = vec![C::zero(); n];
                for (e, ve) in v.iter().enumerate() {
                    if ve.is_zero() {
                        continue;
                    }
                    for (f, wf) in w.iter_mut().enumerate() {
                        let c = pinv.get(e, f);
                        if !c.is_zero() {
                            *wf = wf.clone() + &(ve.clone() * c);
                        }
                    }
                }
                out.set(a, b, w);
            }
        }
        Some(out)
    }
}

impl<C: Ring> LieBracket<C> for DenseAlgebra<C> {
    fn dim(&self) -> usize {
        self.names.len()
    }
    fn bracket_vec(&self, a: usize, b: usize) -> Vec<C> {
        self.table[a * self.names.len() + b].clone()
    }
}

/// Nonzero cyclic sums `[[a,b],c] + [[b,c],a] + [[c,a],b]` over all
/// unordered triples `a < b < c`.
pub fn jacobi_residuals_indexed<C: Ring>(
    alg: &impl LieBracket<C>,
) -> Vec<((usize, usize, usize), Vec<C>)> {
    let n = alg.dim();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c))))
        .collect();
    triples
        .par_iter()
        .filter_map(|&(a, b, c)| {
            let mut total = vec![C::zero(); n];
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                let xy = alg.bracket_vec(x, y);
                let mut unit = vec![C::zero(); n];
                unit[z] = C::one();
                for (t, v) in total.iter_mut().zip(alg.bracket_of(&xy, &unit)) {
                    *t = t.clone() + &v;
                }
            }
            total
                .iter()
                .any(|v| !v.is_zero())
                .then_some(((a, b, c), total))
        })
        .collect()
}

/// `ad_a` as a matrix whose column `b` is the coefficient vector of `[a, b]`.
pub fn adjoint<C: Ring>(alg: &impl LieBracket<C>, a: usize) -> Matrix<C> {
    let n = alg.dim();
    let mut m = Matrix::zeros(n, n);
    for b in 0..n {
        for (c, v) in alg.bracket_vec(a, b).into_iter().enumerate() {
            m.set(c, b, v);
        }
    }
    m
}

/// `K(a, b) = trace(ad_a ad_b)`.
pub fn killing_matrix<C: Ring>(alg: &impl LieBracket<C>) -> Matrix<C> {
    let n = alg.dim();
    let ads: Vec<Matrix<C>> = (0..n).map(|a| adjoint(alg, a)).collect();
    let mut k = Matrix::zeros(n, n);
    for a in 0..n {
        for b in a..n {
            let mut t = C::zero();
            for c in 0..n {
                for d in 0..n {
                    let x = ads[a].get(c, d);
                    if x.is_zero() {
                        continue;
                    }
                    let y = ads[b].get(d, c);
                    if !y.is_zero() {
                        t = t + &(x.clone() * y);
                    }
                }
            }
            k.set(a, b, t.clone());
            k.set(b, a, t);
        }
    }
    k
}
