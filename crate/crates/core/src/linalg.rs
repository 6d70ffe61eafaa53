//! Dense exact matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::algebra::scalar::{Field, GaussRational, Rational, Ring};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

pub type CMatrix = Matrix<GaussRational>;

impl<C: Ring> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[C] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.clone() * c)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> C {
        (0..self.rows.min(self.cols)).fold(C::zero(), |t, i| t + self.get(i, i))
    }

    pub fn commutator(&self, o: &Self) -> Self {
        &(self * o) - &(o * self)
    }

    pub fn anticommutator(&self, o: &Self) -> Self {
        &(self * o) + &(o * self)
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            self.get(i / o.rows, j / o.cols).clone() * o.get(i % o.rows, j % o.cols)
        })
    }

    /// Sub-block of size `r x c` starting at `(i0, j0)`.
    pub fn block(&self, i0: usize, j0: usize, r: usize, c: usize) -> Self {
        Self::from_fn(r, c, |i, j| self.get(i0 + i, j0 + j).clone())
    }

    /// Determinant by expansion over column subsets, without division.
    /// Usable over polynomial rings; `O(2^n n)` ring operations.
    pub fn det_division_free(&self) -> C {
        assert!(self.is_square() && self.rows <= 20);
        let n = self.rows;
        let mut dp: Vec<Option<C>> = vec![None; 1 << n];
        dp[0] = Some(C::one());
        for mask in 0usize..(1 << n) {
            let Some(v) = dp[mask].take() else { continue };
            if mask == (1 << n) - 1 {
                return v;
            }
            let r = mask.count_ones() as usize;
            for c in 0..n {
                if mask & (1 << c) != 0 || self.get(r, c).is_zero() {
                    continue;
                }
                let above = (mask >> (c + 1)).count_ones();
                let t = v.clone() * self.get(r, c);
                let t = if above % 2 == 1 { -t } else { t };
                let slot = &mut dp[mask | (1 << c)];
                *slot = Some(match slot.take() {
                    Some(old) => old + &t,
                    None => t,
                });
            }
        }
        C::zero()
    }

    /// Returns `Some(c)` when the matrix equals `c * identity`.
    pub fn as_scalar(&self) -> Option<C> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 {
            C::zero()
        } else {
            self.get(0, 0).clone()
        };
        (*self == Self::identity(self.rows).scale(&c)).then_some(c)
    }
}

impl<'b, C: Ring> Add<&'b Matrix<C>> for &Matrix<C> {
    type Output = Matrix<C>;
    fn add(self, o: &'b Matrix<C>) -> Matrix<C> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }
}

impl<'b, C: Ring> Sub<&'b Matrix<C>> for &Matrix<C> {
    type Output = Matrix<C>;
    fn sub(self, o: &'b Matrix<C>) -> Matrix<C> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        }
    }
}

impl<'b, C: Ring> Mul<&'b Matrix<C>> for &Matrix<C> {
    type Output = Matrix<C>;
    fn mul(self, o: &'b Matrix<C>) -> Matrix<C> {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out: Matrix<C> = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] = out.data[idx].clone() + &(a.clone() * b);
                    }
                }
            }
        }
        out
    }
}

impl<C: Ring> Neg for &Matrix<C> {
    type Output = Matrix<C>;
    fn neg(self) -> Matrix<C> {
        self.map(|c| -c.clone())
    }
}

impl<C: Ring + fmt::Display> fmt::Debug for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref<C: Field>(m: &mut Matrix<C>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let inv = C::one() / m.get(r, c);
        for j in c..m.cols {
            let v = m.get(r, j).clone() * &inv;
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r || m.get(i, c).is_zero() {
                continue;
            }
            let factor = m.get(i, c).clone();
            for j in c..m.cols {
                let s = m.get(r, j);
                if !s.is_zero() {
                    let v = m.get(i, j).clone() - &(factor.clone() * s);
                    m.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl<C: Field> Matrix<C> {
    pub fn rank(&self) -> usize {
        rref(&mut self.clone()).len()
    }

    pub fn det(&self) -> C {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = C::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return C::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = det * &piv;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone() / &piv;
                for j in c..n {
                    let v = m.get(i, j).clone() - &(factor.clone() * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                C::one()
            } else {
                C::zero()
            }
        });
        let piv = rref(&mut aug);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    /// Basis of the right null space `{v : M v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<C>> {
        let mut m = self.clone();
        let piv = rref(&mut m);
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![C::zero(); self.cols];
                v[fc] = C::one();
                for (r, &pc) in piv.iter().enumerate() {
                    v[pc] = -m.get(r, fc).clone();
                }
                v
            })
            .collect()
    }

    /// Solves `M x = b`; `None` when inconsistent. Picks free variables 0.
    pub fn solve(&self, b: &[C]) -> Option<Vec<C>> {
        assert_eq!(b.len(), self.rows);
        let n = self.cols;
        let mut aug = Matrix::from_fn(self.rows, n + 1, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let piv = rref(&mut aug);
        if piv.last() == Some(&n) {
            return None;
        }
        let mut x = vec![C::zero(); n];
        for (r, &pc) in piv.iter().enumerate() {
            x[pc] = aug.get(r, n).clone();
        }
        Some(x)
    }
}

/// Signature of a real symmetric matrix as `(n_minus, n_plus, n_zero)`,
/// computed by exact congruence diagonalization with pivoting.
pub fn inertia(m: &Matrix<Rational>) -> (usize, usize, usize) {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let (mut neg, mut pos) = (0, 0);
    for k in 0..n {
        if a.get(k, k).is_zero() {
            if let Some(p) = (k + 1..n).find(|&i| !a.get(i, i).is_zero()) {
                swap_sym(&mut a, k, p);
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_zero())
            {
                // e_i -> e_i + e_j makes the diagonal entry 2 a_ij.
                add_sym(&mut a, i, j, &Rational::one());
                swap_sym(&mut a, k, i);
            } else {
                break;
            }
        }
        let piv = a.get(k, k).clone();
        if piv.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in k + 1..n {
            if a.get(r, k).is_zero() {
                continue;
            }
            let f = -(a.get(r, k).clone() / &piv);
            add_sym(&mut a, r, k, &f);
        }
    }
    (neg, pos, n - neg - pos)
}

/// Congruence by `e_i -> e_i + f e_j`.
fn add_sym(a: &mut Matrix<Rational>, i: usize, j: usize, f: &Rational) {
    let n = a.rows();
    for c in 0..n {
        let v = a.get(i, c).clone() + &(f.clone() * a.get(j, c));
        a.set(i, c, v);
    }
    for r in 0..n {
        let v = a.get(r, i).clone() + &(f.clone() * a.get(r, j));
        a.set(r, i, v);
    }
}

fn swap_sym(a: &mut Matrix<Rational>, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.rows();
    for c in 0..n {
        a.data.swap(i * n + c, j * n + c);
    }
    for r in 0..n {
        a.data.swap(r * n + i, r * n + j);
    }
}
