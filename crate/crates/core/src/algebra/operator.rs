//! Associative operator algebras (matrices, differential operators) and the
//! homomorphism check of a Lie bracket table against operator commutators.

use rayon::prelude::*;

use super::lie::LieBracket;
use super::scalar::GaussRational;
use crate::linalg::CMatrix;

pub trait Operator: Clone + PartialEq + Send + Sync {
    fn op_mul(&self, o: &Self) -> Self;
    fn op_add(&self, o: &Self) -> Self;
    fn op_scale(&self, c: &GaussRational) -> Self;
    fn zero_like(&self) -> Self;
    fn op_is_zero(&self) -> bool;

    fn op_sub(&self, o: &Self) -> Self {
        self.op_add(&o.op_scale(&GaussRational::from_int(-1)))
    }

    fn op_commutator(&self, o: &Self) -> Self {
        self.op_mul(o).op_sub(&o.op_mul(self))
    }
}

impl Operator for CMatrix {
    fn op_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn op_add(&self, o: &Self) -> Self {
        self + o
    }
    fn op_scale(&self, c: &GaussRational) -> Self {
        self.scale(c)
    }
    fn zero_like(&self) -> Self {
        CMatrix::zeros(self.rows(), self.cols())
    }
    fn op_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// `sum_k c_k images[k]`.
pub fn combination<O: Operator>(images: &[O], coeffs: &[GaussRational]) -> O {
    let mut acc = images[0].zero_like();
    for (im, c) in images.iter().zip(coeffs) {
        if !num_traits::Zero::is_zero(c) {
            acc = acc.op_add(&im.op_scale(c));
        }
    }
    acc
}

/// Residual `[rho(a), rho(b)] - rho([a, b])` for one pair.
pub fn pair_residual<O: Operator>(
    alg: &impl LieBracket<GaussRational>,
    images: &[O],
    a: usize,
    b: usize,
) -> O {
    images[a]
        .op_commutator(&images[b])
        .op_sub(&combination(images, &alg.bracket_vec(a, b)))
}

/// Unordered pairs `(a, b)`, `a < b`, whose residual is nonzero.
pub fn homomorphism_failures<O: Operator>(
    alg: &impl LieBracket<GaussRational>,
    images: &[O],
) -> Vec<(usize, usize)> {
    let n = alg.dim();
    assert_eq!(images.len(), n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut bad: Vec<(usize, usize)> = pairs
        .par_iter()
        .copied()
        .filter(|&(a, b)| !pair_residual(alg, images, a, b).op_is_zero())
        .collect();
    bad.sort();
    bad
}

/// Indices of images that fail to commute with `c`.
pub fn non_commuting<O: Operator>(c: &O, images: &[O]) -> Vec<usize> {
    images
        .par_iter()
        .enumerate()
        .filter(|(_, g)| !c.op_commutator(g).op_is_zero())
        .map(|(k, _)| k)
        .collect()
}
