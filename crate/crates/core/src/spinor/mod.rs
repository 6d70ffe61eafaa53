//! Spinor field operators over the `xi` representation and their spatial
//! parity behaviour.

pub mod intertwiner;

use num_traits::{One, Zero};

use crate::algebra::generator::{metric, Generator, LORENTZ_PAIRS};
use crate::algebra::scalar::{GaussRational, Rational};
use crate::algebra::structure::ParameterPoint;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::matrix_reps::clifford::pauli;
use crate::weyl::{xi_rep, WeylElement, XiRepConfig};

pub use intertwiner::{intertwiner_search, IntertwinerReport};

/// Dirac matrices in the standard representation:
/// `gamma_0 = diag(1, -1)`, `gamma_k = [[0, sigma_k], [-sigma_k, 0]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiracSet {
    pub gamma: [CMatrix; 4],
    pub gamma5: CMatrix,
}

pub fn build_dirac() -> DiracSet {
    let s = pauli();
    let one = GaussRational::one();
    let e11 = CMatrix::from_rows(vec![
        vec![one.clone(), GaussRational::zero()],
        vec![GaussRational::zero(), GaussRational::zero()],
    ]);
    let e22 = CMatrix::from_rows(vec![
        vec![GaussRational::zero(), GaussRational::zero()],
        vec![GaussRational::zero(), one.clone()],
    ]);
    let e12 = CMatrix::from_rows(vec![
        vec![GaussRational::zero(), one.clone()],
        vec![GaussRational::zero(), GaussRational::zero()],
    ]);
    let e21 = e12.transpose();
    let g0 = &e11.kron(&s[0]) - &e22.kron(&s[0]);
    let gk = |k: usize| &e12.kron(&s[k]) - &e21.kron(&s[k]);
    let gamma = [g0, gk(1), gk(2), gk(3)];
    let gamma5 = (&(&(&gamma[0] * &gamma[1]) * &gamma[2]) * &gamma[3]).scale(&GaussRational::i());
    DiracSet { gamma, gamma5 }
}

impl DiracSet {
    pub fn relations_hold(&self) -> bool {
        let id = CMatrix::identity(4);
        let clifford = (0..4).all(|i| {
            (0..4).all(|j| {
                self.gamma[i].anticommutator(&self.gamma[j])
                    == id.scale(&GaussRational::from_int(2 * metric(i, j)))
            })
        });
        clifford
            && &self.gamma5 * &self.gamma5 == id
            && self
                .gamma
                .iter()
                .all(|g| g.anticommutator(&self.gamma5).is_zero())
    }
}

/// Signs, the free number `n`, and the three radicals with
/// `kappa1^2 = -M^2/L^2`, `kappa2^2 = -M^2`, `kappa3^2 = 1/L^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorOpConfig {
    pub zeta1: i8,
    pub zeta2: i8,
    pub n: Rational,
    pub kappa1: GaussRational,
    pub kappa2: GaussRational,
    pub kappa3: GaussRational,
}

impl SpinorOpConfig {
    /// In inverse parameters: `kappa1^2 = -lambda/mu`, `kappa2^2 = -1/mu`,
    /// `kappa3^2 = lambda`.
    pub fn check(&self, point: &ParameterPoint) -> Result<()> {
        for z in [self.zeta1, self.zeta2] {
            if z != 1 && z != -1 {
                return Err(Error::Invalid(format!("zeta must be +1 or -1, got {z}")));
            }
        }
        if point.mu.is_zero() {
            return Err(Error::Inconsistent(
                "the spinor operators need finite M".into(),
            ));
        }
        let mu_inv = point.mu.recip();
        let want = [-(&point.lambda * &mu_inv), -mu_inv, point.lambda.clone()];
        for (k, (kappa, w)) in [&self.kappa1, &self.kappa2, &self.kappa3]
            .into_iter()
            .zip(want)
            .enumerate()
        {
            if kappa * kappa != GaussRational::real(w.clone()) {
                return Err(Error::Inconsistent(format!(
                    "kappa{}^2 = {} but the point requires {}",
                    k + 1,
                    kappa * kappa,
                    GaussRational::real(w)
                )));
            }
        }
        Ok(())
    }
}

/// Square matrix of Weyl-algebra entries.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixWeylOperator {
    pub dim: usize,
    entries: Vec<WeylElement>,
}

impl MatrixWeylOperator {
    pub fn zero(dim: usize) -> Self {
        MatrixWeylOperator {
            dim,
            entries: vec![WeylElement::zero(); dim * dim],
        }
    }

    pub fn from_entries(dim: usize, entries: Vec<WeylElement>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(MatrixWeylOperator { dim, entries })
    }

    pub fn get(&self, r: usize, c: usize) -> &WeylElement {
        &self.entries[r * self.dim + c]
    }

    pub fn entries(&self) -> &[WeylElement] {
        &self.entries
    }

    /// Adds `m (x) w`: entry `(r, c)` gains `m[r][c] w`.
    pub fn add_tensor(&mut self, m: &CMatrix, w: &WeylElement) {
        assert_eq!(m.rows(), self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                let k = m.get(r, c);
                if !k.is_zero() {
                    let e = &mut self.entries[r * self.dim + c];
                    *e = std::mem::replace(e, WeylElement::zero()) + &w.scale(k);
                }
            }
        }
    }

    pub fn compose(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        let n = self.dim;
        let mut out = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = WeylElement::zero();
                for k in 0..n {
                    acc = acc + &self.get(r, k).product(o.get(k, c));
                }
                out.entries[r * n + c] = acc;
            }
        }
        out
    }

    /// Left multiplication by a constant matrix.
    pub fn left_mul(&self, m: &CMatrix) -> Self {
        let n = self.dim;
        let mut out = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = WeylElement::zero();
                for k in 0..n {
                    let s = m.get(r, k);
                    if !s.is_zero() {
                        acc = acc + &self.get(k, c).scale(s);
                    }
                }
                out.entries[r * n + c] = acc;
            }
        }
        out
    }

    /// Right multiplication by a constant matrix.
    pub fn right_mul(&self, m: &CMatrix) -> Self {
        let n = self.dim;
        let mut out = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = WeylElement::zero();
                for k in 0..n {
                    let s = m.get(k, c);
                    if !s.is_zero() {
                        acc = acc + &self.get(r, k).scale(s);
                    }
                }
                out.entries[r * n + c] = acc;
            }
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        MatrixWeylOperator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn block(&self, r0: usize, c0: usize, n: usize) -> Self {
        let mut out = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                out.entries[r * n + c] = self.get(r0 + r, c0 + c).clone();
            }
        }
        out
    }
}

/// Spatial parity applied to every entry.
pub fn parity_transform(op: &MatrixWeylOperator) -> MatrixWeylOperator {
    MatrixWeylOperator {
        dim: op.dim,
        entries: op.entries.iter().map(|e| e.parity()).collect(),
    }
}

/// The four pieces of the spinor operators, each a list of
/// `(4x4 matrix, orbital operator)` pairs, before signs and radicals.
struct Pieces {
    p: Vec<(CMatrix, WeylElement)>,
    x: Vec<(CMatrix, WeylElement)>,
    i: Vec<(CMatrix, WeylElement)>,
    f: Vec<(CMatrix, WeylElement)>,
}

fn pieces(xi: &XiRepConfig) -> Pieces {
    let d = build_dirac();
    let img = xi_rep(xi);
    let up = |i: usize| GaussRational::from_int(metric(i, i));
    let p = (0..4)
        .map(|i| {
            (
                d.gamma[i].clone(),
                img[Generator::p(i).index()].scale(&up(i)),
            )
        })
        .collect();
    let x = (0..4)
        .map(|i| {
            (
                &d.gamma[i] * &d.gamma5,
                img[Generator::x(i).index()].scale(&up(i)),
            )
        })
        .collect();
    let i = vec![(d.gamma5.clone(), img[Generator::Id.index()].clone())];
    let f = LORENTZ_PAIRS
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| {
            (
                &d.gamma[a] * &d.gamma[b],
                img[k].scale(&GaussRational::from_int(metric(a, a) * metric(b, b))),
            )
        })
        .collect();
    Pieces { p, x, i, f }
}

fn signed(z: i8) -> GaussRational {
    GaussRational::from_int(z as i64)
}

/// `D = gamma_i p^i - z1 z2 k1 gamma_i gamma5 x^i - z2 k2 gamma5 I
///      - z1 k3 sum_{i<j} gamma_i gamma_j F^ij - n`.
pub fn spinor_op4(
    cfg: &SpinorOpConfig,
    point: &ParameterPoint,
    xi: &XiRepConfig,
) -> Result<MatrixWeylOperator> {
    cfg.check(point)?;
    let pc = pieces(xi);
    let one = CMatrix::identity(1);
    Ok(assemble(cfg, &pc, &one, &one))
}

/// The eight-component operator: `sigma0 (x) (p-term, F-term, n)` and
/// `sigma3 (x) (x-term, I-term)`.
pub fn spinor_op8(
    cfg: &SpinorOpConfig,
    point: &ParameterPoint,
    xi: &XiRepConfig,
) -> Result<MatrixWeylOperator> {
    cfg.check(point)?;
    let pc = pieces(xi);
    let s = pauli();
    Ok(assemble(cfg, &pc, &s[0], &s[3]))
}

fn assemble(
    cfg: &SpinorOpConfig,
    pc: &Pieces,
    even: &CMatrix,
    odd: &CMatrix,
) -> MatrixWeylOperator {
    let dim = even.rows() * 4;
    let mut op = MatrixWeylOperator::zero(dim);
    let mut add = |outer: &CMatrix, list: &[(CMatrix, WeylElement)], c: &GaussRational| {
        if c.is_zero() {
            return;
        }
        for (m, w) in list {
            op.add_tensor(&outer.kron(m).scale(c), w);
        }
    };
    let (z1, z2) = (signed(cfg.zeta1), signed(cfg.zeta2));
    add(even, &pc.p, &GaussRational::one());
    add(odd, &pc.x, &-(&(&z1 * &z2) * &cfg.kappa1));
    add(odd, &pc.i, &-(&z2 * &cfg.kappa2));
    add(even, &pc.f, &-(&z1 * &cfg.kappa3));
    let n = GaussRational::real(cfg.n.clone());
    add(even, &[(CMatrix::identity(4), WeylElement::one())], &-n);
    op
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat_int;

    fn unit_config() -> (SpinorOpConfig, ParameterPoint, XiRepConfig) {
        let cfg = SpinorOpConfig {
            zeta1: 1,
            zeta2: 1,
            n: rat_int(1),
            kappa1: GaussRational::one(),
            kappa2: GaussRational::one(),
            kappa3: GaussRational::one(),
        };
        let point = ParameterPoint::new(rat_int(1), rat_int(1), rat_int(-1), rat_int(0)).unwrap();
        let xi = XiRepConfig::new(rat_int(1), rat_int(1), rat_int(1)).unwrap();
        (cfg, point, xi)
    }

    #[test]
    fn dirac_relations() {
        assert!(build_dirac().relations_hold());
    }

    #[test]
    fn kappa_mismatch_rejected() {
        let (mut cfg, point, xi) = unit_config();
        cfg.kappa2 = GaussRational::from_int(2);
        assert!(matches!(
            spinor_op4(&cfg, &point, &xi),
            Err(Error::Inconsistent(_))
        ));
        let (cfg, mut point, xi) = unit_config();
        point.mu = rat_int(0);
        assert!(spinor_op8(&cfg, &point, &xi).is_err());
    }

    #[test]
    fn eight_component_blocks() {
        let (cfg, point, xi) = unit_config();
        let d8 = spinor_op8(&cfg, &point, &xi).unwrap();
        let d4 = spinor_op4(&cfg, &point, &xi).unwrap();
        assert_eq!(d8.block(0, 0, 4), d4);
        assert!(d8.block(0, 4, 4).is_zero());
        assert!(d8.block(4, 0, 4).is_zero());
        // sigma3 negates exactly the terms that carry zeta2
        let mut flipped = cfg.clone();
        flipped.zeta2 = -1;
        assert_eq!(
            d8.block(4, 4, 4),
            spinor_op4(&flipped, &point, &xi).unwrap()
        );
    }

    #[test]
    fn parity_is_involution() {
        let (cfg, point, xi) = unit_config();
        let d = spinor_op8(&cfg, &point, &xi).unwrap();
        assert_eq!(parity_transform(&parity_transform(&d)), d);
        assert_ne!(parity_transform(&d), d);
    }
}
