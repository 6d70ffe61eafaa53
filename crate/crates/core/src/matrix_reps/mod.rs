//! Exact matrix representations of the semisimple algebras.

pub mod casimir;
pub mod clifford;
pub mod six_dim;

use std::fmt;

use num_traits::Zero;

use crate::algebra::generator::{Generator, ALL, DIM};
use crate::algebra::lie::LieBracket;
use crate::algebra::operator::{homomorphism_failures, non_commuting, Operator};
use crate::algebra::scalar::{GaussRational, Rational};
use crate::algebra::structure::{NumericConstants, ParameterPoint, StructureConstants};
use crate::classify::reference::{pairs, so_metric};
use crate::classify::EmbeddingCoefficients;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Matrix};

pub use casimir::{casimir_matrix, CasimirKind};
pub use clifford::{build_gammas, clifford_rep_at, gamma_rep, GammaSet};
pub use six_dim::{m_basis, six_dim_rep};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Clifford8,
    Real6,
    Reference,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Clifford8 => "clifford8",
            Provenance::Real6 => "real6",
            Provenance::Reference => "reference",
        })
    }
}

/// Images of the basis generators, in generator order.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub dim: usize,
    pub images: Vec<CMatrix>,
    pub point: Option<ParameterPoint>,
    pub embedding: Option<EmbeddingCoefficients>,
    pub provenance: Provenance,
}

impl Representation {
    pub fn image(&self, g: Generator) -> &CMatrix {
        &self.images[g.index()]
    }
}

/// Images of the fifteen generators given the images `J_ab` of `o(G6)` and
/// the embedding: `F_ij = J_ij`, `x_i = (G J_i5 - D J_i6)/(BG - DE)`,
/// `p_i = (-E J_i5 + B J_i6)/(BG - DE)`, `I = J_56 / A` (labels 5, 6 are the
/// 0-based indices 4, 5).
pub fn images_from_so6(
    emb: &EmbeddingCoefficients,
    j: impl Fn(usize, usize) -> CMatrix,
) -> Result<Vec<CMatrix>> {
    let det = &(&emb.b * &emb.g) - &(&emb.d * &emb.e);
    let inv_det = det
        .inv()
        .ok_or_else(|| Error::Degenerate("BG - DE = 0".into()))?;
    let inv_a = emb
        .a
        .inv()
        .ok_or_else(|| Error::Degenerate("A = 0".into()))?;
    let mut images = Vec::with_capacity(DIM);
    for g in ALL {
        let m = match g {
            g if g.is_lorentz() => {
                let (i, k) = g.lorentz_indices().unwrap();
                j(i, k)
            }
            Generator::Id => j(4, 5).scale(&inv_a),
            g => {
                let idx = g.index();
                let i = (idx - 6) % 4;
                let (j5, j6) = (j(i, 4), j(i, 5));
                let comb = if idx < 10 {
                    &j5.scale(&-emb.e.clone()) + &j6.scale(&emb.b)
                } else {
                    &j5.scale(&emb.g) - &j6.scale(&emb.d)
                };
                comb.scale(&inv_det)
            }
        };
        images.push(m);
    }
    Ok(images)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepReport {
    pub pairs_checked: usize,
    pub failures: Vec<(Generator, Generator)>,
}

impl RepReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `[rho(a), rho(b)] = rho([a, b])` on all 105 unordered pairs.
pub fn verify_rep(rep: &Representation, sc: &NumericConstants) -> RepReport {
    RepReport {
        pairs_checked: DIM * (DIM - 1) / 2,
        failures: homomorphism_failures(sc, &rep.images)
            .into_iter()
            .map(|(a, b)| (ALL[a], ALL[b]))
            .collect(),
    }
}

/// Generic form for any bracket table and matching list of images.
pub fn verify_images(
    alg: &impl LieBracket<GaussRational>,
    images: &[CMatrix],
) -> Vec<(usize, usize)> {
    homomorphism_failures(alg, images)
}

/// True iff `c` commutes with every generator image.
pub fn centrality_check(c: &CMatrix, rep: &Representation) -> bool {
    non_commuting(c, &rep.images).is_empty()
}

/// Structure constants read off from the images: each commutator is
/// decomposed in the span of the images. Fails if the images are linearly
/// dependent or a commutator leaves their span.
pub fn structure_constants_from_rep(rep: &Representation) -> Result<NumericConstants> {
    let n = rep.dim * rep.dim;
    let basis = Matrix::from_fn(n, DIM, |r, k| rep.images[k].entries()[r].clone());
    if basis.rank() != DIM {
        return Err(Error::Degenerate(
            "generator images are linearly dependent".into(),
        ));
    }
    let mut sc = StructureConstants::empty(None);
    for a in 0..DIM {
        for b in a + 1..DIM {
            let c = rep.images[a].op_commutator(&rep.images[b]);
            let v = basis
                .solve(c.entries())
                .ok_or_else(|| Error::NoSolution("commutator outside the span of images".into()))?;
            sc.insert(ALL[a], ALL[b], v);
        }
    }
    Ok(sc)
}

/// Vector representation `M_ab = G_bb e_ab - G_aa e_ba` of `so(G)`, which
/// satisfies `[M_ab, M_cd] = G_bc M_ad - G_ac M_bd + G_ad M_bc - G_bd M_ac`.
pub fn vector_generator(g: &[Rational], a: usize, b: usize) -> Matrix<Rational> {
    let n = g.len();
    let mut m = Matrix::zeros(n, n);
    if a != b {
        m.set(a, b, g[b].clone());
        m.set(b, a, -g[a].clone());
    }
    m
}

/// The vector representation of the reference real algebra `so(G)`,
/// in the basis order of [`so_metric`].
pub fn reference_vector_rep(
    g: &[Rational],
) -> (
    Vec<CMatrix>,
    crate::algebra::lie::DenseAlgebra<GaussRational>,
) {
    let images = pairs(g.len())
        .into_iter()
        .map(|(a, b)| vector_generator(g, a, b).map(|r| GaussRational::real(r.clone())))
        .collect();
    (images, so_metric(g).map(|r| GaussRational::real(r.clone())))
}

/// `i f M_ab` as complex matrices.
pub(crate) fn scaled_vector_generator(g: &[Rational], f: &Rational, a: usize, b: usize) -> CMatrix {
    let c = GaussRational::imag(f.clone());
    vector_generator(g, a, b).map(|r| {
        if r.is_zero() {
            GaussRational::zero()
        } else {
            c.scale(r)
        }
    })
}
