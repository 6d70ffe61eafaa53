//! The eight-dimensional Clifford construction.

use num_traits::{One, Zero};

use super::{images_from_so6, Provenance, Representation};
use crate::algebra::scalar::{rat, rat_int, GaussRational, Rational};
use crate::algebra::structure::ParameterPoint;
use crate::classify::EmbeddingCoefficients;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

/// `sigma_0 .. sigma_3`.
pub fn pauli() -> [CMatrix; 4] {
    let z = GaussRational::zero;
    let o = GaussRational::one;
    let i = GaussRational::i;
    [
        CMatrix::from_rows(vec![vec![o(), z()], vec![z(), o()]]),
        CMatrix::from_rows(vec![vec![z(), o()], vec![o(), z()]]),
        CMatrix::from_rows(vec![vec![z(), -i()], vec![i(), z()]]),
        CMatrix::from_rows(vec![vec![o(), z()], vec![z(), -o()]]),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct GammaSet {
    pub gammas: [CMatrix; 6],
    /// `G6_aa` read off from `Gamma_a^2`.
    pub metric6: Vec<Rational>,
}

impl GammaSet {
    /// `{Gamma_a, Gamma_b} - 2 G_ab` is zero for every pair.
    pub fn clifford_relations_hold(&self) -> bool {
        let id = CMatrix::identity(8);
        (0..6).all(|a| {
            (a..6).all(|b| {
                let g = if a == b {
                    GaussRational::real(rat_int(2) * &self.metric6[a])
                } else {
                    GaussRational::zero()
                };
                self.gammas[a].anticommutator(&self.gammas[b]) == id.scale(&g)
            })
        })
    }

    /// `F_ab = i f [Gamma_a, Gamma_b] / 4`.
    pub fn spin_generator(&self, f: &Rational, a: usize, b: usize) -> CMatrix {
        let c = GaussRational::imag(f * rat(1, 4));
        self.gammas[a].commutator(&self.gammas[b]).scale(&c)
    }
}

pub fn build_gammas() -> GammaSet {
    let s = pauli();
    let i = GaussRational::i();
    let t = |a: usize, b: usize, c: usize| s[a].kron(&s[b]).kron(&s[c]);
    let gammas = [
        t(2, 3, 0),
        t(2, 2, 1).scale(&i),
        t(2, 2, 2).scale(&i),
        t(2, 2, 3).scale(&i),
        t(2, 1, 0).scale(&-i.clone()),
        t(1, 0, 0),
    ];
    let metric6 = gammas
        .iter()
        .map(|g| {
            (g * g)
                .as_scalar()
                .filter(|c| c.is_real())
                .map(|c| c.re)
                .expect("gamma matrices square to real scalars")
        })
        .collect();
    GammaSet { gammas, metric6 }
}

/// The eight-dimensional representation at `point`. The embedding must be
/// normalized with the Clifford metric's signs `(eps5, eps6) = (-1, +1)`.
pub fn gamma_rep(point: &ParameterPoint, emb: &EmbeddingCoefficients) -> Result<Representation> {
    let gs = build_gammas();
    if !emb.normalized || emb.g5 != gs.metric6[4] || emb.g6 != gs.metric6[5] {
        return Err(Error::Inconsistent(format!(
            "embedding metric (g5, g6) = ({}, {}) does not match the Clifford metric (-1, 1)",
            emb.g5, emb.g6
        )));
    }
    let images = images_from_so6(emb, |a, b| gs.spin_generator(&point.f, a, b))?;
    Ok(Representation {
        dim: 8,
        images,
        point: Some(point.clone()),
        embedding: Some(emb.clone()),
        provenance: Provenance::Clifford8,
    })
}

/// [`gamma_rep`] with the embedding solved for the Clifford signs.
pub fn clifford_rep_at(point: &ParameterPoint) -> Result<Representation> {
    let emb = crate::classify::solve_embedding(point, Some((-1, 1)))?;
    gamma_rep(point, &emb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_and_squares() {
        let gs = build_gammas();
        let want: Vec<Rational> = [1, -1, -1, -1, -1, 1].iter().map(|&k| rat_int(k)).collect();
        assert_eq!(gs.metric6, want);
        assert!(gs.clifford_relations_hold());
        let g5 = &gs.gammas[5];
        for r in 0..8 {
            for c in 0..8 {
                let want = if (r + 4 == c) || (c + 4 == r) { 1 } else { 0 };
                assert_eq!(g5.get(r, c), &GaussRational::from_int(want));
            }
        }
    }
}
