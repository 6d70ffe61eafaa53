//! Casimir operators of `o(G6)` evaluated in a matrix representation.
//!
//! `C1 = eps_ABCDEF J^AB J^CD J^EF`, `C2 = J_AB J^AB`,
//! `C3 = W_AB W^AB` with `W_AB = eps_ABCDEF J^CD J^EF`, `eps_012345 = +1`.

use std::fmt;

use num_traits::Zero;

use super::Representation;
use crate::algebra::generator::{permutation_sign, Generator};
use crate::algebra::scalar::GaussRational;
use crate::classify::reference::pairs;
use crate::classify::EmbeddingCoefficients;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CasimirKind {
    C1,
    C2,
    C3,
}

impl CasimirKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "C1" | "c1" | "1" => Ok(CasimirKind::C1),
            "C2" | "c2" | "2" => Ok(CasimirKind::C2),
            "C3" | "c3" | "3" => Ok(CasimirKind::C3),
            other => Err(Error::Invalid(format!("unknown Casimir `{other}`"))),
        }
    }
}

impl fmt::Display for CasimirKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CasimirKind::C1 => "C1",
            CasimirKind::C2 => "C2",
            CasimirKind::C3 => "C3",
        })
    }
}

/// `J_AB` for `A < B` from the generator images, in [`pairs`] order.
fn lower_j(rep: &Representation, emb: &EmbeddingCoefficients) -> Vec<CMatrix> {
    let img = |g: Generator| rep.image(g);
    pairs(6)
        .into_iter()
        .map(|(a, b)| match (a, b) {
            (i, j) if j < 4 => img(Generator::lorentz(i, j).unwrap().1).clone(),
            (i, 4) => &img(Generator::x(i)).scale(&emb.b) + &img(Generator::p(i)).scale(&emb.d),
            (i, 5) if i < 4 => {
                &img(Generator::x(i)).scale(&emb.e) + &img(Generator::p(i)).scale(&emb.g)
            }
            _ => img(Generator::Id).scale(&emb.a),
        })
        .collect()
}

pub fn casimir_matrix(
    rep: &Representation,
    emb: &EmbeddingCoefficients,
    which: CasimirKind,
) -> Result<CMatrix> {
    let metric = emb.metric();
    if metric.iter().any(|g| g.is_zero()) {
        return Err(Error::Degenerate("degenerate metric".into()));
    }
    let ps = pairs(6);
    let lower = lower_j(rep, emb);
    let raise = |a: usize, b: usize| -> GaussRational {
        GaussRational::real((&metric[a] * &metric[b]).recip())
    };
    let upper: Vec<CMatrix> = ps
        .iter()
        .zip(&lower)
        .map(|(&(a, b), m)| m.scale(&raise(a, b)))
        .collect();
    let n = rep.dim;
    let zero = CMatrix::zeros(n, n);
    let two = GaussRational::from_int(2);

    Ok(match which {
        // sum over ordered (A, B) is twice the sum over A < B
        CasimirKind::C2 => lower
            .iter()
            .zip(&upper)
            .fold(zero, |acc, (l, u)| &acc + &(l * u))
            .scale(&two),
        CasimirKind::C1 => {
            let mut acc = zero;
            for (x, &(a, b)) in ps.iter().enumerate() {
                for (y, &(c, d)) in ps.iter().enumerate() {
                    let uu = &upper[x] * &upper[y];
                    for (z, &(e, f)) in ps.iter().enumerate() {
                        let s = permutation_sign(&[a, b, c, d, e, f]);
                        if s != 0 {
                            acc = &acc + &(&uu * &upper[z]).scale(&GaussRational::from_int(s));
                        }
                    }
                }
            }
            acc.scale(&GaussRational::from_int(8))
        }
        CasimirKind::C3 => {
            let w: Vec<CMatrix> = ps
                .iter()
                .map(|&(a, b)| {
                    let mut acc = zero.clone();
                    for (y, &(c, d)) in ps.iter().enumerate() {
                        for (z, &(e, f)) in ps.iter().enumerate() {
                            let s = permutation_sign(&[a, b, c, d, e, f]);
                            if s != 0 {
                                acc = &acc
                                    + &(&upper[y] * &upper[z]).scale(&GaussRational::from_int(s));
                            }
                        }
                    }
                    acc.scale(&GaussRational::from_int(4))
                })
                .collect();
            let mut acc = zero;
            for (x, &(a, b)) in ps.iter().enumerate() {
                acc = &acc + &(&w[x] * &w[x]).scale(&raise(a, b));
            }
            acc.scale(&two)
        }
    })
}
