//! The six-dimensional representation at `lambda = mu = 0`, `eta != 0`.

use num_traits::Zero;

use super::{images_from_so6, scaled_vector_generator, Provenance, Representation};
use crate::algebra::generator::DIM;
use crate::algebra::scalar::{rat_int, GaussRational, Rational};
use crate::algebra::structure::ParameterPoint;
use crate::classify::solve_embedding;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Matrix};

fn unit(i: usize, j: usize) -> Matrix<Rational> {
    let mut m = Matrix::zeros(6, 6);
    m.set(i, j, rat_int(1));
    m
}

/// The fifteen named matrices `M^i_j = -e^i_j + e^j_i` and
/// `N^i_j = e^i_j + e^j_i`.
pub fn m_basis() -> Vec<(String, Matrix<Rational>)> {
    let mut out = Vec::with_capacity(DIM);
    let m = |i, j| &unit(j, i) - &unit(i, j);
    let n = |i, j| &unit(i, j) + &unit(j, i);
    for i in 1..=4 {
        for j in i + 1..=4 {
            out.push((format!("M^{i}_{j}"), m(i, j)));
        }
    }
    out.push(("M^0_5".into(), m(0, 5)));
    for j in 1..=4 {
        out.push((format!("N^0_{j}"), n(0, j)));
    }
    for i in 1..=4 {
        out.push((format!("N^{i}_5"), n(i, 5)));
    }
    out
}

/// Coordinates of every image in [`m_basis`].
pub fn m_coordinates(rep: &Representation) -> Result<Vec<Vec<GaussRational>>> {
    if rep.dim != 6 {
        return Err(Error::Dimension {
            expected: 6,
            found: rep.dim,
        });
    }
    let basis = m_basis();
    let a = CMatrix::from_fn(36, basis.len(), |r, k| {
        GaussRational::real(basis[k].1.entries()[r].clone())
    });
    rep.images
        .iter()
        .map(|im| {
            a.solve(im.entries())
                .ok_or_else(|| Error::NoSolution("image outside the span of the basis".into()))
        })
        .collect()
}

pub fn six_dim_rep(point: &ParameterPoint) -> Result<Representation> {
    if !point.lambda.is_zero() || !point.mu.is_zero() || point.eta.is_zero() {
        return Err(Error::Invalid(
            "the six-dimensional representation needs lambda = mu = 0 and eta != 0".into(),
        ));
    }
    let emb = solve_embedding(point, Some((-1, 1)))?;
    if !emb.normalized || (emb.eps5, emb.eps6) != (-1, 1) {
        return Err(Error::NoSolution(
            "no normalized embedding with signs (-1, +1)".into(),
        ));
    }
    let metric = emb.metric();
    let images = images_from_so6(&emb, |a, b| {
        scaled_vector_generator(&metric, &point.f, a, b)
    })?;
    Ok(Representation {
        dim: 6,
        images,
        point: Some(point.clone()),
        embedding: Some(emb),
        provenance: Provenance::Real6,
    })
}
