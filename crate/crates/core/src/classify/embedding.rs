//! Identification of a semisimple HLM algebra with `o(G6)`:
//! `J_ij = F_ij`, `J_i5 = B x_i + D p_i`, `J_i6 = E x_i + G p_i`, `J_56 = A I`.
//!
//! Writing `N = [[mu, eta], [eta, lambda]]` in the `(x, p)` basis and
//! `u = (B, D)`, `v = (E, G)`, the relations reduce to `u.N.u = -g5`,
//! `v.N.v = -g6`, `u.N.v = 0` and `A = BG - DE`. Taking `v = t R N u` with
//! `R` the quarter turn solves the last two and gives `A = t g5`,
//! `g6 = t^2 det(N) g5`.

use num_traits::{One, Signed, Zero};

use crate::algebra::families::build_family;
use crate::algebra::generator::{Generator, DIM};
use crate::algebra::lie::LieBracket;
use crate::algebra::scalar::{rat_int, rational_sqrt, GaussRational, Rational};
use crate::algebra::structure::{Family, ParameterPoint, StructureConstants};
use crate::error::{Error, Result};

const SEARCH_BOX: i64 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingCoefficients {
    pub a: GaussRational,
    pub b: GaussRational,
    pub d: GaussRational,
    pub e: GaussRational,
    pub g: GaussRational,
    pub eps5: i8,
    pub eps6: i8,
    /// The two extra metric entries; equal to `eps5`, `eps6` when normalized.
    pub g5: Rational,
    pub g6: Rational,
    pub normalized: bool,
}

impl EmbeddingCoefficients {
    /// `G6 = diag(1, -1, -1, -1, g5, g6)`.
    pub fn metric(&self) -> Vec<Rational> {
        vec![
            rat_int(1),
            rat_int(-1),
            rat_int(-1),
            rat_int(-1),
            self.g5.clone(),
            self.g6.clone(),
        ]
    }

    /// Coefficient vector of `J_ab` (0-based, indices 4 and 5 are the two
    /// extra directions) over the fifteen generators.
    pub fn j_image(&self, a: usize, b: usize) -> Vec<GaussRational> {
        let mut v = vec![GaussRational::zero(); DIM];
        if a == b {
            return v;
        }
        if a > b {
            return self.j_image(b, a).into_iter().map(|c| -c).collect();
        }
        match (a, b) {
            (i, j) if j < 4 => {
                let (s, g) = Generator::lorentz(i, j).unwrap();
                v[g.index()] = GaussRational::from_int(s);
            }
            (i, 4) => {
                v[Generator::x(i).index()] = self.b.clone();
                v[Generator::p(i).index()] = self.d.clone();
            }
            (i, 5) if i < 4 => {
                v[Generator::x(i).index()] = self.e.clone();
                v[Generator::p(i).index()] = self.g.clone();
            }
            _ => v[Generator::Id.index()] = self.a.clone(),
        }
        v
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Finds embedding coefficients for a semisimple point. A normalized metric
/// (`g5, g6 = +-1`) is returned whenever one exists among small integer
/// search vectors, preferring `prefer = (eps5, eps6)` if given; otherwise a
/// rescaled rational metric. The result is always certified by substitution.
pub fn solve_embedding(
    point: &ParameterPoint,
    prefer: Option<(i8, i8)>,
) -> Result<EmbeddingCoefficients> {
    let (lambda, mu, eta) = (&point.lambda, &point.mu, &point.eta);
    let det = lambda * mu - eta * eta;
    if det.is_zero() {
        return Err(Error::Degenerate(
            "lambda*mu - eta^2 = 0, the algebra is not semisimple".into(),
        ));
    }
    let q = |b: &Rational, d: &Rational| b * b * mu + d * d * lambda + rat_int(2) * b * d * eta;
    let det_root = rational_sqrt(&det.abs());

    let mut first_nonzero: Option<(Rational, Rational, Rational)> = None;
    let mut first_normalized: Option<(Rational, Rational, Rational)> = None;
    let mut preferred: Option<(Rational, Rational, Rational)> = None;
    'search: for k in 1..=SEARCH_BOX {
        for bi in -k..=k {
            for di in -k..=k {
                if bi.abs().max(di.abs()) != k || bi < 0 || (bi == 0 && di < 0) {
                    continue;
                }
                let (b, d) = (rat_int(bi), rat_int(di));
                let c = q(&b, &d);
                if c.is_zero() {
                    continue;
                }
                if first_nonzero.is_none() {
                    first_nonzero = Some((b.clone(), d.clone(), c.clone()));
                }
                if det_root.is_none() {
                    break 'search;
                }
                if let Some(r) = rational_sqrt(&c.abs()) {
                    let cand = (b / &r, d / &r, &c / (&r * &r));
                    if first_normalized.is_none() {
                        first_normalized = Some(cand.clone());
                    }
                    let eps5 = -sign(&c);
                    match prefer {
                        Some((p5, _)) if p5 == eps5 => {
                            preferred = Some(cand);
                            break 'search;
                        }
                        None => break 'search,
                        _ => {}
                    }
                }
            }
        }
    }

    let normalized = preferred.or(first_normalized);
    let emb = match (normalized, det_root) {
        (Some((b, d, c)), Some(root)) => {
            let t = root.recip();
            build(&b, &d, &t, &c, &det, lambda, mu, eta, true)
        }
        _ => {
            let (b, d, c) = first_nonzero.ok_or_else(|| {
                Error::NoSolution("quadratic form vanishes on the search box".into())
            })?;
            build(&b, &d, &Rational::one(), &c, &det, lambda, mu, eta, false)
        }
    };
    let residuals = check_embedding(point, &emb)?;
    if !residuals.is_empty() {
        return Err(Error::NoSolution(format!(
            "embedding failed substitution check on {} relations",
            residuals.len()
        )));
    }
    Ok(emb)
}

#[allow(clippy::too_many_arguments)]
fn build(
    b: &Rational,
    d: &Rational,
    t: &Rational,
    c: &Rational,
    det: &Rational,
    lambda: &Rational,
    mu: &Rational,
    eta: &Rational,
    normalized: bool,
) -> EmbeddingCoefficients {
    // N u
    let w1 = mu * b + eta * d;
    let w2 = eta * b + lambda * d;
    let e = t * &w2;
    let g = -(t * &w1);
    let g5 = -c.clone();
    let g6 = t * t * det * &g5;
    let a = t * &g5;
    EmbeddingCoefficients {
        a: GaussRational::real(a),
        b: GaussRational::real(b.clone()),
        d: GaussRational::real(d.clone()),
        e: GaussRational::real(e),
        g: GaussRational::real(g),
        eps5: sign(&g5),
        eps6: sign(&g6),
        g5,
        g6,
        normalized,
    }
}

/// Index pairs `((a,b),(c,d))` of `J` generators violating
/// `[J_ab, J_cd] = i f (G_bc J_ad - G_ac J_bd + G_ad J_bc - G_bd J_ac)`.
pub fn so_relation_failures(
    alg: &impl LieBracket<GaussRational>,
    image: impl Fn(usize, usize) -> Vec<GaussRational>,
    metric: &[Rational],
    f: &Rational,
) -> Vec<((usize, usize), (usize, usize))> {
    let n = metric.len();
    let pairs = super::reference::pairs(n);
    let jf = GaussRational::imag(f.clone());
    let gm = |a: usize, b: usize| {
        if a == b {
            metric[a].clone()
        } else {
            Rational::zero()
        }
    };
    let mut bad = Vec::new();
    for (x, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in pairs.iter().skip(x + 1) {
            let lhs = alg.bracket_of(&image(a, b), &image(c, d));
            let mut rhs = vec![GaussRational::zero(); lhs.len()];
            for (s, p, q, g) in [
                (1, a, d, gm(b, c)),
                (-1, b, d, gm(a, c)),
                (1, b, c, gm(a, d)),
                (-1, a, c, gm(b, d)),
            ] {
                if g.is_zero() {
                    continue;
                }
                let k = jf.scale(&(g * rat_int(s)));
                for (r, v) in rhs.iter_mut().zip(image(p, q)) {
                    *r = &*r + &(&k * &v);
                }
            }
            if lhs != rhs {
                bad.push(((a, b), (c, d)));
            }
        }
    }
    bad
}

/// Substitutes the embedding into the HLM table at `point` and returns the
/// failing relations (empty when certified).
pub fn check_embedding(
    point: &ParameterPoint,
    emb: &EmbeddingCoefficients,
) -> Result<Vec<((usize, usize), (usize, usize))>> {
    let sc: StructureConstants<GaussRational> =
        build_family(Family::Hlm, None)?.substitute(point, None)?;
    Ok(so_relation_failures(
        &sc,
        |a, b| emb.j_image(a, b),
        &emb.metric(),
        &point.f,
    ))
}
