//! Pseudo-orthogonal algebras built straight from their defining relations,
//! used as classification oracles.

use num_traits::Zero;

use crate::algebra::lie::{killing_matrix, DenseAlgebra};
use crate::algebra::scalar::{rat_int, Rational};
use crate::linalg::inertia;

/// Index pairs `(a, b)`, `a < b`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// `diag(+1 x p, -1 x q)`.
pub fn signature_metric(p: usize, q: usize) -> Vec<Rational> {
    std::iter::repeat_n(rat_int(1), p)
        .chain(std::iter::repeat_n(rat_int(-1), q))
        .collect()
}

fn pair_slot(pairs: &[(usize, usize)], a: usize, b: usize) -> Option<(Rational, usize)> {
    if a == b {
        return None;
    }
    let (lo, hi, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
    let k = pairs.iter().position(|&p| p == (lo, hi)).unwrap();
    Some((rat_int(s), k))
}

/// Real `so(G)` for a diagonal metric `G`, basis `J_ab` (a < b) with
/// `[J_ab, J_cd] = G_bc J_ad - G_ac J_bd + G_ad J_bc - G_bd J_ac`.
pub fn so_metric(g: &[Rational]) -> DenseAlgebra<Rational> {
    so_semidirect_impl(g, false)
}

/// `so(G) |x R^n` with `[J_ab, T_c] = G_bc T_a - G_ac T_b` and abelian `T`.
pub fn so_semidirect(g: &[Rational]) -> DenseAlgebra<Rational> {
    so_semidirect_impl(g, true)
}

fn so_semidirect_impl(g: &[Rational], translations: bool) -> DenseAlgebra<Rational> {
    let n = g.len();
    let ps = pairs(n);
    let m = ps.len();
    let mut names: Vec<String> = ps.iter().map(|(a, b)| format!("J{a}{b}")).collect();
    if translations {
        names.extend((0..n).map(|c| format!("T{c}")));
    }
    let dim = names.len();
    let mut alg = DenseAlgebra::zero(names);
    let metric = |a: usize, b: usize| {
        if a == b {
            g[a].clone()
        } else {
            Rational::zero()
        }
    };
    for (x, &(a, b)) in ps.iter().enumerate() {
        for (y, &(c, d)) in ps.iter().enumerate().skip(x + 1) {
            let mut v = vec![Rational::zero(); dim];
            for (s, p, q, gg) in [
                (1, a, d, metric(b, c)),
                (-1, b, d, metric(a, c)),
                (1, b, c, metric(a, d)),
                (-1, a, c, metric(b, d)),
            ] {
                if gg.is_zero() {
                    continue;
                }
                if let Some((sign, k)) = pair_slot(&ps, p, q) {
                    v[k] = &v[k] + &(sign * gg * rat_int(s));
                }
            }
            alg.set(x, y, v);
        }
        if translations {
            for c in 0..n {
                let mut v = vec![Rational::zero(); dim];
                v[m + a] = &v[m + a] + &metric(b, c);
                v[m + b] = &v[m + b] - &metric(a, c);
                alg.set(x, m + c, v);
            }
        }
    }
    alg
}

/// Killing inertia `(n_minus, n_plus, n_zero)` of `so(p, q)`.
pub fn so_inertia(p: usize, q: usize) -> (usize, usize, usize) {
    inertia(&killing_matrix(&so_metric(&signature_metric(p, q))))
}

/// Killing inertia of `so(p, q) |x R^(p+q)`.
pub fn semidirect_inertia(p: usize, q: usize) -> (usize, usize, usize) {
    inertia(&killing_matrix(&so_semidirect(&signature_metric(p, q))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lie::jacobi_residuals_indexed;

    #[test]
    fn reference_algebras_are_lie() {
        assert!(jacobi_residuals_indexed(&so_metric(&signature_metric(2, 4))).is_empty());
        assert!(jacobi_residuals_indexed(&so_semidirect(&signature_metric(1, 4))).is_empty());
    }

    #[test]
    fn compact_algebra_has_negative_killing_form() {
        assert_eq!(so_inertia(0, 3), (3, 0, 0));
        assert_eq!(so_inertia(3, 0), (3, 0, 0));
        // so(1,2): one compact rotation, two boosts
        assert_eq!(so_inertia(1, 2), (1, 2, 0));
    }
}
