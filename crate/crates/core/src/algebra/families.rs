//! Bracket tables of the canonical, ansatz, HLM and LM families.
//!
//! All four share one template (the general Lorentz-covariant ansatz); each
//! family fills the fourteen slots with its own polynomials.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::generator::{levi_civita4, metric, Generator, DIM, LORENTZ_PAIRS};
use super::poly::{ParamPoly, Var};
use super::scalar::GaussRational;
use super::structure::{CoeffVec, Family, StructureConstants};
use crate::error::{Error, Result};

/// The fourteen slots of the general Lorentz-covariant bracket ansatz.
#[derive(Clone, Debug)]
pub struct AnsatzSlots {
    pub phi: ParamPoly,
    pub px_id: ParamPoly,
    pub px_f: ParamPoly,
    pub px_eps: ParamPoly,
    pub pp_f: ParamPoly,
    pub pp_eps: ParamPoly,
    pub xx_f: ParamPoly,
    pub xx_eps: ParamPoly,
    pub pi_x: ParamPoly,
    pub pi_p: ParamPoly,
    pub xi_x: ParamPoly,
    pub xi_p: ParamPoly,
    pub fx: ParamPoly,
    pub fp: ParamPoly,
}

impl AnsatzSlots {
    /// Slot `k` (1-based) is `i * q_k`.
    pub fn symbolic() -> Self {
        let q = |k| ParamPoly::i_var(Var::Q(k));
        AnsatzSlots {
            phi: q(1),
            px_id: q(2),
            px_f: q(3),
            px_eps: q(4),
            pp_f: q(5),
            pp_eps: q(6),
            xx_f: q(7),
            xx_eps: q(8),
            pi_x: q(9),
            pi_p: q(10),
            xi_x: q(11),
            xi_p: q(12),
            fx: q(13),
            fp: q(14),
        }
    }

    /// The HLM slots in terms of `f, lambda, mu, eta`.
    pub fn hlm() -> Self {
        let p = |v| ParamPoly::var(v);
        let iff = ParamPoly::i_var(Var::F);
        let z = ParamPoly::zero();
        AnsatzSlots {
            phi: iff.clone(),
            px_id: iff.clone(),
            px_f: &iff * &p(Var::Eta),
            px_eps: z.clone(),
            pp_f: &iff * &p(Var::Lambda),
            pp_eps: z.clone(),
            xx_f: &iff * &p(Var::Mu),
            xx_eps: z,
            pi_x: &iff * &p(Var::Lambda),
            pi_p: -(&iff * &p(Var::Eta)),
            xi_x: &iff * &p(Var::Eta),
            xi_p: -(&iff * &p(Var::Mu)),
            fx: iff.clone(),
            fp: iff,
        }
    }

    pub fn canonical() -> Self {
        let ih = ParamPoly::i_var(Var::Hbar);
        let z = ParamPoly::zero();
        AnsatzSlots {
            phi: ih.clone(),
            px_id: ih.clone(),
            px_f: z.clone(),
            px_eps: z.clone(),
            pp_f: z.clone(),
            pp_eps: z.clone(),
            xx_f: z.clone(),
            xx_eps: z.clone(),
            pi_x: z.clone(),
            pi_p: z.clone(),
            xi_x: z.clone(),
            xi_p: z,
            fx: ih.clone(),
            fp: ih,
        }
    }

    /// Written out directly with `hbar = 1` units: `[p_i,p_j] = i lambda F_ij`,
    /// `[x_i,x_j] = i mu F_ij`, `[p_i,I] = i lambda x_i`, `[x_i,I] = -i mu p_i`.
    pub fn lm() -> Self {
        let i = ParamPoly::constant(GaussRational::i());
        let il = ParamPoly::i_var(Var::Lambda);
        let im = ParamPoly::i_var(Var::Mu);
        let z = ParamPoly::zero();
        AnsatzSlots {
            phi: i.clone(),
            px_id: i.clone(),
            px_f: z.clone(),
            px_eps: z.clone(),
            pp_f: il.clone(),
            pp_eps: z.clone(),
            xx_f: im.clone(),
            xx_eps: z.clone(),
            pi_x: il,
            pi_p: z.clone(),
            xi_x: z,
            xi_p: -im,
            fx: i.clone(),
            fp: i,
        }
    }

    pub fn build(&self, family: Option<Family>) -> StructureConstants {
        let mut sc = StructureConstants::empty(family);
        let unit = |g: Generator, c: &ParamPoly| -> CoeffVec<ParamPoly> {
            let mut v = vec![ParamPoly::zero(); DIM];
            v[g.index()] = c.clone();
            v
        };
        let add = |v: &mut CoeffVec<ParamPoly>, g: Generator, c: ParamPoly| {
            let k = g.index();
            v[k] = &v[k] + &c;
        };
        // coefficient vector of s * F_ij (zero for i == j)
        let f_term = |v: &mut CoeffVec<ParamPoly>, i: usize, j: usize, c: &ParamPoly| {
            if let Some((s, g)) = Generator::lorentz(i, j) {
                add(v, g, c.scale(&GaussRational::from_int(s)));
            }
        };
        // eps_ijkl F^kl = sum_{k,l} eps_ijkl g^kk g^ll F_kl
        let eps_term = |v: &mut CoeffVec<ParamPoly>, i: usize, j: usize, c: &ParamPoly| {
            if c.is_zero() {
                return;
            }
            for k in 0..4 {
                for l in 0..4 {
                    let e = levi_civita4(i, j, k, l) * metric(k, k) * metric(l, l);
                    if e != 0 {
                        f_term(v, k, l, &c.scale(&GaussRational::from_int(e)));
                    }
                }
            }
        };

        // [F_ij, F_kl] = phi (g_jk F_il - g_ik F_jl + g_il F_jk - g_jl F_ik)
        for (a, &(i, j)) in LORENTZ_PAIRS.iter().enumerate() {
            for (b, &(k, l)) in LORENTZ_PAIRS.iter().enumerate().skip(a + 1) {
                let mut v = vec![ParamPoly::zero(); DIM];
                for (s, p, q, g) in [
                    (1, i, l, metric(j, k)),
                    (-1, j, l, metric(i, k)),
                    (1, j, k, metric(i, l)),
                    (-1, i, k, metric(j, l)),
                ] {
                    if g != 0 {
                        f_term(
                            &mut v,
                            p,
                            q,
                            &self.phi.scale(&GaussRational::from_int(s * g)),
                        );
                    }
                }
                sc.insert(Generator::from_index(a), Generator::from_index(b), v);
            }
        }
        // [F_ij, p_k] = fp (g_jk p_i - g_ik p_j), same for x with fx
        for (a, &(i, j)) in LORENTZ_PAIRS.iter().enumerate() {
            for k in 0..4 {
                for (slot, gen) in [
                    (&self.fp, Generator::p as fn(usize) -> Generator),
                    (&self.fx, Generator::x),
                ] {
                    let mut v = vec![ParamPoly::zero(); DIM];
                    let gjk = metric(j, k);
                    let gik = metric(i, k);
                    if gjk != 0 {
                        add(&mut v, gen(i), slot.scale(&GaussRational::from_int(gjk)));
                    }
                    if gik != 0 {
                        add(&mut v, gen(j), slot.scale(&GaussRational::from_int(-gik)));
                    }
                    sc.insert(Generator::from_index(a), gen(k), v);
                }
            }
        }
        for i in 0..4 {
            for j in 0..4 {
                // [p_i, x_j] = A g_ij I + B F_ij + C eps_ijkl F^kl
                let mut v = vec![ParamPoly::zero(); DIM];
                if metric(i, j) != 0 {
                    add(
                        &mut v,
                        Generator::Id,
                        self.px_id.scale(&GaussRational::from_int(metric(i, j))),
                    );
                }
                f_term(&mut v, i, j, &self.px_f);
                eps_term(&mut v, i, j, &self.px_eps);
                sc.insert(Generator::p(i), Generator::x(j), v);
                if i < j {
                    let mut v = vec![ParamPoly::zero(); DIM];
                    f_term(&mut v, i, j, &self.pp_f);
                    eps_term(&mut v, i, j, &self.pp_eps);
                    sc.insert(Generator::p(i), Generator::p(j), v);
                    let mut v = vec![ParamPoly::zero(); DIM];
                    f_term(&mut v, i, j, &self.xx_f);
                    eps_term(&mut v, i, j, &self.xx_eps);
                    sc.insert(Generator::x(i), Generator::x(j), v);
                }
            }
            // [p_i, I] = alpha x_i + beta p_i ; [x_i, I] = gamma x_i + delta p_i
            let mut v = unit(Generator::x(i), &self.pi_x);
            add(&mut v, Generator::p(i), self.pi_p.clone());
            sc.insert(Generator::p(i), Generator::Id, v);
            let mut v = unit(Generator::x(i), &self.xi_x);
            add(&mut v, Generator::p(i), self.xi_p.clone());
            sc.insert(Generator::x(i), Generator::Id, v);
        }
        sc
    }
}

/// Builds the symbolic bracket table of a family, optionally binding some of
/// its parameters (to numbers or to other polynomials).
pub fn build_family(
    family: Family,
    overrides: Option<&HashMap<Var, ParamPoly>>,
) -> Result<StructureConstants> {
    let slots = match family {
        Family::Canonical => AnsatzSlots::canonical(),
        Family::Ansatz => AnsatzSlots::symbolic(),
        Family::Hlm => AnsatzSlots::hlm(),
        Family::Lm => AnsatzSlots::lm(),
    };
    let sc = slots.build(Some(family));
    match overrides {
        None => Ok(sc),
        Some(b) => {
            let legal = family.parameters();
            let mut keys: Vec<&Var> = b.keys().collect();
            keys.sort();
            if let Some(bad) = keys.into_iter().find(|v| !legal.contains(v)) {
                return Err(Error::IllegalOverride {
                    family: family.name().into(),
                    param: bad.name(),
                });
            }
            Ok(sc.specialize(b))
        }
    }
}

/// Bindings `q_k -> polynomial` that turn the ansatz into the HLM table.
pub fn ansatz_bindings_for_hlm() -> HashMap<Var, ParamPoly> {
    let h = AnsatzSlots::hlm();
    let mi = -GaussRational::i();
    let slots = [
        h.phi, h.px_id, h.px_f, h.px_eps, h.pp_f, h.pp_eps, h.xx_f, h.xx_eps, h.pi_x, h.pi_p,
        h.xi_x, h.xi_p, h.fx, h.fp,
    ];
    slots
        .into_iter()
        .enumerate()
        .map(|(k, p)| (Var::Q(k as u8 + 1), p.scale(&mi)))
        .collect()
}

/// Every `q_k` bound to one, i.e. every ansatz parameter equal to `i`.
pub fn ansatz_all_i() -> HashMap<Var, ParamPoly> {
    (1..=14).map(|k| (Var::Q(k), ParamPoly::one())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generator::Generator::*;
    use crate::algebra::scalar::{rat, rat_int};
    use crate::algebra::structure::ParameterPoint;

    fn coeff(v: &CoeffVec<ParamPoly>, g: Generator) -> String {
        v[g.index()].to_string()
    }

    fn only(v: &CoeffVec<ParamPoly>, g: Generator) -> bool {
        v.iter()
            .enumerate()
            .all(|(k, c)| k == g.index() || c.is_zero())
    }

    #[test]
    fn canonical_entries() {
        let sc = build_family(Family::Canonical, None).unwrap();
        let v = sc.bracket(P0, X0);
        assert_eq!(coeff(&v, Id), "i*hbar");
        assert!(only(&v, Id));
        // g_11 = -1
        assert_eq!(coeff(&sc.bracket(P1, X1), Id), "-i*hbar");
        assert!(sc.bracket(P1, P1).iter().all(|c| c.is_zero()));
        assert!(sc.bracket(P1, X2).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn hlm_entries() {
        let sc = build_family(Family::Hlm, None).unwrap();
        let v = sc.bracket(P1, P2);
        assert_eq!(coeff(&v, F12), "i*f*lambda");
        assert!(only(&v, F12));
        let v = sc.bracket(X1, X2);
        assert_eq!(coeff(&v, F12), "i*f*mu");
        assert!(sc.bracket(F01, P2).iter().all(|c| c.is_zero()));
        let v = sc.bracket(P0, Id);
        assert_eq!(coeff(&v, X0), "i*f*lambda");
        assert_eq!(coeff(&v, P0), "-i*f*eta");
    }

    #[test]
    fn lm_entry_reads_minus_i_mu() {
        let sc = build_family(Family::Lm, None).unwrap();
        let v = sc.bracket(X0, Id);
        assert_eq!(coeff(&v, P0), "-i*mu");
        assert!(only(&v, P0));
    }

    #[test]
    fn antisymmetry_is_structural() {
        let sc = build_family(Family::Ansatz, None).unwrap();
        for a in crate::algebra::generator::ALL {
            for b in crate::algebra::generator::ALL {
                let ab = sc.bracket(a, b);
                let ba = sc.bracket(b, a);
                assert!(ab.iter().zip(&ba).all(|(x, y)| (x + y).is_zero()));
            }
        }
    }

    #[test]
    fn illegal_override_rejected() {
        let b = HashMap::from([(Var::Eta, ParamPoly::zero())]);
        assert_eq!(
            build_family(Family::Canonical, Some(&b)).unwrap_err(),
            Error::IllegalOverride {
                family: "canonical".into(),
                param: "eta".into()
            }
        );
        assert_eq!(
            Family::parse("snyder").unwrap_err(),
            Error::UnknownFamily("snyder".into())
        );
    }

    #[test]
    fn substitution_examples() {
        let hlm = build_family(Family::Hlm, None).unwrap();
        let pt = ParameterPoint::new(rat_int(1), rat_int(1), rat_int(-1), rat(1, 2)).unwrap();
        let n = hlm.substitute(&pt, None).unwrap();
        let v = n.bracket(P0, X0);
        assert_eq!(v[Id.index()], GaussRational::i());
        assert!(v
            .iter()
            .enumerate()
            .all(|(k, c)| k == Id.index() || c.is_zero()));
        let v = n.bracket(P0, X1);
        assert_eq!(v[F01.index()], GaussRational::imag(rat(1, 2)));

        let pt = ParameterPoint::new(rat_int(1), rat(1, 4), rat(1, 9), rat_int(0)).unwrap();
        let v = hlm.substitute(&pt, None).unwrap().bracket(P0, Id);
        assert_eq!(v[X0.index()], GaussRational::imag(rat(1, 4)));
        assert!(v[P0.index()].is_zero());

        let ans = build_family(Family::Ansatz, None).unwrap();
        assert_eq!(
            ans.substitute(&pt, None).unwrap_err(),
            Error::Unbound("q1".into())
        );
    }

    #[test]
    fn adjoint_of_identity() {
        let can = build_family(Family::Canonical, None).unwrap();
        assert!(can.adjoint_matrix(Id).is_zero());
        let hlm = build_family(Family::Hlm, None).unwrap();
        let ad = hlm.adjoint_matrix(Id);
        let nonzero_cols: Vec<usize> = (0..DIM)
            .filter(|&b| (0..DIM).any(|c| !ad.get(c, b).is_zero()))
            .collect();
        assert_eq!(nonzero_cols, (6..14).collect::<Vec<_>>());
    }
}
