use num_traits::Zero;
use serde_json::{json, Value};

use hlm_core::algebra::operator::non_commuting;
use hlm_core::algebra::scalar::format_rational;
use hlm_core::algebra::{build_family, Family, Generator, ParameterPoint, Rational, ALL};
use hlm_core::classify::{
    killing_inertia, semisimple_value, verify_classification, EmbeddingCoefficients, ExtendedSquare,
};
use hlm_core::io;
use hlm_core::matrix_reps::{
    casimir_matrix, clifford_rep_at, six_dim_rep, verify_images, verify_rep, CasimirKind,
    Representation,
};
use hlm_core::spinor::{
    intertwiner_search, parity_transform, spinor_op4, spinor_op8, MatrixWeylOperator,
    SpinorOpConfig,
};
use hlm_core::weyl::{scalar_operator, scalar_terms, xi_rep, WeylElement, XiRepConfig};
use hlm_core::{Error, Result};

use crate::{Flags, VerbOutput};

pub(crate) fn dispatch(verb: &str, flags: &Flags) -> Result<VerbOutput> {
    match verb {
        "classify" => classify(flags),
        "jacobi" => jacobi(flags),
        "killing" => killing(flags),
        "rep-verify" => rep_verify(flags),
        "casimir" => casimir(flags),
        "field-op" => field_op(flags),
        "export" => export(flags),
        other => Err(Error::Invalid(format!("unknown verb `{other}`"))),
    }
}

fn q(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn names(gs: &[(Generator, Generator)]) -> Value {
    gs.iter()
        .map(|(a, b)| json!([a.name(), b.name()]))
        .collect()
}

fn point_json(p: &ParameterPoint) -> Value {
    json!({"f": q(&p.f), "lambda": q(&p.lambda), "mu": q(&p.mu), "eta": q(&p.eta)})
}

fn embedding_json(e: &EmbeddingCoefficients) -> Value {
    json!({
        "A": e.a.to_string(), "B": e.b.to_string(), "D": e.d.to_string(),
        "E": e.e.to_string(), "G": e.g.to_string(),
        "g5": q(&e.g5), "g6": q(&e.g6), "normalized": e.normalized,
    })
}

fn classify(flags: &Flags) -> Result<VerbOutput> {
    let p = flags.squares_point()?;
    let r = verify_classification(&p)?;
    Ok(VerbOutput {
        result: json!({
            "L2": p.l2.to_string(),
            "M2": p.m2.to_string(),
            "H2": p.h2.to_string(),
            "f": q(&p.f),
            "semisimple_value": q(&r.semisimple_value),
            "inertia": [r.inertia.0, r.inertia.1, r.inertia.2],
            "type": r.algebra_type.name(),
            "killing_det_zero": r.killing_det_zero,
            "rescaled": r.rescaled,
            "parameters": point_json(&r.parameters),
            "embedding": r.embedding.as_ref().map(embedding_json),
        }),
        pass: true,
    })
}

fn family(flags: &Flags) -> Result<Family> {
    Family::parse(flags.str_or("family", "hlm"))
}

fn jacobi(flags: &Flags) -> Result<VerbOutput> {
    let fam = family(flags)?;
    let sc = build_family(fam, None)?;
    let res = sc.jacobi_residuals();
    let shown: Vec<Value> = res
        .iter()
        .take(10)
        .map(|((a, b, c), _)| json!([a.name(), b.name(), c.name()]))
        .collect();
    Ok(VerbOutput {
        result: json!({
            "family": fam.name(),
            "triples": 455,
            "residuals_nonzero": res.len(),
            "first_nonzero": shown,
        }),
        pass: res.is_empty(),
    })
}

fn killing(flags: &Flags) -> Result<VerbOutput> {
    let p = flags.squares_point()?;
    let (pt, rescaled) = p.parameter_point()?;
    let sc = build_family(Family::Hlm, None)?.substitute(&pt, None)?;
    let inertia = killing_inertia(&sc)?;
    let sv = semisimple_value(&p.l2, &p.m2, &p.h2, &p.f)?;
    Ok(VerbOutput {
        result: json!({
            "parameters": point_json(&pt),
            "rescaled": rescaled,
            "inertia": [inertia.0, inertia.1, inertia.2],
            "det_zero": inertia.2 > 0,
            "semisimple_value": q(&sv),
        }),
        pass: true,
    })
}

/// The 8-dim Clifford representation, or the 6-dim one for `--dim 6`.
fn representation(flags: &Flags) -> Result<(Representation, ParameterPoint)> {
    let dim = flags.dim(8, &[6, 8])?;
    let (pt, _) = flags.squares_point()?.parameter_point()?;
    let rep = if dim == 8 {
        clifford_rep_at(&pt)?
    } else {
        six_dim_rep(&pt)?
    };
    Ok((rep, pt))
}

fn rep_verify(flags: &Flags) -> Result<VerbOutput> {
    let (rep, pt) = representation(flags)?;
    let sc = build_family(Family::Hlm, None)?.substitute(&pt, None)?;
    let r = verify_rep(&rep, &sc);
    Ok(VerbOutput {
        result: json!({
            "dim": rep.dim,
            "provenance": rep.provenance.to_string(),
            "parameters": point_json(&pt),
            "embedding": rep.embedding.as_ref().map(embedding_json),
            "pairs_checked": r.pairs_checked,
            "failures": names(&r.failures),
        }),
        pass: r.pass(),
    })
}

fn casimir(flags: &Flags) -> Result<VerbOutput> {
    if flags.square("H2")? == ExtendedSquare::Inf {
        return Err(Error::Invalid("casimir needs a finite H2".into()));
    }
    flags.dim(8, &[8])?;
    let which = CasimirKind::parse(flags.str_or("which", "C2"))?;
    let (rep, pt) = representation(flags)?;
    let emb = rep
        .embedding
        .clone()
        .expect("Clifford representation carries its embedding");
    let c = casimir_matrix(&rep, &emb, which)?;
    let bad: Vec<&str> = non_commuting(&c, &rep.images)
        .into_iter()
        .map(|k| ALL[k].name())
        .collect();
    Ok(VerbOutput {
        result: json!({
            "which": which.to_string(),
            "dim": rep.dim,
            "parameters": point_json(&pt),
            "central": bad.is_empty(),
            "non_commuting": bad,
            "scalar": c.as_scalar().map(|s| s.to_string()),
        }),
        pass: bad.is_empty(),
    })
}

fn xi_config(flags: &Flags) -> Result<XiRepConfig> {
    XiRepConfig::new(
        flags.rational_or("a", 0)?,
        flags.xi_h()?,
        flags.rational_or("hbar", 1)?,
    )
}

/// The spinor operator for `--dim 4|8`; radicals default to rational roots.
fn spinor_operator(flags: &Flags, dim: usize) -> Result<(MatrixWeylOperator, SpinorOpConfig)> {
    let xi = xi_config(flags)?;
    let lambda = flags.square_or_inf("L2")?.inverse("L^2")?;
    let mu = flags.square("M2")?.inverse("M^2")?;
    if mu.is_zero() {
        return Err(Error::Invalid("the spinor operators need finite M2".into()));
    }
    let point = ParameterPoint::new(
        flags.rational_or("f", 1)?,
        lambda.clone(),
        mu.clone(),
        xi.algebra_point().eta,
    )?;
    let mu_inv = mu.recip();
    let cfg = SpinorOpConfig {
        zeta1: flags.sign("zeta1")?,
        zeta2: flags.sign("zeta2")?,
        n: flags.rational_or("n", 1)?,
        kappa1: flags.radical("kappa1", &-(&lambda * &mu_inv))?,
        kappa2: flags.radical("kappa2", &-mu_inv)?,
        kappa3: flags.radical("kappa3", &lambda)?,
    };
    let op = if dim == 4 {
        spinor_op4(&cfg, &point, &xi)?
    } else {
        spinor_op8(&cfg, &point, &xi)?
    };
    Ok((op, cfg))
}

/// The scalar operator; the `xi` representation realizes `L2 = M2 = inf`
/// only, so other points are rejected.
fn scalar_field_operator(flags: &Flags) -> Result<(WeylElement, XiRepConfig, ParameterPoint)> {
    let xi = xi_config(flags)?;
    if flags.square_or_inf("L2")? != ExtendedSquare::Inf
        || flags.square_or_inf("M2")? != ExtendedSquare::Inf
    {
        return Err(Error::Inconsistent(
            "the xi representation realizes L2 = M2 = inf only".into(),
        ));
    }
    let pt = xi.algebra_point();
    Ok((scalar_operator(&pt, &xi)?, xi, pt))
}

fn field_op(flags: &Flags) -> Result<VerbOutput> {
    let dim = flags.dim(8, &[1, 4, 8])?;
    if dim == 1 {
        let (op, xi, pt) = scalar_field_operator(flags)?;
        let bad: Vec<&str> = non_commuting(&op, &xi_rep(&xi))
            .into_iter()
            .map(|k| ALL[k].name())
            .collect();
        let scalar = (op.num_terms() <= 1
            && op.terms().all(|(a, b, _)| a == &[0; 4] && b == &[0; 4]))
        .then(|| op.coeff([0; 4], [0; 4]).to_string());
        let terms: serde_json::Map<String, Value> = scalar_terms(&pt.lambda, &pt.mu, &pt.eta)
            .iter()
            .map(|(t, c)| (t.name().to_string(), q(c)))
            .collect();
        return Ok(VerbOutput {
            result: json!({
                "dim": 1,
                "parameters": point_json(&pt),
                "coefficients": terms,
                "central": bad.is_empty(),
                "non_commuting": bad,
                "scalar": scalar,
                "operator": io::export_weyl_value(&op),
            }),
            pass: bad.is_empty(),
        });
    }
    let (op, cfg) = spinor_operator(flags, dim)?;
    let report = intertwiner_search(&op, &parity_transform(&op))?;
    let invariant = report.found.is_some();
    Ok(VerbOutput {
        result: json!({
            "dim": dim,
            "kappa": [cfg.kappa1.to_string(), cfg.kappa2.to_string(), cfg.kappa3.to_string()],
            "weyl_terms": op.entries().iter().map(|e| e.num_terms()).sum::<usize>(),
            "parity_invariant": invariant,
            "intertwiner": io::export_intertwiner_value(&report),
        }),
        pass: report.residual == 0,
    })
}

fn export(flags: &Flags) -> Result<VerbOutput> {
    let what = flags.require("what")?;
    let (document, extra) = match what {
        "algebra" => {
            let sc = build_family(family(flags)?, None)?;
            let sc = if ["L2", "M2", "H2"].iter().any(|k| flags.has(k)) {
                let (pt, _) = flags.squares_point()?.parameter_point()?;
                let mut num = sc.substitute(&pt, None)?.to_symbolic();
                num.family = sc.family;
                num
            } else {
                sc
            };
            let text = io::export_algebra(&sc);
            let back = io::import_algebra(&text)?;
            let equal = back == sc;
            (
                text.clone(),
                json!({"reimport_equal": equal, "round_trip": io::export_algebra(&back) == text}),
            )
        }
        "representation" => {
            let (rep, pt) = representation(flags)?;
            let text = io::export_representation(&rep);
            let back = io::import_representation(&text)?;
            let sc = build_family(Family::Hlm, None)?.substitute(&pt, None)?;
            let failures = verify_images(&sc, &back.images);
            (
                text.clone(),
                json!({
                    "reimport_equal": back.images == rep.images,
                    "reimport_failures": failures.len(),
                    "round_trip": io::export_representation(&back) == text,
                }),
            )
        }
        "operator" => {
            let dim = flags.dim(8, &[1, 4, 8])?;
            let op = if dim == 1 {
                let (w, _, _) = scalar_field_operator(flags)?;
                MatrixWeylOperator::from_entries(1, vec![w])?
            } else {
                spinor_operator(flags, dim)?.0
            };
            let text = io::export_operator(&op);
            let back = io::import_operator(&text)?;
            (
                text.clone(),
                json!({"reimport_equal": back == op, "round_trip": io::export_operator(&back) == text}),
            )
        }
        other => {
            return Err(Error::Invalid(format!(
                "--what must be algebra, representation or operator, got `{other}`"
            )))
        }
    };
    let ok = extra.as_object().unwrap().iter().all(|(k, v)| {
        if k == "reimport_failures" {
            v == 0
        } else {
            v == true
        }
    });
    let mut result = json!({
        "what": what,
        "bytes": document.len(),
        "path": flags.get("out"),
    });
    let map = result.as_object_mut().unwrap();
    for (k, v) in extra.as_object().unwrap() {
        map.insert(k.clone(), v.clone());
    }
    match flags.get("out") {
        Some(path) => std::fs::write(path, &document)
            .map_err(|e| Error::Invalid(format!("cannot write {path}: {e}")))?,
        None => {
            let doc: Value = serde_json::from_str(&document).expect("export emits valid JSON");
            map.insert("document".into(), doc);
        }
    }
    Ok(VerbOutput { result, pass: ok })
}
