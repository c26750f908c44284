//! Dispatch of the single-shot verbs to the library.

use serde_json::{json, Map, Value};

use reesag::agcheck::{
    ag_check, find_hypersurface_parameters, hypersurface_report, socle_ag_criterion, socle_fgh, AGVerdict,
    SocleReport, WitnessTriple,
};
use reesag::monomial::MonoIdeal2;
use reesag::rees::{find_joint_reduction, find_parameter_reduction, reduction_number, rees_ideal};
use reesag::text::{parse_ideal, parse_poly};
use reesag::{Error, Field, IdealHandle, MonomialOrder, Poly, Result, Ring, RingRef};

use crate::args::{Cli, Command};
use crate::report::{Report, EXIT_CHECK_FAILED};

pub const DEFAULT_HYPERSURFACE: &str = "x^2 - y*z";

/// Variable names in effect for `cli`.
pub fn variables(cli: &Cli) -> Vec<String> {
    let default = match cli.command {
        Command::Hypersurface { .. } => "x,y,z",
        _ => "x,y",
    };
    cli.vars.as_deref().unwrap_or(default).split(',').map(|s| s.trim().to_string()).collect()
}

pub fn base_ring<F: Field>(field: F, cli: &Cli) -> Result<RingRef<F>> {
    let order = MonomialOrder::parse(&cli.order)?;
    Ring::new(field, &variables(cli), order)
}

fn polys<F: Field>(ps: &[Poly<F>]) -> Value {
    Value::Array(ps.iter().map(|p| Value::String(p.to_string())).collect())
}

fn ideal_value<F: Field>(i: &IdealHandle<F>) -> Value {
    json!({ "ideal": i.to_string(), "generators": polys(i.gens()) })
}

fn warn_not_m_primary<F: Field>(report: &mut Report, what: &str, i: &IdealHandle<F>) {
    if !i.is_m_primary() {
        report.warnings.push(format!("input not m-primary: {what}"));
    }
}

fn warn_field<F: Field>(report: &mut Report, ring: &RingRef<F>) {
    if ring.field().characteristic() == 0 {
        report.warnings.push("field q: random coefficients are small integers, genericity is weaker".into());
    }
}

pub fn witness_value<F: Field>(w: &WitnessTriple<F>) -> Value {
    json!({
        "f": w.f.to_string(),
        "g": w.g.to_string(),
        "h": w.h.to_string(),
        "I": w.i.to_string(),
        "J": w.j.to_string(),
        "IJ_basis": polys(&w.ij_basis),
        "mJ_basis": polys(&w.mj_basis),
        "trial": w.trial,
        "fallback": w.fallback,
    })
}

fn socle_value<F: Field>(s: &SocleReport<F>) -> Value {
    let residues = s.residues_mod_m2();
    let matrix: Vec<Value> = s.matrix().iter().map(|row| polys(row)).collect();
    json!({
        "a": s.a.to_string(),
        "b": s.b.to_string(),
        "c": s.c.to_string(),
        "f1": s.f1.to_string(),
        "f2": s.f2.to_string(),
        "g1": s.g1.to_string(),
        "g2": s.g2.to_string(),
        "residues_mod_m2": polys(&residues),
        "matrix": matrix,
        "socle_ideal": s.socle_ideal.to_string(),
        "mu": s.mu,
        "criterion_holds": s.criterion_holds(),
    })
}

fn verdict_result<F: Field>(report: &mut Report, v: &AGVerdict<F>) -> Value {
    match v {
        AGVerdict::AlmostGorenstein(w) => report.witness = Some(witness_value(w)),
        AGVerdict::Inconclusive { trials } => {
            report.warnings.push(format!("witness search exhausted {trials} trials; no claim either way"))
        }
        _ => {}
    }
    Value::String(v.name().to_string())
}

/// Parameters echoed in every report.
pub fn params(cli: &Cli) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("field".into(), json!(cli.field));
    p.insert("order".into(), json!(cli.order));
    p.insert("seed".into(), json!(cli.seed));
    p.insert("vars".into(), json!(variables(cli).join(",")));
    let mut put = |k: &str, v: Value| {
        p.insert(k.into(), v);
    };
    match &cli.command {
        Command::Gb { ideal }
        | Command::Mprimary { ideal }
        | Command::Vdim { ideal }
        | Command::Closure { ideal }
        | Command::Isclosed { ideal } => put("ideal", json!(ideal)),
        Command::Mingens { ideal } => {
            put("ideal", json!(ideal));
            put("mod", json!(cli.modulus));
        }
        Command::Nf { ideal, poly } | Command::Member { ideal, poly } => {
            put("ideal", json!(ideal));
            put("poly", json!(poly));
        }
        Command::Colon { i, j }
        | Command::Product { i, j }
        | Command::Intersect { i, j }
        | Command::Equal { i, j } => {
            put("I", json!(i));
            put("J", json!(j));
        }
        Command::Jointred { i, j } => {
            put("I", json!(i));
            put("J", json!(j));
            put("trials", json!(cli.trials));
        }
        Command::Power { ideal, k } => {
            put("ideal", json!(ideal));
            put("k", json!(k));
        }
        Command::Redno { q, i } => {
            put("Q", json!(q));
            put("I", json!(i));
            put("cap", json!(cli.cap));
        }
        Command::Findred { ideal } | Command::Agcheck { ideal } => {
            put("ideal", json!(ideal));
            put("trials", json!(cli.trials));
        }
        Command::Reesideal { ideal } => put("ideal", json!(ideal)),
        Command::Socle { q } => {
            put("Q", json!(q));
            put("trials", json!(cli.trials));
        }
        Command::Fgh { q } => put("Q", json!(q)),
        Command::Hypersurface { ell, a, b } => {
            put("ell", json!(ell));
            put("mod", json!(cli.modulus.as_deref().unwrap_or(DEFAULT_HYPERSURFACE)));
            put("a", json!(a));
            put("b", json!(b));
        }
        Command::ClaimSuite { tamper } => {
            put("trials", json!(cli.trials));
            put("tamper", json!(tamper));
        }
    }
    p
}

/// Run a single-shot verb, filling `report.result`, `witness` and
/// `warnings`. Library errors are returned for the caller to classify.
pub fn execute<F: Field>(field: F, cli: &Cli, report: &mut Report) -> Result<()> {
    let r = base_ring(field, cli)?;
    let id = |s: &str| parse_ideal(&r, s);
    let (seed, trials) = (cli.seed, cli.trials);
    report.result = match &cli.command {
        Command::Gb { ideal } => {
            let i = id(ideal)?;
            let b = i.basis();
            json!({ "basis": polys(b.elems()), "size": b.len() })
        }
        Command::Nf { ideal, poly } => {
            let nf = id(ideal)?.normal_form(&parse_poly(&r, poly)?)?;
            json!({ "normal_form": nf.to_string() })
        }
        Command::Member { ideal, poly } => {
            let i = id(ideal)?;
            let f = parse_poly(&r, poly)?;
            let rep = i.representation(&f)?;
            if let Some(rep) = &rep {
                report.witness = Some(json!({
                    "generators": polys(i.gens()),
                    "cofactors": polys(&rep.coeffs),
                }));
            }
            json!({ "member": rep.is_some() })
        }
        Command::Colon { i, j } => ideal_value(&id(i)?.colon(&id(j)?)?),
        Command::Product { i, j } => ideal_value(&id(i)?.product(&id(j)?)?),
        Command::Intersect { i, j } => ideal_value(&id(i)?.intersect(&id(j)?)?),
        Command::Power { ideal, k } => ideal_value(&id(ideal)?.power(*k)),
        Command::Equal { i, j } => json!({ "equal": id(i)?.equals(&id(j)?)? }),
        Command::Mingens { ideal } => {
            let i = id(ideal)?;
            let modulus = cli.modulus.as_deref().map(|m| parse_poly(&r, m)).transpose()?;
            match i.min_gens(modulus.as_ref()) {
                Ok(mu) => json!({ "mu": mu, "graded": true }),
                Err(Error::NotGraded) if modulus.is_none() => {
                    report.warnings.push("inhomogeneous input: counting generators at the origin".into());
                    warn_not_m_primary(report, "ideal", &i);
                    json!({ "mu": i.local_min_gens()?, "graded": false })
                }
                Err(e) => return Err(e),
            }
        }
        Command::Mprimary { ideal } => json!({ "m_primary": id(ideal)?.is_m_primary() }),
        Command::Vdim { ideal } => json!({ "vdim": id(ideal)?.vdim()? }),
        Command::Closure { ideal } => {
            let mono = MonoIdeal2::from_ideal(&id(ideal)?)?;
            let closure = mono.integral_closure()?;
            let vertices: Vec<Value> = mono.newton_polygon()?.vertices().iter().map(|&(a, b)| json!([a, b])).collect();
            json!({
                "closure": closure.to_string(),
                "integrally_closed": closure == mono,
                "newton_polygon": vertices,
                "colength": closure.colength()?,
            })
        }
        Command::Isclosed { ideal } => {
            let mono = MonoIdeal2::from_ideal(&id(ideal)?)?;
            json!({ "integrally_closed": mono.is_integrally_closed()? })
        }
        Command::Redno { q, i } => json!({ "reduction_number": reduction_number(&id(q)?, &id(i)?, cli.cap)? }),
        Command::Findred { ideal } => {
            warn_field(report, &r);
            let red = find_parameter_reduction(&id(ideal)?, seed, trials)?;
            report.witness = Some(json!({ "a": red.a.to_string(), "b": red.b.to_string() }));
            json!({
                "a": red.a.to_string(),
                "b": red.b.to_string(),
                "reduction_number": red.reduction_number,
                "trial": red.trial,
            })
        }
        Command::Reesideal { ideal } => {
            let i = id(ideal)?;
            warn_not_m_primary(report, "ideal", &i);
            let p = rees_ideal(&i)?;
            let map: Vec<Value> =
                p.t_names().iter().zip(&p.map).map(|(t, f)| Value::String(format!("{t} -> {f}"))).collect();
            json!({
                "ring": p.ring.names().join(","),
                "map": map,
                "generators": polys(p.k.gens()),
            })
        }
        Command::Jointred { i, j } => {
            warn_field(report, &r);
            let jr = find_joint_reduction(&id(i)?, &id(j)?, seed, trials)?;
            report.witness = Some(json!({ "a": jr.a.to_string(), "b": jr.b.to_string() }));
            json!({ "a": jr.a.to_string(), "b": jr.b.to_string(), "trial": jr.trial })
        }
        Command::Agcheck { ideal } => {
            warn_field(report, &r);
            let i = id(ideal)?;
            let rep = ag_check(&i, seed, trials)?;
            if rep.integrally_closed == Some(false) {
                report
                    .warnings
                    .push("not integrally closed: the witness search is not guaranteed to succeed".into());
            }
            let verdict = verdict_result(report, &rep.verdict);
            json!({
                "verdict": verdict,
                "reduction": {
                    "a": rep.reduction.a.to_string(),
                    "b": rep.reduction.b.to_string(),
                    "reduction_number": rep.reduction.reduction_number,
                    "trial": rep.reduction.trial,
                },
                "J": rep.j.to_string(),
                "mu_J": rep.j_mu,
                "integrally_closed": rep.integrally_closed,
            })
        }
        Command::Socle { q } => {
            let v = socle_ag_criterion(&id(q)?, seed, trials)?;
            let verdict = verdict_result(report, &v.verdict);
            match &v.report {
                Some(s) => json!({ "verdict": verdict, "socle": socle_value(s) }),
                None => {
                    report.warnings.push("Q is not contained in m^2: Q:m is a parameter ideal or the unit ideal".into());
                    json!({ "verdict": verdict })
                }
            }
        }
        Command::Fgh { q } => {
            let rep = socle_fgh(&id(q)?)?;
            if !rep.equal {
                report.exit_code = EXIT_CHECK_FAILED;
            }
            report.witness = Some(json!({
                "map": ["X -> a", "Y -> b", "Z -> c"],
                "F": rep.big_f.to_string(),
                "G": rep.big_g.to_string(),
                "H": rep.big_h.to_string(),
            }));
            json!({
                "F": rep.big_f.to_string(),
                "G": rep.big_g.to_string(),
                "H": rep.big_h.to_string(),
                "square_coefficients": polys(&rep.square_coeffs),
                "socle": socle_value(&rep.socle),
                "rees_generators": polys(rep.rees.gens()),
                "equal": rep.equal,
            })
        }
        Command::Hypersurface { ell, a, b } => {
            let f3 = parse_poly(&r, cli.modulus.as_deref().unwrap_or(DEFAULT_HYPERSURFACE))?;
            let (a, b) = match (a, b) {
                (Some(a), Some(b)) => (parse_poly(&r, a)?, parse_poly(&r, b)?),
                (None, None) => find_hypersurface_parameters(&f3, seed, trials)?,
                _ => return Err(Error::CheckFailed("give both --a and --b, or neither".into())),
            };
            let rep = hypersurface_report(*ell, &f3, &a, &b)?;
            if !rep.passed() {
                report.exit_code = EXIT_CHECK_FAILED;
            }
            json!({
                "f3": rep.f3.to_string(),
                "a": rep.a.to_string(),
                "b": rep.b.to_string(),
                "checks": {
                    "m^2 = (a,b)m": rep.multiplicity_two,
                    "I^2 = QI": rep.reduction,
                    "Q:I = I": rep.colon_is_i,
                    "m^(l+1) = a*m^l + b^l*m": rep.witness,
                },
                "mu": rep.mu,
                "expected_mu": rep.expected_mu(),
                "passed": rep.passed(),
            })
        }
        Command::ClaimSuite { .. } => unreachable!("handled by the suite runner"),
    };
    Ok(())
}
