//! The built-in suite of published claims, reproduced at desk scale.
//!
//! Every entry carries an expected and an observed JSON value and passes
//! when they are equal. `--tamper <id>` corrupts one expected value so that
//! the harness can be seen to fail.

use std::collections::BTreeSet;

use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use reesag::agcheck::{
    ag_check, default_hypersurface, hypersurface_report, socle_ag_criterion, socle_fgh, AGVerdict, WitnessTriple,
};
use reesag::monomial::MonoIdeal2;
use reesag::rees::{canonical_colon, find_joint_reduction, joint_reduction_verify, reduction_number};
use reesag::search::{self, random_form, SearchRng};
use reesag::text::{parse_ideal, parse_poly};
use reesag::{Error, Field, IdealHandle, MonomialOrder, Ring, RingRef};

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub id: String,
    pub criterion: u32,
    pub claim: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub total: usize,
    pub passed: usize,
    pub failed: Vec<String>,
    pub entries: Vec<Entry>,
}

impl SuiteResult {
    pub fn all_passed(&self) -> bool {
        self.failed.is_empty()
    }
}

struct Builder {
    entries: Vec<Entry>,
}

impl Builder {
    fn push(&mut self, criterion: u32, id: String, claim: &str, expected: Value, observed: Value) {
        self.entries.push(Entry { id, criterion, claim: claim.to_string(), expected, observed, pass: false });
    }
}

/// Render an outcome that failed with a library error as data.
fn observed<T: Into<Value>>(r: Result<T, Error>) -> Value {
    match r {
        Ok(v) => v.into(),
        Err(e) => json!({ "error": e.code(), "message": e.to_string() }),
    }
}

fn verdict_label<F: Field>(v: &AGVerdict<F>) -> Result<String, Error> {
    Ok(match v {
        AGVerdict::AlmostGorenstein(w) if !w.reverify()? => "UnverifiedWitness".to_string(),
        other => other.name().to_string(),
    })
}

fn plane<F: Field>(field: &F) -> RingRef<F> {
    Ring::plane(field.clone())
}

fn pure_power_pair<F: Field>(r: &RingRef<F>, m: u32, n: u32) -> Result<(IdealHandle<F>, IdealHandle<F>), Error> {
    let q = parse_ideal(r, &format!("ideal(x^{m}, y^{n})"))?;
    let i = q.sum(&IdealHandle::maximal_power(r, n))?;
    Ok((q, i))
}

/// Seeded random m-primary monomial ideal with exponents at most `max`.
pub fn random_monomial(rng: &mut SearchRng, max: u32) -> MonoIdeal2 {
    let mut pts = vec![(rng.gen_range(1..=max), 0), (0, rng.gen_range(1..=max))];
    for _ in 0..rng.gen_range(0..=3) {
        pts.push((rng.gen_range(0..=max), rng.gen_range(0..=max)));
    }
    MonoIdeal2::minimalize(pts.into_iter().filter(|&p| p != (0, 0)))
}

fn family<F: Field>(b: &mut Builder, field: &F) {
    let r = plane(field);
    for m in 2..=5u32 {
        for n in m..=5u32 {
            let run = || -> Result<Value, Error> {
                let (q, i) = pure_power_pair(&r, m, n)?;
                let j = q.colon(&i)?;
                let j_ok = j.equals(&IdealHandle::maximal_power(&r, m - 1))?;
                let f = parse_poly(&r, "x")?;
                let g = parse_poly(&r, &format!("x^{m}"))?;
                let h = parse_poly(&r, &format!("y^{}", m - 1))?;
                let w = WitnessTriple::check(&i, &j, &f, &g, &h)?.is_some();
                Ok(json!({ "J = m^(m-1)": j_ok, "witness": w }))
            };
            b.push(
                1,
                format!("family.m{m}.n{n}"),
                "J = m^(m-1) and (x, x^m, y^(m-1)) is a witness",
                json!({ "J = m^(m-1)": true, "witness": true }),
                observed(run()),
            );
        }
    }
}

fn socle_dichotomy<F: Field>(b: &mut Builder, field: &F, seed: u64, trials: usize) {
    let r = plane(field);
    for n in 2..=6u32 {
        for m in n..=6u32 {
            let run = || -> Result<Value, Error> {
                let q = parse_ideal(&r, &format!("ideal(x^{m}, y^{n})"))?;
                Ok(verdict_label(&socle_ag_criterion(&q, seed, trials)?.verdict)?.into())
            };
            let expected = if n == 2 { "AlmostGorensteinWitness" } else { "NotAlmostGorenstein" };
            b.push(2, format!("socle.m{m}.n{n}"), "socle ideal of (x^m, y^n) is a witness iff n = 2", json!(expected), observed(run()));
        }
    }
}

fn parameters_in_m3<F: Field>(b: &mut Builder, field: &F, seed: u64, trials: usize) {
    let r = plane(field);
    let mut rng = search::rng(seed ^ 0x3333);
    for k in 0..10 {
        let (d1, d2) = (rng.gen_range(3..=5), rng.gen_range(3..=5));
        let (a, bb) = (random_form(&r, d1, &mut rng), random_form(&r, d2, &mut rng));
        let run = || -> Result<Value, Error> {
            let q = IdealHandle::new(&r, vec![a, bb])?;
            Ok(verdict_label(&socle_ag_criterion(&q, seed, trials)?.verdict)?.into())
        };
        b.push(3, format!("m3.sample{k}"), "Q = (a,b) in m^3 is not almost Gorenstein", json!("NotAlmostGorenstein"), observed(run()));
    }
}

fn closed_corpus<F: Field>(b: &mut Builder, field: &F, seed: u64, trials: usize) {
    let r = plane(field);
    let mut rng = search::rng(seed ^ 0x4444);
    let mut corpus: Vec<MonoIdeal2> = Vec::new();
    while corpus.len() < 20 {
        let i = random_monomial(&mut rng, 8).integral_closure().expect("m-primary by construction");
        if !corpus.contains(&i) {
            corpus.push(i);
        }
    }
    for (k, mono) in corpus.into_iter().enumerate() {
        let run = || -> Result<Value, Error> {
            let i = mono.to_ideal(&r)?;
            let rep = ag_check(&i, seed.wrapping_add(k as u64), trials)?;
            Ok(match verdict_label(&rep.verdict)?.as_str() {
                "Gorenstein" | "AlmostGorensteinWitness" => "certified".into(),
                other => other.into(),
            })
        };
        b.push(4, format!("closed.{k}"), &format!("{mono} is certified almost Gorenstein"), json!("certified"), observed(run()));
    }
}

fn three_variable_example<F: Field>(b: &mut Builder, field: &F) {
    let run = || -> Result<Value, Error> {
        let r = Ring::new(field.clone(), &["x", "y", "z"], MonomialOrder::GrevLex)?;
        let q = parse_ideal(&r, "ideal(x^2*y, y^2*z, z^2*x)")?;
        let i = parse_ideal(&r, "ideal(x^2*y, y^2*z, z^2*x, x*y*z)")?;
        Ok(json!({ "reduction_number": reduction_number(&q, &i, 10)?, "mu": i.min_gens(None)? }))
    };
    b.push(
        5,
        "monomial3.red".into(),
        "I = (x^2y, y^2z, z^2x, xyz) has red_Q(I) = 2 and mu(I) = 4",
        json!({ "reduction_number": 2, "mu": 4 }),
        observed(run()),
    );
}

fn hypersurface<F: Field>(b: &mut Builder, field: &F) {
    for ell in 1..=3u32 {
        let run = || -> Result<Value, Error> {
            let (_, f3, a, bb) = default_hypersurface(field.clone());
            let rep = hypersurface_report(ell, &f3, &a, &bb)?;
            Ok(json!({
                "mu": rep.mu,
                "I^2 = QI": rep.reduction,
                "Q:I = I": rep.colon_is_i,
                "m^(l+1) = a*m^l + b^l*m": rep.witness,
            }))
        };
        b.push(
            6,
            format!("hypersurface.l{ell}"),
            "on k[x,y,z]/(x^2 - yz), I = m^l has mu = 2l+1 and the equalities hold",
            json!({
                "mu": 2 * ell + 1,
                "I^2 = QI": true,
                "Q:I = I": true,
                "m^(l+1) = a*m^l + b^l*m": true,
            }),
            observed(run()),
        );
    }
}

fn fgh<F: Field>(b: &mut Builder, field: &F) {
    let r = plane(field);
    for n in 2..=4u32 {
        for m in n..=4u32 {
            let run = || -> Result<Value, Error> {
                let q = parse_ideal(&r, &format!("ideal(x^{m}, y^{n})"))?;
                Ok(socle_fgh(&q)?.equal.into())
            };
            b.push(7, format!("fgh.m{m}.n{n}"), "(G, H, F) equals the Rees ideal of Q:m", json!(true), observed(run()));
        }
    }
}

fn colon_closed<F: Field>(b: &mut Builder, field: &F) {
    let r = plane(field);
    let closed = |q: &IdealHandle<F>, i: &IdealHandle<F>| -> Result<Value, Error> {
        let c = canonical_colon(q, i)?;
        Ok((c.is_unit || c.integrally_closed == Some(true)).into())
    };
    for l in 1..=5u32 {
        let run = || closed(&parse_ideal(&r, &format!("ideal(x^{l}, y^{l})"))?, &IdealHandle::maximal_power(&r, l));
        b.push(8, format!("colon.power{l}"), "J = Q:m^l is integrally closed", json!(true), observed(run()));
    }
    for m in 2..=5u32 {
        for n in m..=5u32 {
            let run = || {
                let (q, i) = pure_power_pair(&r, m, n)?;
                closed(&q, &i)
            };
            b.push(8, format!("colon.m{m}.n{n}"), "J = Q:((x^m) + m^n) is integrally closed", json!(true), observed(run()));
        }
    }
}

fn joint_reductions<F: Field>(b: &mut Builder, field: &F, seed: u64, trials: usize) {
    let r = plane(field);
    let mut rng = search::rng(seed ^ 0x9999);
    for k in 0..25u64 {
        let i = random_monomial(&mut rng, 6).integral_closure().expect("m-primary");
        let j = random_monomial(&mut rng, 6).integral_closure().expect("m-primary");
        let run = || -> Result<Value, Error> {
            let (ii, jj) = (i.to_ideal(&r)?, j.to_ideal(&r)?);
            let jr = find_joint_reduction(&ii, &jj, seed.wrapping_add(k), trials)?;
            Ok(joint_reduction_verify(&jr.a, &ii, &jr.b, &jj)?.into())
        };
        b.push(9, format!("joint.{k}"), &format!("IJ = aJ + Ib for I = {i}, J = {j}"), json!(true), observed(run()));
    }
}

fn oracles<F: Field>(b: &mut Builder, field: &F, seed: u64) {
    let r = plane(field);
    let mut rng = search::rng(seed ^ 0x1010);
    let run = |rng: &mut SearchRng| -> Result<Value, Error> {
        let mut mismatches = 0u32;
        for _ in 0..100 {
            let (x, y) = (random_monomial(rng, 7), random_monomial(rng, 7));
            let (ix, iy) = (x.to_ideal(&r)?, y.to_ideal(&r)?);
            let same = [
                ix.colon(&iy)?.equals(&x.colon(&y)?.to_ideal(&r)?)?,
                ix.product(&iy)?.equals(&x.product(&y).to_ideal(&r)?)?,
                ix.intersect(&iy)?.equals(&x.intersect(&y).to_ideal(&r)?)?,
                ix.equals(&iy)? == (x == y),
            ];
            mismatches += same.iter().filter(|s| !**s).count() as u32;
        }
        let mut closure_mismatches = 0u32;
        for _ in 0..50 {
            let i = random_monomial(rng, 6);
            let c = i.integral_closure()?;
            let bound = i.default_oracle_bound()?;
            for u in 0..=i.x_power().unwrap_or(0) {
                for v in 0..=i.y_power().unwrap_or(0) {
                    if c.contains_point((u, v)) != i.closure_oracle((u, v), bound) {
                        closure_mismatches += 1;
                    }
                }
            }
        }
        Ok(json!({ "groebner_vs_monomial": mismatches, "closure_vs_oracle": closure_mismatches }))
    };
    b.push(
        10,
        "oracles".into(),
        "Gröbner and monomial routines agree; integral closure matches the power oracle",
        json!({ "groebner_vs_monomial": 0, "closure_vs_oracle": 0 }),
        observed(run(&mut rng)),
    );
}

pub fn run_suite<F: Field>(field: &F, seed: u64, trials: usize, tamper: &BTreeSet<String>) -> SuiteResult {
    let mut b = Builder { entries: Vec::new() };
    family(&mut b, field);
    socle_dichotomy(&mut b, field, seed, trials);
    parameters_in_m3(&mut b, field, seed, trials);
    closed_corpus(&mut b, field, seed, trials);
    three_variable_example(&mut b, field);
    hypersurface(&mut b, field);
    fgh(&mut b, field);
    colon_closed(&mut b, field);
    joint_reductions(&mut b, field, seed, trials);
    oracles(&mut b, field, seed);
    let mut failed = Vec::new();
    for e in &mut b.entries {
        if tamper.contains(&e.id) {
            e.expected = json!({ "tampered": e.expected.clone() });
        }
        e.pass = e.expected == e.observed;
        if !e.pass {
            failed.push(e.id.clone());
        }
    }
    let total = b.entries.len();
    SuiteResult { total, passed: total - failed.len(), failed, entries: b.entries }
}
