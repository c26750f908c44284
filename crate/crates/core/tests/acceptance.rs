//! Acceptance criteria 1-10. Each test prints one `PASS`/`FAIL` line and
//! enforces its time budget per check.

use std::time::{Duration, Instant};

use rand::Rng;
use reesag::agcheck::{
    ag_check, default_hypersurface, hypersurface_example, socle_ag_criterion, socle_fgh, AGVerdict,
    WitnessTriple,
};
use reesag::monomial::MonoIdeal2;
use reesag::rees::{
    canonical_colon, find_joint_reduction, joint_reduction_verify, reduction_number, ReesPresentation,
    DEFAULT_CAP, DEFAULT_TRIALS,
};
use reesag::search::{self, random_form};
use reesag::text::{parse_ideal, parse_poly};
use reesag::{IdealHandle, MonomialOrder, PrimeField, Ring, RingRef};

type P = PrimeField;

fn plane() -> RingRef<P> {
    Ring::plane(PrimeField::default())
}

/// Runs `checks`, each against `budget`, and prints the verdict line.
fn criterion(n: u32, what: &str, budget: Duration, checks: Vec<(String, Box<dyn FnOnce() -> bool>)>) {
    let total = checks.len();
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for (label, check) in checks {
        let start = Instant::now();
        let ok = check();
        let took = start.elapsed();
        slowest = slowest.max(took);
        if !ok {
            failures.push(format!("{label}: wrong result"));
        } else if took > budget {
            failures.push(format!("{label}: {took:?} over budget {budget:?}"));
        }
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n:>2} {status} {what}: {total} checks, slowest {slowest:.2?}");
    for f in &failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {n} failed: {failures:?}");
}

type Check = (String, Box<dyn FnOnce() -> bool>);

fn check(label: String, f: impl FnOnce() -> bool + 'static) -> Check {
    (label, Box::new(f))
}

/// `(x^m) + m^n` and `(x^m, y^n)`.
fn pure_power_family(r: &RingRef<P>, m: u32, n: u32) -> (IdealHandle<P>, IdealHandle<P>) {
    let q = parse_ideal(r, &format!("ideal(x^{m}, y^{n})")).unwrap();
    let i = q.sum(&IdealHandle::maximal_power(r, n)).unwrap();
    (q, i)
}

/// Seeded random m-primary monomial ideal with exponents at most `max`.
fn random_monomial(rng: &mut search::SearchRng, max: u32) -> MonoIdeal2 {
    let mut pts = vec![(rng.gen_range(1..=max), 0), (0, rng.gen_range(1..=max))];
    for _ in 0..rng.gen_range(0..=3) {
        pts.push((rng.gen_range(0..=max), rng.gen_range(0..=max)));
    }
    MonoIdeal2::minimalize(pts.into_iter().filter(|&p| p != (0, 0)))
}

fn closed_monomial(rng: &mut search::SearchRng, max: u32) -> MonoIdeal2 {
    random_monomial(rng, max).integral_closure().unwrap()
}

#[test]
fn criterion_01_pure_power_family() {
    let mut checks = Vec::new();
    for m in 2..=5u32 {
        for n in m..=5u32 {
            checks.push(check(format!("m={m} n={n}"), move || {
                let r = plane();
                let (q, i) = pure_power_family(&r, m, n);
                let j = q.colon(&i).unwrap();
                if !j.equals(&IdealHandle::maximal_power(&r, m - 1)).unwrap() {
                    return false;
                }
                let f = parse_poly(&r, "x").unwrap();
                let g = parse_poly(&r, &format!("x^{m}")).unwrap();
                let h = parse_poly(&r, &format!("y^{}", m - 1)).unwrap();
                WitnessTriple::check(&i, &j, &f, &g, &h).unwrap().is_some()
            }));
        }
    }
    criterion(1, "J = m^(m-1) and (x, x^m, y^(m-1)) is a witness", Duration::from_secs(1), checks);
}

#[test]
fn criterion_02_socle_dichotomy() {
    let mut checks = Vec::new();
    for n in 2..=6u32 {
        for m in n..=6u32 {
            checks.push(check(format!("Q=(x^{m},y^{n})"), move || {
                let r = plane();
                let q = parse_ideal(&r, &format!("ideal(x^{m}, y^{n})")).unwrap();
                let v = socle_ag_criterion(&q, 0, DEFAULT_TRIALS).unwrap().verdict;
                match v {
                    AGVerdict::AlmostGorenstein(w) => n == 2 && w.reverify().unwrap(),
                    AGVerdict::NotAlmostGorenstein(_) => n >= 3,
                    _ => false,
                }
            }));
        }
    }
    criterion(2, "socle ideal is a witness iff n = 2", Duration::from_secs(2), checks);
}

#[test]
fn criterion_03_parameters_in_m3() {
    let mut checks = Vec::new();
    for seed in 0..10u64 {
        checks.push(check(format!("seed {seed}"), move || {
            let r = plane();
            let mut rng = search::rng(1000 + seed);
            let (d1, d2) = (rng.gen_range(3..=5), rng.gen_range(3..=5));
            let q = IdealHandle::new(&r, vec![random_form(&r, d1, &mut rng), random_form(&r, d2, &mut rng)]).unwrap();
            assert!(q.is_m_primary(), "{q}");
            matches!(socle_ag_criterion(&q, seed, DEFAULT_TRIALS).unwrap().verdict, AGVerdict::NotAlmostGorenstein(_))
        }));
    }
    criterion(3, "Q in m^3 gives NotAlmostGorenstein", Duration::from_secs(5), checks);
}

#[test]
fn criterion_04_integrally_closed_corpus() {
    let mut rng = search::rng(4);
    let mut corpus = Vec::new();
    while corpus.len() < 24 {
        let i = closed_monomial(&mut rng, 8);
        if !corpus.contains(&i) {
            corpus.push(i);
        }
    }
    let checks = corpus
        .into_iter()
        .enumerate()
        .map(|(k, mono)| {
            check(format!("#{k} {mono}"), move || {
                let r = plane();
                let i = mono.to_ideal(&r).unwrap();
                let rep = ag_check(&i, k as u64, DEFAULT_TRIALS).unwrap();
                assert_eq!(rep.integrally_closed, Some(true));
                match rep.verdict {
                    AGVerdict::Gorenstein => rep.j.is_unit(),
                    AGVerdict::AlmostGorenstein(w) => w.reverify().unwrap(),
                    _ => false,
                }
            })
        })
        .collect();
    criterion(4, "integrally closed monomial ideals get a witness", Duration::from_secs(10), checks);
}

#[test]
fn criterion_05_three_variable_example() {
    let checks = vec![check("red and mu".into(), || {
        let r3 = Ring::new(PrimeField::default(), &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let q = parse_ideal(&r3, "ideal(x^2*y, y^2*z, z^2*x)").unwrap();
        let i = parse_ideal(&r3, "ideal(x^2*y, y^2*z, z^2*x, x*y*z)").unwrap();
        reduction_number(&q, &i, DEFAULT_CAP).unwrap() == 2 && i.min_gens(None).unwrap() == 4
    })];
    criterion(5, "red_Q(I) = 2 and mu(I) = 4", Duration::from_secs(2), checks);
}

#[test]
fn criterion_06_hypersurface() {
    let checks = (1..=3u32)
        .map(|ell| {
            check(format!("ell={ell}"), move || {
                let (_, f3, a, b) = default_hypersurface(PrimeField::default());
                let rep = hypersurface_example(ell, &f3, &a, &b).unwrap();
                rep.passed() && rep.mu == [3, 5, 7][ell as usize - 1]
            })
        })
        .collect();
    criterion(6, "mu = 2l+1 and the equalities hold modulo x^2 - yz", Duration::from_secs(5), checks);
}

#[test]
fn criterion_07_fgh_presentation() {
    let mut checks = Vec::new();
    for n in 2..=4u32 {
        for m in n..=4u32 {
            checks.push(check(format!("Q=(x^{m},y^{n})"), move || {
                let r = plane();
                let q = parse_ideal(&r, &format!("ideal(x^{m}, y^{n})")).unwrap();
                let rep = socle_fgh(&q).unwrap();
                let s = rep.rees.ring().clone();
                let fgh = IdealHandle::new(&s, vec![rep.big_g.clone(), rep.big_h.clone(), rep.big_f.clone()]).unwrap();
                let by_hand = ReesPresentation {
                    ring: s,
                    base_vars: 2,
                    map: vec![rep.socle.a.clone(), rep.socle.b.clone(), rep.socle.c.clone()],
                    k: fgh.clone(),
                };
                rep.equal && by_hand.substitution_sound().unwrap() && fgh.equals(&rep.rees).unwrap()
            }));
        }
    }
    criterion(7, "(G, H, F) equals the Rees ideal of Q:m", Duration::from_secs(10), checks);
}

#[test]
fn criterion_08_canonical_colon_closed() {
    let mut checks = Vec::new();
    for l in 1..=5u32 {
        checks.push(check(format!("I=m^{l}"), move || {
            let r = plane();
            let q = parse_ideal(&r, &format!("ideal(x^{l}, y^{l})")).unwrap();
            let c = canonical_colon(&q, &IdealHandle::maximal_power(&r, l)).unwrap();
            c.is_unit || c.integrally_closed == Some(true)
        }));
    }
    for m in 2..=5u32 {
        for n in m..=5u32 {
            checks.push(check(format!("m={m} n={n}"), move || {
                let r = plane();
                let (q, i) = pure_power_family(&r, m, n);
                let c = canonical_colon(&q, &i).unwrap();
                let j = MonoIdeal2::from_ideal(&c.j).unwrap();
                c.integrally_closed == Some(true) && j.integral_closure().unwrap() == j
            }));
        }
    }
    criterion(8, "J = Q:I is integrally closed", Duration::from_secs(1), checks);
}

#[test]
fn criterion_09_joint_reductions() {
    let mut rng = search::rng(9);
    let checks = (0..25u64)
        .map(|k| {
            let (a, b) = (closed_monomial(&mut rng, 6), closed_monomial(&mut rng, 6));
            check(format!("#{k} {a} {b}"), move || {
                let r = plane();
                let (i, j) = (a.to_ideal(&r).unwrap(), b.to_ideal(&r).unwrap());
                let jr = find_joint_reduction(&i, &j, k, DEFAULT_TRIALS).unwrap();
                let again = find_joint_reduction(&i, &j, k, DEFAULT_TRIALS).unwrap();
                jr.a == again.a && jr.b == again.b && joint_reduction_verify(&jr.a, &i, &jr.b, &j).unwrap()
            })
        })
        .collect();
    criterion(9, "joint reductions of integrally closed pairs", Duration::from_secs(5), checks);
}

#[test]
fn criterion_10_oracle_equivalence() {
    let start = Instant::now();
    let r = plane();
    let mut rng = search::rng(10);
    let mut bad = Vec::new();
    for k in 0..100 {
        let (a, b) = (random_monomial(&mut rng, 7), random_monomial(&mut rng, 7));
        let (ia, ib) = (a.to_ideal(&r).unwrap(), b.to_ideal(&r).unwrap());
        let pairs = [
            ("colon", ia.colon(&ib).unwrap(), a.colon(&b).unwrap()),
            ("product", ia.product(&ib).unwrap(), a.product(&b)),
            ("intersect", ia.intersect(&ib).unwrap(), a.intersect(&b)),
        ];
        for (what, gb, mono) in pairs {
            if !gb.equals(&mono.to_ideal(&r).unwrap()).unwrap() {
                bad.push(format!("pair {k} {what}"));
            }
        }
        if ia.equals(&ib).unwrap() != (a == b) {
            bad.push(format!("pair {k} equality"));
        }
    }
    for k in 0..50 {
        let i = random_monomial(&mut rng, 6);
        let closure = i.integral_closure().unwrap();
        let bound = i.default_oracle_bound().unwrap();
        let (xa, yb) = (i.x_power().unwrap(), i.y_power().unwrap());
        for u in 0..=xa {
            for v in 0..=yb {
                if closure.contains_point((u, v)) != i.closure_oracle((u, v), bound) {
                    bad.push(format!("ideal {k} point ({u},{v})"));
                }
            }
        }
    }
    let took = start.elapsed();
    let ok = bad.is_empty() && took <= Duration::from_secs(60);
    let status = if ok { "PASS" } else { "FAIL" };
    println!("criterion 10 {status} groebner and monomial paths agree: 150 cases in {took:.2?}");
    for b in &bad {
        println!("    {b}");
    }
    assert!(ok, "criterion 10 failed: {bad:?} in {took:?}");
}
