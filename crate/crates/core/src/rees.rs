//! Reductions, reduction numbers, joint reductions and presentations of
//! Rees algebras.
//!
//! Equalities between an ideal and a reduction built from single elements
//! are decided after localizing at the origin (see [`crate::ideal`]).

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::IdealHandle;
use crate::monomial::MonoIdeal2;
use crate::order::MonomialOrder;
use crate::poly::Poly;
use crate::ring::{Ring, RingRef};
use crate::search::{self, random_combination};

pub const DEFAULT_TRIALS: usize = 32;
pub const DEFAULT_CAP: usize = 10;

/// Parameter ideal `Q = (a, b)` inside `I` with its reduction number.
#[derive(Clone, Debug)]
pub struct ReductionPair<F: Field> {
    pub a: Poly<F>,
    pub b: Poly<F>,
    pub reduction_number: usize,
    /// Zero-based index of the accepted trial; `None` when no search ran.
    pub trial: Option<usize>,
}

impl<F: Field> ReductionPair<F> {
    pub fn ideal(&self) -> IdealHandle<F> {
        IdealHandle::new(self.a.ring(), vec![self.a.clone(), self.b.clone()]).unwrap()
    }
}

/// `J = Q : I` with the data reported alongside it.
#[derive(Clone, Debug)]
pub struct CanonicalColon<F: Field> {
    pub j: IdealHandle<F>,
    /// Minimal number of generators after localizing.
    pub mu: usize,
    pub is_unit: bool,
    /// Present when `J` is a proper monomial ideal of `k[x,y]`.
    pub integrally_closed: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct ReesPresentation<F: Field> {
    /// `k[x, y, .., T1, .., Tn]`, grevlex.
    pub ring: RingRef<F>,
    /// Number of base variables; the remaining ones are the `T_i`.
    pub base_vars: usize,
    /// `T_i ↦ f_i`, in the base ring.
    pub map: Vec<Poly<F>>,
    pub k: IdealHandle<F>,
}

#[derive(Clone, Debug)]
pub struct JointReduction<F: Field> {
    pub a: Poly<F>,
    pub b: Poly<F>,
    pub trial: usize,
}

fn require_member<F: Field>(f: &Poly<F>, i: &IdealHandle<F>) -> Result<()> {
    if i.member(f)? {
        Ok(())
    } else {
        Err(Error::NotMember { element: f.to_string(), ideal: i.to_string() })
    }
}

fn require_m_primary<F: Field>(i: &IdealHandle<F>) -> Result<()> {
    if i.is_m_primary() {
        Ok(())
    } else {
        Err(Error::NotMPrimary(i.to_string()))
    }
}

/// Whether `I^{r+1} = Q·I^r` at the origin, given `I^r` (`Q·I^r ⊆ I^{r+1}`
/// is automatic).
fn stabilizes<F: Field>(q: &IdealHandle<F>, i: &IdealHandle<F>, ir: &IdealHandle<F>) -> Result<bool> {
    let lhs = ir.product(i)?;
    let rhs = q.product(ir)?;
    rhs.locally_contains(&lhs)
}

/// `I² = QI` at the origin, for `Q = (a, b) ⊆ I`.
pub fn is_reduction<F: Field>(a: &Poly<F>, b: &Poly<F>, i: &IdealHandle<F>) -> Result<bool> {
    require_member(a, i)?;
    require_member(b, i)?;
    require_m_primary(i)?;
    let q = IdealHandle::new(i.ring(), vec![a.clone(), b.clone()])?;
    stabilizes(&q, i, i)
}

/// Least `r ≤ cap` with `I^{r+1} = Q·I^r` at the origin. `Q` may have any
/// number of generators.
pub fn reduction_number<F: Field>(q: &IdealHandle<F>, i: &IdealHandle<F>, cap: usize) -> Result<usize> {
    for g in q.gens() {
        require_member(g, i)?;
    }
    if i.locally_contains(q)? && q.locally_contains(i)? {
        return Ok(0);
    }
    let mut ir = i.clone();
    for r in 1..=cap {
        if stabilizes(q, i, &ir)? {
            return Ok(r);
        }
        ir = ir.product(i)?;
    }
    Err(Error::ExceedsCap(cap))
}

/// Random `Q = (a, b)` from combinations of the minimal generators of `I`,
/// accepted once `I² = QI`. Ideals with at most two minimal generators are
/// returned as they are.
pub fn find_parameter_reduction<F: Field>(i: &IdealHandle<F>, seed: u64, trials: usize) -> Result<ReductionPair<F>> {
    require_m_primary(i)?;
    let gens = i.minimalize().gens().to_vec();
    let ring = i.ring();
    if gens.len() <= 2 {
        let a = gens[0].clone();
        let b = gens.get(1).cloned().unwrap_or_else(|| Poly::zero(ring));
        return Ok(ReductionPair { a, b, reduction_number: 0, trial: None });
    }
    let mut rng = search::rng(seed);
    for t in 0..trials {
        let a = random_combination(ring, &gens, &mut rng);
        let b = random_combination(ring, &gens, &mut rng);
        if is_reduction(&a, &b, i)? {
            let q = IdealHandle::new(ring, vec![a.clone(), b.clone()])?;
            let r = reduction_number(&q, i, 1)?;
            return Ok(ReductionPair { a, b, reduction_number: r, trial: Some(t) });
        }
    }
    Err(Error::NoReduction(trials))
}

/// `J = Q : I`, where `Q` is first replaced by its component at the origin
/// so that `J` is m-primary (or the unit ideal).
pub fn canonical_colon<F: Field>(q: &IdealHandle<F>, i: &IdealHandle<F>) -> Result<CanonicalColon<F>> {
    let ok = match q.gens() {
        [a, b] => is_reduction(a, b, i)?,
        _ => reduction_number(q, i, 1).is_ok(),
    };
    if !ok {
        return Err(Error::NotReduction);
    }
    let q0 = q.local_component()?;
    let j = q0.colon(i)?;
    let is_unit = j.is_unit();
    let mu = if is_unit { 1 } else { j.local_min_gens()? };
    let integrally_closed = if !is_unit && j.ring().nvars() == 2 && j.is_monomial() {
        Some(MonoIdeal2::from_ideal(&j)?.is_integrally_closed()?)
    } else {
        None
    };
    Ok(CanonicalColon { j, mu, is_unit, integrally_closed })
}

/// Presentation of the Rees algebra of the ideal generated by `gens`, with
/// `T_i ↦ gens[i]` named by `t_names`.
pub fn rees_ideal_with<F: Field, S: AsRef<str>>(
    ring: &RingRef<F>,
    gens: &[Poly<F>],
    t_names: &[S],
) -> Result<ReesPresentation<F>> {
    if gens.len() != t_names.len() {
        return Err(Error::Arity { expected: gens.len(), got: t_names.len() });
    }
    let target = ring.append(t_names, MonomialOrder::GrevLex)?;
    let fresh = (0..)
        .map(|i| if i == 0 { "t".to_string() } else { format!("t{i}") })
        .find(|c| !target.names().iter().any(|n| n == c))
        .unwrap();
    let big = target.prepend(&[fresh], MonomialOrder::Elimination(1))?;
    let n = ring.nvars();
    let shift: Vec<Option<usize>> = (0..n).map(|i| Some(i + 1)).collect();
    let t = big.var(0);
    let mut rel = Vec::with_capacity(gens.len());
    for (k, f) in gens.iter().enumerate() {
        let tk = big.var(1 + n + k);
        rel.push(&tk - &(&t * &f.embed(&big, &shift)?));
    }
    let k = IdealHandle::new(&big, rel)?.eliminate(1)?;
    let gens_k = k.gens().iter().map(|g| g.reorder(&target)).collect();
    let k = IdealHandle::new(&target, gens_k)?.minimalize();
    Ok(ReesPresentation { ring: target, base_vars: n, map: gens.to_vec(), k })
}

/// Presentation with `T_i ↦` the canonical minimal generators of `I`.
pub fn rees_ideal<F: Field>(i: &IdealHandle<F>) -> Result<ReesPresentation<F>> {
    let gens = i.minimalize().gens().to_vec();
    let names: Vec<String> = (1..=gens.len()).map(|k| format!("T{k}")).collect();
    rees_ideal_with(i.ring(), &gens, &names)
}

impl<F: Field> ReesPresentation<F> {
    pub fn t_names(&self) -> &[String] {
        &self.ring.names()[self.base_vars..]
    }

    /// Every generator of `K` vanishes under `T_i ↦ f_i·u`.
    pub fn substitution_sound(&self) -> Result<bool> {
        let base = self.map.first().map(|f| f.ring().clone());
        let Some(base) = base else { return Ok(true) };
        let fresh = (0..)
            .map(|i| format!("u{i}"))
            .find(|c| !base.names().iter().any(|n| n == c))
            .unwrap();
        let ext = base.append(&[fresh], MonomialOrder::GrevLex)?;
        let n = base.nvars();
        let keep: Vec<Option<usize>> = (0..n).map(Some).collect();
        let u = ext.var(n);
        let mut images: Vec<Poly<F>> = (0..n).map(|i| ext.var(i)).collect();
        for f in &self.map {
            images.push(&f.embed(&ext, &keep)? * &u);
        }
        for g in self.k.gens() {
            if !g.substitute(&images)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `K ∩ k[x,y] = 0`: eliminating the `T_i` leaves nothing.
    pub fn meets_base_trivially(&self) -> Result<bool> {
        let names = self.ring.names();
        let mut order: Vec<&String> = names[self.base_vars..].iter().collect();
        order.extend(names[..self.base_vars].iter());
        let nt = names.len() - self.base_vars;
        let swapped = Ring::new(self.ring.field().clone(), &order, MonomialOrder::GrevLex)?;
        let positions: Vec<Option<usize>> = (0..names.len())
            .map(|i| Some(if i < self.base_vars { i + nt } else { i - self.base_vars }))
            .collect();
        let gens = self.k.gens().iter().map(|g| g.embed(&swapped, &positions)).collect::<Result<Vec<_>>>()?;
        let k = IdealHandle::new(&swapped, gens)?;
        Ok(k.eliminate(nt)?.is_zero())
    }
}

/// `IJ = aJ + Ib` at the origin.
pub fn joint_reduction_verify<F: Field>(
    a: &Poly<F>,
    i: &IdealHandle<F>,
    b: &Poly<F>,
    j: &IdealHandle<F>,
) -> Result<bool> {
    require_member(a, i)?;
    require_member(b, j)?;
    let ij = i.product(j)?;
    let mut gens: Vec<Poly<F>> = j.gens().iter().map(|g| a * g).collect();
    gens.extend(i.gens().iter().map(|g| g * b));
    let rhs = IdealHandle::new(i.ring(), gens)?;
    rhs.locally_contains(&ij)
}

/// Random `a ∈ I`, `b ∈ J` from combinations of minimal generators, accepted
/// on [`joint_reduction_verify`].
pub fn find_joint_reduction<F: Field>(
    i: &IdealHandle<F>,
    j: &IdealHandle<F>,
    seed: u64,
    trials: usize,
) -> Result<JointReduction<F>> {
    require_m_primary(i)?;
    require_m_primary(j)?;
    let gi = i.minimalize().gens().to_vec();
    let gj = j.minimalize().gens().to_vec();
    let mut rng = search::rng(seed);
    for t in 0..trials {
        let a = random_combination(i.ring(), &gi, &mut rng);
        let b = random_combination(j.ring(), &gj, &mut rng);
        if joint_reduction_verify(&a, i, &b, j)? {
            return Ok(JointReduction { a, b, trial: t });
        }
    }
    Err(Error::NoJointReduction(trials))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::text::{parse_ideal, parse_poly};

    fn r2() -> RingRef<PrimeField> {
        Ring::plane(PrimeField::default())
    }

    fn id(r: &RingRef<PrimeField>, s: &str) -> IdealHandle<PrimeField> {
        parse_ideal(r, s).unwrap()
    }

    fn p(r: &RingRef<PrimeField>, s: &str) -> Poly<PrimeField> {
        parse_poly(r, s).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let r = r2();
        let m2 = IdealHandle::maximal_power(&r, 2);
        assert!(is_reduction(&p(&r, "x^2"), &p(&r, "y^2"), &m2).unwrap());
        let i = id(&r, "ideal(x^3, x^2*y, y^2)");
        assert!(is_reduction(&p(&r, "x^3"), &p(&r, "y^2"), &i).unwrap());
        let i = id(&r, "ideal(x^3, x*y, y^2)");
        assert!(!is_reduction(&p(&r, "x^3"), &p(&r, "y^2"), &i).unwrap());
        assert!(matches!(is_reduction(&p(&r, "x"), &p(&r, "y^2"), &m2), Err(Error::NotMember { .. })));
    }

    #[test]
    fn reduction_numbers() {
        let r = r2();
        for l in 2..=4u32 {
            let q = id(&r, &format!("ideal(x^{l}, y^{l})"));
            assert_eq!(reduction_number(&q, &IdealHandle::maximal_power(&r, l), DEFAULT_CAP).unwrap(), 1);
        }
        let q = id(&r, "ideal(x^2, y^3)");
        assert_eq!(reduction_number(&q, &q, DEFAULT_CAP).unwrap(), 0);
        let r3 = Ring::new(PrimeField::default(), &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let q = id(&r3, "ideal(x^2*y, y^2*z, z^2*x)");
        let i = id(&r3, "ideal(x^2*y, y^2*z, z^2*x, x*y*z)");
        assert_eq!(reduction_number(&q, &i, DEFAULT_CAP).unwrap(), 2);
        assert_eq!(reduction_number(&q, &i, 1).unwrap_err(), Error::ExceedsCap(1));
    }

    #[test]
    fn parameter_reductions() {
        let r = r2();
        let m = IdealHandle::maximal(&r);
        let got = find_parameter_reduction(&m, 0, DEFAULT_TRIALS).unwrap();
        assert!(got.trial.is_none());
        assert!(got.ideal().equals(&m).unwrap());
        for s in ["ideal(x^2, x*y, y^2)", "ideal(x^3, x^2*y, y^2)"] {
            let i = id(&r, s);
            let got = find_parameter_reduction(&i, 3, DEFAULT_TRIALS).unwrap();
            assert!(is_reduction(&got.a, &got.b, &i).unwrap());
            assert_eq!(got.reduction_number, 1);
        }
    }

    #[test]
    fn canonical_colons() {
        let r = r2();
        for mm in 2..=4u32 {
            for n in mm..=5u32 {
                let q = id(&r, &format!("ideal(x^{mm}, y^{n})"));
                let i = q.sum(&IdealHandle::maximal_power(&r, n)).unwrap();
                let c = canonical_colon(&q, &i).unwrap();
                assert!(c.j.equals(&IdealHandle::maximal_power(&r, mm - 1)).unwrap());
                assert_eq!(c.mu, mm as usize);
                assert_eq!(c.integrally_closed, Some(true));
            }
        }
        let c = canonical_colon(&id(&r, "ideal(x^3, y^2)"), &id(&r, "ideal(x^3, x^2*y, y^2)")).unwrap();
        assert!(c.j.equals(&IdealHandle::maximal(&r)).unwrap());
        let m = IdealHandle::maximal(&r);
        let c = canonical_colon(&m, &m).unwrap();
        assert!(c.is_unit);
        assert!(matches!(
            canonical_colon(&id(&r, "ideal(x^3, y^2)"), &id(&r, "ideal(x^3, x*y, y^2)")),
            Err(Error::NotReduction)
        ));
    }

    #[test]
    fn canonical_colon_of_random_reduction() {
        let r = r2();
        let i = id(&r, "ideal(x^3, x^2*y, y^2)");
        let red = find_parameter_reduction(&i, 11, DEFAULT_TRIALS).unwrap();
        let c = canonical_colon(&red.ideal(), &i).unwrap();
        assert!(crate::ideal::locally_equal(&c.j, &IdealHandle::maximal(&r)).unwrap());
        assert_eq!(c.mu, 2);
    }

    #[test]
    fn rees_presentations() {
        let r = r2();
        let k = rees_ideal(&IdealHandle::maximal(&r)).unwrap();
        assert_eq!(k.k.len(), 1);
        let expect = parse_poly(&k.ring, "x*T2 - y*T1").unwrap();
        assert_eq!(k.k.gens()[0].monic(), expect.monic());

        let pres = rees_ideal(&IdealHandle::maximal_power(&r, 2)).unwrap();
        let want = parse_ideal(&pres.ring, "ideal(y*T1 - x*T2, y*T2 - x*T3, T1*T3 - T2^2)").unwrap();
        assert!(pres.k.equals(&want).unwrap());
        assert_eq!(pres.k.len(), 3);
        assert!(pres.substitution_sound().unwrap());
        assert!(pres.meets_base_trivially().unwrap());

        let gens = vec![p(&r, "x^2"), p(&r, "y^2"), p(&r, "x*y")];
        let pres = rees_ideal_with(&r, &gens, &["X", "Y", "Z"]).unwrap();
        let want = parse_ideal(&pres.ring, "ideal(-y*X + x*Z, -x*Y + y*Z, Z^2 - X*Y)").unwrap();
        assert!(pres.k.equals(&want).unwrap());
    }

    #[test]
    fn joint_reductions() {
        let r = r2();
        let m = IdealHandle::maximal(&r);
        assert!(joint_reduction_verify(&p(&r, "x"), &m, &p(&r, "y"), &m).unwrap());
        let i = id(&r, "ideal(x^3, y^2, x^2*y)");
        assert!(!joint_reduction_verify(&p(&r, "x^3"), &i, &p(&r, "y"), &m).unwrap());
        for (a, b) in [("ideal(x, y)", "ideal(x, y)"), ("ideal(x^3, x^2*y, x*y^2, y^3)", "ideal(x^2, x*y, y^2)"), ("ideal(x^3, x^2*y, y^2)", "ideal(x, y)")] {
            let (i, j) = (id(&r, a), id(&r, b));
            let got = find_joint_reduction(&i, &j, 5, DEFAULT_TRIALS).unwrap();
            assert!(joint_reduction_verify(&got.a, &i, &got.b, &j).unwrap());
        }
    }
}
