//! Deciding the almost Gorenstein property of Rees algebras.
//!
//! Two one-sided procedures:
//!
//! - a witness search for `f ∈ m`, `g ∈ I`, `h ∈ J = Q:I` with
//!   `IJ = gJ + Ih` and `mJ = fJ + mh`; success proves the property;
//! - for socle ideals `I = Q:m`, the relations `f₁a + f₂b + xc = 0`,
//!   `g₁a + g₂b + yc = 0`; all four coefficients in `m²` disproves it.
//!
//! Neither side ever reports the other's verdict, and an exhausted search is
//! [`AGVerdict::Inconclusive`].

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{locally_equal, IdealHandle};
use crate::monomial::MonoIdeal2;
use crate::order::MonomialOrder;
use crate::poly::Poly;
use crate::rees::{self, canonical_colon, find_parameter_reduction, is_reduction, ReductionPair};
use crate::ring::{Ring, RingRef};
use crate::search::{self, random_combination, random_form, random_in_max_ideal};

/// `f ∈ m`, `g ∈ I`, `h ∈ J` satisfying both equalities.
#[derive(Clone, Debug)]
pub struct WitnessTriple<F: Field> {
    pub f: Poly<F>,
    pub g: Poly<F>,
    pub h: Poly<F>,
    pub i: IdealHandle<F>,
    pub j: IdealHandle<F>,
    /// Reduced bases of `IJ` and `mJ` at verification time.
    pub ij_basis: Vec<Poly<F>>,
    pub mj_basis: Vec<Poly<F>>,
    /// Zero-based trial index; `None` for triples supplied by the caller.
    pub trial: Option<usize>,
    /// Found by the sampler with quadratic tails on `f`.
    pub fallback: bool,
}

#[derive(Clone, Debug)]
pub enum AGVerdict<F: Field> {
    /// `Q : I` is the unit ideal.
    Gorenstein,
    AlmostGorenstein(Box<WitnessTriple<F>>),
    NotAlmostGorenstein(Box<SocleReport<F>>),
    Inconclusive { trials: usize },
}

impl<F: Field> AGVerdict<F> {
    pub fn name(&self) -> &'static str {
        match self {
            AGVerdict::Gorenstein => "Gorenstein",
            AGVerdict::AlmostGorenstein(_) => "AlmostGorensteinWitness",
            AGVerdict::NotAlmostGorenstein(_) => "NotAlmostGorenstein",
            AGVerdict::Inconclusive { .. } => "Inconclusive",
        }
    }

    pub fn witness(&self) -> Option<&WitnessTriple<F>> {
        match self {
            AGVerdict::AlmostGorenstein(w) => Some(w),
            _ => None,
        }
    }
}

/// Socle ideal data for a parameter ideal `Q = (a, b) ⊆ m²` of `k[x,y]`.
#[derive(Clone, Debug)]
pub struct SocleReport<F: Field> {
    pub a: Poly<F>,
    pub b: Poly<F>,
    /// Extra generator of `Q : m`.
    pub c: Poly<F>,
    pub f1: Poly<F>,
    pub f2: Poly<F>,
    pub g1: Poly<F>,
    pub g2: Poly<F>,
    /// `Q : m = Q + (c)`.
    pub socle_ideal: IdealHandle<F>,
    pub mu: usize,
}

impl<F: Field> SocleReport<F> {
    pub fn coefficients(&self) -> [&Poly<F>; 4] {
        [&self.f1, &self.f2, &self.g1, &self.g2]
    }

    /// Parts of `f₁, f₂, g₁, g₂` of degree below 2.
    pub fn residues_mod_m2(&self) -> [Poly<F>; 4] {
        self.coefficients().map(|p| p.truncate_below(2))
    }

    /// `[[f₁, f₂, x], [g₁, g₂, y]]`.
    pub fn matrix(&self) -> [[Poly<F>; 3]; 2] {
        let r = self.a.ring();
        [
            [self.f1.clone(), self.f2.clone(), r.var(0)],
            [self.g1.clone(), self.g2.clone(), r.var(1)],
        ]
    }

    /// All four coefficients lie in `m²`.
    pub fn criterion_holds(&self) -> bool {
        self.coefficients().iter().all(|p| p.in_max_ideal_power(2))
    }

    /// Both relations hold exactly.
    pub fn relations_hold(&self) -> bool {
        let r = self.a.ring();
        let rel1 = &(&(&self.f1 * &self.a) + &(&self.f2 * &self.b)) + &(&r.var(0) * &self.c);
        let rel2 = &(&(&self.g1 * &self.a) + &(&self.g2 * &self.b)) + &(&r.var(1) * &self.c);
        rel1.is_zero() && rel2.is_zero()
    }
}

/// Presentation forms for the socle ideal's Rees algebra in
/// `k[x, y, X, Y, Z]` with `X ↦ a`, `Y ↦ b`, `Z ↦ c`.
#[derive(Clone, Debug)]
pub struct FghReport<F: Field> {
    pub socle: SocleReport<F>,
    /// `c² = f a² + g b² + h ab + i bc + j ca`, in that order.
    pub square_coeffs: [Poly<F>; 5],
    pub big_f: Poly<F>,
    pub big_g: Poly<F>,
    pub big_h: Poly<F>,
    pub rees: IdealHandle<F>,
    pub equal: bool,
}

/// Outcome of [`ag_check`].
#[derive(Clone, Debug)]
pub struct AgCheckReport<F: Field> {
    pub reduction: ReductionPair<F>,
    pub j: IdealHandle<F>,
    pub j_mu: usize,
    /// For monomial input in two variables.
    pub integrally_closed: Option<bool>,
    pub verdict: AGVerdict<F>,
}

/// Outcome of [`socle_ag_criterion`]; `report` is absent when `Q ⊄ m²`.
#[derive(Clone, Debug)]
pub struct SocleVerdict<F: Field> {
    pub report: Option<SocleReport<F>>,
    pub verdict: AGVerdict<F>,
}

fn ensure_plane<F: Field>(ring: &RingRef<F>) -> Result<()> {
    if ring.nvars() == 2 {
        Ok(())
    } else {
        Err(Error::Arity { expected: 2, got: ring.nvars() })
    }
}

/// Both equalities at the origin. Returns the reduced bases of `IJ`, `mJ`
/// when they hold.
fn check_equalities<F: Field>(
    i: &IdealHandle<F>,
    j: &IdealHandle<F>,
    ij: &IdealHandle<F>,
    mj: &IdealHandle<F>,
    f: &Poly<F>,
    g: &Poly<F>,
    h: &Poly<F>,
) -> Result<bool> {
    let ring = i.ring();
    let m = IdealHandle::maximal(ring);
    let mut rhs1: Vec<Poly<F>> = j.gens().iter().map(|p| g * p).collect();
    rhs1.extend(i.gens().iter().map(|p| p * h));
    if !IdealHandle::new(ring, rhs1)?.locally_contains(ij)? {
        return Ok(false);
    }
    let mut rhs2: Vec<Poly<F>> = j.gens().iter().map(|p| f * p).collect();
    rhs2.extend(m.gens().iter().map(|p| p * h));
    IdealHandle::new(ring, rhs2)?.locally_contains(mj)
}

impl<F: Field> WitnessTriple<F> {
    /// Recheck membership of `f, g, h` and both equalities from scratch.
    pub fn reverify(&self) -> Result<bool> {
        let ring = self.i.ring();
        if self.f.order_at_origin() == Some(0) {
            return Ok(false);
        }
        if !self.i.member(&self.g)? || !self.j.member(&self.h)? {
            return Ok(false);
        }
        let ij = self.i.product(&self.j)?;
        let mj = IdealHandle::maximal(ring).product(&self.j)?;
        check_equalities(&self.i, &self.j, &ij, &mj, &self.f, &self.g, &self.h)
    }

    /// Verify a caller-supplied triple; `J` is `Q:I` as passed.
    pub fn check(
        i: &IdealHandle<F>,
        j: &IdealHandle<F>,
        f: &Poly<F>,
        g: &Poly<F>,
        h: &Poly<F>,
    ) -> Result<Option<WitnessTriple<F>>> {
        let w = WitnessTriple::build(i, j, f.clone(), g.clone(), h.clone(), None, false)?;
        Ok(w)
    }

    fn build(
        i: &IdealHandle<F>,
        j: &IdealHandle<F>,
        f: Poly<F>,
        g: Poly<F>,
        h: Poly<F>,
        trial: Option<usize>,
        fallback: bool,
    ) -> Result<Option<WitnessTriple<F>>> {
        let ij = i.product(j)?;
        let mj = IdealHandle::maximal(i.ring()).product(j)?;
        if (f.order_at_origin() == Some(0)) || !i.member(&g)? || !j.member(&h)? {
            return Ok(None);
        }
        if !check_equalities(i, j, &ij, &mj, &f, &g, &h)? {
            return Ok(None);
        }
        Ok(Some(WitnessTriple {
            f,
            g,
            h,
            i: i.clone(),
            j: j.clone(),
            ij_basis: ij.basis().elems().to_vec(),
            mj_basis: mj.basis().elems().to_vec(),
            trial,
            fallback,
        }))
    }
}

/// Search for a witness triple with `J = Q : I`. The element `h` is drawn
/// first and shared by both equalities; `f` is a linear form, with a second
/// round allowing quadratic tails.
pub fn ag_witness_search<F: Field>(
    i: &IdealHandle<F>,
    q: &IdealHandle<F>,
    seed: u64,
    trials: usize,
) -> Result<AGVerdict<F>> {
    let [a, b] = q.gens() else {
        return Err(Error::NotReduction);
    };
    if !is_reduction(a, b, i)? {
        return Err(Error::NotReduction);
    }
    search_unchecked(i, q, seed, trials)
}

fn search_unchecked<F: Field>(
    i: &IdealHandle<F>,
    q: &IdealHandle<F>,
    seed: u64,
    trials: usize,
) -> Result<AGVerdict<F>> {
    let colon = canonical_colon(q, i)?;
    if colon.is_unit {
        return Ok(AGVerdict::Gorenstein);
    }
    let ring = i.ring();
    let j = colon.j;
    let gi = i.minimalize().gens().to_vec();
    let gj = j.gens().to_vec();
    let ij = i.product(&j)?;
    let mj = IdealHandle::maximal(ring).product(&j)?;
    let mut rng = search::rng(seed);
    for round in 0..2 {
        for t in 0..trials {
            let h = random_combination(ring, &gj, &mut rng);
            let f = if round == 0 { random_form(ring, 1, &mut rng) } else { random_in_max_ideal(ring, 2, &mut rng) };
            let g = random_combination(ring, &gi, &mut rng);
            if check_equalities(i, &j, &ij, &mj, &f, &g, &h)? {
                let w = WitnessTriple {
                    f,
                    g,
                    h,
                    i: i.clone(),
                    j: j.clone(),
                    ij_basis: ij.basis().elems().to_vec(),
                    mj_basis: mj.basis().elems().to_vec(),
                    trial: Some(round * trials + t),
                    fallback: round == 1,
                };
                return Ok(AGVerdict::AlmostGorenstein(Box::new(w)));
            }
        }
    }
    Ok(AGVerdict::Inconclusive { trials: 2 * trials })
}

/// Seed for the witness stage, kept apart from the reduction stage's stream.
fn witness_seed(seed: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1)
}

/// Find a reduction `Q` of `I`, then search for a witness.
pub fn ag_check<F: Field>(i: &IdealHandle<F>, seed: u64, trials: usize) -> Result<AgCheckReport<F>> {
    let reduction = find_parameter_reduction(i, seed, trials)?;
    let q = reduction.ideal();
    let colon = canonical_colon(&q, i)?;
    let integrally_closed = if i.ring().nvars() == 2 && i.is_monomial() {
        Some(MonoIdeal2::from_ideal(i)?.is_integrally_closed()?)
    } else {
        None
    };
    let verdict = search_unchecked(i, &q, witness_seed(seed), trials)?;
    Ok(AgCheckReport { reduction, j: colon.j, j_mu: colon.mu, integrally_closed, verdict })
}

/// Relations for the socle ideal `Q : m`. Returns `None` when `Q ⊄ m²`
/// (then `Q : m` is a parameter ideal or the unit ideal).
pub fn socle_presentation<F: Field>(q: &IdealHandle<F>) -> Result<Option<SocleReport<F>>> {
    ensure_plane(q.ring())?;
    let [a, b] = q.gens() else {
        return Err(Error::CheckFailed(format!("{q} must have exactly two generators")));
    };
    if !q.is_m_primary() {
        return Err(Error::NotMPrimary(q.to_string()));
    }
    if !a.in_max_ideal_power(2) || !b.in_max_ideal_power(2) {
        return Ok(None);
    }
    let ring = q.ring();
    let m = IdealHandle::maximal(ring);
    let socle = q.colon(&m)?;
    let qb = q.basis();
    let raw = socle
        .basis()
        .elems()
        .iter()
        .find(|p| !qb.contains(p))
        .cloned()
        .ok_or(Error::SocleGeneratorMissing)?;
    let c = qb.normal_form(&raw).monic();
    let socle_ideal = IdealHandle::new(ring, vec![a.clone(), b.clone(), c.clone()])?;
    let mu = socle.local_min_gens()?;
    if mu != 3 {
        return Err(Error::SocleGenerators(mu));
    }
    if !socle_ideal.equals(&socle)? {
        return Err(Error::CheckFailed("Q + (c) differs from Q : m".into()));
    }
    let coeffs = |v: &Poly<F>| -> Result<(Poly<F>, Poly<F>)> {
        let target = -&(v * &c);
        let rep = q.representation(&target)?.ok_or_else(|| Error::NotMember {
            element: target.to_string(),
            ideal: q.to_string(),
        })?;
        Ok((rep.coeffs[0].clone(), rep.coeffs[1].clone()))
    };
    let (f1, f2) = coeffs(&ring.var(0))?;
    let (g1, g2) = coeffs(&ring.var(1))?;
    Ok(Some(SocleReport { a: a.clone(), b: b.clone(), c, f1, f2, g1, g2, socle_ideal, mu }))
}

/// The one-directional socle criterion, falling through to the witness
/// search on `(Q:m, Q)` when it does not apply.
pub fn socle_ag_criterion<F: Field>(q: &IdealHandle<F>, seed: u64, trials: usize) -> Result<SocleVerdict<F>> {
    let Some(report) = socle_presentation(q)? else {
        return Ok(SocleVerdict { report: None, verdict: AGVerdict::Gorenstein });
    };
    if report.criterion_holds() {
        let verdict = AGVerdict::NotAlmostGorenstein(Box::new(report.clone()));
        return Ok(SocleVerdict { report: Some(report), verdict });
    }
    let verdict = ag_witness_search(&report.socle_ideal, q, seed, trials)?;
    Ok(SocleVerdict { report: Some(report), verdict })
}

/// The forms `F, G, H` and their comparison with the elimination ideal.
pub fn socle_fgh<F: Field>(q: &IdealHandle<F>) -> Result<FghReport<F>> {
    let socle = socle_presentation(q)?
        .ok_or_else(|| Error::CheckFailed(format!("{q} is not contained in m^2")))?;
    let ring = q.ring();
    let (a, b, c) = (&socle.a, &socle.b, &socle.c);
    let qi_gens = vec![a * a, b * b, a * b, b * c, c * a];
    let qi = IdealHandle::new(ring, qi_gens)?;
    let rep = qi.representation(&(c * c))?.ok_or(Error::SquareNotInQI)?;
    let sq: [Poly<F>; 5] = rep.coeffs.clone().try_into().expect("five coefficients");

    let names = ["X", "Y", "Z"];
    let pres = rees::rees_ideal_with(ring, &[a.clone(), b.clone(), c.clone()], &names)?;
    let s = pres.ring.clone();
    let keep = [Some(0), Some(1)];
    let lift = |p: &Poly<F>| p.embed(&s, &keep);
    let (bx, by, bz) = (s.var(2), s.var(3), s.var(4));
    let (x, y) = (s.var(0), s.var(1));
    let quad = [&bx * &bx, &by * &by, &bx * &by, &by * &bz, &bz * &bx];
    let mut tail = Poly::zero(&s);
    for (coef, mono) in sq.iter().zip(&quad) {
        tail = &tail + &(&lift(coef)? * mono);
    }
    let big_f = &(&bz * &bz) - &tail;
    let big_g = &(&(&lift(&socle.f1)? * &bx) + &(&lift(&socle.f2)? * &by)) + &(&x * &bz);
    let big_h = &(&(&lift(&socle.g1)? * &bx) + &(&lift(&socle.g2)? * &by)) + &(&y * &bz);
    let fgh = IdealHandle::new(&s, vec![big_g.clone(), big_h.clone(), big_f.clone()])?;
    let equal = fgh.equals(&pres.k)? || locally_equal(&fgh, &pres.k)?;
    Ok(FghReport { socle, square_coeffs: sq, big_f, big_g, big_h, rees: pres.k, equal })
}

/// Checks for the quadric hypersurface `k[x,y,z]/(f3)` with `I = m^ℓ` and
/// `Q = (a^ℓ, b^ℓ)`, all modulo `(f3)`.
#[derive(Clone, Debug)]
pub struct HypersurfaceReport<F: Field> {
    pub ell: u32,
    pub f3: Poly<F>,
    pub a: Poly<F>,
    pub b: Poly<F>,
    /// `m² + (f3) = (a,b)m + (f3)`.
    pub multiplicity_two: bool,
    /// `I² = QI`.
    pub reduction: bool,
    /// `Q : I = I`.
    pub colon_is_i: bool,
    /// `m^{ℓ+1} = a·m^ℓ + b^ℓ·m`, the second equality for `(f, h) = (a, b^ℓ)`.
    pub witness: bool,
    pub mu: usize,
}

impl<F: Field> HypersurfaceReport<F> {
    pub fn expected_mu(&self) -> usize {
        2 * self.ell as usize + 1
    }

    pub fn passed(&self) -> bool {
        self.multiplicity_two && self.reduction && self.colon_is_i && self.witness && self.mu == self.expected_mu()
    }
}

/// The default model `x² - yz` with `a = y`, `b = z` in `k[x,y,z]`.
pub fn default_hypersurface<F: Field>(field: F) -> (RingRef<F>, Poly<F>, Poly<F>, Poly<F>) {
    let r = Ring::new(field, &["x", "y", "z"], MonomialOrder::GrevLex).expect("valid ring");
    let (x, y, z) = (r.var(0), r.var(1), r.var(2));
    let f3 = &(&x * &x) - &(&y * &z);
    (r, f3, y, z)
}

fn modulo<F: Field>(i: &IdealHandle<F>, f3: &Poly<F>) -> Result<IdealHandle<F>> {
    i.with_generator(f3)
}

/// Whether `m² + (f3) = (a,b)m + (f3)`.
pub fn is_minimal_reduction_of_max<F: Field>(f3: &Poly<F>, a: &Poly<F>, b: &Poly<F>) -> Result<bool> {
    let ring = f3.ring();
    let ab = IdealHandle::new(ring, vec![a.clone(), b.clone()])?;
    let lhs = modulo(&IdealHandle::maximal_power(ring, 2), f3)?;
    let rhs = modulo(&ab.product(&IdealHandle::maximal(ring))?, f3)?;
    lhs.equals(&rhs)
}

/// Linear forms `a, b` with `m² + (f3) = (a,b)m + (f3)`: pairs of variables
/// first, then seeded random linear forms.
pub fn find_hypersurface_parameters<F: Field>(f3: &Poly<F>, seed: u64, trials: usize) -> Result<(Poly<F>, Poly<F>)> {
    let ring = f3.ring();
    let n = ring.nvars();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (ring.var(i), ring.var(j));
            if is_minimal_reduction_of_max(f3, &a, &b)? {
                return Ok((a, b));
            }
        }
    }
    let mut rng = search::rng(seed);
    for _ in 0..trials {
        let a = random_form(ring, 1, &mut rng);
        let b = random_form(ring, 1, &mut rng);
        if is_minimal_reduction_of_max(f3, &a, &b)? {
            return Ok((a, b));
        }
    }
    Err(Error::CheckFailed(format!("no linear a, b with m^2 = (a,b)m modulo {f3}")))
}

/// Run the checks; a failure of any equality is an error naming it.
pub fn hypersurface_example<F: Field>(ell: u32, f3: &Poly<F>, a: &Poly<F>, b: &Poly<F>) -> Result<HypersurfaceReport<F>> {
    let rep = hypersurface_report(ell, f3, a, b)?;
    let failed = [
        (rep.multiplicity_two, "m^2 = (a,b)m"),
        (rep.reduction, "I^2 = QI"),
        (rep.colon_is_i, "Q:I = I"),
        (rep.witness, "m^(l+1) = a*m^l + b^l*m"),
    ]
    .into_iter()
    .find(|(ok, _)| !ok);
    match failed {
        Some((_, what)) => Err(Error::CheckFailed(format!("{what} fails modulo {f3}"))),
        None => Ok(rep),
    }
}

/// Like [`hypersurface_example`], reporting failed equalities as flags.
pub fn hypersurface_report<F: Field>(ell: u32, f3: &Poly<F>, a: &Poly<F>, b: &Poly<F>) -> Result<HypersurfaceReport<F>> {
    let ring = f3.ring();
    if ell == 0 {
        return Err(Error::CheckFailed("ell must be positive".into()));
    }
    if f3.is_zero() || f3.is_homogeneous() != Some(2) {
        return Err(Error::NotGraded);
    }
    let multiplicity_two = is_minimal_reduction_of_max(f3, a, b)?;
    let m = IdealHandle::maximal(ring);
    let i = IdealHandle::maximal_power(ring, ell);
    let bl = b.pow(ell);
    let q = IdealHandle::new(ring, vec![a.pow(ell), bl.clone()])?;
    let i_mod = modulo(&i, f3)?;
    let reduction = modulo(&i.product(&i)?, f3)?.equals(&modulo(&q.product(&i)?, f3)?)?;
    let colon_is_i = modulo(&q, f3)?.colon(&i_mod)?.equals(&i_mod)?;
    let lhs = IdealHandle::maximal_power(ring, ell + 1);
    let rhs = i.scale(a)?.sum(&m.scale(&bl)?)?;
    let witness = modulo(&lhs, f3)?.equals(&modulo(&rhs, f3)?)?;
    let mu = i.min_gens(Some(f3))?;
    Ok(HypersurfaceReport { ell, f3: f3.clone(), a: a.clone(), b: b.clone(), multiplicity_two, reduction, colon_is_i, witness, mu })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::rees::DEFAULT_TRIALS;
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
    fn explicit_triple_for_pure_power_family() {
        let r = r2();
        let q = id(&r, "ideal(x^2, y^3)");
        let i = q.sum(&IdealHandle::maximal_power(&r, 3)).unwrap();
        let j = q.colon(&i).unwrap();
        let w = WitnessTriple::check(&i, &j, &p(&r, "x"), &p(&r, "x^2"), &p(&r, "y")).unwrap();
        assert!(w.unwrap().reverify().unwrap());
    }

    #[test]
    fn naive_triple_fails_but_search_succeeds() {
        let r = r2();
        let q = id(&r, "ideal(x^3, y^2)");
        let i = id(&r, "ideal(x^3, x^2*y, y^2)");
        let j = q.colon(&i).unwrap();
        assert!(WitnessTriple::check(&i, &j, &p(&r, "x"), &p(&r, "x^3"), &p(&r, "y")).unwrap().is_none());
        let v = ag_witness_search(&i, &q, 0, DEFAULT_TRIALS).unwrap();
        assert!(v.witness().unwrap().reverify().unwrap());
    }

    #[test]
    fn maximal_ideal_is_gorenstein() {
        let r = r2();
        let m = IdealHandle::maximal(&r);
        assert!(matches!(ag_witness_search(&m, &m, 0, 4).unwrap(), AGVerdict::Gorenstein));
        assert!(matches!(ag_check(&m, 0, 4).unwrap().verdict, AGVerdict::Gorenstein));
    }

    #[test]
    fn socle_examples() {
        let r = r2();
        let cases = [
            ("ideal(x^2, y^2)", "x*y", ["-y", "0", "0", "-x"]),
            ("ideal(x^3, y^3)", "x^2*y^2", ["-y^2", "0", "0", "-x^2"]),
            ("ideal(x^3, y^2)", "x^2*y", ["-y", "0", "0", "-x^2"]),
        ];
        for (q, c, coeffs) in cases {
            let rep = socle_presentation(&id(&r, q)).unwrap().unwrap();
            assert_eq!(rep.c, p(&r, c), "{q}");
            let got: Vec<String> = rep.coefficients().iter().map(|c| c.to_string()).collect();
            assert_eq!(got, coeffs, "{q}");
            assert!(rep.relations_hold());
            assert_eq!(rep.mu, 3);
        }
        assert!(socle_presentation(&id(&r, "ideal(x, y^3)")).unwrap().is_none());
    }

    #[test]
    fn socle_criterion_examples() {
        let r = r2();
        let v = socle_ag_criterion(&id(&r, "ideal(x^3, y^3)"), 0, DEFAULT_TRIALS).unwrap();
        assert!(matches!(v.verdict, AGVerdict::NotAlmostGorenstein(_)));
        let v = socle_ag_criterion(&id(&r, "ideal(x^4, y^3)"), 0, DEFAULT_TRIALS).unwrap();
        assert!(matches!(v.verdict, AGVerdict::NotAlmostGorenstein(_)));
        let v = socle_ag_criterion(&id(&r, "ideal(x^2, y^2)"), 0, DEFAULT_TRIALS).unwrap();
        assert!(v.verdict.witness().unwrap().reverify().unwrap());
        let v = socle_ag_criterion(&id(&r, "ideal(x, y^5)"), 0, DEFAULT_TRIALS).unwrap();
        assert!(matches!(v.verdict, AGVerdict::Gorenstein));
    }

    #[test]
    fn fgh_for_two_squares() {
        let r = r2();
        let rep = socle_fgh(&id(&r, "ideal(x^2, y^2)")).unwrap();
        assert!(rep.equal);
        let s = rep.big_f.ring().clone();
        assert_eq!(rep.big_f, parse_poly(&s, "Z^2 - X*Y").unwrap());
        assert_eq!(rep.big_g, parse_poly(&s, "-y*X + x*Z").unwrap());
        assert_eq!(rep.big_h, parse_poly(&s, "-x*Y + y*Z").unwrap());
        for q in ["ideal(x^3, y^2)", "ideal(x^3, y^3)"] {
            assert!(socle_fgh(&id(&r, q)).unwrap().equal, "{q}");
        }
    }

    #[test]
    fn hypersurface_counts() {
        let (_, f3, a, b) = default_hypersurface(PrimeField::default());
        for ell in 1..=3 {
            let rep = hypersurface_example(ell, &f3, &a, &b).unwrap();
            assert!(rep.passed(), "{rep:?}");
            assert_eq!(rep.mu, 2 * ell as usize + 1);
        }
        assert!(!hypersurface_report(1, &f3, &b, &b).unwrap().multiplicity_two);
        assert!(hypersurface_example(1, &f3, &b, &b).is_err());
        assert_eq!(find_hypersurface_parameters(&f3, 0, 8).unwrap(), (a, b));
    }

    #[test]
    fn hypersurface_parameters_for_other_quadrics() {
        let (r, _, _, _) = default_hypersurface(PrimeField::default());
        let f3 = p3(&r, "x*y - z^2");
        let (a, b) = find_hypersurface_parameters(&f3, 0, 8).unwrap();
        let rep = hypersurface_example(2, &f3, &a, &b).unwrap();
        assert_eq!(rep.mu, 5);
    }

    fn p3(r: &RingRef<PrimeField>, s: &str) -> Poly<PrimeField> {
        parse_poly(r, s).unwrap()
    }

    #[test]
    fn criterion_ignores_syzygy_perturbation() {
        let r = r2();
        let mut rng = search::rng(5);
        for q in ["ideal(x^3, y^3)", "ideal(x^2, y^2)", "ideal(x^4 + x*y^2, y^3)"] {
            let rep = socle_presentation(&id(&r, q)).unwrap().unwrap();
            for _ in 0..10 {
                let unit = Poly::constant(&r, r.field().random_nonzero(&mut rng));
                let lambda = &random_in_max_ideal(&r, 2, &mut rng) + &unit;
                let mut moved = rep.clone();
                moved.f1 = &rep.f1 + &(&lambda * &rep.b);
                moved.f2 = &rep.f2 - &(&lambda * &rep.a);
                assert!(moved.relations_hold());
                assert_eq!(moved.criterion_holds(), rep.criterion_holds(), "{q}");
            }
        }
    }

    #[test]
    fn search_rejects_non_reduction() {
        let r = r2();
        let i = IdealHandle::maximal_power(&r, 2);
        let q = id(&r, "ideal(x^2, x*y)");
        assert_eq!(ag_witness_search(&i, &q, 0, 4).unwrap_err(), Error::NotReduction);
    }
}
