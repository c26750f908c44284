//! Ideals given by generators, with memoized reduced Gröbner bases.
//!
//! Everything here is a global computation in the polynomial ring. The
//! `locally_*` helpers decide the corresponding statements after localizing
//! at the origin: by Nakayama, `B_m ⊆ A_m` holds exactly when
//! `B ⊆ A + m·B` in the polynomial ring.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{groebner_basis, Basis, Representation};
use crate::linalg;
use crate::order::{Exponent, MonomialOrder};
use crate::poly::{same_ring, Poly};
use crate::ring::{Ring, RingRef};

/// Largest power of `m` tried when isolating the component at the origin.
const LOCAL_COMPONENT_CAP: u32 = 48;

type Cache<F> = Mutex<HashMap<(MonomialOrder, bool), Arc<Basis<F>>>>;

pub struct IdealHandle<F: Field> {
    ring: RingRef<F>,
    gens: Vec<Poly<F>>,
    cache: Cache<F>,
}

impl<F: Field> Clone for IdealHandle<F> {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().unwrap().clone();
        IdealHandle { ring: self.ring.clone(), gens: self.gens.clone(), cache: Mutex::new(cache) }
    }
}

impl<F: Field> fmt::Debug for IdealHandle<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for IdealHandle<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

fn check_ring<F: Field>(ring: &RingRef<F>, other: &RingRef<F>) -> Result<()> {
    if same_ring(ring, other) {
        Ok(())
    } else if ring.nvars() != other.nvars() {
        Err(Error::Arity { expected: ring.nvars(), got: other.nvars() })
    } else {
        Err(Error::RingMismatch)
    }
}

/// All exponents of total degree `d` in `n` variables, in lex-descending order.
pub(crate) fn monomials_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    fn go(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if i + 1 == n {
            cur.push(left);
            out.push(Exponent::from_slice(cur, n).unwrap());
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            go(n, i + 1, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Exponent::ONE);
        }
        return out;
    }
    go(n, 0, d, &mut Vec::with_capacity(n), &mut out);
    out
}

impl<F: Field> IdealHandle<F> {
    pub fn new(ring: &RingRef<F>, gens: Vec<Poly<F>>) -> Result<Self> {
        for g in &gens {
            check_ring(ring, g.ring())?;
        }
        Ok(IdealHandle { ring: ring.clone(), gens, cache: Mutex::new(HashMap::new()) })
    }

    pub fn zero(ring: &RingRef<F>) -> Self {
        Self::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &RingRef<F>) -> Self {
        Self::new(ring, vec![Poly::one(ring)]).unwrap()
    }

    /// The ideal of all variables.
    pub fn maximal(ring: &RingRef<F>) -> Self {
        Self::new(ring, ring.vars()).unwrap()
    }

    /// `m^k`, generated by all monomials of degree `k`.
    pub fn maximal_power(ring: &RingRef<F>, k: u32) -> Self {
        let one = ring.field().one();
        let gens = monomials_of_degree(ring.nvars(), k)
            .into_iter()
            .map(|e| Poly::monomial(ring, e, one.clone()))
            .collect();
        Self::new(ring, gens).unwrap()
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero() || g.is_monomial())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous().is_some())
    }

    fn with_gens(&self, gens: Vec<Poly<F>>) -> Self {
        IdealHandle { ring: self.ring.clone(), gens, cache: Mutex::new(HashMap::new()) }
    }

    /// Reduced basis under `order`. A tracked basis expresses each element
    /// over [`Self::gens`].
    pub fn basis_with(&self, order: MonomialOrder, track: bool) -> Arc<Basis<F>> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some(b) = cache.get(&(order, track)) {
                return b.clone();
            }
            if !track {
                if let Some(b) = cache.get(&(order, true)) {
                    return b.clone();
                }
            }
        }
        let b = if order == self.ring.order() {
            groebner_basis(&self.ring, &self.gens, track)
        } else {
            let r = self.ring.with_order(order);
            let gens: Vec<_> = self.gens.iter().map(|g| g.reorder(&r)).collect();
            groebner_basis(&r, &gens, track)
        };
        let b = Arc::new(b);
        self.cache.lock().unwrap().entry((order, track)).or_insert(b).clone()
    }

    /// Reduced basis under the ring's own order.
    pub fn basis(&self) -> Arc<Basis<F>> {
        self.basis_with(self.ring.order(), false)
    }

    pub fn normal_form(&self, f: &Poly<F>) -> Result<Poly<F>> {
        check_ring(&self.ring, f.ring())?;
        Ok(self.basis().normal_form(f))
    }

    /// Remainder of `f` under `order` (returned in this ideal's ring) and,
    /// when `track`, a representation of `f - remainder` over the generators.
    pub fn normal_form_with(
        &self,
        f: &Poly<F>,
        order: MonomialOrder,
        track: bool,
    ) -> Result<(Poly<F>, Option<Representation<F>>)> {
        check_ring(&self.ring, f.ring())?;
        let b = self.basis_with(order, track);
        let f_in = if order == self.ring.order() { f.clone() } else { f.reorder(b.ring()) };
        if !track {
            return Ok((b.normal_form(&f_in).reorder(&self.ring), None));
        }
        let (rem, rep) = b.normal_form_tracked(&f_in);
        let coeffs = rep.coeffs.iter().map(|c| c.reorder(&self.ring)).collect();
        Ok((rem.reorder(&self.ring), Some(Representation { coeffs })))
    }

    pub fn member(&self, f: &Poly<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `Some(representation)` over the generators when `f` is a member.
    pub fn representation(&self, f: &Poly<F>) -> Result<Option<Representation<F>>> {
        let (rem, rep) = self.normal_form_with(f, self.ring.order(), true)?;
        Ok(if rem.is_zero() { rep } else { None })
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &IdealHandle<F>) -> Result<bool> {
        check_ring(&self.ring, &other.ring)?;
        let b = self.basis();
        Ok(other.gens.iter().all(|g| b.contains(g)))
    }

    /// Equality of ideals: identical reduced bases.
    pub fn equals(&self, other: &IdealHandle<F>) -> Result<bool> {
        check_ring(&self.ring, &other.ring)?;
        Ok(self.basis().elems() == other.basis().elems())
    }

    pub fn is_unit(&self) -> bool {
        self.basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn sum(&self, other: &IdealHandle<F>) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(self.with_gens(gens).minimalize())
    }

    /// Adds one element to the generator list (no minimalization).
    pub fn with_generator(&self, f: &Poly<F>) -> Result<Self> {
        check_ring(&self.ring, f.ring())?;
        let mut gens = self.gens.clone();
        gens.push(f.clone());
        Ok(self.with_gens(gens))
    }

    pub fn product(&self, other: &IdealHandle<F>) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ok(self.with_gens(gens).minimalize())
    }

    /// `f·I`.
    pub fn scale(&self, f: &Poly<F>) -> Result<Self> {
        check_ring(&self.ring, f.ring())?;
        Ok(self.with_gens(self.gens.iter().map(|g| g * f).collect()))
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = IdealHandle::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `I ∩ J` via `u·I + (1-u)·J` and elimination of the fresh variable `u`.
    pub fn intersect(&self, other: &IdealHandle<F>) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(IdealHandle::zero(&self.ring));
        }
        let fresh = fresh_name(self.ring.names(), "u");
        let big = self.ring.prepend(&[fresh], MonomialOrder::Elimination(1))?;
        let shift: Vec<Option<usize>> = (0..self.ring.nvars()).map(|i| Some(i + 1)).collect();
        let u = big.var(0);
        let one_minus_u = &Poly::one(&big) - &u;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(&u * &g.embed(&big, &shift)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_u * &g.embed(&big, &shift)?);
        }
        let joint = IdealHandle::new(&big, gens)?;
        let out = joint.eliminate(1)?;
        let gens = out.gens.iter().map(|g| g.reorder(&self.ring)).collect();
        Ok(self.with_gens(gens).minimalize())
    }

    /// `I : (g) = (I ∩ (g)) / g`.
    pub fn colon_poly(&self, g: &Poly<F>) -> Result<Self> {
        check_ring(&self.ring, g.ring())?;
        if g.is_zero() {
            return Err(Error::ColonByZero);
        }
        let principal = self.with_gens(vec![g.clone()]);
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|p| p.div_exact(g).expect("element of (g) divisible by g"))
            .collect();
        Ok(self.with_gens(gens).minimalize())
    }

    /// `I : J = ⋂_j (I : g_j)`.
    pub fn colon(&self, other: &IdealHandle<F>) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut acc: Option<IdealHandle<F>> = None;
        for g in other.gens.iter().filter(|g| !g.is_zero()) {
            let part = self.colon_poly(g)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
        }
        acc.ok_or(Error::ColonByZero)
    }

    /// `I ∩ k[x_{k+1}, ..]`, returned in the ring of the remaining variables
    /// with grevlex.
    pub fn eliminate(&self, k: usize) -> Result<Self> {
        if k > self.ring.nvars() {
            return Err(Error::Arity { expected: self.ring.nvars(), got: k });
        }
        let rest = Ring::new(self.ring.field().clone(), &self.ring.names()[k..], MonomialOrder::GrevLex)?;
        if k == 0 {
            let gens = self.gens.iter().map(|g| g.reorder(&rest)).collect();
            return IdealHandle::new(&rest, gens);
        }
        let b = self.basis_with(MonomialOrder::Elimination(k), false);
        let positions: Vec<Option<usize>> = (0..self.ring.nvars()).map(|i| i.checked_sub(k)).collect();
        let gens = b
            .elems()
            .iter()
            .filter(|p| p.terms().iter().all(|(e, _)| e.block_degree(0..k) == 0))
            .map(|p| p.embed(&rest, &positions))
            .collect::<Result<Vec<_>>>()?;
        IdealHandle::new(&rest, gens)
    }

    /// Monomials outside the leading-term ideal.
    pub fn standard_monomials(&self) -> Result<Vec<Exponent>> {
        let b = self.basis();
        let lts = b.leading_exponents();
        let n = self.ring.nvars();
        for i in 0..n {
            if !lts.iter().any(|e| e.pure_power().is_some_and(|(v, _)| v == i) || e.is_one()) {
                return Err(Error::InfiniteColength);
            }
        }
        let mut seen: HashSet<Exponent> = HashSet::new();
        let mut stack = Vec::new();
        if !lts.iter().any(|l| l.is_one()) {
            seen.insert(Exponent::ONE);
            stack.push(Exponent::ONE);
        }
        while let Some(e) = stack.pop() {
            for i in 0..n {
                let next = e.mul(&Exponent::var(i, 1));
                if !seen.contains(&next) && !lts.iter().any(|l| l.divides(&next)) {
                    seen.insert(next);
                    stack.push(next);
                }
            }
        }
        let order = self.ring.order();
        let mut out: Vec<Exponent> = seen.into_iter().collect();
        out.sort_by(|a, b| order.cmp(a, b));
        Ok(out)
    }

    /// `dim_k R/I`.
    pub fn vdim(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }

    /// Proper, finite colength, and every variable nilpotent modulo `I`.
    pub fn is_m_primary(&self) -> bool {
        let Ok(n) = self.vdim() else { return false };
        if n == 0 {
            return false;
        }
        let b = self.basis();
        let k = u16::try_from(n).unwrap_or(u16::MAX);
        let one = self.ring.field().one();
        (0..self.ring.nvars()).all(|i| b.contains(&Poly::monomial(&self.ring, Exponent::var(i, k), one.clone())))
    }

    /// Minimal number of generators of a homogeneous ideal, optionally in
    /// the quotient by a homogeneous `modulus`. Counted degree by degree as
    /// `dim (I + (f))_d - dim (m·I + (f))_d`.
    pub fn min_gens(&self, modulus: Option<&Poly<F>>) -> Result<usize> {
        let gens: Vec<&Poly<F>> = self.gens.iter().filter(|g| !g.is_zero()).collect();
        let mut degs = Vec::with_capacity(gens.len());
        for g in &gens {
            degs.push(g.is_homogeneous().ok_or(Error::NotGraded)?);
        }
        if let Some(f) = modulus {
            check_ring(&self.ring, f.ring())?;
            if f.is_homogeneous().is_none() {
                return Err(Error::NotGraded);
            }
        }
        let Some(&top) = degs.iter().max() else { return Ok(0) };
        let n = self.ring.nvars();
        let vars = self.ring.vars();
        let shifted: Vec<Poly<F>> = gens.iter().flat_map(|g| vars.iter().map(move |v| *g * v)).collect();
        let mut total = 0;
        for d in 0..=top {
            let mut upper: Vec<&Poly<F>> = gens.to_vec();
            let mut lower: Vec<&Poly<F>> = shifted.iter().collect();
            if let Some(f) = modulus.filter(|f| !f.is_zero()) {
                upper.push(f);
                lower.push(f);
            }
            let hi = self.graded_dim(&upper, d, n);
            let lo = self.graded_dim(&lower, d, n);
            total += hi - lo;
        }
        Ok(total)
    }

    /// `dim_k` of the degree-`d` piece of the ideal generated by homogeneous `gens`.
    fn graded_dim(&self, gens: &[&Poly<F>], d: u32, n: usize) -> usize {
        let field = self.ring.field();
        let cols = monomials_of_degree(n, d);
        let index: HashMap<Exponent, usize> = cols.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut rows = Vec::new();
        for g in gens {
            let e = g.is_homogeneous().unwrap();
            if g.is_zero() || e > d {
                continue;
            }
            for m in monomials_of_degree(n, d - e) {
                let mut row = vec![field.zero(); cols.len()];
                for (t, c) in g.terms() {
                    row[index[&t.mul(&m)]] = c.clone();
                }
                rows.push(row);
            }
        }
        linalg::rank(field, rows)
    }

    /// Minimal number of generators after localizing at the origin, for an
    /// m-primary ideal: `dim_k I/mI = vdim(mI) - vdim(I)`.
    pub fn local_min_gens(&self) -> Result<usize> {
        if !self.is_m_primary() {
            return Err(Error::NotMPrimary(self.to_string()));
        }
        let m = IdealHandle::maximal(&self.ring);
        let mi = self.product(&m)?;
        Ok(mi.vdim()? - self.vdim()?)
    }

    /// Whether some generator is a unit at the origin.
    pub fn is_locally_unit(&self) -> bool {
        self.gens.iter().any(|g| g.order_at_origin() == Some(0))
    }

    /// The component of `I` at the origin, `I_m ∩ R`, for ideals whose
    /// localization is m-primary. Computed as `I + m^N` for the first `N`
    /// with `m^N ⊆ I + m^{N+1}`.
    pub fn local_component(&self) -> Result<Self> {
        if self.is_locally_unit() {
            return Ok(IdealHandle::unit(&self.ring));
        }
        if self.is_m_primary() {
            return Ok(self.clone());
        }
        for n in 1..=LOCAL_COMPONENT_CAP {
            let mn = IdealHandle::maximal_power(&self.ring, n);
            let bigger = self.sum(&IdealHandle::maximal_power(&self.ring, n + 1))?;
            if bigger.contains(&mn)? {
                return self.sum(&mn);
            }
        }
        Err(Error::NotMPrimary(self.to_string()))
    }

    /// `other_m ⊆ self_m`, decided as `other ⊆ self + m·other`.
    pub fn locally_contains(&self, other: &IdealHandle<F>) -> Result<bool> {
        check_ring(&self.ring, &other.ring)?;
        let m = IdealHandle::maximal(&self.ring);
        let mut gens = self.gens.clone();
        gens.extend(other.product(&m)?.gens);
        let target = self.with_gens(gens);
        target.contains(other)
    }

    /// Drops redundant generators: for monomial lists by divisibility,
    /// otherwise by keeping a generator only if it is not in the ideal of
    /// those kept before it (processed by increasing degree). Generators are
    /// made monic and listed in canonical order (leading terms descending).
    pub fn minimalize(&self) -> Self {
        let order = self.ring.order();
        let mut cand: Vec<Poly<F>> = self.gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
        if cand.iter().any(|g| g.is_constant()) {
            return IdealHandle::unit(&self.ring);
        }
        cand.sort_by(|a, b| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then_with(|| order.cmp(&a.leading_exponent().unwrap(), &b.leading_exponent().unwrap()))
        });
        cand.dedup();
        let mut kept: Vec<Poly<F>> = Vec::new();
        if cand.iter().all(|g| g.is_monomial()) {
            for g in cand {
                let e = g.leading_exponent().unwrap();
                if !kept.iter().any(|k| k.leading_exponent().unwrap().divides(&e)) {
                    kept.push(g);
                }
            }
        } else {
            for g in cand {
                if kept.is_empty() || !groebner_basis(&self.ring, &kept, false).contains(&g) {
                    kept.push(g);
                }
            }
        }
        kept.sort_by(|a, b| order.cmp(&b.leading_exponent().unwrap(), &a.leading_exponent().unwrap()));
        let out = self.with_gens(kept);
        if let Some(b) = self.cache.lock().unwrap().get(&(order, false)) {
            out.cache.lock().unwrap().insert((order, false), b.clone());
        }
        out
    }
}

/// `A_m = B_m` after localizing at the origin.
pub fn locally_equal<F: Field>(a: &IdealHandle<F>, b: &IdealHandle<F>) -> Result<bool> {
    Ok(a.locally_contains(b)? && b.locally_contains(a)?)
}

fn fresh_name(names: &[String], base: &str) -> String {
    if !names.iter().any(|n| n == base) {
        return base.to_string();
    }
    (0..)
        .map(|i| format!("{base}{i}"))
        .find(|c| !names.iter().any(|n| n == c))
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::text::{parse_ideal, parse_poly};

    fn r2() -> RingRef<PrimeField> {
        Ring::plane(PrimeField::default())
    }

    fn r3() -> RingRef<PrimeField> {
        Ring::new(PrimeField::default(), &["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
    }

    fn id(r: &RingRef<PrimeField>, s: &str) -> IdealHandle<PrimeField> {
        parse_ideal(r, s).unwrap()
    }

    fn p(r: &RingRef<PrimeField>, s: &str) -> Poly<PrimeField> {
        parse_poly(r, s).unwrap()
    }

    #[test]
    fn products_and_powers() {
        let r = r2();
        let m = IdealHandle::maximal(&r);
        assert_eq!(m.product(&m).unwrap().to_string(), "ideal(x^2, x*y, y^2)");
        assert!(m.power(0).is_unit());
        let a = id(&r, "ideal(x^2, y^2)").product(&id(&r, "ideal(x^2, y^2, x*y)")).unwrap();
        assert!(a.equals(&IdealHandle::maximal_power(&r, 4)).unwrap());
        assert_eq!(a.len(), 5);
    }

    #[test]
    fn intersections() {
        let r = r2();
        let got = id(&r, "ideal(x)").intersect(&id(&r, "ideal(y)")).unwrap();
        assert_eq!(got.to_string(), "ideal(x*y)");
        let got = id(&r, "ideal(x^2, y)").intersect(&id(&r, "ideal(x, y^2)")).unwrap();
        assert!(got.equals(&id(&r, "ideal(x^2, x*y, y^2)")).unwrap());
        let a = id(&r, "ideal(x^2, y)");
        assert!(a.intersect(&a).unwrap().equals(&a).unwrap());
    }

    #[test]
    fn colons() {
        let r = r2();
        let m = IdealHandle::maximal(&r);
        let got = id(&r, "ideal(x^2, y^2)").colon(&m).unwrap();
        assert!(got.equals(&id(&r, "ideal(x^2, x*y, y^2)")).unwrap());
        let got = id(&r, "ideal(x^3, y^3)").colon(&id(&r, "ideal(x^3, y^3, x^2*y^2)")).unwrap();
        assert!(got.equals(&m).unwrap());
        assert_eq!(m.colon(&IdealHandle::zero(&r)).unwrap_err(), Error::ColonByZero);
        for mm in 2..=4u32 {
            for n in mm..=5u32 {
                let q = id(&r, &format!("ideal(x^{mm}, y^{n})"));
                let i = q.sum(&IdealHandle::maximal_power(&r, n)).unwrap();
                let j = q.colon(&i).unwrap();
                assert!(j.equals(&IdealHandle::maximal_power(&r, mm - 1)).unwrap(), "m={mm} n={n}");
            }
        }
    }

    #[test]
    fn elimination() {
        let r = Ring::new(PrimeField::default(), &["t", "x", "y", "X", "Y"], MonomialOrder::GrevLex).unwrap();
        let i = parse_ideal(&r, "ideal(X - t*x, Y - t*y)").unwrap();
        let k = i.eliminate(1).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k.ring().names(), &["x", "y", "X", "Y"]);
        let expect = parse_poly(k.ring(), "x*Y - y*X").unwrap();
        assert_eq!(k.gens()[0].monic(), expect.monic());

        let r = Ring::new(PrimeField::default(), &["u", "x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = parse_ideal(&r, "ideal(u*x, (1-u)*y)").unwrap();
        assert_eq!(i.eliminate(1).unwrap().to_string(), "ideal(x*y)");
        let same = id(&r2(), "ideal(x^2, y)").eliminate(0).unwrap();
        assert!(same.equals(&id(&r2(), "ideal(x^2, y)")).unwrap());
    }

    #[test]
    fn equality() {
        let r = r2();
        assert!(id(&r, "ideal(x, y)").equals(&id(&r, "ideal(y, x+y)")).unwrap());
        assert!(!IdealHandle::maximal_power(&r, 2).equals(&id(&r, "ideal(x^2, y^2)")).unwrap());
        let lex = Ring::new(PrimeField::default(), &["x", "y"], MonomialOrder::Lex).unwrap();
        assert_eq!(
            id(&r, "ideal(x)").equals(&parse_ideal(&lex, "ideal(x)").unwrap()).unwrap_err(),
            Error::RingMismatch
        );
    }

    #[test]
    fn colength() {
        let r = r2();
        assert_eq!(IdealHandle::maximal_power(&r, 2).vdim().unwrap(), 3);
        assert_eq!(id(&r, "ideal(x^2, y^3)").vdim().unwrap(), 6);
        assert!(!id(&r, "ideal(x)").is_m_primary());
        assert_eq!(id(&r, "ideal(x)").vdim().unwrap_err(), Error::InfiniteColength);
        // finite colength away from the origin
        let away = id(&r, "ideal(x - 1, y)");
        assert_eq!(away.vdim().unwrap(), 1);
        assert!(!away.is_m_primary());
        assert!(!IdealHandle::unit(&r).is_m_primary());
    }

    #[test]
    fn graded_generator_counts() {
        let r = r2();
        for l in 1..=5 {
            assert_eq!(IdealHandle::maximal_power(&r, l).min_gens(None).unwrap(), l as usize + 1);
        }
        let r = r3();
        let i = id(&r, "ideal(x^2*y, y^2*z, z^2*x, x*y*z)");
        assert_eq!(i.min_gens(None).unwrap(), 4);
        let f = p(&r, "x^2 - y*z");
        assert_eq!(IdealHandle::maximal_power(&r, 2).min_gens(Some(&f)).unwrap(), 5);
        assert_eq!(id(&r, "ideal(x + y^2)").min_gens(None).unwrap_err(), Error::NotGraded);
    }

    #[test]
    fn membership_with_representation() {
        let r = r2();
        let i = id(&r, "ideal(x^2, y^2)").product(&id(&r, "ideal(x^2, y^2, x*y)")).unwrap();
        let f = p(&r, "x^2*y^2");
        let rep = i.representation(&f).unwrap().unwrap();
        assert!(rep.verifies(i.gens(), &f));
        assert!(!id(&r, "ideal(x^2, y^2)").member(&p(&r, "x*y")).unwrap());
        let zero = Poly::zero(&r);
        let rep = i.representation(&zero).unwrap().unwrap();
        assert!(rep.coeffs.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn local_equality_sees_through_units() {
        let r = r2();
        let a = id(&r, "ideal(x, y)");
        let b = id(&r, "ideal(x + x*y, y - x*y)");
        assert!(locally_equal(&a, &b).unwrap());
        let c = id(&r, "ideal(x*(1 - x), y)");
        assert!(!c.equals(&a).unwrap());
        assert!(locally_equal(&a, &c).unwrap());
        assert!(!locally_equal(&a, &id(&r, "ideal(x^2, y)")).unwrap());
    }

    #[test]
    fn component_at_origin() {
        let r = r2();
        let q = id(&r, "ideal(x*(1 - x), y)");
        let q0 = q.local_component().unwrap();
        assert!(q0.equals(&id(&r, "ideal(x, y)")).unwrap());
        let q = id(&r, "ideal(x^2 + x^3, y^2 - x*y^2)");
        assert!(q.local_component().unwrap().equals(&id(&r, "ideal(x^2, y^2)")).unwrap());
        assert!(id(&r, "ideal(1 + x)").local_component().unwrap().is_unit());
    }

    #[test]
    fn local_generator_count() {
        let r = r2();
        assert_eq!(id(&r, "ideal(x^2, x*y, y^2)").local_min_gens().unwrap(), 3);
        assert_eq!(id(&r, "ideal(x^2 + y^3, y^4, x*y)").local_min_gens().unwrap(), 2);
    }

    #[test]
    fn rationals_work_too() {
        let r = Ring::plane(Rationals);
        let i = parse_ideal(&r, "ideal(2*x - y, x + 3*y)").unwrap();
        assert!(i.equals(&IdealHandle::maximal(&r)).unwrap());
    }
}
