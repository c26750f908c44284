//! Buchberger's algorithm with the normal selection strategy, both classical
//! criteria, and optional cofactor tracking.
//!
//! With tracking on, every basis element carries its expression as a
//! combination of the original generators. The cofactors are carried through
//! S-polynomials, reductions and the final inter-reduction, so a normal form
//! computed against a tracked basis yields an explicit representation over
//! the input generators.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::field::Field;
use crate::order::Exponent;
use crate::poly::{same_ring, Poly, Term};
use crate::ring::RingRef;

/// A reduced, monic Gröbner basis sorted ascending by leading monomial.
#[derive(Clone, Debug)]
pub struct Basis<F: Field> {
    ring: RingRef<F>,
    elems: Vec<Poly<F>>,
    cofactors: Option<Vec<Vec<Poly<F>>>>,
    ngens: usize,
}

/// Coefficients expressing an element as `Σ coeffs[i]·gens[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F: Field> {
    pub coeffs: Vec<Poly<F>>,
}

impl<F: Field> Representation<F> {
    pub fn combine(&self, gens: &[Poly<F>]) -> Poly<F> {
        assert_eq!(gens.len(), self.coeffs.len());
        let ring = gens.first().map(|g| g.ring().clone());
        let mut acc = match (ring, self.coeffs.first()) {
            (Some(r), _) => Poly::zero(&r),
            (None, Some(c)) => Poly::zero(c.ring()),
            (None, None) => unreachable!("empty representation needs a ring"),
        };
        for (c, g) in self.coeffs.iter().zip(gens) {
            acc = &acc + &(c * g);
        }
        acc
    }

    /// `Σ cᵢgᵢ` reconstructs `target` exactly.
    pub fn verifies(&self, gens: &[Poly<F>], target: &Poly<F>) -> bool {
        gens.len() == self.coeffs.len() && (gens.is_empty() && target.is_zero() || self.combine(gens) == *target)
    }
}

impl<F: Field> Basis<F> {
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn elems(&self) -> &[Poly<F>] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_tracked(&self) -> bool {
        self.cofactors.is_some()
    }

    pub fn cofactors(&self) -> Option<&[Vec<Poly<F>>]> {
        self.cofactors.as_deref()
    }

    pub fn leading_exponents(&self) -> Vec<Exponent> {
        self.elems.iter().map(|p| p.leading_exponent().unwrap()).collect()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.elems[0].is_constant()
    }

    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        assert!(same_ring(f.ring(), &self.ring), "normal form across rings");
        reduce(f, &self.elems, None, true, false).0
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Remainder together with `f - remainder` written over the original
    /// generators. Panics if the basis was built without tracking.
    pub fn normal_form_tracked(&self, f: &Poly<F>) -> (Poly<F>, Representation<F>) {
        let cofs = self.cofactors.as_ref().expect("basis built without cofactor tracking");
        let (rem, quots) = reduce(f, &self.elems, None, true, true);
        let mut coeffs = vec![Poly::zero(&self.ring); self.ngens];
        for (k, q) in quots.into_iter().enumerate() {
            if q.is_empty() {
                continue;
            }
            let q = Poly::from_sorted(&self.ring, q);
            for (slot, c) in coeffs.iter_mut().zip(&cofs[k]) {
                if !c.is_zero() {
                    *slot = &*slot + &(&q * c);
                }
            }
        }
        (rem, Representation { coeffs })
    }

    /// Termwise equality of reduced bases.
    pub fn same_as(&self, other: &Basis<F>) -> bool {
        same_ring(&self.ring, &other.ring) && self.elems == other.elems
    }
}

/// Reduce `f` by `divisors` (skipping index `skip`). With `full` the tail is
/// reduced as well; otherwise only the leading term. Returns the remainder
/// and, when `track`, the quotient terms per divisor (already descending).
pub(crate) fn reduce<F: Field>(
    f: &Poly<F>,
    divisors: &[Poly<F>],
    skip: Option<usize>,
    full: bool,
    track: bool,
) -> (Poly<F>, Vec<Vec<Term<F>>>) {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let order = ring.order();
    let lts: Vec<Option<(Exponent, F::Elem)>> = divisors
        .iter()
        .enumerate()
        .map(|(k, d)| {
            if Some(k) == skip {
                None
            } else {
                d.leading_term().map(|(e, c)| (*e, field.inv(c)))
            }
        })
        .collect();
    let mut quots: Vec<Vec<Term<F>>> = if track { vec![Vec::new(); divisors.len()] } else { Vec::new() };
    let mut rem: Vec<Term<F>> = Vec::new();
    let mut work: Vec<Term<F>> = f.terms().to_vec();
    let mut pos = 0;
    while pos < work.len() {
        let (e, c) = &work[pos];
        let hit = lts.iter().enumerate().find_map(|(k, lt)| {
            lt.as_ref().and_then(|(le, linv)| le.quotient_of(e).map(|m| (k, m, linv)))
        });
        match hit {
            Some((k, m, linv)) => {
                let q = field.mul(c, linv);
                let tail = &divisors[k].terms()[1..];
                let mut next = Vec::with_capacity(work.len() - pos + tail.len());
                let (a, b) = (&work[pos + 1..], tail);
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let bt = b.get(j).map(|(be, _)| be.mul(&m));
                    let ord = match (a.get(i), &bt) {
                        (Some(at), Some(be)) => order.cmp(&at.0, be),
                        (Some(_), None) => Ordering::Greater,
                        (None, _) => Ordering::Less,
                    };
                    match ord {
                        Ordering::Greater => {
                            next.push(a[i].clone());
                            i += 1;
                        }
                        Ordering::Less => {
                            next.push((bt.unwrap(), field.neg(&field.mul(&q, &b[j].1))));
                            j += 1;
                        }
                        Ordering::Equal => {
                            let v = field.sub(&a[i].1, &field.mul(&q, &b[j].1));
                            if !field.is_zero(&v) {
                                next.push((a[i].0, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                }
                if track {
                    quots[k].push((m, q));
                }
                work = next;
                pos = 0;
            }
            None => {
                if !full {
                    rem.extend(work.drain(pos..));
                    break;
                }
                rem.push(work[pos].clone());
                pos += 1;
            }
        }
    }
    (Poly::from_sorted(&ring, rem), quots)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exponent,
}

struct Builder<F: Field> {
    ring: RingRef<F>,
    ngens: usize,
    track: bool,
    elems: Vec<Poly<F>>,
    cofs: Vec<Vec<Poly<F>>>,
    pending: Vec<Pair>,
    pending_keys: HashSet<(usize, usize)>,
}

/// `base - Σ_k quots[k]·cofs[k]`.
fn subtract_quotients<F: Field>(
    ring: &RingRef<F>,
    cofs: &[Vec<Poly<F>>],
    base: Vec<Poly<F>>,
    quots: Vec<Vec<Term<F>>>,
) -> Vec<Poly<F>> {
    let mut out = base;
    for (k, q) in quots.into_iter().enumerate() {
        if q.is_empty() {
            continue;
        }
        let q = Poly::from_sorted(ring, q);
        for (slot, c) in out.iter_mut().zip(&cofs[k]) {
            if !c.is_zero() {
                *slot = &*slot - &(&q * c);
            }
        }
    }
    out
}

impl<F: Field> Builder<F> {
    fn push(&mut self, p: Poly<F>, cof: Vec<Poly<F>>) {
        let field = self.ring.field().clone();
        let lc_inv = field.inv(p.leading_coeff().unwrap());
        let p = p.scale(&lc_inv);
        let cof = if self.track { cof.iter().map(|c| c.scale(&lc_inv)).collect() } else { Vec::new() };
        let k = self.elems.len();
        let lt = p.leading_exponent().unwrap();
        for i in 0..k {
            let lcm = self.elems[i].leading_exponent().unwrap().lcm(&lt);
            self.pending.push(Pair { i, j: k, lcm });
            self.pending_keys.insert((i, k));
        }
        self.elems.push(p);
        self.cofs.push(cof);
    }

    fn unit_cofactor(&self, i: usize) -> Vec<Poly<F>> {
        if !self.track {
            return Vec::new();
        }
        let mut v = vec![Poly::zero(&self.ring); self.ngens];
        v[i] = Poly::one(&self.ring);
        v
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pending.is_empty() {
            return None;
        }
        let order = self.ring.order();
        let mut best = 0;
        for k in 1..self.pending.len() {
            let (a, b) = (&self.pending[k], &self.pending[best]);
            let key = a
                .lcm
                .degree()
                .cmp(&b.lcm.degree())
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if key == Ordering::Less {
                best = k;
            }
        }
        let pair = self.pending.swap_remove(best);
        self.pending_keys.remove(&(pair.i, pair.j));
        Some(pair)
    }

    fn chain_criterion(&self, pair: &Pair) -> bool {
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        (0..self.elems.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && self.elems[k].leading_exponent().unwrap().divides(&pair.lcm)
                && !self.pending_keys.contains(&key(pair.i, k))
                && !self.pending_keys.contains(&key(pair.j, k))
        })
    }

    fn s_polynomial(&self, pair: &Pair) -> (Poly<F>, Vec<Poly<F>>) {
        let one = self.ring.field().one();
        let (gi, gj) = (&self.elems[pair.i], &self.elems[pair.j]);
        let mi = gi.leading_exponent().unwrap().quotient_of(&pair.lcm).unwrap();
        let mj = gj.leading_exponent().unwrap().quotient_of(&pair.lcm).unwrap();
        let s = &gi.mul_term(&mi, &one) - &gj.mul_term(&mj, &one);
        let cof = if self.track {
            self.cofs[pair.i]
                .iter()
                .zip(&self.cofs[pair.j])
                .map(|(a, b)| &a.mul_term(&mi, &one) - &b.mul_term(&mj, &one))
                .collect()
        } else {
            Vec::new()
        };
        (s, cof)
    }

    fn run(mut self) -> Basis<F> {
        while let Some(pair) = self.next_pair() {
            let lti = self.elems[pair.i].leading_exponent().unwrap();
            let ltj = self.elems[pair.j].leading_exponent().unwrap();
            if lti.is_coprime(&ltj) || self.chain_criterion(&pair) {
                continue;
            }
            let (s, cof) = self.s_polynomial(&pair);
            let (r, quots) = reduce(&s, &self.elems, None, true, self.track);
            if !r.is_zero() {
                let cof = if self.track { subtract_quotients(&self.ring, &self.cofs, cof, quots) } else { cof };
                self.push(r, cof);
            }
        }
        self.finish()
    }

    fn finish(self) -> Basis<F> {
        let lts: Vec<Exponent> = self.elems.iter().map(|p| p.leading_exponent().unwrap()).collect();
        let keep: Vec<usize> = (0..self.elems.len())
            .filter(|&i| {
                !(0..lts.len()).any(|j| j != i && lts[j].divides(&lts[i]) && (lts[j] != lts[i] || j < i))
            })
            .collect();
        let mut elems: Vec<Poly<F>> = keep.iter().map(|&i| self.elems[i].clone()).collect();
        let mut cofs: Vec<Vec<Poly<F>>> = keep.iter().map(|&i| self.cofs[i].clone()).collect();
        for i in 0..elems.len() {
            let (r, quots) = reduce(&elems[i], &elems, Some(i), true, self.track);
            if self.track {
                let base = std::mem::take(&mut cofs[i]);
                cofs[i] = subtract_quotients(&self.ring, &cofs, base, quots);
            }
            elems[i] = r;
        }
        let order = self.ring.order();
        let mut idx: Vec<usize> = (0..elems.len()).collect();
        idx.sort_by(|&a, &b| order.cmp(&elems[a].leading_exponent().unwrap(), &elems[b].leading_exponent().unwrap()));
        let sorted_elems = idx.iter().map(|&i| elems[i].clone()).collect();
        let cofactors = self.track.then(|| idx.iter().map(|&i| cofs[i].clone()).collect());
        Basis { ring: self.ring, elems: sorted_elems, cofactors, ngens: self.ngens }
    }
}

/// Reduced Gröbner basis of `gens` under `ring`'s order. All generators must
/// live in `ring`. With `track`, cofactors over `gens` are maintained.
pub fn groebner_basis<F: Field>(ring: &RingRef<F>, gens: &[Poly<F>], track: bool) -> Basis<F> {
    for g in gens {
        assert!(same_ring(g.ring(), ring), "generator from a different ring");
    }
    let mut b = Builder {
        ring: ring.clone(),
        ngens: gens.len(),
        track,
        elems: Vec::new(),
        cofs: Vec::new(),
        pending: Vec::new(),
        pending_keys: HashSet::new(),
    };
    // lowest degree first keeps the early basis small
    let mut idx: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_zero()).collect();
    let order = ring.order();
    idx.sort_by(|&a, &b| {
        let (ea, eb) = (gens[a].leading_exponent().unwrap(), gens[b].leading_exponent().unwrap());
        ea.degree().cmp(&eb.degree()).then_with(|| order.cmp(&ea, &eb)).then(a.cmp(&b))
    });
    for i in idx {
        let (r, quots) = reduce(&gens[i], &b.elems, None, true, track);
        if !r.is_zero() {
            let cof = if track { subtract_quotients(ring, &b.cofs, b.unit_cofactor(i), quots) } else { Vec::new() };
            b.push(r, cof);
        }
    }
    b.run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::order::MonomialOrder;
    use crate::ring::Ring;
    use crate::text::parse_poly;

    fn ring2() -> RingRef<PrimeField> {
        Ring::plane(PrimeField::default())
    }

    fn polys<F: Field>(r: &RingRef<F>, src: &[&str]) -> Vec<Poly<F>> {
        src.iter().map(|s| parse_poly(r, s).unwrap()).collect()
    }

    fn basis_text<F: Field>(b: &Basis<F>) -> Vec<String> {
        b.elems().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn already_a_basis() {
        let r = ring2();
        let b = groebner_basis(&r, &polys(&r, &["x^2", "x*y"]), false);
        assert_eq!(basis_text(&b), vec!["x*y", "x^2"]);
    }

    #[test]
    fn linear_change_of_coordinates() {
        let r = ring2();
        let b = groebner_basis(&r, &polys(&r, &["x+y", "x-y"]), false);
        assert_eq!(basis_text(&b), vec!["y", "x"]);
    }

    #[test]
    fn single_binomial_in_rees_ring() {
        let r = Ring::new(PrimeField::default(), &["x", "y", "X", "Y"], MonomialOrder::GrevLex).unwrap();
        let b = groebner_basis(&r, &polys(&r, &["x*Y - y*X"]), false);
        assert_eq!(b.len(), 1);
        assert_eq!(b.elems()[0], parse_poly(&r, "x*Y - y*X").unwrap().monic());
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let r = ring2();
        let b = groebner_basis(&r, &[Poly::zero(&r)], true);
        assert!(b.is_empty());
        let f = parse_poly(&r, "x+1").unwrap();
        assert_eq!(b.normal_form(&f), f);
    }

    #[test]
    fn hand_division_with_representation() {
        let r = ring2();
        let gens = polys(&r, &["x^2", "y^2"]);
        let b = groebner_basis(&r, &gens, true);
        let f = parse_poly(&r, "x^2*y").unwrap();
        let (rem, rep) = b.normal_form_tracked(&f);
        assert!(rem.is_zero());
        assert_eq!(rep.coeffs, polys(&r, &["y", "0"]));
        assert!(rep.verifies(&gens, &f));
        assert_eq!(b.normal_form(&r.var(0)), r.var(0));
    }

    #[test]
    fn tracked_cofactors_reconstruct_basis() {
        let r = Ring::new(Rationals, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let gens = polys(&r, &["x^2 - y*z", "x*y - z^2 + x", "y^3 - 2*x*z"]);
        let b = groebner_basis(&r, &gens, true);
        for (g, cof) in b.elems().iter().zip(b.cofactors().unwrap()) {
            let rep = Representation { coeffs: cof.clone() };
            assert!(rep.verifies(&gens, g));
        }
    }

    #[test]
    fn cyclic_three_over_lex() {
        // classic textbook system; the lex basis ends in a univariate element
        let r = Ring::new(Rationals, &["x", "y", "z"], MonomialOrder::Lex).unwrap();
        let gens = polys(&r, &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]);
        let b = groebner_basis(&r, &gens, true);
        assert_eq!(basis_text(&b), vec!["z^3 - 1", "y^2 + y*z + z^2", "x + y + z"]);
    }
}
