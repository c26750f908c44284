//! Sparse multivariate polynomials.
//!
//! A [`Poly`] keeps its terms strictly sorted in descending order under the
//! ring's monomial order, with no zero coefficients and no repeated
//! exponents. All constructors establish that canonical form and all
//! arithmetic preserves it, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::order::Exponent;
use crate::ring::RingRef;

pub type Term<F> = (Exponent, <F as Field>::Elem);

#[derive(Clone)]
pub struct Poly<F: Field> {
    ring: RingRef<F>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl<F: Field> Eq for Poly<F> {}

pub(crate) fn same_ring<F: Field>(a: &RingRef<F>, b: &RingRef<F>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<F: Field> Poly<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &RingRef<F>, c: F::Elem) -> Self {
        Self::monomial(ring, Exponent::ONE, c)
    }

    pub fn from_i64(ring: &RingRef<F>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn monomial(ring: &RingRef<F>, exp: Exponent, c: F::Elem) -> Self {
        let terms = if ring.field().is_zero(&c) { Vec::new() } else { vec![(exp, c)] };
        Poly { ring: ring.clone(), terms }
    }

    pub fn var(ring: &RingRef<F>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::monomial(ring, Exponent::var(i, 1), ring.field().one())
    }

    /// Monomial `x^e` with unit coefficient from an explicit exponent slice.
    pub fn monomial_from(ring: &RingRef<F>, e: &[u32]) -> Result<Self> {
        let exp = Exponent::from_slice(e, ring.nvars())?;
        Ok(Self::monomial(ring, exp, ring.field().one()))
    }

    /// Canonicalize a raw term list: merge duplicates, drop zeros, sort.
    pub fn normalize(ring: &RingRef<F>, raw: Vec<(F::Elem, Vec<u32>)>) -> Result<Self> {
        let terms = raw
            .into_iter()
            .map(|(c, e)| Ok((Exponent::from_slice(&e, ring.nvars())?, c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(ring, terms))
    }

    /// Canonicalize terms already carrying [`Exponent`]s.
    pub fn from_terms(ring: &RingRef<F>, mut terms: Vec<Term<F>>) -> Self {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = field.add(&last.1, &c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !field.is_zero(&t.1));
        Poly { ring: ring.clone(), terms: out }
    }

    /// Terms must already be strictly descending and nonzero.
    pub(crate) fn from_sorted(ring: &RingRef<F>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !ring.field().is_zero(&t.1)));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn leading_exponent(&self) -> Option<Exponent> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Highest total degree of a term; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.degree()).max().unwrap_or(0)
    }

    /// Lowest total degree of a term (the m-adic order); `None` for zero.
    pub fn order_at_origin(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e.degree()).min()
    }

    /// Common total degree of all terms. Zero counts as homogeneous of degree 0.
    pub fn is_homogeneous(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(e, _)| e.degree());
        match it.next() {
            None => Some(0),
            Some(d) => it.all(|d2| d2 == d).then_some(d),
        }
    }

    /// Whether every term has total degree at least `k`, i.e. `self ∈ m^k`.
    pub fn in_max_ideal_power(&self, k: u32) -> bool {
        self.terms.iter().all(|(e, _)| e.degree() >= k)
    }

    /// The part of total degree below `k` (the residue modulo `m^k`).
    pub fn truncate_below(&self, k: u32) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e.degree() < k).cloned().collect();
        Self::from_sorted(&self.ring, terms)
    }

    pub fn coeff_of(&self, e: &Exponent) -> F::Elem {
        self.terms
            .iter()
            .find(|(t, _)| t == e)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else if self.ring.nvars() != other.ring.nvars() {
            Err(Error::Arity { expected: self.ring.nvars(), got: other.ring.nvars() })
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let field = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { field.sub(&a[i].1, &b[j].1) } else { field.add(&a[i].1, &b[j].1) };
                    if !field.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, if negate { field.neg(c) } else { c.clone() })));
        Self::from_sorted(&self.ring, out)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(&self.ring);
        for (e, c) in &small.terms {
            acc = acc.merge(&big.mul_term(e, c), false);
        }
        acc
    }

    /// `c·x^e·self`.
    pub fn mul_term(&self, e: &Exponent, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, d)| (t.mul(e), field.mul(c, d))).collect();
        Self::from_sorted(&self.ring, terms)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.mul_term(&Exponent::ONE, c)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field().inv(lc)),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lt_e, lt_c) = divisor.leading_term()?;
        let field = self.field();
        let lt_inv = field.inv(lt_c);
        let mut rest = self.clone();
        let mut quot = Vec::new();
        while let Some((e, c)) = rest.leading_term().cloned() {
            let m = lt_e.quotient_of(&e)?;
            let q = field.mul(&c, &lt_inv);
            rest = rest.merge(&divisor.mul_term(&m, &q), true);
            quot.push((m, q));
        }
        Some(Self::from_sorted(&self.ring, quot))
    }

    /// Re-express in `target`, sending source variable `i` to target
    /// variable `positions[i]`. Variables mapped to `None` must not occur.
    pub fn embed(&self, target: &RingRef<F>, positions: &[Option<usize>]) -> Result<Self> {
        assert_eq!(positions.len(), self.ring.nvars());
        let mut inverse = vec![None; crate::order::MAX_VARS];
        for (src, dst) in positions.iter().enumerate() {
            if let Some(d) = dst {
                if *d >= target.nvars() {
                    return Err(Error::Arity { expected: target.nvars(), got: d + 1 });
                }
                inverse[*d] = Some(src);
            }
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            for (src, dst) in positions.iter().enumerate() {
                if dst.is_none() && e.get(src) > 0 {
                    return Err(Error::CheckFailed(format!(
                        "variable `{}` cannot be dropped",
                        self.ring.names()[src]
                    )));
                }
            }
            terms.push((e.permute_from(&inverse), c.clone()));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Same polynomial, re-sorted for a ring that differs only in its order.
    pub fn reorder(&self, target: &RingRef<F>) -> Self {
        debug_assert_eq!(self.ring.names(), target.names());
        Self::from_terms(target, self.terms.clone())
    }

    /// Substitute `images[i]` for variable `i`; the images fix the target ring.
    pub fn substitute(&self, images: &[Poly<F>]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Arity { expected: self.ring.nvars(), got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for p in images {
            if !same_ring(&p.ring, &target) {
                return Err(Error::RingMismatch);
            }
        }
        let mut powers: Vec<Vec<Poly<F>>> = images.iter().map(|p| vec![Poly::one(&target), p.clone()]).collect();
        let mut acc = Poly::zero(&target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(&target, c.clone());
            for (i, table) in powers.iter_mut().enumerate() {
                let k = e.get(i) as usize;
                while table.len() <= k {
                    let next = &table[table.len() - 1] * &table[1];
                    table.push(next);
                }
                if k > 0 {
                    term = &term * &table[k];
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        let names = self.ring.names();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let (num, den) = field.to_fraction(c);
            let negative = num < num_bigint::BigInt::from(0);
            let num = if negative { -num } else { num };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let unit = num == num_bigint::BigInt::from(1) && den == num_bigint::BigInt::from(1);
            let mut parts: Vec<String> = Vec::new();
            if !unit || e.is_one() {
                if den == num_bigint::BigInt::from(1) {
                    parts.push(num.to_string());
                } else {
                    parts.push(format!("{num}/{den}"));
                }
            }
            for (i, name) in names.iter().enumerate() {
                match e.get(i) {
                    0 => {}
                    1 => parts.push(name.clone()),
                    k => parts.push(format!("{name}^{k}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        self.checked_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        let field = self.field();
        let terms = self.terms.iter().map(|(e, c)| (*e, field.neg(c))).collect();
        Poly::from_sorted(&self.ring, terms)
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Poly<F>) -> Poly<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Poly<F>) -> Poly<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Poly<F>) -> Poly<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}
