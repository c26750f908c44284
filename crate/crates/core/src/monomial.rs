//! Monomial ideals of `k[x,y]` as exponent antichains.
//!
//! Generators are stored with strictly increasing `x` exponent and strictly
//! decreasing `y` exponent. The empty list is the zero ideal.
//!
//! Integral closure uses the Newton polygon: `x^a y^b` lies in the closure
//! exactly when `(a,b)` lies on or above the lower convex hull of the
//! exponents. Every minimal generator of the closure sits in the box
//! `[0,A] × [0,B]` spanned by the pure powers `x^A`, `y^B`, since those two
//! already cover everything outside it.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::IdealHandle;
use crate::poly::Poly;
use crate::ring::RingRef;

pub type Point = (u32, u32);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonoIdeal2 {
    gens: Vec<Point>,
}

/// Lower-left hull, vertices listed from the pure `x` power to the pure `y`
/// power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<Point>,
}

fn cross(o: Point, a: Point, b: Point) -> i64 {
    let (ox, oy) = (o.0 as i64, o.1 as i64);
    (a.0 as i64 - ox) * (b.1 as i64 - oy) - (a.1 as i64 - oy) * (b.0 as i64 - ox)
}

impl NewtonPolygon {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// On or above every edge.
    pub fn contains(&self, p: Point) -> bool {
        // vertices run with x decreasing; walk them reversed so each edge
        // points towards larger x and the region lies to its left
        let v: Vec<Point> = self.vertices.iter().rev().copied().collect();
        if v.len() == 1 {
            return p.0 >= v[0].0 && p.1 >= v[0].1;
        }
        v.windows(2).all(|w| cross(w[0], w[1], p) >= 0)
    }
}

impl MonoIdeal2 {
    /// Divisibility antichain of `pairs` in canonical order.
    pub fn minimalize(pairs: impl IntoIterator<Item = Point>) -> Self {
        let mut v: Vec<Point> = pairs.into_iter().collect();
        v.sort_unstable();
        let mut gens: Vec<Point> = Vec::with_capacity(v.len());
        for p in v {
            if gens.last().is_none_or(|last| p.1 < last.1) {
                gens.push(p);
            }
        }
        MonoIdeal2 { gens }
    }

    pub fn zero() -> Self {
        MonoIdeal2 { gens: Vec::new() }
    }

    pub fn unit() -> Self {
        MonoIdeal2 { gens: vec![(0, 0)] }
    }

    /// `m^l`.
    pub fn max_power(l: u32) -> Self {
        MonoIdeal2 { gens: (0..=l).map(|i| (i, l - i)).collect() }
    }

    pub fn gens(&self) -> &[Point] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&(0, 0))
    }

    /// Exponent `A` of the pure power `x^A`, if present.
    pub fn x_power(&self) -> Option<u32> {
        self.gens.last().filter(|g| g.1 == 0).map(|g| g.0)
    }

    /// Exponent `B` of the pure power `y^B`, if present.
    pub fn y_power(&self) -> Option<u32> {
        self.gens.first().filter(|g| g.0 == 0).map(|g| g.1)
    }

    pub fn is_m_primary(&self) -> bool {
        !self.is_unit() && self.x_power().is_some() && self.y_power().is_some()
    }

    fn m_primary_bounds(&self) -> Result<(u32, u32)> {
        match (self.x_power(), self.y_power()) {
            (Some(a), Some(b)) if !self.is_unit() => Ok((a, b)),
            _ => Err(Error::NotMPrimary(self.to_string())),
        }
    }

    pub fn contains_point(&self, p: Point) -> bool {
        self.gens.iter().any(|g| g.0 <= p.0 && g.1 <= p.1)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonoIdeal2) -> bool {
        other.gens.iter().all(|&p| self.contains_point(p))
    }

    pub fn sum(&self, other: &MonoIdeal2) -> Self {
        Self::minimalize(self.gens.iter().chain(&other.gens).copied())
    }

    pub fn product(&self, other: &MonoIdeal2) -> Self {
        Self::minimalize(
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| (a.0 + b.0, a.1 + b.1))),
        )
    }

    pub fn power(&self, k: u32) -> Self {
        (0..k).fold(Self::unit(), |acc, _| acc.product(self))
    }

    pub fn intersect(&self, other: &MonoIdeal2) -> Self {
        Self::minimalize(
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| (a.0.max(b.0), a.1.max(b.1)))),
        )
    }

    /// `I : x^c y^d`.
    pub fn colon_point(&self, p: Point) -> Self {
        Self::minimalize(self.gens.iter().map(|g| (g.0.saturating_sub(p.0), g.1.saturating_sub(p.1))))
    }

    pub fn colon(&self, other: &MonoIdeal2) -> Result<Self> {
        let mut it = other.gens.iter();
        let first = it.next().ok_or(Error::ColonByZero)?;
        Ok(it.fold(self.colon_point(*first), |acc, &p| acc.intersect(&self.colon_point(p))))
    }

    /// Number of monomials outside the ideal.
    pub fn colength(&self) -> Result<u64> {
        let (_, b) = self.m_primary_bounds()?;
        // column a has height = b-exponent of the last generator with x-exponent ≤ a
        let mut total = 0u64;
        let mut height = b;
        let mut next = 0;
        let a_max = self.x_power().unwrap();
        for a in 0..a_max {
            while next < self.gens.len() && self.gens[next].0 <= a {
                height = self.gens[next].1;
                next += 1;
            }
            total += height as u64;
        }
        Ok(total)
    }

    pub fn newton_polygon(&self) -> Result<NewtonPolygon> {
        self.m_primary_bounds()?;
        let mut hull: Vec<Point> = Vec::new();
        for &p in &self.gens {
            while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.reverse();
        Ok(NewtonPolygon { vertices: hull })
    }

    /// Lattice points on or above the Newton polygon, minimalized.
    pub fn integral_closure(&self) -> Result<Self> {
        let (a_max, b_max) = self.m_primary_bounds()?;
        let poly = self.newton_polygon()?;
        let mut pts = Vec::new();
        for a in 0..=a_max {
            if let Some(b) = (0..=b_max).find(|&b| poly.contains((a, b))) {
                pts.push((a, b));
            }
        }
        Ok(Self::minimalize(pts))
    }

    pub fn is_integrally_closed(&self) -> Result<bool> {
        Ok(self.integral_closure()? == *self)
    }

    /// Default bound for [`Self::closure_oracle`]: `A·B`.
    pub fn default_oracle_bound(&self) -> Result<u32> {
        let (a, b) = self.m_primary_bounds()?;
        Ok((a * b).max(1))
    }

    /// Whether `x^a y^b` satisfies `(x^a y^b)^k ∈ I^k` for some `1 ≤ k ≤ k_max`.
    pub fn closure_oracle(&self, p: Point, k_max: u32) -> bool {
        let mut pow = Self::unit();
        for k in 1..=k_max {
            pow = pow.product(self);
            if pow.contains_point((k * p.0, k * p.1)) {
                return true;
            }
        }
        false
    }

    /// The ideal in a two-variable ring (first variable plays `x`).
    pub fn to_ideal<F: Field>(&self, ring: &RingRef<F>) -> Result<IdealHandle<F>> {
        if ring.nvars() != 2 {
            return Err(Error::Arity { expected: 2, got: ring.nvars() });
        }
        let gens = self
            .gens
            .iter()
            .rev()
            .map(|&(a, b)| Poly::monomial_from(ring, &[a, b]))
            .collect::<Result<Vec<_>>>()?;
        IdealHandle::new(ring, gens)
    }

    /// Reads exponents of a monomial generator list; fails on other ideals.
    pub fn from_ideal<F: Field>(ideal: &IdealHandle<F>) -> Result<Self> {
        if ideal.ring().nvars() != 2 {
            return Err(Error::Arity { expected: 2, got: ideal.ring().nvars() });
        }
        if !ideal.is_monomial() {
            return Err(Error::CheckFailed(format!("{ideal} is not a monomial ideal")));
        }
        Ok(Self::minimalize(
            ideal
                .gens()
                .iter()
                .filter(|g| !g.is_zero())
                .map(|g| {
                    let e = g.leading_exponent().unwrap();
                    (e.get(0) as u32, e.get(1) as u32)
                }),
        ))
    }
}

impl fmt::Display for MonoIdeal2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn mono(a: u32, b: u32) -> String {
            let part = |v: &str, k: u32| match k {
                0 => None,
                1 => Some(v.to_string()),
                _ => Some(format!("{v}^{k}")),
            };
            let s: Vec<String> = [part("x", a), part("y", b)].into_iter().flatten().collect();
            if s.is_empty() {
                "1".into()
            } else {
                s.join("*")
            }
        }
        if self.is_zero() {
            return write!(f, "ideal(0)");
        }
        let parts: Vec<String> = self.gens.iter().rev().map(|&(a, b)| mono(a, b)).collect();
        write!(f, "ideal({})", parts.join(", "))
    }
}
