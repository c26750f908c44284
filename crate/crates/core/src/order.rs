//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 8;

/// Exponent vector of a monomial. Slots beyond the ring's arity stay zero, so
/// comparisons and divisibility tests never need to know the arity.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Exponent([u16; MAX_VARS]);

impl Exponent {
    pub const ONE: Exponent = Exponent([0; MAX_VARS]);

    pub fn from_slice(e: &[u32], arity: usize) -> Result<Self> {
        if e.len() != arity {
            return Err(Error::Arity { expected: arity, got: e.len() });
        }
        if arity > MAX_VARS {
            return Err(Error::TooManyVariables(arity));
        }
        let mut out = [0u16; MAX_VARS];
        for (slot, &v) in out.iter_mut().zip(e) {
            *slot = u16::try_from(v).map_err(|_| Error::ExponentOverflow)?;
        }
        Ok(Exponent(out))
    }

    /// `x_i^k`.
    pub fn var(i: usize, k: u16) -> Self {
        let mut out = [0u16; MAX_VARS];
        out[i] = k;
        Exponent(out)
    }

    #[inline]
    pub fn get(&self, i: usize) -> u16 {
        self.0[i]
    }

    #[inline]
    pub fn as_array(&self) -> &[u16; MAX_VARS] {
        &self.0
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&v| v as u32).sum()
    }

    pub fn block_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.0[range].iter().map(|&v| v as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Exponent) -> Exponent {
        let mut out = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            out[i] = self.0[i]
                .checked_add(other.0[i])
                .expect("exponent overflow");
        }
        Exponent(out)
    }

    #[inline]
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Exponent) -> Option<Exponent> {
        let mut out = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            out[i] = other.0[i].checked_sub(self.0[i])?;
        }
        Some(Exponent(out))
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        let mut out = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            out[i] = self.0[i].max(other.0[i]);
        }
        Exponent(out)
    }

    pub fn is_coprime(&self, other: &Exponent) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The variable index if this is a pure power `x_i^k` with k > 0.
    pub fn pure_power(&self) -> Option<(usize, u16)> {
        let mut found = None;
        for (i, &v) in self.0.iter().enumerate() {
            if v > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, v));
            }
        }
        found
    }

    /// Move entries: slot `i` of the result takes slot `map[i]` of `self`.
    pub(crate) fn permute_from(&self, map: &[Option<usize>]) -> Exponent {
        let mut out = [0u16; MAX_VARS];
        for (i, src) in map.iter().enumerate() {
            if let Some(s) = src {
                out[i] = self.0[*s];
            }
        }
        Exponent(out)
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&v| v != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.0[..last])
    }
}

/// Monomial orders. Grevlex is the working order; the others exist for
/// elimination.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
    /// Block order: grevlex on the first `k` variables, ties broken by grevlex
    /// on the rest. Any monomial involving the first block beats every
    /// monomial that does not.
    Elimination(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex(a, b, 0..MAX_VARS),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Elimination(k) => {
                grevlex(a, b, 0..k).then_with(|| grevlex(a, b, k..MAX_VARS))
            }
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::GrevLex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(Error::Syntax { pos: 0, msg: format!("unknown order `{other}`") }),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elimination(k) => write!(f, "elim({k})"),
        }
    }
}

/// Checked comparison for callers holding explicit exponent slices.
pub fn compare(order: MonomialOrder, e1: &[u32], e2: &[u32]) -> Result<Ordering> {
    if e1.len() != e2.len() {
        return Err(Error::Arity { expected: e1.len(), got: e2.len() });
    }
    let n = e1.len();
    Ok(order.cmp(&Exponent::from_slice(e1, n)?, &Exponent::from_slice(e2, n)?))
}

#[inline]
fn grevlex(a: &Exponent, b: &Exponent, range: std::ops::Range<usize>) -> Ordering {
    let da = a.block_degree(range.clone());
    let db = b.block_degree(range.clone());
    if da != db {
        return da.cmp(&db);
    }
    for i in range.rev() {
        if a.0[i] != b.0[i] {
            // smaller exponent in the last differing variable wins
            return b.0[i].cmp(&a.0[i]);
        }
    }
    Ordering::Equal
}
