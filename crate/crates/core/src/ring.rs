//! Polynomial ring contexts: variable names, coefficient field and the
//! active monomial order.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::order::{MonomialOrder, MAX_VARS};
use crate::poly::Poly;

pub type RingRef<F> = Arc<Ring<F>>;

#[derive(Clone, Debug, PartialEq)]
pub struct Ring<F: Field> {
    field: F,
    names: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> Ring<F> {
    pub fn new<S: AsRef<str>>(field: F, names: &[S], order: MonomialOrder) -> Result<RingRef<F>> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        let mut seen = HashSet::new();
        for n in names {
            let n = n.as_ref();
            if n.is_empty() || !n.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::Syntax { pos: 0, msg: format!("invalid variable name `{n}`") });
            }
            if !seen.insert(n.to_string()) {
                return Err(Error::DuplicateVariable(n.to_string()));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > names.len() {
                return Err(Error::Arity { expected: names.len(), got: k });
            }
        }
        Ok(Arc::new(Ring {
            field,
            names: names.iter().map(|n| n.as_ref().to_string()).collect(),
            order,
        }))
    }

    /// `k[x,y]` with grevlex.
    pub fn plane(field: F) -> RingRef<F> {
        Ring::new(field, &["x", "y"], MonomialOrder::GrevLex).expect("valid ring")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef<F> {
        Ring::new(self.field.clone(), &self.names, order).expect("order fits ring")
    }

    /// New ring with `extra` variables placed in front of the existing ones.
    pub fn prepend<S: AsRef<str>>(&self, extra: &[S], order: MonomialOrder) -> Result<RingRef<F>> {
        let mut names: Vec<String> = extra.iter().map(|s| s.as_ref().to_string()).collect();
        names.extend(self.names.iter().cloned());
        Ring::new(self.field.clone(), &names, order)
    }

    /// New ring with `extra` variables appended after the existing ones.
    pub fn append<S: AsRef<str>>(&self, extra: &[S], order: MonomialOrder) -> Result<RingRef<F>> {
        let mut names = self.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Ring::new(self.field.clone(), &names, order)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Poly<F> {
        Poly::var(self, i)
    }

    pub fn vars(self: &Arc<Self>) -> Vec<Poly<F>> {
        (0..self.nvars()).map(|i| Poly::var(self, i)).collect()
    }
}
