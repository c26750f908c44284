//! Seeded random choices for the genericity searches.
//!
//! All randomness flows from a single `u64` seed through ChaCha8, whose
//! output stream is fixed across platforms and crate versions.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::ideal::monomials_of_degree;
use crate::poly::Poly;
use crate::ring::RingRef;

pub type SearchRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SearchRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Σ c_i g_i` with every `c_i` a random nonzero scalar.
pub fn random_combination<F: Field>(ring: &RingRef<F>, gens: &[Poly<F>], rng: &mut SearchRng) -> Poly<F> {
    let field = ring.field();
    let mut acc = Poly::zero(ring);
    for g in gens {
        acc = &acc + &g.scale(&field.random_nonzero(rng));
    }
    acc
}

/// A random form of degree `d` with every coefficient nonzero.
pub fn random_form<F: Field>(ring: &RingRef<F>, d: u32, rng: &mut SearchRng) -> Poly<F> {
    let field = ring.field();
    let terms = monomials_of_degree(ring.nvars(), d)
        .into_iter()
        .map(|e| (e, field.random_nonzero(rng)))
        .collect();
    Poly::from_terms(ring, terms)
}

/// A random element of `m` with terms of degree `1..=d`.
pub fn random_in_max_ideal<F: Field>(ring: &RingRef<F>, d: u32, rng: &mut SearchRng) -> Poly<F> {
    let mut acc = Poly::zero(ring);
    for k in 1..=d {
        acc = &acc + &random_form(ring, k, rng);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::Ring;

    #[test]
    fn same_seed_same_draws() {
        let r = Ring::plane(PrimeField::default());
        let gens = r.vars();
        let a = random_combination(&r, &gens, &mut rng(7));
        let b = random_combination(&r, &gens, &mut rng(7));
        let c = random_combination(&r, &gens, &mut rng(8));
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn forms_have_full_support() {
        let r = Ring::plane(PrimeField::default());
        let mut g = rng(1);
        assert_eq!(random_form(&r, 3, &mut g).len(), 4);
        let f = random_in_max_ideal(&r, 2, &mut g);
        assert_eq!(f.len(), 5);
        assert_eq!(f.order_at_origin(), Some(1));
    }
}
