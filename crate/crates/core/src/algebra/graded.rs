//! Monomial bases of single weights, for degreewise linear algebra.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;

use super::poly::{GradedPolynomial, Monomial, PolyRing};

#[derive(Clone, Debug)]
pub struct WeightBasis {
    pub weight: u32,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl WeightBasis {
    /// Monomials of weight `w` in the listed generators, in descending
    /// monomial order (so echelon pivots land on leading terms).
    pub fn new(ring: &Arc<PolyRing>, gens: &[usize], w: u32) -> Self {
        let mut monomials = ring.monomials_of_weight_in(gens, w);
        monomials.reverse();
        Self::from_monomials(w, monomials)
    }

    pub fn from_monomials(weight: u32, monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        WeightBasis {
            weight,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of the weight-`w` part of `p`. Panics if `p` has a
    /// weight-`w` monomial outside the basis.
    pub fn coordinates(&self, p: &GradedPolynomial) -> Vec<(usize, BigInt)> {
        p.terms()
            .filter(|(m, _)| m.weight == self.weight)
            .map(|(m, c)| {
                let i = self
                    .index_of(m)
                    .unwrap_or_else(|| panic!("monomial outside basis"));
                (i, c.to_bigint())
            })
            .collect()
    }
}
