//! Graded dimension counting through a cutoff.

use serde::{Deserialize, Serialize};

/// Ranks per weight, index = weight, exact through `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareSeries {
    pub ranks: Vec<i64>,
}

impl PoincareSeries {
    pub fn one(cutoff: u32) -> Self {
        let mut ranks = vec![0; cutoff as usize + 1];
        ranks[0] = 1;
        PoincareSeries { ranks }
    }

    pub fn cutoff(&self) -> u32 {
        (self.ranks.len() - 1) as u32
    }

    pub fn at(&self, w: u32) -> i64 {
        self.ranks.get(w as usize).copied().unwrap_or(0)
    }

    /// Polynomial algebra on generators of the given positive weights.
    pub fn polynomial(weights: &[u32], cutoff: u32) -> Self {
        let mut s = Self::one(cutoff);
        for &w in weights {
            assert!(w > 0);
            let w = w as usize;
            // multiply by 1/(1 - q^w)
            for k in w..s.ranks.len() {
                s.ranks[k] += s.ranks[k - w];
            }
        }
        s
    }

    /// Exterior algebra on generators of the given positive weights.
    pub fn exterior(weights: &[u32], cutoff: u32) -> Self {
        let mut s = Self::one(cutoff);
        for &w in weights {
            let w = w as usize;
            for k in (w..s.ranks.len()).rev() {
                s.ranks[k] += s.ranks[k - w];
            }
        }
        s
    }

    /// Sum of `q^w` over the listed weights.
    pub fn from_weights<I: IntoIterator<Item = u32>>(weights: I, cutoff: u32) -> Self {
        let mut ranks = vec![0; cutoff as usize + 1];
        for w in weights {
            if w <= cutoff {
                ranks[w as usize] += 1;
            }
        }
        PoincareSeries { ranks }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.ranks.len().min(other.ranks.len());
        let mut ranks = vec![0; n];
        for (i, a) in self.ranks.iter().take(n).enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.ranks.iter().take(n - i).enumerate() {
                ranks[i + j] += a * b;
            }
        }
        PoincareSeries { ranks }
    }

    /// Power-series quotient; the divisor must have constant term 1.
    pub fn div(&self, other: &Self) -> Self {
        assert_eq!(other.ranks[0], 1, "divisor needs constant term 1");
        let n = self.ranks.len().min(other.ranks.len());
        let mut q = vec![0i64; n];
        for k in 0..n {
            let mut v = self.ranks[k];
            for j in 1..=k {
                v -= other.ranks[j] * q[k - j];
            }
            q[k] = v;
        }
        PoincareSeries { ranks: q }
    }

    /// Multiplies by `(1 - q^w)`, the effect of dividing out a regular
    /// element of weight `w`.
    pub fn times_one_minus(&self, w: u32) -> Self {
        let mut ranks = self.ranks.clone();
        for k in (w as usize..ranks.len()).rev() {
            ranks[k] -= ranks[k - w as usize];
        }
        PoincareSeries { ranks }
    }

    pub fn total(&self) -> i64 {
        self.ranks.iter().sum()
    }

    /// Largest weight with a nonzero rank.
    pub fn top(&self) -> Option<u32> {
        self.ranks.iter().rposition(|&r| r != 0).map(|w| w as u32)
    }
}

/// Per-weight ranks of a basis listed by weight, through `cutoff`.
pub fn poincare_series<I: IntoIterator<Item = u32>>(basis_weights: I, cutoff: u32) -> PoincareSeries {
    PoincareSeries::from_weights(basis_weights, cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_on_weight_two() {
        let s = PoincareSeries::polynomial(&[2], 6);
        assert_eq!(s.ranks, vec![1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn exterior_triple() {
        let s = PoincareSeries::exterior(&[2, 4, 6], 12);
        let even: Vec<i64> = (0..=6).map(|k| s.at(2 * k)).collect();
        assert_eq!(even, vec![1, 1, 1, 2, 1, 1, 1]);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = PoincareSeries::polynomial(&[1, 3], 20);
        let b = PoincareSeries::exterior(&[2, 5], 20);
        assert_eq!(a.mul(&b).div(&b), a);
    }
}
