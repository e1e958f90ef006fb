//! The involution x ↦ x^-1 on the augmentation ideal (x - 1) of
//! Z[x, x^-1] modulo (x - 1)^3.

use serde::Serialize;

use crate::algebra::{BaseRing, IntegerMatrix, TruncatedSeries};
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct Involution {
    /// Column k is the image of the k-th basis vector (α, β).
    pub matrix: Vec<Vec<i64>>,
    pub images: Vec<String>,
    /// Columns: a basis in which the involution swaps the two vectors.
    pub permutation_basis: Vec<Vec<i64>>,
    pub permutation_basis_text: Vec<String>,
    pub squares_to_identity: bool,
    pub conjugate_is_swap: bool,
}

fn text(v: &[i64]) -> String {
    let mut parts = Vec::new();
    for (c, n) in v.iter().zip(["α", "β"]) {
        match *c {
            0 => {}
            1 => parts.push(n.to_string()),
            -1 => parts.push(format!("-{n}")),
            c => parts.push(format!("{c}{n}")),
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Basis α = x - 1, β = (x - 1)^2. With y = x - 1, x^-1 = (1 + y)^-1 is
/// expanded as a power series in y and truncated at y^3.
pub fn ku_cp2_involution() -> Result<Involution> {
    let ring = crate::algebra::PolyRing::new::<&str>(BaseRing::Integers, &[]);
    let s = TruncatedSeries::zero(&ring, &["y"], 2);
    let y = s.var(0);
    let one = s.constant(&ring.one());
    let xinv = one.try_add(&y)?.inverse()?;
    // α = y ↦ x^-1 - 1, β = y^2 ↦ (x^-1 - 1)^2
    let a_img = xinv.try_sub(&one)?;
    let b_img = a_img.try_mul(&a_img)?;
    let coords = |f: &TruncatedSeries| -> Vec<i64> {
        (1..=2)
            .map(|k| f.coeff(&[k]).constant_term().to_i64().unwrap())
            .collect()
    };
    let (ca, cb) = (coords(&a_img), coords(&b_img));
    let m = IntegerMatrix::from_rows(&[vec![ca[0], cb[0]], vec![ca[1], cb[1]]]);
    let id = IntegerMatrix::identity(2);
    let squares_to_identity = m.mul(&m) == id;
    // P has columns α and M α; in that basis M is the swap when M^2 = 1.
    let p = IntegerMatrix::from_rows(&[vec![1, ca[0]], vec![0, ca[1]]]);
    let swap = IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
    let det = p.determinant();
    let conjugate_is_swap = (det == 1.into() || det == (-1).into()) && m.mul(&p) == p.mul(&swap);
    let matrix = (0..2)
        .map(|i| (0..2).map(|j| m.get(i, j).try_into().unwrap()).collect())
        .collect();
    let cols = [vec![1i64, 0], ca.clone()];
    Ok(Involution {
        matrix,
        images: vec![text(&ca), text(&cb)],
        permutation_basis_text: cols.iter().map(|c| text(c)).collect(),
        permutation_basis: cols.to_vec(),
        squares_to_identity,
        conjugate_is_swap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution() {
        let inv = ku_cp2_involution().unwrap();
        assert_eq!(inv.images, vec!["-α + β", "β"]);
        assert_eq!(inv.matrix, vec![vec![-1, 0], vec![1, 1]]);
        assert!(inv.squares_to_identity && inv.conjugate_is_swap);
        assert_eq!(inv.permutation_basis_text, vec!["α", "-α + β"]);
    }
}
