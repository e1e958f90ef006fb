//! The formal group law of a cubic in the coordinate z = -x/y, its
//! [n]-series, and the Hasse coefficients v_i.

use serde::Serialize;

use super::curve::WeierstrassCurve;
use crate::algebra::{GradedPolynomial, TruncatedSeries};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FormalGroupLaw {
    pub curve: WeierstrassCurve,
    /// F(x, y), exact through total degree `order`.
    pub law: TruncatedSeries,
    /// w(z) = -1/y as a series in z, exact through `order + 1`.
    pub w: TruncatedSeries,
    pub order: usize,
}

/// w(z) as the fixed point of
/// `w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3`.
pub fn w_series(c: &WeierstrassCurve, order: usize) -> TruncatedSeries {
    let s = TruncatedSeries::zero(c.ring(), &["z"], order);
    let z = s.var(0);
    let [a1, a2, a3, a4, a6] = &c.a;
    let z2 = z.pow(2);
    let z3 = z.pow(3);
    let lin = z.scale(a1).try_add(&z2.scale(a2)).unwrap();
    let mut w = s.clone();
    // Each pass fixes at least one more coefficient.
    for _ in 0..=order {
        let w2 = w.try_mul(&w).unwrap();
        let w3 = w2.try_mul(&w).unwrap();
        let next = z3
            .try_add(&lin.try_mul(&w).unwrap())
            .and_then(|t| t.try_add(&w2.scale(a3)))
            .and_then(|t| t.try_add(&z.try_mul(&w2).unwrap().scale(a4)))
            .and_then(|t| t.try_add(&w3.scale(a6)))
            .unwrap();
        if next == w {
            break;
        }
        w = next;
    }
    w
}

/// `F(x, y)` through total degree `order`, by the chord construction.
pub fn fgl_from_curve(c: &WeierstrassCurve, order: usize) -> Result<FormalGroupLaw> {
    if order < 2 {
        return Err(Error::InsufficientOrder {
            have: order,
            need: 2,
        });
    }
    let w = w_series(c, order + 1);
    let coeffs = w.coefficients();
    let s2 = TruncatedSeries::zero(c.ring(), &["x", "y"], order);
    let (x, y) = (s2.var(0), s2.var(1));
    // lambda = sum A_n (y^n - x^n)/(y - x) = sum A_n h_{n-1}(x, y)
    let mut powx = vec![s2.constant(&c.ring().one())];
    let mut powy = powx.clone();
    for k in 1..=order {
        powx.push(powx[k - 1].try_mul(&x)?);
        powy.push(powy[k - 1].try_mul(&y)?);
    }
    let mut lambda = s2.clone();
    for (n, a) in coeffs.iter().enumerate() {
        if n == 0 || a.is_zero() {
            continue;
        }
        let mut h = s2.clone();
        for k in 0..n {
            if k > order || n - 1 - k > order {
                continue;
            }
            h = h.try_add(&powx[k].try_mul(&powy[n - 1 - k])?)?;
        }
        lambda = lambda.try_add(&h.scale(a))?;
    }
    let w1 = w.substitute(&[x.clone()])?;
    let nu = w1.try_sub(&lambda.try_mul(&x)?)?;
    let [a1, a2, a3, a4, a6] = &c.a;
    let l2 = lambda.try_mul(&lambda)?;
    let l3 = l2.try_mul(&lambda)?;
    let ln = lambda.try_mul(&nu)?;
    let l2n = l2.try_mul(&nu)?;
    // The line w = lambda z + nu meets the cubic in z1, z2, z3; the sum of
    // the roots is minus the ratio of the z^2 and z^3 coefficients.
    let num = lambda
        .scale(a1)
        .try_add(&nu.scale(a2))?
        .try_add(&l2.scale(a3))?
        .try_add(&ln.scale(&a4.scale_i64(2)))?
        .try_add(&l2n.scale(&a6.scale_i64(3)))?;
    let one = s2.constant(&c.ring().one());
    let den = one
        .try_add(&lambda.scale(a2))?
        .try_add(&l2.scale(a4))?
        .try_add(&l3.scale(a6))?;
    let z3 = num
        .try_mul(&den.inverse()?)?
        .neg()
        .try_sub(&x)?
        .try_sub(&y)?;
    let w3 = lambda.try_mul(&z3)?.try_add(&nu)?;
    // F = i(z3) with i(z) = z / (a1 z + a3 w - 1)
    let iden = z3.scale(a1).try_add(&w3.scale(a3))?.try_sub(&one)?;
    let law = z3.try_mul(&iden.inverse()?)?;
    Ok(FormalGroupLaw {
        curve: c.clone(),
        law,
        w,
        order,
    })
}

impl FormalGroupLaw {
    fn z(&self) -> TruncatedSeries {
        TruncatedSeries::zero(self.curve.ring(), &["z"], self.order).var(0)
    }

    /// F(f, g) for one-variable series f, g.
    pub fn add(&self, f: &TruncatedSeries, g: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.law.substitute(&[f.clone(), g.clone()])
    }

    /// The formal inverse i(z) = z / (a1 z + a3 w(z) - 1).
    pub fn inverse_series(&self) -> Result<TruncatedSeries> {
        let z = self.z();
        let w = self.w.with_order(self.order);
        let one = z.constant(&self.curve.ring().one());
        let den = z
            .scale(self.curve.a1())
            .try_add(&w.scale(self.curve.a3()))?
            .try_sub(&one)?;
        z.try_mul(&den.inverse()?)
    }

    /// [n](z) through the law's order.
    pub fn n_series(&self, n: i64) -> Result<TruncatedSeries> {
        let z = self.z();
        let mut acc = z.like(z.ring().zero());
        for _ in 0..n.unsigned_abs() {
            acc = self.add(&acc, &z)?;
        }
        if n < 0 {
            acc = acc.substitute(&[self.inverse_series()?])?;
        }
        Ok(acc)
    }

    /// The law as a one-line text over the ring with generators x, y.
    pub fn to_text(&self) -> String {
        self.law.to_text()
    }
}

pub fn n_series(f: &FormalGroupLaw, n: i64) -> Result<TruncatedSeries> {
    f.n_series(n)
}

#[derive(Clone, Debug, Serialize)]
pub struct HasseData {
    pub prime: u64,
    /// v_0 = p, v_1, ..., v_k as canonical text.
    pub v: Vec<String>,
    #[serde(skip)]
    pub values: Vec<GradedPolynomial>,
    pub order: usize,
}

/// v_i = coefficient of z^(p^i) in [p](z), for i up to `i_max`.
pub fn hasse_coefficients(
    c: &WeierstrassCurve,
    p: u64,
    i_max: u32,
    order: usize,
) -> Result<HasseData> {
    if !crate::algebra::coeff::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let need = p.pow(i_max) as usize;
    if order < need {
        return Err(Error::InsufficientOrder { have: order, need });
    }
    let f = fgl_from_curve(c, order.max(2))?;
    let ps = f.n_series(p as i64)?;
    let values: Vec<GradedPolynomial> = (0..=i_max)
        .map(|i| ps.coeff(&[p.pow(i) as u32]))
        .collect();
    debug_assert_eq!(values[0], c.ring().constant(p as i64));
    Ok(HasseData {
        prime: p,
        v: values.iter().map(|v| v.to_text()).collect(),
        values,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BaseRing;

    fn ints(s: &TruncatedSeries, vars: usize) -> Vec<(Vec<u32>, i64)> {
        let nb = s.base().ngens();
        s.poly()
            .terms()
            .map(|(m, c)| (m.exps[nb..nb + vars].to_vec(), c.to_i64().unwrap()))
            .collect()
    }

    #[test]
    fn cusp_is_additive() {
        let c = WeierstrassCurve::numeric(BaseRing::Integers, [0; 5]);
        let f = fgl_from_curve(&c, 6).unwrap();
        let mut t = ints(&f.law, 2);
        t.sort();
        assert_eq!(t, vec![(vec![0, 1], 1), (vec![1, 0], 1)]);
    }

    #[test]
    fn nodal_is_multiplicative_type() {
        let c = WeierstrassCurve::numeric(BaseRing::Integers, [1, 0, 0, 0, 0]);
        let f = fgl_from_curve(&c, 4).unwrap();
        assert_eq!(f.law.coeff(&[1, 1]).constant_term().to_i64(), Some(-1));
        assert!(f.law.coeff(&[2, 0]).is_zero());
        assert!(f.law.coeff(&[0, 2]).is_zero());
    }

    #[test]
    fn two_series_universal() {
        let c = WeierstrassCurve::universal(BaseRing::Integers);
        let f = fgl_from_curve(&c, 4).unwrap();
        let two = f.n_series(2).unwrap();
        let ring = c.ring();
        let want = ["0", "2", "-1*a1", "-2*a2", "a1*a2 - 7*a3"];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(two.coeff(&[k as u32]), GradedPolynomial::parse(ring, w).unwrap());
        }
    }

    #[test]
    fn inverse_axiom() {
        let c = WeierstrassCurve::universal(BaseRing::Integers);
        let f = fgl_from_curve(&c, 5).unwrap();
        let z = f.n_series(1).unwrap();
        let sum = f.add(&f.n_series(-1).unwrap(), &z).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn hasse_order_check() {
        let c = WeierstrassCurve::universal(BaseRing::Integers);
        assert!(matches!(
            hasse_coefficients(&c, 2, 3, 4),
            Err(Error::InsufficientOrder { .. })
        ));
    }
}
