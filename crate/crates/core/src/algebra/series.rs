//! Power series in a few variables over a graded polynomial ring, truncated
//! by total degree in the series variables.

use std::sync::Arc;

use super::coeff::Coefficient;
use super::poly::{GradedPolynomial, Monomial, PolyRing};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    base: Arc<PolyRing>,
    ring: Arc<PolyRing>,
    nvars: usize,
    order: usize,
    poly: GradedPolynomial,
}

impl TruncatedSeries {
    /// The zero series in variables `vars` over `base`, exact through `order`.
    pub fn zero(base: &Arc<PolyRing>, vars: &[&str], order: usize) -> Self {
        let extra: Vec<(&str, u32)> = vars.iter().map(|v| (*v, 0)).collect();
        let ring = base.extend(&extra);
        TruncatedSeries {
            base: base.clone(),
            poly: ring.zero(),
            ring,
            nvars: vars.len(),
            order,
        }
    }

    /// Same variables and base as `self`, new contents.
    pub fn like(&self, poly: GradedPolynomial) -> Self {
        let mut s = TruncatedSeries {
            base: self.base.clone(),
            ring: self.ring.clone(),
            nvars: self.nvars,
            order: self.order,
            poly: poly.embed(&self.ring),
        };
        s.truncate();
        s
    }

    pub fn var(&self, i: usize) -> Self {
        self.like(self.ring.gen(self.base.ngens() + i))
    }

    pub fn constant(&self, c: &GradedPolynomial) -> Self {
        self.like(c.embed(&self.ring))
    }

    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn poly(&self) -> &GradedPolynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn series_degree(&self, m: &Monomial) -> usize {
        m.exps[self.base.ngens()..].iter().sum::<u32>() as usize
    }

    fn truncate(&mut self) {
        let nb = self.base.ngens();
        let n = self.order as u32;
        if self.poly.terms().any(|(m, _)| m.exps[nb..].iter().sum::<u32>() > n) {
            self.poly = self.poly.retain(|m| m.exps[nb..].iter().sum::<u32>() <= n);
        }
    }

    /// Lowers the truncation order.
    pub fn with_order(&self, order: usize) -> Self {
        let mut s = self.clone();
        s.order = order.min(self.order);
        s.truncate();
        s
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::IncompatibleRings("series over different rings".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut s = self.like(&self.poly + &other.poly);
        s.order = self.order.min(other.order);
        s.truncate();
        Ok(s)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let order = self.order.min(other.order);
        let nb = self.base.ngens();
        let n = order as u32;
        let poly = self
            .poly
            .mul_filtered(&other.poly, |m| m.exps[nb..].iter().sum::<u32>() <= n);
        let mut s = self.like(poly);
        s.order = order;
        Ok(s)
    }

    pub fn neg(&self) -> Self {
        self.like(self.poly.neg())
    }

    pub fn scale(&self, c: &GradedPolynomial) -> Self {
        let c = c.embed(&self.ring);
        let nb = self.base.ngens();
        let n = self.order as u32;
        self.like(
            self.poly
                .mul_filtered(&c, |m| m.exps[nb..].iter().sum::<u32>() <= n),
        )
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        self.like(self.poly.scale_i64(k))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.constant(&self.base.one());
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Coefficient of the series monomial with exponents `exps`, as an
    /// element of the base ring.
    pub fn coeff(&self, exps: &[u32]) -> GradedPolynomial {
        assert_eq!(exps.len(), self.nvars);
        let nb = self.base.ngens();
        let terms = self
            .poly
            .terms()
            .filter(|(m, _)| &m.exps[nb..] == exps)
            .map(|(m, c)| {
                let e: Vec<u32> = m.exps[..nb].to_vec();
                (self.base.monomial_from_exps(&e), c.clone())
            });
        GradedPolynomial::from_terms(&self.base, terms)
    }

    /// Coefficients of a one-variable series, index `k` holding `z^k`.
    pub fn coefficients(&self) -> Vec<GradedPolynomial> {
        assert_eq!(self.nvars, 1);
        (0..=self.order).map(|k| self.coeff(&[k as u32])).collect()
    }

    /// Part of series degree exactly `d`.
    pub fn degree_part(&self, d: usize) -> Self {
        self.like(self.poly.retain(|m| self.series_degree(m) == d))
    }

    /// Composition: variable `i` of `self` is replaced by `assignments[i]`.
    /// All assignments share one ring, whose base contains `self`'s base as
    /// a prefix. The result is exact through the smallest order involved.
    pub fn substitute(&self, assignments: &[TruncatedSeries]) -> Result<TruncatedSeries> {
        assert_eq!(assignments.len(), self.nvars, "one assignment per variable");
        let target = match assignments.first() {
            Some(a) => a.clone(),
            None => return Ok(self.clone()),
        };
        for (i, a) in assignments.iter().enumerate() {
            if a.ring != target.ring {
                return Err(Error::IncompatibleRings("assignments over different rings".into()));
            }
            if !a.degree_part(0).is_zero() {
                return Err(Error::NonzeroConstantTerm(
                    self.ring.name(self.base.ngens() + i).to_string(),
                ));
            }
        }
        if !self.base.embeds_in(&target.base) {
            return Err(Error::IncompatibleRings("series base does not embed".into()));
        }
        let order = assignments
            .iter()
            .map(|a| a.order)
            .chain([self.order])
            .min()
            .unwrap();
        let mut images: Vec<GradedPolynomial> = (0..self.base.ngens())
            .map(|i| target.ring.gen(i))
            .collect();
        images.extend(assignments.iter().map(|a| a.poly.clone()));
        let tb = target.base.ngens();
        let n = order as u32;
        let poly = self.poly.substitute_filtered(&images, &target.ring, |m| {
            m.exps[tb..].iter().sum::<u32>() <= n
        });
        let mut out = target.like(poly);
        out.order = order;
        Ok(out)
    }

    /// Multiplicative inverse of a series whose constant term is a unit
    /// scalar.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = self.degree_part(0);
        let c = c0.poly.constant_term();
        if !c0.poly.is_constant() || !c.is_unit() {
            return Err(Error::NotAUnit(c0.poly.to_text()));
        }
        let cinv = c.inverse().expect("unit");
        // 1/(c + h) = c^-1 * sum (-h/c)^k
        let h = self.try_sub(&c0)?;
        let q = h.like(h.poly.scale(&cinv.neg()));
        let mut acc = self.constant(&self.base.scalar(cinv.clone()));
        let mut term = self.constant(&self.base.scalar(cinv));
        for _ in 0..self.order {
            term = term.try_mul(&q)?;
            if term.is_zero() {
                break;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Compositional inverse of a one-variable series `u*z + O(z^2)` with
    /// `u` a unit scalar, exact through `order`.
    pub fn functional_inverse(&self, order: usize) -> Result<TruncatedSeries> {
        assert_eq!(self.nvars, 1, "one-variable series only");
        if order > self.order {
            return Err(Error::InsufficientOrder {
                have: self.order,
                need: order,
            });
        }
        let f = self.with_order(order);
        if !f.coeff(&[0]).is_zero() {
            return Err(Error::NonzeroConstantTerm(self.ring.name(self.base.ngens()).into()));
        }
        let u = f.coeff(&[1]);
        let uc = u.constant_term();
        if !u.is_constant() || !uc.is_unit() {
            return Err(Error::NotAUnit(u.to_text()));
        }
        let uinv: Coefficient = uc.inverse().expect("unit");
        let z = f.var(0);
        let mut g = z.like(z.poly.scale(&uinv));
        for n in 2..=order {
            let h = f.with_order(n).substitute(&[g.with_order(n)])?;
            let c = h.coeff(&[n as u32]);
            if c.is_zero() {
                continue;
            }
            let corr = z.pow(n as u32).scale(&c.scale(&uinv));
            g = g.try_sub(&corr)?;
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        self.poly.to_text()
    }
}
