//! Fibers of the flat covers of the moduli of cubics: at p = 2 the scheme
//! of coordinate changes killing a2, a4, a6; at p = 3 the one killing
//! a1, a3, a6. Both are computed by filtered degreewise reduction.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{
    EchelonBasis, Field, FieldKind, GradedPolynomial, Monomial, PolyRing, PrimeField, Rationals,
    WeightBasis,
};
use crate::elliptic::{transform, CoordinateChange, WeierstrassCurve};
use crate::error::{Error, Result};

/// The relations cutting out a cover fiber inside `k[r, s, t]`, together
/// with the variables solved for linearly.
#[derive(Clone, Debug)]
pub struct CoverSpec {
    pub prime: u64,
    pub ring: Arc<PolyRing>,
    /// The three transformation-law relations, before elimination.
    pub relations: Vec<GradedPolynomial>,
    /// (relation index, variable index) pairs, eliminated in order.
    pub eliminate: Vec<(usize, usize)>,
}

/// Ring `Z[r, s, t]` with |r| = 4, |s| = 2, |t| = 6.
pub fn rst_ring() -> Arc<PolyRing> {
    PolyRing::new(
        crate::algebra::BaseRing::Integers,
        &[("r", 4), ("s", 2), ("t", 6)],
    )
}

/// Relations for the cover at `p` (2 or 3) over a curve with constant
/// coefficients.
pub fn cover_spec(c: &WeierstrassCurve, p: u64) -> Result<CoverSpec> {
    if c.a.iter().any(|a| !a.is_constant()) {
        return Err(Error::Invalid(
            "fiber needs a curve with constant coefficients over a field".into(),
        ));
    }
    let ring = rst_ring();
    let c = c.embed(&ring);
    let g = CoordinateChange {
        u: ring.base().one(),
        r: ring.gen(0),
        s: ring.gen(1),
        t: ring.gen(2),
    };
    let d = transform(&c, &g)?;
    // u = 1, so the primed coefficients are the relations themselves.
    let (relations, eliminate) = match p {
        2 => (
            vec![d.a2().clone(), d.a4().clone(), d.a6().clone()],
            vec![(0, 0)],
        ),
        3 => (
            vec![d.a1().clone(), d.a3().clone(), d.a6().clone()],
            vec![(0, 1), (0, 2)],
        ),
        _ => return Err(Error::Invalid(format!("no cover at p = {p}"))),
    };
    Ok(CoverSpec {
        prime: p,
        ring,
        relations,
        eliminate,
    })
}

/// Solves `rels[rel]` (of the form d*x + rest, d a nonzero integer) for
/// `x = -rest/d` and substitutes into the other relations, clearing the
/// denominator by powers of d. Returns the text of the solution and d.
fn eliminate(
    rels: &mut Vec<GradedPolynomial>,
    rel: usize,
    var: usize,
) -> Result<(String, BigInt)> {
    let f = rels.remove(rel);
    let parts = f.collect_by(&[var]);
    if parts.keys().any(|k| k[0] > 1) {
        return Err(Error::Invariant("relation is not linear in the variable".into()));
    }
    let lin = parts
        .get(&vec![1])
        .filter(|l| l.is_constant() && !l.is_zero())
        .ok_or_else(|| Error::Invariant("no constant coefficient to solve with".into()))?;
    let d = lin.constant_term().to_bigint();
    let ring = f.ring().clone();
    let rest = parts.get(&vec![0]).cloned().unwrap_or_else(|| ring.zero());
    let image = rest.neg();
    for g in rels.iter_mut() {
        let by = g.collect_by(&[var]);
        let deg = by.keys().map(|k| k[0]).max().unwrap_or(0);
        let mut out = ring.zero();
        for (k, coef) in by {
            let i = k[0];
            let dpow = crate::algebra::Coefficient::Integer(d.pow(deg - i));
            out = &out + &(&coef * &image.pow(i)).scale(&dpow);
        }
        *g = out;
    }
    let text = if d.is_one() {
        image.to_text()
    } else {
        format!("({})/{}", image.to_text(), d)
    };
    Ok((text, d))
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberAlgebra {
    pub prime: u64,
    pub field: String,
    /// Solved variables with their values.
    pub eliminated: Vec<(String, String)>,
    /// Surviving variables.
    pub variables: Vec<String>,
    /// Relations after elimination, denominators cleared.
    pub relations: Vec<String>,
    pub basis: Vec<String>,
    pub basis_weights: Vec<u32>,
    /// products[i][j] = basis[i] * basis[j] in normal form.
    pub products: Vec<Vec<String>>,
    pub cutoff: u32,
    /// Quotient dimension of the weight <= D filtration piece, per even D.
    pub codim_by_cutoff: Vec<(u32, usize)>,
    /// The dimension was constant over the last stretch of cutoffs.
    pub stable: bool,
    pub rank: usize,
    pub associative: bool,
    pub unital: bool,
}

/// Basis and multiplication table of the fiber of the cover at `p` over
/// the curve `c`, whose coefficients are read in `field`.
pub fn cover_fiber(
    c: &WeierstrassCurve,
    p: u64,
    field: FieldKind,
    cutoff: u32,
) -> Result<FiberAlgebra> {
    let spec = cover_spec(c, p)?;
    let off = if p == 2 { 3 } else { 2 };
    if let FieldKind::Prime(q) = field {
        if !crate::algebra::coeff::is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if q == off {
            return Err(Error::NotAUnit(format!("{off} in {field}")));
        }
    }
    let ring = spec.ring.clone();
    let mut rels = spec.relations.clone();
    let mut eliminated = Vec::new();
    let mut gone = Vec::new();
    for &(rel, var) in &spec.eliminate {
        let (text, d) = eliminate(&mut rels, rel, var)?;
        if let FieldKind::Prime(q) = field {
            if (&d % BigInt::from(q)).is_zero() {
                return Err(Error::NotAUnit(format!("{d} in {field}")));
            }
        }
        debug_assert!(!d.is_negative() || d.abs() > BigInt::zero());
        eliminated.push((ring.name(var).to_string(), text));
        gone.push(var);
    }
    let gens: Vec<usize> = (0..ring.ngens()).filter(|g| !gone.contains(g)).collect();
    match field {
        FieldKind::Rationals => build(Rationals, field, &spec, &ring, &gens, &rels, eliminated, cutoff),
        FieldKind::Prime(q) => build(PrimeField(q), field, &spec, &ring, &gens, &rels, eliminated, cutoff),
    }
}

struct Filtered {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Filtered {
    /// All monomials in `gens` of weight <= d, highest weight first, so
    /// that echelon pivots fall on leading forms.
    fn new(ring: &Arc<PolyRing>, gens: &[usize], d: u32) -> Self {
        let mut monomials = Vec::new();
        for w in (0..=d).rev() {
            monomials.extend(WeightBasis::new(ring, gens, w).monomials);
        }
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Filtered { monomials, index }
    }

    fn vector<F: Field>(&self, f: &F, p: &GradedPolynomial) -> Vec<F::Elem> {
        let mut v = vec![f.zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            let i = self.index[m];
            v[i] = f.add(&v[i], &f.from_bigint(&c.to_bigint()));
        }
        v
    }
}

/// The span of all `m * rel` of filtration weight <= d.
fn ideal_piece<F: Field>(
    f: &F,
    ring: &Arc<PolyRing>,
    gens: &[usize],
    rels: &[GradedPolynomial],
    d: u32,
) -> (Filtered, EchelonBasis<F>) {
    let cols = Filtered::new(ring, gens, d);
    let mut span = EchelonBasis::new(f.clone(), cols.monomials.len());
    let one = ring.base().one();
    for rel in rels {
        let Some(top) = rel.max_weight() else { continue };
        if top > d {
            continue;
        }
        for w in 0..=(d - top) {
            for m in ring.monomials_of_weight_in(gens, w) {
                span.insert(&cols.vector(f, &rel.mul_monomial(&m, &one)));
            }
        }
    }
    (cols, span)
}

#[allow(clippy::too_many_arguments)]
fn build<F: Field>(
    f: F,
    kind: FieldKind,
    spec: &CoverSpec,
    ring: &Arc<PolyRing>,
    gens: &[usize],
    rels: &[GradedPolynomial],
    eliminated: Vec<(String, String)>,
    cutoff: u32,
) -> Result<FiberAlgebra> {
    let mut codim_by_cutoff = Vec::new();
    for d in (0..=cutoff).step_by(2) {
        let (cols, span) = ideal_piece(&f, ring, gens, rels, d);
        codim_by_cutoff.push((d, cols.monomials.len() - span.rank()));
    }
    let (cols, span) = ideal_piece(&f, ring, gens, rels, cutoff);
    let rank = cols.monomials.len() - span.rank();
    // Stable over the last 12 weights: longer than any relation's reach.
    let tail: Vec<usize> = codim_by_cutoff
        .iter()
        .filter(|(d, _)| *d + 12 >= cutoff)
        .map(|(_, r)| *r)
        .collect();
    let stable = tail.len() > 1 && tail.iter().all(|&r| r == rank);

    let mut free: Vec<usize> = span.free_columns();
    free.sort_by(|a, b| cols.monomials[*a].cmp(&cols.monomials[*b]));
    let basis: Vec<Monomial> = free.iter().map(|&i| cols.monomials[i].clone()).collect();
    let top = basis.iter().map(|m| m.weight).max().unwrap_or(0);
    if 2 * top > cutoff {
        return Err(Error::Invalid(format!(
            "cutoff {cutoff} too small for products of weight {}",
            2 * top
        )));
    }
    let names: Vec<String> = basis.iter().map(|m| ring.monomial_text(m)).collect();
    let n = basis.len();
    // table[i][j][k]: coefficient of basis[k] in basis[i] * basis[j]
    let mut table = vec![vec![vec![f.zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let m = basis[i].mul(&basis[j]);
            let mut v = vec![f.zero(); cols.monomials.len()];
            v[cols.index[&m]] = f.one();
            let r = span.reduce(&v);
            for (k, &col) in free.iter().enumerate() {
                table[i][j][k] = r[col].clone();
            }
            debug_assert!(r
                .iter()
                .enumerate()
                .all(|(c, x)| f.is_zero(x) || free.contains(&c)));
        }
    }
    let associative = (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let mut left = vec![f.zero(); n];
                let mut right = vec![f.zero(); n];
                for l in 0..n {
                    let a = &table[i][j][l];
                    let b = &table[j][k][l];
                    for m in 0..n {
                        if !f.is_zero(a) {
                            left[m] = f.add(&left[m], &f.mul(a, &table[l][k][m]));
                        }
                        if !f.is_zero(b) {
                            right[m] = f.add(&right[m], &f.mul(b, &table[i][l][m]));
                        }
                    }
                }
                left == right
            })
        })
    });
    let unit = basis.iter().position(|m| m.is_one());
    let unital = unit.is_some_and(|u| {
        (0..n).all(|j| (0..n).all(|k| table[u][j][k] == if j == k { f.one() } else { f.zero() }))
    });
    let render = |v: &[F::Elem]| -> String {
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(k, c)| {
                let c = f.render(c);
                match (c.as_str(), names[k].as_str()) {
                    (c, "1") => c.to_string(),
                    ("1", name) => name.to_string(),
                    (c, name) => format!("{c}*{name}"),
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    };
    let products = table
        .iter()
        .map(|row| row.iter().map(|v| render(v)).collect())
        .collect();
    Ok(FiberAlgebra {
        prime: spec.prime,
        field: kind.to_string(),
        eliminated,
        variables: gens.iter().map(|&g| ring.name(g).to_string()).collect(),
        relations: rels.iter().map(|r| r.to_text()).collect(),
        basis_weights: basis.iter().map(|m| m.weight).collect(),
        basis: names,
        products,
        cutoff,
        codim_by_cutoff,
        stable,
        rank,
        associative,
        unital,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BaseRing;

    fn cusp() -> WeierstrassCurve {
        WeierstrassCurve::numeric(BaseRing::Integers, [0; 5])
    }

    #[test]
    fn cusp_at_two() {
        let fib = cover_fiber(&cusp(), 2, FieldKind::Prime(2), 36).unwrap();
        let mut b = fib.basis.clone();
        b.sort();
        let mut want = vec!["1", "s", "s^2", "s^3", "t", "s*t", "s^2*t", "s^3*t"];
        want.sort();
        assert_eq!(b, want);
        assert!(fib.associative && fib.unital && fib.stable);
        let s = fib.basis.iter().position(|x| x == "s").unwrap();
        let s3 = fib.basis.iter().position(|x| x == "s^3").unwrap();
        let t = fib.basis.iter().position(|x| x == "t").unwrap();
        assert_eq!(fib.products[s][s3], "0");
        assert_eq!(fib.products[t][t], "0");
    }

    #[test]
    fn cusp_at_three() {
        let fib = cover_fiber(&cusp(), 3, FieldKind::Prime(3), 24).unwrap();
        assert_eq!(fib.basis, vec!["1", "r", "r^2"]);
        assert_eq!(fib.products[1][2], "0");
    }

    #[test]
    fn off_prime_must_be_invertible() {
        assert!(matches!(
            cover_fiber(&cusp(), 2, FieldKind::Prime(3), 36),
            Err(Error::NotAUnit(_))
        ));
        assert!(matches!(
            cover_fiber(&cusp(), 3, FieldKind::Prime(2), 24),
            Err(Error::NotAUnit(_))
        ));
    }
}
