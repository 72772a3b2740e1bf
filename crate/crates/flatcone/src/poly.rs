//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are stored sorted strictly descending in grevlex over the declared
//! variable sequence; that canonical layout makes printing deterministic and
//! equality structural. All arithmetic is exact.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::order::MonomialOrder;
use crate::ring::{assert_same_ctx, Ctx};

/// Exponent vector, one entry per context variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(i: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn degree_on(&self, vars: &[usize]) -> u64 {
        vars.iter().map(|&i| self.0[i] as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, if divisible.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(&b, &a)| b - a).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn supported_on(&self, vars: &[usize]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || vars.contains(&i))
    }
}

/// Descending grevlex over the full declared variable sequence; the storage
/// order of every polynomial.
pub(crate) fn cmp_grevlex_all(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.0.len()).rev() {
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    ctx: Ctx,
    terms: Vec<(Monomial, BigRational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.id() == other.ctx.id() && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, BigRational::one())
    }

    pub fn constant(ctx: &Ctx, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(ctx);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(Monomial::one(ctx.num_vars()), c)],
        }
    }

    pub fn from_int(ctx: &Ctx, k: i64) -> Self {
        Self::constant(ctx, BigRational::from_integer(BigInt::from(k)))
    }

    pub fn var(ctx: &Ctx, i: usize) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(Monomial::var(i, ctx.num_vars()), BigRational::one())],
        }
    }

    pub fn var_named(ctx: &Ctx, name: &str) -> Result<Self> {
        let i = ctx
            .var_index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable {
                name: name.to_string(),
            })?;
        Ok(Self::var(ctx, i))
    }

    pub fn term(ctx: &Ctx, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.0.len(), ctx.num_vars());
        if c.is_zero() {
            return Self::zero(ctx);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Normalizing constructor: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ctx: &Ctx, terms: Vec<(Monomial, BigRational)>) -> Self {
        let mut terms = terms;
        terms.sort_unstable_by(|a, b| cmp_grevlex_all(&b.0, &a.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ctx: ctx.clone(),
            terms: out,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<&BigRational> {
        if self.terms.len() == 1 && self.terms[0].0.is_one() {
            Some(&self.terms[0].1)
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_on(&self, vars: &[usize]) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree_on(vars))
            .max()
            .unwrap_or(0)
    }

    /// Variables actually occurring.
    pub fn support(&self) -> Vec<usize> {
        let n = self.ctx.num_vars();
        let mut seen = vec![false; n];
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        (0..n).filter(|&i| seen[i]).collect()
    }

    pub fn supported_on(&self, vars: &[usize]) -> bool {
        self.terms.iter().all(|(m, _)| m.supported_on(vars))
    }

    /// Leading term with respect to `order` (storage is grevlex, so other
    /// orders scan).
    pub fn lead(&self, order: &MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        if self.terms.is_empty() {
            return None;
        }
        if *order == MonomialOrder::GrevLex {
            let (m, c) = &self.terms[0];
            return Some((m, c));
        }
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_same_ctx(&self.ctx, &other.ctx);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_grevlex_all(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ctx: self.ctx.clone(),
            terms: out,
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// self + coeff * x^mono * other, the inner loop of reduction.
    pub fn add_scaled_shifted(
        &self,
        other: &Polynomial,
        mono: &Monomial,
        coeff: &BigRational,
    ) -> Polynomial {
        assert_same_ctx(&self.ctx, &other.ctx);
        let scaled: Vec<(Monomial, BigRational)> = other
            .terms
            .iter()
            .map(|(m, c)| (m.mul(mono), c * coeff))
            .collect();
        let scaled = Polynomial {
            ctx: self.ctx.clone(),
            terms: scaled,
        };
        self.add(&scaled)
    }

    pub fn mul_term(&self, mono: &Monomial, coeff: &BigRational) -> Polynomial {
        if coeff.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c * coeff))
                .collect(),
        }
    }

    pub fn scale(&self, coeff: &BigRational) -> Polynomial {
        self.mul_term(&Monomial::one(self.ctx.num_vars()), coeff)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_same_ctx(&self.ctx, &other.ctx);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut acc: Vec<(Monomial, BigRational)> =
            Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.push((ma.mul(mb), ca * cb));
            }
        }
        Self::from_terms(&self.ctx, acc)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Self::one(&self.ctx);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative with respect to variable index `var`.
    pub fn differentiate(&self, var: usize) -> Polynomial {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[var] = e - 1;
                terms.push((m2, c * BigRational::from_integer(BigInt::from(e))));
            }
        }
        Self::from_terms(&self.ctx, terms)
    }

    pub fn differentiate_named(&self, name: &str) -> Result<Polynomial> {
        let i = self
            .ctx
            .var_index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable {
                name: name.to_string(),
            })?;
        Ok(self.differentiate(i))
    }

    /// Substitute polynomials for variables; unlisted variables stay.
    pub fn substitute(&self, images: &BTreeMap<usize, Polynomial>) -> Polynomial {
        let n = self.ctx.num_vars();
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut prod = Self::constant(&self.ctx, c.clone());
            for i in 0..n {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                match images.get(&i) {
                    Some(img) => prod = prod.mul(&img.pow(e)),
                    None => {
                        prod = prod.mul_term(&{
                            let mut mm = Monomial::one(n);
                            mm.0[i] = e;
                            mm
                        }, &BigRational::one())
                    }
                }
            }
            out = out.add(&prod);
        }
        out
    }

    /// Set every variable in `vars` to zero.
    pub fn set_vars_to_zero(&self, vars: &[usize]) -> Polynomial {
        let terms: Vec<(Monomial, BigRational)> = self
            .terms
            .iter()
            .filter(|(m, _)| vars.iter().all(|&i| m.0[i] == 0))
            .cloned()
            .collect();
        Polynomial {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    /// Evaluate the listed variables at rational values; others must not occur.
    pub fn eval(&self, assignment: &BTreeMap<usize, BigRational>) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match assignment.get(&i) {
                    Some(x) => {
                        for _ in 0..e {
                            v *= x;
                        }
                    }
                    None => {
                        return Err(AlgebraError::OutOfSubring {
                            var: self.ctx.name(i).to_string(),
                        })
                    }
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Transfer into `new_ctx`; `var_map[i]` is the target index of the
    /// current variable `i`, `None` meaning the variable must not occur.
    pub fn map_context(&self, new_ctx: &Ctx, var_map: &[Option<usize>]) -> Result<Polynomial> {
        let n2 = new_ctx.num_vars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e2 = vec![0u32; n2];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match var_map[i] {
                    Some(j) => e2[j] = e,
                    None => {
                        return Err(AlgebraError::OutOfSubring {
                            var: self.ctx.name(i).to_string(),
                        })
                    }
                }
            }
            terms.push((Monomial(e2), c.clone()));
        }
        Ok(Self::from_terms(new_ctx, terms))
    }

    /// Map by matching variable names between contexts.
    pub fn map_by_names(&self, new_ctx: &Ctx) -> Result<Polynomial> {
        let var_map: Vec<Option<usize>> = (0..self.ctx.num_vars())
            .map(|i| new_ctx.var_index(self.ctx.name(i)))
            .collect();
        self.map_context(new_ctx, &var_map)
    }

    /// Remove integer content and make the storage-leading coefficient
    /// positive. Returns zero unchanged.
    pub fn content_normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let factor = BigRational::new(den_lcm, num_gcd);
        let mut p = self.scale(&factor);
        if p.terms[0].1.is_negative() {
            p = p.neg();
        }
        p
    }

    /// Divide by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.lead(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// True if every term has the same degree on `vars`.
    pub fn homogeneous_on(&self, vars: &[usize]) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree_on(vars));
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ac = c.abs();
            if m.is_one() {
                write_rational(f, &ac)?;
            } else {
                if !ac.is_one() {
                    write_rational(f, &ac)?;
                    write!(f, "*")?;
                }
                let mut first = true;
                for (i, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "{}", self.ctx.name(i))?;
                    if e > 1 {
                        write!(f, "^{}", e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn ctx3() -> Ctx {
        RingContext::new(&["x", "y", "z"], &[], &[]).unwrap()
    }

    #[test]
    fn storage_is_canonical() {
        let ctx = ctx3();
        let x = Polynomial::var(&ctx, 0);
        let y = Polynomial::var(&ctx, 1);
        let p = y.add(&x).add(&x.mul(&x)).sub(&y);
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.terms()[0].0, Monomial(vec![2, 0, 0]));
    }

    #[test]
    fn derivative_leibniz_small() {
        let ctx = ctx3();
        let x = Polynomial::var(&ctx, 0);
        let y = Polynomial::var(&ctx, 1);
        let p = x.mul(&x).add(&y);
        let q = x.mul(&y);
        let lhs = p.mul(&q).differentiate(0);
        let rhs = p.differentiate(0).mul(&q).add(&p.mul(&q.differentiate(0)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn content_normalize_clears_denominators() {
        let ctx = ctx3();
        let x = Polynomial::var(&ctx, 0);
        let p = x
            .scale(&BigRational::new(BigInt::from(-2), BigInt::from(3)))
            .add(&Polynomial::constant(
                &ctx,
                BigRational::new(BigInt::from(4), BigInt::from(9)),
            ));
        let n = p.content_normalized();
        // -2/3 x + 4/9 -> content 2/9 -> 3x - 2, sign-normalized to 3x - 2.
        let expect = Polynomial::var(&ctx, 0)
            .scale(&BigRational::from_integer(BigInt::from(3)))
            .sub(&Polynomial::from_int(&ctx, 2));
        assert_eq!(n, expect);
    }

    #[test]
    fn set_vars_to_zero_drops_terms() {
        let ctx = RingContext::new(&["x"], &["t"], &[]).unwrap();
        let x = Polynomial::var(&ctx, 0);
        let t = Polynomial::var(&ctx, 1);
        let p = x.mul(&t).add(&x);
        assert_eq!(p.set_vars_to_zero(&[1]), x);
    }
}
