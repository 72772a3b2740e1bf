//! Finitely presented modules over the polynomial ring.
//!
//! Module Groebner bases use position-over-term with the ambient grevlex
//! (component 0 highest). Syzygies are computed by the augmentation trick:
//! append unit vectors in a trailing component block, take a module GB, and
//! read the syzygies off the elements whose leading block vanished — the
//! position order makes the trailing block an elimination block.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::order::MonomialOrder;
use crate::poly::{cmp_grevlex_all, Monomial, Polynomial};
use crate::ring::Ctx;

pub type ModuleVec = Vec<Polynomial>;

pub fn vec_zero(ctx: &Ctx, rank: usize) -> ModuleVec {
    (0..rank).map(|_| Polynomial::zero(ctx)).collect()
}

pub fn vec_is_zero(v: &ModuleVec) -> bool {
    v.iter().all(|p| p.is_zero())
}

pub fn vec_add(a: &ModuleVec, b: &ModuleVec) -> ModuleVec {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &ModuleVec, b: &ModuleVec) -> ModuleVec {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_neg(a: &ModuleVec) -> ModuleVec {
    a.iter().map(|x| x.neg()).collect()
}

pub fn vec_mul_term(a: &ModuleVec, m: &Monomial, c: &BigRational) -> ModuleVec {
    a.iter().map(|x| x.mul_term(m, c)).collect()
}

pub fn vec_scale_poly(a: &ModuleVec, p: &Polynomial) -> ModuleVec {
    a.iter().map(|x| x.mul(p)).collect()
}

pub fn vec_num_terms(a: &ModuleVec) -> usize {
    a.iter().map(|x| x.num_terms()).sum()
}

/// Leading module monomial under position-over-term: the first nonzero
/// component, then the grevlex lead inside it.
pub fn vec_lead(v: &ModuleVec) -> Option<(usize, &Monomial, &BigRational)> {
    for (c, p) in v.iter().enumerate() {
        if !p.is_zero() {
            let (m, k) = p.lead(&MonomialOrder::GrevLex).unwrap();
            return Some((c, m, k));
        }
    }
    None
}

fn cmp_module_monomial(a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    // Lower component index ranks higher.
    match a.0.cmp(&b.0) {
        Ordering::Equal => cmp_grevlex_all(a.1, b.1),
        ord => ord.reverse(),
    }
}

/// Clear integer content across all entries and normalize the leading sign.
fn vec_content_normalized(v: &ModuleVec) -> ModuleVec {
    if vec_is_zero(v) {
        return v.clone();
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for p in v {
        for (_, c) in p.terms() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    let factor = BigRational::new(den_lcm, num_gcd);
    let mut out: ModuleVec = v.iter().map(|p| p.scale(&factor)).collect();
    let (_, _, lc) = vec_lead(&out).unwrap();
    if lc.is_negative() {
        out = vec_neg(&out);
    }
    out
}

/// Full normal form of a vector against a list of vectors.
pub fn vec_reduce(v: &ModuleVec, basis: &[ModuleVec], ctx: &Ctx) -> Result<ModuleVec> {
    let budget = ctx.budget();
    let rank = v.len();
    let leads: Vec<(usize, Monomial, BigRational)> = basis
        .iter()
        .map(|g| {
            let (c, m, k) = vec_lead(g).expect("zero vector in module basis");
            (c, m.clone(), k.clone())
        })
        .collect();
    let mut work = v.clone();
    let mut rem = vec_zero(ctx, rank);
    let mut steps = 0usize;
    loop {
        let (lc, lm, lco) = match vec_lead(&work) {
            None => break,
            Some((c, m, k)) => (c, m.clone(), k.clone()),
        };
        steps += 1;
        if steps % 64 == 0 {
            budget.check_deadline()?;
        }
        budget.check_terms(vec_num_terms(&work))?;
        budget.check_degree(lm.degree())?;
        let mut reduced = false;
        for (i, (gc, gm, gco)) in leads.iter().enumerate() {
            if *gc == lc {
                if let Some(q) = gm.div_into(&lm) {
                    let coef = -(&lco / gco);
                    let scaled = vec_mul_term(&basis[i], &q, &coef);
                    work = vec_add(&work, &scaled);
                    reduced = true;
                    break;
                }
            }
        }
        if !reduced {
            let t = Polynomial::term(ctx, lm, lco);
            work[lc] = work[lc].sub(&t);
            rem[lc] = rem[lc].add(&t);
        }
    }
    Ok(rem)
}

fn vec_s_pair(a: &ModuleVec, b: &ModuleVec) -> Option<ModuleVec> {
    let (ca, ma, ka) = vec_lead(a)?;
    let (cb, mb, kb) = vec_lead(b)?;
    if ca != cb {
        return None;
    }
    let l = ma.lcm(mb);
    let ua = ma.div_into(&l).unwrap();
    let ub = mb.div_into(&l).unwrap();
    let sa = vec_mul_term(a, &ua, &ka.recip());
    let sb = vec_mul_term(b, &ub, &kb.recip());
    Some(vec_sub(&sa, &sb))
}

/// Reduced module Groebner basis. Pair pruning is kept minimal (same
/// component only); the coprime-lead shortcut is not valid for modules.
pub fn module_buchberger(gens: &[ModuleVec], ctx: &Ctx) -> Result<Vec<ModuleVec>> {
    let budget = ctx.budget();
    let mut basis: Vec<ModuleVec> = Vec::new();
    for g in gens {
        if vec_is_zero(g) {
            continue;
        }
        let h = vec_reduce(&vec_content_normalized(g), &basis, ctx)?;
        if !vec_is_zero(&h) {
            basis.push(vec_content_normalized(&h));
        }
    }
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    let mut push_pairs = |pairs: &mut Vec<(usize, usize, Monomial)>, basis: &[ModuleVec], t: usize| {
        let (ct, mt, _) = vec_lead(&basis[t]).unwrap();
        for i in 0..t {
            let (ci, mi, _) = vec_lead(&basis[i]).unwrap();
            if ci == ct {
                pairs.push((i, t, mi.lcm(mt)));
            }
        }
    };
    for t in 0..basis.len() {
        push_pairs(&mut pairs, &basis, t);
    }
    while !pairs.is_empty() {
        budget.check_deadline()?;
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                cmp_grevlex_all(&a.2, &b.2)
                    .then(a.0.cmp(&b.0))
                    .then(a.1.cmp(&b.1))
            })
            .map(|(k, _)| k)
            .unwrap();
        let (i, j, _) = pairs.swap_remove(best);
        let s = match vec_s_pair(&basis[i], &basis[j]) {
            Some(s) => s,
            None => continue,
        };
        let h = vec_reduce(&s, &basis, ctx)?;
        if !vec_is_zero(&h) {
            basis.push(vec_content_normalized(&h));
            let t = basis.len() - 1;
            push_pairs(&mut pairs, &basis, t);
        }
    }
    module_interreduce(basis, ctx)
}

fn module_interreduce(mut basis: Vec<ModuleVec>, ctx: &Ctx) -> Result<Vec<ModuleVec>> {
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        let (ca, ma, _) = vec_lead(&basis[a]).unwrap();
        let (ca, ma) = (ca, ma.clone());
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            let (cb, mb, _) = vec_lead(&basis[b]).unwrap();
            if cb == ca && mb.divides(&ma) && (mb != &ma || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    basis = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(v, k)| if k { Some(v) } else { None })
        .collect();
    loop {
        let mut changed = false;
        for a in 0..basis.len() {
            let others: Vec<ModuleVec> = basis
                .iter()
                .enumerate()
                .filter_map(|(b, v)| if b != a { Some(v.clone()) } else { None })
                .collect();
            let r = vec_reduce(&basis[a], &others, ctx)?;
            if r != basis[a] {
                basis[a] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut basis: Vec<ModuleVec> = basis
        .into_iter()
        .map(|v| {
            let (_, _, lc) = vec_lead(&v).unwrap();
            let inv = lc.recip();
            v.iter().map(|p| p.scale(&inv)).collect()
        })
        .collect();
    basis.sort_unstable_by(|a, b| {
        let (ca, ma, _) = vec_lead(a).unwrap();
        let (cb, mb, _) = vec_lead(b).unwrap();
        cmp_module_monomial((cb, mb), (ca, ma))
    });
    Ok(basis)
}

/// Normal form of `v` modulo the submodule generated by `gens`.
pub fn module_normal_form(v: &ModuleVec, gens: &[ModuleVec], ctx: &Ctx) -> Result<ModuleVec> {
    let nonzero: Vec<ModuleVec> = gens.iter().filter(|g| !vec_is_zero(g)).cloned().collect();
    let gb = module_buchberger(&nonzero, ctx)?;
    vec_reduce(v, &gb, ctx)
}

/// Generators of the syzygy module of `vectors` inside R^ambient.
pub fn syzygies_of_vectors(
    vectors: &[ModuleVec],
    ambient: usize,
    ctx: &Ctx,
) -> Result<Vec<ModuleVec>> {
    let s = vectors.len();
    let mut aug: Vec<ModuleVec> = Vec::with_capacity(s);
    for (i, v) in vectors.iter().enumerate() {
        assert_eq!(v.len(), ambient, "vector rank mismatch");
        let mut w = v.clone();
        for j in 0..s {
            w.push(if i == j {
                Polynomial::one(ctx)
            } else {
                Polynomial::zero(ctx)
            });
        }
        aug.push(w);
    }
    let gb = module_buchberger(&aug, ctx)?;
    let mut out = Vec::new();
    for g in gb {
        if g[..ambient].iter().all(|p| p.is_zero()) {
            out.push(g[ambient..].to_vec());
        }
    }
    Ok(out)
}

/// If `v` lies in the submodule generated by `gens`, return coefficients
/// expressing it; otherwise None.
pub fn express_in_module(
    v: &ModuleVec,
    gens: &[ModuleVec],
    ambient: usize,
    ctx: &Ctx,
) -> Result<Option<Vec<Polynomial>>> {
    let s = gens.len();
    let mut aug: Vec<ModuleVec> = Vec::with_capacity(s);
    for (i, g) in gens.iter().enumerate() {
        let mut w = g.clone();
        for j in 0..s {
            w.push(if i == j {
                Polynomial::one(ctx)
            } else {
                Polynomial::zero(ctx)
            });
        }
        aug.push(w);
    }
    let gb = module_buchberger(&aug, ctx)?;
    let mut w = v.clone();
    for _ in 0..s {
        w.push(Polynomial::zero(ctx));
    }
    let nf = vec_reduce(&w, &gb, ctx)?;
    if nf[..ambient].iter().all(|p| p.is_zero()) {
        Ok(Some(nf[ambient..].iter().map(|p| p.neg()).collect()))
    } else {
        Ok(None)
    }
}

/// How a presented module sits inside a free module, when known.
#[derive(Clone, Debug)]
pub struct SubquotientData {
    pub free_rank: usize,
    pub generators: Vec<ModuleVec>,
    pub modulo: Vec<ModuleVec>,
}

/// Vector-space dimension over Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{}", n),
            Dimension::Infinite => write!(f, "infinite"),
        }
    }
}

/// coker(relations): a module with `ambient_rank` generators and the given
/// relation columns. Relations are interreduced eagerly on construction.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    ctx: Ctx,
    ambient_rank: usize,
    relations: Vec<ModuleVec>,
    grading: Option<Vec<i64>>,
    pub embedding: Option<SubquotientData>,
}

impl ModulePresentation {
    pub fn new(
        ctx: &Ctx,
        ambient_rank: usize,
        relations: Vec<ModuleVec>,
        grading: Option<Vec<i64>>,
    ) -> Result<Self> {
        for r in &relations {
            if r.len() != ambient_rank {
                return Err(AlgebraError::DimensionMismatch);
            }
        }
        if let Some(sh) = &grading {
            if sh.len() != ambient_rank {
                return Err(AlgebraError::DimensionMismatch);
            }
        }
        let nonzero: Vec<ModuleVec> = relations
            .into_iter()
            .filter(|r| !vec_is_zero(r))
            .collect();
        let relations = module_buchberger(&nonzero, ctx)?;
        Ok(ModulePresentation {
            ctx: ctx.clone(),
            ambient_rank,
            relations,
            grading,
            embedding: None,
        })
    }

    /// R^rank with no relations.
    pub fn free(ctx: &Ctx, rank: usize) -> Self {
        ModulePresentation {
            ctx: ctx.clone(),
            ambient_rank: rank,
            relations: Vec::new(),
            grading: None,
            embedding: None,
        }
    }

    /// R/I as a rank-1 presentation.
    pub fn cyclic(ideal: &Ideal) -> Result<Self> {
        let ctx = ideal.ctx().clone();
        let rels: Vec<ModuleVec> = ideal
            .generators()
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| vec![g.clone()])
            .collect();
        Self::new(&ctx, 1, rels, None)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Interreduced relation columns (a reduced module GB).
    pub fn relations(&self) -> &[ModuleVec] {
        &self.relations
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn with_grading(mut self, grading: Vec<i64>) -> Self {
        assert_eq!(grading.len(), self.ambient_rank);
        self.grading = Some(grading);
        self
    }

    /// Zero-module test: every generator reduces to 0 modulo the relations.
    pub fn is_zero(&self) -> Result<bool> {
        for c in 0..self.ambient_rank {
            let mut e = vec_zero(&self.ctx, self.ambient_rank);
            e[c] = Polynomial::one(&self.ctx);
            let nf = vec_reduce(&e, &self.relations, &self.ctx)?;
            if !vec_is_zero(&nf) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Normal form of an element (given as an ambient vector).
    pub fn normal_form(&self, v: &ModuleVec) -> Result<ModuleVec> {
        if v.len() != self.ambient_rank {
            return Err(AlgebraError::DimensionMismatch);
        }
        vec_reduce(v, &self.relations, &self.ctx)
    }

    /// {p in R : p·M = 0}, as the intersection over generators of
    /// (relations : generator).
    pub fn annihilator(&self) -> Result<Ideal> {
        if self.ambient_rank == 0 {
            return Ok(Ideal::unit(&self.ctx));
        }
        let mut acc: Option<Ideal> = None;
        for c in 0..self.ambient_rank {
            let mut e = vec_zero(&self.ctx, self.ambient_rank);
            e[c] = Polynomial::one(&self.ctx);
            let mut list: Vec<ModuleVec> = vec![e];
            list.extend(self.relations.iter().cloned());
            let syz = syzygies_of_vectors(&list, self.ambient_rank, &self.ctx)?;
            let gens: Vec<Polynomial> = syz.into_iter().map(|s| s[0].clone()).collect();
            let q = Ideal::new(&self.ctx, gens);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Vector-space dimension over Q: count of standard monomial-generator
    /// pairs under the module GB of the relations.
    pub fn finite_dimension(&self) -> Result<Dimension> {
        let n = self.ctx.num_vars();
        let mut total = 0usize;
        for c in 0..self.ambient_rank {
            let comp_leads: Vec<&Monomial> = self
                .relations
                .iter()
                .filter_map(|r| {
                    let (rc, m, _) = vec_lead(r).unwrap();
                    if rc == c {
                        Some(m)
                    } else {
                        None
                    }
                })
                .collect();
            if comp_leads.iter().any(|m| m.is_one()) {
                continue; // generator is itself reducible
            }
            // Pure-power bounds per variable.
            let mut bounds = Vec::with_capacity(n);
            for v in 0..n {
                let b = comp_leads
                    .iter()
                    .filter(|m| m.0.iter().enumerate().all(|(i, &e)| e == 0 || i == v))
                    .map(|m| m.0[v])
                    .min();
                match b {
                    Some(b) => bounds.push(b),
                    None => return Ok(Dimension::Infinite),
                }
            }
            // Count monomials in the box not divisible by any lead.
            let mut stack = vec![Monomial(vec![0; n])];
            let mut idx = vec![0usize; 1];
            let _ = &mut idx;
            fn rec(
                v: usize,
                n: usize,
                bounds: &[u32],
                cur: &mut Monomial,
                leads: &[&Monomial],
                count: &mut usize,
            ) {
                if v == n {
                    if !leads.iter().any(|l| l.divides(cur)) {
                        *count += 1;
                    }
                    return;
                }
                for e in 0..bounds[v] {
                    cur.0[v] = e;
                    rec(v + 1, n, bounds, cur, leads, count);
                }
                cur.0[v] = 0;
            }
            let mut count = 0usize;
            rec(0, n, &bounds, &mut stack[0], &comp_leads, &mut count);
            total += count;
        }
        Ok(Dimension::Finite(total))
    }

    /// Degreewise Q-dimensions of a graded presentation, for degrees in the
    /// given inclusive range. Shift of generator c is `grading[c]` (0 if no
    /// grading was attached).
    pub fn degreewise_dimensions(&self, lo: i64, hi: i64) -> Result<Vec<usize>> {
        let n = self.ctx.num_vars();
        let shifts: Vec<i64> = match &self.grading {
            Some(s) => s.clone(),
            None => vec![0; self.ambient_rank],
        };
        let all: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        for d in lo..=hi {
            let mut count = 0usize;
            for c in 0..self.ambient_rank {
                let target = d - shifts[c];
                if target < 0 {
                    continue;
                }
                let comp_leads: Vec<Monomial> = self
                    .relations
                    .iter()
                    .filter_map(|r| {
                        let (rc, m, _) = vec_lead(r).unwrap();
                        if rc == c {
                            Some(m.clone())
                        } else {
                            None
                        }
                    })
                    .collect();
                count += crate::hilbert::standard_monomial_count(
                    n,
                    &all,
                    &comp_leads,
                    target as u32,
                );
            }
            out.push(count);
        }
        Ok(out)
    }
}

/// Syzygy module of a row of polynomials, presented on its own generators.
/// The embedding field carries the actual syzygy vectors in R^len(rows).
pub fn syzygies(rows: &[Polynomial]) -> Result<ModulePresentation> {
    assert!(!rows.is_empty(), "syzygies of an empty row");
    let ctx = rows[0].ctx().clone();
    let vectors: Vec<ModuleVec> = rows.iter().map(|p| vec![p.clone()]).collect();
    let syz = syzygies_of_vectors(&vectors, 1, &ctx)?;
    // Second syzygies present the syzygy module itself.
    let rels = if syz.is_empty() {
        Vec::new()
    } else {
        let second = syzygies_of_vectors(&syz, rows.len(), &ctx)?;
        second
    };
    let mut pres = ModulePresentation::new(&ctx, syz.len(), rels, None)?;
    pres.embedding = Some(SubquotientData {
        free_rank: rows.len(),
        generators: syz,
        modulo: Vec::new(),
    });
    Ok(pres)
}

/// Kernel of a map of presented modules. `matrix[j]` is the image in
/// R^{dst rank} of the j-th generator of `src`.
pub fn kernel_of_map(
    src: &ModulePresentation,
    dst: &ModulePresentation,
    matrix: &[ModuleVec],
) -> Result<ModulePresentation> {
    if matrix.len() != src.ambient_rank() {
        return Err(AlgebraError::DimensionMismatch);
    }
    for col in matrix {
        if col.len() != dst.ambient_rank() {
            return Err(AlgebraError::DimensionMismatch);
        }
    }
    let ctx = src.ctx().clone();
    // Vectors v in R^{src rank} with map(v) in im(dst relations).
    let mut list: Vec<ModuleVec> = matrix.to_vec();
    list.extend(dst.relations().iter().cloned());
    let syz = syzygies_of_vectors(&list, dst.ambient_rank(), &ctx)?;
    let kernel_gens: Vec<ModuleVec> = syz
        .into_iter()
        .map(|s| s[..src.ambient_rank()].to_vec())
        .filter(|v| !vec_is_zero(v))
        .collect();
    // Relations among the kernel generators, modulo src's relations.
    let mut list2: Vec<ModuleVec> = kernel_gens.clone();
    list2.extend(src.relations().iter().cloned());
    let rels = if kernel_gens.is_empty() {
        Vec::new()
    } else {
        let syz2 = syzygies_of_vectors(&list2, src.ambient_rank(), &ctx)?;
        syz2.into_iter()
            .map(|s| s[..kernel_gens.len()].to_vec())
            .collect()
    };
    let mut pres = ModulePresentation::new(&ctx, kernel_gens.len(), rels, None)?;
    pres.embedding = Some(SubquotientData {
        free_rank: src.ambient_rank(),
        generators: kernel_gens,
        modulo: src.relations().to_vec(),
    });
    Ok(pres)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::RingContext;

    #[test]
    fn koszul_syzygy_of_x_y() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let x = parse_poly("x", &ctx).unwrap();
        let y = parse_poly("y", &ctx).unwrap();
        let s = syzygies(&[x, y]).unwrap();
        let emb = s.embedding.as_ref().unwrap();
        assert_eq!(emb.generators.len(), 1);
        // Generated by (y, -x) up to sign/scale.
        let g = &emb.generators[0];
        let expect = vec![
            parse_poly("y", &ctx).unwrap(),
            parse_poly("-x", &ctx).unwrap(),
        ];
        assert!(g == &expect || g == &vec_neg(&expect));
        // The syzygy module of a regular pair is free: no second relations.
        assert!(s.relations().is_empty());
    }

    #[test]
    fn syzygy_of_single_generator_is_zero() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let g = parse_poly("x^2 - y", &ctx).unwrap();
        let s = syzygies(&[g]).unwrap();
        assert_eq!(s.ambient_rank(), 0);
        assert!(s.is_zero().unwrap());
    }

    #[test]
    fn jacobian_syzygy_contains_vector_field() {
        // (0, y, -2z) against (3x² + y²z, 2xyz, xy²).
        let ctx = RingContext::new(&["x", "y", "z"], &[], &[]).unwrap();
        let rows = [
            parse_poly("3*x^2 + y^2*z", &ctx).unwrap(),
            parse_poly("2*x*y*z", &ctx).unwrap(),
            parse_poly("x*y^2", &ctx).unwrap(),
        ];
        let rel = vec![
            parse_poly("0", &ctx).unwrap(),
            parse_poly("y", &ctx).unwrap(),
            parse_poly("-2*z", &ctx).unwrap(),
        ];
        // It is a relation:
        let mut sum = Polynomial::zero(&ctx);
        for (c, r) in rel.iter().zip(rows.iter()) {
            sum = sum.add(&c.mul(r));
        }
        assert!(sum.is_zero());
        // And it lies in the span of the computed syzygies:
        let s = syzygies(&rows).unwrap();
        let emb = s.embedding.as_ref().unwrap();
        let found = express_in_module(&rel, &emb.generators, 3, &ctx).unwrap();
        assert!(found.is_some());
    }

    #[test]
    fn every_syzygy_column_evaluates_to_zero() {
        let ctx = RingContext::new(&["x", "y", "z"], &[], &[]).unwrap();
        let rows = [
            parse_poly("x*y - z^2", &ctx).unwrap(),
            parse_poly("x^2*z", &ctx).unwrap(),
            parse_poly("y^3 - x", &ctx).unwrap(),
        ];
        let s = syzygies(&rows).unwrap();
        for g in &s.embedding.as_ref().unwrap().generators {
            let mut sum = Polynomial::zero(&ctx);
            for (c, r) in g.iter().zip(rows.iter()) {
                sum = sum.add(&c.mul(r));
            }
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn annihilator_examples() {
        let ctx = RingContext::new(&["x"], &[], &[]).unwrap();
        let rx = ModulePresentation::cyclic(&Ideal::new(
            &ctx,
            vec![parse_poly("x", &ctx).unwrap()],
        ))
        .unwrap();
        assert!(rx
            .annihilator()
            .unwrap()
            .equals(&Ideal::new(&ctx, vec![parse_poly("x", &ctx).unwrap()]))
            .unwrap());
        // Zero module: rank 0.
        let z = ModulePresentation::new(&ctx, 0, vec![], None).unwrap();
        assert!(z.annihilator().unwrap().is_unit().unwrap());
    }

    #[test]
    fn finite_dimension_examples() {
        let ctx = RingContext::new(&["x"], &[], &[]).unwrap();
        let m = ModulePresentation::cyclic(&Ideal::new(
            &ctx,
            vec![parse_poly("x^3", &ctx).unwrap()],
        ))
        .unwrap();
        assert_eq!(m.finite_dimension().unwrap(), Dimension::Finite(3));

        let ctx2 = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let m2 = ModulePresentation::cyclic(&Ideal::new(
            &ctx2,
            vec![parse_poly("x", &ctx2).unwrap()],
        ))
        .unwrap();
        assert_eq!(m2.finite_dimension().unwrap(), Dimension::Infinite);
    }

    #[test]
    fn kernel_of_identity_and_zero_maps() {
        let ctx = RingContext::new(&["x", "t"], &[], &[]).unwrap();
        let tx = Ideal::new(&ctx, vec![parse_poly("t*x", &ctx).unwrap()]);
        let m = ModulePresentation::cyclic(&tx).unwrap();
        // Identity.
        let id = vec![vec![Polynomial::one(&ctx)]];
        let k = kernel_of_map(&m, &m, &id).unwrap();
        assert!(k.is_zero().unwrap());
        // Zero map: kernel is the whole module; same annihilator as m.
        let z = vec![vec![Polynomial::zero(&ctx)]];
        let k0 = kernel_of_map(&m, &m, &z).unwrap();
        assert!(!k0.is_zero().unwrap());
        assert!(k0
            .annihilator()
            .unwrap()
            .equals(&m.annihilator().unwrap())
            .unwrap());
    }

    #[test]
    fn kernel_of_multiplication_by_t_on_the_tx_module() {
        // On Q[x,t]/(t·x), multiplication by t has kernel (x)/(t·x), which is
        // isomorphic to Q[x,t]/(t): check via annihilator and nonvanishing.
        let ctx = RingContext::new(&["x", "t"], &[], &[]).unwrap();
        let tx = Ideal::new(&ctx, vec![parse_poly("t*x", &ctx).unwrap()]);
        let m = ModulePresentation::cyclic(&tx).unwrap();
        let mult_t = vec![vec![parse_poly("t", &ctx).unwrap()]];
        let k = kernel_of_map(&m, &m, &mult_t).unwrap();
        assert!(!k.is_zero().unwrap());
        let ann = k.annihilator().unwrap();
        assert!(ann
            .equals(&Ideal::new(&ctx, vec![parse_poly("t", &ctx).unwrap()]))
            .unwrap());
        // The kernel is generated by the class of x.
        let emb = k.embedding.as_ref().unwrap();
        let x_vec = vec![parse_poly("x", &ctx).unwrap()];
        let mut gens_and_modulo = emb.generators.clone();
        gens_and_modulo.extend(emb.modulo.iter().cloned());
        assert!(express_in_module(&x_vec, &gens_and_modulo, 1, &ctx)
            .unwrap()
            .is_some());
    }

    #[test]
    fn whitney_umbrella_subquotient_dimension() {
        // (x, y)/J_f for f = x² + y²z has Q-dimension 1, basis {class of y}.
        let ctx = RingContext::new(&["x", "y", "z"], &[], &[]).unwrap();
        let jf = [
            parse_poly("2*x", &ctx).unwrap(),
            parse_poly("2*y*z", &ctx).unwrap(),
            parse_poly("y^2", &ctx).unwrap(),
        ];
        let i_gens = [parse_poly("x", &ctx).unwrap(), parse_poly("y", &ctx).unwrap()];
        // Relations of I/J_f: (a, b) with a·x + b·y in J_f.
        let mut list: Vec<ModuleVec> = i_gens.iter().map(|g| vec![g.clone()]).collect();
        list.extend(jf.iter().map(|g| vec![g.clone()]));
        let syz = syzygies_of_vectors(&list, 1, &ctx).unwrap();
        let rels: Vec<ModuleVec> = syz.into_iter().map(|s| s[..2].to_vec()).collect();
        let m = ModulePresentation::new(&ctx, 2, rels, None).unwrap();
        assert_eq!(m.finite_dimension().unwrap(), Dimension::Finite(1));
        // Witness: the class of y is nonzero, the class of x is zero.
        let ey = {
            let mut v = vec_zero(&ctx, 2);
            v[1] = Polynomial::one(&ctx);
            v
        };
        let ex = {
            let mut v = vec_zero(&ctx, 2);
            v[0] = Polynomial::one(&ctx);
            v
        };
        assert!(!vec_is_zero(&m.normal_form(&ey).unwrap()));
        assert!(vec_is_zero(&m.normal_form(&ex).unwrap()));
    }
}
