//! Buchberger engine with Gebauer-Moller pair elimination, plus the ideal
//! toolkit built on it: normal forms, membership, elimination, quotients,
//! saturation, and radical membership.
//!
//! Reduced Groebner bases are monic and canonically sorted, so `equals` is
//! structural equality of reduced bases. Every intermediate reduction step
//! honors the context budget.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use num_rational::BigRational;
use num_traits::One;

use crate::error::{AlgebraError, Result};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial};
use crate::ring::{assert_same_ctx, Ctx};

/// Full normal form of `p` against `basis` under `order`.
pub fn reduce(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    let ctx = p.ctx().clone();
    let budget = ctx.budget();
    let leads: Vec<(Monomial, BigRational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.lead(order).expect("zero polynomial in basis");
            (m.clone(), c.clone())
        })
        .collect();
    let mut work = p.clone();
    let mut remainder: Vec<(Monomial, BigRational)> = Vec::new();
    let mut steps = 0usize;
    while !work.is_zero() {
        steps += 1;
        if steps % 64 == 0 {
            budget.check_deadline()?;
        }
        budget.check_terms(work.num_terms() + remainder.len())?;
        let (lm, lc) = {
            let (m, c) = work.lead(order).unwrap();
            (m.clone(), c.clone())
        };
        budget.check_degree(lm.degree())?;
        let mut reduced = false;
        for (i, (gm, gc)) in leads.iter().enumerate() {
            if let Some(q) = gm.div_into(&lm) {
                let coeff = -(&lc / gc);
                work = work.add_scaled_shifted(&basis[i], &q, &coeff);
                reduced = true;
                break;
            }
        }
        if !reduced {
            remainder.push((lm.clone(), lc.clone()));
            work = work.sub(&Polynomial::term(&ctx, lm, lc));
        }
    }
    Ok(Polynomial::from_terms(&ctx, remainder))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.lead(order).unwrap();
    let (gm, gc) = g.lead(order).unwrap();
    let l = fm.lcm(gm);
    let a = l.div_into(&l).unwrap(); // zero monomial template
    let _ = a;
    let uf = fm.div_into(&l).unwrap();
    let ug = gm.div_into(&l).unwrap();
    let sf = f.mul_term(&uf, &fc.recip());
    let sg = g.mul_term(&ug, &gc.recip());
    sf.sub(&sg)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer-Moller update: prune `pairs` and extend with the pairs of the
/// element at `t` (already pushed onto `basis`).
fn gm_update(pairs: &mut Vec<Pair>, basis: &[Polynomial], t: usize, order: &MonomialOrder) {
    let lead = |k: usize| basis[k].lead(order).unwrap().0;
    let lt = lead(t).clone();

    // Candidate new pairs.
    let mut cand: Vec<Pair> = (0..t)
        .map(|i| Pair {
            i,
            j: t,
            lcm: lead(i).lcm(&lt),
        })
        .collect();

    // M criterion: drop (i,t) when some lcm(j,t) strictly divides lcm(i,t).
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..cand.len() {
            if a == b {
                continue;
            }
            if cand[b].lcm.divides(&cand[a].lcm) && cand[b].lcm != cand[a].lcm {
                keep[a] = false;
                break;
            }
        }
    }
    let cand: Vec<Pair> = cand
        .drain(..)
        .zip(keep)
        .filter_map(|(p, k)| if k { Some(p) } else { None })
        .collect();

    // F criterion: one representative per lcm class; drop the whole class if
    // any member has coprime leading monomials (product criterion).
    let mut groups: BTreeMap<Vec<u32>, Vec<Pair>> = BTreeMap::new();
    for p in cand {
        groups.entry(p.lcm.0.clone()).or_default().push(p);
    }
    let mut new_pairs = Vec::new();
    for (_, group) in groups {
        let coprime = group.iter().any(|p| lead(p.i).coprime(&lt));
        if !coprime {
            let rep = group
                .into_iter()
                .min_by_key(|p| p.i)
                .expect("nonempty group");
            new_pairs.push(rep);
        }
    }

    // B criterion on the old pairs.
    pairs.retain(|p| {
        !(lt.divides(&p.lcm) && lead(p.i).lcm(&lt) != p.lcm && lead(p.j).lcm(&lt) != p.lcm)
    });
    pairs.extend(new_pairs);
}

/// Reduced Groebner basis of the given generators.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder, ctx: &Ctx) -> Result<Vec<Polynomial>> {
    let budget = ctx.budget();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let h = reduce(&g.content_normalized(), &basis, order)?;
        if h.is_zero() {
            continue;
        }
        basis.push(h.content_normalized());
        gm_update(&mut pairs, &basis, basis.len() - 1, order);
    }

    while !pairs.is_empty() {
        budget.check_deadline()?;
        // Normal strategy: smallest lcm first, ties by (i, j).
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                order
                    .compare(&a.lcm, &b.lcm)
                    .then(a.i.cmp(&b.i))
                    .then(a.j.cmp(&b.j))
            })
            .map(|(k, _)| k)
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], order);
        let h = reduce(&s, &basis, order)?;
        if !h.is_zero() {
            basis.push(h.content_normalized());
            gm_update(&mut pairs, &basis, basis.len() - 1, order);
        }
    }

    interreduce(basis, order)
}

/// Minimalize and tail-reduce a basis; result is the reduced GB, monic,
/// sorted descending by leading monomial.
fn interreduce(mut basis: Vec<Polynomial>, order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    // Minimalize: drop any element whose lead is divisible by another lead.
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        let la = basis[a].lead(order).unwrap().0.clone();
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            let lb = basis[b].lead(order).unwrap().0;
            if lb.divides(&la) && (lb != &la || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    basis = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| if k { Some(p) } else { None })
        .collect();

    // Tail-reduce each element against the others, iterating to a fixed point.
    loop {
        let mut changed = false;
        for a in 0..basis.len() {
            let others: Vec<Polynomial> = basis
                .iter()
                .enumerate()
                .filter_map(|(b, p)| if b != a { Some(p.clone()) } else { None })
                .collect();
            let r = reduce(&basis[a], &others, order)?;
            if r != basis[a] {
                basis[a] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut basis: Vec<Polynomial> = basis.into_iter().map(|p| p.monic(order)).collect();
    basis.sort_unstable_by(|a, b| {
        order
            .compare(b.lead(order).unwrap().0, a.lead(order).unwrap().0)
    });
    Ok(basis)
}

/// Buchberger criterion as a post-hoc assertion: every S-polynomial of the
/// basis reduces to zero.
pub fn buchberger_selfcheck(basis: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order);
            if !reduce(&s, basis, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An ideal: generator list plus cached reduced Groebner bases per order.
#[derive(Debug)]
pub struct Ideal {
    ctx: Ctx,
    generators: Vec<Polynomial>,
    cache: Arc<RwLock<BTreeMap<MonomialOrder, Arc<Vec<Polynomial>>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ctx: self.ctx.clone(),
            generators: self.generators.clone(),
            cache: Arc::clone(&self.cache),
        }
    }
}

impl Ideal {
    /// Generators are stored content-cleared (integer content removed,
    /// leading sign positive); zero generators are kept so that positions
    /// stay meaningful for cone-variable bookkeeping.
    pub fn new(ctx: &Ctx, gens: Vec<Polynomial>) -> Ideal {
        for g in &gens {
            assert_same_ctx(ctx, g.ctx());
        }
        let generators = gens.iter().map(|g| g.content_normalized()).collect();
        Ideal {
            ctx: ctx.clone(),
            generators,
            cache: Arc::new(RwLock::new(BTreeMap::new())),
        }
    }

    pub fn zero(ctx: &Ctx) -> Ideal {
        Self::new(ctx, Vec::new())
    }

    pub fn unit(ctx: &Ctx) -> Ideal {
        Self::new(ctx, vec![Polynomial::one(ctx)])
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(b) = self.cache.read().unwrap().get(order) {
            return Ok(Arc::clone(b));
        }
        let basis = buchberger(&self.generators, order, &self.ctx)?;
        #[cfg(debug_assertions)]
        {
            debug_assert!(
                buchberger_selfcheck(&basis, order)?,
                "S-polynomial failed to reduce to zero"
            );
        }
        let basis = Arc::new(basis);
        let mut w = self.cache.write().unwrap();
        let entry = w.entry(order.clone()).or_insert_with(|| Arc::clone(&basis));
        Ok(Arc::clone(entry))
    }

    pub fn normal_form(&self, p: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
        assert_same_ctx(&self.ctx, p.ctx());
        let basis = self.groebner_basis(order)?;
        reduce(p, &basis, order)
    }

    /// Ideal membership: normal form vanishes.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p, &MonomialOrder::GrevLex)?.is_zero())
    }

    pub fn contains_all(&self, ps: &[Polynomial]) -> Result<bool> {
        for p in ps {
            if !self.contains(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        self.contains(&Polynomial::one(&self.ctx))
    }

    pub fn is_zero_ideal(&self) -> Result<bool> {
        Ok(self.groebner_basis(&MonomialOrder::GrevLex)?.is_empty())
    }

    /// Equality via the canonical reduced grevlex basis.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        assert_same_ctx(&self.ctx, &other.ctx);
        let a = self.groebner_basis(&MonomialOrder::GrevLex)?;
        let b = other.groebner_basis(&MonomialOrder::GrevLex)?;
        Ok(*a == *b)
    }

    pub fn plus(&self, other: &Ideal) -> Ideal {
        assert_same_ctx(&self.ctx, &other.ctx);
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ctx, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        assert_same_ctx(&self.ctx, &other.ctx);
        let mut gens = Vec::new();
        for a in self.generators.iter().filter(|g| !g.is_zero()) {
            for b in other.generators.iter().filter(|g| !g.is_zero()) {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(&self.ctx, gens)
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut out = Ideal::unit(&self.ctx);
        for _ in 0..k {
            out = out.product(self);
        }
        out
    }

    /// I ∩ Q[vars outside `drop`], via a block elimination order.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        let n = self.ctx.num_vars();
        let order = MonomialOrder::elimination(drop, n);
        let basis = self.groebner_basis(&order)?;
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        let gens: Vec<Polynomial> = basis
            .iter()
            .filter(|p| p.supported_on(&keep))
            .cloned()
            .collect();
        Ok(Ideal::new(&self.ctx, gens))
    }

    /// I ∩ J by the auxiliary-variable trick: eliminate t from t·I + (1−t)·J.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        assert_same_ctx(&self.ctx, &other.ctx);
        let names = self.ctx.fresh_aux_names("t", 1);
        let ext = self.ctx.extend_aux(&names)?;
        let ti = ext.var_index(&names[0]).unwrap();
        let t = Polynomial::var(&ext, ti);
        let one_minus_t = Polynomial::one(&ext).sub(&t);
        let mut gens = Vec::new();
        for g in self.generators.iter().filter(|g| !g.is_zero()) {
            gens.push(t.mul(&g.map_by_names(&ext)?));
        }
        for g in other.generators.iter().filter(|g| !g.is_zero()) {
            gens.push(one_minus_t.mul(&g.map_by_names(&ext)?));
        }
        let elim = Ideal::new(&ext, gens).eliminate(&[ti])?;
        let gens: Result<Vec<Polynomial>> = elim
            .generators()
            .iter()
            .map(|p| p.map_by_names(&self.ctx))
            .collect();
        Ok(Ideal::new(&self.ctx, gens?))
    }

    /// (I : g) = (1/g)·(I ∩ (g)) for a single nonzero polynomial g.
    pub fn quotient_poly(&self, g: &Polynomial) -> Result<Ideal> {
        assert_same_ctx(&self.ctx, g.ctx());
        if g.is_zero() {
            // (I : 0) is the whole ring.
            return Ok(Ideal::unit(&self.ctx));
        }
        let meet = self.intersection(&Ideal::new(&self.ctx, vec![g.clone()]))?;
        let mut gens = Vec::new();
        for h in meet.generators() {
            let q = divide_exact(h, g)
                .expect("element of I ∩ (g) must be divisible by g");
            gens.push(q);
        }
        Ok(Ideal::new(&self.ctx, gens))
    }

    /// (I : J) = ∩ over generators of J.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        assert_same_ctx(&self.ctx, &other.ctx);
        let mut out: Option<Ideal> = None;
        for g in other.generators().iter().filter(|g| !g.is_zero()) {
            let q = self.quotient_poly(g)?;
            out = Some(match out {
                None => q,
                Some(acc) => acc.intersection(&q)?,
            });
        }
        Ok(out.unwrap_or_else(|| Ideal::unit(&self.ctx)))
    }

    /// (I : g^∞) by the Rabinowitsch method: adjoin t, add 1 − t·g,
    /// eliminate t.
    pub fn saturate(&self, g: &Polynomial) -> Result<Ideal> {
        assert_same_ctx(&self.ctx, g.ctx());
        assert!(!g.is_zero(), "saturation by zero");
        let names = self.ctx.fresh_aux_names("t", 1);
        let ext = self.ctx.extend_aux(&names)?;
        let ti = ext.var_index(&names[0]).unwrap();
        let t = Polynomial::var(&ext, ti);
        let mut gens: Vec<Polynomial> = Vec::new();
        for h in self.generators.iter().filter(|h| !h.is_zero()) {
            gens.push(h.map_by_names(&ext)?);
        }
        gens.push(Polynomial::one(&ext).sub(&t.mul(&g.map_by_names(&ext)?)));
        let elim = Ideal::new(&ext, gens).eliminate(&[ti])?;
        let back: Result<Vec<Polynomial>> = elim
            .generators()
            .iter()
            .map(|p| p.map_by_names(&self.ctx))
            .collect();
        Ok(Ideal::new(&self.ctx, back?))
    }

    /// True iff some power of p lies in I: 1 ∈ I + (1 − t·p).
    pub fn radical_contains(&self, p: &Polynomial) -> Result<bool> {
        assert_same_ctx(&self.ctx, p.ctx());
        if p.is_zero() {
            return self.is_zero_member_trivial();
        }
        let names = self.ctx.fresh_aux_names("t", 1);
        let ext = self.ctx.extend_aux(&names)?;
        let ti = ext.var_index(&names[0]).unwrap();
        let t = Polynomial::var(&ext, ti);
        let mut gens: Vec<Polynomial> = Vec::new();
        for h in self.generators.iter().filter(|h| !h.is_zero()) {
            gens.push(h.map_by_names(&ext)?);
        }
        gens.push(Polynomial::one(&ext).sub(&t.mul(&p.map_by_names(&ext)?)));
        Ideal::new(&ext, gens).is_unit()
    }

    fn is_zero_member_trivial(&self) -> Result<bool> {
        Ok(true) // 0 lies in every radical
    }

    pub fn map_by_names(&self, new_ctx: &Ctx) -> Result<Ideal> {
        let gens: Result<Vec<Polynomial>> = self
            .generators
            .iter()
            .map(|p| p.map_by_names(new_ctx))
            .collect();
        Ok(Ideal::new(new_ctx, gens?))
    }
}

/// Exact division p / g, when g divides p.
pub fn divide_exact(p: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    assert!(!g.is_zero());
    let order = MonomialOrder::GrevLex;
    let (gm, gc) = {
        let (m, c) = g.lead(&order).unwrap();
        (m.clone(), c.clone())
    };
    let ctx = p.ctx().clone();
    let mut work = p.clone();
    let mut quot: Vec<(Monomial, BigRational)> = Vec::new();
    while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.lead(&order).unwrap();
            (m.clone(), c.clone())
        };
        let q = gm.div_into(&lm)?;
        let qc = &lc / &gc;
        work = work.add_scaled_shifted(g, &q, &-qc.clone());
        quot.push((q, qc));
    }
    Some(Polynomial::from_terms(&ctx, quot))
}

/// Convenience: monic reduced grevlex basis as display strings.
pub fn basis_strings(ideal: &Ideal) -> Result<Vec<String>> {
    let b = ideal.groebner_basis(&MonomialOrder::GrevLex)?;
    Ok(b.iter().map(|p| p.to_string()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::RingContext;

    fn ideal(ctx: &Ctx, gens: &[&str]) -> Ideal {
        Ideal::new(
            ctx,
            gens.iter().map(|s| parse_poly(s, ctx).unwrap()).collect(),
        )
    }

    #[test]
    fn principal_ideal_basis() {
        let ctx = RingContext::new(&["x"], &[], &[]).unwrap();
        let i = ideal(&ctx, &["x"]);
        let b = i.groebner_basis(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "x");
    }

    #[test]
    fn lex_basis_by_substitution_oracle() {
        // <y - x^2, x - y^2> under lex(x > y): substituting x = y^2 into the
        // first generator gives y - y^4, so the basis is {x - y^2, y^4 - y}.
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let i = ideal(&ctx, &["y - x^2", "x - y^2"]);
        let b = i.groebner_basis(&MonomialOrder::Lex).unwrap();
        let strings: Vec<String> = b.iter().map(|p| p.to_string()).collect();
        assert_eq!(strings, vec!["x - y^2".to_string(), "y^4 - y".to_string()]);
    }

    #[test]
    fn normal_form_examples() {
        let ctx = RingContext::new(&["x", "y", "z"], &[], &[]).unwrap();
        let jf = ideal(&ctx, &["3*x^2 + y^2*z", "2*x*y*z", "x*y^2"]);
        // Generator membership from the paper's Jacobian ideal.
        let xy2 = parse_poly("x*y^2", &ctx).unwrap();
        assert!(jf.contains(&xy2).unwrap());
        // Division-algorithm oracle: x·(3x²+y²z) + z reduces to z.
        let p = parse_poly("x*(3*x^2 + y^2*z) + z", &ctx).unwrap();
        assert_eq!(
            jf.normal_form(&p, &MonomialOrder::GrevLex).unwrap().to_string(),
            "z"
        );
        // normal_form(1, (x)) = 1.
        let ix = ideal(&ctx, &["x"]);
        let one = Polynomial::one(&ctx);
        assert_eq!(ix.normal_form(&one, &MonomialOrder::GrevLex).unwrap(), one);
        assert!(!ix.contains(&one).unwrap());
    }

    #[test]
    fn membership_with_explicit_combination() {
        // x^3 + x*y^2*z = (1/3)x·(3x² + y²z) + (2/3)z·(x y²).
        let ctx = RingContext::new(&["x", "y", "z"], &[], &[]).unwrap();
        let jf = ideal(&ctx, &["3*x^2 + y^2*z", "2*x*y*z", "x*y^2"]);
        let f = parse_poly("x^3 + x*y^2*z", &ctx).unwrap();
        assert!(jf.contains(&f).unwrap());
    }

    #[test]
    fn eliminate_examples() {
        // Rees kernel of (x, y): eliminate τ from (v1 - x·τ, v2 - y·τ).
        let ctx = RingContext::new(&["x", "y"], &[], &["v1", "v2", "tau"]).unwrap();
        let i = ideal(&ctx, &["v1 - x*tau", "v2 - y*tau"]);
        let e = i.eliminate(&[ctx.var_index("tau").unwrap()]).unwrap();
        let b = e.groebner_basis(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "x*v2 - y*v1");

        // eliminate y from (y - x^2) is (0).
        let ctx2 = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let i2 = ideal(&ctx2, &["y - x^2"]);
        assert!(i2.eliminate(&[1]).unwrap().is_zero_ideal().unwrap());

        // eliminate t from (x - t, y - t^2) is (y - x^2).
        let ctx3 = RingContext::new(&["x", "y"], &[], &["t"]).unwrap();
        let i3 = ideal(&ctx3, &["x - t", "y - t^2"]);
        let e3 = i3.eliminate(&[2]).unwrap();
        let b3 = e3.groebner_basis(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(b3.len(), 1);
        assert_eq!(b3[0].to_string(), "x^2 - y");
    }

    #[test]
    fn quotient_examples() {
        let ctx = RingContext::new(&["x", "y", "z"], &[], &[]).unwrap();
        let ix = ideal(&ctx, &["x"]);
        assert!(ix.quotient(&ix).unwrap().is_unit().unwrap());
        let ixy = ideal(&ctx, &["x*y"]);
        let q = ixy.quotient(&ideal(&ctx, &["y"])).unwrap();
        assert!(q.equals(&ix).unwrap());
        // (J_f : (x, y)) strictly contains J_f.
        let jf = ideal(&ctx, &["3*x^2 + y^2*z", "2*x*y*z", "x*y^2"]);
        let q2 = jf.quotient(&ideal(&ctx, &["x", "y"])).unwrap();
        assert!(!q2.equals(&jf).unwrap());
        for g in jf.generators() {
            assert!(q2.contains(g).unwrap());
        }
        // (I : J)·J ⊆ I.
        for g in q2.generators() {
            for h in [parse_poly("x", &ctx).unwrap(), parse_poly("y", &ctx).unwrap()] {
                assert!(jf.contains(&g.mul(&h)).unwrap());
            }
        }
    }

    #[test]
    fn saturation_examples() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let x = parse_poly("x", &ctx).unwrap();
        let y = parse_poly("y", &ctx).unwrap();
        assert!(ideal(&ctx, &["x^2"]).saturate(&x).unwrap().is_unit().unwrap());
        let s = ideal(&ctx, &["x*y^2"]).saturate(&y).unwrap();
        assert!(s.equals(&ideal(&ctx, &["x"])).unwrap());
        // Stabilization: saturating twice is the identity.
        let s2 = s.saturate(&y).unwrap();
        assert!(s2.equals(&s).unwrap());
    }

    #[test]
    fn saturation_matches_iterated_quotient_oracle() {
        // Torsion test case: (x·v2 - y·v1, x·v1), saturated by x.
        let ctx = RingContext::new(&["x", "y"], &[], &["v1", "v2"]).unwrap();
        let i = ideal(&ctx, &["x*v2 - y*v1", "x*v1"]);
        let x = parse_poly("x", &ctx).unwrap();
        let sat = i.saturate(&x).unwrap();
        // Oracle: iterate (I : x) until a fixed point.
        let mut cur = i.clone();
        loop {
            let next = cur.quotient_poly(&x).unwrap();
            if next.equals(&cur).unwrap() {
                break;
            }
            cur = next;
        }
        assert!(sat.equals(&cur).unwrap());
        assert!(sat.contains(&parse_poly("v1", &ctx).unwrap()).unwrap());
    }

    #[test]
    fn radical_membership_examples() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let x = parse_poly("x", &ctx).unwrap();
        let y = parse_poly("y", &ctx).unwrap();
        assert!(ideal(&ctx, &["x^2"]).radical_contains(&x).unwrap());
        assert!(!ideal(&ctx, &["x"]).radical_contains(&y).unwrap());
    }

    #[test]
    fn radical_membership_of_f_in_its_jacobian() {
        // f = x^6 + y^6 + x^2 y^2 z^2 lies in the radical of its own
        // Jacobian ideal.
        let ctx = RingContext::new(&["x", "y", "z"], &[], &[]).unwrap();
        let f = parse_poly("x^6 + y^6 + x^2*y^2*z^2", &ctx).unwrap();
        let jf = Ideal::new(
            &ctx,
            vec![f.differentiate(0), f.differentiate(1), f.differentiate(2)],
        );
        assert!(jf.radical_contains(&f).unwrap());
    }

    #[test]
    fn elimination_is_contained_and_dropped() {
        let ctx = RingContext::new(&["x", "y", "z"], &[], &[]).unwrap();
        let i = ideal(&ctx, &["x*y - z^2", "x^2 - y*z"]);
        let e = i.eliminate(&[0]).unwrap();
        for g in e.generators() {
            assert!(i.contains(g).unwrap());
            assert!(g.supported_on(&[1, 2]));
        }
    }

    #[test]
    fn divide_exact_roundtrip() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let a = parse_poly("x^2*y - y^3 + x", &ctx).unwrap();
        let b = parse_poly("x*y + 1", &ctx).unwrap();
        let prod = a.mul(&b);
        assert_eq!(divide_exact(&prod, &b).unwrap(), a);
        assert!(divide_exact(&parse_poly("x + 1", &ctx).unwrap(), &b).is_none());
    }
}
