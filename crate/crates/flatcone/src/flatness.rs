//! Flatness over the parameter origin via Koszul homology, verdicts for the
//! two fibration-theorem conditions, relation lifting, localized membership,
//! the j invariant, and associated-prime checks.
//!
//! The ambient polynomial ring is free over its parameter subring, so Tor
//! against the residue field at the parameter origin is the homology of the
//! Koszul complex on the parameter variables.

use num_rational::BigRational;
use num_traits::One;

use crate::cones::{assoc_graded, family_jacobian_ideal, graded_piece, jacobian_ideal, FamilyGerm};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::modules::{
    express_in_module, module_normal_form, syzygies, syzygies_of_vectors, vec_is_zero, vec_zero,
    Dimension, ModulePresentation, ModuleVec, SubquotientData,
};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ctx;

/// H_i of the Koszul complex on the parameter variables acting on the
/// presented module; for i = 1 this is Tor_1 over the parameter ring against
/// the residue field at the parameter origin.
pub fn koszul_tor(m: &ModulePresentation, i: u32) -> Result<ModulePresentation> {
    let ctx = m.ctx().clone();
    let params = ctx.param_indices();
    let u = params.len();
    let rank = m.ambient_rank();
    match i {
        0 => {
            let mut rels: Vec<ModuleVec> = m.relations().to_vec();
            for &p in &params {
                for c in 0..rank {
                    let mut v = vec_zero(&ctx, rank);
                    v[c] = Polynomial::var(&ctx, p);
                    rels.push(v);
                }
            }
            ModulePresentation::new(&ctx, rank, rels, m.grading().map(|g| g.to_vec()))
        }
        1 => {
            if u == 0 || rank == 0 {
                return ModulePresentation::new(&ctx, 0, vec![], None);
            }
            let k1_rank = u * rank;
            let slot = |j: usize, c: usize| j * rank + c;

            // d1: K1 -> K0, e_(j,c) -> y_j e_c, as columns in R^rank.
            let mut list1: Vec<ModuleVec> = Vec::with_capacity(k1_rank + m.relations().len());
            for j in 0..u {
                for c in 0..rank {
                    let mut v = vec_zero(&ctx, rank);
                    v[c] = Polynomial::var(&ctx, params[j]);
                    list1.push(v);
                }
            }
            list1.extend(m.relations().iter().cloned());
            let syz = syzygies_of_vectors(&list1, rank, &ctx)?;
            let kernel_gens: Vec<ModuleVec> = syz
                .into_iter()
                .map(|s| s[..k1_rank].to_vec())
                .filter(|v| !vec_is_zero(v))
                .collect();

            // d2 images and the relation blocks of K1 = M^u.
            let mut modulo: Vec<ModuleVec> = Vec::new();
            for j in 0..u {
                for jp in (j + 1)..u {
                    for c in 0..rank {
                        let mut v = vec_zero(&ctx, k1_rank);
                        v[slot(jp, c)] = Polynomial::var(&ctx, params[j]);
                        v[slot(j, c)] = Polynomial::var(&ctx, params[jp]).neg();
                        modulo.push(v);
                    }
                }
            }
            for j in 0..u {
                for r in m.relations() {
                    let mut v = vec_zero(&ctx, k1_rank);
                    for (c, entry) in r.iter().enumerate() {
                        v[slot(j, c)] = entry.clone();
                    }
                    modulo.push(v);
                }
            }

            let rels = if kernel_gens.is_empty() {
                Vec::new()
            } else {
                let mut list2: Vec<ModuleVec> = kernel_gens.clone();
                list2.extend(modulo.iter().cloned());
                let syz2 = syzygies_of_vectors(&list2, k1_rank, &ctx)?;
                syz2.into_iter()
                    .map(|s| s[..kernel_gens.len()].to_vec())
                    .collect()
            };

            // Grading: shift of slot (j, c) is shift_c + 1.
            let grading = m.grading().and_then(|shifts| {
                let mut out = Vec::with_capacity(kernel_gens.len());
                for k in &kernel_gens {
                    let mut deg: Option<i64> = None;
                    for (idx, entry) in k.iter().enumerate() {
                        if entry.is_zero() {
                            continue;
                        }
                        let c = idx % rank;
                        let all: Vec<usize> = (0..ctx.num_vars()).collect();
                        if !entry.homogeneous_on(&all) {
                            return None;
                        }
                        let d = entry.total_degree() as i64 + shifts[c] + 1;
                        match deg {
                            None => deg = Some(d),
                            Some(d0) if d0 == d => {}
                            _ => return None,
                        }
                    }
                    out.push(deg.unwrap_or(0));
                }
                Some(out)
            });

            let mut pres = ModulePresentation::new(&ctx, kernel_gens.len(), rels, grading)?;
            pres.embedding = Some(SubquotientData {
                free_rank: k1_rank,
                generators: kernel_gens,
                modulo,
            });
            Ok(pres)
        }
        _ => Err(AlgebraError::Hypothesis(
            "koszul_tor implemented for homological degrees 0 and 1".into(),
        )),
    }
}

/// Fast path for Tor_1 vanishing: kernel generators of d1 already lie in
/// im(d2) plus the relation blocks.
pub fn koszul_tor1_is_zero(m: &ModulePresentation) -> Result<bool> {
    koszul_tor(m, 1)?.is_zero()
}

/// Support of the Tor_1 obstruction on the central fiber, expressed in the
/// fiber subring: annihilator of Tor_1 plus the parameter ideal, with the
/// parameters then set to zero. Unit ideal iff Tor_1 vanishes.
pub fn obstruction_support(m: &ModulePresentation) -> Result<Ideal> {
    let ctx = m.ctx().clone();
    let params = ctx.param_indices();
    let (fctx, _) = ctx.restrict(&ctx.fiber_indices())?;
    let tor = koszul_tor(m, 1)?;
    if tor.is_zero()? {
        return Ok(Ideal::unit(&fctx));
    }
    let ann = tor.annihilator()?;
    let param_ideal = Ideal::new(
        &ctx,
        params.iter().map(|&i| Polynomial::var(&ctx, i)).collect(),
    );
    let supp_full = ann.plus(&param_ideal);
    let rgb = supp_full.groebner_basis(&MonomialOrder::GrevLex)?;
    let gens: Result<Vec<Polynomial>> = rgb
        .iter()
        .map(|p| p.set_vars_to_zero(&params).map_by_names(&fctx))
        .collect();
    Ok(Ideal::new(&fctx, gens?))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TheoremCondition {
    CriticalLocus,
    NormalCone,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FlatnessOutcome {
    FlatEverywhere,
    FlatOffOrigin,
    Fails,
}

impl std::fmt::Display for FlatnessOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FlatnessOutcome::FlatEverywhere => write!(f, "flat-everywhere"),
            FlatnessOutcome::FlatOffOrigin => write!(f, "flat-off-origin"),
            FlatnessOutcome::Fails => write!(f, "fails"),
        }
    }
}

/// Verdict with certificate data: the support ideal of the obstruction and
/// the cone degrees examined.
#[derive(Clone, Debug)]
pub struct FlatnessVerdict {
    pub condition: TheoremCondition,
    pub outcome: FlatnessOutcome,
    /// Ideal in the fiber subring cutting out the obstruction support.
    pub obstruction_support: Ideal,
    pub degrees_checked: Vec<u32>,
}

impl FlatnessVerdict {
    /// The fibration-theorem hypothesis asks for flatness away from the
    /// origin; flat everywhere is better.
    pub fn hypothesis_holds(&self) -> bool {
        !matches!(self.outcome, FlatnessOutcome::Fails)
    }
}

/// Classify a support ideal per the verdict invariants.
pub fn classify_support(supp: &Ideal) -> Result<FlatnessOutcome> {
    if supp.is_unit()? {
        return Ok(FlatnessOutcome::FlatEverywhere);
    }
    let fctx = supp.ctx();
    for i in 0..fctx.num_vars() {
        let x = Polynomial::var(fctx, i);
        if !supp.radical_contains(&x)? {
            return Ok(FlatnessOutcome::Fails);
        }
    }
    Ok(FlatnessOutcome::FlatOffOrigin)
}

/// Check the verdict classification invariants after the fact.
pub fn verdict_invariants_hold(v: &FlatnessVerdict) -> Result<bool> {
    let supp = &v.obstruction_support;
    let fctx = supp.ctx();
    let all_in_radical = {
        let mut ok = true;
        for i in 0..fctx.num_vars() {
            if !supp.radical_contains(&Polynomial::var(fctx, i))? {
                ok = false;
                break;
            }
        }
        ok
    };
    Ok(match v.outcome {
        FlatnessOutcome::FlatEverywhere => supp.is_unit()?,
        FlatnessOutcome::FlatOffOrigin => all_in_radical,
        FlatnessOutcome::Fails => !all_in_radical,
    })
}

/// Condition (i): flatness of R/J_{F x pi} over the parameters at the
/// central fiber. Condition (ii): flatness of every graded piece of the
/// normal cone up to the degree bound.
pub fn check_theorem12(
    fam: &FamilyGerm,
    condition: TheoremCondition,
    degree_bound: u32,
) -> Result<FlatnessVerdict> {
    let jac = family_jacobian_ideal(fam);
    match condition {
        TheoremCondition::CriticalLocus => {
            let m = ModulePresentation::cyclic(&jac)?;
            let supp = obstruction_support(&m)?;
            let outcome = classify_support(&supp)?;
            Ok(FlatnessVerdict {
                condition,
                outcome,
                obstruction_support: supp,
                degrees_checked: vec![],
            })
        }
        TheoremCondition::NormalCone => {
            let graded = assoc_graded(&jac)?;
            let mut supports: Vec<Ideal> = Vec::new();
            let mut degrees = Vec::new();
            for k in 0..=degree_bound {
                let piece = graded_piece(&graded, k)?;
                supports.push(obstruction_support(&piece)?);
                degrees.push(k);
            }
            // The total obstruction is the direct sum; its support is the
            // union, i.e. the intersection of the support ideals.
            let mut total = supports[0].clone();
            for s in &supports[1..] {
                total = total.intersection(s)?;
            }
            let outcome = classify_support(&total)?;
            Ok(FlatnessVerdict {
                condition,
                outcome,
                obstruction_support: total,
                degrees_checked: degrees,
            })
        }
    }
}

/// Outcome of a relation-lifting attempt.
#[derive(Clone, Debug)]
pub enum LiftOutcome {
    /// C with sum C_i dF/dx_i = 0 and C restricted to parameter zero = rel.
    Lifted(Vec<Polynomial>),
    /// rel's class is nonzero in the cokernel of the specialized syzygies;
    /// the certificate is its nonzero module normal form.
    Obstructed { certificate: Vec<Polynomial> },
}

/// Lift a relation among the partials of f to a relation among the partials
/// of F restricting to it (degree-one case of relation extension).
pub fn lift_relation(fam: &FamilyGerm, rel: &[Polynomial]) -> Result<LiftOutcome> {
    let ctx = fam.ctx().clone();
    let fiber = ctx.fiber_indices();
    if rel.len() != fiber.len() {
        return Err(AlgebraError::DimensionMismatch);
    }
    for r in rel {
        if !r.supported_on(&fiber) {
            return Err(AlgebraError::NotARelation);
        }
    }
    let f = fam.restriction();
    let mut sum = Polynomial::zero(&ctx);
    for (r, &i) in rel.iter().zip(fiber.iter()) {
        sum = sum.add(&r.mul(&f.differentiate(i)));
    }
    if !sum.is_zero() {
        return Err(AlgebraError::NotARelation);
    }

    let family_partials: Vec<Polynomial> = fiber
        .iter()
        .map(|&i| fam.family_poly().differentiate(i))
        .collect();
    let syz = syzygies(&family_partials)?;
    let family_syzygies = &syz.embedding.as_ref().unwrap().generators;

    let (fctx, _) = ctx.restrict(&fiber)?;
    let params = ctx.param_indices();
    let specialized: Result<Vec<ModuleVec>> = family_syzygies
        .iter()
        .map(|v| {
            v.iter()
                .map(|p| p.set_vars_to_zero(&params).map_by_names(&fctx))
                .collect()
        })
        .collect();
    let specialized = specialized?;
    let rel_fiber: Result<ModuleVec> = rel.iter().map(|p| p.map_by_names(&fctx)).collect();
    let rel_fiber = rel_fiber?;

    match express_in_module(&rel_fiber, &specialized, fiber.len(), &fctx)? {
        Some(coeffs) => {
            let mut lift = vec![Polynomial::zero(&ctx); fiber.len()];
            for (a, s) in coeffs.iter().zip(family_syzygies.iter()) {
                let a_up = a.map_by_names(&ctx)?;
                for (c, entry) in s.iter().enumerate() {
                    lift[c] = lift[c].add(&a_up.mul(entry));
                }
            }
            // Exact post-conditions.
            let mut total = Polynomial::zero(&ctx);
            for (c, &i) in fiber.iter().enumerate() {
                total = total.add(&lift[c].mul(&fam.family_poly().differentiate(i)));
            }
            debug_assert!(total.is_zero());
            debug_assert!({
                let back: Vec<Polynomial> = lift
                    .iter()
                    .map(|p| p.set_vars_to_zero(&params))
                    .collect();
                back.iter()
                    .zip(rel.iter())
                    .all(|(a, b)| a == b)
            });
            Ok(LiftOutcome::Lifted(lift))
        }
        None => {
            let nf = module_normal_form(&rel_fiber, &specialized, &fctx)?;
            let certificate: Result<Vec<Polynomial>> =
                nf.iter().map(|p| p.map_by_names(&ctx)).collect();
            Ok(LiftOutcome::Obstructed {
                certificate: certificate?,
            })
        }
    }
}

/// g lies in I localized at the prime P iff (I : g) is not contained in P.
pub fn local_membership(g: &Polynomial, ideal: &Ideal, prime: &Ideal) -> Result<bool> {
    if prime.is_unit()? {
        return Err(AlgebraError::Hypothesis("P must be a proper ideal".into()));
    }
    let quotient = ideal.quotient_poly(g)?;
    let basis = quotient.groebner_basis(&MonomialOrder::GrevLex)?;
    for q in basis.iter() {
        if !prime.contains(q)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// j(f) = dim_Q I/J_f; errors when J_f is not contained in I.
pub fn j_invariant(f: &Polynomial, ideal: &Ideal) -> Result<Dimension> {
    let ctx = f.ctx().clone();
    let fiber = ctx.fiber_indices();
    let off_fiber: Vec<usize> = (0..ctx.num_vars()).filter(|i| !fiber.contains(i)).collect();
    for p in std::iter::once(f).chain(ideal.generators().iter()) {
        for i in p.support() {
            if off_fiber.contains(&i) {
                return Err(AlgebraError::OutOfSubring {
                    var: ctx.name(i).to_string(),
                });
            }
        }
    }
    let (fctx, _) = ctx.restrict(&fiber)?;
    let f = f.map_by_names(&fctx)?;
    let ideal = ideal.map_by_names(&fctx)?;
    let jf = jacobian_ideal(&f);
    if !ideal.contains_all(jf.generators())? {
        return Err(AlgebraError::Hypothesis("J_f is not contained in I".into()));
    }
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    if gens.is_empty() {
        return Ok(Dimension::Finite(0));
    }
    let mut list: Vec<ModuleVec> = gens.iter().map(|g| vec![g.clone()]).collect();
    for j in jf.generators().iter().filter(|g| !g.is_zero()) {
        list.push(vec![j.clone()]);
    }
    let syz = syzygies_of_vectors(&list, 1, &fctx)?;
    let rels: Vec<ModuleVec> = syz.into_iter().map(|s| s[..gens.len()].to_vec()).collect();
    let m = ModulePresentation::new(&fctx, gens.len(), rels, None)?;
    m.finite_dimension()
}

/// P is associated to R/J iff Hom(R/P, R/J) is nonzero after localizing at
/// P: (J : P) strictly contains J and the annihilator of (J : P)/J lies
/// inside P.
pub fn is_associated_prime(j: &Ideal, p: &Ideal) -> Result<bool> {
    if j.is_unit()? {
        return Err(AlgebraError::Hypothesis("J must be a proper ideal".into()));
    }
    if p.is_unit()? {
        return Err(AlgebraError::Hypothesis("P must be a proper ideal".into()));
    }
    let q = j.quotient(p)?;
    if q.equals(j)? {
        return Ok(false);
    }
    let witness_ann = j.quotient(&q)?;
    let basis = witness_ann.groebner_basis(&MonomialOrder::GrevLex)?;
    for g in basis.iter() {
        if !p.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Necessary-condition evidence for the vector-field hypothesis of the
/// critical-locus condition: at a user-supplied prime P along the critical
/// locus with escape direction x_dir, the partial in that direction must lie
/// in the ideal of the remaining partials, localized at P.
pub fn vector_field_evidence(
    fam: &FamilyGerm,
    prime: &Ideal,
    direction: usize,
) -> Result<bool> {
    let ctx = fam.ctx();
    let fiber = ctx.fiber_indices();
    if !fiber.contains(&direction) {
        return Err(AlgebraError::Hypothesis(
            "escape direction must be a fiber variable".into(),
        ));
    }
    let f = fam.restriction();
    let g = f.differentiate(direction);
    let others: Vec<Polynomial> = fiber
        .iter()
        .filter(|&&i| i != direction)
        .map(|&i| f.differentiate(i))
        .collect();
    let ideal = Ideal::new(ctx, others);
    local_membership(&g, &ideal, prime)
}

/// Scale a vector of rationals into a polynomial combination check; shared
/// by tests.
pub fn scale_one() -> BigRational {
    BigRational::one()
}

pub(crate) fn _unused_ctx_marker(_: &Ctx) {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::RingContext;

    #[test]
    fn tor_of_free_module_vanishes() {
        let ctx = RingContext::new(&["x"], &["t"], &[]).unwrap();
        let free = ModulePresentation::free(&ctx, 2);
        let t1 = koszul_tor(&free, 1).unwrap();
        assert!(t1.is_zero().unwrap());
    }

    #[test]
    fn tor_of_tx_module_has_annihilator_t() {
        let ctx = RingContext::new(&["x"], &["t"], &[]).unwrap();
        let m = ModulePresentation::cyclic(&Ideal::new(
            &ctx,
            vec![parse_poly("t*x", &ctx).unwrap()],
        ))
        .unwrap();
        let t1 = koszul_tor(&m, 1).unwrap();
        assert!(!t1.is_zero().unwrap());
        let ann = t1.annihilator().unwrap();
        assert!(ann
            .equals(&Ideal::new(&ctx, vec![parse_poly("t", &ctx).unwrap()]))
            .unwrap());
        // Support on the central fiber is the whole x-line.
        let supp = obstruction_support(&m).unwrap();
        assert!(supp.is_zero_ideal().unwrap());
    }

    #[test]
    fn product_family_is_flat_everywhere() {
        let ctx = RingContext::new(&["x", "y"], &["t"], &[]).unwrap();
        let fam = FamilyGerm::new(parse_poly("x^3 + y^2", &ctx).unwrap()).unwrap();
        let v = check_theorem12(&fam, TheoremCondition::CriticalLocus, 0).unwrap();
        assert_eq!(v.outcome, FlatnessOutcome::FlatEverywhere);
        assert!(verdict_invariants_hold(&v).unwrap());
        let v2 = check_theorem12(&fam, TheoremCondition::NormalCone, 2).unwrap();
        assert_eq!(v2.outcome, FlatnessOutcome::FlatEverywhere);
    }

    #[test]
    fn local_membership_unit_denominator() {
        // g = x*y^2 against (3x^2 + y^2 z, 2xyz) localized at (x, y): the
        // combination y*(2xyz) = 2z*(xy^2) has unit coefficient z off (x,y).
        let ctx = RingContext::new(&["x", "y", "z"], &[], &[]).unwrap();
        let i = Ideal::new(
            &ctx,
            vec![
                parse_poly("3*x^2 + y^2*z", &ctx).unwrap(),
                parse_poly("2*x*y*z", &ctx).unwrap(),
            ],
        );
        let p = Ideal::new(
            &ctx,
            vec![
                parse_poly("x", &ctx).unwrap(),
                parse_poly("y", &ctx).unwrap(),
            ],
        );
        let g = parse_poly("x*y^2", &ctx).unwrap();
        assert!(local_membership(&g, &i, &p).unwrap());
        // Global membership implies local membership at any prime.
        let g2 = parse_poly("3*x^2 + y^2*z", &ctx).unwrap();
        assert!(local_membership(&g2, &i, &p).unwrap());
    }

    #[test]
    fn j_invariant_examples() {
        let ctx = RingContext::new(&["x", "y", "z"], &[], &[]).unwrap();
        // Isolated singularity with I = J_f: j = 0.
        let f = parse_poly("x^2 + y^2 + z^2", &ctx).unwrap();
        let jf = jacobian_ideal(&f);
        assert_eq!(j_invariant(&f, &jf).unwrap(), Dimension::Finite(0));
        // Whitney umbrella with I = (x, y): j = 1.
        let f2 = parse_poly("x^2 + y^2*z", &ctx).unwrap();
        let i2 = Ideal::new(
            &ctx,
            vec![
                parse_poly("x", &ctx).unwrap(),
                parse_poly("y", &ctx).unwrap(),
            ],
        );
        assert_eq!(j_invariant(&f2, &i2).unwrap(), Dimension::Finite(1));
        // Hypothesis failure signals an error.
        let bad = Ideal::new(&ctx, vec![parse_poly("x", &ctx).unwrap()]);
        assert!(matches!(
            j_invariant(&f2, &bad),
            Err(AlgebraError::Hypothesis(_))
        ));
        // f = x^3 + x y^2 z with I = J_f: j = 0.
        let f3 = parse_poly("x^3 + x*y^2*z", &ctx).unwrap();
        let jf3 = jacobian_ideal(&f3);
        assert_eq!(j_invariant(&f3, &jf3).unwrap(), Dimension::Finite(0));
    }

    #[test]
    fn lift_in_trivial_family_is_constant_extension() {
        let ctx = RingContext::new(&["x", "y"], &["t"], &[]).unwrap();
        let fam = FamilyGerm::new(parse_poly("x^2*y", &ctx).unwrap()).unwrap();
        // f = x^2 y: partials (2xy, x^2); relation (x, -2y).
        let rel = vec![
            parse_poly("x", &ctx).unwrap(),
            parse_poly("-2*y", &ctx).unwrap(),
        ];
        match lift_relation(&fam, &rel).unwrap() {
            LiftOutcome::Lifted(c) => {
                assert_eq!(c, rel);
            }
            LiftOutcome::Obstructed { .. } => panic!("trivial family must lift"),
        }
    }

    #[test]
    fn non_relation_is_rejected() {
        let ctx = RingContext::new(&["x", "y"], &["t"], &[]).unwrap();
        let fam = FamilyGerm::new(parse_poly("x^2*y", &ctx).unwrap()).unwrap();
        let bad = vec![
            parse_poly("1", &ctx).unwrap(),
            parse_poly("0", &ctx).unwrap(),
        ];
        assert!(matches!(
            lift_relation(&fam, &bad),
            Err(AlgebraError::NotARelation)
        ));
    }
}
