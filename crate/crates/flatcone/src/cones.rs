//! Constructions attached to an ideal or a family of hypersurfaces: Jacobian
//! ideals of families, Rees-algebra and associated-graded (normal cone)
//! presentations, graded pieces, regular-sequence tests, and the
//! complete-intersection hypothesis report.

use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::hilbert::{ideal_dimension, monomials_of_degree};
use crate::modules::{Dimension, ModulePresentation, ModuleVec};
use crate::order::MonomialOrder;
use crate::poly::{cmp_grevlex_all, Monomial, Polynomial};
use crate::ring::{Ctx, VarBlock};

/// A polynomial family F over a ring with a nonempty fiber block, vanishing
/// at the origin and restricting to a nonzero f at parameter zero.
#[derive(Clone, Debug)]
pub struct FamilyGerm {
    family: Polynomial,
}

impl FamilyGerm {
    pub fn new(family: Polynomial) -> Result<Self> {
        let ctx = family.ctx();
        if ctx.fiber_indices().is_empty() {
            return Err(AlgebraError::Hypothesis(
                "the ring has no fiber variables".into(),
            ));
        }
        for i in family.support() {
            if ctx.block(i) == VarBlock::Aux {
                return Err(AlgebraError::Hypothesis(format!(
                    "family polynomial involves auxiliary variable `{}`",
                    ctx.name(i)
                )));
            }
        }
        let zero_at_origin = family
            .terms()
            .iter()
            .all(|(m, _)| !m.is_one());
        if !zero_at_origin {
            return Err(AlgebraError::Hypothesis("F(0) != 0".into()));
        }
        let restriction = family.set_vars_to_zero(&ctx.param_indices());
        if restriction.is_zero() {
            return Err(AlgebraError::Hypothesis(
                "the restriction f = F|params=0 is constant".into(),
            ));
        }
        Ok(FamilyGerm { family })
    }

    pub fn ctx(&self) -> &Ctx {
        self.family.ctx()
    }

    pub fn family_poly(&self) -> &Polynomial {
        &self.family
    }

    /// f = F with all parameters set to zero, in the same ring.
    pub fn restriction(&self) -> Polynomial {
        self.family.set_vars_to_zero(&self.ctx().param_indices())
    }

    /// f in the fiber-only subring.
    pub fn restriction_fiber(&self) -> Result<(Ctx, Polynomial)> {
        let ctx = self.ctx();
        let (fctx, _) = ctx.restrict(&ctx.fiber_indices())?;
        let f = self.restriction().map_by_names(&fctx)?;
        Ok((fctx, f))
    }
}

/// The critical-locus ideal of the family map (F, projection): the parameter
/// projection contributes identity rows to the Jacobian, so the maximal
/// minors reduce to the fiber-direction partials of F.
pub fn family_jacobian_ideal(fam: &FamilyGerm) -> Ideal {
    let ctx = fam.ctx();
    let gens: Vec<Polynomial> = ctx
        .fiber_indices()
        .into_iter()
        .map(|i| fam.family_poly().differentiate(i))
        .collect();
    Ideal::new(ctx, gens)
}

/// Jacobian ideal of a single polynomial over the fiber block of its ring.
pub fn jacobian_ideal(f: &Polynomial) -> Ideal {
    let ctx = f.ctx();
    let gens: Vec<Polynomial> = ctx
        .fiber_indices()
        .into_iter()
        .map(|i| f.differentiate(i))
        .collect();
    Ideal::new(ctx, gens)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    Rees,
    Graded,
}

/// Presentation of the Rees algebra or the associated graded algebra of an
/// ideal: the kernel (plus the ideal itself, in the graded case) inside the
/// ambient ring extended by one cone variable per generator.
#[derive(Clone, Debug)]
pub struct GradedAlgebraPresentation {
    pub kind: AlgebraKind,
    pub base_ideal: Ideal,
    pub extended_ctx: Ctx,
    pub cone_vars: Vec<usize>,
    pub presentation_ideal: Ideal,
}

fn cone_var_names(ctx: &Ctx, count: usize) -> Vec<String> {
    let plain: Vec<String> = (0..count).map(|i| format!("v{}", i)).collect();
    if plain.iter().all(|n| ctx.var_index(n).is_none()) {
        plain
    } else {
        ctx.fresh_aux_names("v", count)
    }
}

/// Kernel of v_i -> g_i * tau, computed by single-tau elimination.
pub fn rees_presentation(ideal: &Ideal) -> Result<GradedAlgebraPresentation> {
    let ctx = ideal.ctx();
    let gens = ideal.generators();
    if gens.is_empty() || gens.iter().all(|g| g.is_zero()) {
        return Err(AlgebraError::Hypothesis(
            "Rees presentation of the zero ideal".into(),
        ));
    }
    let c = gens.len();
    let vnames = cone_var_names(ctx, c);
    let ext_v = ctx.extend_aux(&vnames)?;
    let cone_vars: Vec<usize> = vnames
        .iter()
        .map(|n| ext_v.var_index(n).unwrap())
        .collect();
    let tname = ext_v.fresh_aux_names("tau", 1);
    let ext_vt = ext_v.extend_aux(&tname)?;
    let ti = ext_vt.var_index(&tname[0]).unwrap();
    let tau = Polynomial::var(&ext_vt, ti);
    let mut graph = Vec::with_capacity(c);
    for (i, g) in gens.iter().enumerate() {
        let v = Polynomial::var(&ext_vt, ext_vt.var_index(&vnames[i]).unwrap());
        graph.push(v.sub(&g.map_by_names(&ext_vt)?.mul(&tau)));
    }
    let kernel = Ideal::new(&ext_vt, graph).eliminate(&[ti])?;
    let back: Result<Vec<Polynomial>> = kernel
        .generators()
        .iter()
        .map(|p| p.map_by_names(&ext_v))
        .collect();
    Ok(GradedAlgebraPresentation {
        kind: AlgebraKind::Rees,
        base_ideal: ideal.clone(),
        extended_ctx: ext_v,
        cone_vars,
        presentation_ideal: Ideal::new(&ext_v, back?),
    })
}

/// Presentation ideal of gr_I = Rees(I) / I*Rees(I): the Rees kernel plus I.
pub fn assoc_graded(ideal: &Ideal) -> Result<GradedAlgebraPresentation> {
    let rees = rees_presentation(ideal)?;
    let mut gens: Vec<Polynomial> = rees.presentation_ideal.generators().to_vec();
    for g in ideal.generators().iter().filter(|g| !g.is_zero()) {
        gens.push(g.map_by_names(&rees.extended_ctx)?);
    }
    Ok(GradedAlgebraPresentation {
        kind: AlgebraKind::Graded,
        base_ideal: rees.base_ideal,
        extended_ctx: rees.extended_ctx.clone(),
        cone_vars: rees.cone_vars,
        presentation_ideal: Ideal::new(&rees.extended_ctx, gens),
    })
}

impl GradedAlgebraPresentation {
    /// Degree of a polynomial in the cone variables; errors when the
    /// generators fail to be cone-homogeneous.
    fn cone_degree(&self, p: &Polynomial) -> Result<u32> {
        if !p.homogeneous_on(&self.cone_vars) {
            return Err(AlgebraError::NonHomogeneous);
        }
        Ok(p.degree_on(&self.cone_vars) as u32)
    }

    /// The substitution invariant: v_i -> g_i * tau kills every Rees kernel
    /// generator; in the graded case it lands inside I's extension.
    pub fn substitution_check(&self) -> Result<bool> {
        let ext = &self.extended_ctx;
        let tname = ext.fresh_aux_names("tau", 1);
        let ext_t = ext.extend_aux(&tname)?;
        let tau = Polynomial::var(&ext_t, ext_t.var_index(&tname[0]).unwrap());
        let mut images: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (i, &vi) in self.cone_vars.iter().enumerate() {
            let g = self.base_ideal.generators()[i]
                .map_by_names(&ext_t)?
                .mul(&tau);
            images.insert(vi, g);
        }
        let i_ext = {
            let gens: Result<Vec<Polynomial>> = self
                .base_ideal
                .generators()
                .iter()
                .filter(|g| !g.is_zero())
                .map(|g| g.map_by_names(&ext_t))
                .collect();
            Ideal::new(&ext_t, gens?)
        };
        for p in self.presentation_ideal.generators() {
            let image = p.map_by_names(&ext_t)?.substitute(&images);
            let ok = match self.kind {
                AlgebraKind::Rees => image.is_zero(),
                AlgebraKind::Graded => i_ext.contains(&image)?,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the presentation describes the trivial vector-bundle cone:
    /// the presentation ideal equals I extended to the cone ring, i.e. the
    /// quotient is a polynomial ring in the cone variables over R/I.
    pub fn is_vector_bundle(&self) -> Result<bool> {
        let gens: Result<Vec<Polynomial>> = self
            .base_ideal
            .generators()
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.map_by_names(&self.extended_ctx))
            .collect();
        let trivial = Ideal::new(&self.extended_ctx, gens?);
        self.presentation_ideal.equals(&trivial)
    }

    /// Default degree bound for piece-by-piece flatness checks: one more
    /// than the largest cone-degree among presentation generators, at
    /// least 4.
    pub fn default_degree_bound(&self) -> Result<u32> {
        let mut best = 0u32;
        for p in self.presentation_ideal.generators() {
            if p.is_zero() {
                continue;
            }
            best = best.max(self.cone_degree(p)?);
        }
        Ok((best + 1).max(4))
    }
}

/// The degree-k slice of the associated graded algebra: a presentation of
/// I^k / I^{k+1} as a module over the base ring, with one generator per
/// degree-k cone monomial.
pub fn graded_piece(g: &GradedAlgebraPresentation, k: u32) -> Result<ModulePresentation> {
    assert_eq!(g.kind, AlgebraKind::Graded, "graded piece of a Rees presentation");
    let ext = &g.extended_ctx;
    let base_ctx = g.base_ideal.ctx();
    let nvars = ext.num_vars();
    let mut basis = monomials_of_degree(nvars, &g.cone_vars, k);
    basis.sort_unstable_by(|a, b| cmp_grevlex_all(b, a));
    let index_of = |m: &Monomial| basis.iter().position(|b| b == m);
    let rank = basis.len();

    let mut relations: Vec<ModuleVec> = Vec::new();
    for p in g.presentation_ideal.generators() {
        if p.is_zero() {
            continue;
        }
        let dv = g.cone_degree(p)?;
        if dv > k {
            continue;
        }
        for shift in monomials_of_degree(nvars, &g.cone_vars, k - dv) {
            let q = p.mul_term(&shift, &BigRational::one());
            // Split each term into cone part (selecting the column) and
            // base part (the entry).
            let mut row: Vec<Polynomial> = (0..rank).map(|_| Polynomial::zero(base_ctx)).collect();
            for (m, c) in q.terms() {
                let mut cone = Monomial(vec![0; nvars]);
                let mut base = m.clone();
                for &vi in &g.cone_vars {
                    cone.0[vi] = m.0[vi];
                    base.0[vi] = 0;
                }
                let col = index_of(&cone).expect("cone-homogeneous slice");
                let entry = Polynomial::term(ext, base, c.clone()).map_by_names(base_ctx)?;
                row[col] = row[col].add(&entry);
            }
            relations.push(row);
        }
    }

    // Grading when the base generators are homogeneous.
    let gens = g.base_ideal.generators();
    let homogeneous = gens
        .iter()
        .all(|p| p.is_zero() || p.homogeneous_on(&(0..base_ctx.num_vars()).collect::<Vec<_>>()));
    let grading = if homogeneous {
        let degs: Vec<i64> = gens.iter().map(|p| p.total_degree() as i64).collect();
        Some(
            basis
                .iter()
                .map(|m| {
                    g.cone_vars
                        .iter()
                        .enumerate()
                        .map(|(i, &vi)| m.0[vi] as i64 * degs[i])
                        .sum()
                })
                .collect(),
        )
    } else {
        None
    };

    ModulePresentation::new(base_ctx, rank, relations, grading)
}

/// Iterated ideal-quotient test: for each k,
/// ((g_1..g_{k-1}) : g_k) = (g_1..g_{k-1}).
pub fn is_regular_sequence(gens: &[Polynomial]) -> Result<bool> {
    assert!(!gens.is_empty(), "empty sequence");
    let ctx = gens[0].ctx().clone();
    let mut prior = Ideal::zero(&ctx);
    for g in gens {
        let q = prior.quotient_poly(g)?;
        if !q.equals(&prior)? {
            return Ok(false);
        }
        prior = prior.plus(&Ideal::new(&ctx, vec![g.clone()]));
    }
    Ok(true)
}

/// Report of the complete-intersection hypothesis checks for a family F and
/// deformed generators G_1..G_c.
#[derive(Clone, Debug)]
pub struct CiReport {
    /// Each fiber partial of F lies in (G_1..G_c).
    pub family_jacobian_contained: bool,
    pub partial_memberships: Vec<bool>,
    /// dim of the restricted vanishing locus vs. expected n+1-c.
    pub restricted_dimension: i64,
    pub expected_dimension: i64,
    pub cuts_complete_intersection: bool,
    /// J_f contained in the restricted ideal I.
    pub restricted_jacobian_contained: bool,
    /// j(f) = dim_Q I/J_f, when J_f is contained in I.
    pub j_value: Option<Dimension>,
    /// f lies in I^2 (restricted level).
    pub f_in_i_squared: bool,
    /// F lies in (G_1..G_c)^2 (family level).
    pub family_f_in_ideal_squared: bool,
}

impl CiReport {
    pub fn all_hypotheses_hold(&self) -> bool {
        self.family_jacobian_contained
            && self.cuts_complete_intersection
            && self.restricted_jacobian_contained
            && matches!(self.j_value, Some(Dimension::Finite(_)))
    }
}

pub fn check_ci_hypotheses(fam: &FamilyGerm, deformed_gens: &[Polynomial]) -> Result<CiReport> {
    assert!(!deformed_gens.is_empty(), "empty deformed generator list");
    let ctx = fam.ctx();
    let params = ctx.param_indices();
    let c = deformed_gens.len();
    let tilde_i = Ideal::new(ctx, deformed_gens.to_vec());

    let jac = family_jacobian_ideal(fam);
    let mut partial_memberships = Vec::new();
    for g in jac.generators() {
        partial_memberships.push(tilde_i.contains(g)?);
    }
    let family_jacobian_contained = partial_memberships.iter().all(|&b| b);

    // Restrict to the fiber.
    let (fctx, _) = ctx.restrict(&ctx.fiber_indices())?;
    let restricted: Result<Vec<Polynomial>> = deformed_gens
        .iter()
        .map(|g| g.set_vars_to_zero(&params).map_by_names(&fctx))
        .collect();
    let restricted = restricted?;
    let i_fiber = Ideal::new(&fctx, restricted);
    let n_plus_1 = fctx.num_vars() as i64;
    let restricted_dimension = ideal_dimension(&i_fiber)?;
    let expected_dimension = n_plus_1 - c as i64;
    let cuts_complete_intersection = restricted_dimension == expected_dimension;

    let f_fiber = fam.restriction().map_by_names(&fctx)?;
    let jf = jacobian_ideal(&f_fiber);
    let restricted_jacobian_contained = i_fiber.contains_all(jf.generators())?;
    let j_value = if restricted_jacobian_contained {
        Some(crate::flatness::j_invariant(&f_fiber, &i_fiber)?)
    } else {
        None
    };

    let f_in_i_squared = i_fiber.power(2).contains(&f_fiber)?;
    let family_f_in_ideal_squared = tilde_i.power(2).contains(fam.family_poly())?;

    Ok(CiReport {
        family_jacobian_contained,
        partial_memberships,
        restricted_dimension,
        expected_dimension,
        cuts_complete_intersection,
        restricted_jacobian_contained,
        j_value,
        f_in_i_squared,
        family_f_in_ideal_squared,
    })
}

/// Koszul-style linear relations g_i v_j - g_j v_i in the extended ring.
pub fn koszul_linear_relations(g: &GradedAlgebraPresentation) -> Result<Vec<Polynomial>> {
    let ext = &g.extended_ctx;
    let gens = g.base_ideal.generators();
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let vi = Polynomial::var(ext, g.cone_vars[i]);
            let vj = Polynomial::var(ext, g.cone_vars[j]);
            let gi = gens[i].map_by_names(ext)?;
            let gj = gens[j].map_by_names(ext)?;
            out.push(gi.mul(&vj).sub(&gj.mul(&vi)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::RingContext;

    #[test]
    fn jacobian_of_the_cusp_family() {
        let ctx = RingContext::new(&["x", "y", "z"], &["s", "t"], &[]).unwrap();
        let f = parse_poly("(x^2 + y^2*z - s)*(x - t)", &ctx).unwrap();
        let fam = FamilyGerm::new(f).unwrap();
        let j = family_jacobian_ideal(&fam);
        let expect = Ideal::new(
            &ctx,
            vec![
                parse_poly("3*x^2 + y^2*z - s - 2*t*x", &ctx).unwrap(),
                parse_poly("2*(x - t)*y*z", &ctx).unwrap(),
                parse_poly("(x - t)*y^2", &ctx).unwrap(),
            ],
        );
        assert!(j.equals(&expect).unwrap());
    }

    #[test]
    fn rees_of_principal_ideal_is_trivial() {
        let ctx = RingContext::new(&["x"], &[], &[]).unwrap();
        let i = Ideal::new(&ctx, vec![parse_poly("x", &ctx).unwrap()]);
        let r = rees_presentation(&i).unwrap();
        assert!(r.presentation_ideal.is_zero_ideal().unwrap());
        assert!(r.substitution_check().unwrap());
    }

    #[test]
    fn rees_of_maximal_ideal_is_koszul() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let i = Ideal::new(
            &ctx,
            vec![
                parse_poly("x", &ctx).unwrap(),
                parse_poly("y", &ctx).unwrap(),
            ],
        );
        let r = rees_presentation(&i).unwrap();
        let b = r
            .presentation_ideal
            .groebner_basis(&MonomialOrder::GrevLex)
            .unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "x*v1 - y*v0");
        assert!(r.substitution_check().unwrap());
    }

    #[test]
    fn rees_of_non_regular_ideal_contains_torsion_relation() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let i = Ideal::new(
            &ctx,
            vec![
                parse_poly("x^2", &ctx).unwrap(),
                parse_poly("x*y", &ctx).unwrap(),
            ],
        );
        let r = rees_presentation(&i).unwrap();
        let ext = &r.extended_ctx;
        // y*v0 - x*v1 maps to y*x^2*tau - x*x*y*tau = 0.
        let rel = parse_poly("y*v0 - x*v1", ext).unwrap();
        assert!(r.presentation_ideal.contains(&rel).unwrap());
        assert!(r.substitution_check().unwrap());
    }

    #[test]
    fn assoc_graded_of_regular_sequence_is_polynomial_ring() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let i = Ideal::new(
            &ctx,
            vec![
                parse_poly("x", &ctx).unwrap(),
                parse_poly("y", &ctx).unwrap(),
            ],
        );
        let g = assoc_graded(&i).unwrap();
        assert!(g.is_vector_bundle().unwrap());
        assert!(g.substitution_check().unwrap());

        let ctx1 = RingContext::new(&["x"], &[], &[]).unwrap();
        let i1 = Ideal::new(&ctx1, vec![parse_poly("x^2", &ctx1).unwrap()]);
        let g1 = assoc_graded(&i1).unwrap();
        assert!(g1.is_vector_bundle().unwrap());
    }

    #[test]
    fn graded_piece_zero_presents_the_quotient_ring() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let i = Ideal::new(
            &ctx,
            vec![
                parse_poly("x^2", &ctx).unwrap(),
                parse_poly("x*y", &ctx).unwrap(),
            ],
        );
        let g = assoc_graded(&i).unwrap();
        let p0 = graded_piece(&g, 0).unwrap();
        assert_eq!(p0.ambient_rank(), 1);
        assert!(p0.annihilator().unwrap().equals(&i).unwrap());
    }

    #[test]
    fn graded_piece_one_of_regular_sequence_is_free() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let i = Ideal::new(
            &ctx,
            vec![
                parse_poly("x", &ctx).unwrap(),
                parse_poly("y", &ctx).unwrap(),
            ],
        );
        let g = assoc_graded(&i).unwrap();
        let p1 = graded_piece(&g, 1).unwrap();
        assert_eq!(p1.ambient_rank(), 2);
        // Free of rank 2 over R/(x,y): annihilator is exactly (x,y).
        assert!(p1.annihilator().unwrap().equals(&i).unwrap());
    }

    #[test]
    fn graded_piece_one_of_x2_xy_has_the_syzygy_relation() {
        let ctx = RingContext::new(&["x", "y"], &[], &[]).unwrap();
        let i = Ideal::new(
            &ctx,
            vec![
                parse_poly("x^2", &ctx).unwrap(),
                parse_poly("x*y", &ctx).unwrap(),
            ],
        );
        let g = assoc_graded(&i).unwrap();
        let p1 = graded_piece(&g, 1).unwrap();
        // The relation (y, -x) holds among the two generators of I/I^2.
        let rel = vec![
            parse_poly("y", &ctx).unwrap(),
            parse_poly("-x", &ctx).unwrap(),
        ];
        assert!(crate::modules::vec_is_zero(&p1.normal_form(&rel).unwrap()));
        // And the module is not free: x kills nothing in a free module, but
        // here x times each generator dies only modulo I-terms; the telltale
        // is that the annihilator strictly contains nothing new while the
        // relation above is not an I-multiple combination.
        let free_rel_module =
            ModulePresentation::new(&ctx, 2, vec![], None).unwrap();
        let _ = free_rel_module;
        assert!(!p1.is_zero().unwrap());
    }

    #[test]
    fn regular_sequence_examples() {
        let ctx = RingContext::new(&["x", "y", "z"], &[], &["t"]).unwrap();
        let x = parse_poly("x", &ctx).unwrap();
        let y = parse_poly("y", &ctx).unwrap();
        let xy = parse_poly("x*y", &ctx).unwrap();
        assert!(is_regular_sequence(&[x.clone(), y.clone()]).unwrap());
        assert!(!is_regular_sequence(&[x.clone(), xy]).unwrap());
        // From the one-parameter family's associated primes.
        let a = parse_poly("x + t", &ctx).unwrap();
        let b = parse_poly("y^2*z - 4*x^2", &ctx).unwrap();
        assert!(is_regular_sequence(&[a, b]).unwrap());
    }

    #[test]
    fn ci_hypotheses_trivial_family() {
        // f = x^2, I = (x): all checks pass, j = 0.
        let ctx = RingContext::new(&["x"], &["t"], &[]).unwrap();
        let fam = FamilyGerm::new(parse_poly("x^2", &ctx).unwrap()).unwrap();
        let g = vec![parse_poly("x", &ctx).unwrap()];
        let r = check_ci_hypotheses(&fam, &g).unwrap();
        assert!(r.family_jacobian_contained);
        assert!(r.cuts_complete_intersection);
        assert_eq!(r.j_value, Some(Dimension::Finite(0)));
        assert!(r.f_in_i_squared);
        assert!(r.all_hypotheses_hold());
    }

    #[test]
    fn ci_hypotheses_whitney_umbrella() {
        // f = x^2 + y^2 z with I = (x, y): J_f in I, j(f) = 1.
        let ctx = RingContext::new(&["x", "y", "z"], &["t"], &[]).unwrap();
        let fam = FamilyGerm::new(parse_poly("x^2 + y^2*z", &ctx).unwrap()).unwrap();
        let g = vec![
            parse_poly("x", &ctx).unwrap(),
            parse_poly("y", &ctx).unwrap(),
        ];
        let r = check_ci_hypotheses(&fam, &g).unwrap();
        assert!(r.family_jacobian_contained);
        assert!(r.restricted_jacobian_contained);
        assert_eq!(r.j_value, Some(Dimension::Finite(1)));
        assert!(r.cuts_complete_intersection);
    }
}
