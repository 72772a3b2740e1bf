//! Parametric (comprehensive) Groebner case splits and the iterative
//! partition of coefficient spaces of homogeneous polynomials into locally
//! closed strata with constant fiberwise invariants.
//!
//! The split engine follows the classical specialization theorem: compute a
//! reduced basis of the input together with the current stratum equations
//! under a block order (main variables over coefficient variables); on the
//! locus where every main leading coefficient is nonzero and the pure
//! coefficient part vanishes, the basis specializes to a Groebner basis
//! pointwise. Branching always happens on the current parametric leading
//! coefficient: the "= 0" case joins the equations, the "!= 0" case joins
//! the inequations.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::hilbert::{
    monomial_quotient_dimension_on, monomials_of_degree, standard_monomial_count, HilbertRecord,
};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial};
use crate::ring::{Ctx, RingContext};

#[derive(Clone, Debug)]
pub struct StratifyOptions {
    /// Cap on the case-split tree depth.
    pub max_branch_depth: usize,
    /// Cap on the rounds of the image-of-non-flat-locus iteration.
    pub max_rounds: usize,
    /// How many extra degrees of Hilbert values to record per piece.
    pub value_span: u32,
}

impl Default for StratifyOptions {
    fn default() -> Self {
        StratifyOptions {
            max_branch_depth: 64,
            max_rounds: 32,
            value_span: 6,
        }
    }
}

/// A Zariski-locally-closed stratum in the coefficient variables:
/// V(equations) minus V(open_conditions as an ideal) — a point belongs when
/// every equation vanishes and at least one open condition does not.
#[derive(Clone, Debug)]
pub struct Stratum {
    pub equations: Ideal,
    pub open_conditions: Vec<Polynomial>,
    pub invariant: Vec<HilbertRecord>,
    pub depth: usize,
}

impl Stratum {
    pub fn contains_point(&self, point: &BTreeMap<usize, BigRational>) -> Result<bool> {
        for e in self.equations.generators() {
            if !e.eval(point)?.is_zero() {
                return Ok(false);
            }
        }
        for c in &self.open_conditions {
            if !c.eval(point)?.is_zero() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// A leaf of the case-split tree. `conditions` is a conjunction: the leaf
/// region is V(equations) minus V(product of conditions).
#[derive(Clone, Debug)]
pub struct SplitLeaf {
    pub equations: Vec<Polynomial>,
    pub conditions: Vec<Polynomial>,
    /// Parametric basis specializing to a Groebner basis at each leaf point.
    pub basis: Vec<Polynomial>,
    /// Leading monomials in the main variables, constant over the leaf.
    pub leading: Vec<Monomial>,
    /// No proper branch equation was taken to reach this leaf.
    pub pristine: bool,
}

fn product_of(ctx: &Ctx, polys: &[Polynomial]) -> Polynomial {
    let mut p = Polynomial::one(ctx);
    for q in polys {
        p = p.mul(q);
    }
    p
}

fn stratum_is_empty(ctx: &Ctx, equations: &[Polynomial], conditions: &[Polynomial]) -> Result<bool> {
    let e = Ideal::new(ctx, equations.to_vec());
    e.radical_contains(&product_of(ctx, conditions))
}

/// Does `c` vanish identically on V(equations) \ V(prod conditions)?
fn vanishes_on_stratum(
    ctx: &Ctx,
    equations: &[Polynomial],
    conditions: &[Polynomial],
    c: &Polynomial,
) -> Result<bool> {
    let e = Ideal::new(ctx, equations.to_vec());
    let sat = if conditions.is_empty() {
        e
    } else {
        e.saturate(&product_of(ctx, conditions))?
    };
    sat.radical_contains(c)
}

/// Leading main-variable monomial of `p` and its parametric coefficient.
fn main_lead(p: &Polynomial, main: &[usize], main_order: &MonomialOrder) -> (Monomial, Polynomial) {
    let ctx = p.ctx();
    let n = ctx.num_vars();
    let mut best: Option<Monomial> = None;
    for (m, _) in p.terms() {
        let mut mm = Monomial(vec![0; n]);
        for &i in main {
            mm.0[i] = m.0[i];
        }
        best = match best {
            None => Some(mm),
            Some(b) => {
                if main_order.compare(&mm, &b) == std::cmp::Ordering::Greater {
                    Some(mm)
                } else {
                    Some(b)
                }
            }
        };
    }
    let best = best.expect("main_lead of zero polynomial");
    let mut coeff_terms = Vec::new();
    for (m, c) in p.terms() {
        let mut mm = Monomial(vec![0; n]);
        let mut rest = m.clone();
        for &i in main {
            mm.0[i] = m.0[i];
            rest.0[i] = 0;
        }
        if mm == best {
            coeff_terms.push((rest, c.clone()));
        }
    }
    (best, Polynomial::from_terms(ctx, coeff_terms))
}

fn push_condition(conditions: &mut Vec<Polynomial>, c: Polynomial) {
    if !conditions.iter().any(|x| *x == c) {
        conditions.push(c);
    }
}

/// Recursive comprehensive split. Leaves are pairwise disjoint and cover
/// V(equations) \ V(prod conditions).
#[allow(clippy::too_many_arguments)]
pub fn comprehensive_split(
    ctx: &Ctx,
    gens: &[Polynomial],
    equations: Vec<Polynomial>,
    conditions: Vec<Polynomial>,
    main: &[usize],
    coeff: &[usize],
    main_order: &MonomialOrder,
    opts: &StratifyOptions,
    depth: usize,
    pristine: bool,
    out: &mut Vec<SplitLeaf>,
) -> Result<()> {
    if depth > opts.max_branch_depth {
        return Err(AlgebraError::Resource(format!(
            "case-split depth exceeded {}",
            opts.max_branch_depth
        )));
    }
    if stratum_is_empty(ctx, &equations, &conditions)? {
        return Ok(());
    }
    let full_order = MonomialOrder::Block(vec![
        (main.to_vec(), main_order.clone()),
        (coeff.to_vec(), MonomialOrder::GrevLex),
    ]);
    let mut all = gens.to_vec();
    all.extend(equations.iter().cloned());
    let basis = Ideal::new(ctx, all).groebner_basis(&full_order)?;

    let e_ideal = Ideal::new(ctx, equations.clone());

    // Pure coefficient part: on the stratum every element must vanish; a
    // point where one of them is nonzero specializes the ideal to (1).
    let mut equations = equations;
    for g in basis.iter().filter(|g| g.supported_on(coeff)) {
        if e_ideal.contains(g)? {
            continue;
        }
        if vanishes_on_stratum(ctx, &equations, &conditions, g)? {
            equations.push(g.clone());
            continue;
        }
        // Unit branch: g != 0 forces the specialized ideal to contain a
        // nonzero constant.
        let mut unit_conditions = conditions.clone();
        push_condition(&mut unit_conditions, g.clone());
        if !stratum_is_empty(ctx, &equations, &unit_conditions)? {
            out.push(SplitLeaf {
                equations: equations.clone(),
                conditions: unit_conditions,
                basis: vec![Polynomial::one(ctx)],
                leading: vec![Monomial::one(ctx.num_vars())],
                pristine,
            });
        }
        let mut eq2 = equations.clone();
        eq2.push(g.clone());
        return comprehensive_split(
            ctx,
            gens,
            eq2,
            conditions,
            main,
            coeff,
            main_order,
            opts,
            depth + 1,
            false,
            out,
        );
    }

    // Scan the parametric leading coefficients of the main part.
    let mut conditions = conditions;
    let mut kept: Vec<Polynomial> = Vec::new();
    for h in basis.iter().filter(|g| !g.supported_on(coeff)) {
        let (mlead, lc) = main_lead(h, main, main_order);
        debug_assert!(!mlead.is_one());
        if lc.is_constant() {
            kept.push(h.clone());
            continue;
        }
        if vanishes_on_stratum(ctx, &equations, &conditions, &lc)? {
            // The head dies identically on the stratum; by reducedness the
            // coefficient cannot already lie in the equation ideal, so the
            // equations grow strictly and we restart.
            assert!(
                !Ideal::new(ctx, equations.clone()).contains(&lc)?,
                "reduced basis invariant violated in case split"
            );
            let mut eq2 = equations.clone();
            eq2.push(lc);
            return comprehensive_split(
                ctx, gens, eq2, conditions, main, coeff, main_order, opts, depth + 1, pristine,
                out,
            );
        }
        // Branch: = 0 side.
        let mut eq2 = equations.clone();
        eq2.push(lc.clone());
        comprehensive_split(
            ctx,
            gens,
            eq2,
            conditions.clone(),
            main,
            coeff,
            main_order,
            opts,
            depth + 1,
            false,
            out,
        )?;
        // != 0 side: continue scanning under the new condition.
        push_condition(&mut conditions, lc);
        kept.push(h.clone());
    }

    let leading: Vec<Monomial> = kept
        .iter()
        .map(|h| main_lead(h, main, main_order).0)
        .collect();
    out.push(SplitLeaf {
        equations,
        conditions,
        basis: kept,
        leading,
        pristine,
    });
    Ok(())
}

/// Canonical ordering of leaves for deterministic output.
fn canonicalize_leaves(leaves: &mut [SplitLeaf]) {
    leaves.sort_by_key(|l| {
        (
            l.equations
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
            l.conditions
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
        )
    });
}

/// Hilbert record over the main variables from a constant leading ideal.
fn main_hilbert_record(
    ctx: &Ctx,
    main: &[usize],
    leading: &[Monomial],
    span: u32,
) -> HilbertRecord {
    let values: Vec<usize> = (0..=span)
        .map(|d| standard_monomial_count(ctx.num_vars(), main, leading, d))
        .collect();
    HilbertRecord {
        first_degree: 0,
        values,
        dimension: monomial_quotient_dimension_on(main, leading),
    }
}

/// Public case split for generators homogeneous in the main variables.
/// Returns one stratum per leaf together with the leaf's constant leading
/// ideal; the strata are disjoint and cover V(E) \ V(prod N).
pub fn parametric_split(
    gens: &[Polynomial],
    equations: &Ideal,
    conditions: &[Polynomial],
    main: &[usize],
    coeff: &[usize],
    opts: &StratifyOptions,
) -> Result<Vec<(Stratum, Vec<Monomial>)>> {
    assert!(!gens.is_empty());
    let ctx = gens[0].ctx().clone();
    for g in gens {
        if !g.homogeneous_on(main) {
            return Err(AlgebraError::NonHomogeneous);
        }
    }
    for e in equations.generators().iter().chain(conditions.iter()) {
        if !e.supported_on(coeff) {
            return Err(AlgebraError::OutOfSubring {
                var: "non-coefficient variable in stratum data".into(),
            });
        }
    }
    let mut leaves = Vec::new();
    comprehensive_split(
        &ctx,
        gens,
        equations.generators().to_vec(),
        conditions.to_vec(),
        main,
        coeff,
        &MonomialOrder::GrevLex,
        opts,
        0,
        true,
        &mut leaves,
    )?;
    canonicalize_leaves(&mut leaves);
    let mut out = Vec::new();
    for leaf in leaves {
        let record = main_hilbert_record(&ctx, main, &leaf.leading, opts.value_span);
        let open = if leaf.conditions.is_empty() {
            vec![Polynomial::one(&ctx)]
        } else {
            vec![product_of(&ctx, &leaf.conditions)]
        };
        out.push((
            Stratum {
                equations: Ideal::new(&ctx, leaf.equations.clone()),
                open_conditions: open,
                invariant: vec![record],
                depth: 0,
            },
            leaf.leading,
        ));
    }
    Ok(out)
}

/// Per-piece Hilbert data of the bigraded quotient cut out by a constant
/// leading ideal in fiber and cone variables: for each cone degree k the
/// fiber-degreewise counts and the dimension of the piece's support.
fn piece_records(
    ctx: &Ctx,
    leading: &[Monomial],
    fiber: &[usize],
    cone: &[usize],
    degree_bound: u32,
    span: u32,
) -> Vec<HilbertRecord> {
    let n = ctx.num_vars();
    let mut out = Vec::new();
    for k in 0..=degree_bound {
        let betas = monomials_of_degree(n, cone, k);
        let mut values = vec![0usize; (span + 1) as usize];
        let mut dim: i64 = -1;
        for beta in &betas {
            // x-part generators of (leading : v^beta).
            let col: Vec<Monomial> = leading
                .iter()
                .filter(|l| cone.iter().all(|&vi| l.0[vi] <= beta.0[vi]))
                .map(|l| {
                    let mut x = l.clone();
                    for &vi in cone {
                        x.0[vi] = 0;
                    }
                    x
                })
                .collect();
            for (j, slot) in values.iter_mut().enumerate() {
                *slot += standard_monomial_count(n, fiber, &col, j as u32);
            }
            dim = dim.max(monomial_quotient_dimension_on(fiber, &col));
        }
        out.push(HilbertRecord {
            first_degree: 0,
            values,
            dimension: dim,
        });
    }
    out
}

/// Closure of a leaf region V(E) \ V(prod c), as an ideal: sat(E, prod c).
fn leaf_closure_ideal(ctx: &Ctx, leaf: &SplitLeaf) -> Result<Ideal> {
    let e = Ideal::new(ctx, leaf.equations.clone());
    if leaf.conditions.is_empty() {
        Ok(e)
    } else {
        e.saturate(&product_of(ctx, &leaf.conditions))
    }
}

/// Everything the iterative partition needs to know about one round's
/// geometry: the universal family lives in a single ring built here.
pub struct HomogeneousFamily {
    pub ctx: Ctx,
    pub fiber: Vec<usize>,
    pub coeff: Vec<usize>,
    pub cone: Vec<usize>,
    pub tau: usize,
    /// The universal degree-d form.
    pub universal: Polynomial,
    /// Its fiber partials, one per fiber variable.
    pub partials: Vec<Polynomial>,
}

/// Build the universal degree-d form in n+1 fiber variables with one
/// coefficient variable per degree-d monomial.
pub fn homogeneous_family(n: usize, d: u32) -> Result<HomogeneousFamily> {
    let fiber_names: Vec<String> = (0..=n).map(|i| format!("x{}", i)).collect();
    // Count degree-d monomials in n+1 variables.
    let probe = RingContext::new(
        &fiber_names.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        &[],
        &[],
    )?;
    let mut monos = monomials_of_degree(probe.num_vars(), &(0..=n).collect::<Vec<_>>(), d);
    monos.sort_unstable_by(|a, b| crate::poly::cmp_grevlex_all(b, a));
    let m = monos.len();
    let coeff_names: Vec<String> = (0..m).map(|i| format!("a{}", i)).collect();
    let cone_names: Vec<String> = (0..=n).map(|i| format!("v{}", i)).collect();
    let mut aux: Vec<&str> = coeff_names.iter().map(|s| s.as_str()).collect();
    aux.extend(cone_names.iter().map(|s| s.as_str()));
    aux.push("tau");
    let ctx = RingContext::new(
        &fiber_names.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        &[],
        &aux,
    )?;
    let fiber: Vec<usize> = (0..=n).collect();
    let coeff: Vec<usize> = coeff_names
        .iter()
        .map(|s| ctx.var_index(s).unwrap())
        .collect();
    let cone: Vec<usize> = cone_names
        .iter()
        .map(|s| ctx.var_index(s).unwrap())
        .collect();
    let tau = ctx.var_index("tau").unwrap();

    let mut universal = Polynomial::zero(&ctx);
    for (k, mono) in monos.iter().enumerate() {
        let mut e = Monomial(vec![0; ctx.num_vars()]);
        e.0[..mono.0.len()].copy_from_slice(&mono.0);
        e.0[coeff[k]] = 1;
        universal = universal.add(&Polynomial::term(
            &ctx,
            e,
            num_traits::One::one(),
        ));
    }
    let partials: Vec<Polynomial> = fiber.iter().map(|&i| universal.differentiate(i)).collect();
    Ok(HomogeneousFamily {
        ctx,
        fiber,
        coeff,
        cone,
        tau,
        universal,
        partials,
    })
}

/// One round of the two-stage split over V(equations): first the Rees kernel
/// of the universal partials by tau elimination, then the associated graded
/// presentation ideal in the fiber and cone variables.
fn split_normal_cone_presentation(
    fam: &HomogeneousFamily,
    equations: &[Polynomial],
    opts: &StratifyOptions,
) -> Result<Vec<SplitLeaf>> {
    let ctx = &fam.ctx;
    let mut graph = Vec::new();
    let tau_poly = Polynomial::var(ctx, fam.tau);
    for (i, g) in fam.partials.iter().enumerate() {
        let v = Polynomial::var(ctx, fam.cone[i]);
        graph.push(v.sub(&g.mul(&tau_poly)));
    }
    let mut main_a: Vec<usize> = vec![fam.tau];
    let mut fiber_cone: Vec<usize> = fam.fiber.clone();
    fiber_cone.extend(fam.cone.iter().copied());
    main_a.extend(fiber_cone.iter().copied());
    let order_a = MonomialOrder::Block(vec![
        (vec![fam.tau], MonomialOrder::GrevLex),
        (fiber_cone.clone(), MonomialOrder::GrevLex),
    ]);

    let mut stage_a = Vec::new();
    comprehensive_split(
        ctx,
        &graph,
        equations.to_vec(),
        Vec::new(),
        &main_a,
        &fam.coeff,
        &order_a,
        opts,
        0,
        true,
        &mut stage_a,
    )?;

    let order_b = MonomialOrder::Block(vec![(fiber_cone.clone(), MonomialOrder::GrevLex)]);
    let mut coeff_b = fam.coeff.clone();
    coeff_b.push(fam.tau);

    let mut leaves = Vec::new();
    for la in stage_a {
        // tau-free part of the stage-A basis specializes to the Rees kernel.
        let mut gens_b: Vec<Polynomial> = la
            .basis
            .iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.0[fam.tau] == 0))
            .cloned()
            .collect();
        gens_b.extend(fam.partials.iter().cloned());
        comprehensive_split(
            ctx,
            &gens_b,
            la.equations.clone(),
            la.conditions.clone(),
            &fiber_cone,
            &coeff_b,
            &order_b,
            opts,
            0,
            la.pristine,
            &mut leaves,
        )?;
    }
    canonicalize_leaves(&mut leaves);
    Ok(leaves)
}

/// The iterative partition of the space of nonzero degree-d forms in n+1
/// variables: split the normal-cone presentation of the universal singular
/// ideal over the current closed set, peel off the locus where the
/// fiberwise data agrees with the generic one, and recurse on the closure
/// of the rest. Strata are disjoint, cover the coefficient space minus the
/// origin, and each carries its piecewise Hilbert invariant.
pub fn cor62_partition(
    n: usize,
    d: u32,
    degree_bound: u32,
    opts: &StratifyOptions,
) -> Result<Vec<Stratum>> {
    let fam = homogeneous_family(n, d)?;
    let ctx = &fam.ctx;
    let minus_origin: Vec<Polynomial> = fam
        .coeff
        .iter()
        .map(|&i| Polynomial::var(ctx, i))
        .collect();
    let span = opts.value_span + degree_bound;

    let mut equations: Vec<Polynomial> = Vec::new();
    let mut out: Vec<Stratum> = Vec::new();
    for round in 0..=opts.max_rounds {
        if round == opts.max_rounds {
            return Err(AlgebraError::Resource(format!(
                "partition did not terminate within {} rounds",
                opts.max_rounds
            )));
        }
        // S = V(equations) \ V(minus_origin ideal); stop when empty.
        let e_ideal = Ideal::new(ctx, equations.clone());
        let mut nonempty = false;
        for c in &minus_origin {
            if !{
                let sat = e_ideal.saturate(c)?;
                sat.is_unit()?
            } {
                nonempty = true;
                break;
            }
        }
        if !nonempty {
            break;
        }

        let leaves = split_normal_cone_presentation(&fam, &equations, opts)?;
        let records: Vec<Vec<HilbertRecord>> = leaves
            .iter()
            .map(|l| {
                piece_records(ctx, &l.leading, &fam.fiber, &fam.cone, degree_bound, span)
            })
            .collect();
        let generic_idx = leaves
            .iter()
            .position(|l| l.pristine)
            .unwrap_or(0);
        let generic = records[generic_idx].clone();

        let mut bad_closures: Vec<Ideal> = Vec::new();
        for (leaf, rec) in leaves.iter().zip(records.iter()) {
            if *rec != generic {
                bad_closures.push(leaf_closure_ideal(ctx, leaf)?);
            }
        }

        if bad_closures.is_empty() {
            out.push(Stratum {
                equations: e_ideal,
                open_conditions: minus_origin.clone(),
                invariant: generic,
                depth: round,
            });
            break;
        }

        let mut q = bad_closures[0].clone();
        for b in &bad_closures[1..] {
            q = q.intersection(b)?;
        }
        let q_gens: Vec<Polynomial> = q
            .groebner_basis(&MonomialOrder::GrevLex)?
            .iter()
            .cloned()
            .collect();

        // Strictness: some q generator must not vanish on all of S.
        let mut strict = false;
        'outer: for qg in &q_gens {
            for c in &minus_origin {
                let sat = e_ideal.saturate(c)?;
                if !sat.is_unit()? && !sat.radical_contains(qg)? {
                    strict = true;
                    break 'outer;
                }
            }
        }
        if !strict {
            out.push(Stratum {
                equations: e_ideal,
                open_conditions: minus_origin.clone(),
                invariant: generic,
                depth: round,
            });
            break;
        }

        // Emit S \ V(q): open conditions are the pairwise products.
        let mut open = Vec::new();
        for c in &minus_origin {
            for qg in &q_gens {
                open.push(c.mul(qg));
            }
        }
        out.push(Stratum {
            equations: e_ideal,
            open_conditions: open,
            invariant: generic,
            depth: round,
        });
        equations = q_gens;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn split_of_a_times_x() {
        // Family a*x over coefficient a: {a != 0} with leading ideal (x),
        // {a = 0} with leading ideal (0).
        let ctx = RingContext::new(&["x"], &[], &["a"]).unwrap();
        let gens = vec![parse_poly("a*x", &ctx).unwrap()];
        let opts = StratifyOptions::default();
        let leaves = parametric_split(
            &gens,
            &Ideal::zero(&ctx),
            &[],
            &[0],
            &[1],
            &opts,
        )
        .unwrap();
        assert_eq!(leaves.len(), 2);
        // Canonical order puts the a=0 leaf after the open one or before
        // depending on printing; identify by leading ideal.
        let mut with_x = 0;
        let mut without = 0;
        for (stratum, leading) in &leaves {
            if leading.is_empty() {
                without += 1;
                assert!(!stratum.equations.is_zero_ideal().unwrap());
            } else {
                assert_eq!(leading.len(), 1);
                assert_eq!(leading[0].0[0], 1);
                with_x += 1;
            }
        }
        assert_eq!((with_x, without), (1, 1));
    }

    #[test]
    fn split_of_binary_quadric_by_hand_case_analysis() {
        // a x^2 + b x y + c y^2: reduction branches on a, then b, then c,
        // giving leading ideals (x^2), (xy), (y^2), (0).
        let ctx = RingContext::new(&["x", "y"], &[], &["a", "b", "c"]).unwrap();
        let gens = vec![parse_poly("a*x^2 + b*x*y + c*y^2", &ctx).unwrap()];
        let opts = StratifyOptions::default();
        let leaves = parametric_split(
            &gens,
            &Ideal::zero(&ctx),
            &[],
            &[0, 1],
            &[2, 3, 4],
            &opts,
        )
        .unwrap();
        assert_eq!(leaves.len(), 4);
        let mut leadsets: Vec<Vec<String>> = leaves
            .iter()
            .map(|(_, leading)| {
                leading
                    .iter()
                    .map(|m| format!("{:?}", &m.0[..2]))
                    .collect::<Vec<_>>()
            })
            .collect();
        leadsets.sort();
        // (0), (x^2), (x*y), (y^2) in some canonical order.
        assert!(leadsets.contains(&vec![]));
        assert!(leadsets.contains(&vec!["[2, 0]".to_string()]));
        assert!(leadsets.contains(&vec!["[1, 1]".to_string()]));
        assert!(leadsets.contains(&vec!["[0, 2]".to_string()]));
    }

    #[test]
    fn split_covers_and_is_disjoint_at_sample_points() {
        let ctx = RingContext::new(&["x", "y"], &[], &["a", "b", "c"]).unwrap();
        let gens = vec![parse_poly("a*x^2 + b*x*y + c*y^2", &ctx).unwrap()];
        let opts = StratifyOptions::default();
        let leaves = parametric_split(
            &gens,
            &Ideal::zero(&ctx),
            &[],
            &[0, 1],
            &[2, 3, 4],
            &opts,
        )
        .unwrap();
        let pts: Vec<[i64; 3]> = vec![
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [0, 0, 0],
            [2, 3, 4],
            [0, 5, -7],
            [1, 2, 1],
        ];
        for p in pts {
            let mut point = BTreeMap::new();
            for (k, &v) in p.iter().enumerate() {
                point.insert(2 + k, BigRational::from_integer(v.into()));
            }
            let hits: usize = leaves
                .iter()
                .filter(|(s, _)| s.contains_point(&point).unwrap())
                .count();
            assert_eq!(hits, 1, "point {:?} must lie in exactly one leaf", p);
        }
    }
}
