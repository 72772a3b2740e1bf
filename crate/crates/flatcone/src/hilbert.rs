//! Hilbert data of quotients by (leading ideals of) polynomial ideals:
//! degreewise standard-monomial counts and Krull dimension via independent
//! variable sets.

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::order::MonomialOrder;
use crate::poly::Monomial;

/// Degreewise standard-monomial counts plus the Krull dimension of the
/// quotient. `dimension == -1` means the quotient is the zero ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertRecord {
    pub first_degree: u32,
    pub values: Vec<usize>,
    pub dimension: i64,
}

impl HilbertRecord {
    pub fn value(&self, degree: u32) -> Option<usize> {
        degree
            .checked_sub(self.first_degree)
            .and_then(|k| self.values.get(k as usize).copied())
    }
}

/// Enumerate exponent vectors over `vars` with total degree `deg`.
pub fn monomials_of_degree(nvars: usize, vars: &[usize], deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = Monomial(vec![0; nvars]);
    fn rec(vars: &[usize], pos: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if pos == vars.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if pos + 1 == vars.len() {
            cur.0[vars[pos]] = left;
            out.push(cur.clone());
            cur.0[vars[pos]] = 0;
            return;
        }
        for e in 0..=left {
            cur.0[vars[pos]] = e;
            rec(vars, pos + 1, left - e, cur, out);
            cur.0[vars[pos]] = 0;
        }
    }
    if vars.is_empty() {
        if deg == 0 {
            out.push(current);
        }
        return out;
    }
    rec(vars, 0, deg, &mut current, &mut out);
    out
}

/// Count monomials supported on `vars` of degree `deg` outside the monomial
/// ideal generated by `leads`.
pub fn standard_monomial_count(
    nvars: usize,
    vars: &[usize],
    leads: &[Monomial],
    deg: u32,
) -> usize {
    monomials_of_degree(nvars, vars, deg)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count()
}

/// Krull dimension of R/M for a monomial ideal M: the largest independent
/// variable set, i.e. a set S such that no generator is supported inside S.
pub fn monomial_quotient_dimension(nvars: usize, leads: &[Monomial]) -> i64 {
    let all: Vec<usize> = (0..nvars).collect();
    monomial_quotient_dimension_on(&all, leads)
}

/// Dimension restricted to a variable subset: generators are assumed to be
/// supported on `vars`.
pub fn monomial_quotient_dimension_on(vars: &[usize], leads: &[Monomial]) -> i64 {
    if leads.iter().any(|l| l.is_one()) {
        return -1; // unit ideal, zero ring
    }
    let k = vars.len();
    if k >= 26 {
        // Desk-scale guard; contexts here stay far below this.
        panic!("dimension computation limited to fewer than 26 variables");
    }
    let mut best: i64 = 0;
    for mask in 0u64..(1u64 << k) {
        let size = mask.count_ones() as i64;
        if size <= best {
            continue;
        }
        let independent = leads.iter().all(|l| {
            // l supported inside S would mean S is dependent
            !(0..k).all(|i| l.0[vars[i]] == 0 || (mask >> i) & 1 == 1)
        });
        if independent {
            best = size;
        }
    }
    best
}

/// Leading monomials of the reduced grevlex basis.
pub fn leading_monomials(ideal: &Ideal) -> Result<Vec<Monomial>> {
    let basis = ideal.groebner_basis(&MonomialOrder::GrevLex)?;
    Ok(basis
        .iter()
        .map(|p| p.lead(&MonomialOrder::GrevLex).unwrap().0.clone())
        .collect())
}

/// Krull dimension of R/I, read off the grevlex leading ideal (grevlex is
/// degree-compatible, so this is valid for arbitrary ideals).
pub fn ideal_dimension(ideal: &Ideal) -> Result<i64> {
    let leads = leading_monomials(ideal)?;
    Ok(monomial_quotient_dimension(ideal.ctx().num_vars(), &leads))
}

/// Hilbert data of R/I in the designated block: values(k) counts degree-k
/// standard monomials supported on the block; the dimension is the Krull
/// dimension of the whole quotient. Generators must be homogeneous in the
/// block.
pub fn hilbert(ideal: &Ideal, block: &[usize], degrees: std::ops::RangeInclusive<u32>) -> Result<HilbertRecord> {
    for g in ideal.generators() {
        if !g.homogeneous_on(block) {
            return Err(AlgebraError::NonHomogeneous);
        }
    }
    let leads = leading_monomials(ideal)?;
    let nvars = ideal.ctx().num_vars();
    let first = *degrees.start();
    let values: Vec<usize> = degrees
        .map(|d| standard_monomial_count(nvars, block, &leads, d))
        .collect();
    Ok(HilbertRecord {
        first_degree: first,
        values,
        dimension: monomial_quotient_dimension(nvars, &leads),
    })
}
