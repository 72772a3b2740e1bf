//! Monomial orders: lex, grevlex, block (elimination) orders, and weighted
//! orders, all over explicit variable-index sets.

use std::cmp::Ordering;

use crate::poly::Monomial;

/// A total, multiplicative well-order on monomials.
///
/// `Lex`, `GrevLex`, and `Weighted` compare on all variables of the context.
/// `Block` compares block by block; the blocks carry absolute variable
/// indices and must cover every variable that can occur.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block(Vec<(Vec<usize>, MonomialOrder)>),
    Weighted {
        weights: Vec<u64>,
        tie: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Block order that eliminates `drop`: drop-variables dominate, grevlex
    /// inside each block. `n` is the number of variables in the context.
    pub fn elimination(drop: &[usize], n: usize) -> MonomialOrder {
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        MonomialOrder::Block(vec![
            (drop.to_vec(), MonomialOrder::GrevLex),
            (keep, MonomialOrder::GrevLex),
        ])
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.0.len(), b.0.len());
        let all: Vec<usize> = (0..a.0.len()).collect();
        self.compare_on(a, b, &all)
    }

    fn compare_on(&self, a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for &i in vars {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => {
                let da: u64 = vars.iter().map(|&i| a.0[i] as u64).sum();
                let db: u64 = vars.iter().map(|&i| b.0[i] as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // Last differing variable, smaller exponent wins.
                for &i in vars.iter().rev() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(blocks) => {
                for (block_vars, inner) in blocks {
                    match inner.compare_on(a, b, block_vars) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Weighted { weights, tie } => {
                let wa: u64 = vars.iter().map(|&i| weights[i] * a.0[i] as u64).sum();
                let wb: u64 = vars.iter().map(|&i| weights[i] * b.0[i] as u64).sum();
                match wa.cmp(&wb) {
                    Ordering::Equal => tie.compare_on(a, b, vars),
                    ord => ord,
                }
            }
        }
    }
}
