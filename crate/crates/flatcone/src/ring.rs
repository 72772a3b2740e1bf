//! Ring contexts: named variables partitioned into fiber, parameter, and
//! auxiliary blocks, plus the resource budget every computation runs under.
//!
//! A `RingContext` is immutable once built. Every polynomial carries an
//! `Arc` to its context; arithmetic between polynomials from different
//! contexts is a programming error and panics.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::Instant;

use crate::error::{AlgebraError, Result};

/// Which block a variable belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarBlock {
    /// Fiber coordinates x_0..x_n.
    Fiber,
    /// Deformation parameters y_1..y_u.
    Param,
    /// Cone variables, elimination variables, stratification coefficients.
    Aux,
}

/// Resource limits enforced inside the Groebner loops.
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_degree: u64,
    pub max_terms: usize,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_degree: 512,
            max_terms: 2_000_000,
            deadline: None,
        }
    }
}

impl Budget {
    pub fn check_degree(&self, deg: u64) -> Result<()> {
        if deg > self.max_degree {
            return Err(AlgebraError::Resource(format!(
                "intermediate degree {} exceeds --max-degree {}",
                deg, self.max_degree
            )));
        }
        Ok(())
    }

    pub fn check_terms(&self, terms: usize) -> Result<()> {
        if terms > self.max_terms {
            return Err(AlgebraError::Resource(format!(
                "intermediate term count {} exceeds --max-terms {}",
                terms, self.max_terms
            )));
        }
        Ok(())
    }

    pub fn check_deadline(&self) -> Result<()> {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(AlgebraError::Resource(
                    "--max-seconds deadline exceeded".to_string(),
                ));
            }
        }
        Ok(())
    }
}

static NEXT_CTX_ID: AtomicU64 = AtomicU64::new(1);

/// A polynomial ring Q[vars] with the variables split into blocks.
///
/// The declared order (fiber block, then parameters, then auxiliaries) is
/// the default grevlex order used for canonical storage and printing.
#[derive(Debug)]
pub struct RingContext {
    id: u64,
    names: Vec<String>,
    blocks: Vec<VarBlock>,
    budget: Budget,
}

pub type Ctx = Arc<RingContext>;

impl RingContext {
    pub fn new(fiber: &[&str], params: &[&str], aux: &[&str]) -> Result<Ctx> {
        let mut names = Vec::new();
        let mut blocks = Vec::new();
        for (&block, group) in [
            (VarBlock::Fiber, fiber),
            (VarBlock::Param, params),
            (VarBlock::Aux, aux),
        ]
        .iter()
        {
            for &n in group.iter() {
                names.push(n.to_string());
                blocks.push(block);
            }
        }
        Self::from_parts(names, blocks, Budget::default())
    }

    fn from_parts(names: Vec<String>, blocks: Vec<VarBlock>, budget: Budget) -> Result<Ctx> {
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() {
                return Err(AlgebraError::Syntax {
                    pos: 0,
                    msg: "empty variable name".into(),
                });
            }
            for b in names.iter().skip(i + 1) {
                if a == b {
                    return Err(AlgebraError::Syntax {
                        pos: 0,
                        msg: format!("duplicate variable name `{}`", a),
                    });
                }
            }
        }
        Ok(Arc::new(RingContext {
            id: NEXT_CTX_ID.fetch_add(1, Ordering::Relaxed),
            names,
            blocks,
            budget,
        }))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn block(&self, i: usize) -> VarBlock {
        self.blocks[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn indices_of(&self, block: VarBlock) -> Vec<usize> {
        (0..self.names.len())
            .filter(|&i| self.blocks[i] == block)
            .collect()
    }

    pub fn fiber_indices(&self) -> Vec<usize> {
        self.indices_of(VarBlock::Fiber)
    }

    pub fn param_indices(&self) -> Vec<usize> {
        self.indices_of(VarBlock::Param)
    }

    pub fn aux_indices(&self) -> Vec<usize> {
        self.indices_of(VarBlock::Aux)
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// Same ring, different resource budget.
    pub fn with_budget(&self, budget: Budget) -> Ctx {
        Arc::new(RingContext {
            id: NEXT_CTX_ID.fetch_add(1, Ordering::Relaxed),
            names: self.names.clone(),
            blocks: self.blocks.clone(),
            budget,
        })
    }

    /// Extend by fresh auxiliary variables. Existing variables keep their
    /// indices, so polynomials transfer by exponent-vector padding.
    pub fn extend_aux(&self, extra: &[String]) -> Result<Ctx> {
        let mut names = self.names.clone();
        let mut blocks = self.blocks.clone();
        for n in extra {
            names.push(n.clone());
            blocks.push(VarBlock::Aux);
        }
        Self::from_parts(names, blocks, self.budget.clone())
    }

    /// Keep only the listed variables (in the given relative order).
    /// Returns the new context and, per new index, the old index.
    pub fn restrict(&self, keep: &[usize]) -> Result<(Ctx, Vec<usize>)> {
        let names: Vec<String> = keep.iter().map(|&i| self.names[i].clone()).collect();
        let blocks: Vec<VarBlock> = keep.iter().map(|&i| self.blocks[i]).collect();
        let ctx = Self::from_parts(names, blocks, self.budget.clone())?;
        Ok((ctx, keep.to_vec()))
    }

    /// A name of the form `#<base><k>` that cannot collide with parsed
    /// user variables (the grammar has no `#`).
    pub fn fresh_aux_names(&self, base: &str, count: usize) -> Vec<String> {
        let mut out = Vec::with_capacity(count);
        let mut k = 0usize;
        while out.len() < count {
            let cand = format!("#{}{}", base, k);
            if self.var_index(&cand).is_none() {
                out.push(cand);
            }
            k += 1;
        }
        out
    }
}

/// Panic helper used by polynomial arithmetic.
pub(crate) fn assert_same_ctx(a: &RingContext, b: &RingContext) {
    assert!(
        a.id == b.id,
        "cross-context arithmetic rejected: ring #{} vs ring #{}",
        a.id,
        b.id
    );
}
