//! Exact symbolic computation over Q for families of hypersurface
//! singularities: sparse polynomial arithmetic, Groebner bases, finitely
//! presented modules, Rees/associated-graded presentations, flatness tests
//! via Koszul homology, and parametric stratification of coefficient spaces.

pub mod error;
pub mod ring;
pub mod poly;
pub mod order;
pub mod parse;
pub mod groebner;
pub mod hilbert;
pub mod modules;
pub mod cones;
pub mod flatness;
pub mod stratify;

pub use error::{AlgebraError, Result};
pub use groebner::Ideal;
pub use order::MonomialOrder;
pub use poly::{Monomial, Polynomial};
pub use ring::{Budget, Ctx, RingContext, VarBlock};
