//! Exact computations with finite-dimensional Hopf algebroids over a
//! noncommutative base: balanced tensor products, Galois extensions, cocycle
//! twists, doubles and crossed products.

// structure-constant loops index several tables at once
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod bering;
pub mod bialgebroid;
pub mod builders;
pub mod cleft;
pub mod corpus;
pub mod comodule;
pub mod double;
pub mod error;
pub mod field;
pub mod linalg;
pub mod model;
pub mod module;
pub mod report;
pub mod space;
pub mod suite;
pub mod tensor;
pub mod twist;

pub use algebra::{Algebra, AlgebraMorphism};
pub use bering::BeRing;
pub use bialgebroid::{AntiLeftHopf, Bialgebroid, BialgebroidData, LeftHopf};
pub use cleft::{BbarRing, CleftExtension, CrossedProduct, GaugeElement, Measuring, RingCocycle};
pub use comodule::{GaloisExtension, LeftComoduleAlgebra, RightComoduleAlgebra};
pub use double::{Double, DoubleRing, DoubleSpace, SkewPairing};
pub use error::{Error, Result};
pub use field::{Field, Fp, Q};
pub use linalg::{LinearMap, Matrix, QuotientSpace, Subspace, VSpace};
pub use model::{FieldMode, ModelDocument};
pub use module::{ActionKey, MultiModule, Side};
pub use report::{Check, Report};
pub use space::Space;
pub use suite::Suite;
pub use tensor::{Lin, Tensor};
pub use twist::BaseCocycle;
