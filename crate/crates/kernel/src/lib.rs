//! Proof-checker kernel for HoTTEq, a homotopy type theory enriched with a
//! strict logical equality, universal quantification, judgmental proof
//! irrelevance and a mutual induction principle for natural numbers.
//!
//! The kernel is a small logical framework: expressions are classified by
//! kinds (`Type`, `El(A)`, `Prop`, `Prf(P)` and parametric kinds `(x:K)K'`),
//! signatures hold constant declarations, definitions, inductive blocks and
//! registered computation rules. On top of the syntax the crate provides
//! normalization (`eval`), kind-directed conversion with proof irrelevance,
//! and decision procedures for all judgment forms (`check`).

pub mod check;
pub mod error;
pub mod eval;
pub mod names;
pub mod print;
pub mod signature;
pub mod syntax;

pub use check::{check, check_context, check_kind, infer, Context};
pub use error::{Error, Result};
pub use eval::{conv, normalize, whnf, ConvProblem, TraceStep};
pub use signature::{CompRule, CompRuleCase, Entry, Flags, Signature};
pub use syntax::{alpha_eq, free_vars, instantiate, Binder, Expr, Kind, KindBinder, Name};
