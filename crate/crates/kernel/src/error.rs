//! Kernel errors. Every checking error carries enough structure to render
//! the offending context, expressions and kinds.

use thiserror::Error;

use crate::check::Context;
use crate::print::{render_context, render_expr, render_kind};
use crate::syntax::{Expr, Kind, Name};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Clone, Debug, Error)]
pub enum Error {
    #[error("unbound name `{name}`")]
    UnboundName { name: Name, context: Context },

    #[error("kind mismatch at `{}`: expected `{}`, found `{}`", render_expr(at), render_kind(expected), render_kind(actual))]
    KindMismatch {
        expected: Kind,
        actual: Kind,
        at: Expr,
        context: Context,
    },

    #[error("not a kind: `{}` has kind `{}`, which classifies neither types nor propositions", render_expr(at), render_kind(actual))]
    NotAKind {
        actual: Kind,
        at: Expr,
        context: Context,
    },

    #[error("not a proposition: `{}` has kind `{}`", render_expr(at), render_kind(actual))]
    NotAProp {
        actual: Kind,
        at: Expr,
        context: Context,
    },

    #[error("duplicate name `{name}`")]
    DuplicateName { name: Name },

    #[error("arity mismatch: `{}` is applied to more arguments than its kind `{}` allows", render_expr(at), render_kind(actual))]
    ArityMismatch {
        actual: Kind,
        at: Expr,
        context: Context,
    },

    #[error("conversion failed at kind `{}`:\n  expected: {}\n  actual:   {}", render_kind(kind), render_expr(left), render_expr(right))]
    ConversionFailed {
        left: Expr,
        right: Expr,
        kind: Kind,
        context: Context,
    },

    #[error("fuel exhausted after {steps} head steps; nonterminating or pathological rule set")]
    FuelExhausted { steps: u64 },

    #[error("unknown eliminator `{name}`")]
    UnknownEliminator { name: Name },

    #[error("unknown constructor `{name}` in computation rule")]
    UnknownConstructor { name: Name },

    #[error("computation-rule arity mismatch for `{name}`: declared {declared}, kind allows {allowed}")]
    RuleArityMismatch {
        name: Name,
        declared: usize,
        allowed: usize,
    },

    #[error("ill-kinded combinator for constructor `{ctor}`: {reason}")]
    IllKindedCombinator { ctor: Name, reason: String },

    #[error("inductive `{name}` violates strict positivity in constructor `{ctor}`")]
    Positivity { name: Name, ctor: Name },

    #[error("malformed inductive `{name}`: {reason}")]
    MalformedInductive { name: Name, reason: String },
}

impl Error {
    /// Multi-line rendering with the context, expected and actual sides.
    /// This is the stable form tests compare against.
    pub fn render(&self) -> String {
        match self {
            Error::ConversionFailed {
                left,
                right,
                kind,
                context,
            } => format!(
                "conversion failed\n  context:  {}\n  at kind:  {}\n  expected: {}\n  actual:   {}\n",
                render_context(context),
                render_kind(kind),
                render_expr(left),
                render_expr(right),
            ),
            Error::KindMismatch {
                expected,
                actual,
                at,
                context,
            } => format!(
                "kind mismatch\n  context:  {}\n  term:     {}\n  expected: {}\n  actual:   {}\n",
                render_context(context),
                render_expr(at),
                render_kind(expected),
                render_kind(actual),
            ),
            other => format!("{other}\n"),
        }
    }
}
