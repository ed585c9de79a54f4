//! Names the kernel treats specially.
//!
//! The prelude declares these constants; the kernel recognizes them by name
//! to implement universe checking, the El-reflection of Pi-types, and the
//! built-in computation rules for logical equality and the quantifier. The
//! kernel never creates them itself, and a signature that does not declare
//! them simply never triggers the special cases.

/// Small universe, an element of `U1`.
pub const U0: &str = "U0";
/// Large universe, a type.
pub const U1: &str = "U1";
/// Code lift from `U0` into `U1`; `El (lift a)` unfolds to `El a`.
pub const LIFT: &str = "lift";
/// Dependent function types at the three levels. `El (Pi A B)` unfolds to
/// the parametric kind `(x : El A) El (B x)`, so object-level functions are
/// framework abstractions and object-level application is framework
/// application.
pub const PI: &str = "Pi";
pub const PI1: &str = "Pi1";
pub const PI0: &str = "Pi0";

/// Logical equality eliminator into types, and its reflexivity constant.
/// With the `eqcomp_iota` flag on, a saturated `EqE_T A T t x y p` contracts
/// to `t x` whenever the endpoints `x` and `y` are convertible (proof
/// irrelevance identifies `p` with reflexivity).
pub const EQE_T: &str = "EqE_T";
pub const EQR: &str = "Eqr";

/// Universal quantifier elimination: `E_All X P x (I_All X' P' p)`
/// contracts to `p x`, and similarly for the proposition-domain variant.
pub const E_ALL: &str = "E_All";
pub const I_ALL: &str = "I_All";
pub const E_ALLP: &str = "E_AllP";
pub const I_ALLP: &str = "I_AllP";

/// True if `n` is one of the two universe constants.
pub fn is_universe(n: &str) -> bool {
    n == U0 || n == U1
}

/// True if `n` is a Pi-type former subject to El-reflection.
pub fn is_pi_former(n: &str) -> bool {
    n == PI || n == PI1 || n == PI0
}
