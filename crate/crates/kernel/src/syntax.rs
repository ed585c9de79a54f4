//! Abstract syntax: expressions, kinds, capture-avoiding substitution and
//! alpha-equivalence.
//!
//! Binders are locally nameless: bound variables are de Bruijn indices
//! (`Expr::Bound`), free variables are names (`Expr::Free`). This makes
//! alpha-equivalence structural and substitution capture-free by
//! construction. Every `Expr` stored in a signature or context is locally
//! closed; dangling `Bound` indices only appear under their binder.

use std::collections::BTreeSet;
use std::fmt;
use std::rc::Rc;

/// An interned-ish identifier. Cheap to clone, compared by string value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name(Rc<str>);

impl Name {
    pub fn new(s: impl AsRef<str>) -> Self {
        Name(Rc::from(s.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl From<&str> for Name {
    fn from(s: &str) -> Self {
        Name::new(s)
    }
}

/// Framework expressions: variables, constants, applications and
/// kind-annotated abstractions. Object-level functions (elements of
/// Pi-types) are represented with the same `Lam`; the kinds keep the two
/// levels apart.
#[derive(Clone, Debug)]
pub enum Expr {
    /// Bound variable (de Bruijn index, innermost binder is 0).
    Bound(u32),
    /// Free variable, referring to a context entry by name.
    Free(Name),
    /// Constant declared in the signature.
    Const(Name),
    App(Rc<Expr>, Rc<Expr>),
    Lam(Rc<Binder>),
}

/// A `Lam` node: name hint for printing, domain kind, body with one bound
/// variable.
#[derive(Clone, Debug)]
pub struct Binder {
    pub hint: Name,
    pub ann: Kind,
    pub body: Expr,
}

/// Classifiers of the framework: the kind of types, element kinds, the kind
/// of propositions, proof kinds, and parametric kinds `(x:K)K'`.
#[derive(Clone, Debug)]
pub enum Kind {
    Type,
    Prop,
    El(Rc<Expr>),
    Prf(Rc<Expr>),
    Pi(Rc<KindBinder>),
}

/// A `Pi` kind node; the codomain has one bound variable.
#[derive(Clone, Debug)]
pub struct KindBinder {
    pub hint: Name,
    pub dom: Kind,
    pub cod: Kind,
}

impl Expr {
    pub fn free(n: impl AsRef<str>) -> Expr {
        Expr::Free(Name::new(n))
    }

    pub fn cst(n: impl AsRef<str>) -> Expr {
        Expr::Const(Name::new(n))
    }

    pub fn app(f: Expr, a: Expr) -> Expr {
        Expr::App(Rc::new(f), Rc::new(a))
    }

    /// `f a1 ... an`.
    pub fn apps(f: Expr, args: impl IntoIterator<Item = Expr>) -> Expr {
        args.into_iter().fold(f, Expr::app)
    }

    pub fn lam(hint: impl AsRef<str>, ann: Kind, body: Expr) -> Expr {
        Expr::Lam(Rc::new(Binder {
            hint: Name::new(hint),
            ann,
            body,
        }))
    }

    /// Decomposes an application spine into head and arguments.
    pub fn spine(&self) -> (&Expr, Vec<&Expr>) {
        let mut head = self;
        let mut args = Vec::new();
        while let Expr::App(f, a) = head {
            args.push(&**a);
            head = f;
        }
        args.reverse();
        (head, args)
    }

    /// Head constant name of the spine, if any.
    pub fn head_const(&self) -> Option<&Name> {
        match self.spine().0 {
            Expr::Const(n) => Some(n),
            _ => None,
        }
    }
}

impl Kind {
    pub fn el(e: Expr) -> Kind {
        Kind::El(Rc::new(e))
    }

    pub fn prf(e: Expr) -> Kind {
        Kind::Prf(Rc::new(e))
    }

    pub fn pi(hint: impl AsRef<str>, dom: Kind, cod: Kind) -> Kind {
        Kind::Pi(Rc::new(KindBinder {
            hint: Name::new(hint),
            dom,
            cod,
        }))
    }

    /// `(x1:K1)...(xn:Kn)K` from a telescope.
    pub fn pis(tele: impl IntoIterator<Item = (Name, Kind)>, cod: Kind) -> Kind {
        let entries: Vec<_> = tele.into_iter().collect();
        entries
            .into_iter()
            .rev()
            .fold(cod, |acc, (h, d)| Kind::pi(h.as_str(), d, acc))
    }

    /// Splits a Pi-kind telescope into its binders and final codomain.
    pub fn telescope(&self) -> (Vec<&KindBinder>, &Kind) {
        let mut tele = Vec::new();
        let mut k = self;
        while let Kind::Pi(b) = k {
            tele.push(&**b);
            k = &b.cod;
        }
        (tele, k)
    }
}

fn subst_expr(e: &Expr, depth: u32, value: &Expr) -> Expr {
    match e {
        Expr::Bound(i) if *i == depth => value.clone(),
        Expr::Bound(_) | Expr::Free(_) | Expr::Const(_) => e.clone(),
        Expr::App(f, a) => Expr::App(
            Rc::new(subst_expr(f, depth, value)),
            Rc::new(subst_expr(a, depth, value)),
        ),
        Expr::Lam(b) => Expr::Lam(Rc::new(Binder {
            hint: b.hint.clone(),
            ann: subst_kind(&b.ann, depth, value),
            body: subst_expr(&b.body, depth + 1, value),
        })),
    }
}

fn subst_kind(k: &Kind, depth: u32, value: &Expr) -> Kind {
    match k {
        Kind::Type | Kind::Prop => k.clone(),
        Kind::El(e) => Kind::El(Rc::new(subst_expr(e, depth, value))),
        Kind::Prf(e) => Kind::Prf(Rc::new(subst_expr(e, depth, value))),
        Kind::Pi(b) => Kind::Pi(Rc::new(KindBinder {
            hint: b.hint.clone(),
            dom: subst_kind(&b.dom, depth, value),
            cod: subst_kind(&b.cod, depth + 1, value),
        })),
    }
}

/// Replaces the outermost bound variable of `body` by `value`.
///
/// `body` is the scope of a binder (one dangling index at depth 0); `value`
/// must be locally closed. No capture can occur: bound variables in `value`
/// are all under their own binders.
pub fn instantiate(body: &Expr, value: &Expr) -> Expr {
    subst_expr(body, 0, value)
}

/// Kind-level counterpart of [`instantiate`].
pub fn instantiate_kind(cod: &Kind, value: &Expr) -> Kind {
    subst_kind(cod, 0, value)
}

fn abstract_expr(e: &Expr, depth: u32, name: &Name) -> Expr {
    match e {
        Expr::Free(n) if n == name => Expr::Bound(depth),
        Expr::Bound(_) | Expr::Free(_) | Expr::Const(_) => e.clone(),
        Expr::App(f, a) => Expr::App(
            Rc::new(abstract_expr(f, depth, name)),
            Rc::new(abstract_expr(a, depth, name)),
        ),
        Expr::Lam(b) => Expr::Lam(Rc::new(Binder {
            hint: b.hint.clone(),
            ann: abstract_kind(&b.ann, depth, name),
            body: abstract_expr(&b.body, depth + 1, name),
        })),
    }
}

fn abstract_kind(k: &Kind, depth: u32, name: &Name) -> Kind {
    match k {
        Kind::Type | Kind::Prop => k.clone(),
        Kind::El(e) => Kind::El(Rc::new(abstract_expr(e, depth, name))),
        Kind::Prf(e) => Kind::Prf(Rc::new(abstract_expr(e, depth, name))),
        Kind::Pi(b) => Kind::Pi(Rc::new(KindBinder {
            hint: b.hint.clone(),
            dom: abstract_kind(&b.dom, depth, name),
            cod: abstract_kind(&b.cod, depth + 1, name),
        })),
    }
}

/// Turns the free variable `name` into the outermost bound variable,
/// producing a binder scope. Inverse of [`instantiate`] with `Free(name)`.
pub fn close(e: &Expr, name: &Name) -> Expr {
    abstract_expr(e, 0, name)
}

/// Kind-level counterpart of [`close`].
pub fn close_kind(k: &Kind, name: &Name) -> Kind {
    abstract_kind(k, 0, name)
}

/// Structural equality up to binder names. Bound variables compare by
/// index, so renaming a binder never changes the result.
pub fn alpha_eq(e1: &Expr, e2: &Expr) -> bool {
    match (e1, e2) {
        (Expr::Bound(i), Expr::Bound(j)) => i == j,
        (Expr::Free(a), Expr::Free(b)) => a == b,
        (Expr::Const(a), Expr::Const(b)) => a == b,
        (Expr::App(f1, a1), Expr::App(f2, a2)) => alpha_eq(f1, f2) && alpha_eq(a1, a2),
        (Expr::Lam(b1), Expr::Lam(b2)) => {
            alpha_eq_kind(&b1.ann, &b2.ann) && alpha_eq(&b1.body, &b2.body)
        }
        _ => false,
    }
}

/// [`alpha_eq`] on kinds.
pub fn alpha_eq_kind(k1: &Kind, k2: &Kind) -> bool {
    match (k1, k2) {
        (Kind::Type, Kind::Type) | (Kind::Prop, Kind::Prop) => true,
        (Kind::El(a), Kind::El(b)) | (Kind::Prf(a), Kind::Prf(b)) => alpha_eq(a, b),
        (Kind::Pi(b1), Kind::Pi(b2)) => {
            alpha_eq_kind(&b1.dom, &b2.dom) && alpha_eq_kind(&b1.cod, &b2.cod)
        }
        _ => false,
    }
}

fn collect_free(e: &Expr, out: &mut BTreeSet<Name>) {
    match e {
        Expr::Free(n) => {
            out.insert(n.clone());
        }
        Expr::Bound(_) | Expr::Const(_) => {}
        Expr::App(f, a) => {
            collect_free(f, out);
            collect_free(a, out);
        }
        Expr::Lam(b) => {
            collect_free_kind(&b.ann, out);
            collect_free(&b.body, out);
        }
    }
}

fn collect_free_kind(k: &Kind, out: &mut BTreeSet<Name>) {
    match k {
        Kind::Type | Kind::Prop => {}
        Kind::El(e) | Kind::Prf(e) => collect_free(e, out),
        Kind::Pi(b) => {
            collect_free_kind(&b.dom, out);
            collect_free_kind(&b.cod, out);
        }
    }
}

/// The set of free variable names of `e`.
pub fn free_vars(e: &Expr) -> BTreeSet<Name> {
    let mut out = BTreeSet::new();
    collect_free(e, &mut out);
    out
}

/// Free variable names of a kind.
pub fn free_vars_kind(k: &Kind) -> BTreeSet<Name> {
    let mut out = BTreeSet::new();
    collect_free_kind(k, &mut out);
    out
}

fn expr_mentions_bound(e: &Expr, depth: u32) -> bool {
    match e {
        Expr::Bound(i) => *i == depth,
        Expr::Free(_) | Expr::Const(_) => false,
        Expr::App(f, a) => expr_mentions_bound(f, depth) || expr_mentions_bound(a, depth),
        Expr::Lam(b) => {
            kind_mentions_bound(&b.ann, depth) || expr_mentions_bound(&b.body, depth + 1)
        }
    }
}

fn kind_mentions_bound(k: &Kind, depth: u32) -> bool {
    match k {
        Kind::Type | Kind::Prop => false,
        Kind::El(e) | Kind::Prf(e) => expr_mentions_bound(e, depth),
        Kind::Pi(b) => kind_mentions_bound(&b.dom, depth) || kind_mentions_bound(&b.cod, depth + 1),
    }
}

/// True if the binder scope `body` actually uses its bound variable.
/// Used for eta-contraction and arrow printing.
pub fn scope_uses_bound(body: &Expr) -> bool {
    expr_mentions_bound(body, 0)
}

/// Kind-level counterpart of [`scope_uses_bound`].
pub fn kind_scope_uses_bound(cod: &Kind) -> bool {
    kind_mentions_bound(cod, 0)
}

/// Lowers every dangling bound index above `depth` by one. Only valid when
/// index `depth` itself does not occur (checked by the caller); used by
/// eta-contraction.
pub fn unshift(e: &Expr, depth: u32) -> Expr {
    match e {
        Expr::Bound(i) if *i > depth => Expr::Bound(i - 1),
        Expr::Bound(_) | Expr::Free(_) | Expr::Const(_) => e.clone(),
        Expr::App(f, a) => Expr::App(Rc::new(unshift(f, depth)), Rc::new(unshift(a, depth))),
        Expr::Lam(b) => Expr::Lam(Rc::new(Binder {
            hint: b.hint.clone(),
            ann: unshift_kind(&b.ann, depth),
            body: unshift(&b.body, depth + 1),
        })),
    }
}

fn unshift_kind(k: &Kind, depth: u32) -> Kind {
    match k {
        Kind::Type | Kind::Prop => k.clone(),
        Kind::El(e) => Kind::El(Rc::new(unshift(e, depth))),
        Kind::Prf(e) => Kind::Prf(Rc::new(unshift(e, depth))),
        Kind::Pi(b) => Kind::Pi(Rc::new(KindBinder {
            hint: b.hint.clone(),
            dom: unshift_kind(&b.dom, depth),
            cod: unshift_kind(&b.cod, depth + 1),
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var0() -> Expr {
        Expr::Bound(0)
    }

    #[test]
    fn instantiate_identity_body() {
        let body = var0();
        let v = Expr::cst("c");
        assert!(alpha_eq(&instantiate(&body, &v), &Expr::cst("c")));
    }

    #[test]
    fn instantiate_constant_body_ignores_value() {
        let body = Expr::cst("k");
        let v = Expr::free("anything");
        assert!(alpha_eq(&instantiate(&body, &v), &Expr::cst("k")));
    }

    #[test]
    fn instantiate_single_occurrence() {
        let body = Expr::app(Expr::free("f"), var0());
        let v = Expr::free("a");
        let expected = Expr::app(Expr::free("f"), Expr::free("a"));
        assert!(alpha_eq(&instantiate(&body, &v), &expected));
    }

    #[test]
    fn alpha_eq_ignores_binder_hints() {
        let l1 = Expr::lam("x", Kind::Type, var0());
        let l2 = Expr::lam("y", Kind::Type, var0());
        assert!(alpha_eq(&l1, &l2));
    }

    #[test]
    fn alpha_eq_distinguishes_bodies() {
        let l1 = Expr::lam("x", Kind::Type, var0());
        let l2 = Expr::lam("x", Kind::Type, Expr::cst("c"));
        assert!(!alpha_eq(&l1, &l2));
        assert!(alpha_eq(&Expr::cst("a"), &Expr::cst("a")));
    }

    #[test]
    fn free_vars_closed_term() {
        let l = Expr::lam("x", Kind::Type, var0());
        assert!(free_vars(&l).is_empty());
    }

    #[test]
    fn free_vars_deduplicates() {
        let e = Expr::app(Expr::free("y"), Expr::free("y"));
        let fv = free_vars(&e);
        assert_eq!(fv.len(), 1);
        assert!(fv.contains(&Name::new("y")));
    }

    #[test]
    fn free_vars_binder_removes_bound() {
        let body = Expr::app(var0(), Expr::free("z"));
        let l = Expr::lam("x", Kind::Type, body);
        let fv = free_vars(&l);
        assert_eq!(fv.len(), 1);
        assert!(fv.contains(&Name::new("z")));
    }

    #[test]
    fn close_then_instantiate_roundtrip() {
        let x = Name::new("x");
        let e = Expr::app(Expr::free("x"), Expr::cst("c"));
        let scope = close(&e, &x);
        assert!(alpha_eq(&instantiate(&scope, &Expr::Free(x)), &e));
    }
}
