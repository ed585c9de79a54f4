//! Global signatures: declarations, definitions, inductive blocks and
//! registered computation rules.
//!
//! A signature is append-only during a checking run. Entries are kept in
//! declaration order; every entry is well-formed relative to the earlier
//! ones (enforced by `check::declare_*`).

use std::collections::HashMap;
use std::rc::Rc;

use crate::syntax::{Expr, Kind, Name};

/// One signature entry.
#[derive(Clone, Debug)]
pub enum Entry {
    /// Declared constant with no definition.
    ConstDecl { kind: Kind },
    /// Transparent definition, unfolded by normalization.
    Def { kind: Kind, body: Expr },
    /// Head of an inductive block. Behaves like a constant; the block
    /// metadata drives eliminator generation and rule validation.
    Inductive {
        kind: Kind,
        info: Rc<InductiveInfo>,
    },
    /// Constructor of an inductive block.
    Ctor {
        kind: Kind,
        inductive: Name,
        /// Leading arguments that repeat the block parameters.
        params: usize,
        /// Remaining (proper) arguments.
        arity: usize,
    },
}

impl Entry {
    pub fn kind(&self) -> &Kind {
        match self {
            Entry::ConstDecl { kind }
            | Entry::Def { kind, .. }
            | Entry::Inductive { kind, .. }
            | Entry::Ctor { kind, .. } => kind,
        }
    }
}

/// Metadata for an inductive block.
#[derive(Clone, Debug)]
pub struct InductiveInfo {
    pub name: Name,
    /// Number of uniform parameters.
    pub params: usize,
    /// Number of indices.
    pub indices: usize,
    pub ctors: Vec<Name>,
    /// Generated eliminator names (type motive, prop motive).
    pub elim: Name,
    pub ind: Name,
}

/// A registered computation rule set for one eliminator.
///
/// A saturated application `elim a1 .. an s` contracts, when the scrutinee
/// `s` reduces to `c p1 .. pk b1 .. bm` for a listed constructor `c`, to
/// `combinator a1 .. a_passed b1 .. bm`: the leading eliminator arguments
/// (minus any trailing index arguments) followed by the constructor's proper
/// arguments.
#[derive(Clone, Debug)]
pub struct CompRule {
    /// Inductive (or type constant) the rule computes for.
    pub type_name: Name,
    pub elim: Name,
    /// Count of non-scrutinee eliminator arguments; the rule fires on
    /// applications of length `n_args + 1`.
    pub n_args: usize,
    /// Prefix of the eliminator arguments passed to the combinator.
    /// Trailing index arguments are dropped (they are determined by the
    /// constructor).
    pub n_passed: usize,
    pub cases: Vec<CompRuleCase>,
}

#[derive(Clone, Debug)]
pub struct CompRuleCase {
    pub ctor: Name,
    /// Leading constructor arguments dropped before the combinator is
    /// applied (the block parameters, already among the eliminator args).
    pub skip_params: usize,
    /// Constructor arguments passed to the combinator.
    pub arity: usize,
    pub combinator: Expr,
    pub combinator_kind: Kind,
}

impl CompRule {
    pub fn case_for(&self, ctor: &Name) -> Option<&CompRuleCase> {
        self.cases.iter().find(|c| &c.ctor == ctor)
    }
}

/// Evaluation switches. `eta` exists for a conversion test that removes it;
/// `eqcomp_iota` strengthens the propositional computation rule of the
/// logical-equality eliminator into a definitional one.
#[derive(Clone, Copy, Debug)]
pub struct Flags {
    pub eta: bool,
    pub eqcomp_iota: bool,
    pub fuel: u64,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            eta: true,
            eqcomp_iota: true,
            fuel: 10_000_000,
        }
    }
}

/// The global environment: an ordered, append-only map of entries plus
/// computation rules indexed by eliminator.
#[derive(Clone, Debug, Default)]
pub struct Signature {
    entries: Vec<(Name, Entry)>,
    index: HashMap<Name, usize>,
    rules: HashMap<Name, Rc<CompRule>>,
    rule_order: Vec<Name>,
    pub flags: Flags,
}

impl Signature {
    pub fn new() -> Self {
        Signature::default()
    }

    pub fn with_flags(flags: Flags) -> Self {
        Signature {
            flags,
            ..Signature::default()
        }
    }

    pub fn contains(&self, name: &Name) -> bool {
        self.index.contains_key(name)
    }

    pub fn get(&self, name: &Name) -> Option<&Entry> {
        self.index.get(name).map(|i| &self.entries[*i].1)
    }

    pub fn kind_of(&self, name: &Name) -> Option<&Kind> {
        self.get(name).map(Entry::kind)
    }

    /// Body of a transparent definition, if `name` is one.
    pub fn def_body(&self, name: &Name) -> Option<&Expr> {
        match self.get(name) {
            Some(Entry::Def { body, .. }) => Some(body),
            _ => None,
        }
    }

    pub fn ctor_info(&self, name: &Name) -> Option<(&Name, usize, usize)> {
        match self.get(name) {
            Some(Entry::Ctor {
                inductive,
                params,
                arity,
                ..
            }) => Some((inductive, *params, *arity)),
            _ => None,
        }
    }

    pub fn inductive_info(&self, name: &Name) -> Option<&Rc<InductiveInfo>> {
        match self.get(name) {
            Some(Entry::Inductive { info, .. }) => Some(info),
            _ => None,
        }
    }

    pub fn rule_for(&self, elim: &Name) -> Option<&Rc<CompRule>> {
        self.rules.get(elim)
    }

    pub fn entries(&self) -> impl Iterator<Item = &(Name, Entry)> {
        self.entries.iter()
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rc<CompRule>> {
        self.rule_order.iter().filter_map(|n| self.rules.get(n))
    }

    /// Appends an entry. The caller (`check::declare_*`) has already
    /// validated it; this only enforces name freshness.
    pub(crate) fn push(&mut self, name: Name, entry: Entry) -> crate::Result<()> {
        if self.contains(&name) {
            return Err(crate::Error::DuplicateName { name });
        }
        self.index.insert(name.clone(), self.entries.len());
        self.entries.push((name, entry));
        Ok(())
    }

    /// Installs a validated computation rule set for an eliminator.
    pub(crate) fn install_rule(&mut self, rule: CompRule) {
        let elim = rule.elim.clone();
        if !self.rules.contains_key(&elim) {
            self.rule_order.push(elim.clone());
        }
        self.rules.insert(elim, Rc::new(rule));
    }

    /// Replaces the body of a claim previously recorded as a bare constant.
    /// The kind is unchanged, so well-formedness of later entries is
    /// unaffected; only transparency changes. Used by the script frontend
    /// when axioms are allowed.
    pub fn upgrade_to_def(&mut self, name: &Name, body: Expr) -> bool {
        if let Some(i) = self.index.get(name) {
            let slot = &mut self.entries[*i].1;
            if let Entry::ConstDecl { kind } = slot {
                *slot = Entry::Def {
                    kind: kind.clone(),
                    body,
                };
                return true;
            }
        }
        false
    }
}
