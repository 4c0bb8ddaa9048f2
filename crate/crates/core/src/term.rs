//! Atoms, variables, permutations and nominal terms.
//!
//! A permutation is a list of swappings written outermost first: the head
//! swapping is applied last. Permutations are never normalised, so `[(a a)]`
//! and `[]` are different values that happen to act identically; extensional
//! agreement is expressed through [`Permutation::disagreement`].

use std::collections::BTreeSet;
use std::fmt;

/// A name that can be bound and swapped, but never substituted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(String);

impl Atom {
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        debug_assert!(!name.is_empty(), "atom names are non-empty");
        Atom(name)
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An unknown standing for a term. Only variables are substituted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarName(String);

impl VarName {
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        debug_assert!(!name.is_empty(), "variable names are non-empty");
        VarName(name)
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The transposition `(first second)`. Both sides may be the same atom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Swapping {
    pub first: Atom,
    pub second: Atom,
}

impl Swapping {
    pub fn new(first: Atom, second: Atom) -> Self {
        Swapping { first, second }
    }

    fn swap<'a>(&'a self, a: &'a Atom) -> &'a Atom {
        if *a == self.first {
            &self.second
        } else if *a == self.second {
            &self.first
        } else {
            a
        }
    }
}

impl fmt::Display for Swapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.first, self.second)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Permutation {
    swaps: Vec<Swapping>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { swaps: Vec::new() }
    }

    /// Builds a permutation from swappings listed outermost first.
    pub fn from_swaps(swaps: Vec<Swapping>) -> Self {
        Permutation { swaps }
    }

    /// The single swapping `(a b)`.
    pub fn swapping(a: Atom, b: Atom) -> Self {
        Permutation {
            swaps: vec![Swapping::new(a, b)],
        }
    }

    pub fn swaps(&self) -> &[Swapping] {
        &self.swaps
    }

    pub fn is_empty(&self) -> bool {
        self.swaps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.swaps.len()
    }

    pub fn apply_atom(&self, a: &Atom) -> Atom {
        // The innermost swapping is the last element, so fold from the right.
        let mut current = a;
        for s in self.swaps.iter().rev() {
            current = s.swap(current);
        }
        current.clone()
    }

    /// `self @ inner`: acts as `inner` first, then `self`.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        let mut swaps = Vec::with_capacity(self.swaps.len() + inner.swaps.len());
        swaps.extend_from_slice(&self.swaps);
        swaps.extend_from_slice(&inner.swaps);
        Permutation { swaps }
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            swaps: self.swaps.iter().rev().cloned().collect(),
        }
    }

    /// Atoms mentioned by some swapping. Every other atom is fixed.
    pub fn support(&self) -> BTreeSet<Atom> {
        self.swaps
            .iter()
            .flat_map(|s| [s.first.clone(), s.second.clone()])
            .collect()
    }

    /// The atoms on which `self` and `other` act differently.
    pub fn disagreement(&self, other: &Permutation) -> BTreeSet<Atom> {
        let mut support = self.support();
        support.extend(other.support());
        support
            .into_iter()
            .filter(|a| self.apply_atom(a) != other.apply_atom(a))
            .collect()
    }

    pub fn apply_term(&self, t: &Term) -> Term {
        if self.is_empty() {
            return t.clone();
        }
        match t {
            Term::Unit => Term::Unit,
            Term::Pair(l, r) => Term::pair(self.apply_term(l), self.apply_term(r)),
            Term::Fun(f, arg) => Term::fun(f.clone(), self.apply_term(arg)),
            Term::Atom(a) => Term::Atom(self.apply_atom(a)),
            Term::Abs(a, body) => Term::abs(self.apply_atom(a), self.apply_term(body)),
            Term::Susp(p, x) => Term::Susp(self.compose(p), x.clone()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.swaps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

/// Free function form of [`Permutation::apply_atom`].
pub fn perm_apply_atom(p: &Permutation, a: &Atom) -> Atom {
    p.apply_atom(a)
}

pub fn perm_compose(outer: &Permutation, inner: &Permutation) -> Permutation {
    outer.compose(inner)
}

pub fn perm_invert(p: &Permutation) -> Permutation {
    p.inverse()
}

pub fn disagreement_set(p: &Permutation, q: &Permutation) -> BTreeSet<Atom> {
    p.disagreement(q)
}

pub fn perm_apply_term(p: &Permutation, t: &Term) -> Term {
    p.apply_term(t)
}

/// A nominal term. There is no bare variable constructor: a variable `X` is
/// the suspension of the identity permutation on `X`.
///
/// Equality is syntactic. Alpha-equivalence lives in [`crate::judgement`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Unit,
    Pair(Box<Term>, Box<Term>),
    /// A function symbol applied to its single argument.
    Fun(String, Box<Term>),
    Atom(Atom),
    Abs(Atom, Box<Term>),
    Susp(Permutation, VarName),
}

impl Term {
    pub fn atom(name: impl Into<String>) -> Term {
        Term::Atom(Atom::new(name))
    }

    /// The identity suspension, written as a bare variable.
    pub fn var(name: impl Into<String>) -> Term {
        Term::Susp(Permutation::identity(), VarName::new(name))
    }

    pub fn pair(l: Term, r: Term) -> Term {
        Term::Pair(Box::new(l), Box::new(r))
    }

    pub fn fun(symbol: impl Into<String>, arg: Term) -> Term {
        Term::Fun(symbol.into(), Box::new(arg))
    }

    pub fn abs(binder: Atom, body: Term) -> Term {
        Term::Abs(binder, Box::new(body))
    }

    pub fn susp(p: Permutation, x: VarName) -> Term {
        Term::Susp(p, x)
    }

    /// Number of constructors; permutations do not count.
    pub fn size(&self) -> usize {
        match self {
            Term::Unit | Term::Atom(_) | Term::Susp(..) => 1,
            Term::Pair(l, r) => 1 + l.size() + r.size(),
            Term::Fun(_, t) | Term::Abs(_, t) => 1 + t.size(),
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Unit | Term::Atom(_) => true,
            Term::Susp(..) => false,
            Term::Pair(l, r) => l.is_ground() && r.is_ground(),
            Term::Fun(_, t) | Term::Abs(_, t) => t.is_ground(),
        }
    }

    /// Every atom in the term, including binders and atoms inside suspended
    /// permutations.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Term::Unit => {}
            Term::Pair(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Term::Fun(_, t) => t.collect_atoms(out),
            Term::Atom(a) => {
                out.insert(a.clone());
            }
            Term::Abs(a, t) => {
                out.insert(a.clone());
                t.collect_atoms(out);
            }
            Term::Susp(p, _) => {
                for s in p.swaps() {
                    out.insert(s.first.clone());
                    out.insert(s.second.clone());
                }
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<VarName> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<VarName>) {
        match self {
            Term::Unit | Term::Atom(_) => {}
            Term::Pair(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Term::Fun(_, t) | Term::Abs(_, t) => t.collect_vars(out),
            Term::Susp(_, x) => {
                out.insert(x.clone());
            }
        }
    }

    pub fn mentions_var(&self, x: &VarName) -> bool {
        match self {
            Term::Unit | Term::Atom(_) => false,
            Term::Pair(l, r) => l.mentions_var(x) || r.mentions_var(x),
            Term::Fun(_, t) | Term::Abs(_, t) => t.mentions_var(x),
            Term::Susp(_, y) => x == y,
        }
    }
}

pub fn atoms_of(t: &Term) -> BTreeSet<Atom> {
    t.atoms()
}

pub fn vars_of(t: &Term) -> BTreeSet<VarName> {
    t.vars()
}
