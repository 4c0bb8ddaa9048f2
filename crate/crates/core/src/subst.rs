//! Substitutions of terms for variables.
//!
//! Substitution is possibly capturing: it goes under abstractions without
//! renaming, so `[X := b]` applied to `a.X` yields `a.b`. Suspended
//! permutations are pushed onto the substituted term.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::term::{Atom, Term, VarName};
use crate::unify::{ProblemSet, UnifProblem};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subst {
    bindings: BTreeMap<VarName, Term>,
}

impl Subst {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(x: VarName, t: Term) -> Self {
        let mut s = Subst::new();
        s.bind(x, t);
        s
    }

    /// Adds or replaces the binding for `x`. Does not touch the range.
    pub fn bind(&mut self, x: VarName, t: Term) -> Option<Term> {
        self.bindings.insert(x, t)
    }

    pub fn get(&self, x: &VarName) -> Option<&Term> {
        self.bindings.get(x)
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    /// Bindings sorted by variable name.
    pub fn iter(&self) -> impl Iterator<Item = (&VarName, &Term)> {
        self.bindings.iter()
    }

    pub fn domain(&self) -> impl Iterator<Item = &VarName> {
        self.bindings.keys()
    }

    pub fn range_vars(&self) -> BTreeSet<VarName> {
        let mut out = BTreeSet::new();
        for t in self.bindings.values() {
            t.collect_vars(&mut out);
        }
        out
    }

    pub fn range_atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for t in self.bindings.values() {
            t.collect_atoms(&mut out);
        }
        out
    }

    /// True when no domain variable occurs in the range.
    pub fn is_idempotent(&self) -> bool {
        let range = self.range_vars();
        self.bindings.keys().all(|x| !range.contains(x))
    }

    pub fn apply(&self, t: &Term) -> Term {
        if self.is_empty() {
            return t.clone();
        }
        match t {
            Term::Unit => Term::Unit,
            Term::Atom(a) => Term::Atom(a.clone()),
            Term::Pair(l, r) => Term::pair(self.apply(l), self.apply(r)),
            Term::Fun(f, arg) => Term::fun(f.clone(), self.apply(arg)),
            Term::Abs(a, body) => Term::abs(a.clone(), self.apply(body)),
            Term::Susp(p, x) => match self.bindings.get(x) {
                Some(image) => p.apply_term(image),
                None => t.clone(),
            },
        }
    }

    /// `after ∘ self`: applying the result equals applying `self`, then `after`.
    pub fn then(&self, after: &Subst) -> Subst {
        let mut bindings: BTreeMap<VarName, Term> = self
            .bindings
            .iter()
            .map(|(x, t)| (x.clone(), after.apply(t)))
            .collect();
        for (x, t) in &after.bindings {
            bindings.entry(x.clone()).or_insert_with(|| t.clone());
        }
        Subst { bindings }
    }

    pub fn apply_problem(&self, p: &UnifProblem) -> UnifProblem {
        match p {
            UnifProblem::Equational(l, r) => UnifProblem::Equational(self.apply(l), self.apply(r)),
            UnifProblem::Freshness(a, t) => UnifProblem::Freshness(a.clone(), self.apply(t)),
        }
    }

    pub fn apply_problemset(&self, ps: &ProblemSet) -> ProblemSet {
        ps.iter().map(|p| self.apply_problem(p)).collect()
    }
}

impl FromIterator<(VarName, Term)> for Subst {
    fn from_iter<I: IntoIterator<Item = (VarName, Term)>>(iter: I) -> Self {
        Subst {
            bindings: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (x, t)) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x} := {t}")?;
        }
        f.write_str("]")
    }
}

pub fn subst_apply(s: &Subst, t: &Term) -> Term {
    s.apply(t)
}

pub fn subst_compose(after: &Subst, before: &Subst) -> Subst {
    before.then(after)
}

pub fn subst_apply_problemset(s: &Subst, ps: &ProblemSet) -> ProblemSet {
    s.apply_problemset(ps)
}
