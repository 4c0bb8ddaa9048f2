//! Freshness `∇ ⊢ a # t`, alpha-equivalence `∇ ⊢ t ≈ t'` and weak
//! equivalence `t ~ t'`.
//!
//! The rules are syntax directed, so both deciders are plain structural
//! recursion: at most one rule applies to any pair of constructors and no
//! backtracking is needed.

use std::collections::BTreeSet;
use std::fmt;

use crate::term::{Atom, Permutation, Term, VarName};

/// A set of constraints `a # X`: whatever replaces `X` must not mention `a`
/// free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreshnessEnv {
    constraints: BTreeSet<(Atom, VarName)>,
}

impl FreshnessEnv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, a: Atom, x: VarName) -> bool {
        self.constraints.insert((a, x))
    }

    pub fn contains(&self, a: &Atom, x: &VarName) -> bool {
        !self.constraints.is_empty() && self.constraints.contains(&(a.clone(), x.clone()))
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Constraints in atom-then-variable order.
    pub fn iter(&self) -> impl Iterator<Item = &(Atom, VarName)> {
        self.constraints.iter()
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        self.constraints.iter().map(|(a, _)| a.clone()).collect()
    }

    pub fn vars(&self) -> BTreeSet<VarName> {
        self.constraints.iter().map(|(_, x)| x.clone()).collect()
    }
}

impl FromIterator<(Atom, VarName)> for FreshnessEnv {
    fn from_iter<I: IntoIterator<Item = (Atom, VarName)>>(iter: I) -> Self {
        FreshnessEnv {
            constraints: iter.into_iter().collect(),
        }
    }
}

impl Extend<(Atom, VarName)> for FreshnessEnv {
    fn extend<I: IntoIterator<Item = (Atom, VarName)>>(&mut self, iter: I) {
        self.constraints.extend(iter)
    }
}

impl fmt::Display for FreshnessEnv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, x)) in self.constraints.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}#{x}")?;
        }
        f.write_str("}")
    }
}

/// Decides `env ⊢ a # t`.
pub fn fresh(env: &FreshnessEnv, a: &Atom, t: &Term) -> bool {
    match t {
        Term::Unit => true,
        Term::Pair(l, r) => fresh(env, a, l) && fresh(env, a, r),
        Term::Fun(_, arg) => fresh(env, a, arg),
        Term::Atom(b) => a != b,
        Term::Abs(b, body) => a == b || fresh(env, a, body),
        Term::Susp(p, x) => env.contains(&p.inverse().apply_atom(a), x),
    }
}

/// Decides `env ⊢ t1 ≈ t2`.
pub fn alpha_eq(env: &FreshnessEnv, t1: &Term, t2: &Term) -> bool {
    match (t1, t2) {
        (Term::Unit, Term::Unit) => true,
        (Term::Pair(l1, r1), Term::Pair(l2, r2)) => alpha_eq(env, l1, l2) && alpha_eq(env, r1, r2),
        (Term::Fun(f, s1), Term::Fun(g, s2)) => f == g && alpha_eq(env, s1, s2),
        (Term::Atom(a), Term::Atom(b)) => a == b,
        (Term::Abs(a, s1), Term::Abs(b, s2)) => {
            if a == b {
                alpha_eq(env, s1, s2)
            } else {
                let swapped = Permutation::swapping(a.clone(), b.clone()).apply_term(s2);
                fresh(env, a, s2) && alpha_eq(env, s1, &swapped)
            }
        }
        (Term::Susp(p, x), Term::Susp(q, y)) => {
            x == y && p.disagreement(q).iter().all(|c| env.contains(c, x))
        }
        _ => false,
    }
}

/// Decides `t1 ~ t2`: syntactic equality up to extensionally equal
/// suspended permutations.
pub fn weak_eq(t1: &Term, t2: &Term) -> bool {
    match (t1, t2) {
        (Term::Unit, Term::Unit) => true,
        (Term::Pair(l1, r1), Term::Pair(l2, r2)) => weak_eq(l1, l2) && weak_eq(r1, r2),
        (Term::Fun(f, s1), Term::Fun(g, s2)) => f == g && weak_eq(s1, s2),
        (Term::Atom(a), Term::Atom(b)) => a == b,
        (Term::Abs(a, s1), Term::Abs(b, s2)) => a == b && weak_eq(s1, s2),
        (Term::Susp(p, x), Term::Susp(q, y)) => x == y && p.disagreement(q).is_empty(),
        _ => false,
    }
}
