//! Reference semantics for ground terms, independent of the judgements.
//!
//! Ground alpha-equivalence is decided by converting both terms to a nameless
//! form (binders replaced by their distance, free atoms kept by name) and
//! comparing syntactically. The enumerator produces every small term over
//! fixed alphabets for exhaustive differential testing.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::term::{Atom, Permutation, Swapping, Term, VarName};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalTerm {
    Unit,
    Pair(Box<CanonicalTerm>, Box<CanonicalTerm>),
    Fun(String, Box<CanonicalTerm>),
    /// Bound occurrence: number of binders between it and its own.
    Index(usize),
    Free(Atom),
    Abs(Box<CanonicalTerm>),
}

impl CanonicalTerm {
    pub fn free_atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                CanonicalTerm::Unit | CanonicalTerm::Index(_) => {}
                CanonicalTerm::Free(a) => {
                    out.insert(a.clone());
                }
                CanonicalTerm::Pair(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
                CanonicalTerm::Fun(_, t) | CanonicalTerm::Abs(t) => stack.push(t),
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("term is not ground: it mentions variable {0}")]
    NonGround(VarName),
}

pub fn canonicalize(t: &Term) -> Result<CanonicalTerm, OracleError> {
    fn go<'a>(t: &'a Term, binders: &mut Vec<&'a Atom>) -> Result<CanonicalTerm, OracleError> {
        Ok(match t {
            Term::Unit => CanonicalTerm::Unit,
            Term::Pair(l, r) => CanonicalTerm::Pair(Box::new(go(l, binders)?), Box::new(go(r, binders)?)),
            Term::Fun(f, arg) => CanonicalTerm::Fun(f.clone(), Box::new(go(arg, binders)?)),
            Term::Atom(a) => match binders.iter().rev().position(|b| *b == a) {
                Some(depth) => CanonicalTerm::Index(depth),
                None => CanonicalTerm::Free(a.clone()),
            },
            Term::Abs(a, body) => {
                binders.push(a);
                let body = go(body, binders);
                binders.pop();
                CanonicalTerm::Abs(Box::new(body?))
            }
            Term::Susp(_, x) => return Err(OracleError::NonGround(x.clone())),
        })
    }
    go(t, &mut Vec::new())
}

pub fn ground_alpha_eq(t1: &Term, t2: &Term) -> Result<bool, OracleError> {
    Ok(canonicalize(t1)? == canonicalize(t2)?)
}

/// Exhaustive term enumeration, memoised by size.
///
/// Size counts constructors only. Suspensions range over every permutation
/// of at most two swappings drawn from unordered atom pairs (including the
/// trivial `(a a)`).
#[derive(Clone, Debug)]
pub struct Enumerator {
    atoms: Vec<Atom>,
    vars: Vec<VarName>,
    symbols: Vec<String>,
    perms: Vec<Permutation>,
    levels: Vec<Vec<Term>>,
}

impl Enumerator {
    pub fn new(atoms: impl IntoIterator<Item = Atom>, vars: impl IntoIterator<Item = VarName>) -> Self {
        Self::with_symbols(atoms, vars, ["f".to_string()])
    }

    pub fn with_symbols(
        atoms: impl IntoIterator<Item = Atom>,
        vars: impl IntoIterator<Item = VarName>,
        symbols: impl IntoIterator<Item = String>,
    ) -> Self {
        let atoms: Vec<Atom> = atoms.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let vars: Vec<VarName> = vars.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let symbols: Vec<String> = symbols.into_iter().collect::<BTreeSet<_>>().into_iter().collect();

        let mut swaps = Vec::new();
        for (i, a) in atoms.iter().enumerate() {
            for b in &atoms[i..] {
                swaps.push(Swapping::new(a.clone(), b.clone()));
            }
        }
        let mut perms = vec![Permutation::identity()];
        for s in &swaps {
            perms.push(Permutation::from_swaps(vec![s.clone()]));
        }
        for s1 in &swaps {
            for s2 in &swaps {
                perms.push(Permutation::from_swaps(vec![s1.clone(), s2.clone()]));
            }
        }

        Enumerator {
            atoms,
            vars,
            symbols,
            perms,
            levels: vec![Vec::new()],
        }
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    /// All terms of exactly `size` constructors.
    pub fn terms_of_size(&mut self, size: usize) -> &[Term] {
        while self.levels.len() <= size {
            let n = self.levels.len();
            let level = self.build_level(n);
            self.levels.push(level);
        }
        &self.levels[size]
    }

    fn build_level(&self, n: usize) -> Vec<Term> {
        let mut out = Vec::new();
        if n == 1 {
            out.push(Term::Unit);
            out.extend(self.atoms.iter().cloned().map(Term::Atom));
            for x in &self.vars {
                for p in &self.perms {
                    out.push(Term::Susp(p.clone(), x.clone()));
                }
            }
            return out;
        }
        let smaller = &self.levels[n - 1];
        for f in &self.symbols {
            out.extend(smaller.iter().map(|t| Term::fun(f.clone(), t.clone())));
        }
        for a in &self.atoms {
            out.extend(smaller.iter().map(|t| Term::abs(a.clone(), t.clone())));
        }
        for left in 1..n - 1 {
            let right = n - 1 - left;
            for l in &self.levels[left] {
                for r in &self.levels[right] {
                    out.push(Term::pair(l.clone(), r.clone()));
                }
            }
        }
        out
    }

    /// All terms of size `1..=max_size`, smallest first.
    pub fn up_to(&mut self, max_size: usize) -> Vec<Term> {
        self.terms_of_size(max_size);
        self.levels[1..=max_size].iter().flatten().cloned().collect()
    }
}

/// Every term of size at most `max_size` over the given atoms and variables,
/// with the single function symbol `f`.
pub fn enumerate_terms(
    max_size: usize,
    atoms: impl IntoIterator<Item = Atom>,
    vars: impl IntoIterator<Item = VarName>,
) -> Vec<Term> {
    assert!(max_size >= 1, "max_size must be at least 1");
    Enumerator::new(atoms, vars).up_to(max_size)
}
