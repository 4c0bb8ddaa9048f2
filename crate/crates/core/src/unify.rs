//! Nominal unification by rewriting.
//!
//! A [`Unifier`] holds a queue of pending problems together with the
//! freshness environment and substitution built so far. Each [`Unifier::step`]
//! rewrites one problem. Equational problems are processed first, in queue
//! order; freshness problems are reduced only once no equation is left, so
//! the substitution is final by the time constraints reach the environment.
//!
//! The rules never invent atoms: every atom in a solution already occurs in
//! the input.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::judgement::{alpha_eq, fresh, FreshnessEnv};
use crate::subst::Subst;
use crate::term::{Atom, Permutation, Term, VarName};

/// `lhs ≈? rhs` or `atom #? target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum UnifProblem {
    Equational(Term, Term),
    Freshness(Atom, Term),
}

impl UnifProblem {
    pub fn eq(lhs: Term, rhs: Term) -> Self {
        UnifProblem::Equational(lhs, rhs)
    }

    pub fn fresh(a: Atom, t: Term) -> Self {
        UnifProblem::Freshness(a, t)
    }

    pub fn is_equational(&self) -> bool {
        matches!(self, UnifProblem::Equational(..))
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            UnifProblem::Equational(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            UnifProblem::Freshness(a, t) => {
                out.insert(a.clone());
                t.collect_atoms(out);
            }
        }
    }

    fn collect_vars(&self, out: &mut BTreeSet<VarName>) {
        match self {
            UnifProblem::Equational(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            UnifProblem::Freshness(_, t) => t.collect_vars(out),
        }
    }
}

impl fmt::Display for UnifProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnifProblem::Equational(l, r) => write!(f, "{l} =? {r}"),
            UnifProblem::Freshness(a, t) => write!(f, "{a} #? {t}"),
        }
    }
}

/// An ordered collection of problems. Order only affects which rule fires
/// next, never whether the set is solvable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProblemSet {
    problems: Vec<UnifProblem>,
}

impl ProblemSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, p: UnifProblem) {
        self.problems.push(p);
    }

    pub fn len(&self) -> usize {
        self.problems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.problems.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, UnifProblem> {
        self.problems.iter()
    }

    pub fn as_slice(&self) -> &[UnifProblem] {
        &self.problems
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for p in &self.problems {
            p.collect_atoms(&mut out);
        }
        out
    }

    pub fn vars(&self) -> BTreeSet<VarName> {
        let mut out = BTreeSet::new();
        for p in &self.problems {
            p.collect_vars(&mut out);
        }
        out
    }

    /// Index of the problem the next step works on: the first equation if
    /// any, otherwise the first freshness problem.
    fn head_index(&self) -> Option<usize> {
        if self.problems.is_empty() {
            return None;
        }
        Some(self.problems.iter().position(UnifProblem::is_equational).unwrap_or(0))
    }
}

impl From<Vec<UnifProblem>> for ProblemSet {
    fn from(problems: Vec<UnifProblem>) -> Self {
        ProblemSet { problems }
    }
}

impl FromIterator<UnifProblem> for ProblemSet {
    fn from_iter<I: IntoIterator<Item = UnifProblem>>(iter: I) -> Self {
        ProblemSet {
            problems: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a ProblemSet {
    type Item = &'a UnifProblem;
    type IntoIter = std::slice::Iter<'a, UnifProblem>;

    fn into_iter(self) -> Self::IntoIter {
        self.problems.iter()
    }
}

impl fmt::Display for ProblemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.problems.is_empty() {
            return f.write_str("{}");
        }
        for (i, p) in self.problems.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Solution {
    pub env: FreshnessEnv,
    pub subst: Subst,
}

impl Solution {
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = self.env.atoms();
        out.extend(self.subst.range_atoms());
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FailureKind {
    /// Distinct atoms, distinct function symbols or mismatched constructors.
    Clash,
    /// A variable unified with a non-suspension term containing it.
    OccursCheck,
    /// `a #? a`.
    FreshnessFailure,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureKind::Clash => "Clash",
            FailureKind::OccursCheck => "OccursCheck",
            FailureKind::FreshnessFailure => "FreshnessFailure",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind}: {problem}")]
pub struct UnifyError {
    pub kind: FailureKind,
    /// The subproblem on which no rule applies.
    pub problem: UnifProblem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Unit,
    Pair,
    Fun,
    Atom,
    AbsSame,
    AbsDistinct,
    SuspSame,
    Eliminate,
    FreshUnit,
    FreshPair,
    FreshFun,
    FreshAtom,
    FreshAbsSame,
    FreshAbsDistinct,
    FreshSusp,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Unit => "unit",
            Rule::Pair => "pair",
            Rule::Fun => "fun",
            Rule::Atom => "atom",
            Rule::AbsSame => "abs-same",
            Rule::AbsDistinct => "abs-distinct",
            Rule::SuspSame => "susp-same",
            Rule::Eliminate => "eliminate",
            Rule::FreshUnit => "fresh-unit",
            Rule::FreshPair => "fresh-pair",
            Rule::FreshFun => "fresh-fun",
            Rule::FreshAtom => "fresh-atom",
            Rule::FreshAbsSame => "fresh-abs-same",
            Rule::FreshAbsDistinct => "fresh-abs-distinct",
            Rule::FreshSusp => "fresh-susp",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a rewrite produced besides removing its problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Effect {
    /// New subproblems appended to the queue (possibly none).
    Problems(Vec<UnifProblem>),
    /// A binding composed into the substitution and applied to the queue.
    Bind(VarName, Term),
    /// A constraint added to the freshness environment.
    Constraint(Atom, VarName),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub before: UnifProblem,
    pub effect: Effect,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ==> ", self.rule, self.before)?;
        match &self.effect {
            Effect::Problems(ps) if ps.is_empty() => f.write_str("{}"),
            Effect::Problems(ps) => {
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Effect::Bind(x, t) => write!(f, "[{x} := {t}]"),
            Effect::Constraint(a, x) => write!(f, "{a}#{x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Progress {
    Stepped(Step),
    Finished,
}

/// Solver state: pending problems plus the partial solution.
#[derive(Clone, Debug)]
pub struct Unifier {
    pending: ProblemSet,
    env: FreshnessEnv,
    subst: Subst,
}

impl Unifier {
    pub fn new(problems: ProblemSet) -> Self {
        Unifier {
            pending: problems,
            env: FreshnessEnv::new(),
            subst: Subst::new(),
        }
    }

    pub fn pending(&self) -> &ProblemSet {
        &self.pending
    }

    pub fn env(&self) -> &FreshnessEnv {
        &self.env
    }

    pub fn subst(&self) -> &Subst {
        &self.subst
    }

    /// Rewrites the head problem, or reports that nothing is pending.
    pub fn step(&mut self) -> Result<Progress, UnifyError> {
        let Some(idx) = self.pending.head_index() else {
            return Ok(Progress::Finished);
        };
        let head = self.pending.problems.remove(idx);
        let (rule, effect) = match &head {
            UnifProblem::Equational(l, r) => rewrite_equation(l, r)
                .ok_or_else(|| UnifyError {
                    kind: equation_failure(l, r),
                    problem: head.clone(),
                })?,
            UnifProblem::Freshness(a, t) => rewrite_freshness(a, t).ok_or_else(|| UnifyError {
                kind: FailureKind::FreshnessFailure,
                problem: head.clone(),
            })?,
        };
        match &effect {
            Effect::Problems(ps) => self.pending.problems.extend(ps.iter().cloned()),
            Effect::Bind(x, t) => {
                let binding = Subst::singleton(x.clone(), t.clone());
                self.pending = binding.apply_problemset(&self.pending);
                self.subst = self.subst.then(&binding);
            }
            Effect::Constraint(a, x) => {
                self.env.insert(a.clone(), x.clone());
            }
        }
        Ok(Progress::Stepped(Step {
            rule,
            before: head,
            effect,
        }))
    }

    pub fn run(self) -> Result<Solution, UnifyError> {
        self.run_traced(|_| {})
    }

    /// Runs to completion, handing every step to `observe`.
    pub fn run_traced(mut self, mut observe: impl FnMut(&Step)) -> Result<Solution, UnifyError> {
        loop {
            match self.step()? {
                Progress::Stepped(step) => observe(&step),
                Progress::Finished => {
                    return Ok(Solution {
                        env: self.env,
                        subst: self.subst,
                    })
                }
            }
        }
    }
}

fn rewrite_equation(l: &Term, r: &Term) -> Option<(Rule, Effect)> {
    use Term::*;
    let out = match (l, r) {
        (Susp(p, x), Susp(q, y)) if x == y => {
            let problems = p
                .disagreement(q)
                .into_iter()
                .map(|a| UnifProblem::Freshness(a, Term::Susp(Permutation::identity(), x.clone())))
                .collect();
            (Rule::SuspSame, Effect::Problems(problems))
        }
        // Distinct variables: bind the right-hand one.
        (Susp(..), Susp(q, y)) => (Rule::Eliminate, Effect::Bind(y.clone(), q.inverse().apply_term(l))),
        (Susp(p, x), t) | (t, Susp(p, x)) => {
            if t.mentions_var(x) {
                return None;
            }
            (Rule::Eliminate, Effect::Bind(x.clone(), p.inverse().apply_term(t)))
        }
        (Unit, Unit) => (Rule::Unit, Effect::Problems(Vec::new())),
        (Atom(a), Atom(b)) if a == b => (Rule::Atom, Effect::Problems(Vec::new())),
        (Pair(l1, r1), Pair(l2, r2)) => (
            Rule::Pair,
            Effect::Problems(vec![
                UnifProblem::Equational((**l1).clone(), (**l2).clone()),
                UnifProblem::Equational((**r1).clone(), (**r2).clone()),
            ]),
        ),
        (Fun(f, s1), Fun(g, s2)) if f == g => (
            Rule::Fun,
            Effect::Problems(vec![UnifProblem::Equational((**s1).clone(), (**s2).clone())]),
        ),
        (Abs(a, s1), Abs(b, s2)) if a == b => (
            Rule::AbsSame,
            Effect::Problems(vec![UnifProblem::Equational((**s1).clone(), (**s2).clone())]),
        ),
        (Abs(a, s1), Abs(b, s2)) => {
            let swapped = Permutation::swapping(a.clone(), b.clone()).apply_term(s2);
            (
                Rule::AbsDistinct,
                Effect::Problems(vec![
                    UnifProblem::Equational((**s1).clone(), swapped),
                    UnifProblem::Freshness(a.clone(), (**s2).clone()),
                ]),
            )
        }
        _ => return None,
    };
    Some(out)
}

/// Only called once `rewrite_equation` has found no applicable rule.
fn equation_failure(l: &Term, r: &Term) -> FailureKind {
    match (l, r) {
        (Term::Susp(..), _) | (_, Term::Susp(..)) => FailureKind::OccursCheck,
        _ => FailureKind::Clash,
    }
}

fn rewrite_freshness(a: &Atom, t: &Term) -> Option<(Rule, Effect)> {
    let out = match t {
        Term::Unit => (Rule::FreshUnit, Effect::Problems(Vec::new())),
        Term::Pair(l, r) => (
            Rule::FreshPair,
            Effect::Problems(vec![
                UnifProblem::Freshness(a.clone(), (**l).clone()),
                UnifProblem::Freshness(a.clone(), (**r).clone()),
            ]),
        ),
        Term::Fun(_, arg) => (
            Rule::FreshFun,
            Effect::Problems(vec![UnifProblem::Freshness(a.clone(), (**arg).clone())]),
        ),
        Term::Atom(b) if a == b => return None,
        Term::Atom(_) => (Rule::FreshAtom, Effect::Problems(Vec::new())),
        Term::Abs(b, _) if a == b => (Rule::FreshAbsSame, Effect::Problems(Vec::new())),
        Term::Abs(_, body) => (
            Rule::FreshAbsDistinct,
            Effect::Problems(vec![UnifProblem::Freshness(a.clone(), (**body).clone())]),
        ),
        Term::Susp(p, x) => (Rule::FreshSusp, Effect::Constraint(p.inverse().apply_atom(a), x.clone())),
    };
    Some(out)
}

pub fn solve(problems: &ProblemSet) -> Result<Solution, UnifyError> {
    Unifier::new(problems.clone()).run()
}

pub fn occurs(x: &VarName, t: &Term) -> bool {
    t.mentions_var(x)
}

/// Checks that `solution` makes every problem in `original` derivable.
pub fn validate(solution: &Solution, original: &ProblemSet) -> bool {
    let Solution { env, subst } = solution;
    original.iter().all(|p| match p {
        UnifProblem::Equational(l, r) => alpha_eq(env, &subst.apply(l), &subst.apply(r)),
        UnifProblem::Freshness(a, t) => fresh(env, a, &subst.apply(t)),
    })
}
