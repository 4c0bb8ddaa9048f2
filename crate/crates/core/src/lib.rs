//! Nominal unification over first-order terms with binders.
//!
//! * [`term`]: atoms, variables, permutations and nominal terms.
//! * [`judgement`]: freshness, alpha-equivalence and weak equivalence.
//! * [`subst`]: capturing substitution.
//! * [`unify`]: the rewrite-rule unifier.
//! * [`oracle`]: nameless ground alpha-equivalence and term enumeration.
//! * [`sweep`]: batch differential checks and bulk solving.
//! * [`syntax`]: parser and printer for the concrete syntax.
//! * [`cli`]: the `nomunify` command.

pub mod cli;
pub mod judgement;
pub mod oracle;
pub mod subst;
pub mod sweep;
pub mod syntax;
pub mod term;
pub mod unify;

pub use judgement::{alpha_eq, fresh, weak_eq, FreshnessEnv};
pub use subst::Subst;
pub use syntax::{parse_problem_file, parse_term, ParseError};
pub use term::{Atom, Permutation, Swapping, Term, VarName};
pub use unify::{solve, validate, FailureKind, ProblemSet, Solution, UnifProblem, UnifyError};
