//! Batch evaluation: the exhaustive ground differential sweep and bulk
//! solving.
//!
//! With the `parallel` feature (on by default) the unsuffixed entry points
//! spread the work over rayon's thread pool; without it they run
//! sequentially. Both variants are always deterministic in their results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::judgement::{alpha_eq, FreshnessEnv};
use crate::oracle::{canonicalize, CanonicalTerm, OracleError};
use crate::term::Term;
use crate::unify::{solve, ProblemSet, Solution, UnifProblem, UnifyError};

/// Outcome of comparing every ordered pair of a ground term list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub pairs: u64,
    /// Pairs the oracle considers alpha-equivalent.
    pub equivalent: u64,
    /// Index pairs where `alpha_eq` under the empty environment disagrees
    /// with the oracle.
    pub judgement_mismatches: Vec<(usize, usize)>,
    /// Index pairs where solving `t1 =? t2` disagrees with the oracle, or
    /// succeeds with a non-empty solution.
    pub unifier_mismatches: Vec<(usize, usize)>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.judgement_mismatches.is_empty() && self.unifier_mismatches.is_empty()
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.pairs += other.pairs;
        self.equivalent += other.equivalent;
        self.judgement_mismatches.extend(other.judgement_mismatches);
        self.unifier_mismatches.extend(other.unifier_mismatches);
        self
    }
}

fn check_row(i: usize, terms: &[Term], canon: &[CanonicalTerm]) -> SweepReport {
    let empty = FreshnessEnv::new();
    let mut report = SweepReport::default();
    for j in 0..terms.len() {
        let expected = canon[i] == canon[j];
        report.pairs += 1;
        if expected {
            report.equivalent += 1;
        }
        if alpha_eq(&empty, &terms[i], &terms[j]) != expected {
            report.judgement_mismatches.push((i, j));
        }
        let problem: ProblemSet = vec![UnifProblem::Equational(terms[i].clone(), terms[j].clone())].into();
        let unified = match solve(&problem) {
            Ok(sol) => sol.env.is_empty() && sol.subst.is_empty(),
            Err(_) => false,
        };
        if unified != expected {
            report.unifier_mismatches.push((i, j));
        }
    }
    report
}

pub fn differential_sweep_sequential(terms: &[Term]) -> Result<SweepReport, OracleError> {
    let canon = terms.iter().map(canonicalize).collect::<Result<Vec<_>, _>>()?;
    Ok((0..terms.len())
        .map(|i| check_row(i, terms, &canon))
        .fold(SweepReport::default(), SweepReport::merge))
}

#[cfg(feature = "parallel")]
pub fn differential_sweep_parallel(terms: &[Term]) -> Result<SweepReport, OracleError> {
    let canon = terms.par_iter().map(canonicalize).collect::<Result<Vec<_>, _>>()?;
    Ok((0..terms.len())
        .into_par_iter()
        .map(|i| check_row(i, terms, &canon))
        .reduce(SweepReport::default, SweepReport::merge))
}

/// Compares `alpha_eq`, the unifier and the nameless oracle on every ordered
/// pair of `terms`. Fails if any term is not ground.
pub fn differential_sweep(terms: &[Term]) -> Result<SweepReport, OracleError> {
    #[cfg(feature = "parallel")]
    {
        differential_sweep_parallel(terms)
    }
    #[cfg(not(feature = "parallel"))]
    {
        differential_sweep_sequential(terms)
    }
}

pub fn solve_batch_sequential(sets: &[ProblemSet]) -> Vec<Result<Solution, UnifyError>> {
    sets.iter().map(solve).collect()
}

#[cfg(feature = "parallel")]
pub fn solve_batch_parallel(sets: &[ProblemSet]) -> Vec<Result<Solution, UnifyError>> {
    sets.par_iter().map(solve).collect()
}

/// Solves each problem set independently; results are in input order.
pub fn solve_batch(sets: &[ProblemSet]) -> Vec<Result<Solution, UnifyError>> {
    #[cfg(feature = "parallel")]
    {
        solve_batch_parallel(sets)
    }
    #[cfg(not(feature = "parallel"))]
    {
        solve_batch_sequential(sets)
    }
}
