//! Seeded random generation of terms, environments, permutations and
//! problem sets, plus perturbations that tend to preserve `≈` or `~` so that
//! implication-shaped properties see enough satisfied premises.
#![allow(dead_code)]

use nomunify::{
    fresh, Atom, FreshnessEnv, Permutation, ProblemSet, Subst, Swapping, Term, UnifProblem, VarName,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Gen {
    pub rng: ChaCha8Rng,
    pub atoms: Vec<Atom>,
    pub vars: Vec<VarName>,
    pub symbols: Vec<&'static str>,
    pub max_swaps: usize,
}

impl Gen {
    /// Four atoms, three variables, permutations of at most three swappings.
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            atoms: ["a", "b", "c", "d"].into_iter().map(Atom::new).collect(),
            vars: ["X", "Y", "Z"].into_iter().map(VarName::new).collect(),
            symbols: vec!["f", "g"],
            max_swaps: 3,
        }
    }

    pub fn atom(&mut self) -> Atom {
        self.atoms.choose(&mut self.rng).unwrap().clone()
    }

    pub fn var(&mut self) -> VarName {
        self.vars.choose(&mut self.rng).unwrap().clone()
    }

    pub fn perm(&mut self) -> Permutation {
        let n = self.rng.gen_range(0..=self.max_swaps);
        let swaps = (0..n).map(|_| Swapping::new(self.atom(), self.atom())).collect();
        Permutation::from_swaps(swaps)
    }

    pub fn env(&mut self) -> FreshnessEnv {
        let n = self.rng.gen_range(0..=6);
        (0..n).map(|_| (self.atom(), self.var())).collect()
    }

    fn leaf(&mut self, ground: bool) -> Term {
        let choices = if ground { 2 } else { 3 };
        match self.rng.gen_range(0..choices) {
            0 => Term::Unit,
            1 => Term::Atom(self.atom()),
            _ => Term::Susp(self.perm(), self.var()),
        }
    }

    fn build(&mut self, depth: usize, ground: bool) -> Term {
        if depth == 0 || self.rng.gen_bool(0.25) {
            return self.leaf(ground);
        }
        match self.rng.gen_range(0..4) {
            0 => Term::pair(self.build(depth - 1, ground), self.build(depth - 1, ground)),
            1 => {
                let f = *self.symbols.choose(&mut self.rng).unwrap();
                Term::fun(f, self.build(depth - 1, ground))
            }
            _ => {
                let a = self.atom();
                Term::abs(a, self.build(depth - 1, ground))
            }
        }
    }

    /// A term of depth at most `depth`.
    pub fn term(&mut self, depth: usize) -> Term {
        self.build(depth, false)
    }

    pub fn ground_term(&mut self, depth: usize) -> Term {
        self.build(depth, true)
    }

    /// Atoms fresh for `t` under `env`.
    pub fn fresh_atoms(&self, env: &FreshnessEnv, t: &Term) -> Vec<Atom> {
        self.atoms.iter().filter(|a| fresh(env, a, t)).cloned().collect()
    }

    /// A permutation built only from atoms fresh for `t`, so that `π·t ≈ t`.
    pub fn fresh_perm_for(&mut self, env: &FreshnessEnv, t: &Term) -> Permutation {
        let pool = self.fresh_atoms(env, t);
        if pool.is_empty() {
            return Permutation::identity();
        }
        let n = self.rng.gen_range(1..=self.max_swaps);
        let swaps = (0..n)
            .map(|_| {
                Swapping::new(
                    pool.choose(&mut self.rng).unwrap().clone(),
                    pool.choose(&mut self.rng).unwrap().clone(),
                )
            })
            .collect();
        Permutation::from_swaps(swaps)
    }

    /// Pads `p` with swappings that cancel, giving an extensionally equal
    /// but syntactically different permutation.
    pub fn same_action(&mut self, p: &Permutation) -> Permutation {
        let (x, y) = (self.atom(), self.atom());
        let pad = match self.rng.gen_range(0..3) {
            0 => vec![Swapping::new(x.clone(), x)],
            1 => vec![Swapping::new(x.clone(), y.clone()), Swapping::new(x, y)],
            _ => vec![Swapping::new(x.clone(), y.clone()), Swapping::new(y, x)],
        };
        let pad = Permutation::from_swaps(pad);
        if self.rng.gen_bool(0.5) {
            p.compose(&pad)
        } else {
            pad.compose(p)
        }
    }

    /// Replaces suspended permutations by extensionally equal ones.
    pub fn weak_variant(&mut self, t: &Term) -> Term {
        match t {
            Term::Unit | Term::Atom(_) => t.clone(),
            Term::Pair(l, r) => Term::pair(self.weak_variant(l), self.weak_variant(r)),
            Term::Fun(f, s) => Term::fun(f.clone(), self.weak_variant(s)),
            Term::Abs(a, s) => Term::abs(a.clone(), self.weak_variant(s)),
            Term::Susp(p, x) => {
                if self.rng.gen_bool(0.5) {
                    Term::Susp(self.same_action(p), x.clone())
                } else {
                    t.clone()
                }
            }
        }
    }

    /// A term that is usually `≈`-equal to `t` under `env`: binders are
    /// renamed to fresh atoms and suspended permutations are extended by
    /// swappings of atoms the environment makes fresh for the variable.
    pub fn alpha_variant(&mut self, env: &FreshnessEnv, t: &Term) -> Term {
        match t {
            Term::Unit | Term::Atom(_) => t.clone(),
            Term::Pair(l, r) => Term::pair(self.alpha_variant(env, l), self.alpha_variant(env, r)),
            Term::Fun(f, s) => Term::fun(f.clone(), self.alpha_variant(env, s)),
            Term::Abs(a, s) => {
                let body = self.alpha_variant(env, s);
                let b = self.atom();
                if b != *a && self.rng.gen_bool(0.6) && fresh(env, &b, &body) {
                    let renamed = Permutation::swapping(a.clone(), b.clone()).apply_term(&body);
                    Term::abs(b, renamed)
                } else {
                    Term::abs(a.clone(), body)
                }
            }
            Term::Susp(p, x) => {
                let allowed: Vec<Atom> = self
                    .atoms
                    .iter()
                    .filter(|c| env.contains(c, x))
                    .cloned()
                    .collect();
                match self.rng.gen_range(0..3) {
                    0 if !allowed.is_empty() => {
                        let c = allowed.choose(&mut self.rng).unwrap().clone();
                        let d = allowed.choose(&mut self.rng).unwrap().clone();
                        Term::Susp(p.compose(&Permutation::swapping(c, d)), x.clone())
                    }
                    1 => Term::Susp(self.same_action(p), x.clone()),
                    _ => t.clone(),
                }
            }
        }
    }

    /// Replaces random subterms by suspensions, producing a pattern that
    /// `t` may be an instance of.
    pub fn generalise(&mut self, t: &Term) -> Term {
        if self.rng.gen_bool(0.2) {
            return Term::Susp(self.perm(), self.var());
        }
        match t {
            Term::Pair(l, r) => Term::pair(self.generalise(l), self.generalise(r)),
            Term::Fun(f, s) => Term::fun(f.clone(), self.generalise(s)),
            Term::Abs(a, s) => Term::abs(a.clone(), self.generalise(s)),
            _ => t.clone(),
        }
    }

    pub fn subst(&mut self) -> Subst {
        let mut s = Subst::new();
        for x in self.vars.clone() {
            if self.rng.gen_bool(0.4) {
                let t = self.ground_term(2);
                s.bind(x, t);
            }
        }
        s
    }

    /// One to four problems mixing equations and freshness goals. Most
    /// equations relate a term to a perturbed or generalised copy so that a
    /// good share of the sets is solvable.
    pub fn problem_set(&mut self) -> ProblemSet {
        let n = self.rng.gen_range(1..=4);
        let mut ps = ProblemSet::new();
        for _ in 0..n {
            if self.rng.gen_bool(0.2) {
                let a = self.atom();
                let t = self.term(3);
                ps.push(UnifProblem::Freshness(a, t));
                continue;
            }
            let t1 = self.term(4);
            let t2 = match self.rng.gen_range(0..4) {
                0 => self.term(4),
                1 => {
                    let env = self.env();
                    let v = self.alpha_variant(&env, &t1);
                    self.generalise(&v)
                }
                2 => {
                    let s = self.subst();
                    let g = self.generalise(&t1);
                    s.apply(&g)
                }
                _ => {
                    let env = self.env();
                    self.alpha_variant(&env, &t1)
                }
            };
            if self.rng.gen_bool(0.5) {
                ps.push(UnifProblem::Equational(t1, t2));
            } else {
                ps.push(UnifProblem::Equational(t2, t1));
            }
        }
        ps
    }
}
