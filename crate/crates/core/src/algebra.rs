//! Monomial ideals and componentwise monomial submodules of free modules.
//!
//! Every associated prime of a monomial ideal is generated by variables, so a
//! prime is just a subset `S ⊆ [n]`. Primary decompositions are computed by
//! splitting generators: if a minimal generator factors as `u·v` with disjoint
//! supports then `I = (I + (u)) ∩ (I + (v))`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Polynomial};
use crate::vars::{var_name, VarSet};
use crate::MAX_VARS;

/// The prime `(σ_i : i ∈ S)`; the empty `S` is the zero ideal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MonPrime {
    pub n: usize,
    pub vars: VarSet,
}

impl MonPrime {
    pub fn new(n: usize, vars: VarSet) -> MonPrime {
        MonPrime { n, vars }
    }

    pub fn codim(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn to_ideal(&self) -> MonIdeal {
        MonIdeal::from_minimal(self.n, self.vars.iter().map(|i| Monomial::var(self.n, i)).collect())
    }
}

impl Ord for MonPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.vars.len(), self.vars.iter().collect::<Vec<_>>()).cmp(&(
            other.n,
            other.vars.len(),
            other.vars.iter().collect::<Vec<_>>(),
        ))
    }
}

impl PartialOrd for MonPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return f.write_str("(0)");
        }
        let names: Vec<String> = self.vars.iter().map(|i| var_name(self.n, i)).collect();
        write!(f, "({})", names.join(", "))
    }
}

/// Which minimal generator the splitting oracle factors first.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SplitStrategy {
    #[default]
    First,
    Last,
}

/// A monomial ideal, stored by its unique minimal generating set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| !gens.iter().enumerate().any(|(j, h)| j != i && h.divides(g)))
        .collect();
    let mut out: Vec<Monomial> = gens.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

impl MonIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<MonIdeal> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables(n));
        }
        for g in &gens {
            g.check_n(n)?;
        }
        Ok(MonIdeal::from_minimal(n, gens))
    }

    fn from_minimal(n: usize, gens: Vec<Monomial>) -> MonIdeal {
        MonIdeal { n, gens: minimize(gens) }
    }

    pub fn zero(n: usize) -> MonIdeal {
        MonIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> MonIdeal {
        MonIdeal { n, gens: vec![Monomial::one(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators, in descending lexicographic order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Membership of a polynomial: every monomial must lie in the ideal.
    pub fn contains(&self, p: &Polynomial) -> bool {
        p.terms().all(|(m, _)| self.contains_monomial(m))
    }

    pub fn is_subset(&self, other: &MonIdeal) -> bool {
        self.gens.iter().all(|g| other.contains_monomial(g))
    }

    fn same_n(&self, other: &MonIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn intersect(&self, other: &MonIdeal) -> Result<MonIdeal> {
        self.same_n(other)?;
        let gens = self.gens.iter().flat_map(|u| other.gens.iter().map(move |v| u.lcm(v))).collect();
        Ok(MonIdeal::from_minimal(self.n, gens))
    }

    pub fn sum(&self, other: &MonIdeal) -> Result<MonIdeal> {
        self.same_n(other)?;
        Ok(MonIdeal::from_minimal(self.n, self.gens.iter().chain(&other.gens).cloned().collect()))
    }

    fn with_gen(&self, m: Monomial) -> MonIdeal {
        let mut gens = self.gens.clone();
        gens.push(m);
        MonIdeal::from_minimal(self.n, gens)
    }

    pub fn support(&self) -> VarSet {
        self.gens.iter().fold(VarSet::EMPTY, |s, g| s.union(g.support()))
    }

    /// The prime `p` if the ideal is `p`-primary.
    ///
    /// A proper monomial ideal is primary iff every variable occurring in a
    /// minimal generator also occurs as a pure power among them.
    pub fn is_primary(&self) -> Option<MonPrime> {
        if self.is_unit() {
            return None;
        }
        let s = self.support();
        let pure = self
            .gens
            .iter()
            .filter(|g| g.support().len() == 1)
            .fold(VarSet::EMPTY, |acc, g| acc.union(g.support()));
        (pure == s).then_some(MonPrime::new(self.n, s))
    }

    /// Minimal primary decomposition by generator splitting, sorted by prime.
    pub fn primary_decomposition_oracle(&self) -> Result<Vec<MonIdeal>> {
        self.primary_decomposition_oracle_with(SplitStrategy::First)
    }

    pub fn primary_decomposition_oracle_with(&self, strategy: SplitStrategy) -> Result<Vec<MonIdeal>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::NotProper);
        }
        let mut leaves = Vec::new();
        self.split(strategy, &mut leaves);

        let mut by_prime: BTreeMap<MonPrime, MonIdeal> = BTreeMap::new();
        for q in leaves {
            let p = q.is_primary().expect("splitting leaves are primary");
            let merged = match by_prime.remove(&p) {
                Some(prev) => prev.intersect(&q)?,
                None => q,
            };
            by_prime.insert(p, merged);
        }

        let mut comps: Vec<MonIdeal> = by_prime.into_values().collect();
        // Drop redundant components, trying the deepest primes first.
        loop {
            let redundant = (0..comps.len()).rev().find(|&k| {
                let rest: Vec<MonIdeal> =
                    comps.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, c)| c.clone()).collect();
                intersect_all(self.n, &rest) == *self
            });
            match redundant {
                Some(k) => {
                    comps.remove(k);
                }
                None => break,
            }
        }
        Ok(comps)
    }

    fn split(&self, strategy: SplitStrategy, out: &mut Vec<MonIdeal>) {
        let mixed = |g: &&Monomial| g.support().len() >= 2;
        let pick = match strategy {
            SplitStrategy::First => self.gens.iter().find(mixed),
            SplitStrategy::Last => self.gens.iter().rev().find(mixed),
        };
        let Some(m) = pick else {
            out.push(self.clone());
            return;
        };
        let support: Vec<usize> = m.support().iter().collect();
        let i = match strategy {
            SplitStrategy::First => support[0],
            SplitStrategy::Last => support[support.len() - 1],
        };
        let u = Monomial::var_pow(self.n, i, m.exps()[i]);
        let v = m.div(&u);
        self.with_gen(u).split(strategy, out);
        self.with_gen(v).split(strategy, out);
    }

    /// Associated primes, sorted.
    pub fn ass_primes(&self) -> Result<Vec<MonPrime>> {
        Ok(self
            .primary_decomposition_oracle()?
            .iter()
            .map(|q| q.is_primary().expect("components are primary"))
            .collect())
    }

    /// Rename variables: variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> MonIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; self.n];
                for (i, &k) in g.exps().iter().enumerate() {
                    e[perm[i]] = k;
                }
                Monomial(e)
            })
            .collect();
        MonIdeal::from_minimal(self.n, gens)
    }
}

/// Intersection of a list of ideals; the empty intersection is the unit ideal.
pub fn intersect_all(n: usize, ideals: &[MonIdeal]) -> MonIdeal {
    ideals.iter().fold(MonIdeal::unit(n), |acc, i| acc.intersect(i).expect("same n"))
}

impl fmt::Display for MonIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(", "))
    }
}

/// A submodule `⊕_k I_k e_k` of the free module of rank `r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonModule {
    n: usize,
    components: Vec<MonIdeal>,
}

impl MonModule {
    pub fn from_components(components: Vec<MonIdeal>) -> Result<MonModule> {
        let n = components.first().map(MonIdeal::n).ok_or(Error::RankMismatch { expected: 1, found: 0 })?;
        for c in &components {
            if c.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.n() });
            }
        }
        Ok(MonModule { n, components })
    }

    pub fn from_ideal(i: MonIdeal) -> MonModule {
        MonModule { n: i.n(), components: vec![i] }
    }

    /// Build from generators `(basis index, monomial)` with 0-based basis index.
    pub fn from_gens(n: usize, rank: usize, gens: Vec<(usize, Monomial)>) -> Result<MonModule> {
        if rank == 0 {
            return Err(Error::RankMismatch { expected: 1, found: 0 });
        }
        let mut per: Vec<Vec<Monomial>> = vec![Vec::new(); rank];
        for (k, m) in gens {
            if k >= rank {
                return Err(Error::RankMismatch { expected: rank, found: k + 1 });
            }
            per[k].push(m);
        }
        let components = per.into_iter().map(|g| MonIdeal::new(n, g)).collect::<Result<_>>()?;
        Ok(MonModule { n, components })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MonIdeal] {
        &self.components
    }

    pub fn gens(&self) -> Vec<(usize, Monomial)> {
        self.components.iter().enumerate().flat_map(|(k, c)| c.gens().iter().map(move |g| (k, g.clone()))).collect()
    }

    pub fn is_proper(&self) -> bool {
        self.components.iter().any(MonIdeal::is_proper)
    }

    fn same_shape(&self, other: &MonModule) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: other.rank() });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        if v.len() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: v.len() });
        }
        Ok(self.components.iter().zip(v).all(|(c, p)| c.contains(p)))
    }

    pub fn intersect(&self, other: &MonModule) -> Result<MonModule> {
        self.same_shape(other)?;
        let components =
            self.components.iter().zip(&other.components).map(|(a, b)| a.intersect(b)).collect::<Result<_>>()?;
        Ok(MonModule { n: self.n, components })
    }

    /// The prime `p` if the quotient of the free module by `self` has `p` as
    /// its only associated prime.
    pub fn is_primary(&self) -> Option<MonPrime> {
        let mut primes = self.components.iter().filter(|c| c.is_proper()).map(MonIdeal::is_primary);
        let first = primes.next()??;
        primes.all(|p| p == Some(first)).then_some(first)
    }

    /// Minimal primary decomposition `p ↦ Q_p`, computed componentwise and
    /// regrouped by prime. Zero components contribute the prime `(0)`.
    pub fn primary_decomposition_oracle(&self) -> Result<Vec<(MonPrime, MonModule)>> {
        if !self.is_proper() {
            return Err(Error::NotProper);
        }
        let rank = self.rank();
        let mut out: BTreeMap<MonPrime, Vec<MonIdeal>> = BTreeMap::new();
        for (k, c) in self.components.iter().enumerate() {
            if c.is_unit() {
                continue;
            }
            let comps = if c.is_zero() { vec![c.clone()] } else { c.primary_decomposition_oracle()? };
            for q in comps {
                let p = q.is_primary().expect("primary component");
                out.entry(p).or_insert_with(|| vec![MonIdeal::unit(self.n); rank])[k] = q;
            }
        }
        Ok(out.into_iter().map(|(p, components)| (p, MonModule { n: self.n, components })).collect())
    }

    pub fn ass_primes(&self) -> Result<Vec<MonPrime>> {
        Ok(self.primary_decomposition_oracle()?.into_iter().map(|(p, _)| p).collect())
    }
}

/// Intersection of modules of equal rank; the empty intersection is the free module.
pub fn intersect_all_modules(n: usize, rank: usize, modules: &[MonModule]) -> MonModule {
    let full = MonModule { n, components: vec![MonIdeal::unit(n); rank] };
    modules.iter().fold(full, |acc, m| acc.intersect(m).expect("same shape"))
}

impl fmt::Display for MonModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 1 {
            return self.components[0].fmt(f);
        }
        let gens = self.gens();
        if gens.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = gens.iter().map(|(k, m)| format!("e{}: {m}", k + 1)).collect();
        f.write_str(&parts.join(", "))
    }
}
