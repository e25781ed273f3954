//! Annihilators of currents and the decomposition `R = Σ_p R^p` over the
//! associated primes of a monomial ideal or module.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{intersect_all_modules, MonIdeal, MonModule, MonPrime};
use crate::calculus::{coleff_herrera, is_monomial_complete_intersection, mul_monomial};
use crate::constructible::OmegaSet;
use crate::current::{Current, Factor, Piece};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, Polynomial};
use crate::vars::VarSet;

/// Seed of the randomized certification pass when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

/// Number of random subset trials in the certification pass.
pub const CERTIFICATION_TRIALS: usize = 200;

/// A current with values in `Hom(O^{r0}, ·)`: it acts on a column vector
/// `φ` by `Σ_k component_k · φ_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurrentVector {
    n: usize,
    components: Vec<Current>,
}

impl CurrentVector {
    pub fn new(components: Vec<Current>) -> Result<CurrentVector> {
        let n = components.first().map(Current::n).ok_or(Error::RankMismatch { expected: 1, found: 0 })?;
        for c in &components {
            c.check_n(n)?;
        }
        Ok(CurrentVector { n, components })
    }

    pub fn single(t: Current) -> CurrentVector {
        CurrentVector { n: t.n(), components: vec![t] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Current] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Current::is_zero)
    }

    pub fn map(&self, f: impl Fn(&Current) -> Result<Current>) -> Result<CurrentVector> {
        Ok(CurrentVector { n: self.n, components: self.components.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn add(&self, other: &CurrentVector) -> Result<CurrentVector> {
        self.check_rank(other.rank())?;
        let components =
            self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(CurrentVector { n: self.n, components })
    }

    pub fn sub(&self, other: &CurrentVector) -> Result<CurrentVector> {
        self.add(&other.map(|c| Ok(c.neg()))?)
    }

    pub fn zero_like(&self) -> CurrentVector {
        CurrentVector { n: self.n, components: vec![Current::zero(self.n); self.rank()] }
    }

    fn check_rank(&self, r: usize) -> Result<()> {
        if r != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: r });
        }
        Ok(())
    }

    /// `Σ_k φ_k · T_k`.
    pub fn apply(&self, phi: &[Polynomial]) -> Result<Current> {
        self.check_rank(phi.len())?;
        let mut acc = Current::zero(self.n);
        for (p, t) in phi.iter().zip(&self.components) {
            if p.n() != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, found: p.n() });
            }
            for (m, c) in p.terms() {
                acc = acc.add(&mul_monomial(m, t)?.scale(c))?;
            }
        }
        Ok(acc)
    }

    pub fn restrict(&self, w: &OmegaSet) -> Result<CurrentVector> {
        self.map(|c| w.restrict(c))
    }

    pub fn bidegree_part(&self, q: usize) -> CurrentVector {
        CurrentVector { n: self.n, components: self.components.iter().map(|c| c.bidegree_part(q)).collect() }
    }
}

impl fmt::Display for CurrentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Whether `φ T = 0`.
pub fn kills(phi: &[Polynomial], t: &CurrentVector) -> Result<bool> {
    Ok(t.apply(phi)?.is_zero())
}

fn max_res_exponents(n: usize, t: &Current) -> Vec<u32> {
    let mut b = vec![0; n];
    for term in t.terms() {
        for (i, f) in term.factors.iter().enumerate() {
            if let Factor::Res(a) = f {
                b[i] = b[i].max(*a);
            }
        }
    }
    b
}

/// All exponent vectors `e` with `e_i <= bound_i`.
fn box_monomials(bound: &[u32]) -> Vec<Monomial> {
    let mut out = vec![Monomial(Vec::with_capacity(bound.len()))];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|m| {
                (0..=b).map(move |k| {
                    let mut e = m.0.clone();
                    e.push(k);
                    Monomial(e)
                })
            })
            .collect();
    }
    out
}

type Key = (Vec<Factor>, Piece);

fn image(m: &Monomial, t: &Current) -> BTreeMap<Key, BigRational> {
    let prod = mul_monomial(m, t).expect("same n");
    prod.terms()
        .iter()
        .flat_map(|term| term.coeff.pieces().map(move |(p, c)| ((term.factors.clone(), p.clone()), c.clone())))
        .collect()
}

/// A nonzero rational vector `c` with `Σ c_j cols_j = 0`, if the columns are dependent.
fn null_vector(cols: &[&BTreeMap<Key, BigRational>]) -> Option<Vec<BigRational>> {
    let keys: BTreeSet<&Key> = cols.iter().flat_map(|c| c.keys()).collect();
    let mut rows: Vec<Vec<BigRational>> = keys
        .iter()
        .map(|k| cols.iter().map(|c| c.get(*k).cloned().unwrap_or_else(BigRational::zero)).collect())
        .collect();
    let ncols = cols.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, pr);
        let inv = BigRational::one() / rows[r][col].clone();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut v = vec![BigRational::zero(); ncols];
    v[free] = BigRational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -rows[row][free].clone();
    }
    Some(v)
}

/// The monomial annihilator of `T`, certified against non-monomial killers.
pub fn annihilator(t: &CurrentVector) -> Result<MonModule> {
    annihilator_with_seed(t, DEFAULT_SEED)
}

pub fn annihilator_with_seed(t: &CurrentVector, seed: u64) -> Result<MonModule> {
    let n = t.n();
    let rank = t.rank();

    // Monomial killers: m·T_k vanishes iff every term has a residue factor
    // whose exponent m reaches, so minimal killers lie below the largest
    // residue exponent in each variable.
    let mut components = Vec::with_capacity(rank);
    for c in t.components() {
        if c.is_zero() {
            components.push(MonIdeal::unit(n));
            continue;
        }
        let killers: Vec<Monomial> = box_monomials(&max_res_exponents(n, c))
            .into_iter()
            .filter(|m| mul_monomial(m, c).map(|p| p.is_zero()).unwrap_or(false))
            .collect();
        components.push(MonIdeal::new(n, killers)?);
    }
    let module = MonModule::from_components(components)?;

    if let Some(witness) = certify(t, &module, seed) {
        return Err(Error::NonMonomialAnnihilator { witness });
    }
    Ok(module)
}

/// Search for a killer whose monomials all lie outside `module`.
fn certify(t: &CurrentVector, module: &MonModule, seed: u64) -> Option<Vec<Polynomial>> {
    let n = t.n();
    let max_res = t.components().iter().flat_map(|c| max_res_exponents(n, c)).max().unwrap_or(0);
    let max_coeff = t
        .components()
        .iter()
        .flat_map(|c| c.terms().iter().flat_map(|term| term.coeff.pieces().map(|(p, _)| p.alpha.degree())))
        .max()
        .unwrap_or(0);
    let bound = vec![max_res + max_coeff + 1; n];
    let monos = box_monomials(&bound);

    let mut cands: Vec<(usize, Monomial, BTreeMap<Key, BigRational>)> = Vec::new();
    for (k, c) in t.components().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for m in &monos {
            if !module.components()[k].contains_monomial(m) {
                let img = image(m, c);
                cands.push((k, m.clone(), img));
            }
        }
    }

    let witness_of = |idx: &[usize], coeffs: Vec<BigRational>| {
        let mut phi = vec![Polynomial::zero(n); t.rank()];
        for (&i, c) in idx.iter().zip(coeffs) {
            phi[cands[i].0].add_term(cands[i].1.clone(), c);
        }
        phi
    };

    // Deterministic pass: dependencies among images with identical support.
    let mut groups: BTreeMap<Vec<&Key>, Vec<usize>> = BTreeMap::new();
    for (i, (_, _, img)) in cands.iter().enumerate() {
        groups.entry(img.keys().collect()).or_default().push(i);
    }
    for idx in groups.values() {
        for chunk in idx.chunks(32) {
            let cols: Vec<_> = chunk.iter().map(|&i| &cands[i].2).collect();
            if let Some(v) = null_vector(&cols) {
                return Some(witness_of(chunk, v));
            }
        }
    }

    // Randomized pass: small random subsets of candidate monomials.
    if cands.len() < 2 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<usize> = (0..cands.len()).collect();
    for _ in 0..CERTIFICATION_TRIALS {
        let size = rng.gen_range(2..=6.min(cands.len()));
        let idx: Vec<usize> = all.choose_multiple(&mut rng, size).copied().collect();
        let cols: Vec<_> = idx.iter().map(|&i| &cands[i].2).collect();
        if let Some(v) = null_vector(&cols) {
            return Some(witness_of(&idx, v));
        }
    }
    None
}

/// `R 1_{V(p) \ ∪_{q ⊋ p} V(q)}` over the given associated primes.
pub fn r_p(r: &CurrentVector, p: &MonPrime, ass: &[MonPrime]) -> Result<CurrentVector> {
    if p.is_zero() {
        return Err(Error::ZeroPrimeAssociated);
    }
    if !ass.contains(p) {
        return Err(Error::NotAssociated(*p));
    }
    let n = r.n();
    let mut w = OmegaSet::coord_variety(n, p.vars)?;
    for q in ass {
        if p.vars.is_subset(q.vars) && q.vars != p.vars {
            w = w.difference(&OmegaSet::coord_variety(n, q.vars)?)?;
        }
    }
    r.restrict(&w)
}

/// Whether `1_{V'} T = 0` for every coordinate variety `V' ⊊ V(p)`.
pub fn sep_check(t: &CurrentVector, p: &MonPrime) -> Result<bool> {
    let n = t.n();
    for s in 0..(1u32 << n) {
        let s = VarSet(s as u16);
        if p.vars.is_subset(s) && s != p.vars && !t.restrict(&OmegaSet::coord_variety(n, s)?)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `ann R^p = ann R^p_q` with `q = codim p`.
pub fn lemma_bell_check(rp: &CurrentVector, p: &MonPrime) -> Result<bool> {
    lemma_bell_check_with_seed(rp, p, DEFAULT_SEED)
}

pub fn lemma_bell_check_with_seed(rp: &CurrentVector, p: &MonPrime, seed: u64) -> Result<bool> {
    let full = annihilator_with_seed(rp, seed)?;
    let part = annihilator_with_seed(&rp.bidegree_part(p.codim()), seed)?;
    Ok(full == part)
}

/// Whether `ann(∂̄[1/f_1] ∧ … ∧ ∂̄[1/f_q]) = (f_1, …, f_q)`.
pub fn duality_check(n: usize, f: &[Monomial]) -> Result<bool> {
    if !is_monomial_complete_intersection(n, f) {
        return Err(Error::NotCompleteIntersection);
    }
    let ann = annihilator(&CurrentVector::single(coleff_herrera(n, f)?))?;
    Ok(ann == MonModule::from_ideal(MonIdeal::new(n, f.to_vec())?))
}

/// Outcome of one check, with a witness when it fails.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub passed: bool,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass() -> Verdict {
        Verdict { passed: true, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Verdict {
        Verdict { passed: false, witness: Some(witness.into()) }
    }

    fn from_bool(ok: bool, witness: impl FnOnce() -> String) -> Verdict {
        if ok {
            Verdict::pass()
        } else {
            Verdict::fail(witness())
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    pub rp: CurrentVector,
    pub q: MonModule,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompositionReport {
    pub r: CurrentVector,
    pub j: MonModule,
    pub components: BTreeMap<MonPrime, Component>,
    pub sum_check: Verdict,
    pub primary_checks: BTreeMap<MonPrime, Verdict>,
    pub intersection_check: Verdict,
    pub minimality_check: Verdict,
    pub sep_checks: BTreeMap<MonPrime, Verdict>,
    pub lemma_bell_checks: BTreeMap<MonPrime, Verdict>,
}

impl DecompositionReport {
    pub fn all_passed(&self) -> bool {
        self.verdicts().all(|(_, v)| v.passed)
    }

    /// Every verdict with a label, in a fixed order.
    pub fn verdicts(&self) -> impl Iterator<Item = (String, &Verdict)> {
        fn named<'a>(name: &str, m: &'a BTreeMap<MonPrime, Verdict>) -> Vec<(String, &'a Verdict)> {
            m.iter().map(|(p, v)| (format!("{name} {p}"), v)).collect()
        }
        let mut out = vec![("sum".to_string(), &self.sum_check)];
        out.extend(named("primary", &self.primary_checks));
        out.push(("intersection".to_string(), &self.intersection_check));
        out.push(("minimality".to_string(), &self.minimality_check));
        out.extend(named("sep", &self.sep_checks));
        out.extend(named("lemma-bell", &self.lemma_bell_checks));
        out.into_iter()
    }
}

pub fn decompose(r: &CurrentVector, j: &MonModule) -> Result<DecompositionReport> {
    decompose_with_seed(r, j, DEFAULT_SEED)
}

/// Split `R` along the associated primes of `J = ann R` and verify that the
/// annihilators of the pieces form a minimal primary decomposition of `J`.
pub fn decompose_with_seed(r: &CurrentVector, j: &MonModule, seed: u64) -> Result<DecompositionReport> {
    if r.rank() != j.rank() {
        return Err(Error::RankMismatch { expected: j.rank(), found: r.rank() });
    }
    if r.n() != j.n() {
        return Err(Error::DimensionMismatch { expected: j.n(), found: r.n() });
    }
    let ass = j.ass_primes()?;
    if ass.iter().any(MonPrime::is_zero) {
        return Err(Error::ZeroPrimeAssociated);
    }
    let ann = annihilator_with_seed(r, seed)?;
    if ann != *j {
        return Err(Error::DualityMismatch { detail: format!("ann R = {ann}, J = {j}") });
    }

    let mut components = BTreeMap::new();
    for p in &ass {
        let rp = r_p(r, p, &ass)?;
        let q = annihilator_with_seed(&rp, seed).map_err(|e| match e {
            Error::NonMonomialAnnihilator { witness } => Error::ComponentAnnihilator { prime: *p, witness },
            other => other,
        })?;
        components.insert(*p, Component { rp, q });
    }

    let mut sum = r.zero_like();
    for c in components.values() {
        sum = sum.add(&c.rp)?;
    }
    let sum_check = Verdict::from_bool(sum == *r, || format!("R - sum of R^p = {}", r.sub(&sum).expect("same rank")));

    let primary_checks = components
        .iter()
        .map(|(p, c)| {
            let got = c.q.is_primary();
            let v = Verdict::from_bool(got == Some(*p), || match got {
                Some(other) => format!("ann R^p is {other}-primary"),
                None => format!("ann R^p = {} is not primary", c.q),
            });
            (*p, v)
        })
        .collect();

    let qs: Vec<MonModule> = components.values().map(|c| c.q.clone()).collect();
    let meet = intersect_all_modules(j.n(), j.rank(), &qs);
    let intersection_check = Verdict::from_bool(meet == *j, || format!("intersection = {meet}"));

    let redundant: Vec<String> = components
        .keys()
        .enumerate()
        .filter(|(k, _)| {
            let rest: Vec<MonModule> =
                qs.iter().enumerate().filter(|(i, _)| i != k).map(|(_, q)| q.clone()).collect();
            intersect_all_modules(j.n(), j.rank(), &rest) == meet
        })
        .map(|(_, p)| p.to_string())
        .collect();
    let minimality_check =
        Verdict::from_bool(redundant.is_empty(), || format!("redundant components at {}", redundant.join(", ")));

    let mut sep_checks = BTreeMap::new();
    let mut lemma_bell_checks = BTreeMap::new();
    for (p, c) in &components {
        let sep = sep_check(&c.rp, p)?;
        sep_checks.insert(*p, Verdict::from_bool(sep, || format!("R^p has mass on a subvariety of V{p}")));
        let bell = lemma_bell_check_with_seed(&c.rp, p, seed).map_err(|e| match e {
            Error::NonMonomialAnnihilator { witness } => Error::ComponentAnnihilator { prime: *p, witness },
            other => other,
        })?;
        lemma_bell_checks.insert(
            *p,
            Verdict::from_bool(bell, || format!("ann R^p differs from ann of its degree-{} part", p.codim())),
        );
    }

    Ok(DecompositionReport {
        r: r.clone(),
        j: j.clone(),
        components,
        sum_check,
        primary_checks,
        intersection_check,
        minimality_check,
        sep_checks,
        lemma_bell_checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::current::{ElementaryTerm, Factor::*};
    use num_bigint::BigInt;

    fn bare(f: &[Factor]) -> Current {
        Current::from_term(ElementaryTerm::bare(f.to_vec())).unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonModule {
        MonModule::from_ideal(MonIdeal::new(n, gens.iter().map(|g| Monomial(g.to_vec())).collect()).unwrap())
    }

    fn prime(n: usize, vars: &[usize]) -> MonPrime {
        MonPrime::new(n, VarSet::from_indices(vars.iter().copied()))
    }

    fn worked_r() -> CurrentVector {
        CurrentVector::single(bare(&[Res(1), Pv(1)]).add(&bare(&[Res(2), Res(1)])).unwrap())
    }

    #[test]
    fn kills_examples() {
        let t = CurrentVector::single(bare(&[Res(1), Pv(1)]));
        let z = Polynomial::from_monomial(Monomial(vec![1, 0]));
        assert!(kills(&[z], &t).unwrap());
        let w_minus_z = Polynomial::from_terms(2, [(Monomial(vec![0, 1]), q(1)), (Monomial(vec![1, 0]), q(-1))]);
        assert!(!kills(std::slice::from_ref(&w_minus_z), &t).unwrap());
        assert_eq!(t.apply(&[w_minus_z]).unwrap(), bare(&[Res(1), None]));
        assert!(!kills(&[Polynomial::constant(2, q(1))], &t).unwrap());
        assert!(matches!(kills(&[], &t), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn annihilator_examples() {
        let a = annihilator(&CurrentVector::single(bare(&[Res(1), Pv(1)]))).unwrap();
        assert_eq!(a, ideal(2, &[&[1, 0]]));
        let a = annihilator(&CurrentVector::single(bare(&[Res(2), Res(1)]))).unwrap();
        assert_eq!(a, ideal(2, &[&[2, 0], &[0, 1]]));
        for k in 1..=4 {
            assert_eq!(annihilator(&CurrentVector::single(bare(&[Res(k)]))).unwrap(), ideal(1, &[&[k]]));
        }
        assert_eq!(annihilator(&CurrentVector::single(Current::zero(2))).unwrap(), ideal(2, &[&[0, 0]]));
    }

    #[test]
    fn non_monomial_annihilator_is_reported() {
        // z and w act identically on this sum, so z - w kills it
        let t = bare(&[Res(2), Res(1)]).add(&bare(&[Res(1), Res(2)])).unwrap();
        let err = annihilator(&CurrentVector::single(t.clone())).unwrap_err();
        let Error::NonMonomialAnnihilator { witness } = err else { panic!("unexpected {err:?}") };
        assert!(kills(&witness, &CurrentVector::single(t)).unwrap());

        let v = CurrentVector::new(vec![bare(&[Res(1)]), bare(&[Res(1)])]).unwrap();
        assert!(matches!(annihilator(&v), Err(Error::NonMonomialAnnihilator { .. })));
    }

    #[test]
    fn r_p_examples() {
        let r = worked_r();
        let ass = [prime(2, &[0]), prime(2, &[0, 1])];
        assert_eq!(r_p(&r, &ass[0], &ass).unwrap(), CurrentVector::single(bare(&[Res(1), Pv(1)])));
        assert_eq!(r_p(&r, &ass[1], &ass).unwrap(), CurrentVector::single(bare(&[Res(2), Res(1)])));
        let only = [prime(2, &[0])];
        let v = OmegaSet::coord_variety(2, VarSet::singleton(0)).unwrap();
        assert_eq!(r_p(&r, &only[0], &only).unwrap(), r.restrict(&v).unwrap());
        assert_eq!(r_p(&r, &prime(2, &[1]), &ass), Err(Error::NotAssociated(prime(2, &[1]))));
    }

    #[test]
    fn sep_examples() {
        assert!(sep_check(&CurrentVector::single(bare(&[Res(1), Pv(1)])), &prime(2, &[0])).unwrap());
        assert!(sep_check(&CurrentVector::single(bare(&[Res(2), Res(1)])), &prime(2, &[0, 1])).unwrap());
        let t = bare(&[Pv(1), Res(1)]).add(&bare(&[Res(1), Res(1)])).unwrap();
        assert!(!sep_check(&CurrentVector::single(t), &prime(2, &[1])).unwrap());
    }

    #[test]
    fn lemma_bell_examples() {
        let rp = CurrentVector::single(bare(&[Res(1), Pv(1)]));
        assert!(lemma_bell_check(&rp, &prime(2, &[0])).unwrap());
        let rq = CurrentVector::single(bare(&[Res(2), Res(1)]));
        assert!(lemma_bell_check(&rq, &prime(2, &[0, 1])).unwrap());
        // ann(∂̄[1/z] + ∂̄[1/z]∧∂̄[1/w]) = (z) and ann(∂̄[1/z]) = (z)
        let mixed = CurrentVector::single(bare(&[Res(1), None]).add(&bare(&[Res(1), Res(1)])).unwrap());
        assert!(lemma_bell_check(&mixed, &prime(2, &[0])).unwrap());
    }

    #[test]
    fn decompose_worked_example() {
        let report = decompose(&worked_r(), &ideal(2, &[&[2, 0], &[1, 1]])).unwrap();
        assert!(report.all_passed(), "{report:?}");
        let qs: Vec<(MonPrime, MonModule)> = report.components.iter().map(|(p, c)| (*p, c.q.clone())).collect();
        assert_eq!(
            qs,
            vec![(prime(2, &[0]), ideal(2, &[&[1, 0]])), (prime(2, &[0, 1]), ideal(2, &[&[2, 0], &[0, 1]]))]
        );
    }

    #[test]
    fn decompose_product_of_variables() {
        let r = CurrentVector::single(coleff_herrera(2, &[Monomial(vec![1, 1])]).unwrap());
        let report = decompose(&r, &ideal(2, &[&[1, 1]])).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.components.keys().copied().collect::<Vec<_>>(), vec![prime(2, &[0]), prime(2, &[1])]);
    }

    #[test]
    fn decompose_complete_intersection() {
        let r = CurrentVector::single(coleff_herrera(2, &[Monomial(vec![2, 0]), Monomial(vec![0, 1])]).unwrap());
        let j = ideal(2, &[&[2, 0], &[0, 1]]);
        let report = decompose(&r, &j).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.components.len(), 1);
        assert_eq!(report.components.values().next().unwrap().q, j);
    }

    #[test]
    fn decompose_errors() {
        let r = worked_r();
        assert!(matches!(decompose(&r, &ideal(2, &[&[1, 0]])), Err(Error::DualityMismatch { .. })));
        let zero_comp = MonModule::from_components(vec![MonIdeal::zero(2)]).unwrap();
        assert_eq!(decompose(&CurrentVector::single(Current::one(2)), &zero_comp), Err(Error::ZeroPrimeAssociated));
        let j2 = MonModule::from_gens(2, 2, vec![(0, Monomial(vec![1, 0])), (1, Monomial(vec![0, 1]))]).unwrap();
        assert!(matches!(decompose(&r, &j2), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn decompose_module() {
        let r = CurrentVector::new(vec![bare(&[Res(2), None]), bare(&[None, Res(1)])]).unwrap();
        let j = MonModule::from_gens(2, 2, vec![(0, Monomial(vec![2, 0])), (1, Monomial(vec![0, 1]))]).unwrap();
        let report = decompose(&r, &j).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.components.len(), 2);
    }

    #[test]
    fn duality_examples() {
        assert!(duality_check(2, &[Monomial(vec![2, 0]), Monomial(vec![0, 1])]).unwrap());
        assert!(duality_check(1, &[Monomial(vec![3])]).unwrap());
        assert!(duality_check(3, &[Monomial(vec![1, 1, 0]), Monomial(vec![0, 0, 1])]).unwrap());
        assert_eq!(
            duality_check(2, &[Monomial(vec![1, 0]), Monomial(vec![1, 1])]),
            Err(Error::NotCompleteIntersection)
        );
    }
}
