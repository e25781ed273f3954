//! Elementary terms and currents in normal form.
//!
//! A current is a finite sum of elementary terms
//!
//! ```text
//!     c · σ^α σ̄^β · dσ_D ∧ (antiholomorphic part) · Π [1/σ_k^b]
//! ```
//!
//! where the antiholomorphic part is the wedge, in ascending variable order, of
//! the `dσ̄_j` (j ∈ D̄) and residue factors `∂̄[1/σ_j^a]`. The holomorphic part
//! `dσ_D` always precedes it. All signs produced by the operations below are
//! relative to this ordering.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::vars::VarSet;
use crate::MAX_VARS;

/// The factor of an elementary term at one variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Factor {
    None,
    /// Principal value `[1/σ^a]`.
    Pv(u32),
    /// Residue factor `∂̄[1/σ^a]`.
    Res(u32),
}

impl Factor {
    pub fn is_res(self) -> bool {
        matches!(self, Factor::Res(_))
    }
}

/// One monomial piece of a polynomial-type coefficient form: `σ^α σ̄^β dσ_D ∧ dσ̄_D̄`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Piece {
    pub alpha: Monomial,
    pub beta: Monomial,
    pub dz: VarSet,
    pub dzb: VarSet,
}

impl Piece {
    pub fn one(n: usize) -> Piece {
        Piece { alpha: Monomial::one(n), beta: Monomial::one(n), dz: VarSet::EMPTY, dzb: VarSet::EMPTY }
    }

    pub fn holomorphic(alpha: Monomial) -> Piece {
        let n = alpha.n();
        Piece { alpha, beta: Monomial::one(n), dz: VarSet::EMPTY, dzb: VarSet::EMPTY }
    }

    pub fn n(&self) -> usize {
        self.alpha.n()
    }
}

/// A polynomial-type smooth form: a rational combination of [`Piece`]s.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyCoeff {
    n: usize,
    pieces: BTreeMap<Piece, BigRational>,
}

impl PolyCoeff {
    pub fn zero(n: usize) -> PolyCoeff {
        PolyCoeff { n, pieces: BTreeMap::new() }
    }

    pub fn one(n: usize) -> PolyCoeff {
        PolyCoeff::constant(n, BigRational::one())
    }

    pub fn constant(n: usize, c: BigRational) -> PolyCoeff {
        PolyCoeff::from_pieces(n, [(Piece::one(n), c)])
    }

    pub fn from_pieces<I: IntoIterator<Item = (Piece, BigRational)>>(n: usize, pieces: I) -> PolyCoeff {
        let mut out = PolyCoeff::zero(n);
        for (p, c) in pieces {
            debug_assert_eq!(p.n(), n);
            out.add_piece(p, c);
        }
        out
    }

    fn add_piece(&mut self, p: Piece, c: BigRational) {
        let e = self.pieces.entry(p.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.pieces.remove(&p);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn pieces(&self) -> impl Iterator<Item = (&Piece, &BigRational)> {
        self.pieces.iter()
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }
}

/// One summand `α · Π_i factor_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementaryTerm {
    pub factors: Vec<Factor>,
    pub coeff: PolyCoeff,
}

impl ElementaryTerm {
    pub fn new(factors: Vec<Factor>, coeff: PolyCoeff) -> ElementaryTerm {
        ElementaryTerm { factors, coeff }
    }

    /// The term `factors` with coefficient 1.
    pub fn bare(factors: Vec<Factor>) -> ElementaryTerm {
        let n = factors.len();
        ElementaryTerm { factors, coeff: PolyCoeff::one(n) }
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    /// The variables carrying a residue factor.
    pub fn residue_signature(&self) -> VarSet {
        residue_set(&self.factors)
    }

    /// The support lies in the coordinate subspace `{σ_i = 0 : i ∈ signature}`.
    pub fn support_codim_lower_bound(&self) -> usize {
        self.residue_signature().len()
    }
}

pub(crate) fn residue_set(factors: &[Factor]) -> VarSet {
    VarSet::from_indices(factors.iter().enumerate().filter(|(_, f)| f.is_res()).map(|(i, _)| i))
}

/// Holomorphic and antiholomorphic form degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Bidegree {
    pub p: usize,
    pub q: usize,
}

/// A single (factor vector, piece, scalar) product; the unit all operations act on.
#[derive(Clone, Debug)]
pub(crate) struct Atom {
    pub factors: Vec<Factor>,
    pub piece: Piece,
    pub scalar: BigRational,
}

impl Atom {
    pub fn antiholomorphic_slots(&self) -> VarSet {
        self.piece.dzb.union(residue_set(&self.factors))
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree { p: self.piece.dz.len(), q: self.antiholomorphic_slots().len() }
    }

    pub(crate) fn negated_if(mut self, neg: bool) -> Atom {
        if neg {
            self.scalar = -self.scalar;
        }
        self
    }

    /// Absorb holomorphic monomials into principal value and residue factors and
    /// drop atoms that vanish. Returns `None` for the zero current.
    pub(crate) fn reduce(mut self) -> Option<Atom> {
        if self.scalar.is_zero() {
            return None;
        }
        for i in 0..self.factors.len() {
            let k = self.piece.alpha.0[i];
            match self.factors[i] {
                Factor::None => {}
                Factor::Pv(0) => self.factors[i] = Factor::None,
                Factor::Res(0) => return None,
                Factor::Pv(a) => {
                    if k < a {
                        self.factors[i] = Factor::Pv(a - k);
                        self.piece.alpha.0[i] = 0;
                    } else {
                        self.factors[i] = Factor::None;
                        self.piece.alpha.0[i] = k - a;
                    }
                }
                Factor::Res(a) => {
                    if k >= a {
                        return None;
                    }
                    self.factors[i] = Factor::Res(a - k);
                    self.piece.alpha.0[i] = 0;
                    // σ̄ and dσ̄ annihilate residue factors.
                    if self.piece.beta.0[i] > 0 || self.piece.dzb.contains(i) {
                        return None;
                    }
                }
            }
        }
        Some(self)
    }

    /// `∂̄` of this atom by the graded Leibniz rule.
    fn dbar(&self) -> Vec<Atom> {
        let anti = self.antiholomorphic_slots();
        let hol = self.piece.dz.len();
        let mut out = Vec::new();
        for j in 0..self.factors.len() {
            let sign_neg = (hol + anti.count_below(j)) % 2 == 1;
            let b = self.piece.beta.0[j];
            if b > 0 && !anti.contains(j) {
                let mut a = self.clone();
                a.piece.beta.0[j] -= 1;
                a.piece.dzb = a.piece.dzb.insert(j);
                a.scalar *= BigRational::from_integer(BigInt::from(b));
                out.push(a.negated_if(sign_neg));
            }
            if let Factor::Pv(e) = self.factors[j] {
                if !anti.contains(j) {
                    let mut a = self.clone();
                    a.factors[j] = Factor::Res(e);
                    out.push(a.negated_if(sign_neg));
                }
            }
        }
        out
    }

    /// Left product `ξ ∧ self` for a single coefficient piece `ξ` with scalar `c`.
    pub fn wedge_left(&self, xi: &Piece, c: &BigRational) -> Option<Atom> {
        let anti = self.antiholomorphic_slots();
        let s_hol = xi.dz.shuffle_sign(self.piece.dz)?;
        let s_anti = xi.dzb.shuffle_sign(anti)?;
        let s_cross = xi.dzb.len() * self.piece.dz.len() % 2 == 1;
        let piece = Piece {
            alpha: self.piece.alpha.mul(&xi.alpha),
            beta: self.piece.beta.mul(&xi.beta),
            dz: self.piece.dz.union(xi.dz),
            dzb: self.piece.dzb.union(xi.dzb),
        };
        let atom = Atom { factors: self.factors.clone(), piece, scalar: &self.scalar * c };
        Some(atom.negated_if(s_hol ^ s_anti ^ s_cross))
    }
}

/// A finite sum of elementary terms in normal form.
///
/// Terms are sorted by factor vector, factor vectors are distinct, no
/// coefficient is zero, holomorphic exponents at principal value or residue
/// slots have been absorbed, and nothing vanishing by `σ̄ ∂̄[1/σ^a] = 0` or
/// `dσ̄ ∧ ∂̄[1/σ^a] = 0` survives. Equality of currents is structural equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Current {
    n: usize,
    terms: Vec<ElementaryTerm>,
}

impl Current {
    pub fn zero(n: usize) -> Current {
        Current { n, terms: Vec::new() }
    }

    /// The constant function 1.
    pub fn one(n: usize) -> Current {
        Current::from_coeff(PolyCoeff::one(n))
    }

    /// The smooth form `α` as a current.
    pub fn from_coeff(alpha: PolyCoeff) -> Current {
        let n = alpha.n();
        Current::from_atoms(
            n,
            alpha
                .pieces()
                .map(|(p, c)| Atom { factors: vec![Factor::None; n], piece: p.clone(), scalar: c.clone() })
                .collect(),
        )
    }

    pub fn from_term(term: ElementaryTerm) -> Result<Current> {
        let n = term.n();
        Current::normalize(n, vec![term])
    }

    /// Normal form of a raw sum of terms.
    pub fn normalize(n: usize, raw: Vec<ElementaryTerm>) -> Result<Current> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables(n));
        }
        let mut atoms = Vec::new();
        for t in raw {
            if t.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: t.n() });
            }
            for (p, c) in t.coeff.pieces {
                if p.n() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: p.n() });
                }
                atoms.push(Atom { factors: t.factors.clone(), piece: p, scalar: c });
            }
        }
        Ok(Current::from_atoms(n, atoms))
    }

    pub(crate) fn from_atoms(n: usize, atoms: Vec<Atom>) -> Current {
        let mut acc: BTreeMap<Vec<Factor>, PolyCoeff> = BTreeMap::new();
        for a in atoms.into_iter().filter_map(Atom::reduce) {
            acc.entry(a.factors).or_insert_with(|| PolyCoeff::zero(n)).add_piece(a.piece, a.scalar);
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(factors, coeff)| ElementaryTerm { factors, coeff })
            .collect();
        Current { n, terms }
    }

    pub(crate) fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.terms.iter().flat_map(|t| {
            t.coeff.pieces().map(move |(p, c)| Atom { factors: t.factors.clone(), piece: p.clone(), scalar: c.clone() })
        })
    }

    /// Apply `f` to every atom and renormalize.
    pub(crate) fn map_atoms<F, I>(&self, f: F) -> Current
    where
        F: Fn(Atom) -> I,
        I: IntoIterator<Item = Atom>,
    {
        Current::from_atoms(self.n, self.atoms().flat_map(f).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[ElementaryTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn check_n(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::DimensionMismatch { expected: n, found: self.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Current) -> Result<Current> {
        other.check_n(self.n)?;
        Ok(Current::from_atoms(self.n, self.atoms().chain(other.atoms()).collect()))
    }

    pub fn sub(&self, other: &Current) -> Result<Current> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Current {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Current {
        self.map_atoms(|mut a| {
            a.scalar *= c;
            Some(a)
        })
    }

    /// The distinct bidegrees occurring, one per coefficient piece.
    pub fn bidegrees(&self) -> Vec<Bidegree> {
        let mut v: Vec<Bidegree> = self.atoms().map(|a| a.bidegree()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// The part of antiholomorphic degree exactly `q`.
    pub fn bidegree_part(&self, q: usize) -> Current {
        self.map_atoms(|a| (a.bidegree().q == q).then_some(a))
    }

    /// `∂̄` of the current.
    pub fn dbar(&self) -> Current {
        self.map_atoms(|a| a.dbar())
    }

    /// The left product `ξ ∧ T` with a polynomial-type smooth form `ξ`.
    pub fn wedge_left(&self, xi: &PolyCoeff) -> Result<Current> {
        if xi.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: xi.n() });
        }
        Ok(self.map_atoms(|a| xi.pieces().filter_map(|(p, c)| a.wedge_left(p, c)).collect::<Vec<_>>()))
    }

    /// Keep the atoms for which `keep` holds on the factor vector.
    pub(crate) fn filter_terms(&self, keep: impl Fn(&[Factor]) -> bool) -> Current {
        Current { n: self.n, terms: self.terms.iter().filter(|t| keep(&t.factors)).cloned().collect() }
    }
}

/// Writes one atom in the textual grammar accepted by the command-line parser.
fn fmt_atom(f: &mut fmt::Formatter<'_>, n: usize, a: &Atom, first: bool) -> fmt::Result {
    let neg = a.scalar.is_negative();
    let abs = a.scalar.abs();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let mut parts: Vec<String> = Vec::new();
    if !a.piece.alpha.is_one() {
        parts.push(a.piece.alpha.to_string());
    }
    if !a.piece.beta.is_one() {
        parts.push(format!("conj({})", a.piece.beta));
    }
    for i in a.piece.dz.iter() {
        parts.push(format!("dz{}", i + 1));
    }
    for (j, fac) in a.factors.iter().enumerate() {
        if a.piece.dzb.contains(j) {
            parts.push(format!("dzb{}", j + 1));
        }
        if let Factor::Res(e) = fac {
            parts.push(format!("res[1/{}]", Monomial::var_pow(n, j, *e)));
        }
    }
    for (j, fac) in a.factors.iter().enumerate() {
        if let Factor::Pv(e) = fac {
            parts.push(format!("pv[1/{}]", Monomial::var_pow(n, j, *e)));
        }
    }
    if parts.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        f.write_str(&parts.join("*"))
    } else {
        write!(f, "{abs}*{}", parts.join("*"))
    }
}

impl fmt::Display for Current {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, a) in self.atoms().enumerate() {
            fmt_atom(f, self.n, &a, k == 0)?;
        }
        Ok(())
    }
}

impl fmt::Display for ElementaryTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        for (k, (p, c)) in self.coeff.pieces().enumerate() {
            let a = Atom { factors: self.factors.clone(), piece: p.clone(), scalar: c.clone() };
            fmt_atom(f, n, &a, k == 0)?;
        }
        Ok(())
    }
}
