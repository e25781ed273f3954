//! Constructible sets in the Boolean algebra generated by the coordinate
//! hyperplanes, and restriction of currents to them.
//!
//! `P([n])` is in bijection with the cells
//! `W_ω = {σ_i = 0 for i ∈ ω, σ_i ≠ 0 otherwise}`, which partition `C^n`. A
//! constructible set is the union of the cells it contains, so it is stored as
//! a bitset over the `2^n` subsets `ω` (bit index = bitmask of `ω`).

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::current::{residue_set, Current};
use crate::error::{Error, Result};
use crate::vars::VarSet;
use crate::MAX_VARS;

/// Expression tree over coordinate hyperplanes. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetExpr {
    Empty,
    Full,
    /// `H_i = {σ_i = 0}`.
    Hyperplane(usize),
    /// `∩_{i ∈ S} H_i`; the empty `S` gives the whole space.
    CoordVariety(VarSet),
    /// The single cell `W_ω`.
    Cell(VarSet),
    Complement(Box<SetExpr>),
    Intersection(Box<SetExpr>, Box<SetExpr>),
    Union(Box<SetExpr>, Box<SetExpr>),
    Difference(Box<SetExpr>, Box<SetExpr>),
}

impl SetExpr {
    pub fn complement(e: SetExpr) -> SetExpr {
        SetExpr::Complement(Box::new(e))
    }

    pub fn intersection(a: SetExpr, b: SetExpr) -> SetExpr {
        SetExpr::Intersection(Box::new(a), Box::new(b))
    }

    pub fn union(a: SetExpr, b: SetExpr) -> SetExpr {
        SetExpr::Union(Box::new(a), Box::new(b))
    }

    pub fn difference(a: SetExpr, b: SetExpr) -> SetExpr {
        SetExpr::Difference(Box::new(a), Box::new(b))
    }
}

/// The canonical form `Ω(W) ⊆ P([n])` of a constructible set `W`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OmegaSet {
    n: usize,
    bits: FixedBitSet,
}

impl OmegaSet {
    pub fn empty(n: usize) -> Result<OmegaSet> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables(n));
        }
        Ok(OmegaSet { n, bits: FixedBitSet::with_capacity(1 << n) })
    }

    pub fn full(n: usize) -> Result<OmegaSet> {
        let mut s = OmegaSet::empty(n)?;
        s.bits.insert_range(..);
        Ok(s)
    }

    pub fn from_cells<I: IntoIterator<Item = VarSet>>(n: usize, cells: I) -> Result<OmegaSet> {
        let mut s = OmegaSet::empty(n)?;
        for c in cells {
            if !c.is_subset(VarSet::full(n)) {
                return Err(Error::IndexOutOfRange { index: 16 - c.0.leading_zeros() as usize, n });
            }
            s.bits.insert(c.0 as usize);
        }
        Ok(s)
    }

    fn from_predicate(n: usize, pred: impl Fn(VarSet) -> bool) -> Result<OmegaSet> {
        let mut s = OmegaSet::empty(n)?;
        for w in 0..(1usize << n) {
            if pred(VarSet(w as u16)) {
                s.bits.insert(w);
            }
        }
        Ok(s)
    }

    /// `Ω(V(S)) = {ω : S ⊆ ω}`.
    pub fn coord_variety(n: usize, s: VarSet) -> Result<OmegaSet> {
        OmegaSet::from_predicate(n, |w| s.is_subset(w))
    }

    pub fn hyperplane(n: usize, i: usize) -> Result<OmegaSet> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i + 1, n });
        }
        OmegaSet::coord_variety(n, VarSet::singleton(i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, cell: VarSet) -> bool {
        self.bits.contains(cell.0 as usize)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn cells(&self) -> impl Iterator<Item = VarSet> + '_ {
        self.bits.ones().map(|w| VarSet(w as u16))
    }

    pub fn complement(&self) -> OmegaSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        OmegaSet { n: self.n, bits }
    }

    pub fn intersection(&self, other: &OmegaSet) -> Result<OmegaSet> {
        self.same_n(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(OmegaSet { n: self.n, bits })
    }

    pub fn union(&self, other: &OmegaSet) -> Result<OmegaSet> {
        self.same_n(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(OmegaSet { n: self.n, bits })
    }

    pub fn difference(&self, other: &OmegaSet) -> Result<OmegaSet> {
        self.same_n(other)?;
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Ok(OmegaSet { n: self.n, bits })
    }

    fn same_n(&self, other: &OmegaSet) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    /// Smallest codimension `|ω|` of a cell in the set.
    pub fn min_cell_codim(&self) -> Result<usize> {
        self.cells().map(|c| c.len()).min().ok_or(Error::EmptySet)
    }

    /// Evaluate a set expression in dimension `n`.
    pub fn of(n: usize, e: &SetExpr) -> Result<OmegaSet> {
        let check = |s: VarSet| {
            if s.is_subset(VarSet::full(n)) {
                Ok(s)
            } else {
                Err(Error::IndexOutOfRange { index: 16 - s.0.leading_zeros() as usize, n })
            }
        };
        match e {
            SetExpr::Empty => OmegaSet::empty(n),
            SetExpr::Full => OmegaSet::full(n),
            SetExpr::Hyperplane(i) => OmegaSet::hyperplane(n, *i),
            SetExpr::CoordVariety(s) => OmegaSet::coord_variety(n, check(*s)?),
            SetExpr::Cell(w) => OmegaSet::from_cells(n, [check(*w)?]),
            SetExpr::Complement(a) => Ok(OmegaSet::of(n, a)?.complement()),
            SetExpr::Intersection(a, b) => OmegaSet::of(n, a)?.intersection(&OmegaSet::of(n, b)?),
            SetExpr::Union(a, b) => OmegaSet::of(n, a)?.union(&OmegaSet::of(n, b)?),
            SetExpr::Difference(a, b) => OmegaSet::of(n, a)?.difference(&OmegaSet::of(n, b)?),
        }
    }

    /// `1_W T`: the terms of `T` whose residue signature is a cell of `W`.
    pub fn restrict(&self, t: &Current) -> Result<Current> {
        t.check_n(self.n)?;
        Ok(t.filter_terms(|f| self.contains(residue_set(f))))
    }
}

impl fmt::Debug for OmegaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.cells()).finish()
    }
}

pub fn omega_of(n: usize, e: &SetExpr) -> Result<OmegaSet> {
    OmegaSet::of(n, e)
}

pub fn restrict(w: &OmegaSet, t: &Current) -> Result<Current> {
    w.restrict(t)
}
