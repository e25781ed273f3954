//! Products of currents with holomorphic monomials, principal values
//! `[1/g]` and residue factors `∂̄[1/g]` for monomial `g`.
//!
//! `[1/g]` and `∂̄[1/g]` act from the left. They do not commute with residue
//! factors in general: `[1/σ^a] ∂̄[1/σ^b] = 0` while `∂̄[1/σ^a] [1/σ^b] = ∂̄[1/σ^{a+b}]`.

use crate::current::{Atom, Current, Factor, PolyCoeff};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::vars::VarSet;

/// `σ^m · T`.
pub fn mul_monomial(m: &Monomial, t: &Current) -> Result<Current> {
    m.check_n(t.n())?;
    Ok(t.map_atoms(|mut a| {
        a.piece.alpha = a.piece.alpha.mul(m);
        Some(a)
    }))
}

fn pv_mul_atom(g: &Monomial, mut a: Atom) -> Option<Atom> {
    for (i, &e) in g.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        a.factors[i] = match a.factors[i] {
            Factor::None => Factor::Pv(e),
            Factor::Pv(b) => Factor::Pv(b + e),
            Factor::Res(_) => return None,
        };
    }
    a.reduce()
}

/// The left product `[1/g] T`.
pub fn pv_mul(g: &Monomial, t: &Current) -> Result<Current> {
    g.check_n(t.n())?;
    Ok(t.map_atoms(|a| pv_mul_atom(g, a)))
}

/// The left product `∂̄[1/g] ∧ T`.
///
/// Computed as the part of `∂̄([1/g] T)` in which `∂̄` falls on one of the
/// principal value factors at the variables of `g`; this equals
/// `∂̄([1/g] T) - [1/g] ∂̄T`.
pub fn res_mul(g: &Monomial, t: &Current) -> Result<Current> {
    g.check_n(t.n())?;
    let support = g.support();
    Ok(t.map_atoms(|a| {
        let mut out = Vec::new();
        if let Some(s) = pv_mul_atom(g, a) {
            let anti = s.antiholomorphic_slots();
            let hol = s.piece.dz.len();
            for j in support.iter() {
                if let Factor::Pv(e) = s.factors[j] {
                    if anti.contains(j) {
                        continue;
                    }
                    let mut r = s.clone();
                    r.factors[j] = Factor::Res(e);
                    out.push(r.negated_if((hol + anti.count_below(j)) % 2 == 1));
                }
            }
        }
        out
    }))
}

/// `∂̄[1/f_1] ∧ … ∧ ∂̄[1/f_q] ∧ [1/f_{q+1}] … [1/f_ν] α`, evaluated right to left.
pub fn arm_product(f: &[Monomial], q: usize, alpha: &PolyCoeff) -> Result<Current> {
    if q > f.len() {
        return Err(Error::QOutOfRange { q, len: f.len() });
    }
    let mut t = Current::from_coeff(alpha.clone());
    for g in f[q..].iter().rev() {
        t = pv_mul(g, &t)?;
    }
    for g in f[..q].iter().rev() {
        t = res_mul(g, &t)?;
    }
    Ok(t)
}

/// `∂̄[1/f_1] ∧ … ∧ ∂̄[1/f_q]`; the empty product is 1.
pub fn coleff_herrera(n: usize, f: &[Monomial]) -> Result<Current> {
    arm_product(f, f.len(), &PolyCoeff::one(n))
}

/// Codimension of the common zero set `{f_1 = … = f_q = 0}`, a union of
/// coordinate subspaces, found by enumerating the cells of `P([n])`.
/// `None` when the zero set is empty.
pub fn zero_set_codim(n: usize, f: &[Monomial]) -> Option<usize> {
    let supports: Vec<VarSet> = f.iter().map(Monomial::support).collect();
    (0..(1u32 << n))
        .map(|w| VarSet(w as u16))
        .filter(|w| supports.iter().all(|s| !s.intersection(*w).is_empty()))
        .map(|w| w.len())
        .min()
}

pub fn is_monomial_complete_intersection(n: usize, f: &[Monomial]) -> bool {
    zero_set_codim(n, f) == Some(f.len())
}
