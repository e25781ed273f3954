#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use rescalc_core::{
    Current, ElementaryTerm, Factor, MonIdeal, Monomial, OmegaSet, Piece, PolyCoeff, VarSet,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num = loop {
        let v = rng.gen_range(-5i64..=5);
        if v != 0 {
            break v;
        }
    };
    BigRational::new(BigInt::from(num), BigInt::from(rng.gen_range(1i64..=3)))
}

pub fn monomial(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Monomial {
    Monomial((0..n).map(|_| rng.gen_range(0..=max_exp)).collect())
}

pub fn nonconstant_monomial(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Monomial {
    loop {
        let m = monomial(rng, n, max_exp);
        if !m.is_one() {
            return m;
        }
    }
}

pub fn varset(rng: &mut ChaCha8Rng, n: usize, p: f64) -> VarSet {
    VarSet::from_indices((0..n).filter(|_| rng.gen_bool(p)))
}

/// A random coefficient piece; `forms` controls whether dσ / dσ̄ appear.
pub fn piece(rng: &mut ChaCha8Rng, n: usize, forms: bool) -> Piece {
    let small = |rng: &mut ChaCha8Rng| Monomial((0..n).map(|_| if rng.gen_bool(0.3) { rng.gen_range(1..=2) } else { 0 }).collect());
    let alpha = small(rng);
    let beta = small(rng);
    let (dz, dzb) = if forms { (varset(rng, n, 0.2), varset(rng, n, 0.2)) } else { (VarSet::EMPTY, VarSet::EMPTY) };
    Piece { alpha, beta, dz, dzb }
}

pub fn poly_coeff(rng: &mut ChaCha8Rng, n: usize, forms: bool) -> PolyCoeff {
    let k = rng.gen_range(1..=2);
    PolyCoeff::from_pieces(n, (0..k).map(|_| (piece(rng, n, forms), rational(rng))).collect::<Vec<_>>())
}

pub fn factor(rng: &mut ChaCha8Rng, max_exp: u32) -> Factor {
    match rng.gen_range(0..3) {
        0 => Factor::None,
        1 => Factor::Pv(rng.gen_range(1..=max_exp)),
        _ => Factor::Res(rng.gen_range(1..=max_exp)),
    }
}

/// Random raw terms; the result of normalizing them is usually nonzero.
pub fn raw_terms(rng: &mut ChaCha8Rng, n: usize, max_exp: u32, forms: bool) -> Vec<ElementaryTerm> {
    let k = rng.gen_range(1..=4);
    (0..k)
        .map(|_| ElementaryTerm::new((0..n).map(|_| factor(rng, max_exp)).collect(), poly_coeff(rng, n, forms)))
        .collect()
}

pub fn current(rng: &mut ChaCha8Rng, n: usize, max_exp: u32, forms: bool) -> Current {
    Current::normalize(n, raw_terms(rng, n, max_exp, forms)).unwrap()
}

/// A current made only of bare factor products with rational scalars.
pub fn factor_current(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Current {
    let k = rng.gen_range(1..=4);
    let terms = (0..k)
        .map(|_| {
            ElementaryTerm::new((0..n).map(|_| factor(rng, max_exp)).collect(), PolyCoeff::constant(n, rational(rng)))
        })
        .collect();
    Current::normalize(n, terms).unwrap()
}

pub fn omega(rng: &mut ChaCha8Rng, n: usize) -> OmegaSet {
    OmegaSet::from_cells(n, (0..(1u16 << n)).map(VarSet).filter(|_| rng.gen_bool(0.5))).unwrap()
}

pub fn ideal(rng: &mut ChaCha8Rng, n: usize, max_gens: usize, max_exp: u32) -> MonIdeal {
    let k = rng.gen_range(1..=max_gens);
    MonIdeal::new(n, (0..k).map(|_| nonconstant_monomial(rng, n, max_exp)).collect()).unwrap()
}

/// Monomials with pairwise disjoint nonempty supports: a complete intersection.
pub fn complete_intersection(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Vec<Monomial> {
    let nu = rng.gen_range(1..=n);
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    // each of the ν monomials gets at least one variable
    for (k, &v) in order.iter().take(nu).enumerate() {
        owner[v] = Some(k);
    }
    for &v in order.iter().skip(nu) {
        if rng.gen_bool(0.5) {
            owner[v] = Some(rng.gen_range(0..nu));
        }
    }
    (0..nu)
        .map(|k| Monomial((0..n).map(|i| if owner[i] == Some(k) { rng.gen_range(1..=max_exp) } else { 0 }).collect()))
        .collect()
}

/// Independent closed form of the monomial annihilator: a monomial kills a
/// term iff it reaches the exponent of one of its residue factors.
pub fn closed_form_annihilator(t: &Current) -> MonIdeal {
    let n = t.n();
    if t.is_zero() {
        return MonIdeal::unit(n);
    }
    t.terms().iter().fold(MonIdeal::unit(n), |acc, term| {
        let gens = term
            .factors
            .iter()
            .enumerate()
            .filter_map(|(i, f)| match f {
                Factor::Res(a) => Some(Monomial::var_pow(n, i, *a)),
                _ => None,
            })
            .collect();
        acc.intersect(&MonIdeal::new(n, gens).unwrap()).unwrap()
    })
}
