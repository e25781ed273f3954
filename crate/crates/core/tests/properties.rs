mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;

use rescalc_core::{
    annihilator, arm_product, kills, mul_monomial, pv_mul, r_p, res_mul, CurrentVector, Error, MonIdeal, MonPrime,
    Monomial, OmegaSet, Piece, PolyCoeff, Polynomial, SplitStrategy, VarSet,
};
use rescalc_core::algebra::intersect_all;

fn cfg() -> ProptestConfig {
    ProptestConfig { cases: 64, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn normalize_is_idempotent(seed in any::<u64>(), n in 1usize..=4) {
        let t = current(&mut rng(seed), n, 4, true);
        let again = rescalc_core::Current::normalize(n, t.terms().to_vec()).unwrap();
        prop_assert_eq!(again, t);
    }

    #[test]
    fn degree_bounds_signature(seed in any::<u64>(), n in 1usize..=4) {
        let t = current(&mut rng(seed), n, 4, true);
        for term in t.terms() {
            let sig = term.residue_signature();
            prop_assert_eq!(sig.len(), term.support_codim_lower_bound());
            for (p, _) in term.coeff.pieces() {
                // q = |D̄| + |signature| counts disjoint slots
                prop_assert!(p.dzb.intersection(sig).is_empty());
                let part = rescalc_core::Current::from_term(term.clone()).unwrap().bidegree_part(p.dzb.len() + sig.len());
                prop_assert!(!part.is_zero());
                for i in sig.iter() {
                    prop_assert_eq!(p.beta.exps()[i], 0);
                    prop_assert_eq!(p.alpha.exps()[i], 0);
                }
            }
        }
        for b in t.bidegrees() {
            prop_assert!(b.q <= n);
        }
    }

    #[test]
    fn dbar_squares_to_zero(seed in any::<u64>(), n in 1usize..=4) {
        let t = current(&mut rng(seed), n, 4, true);
        prop_assert!(t.dbar().dbar().is_zero());
    }

    #[test]
    fn antiholomorphic_factors_kill_residues(seed in any::<u64>(), n in 1usize..=4) {
        let t = current(&mut rng(seed), n, 4, true);
        for term in t.terms() {
            let single = rescalc_core::Current::from_term(term.clone()).unwrap();
            for i in term.residue_signature().iter() {
                let conj = Piece { beta: Monomial::var(n, i), ..Piece::one(n) };
                let dzb = Piece { dzb: VarSet::singleton(i), ..Piece::one(n) };
                for xi in [conj, dzb] {
                    let xi = PolyCoeff::from_pieces(n, [(xi, q(1))]);
                    prop_assert!(single.wedge_left(&xi).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn restriction_axioms(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = rng(seed);
        let t = current(&mut r, n, 4, true);
        let w = omega(&mut r, n);
        let v = omega(&mut r, n);
        let xi = poly_coeff(&mut r, n, true);
        let rw = w.restrict(&t).unwrap();
        prop_assert_eq!(w.complement().restrict(&t).unwrap(), t.sub(&rw).unwrap());
        prop_assert_eq!(w.intersection(&v).unwrap().restrict(&t).unwrap(), w.restrict(&v.restrict(&t).unwrap()).unwrap());
        let union = w.union(&v).unwrap().restrict(&t).unwrap();
        let formula = rw.add(&v.restrict(&t).unwrap()).unwrap().sub(&w.intersection(&v).unwrap().restrict(&t).unwrap()).unwrap();
        prop_assert_eq!(union, formula);
        prop_assert_eq!(w.restrict(&t.wedge_left(&xi).unwrap()).unwrap(), rw.wedge_left(&xi).unwrap());
        prop_assert!(OmegaSet::empty(n).unwrap().restrict(&t).unwrap().is_zero());
        prop_assert!(rw.terms().len() <= t.terms().len());
    }

    #[test]
    fn leibniz_rules(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let t = current(&mut r, n, 3, true);
        let g = nonconstant_monomial(&mut r, n, 3);
        let lhs = pv_mul(&g, &t).unwrap().dbar();
        let rhs = res_mul(&g, &t).unwrap().add(&pv_mul(&g, &t.dbar()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = res_mul(&g, &t).unwrap().dbar();
        let rhs = res_mul(&g, &t.dbar()).unwrap().neg();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn residue_products_live_on_zero_set(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let t = current(&mut r, n, 3, true);
        let g = nonconstant_monomial(&mut r, n, 3);
        for term in res_mul(&g, &t).unwrap().terms() {
            prop_assert!(!term.residue_signature().intersection(g.support()).is_empty());
        }
    }

    #[test]
    fn complete_intersection_products(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = rng(seed);
        let f = complete_intersection(&mut r, n, 3);
        prop_assert!(rescalc_core::is_monomial_complete_intersection(n, &f));
        let nu = f.len();
        let qq = r.gen_range(1..=nu);
        let alpha = poly_coeff(&mut r, n, true);
        let t = arm_product(&f, qq, &alpha).unwrap();
        prop_assert!(mul_monomial(&f[0], &t).unwrap().is_zero());
        let last = mul_monomial(&f[nu - 1], &t).unwrap();
        if nu > qq {
            prop_assert_eq!(last, arm_product(&f[..nu - 1], qq, &alpha).unwrap());
        } else {
            prop_assert!(last.is_zero());
        }
        // residue factors anticommute, principal values commute
        if qq >= 2 {
            let mut g = f.clone();
            g.swap(0, 1);
            prop_assert_eq!(arm_product(&g, qq, &alpha).unwrap(), t.neg());
        }
        if nu - qq >= 2 {
            let mut g = f.clone();
            g.swap(qq, qq + 1);
            prop_assert_eq!(arm_product(&g, qq, &alpha).unwrap(), t.clone());
        }
    }

    #[test]
    fn oracle_is_sound(seed in any::<u64>(), n in 1usize..=4) {
        let ideal = ideal(&mut rng(seed), n, 6, 4);
        let comps = ideal.primary_decomposition_oracle().unwrap();
        prop_assert_eq!(intersect_all(n, &comps), ideal.clone());
        let primes: Vec<MonPrime> = comps.iter().map(|c| c.is_primary().expect("primary")).collect();
        let mut dedup = primes.clone();
        dedup.dedup();
        prop_assert_eq!(dedup.len(), primes.len());
        for k in 0..comps.len() {
            let rest: Vec<MonIdeal> = comps.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, c)| c.clone()).collect();
            prop_assert!(intersect_all(n, &rest) != ideal);
        }
    }

    #[test]
    fn isolated_components_are_unique(seed in any::<u64>(), n in 1usize..=4) {
        let ideal = ideal(&mut rng(seed), n, 6, 4);
        let a = ideal.primary_decomposition_oracle_with(SplitStrategy::First).unwrap();
        let b = ideal.primary_decomposition_oracle_with(SplitStrategy::Last).unwrap();
        let pa: Vec<MonPrime> = a.iter().map(|c| c.is_primary().unwrap()).collect();
        let pb: Vec<MonPrime> = b.iter().map(|c| c.is_primary().unwrap()).collect();
        prop_assert_eq!(&pa, &pb);
        for (k, p) in pa.iter().enumerate() {
            let minimal = !pa.iter().any(|o| o != p && o.vars.is_subset(p.vars));
            if minimal {
                prop_assert_eq!(&a[k], &b[k]);
            }
        }
    }

    #[test]
    fn ass_primes_commute_with_permutations(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = rng(seed);
        let ideal = ideal(&mut r, n, 6, 4);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, r.gen_range(0..=i));
        }
        let mut moved: Vec<MonPrime> = ideal
            .ass_primes()
            .unwrap()
            .iter()
            .map(|p| MonPrime::new(n, VarSet::from_indices(p.vars.iter().map(|i| perm[i]))))
            .collect();
        moved.sort();
        prop_assert_eq!(ideal.permute(&perm).ass_primes().unwrap(), moved);
    }

    #[test]
    fn annihilator_matches_closed_form(seed in any::<u64>(), n in 1usize..=3) {
        let t = factor_current(&mut rng(seed), n, 3);
        match annihilator(&CurrentVector::single(t.clone())) {
            Ok(m) => prop_assert_eq!(&m.components()[0], &closed_form_annihilator(&t)),
            Err(Error::NonMonomialAnnihilator { witness }) => {
                // the witness must be a genuine killer outside the monomial part
                prop_assert!(kills(&witness, &CurrentVector::single(t.clone())).unwrap());
                prop_assert!(!closed_form_annihilator(&t).contains(&witness[0]));
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn annihilators_of_pure_signature_currents_are_primary(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let s = loop {
            let s = varset(&mut r, n, 0.5);
            if !s.is_empty() { break s; }
        };
        let k = r.gen_range(1..=3);
        let mut t = rescalc_core::Current::zero(n);
        for _ in 0..k {
            let factors = (0..n)
                .map(|i| if s.contains(i) {
                    rescalc_core::Factor::Res(r.gen_range(1..=3))
                } else {
                    match r.gen_range(0..2) { 0 => rescalc_core::Factor::None, _ => rescalc_core::Factor::Pv(r.gen_range(1..=3)) }
                })
                .collect();
            let coeff = PolyCoeff::from_pieces(n, [(Piece::one(n), rational(&mut r))]);
            let term = rescalc_core::Current::from_term(rescalc_core::ElementaryTerm::new(factors, coeff)).unwrap();
            t = t.add(&term).unwrap();
        }
        prop_assume!(!t.is_zero());
        match annihilator(&CurrentVector::single(t)) {
            Ok(m) => prop_assert_eq!(m.is_primary(), Some(MonPrime::new(n, s))),
            // equal-signature cancellation can produce non-monomial killers; nothing to check then
            Err(Error::NonMonomialAnnihilator { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn kills_is_linear(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let t = CurrentVector::single(factor_current(&mut r, n, 3));
        let ann = closed_form_annihilator(&t.components()[0]);
        let pick = |r: &mut rand_chacha::ChaCha8Rng| {
            let mut p = Polynomial::zero(n);
            for _ in 0..3 {
                let m = monomial(r, n, 3);
                if ann.contains_monomial(&m) {
                    p.add_term(m, rational(r));
                }
            }
            p
        };
        let phi = pick(&mut r);
        let psi = pick(&mut r);
        prop_assert!(kills(std::slice::from_ref(&phi), &t).unwrap());
        prop_assert!(kills(std::slice::from_ref(&psi), &t).unwrap());
        prop_assert!(kills(&[phi.add(&psi)], &t).unwrap());
        let m = monomial(&mut r, n, 2);
        prop_assert!(kills(&[phi.mul_monomial(&m)], &t).unwrap());
    }

    #[test]
    fn r_p_ignores_prime_order(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = rng(seed);
        let t = CurrentVector::single(current(&mut r, n, 3, true));
        let ideal = ideal(&mut r, n, 5, 3);
        let ass = ideal.ass_primes().unwrap();
        let mut shuffled = ass.clone();
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, r.gen_range(0..=i));
        }
        for p in &ass {
            prop_assert_eq!(r_p(&t, p, &ass).unwrap(), r_p(&t, p, &shuffled).unwrap());
        }
    }
}
