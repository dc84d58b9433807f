//! Invariants of the ideal operations on random homogeneous ideals.

use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use satbound::corpus::footnote_check;
use satbound::field::Field;
use satbound::ideal_ops::{
    colon, intersect, intersect_by_elimination, intersect_by_syzygies, sat_degree, saturate,
    saturate_by_colon_iteration,
};
use satbound::monomial::monomials_of_degree;
use satbound::resolution::arith_reg;
use satbound::{Ideal, MonomialOrder, PolyRing, Polynomial, PrimeField, RationalField};

fn random_form<F: Field>(r: &Arc<PolyRing<F>>, rng: &mut ChaCha8Rng, d: u32) -> Polynomial<F> {
    let mons = monomials_of_degree(r.nvars(), d);
    let field = r.field();
    let nterms = rng.gen_range(1..=3usize);
    let terms = (0..nterms)
        .map(|_| (field.from_i64(rng.gen_range(-3..=3)), mons[rng.gen_range(0..mons.len())]))
        .collect();
    r.from_terms(terms)
}

fn random_ideal<F: Field>(r: &Arc<PolyRing<F>>, rng: &mut ChaCha8Rng) -> Ideal<F> {
    let ngens = rng.gen_range(1..=3);
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for _ in 0..ngens {
        let d = rng.gen_range(1..=3);
        let g = random_form(r, rng, d);
        if !g.is_zero() {
            gens.push(g);
        }
    }
    if gens.is_empty() {
        gens.push(r.var(0).pow(2));
    }
    Ideal::new(r, gens).unwrap()
}

fn setup(seed: u64) -> (Arc<PolyRing<PrimeField>>, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=4usize);
    (PolyRing::with_vars(PrimeField::default(), n).unwrap(), rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn groebner_bases(seed in any::<u64>()) {
        let (r, mut rng) = setup(seed);
        let i = random_ideal(&r, &mut rng);
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let gb = i.groebner_basis(order).unwrap();
            prop_assert!(gb.satisfies_buchberger().unwrap());
            prop_assert!(gb.is_reduced());
            for g in i.generators() {
                prop_assert!(gb.normal_form(g).unwrap().is_zero());
            }
        }
        let f = random_form(&r, &mut rng, 2);
        let nf = i.normal_form(&f).unwrap();
        prop_assert_eq!(i.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(i.contains(&(&f - &nf)).unwrap());
    }

    #[test]
    fn saturation(seed in any::<u64>()) {
        let (r, mut rng) = setup(seed);
        let i = random_ideal(&r, &mut rng);
        let s = saturate(&i).unwrap();
        prop_assert!(s.contains_ideal(&i).unwrap());
        prop_assert!(saturate(&s).unwrap().same_ideal(&s).unwrap());
        prop_assert!(saturate_by_colon_iteration(&i).unwrap().same_ideal(&s).unwrap());
        let sd = sat_degree(&i).unwrap().sat_degree;
        for t in sd..sd + 3 {
            prop_assert_eq!(s.graded_dim(t).unwrap(), i.graded_dim(t).unwrap());
        }
        if sd > 0 {
            prop_assert!(s.graded_dim(sd - 1).unwrap() > i.graded_dim(sd - 1).unwrap());
        }
        prop_assert!(sd as i64 <= arith_reg(&i).unwrap());
        prop_assert!(footnote_check(&i).unwrap().holds);
    }

    #[test]
    fn intersections_and_colons(seed in any::<u64>()) {
        let (r, mut rng) = setup(seed);
        let i = random_ideal(&r, &mut rng);
        let k = random_ideal(&r, &mut rng);
        let a = intersect_by_elimination(&i, &k).unwrap();
        let b = intersect_by_syzygies(&i, &k).unwrap();
        prop_assert!(a.same_ideal(&b).unwrap());
        prop_assert!(intersect(&i, &k).unwrap().same_ideal(&a).unwrap());
        prop_assert!(i.contains_ideal(&a).unwrap() && k.contains_ideal(&a).unwrap());
        prop_assert!(a.contains_ideal(&product(&i, &k)).unwrap());
        let f = random_form(&r, &mut rng, 1);
        if !f.is_zero() {
            let c = colon(&i, &f).unwrap();
            prop_assert!(c.contains_ideal(&i).unwrap());
            for g in c.generators() {
                prop_assert!(i.contains(&(g * &f)).unwrap());
            }
        }
    }
}

/// `I K`, which lies in `I ∩ K`.
fn product<F: Field>(i: &Ideal<F>, k: &Ideal<F>) -> Ideal<F> {
    let gens = i
        .generators()
        .iter()
        .flat_map(|g| k.generators().iter().map(move |h| g * h))
        .collect();
    Ideal::new(i.ring(), gens).unwrap()
}

#[test]
fn fields_agree_on_integer_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..8 {
        let seed: u64 = rng.gen();
        let mut a = ChaCha8Rng::seed_from_u64(seed);
        let mut b = ChaCha8Rng::seed_from_u64(seed);
        let rp = PolyRing::with_vars(PrimeField::default(), 3).unwrap();
        let rq = PolyRing::with_vars(RationalField, 3).unwrap();
        let ip = random_ideal(&rp, &mut a);
        let iq = random_ideal(&rq, &mut b);
        assert_eq!(ip.hilbert_numerator().unwrap(), iq.hilbert_numerator().unwrap());
        assert_eq!(
            sat_degree(&ip).unwrap().sat_degree,
            sat_degree(&iq).unwrap().sat_degree
        );
    }
}
