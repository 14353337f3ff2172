use proptest::prelude::*;
use tlhom::complex::{build_d, build_w, ChainComplex};
use tlhom::diagram::fine_number;
use tlhom::homology::{
    coinvariants, ext_trivial, homology_at, homology_of, induced_as_module, tor_trivial, trivial_module, HomologyGroup,
};
use tlhom::{Integers, ParamContext, PrimeField, Rationals, Ring};

fn euler<R: Ring>(x: &ChainComplex<R>) -> (i64, i64) {
    let sign = |i: i64| if i.rem_euclid(2) == 0 { 1 } else { -1 };
    let chains = x.degrees().map(|i| sign(i) * x.dim(i) as i64).sum();
    let homology = homology_of(x).iter().map(|(i, h)| sign(*i) * h.free_rank as i64).sum();
    (chains, homology)
}

#[test]
fn euler_characteristic_of_w() {
    let ctx = ParamContext::with_v(Rationals, 1).unwrap();
    for n in 1..=6 {
        let (chains, homology) = euler(&build_w(&ctx, n).unwrap());
        let expect = if n % 2 == 1 { 1 } else { -1 } * fine_number(n) as i64;
        assert_eq!(chains, homology, "n = {n}");
        assert_eq!(chains, expect, "n = {n}");
    }
}

#[test]
fn euler_characteristic_of_d() {
    let ctx = ParamContext::with_a(Rationals, 3);
    let x = build_d(&ctx, 4, 2, 6).unwrap();
    let (chains, homology) = euler(&x);
    assert_eq!(chains, homology);
}

#[test]
fn save_and_load_round_trip() {
    let ctx = ParamContext::with_v(Integers, 1).unwrap();
    let x = build_w(&ctx, 4).unwrap();
    let dir = tempfile::tempdir().unwrap();
    x.save(dir.path()).unwrap();
    let y = ChainComplex::load(Integers, dir.path()).unwrap();
    assert_eq!((x.lo(), x.hi()), (y.lo(), y.hi()));
    for i in x.degrees() {
        assert_eq!(x.dim(i), y.dim(i));
        assert_eq!(x.labels(i), y.labels(i));
        assert_eq!(x.d(i), y.d(i));
    }
    assert_eq!(homology_of(&x), homology_of(&y));
    assert!(ChainComplex::load(Integers, &dir.path().join("missing")).is_err());
}

#[test]
fn degree_zero_groups_are_the_ring() {
    let z = ParamContext::with_v(Integers, 1).unwrap();
    let f3 = ParamContext::with_v(PrimeField::new(3).unwrap(), 2).unwrap();
    for n in 1..=4 {
        let m = trivial_module(&z, n);
        assert_eq!(coinvariants(&m), HomologyGroup::free(1));
        assert_eq!(tor_trivial(&m, 1).unwrap()[0], HomologyGroup::free(1));
        assert_eq!(ext_trivial(&m, 1).unwrap()[0], HomologyGroup::free(1));
        assert_eq!(tor_trivial(&trivial_module(&f3, n), 1).unwrap()[0], HomologyGroup::free(1));
    }
}

#[test]
fn free_module_has_no_higher_tor() {
    let ctx = ParamContext::with_v(Integers, 1).unwrap();
    for n in 1..=4 {
        let tor = tor_trivial(&induced_as_module(&ctx, n, 0).unwrap(), 3).unwrap();
        assert_eq!(tor[0], HomologyGroup::free(1));
        assert!(tor[1..].iter().all(HomologyGroup::is_zero), "n = {n}: {tor:?}");
    }
}

#[test]
fn rendering() {
    let g = HomologyGroup { free_rank: 2, torsion: vec![2.into()] };
    assert_eq!(g.render(tlhom::RingSpec::Integers), "Z^2 + Z/2");
    assert_eq!(HomologyGroup::free(1).render(tlhom::RingSpec::PrimeField(5)), "F_5");
    assert_eq!(HomologyGroup::zero().render(tlhom::RingSpec::Rationals), "0");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn w_homology_is_concentrated_on_top(p in prop::sample::select(vec![3u64, 5, 7, 11]), v in 1i64..11, n in 1usize..6) {
        let f = PrimeField::new(p).unwrap();
        let v = v % p as i64;
        prop_assume!(v != 0);
        let ctx = ParamContext::with_v(f, v).unwrap();
        let w = build_w(&ctx, n).unwrap();
        for d in -1..=(n as i64 - 2) {
            prop_assert!(homology_at(&w, d).is_zero());
        }
        prop_assert_eq!(homology_at(&w, n as i64 - 1), HomologyGroup::free(fine_number(n) as usize));
    }
}
