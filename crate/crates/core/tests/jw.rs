use num_bigint::BigInt;
use num_integer::binomial;
use tlhom::diagram::enumerate_diagrams;
use tlhom::jw::{check_jw, compute_jw, quantum_binomial, quantum_binomial_laurent, quantum_integer};
use tlhom::tlalg::{multiply, TLElement};
use tlhom::{ParamContext, PrimeField, Rationals, Ring};

#[test]
fn binomials_are_symmetric() {
    for n in 0..=10 {
        for r in 0..=n {
            assert_eq!(quantum_binomial(n, r).unwrap(), quantum_binomial(n, n - r).unwrap());
            assert_eq!(quantum_binomial_laurent(n, r).unwrap(), quantum_binomial_laurent(n, n - r).unwrap());
        }
    }
    assert!(quantum_binomial(3, 4).is_err());
}

#[test]
fn binomials_at_q_one_are_classical() {
    for n in 0..=12usize {
        assert_eq!(quantum_integer(n).at_one(), BigInt::from(n));
        for r in 0..=n {
            let expect = binomial(BigInt::from(n), BigInt::from(r));
            assert_eq!(quantum_binomial_laurent(n, r).unwrap().at_one(), expect, "[{n} {r}]");
            assert_eq!(quantum_binomial(n, r).unwrap().eval_int(&BigInt::from(2)), expect, "[{n} {r}]");
        }
    }
}

fn projector_checks<R: Ring>(ctx: &ParamContext<R>, n: usize) {
    let r = &ctx.ring;
    let e = compute_jw(ctx, n).unwrap().expect("projector exists");
    assert!(check_jw(ctx, &e).unwrap());
    assert_eq!(multiply(ctx, &e, &e).unwrap(), e);
    for d in enumerate_diagrams(n).into_iter().filter(|d| !d.is_identity()) {
        for t in [1, -1, 2] {
            let bumped = e.add(r, &TLElement::monomial(r, d.clone(), r.from_i64(t)));
            assert!(!check_jw(ctx, &bumped).unwrap(), "perturbing by {d} still passes");
        }
    }
}

#[test]
fn projectors_are_unique_idempotents() {
    let q = ParamContext::with_a(Rationals, 2);
    let f7 = ParamContext::with_v(PrimeField::new(7).unwrap(), 1).unwrap();
    for n in 1..=4 {
        projector_checks(&q, n);
        projector_checks(&f7, n);
    }
}

#[test]
fn scaled_generators_are_idempotent() {
    let ctx = ParamContext::with_a(Rationals, 3);
    let r = &ctx.ring;
    let ainv = r.inv(&ctx.a).unwrap();
    for i in 1..4 {
        let e = TLElement::generator(r, 4, i).unwrap().scale(r, &ainv);
        assert_eq!(multiply(&ctx, &e, &e).unwrap(), e);
    }
}
