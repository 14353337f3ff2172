use num_bigint::BigInt;
use proptest::prelude::*;
use tlhom::complex::w_multiplier;
use tlhom::homology::{fineberg_module, up_jn_in_ideal};
use tlhom::tlalg::{
    constant_term, from_word, jacobsthal_element, jacobsthal_element_printed, multiply, FreeWord, TLElement,
};
use tlhom::{Integers, ParamContext, PrimeField, Rationals, Ring};

fn word(ctx: &ParamContext<Integers>, n: usize, letters: Vec<usize>) -> TLElement<Integers> {
    from_word(ctx, &FreeWord::new(n, letters).unwrap()).unwrap()
}

fn letters(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..n, 0..8)
}

proptest! {
    #[test]
    fn relations_hold(a in -3i64..4, i in 1usize..5) {
        let n = 6;
        let ctx = ParamContext::with_a(Integers, a);
        let r = &ctx.ring;
        let u = |j| TLElement::generator(r, n, j).unwrap();
        let ui = u(i);
        prop_assert_eq!(multiply(&ctx, &ui, &ui).unwrap(), ui.scale(r, &ctx.a));
        let next = u(i + 1);
        let x = multiply(&ctx, &multiply(&ctx, &ui, &next).unwrap(), &ui).unwrap();
        prop_assert_eq!(x, ui.clone());
        for j in 1..n {
            if j + 1 < i || j > i + 1 {
                prop_assert_eq!(multiply(&ctx, &ui, &u(j)).unwrap(), multiply(&ctx, &u(j), &ui).unwrap());
            }
        }
    }

    #[test]
    fn product_is_associative(x in letters(5), y in letters(5), z in letters(5), a in -2i64..3) {
        let ctx = ParamContext::with_a(Integers, a);
        let (x, y, z) = (word(&ctx, 5, x), word(&ctx, 5, y), word(&ctx, 5, z));
        let left = multiply(&ctx, &multiply(&ctx, &x, &y).unwrap(), &z).unwrap();
        let right = multiply(&ctx, &x, &multiply(&ctx, &y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn words_are_monomials_times_a_power(x in letters(5), a in 2i64..4) {
        let ctx = ParamContext::with_a(Integers, a);
        let e = word(&ctx, 5, x);
        prop_assert_eq!(e.len(), 1);
        let (_, c) = e.terms().next().unwrap();
        let mut k = c.clone();
        while k > BigInt::from(1) {
            prop_assert_eq!(&k % a, BigInt::from(0));
            k /= a;
        }
    }
}

fn top_differential_is_jacobsthal<R: Ring>(ctx: &ParamContext<R>) {
    for n in 1..=6 {
        let j = jacobsthal_element(ctx, n).unwrap();
        let d = w_multiplier(ctx, n, n - 1).unwrap();
        assert_eq!(j, d, "n = {n} over {}", ctx.describe());
    }
}

#[test]
fn jacobsthal_is_top_differential() {
    for v in [1, -1] {
        top_differential_is_jacobsthal(&ParamContext::with_v(Integers, v).unwrap());
    }
    for v in [2, 3, -5] {
        top_differential_is_jacobsthal(&ParamContext::with_v(Rationals, v).unwrap());
    }
    for v in 1..5 {
        top_differential_is_jacobsthal(&ParamContext::with_v(PrimeField::new(5).unwrap(), v).unwrap());
    }
}

#[test]
fn printed_formula_differs_by_sign_pattern() {
    for v in [1i64, 2, 3] {
        let ctx = ParamContext::with_v(Rationals, v).unwrap();
        let r = &ctx.ring;
        let coeff = r.mul(ctx.mu().unwrap(), &ctx.lambda_inv().unwrap());
        let u1 = TLElement::generator(r, 2, 1).unwrap();
        assert_eq!(jacobsthal_element_printed(&ctx, 2).unwrap(), u1.scale(r, &coeff));
        assert_eq!(jacobsthal_element(&ctx, 2).unwrap(), u1.scale(r, &r.neg(&coeff)));
        let u2 = TLElement::generator(r, 3, 2).unwrap();
        let gap = jacobsthal_element(&ctx, 3).unwrap().sub(r, &jacobsthal_element_printed(&ctx, 3).unwrap());
        assert_eq!(gap, u2.scale(r, &r.add(&coeff, &coeff)));
    }
}

#[test]
fn jacobsthal_times_generator_lies_in_ideal() {
    let ctx = ParamContext::with_v(Integers, 1).unwrap();
    for n in 2..=5 {
        assert!(up_jn_in_ideal(&ctx, n).unwrap(), "n = {n}");
    }
}

#[test]
fn fineberg_constant_terms_are_multiples_of_a() {
    for v in [1, -1] {
        let ctx = ParamContext::with_v(Integers, v).unwrap();
        for n in [2usize, 4] {
            let m = fineberg_module(&ctx, n).unwrap();
            let ambient = m.ambient.as_ref().unwrap();
            let one = tlhom::diagram::diagram_table(n).identity;
            for x in ambient {
                let e = TLElement::from_indexed(&Integers, n, x);
                assert_eq!(constant_term(&Integers, &e), x[one].clone());
                assert_eq!(&x[one] % &ctx.a, BigInt::from(0), "n = {n}, v = {v}");
            }
        }
    }
}
