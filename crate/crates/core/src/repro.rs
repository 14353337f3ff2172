//! The acceptance criteria as runnable checks with a PASS/FAIL verdict each.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeff::{Integers, ParamContext, PrimeField, Rationals, Ring};
use crate::complex::{
    build_c, build_d, build_w, filtration_basis, is_chain_iso, phi0, psik, trivial_coinvariants, trivial_invariants,
    ChainComplex,
};
use crate::diagram::{catalan, diagram_to_jones_word, enumerate_diagrams, fine_number, jones_word_to_diagram};
use crate::error::Result;
use crate::homology::{
    cohomology, homology_at, induced_as_module, tl2_tor_ext, tor_from_resolution, ext_from_resolution,
    free_resolution, tor_trivial, trivial_module, verify_shifted_iso, verify_tor_sequence, HomologyGroup,
};
use crate::jw::{compute_jw, jw_exists, qbc_delta_zero, quantum_binomial, DeltaPoly};
use crate::tlalg::{jones_normal_form, FreeWord};

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2}: {} ({:.1?})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed
        )
    }
}

/// Collects failed checks for one criterion.
#[derive(Default)]
struct Checks {
    notes: Vec<String>,
    failed: bool,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failed = true;
            self.notes.push(format!("failed: {}", what()));
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }
}

pub const TITLES: [&str; 12] = [
    "diagram counts",
    "normal form and word round trips",
    "W(n) is a complex",
    "homology of W(n)",
    "C(m) and D(m) are acyclic",
    "Tor and Ext of TL_2",
    "vanishing at delta = 0",
    "sharpness at n - 1",
    "induced modules",
    "exact sequences and shifted isomorphisms",
    "filtration isomorphisms",
    "Jones-Wenzl projectors",
];

pub fn run(id: usize) -> CriterionReport {
    let start = Instant::now();
    let mut c = Checks::default();
    let outcome = match id {
        1 => criterion_1(&mut c),
        2 => criterion_2(&mut c),
        3 => criterion_3(&mut c),
        4 => criterion_4(&mut c),
        5 => criterion_5(&mut c),
        6 => criterion_6(&mut c),
        7 => criterion_7(&mut c),
        8 => criterion_8(&mut c),
        9 => criterion_9(&mut c),
        10 => criterion_10(&mut c),
        11 => criterion_11(&mut c),
        12 => criterion_12(&mut c),
        _ => panic!("no criterion {id}"),
    };
    if let Err(e) = outcome {
        c.failed = true;
        c.notes.push(format!("error: {e}"));
    }
    CriterionReport { id, title: TITLES[id - 1], passed: !c.failed, notes: c.notes, elapsed: start.elapsed() }
}

/// All criteria, run on parallel threads, reported in order.
pub fn run_all() -> Vec<CriterionReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = (1..=12).map(|id| s.spawn(move || run(id))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread panicked")).collect()
    })
}

pub fn scoreboard(reports: &[CriterionReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{}", r.line());
        for n in &r.notes {
            let _ = writeln!(out, "    {n}");
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "{passed}/{} criteria passed", reports.len());
    out
}

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).expect("small prime")
}

fn criterion_1(c: &mut Checks) -> Result<()> {
    for n in 0..=8 {
        let k = enumerate_diagrams(n).len() as u128;
        c.check(k == catalan(n), || format!("|diagrams({n})| = {k}"));
    }
    for n in 1..=10 {
        let lhs = catalan(n);
        let rhs = 2 * fine_number(n) + fine_number(n - 1);
        c.check(lhs == rhs, || format!("catalan({n}) = {lhs} but 2 fine(n) + fine(n-1) = {rhs}"));
    }
    Ok(())
}

fn criterion_2(c: &mut Checks) -> Result<()> {
    let (loops, w) = jones_normal_form(&FreeWord::parse(5, "U2 U1 U4 U2 U3")?)?;
    c.check(loops == 0 && w.to_string() == "(U4)(U2 U3)", || format!("normal form {w} with {loops} loops"));
    for n in 0..=6 {
        for d in enumerate_diagrams(n) {
            let w = diagram_to_jones_word(&d);
            let back = jones_word_to_diagram(&w)?;
            c.check(back == d, || format!("round trip of {d} through {w}"));
            let (l, again) = jones_normal_form(&FreeWord::from(&w))?;
            c.check(l == 0 && again == w, || format!("{w} is not in normal form"));
        }
    }
    Ok(())
}

fn w_contexts() -> Result<(ParamContext<Rationals>, ParamContext<PrimeField>, ParamContext<PrimeField>)> {
    Ok((ParamContext::with_v(Rationals, 1)?, ParamContext::with_v(f(2), 1)?, ParamContext::with_v(f(5), 2)?))
}

fn criterion_3(c: &mut Checks) -> Result<()> {
    let (q, f2, f5) = w_contexts()?;
    for n in 0..=7 {
        // construction asserts d o d = 0
        let dims = build_w(&q, n)?.dims().to_vec();
        build_w(&f2, n)?;
        build_w(&f5, n)?;
        c.check(dims.last().copied() == Some(catalan(n) as usize), || format!("top dim of W({n})"));
    }
    Ok(())
}

fn check_w_homology<R: Ring>(c: &mut Checks, ctx: &ParamContext<R>, n: usize) -> Result<HomologyGroup> {
    let w = build_w(ctx, n)?;
    for d in -1..=(n as i64 - 2) {
        let h = homology_at(&w, d);
        c.check(h.is_zero(), || format!("H_{d}(W({n})) = {h} over {}", ctx.describe()));
    }
    Ok(homology_at(&w, n as i64 - 1))
}

fn criterion_4(c: &mut Checks) -> Result<()> {
    let (q, f2, f5) = w_contexts()?;
    let z = ParamContext::with_v(Integers, 1)?;
    for n in 1..=6 {
        let fine = fine_number(n) as usize;
        for top in [check_w_homology(c, &q, n)?, check_w_homology(c, &f2, n)?, check_w_homology(c, &f5, n)?] {
            c.check(top == HomologyGroup::free(fine), || format!("H_top(W({n})) = {top}, fine = {fine}"));
        }
        let top = check_w_homology(c, &z, n)?;
        c.check(top.torsion.is_empty() && top.free_rank == fine, || format!("H_top(W({n})) over Z = {top}"));
    }
    c.note("top homology over Z (v=1) is free of rank fine(n) for n <= 6".into());
    Ok(())
}

fn interior_zero<R: Ring>(c: &mut Checks, x: &ChainComplex<R>, what: &str) {
    for d in -1..=x.hi() - 2 {
        let h = homology_at(x, d);
        c.check(h.is_zero(), || format!("{what}: H_{d} = {h}"));
    }
}

fn cochain_interior_zero<R: Ring>(c: &mut Checks, x: &crate::complex::CochainComplex<R>, what: &str) -> Result<()> {
    let top = x.hi();
    for (d, h) in cohomology(x)? {
        if d <= top - 2 {
            c.check(h.is_zero(), || format!("{what}: H^{d} = {h}"));
        }
    }
    Ok(())
}

fn acyclicity<R: Ring>(c: &mut Checks, ctx: &ParamContext<R>, use_c: bool) -> Result<()> {
    const L: usize = 8;
    for n in 2..=5 {
        let ms: Vec<usize> = if use_c { (2..=n).collect() } else { (2..n).collect() };
        for m in ms {
            let x = if use_c { build_c(ctx, n, m, L)? } else { build_d(ctx, n, m, L)? };
            let name = format!("{}(m={m}) n={n} {}", if use_c { "C" } else { "D" }, ctx.describe());
            interior_zero(c, &x, &name);
            interior_zero(c, &trivial_coinvariants(&x)?, &format!("1 (x) {name}"));
            cochain_interior_zero(c, &trivial_invariants(&x)?, &format!("Hom({name}, 1)"))?;
        }
    }
    Ok(())
}

fn criterion_5(c: &mut Checks) -> Result<()> {
    acyclicity(c, &ParamContext::with_a(Rationals, 2), true)?;
    acyclicity(c, &ParamContext::with_a(f(5), 1), true)?;
    acyclicity(c, &ParamContext::with_a(Integers, 1), true)?;
    acyclicity(c, &ParamContext::with_a(Integers, 2), false)?;
    acyclicity(c, &ParamContext::with_a(f(2), 0), false)?;
    acyclicity(c, &ParamContext::with_a(Rationals, 2), false)?;
    Ok(())
}

/// `R/aR` and the annihilator `R_a`.
fn quotient_and_annihilator<R: Ring>(ctx: &ParamContext<R>) -> (HomologyGroup, HomologyGroup) {
    let ann = if ctx.ring.is_zero(&ctx.a) { HomologyGroup::free(1) } else { HomologyGroup::zero() };
    (HomologyGroup::quotient_by(&ctx.ring, &ctx.a), ann)
}

fn tl2_table<R: Ring>(c: &mut Checks, ctx: &ParamContext<R>) -> Result<()> {
    const L: usize = 7;
    let (quot, ann) = quotient_and_annihilator(ctx);
    let expect_tor: Vec<HomologyGroup> = (0..L)
        .map(|i| match i {
            0 => HomologyGroup::free(1),
            i if i % 2 == 1 => quot.clone(),
            _ => ann.clone(),
        })
        .collect();
    let expect_ext: Vec<HomologyGroup> = (0..L)
        .map(|i| match i {
            0 => HomologyGroup::free(1),
            i if i % 2 == 1 => ann.clone(),
            _ => quot.clone(),
        })
        .collect();
    let (tor_explicit, ext_explicit) = tl2_tor_ext(ctx, L)?;
    let res = free_resolution(&trivial_module(ctx, 2), L)?;
    let tor_generic = tor_from_resolution(&res, L)?;
    let ext_generic = ext_from_resolution(&res, L)?;
    let what = ctx.describe();
    c.check(tor_explicit == expect_tor, || format!("{what}: explicit Tor {tor_explicit:?}"));
    c.check(ext_explicit == expect_ext, || format!("{what}: explicit Ext {ext_explicit:?}"));
    c.check(tor_generic == tor_explicit, || format!("{what}: generic Tor {tor_generic:?}"));
    c.check(ext_generic == ext_explicit, || format!("{what}: generic Ext {ext_generic:?}"));
    Ok(())
}

fn criterion_6(c: &mut Checks) -> Result<()> {
    tl2_table(c, &ParamContext::with_a(Integers, 2))?;
    tl2_table(c, &ParamContext::with_a(f(2), 0))?;
    tl2_table(c, &ParamContext::with_a(Rationals, 2))?;
    Ok(())
}

fn vanishing<R: Ring>(c: &mut Checks, ctx: &ParamContext<R>, n: usize, top: usize) -> Result<()> {
    let tor = tor_trivial(&trivial_module(ctx, n), top + 1)?;
    for (d, h) in tor.iter().enumerate().skip(1) {
        c.check(h.is_zero(), || format!("Tor_{d} at n={n} {} is {h}", ctx.describe()));
    }
    Ok(())
}

fn criterion_7(c: &mut Checks) -> Result<()> {
    let f5 = ParamContext::with_v(f(5), 2)?;
    vanishing(c, &f5, 5, 4)?;
    vanishing(c, &ParamContext::with_v(f(2), 1)?, 3, 2)?;
    vanishing(c, &f5, 4, 2)?;
    Ok(())
}

fn sharpness<R: Ring>(c: &mut Checks, ctx: &ParamContext<R>, n: usize) -> Result<()> {
    let r = verify_tor_sequence(ctx, n, n + 1)?;
    let ring = &ctx.ring;
    let what = format!("n={n} {}", ctx.describe());
    c.check(!r.tor_n_minus_1.is_zero(), || format!("{what}: Tor_(n-1) vanishes"));
    c.check(r.tor_n_minus_1 == r.cokernel_of_c, || format!("{what}: Tor_(n-1) = {} is not R/bR", r.tor_n_minus_1));
    let b = ring.from_bigint(&r.b);
    let multiple = ring.div_exact(&b, &ctx.a).is_some();
    c.check(multiple, || format!("{what}: b = {} is not a multiple of a", r.b));
    c.note(format!("{what}: Tor_{} = {}, b = {}", n - 1, r.tor_n_minus_1.render(ring.spec()), r.b));
    Ok(())
}

fn criterion_8(c: &mut Checks) -> Result<()> {
    sharpness(c, &ParamContext::with_v(Integers, 1)?, 2)?;
    sharpness(c, &ParamContext::with_v(f(2), 1)?, 2)?;
    sharpness(c, &ParamContext::with_v(f(5), 2)?, 4)?;
    Ok(())
}

fn induced_vanishing<R: Ring>(c: &mut Checks, ctx: &ParamContext<R>, n: usize, m: usize) -> Result<()> {
    let tor = tor_trivial(&induced_as_module(ctx, n, m)?, 4)?;
    for (d, h) in tor.iter().enumerate().skip(1) {
        c.check(h.is_zero(), || format!("Tor_{d}(1, induced({n},{m})) over {} is {h}", ctx.describe()));
    }
    Ok(())
}

fn criterion_9(c: &mut Checks) -> Result<()> {
    let f2 = ParamContext::with_v(f(2), 1)?;
    let z = ParamContext::with_v(Integers, 1)?;
    let q = ParamContext::with_a(Rationals, 2);
    for n in 1..=4 {
        for m in 0..n {
            induced_vanishing(c, &f2, n, m)?;
            induced_vanishing(c, &z, n, m)?;
        }
        induced_vanishing(c, &q, n, n)?;
    }
    Ok(())
}

fn sequences<R: Ring>(c: &mut Checks, ctx: &ParamContext<R>) -> Result<()> {
    let what = ctx.describe();
    let seq = verify_tor_sequence(ctx, 2, 3)?;
    c.check(seq.exact, || format!("{what}: sequence {}", seq.to_json()));
    let iso = verify_shifted_iso(ctx, 2, 6)?;
    c.check(iso.holds, || format!("{what}: shifted iso {}", iso.to_json()));
    let (quot, ann) = quotient_and_annihilator(ctx);
    for (i, left, _) in &iso.rows {
        let expect = if i % 2 == 1 { &quot } else { &ann };
        c.check(left == expect, || format!("{what}: Tor_{i} = {left}"));
    }
    Ok(())
}

fn criterion_10(c: &mut Checks) -> Result<()> {
    sequences(c, &ParamContext::with_v(Integers, 1)?)?;
    sequences(c, &ParamContext::with_v(f(2), 1)?)?;
    Ok(())
}

fn filtration<R: Ring>(c: &mut Checks, ctx: &ParamContext<R>) -> Result<()> {
    let what = ctx.describe();
    for n in 1..=5 {
        let f = phi0(ctx, n)?;
        c.check(f.is_chain_map() && is_chain_iso(&f), || format!("{what}: phi0 n={n}"));
        for k in 1..n {
            let g = psik(ctx, n, k)?;
            c.check(g.is_chain_map() && is_chain_iso(&g), || format!("{what}: psi^{k} n={n}"));
        }
    }
    for n in 1..=6 {
        let w = build_w(ctx, n)?;
        let levels: Vec<Vec<Vec<String>>> = (0..=n).map(|k| filtration_basis(ctx, n, k)).collect::<Result<_>>()?;
        for (s, i) in (-1..n as i64).enumerate() {
            let mut total = levels[0][s].len();
            for k in 1..=n {
                let nested = levels[k - 1][s].iter().all(|l| levels[k][s].contains(l));
                c.check(nested, || format!("F^{} not inside F^{k} at n={n}, degree {i}", k - 1));
                total += levels[k][s].len() - levels[k - 1][s].len();
            }
            c.check(total == w.dim(i), || format!("filtration of W({n}) at degree {i}: {total}"));
        }
    }
    Ok(())
}

fn criterion_11(c: &mut Checks) -> Result<()> {
    filtration(c, &ParamContext::with_v(Rationals, 1)?)?;
    filtration(c, &ParamContext::with_v(f(5), 2)?)?;
    Ok(())
}

fn jw_over(c: &mut Checks, p: u64) -> Result<()> {
    for v in 1..p as i64 {
        let ctx = ParamContext::with_v(f(p), v)?;
        for n in 1..=6 {
            let exists = jw_exists(&ctx, n)?;
            let found = compute_jw(&ctx, n)?;
            c.check(found.is_some() == exists, || format!("F_{p} v={v} n={n}: jw_exists = {exists}"));
            if found.is_some() && n <= 4 {
                let tor = tor_trivial(&trivial_module(&ctx, n), 4)?;
                for (d, h) in tor.iter().enumerate().skip(1) {
                    c.check(h.is_zero(), || format!("F_{p} v={v} n={n}: JW exists but Tor_{d} = {h}"));
                }
            }
        }
    }
    Ok(())
}

fn criterion_12(c: &mut Checks) -> Result<()> {
    for n in 0..=12 {
        for r in 0..=n {
            let p = quantum_binomial(n, r)?;
            let at_zero = p.eval_int(&BigInt::zero());
            let closed = qbc_delta_zero(n, r)?;
            c.check(at_zero == closed, || format!("[{n} {r}] at delta=0 is {at_zero}, closed form {closed}"));
        }
    }
    let expect = [
        (3, 1, DeltaPoly::from_i64(&[-1, 0, 1])),
        (4, 1, DeltaPoly::from_i64(&[0, -2, 0, 1])),
        (4, 2, DeltaPoly::from_i64(&[2, 0, -3, 0, 1])),
    ];
    for (n, r, e) in expect {
        let p = quantum_binomial(n, r)?;
        c.check(p == e, || format!("[{n} {r}] = {p}"));
    }
    for p in [2, 3, 5, 7] {
        jw_over(c, p)?;
    }
    Ok(())
}
