use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tlhom::complex::{
    build_c, build_d, build_w, filtration_basis, subcomplex, trivial_coinvariants, trivial_invariants, ChainComplex,
};
use tlhom::diagram::{catalan, fine_number, jacobsthal_number};
use tlhom::homology::{
    cohomology, coinvariants, ext_trivial, fineberg_module, free_resolution, homology_at, homology_of,
    induced_as_module, tor_trivial, trivial_module, verify_shifted_iso, verify_tor_sequence, HomologyGroup,
    LeftModule,
};
use tlhom::jw::{compute_jw, jw_exists, qbc_delta_zero, quantum_binomial};
use tlhom::tlalg::{from_word, multiply, FreeWord, Rendered, TLElement};
use tlhom::{make_context, with_ring, Error, Param, ParamContext, Result, Ring, RingSpec, Theta};

#[derive(Parser)]
#[command(name = "tlhom", version, about = "Exact computations for Temperley-Lieb algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Coeffs {
    /// Coefficient ring: Z, Q or Fp:<p>
    #[arg(long, default_value = "Q")]
    ring: String,
    /// Loop value a, given directly
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Unit v with a = v + v^-1
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long, value_enum, default_value = "theta1")]
    theta: ThetaArg,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy)]
enum ThetaArg {
    Theta1,
    Theta2,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Sequence {
    Catalan,
    Fine,
    Jacobsthal,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Inductive {
    C,
    D,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two words in TL_n
    Mul {
        #[arg(long)]
        n: usize,
        left: String,
        right: String,
        #[command(flatten)]
        coeffs: Coeffs,
    },
    /// Dimensions and homology of W(n)
    Wn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        save: Option<PathBuf>,
        #[command(flatten)]
        coeffs: Coeffs,
    },
    /// Tor (or Ext) of the trivial module against a module, degrees 0 to max-degree - 1
    Tor {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// trivial, induced:<m> or fineberg
        #[arg(long, default_value = "trivial")]
        module: String,
        #[arg(long)]
        ext: bool,
        #[command(flatten)]
        coeffs: Coeffs,
    },
    /// The Jones-Wenzl projector of TL_n, if it exists
    Jw {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        coeffs: Coeffs,
    },
    /// Quantum binomials [n r] as polynomials in delta
    Qbc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta_zero: bool,
        #[arg(long)]
        json: bool,
    },
    /// The Fineberg module ker(J_n)
    Fineberg {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        coeffs: Coeffs,
    },
    /// Ranks of a free resolution of a module
    Resolve {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        length: usize,
        #[arg(long, default_value = "trivial")]
        module: String,
        #[command(flatten)]
        coeffs: Coeffs,
    },
    /// The filtration level F^k of W(n)
    Filtration {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        coeffs: Coeffs,
    },
    /// Integer sequences from 0 to upto
    Seq {
        #[arg(value_enum)]
        which: Sequence,
        #[arg(long)]
        upto: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check a claim and print PASS or FAIL with evidence
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Run every acceptance criterion
    Repro {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Verify {
    TorSequence {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        length: Option<usize>,
        #[command(flatten)]
        coeffs: Coeffs,
    },
    ShiftedIso {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        length: usize,
        #[command(flatten)]
        coeffs: Coeffs,
    },
    Acyclicity {
        #[arg(long, value_enum)]
        complex: Inductive,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 8)]
        length: usize,
        #[command(flatten)]
        coeffs: Coeffs,
    },
}

/// Text and JSON renderings of one run.
struct Output {
    text: String,
    json: Value,
}

fn usage(msg: &str) -> Error {
    Error::Parse(msg.to_string())
}

fn context<R: Ring>(ring: R, c: &Coeffs, need_v: bool) -> Result<ParamContext<R>> {
    let theta = match c.theta {
        ThetaArg::Theta1 => Theta::Theta1,
        ThetaArg::Theta2 => Theta::Theta2,
    };
    let param = match (&c.a, &c.v) {
        (Some(_), Some(_)) => return Err(usage("give only one of --a and --v")),
        (None, None) => return Err(usage("one of --a or --v is required")),
        (Some(_), None) if need_v => return Err(usage("this subcommand needs --v")),
        (Some(a), None) => Param::DirectA(ring.parse_elem(a)?),
        (None, Some(v)) => Param::FromUnit(ring.parse_elem(v)?),
    };
    make_context(ring, param, theta)
}

fn ring_spec(c: &Coeffs) -> Result<RingSpec> {
    c.ring.parse()
}

fn group_list(spec: RingSpec, gs: &[HomologyGroup]) -> (String, Value) {
    let text = gs.iter().map(|g| g.render(spec)).collect::<Vec<_>>().join(", ");
    (text, Value::Array(gs.iter().map(HomologyGroup::to_json).collect()))
}

fn homology_json(hs: &[(i64, HomologyGroup)]) -> Value {
    Value::Array(hs.iter().map(|(d, h)| json!({ "degree": d, "group": h.to_json() })).collect())
}

fn parse_module<R: Ring>(ctx: &ParamContext<R>, n: usize, spec: &str) -> Result<LeftModule<R>> {
    match spec {
        "trivial" => Ok(trivial_module(ctx, n)),
        "fineberg" => fineberg_module(ctx, n),
        s => {
            let m = s
                .strip_prefix("induced:")
                .and_then(|m| m.parse::<usize>().ok())
                .ok_or_else(|| usage(&format!("unknown module {s:?}")))?;
            induced_as_module(ctx, n, m)
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn mul<R: Ring>(ring: R, n: usize, left: &str, right: &str, c: &Coeffs) -> Result<Output> {
    let ctx = context(ring, c, false)?;
    let x = from_word(&ctx, &FreeWord::parse(n, left)?)?;
    let y = from_word(&ctx, &FreeWord::parse(n, right)?)?;
    let z = multiply(&ctx, &x, &y)?;
    Ok(Output { text: z.render(&ctx.ring), json: z.to_json(&ctx.ring) })
}

fn wn<R: Ring>(ring: R, n: usize, save: Option<&PathBuf>, c: &Coeffs) -> Result<Output> {
    let ctx = context(ring, c, true)?;
    let spec = ctx.ring.spec();
    let w = build_w(&ctx, n)?;
    if let Some(dir) = save {
        w.save(dir)?;
    }
    let hs = homology_of(&w);
    let fine = fine_number(n) as usize;
    let top = homology_at(&w, n as i64 - 1);
    let mut text = format!("W({n}) over {}\n", ctx.describe());
    for (d, h) in &hs {
        text += &format!("degree {d:>2}: dim {:>4}  H = {}\n", w.dim(*d), h.render(spec));
    }
    text += &format!("top rank {} vs fine({n}) = {fine}", top.free_rank);
    let json = json!({
        "n": n,
        "context": ctx.describe(),
        "dims": w.dims(),
        "homology": homology_json(&hs),
        "top_rank": top.free_rank,
        "fine": fine,
    });
    Ok(Output { text, json })
}

fn tor<R: Ring>(ring: R, n: usize, len: usize, module: &str, ext: bool, c: &Coeffs) -> Result<Output> {
    let ctx = context(ring, c, module == "fineberg")?;
    let m = parse_module(&ctx, n, module)?;
    let gs = if ext { ext_trivial(&m, len)? } else { tor_trivial(&m, len)? };
    let (text, groups) = group_list(ctx.ring.spec(), &gs);
    let nonzero: Vec<usize> = (1..gs.len()).filter(|&d| !gs[d].is_zero()).collect();
    let json = json!({
        "n": n,
        "context": ctx.describe(),
        "module": module,
        "kind": if ext { "ext" } else { "tor" },
        "groups": groups,
        "nonzero_positive_degrees": nonzero,
    });
    Ok(Output { text, json })
}

fn jw<R: Ring>(ring: R, n: usize, c: &Coeffs) -> Result<Output> {
    let ctx = context(ring, c, false)?;
    let exists = jw_exists(&ctx, n)?;
    let e = compute_jw(&ctx, n)?;
    let text = match &e {
        Some(e) => e.render(&ctx.ring),
        None => "none".to_string(),
    };
    let json = json!({
        "n": n,
        "context": ctx.describe(),
        "exists": exists,
        "projector": e.map(|e| e.to_json(&ctx.ring)),
    });
    Ok(Output { text, json })
}

fn qbc(n: usize, delta_zero: bool) -> Result<Output> {
    if delta_zero {
        let row = (0..=n).map(|r| qbc_delta_zero(n, r)).collect::<Result<Vec<_>>>()?;
        let text = row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let json = json!({ "n": n, "delta_zero": row.iter().map(|x| x.to_string()).collect::<Vec<_>>() });
        return Ok(Output { text, json });
    }
    let polys = (0..=n).map(|r| quantum_binomial(n, r)).collect::<Result<Vec<_>>>()?;
    let text = polys.iter().enumerate().map(|(r, p)| format!("[{n} {r}] = {p}")).collect::<Vec<_>>().join("\n");
    let json = json!({ "n": n, "binomials": polys.iter().map(|p| p.to_json()).collect::<Vec<_>>() });
    Ok(Output { text, json })
}

fn fineberg<R: Ring>(ring: R, n: usize, c: &Coeffs) -> Result<Output> {
    let ctx = context(ring, c, true)?;
    let m = fineberg_module(&ctx, n)?;
    let r = &ctx.ring;
    let basis: Vec<TLElement<R>> =
        m.ambient.iter().flatten().map(|x| TLElement::from_indexed(r, n, x)).collect();
    let co = coinvariants(&m);
    let mut text = format!("F_{n} over {}: rank {}, coinvariants {}\n", ctx.describe(), m.dim, co.render(r.spec()));
    for (k, e) in basis.iter().enumerate() {
        text += &format!("  f{k} = {}\n", Rendered(e, r));
    }
    let json = json!({
        "n": n,
        "context": ctx.describe(),
        "rank": m.dim,
        "fine": fine_number(n),
        "coinvariants": co.to_json(),
        "basis": basis.iter().map(|e| e.to_json(r)).collect::<Vec<_>>(),
    });
    Ok(Output { text: text.trim_end().to_string(), json })
}

fn resolve<R: Ring>(ring: R, n: usize, len: usize, module: &str, c: &Coeffs) -> Result<Output> {
    let ctx = context(ring, c, module == "fineberg")?;
    let m = parse_module(&ctx, n, module)?;
    let res = free_resolution(&m, len)?;
    let text = format!("ranks {:?}", res.ranks);
    let json = json!({ "n": n, "context": ctx.describe(), "module": module, "ranks": res.ranks });
    Ok(Output { text, json })
}

fn filtration<R: Ring>(ring: R, n: usize, k: usize, c: &Coeffs) -> Result<Output> {
    let ctx = context(ring, c, true)?;
    let w = build_w(&ctx, n)?;
    let labels = filtration_basis(&ctx, n, k)?;
    let sub = subcomplex(&w, &labels)?;
    let hs = homology_of(&sub);
    let dims: Vec<usize> = labels.iter().map(Vec::len).collect();
    let spec = ctx.ring.spec();
    let mut text = format!("F^{k} of W({n}) over {}\n", ctx.describe());
    for (d, h) in &hs {
        text += &format!("degree {d:>2}: dim {:>4}  H = {}\n", sub.dim(*d), h.render(spec));
    }
    let json = json!({ "n": n, "k": k, "dims": dims, "labels": labels, "homology": homology_json(&hs) });
    Ok(Output { text: text.trim_end().to_string(), json })
}

fn seq(which: Sequence, upto: usize) -> Output {
    let f = match which {
        Sequence::Catalan => catalan,
        Sequence::Fine => fine_number,
        Sequence::Jacobsthal => jacobsthal_number,
    };
    let values: Vec<u128> = (0..=upto).map(f).collect();
    let text = values.iter().map(u128::to_string).collect::<Vec<_>>().join(", ");
    let json = json!({ "values": values.iter().map(u128::to_string).collect::<Vec<_>>() });
    Output { text, json }
}

fn interior_report<R: Ring>(x: &ChainComplex<R>) -> (bool, Value) {
    let hs: Vec<(i64, HomologyGroup)> = (-1..=x.hi() - 2).map(|d| (d, homology_at(x, d))).collect();
    (hs.iter().all(|(_, h)| h.is_zero()), homology_json(&hs))
}

fn acyclicity<R: Ring>(ring: R, which: Inductive, n: usize, m: usize, len: usize, c: &Coeffs) -> Result<Output> {
    let ctx = context(ring, c, false)?;
    let x = match which {
        Inductive::C => build_c(&ctx, n, m, len)?,
        Inductive::D => build_d(&ctx, n, m, len)?,
    };
    let (ok_x, hx) = interior_report(&x);
    let (ok_t, ht) = interior_report(&trivial_coinvariants(&x)?);
    let hom = trivial_invariants(&x)?;
    let top = hom.hi();
    let hh: Vec<(i64, HomologyGroup)> = cohomology(&hom)?.into_iter().filter(|(d, _)| *d <= top - 2).collect();
    let ok_h = hh.iter().all(|(_, h)| h.is_zero());
    let ok = ok_x && ok_t && ok_h;
    let json = json!({
        "verdict": verdict(ok),
        "context": ctx.describe(),
        "complex": homology_json(&homology_of(&x)),
        "interior": hx,
        "coinvariants_interior": ht,
        "hom_interior": homology_json(&hh),
    });
    Ok(Output { text: format!("{}\n{}", verdict(ok), json), json })
}

fn run_ring<R: Ring>(ring: R, cmd: &Cmd) -> Result<Output> {
    match cmd {
        Cmd::Mul { n, left, right, coeffs } => mul(ring, *n, left, right, coeffs),
        Cmd::Wn { n, save, coeffs } => wn(ring, *n, save.as_ref(), coeffs),
        Cmd::Tor { n, max_degree, module, ext, coeffs } => tor(ring, *n, *max_degree, module, *ext, coeffs),
        Cmd::Jw { n, coeffs } => jw(ring, *n, coeffs),
        Cmd::Fineberg { n, coeffs } => fineberg(ring, *n, coeffs),
        Cmd::Resolve { n, length, module, coeffs } => resolve(ring, *n, *length, module, coeffs),
        Cmd::Filtration { n, k, coeffs } => filtration(ring, *n, *k, coeffs),
        Cmd::Verify { what } => match what {
            Verify::TorSequence { n, length, coeffs } => {
                let ctx = context(ring, coeffs, true)?;
                let r = verify_tor_sequence(&ctx, *n, length.unwrap_or(n + 1))?;
                let json = r.to_json();
                Ok(Output { text: format!("{}\n{}", verdict(r.exact), json), json })
            }
            Verify::ShiftedIso { n, length, coeffs } => {
                let ctx = context(ring, coeffs, true)?;
                let r = verify_shifted_iso(&ctx, *n, *length)?;
                let json = r.to_json();
                Ok(Output { text: format!("{}\n{}", verdict(r.holds), json), json })
            }
            Verify::Acyclicity { complex, n, m, length, coeffs } => {
                acyclicity(ring, *complex, *n, *m, *length, coeffs)
            }
        },
        Cmd::Qbc { .. } | Cmd::Seq { .. } | Cmd::Repro { .. } => unreachable!("ring-free subcommand"),
    }
}

fn coeffs_of(cmd: &Cmd) -> Option<&Coeffs> {
    match cmd {
        Cmd::Mul { coeffs, .. }
        | Cmd::Wn { coeffs, .. }
        | Cmd::Tor { coeffs, .. }
        | Cmd::Jw { coeffs, .. }
        | Cmd::Fineberg { coeffs, .. }
        | Cmd::Resolve { coeffs, .. }
        | Cmd::Filtration { coeffs, .. } => Some(coeffs),
        Cmd::Verify { what } => match what {
            Verify::TorSequence { coeffs, .. }
            | Verify::ShiftedIso { coeffs, .. }
            | Verify::Acyclicity { coeffs, .. } => Some(coeffs),
        },
        Cmd::Qbc { .. } | Cmd::Seq { .. } | Cmd::Repro { .. } => None,
    }
}

fn repro() -> Output {
    let reports = tlhom::repro::run_all();
    let json = Value::Array(
        reports
            .iter()
            .map(|r| json!({ "id": r.id, "title": r.title, "passed": r.passed, "notes": r.notes }))
            .collect(),
    );
    Output { text: tlhom::repro::scoreboard(&reports).trim_end().to_string(), json }
}

fn run(cli: &Cli) -> Result<(Output, bool)> {
    match &cli.cmd {
        Cmd::Qbc { n, delta_zero, json } => Ok((qbc(*n, *delta_zero)?, *json)),
        Cmd::Seq { which, upto, json } => Ok((seq(*which, *upto), *json)),
        Cmd::Repro { json } => Ok((repro(), *json)),
        cmd => {
            let coeffs = coeffs_of(cmd).expect("ring subcommand");
            let spec = ring_spec(coeffs)?;
            let out = with_ring!(spec, r => run_ring(r, cmd)?);
            Ok((out, coeffs.json))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, json)) => {
            let text = if json {
                serde_json::to_string_pretty(&out.json).expect("json values serialize")
            } else {
                out.text
            };
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
