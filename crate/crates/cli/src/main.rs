mod expr;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hall_core::classical::{self, GenericHallElement};
use hall_core::engine::{Backend, ClassicalGeneric, Engine, KClass, Lin, QuiverAtQ, H, T};
use hall_core::exactnum::{qint_plus, LaurentPoly, QrtScalar};
use hall_core::partitions::Partition;
use hall_core::quiverrep::{IsoLabel, ParsedSpec, Quiver, QuiverSpec, RepCategory, DEFAULT_BUDGET};
use hall_core::verify::{self, Report, Suite};
use hall_core::HallError;

#[derive(Parser)]
#[command(name = "hall", version, about = "Exact Hall algebra computations")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// classical (generic in t) or quiver (fixed q, needs --quiver)
    #[arg(long, value_enum, global = true)]
    backend: Option<BackendKind>,
    /// Quiver description in JSON
    #[arg(long, global = true)]
    quiver: Option<PathBuf>,
    /// Prime field size; a comma-separated list where a suite takes several
    #[arg(long, global = true)]
    q: Option<String>,
    /// Enumeration budget (points for quiver backends, degree for classical)
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum BackendKind {
    Classical,
    Quiver,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hall polynomial P^ν_{μλ}(t), optionally checked by brute force
    Hallpoly {
        nu: String,
        mu: String,
        lambda: String,
        #[arg(long, value_delimiter = ',')]
        check_q: Vec<u32>,
    },
    /// Evaluate a product expression
    Mult {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Green's coproduct of an expression
    Comult {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antipode of an expression
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run a verification suite
    Verify {
        suite: String,
        /// Degree or total-dimension bound
        #[arg(long)]
        deg: Option<u32>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<HallError> for Failure {
    fn from(e: HallError) -> Self {
        let code = match e {
            HallError::Parse(_) | HallError::Domain(_) => 2,
            HallError::Resource(_) => 3,
            HallError::Consistency(_) => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

type Res<T> = std::result::Result<T, Failure>;

/// What a command produced: a body and whether every check passed.
struct Output {
    body: String,
    ok: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Self { body, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut body = out.body;
            if !body.ends_with('\n') {
                body.push('\n');
            }
            match &cli.opts.out {
                Some(p) => {
                    if let Err(e) = fs::write(p, &body) {
                        eprintln!("error: cannot write {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{body}"),
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn q_list(opts: &Opts, default: &[u32]) -> Res<Vec<u32>> {
    match &opts.q {
        None => Ok(default.to_vec()),
        Some(s) => s
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| usage(format!("--q: {x:?} is not a prime"))))
            .collect(),
    }
}

fn single_q(opts: &Opts) -> Res<u32> {
    let qs = q_list(opts, &[2])?;
    match qs.as_slice() {
        [q] => Ok(*q),
        _ => Err(usage("--q takes a single prime here")),
    }
}

fn budget(opts: &Opts) -> u64 {
    opts.budget.unwrap_or(DEFAULT_BUDGET)
}

/// The category selected by `--quiver`, or `default` when absent.
fn quiver_category(opts: &Opts, default: Option<Quiver>) -> Res<RepCategory> {
    let q = single_q(opts)?;
    let cat = match &opts.quiver {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            match QuiverSpec::from_json(&text)?.parse()? {
                ParsedSpec::Jordan => RepCategory::jordan(q)?,
                ParsedSpec::Quiver { quiver, nilpotent } => RepCategory::new(&quiver, q, nilpotent)?,
            }
        }
        None => match default {
            Some(quiver) => RepCategory::new(&quiver, q, false)?,
            None => return Err(usage("this command needs --quiver FILE")),
        },
    };
    Ok(cat.with_budget(budget(opts)))
}

fn quiver_backend(opts: &Opts, default: Option<Quiver>) -> Res<QuiverAtQ> {
    Ok(QuiverAtQ::new(quiver_category(opts, default)?, "quiver"))
}

fn use_quiver(opts: &Opts) -> Res<bool> {
    match opts.backend {
        Some(BackendKind::Quiver) => Ok(true),
        Some(BackendKind::Classical) => {
            if opts.quiver.is_some() {
                return Err(usage("--quiver conflicts with --backend classical"));
            }
            Ok(false)
        }
        None => Ok(opts.quiver.is_some()),
    }
}

fn run(cli: &Cli) -> Res<Output> {
    let opts = &cli.opts;
    match &cli.cmd {
        Cmd::Hallpoly { nu, mu, lambda, check_q } => hallpoly(opts, nu, mu, lambda, check_q),
        Cmd::Mult { expr } => element_cmd(opts, expr, Op::Mult),
        Cmd::Comult { expr } => element_cmd(opts, expr, Op::Comult),
        Cmd::Antipode { expr } => element_cmd(opts, expr, Op::Antipode),
        Cmd::Verify { suite, deg } => {
            let suite: Suite = suite.parse().map_err(|e: HallError| usage(e.to_string()))?;
            verify_cmd(opts, suite, *deg)
        }
    }
}

fn parse_partition(s: &str) -> Res<Partition> {
    s.parse::<Partition>()
        .map_err(|e| usage(format!("{s:?} is not a partition: {e}")))
}

/// `t^a Π [n_i]_+` when `p` factors that way, else `None`.
fn qint_factorization(p: &LaurentPoly) -> Option<(num_bigint::BigInt, i64, Vec<u32>)> {
    if p.is_zero() {
        return None;
    }
    let mut rest = p.clone();
    let mut factors = Vec::new();
    let deg = p.max_exp()? - p.min_exp()?;
    for n in (2..=(deg as u32 + 1)).rev() {
        let f = qint_plus(n);
        while let Some(d) = rest.exact_div(&f) {
            factors.push(n);
            rest = d;
        }
    }
    if !rest.is_monomial() {
        return None;
    }
    let e = rest.min_exp()?;
    factors.reverse();
    Some((rest.coeff(e), e, factors))
}

fn latex_laurent(p: &LaurentPoly) -> String {
    let expanded = || {
        let s = p.render("t");
        let mut out = String::new();
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            if c == '^' {
                out.push_str("^{");
                while let Some(&d) = chars.peek() {
                    if d == '-' && out.ends_with('{') || d.is_ascii_digit() {
                        out.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push('}');
            } else {
                out.push(c);
            }
        }
        out
    };
    match qint_factorization(p) {
        Some((c, e, factors)) if !factors.is_empty() => {
            let mut out = String::new();
            if c == (-1).into() {
                out.push('-');
            } else if c != 1.into() {
                out.push_str(&c.to_string());
            }
            match e {
                0 => {}
                1 => out.push('t'),
                e => out.push_str(&format!("t^{{{e}}}")),
            }
            for n in factors {
                out.push_str(&format!("[{n}]_{{+}}"));
            }
            out
        }
        _ => expanded(),
    }
}

fn hallpoly(opts: &Opts, nu: &str, mu: &str, lambda: &str, check_q: &[u32]) -> Res<Output> {
    let (nu, mu, lambda) = (parse_partition(nu)?, parse_partition(mu)?, parse_partition(lambda)?);
    let poly = classical::hall_poly(&nu, &mu, &lambda)?;
    let mut checks = Vec::new();
    for &q in check_q {
        let count: u64 = if nu.size() != mu.size() + lambda.size() {
            0
        } else {
            let cat = RepCategory::jordan(q)?.with_budget(budget(opts));
            let r = cat.representative(&IsoLabel::Partition(nu.clone()))?;
            cat.count_submodules(&r, &IsoLabel::Partition(mu.clone()), &IsoLabel::Partition(lambda.clone()))?
        };
        let eval = poly.eval_int_exact(q as i64).expect("Hall polynomials lie in Z[t]");
        checks.push((q, count, eval.clone(), eval == count.into()));
    }
    let ok = checks.iter().all(|c| c.3);
    let body = match opts.format {
        Format::Text => {
            let mut s = poly.to_string();
            for (q, count, eval, m) in &checks {
                s.push_str(&format!(
                    "\nq={q}: count {count}, P({q}) = {eval}, {}",
                    if *m { "match" } else { "MISMATCH" }
                ));
            }
            s
        }
        Format::Json => serde_json::to_string_pretty(&json!({
            "nu": nu, "mu": mu, "lambda": lambda,
            "poly": poly.to_string(),
            "checks": checks.iter().map(|(q, c, e, m)| json!({"q": q, "count": c, "eval": e.to_string(), "match": m})).collect::<Vec<_>>(),
        }))
        .expect("serializable"),
        Format::Csv => {
            let base = [nu.to_string(), mu.to_string(), lambda.to_string(), poly.to_string()];
            let rows: Vec<Vec<String>> = if checks.is_empty() {
                vec![base.iter().cloned().chain(std::iter::repeat_n(String::new(), 4)).collect()]
            } else {
                checks
                    .iter()
                    .map(|(q, c, e, m)| {
                        let mut r = base.to_vec();
                        r.extend([q.to_string(), c.to_string(), e.to_string(), m.to_string()]);
                        r
                    })
                    .collect()
            };
            csv_table(&["nu", "mu", "lambda", "poly", "q", "count", "eval", "match"], rows)
        }
        Format::Latex => {
            let tex = |p: &Partition| p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            format!(
                "P^{{({})}}_{{({}),({})}}(t) = {}",
                tex(&nu),
                tex(&mu),
                tex(&lambda),
                latex_laurent(&poly)
            )
        }
    };
    Ok(Output { body, ok })
}

#[derive(Clone, Copy)]
enum Op {
    Mult,
    Comult,
    Antipode,
}

/// Coefficient rendering for LaTeX output.
trait TexCoeff {
    fn tex(&self) -> String;
}

impl TexCoeff for LaurentPoly {
    fn tex(&self) -> String {
        latex_laurent(self)
    }
}

impl TexCoeff for QrtScalar {
    fn tex(&self) -> String {
        self.render()
    }
}

fn tex_term(coeff: &str, basis: &str) -> String {
    match coeff {
        "1" => basis.to_string(),
        "-1" => format!("-{basis}"),
        c if has_top_sign(c) => format!("\\left({c}\\right){basis}"),
        c => format!("{c}\\,{basis}"),
    }
}

/// A `+` or `-` outside braces past the leading sign.
fn has_top_sign(c: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in c.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

fn join_tex(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = terms[0].clone();
    for t in &terms[1..] {
        match t.strip_prefix('-') {
            Some(r) => out.push_str(&format!(" - {r}")),
            None => out.push_str(&format!(" + {t}")),
        }
    }
    out
}

fn tex_basis<B: Backend>(e: &Engine<B>, b: &hall_core::engine::Basis<B::Label>) -> String {
    let kpart = if b.k.is_zero() { String::new() } else { format!("k_{{{}}}", b.k) };
    if e.is_zero_label(&b.label) {
        if kpart.is_empty() {
            "1".into()
        } else {
            kpart
        }
    } else {
        format!("{}{kpart}", b.label)
    }
}

fn emit_element<B: Backend>(e: &Engine<B>, x: &H<B>, fmt: Format) -> String
where
    B::Scalar: TexCoeff,
{
    match fmt {
        Format::Text => e.render(x),
        Format::Json => serde_json::to_string_pretty(&e.to_json(x)).expect("serializable"),
        Format::Csv => csv_table(
            &["label", "k_offset", "coeff"],
            e.to_json(x).as_array().unwrap().iter().map(|t| {
                vec![field(&t["label"]), t["k_offset"].to_string(), field(&t["coeff"])]
            }),
        ),
        Format::Latex => {
            let mut terms: Vec<_> = x.terms().collect();
            terms.sort_by_key(|(b, _)| (e.weight(b), b.label.clone(), b.k.clone()));
            join_tex(terms.into_iter().map(|(b, c)| tex_term(&c.tex(), &tex_basis(e, b))).collect())
        }
    }
}

fn emit_tensor<B: Backend>(e: &Engine<B>, t: &T<B>, fmt: Format) -> String
where
    B::Scalar: TexCoeff,
{
    match fmt {
        Format::Text => e.render_tensor(t),
        Format::Json => serde_json::to_string_pretty(&e.tensor_to_json(t)).expect("serializable"),
        Format::Csv => csv_table(
            &["left", "left_k", "right", "right_k", "coeff"],
            e.tensor_to_json(t).as_array().unwrap().iter().map(|r| {
                vec![
                    field(&r["left"]["label"]),
                    r["left"]["k_offset"].to_string(),
                    field(&r["right"]["label"]),
                    r["right"]["k_offset"].to_string(),
                    field(&r["coeff"]),
                ]
            }),
        ),
        Format::Latex => {
            let mut terms: Vec<_> = t.terms().collect();
            terms.sort_by_key(|((a, b), _)| (e.weight(a), a.label.clone(), a.k.clone(), e.weight(b), b.label.clone()));
            join_tex(
                terms
                    .into_iter()
                    .map(|((a, b), c)| tex_term(&c.tex(), &format!("{}\\otimes {}", tex_basis(e, a), tex_basis(e, b))))
                    .collect(),
            )
        }
    }
}

fn field(v: &serde_json::Value) -> String {
    v.as_str().map(String::from).unwrap_or_else(|| v.to_string())
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn parse_kclass(s: &str, rank: usize) -> Res<KClass> {
    let inner = s
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| usage(format!("bad K-class {s:?}")))?;
    let v: Vec<i64> = inner
        .split(',')
        .filter(|x| !x.is_empty())
        .map(|x| x.trim().parse::<i64>().map_err(|_| usage(format!("bad K-class {s:?}"))))
        .collect::<Res<_>>()?;
    if v.len() != rank {
        return Err(usage(format!("K-class {s:?} must have {rank} entries")));
    }
    Ok(KClass(v))
}

/// Builds `Σ ± c · f_1 ⋯ f_k` with the given label and scalar readers.
fn eval_expr<B: Backend>(
    e: &Engine<B>,
    src: &str,
    scalar: impl Fn(&str) -> Res<B::Scalar>,
    label: impl Fn(&str) -> Res<B::Label>,
) -> Res<H<B>> {
    let mut acc: H<B> = Lin::new();
    for term in expr::parse(src)? {
        let mut factors = Vec::new();
        for f in &term.factors {
            if let Some(k) = f.strip_prefix('k') {
                factors.push(e.k(parse_kclass(k, e.backend().rank())?));
            } else {
                factors.push(e.basis(label(f)?));
            }
        }
        let mut x = e.product(&factors)?;
        if let Some(s) = &term.scalar {
            x = x.scale(&scalar(s)?);
        }
        if term.negative {
            x = x.negated();
        }
        acc = acc.plus(&x);
    }
    Ok(acc)
}

fn quiver_label(b: &QuiverAtQ, s: &str) -> Res<IsoLabel> {
    let cat = b.category();
    let unknown = || usage(format!("unknown label {s:?}"));
    let candidates = if let Some(rest) = s.strip_prefix('c') {
        let (_, dim) = rest.split_once('@').ok_or_else(unknown)?;
        let d = parse_kclass(dim, cat.n_vertices())?;
        let d: Vec<usize> = d.0.iter().map(|&x| usize::try_from(x).map_err(|_| unknown())).collect::<Res<_>>()?;
        cat.labels_of_dim(&d)?
    } else if s.starts_with('[') {
        let p = parse_partition(s)?;
        if !cat.is_jordan() {
            return Err(unknown());
        }
        cat.labels_of_dim(&[p.size() as usize])?
    } else if let Some(inner) = s.strip_prefix("I(").and_then(|x| x.strip_suffix(')')) {
        let parts = expr::split_top(inner)
            .iter()
            .map(|x| parse_partition(x))
            .collect::<Res<Vec<_>>>()?;
        if parts.len() != cat.n_vertices() {
            return Err(unknown());
        }
        let l = IsoLabel::Cyclic(parts);
        cat.labels_of_dim(&cat.dim_of(&l))?
    } else {
        return Err(unknown());
    };
    candidates.into_iter().find(|l| l.to_string() == s).ok_or_else(unknown)
}

fn element_cmd(opts: &Opts, src: &str, op: Op) -> Res<Output> {
    if use_quiver(opts)? {
        let b = quiver_backend(opts, None)?;
        let q = b.q();
        let e = Engine::new(b);
        let x = eval_expr(
            &e,
            src,
            |s| {
                if s.chars().all(|c| c.is_ascii_digit() || c == '/') {
                    let r: num_rational::BigRational = s.parse().map_err(|_| usage(format!("bad scalar {s:?}")))?;
                    Ok(QrtScalar::from_rational(q, r))
                } else {
                    Ok(LaurentPoly::parse(s, 'v')?.eval_at_sqrt_q(q))
                }
            },
            |s| quiver_label(e.backend(), s),
        )?;
        let body = match op {
            Op::Mult => emit_element(&e, &x, opts.format),
            Op::Comult => emit_tensor(&e, &e.comultiply(&x)?, opts.format),
            Op::Antipode => emit_element(&e, &e.antipode(&x)?, opts.format),
        };
        return Ok(Output::ok(body));
    }
    let e = Engine::new(ClassicalGeneric::new(opts.budget.map(|b| b as u32).unwrap_or(16)));
    let x = eval_expr(
        &e,
        src,
        |s| {
            if s.contains('/') {
                return Err(usage(format!("classical scalars are Laurent polynomials in t, got {s:?}")));
            }
            Ok(LaurentPoly::parse(s, 't')?)
        },
        parse_partition,
    )?;
    if x.terms().any(|(b, _)| !b.k.is_zero()) {
        return Err(usage("the classical front end works in the Hall algebra without k symbols"));
    }
    let body = match op {
        Op::Mult => emit_element(&e, &x, opts.format),
        Op::Comult => emit_tensor(&e, &e.coproduct_plain(&x)?, opts.format),
        Op::Antipode => {
            let plain: GenericHallElement = x.terms().map(|(b, c)| (b.label.clone(), c.clone())).collect();
            let s = classical::antipode_generic(&plain)?;
            let back: H<ClassicalGeneric> = s
                .terms()
                .map(|(l, c)| (hall_core::engine::Basis::new(l.clone(), e.zero_k()), c.clone()))
                .collect();
            emit_element(&e, &back, opts.format)
        }
    };
    Ok(Output::ok(body))
}

fn emit_report(r: &Report, fmt: Format) -> String {
    match fmt {
        Format::Text => r.to_text(),
        Format::Json => r.to_json(),
        Format::Csv => r.to_csv(),
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{lll}\n\\hline\ncheck & status & value \\\\\n\\hline\n");
            for c in &r.checks {
                let st = if c.status == verify::Status::Pass { "pass" } else { "fail" };
                s.push_str(&format!(
                    "\\verb|{}| & {st} & \\verb|{}| \\\\\n",
                    c.id.replace('|', "/"),
                    c.lhs.replace('|', "/")
                ));
            }
            s.push_str("\\hline\n\\end{tabular}");
            s
        }
    }
}

fn verify_cmd(opts: &Opts, suite: Suite, deg: Option<u32>) -> Res<Output> {
    let mut report = Report::new(suite.name());
    let mut trailer = String::new();
    match suite {
        Suite::Green | Suite::HopfPairing | Suite::Antipode | Suite::OneGamma => {
            if use_quiver(opts)? {
                let e = Engine::new(quiver_backend(opts, None)?);
                let n = deg.unwrap_or(3) as i64;
                report = match suite {
                    Suite::Green => verify::green(&e, n)?,
                    Suite::HopfPairing => verify::hopf_pairing(&e, n)?,
                    Suite::Antipode => verify::antipode(&e, n)?,
                    _ => verify::one_gamma(&e, &e.classes_of_total_at_most(n))?,
                };
            } else {
                let e = Engine::new(ClassicalGeneric::new(opts.budget.map(|b| b as u32).unwrap_or(16)));
                let n = deg.unwrap_or(4) as i64;
                report = match suite {
                    Suite::Green => verify::green(&e, n)?,
                    Suite::HopfPairing => verify::hopf_pairing(&e, n)?,
                    Suite::Antipode => verify::antipode(&e, n)?,
                    _ => verify::one_gamma(&e, &e.classes_of_total_at_most(n))?,
                };
            }
        }
        Suite::Serre => {
            for q in q_list(opts, &[2])? {
                let mut o = Opts { q: Some(q.to_string()), ..opts_clone(opts) };
                o.backend = Some(BackendKind::Quiver);
                let e = Engine::new(quiver_backend(&o, Some(Quiver::a2()))?);
                report.extend(verify::serre(&e)?);
            }
        }
        Suite::Steinitz => report = verify::steinitz(deg.unwrap_or(6))?,
        Suite::HlNorms => {
            let n = deg.unwrap_or(4);
            report = verify::hl_norms(&q_list(opts, &[2, 3])?, n, n, budget(opts))?;
        }
        Suite::DoubleA1 => {
            for q in q_list(opts, &[2])? {
                let (r, u) = verify::double_a1(q)?;
                report.extend(r);
                trailer.push_str(&format!(
                    "q={q}: [E,F] = u·(K - K^-1)/(v - v^-1) with u = {u}, where v = √q\n"
                ));
            }
        }
        Suite::OrbitStabilizer => {
            let n = deg.unwrap_or(3) as usize;
            let cats: Vec<RepCategory> = if opts.quiver.is_some() {
                vec![quiver_category(opts, None)?]
            } else {
                let mut v = Vec::new();
                for q in q_list(opts, &[2])? {
                    let b = budget(opts);
                    v.push(RepCategory::new(&Quiver::a2(), q, false)?.with_budget(b));
                    v.push(RepCategory::new(&Quiver::kronecker(), q, false)?.with_budget(b));
                    v.push(RepCategory::new(&Quiver::cyclic(3)?, q, true)?.with_budget(b));
                    v.push(RepCategory::jordan(q)?.with_budget(b));
                }
                v
            };
            for c in &cats {
                report.extend(verify::orbit_stabilizer(c, n, n.min(3))?);
            }
        }
    }
    let ok = report.passed();
    let mut body = emit_report(&report, opts.format);
    if opts.format == Format::Text && !trailer.is_empty() {
        body.push_str(&trailer);
    }
    Ok(Output { body, ok })
}

fn opts_clone(o: &Opts) -> Opts {
    Opts {
        backend: o.backend,
        quiver: o.quiver.clone(),
        q: o.q.clone(),
        budget: o.budget,
        format: o.format,
        out: o.out.clone(),
    }
}
