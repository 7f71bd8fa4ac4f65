mod examples;
mod render;

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mcx_core::format::{encode_text, parse_complex, to_text, ComplexJson, EncodeKind};
use mcx_core::hopf::{
    antipode_axiomatic, antipode_grouped, antipode_primitive, coproduct, from_primitive_basis,
    primitive_key, to_primitive_basis, verify_hopf_axioms, ElementJson, PrimitiveMonomial,
};
use mcx_core::iso::{
    automorphism_count, canonical_complex, canonical_form, embedding_count, multiplicity,
};
use mcx_core::poset::SpanningLattice;
use mcx_core::recon::{scan_counterexamples, DeckKind};
use mcx_core::{CanonicalKey, Element, MultiComplex, SubComplexMask};

use render::Legend;

#[derive(Parser)]
#[command(
    name = "mcx",
    version,
    about = "Multi-complexes and their Hopf algebra"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct FileArg {
    /// Input file (`.mcx` text or `.mcx.json`); `-` reads stdin.
    file: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that the input is a valid multi-complex.
    Validate(FileArg),
    /// Print the canonical representative and its key.
    Canon(FileArg),
    /// Build a multi-complex from an edge or simplex list.
    Encode {
        kind: EncodeArg,
        file: String,
        /// Encode single-vertex hyperedges `{a}` as `{a, a}`.
        #[arg(long)]
        allow_singleton_hyperedges: bool,
    },
    /// List the spanning sub-complexes.
    Lattice(FileArg),
    /// Möbius values of the spanning sub-complex lattice.
    Mobius {
        file: String,
        /// Face ids of the lower sub-complex, comma separated.
        #[arg(long)]
        lower: Option<String>,
        /// Face ids of the upper sub-complex, comma separated.
        #[arg(long)]
        upper: Option<String>,
        /// Cross-check against chain counting.
        #[arg(long)]
        check: bool,
    },
    /// Print the primitive element `P_C`.
    Primitive(FileArg),
    /// Change between the complex basis and the primitive basis.
    Basis {
        #[command(subcommand)]
        dir: BasisCmd,
    },
    /// Print the coproduct.
    Coproduct(FileArg),
    /// Print the antipode.
    Antipode {
        #[arg(long, value_enum, default_value = "axiom")]
        method: Method,
        file: String,
    },
    /// Multiplicity `[C:D]` of `small` inside `big`.
    Multiplicity { big: String, small: String },
    /// Run verification suites.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Reconstruction experiments.
    Recon {
        #[command(subcommand)]
        what: ReconCmd,
    },
}

#[derive(Subcommand)]
enum BasisCmd {
    /// Expand a complex in products of primitives.
    To(FileArg),
    /// Evaluate a primitive-basis expansion (JSON from `basis to --json`).
    From(FileArg),
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Hopf axioms on the given inputs, or on the bundled corpus.
    Axioms {
        files: Vec<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Golden examples.
    Examples,
}

#[derive(Subcommand)]
enum ReconCmd {
    /// Group all graphs on `n` vertices by deck.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "vertex")]
        deck: DeckKind,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Only consider graphs with at least this many edges.
        #[arg(long, default_value_t = 0)]
        min_edges: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EncodeArg {
    Graph,
    Multigraph,
    Hypergraph,
    Simplicial,
    Delta,
    Colored,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Axiom,
    Primitive,
    Grouped,
    Compare,
}

#[derive(Debug)]
struct CliError(String);

impl From<mcx_core::Error> for CliError {
    fn from(e: mcx_core::Error) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

enum Input {
    Complex(MultiComplex),
    Element(Element),
}

impl Input {
    fn into_element(self) -> CliResult<Element> {
        match self {
            Input::Complex(c) => Ok(Element::from_complex(&c)?),
            Input::Element(e) => Ok(e),
        }
    }

    fn into_complex(self, path: &str) -> CliResult<MultiComplex> {
        match self {
            Input::Complex(c) => Ok(c),
            Input::Element(_) => Err(CliError(format!(
                "{path}: expected a complex, found an element"
            ))),
        }
    }
}

fn read_text(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError(format!("{path}: {e}")))
    }
}

fn read_input(path: &str) -> CliResult<Input> {
    let text = read_text(path)?;
    let ctx = |e: mcx_core::Error| CliError(format!("{path}: {e}"));
    if text.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(&text).map_err(|e| CliError(format!("{path}: {e}")))?;
        if v.get("terms").is_some() {
            let doc: ElementJson =
                serde_json::from_value(v).map_err(|e| CliError(format!("{path}: {e}")))?;
            return Ok(Input::Element(Element::from_json(&doc).map_err(ctx)?));
        }
    }
    Ok(Input::Complex(parse_complex(&text).map_err(ctx)?))
}

fn read_complex(path: &str) -> CliResult<MultiComplex> {
    read_input(path)?.into_complex(path)
}

fn element_json(e: &Element) -> Value {
    serde_json::to_value(e.to_json()).expect("plain data serializes")
}

fn complex_json(c: &MultiComplex) -> Value {
    serde_json::to_value(ComplexJson::from_complex(c)).expect("plain data serializes")
}

fn show_element(e: &Element) -> String {
    let mut legend = Legend::default();
    let body = render::element(e, &mut legend);
    render::with_legend(body, &legend)
}

fn face_set(c: &MultiComplex, mask: u64) -> Vec<usize> {
    mcx_core::complex::bits(mask)
        .map(|j| c.n() + j + 1)
        .collect()
}

fn show_set(ids: &[usize]) -> String {
    let parts: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn parse_mask(c: &MultiComplex, spec: &str) -> CliResult<u64> {
    let mut mask = 0u64;
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let id: usize = tok
            .parse()
            .map_err(|_| CliError(format!("bad face id {tok:?}")))?;
        if id <= c.n() {
            // singletons belong to every spanning sub-complex
            if id == 0 {
                return Err(CliError("face ids are 1-based".into()));
            }
            continue;
        }
        if id > c.face_count() {
            return Err(mcx_core::Error::UnknownFace(id).into());
        }
        mask |= 1 << (id - c.n() - 1);
    }
    SubComplexMask::new(c, mask)?;
    Ok(mask)
}

fn cmd_validate(path: &str) -> CliResult<Output> {
    let c = read_complex(path)?;
    let text = format!(
        "valid: n = {}, faces = {}, dimension = {}, components = {}\n",
        c.n(),
        c.face_count(),
        c.dimension(),
        c.component_count()
    );
    let json = json!({
        "valid": true,
        "n": c.n(),
        "faces": c.face_count(),
        "dimension": c.dimension(),
        "components": c.component_count(),
    });
    Ok(Output::ok(text, json))
}

fn cmd_canon(path: &str) -> CliResult<Output> {
    let c = read_complex(path)?;
    let key = canonical_form(&c)?;
    let canon = canonical_complex(&c)?;
    let text = format!("# key {key}\n{}", to_text(&canon));
    Ok(Output::ok(text, complex_json(&canon)))
}

fn cmd_encode(kind: EncodeArg, path: &str, allow_singleton: bool) -> CliResult<Output> {
    let kind = match kind {
        EncodeArg::Graph => EncodeKind::Graph,
        EncodeArg::Multigraph => EncodeKind::Multigraph,
        EncodeArg::Hypergraph => EncodeKind::Hypergraph {
            allow_singleton_edges: allow_singleton,
        },
        EncodeArg::Simplicial => EncodeKind::Simplicial,
        EncodeArg::Delta => EncodeKind::Delta,
        EncodeArg::Colored => EncodeKind::Colored,
    };
    let text = read_text(path)?;
    let c = encode_text(kind, &text).map_err(|e| CliError(format!("{path}: {e}")))?;
    Ok(Output::ok(to_text(&c), complex_json(&c)))
}

fn cmd_lattice(path: &str) -> CliResult<Output> {
    let c = read_complex(path)?;
    let lattice = SpanningLattice::new(&c)?;
    let sets: Vec<Vec<usize>> = lattice.masks().iter().map(|&m| face_set(&c, m)).collect();
    let mut text = format!("spanning sub-complexes: {}\n", sets.len());
    for s in &sets {
        text.push_str(&show_set(s));
        text.push('\n');
    }
    Ok(Output::ok(
        text,
        json!({ "count": sets.len(), "elements": sets }),
    ))
}

fn cmd_mobius(
    path: &str,
    lower: Option<&str>,
    upper: Option<&str>,
    check: bool,
) -> CliResult<Output> {
    let c = read_complex(path)?;
    let lattice = SpanningLattice::new(&c)?;
    let upper_mask = match upper {
        Some(s) => parse_mask(&c, s)?,
        None => lattice.top(),
    };
    let lowers: Vec<u64> = match lower {
        Some(s) => vec![parse_mask(&c, s)?],
        None => lattice
            .masks()
            .iter()
            .copied()
            .filter(|&d| d & !upper_mask == 0)
            .collect(),
    };
    let mut ok = true;
    let mut text = String::new();
    let mut rows = Vec::new();
    for d in lowers {
        let mu = lattice.mobius(d, upper_mask)?;
        let mut row = json!({
            "lower": face_set(&c, d),
            "upper": face_set(&c, upper_mask),
            "mu": mu.to_string(),
        });
        text.push_str(&format!(
            "mu({}, {}) = {mu}",
            show_set(&face_set(&c, d)),
            show_set(&face_set(&c, upper_mask))
        ));
        if check {
            let oracle = lattice.mobius_chain_oracle(d, upper_mask)?;
            let agree = oracle == mu;
            ok &= agree;
            row["chain_oracle"] = json!(oracle.to_string());
            if !agree {
                text.push_str(&format!("  MISMATCH chain oracle = {oracle}"));
            }
        }
        text.push('\n');
        rows.push(row);
    }
    if check {
        text.push_str(if ok {
            "chain oracle: agree\n"
        } else {
            "chain oracle: MISMATCH\n"
        });
    }
    Ok(Output {
        text,
        json: json!({ "values": rows, "agree": check.then_some(ok) }),
        ok,
    })
}

fn primitive_of(e: &Element) -> CliResult<Element> {
    let mut out = Element::zero();
    for (k, q) in e.terms() {
        out.add_scaled(&*primitive_key(k)?, q);
    }
    Ok(out)
}

fn cmd_primitive(path: &str) -> CliResult<Output> {
    let p = primitive_of(&read_input(path)?.into_element()?)?;
    Ok(Output::ok(show_element(&p), element_json(&p)))
}

fn basis_json(m: &BTreeMap<PrimitiveMonomial, u64>) -> Value {
    let terms: Vec<Value> = m
        .iter()
        .map(|(mono, k)| {
            json!({
                "coeff": k,
                "factors": mono.iter().map(CanonicalKey::to_hex).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "basis": "primitive", "terms": terms })
}

fn cmd_basis_to(path: &str) -> CliResult<Output> {
    let c = read_complex(path)?;
    let m = to_primitive_basis(&c)?;
    let mut legend = Legend::default();
    let body = render::monomials(&m, &mut legend);
    Ok(Output::ok(
        render::with_legend(body, &legend),
        basis_json(&m),
    ))
}

fn cmd_basis_from(path: &str) -> CliResult<Output> {
    let text = read_text(path)?;
    let bad = |msg: String| CliError(format!("{path}: {msg}"));
    let v: Value = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("expected {\"terms\": [...]}".into()))?;
    let mut m: BTreeMap<PrimitiveMonomial, u64> = BTreeMap::new();
    for t in terms {
        let coeff = t
            .get("coeff")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("each term needs a non-negative integer \"coeff\"".into()))?;
        let factors = t
            .get("factors")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("each term needs a \"factors\" array".into()))?;
        let mut mono = factors
            .iter()
            .map(|f| {
                let hex = f
                    .as_str()
                    .ok_or_else(|| bad("factors are hex keys".into()))?;
                CanonicalKey::from_hex(hex).map_err(|e| bad(e.to_string()))
            })
            .collect::<CliResult<Vec<_>>>()?;
        mono.sort();
        *m.entry(mono).or_insert(0) += coeff;
    }
    let e = from_primitive_basis(&m)?;
    Ok(Output::ok(show_element(&e), element_json(&e)))
}

fn cmd_coproduct(path: &str) -> CliResult<Output> {
    let e = read_input(path)?.into_element()?;
    let t = coproduct(&e)?;
    let mut legend = Legend::default();
    let body = render::tensor(&t, &mut legend);
    let terms: Vec<Value> = t
        .terms()
        .map(|((a, b), q)| {
            json!({
                "left": a.to_hex(),
                "right": b.to_hex(),
                "num": q.numer().to_string(),
                "den": q.denom().to_string(),
            })
        })
        .collect();
    Ok(Output::ok(
        render::with_legend(body, &legend),
        json!({ "terms": terms }),
    ))
}

fn cmd_antipode(method: Method, path: &str) -> CliResult<Output> {
    let e = read_input(path)?.into_element()?;
    let single = |s: Element| Output::ok(show_element(&s), element_json(&s));
    match method {
        Method::Axiom => Ok(single(antipode_axiomatic(&e)?)),
        Method::Primitive => Ok(single(antipode_primitive(&e)?)),
        Method::Grouped => Ok(single(antipode_grouped(&e)?)),
        Method::Compare => {
            let ax = antipode_axiomatic(&e)?;
            let pr = antipode_primitive(&e)?;
            let gr = antipode_grouped(&e)?;
            let agree = ax == pr;
            let delta = &ax - &gr;
            let mut keys: Vec<&CanonicalKey> = ax
                .terms()
                .chain(pr.terms())
                .chain(gr.terms())
                .map(|(k, _)| k)
                .collect();
            keys.sort();
            keys.dedup();
            keys.reverse();
            let mut legend = Legend::default();
            let mut text = format!(
                "{:<8}{:>10}{:>10}{:>10}\n",
                "term", "axiom", "primitive", "grouped"
            );
            for k in keys {
                text.push_str(&format!(
                    "{:<8}{:>10}{:>10}{:>10}\n",
                    legend.alias(k),
                    render::coeff(&ax.coeff(k)),
                    render::coeff(&pr.coeff(k)),
                    render::coeff(&gr.coeff(k)),
                ));
            }
            text.push_str(&format!(
                "axiom = primitive: {}\n",
                if agree { "yes" } else { "NO" }
            ));
            text.push_str("delta (axiom - grouped):\n");
            text.push_str(&render::element(&delta, &mut legend));
            text.push_str(&legend.render());
            Ok(Output {
                text,
                json: json!({
                    "axiom": element_json(&ax),
                    "primitive": element_json(&pr),
                    "grouped": element_json(&gr),
                    "axiom_equals_primitive": agree,
                    "delta": element_json(&delta),
                }),
                ok: agree,
            })
        }
    }
}

fn cmd_multiplicity(big: &str, small: &str) -> CliResult<Output> {
    let c = read_complex(big)?;
    let d = read_complex(small)?;
    let mult = multiplicity(&c, &d)?;
    let aut = automorphism_count(&d)?;
    let emb = embedding_count(&c, &d)?;
    let text = format!("[C:D] = {mult}\n|Aut(D)| = {aut}\nembeddings = {emb}\n");
    Ok(Output::ok(
        text,
        json!({ "multiplicity": mult, "automorphisms": aut, "embeddings": emb }),
    ))
}

fn cmd_verify_axioms(files: &[String], jobs: usize) -> CliResult<Output> {
    let elements: Vec<Element> = if files.is_empty() {
        examples::corpus()?
            .iter()
            .map(|(_, c)| Element::from_complex(c))
            .collect::<mcx_core::Result<_>>()?
    } else {
        files
            .iter()
            .map(|f| read_input(f)?.into_element())
            .collect::<CliResult<_>>()?
    };
    let chunk = elements.len().div_ceil(jobs.max(1)).max(1);
    let reports = std::thread::scope(|s| {
        let handles: Vec<_> = elements
            .chunks(chunk)
            .map(|part| s.spawn(move || verify_hopf_axioms(part)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verifier panicked"))
            .collect::<Vec<_>>()
    });
    let mut tally: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut offset = 0;
    for (i, r) in reports.into_iter().enumerate() {
        let r = r?;
        for check in &r.checks {
            let t = tally.entry(check.axiom.to_string()).or_default();
            t.1 += 1;
            if check.passed {
                t.0 += 1;
            } else {
                failures.push(json!({
                    "element": offset + check.element,
                    "axiom": check.axiom.to_string(),
                }));
            }
        }
        offset += chunk.min(elements.len() - i * chunk);
    }
    let mut text = String::new();
    for (axiom, (pass, total)) in &tally {
        let status = if pass == total { "pass" } else { "FAIL" };
        text.push_str(&format!("{status}  {axiom}: {pass}/{total}\n"));
    }
    let ok = failures.is_empty();
    Ok(Output {
        text,
        json: json!({ "elements": elements.len(), "passed": ok, "failures": failures }),
        ok,
    })
}

fn cmd_verify_examples() -> CliResult<Output> {
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for (name, outcome) in examples::run_all() {
        let (status, detail) = match outcome {
            Ok(true) => ("pass", None),
            Ok(false) => ("FAIL", None),
            Err(e) => ("FAIL", Some(e.to_string())),
        };
        ok &= status == "pass";
        match &detail {
            Some(d) => text.push_str(&format!("{status}  {name}: {d}\n")),
            None => text.push_str(&format!("{status}  {name}\n")),
        }
        rows.push(json!({ "name": name, "passed": status == "pass", "error": detail }));
    }
    Ok(Output {
        text,
        json: json!({ "passed": ok, "checks": rows }),
        ok,
    })
}

fn cmd_recon_scan(n: usize, deck: DeckKind, jobs: usize, min_edges: usize) -> CliResult<Output> {
    let r = scan_counterexamples(n, deck, jobs, min_edges)?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut text = format!(
        "n = {}, deck = {}, min edges = {}\ngraphs: {}\ndeck classes: {}\npairs: {}\n\
         pairs all connected: {}\ndisconnected graphs deck-unique: {}\n",
        r.n,
        r.kind,
        r.min_edges,
        r.graphs,
        r.deck_classes,
        r.pairs.len(),
        yes_no(r.pairs_connected),
        yes_no(r.disconnected_unique),
    );
    let mut pairs = Vec::new();
    for (i, (a, b)) in r.pairs.iter().enumerate() {
        let (ca, cb) = (a.decode()?, b.decode()?);
        text.push_str(&format!(
            "pair {}:\n  {}\n  {}\n",
            i + 1,
            render::one_line(a),
            render::one_line(b)
        ));
        let mut p = json!({ "left": complex_json(&ca), "right": complex_json(&cb) });
        if let Some(flags) = &r.differences_primitive {
            text.push_str(&format!("  difference primitive: {}\n", yes_no(flags[i])));
            p["difference_primitive"] = json!(flags[i]);
        }
        pairs.push(p);
    }
    let json = json!({
        "n": r.n,
        "deck": r.kind.to_string(),
        "min_edges": r.min_edges,
        "graphs": r.graphs,
        "deck_classes": r.deck_classes,
        "pairs": pairs,
        "pairs_connected": r.pairs_connected,
        "disconnected_unique": r.disconnected_unique,
    });
    Ok(Output::ok(text, json))
}

fn dispatch(cli: &Cli) -> CliResult<Output> {
    match &cli.cmd {
        Cmd::Validate(f) => cmd_validate(&f.file),
        Cmd::Canon(f) => cmd_canon(&f.file),
        Cmd::Encode {
            kind,
            file,
            allow_singleton_hyperedges,
        } => cmd_encode(*kind, file, *allow_singleton_hyperedges),
        Cmd::Lattice(f) => cmd_lattice(&f.file),
        Cmd::Mobius {
            file,
            lower,
            upper,
            check,
        } => cmd_mobius(file, lower.as_deref(), upper.as_deref(), *check),
        Cmd::Primitive(f) => cmd_primitive(&f.file),
        Cmd::Basis { dir } => match dir {
            BasisCmd::To(f) => cmd_basis_to(&f.file),
            BasisCmd::From(f) => cmd_basis_from(&f.file),
        },
        Cmd::Coproduct(f) => cmd_coproduct(&f.file),
        Cmd::Antipode { method, file } => cmd_antipode(*method, file),
        Cmd::Multiplicity { big, small } => cmd_multiplicity(big, small),
        Cmd::Verify { what } => match what {
            VerifyCmd::Axioms { files, jobs } => cmd_verify_axioms(files, *jobs),
            VerifyCmd::Examples => cmd_verify_examples(),
        },
        Cmd::Recon { what } => match what {
            ReconCmd::Scan {
                n,
                deck,
                jobs,
                min_edges,
            } => cmd_recon_scan(*n, *deck, *jobs, *min_edges),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
