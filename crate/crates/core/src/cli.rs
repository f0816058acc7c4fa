//! The `qgw` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad
//! input. `--json` switches stdout to a machine document that parses back
//! into [`Output`].

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bialgebroid::{
    beta_l, beta_r, check_splitting, counit_separability, galois_bialgebroid, lift_to_wba,
    separability_from_functional, Extension, LeftBialgebroid,
};
use crate::error::Error;
use crate::field::galois::{check_galois_connection, fix, gal, SubWhaDatum, SubfieldDatum};
use crate::field::gp::gp_example;
use crate::field::properties::verify_structural_properties_with_precision;
use crate::field::roots::{automorphisms_with_precision, verify_automorphisms, DEFAULT_PRECISION_BITS};
use crate::field::smash::w_galois_check;
use crate::field::{NumberField, UniversalWha};
use crate::io::{
    emit_doc, parse_doc, read_doc, write_doc, ActionDoc, AlgebraDoc, BialgebroidDoc, DocError, DocRef,
    MorphismDoc, MorphismKind, NumberFieldDoc, SubspaceDoc, WbaDoc,
};
use crate::linear::{Matrix, Subspace, Vector};
use crate::morphism::{
    blow_up_hopf, check_bialgebroid_map, check_strict_morphism, check_weak_left_morphism,
    check_weak_right_morphism, diagonal_embedding, radon_nikodym, universal_morphism,
};
use crate::report::Report;
use crate::wba::{WeakBialgebra, WeakHopfAlgebra};

#[derive(Parser, Debug)]
#[command(name = "qgw", version, about = "Exact checks for weak bialgebras, bialgebroids and field extensions")]
pub struct Cli {
    /// Print the machine-readable document instead of the human report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Precision cap in bits for the numeric stage of automorphism search.
    #[arg(long, global = true, value_name = "BITS", default_value_t = DEFAULT_PRECISION_BITS)]
    pub precision: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weak bialgebras and weak Hopf algebras.
    #[command(subcommand)]
    Wba(WbaCmd),
    /// Left bialgebroids.
    #[command(subcommand)]
    Bialgebroid(BialgebroidCmd),
    /// Maps between weak bialgebras or bialgebroids.
    #[command(subcommand)]
    Morphism(MorphismCmd),
    /// Number fields and their universal weak Hopf algebras.
    #[command(subcommand)]
    Galois(GaloisCmd),
    /// Write the worked example documents.
    Fixtures(FixturesArgs),
}

#[derive(Subcommand, Debug)]
pub enum WbaCmd {
    /// Axioms of a weak bialgebra, and of the antipode when present.
    Check { file: PathBuf },
    /// The counital subalgebras and the projections onto them.
    Subalgebras { file: PathBuf },
    /// Left and right integrals.
    Integrals { file: PathBuf },
    /// Deformation by an invertible element of the left subalgebra.
    Deform {
        file: PathBuf,
        /// JSON array of rational strings.
        #[arg(long)]
        u: String,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum BialgebroidCmd {
    /// Axioms of a left bialgebroid.
    Check { file: PathBuf },
    /// The left (or right) bialgebroid underlying a weak bialgebra.
    FromWba {
        file: PathBuf,
        #[arg(long)]
        right: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Lift to a weak bialgebra with an index-one functional on the base.
    Lift {
        file: PathBuf,
        /// JSON array of rational strings.
        #[arg(long)]
        psi: String,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Pass a weak bialgebra to its bialgebroid and back with the counit.
    RoundTrip { file: PathBuf },
    /// The bialgebroid of an extension N ⊂ M.
    Galois {
        /// Algebra or number-field document of M.
        #[arg(long)]
        outer: PathBuf,
        /// Subspace document of N; defaults to the scalars.
        #[arg(long)]
        inner: Option<PathBuf>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum MorphismCmd {
    /// Check a morphism document; `--kind` overrides the kind it records.
    Check {
        file: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: Option<MorphismKind>,
    },
}

fn parse_kind(s: &str) -> std::result::Result<MorphismKind, String> {
    match s {
        "strict" => Ok(MorphismKind::Strict),
        "weak-left" => Ok(MorphismKind::WeakLeft),
        "weak-right" => Ok(MorphismKind::WeakRight),
        "bialgebroid" => Ok(MorphismKind::Bialgebroid),
        _ => Err(format!("unknown kind {s:?}; expected strict, weak-left, weak-right or bialgebroid")),
    }
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct FieldArg {
    /// Minimal polynomial, e.g. "x^4-2".
    #[arg(long)]
    pub poly: Option<String>,
    /// Number-field document.
    #[arg(long)]
    pub field: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum GaloisCmd {
    /// Build End(E) with its weak Hopf structure and print Δ(1), Δ(x).
    Build {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// The eight structural properties of End(E).
    Properties {
        #[command(flatten)]
        field: FieldArg,
    },
    /// Automorphisms of E, verified exactly.
    Automorphisms {
        #[command(flatten)]
        field: FieldArg,
    },
    /// Fixed field of a sub-WHA document.
    Fix {
        #[command(flatten)]
        field: FieldArg,
        subwha: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Commutant of an intermediate field document.
    Gal {
        #[command(flatten)]
        field: FieldArg,
        subfield: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Adjointness and closure on a grid of subfields and sub-WHAs.
    Connection {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long = "subfield", required = true)]
        subfields: Vec<PathBuf>,
        /// Defaults to Gal of each subfield.
        #[arg(long = "subwha")]
        subwhas: Vec<PathBuf>,
    },
    /// Whether an action on a field is W-Galois.
    WGalois { action: PathBuf },
    /// The canonical map of an action into End(E).
    UniversalMorphism {
        action: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// The Greither–Pareigis example tables and relations.
    Gp,
}

#[derive(Args, Debug)]
pub struct FixturesArgs {
    /// Fixture name; omit with --list.
    #[arg(required_unless_present = "list")]
    pub name: Option<String>,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long)]
    pub list: bool,
}

/// The machine section of every command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Output {
    pub command: Vec<String>,
    pub passed: bool,
    pub reports: Vec<Report>,
    /// Computed values; every rational is a string.
    pub values: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub written: Vec<String>,
}

impl Output {
    fn new() -> Self {
        Output {
            command: Vec::new(),
            passed: true,
            reports: Vec::new(),
            values: BTreeMap::new(),
            error: None,
            written: Vec::new(),
        }
    }

    fn report(&mut self, r: Report) {
        self.passed &= r.passed();
        self.reports.push(r);
    }

    fn value(&mut self, name: &str, v: impl Serialize) {
        self.values.insert(name.to_string(), serde_json::to_value(v).expect("values serialize"));
    }

    fn verdict(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let mut r = Report::new(name);
        r.record(name, if ok { Ok(()) } else { Err(witness()) });
        self.report(r);
    }

    fn write<T: Serialize>(&mut self, path: &Path, doc: &T) -> Result<(), Failure> {
        write_doc(path, doc)?;
        self.written.push(path.display().to_string());
        Ok(())
    }
}

/// Why a command stopped before producing its verdicts.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Math(String),
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DimensionMismatch(_)
            | Error::InvalidInput(_)
            | Error::NotMonic
            | Error::DegenerateTrace
            | Error::QuotientTooLarge(_) => Failure::Input(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

type Run = Result<(), Failure>;

/// Parses `argv` (program name first), runs the command and writes its
/// report to `out`; diagnostics go to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let start = Instant::now();
    let mut o = Output::new();
    o.command = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let code = match dispatch(&cli, &mut o) {
        Ok(()) => i32::from(!o.passed),
        Err(Failure::Input(m)) => {
            o.passed = false;
            o.error = Some(m);
            2
        }
        Err(Failure::Math(m)) => {
            o.passed = false;
            o.error = Some(m);
            1
        }
    };
    if cli.json {
        let _ = write!(out, "{}", emit_doc(&o));
    } else {
        let _ = write!(out, "{}", render_human(&o, color_enabled()));
        let _ = writeln!(out, "time: {} ms", start.elapsed().as_millis());
    }
    if let (true, Some(m)) = (cli.json, &o.error) {
        let _ = writeln!(err, "error: {m}");
    }
    code
}

fn color_enabled() -> bool {
    matches!(
        std::env::var("QGW_COLOR").as_deref(),
        Ok("1") | Ok("always") | Ok("true") | Ok("yes")
    )
}

pub fn render_human(o: &Output, color: bool) -> String {
    let paint = |ok: bool| -> String {
        let word = if ok { "PASS" } else { "FAIL" };
        match (color, ok) {
            (false, _) => word.to_string(),
            (true, true) => format!("\x1b[32m{word}\x1b[0m"),
            (true, false) => format!("\x1b[31m{word}\x1b[0m"),
        }
    };
    let mut s = String::new();
    for r in &o.reports {
        s.push_str(&format!("{}\n", r.subject));
        for c in &r.clauses {
            s.push_str(&format!("  [{}] {}", paint(c.passed), c.name));
            if let Some(w) = &c.witness {
                s.push_str(&format!("  (witness: {w})"));
            }
            if let Some(d) = &c.detail {
                s.push_str(&format!("  [{d}]"));
            }
            s.push('\n');
        }
    }
    for (k, v) in &o.values {
        match v {
            Value::String(t) => s.push_str(&format!("{k} = {t}\n")),
            other => s.push_str(&format!("{k} = {other}\n")),
        }
    }
    for w in &o.written {
        s.push_str(&format!("wrote {w}\n"));
    }
    if let Some(e) = &o.error {
        s.push_str(&format!("error: {e}\n"));
    }
    let total: usize = o.reports.iter().map(|r| r.clauses.len()).sum();
    s.push_str(&format!("result: {} ({total} clauses)\n", paint(o.passed)));
    s
}

fn dispatch(cli: &Cli, o: &mut Output) -> Run {
    match &cli.command {
        Command::Wba(c) => wba_cmd(c, o),
        Command::Bialgebroid(c) => bialgebroid_cmd(c, o),
        Command::Morphism(MorphismCmd::Check { file, kind }) => morphism_check(file, *kind, o),
        Command::Galois(c) => galois_cmd(c, cli.precision, o),
        Command::Fixtures(a) => fixtures_cmd(a, o),
    }
}

fn dir_of(path: &Path) -> Option<&Path> {
    path.parent().filter(|p| !p.as_os_str().is_empty())
}

fn load_wba(path: &Path) -> Result<(WeakBialgebra, Option<Matrix>), Failure> {
    let doc: WbaDoc = read_doc(path)?;
    let w = doc.to_wba().map_err(|e| DocError {
        location: format!("{}: {}", path.display(), e.location),
        message: e.message,
    })?;
    Ok((w, doc.antipode))
}

fn parse_vector(text: &str, name: &str, len: usize) -> Result<Vector, Failure> {
    let v: Vector = parse_doc(text, name)?;
    if v.len() != len {
        return Err(Failure::Input(format!("{name}: length {} but expected {len}", v.len())));
    }
    Ok(v)
}

fn wba_cmd(c: &WbaCmd, o: &mut Output) -> Run {
    match c {
        WbaCmd::Check { file } => {
            let (w, s) = load_wba(file)?;
            o.value("dim", w.dim());
            o.report(w.check());
            if let Some(s) = s {
                let r = w.check_antipode(&s);
                o.report(r);
                let f = w.antipode_flags(&s);
                o.value("antipode_involutive", f.involutive);
            }
            o.value("ordinary_bialgebra", w.is_ordinary_bialgebra());
        }
        WbaCmd::Subalgebras { file } => {
            let (w, _) = load_wba(file)?;
            let subs = w.canonical_subalgebras();
            o.value("left_dim", subs.left.dim());
            o.value("right_dim", subs.right.dim());
            o.value("left", SubspaceDoc::from(&subs.left));
            o.value("right", SubspaceDoc::from(&subs.right));
            o.value("pi_l", &subs.pi_l);
            o.value("pi_r", &subs.pi_r);
        }
        WbaCmd::Integrals { file } => {
            let (w, _) = load_wba(file)?;
            let (l, r) = (w.left_integrals(), w.right_integrals());
            o.value("left_integral_dim", l.dim());
            o.value("right_integral_dim", r.dim());
            o.value("left_integrals", SubspaceDoc::from(&l));
            o.value("right_integrals", SubspaceDoc::from(&r));
        }
        WbaCmd::Deform { file, u, emit } => {
            let (w, _) = load_wba(file)?;
            let u = parse_vector(u, "--u", w.dim())?;
            let d = w.deform(&u)?;
            o.report(d.report);
            o.report(d.wba.check());
            if let Some(p) = emit {
                o.write(p, &WbaDoc::from_wba(&d.wba, None))?;
            }
        }
    }
    Ok(())
}

fn load_bialgebroid(path: &Path) -> Result<LeftBialgebroid, Failure> {
    let doc: BialgebroidDoc = read_doc(path)?;
    Ok(doc.to_bialgebroid(dir_of(path)).map_err(|e| DocError {
        location: format!("{}: {}", path.display(), e.location),
        message: e.message,
    })?)
}

fn load_algebra_or_field(path: &Path) -> Result<crate::algebra::FinDimAlgebra, Failure> {
    let v: Value = read_doc(path)?;
    if v.get("min_poly").is_some() {
        let f: NumberFieldDoc = serde_json::from_value(v).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        Ok(f.to_field()?.algebra().clone())
    } else {
        let a: AlgebraDoc = serde_json::from_value(v).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        Ok(a.to_algebra()?)
    }
}

fn bialgebroid_cmd(c: &BialgebroidCmd, o: &mut Output) -> Run {
    match c {
        BialgebroidCmd::Check { file } => {
            let b = load_bialgebroid(file)?;
            o.value("total_dim", b.total.dim());
            o.value("base_dim", b.base.dim());
            o.value("quotient_dim", b.square().dim());
            o.report(b.check());
        }
        BialgebroidCmd::FromWba { file, right, emit } => {
            let (w, _) = load_wba(file)?;
            let b = if *right { beta_r(&w).left } else { beta_l(&w) };
            o.value("base_dim", b.base.dim());
            o.value("quotient_dim", b.square().dim());
            o.report(b.check());
            if let Some(p) = emit {
                o.write(p, &BialgebroidDoc::from_bialgebroid(&b))?;
            }
        }
        BialgebroidCmd::Lift { file, psi, emit } => {
            let b = load_bialgebroid(file)?;
            let psi = parse_vector(psi, "--psi", b.base.dim())?;
            let sep = separability_from_functional(&b.base, &psi)?;
            o.report(check_splitting(&b, &sep));
            let w = lift_to_wba(&b, &sep)?;
            o.report(w.check());
            if let Some(p) = emit {
                o.write(p, &WbaDoc::from_wba(&w, None))?;
            }
        }
        BialgebroidCmd::RoundTrip { file } => {
            let (w, _) = load_wba(file)?;
            let b = beta_l(&w);
            let sep = counit_separability(&w, &b)?;
            let back = lift_to_wba(&b, &sep)?;
            o.verdict("lift(β_l(W), ε|_L) = W", back == w, || {
                let bad = (0..w.dim()).find(|&i| back.coproduct_of_basis(i) != w.coproduct_of_basis(i));
                match bad {
                    Some(i) => format!("Δ differs on basis element {i}"),
                    None => "counit differs".into(),
                }
            });
        }
        BialgebroidCmd::Galois { outer, inner, emit } => {
            let m = load_algebra_or_field(outer)?;
            let inner = match inner {
                Some(p) => {
                    let d: SubspaceDoc = read_doc(p)?;
                    d.to_subspace(Some(m.dim()))?
                }
                None => Subspace::span(m.dim(), [m.unit().clone()]),
            };
            let g = galois_bialgebroid(&Extension { outer: m, inner })?;
            o.value("canonical_rank", g.canonical_rank);
            o.value("hom_dim", g.hom_dim);
            o.value("total_dim", g.bialgebroid.total.dim());
            o.value("base_dim", g.bialgebroid.base.dim());
            o.report(g.bialgebroid.check());
            if let Some(p) = emit {
                o.write(p, &BialgebroidDoc::from_bialgebroid(&g.bialgebroid))?;
            }
        }
    }
    Ok(())
}

fn resolve_wba(r: &DocRef, dir: Option<&Path>, field: &str) -> Result<WeakBialgebra, Failure> {
    let d: WbaDoc = r.resolve(dir, field)?;
    Ok(d.to_wba().map_err(|e| DocError {
        location: format!("{field}: {}", e.location),
        message: e.message,
    })?)
}

fn resolve_bialgebroid(r: &DocRef, dir: Option<&Path>, field: &str) -> Result<LeftBialgebroid, Failure> {
    let v: Value = r.resolve(dir, field)?;
    if v.get("gamma_representative").is_some() {
        let d: BialgebroidDoc = serde_json::from_value(v).map_err(|e| Failure::Input(format!("{field}: {e}")))?;
        Ok(d.to_bialgebroid(dir)?)
    } else {
        Ok(beta_l(&resolve_wba(r, dir, field)?))
    }
}

fn morphism_check(file: &Path, kind: Option<MorphismKind>, o: &mut Output) -> Run {
    let doc: MorphismDoc = read_doc(file)?;
    let dir = dir_of(file);
    let kind = kind.unwrap_or(doc.kind);
    o.value("kind", kind.as_str());
    let f = &doc.matrix;
    if kind == MorphismKind::Bialgebroid {
        let b = resolve_bialgebroid(&doc.domain, dir, "domain")?;
        let b2 = resolve_bialgebroid(&doc.codomain, dir, "codomain")?;
        if f.shape() != (b2.total.dim(), b.total.dim()) {
            return Err(Failure::Input(format!("matrix: shape {:?} does not match the documents", f.shape())));
        }
        o.report(check_bialgebroid_map(f, &b, &b2));
        return Ok(());
    }
    let w = resolve_wba(&doc.domain, dir, "domain")?;
    let w2 = resolve_wba(&doc.codomain, dir, "codomain")?;
    if f.shape() != (w2.dim(), w.dim()) {
        return Err(Failure::Input(format!(
            "matrix: shape {:?}, expected {:?}",
            f.shape(),
            (w2.dim(), w.dim())
        )));
    }
    match kind {
        MorphismKind::Strict => o.report(check_strict_morphism(f, &w, &w2)),
        MorphismKind::WeakLeft => {
            let r = check_weak_left_morphism(f, &w, &w2);
            if r.passed() {
                o.value("radon_nikodym_u", radon_nikodym(f, &w, &w2));
            }
            o.report(r);
        }
        MorphismKind::WeakRight => o.report(check_weak_right_morphism(f, &w, &w2)),
        MorphismKind::Bialgebroid => unreachable!(),
    }
    Ok(())
}

fn load_field(arg: &FieldArg) -> Result<NumberField, Failure> {
    match (&arg.poly, &arg.field) {
        (Some(p), _) => Ok(NumberField::parse(p)?),
        (None, Some(path)) => {
            let d: NumberFieldDoc = read_doc(path)?;
            Ok(d.to_field()?)
        }
        (None, None) => Err(Failure::Input("one of --poly or --field is required".into())),
    }
}

/// The document written by `galois build --emit`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UniversalTables {
    pub field: NumberFieldDoc,
    pub wha: WbaDoc,
    /// `c_kl` with `Δ(1) = Σ c_kl λ(x^k)⊗λ(x^l)`.
    pub delta_one: Matrix,
    pub delta_x: Matrix,
    pub delta_one_text: String,
    pub delta_x_text: String,
}

pub fn universal_tables(a: &UniversalWha) -> UniversalTables {
    let w = &a.wha.wba;
    let d1 = a.multiplication_form(&w.delta_one()).expect("Δ(1) lies in λ(E)⊗λ(E)");
    let dx = a
        .multiplication_form(&w.coproduct(&a.lambda_power(1)))
        .expect("Δ(λ(x)) lies in λ(E)⊗λ(E)");
    UniversalTables {
        field: NumberFieldDoc::from(&a.field),
        wha: WbaDoc::from_wha(&a.wha),
        delta_one_text: a.format_multiplication_form(&d1),
        delta_x_text: a.format_multiplication_form(&dx),
        delta_one: d1,
        delta_x: dx,
    }
}

fn load_action(path: &Path) -> Result<(crate::io::LoadedAction, UniversalWha), Failure> {
    let doc: ActionDoc = read_doc(path)?;
    let loaded = doc.load(dir_of(path))?;
    let Some(field) = loaded.field.clone() else {
        return Err(Failure::Input(format!("{}: algebra must be a number-field document", path.display())));
    };
    Ok((loaded, UniversalWha::new(field)))
}

fn galois_cmd(c: &GaloisCmd, bits: u32, o: &mut Output) -> Run {
    match c {
        GaloisCmd::Build { field, emit } => {
            let a = UniversalWha::new(load_field(field)?);
            let t = universal_tables(&a);
            o.value("min_poly", a.field.min_poly().to_string());
            o.value("dim", a.wha.dim());
            o.value("delta_one", &t.delta_one);
            o.value("delta_x", &t.delta_x);
            o.value("delta_one_text", &t.delta_one_text);
            o.value("delta_x_text", &t.delta_x_text);
            o.report(a.wha.check());
            if let Some(p) = emit {
                o.write(p, &t)?;
            }
        }
        GaloisCmd::Properties { field } => {
            let a = UniversalWha::new(load_field(field)?);
            let s = verify_structural_properties_with_precision(&a, bits)?;
            o.value("degree", s.degree);
            o.value("grouplike_count", s.grouplike_count);
            o.value("integral_dim", s.integral_dim);
            o.value("haar", &s.haar);
            o.value("galois", s.is_galois());
            o.report(s.report);
        }
        GaloisCmd::Automorphisms { field } => {
            let f = load_field(field)?;
            let search = automorphisms_with_precision(&f, bits)?;
            let images: Vec<String> = search.automorphisms.iter().map(|g| f.format_element(&g.image_of_x)).collect();
            o.value("count", images.len());
            o.value("images_of_x", images);
            o.value("precision_bits", search.precision_bits);
            let mut r = Report::new("automorphisms");
            r.record("exact verification", verify_automorphisms(&f, &search.automorphisms));
            let n = f.degree();
            let k = search.automorphisms.len();
            r.record("count divides degree", if n % k == 0 { Ok(()) } else { Err(format!("{k} ∤ {n}")) });
            o.report(r);
        }
        GaloisCmd::Fix { field, subwha, emit } => {
            let a = UniversalWha::new(load_field(field)?);
            let d: SubspaceDoc = read_doc(subwha)?;
            let w = SubWhaDatum::new(&a, d.to_subspace(Some(a.wha.dim()))?)?;
            let f = fix(&a, &w);
            o.value("dim", f.dim());
            o.value("fixed_field", SubspaceDoc::from(&f.space));
            if let Some(p) = emit {
                o.write(p, &SubspaceDoc::from(&f.space))?;
            }
        }
        GaloisCmd::Gal { field, subfield, emit } => {
            let a = UniversalWha::new(load_field(field)?);
            let d: SubspaceDoc = read_doc(subfield)?;
            let f = SubfieldDatum::new(&a, d.to_subspace(Some(a.degree()))?)?;
            let g = gal(&a, &f);
            o.value("dim", g.dim());
            o.verdict("Gal(F) closed under Δ", crate::field::galois::is_delta_closed(&a, &g.space), || {
                "Δ leaves Gal(F)⊗Gal(F)".into()
            });
            o.verdict("F = Fix(Gal(F))", fix(&a, &g) == f, || "fixed field differs".into());
            if let Some(p) = emit {
                o.write(p, &SubspaceDoc::from(&g.space))?;
            }
        }
        GaloisCmd::Connection { field, subfields, subwhas } => {
            let a = UniversalWha::new(load_field(field)?);
            let fields = subfields
                .iter()
                .map(|p| {
                    let d: SubspaceDoc = read_doc(p)?;
                    Ok(SubfieldDatum::new(&a, d.to_subspace(Some(a.degree()))?)?)
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let whas = if subwhas.is_empty() {
                fields.iter().map(|f| gal(&a, f)).collect()
            } else {
                subwhas
                    .iter()
                    .map(|p| {
                        let d: SubspaceDoc = read_doc(p)?;
                        Ok(SubWhaDatum::new(&a, d.to_subspace(Some(a.wha.dim()))?)?)
                    })
                    .collect::<Result<Vec<_>, Failure>>()?
            };
            o.value("subfield_dims", fields.iter().map(SubfieldDatum::dim).collect::<Vec<_>>());
            o.value("subwha_dims", whas.iter().map(SubWhaDatum::dim).collect::<Vec<_>>());
            o.report(check_galois_connection(&a, &fields, &whas));
        }
        GaloisCmd::WGalois { action } => {
            let (l, a) = load_action(action)?;
            let g = w_galois_check(&l.action, l.antipode.as_ref(), &a);
            o.value("galois", g.galois);
            o.value("smash_rank", g.smash.rank);
            o.value("invariant_dim", l.action.invariants().dim());
            if let Some(u) = &g.u {
                o.value("u", u);
            }
            o.report(g.report);
        }
        GaloisCmd::UniversalMorphism { action, emit } => {
            let (l, a) = load_action(action)?;
            let m = universal_morphism(&l.action, &a)?;
            o.value("map", &m.map);
            o.value("u", &m.u);
            o.value("invariants", SubspaceDoc::from(&l.action.invariants()));
            o.report(m.report);
            if let Some(p) = emit {
                let doc = MorphismDoc {
                    matrix: m.map.clone(),
                    domain: DocRef::inline(&WbaDoc::from_wba(&l.action.wba, l.antipode.as_ref())),
                    codomain: DocRef::inline(&WbaDoc::from_wha(&a.wha)),
                    kind: MorphismKind::WeakLeft,
                };
                o.write(p, &doc)?;
            }
        }
        GaloisCmd::Gp => {
            let gp = gp_example();
            let t = universal_tables(&gp.a);
            o.value("delta_one_text", &t.delta_one_text);
            o.value("delta_x_text", &t.delta_x_text);
            o.report(gp.check());
        }
    }
    Ok(())
}

pub const FIXTURES: [&str; 8] = [
    "gp",
    "z2",
    "blowup-z2-2",
    "diag-embed",
    "e2-universal",
    "e3-universal",
    "e4-universal",
    "e2-extension",
];

/// Documents of a fixture as `(file name, contents)`, in write order.
pub fn fixture_documents(name: &str) -> Option<Vec<(String, String)>> {
    let wha = |file: &str, h: &WeakHopfAlgebra| vec![(file.to_string(), emit_doc(&WbaDoc::from_wha(h)))];
    let universal = |poly: &str, file: &str| wha(file, &UniversalWha::from_poly(poly).expect("separable").wha);
    let docs = match name {
        "gp" => {
            let gp = gp_example();
            let action = ActionDoc {
                wba: DocRef::Path("gp-h.json".into()),
                algebra: DocRef::Path("gp-field.json".into()),
                action: gp.action.action.clone(),
            };
            let embedding = MorphismDoc {
                matrix: gp.embedding.clone(),
                domain: DocRef::Path("gp-h.json".into()),
                codomain: DocRef::Path("gp-a.json".into()),
                kind: MorphismKind::WeakLeft,
            };
            vec![
                ("gp-h.json".to_string(), emit_doc(&WbaDoc::from_wha(&gp.h))),
                ("gp-field.json".to_string(), emit_doc(&NumberFieldDoc::from(&gp.a.field))),
                ("gp-a.json".to_string(), emit_doc(&WbaDoc::from_wha(&gp.a.wha))),
                ("gp-action.json".to_string(), emit_doc(&action)),
                ("gp-embedding.json".to_string(), emit_doc(&embedding)),
            ]
        }
        "z2" => wha("z2.json", &WeakHopfAlgebra::cyclic_group(2)),
        "blowup-z2-2" => wha("blowup-z2-2.json", &blow_up_hopf(&WeakHopfAlgebra::cyclic_group(2), 2)),
        "diag-embed" => {
            let h = WeakHopfAlgebra::cyclic_group(2);
            let b = blow_up_hopf(&h, 2);
            let doc = MorphismDoc {
                matrix: diagonal_embedding(2, 2),
                domain: DocRef::inline(&WbaDoc::from_wha(&h)),
                codomain: DocRef::inline(&WbaDoc::from_wha(&b)),
                kind: MorphismKind::WeakLeft,
            };
            vec![("diag-embed.json".to_string(), emit_doc(&doc))]
        }
        "e2-universal" => universal("x^2-2", "e2-universal.json"),
        "e3-universal" => universal("x^3-2", "e3-universal.json"),
        "e4-universal" => universal("x^4-2", "e4-universal.json"),
        "e2-extension" => {
            let f = NumberField::parse("x^2-2").expect("separable");
            let q = Subspace::span(2, [f.algebra().unit().clone()]);
            vec![
                ("e2-field.json".to_string(), emit_doc(&NumberFieldDoc::from(&f))),
                ("e2-rationals.json".to_string(), emit_doc(&SubspaceDoc::from(&q))),
            ]
        }
        _ => return None,
    };
    Some(docs)
}

fn fixtures_cmd(a: &FixturesArgs, o: &mut Output) -> Run {
    if a.list {
        o.value("fixtures", FIXTURES);
        return Ok(());
    }
    let name = a.name.as_deref().unwrap_or_default();
    let Some(docs) = fixture_documents(name) else {
        return Err(Failure::Input(format!("unknown fixture {name:?}; known: {}", FIXTURES.join(", "))));
    };
    std::fs::create_dir_all(&a.out).map_err(|e| Failure::Input(format!("{}: {e}", a.out.display())))?;
    for (file, text) in docs {
        let path = a.out.join(&file);
        std::fs::write(&path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        o.written.push(path.display().to_string());
    }
    Ok(())
}
