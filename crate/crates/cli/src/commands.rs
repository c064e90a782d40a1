use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use doublelift::adjoint::{check_triangle_identities, extract_phi, standard_fixtures};
use doublelift::analysis::{
    find_cofolding, find_folding, gamma, gg_criterion_surjective, is_gg, validate_family, vertical_chain,
    SearchOutcome, VerticalLength, DEFAULT_SEARCH_LIMIT,
};
use doublelift::doublecat::DoubleCategory;
use doublelift::examples::{fixture, single_object_dec, Fixture};
use doublelift::exec::Strategy;
use doublelift::fincat::{delooping, monoidal_delooping};
use doublelift::lift::{interchange_sweep, lift_unchecked, Lift};
use doublelift::LawReport;
use serde_json::json;

use crate::error::CliError;
use crate::format::{DecoratedDoc, Document, DoubleDoc, PrecosheafDoc};
use crate::report::Report;

pub const SEARCH_LIMIT_VAR: &str = "DOUBLELIFT_SEARCH_LIMIT";

#[derive(Debug, Parser)]
#[command(name = "doublelift", version, about = "Check, lift and analyze finite double categories")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the axiom suite for the structure declared in the file.
    Check { file: PathBuf },
    /// Build the double category of a decorated bicategory and pre-cosheaf.
    Lift {
        dec: PathBuf,
        phi: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Globular generation, vertical length and chain sizes.
    Analyze { file: PathBuf },
    /// Search for a folding and a cofolding.
    Folding { file: PathBuf },
    /// Unit and counit checks for pre-cosheaves over a group acting on an abelian group.
    Adjunction {
        group: PathBuf,
        coefficients: PathBuf,
        #[arg(required = true)]
        phis: Vec<PathBuf>,
    },
    /// Run a named fixture end to end.
    Example {
        name: String,
        /// Write the fixture's structures as canonical files into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

pub fn search_limit() -> Result<u64, CliError> {
    match std::env::var(SEARCH_LIMIT_VAR) {
        Err(_) => Ok(DEFAULT_SEARCH_LIMIT),
        Ok(v) => v.trim().parse().map_err(|_| CliError::invalid(SEARCH_LIMIT_VAR, format!("`{v}` is not a node count"))),
    }
}

pub fn read_document(path: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    Document::parse(&text).map_err(|e| CliError::InFile { path: path.into(), source: Box::new(e) })
}

fn write_document(path: &Path, doc: &Document) -> Result<(), CliError> {
    fs::write(path, doc.to_canonical()).map_err(|source| CliError::Io { path: path.into(), source })
}

fn expect<T>(doc: Document, expected: &'static str, pick: impl FnOnce(Document) -> Option<T>) -> Result<T, CliError> {
    let found = doc.kind();
    pick(doc).ok_or(CliError::Kind { expected, found })
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Check { file } => check(file),
        Command::Lift { dec, phi, out } => lift_files(dec, phi, out.as_deref()),
        Command::Analyze { file } => {
            let d = read_double(file)?;
            let mut r = Report::new("analyze", file.display().to_string());
            r.laws(&d.laws(Strategy::default()));
            if r.passed {
                analyze_into(&mut r, &d);
            }
            Ok(r)
        }
        Command::Folding { file } => {
            let d = read_double(file)?;
            let mut r = Report::new("folding", file.display().to_string());
            r.laws(&d.laws(Strategy::default()));
            if r.passed {
                folding_into(&mut r, &d, search_limit()?)?;
            }
            Ok(r)
        }
        Command::Adjunction { group, coefficients, phis } => adjunction(group, coefficients, phis),
        Command::Example { name, emit } => example(name, emit.as_deref()),
    }
}

fn read_double(file: &Path) -> Result<DoubleCategory, CliError> {
    let doc = expect(read_document(file)?, "double-category", |d| match d {
        Document::DoubleCategory(x) => Some(x),
        _ => None,
    })?;
    doc.build()
}

/// The axiom suite of whatever structure the document declares.
pub fn laws_of(doc: &Document) -> Result<LawReport, CliError> {
    let s = Strategy::default();
    Ok(match doc {
        Document::Monoid(m) => m.build()?.laws(s),
        Document::Category(c) => c.build()?.laws(s),
        Document::MonoidalCategory(m) => m.build()?.laws(s),
        Document::Bicategory(b) => b.build()?.laws(s),
        Document::DecoratedBicategory(d) => d.build()?.laws(s),
        Document::Precosheaf(p) => p.build()?.laws(s),
        Document::DoubleCategory(d) => d.build()?.laws(s),
    })
}

fn check(file: &Path) -> Result<Report, CliError> {
    let doc = read_document(file)?;
    let mut r = Report::new("check", file.display().to_string());
    r.fact("kind", doc.kind());
    r.laws(&laws_of(&doc)?);
    Ok(r)
}

fn lift_files(dec_path: &Path, phi_path: &Path, out: Option<&Path>) -> Result<Report, CliError> {
    let dec = expect(read_document(dec_path)?, "decorated-bicategory", |d| match d {
        Document::DecoratedBicategory(x) => Some(x),
        _ => None,
    })?
    .build()?;
    let phi = expect(read_document(phi_path)?, "precosheaf", |d| match d {
        Document::Precosheaf(x) => Some(x),
        _ => None,
    })?
    .build()?;
    let mut r = Report::new("lift", format!("{} {}", dec_path.display(), phi_path.display()));
    let s = Strategy::default();
    r.laws(&dec.laws(s));
    r.laws(&phi.laws(s));
    r.laws(&phi.attachment_laws(&dec));
    if !r.passed {
        return Ok(r);
    }
    let l = lift_unchecked(&dec, &phi)?;
    r.laws(&l.laws(s));
    r.laws(&interchange_sweep(&phi, s).0);
    r.fact("squares", l.double().num_squares());
    if let Some(path) = out {
        write_document(path, &Document::DoubleCategory(DoubleDoc::from(l.double())))?;
        r.fact("written", path.display().to_string());
    }
    Ok(r)
}

fn length_value(l: VerticalLength) -> serde_json::Value {
    match l {
        VerticalLength::Finite(k) => json!(k),
        VerticalLength::Infinite => json!("infinite"),
    }
}

fn analyze_into(r: &mut Report, d: &DoubleCategory) {
    let g = gamma(d);
    let chain = vertical_chain(d);
    r.fact("squares", d.num_squares());
    r.fact("gamma squares", g.squares.len());
    r.fact("globularily generated", is_gg(d));
    r.fact("vertical length", length_value(chain.length));
    r.fact("chain sizes", chain.sizes());
}

fn folding_into(r: &mut Report, d: &DoubleCategory, limit: u64) -> Result<(), CliError> {
    let shape_ok = d.c0().num_objects() == 1 && d.c1().num_objects() == 1;
    if !shape_ok {
        r.fact("folding", "unsupported shape");
        return Ok(());
    }
    let fold = find_folding(d, limit)?;
    let cofold = find_cofolding(d, limit)?;
    for (name, outcome) in [("folding", &fold), ("cofolding", &cofold)] {
        r.fact(name, outcome.label());
        r.fact(&format!("{name} nodes"), outcome.nodes());
        if let Some(fam) = outcome.found() {
            let mut laws = validate_family(d, fam)?;
            laws.structure = name.into();
            r.laws(&laws);
        }
    }
    let framed = match (&fold, &cofold) {
        (SearchOutcome::Inconclusive { .. }, _) | (_, SearchOutcome::Inconclusive { .. }) => json!("inconclusive"),
        _ => json!(fold.found().is_some() && cofold.found().is_some()),
    };
    r.fact("framed", framed);
    Ok(())
}

fn adjunction(group: &Path, coefficients: &Path, phis: &[PathBuf]) -> Result<Report, CliError> {
    let monoid = |p: &Path| -> Result<_, CliError> {
        expect(read_document(p)?, "monoid", |d| match d {
            Document::Monoid(x) => Some(x),
            _ => None,
        })?
        .build()
    };
    let (g, a) = (monoid(group)?, monoid(coefficients)?);
    let mut r = Report::new("adjunction", format!("{} {}", group.display(), coefficients.display()));
    r.laws(&g.laws(Strategy::default()));
    r.laws(&a.laws(Strategy::default()));
    if !r.passed {
        return Ok(r);
    }
    if !g.is_group() {
        return Err(CliError::invalid("group", "the decorating monoid must be a group"));
    }
    let dec = single_object_dec(&g, &a)?;
    let mut precosheaves = Vec::new();
    for p in phis {
        let phi = expect(read_document(p)?, "precosheaf", |d| match d {
            Document::Precosheaf(x) => Some(x),
            _ => None,
        })?
        .build()?;
        let mut laws = phi.laws(Strategy::default());
        laws.absorb("attached", phi.attachment_laws(&dec));
        laws.structure = format!("precosheaf {}", p.display());
        r.laws(&laws);
        precosheaves.push(phi);
    }
    if !r.passed {
        return Ok(r);
    }
    let fx = standard_fixtures(&dec, &precosheaves)?;
    r.laws(&check_triangle_identities(&fx)?);
    r.fact("precosheaves", fx.precosheaves.len());
    r.fact("double categories", fx.doubles.len());
    r.fact("morphisms", fx.morphisms.len());
    Ok(r)
}

fn example(name: &str, emit: Option<&Path>) -> Result<Report, CliError> {
    let fx = fixture(name)?;
    let mut r = Report::new("example", name);
    let s = Strategy::default();
    if let Some(l) = fx.lift() {
        r.laws(&l.laws(s));
        r.laws(&interchange_sweep(l.phi(), s).0);
        analyze_into(&mut r, l.double());
        lift_facts(&mut r, l)?;
        folding_into(&mut r, l.double(), search_limit()?)?;
    }
    match &fx {
        Fixture::Semidirect(sd) => {
            r.fact("endomorphism monoid order", sd.endo.size());
            r.fact("endomorphism monoid is a group", sd.endo.is_group());
            r.fact("endomorphism monoid is commutative", sd.endo.is_commutative());
        }
        Fixture::Graded(gr) => {
            let mut laws = gr.vertical.functor_laws(&gr.twisted, &gr.witness);
            laws.structure = "isomorphism to the twisted category".into();
            r.laws(&laws);
            r.fact("vertical objects", gr.vertical.base().num_objects());
            r.fact("vertical morphisms", gr.vertical.base().num_morphisms());
            r.fact("isomorphism search nodes", gr.nodes);
        }
        Fixture::Double(d) => {
            r.laws(&d.laws(s));
            analyze_into(&mut r, d);
            folding_into(&mut r, d, search_limit()?)?;
        }
        Fixture::Mat(m) => {
            r.fact("nmax", m.nmax);
            r.fact("square", format!("({}, identity at dimension 4) over source dimension {}", m.square.0, m.square.1));
            r.fact("payload rank", m.rank);
            r.fact("in first vertical stage", m.membership.member());
            r.fact("globularily generated", m.membership.member());
        }
        Fixture::Lift(_) => {}
    }
    if let Some(dir) = emit {
        emit_fixture(&fx, dir)?;
        r.fact("emitted", dir.display().to_string());
    }
    Ok(r)
}

fn lift_facts(r: &mut Report, l: &Lift) -> Result<(), CliError> {
    if let Ok(surjective) = gg_criterion_surjective(l.phi()) {
        r.fact("action surjective", surjective);
    }
    let shape = l.dec().decoration().num_objects() == 1 && l.dec().bicat().num1() == 1;
    if shape {
        if let Ok(back) = extract_phi(l.double()) {
            let mut laws = LawReport::new("recovered pre-cosheaf");
            laws.push("round trip", (back != *l.phi()).then(Vec::new));
            r.laws(&laws);
        }
    }
    Ok(())
}

fn emit_fixture(fx: &Fixture, dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.into(), source })?;
    if let Some(l) = fx.lift() {
        write_document(&dir.join("dec.json"), &Document::DecoratedBicategory(DecoratedDoc::from(l.dec())))?;
        write_document(&dir.join("phi.json"), &Document::Precosheaf(PrecosheafDoc::from(l.phi())))?;
        let fibers = l.phi().fibers();
        if fibers.len() == 1 && fibers[0].base().num_objects() == 1 && l.phi().base().num_objects() == 1 {
            let (acting, _) = doublelift::fincat::endomorphism_monoid(l.phi().base(), 0);
            let (on, _) = doublelift::fincat::endomorphism_monoid(fibers[0].base(), 0);
            if delooping(&acting) == *l.phi().base() && monoidal_delooping(&on).ok().as_ref() == Some(&fibers[0]) {
                write_document(&dir.join("acting.json"), &Document::Monoid((&acting).into()))?;
                write_document(&dir.join("coefficients.json"), &Document::Monoid((&on).into()))?;
            }
        }
    }
    if let Some(d) = fx.double() {
        write_document(&dir.join("double.json"), &Document::DoubleCategory(DoubleDoc::from(d)))?;
    }
    Ok(())
}
