//! The `complicial` command line.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::io::{
    self, CategoryDoc, CellsDoc, ComplexDoc, Document, MapDoc, OmegaDoc, Payload, ReportDoc,
    SimplicesDoc,
};
use crate::lifting::{self, RelationVariant, Verdict};
use crate::nerve::{self, Stratification};
use crate::omega::OmegaCat;
use crate::orientals;
use crate::shapes::{self, GeneratorSpec, Generated};
use crate::simplicial::{mono_decomposition, SimplexRef, StratifiedComplex};
use crate::fixtures;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "complicial", version, about = "Stratified simplicial sets, orientals and Street nerves")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Dimension bound for checks and nerves.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Nerve stratification: identity, saturated1 or saturated2.
    #[arg(long, global = true, default_value = "identity")]
    stratification: String,
    /// Search node budget (defaults to COMPLICIAL_BUDGET or a built-in limit).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Write the output document here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a named shape or generating inclusion.
    Gen {
        /// standard, boundary, horn, admissible, admissible-horn, primed,
        /// double-primed, thin-top, delta3-eq, delta3-sharp, saturation, sharp
        shape: String,
        #[arg(long)]
        n: Option<isize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<isize>,
    },
    /// Check a document against its invariants; reports are replayed.
    Validate { input: String },
    /// Check a property of a complex, or of the nerve of an ω-category.
    Check {
        /// complicial, strict-complicial, saturated, n-trivial, quasi-category or coskeletal
        property: String,
        input: String,
        /// Parameter for n-trivial and coskeletal.
        #[arg(long)]
        n: Option<usize>,
    },
    /// The Street nerve of an ω-category.
    Nerve { input: String },
    /// Cells of the oriental on the n-simplex.
    Oriental {
        n: usize,
        /// Enumerate cells from the cell condition instead of closing the atoms.
        #[arg(long)]
        search: bool,
        /// Print the ω-category tables instead of the cells.
        #[arg(long)]
        tables: bool,
        /// Largest n accepted.
        #[arg(long, default_value_t = orientals::DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// The homotopy category of a quasi-category.
    Hocat {
        input: String,
        /// Witness shape for the homotopy relation, 0 to 3.
        #[arg(long, default_value_t = 0)]
        variant: usize,
    },
    /// Split an inclusion into boundary attachments and markings.
    Decompose { input: String },
    /// The n-equivalences of a complex.
    Equivs {
        input: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

/// Runs one invocation and returns its exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok((doc, code)) => {
            let text = io::print(&doc);
            let written = match &cli.common.output {
                Some(path) => std::fs::write(path, text).map_err(Error::from),
                None => out.write_all(text.as_bytes()).map_err(Error::from),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn budget(common: &Common) -> Budget {
    common.budget.map_or_else(Budget::from_env, Budget::new)
}

enum Input {
    Document(Document),
    Omega { name: String, cat: OmegaCat },
}

fn read_input(input: &str) -> Result<Input> {
    if let Some(name) = input.strip_prefix('@') {
        return Ok(Input::Omega {
            name: input.to_string(),
            cat: fixtures::omega(name)?,
        });
    }
    let text = std::fs::read_to_string(input)?;
    let doc = io::parse(&text)?;
    if let Payload::OmegaCat(o) = &doc.payload {
        return Ok(Input::Omega {
            name: input.to_string(),
            cat: o.to_omega()?,
        });
    }
    Ok(Input::Document(doc))
}

fn nerve_of(name: &str, c: &OmegaCat, common: &Common, budget: &mut Budget) -> Result<ComplexDoc> {
    let strat = Stratification::from_name(&common.stratification)?;
    let bound = common.bound.unwrap_or_else(|| nerve::default_bound(c));
    let n = nerve::nerve(c, bound, &strat, budget)?;
    Ok(ComplexDoc::from_complex(n.complex())
        .with_origin(format!("nerve of {name}, {} stratification", strat.name())))
}

/// A complex from a complex document, or the nerve of an ω-category.
fn read_complex(input: &str, common: &Common, budget: &mut Budget) -> Result<StratifiedComplex> {
    match read_input(input)? {
        Input::Omega { name, cat } => nerve_of(&name, &cat, common, budget)?.to_complex(),
        Input::Document(Document {
            payload: Payload::Complex(c),
            ..
        }) => c.to_complex(),
        Input::Document(d) => Err(Error::InvalidParameters(format!(
            "expected a complex or an ω-category, got a {} document",
            d.kind()
        ))),
    }
}

fn execute(cli: &Cli) -> Result<(Document, i32)> {
    let common = &cli.common;
    let mut budget = budget(common);
    let ok = |p: Payload| Ok((Document::new(p), EXIT_OK));
    match &cli.command {
        Command::Gen { shape, n, k, m } => {
            let spec = generator_spec(shape, *n, *k, *m)?;
            match shapes::make(&spec)? {
                Generated::Complex(x) => {
                    ok(Payload::Complex(ComplexDoc::from_complex(&x).with_origin(spec.to_string())))
                }
                Generated::Inclusion(i) => ok(Payload::Inclusion(MapDoc::from_map(i.map()))),
            }
        }
        Command::Validate { input } => validate(input, &mut budget),
        Command::Check { property, input, n } => {
            let x = Arc::new(read_complex(input, common, &mut budget)?);
            let bound = common.bound.unwrap_or(x.bound());
            let need_n = || {
                n.ok_or_else(|| Error::InvalidParameters(format!("`{property}` needs --n")))
            };
            let report = match property.as_str() {
                "complicial" => lifting::is_complicial(&x, bound, &mut budget)?,
                "strict-complicial" => lifting::is_strict_complicial(&x, bound, &mut budget)?,
                "saturated" => lifting::is_saturated(&x, bound, &mut budget)?,
                "n-trivial" => lifting::n_triviality(&x, need_n()?)?,
                "quasi-category" => lifting::is_quasicategory(&x, bound, &mut budget)?,
                "coskeletal" => lifting::sphere_fillers(&x, need_n()?, bound, &mut budget)?,
                other => {
                    return Err(Error::InvalidParameters(format!("unknown property `{other}`")))
                }
            };
            let code = if report.passed() { EXIT_OK } else { EXIT_FAIL };
            Ok((Document::new(Payload::Report(ReportDoc::from_report(&report))), code))
        }
        Command::Nerve { input } => match read_input(input)? {
            Input::Omega { name, cat } => ok(Payload::Complex(nerve_of(&name, &cat, common, &mut budget)?)),
            Input::Document(d) => Err(Error::InvalidParameters(format!(
                "a nerve needs an ω-category, got a {} document",
                d.kind()
            ))),
        },
        Command::Oriental {
            n,
            search,
            tables,
            max_n,
        } => {
            if *search {
                let cells: Vec<_> = orientals::enumerate_cells_search(*n, *max_n, &mut budget)?
                    .into_iter()
                    .collect();
                let mut sorted = cells;
                sorted.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
                return ok(Payload::Cells(CellsDoc::new(*n, &sorted)));
            }
            let o = orientals::build_oriental_capped(*n, *max_n, &mut budget)?;
            if *tables {
                ok(Payload::OmegaCat(OmegaDoc::from_omega(o.omega())))
            } else {
                ok(Payload::Cells(CellsDoc::new(*n, o.cells())))
            }
        }
        Command::Hocat { input, variant } => {
            let x = Arc::new(read_complex(input, common, &mut budget)?);
            let variant = *RelationVariant::ALL.get(*variant).ok_or_else(|| {
                Error::InvalidParameters(format!("variant {variant} is not in 0..=3"))
            })?;
            let bound = common.bound.unwrap_or(x.bound()).min(x.bound());
            let h = lifting::homotopy_category_with(&x, variant, bound, &mut budget)?;
            ok(Payload::Category(CategoryDoc::from_category(&h.category)))
        }
        Command::Decompose { input } => match read_input(input)? {
            Input::Document(Document {
                payload: Payload::Inclusion(m),
                ..
            }) => ok(Payload::Steps(mono_decomposition(&m.to_inclusion()?)?)),
            _ => Err(Error::InvalidParameters("decompose needs an inclusion document".to_string())),
        },
        Command::Equivs { input, n } => {
            let x = Arc::new(read_complex(input, common, &mut budget)?);
            let ids = if *n == 1 {
                lifting::detect_1_equivalences(&x)
            } else {
                lifting::detect_n_equivalences(&x, *n, &mut budget)?
            };
            ok(Payload::Simplices(SimplicesDoc {
                description: format!("nondegenerate {n}-equivalences"),
                simplices: ids
                    .into_iter()
                    .map(|id| x.describe(&SimplexRef::nondegenerate(id)))
                    .collect(),
            }))
        }
    }
}

fn generator_spec(shape: &str, n: Option<isize>, k: Option<usize>, m: Option<isize>) -> Result<GeneratorSpec> {
    let missing = |flag: &str| Error::InvalidParameters(format!("`{shape}` needs --{flag}"));
    let n_nat = || -> Result<usize> {
        let v = n.ok_or_else(|| missing("n"))?;
        usize::try_from(v).map_err(|_| Error::InvalidParameters("--n must be nonnegative".to_string()))
    };
    let k = || k.ok_or_else(|| missing("k"));
    use GeneratorSpec as G;
    Ok(match shape {
        "standard" => G::Standard { n: n_nat()? },
        "boundary" => G::Boundary { n: n_nat()? },
        "horn" => G::Horn { n: n_nat()?, k: k()? },
        "admissible" => G::Admissible { n: n_nat()?, k: k()? },
        "admissible-horn" => G::AdmissibleHorn { n: n_nat()?, k: k()? },
        "primed" => G::Primed { n: n_nat()?, k: k()? },
        "double-primed" => G::DoublePrimed { n: n_nat()?, k: k()? },
        "thin-top" => G::ThinTop { n: n_nat()? },
        "delta3-eq" => G::Delta3Eq,
        "delta3-sharp" => G::Delta3Sharp,
        "saturation" => G::Saturation {
            m: m.ok_or_else(|| missing("m"))?,
            n: n.ok_or_else(|| missing("n"))?,
        },
        "sharp" => G::Sharp { n: n_nat()? },
        other => return Err(Error::InvalidParameters(format!("unknown shape `{other}`"))),
    })
}

fn validate(input: &str, budget: &mut Budget) -> Result<(Document, i32)> {
    let text = std::fs::read_to_string(input)?;
    let doc = io::parse(&text)?;
    let (summary, valid): (String, bool) = match &doc.payload {
        Payload::Complex(c) => match c.to_complex() {
            Ok(x) => (format!("valid complex with counts {:?}", x.counts()), true),
            Err(e) => (e.to_string(), false),
        },
        Payload::Map(m) => match m.to_map() {
            Ok(_) => ("valid map".to_string(), true),
            Err(e) => (e.to_string(), false),
        },
        Payload::Inclusion(m) => match m.to_inclusion() {
            Ok(i) => (format!("valid inclusion ({:?})", i.kind()), true),
            Err(e) => (e.to_string(), false),
        },
        Payload::OmegaCat(o) => match o.to_omega() {
            Ok(c) => (format!("valid ω-category with {} elements", c.len()), true),
            Err(e) => (e.to_string(), false),
        },
        Payload::Cells(c) => match c.to_cells() {
            Ok(cells) => (format!("{} valid cells", cells.len()), true),
            Err(e) => (e.to_string(), false),
        },
        Payload::Category(c) => match c.to_category() {
            Ok(_) => ("valid category".to_string(), true),
            Err(e) => (e.to_string(), false),
        },
        Payload::Report(r) => {
            let report = r.to_report()?;
            match (&report.witness, report.verdict) {
                (Some(w), Verdict::Fail) => {
                    let confirmed = w.replay(budget)?;
                    let s = if confirmed {
                        "witness replays"
                    } else {
                        "witness does not reproduce the failure"
                    };
                    (s.to_string(), confirmed)
                }
                (None, Verdict::Pass) => ("passing report".to_string(), true),
                _ => ("verdict and witness disagree".to_string(), false),
            }
        }
        Payload::Steps(_) | Payload::Simplices(_) => ("well-formed document".to_string(), true),
    };
    let out = Document::new(Payload::Simplices(SimplicesDoc {
        description: format!("{} document: {summary}", doc.kind()),
        simplices: Vec::new(),
    }));
    Ok((out, if valid { EXIT_OK } else { EXIT_FAIL }))
}
