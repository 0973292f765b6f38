//! Command-line front end: validation suites, braided-group transmutation,
//! the two-sided theorem run, the trivial-action comparison, the
//! identification suites, and textual identity files, over structure-constant
//! instance files.
//!
//! Exit codes: 0 all checks passed (for `theorem21` and `prop34`: the two
//! verdicts agree), 1 a check failed, 2 the input was unusable.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use relhopf_cli::instance::{
    self, load, parse_field_spec, save, AnyInstance, FileBuilder, InputError, Instance, Result,
};
use relhopf_cli::runner::{self as runner, Outcome, SuiteKind, TransmuteKind, ValidateKind};
use relhopf_cli::with_instance;
use relhopf_core::catalog;
use relhopf_core::field::{Field, FieldSpec, PrimeField, Rationals};

#[derive(Parser)]
#[command(
    name = "relhopf",
    version,
    about = "Exact checks for Hopf-algebraic structure constants"
)]
struct Cli {
    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ValidateKindArg {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    Qt,
    Coqt,
    Module,
    Comodule,
    Yd,
    Relhopf,
}

impl From<ValidateKindArg> for ValidateKind {
    fn from(k: ValidateKindArg) -> Self {
        match k {
            ValidateKindArg::Algebra => ValidateKind::Algebra,
            ValidateKindArg::Coalgebra => ValidateKind::Coalgebra,
            ValidateKindArg::Bialgebra => ValidateKind::Bialgebra,
            ValidateKindArg::Hopf => ValidateKind::Hopf,
            ValidateKindArg::Qt => ValidateKind::Qt,
            ValidateKindArg::Coqt => ValidateKind::Coqt,
            ValidateKindArg::Module => ValidateKind::Module,
            ValidateKindArg::Comodule => ValidateKind::Comodule,
            ValidateKindArg::Yd => ValidateKind::Yd,
            ValidateKindArg::Relhopf => ValidateKind::RelHopf,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransmuteKindArg {
    Enveloping,
    Function,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteKindArg {
    Long,
    Ydident,
}

#[derive(Subcommand)]
enum Command {
    /// Run axiom checkers against instance files.
    Validate {
        kind: ValidateKindArg,
        /// Instance files; for module/comodule/yd/relhopf the first file is
        /// the base bialgebra.
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Build a braided group from a (co)quasitriangular Hopf instance.
    Transmute {
        kind: TransmuteKindArg,
        file: PathBuf,
        /// Output instance file for the braided bialgebra with its action
        /// and coaction.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Two-sided theorem run: braided-bialgebra suite against the monoidal
    /// conditions on the canonical module family.
    Theorem21 {
        #[arg(long)]
        bialgebra: PathBuf,
        /// The `A` side: algebra, coalgebra, coaction and action over `B`.
        #[arg(long)]
        datum: PathBuf,
        /// Additional module files appended to the canonical family.
        #[arg(long = "extra-modules", num_args = 1..)]
        extra_modules: Vec<PathBuf>,
    },
    /// Trivial-action comparison: Doi-Hopf-style conditions against the
    /// braided suite.
    Prop34 {
        #[arg(long)]
        bialgebra: PathBuf,
        #[arg(long = "comodule-algebra")]
        comodule_algebra: PathBuf,
    },
    /// Randomized identification suites over a Hopf instance.
    Suite {
        kind: SuiteKindArg,
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate a textual identity file against instance environments.
    Identities {
        idfile: PathBuf,
        /// Role files: first = B, second = A, further = modules X, Y, Z.
        #[arg(long = "env", required = true, num_args = 1..)]
        env: Vec<PathBuf>,
    },
    /// Write a catalog instance to a file.
    Build {
        #[command(subcommand)]
        what: BuildCommand,
    },
}

#[derive(Args)]
struct FieldArg {
    /// Base field: `rationals`, `prime-field P`, or a bare prime `P`.
    #[arg(long, default_value = "rationals")]
    field: String,
}

fn field_spec(arg: &FieldArg) -> Result<FieldSpec> {
    if let Ok(p) = arg.field.trim().parse::<u64>() {
        return Ok(FieldSpec::PrimeField(p));
    }
    parse_field_spec(&arg.field)
}

#[derive(Subcommand)]
enum BuildCommand {
    /// The one-dimensional Hopf algebra k.
    Trivial {
        #[command(flatten)]
        field: FieldArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The group algebra of the cyclic group Z_n.
    GroupZn {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The dual group algebra of Z_n on the delta basis.
    DualGroupZn {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Sweedler's four-dimensional Hopf algebra with its R-matrix family.
    Sweedler {
        /// Prime modulus (must not be 2).
        #[arg(long)]
        p: u64,
        /// The R-matrix family parameter, parsed in F_p.
        #[arg(long, default_value = "0")]
        alpha: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// kZ_n over F_p with the cyclic R-matrix for a primitive n-th root ω.
    CyclicQt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        omega: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn load_all(paths: &[PathBuf]) -> Result<Vec<(PathBuf, AnyInstance)>> {
    paths.iter().map(|p| Ok((p.clone(), load(p)?))).collect()
}

fn split_rational(
    items: Vec<(PathBuf, AnyInstance)>,
) -> Result<Vec<(PathBuf, Instance<Rationals>)>> {
    items
        .into_iter()
        .map(|(p, any)| match any {
            AnyInstance::Rational(i) => Ok((p, i)),
            AnyInstance::Prime(_) => Err(InputError(format!(
                "{}: declares a prime field, but the first file uses the rationals",
                p.display()
            ))),
        })
        .collect()
}

fn split_prime(items: Vec<(PathBuf, AnyInstance)>) -> Result<Vec<(PathBuf, Instance<PrimeField>)>> {
    items
        .into_iter()
        .map(|(p, any)| match any {
            AnyInstance::Prime(i) => Ok((p, i)),
            AnyInstance::Rational(_) => Err(InputError(format!(
                "{}: declares the rationals, but the first file uses a prime field",
                p.display()
            ))),
        })
        .collect()
}

/// Dispatch a list of instance files into field-homogeneous generic code.
macro_rules! with_files {
    ($files:expr, |$typed:ident| $body:expr) => {{
        let files = $files;
        match files
            .first()
            .map(|(_, any)| matches!(any, AnyInstance::Rational(_)))
        {
            Some(true) => {
                let $typed = split_rational(files)?;
                $body
            }
            Some(false) => {
                let $typed = split_prime(files)?;
                $body
            }
            None => return Err(InputError("no input files".into())),
        }
    }};
}

fn transmuted_file<F: Field>(
    inst: &Instance<F>,
    out: &relhopf_core::transmute::Transmuted<F>,
) -> instance::InstanceFile {
    let braided = &out.braided;
    let carrier = relhopf_core::hopfcore::BialgebraData::new(
        braided.algebra().clone(),
        braided.coalgebra().clone(),
    )
    .expect("carrier shapes agree");
    let mut builder = FileBuilder::new(inst.field.clone(), braided.dim(), inst.basis.clone())
        .bialgebra(&carrier)
        .coaction(inst.dim, braided.coaction())
        .action(inst.dim, braided.action());
    // ship the canonical module family as module blocks when the datum is
    // well formed, so the file is directly usable as a relhopf/module input
    if let Ok(b) = inst.bialgebra() {
        if let Ok(datum) = relhopf_core::monoidal::MonoidalInputDatum::from_braided(b, braided) {
            let db = datum.b().dim();
            let da = datum.a_dim();
            builder = builder.module(Some("A-regular".into()), db, da, &datum.a_regular_module());
            let (b_tr, _) = relhopf_core::monoidal::trivial_module(&datum);
            builder = builder.module(Some("B-trivial".into()), db, da, &b_tr);
            builder = builder.module(
                Some("unit".into()),
                db,
                da,
                &relhopf_core::monoidal::unit_module(&datum),
            );
        }
    }
    builder.finish()
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Validate { kind, files } => {
            let loaded = load_all(&files)?;
            with_files!(loaded, |typed| runner::validate(kind.into(), &typed))
        }
        Command::Transmute { kind, file, output } => {
            let loaded = load(&file)?;
            let kind = match kind {
                TransmuteKindArg::Enveloping => TransmuteKind::Enveloping,
                TransmuteKindArg::Function => TransmuteKind::Function,
            };
            with_instance!(loaded, |inst| {
                let (out, mut outcome) = runner::transmute(kind, &inst)?;
                let file = transmuted_file(&inst, &out);
                save(&file, &output)?;
                outcome.fact("output", output.display().to_string());
                Ok(outcome)
            })
        }
        Command::Theorem21 {
            bialgebra,
            datum,
            extra_modules,
        } => {
            let mut paths = vec![bialgebra, datum];
            paths.extend(extra_modules);
            let loaded = load_all(&paths)?;
            with_files!(loaded, |typed| {
                let (b, rest) = typed.split_first().expect("two files required");
                let (d, extra) = rest.split_first().expect("two files required");
                runner::theorem21(&b.1, &d.1, extra)
            })
        }
        Command::Prop34 {
            bialgebra,
            comodule_algebra,
        } => {
            let loaded = load_all(&[bialgebra, comodule_algebra])?;
            with_files!(loaded, |typed| runner::prop34(&typed[0].1, &typed[1].1))
        }
        Command::Suite {
            kind,
            file,
            samples,
            seed,
        } => {
            let loaded = load(&file)?;
            let kind = match kind {
                SuiteKindArg::Long => SuiteKind::Long,
                SuiteKindArg::Ydident => SuiteKind::YdIdent,
            };
            with_instance!(loaded, |inst| runner::suite(kind, &inst, samples, seed))
        }
        Command::Identities { idfile, env } => {
            let text = std::fs::read_to_string(&idfile)
                .map_err(|e| InputError(format!("{}: {e}", idfile.display())))?;
            let loaded = load_all(&env)?;
            with_files!(loaded, |typed| runner::identities(&text, &typed))
        }
        Command::Build { what } => build(what),
    }
}

fn build(what: BuildCommand) -> Result<Outcome> {
    fn write_hopf<F: Field>(
        field: F,
        h: &relhopf_core::hopfcore::HopfData<F>,
        basis: Option<Vec<String>>,
        r: Option<&relhopf_core::hopfcore::RMatrix<F>>,
        output: &std::path::Path,
    ) -> Result<Outcome> {
        let mut builder = FileBuilder::new(field, h.dim(), basis).hopf(h);
        if let Some(r) = r {
            builder = builder.r_matrix(r);
        }
        save(&builder.finish(), output)?;
        let mut outcome = Outcome::new("build");
        outcome.fact("output", output.display().to_string());
        outcome.section("self-test", relhopf_core::hopfcore::check_hopf(h));
        Ok(outcome)
    }

    fn dispatch_field<T>(
        spec: FieldSpec,
        rational: impl FnOnce(Rationals) -> Result<T>,
        prime: impl FnOnce(PrimeField) -> Result<T>,
    ) -> Result<T> {
        match spec {
            FieldSpec::Rationals => rational(Rationals),
            FieldSpec::PrimeField(p) => {
                prime(PrimeField::new(p).map_err(|e| InputError(e.to_string()))?)
            }
        }
    }

    match what {
        BuildCommand::Trivial { field, output } => dispatch_field(
            field_spec(&field)?,
            |f| write_hopf(f, &catalog::build_trivial(f), None, None, &output),
            |f| write_hopf(f, &catalog::build_trivial(f), None, None, &output),
        ),
        BuildCommand::GroupZn { n, field, output } => {
            let table = catalog::z_n_table(n);
            let basis: Vec<String> = (0..n).map(|i| format!("g^{i}")).collect();
            dispatch_field(
                field_spec(&field)?,
                |f| {
                    let h = catalog::build_group_algebra(f, &table)
                        .map_err(|e| InputError(e.to_string()))?;
                    write_hopf(f, &h, Some(basis.clone()), None, &output)
                },
                |f| {
                    let h = catalog::build_group_algebra(f, &table)
                        .map_err(|e| InputError(e.to_string()))?;
                    write_hopf(f, &h, Some(basis.clone()), None, &output)
                },
            )
        }
        BuildCommand::DualGroupZn { n, field, output } => {
            let table = catalog::z_n_table(n);
            let basis: Vec<String> = (0..n).map(|i| format!("d(g^{i})")).collect();
            dispatch_field(
                field_spec(&field)?,
                |f| {
                    let h = catalog::build_dual_group_algebra(f, &table)
                        .map_err(|e| InputError(e.to_string()))?;
                    write_hopf(f, &h, Some(basis.clone()), None, &output)
                },
                |f| {
                    let h = catalog::build_dual_group_algebra(f, &table)
                        .map_err(|e| InputError(e.to_string()))?;
                    write_hopf(f, &h, Some(basis.clone()), None, &output)
                },
            )
        }
        BuildCommand::Sweedler { p, alpha, output } => {
            let f = PrimeField::new(p).map_err(|e| InputError(e.to_string()))?;
            let alpha = f.parse(&alpha).map_err(|e| InputError(e.to_string()))?;
            let (h, r) =
                catalog::build_sweedler(f, alpha).map_err(|e| InputError(e.to_string()))?;
            let basis = vec!["1".into(), "g".into(), "x".into(), "gx".into()];
            let mut outcome = write_hopf(f, &h, Some(basis), Some(&r), &output)?;
            outcome.section(
                "r-matrix self-test",
                relhopf_core::hopfcore::check_quasitriangular(&h, &r)?,
            );
            Ok(outcome)
        }
        BuildCommand::CyclicQt {
            n,
            p,
            omega,
            output,
        } => {
            let f = PrimeField::new(p).map_err(|e| InputError(e.to_string()))?;
            let (h, r) =
                catalog::build_cyclic_qt(f, n, omega).map_err(|e| InputError(e.to_string()))?;
            let basis: Vec<String> = (0..n).map(|i| format!("g^{i}")).collect();
            let mut outcome = write_hopf(f, &h, Some(basis), Some(&r), &output)?;
            outcome.section(
                "r-matrix self-test",
                relhopf_core::hopfcore::check_quasitriangular(&h, &r)?,
            );
            Ok(outcome)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(outcome) => {
            match format {
                Format::Text => print!("{}", outcome.render_text()),
                Format::Machine => print!("{}", outcome.render_json()),
            }
            if outcome.pass {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("input error: {err}");
            ExitCode::from(2)
        }
    }
}
