//! The `satbound` command line.

pub mod ideal_file;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use satbound::corpus::{self, build_example, report_table, ExampleSpec, Family, SuiteOptions, VerificationReport};
use satbound::ideal_ops::{ideal_power, is_smooth, sat_degree, symbolic_power};
use satbound::resolution::{arith_reg, geom_reg, minimal_betti, minimal_resolution};
use satbound::schur::{
    be_complex, ext_power, hook_graded, render_table, sym_power, weyman_terms, DegreeSequence, GradedMultiset,
};
use satbound::{AlgebraError, Field, Ideal, Limits, PrimeField, RationalField, DEFAULT_PRIME};

use ideal_file::IdealFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_THEOREM_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError {
            code: if e.is_budget() { EXIT_BUDGET } else { EXIT_INPUT },
            message: e.to_string(),
        }
    }
}

impl From<ideal_file::FileError> for CliError {
    fn from(e: ideal_file::FileError) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    /// GF(2147483629)
    Prime,
    /// The rationals
    Rat,
}

#[derive(Debug, Parser)]
#[command(name = "satbound", version, about = "Saturation degrees, regularity and Betti tables of homogeneous ideals")]
pub struct Cli {
    /// Coefficient field for built-in examples; ideal files name their own.
    #[arg(long, global = true, value_enum, env = "SATBOUND_FIELD", default_value = "prime")]
    pub field: FieldArg,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomly drawn examples.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for `verify suite` (0: one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Step budget for each Gröbner basis computation.
    #[arg(long, global = true)]
    pub gb_steps: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Ideal file.
    pub file: Option<PathBuf>,
    /// Built-in example instead of a file.
    #[arg(long, conflicts_with = "file")]
    pub example: Option<String>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub d: Option<u32>,
    /// Degree list, e.g. `2,2,2`.
    #[arg(long, value_delimiter = ',')]
    pub degs: Option<Vec<u32>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Saturation degree of I^a and the degrees where sat(I^a) is larger.
    Satdeg {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, visible_alias = "a", default_value_t = 1)]
        power: u32,
    },
    /// Graded Betti numbers of a minimal resolution of I^a.
    Betti {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, visible_alias = "a", default_value_t = 1)]
        power: u32,
    },
    /// Arithmetic and geometric regularity of I^a.
    Reg {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, visible_alias = "a", default_value_t = 1)]
        power: u32,
    },
    /// Symbolic power sat(I^a), after a smoothness check.
    Sympow {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, visible_alias = "power", default_value_t = 2)]
        a: u32,
    },
    /// Hilbert function and series of S/I^a.
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, visible_alias = "a", default_value_t = 1)]
        power: u32,
        #[arg(long, default_value_t = 10)]
        tmax: u32,
    },
    /// Graded Schur powers of a sum of line bundles O(-d).
    Schur(SchurArgs),
    /// Check the saturation bounds on built-in examples.
    Verify {
        #[arg(value_enum)]
        check: Check,
        /// Examples to run (repeatable); the default corpus when absent.
        #[arg(long)]
        example: Vec<String>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        degs: Option<Vec<u32>>,
        /// A single power; otherwise all powers up to `--a-max`.
        #[arg(long)]
        a: Option<u32>,
        #[arg(long, default_value_t = 3)]
        a_max: u32,
        /// Also run cubes and beyond on surfaces.
        #[arg(long)]
        heavy: bool,
    },
    /// Print an example as an ideal file.
    Export {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Suite,
    #[value(name = "thmA")]
    ThmA,
    #[value(name = "thmB")]
    ThmB,
    Macaulay,
    #[value(name = "corollaryC")]
    CorollaryC,
}

#[derive(Debug, Clone, Args)]
pub struct SchurArgs {
    /// Hook shape `a=..,k=..`: the partition (a, 1^(k-1)).
    #[arg(long, value_parser = parse_pair::<'a', 'k'>, group = "shape")]
    pub hook: Option<(u32, u32)>,
    #[arg(long, group = "shape")]
    pub sym: Option<u32>,
    #[arg(long, group = "shape")]
    pub ext: Option<u32>,
    /// All terms of the a-th Buchsbaum–Eisenbud complex.
    #[arg(long, group = "shape")]
    pub be: Option<u32>,
    /// Weyman term `a=..,i=..` built on the resolution of `--example`.
    #[arg(long, value_parser = parse_pair::<'a', 'i'>, group = "shape", requires = "example")]
    pub weyman: Option<(u32, u32)>,
    /// Degrees d of the summands O(-d).
    #[arg(long, value_delimiter = ',')]
    pub degs: Option<Vec<u32>>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub example: Option<String>,
}

fn parse_pair<const A: char, const B: char>(s: &str) -> Result<(u32, u32), String> {
    let mut x = None;
    let mut y = None;
    for part in s.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(|| format!("expected {A}=..,{B}=.."))?;
        let v: u32 = v.trim().parse().map_err(|_| format!("bad number `{v}`"))?;
        match k.trim().chars().collect::<Vec<_>>().as_slice() {
            [c] if *c == A => x = Some(v),
            [c] if *c == B => y = Some(v),
            _ => return Err(format!("unknown key `{k}`")),
        }
    }
    match (x, y) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(format!("expected {A}=..,{B}=..")),
    }
}

enum FieldChoice {
    Prime(u32),
    Rat,
}

fn example_spec(name: &str, r: Option<usize>, d: Option<u32>, degs: &Option<Vec<u32>>, seed: u64) -> Result<ExampleSpec, CliError> {
    let family: Family = name.parse()?;
    let mut spec = ExampleSpec::new(family).seed(seed);
    if let Some(r) = r {
        spec = spec.r(r);
    }
    if let Some(d) = d {
        spec = spec.d(d);
    }
    if let Some(ds) = degs {
        spec = spec.degrees(ds);
    }
    Ok(spec.normalized())
}

fn input_of(cmd: &Command) -> Option<&InputArgs> {
    match cmd {
        Command::Satdeg { input, .. }
        | Command::Betti { input, .. }
        | Command::Reg { input, .. }
        | Command::Sympow { input, .. }
        | Command::Hilbert { input, .. }
        | Command::Export { input } => Some(input),
        _ => None,
    }
}

/// Runs one command, writing its report to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut file = None;
    let mut choice = match cli.field {
        FieldArg::Prime => FieldChoice::Prime(DEFAULT_PRIME),
        FieldArg::Rat => FieldChoice::Rat,
    };
    if let Some(path) = input_of(&cli.command).and_then(|i| i.file.as_ref()) {
        let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
        let f = IdealFile::parse(&text)?;
        choice = match f.characteristic {
            0 => FieldChoice::Rat,
            p => FieldChoice::Prime(
                u32::try_from(p).map_err(|_| input_error(format!("characteristic {p} is too large")))?,
            ),
        };
        file = Some(f);
    }
    match choice {
        FieldChoice::Prime(p) => Runner::new(PrimeField::new(p)?, cli, file).run(out),
        FieldChoice::Rat => Runner::new(RationalField, cli, file).run(out),
    }
}

struct Runner<'a, F: Field> {
    field: F,
    cli: &'a Cli,
    file: Option<IdealFile>,
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    input: String,
    field: satbound::CoefficientField,
    power: u32,
    #[serde(flatten)]
    result: T,
    elapsed_ms: u64,
}

impl<'a, F: Field> Runner<'a, F> {
    fn new(field: F, cli: &'a Cli, file: Option<IdealFile>) -> Self {
        Runner { field, cli, file }
    }

    fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(s) = self.cli.gb_steps {
            l.gb_steps = s;
        }
        l
    }

    fn load(&self, input: &InputArgs) -> Result<(String, Ideal<F>), CliError> {
        if let Some(f) = &self.file {
            let name = input.file.as_ref().map_or(String::new(), |p| p.display().to_string());
            return Ok((name, f.to_ideal(self.field.clone())?.with_limits(self.limits())));
        }
        let name = input
            .example
            .as_deref()
            .ok_or_else(|| input_error("give an ideal file or --example"))?;
        let spec = example_spec(name, input.r, input.d, &input.degs, self.cli.seed)?;
        let ex = build_example(self.field.clone(), &spec)?;
        if ex.ideal.nvars() > ideal_file::MAX_FILE_VARS {
            return Err(input_error(format!("{spec} needs more than {} variables", ideal_file::MAX_FILE_VARS)));
        }
        Ok((spec.to_string(), ex.ideal.with_limits(self.limits())))
    }

    fn emit<T: Serialize>(&self, out: &mut dyn Write, input: String, power: u32, start: Instant, result: T, text: String) -> Result<(), CliError> {
        if self.cli.json {
            let env = Envelope {
                input,
                field: self.field.descriptor(),
                power,
                result,
                elapsed_ms: start.elapsed().as_millis() as u64,
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&env).expect("serializable"))?;
        } else {
            write!(out, "{text}")?;
        }
        Ok(())
    }

    fn run(&self, out: &mut dyn Write) -> Result<i32, CliError> {
        let start = Instant::now();
        match &self.cli.command {
            Command::Satdeg { input, power } => {
                let (name, i) = self.load(input)?;
                let sd = sat_degree(&ideal_power(&i, *power)?)?;
                let mut text = format!("sat_degree {}\n", sd.sat_degree);
                let ws: Vec<String> = sd.witness_degrees.iter().map(|t| format!("{t}:{}", sd.gap(*t))).collect();
                if !ws.is_empty() {
                    text.push_str(&format!("gaps {}\n", ws.join(" ")));
                }
                self.emit(out, name, *power, start, sd, text)?;
            }
            Command::Betti { input, power } => {
                let (name, i) = self.load(input)?;
                let b = minimal_betti(&ideal_power(&i, *power)?)?;
                let text = b.staircase();
                self.emit(out, name, *power, start, json!({ "betti": b, "regularity": b.regularity() }), text)?;
            }
            Command::Reg { input, power } => {
                let (name, i) = self.load(input)?;
                let j = ideal_power(&i, *power)?;
                let ar = arith_reg(&j)?;
                let gr = geom_reg(&j)?;
                let sd = sat_degree(&j)?.sat_degree;
                let mut text = format!("arith_reg {ar}\ngeom_reg {}\nsat_degree {sd}\n", gr.value);
                if gr.degenerate {
                    text.push_str("empty scheme: saturation is the unit ideal\n");
                }
                self.emit(out, name, *power, start, json!({ "arith_reg": ar, "geom_reg": gr, "sat_degree": sd }), text)?;
            }
            Command::Sympow { input, a } => {
                let (name, i) = self.load(input)?;
                if i.dimension()? < 0 {
                    return Err(input_error("the zero scheme is empty"));
                }
                let cert = is_smooth(&i)?;
                if !cert.smooth {
                    let text = format!(
                        "not-applicable: singular locus of dimension {}; sat(I^a) is not the symbolic power\n",
                        cert.singular_locus_dimension
                    );
                    self.emit(out, name, *a, start, json!({ "status": "not-applicable", "smoothness": cert }), text)?;
                    return Ok(EXIT_OK);
                }
                let sp = symbolic_power(&i, *a, true)?;
                let gens: Vec<String> = sp.generators().iter().map(|g| g.to_string()).collect();
                let sd = sat_degree(&ideal_power(&i, *a)?)?.sat_degree;
                let text = format!("agrees with I^{a} from degree {sd}\n{}\n", gens.join("\n"));
                self.emit(
                    out,
                    name,
                    *a,
                    start,
                    json!({ "status": "pass", "smoothness": cert, "generators": gens, "agreement_from": sd }),
                    text,
                )?;
            }
            Command::Hilbert { input, power, tmax } => {
                let (name, i) = self.load(input)?;
                let h = ideal_power(&i, *power)?.hilbert_data(*tmax)?;
                let vals: Vec<String> = h.values.values().map(u64::to_string).collect();
                let text = format!(
                    "dimension {}\ndegree {}\nnumerator {:?}\nvalues {}\n",
                    h.dimension,
                    h.degree,
                    h.numerator,
                    vals.join(" ")
                );
                self.emit(out, name, *power, start, h, text)?;
            }
            Command::Schur(args) => return self.schur(args, out, start),
            Command::Verify {
                check,
                example,
                r,
                d,
                degs,
                a,
                a_max,
                heavy,
            } => return self.verify(*check, example, *r, *d, degs, *a, *a_max, *heavy, out),
            Command::Export { input } => {
                let (_, i) = self.load(input)?;
                write!(out, "{}", IdealFile::from_ideal(&i))?;
            }
        }
        Ok(EXIT_OK)
    }

    fn schur(&self, args: &SchurArgs, out: &mut dyn Write, start: Instant) -> Result<i32, CliError> {
        if let Some((a, i)) = args.weyman {
            let spec = example_spec(args.example.as_deref().unwrap_or_default(), args.r, None, &args.degs, self.cli.seed)?;
            let ex = build_example(self.field.clone(), &spec)?;
            let u = minimal_resolution(&ex.ideal)?.modules();
            let term = weyman_terms(a, i, &u)?;
            let rows: Vec<(String, GradedMultiset)> =
                term.summands.iter().map(|s| (s.label.clone(), s.degrees.clone())).collect();
            let mut text = render_table(&rows);
            text.push_str(&render_table(&[(format!("L_{i}"), term.total.clone())]));
            self.emit(out, spec.to_string(), a, start, term, text)?;
            return Ok(EXIT_OK);
        }
        let degs = args.degs.clone().ok_or_else(|| input_error("--degs is required"))?;
        let ds = DegreeSequence::new(degs, args.r.unwrap_or(0))?;
        let v = ds.bundle();
        let label = format!("degs {:?}", ds.d);
        let picked = if let Some((a, k)) = args.hook {
            Some((format!("S^({a},1^{}) V", k.saturating_sub(1)), hook_graded(a, k, &v)?, a))
        } else if let Some(a) = args.sym {
            Some((format!("S^{a} V"), sym_power(&v, a)?, a))
        } else if let Some(k) = args.ext {
            Some((format!("Λ^{k} V"), ext_power(&v, k)?, k))
        } else {
            None
        };
        if let Some((name, g, a)) = picked {
            let text = render_table(&[(name.clone(), g.clone())]);
            let result = json!({ "shape": name, "rank": g.rank(), "max_degree": g.max_degree(), "summands": g });
            self.emit(out, label, a, start, result, text)?;
            return Ok(EXIT_OK);
        }
        if let Some(a) = args.be {
            let terms = be_complex(a, &ds)?;
            let rows: Vec<(String, GradedMultiset)> = terms
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("C_{i} = S^({a},1^{i}) V"), g.clone()))
                .collect();
            let text = render_table(&rows);
            self.emit(out, label, a, start, json!({ "terms": terms }), text)?;
            return Ok(EXIT_OK);
        }
        Err(input_error("choose one of --hook, --sym, --ext, --be, --weyman"))
    }

    #[allow(clippy::too_many_arguments)]
    fn verify(
        &self,
        check: Check,
        names: &[String],
        r: Option<usize>,
        d: Option<u32>,
        degs: &Option<Vec<u32>>,
        a: Option<u32>,
        a_max: u32,
        heavy: bool,
        out: &mut dyn Write,
    ) -> Result<i32, CliError> {
        let specs: Vec<ExampleSpec> = if names.is_empty() {
            if check != Check::Suite {
                return Err(input_error("--example is required"));
            }
            corpus::default_corpus()
        } else {
            names
                .iter()
                .map(|n| example_spec(n, r, d, degs, self.cli.seed))
                .collect::<Result<_, _>>()?
        };
        let reports: Vec<VerificationReport> = if check == Check::Suite {
            let opts = SuiteOptions {
                a_max: a.unwrap_or(a_max),
                jobs: self.cli.jobs,
                heavy,
            };
            corpus::run_suite(self.field.clone(), &specs, &opts)?
        } else {
            let powers: Vec<u32> = match a {
                Some(a) => vec![a],
                None => (1..=a_max).collect(),
            };
            let mut reps = Vec::new();
            for spec in &specs {
                let ex = build_example(self.field.clone(), spec)?;
                for &a in &powers {
                    reps.push(match check {
                        Check::ThmA => corpus::verify_thm_a(&ex, a),
                        Check::ThmB => corpus::verify_thm_b(&ex, a),
                        Check::Macaulay => corpus::verify_macaulay(&ex, a),
                        Check::CorollaryC => corpus::verify_corollary_c(&ex, a),
                        Check::Suite => unreachable!(),
                    });
                }
            }
            reps
        };
        if self.cli.json {
            writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("serializable"))?;
        } else {
            write!(out, "{}", report_table(&reports))?;
        }
        Ok(exit_code(&reports))
    }
}

/// Theorem failures dominate; then budget errors; then other errors.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    use corpus::Status;
    if reports.iter().any(VerificationReport::is_failure) {
        return EXIT_THEOREM_FAILURE;
    }
    let errors: Vec<&VerificationReport> = reports.iter().filter(|r| r.status == Status::Error).collect();
    if errors.iter().any(|r| r.note.as_deref().is_some_and(|n| n.contains("budget"))) {
        EXIT_BUDGET
    } else if !errors.is_empty() {
        EXIT_INPUT
    } else {
        EXIT_OK
    }
}
