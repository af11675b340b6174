//! Command-line front end: structure verification, cocycle solving,
//! homology summaries, coloring enumeration, and the state-sum invariants,
//! all driven by the text formats of the core crate.
//!
//! Every command prints a deterministic report to stdout: the echoed
//! command line, a sha256 digest per input file, and an indented result
//! block.  Timing goes to stderr so reruns stay byte-identical.  Exit
//! codes: 0 = computed with a positive verdict, 1 = computed but the
//! mathematical verdict is negative, 2 = unusable input.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use twyb_core::cochain::{
    cocycle_check, cocycle_space, homology_summary, is_equivariant, QuotientSummary,
    DEFAULT_SIZE_GUARD,
};
use twyb_core::extension::{extension_identity_witness, extension_operator, ExtensionIdentity};
use twyb_core::formats::{
    emit_cochain, emit_structure, parse_cochain, parse_pd, parse_structure, parse_triples,
};
use twyb_core::statesum::{state_sum, state_sum_up_to_twist, surface_state_sum};
use twyb_core::{
    Cochain, CoefficientModule, Diagram, Error, FaceCtx, StructureClass, TwistParams, TwistedYBSet,
    Variant,
};

#[derive(Parser)]
#[command(
    name = "twyb",
    version,
    about = "Twisted Yang-Baxter sets: verification, cohomology, colorings, and state sums"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    /// Full complex on all tuples
    Tyb,
    /// Quotient by the degenerate subcomplex (needs a biquandle)
    Tbq,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Twist acts on the surviving coordinates through f^m
    Coord,
    /// Twist acts on coefficients as the unit u^m
    Scalar,
}

/// Flags shared by the complex-facing commands.
#[derive(Args)]
struct ComplexArgs {
    /// Coefficient module as `N,u` (modulus and the acting unit)
    #[arg(long, value_parser = parse_module_flag)]
    module: (u64, u64),
    /// Twist parameters `t,m1,m2`: operator power and face exponents
    #[arg(long, default_value = "0,0,0", value_parser = parse_twist_flag)]
    twist: (i64, i64, i64),
    #[arg(long, value_enum, default_value_t = VariantArg::Tbq)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Scalar)]
    mode: ModeArg,
    /// Abort when a tuple space would exceed this many elements
    #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
    guard: usize,
}

impl ComplexArgs {
    fn params(&self, variant_override: Option<Variant>) -> TwistParams {
        let (t, m1, m2) = self.twist;
        let variant = variant_override.unwrap_or(match self.variant {
            VariantArg::Tyb => Variant::Tyb,
            VariantArg::Tbq => Variant::Tbq,
        });
        match self.mode {
            ModeArg::Coord => TwistParams::coordinate(t, m1, m2, variant),
            ModeArg::Scalar => TwistParams::scalar(t, m1, m2, variant),
        }
    }

    fn describe(&self, report: &mut Report) {
        let (t, m1, m2) = self.twist;
        let variant = match self.variant {
            VariantArg::Tyb => "tyb",
            VariantArg::Tbq => "tbq",
        };
        let mode = match self.mode {
            ModeArg::Coord => "coord",
            ModeArg::Scalar => "scalar",
        };
        report.push(format!(
            "module: Z/{} unit {}",
            self.module.0, self.module.1
        ));
        report.push(format!("twist: t={t} m1={m1} m2={m2}"));
        report.push(format!("variant: {variant}"));
        report.push(format!("mode: {mode}"));
    }
}

/// A diagram comes from a file or straight from the command line.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct DiagramArgs {
    /// Diagram file in the PD grammar
    #[arg(long)]
    diagram: Option<String>,
    /// Inline PD text, e.g. '[[1,4,2,5],[3,6,4,1],[5,2,6,3]]'
    #[arg(long)]
    pd: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the Yang-Baxter equation, classify, and validate the twist
    Verify {
        /// Structure file: `yb <size>`, r1/r2 rows, optional `twist`
        structure: String,
    },
    /// Build the twisted operator T^t R and report its class
    TwistOp {
        #[arg(long)]
        structure: String,
        /// Power t of the twist baked into the operator
        #[arg(short = 't', long)]
        power: i64,
        /// Write the twisted structure to a file
        #[arg(long)]
        out: Option<String>,
    },
    /// Solve for the cocycle space of the chosen complex
    Cocycles {
        #[arg(long)]
        structure: String,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        complex: ComplexArgs,
        /// Restrict to T-equivariant cochains
        #[arg(long)]
        equivariant: bool,
        /// Write the basis to a file (blocks in the cochain grammar)
        #[arg(long)]
        out: Option<String>,
        /// With --out, write only the basis vector of this index
        #[arg(long, requires = "out")]
        pick: Option<usize>,
    },
    /// Cohomology and homology summaries, degree by degree
    Homology {
        #[arg(long)]
        structure: String,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[command(flatten)]
        complex: ComplexArgs,
    },
    /// Enumerate biquandle colorings of a diagram
    Color {
        #[command(flatten)]
        diagram: DiagramArgs,
        #[arg(long)]
        structure: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Print every coloring, one line per assignment
        #[arg(long)]
        list: bool,
    },
    /// Twisted cocycle state-sum invariant of a diagram
    Invariant {
        #[command(flatten)]
        diagram: DiagramArgs,
        #[arg(long)]
        structure: String,
        /// Degree-2 cocycle file (`cochain 2 N u` plus support lines)
        #[arg(long)]
        cocycle: String,
        /// Weight exponent n of the region term
        #[arg(long, default_value_t = 1)]
        n: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also print the <T>-orbit normal form
        #[arg(long)]
        normalize_t: bool,
        /// Reduce by the twist period (requires u^(n p) = 1)
        #[arg(long)]
        mod_p: bool,
    },
    /// State sum over supplied surface triple-point data
    SurfaceInvariant {
        /// Triple-point file: `coloring <id>` headers, `triple x y z sign L` rows
        #[arg(long)]
        triples: String,
        #[arg(long)]
        structure: String,
        /// Degree-3 cocycle file
        #[arg(long)]
        cocycle: String,
        #[arg(long, default_value_t = 1)]
        n: i64,
        #[arg(long)]
        normalize_t: bool,
    },
    /// Build the abelian extension on M x X from a pair of 2-cochains
    Extension {
        #[arg(long)]
        structure: String,
        #[arg(long, value_parser = parse_module_flag)]
        module: (u64, u64),
        #[arg(long)]
        phi1: String,
        #[arg(long)]
        phi2: String,
        #[arg(long, default_value_t = 0)]
        m1: i64,
        #[arg(long, default_value_t = 0)]
        m2: i64,
        /// Write the combined cocycle u^m1 phi1 + u^m2 phi2 to a file
        #[arg(long)]
        out: Option<String>,
    },
}

fn parse_module_flag(s: &str) -> Result<(u64, u64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err("expected `N,u`".into());
    }
    let n = parts[0]
        .trim()
        .parse()
        .map_err(|e| format!("modulus: {e}"))?;
    let u = parts[1].trim().parse().map_err(|e| format!("unit: {e}"))?;
    Ok((n, u))
}

fn parse_twist_flag(s: &str) -> Result<(i64, i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected `t,m1,m2`".into());
    }
    let mut vals = [0i64; 3];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = p.trim().parse().map_err(|e| format!("{e}"))?;
    }
    Ok((vals[0], vals[1], vals[2]))
}

/// Accumulates the deterministic stdout report.
struct Report {
    inputs: Vec<String>,
    results: Vec<String>,
}

impl Report {
    fn new() -> Self {
        Report {
            inputs: Vec::new(),
            results: Vec::new(),
        }
    }

    fn input(&mut self, name: &str, text: &str) {
        let digest = Sha256::digest(text.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.inputs.push(format!("input: {name} sha256:{hex}"));
    }

    fn push(&mut self, line: impl Into<String>) {
        self.results.push(line.into());
    }

    fn print(&self) {
        let args: Vec<String> = std::env::args().skip(1).collect();
        println!("command: twyb {}", args.join(" "));
        for line in &self.inputs {
            println!("{line}");
        }
        println!("result:");
        for line in &self.results {
            println!("  {line}");
        }
    }
}

/// Input-shaped failures exit 2; everything else is a negative
/// mathematical verdict and exits 1.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::TableShape { .. }
        | Error::EntryRange { .. }
        | Error::NotPermutation { .. }
        | Error::AlexanderParams { .. }
        | Error::BadModulus { .. }
        | Error::UnitNotInvertible { .. }
        | Error::SemiarcCount { .. }
        | Error::OrientationConflict { .. }
        | Error::NonPlanar { .. }
        | Error::BadOuterDirective { .. }
        | Error::BadBraidLetter { .. }
        | Error::CochainDegree { .. }
        | Error::SizeMismatch { .. }
        | Error::SizeGuard { .. }
        | Error::Overflow { .. } => 2,
        _ => 1,
    }
}

fn read_input(report: &mut Report, path: &str) -> Result<String, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        file: path.to_string(),
        line: 0,
        col: 0,
        msg: format!("cannot read file: {e}"),
    })?;
    report.input(path, &text);
    Ok(text)
}

fn write_output(report: &mut Report, path: &str, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::Parse {
        file: path.to_string(),
        line: 0,
        col: 0,
        msg: format!("cannot write file: {e}"),
    })?;
    report.push(format!("wrote: {path}"));
    Ok(())
}

fn load_structure(report: &mut Report, path: &str) -> Result<TwistedYBSet, Error> {
    let text = read_input(report, path)?;
    parse_structure(path, &text)
}

fn load_diagram(report: &mut Report, args: &DiagramArgs) -> Result<Diagram, Error> {
    let pd = match (&args.diagram, &args.pd) {
        (Some(path), _) => {
            let text = read_input(report, path)?;
            parse_pd(path, &text)?
        }
        (None, Some(inline)) => {
            report.input("<pd>", inline);
            parse_pd("<pd>", inline)?
        }
        (None, None) => unreachable!("clap enforces the group"),
    };
    Diagram::build(&pd)
}

fn load_cochain(
    report: &mut Report,
    path: &str,
    size: usize,
) -> Result<(Cochain, CoefficientModule), Error> {
    let text = read_input(report, path)?;
    parse_cochain(path, &text, size)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn class_lines(report: &mut Report, class: StructureClass) {
    report.push(format!("class: {class}"));
    report.push(format!(
        "birack: {}",
        yes_no(matches!(
            class,
            StructureClass::Birack | StructureClass::Biquandle
        ))
    ));
    report.push(format!(
        "biquandle: {}",
        yes_no(matches!(class, StructureClass::Biquandle))
    ));
}

fn twist_line(report: &mut Report, tw: &TwistedYBSet) {
    if tw.twist().is_identity() {
        report.push("twist: identity");
    } else {
        report.push(format!("twist: yes (order {})", tw.twist_order()));
    }
}

fn format_quotient(q: &QuotientSummary) -> String {
    match (q.kernel_dim, q.image_rank, q.betti) {
        (Some(k), Some(i), Some(b)) => {
            format!(
                "kernel dim {k}, image rank {i}, betti {b}, divisors {:?}",
                q.divisors
            )
        }
        _ => format!(
            "kernel generators {}, divisors {:?} (composite modulus)",
            q.kernel_generators, q.divisors
        ),
    }
}

fn run(cmd: &Cmd, report: &mut Report) -> Result<u8, Error> {
    match cmd {
        Cmd::Verify { structure } => {
            let text = read_input(report, structure)?;
            let tw = match parse_structure(structure, &text) {
                Ok(tw) => tw,
                Err(e @ Error::Parse { .. }) => return Err(e),
                Err(e) => {
                    // table-level rejection is itself a verdict
                    report.push(format!("structure: rejected ({e})"));
                    return Ok(1);
                }
            };
            let mut ok = true;
            match tw.op().verify_ybe() {
                Ok(()) => report.push("yang-baxter: yes"),
                Err(Error::NotYangBaxter { x, y, z }) => {
                    ok = false;
                    report.push(format!("yang-baxter: no (witness x={x} y={y} z={z})"));
                }
                Err(e) => return Err(e),
            }
            if ok {
                match tw.classify() {
                    Ok(class) => class_lines(report, class),
                    Err(e) => {
                        ok = false;
                        report.push(format!("class: inconsistent ({e})"));
                    }
                }
            }
            twist_line(report, &tw);
            Ok(if ok { 0 } else { 1 })
        }

        Cmd::TwistOp {
            structure,
            power,
            out,
        } => {
            let tw = load_structure(report, structure)?;
            tw.op().verify_ybe()?;
            let base_class = tw.classify()?;
            let twisted = tw.twisted_operator(*power);
            twisted.verify_ybe()?;
            report.push(format!("twisted operator: T^{power} R"));
            report.push("yang-baxter: yes");
            let class = twisted.classify()?;
            class_lines(report, class);
            report.push(format!("preserved: {}", yes_no(class == base_class)));
            let out_tw = TwistedYBSet::new(twisted, tw.twist().clone())?;
            let text = emit_structure(&out_tw);
            match out {
                Some(path) => write_output(report, path, &text)?,
                None => {
                    for line in text.lines() {
                        report.push(line);
                    }
                }
            }
            Ok(0)
        }

        Cmd::Cocycles {
            structure,
            degree,
            complex,
            equivariant,
            out,
            pick,
        } => {
            let tw = load_structure(report, structure)?;
            let (n, u) = complex.module;
            let module = CoefficientModule::new(n, u)?;
            let ctx = FaceCtx::new(&tw, complex.params(None))?;
            let space = cocycle_space(&ctx, *degree, &module, *equivariant, complex.guard)?;
            report.push(format!("degree: {degree}"));
            complex.describe(report);
            if *equivariant {
                report.push("equivariant: yes");
            }
            match space.dim {
                Some(d) => report.push(format!("dimension: {d}")),
                None => report.push(format!(
                    "generators: {} (composite modulus)",
                    space.basis.len()
                )),
            }
            for (i, phi) in space.basis.iter().enumerate() {
                report.push(format!("basis {i}:"));
                for line in emit_cochain(phi, &module).lines() {
                    report.push(format!("  {line}"));
                }
            }
            if let Some(path) = out {
                let text = match pick {
                    Some(i) => match space.basis.get(*i) {
                        Some(phi) => emit_cochain(phi, &module),
                        None => {
                            report.push(format!(
                                "error: --pick {i} out of range ({} basis vectors)",
                                space.basis.len()
                            ));
                            return Ok(2);
                        }
                    },
                    None => {
                        let blocks: Vec<String> = space
                            .basis
                            .iter()
                            .map(|phi| emit_cochain(phi, &module))
                            .collect();
                        blocks.join("")
                    }
                };
                write_output(report, path, &text)?;
            }
            Ok(0)
        }

        Cmd::Homology {
            structure,
            max_degree,
            complex,
        } => {
            let tw = load_structure(report, structure)?;
            let (n, u) = complex.module;
            let module = CoefficientModule::new(n, u)?;
            let ctx = FaceCtx::new(&tw, complex.params(None))?;
            complex.describe(report);
            let summary = homology_summary(&ctx, &module, *max_degree, complex.guard)?;
            for s in &summary {
                report.push(format!("degree {}:", s.degree));
                report.push(format!("  cohomology: {}", format_quotient(&s.cohomology)));
                report.push(format!("  homology: {}", format_quotient(&s.homology)));
            }
            Ok(0)
        }

        Cmd::Color {
            diagram,
            structure,
            jobs,
            list,
        } => {
            let d = load_diagram(report, diagram)?;
            let tw = load_structure(report, structure)?;
            report.push(format!("crossings: {}", d.crossing_count()));
            report.push(format!("semiarcs: {}", d.semiarc_count()));
            report.push(format!("components: {}", d.components().len()));
            report.push(format!("circles: {}", d.circles()));
            report.push(format!("writhe: {}", d.writhe()));
            report.push(format!("faces: {}", d.face_count()));
            let colorings = d.colorings(tw.op(), *jobs)?;
            report.push(format!("colorings: {}", colorings.len()));
            if *list {
                for c in &colorings {
                    let row: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                    report.push(format!("coloring {}", row.join(" ")));
                }
            }
            Ok(0)
        }

        Cmd::Invariant {
            diagram,
            structure,
            cocycle,
            n,
            jobs,
            normalize_t,
            mod_p,
        } => {
            let d = load_diagram(report, diagram)?;
            let tw = load_structure(report, structure)?;
            let (phi, module) = load_cochain(report, cocycle, tw.size())?;
            let value = state_sum(&d, &tw, &module, *n, &phi, *jobs)?;
            report.push(format!("phi = {value}"));
            if *normalize_t {
                report.push(format!(
                    "phi normalized = {}",
                    value.normalize_up_to_t(&module)
                ));
            }
            if *mod_p {
                let reduced = state_sum_up_to_twist(&d, &tw, &module, *n, &phi, *jobs)?;
                report.push(format!("phi mod-p = {reduced}"));
            }
            report.push(format!(
                "module: Z/{} unit {}",
                module.modulus(),
                module.unit()
            ));
            report.push(format!("n: {n}"));
            report.push(format!("colorings: {}", d.colorings(tw.op(), *jobs)?.len()));
            Ok(0)
        }

        Cmd::SurfaceInvariant {
            triples,
            structure,
            cocycle,
            n,
            normalize_t,
        } => {
            let tw = load_structure(report, structure)?;
            let (theta, module) = load_cochain(report, cocycle, tw.size())?;
            let text = read_input(report, triples)?;
            let groups = parse_triples(triples, &text)?;
            let value = surface_state_sum(&tw, &module, *n, &theta, &groups)?;
            report.push(format!("phi = {value}"));
            if *normalize_t {
                report.push(format!(
                    "phi normalized = {}",
                    value.normalize_up_to_t(&module)
                ));
            }
            report.push(format!(
                "module: Z/{} unit {}",
                module.modulus(),
                module.unit()
            ));
            report.push(format!("n: {n}"));
            report.push(format!("colorings: {}", groups.len()));
            Ok(0)
        }

        Cmd::Extension {
            structure,
            module,
            phi1,
            phi2,
            m1,
            m2,
            out,
        } => {
            let tw = load_structure(report, structure)?;
            tw.op().verify_ybe()?;
            let (n, u) = *module;
            let module = CoefficientModule::new(n, u)?;
            let mut loaded = Vec::new();
            for (label, path) in [("phi1", phi1), ("phi2", phi2)] {
                let (phi, phi_module) = load_cochain(report, path, tw.size())?;
                if phi_module.modulus() != module.modulus() || phi_module.unit() != module.unit() {
                    return Err(Error::Parse {
                        file: path.clone(),
                        line: 0,
                        col: 0,
                        msg: format!(
                            "{label} declares Z/{} unit {}, command says Z/{} unit {}",
                            phi_module.modulus(),
                            phi_module.unit(),
                            module.modulus(),
                            module.unit()
                        ),
                    });
                }
                if phi.degree != 2 {
                    return Err(Error::CochainDegree {
                        expected: 2,
                        got: phi.degree,
                    });
                }
                if let Err(tuple) = is_equivariant(&tw, &phi, &module) {
                    report.push(format!("{label} equivariant: no (tuple {tuple:?})"));
                    return Ok(1);
                }
                loaded.push(phi);
            }
            let (phi1, phi2) = (&loaded[0], &loaded[1]);
            let s = extension_operator(tw.op(), &module, *m1, *m2, phi1, phi2);
            report.push(format!("carrier: {} elements", s.size()));
            let yb_ok = match s.verify_ybe() {
                Ok(()) => {
                    report.push("yang-baxter: yes");
                    true
                }
                Err(Error::NotYangBaxter { x, y, z }) => {
                    report.push(format!("yang-baxter: no (witness {x},{y},{z})"));
                    false
                }
                Err(e) => return Err(e),
            };
            for (name, which) in [
                ("c-factor", ExtensionIdentity::CFactor),
                ("b-factor", ExtensionIdentity::BFactor),
                ("a-factor", ExtensionIdentity::AFactor),
            ] {
                match extension_identity_witness(tw.op(), &module, *m1, *m2, phi1, phi2, which) {
                    None => report.push(format!("{name} identity: ok")),
                    Some(t) => report.push(format!("{name} identity: violated at {t:?}")),
                }
            }
            // the combined cochain u^m1 phi1 + u^m2 phi2, checked in the
            // full complex with exponent pair (0,0)
            let size = tw.size();
            let mut phi = Cochain::zero(size, 2);
            for x in 0..size {
                for y in 0..size {
                    let v = module.add(
                        module.act(*m1, phi1.get(&[x, y])),
                        module.act(*m2, phi2.get(&[x, y])),
                    );
                    phi.set(&[x, y], v);
                }
            }
            let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 0, Variant::Tyb))?;
            let coc_ok = match cocycle_check(&ctx, &phi, &module) {
                Ok(()) => {
                    report.push("cocycle: yes");
                    true
                }
                Err(Error::NotCocycle { tuple }) => {
                    report.push(format!("cocycle: no (tuple {tuple:?})"));
                    false
                }
                Err(e) => return Err(e),
            };
            if let Some(path) = out {
                write_output(report, path, &emit_cochain(&phi, &module))?;
            }
            Ok(if yb_ok && coc_ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    // behave like a standard filter when the downstream consumer hangs up:
    // die on SIGPIPE instead of panicking on the failed write
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = Report::new();
    let code = match run(&cli.cmd, &mut report) {
        Ok(code) => code,
        Err(e) => {
            report.push(format!("error: {e}"));
            exit_code(&e)
        }
    };
    report.print();
    eprintln!("elapsed: {:?}", start.elapsed());
    ExitCode::from(code)
}
