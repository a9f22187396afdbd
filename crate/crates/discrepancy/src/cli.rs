//! Command-line front end: argument definitions and dispatch.
//!
//! Every computing command reads one instance (or matrix) document, runs the
//! corresponding library operation, and emits a [`Report`] embedding the
//! input, the full parameter set, and the results — so `verify` can re-check
//! every witness and certificate from the report file alone. Exit codes:
//! 0 certified, 2 completed but not certified (budget ran out or a check
//! failed), 1 usage or input error.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::core::{coloring_discrepancy, restrict, Coloring, GroundSubset, SetSystem};
use crate::detlb::{detlb_exact, union_bound_check};
use crate::disc::{disc_exact, herdisc_exact, herdisc_sampled};
use crate::error::{Error, Result};
use crate::exactla::IntMatrix;
use crate::generators;
use crate::io::{
    canonical_json, digest, read_input, read_instance, write_output, InputFile, InstanceFile,
    MatrixFile, Report, ReportResults, ReportStatus, UnionCheckFile, VerifyItem, WitnessFile,
};
use crate::pipeline::{extract_witness, gap_report, verify_chain};
use crate::vecdisc::{solve_vecdisc, verify_certificate, SolveStatus};

pub const TOOL_NAME: &str = "discrepancy";

#[derive(Debug, Parser)]
#[command(name = TOOL_NAME, version, about = "Certified discrepancy computations for set systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct IoArgs {
    /// Input document; `-` reads standard input.
    #[arg(long = "in", value_name = "PATH")]
    pub input: String,
    /// Output path; `-` (default) writes standard output.
    #[arg(long, default_value = "-")]
    pub out: String,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Node limit for coloring searches.
    #[arg(long, default_value_t = 1 << 26)]
    pub node_budget: u64,
    /// Newton-step limit per vector-discrepancy solve.
    #[arg(long, default_value_t = crate::vecdisc::DEFAULT_ITER_BUDGET)]
    pub iter_budget: u64,
    /// Exact-minor evaluation limit.
    #[arg(long, default_value_t = 1 << 22)]
    pub minor_budget: u64,
    /// Absolute tolerance on squared-scale quantities.
    #[arg(long, default_value_t = crate::vecdisc::DEFAULT_TOL)]
    pub tol: f64,
}

impl BudgetArgs {
    fn params(&self) -> BTreeMap<String, String> {
        BTreeMap::from([
            ("node_budget".into(), self.node_budget.to_string()),
            ("iter_budget".into(), self.iter_budget.to_string()),
            ("minor_budget".into(), self.minor_budget.to_string()),
            ("tol".into(), self.tol.to_string()),
        ])
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated instance or matrix document.
    Gen {
        #[command(subcommand)]
        generator: Generator,
        /// Output path; `-` (default) writes standard output.
        #[arg(long, default_value = "-", global = true)]
        out: String,
    },
    /// Exact discrepancy by branch-and-bound.
    Disc {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Exact hereditary discrepancy (or a sampled lower bound).
    Herdisc {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
        /// Sample this many random restrictions instead of enumerating all.
        #[arg(long)]
        sampled: Option<u64>,
        /// Seed for sampled mode.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Determinant lower bound with an exact witness.
    Detlb {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Vector discrepancy with a dual certificate.
    Vecdisc {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Vector discrepancy plus an independent certificate check.
    Certify {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Full witness-extraction chain with link-by-link verification.
    Pipeline {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Blockwise determinant bound for a tagged union.
    #[command(name = "union-check")]
    UnionCheck {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Re-certify every witness and certificate in a report file.
    Verify {
        /// The report to check.
        #[arg(long, value_name = "PATH")]
        report: String,
        #[command(flatten)]
        budgets: BudgetArgs,
        /// Output path; `-` (default) writes standard output.
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Hereditary discrepancy vs determinant lower bound, side by side.
    Gap {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum Generator {
    /// Recursive pair of low-hereditary-discrepancy systems whose union has
    /// unavoidable monochromatic sets.
    Palvolgyi {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        /// Which part to emit: f1, f2, or their tagged union.
        #[arg(long, default_value = "union")]
        side: String,
        #[arg(long, default_value_t = 1 << 20)]
        size_budget: u64,
    },
    /// Root-to-leaf paths and child-edge stars of the complete k-ary tree.
    Hoffman {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1 << 20)]
        size_budget: u64,
    },
    /// Sylvester-Hadamard ±1 matrix of the given power-of-two order.
    Hadamard {
        #[arg(long)]
        order: usize,
    },
    /// Seeded random system with independent inclusion probability p.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Runs a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{TOOL_NAME}: error: {e}");
            1
        }
    }
}

fn version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

struct ReportInput {
    instance: Option<InstanceFile>,
    matrix: Option<MatrixFile>,
    digest: String,
}

impl ReportInput {
    fn from_instance(file: InstanceFile) -> Self {
        let d = digest(&file);
        ReportInput { instance: Some(file), matrix: None, digest: d }
    }

    fn from_input(input: InputFile) -> Self {
        match input {
            InputFile::Instance(f) => Self::from_instance(f),
            InputFile::Matrix(f) => {
                let d = digest(&f);
                ReportInput { instance: None, matrix: Some(f), digest: d }
            }
        }
    }
}

fn finish(
    command: &str,
    params: BTreeMap<String, String>,
    input: ReportInput,
    results: ReportResults,
    status: ReportStatus,
    started: Instant,
    out: &str,
) -> Result<i32> {
    let report = Report {
        tool: TOOL_NAME.into(),
        version: version(),
        command: command.into(),
        params,
        instance: input.instance,
        matrix: input.matrix,
        instance_digest: input.digest,
        results,
        status,
        elapsed_ms: started.elapsed().as_millis() as u64,
    };
    write_output(out, &canonical_json(&report))?;
    Ok(status.exit_code())
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Gen { generator, out } => run_gen(generator, &out),
        Command::Disc { io, budgets } => run_disc(io, budgets),
        Command::Herdisc { io, budgets, sampled, seed } => run_herdisc(io, budgets, sampled, seed),
        Command::Detlb { io, budgets } => run_detlb(io, budgets),
        Command::Vecdisc { io, budgets } => run_vecdisc(io, budgets, false),
        Command::Certify { io, budgets } => run_vecdisc(io, budgets, true),
        Command::Pipeline { io, budgets } => run_pipeline(io, budgets),
        Command::UnionCheck { io, budgets } => run_union_check(io, budgets),
        Command::Verify { report, budgets, out } => run_verify(&report, budgets, &out),
        Command::Gap { io, budgets } => run_gap(io, budgets),
    }
}

fn meta(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn run_gen(generator: Generator, out: &str) -> Result<i32> {
    let text = match generator {
        Generator::Palvolgyi { k, l, side, size_budget } => {
            let pair = generators::palvolgyi(k, l, size_budget)?;
            let system = match side.as_str() {
                "f1" => pair.f1,
                "f2" => pair.f2,
                "union" => crate::core::union_tagged(&[pair.f1, pair.f2])?,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "side must be f1, f2, or union, not {other}"
                    )))
                }
            };
            let file = InstanceFile::from_system(&system).with_metadata(meta(&[
                ("generator", "palvolgyi".into()),
                ("k", k.to_string()),
                ("l", l.to_string()),
                ("side", side),
            ]));
            canonical_json(&file)
        }
        Generator::Hoffman { k, size_budget } => {
            let (f1, f2) = generators::hoffman_tree(k, size_budget)?;
            let union = crate::core::union_tagged(&[f1, f2])?;
            let file = InstanceFile::from_system(&union).with_metadata(meta(&[
                ("generator", "hoffman".into()),
                ("k", k.to_string()),
            ]));
            canonical_json(&file)
        }
        Generator::Hadamard { order } => {
            let h = generators::sylvester_hadamard(order)?;
            let mut file = MatrixFile::from_matrix(&h)?;
            file.metadata = Some(meta(&[
                ("generator", "hadamard".into()),
                ("order", order.to_string()),
            ]));
            canonical_json(&file)
        }
        Generator::Random { n, m, p, seed } => {
            let system = generators::random_system(n, m, p, seed)?;
            let file = InstanceFile::from_system(&system).with_metadata(meta(&[
                ("generator", "random".into()),
                ("n", n.to_string()),
                ("m", m.to_string()),
                ("p", p.to_string()),
                ("seed", seed.to_string()),
            ]));
            canonical_json(&file)
        }
    };
    write_output(out, &text)?;
    Ok(0)
}

fn run_disc(io: IoArgs, budgets: BudgetArgs) -> Result<i32> {
    let started = Instant::now();
    let file = read_instance(&io.input)?;
    let system = file.to_system()?;
    let result = disc_exact(&system, budgets.node_budget)?;
    let status = if result.certified { ReportStatus::Certified } else { ReportStatus::NotCertified };
    let results = ReportResults::Disc {
        value: result.value,
        witness: result.witness.values().to_vec(),
        nodes_explored: result.nodes_explored,
        certified: result.certified,
    };
    finish("disc", budgets.params(), ReportInput::from_instance(file), results, status, started, &io.out)
}

fn run_herdisc(io: IoArgs, budgets: BudgetArgs, sampled: Option<u64>, seed: u64) -> Result<i32> {
    let started = Instant::now();
    let file = read_instance(&io.input)?;
    let system = file.to_system()?;
    let mut params = budgets.params();
    params.insert("seed".into(), seed.to_string());
    let (value, witness, nodes, certified) = match sampled {
        None => {
            let r = herdisc_exact(&system, budgets.node_budget)?;
            (r.value, r.witness_subset, r.nodes_explored, r.certified)
        }
        Some(samples) => {
            params.insert("sampled".into(), samples.to_string());
            let (value, subset) = herdisc_sampled(&system, samples, seed, budgets.node_budget)?;
            // a sampled scan certifies only a lower bound
            (value, subset, 0, false)
        }
    };
    let status = if certified { ReportStatus::Certified } else { ReportStatus::NotCertified };
    let results = ReportResults::Herdisc {
        value,
        witness_subset: witness.members().to_vec(),
        nodes_explored: nodes,
        certified,
    };
    finish("herdisc", params, ReportInput::from_instance(file), results, status, started, &io.out)
}

/// The working matrix of an input document: incidence for instances.
fn input_matrix(input: &InputFile) -> Result<IntMatrix> {
    match input {
        InputFile::Instance(f) => Ok(IntMatrix::incidence(&f.to_system()?)),
        InputFile::Matrix(f) => f.to_matrix(),
    }
}

fn run_detlb(io: IoArgs, budgets: BudgetArgs) -> Result<i32> {
    let started = Instant::now();
    let input = read_input(&io.input)?;
    let matrix = input_matrix(&input)?;
    let result = detlb_exact(&matrix, budgets.minor_budget)?;
    let status = if result.certified { ReportStatus::Certified } else { ReportStatus::NotCertified };
    let results = ReportResults::Detlb {
        value: result.witness.value(),
        value_log: result.witness.value_log,
        k: result.witness.k(),
        witness: WitnessFile::from_witness(&result.witness),
        minors_evaluated: result.minors_evaluated,
        certified: result.certified,
    };
    finish("detlb", budgets.params(), ReportInput::from_input(input), results, status, started, &io.out)
}

fn run_vecdisc(io: IoArgs, budgets: BudgetArgs, certify: bool) -> Result<i32> {
    let started = Instant::now();
    let file = read_instance(&io.input)?;
    let system = file.to_system()?;
    let report = solve_vecdisc(&system, budgets.tol, budgets.iter_budget)?;
    let converged = report.status == SolveStatus::Converged;
    let (results, status) = if certify {
        let check = verify_certificate(&system, &report.dual, budgets.tol)?;
        let ok = converged && check.valid;
        (
            ReportResults::Certify {
                achieved_d: report.primal.achieved_d,
                certified_bound: report.dual.certified_bound,
                gap: report.gap,
                iterations: report.iterations,
                converged,
                w: report.dual.w.clone(),
                z: report.dual.z.clone(),
                verified: check.valid,
            },
            if ok { ReportStatus::Certified } else { ReportStatus::NotCertified },
        )
    } else {
        (
            ReportResults::Vecdisc {
                achieved_d: report.primal.achieved_d,
                certified_bound: report.dual.certified_bound,
                gap: report.gap,
                iterations: report.iterations,
                converged,
                w: report.dual.w.clone(),
                z: report.dual.z.clone(),
            },
            if converged { ReportStatus::Certified } else { ReportStatus::NotCertified },
        )
    };
    let name = if certify { "certify" } else { "vecdisc" };
    finish(name, budgets.params(), ReportInput::from_instance(file), results, status, started, &io.out)
}

fn run_pipeline(io: IoArgs, budgets: BudgetArgs) -> Result<i32> {
    let started = Instant::now();
    let file = read_instance(&io.input)?;
    let system = file.to_system()?;
    let chain = extract_witness(&system, budgets.tol, budgets.iter_budget, budgets.minor_budget)?;
    let verification = verify_chain(&system, &chain, budgets.tol)?;
    let ok = verification.passed() && chain.solver_converged;
    let results = ReportResults::Pipeline {
        chain: crate::io::ChainFile::from_report(&chain, &verification),
        verified: verification.passed(),
    };
    let status = if ok { ReportStatus::Certified } else { ReportStatus::NotCertified };
    finish("pipeline", budgets.params(), ReportInput::from_instance(file), results, status, started, &io.out)
}

/// Splits a tagged input into its parts (ascending tag order) and the stacked
/// matrix, with each stacked row mapped to `(part, row within part)`.
fn split_parts(input: &InputFile) -> Result<(Vec<IntMatrix>, Vec<(usize, usize)>)> {
    let (tags, matrix) = match input {
        InputFile::Instance(f) => {
            let system = f.to_system()?;
            (system.tags().map(|t| t.to_vec()), IntMatrix::incidence(&system))
        }
        InputFile::Matrix(f) => (f.tags.clone(), f.to_matrix()?),
    };
    let tags = tags.unwrap_or_else(|| vec![1; matrix.rows()]);
    let mut uniq = tags.clone();
    uniq.sort_unstable();
    uniq.dedup();
    let all_cols: Vec<usize> = (0..matrix.cols()).collect();
    let mut parts = Vec::new();
    let mut row_map = Vec::new(); // stacked row -> (part, row within part)
    for (pi, &tag) in uniq.iter().enumerate() {
        let rows: Vec<usize> =
            (0..matrix.rows()).filter(|&r| tags[r] == tag).collect();
        for (ri, _) in rows.iter().enumerate() {
            row_map.push((pi, ri));
        }
        parts.push(matrix.submatrix(&rows, &all_cols));
    }
    Ok((parts, row_map))
}

fn run_union_check(io: IoArgs, budgets: BudgetArgs) -> Result<i32> {
    let started = Instant::now();
    let input = read_input(&io.input)?;
    let (parts, row_map) = split_parts(&input)?;
    // stack the parts and take the best determinant witness as the tested B
    let stacked = {
        let mut rows = Vec::new();
        for p in &parts {
            for i in 0..p.rows() {
                rows.push((0..p.cols()).map(|j| p.entry(i, j).clone()).collect::<Vec<_>>());
            }
        }
        let entries: Vec<_> = rows.into_iter().flatten().collect();
        IntMatrix::new(row_map.len(), parts[0].cols(), entries)?
    };
    let best = detlb_exact(&stacked, budgets.minor_budget)?;
    let b_rows: Vec<(usize, usize)> =
        best.witness.row_indices.iter().map(|&r| row_map[r]).collect();
    let b_cols = best.witness.col_indices.clone();
    let report = union_bound_check(&parts, &b_rows, &b_cols, budgets.minor_budget)?;
    let holds = report.holds(budgets.tol);
    let results =
        ReportResults::UnionCheck(UnionCheckFile::from_report(&report, &b_rows, &b_cols, budgets.tol));
    let status = if holds && best.certified { ReportStatus::Certified } else { ReportStatus::NotCertified };
    finish("union-check", budgets.params(), ReportInput::from_input(input), results, status, started, &io.out)
}

fn run_gap(io: IoArgs, budgets: BudgetArgs) -> Result<i32> {
    let started = Instant::now();
    let file = read_instance(&io.input)?;
    let system = file.to_system()?;
    let g = gap_report(&system, budgets.node_budget, budgets.minor_budget)?;
    let status = if g.herdisc_certified && g.detlb_certified {
        ReportStatus::Certified
    } else {
        ReportStatus::NotCertified
    };
    let results = ReportResults::Gap {
        n: g.n,
        m: g.m,
        herdisc: g.herdisc,
        herdisc_certified: g.herdisc_certified,
        detlb_value: g.detlb_value,
        detlb_log: g.detlb_log,
        detlb_certified: g.detlb_certified,
        ratio: g.ratio,
        reference_scale: g.reference_scale,
    };
    finish("gap", budgets.params(), ReportInput::from_instance(file), results, status, started, &io.out)
}

fn run_verify(report_path: &str, budgets: BudgetArgs, out: &str) -> Result<i32> {
    let started = Instant::now();
    let text = crate::io::read_to_string(report_path)?;
    let report = Report::parse(&text, report_path)?;
    let checks = verify_report(&report, &budgets)?;
    let all_ok = checks.iter().all(|c| c.ok);
    let status = if all_ok { ReportStatus::Certified } else { ReportStatus::NotCertified };
    let input = ReportInput {
        instance: report.instance.clone(),
        matrix: report.matrix.clone(),
        digest: report.instance_digest.clone(),
    };
    let mut params = budgets.params();
    params.insert("report".into(), report_path.to_string());
    params.insert("verified_command".into(), report.command.clone());
    let results = ReportResults::Verify { checks, all_ok };
    finish("verify", params, input, results, status, started, out)
}

fn embedded_system(report: &Report) -> Result<SetSystem> {
    report
        .instance
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("report embeds no instance".into()))?
        .to_system()
}

fn embedded_matrix(report: &Report) -> Result<IntMatrix> {
    match (&report.instance, &report.matrix) {
        (Some(f), _) => Ok(IntMatrix::incidence(&f.to_system()?)),
        (None, Some(m)) => m.to_matrix(),
        (None, None) => Err(Error::InvalidParameter("report embeds no input".into())),
    }
}

fn item(target: &str, ok: bool, detail: String) -> VerifyItem {
    VerifyItem { target: target.to_string(), ok, detail }
}

/// Re-verifies whatever objects a report carries, consulting only the report.
fn verify_report(report: &Report, budgets: &BudgetArgs) -> Result<Vec<VerifyItem>> {
    let mut items = Vec::new();
    // the embedded input must hash to the recorded digest
    let digest_ok = match (&report.instance, &report.matrix) {
        (Some(f), _) => digest(f) == report.instance_digest,
        (None, Some(m)) => digest(m) == report.instance_digest,
        (None, None) => false,
    };
    items.push(item("instance-digest", digest_ok, report.instance_digest.clone()));

    match &report.results {
        ReportResults::Disc { value, witness, .. } => {
            let system = embedded_system(report)?;
            let coloring = Coloring::new(witness.clone())?;
            let measured = coloring_discrepancy(&system, &coloring)?;
            items.push(item(
                "disc-witness",
                measured == *value,
                format!("coloring attains {measured}, report claims {value}"),
            ));
        }
        ReportResults::Herdisc { value, witness_subset, .. } => {
            let system = embedded_system(report)?;
            let subset = GroundSubset::new(witness_subset.clone());
            let restricted = restrict(&system, &subset)?;
            let r = disc_exact(&restricted, budgets.node_budget)?;
            items.push(item(
                "herdisc-witness",
                r.certified && r.value == *value,
                format!("restriction has discrepancy {}, report claims {value}", r.value),
            ));
        }
        ReportResults::Detlb { witness, .. } => {
            let matrix = embedded_matrix(report)?;
            let w = witness.to_witness()?;
            items.push(item(
                "detlb-witness",
                w.verify(&matrix),
                format!("submatrix determinant recomputes to {}", witness.det),
            ));
        }
        ReportResults::Vecdisc { w, z, certified_bound, .. }
        | ReportResults::Certify { w, z, certified_bound, .. } => {
            let system = embedded_system(report)?;
            let cert = crate::vecdisc::DualCertificate {
                w: w.clone(),
                z: z.clone(),
                certified_bound: *certified_bound,
            };
            let check = verify_certificate(&system, &cert, budgets.tol)?;
            let bound_ok = (check.bound - certified_bound).abs() <= budgets.tol * (1.0 + check.bound);
            items.push(item(
                "dual-certificate",
                check.valid && bound_ok,
                format!("certificate re-derives bound {}", check.bound),
            ));
        }
        ReportResults::Pipeline { chain, .. } => {
            let system = embedded_system(report)?;
            let rebuilt = chain.to_report()?;
            let v = verify_chain(&system, &rebuilt, chain.tol)?;
            items.push(item(
                "chain",
                v.passed(),
                match &v.failed {
                    None => "all links re-verified".into(),
                    Some(l) => format!("link {l} failed"),
                },
            ));
        }
        ReportResults::UnionCheck(u) => {
            let input = match (&report.instance, &report.matrix) {
                (Some(f), _) => InputFile::Instance(f.clone()),
                (None, Some(m)) => InputFile::Matrix(m.clone()),
                (None, None) => return Err(Error::InvalidParameter("report embeds no input".into())),
            };
            let (parts, _) = split_parts(&input)?;
            let fresh = union_bound_check(&parts, &u.b_rows, &u.b_cols, budgets.minor_budget)?;
            let det_ok = fresh.det_abs.to_string() == u.det_abs;
            items.push(item(
                "union-chain",
                det_ok && fresh.holds(budgets.tol),
                format!("|det B| recomputes to {}", fresh.det_abs),
            ));
        }
        ReportResults::Gap { herdisc, detlb_log, .. } => {
            let system = embedded_system(report)?;
            let fresh = gap_report(&system, budgets.node_budget, budgets.minor_budget)?;
            let herdisc_ok = fresh.herdisc == *herdisc && fresh.herdisc_certified;
            let detlb_ok = match (fresh.detlb_log, detlb_log) {
                (None, None) => true,
                (Some(a), Some(b)) => (a - b).abs() <= 1e-9 * (1.0 + a.abs()),
                _ => false,
            };
            items.push(item(
                "gap-recompute",
                herdisc_ok && detlb_ok,
                format!("herdisc recomputes to {}", fresh.herdisc),
            ));
        }
        ReportResults::Verify { .. } => {
            return Err(Error::InvalidParameter("cannot verify a verify report".into()));
        }
    }
    Ok(items)
}
