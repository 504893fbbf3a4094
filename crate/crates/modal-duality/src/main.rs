//! Batch front end: certificate bundles, operator enumeration, poset
//! analysis, and the randomized property suites. Exit codes: 0 all checks
//! pass, 1 verification failure, 2 usage or parse error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use modal_duality::algebra::{enumerate_necessity_ops, necessity_op_count};
use modal_duality::alpha::certify_counterexamples;
use modal_duality::beta::certify_meet_defect;
use modal_duality::poset::{FinPoset, PosetError};
use modal_duality::report::{Check, Report, Verdict};
use modal_duality::suites::run_all;
use modal_duality::tense::{
    enumerate_meet_compatible_relations, equivalence_battery, interior_bridge_check,
    operator_to_compatible_relation,
};

#[derive(Parser)]
#[command(
    name = "modal-duality",
    version,
    about = "Exact verification workbench for operator structure on boolean algebras"
)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Omit wall time from the report, for byte-stable output.
    #[arg(long, global = true)]
    no_time: bool,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Case count for the randomized suites.
    #[arg(long, global = true, default_value_t = 1000)]
    cases: u64,
    /// Depth of the dense truncation oracle.
    #[arg(long, global = true, default_value_t = 1000)]
    truncation: u64,
    /// Largest atom count for enumeration commands.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=3))]
    max_m: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count necessity, tense-necessity, and meet-compatible-relation
    /// structures for each atom count up to --max-m.
    Enumerate,
    /// Run a certificate bundle.
    Certify {
        #[arg(value_enum)]
        target: CertifyTarget,
    },
    /// Analyze a poset given as an `i <= j` edge list and print its
    /// lattice-law verdict as JSON.
    Analyze { path: PathBuf },
    /// Run the randomized invariant suites.
    PropertySuite,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertifyTarget {
    Alpha,
    Beta,
    All,
}

fn cmd_enumerate(max_m: u8) -> Vec<Check> {
    let mut checks = Vec::new();
    for m in 0..=max_m {
        let ops = enumerate_necessity_ops(m).expect("max-m is capped at 3");
        let expected = necessity_op_count(m).unwrap();
        let tense = ops
            .iter()
            .filter(|op| equivalence_battery(op).unwrap().all_true())
            .count();
        let (compatible, compatible_how) = if m <= 2 {
            (
                enumerate_meet_compatible_relations(m).unwrap().len(),
                "brute force over all candidate relations",
            )
        } else {
            let images: std::collections::BTreeSet<_> = ops
                .iter()
                .map(|op| operator_to_compatible_relation(op).unwrap())
                .collect();
            (
                images.len(),
                "distinct verified images of the operator pairing",
            )
        };
        let ok = ops.len() as u128 == expected && tense == ops.len() && compatible == ops.len();
        checks.push(Check::new(
            format!("enumerate-m{m}"),
            "the necessity operators, the tense necessity operators, and the \
             meet-compatible relations are equinumerous, with count 2^(m*m)",
            vec![format!("m = {m}")],
            format!(
                "necessity {} / tense {tense} / compatible relations {compatible} \
                 (expected {expected}; relations counted by {compatible_how})",
                ops.len()
            ),
            ok,
        ));
    }
    checks
}

fn print_report(report: &Report, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).unwrap());
        return;
    }
    for check in &report.checks {
        let tag = match check.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Unknown => "????",
        };
        println!("[{tag}] {} :: {}", check.name, check.law);
        if !check.inputs.is_empty() {
            println!("       inputs:   {}", check.inputs.join(" ; "));
        }
        println!("       computed: {}", check.computed);
        if let Some(w) = &check.witness {
            println!("       witness:  {w}");
        }
    }
    print!(
        "summary: {} pass, {} fail, {} unknown",
        report.summary.pass, report.summary.fail, report.summary.unknown
    );
    match report.time_ms {
        Some(ms) => println!(" ({ms} ms)"),
        None => println!(),
    }
}

fn cmd_analyze(path: &PathBuf) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let poset = match FinPoset::from_edge_list(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match poset.analyze() {
        Ok(verdict) => {
            println!("{}", serde_json::to_string_pretty(&verdict).unwrap());
            ExitCode::SUCCESS
        }
        Err(e @ PosetError::LawEquivalenceViolated) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (command, checks) = match &cli.command {
        Command::Enumerate => ("enumerate".to_string(), cmd_enumerate(cli.max_m)),
        Command::Certify { target } => match target {
            CertifyTarget::Alpha => (
                "certify alpha".to_string(),
                certify_counterexamples(cli.truncation),
            ),
            CertifyTarget::Beta => ("certify beta".to_string(), certify_meet_defect()),
            CertifyTarget::All => {
                let mut checks = certify_counterexamples(cli.truncation);
                checks.extend(certify_meet_defect());
                checks.extend(interior_bridge_check(cli.truncation));
                ("certify all".to_string(), checks)
            }
        },
        Command::Analyze { path } => return cmd_analyze(path),
        Command::PropertySuite => {
            let outcomes = run_all(cli.seed, cli.cases, cli.truncation);
            let checks = outcomes
                .into_iter()
                .map(|o| {
                    let mut check = Check::new(
                        o.name.clone(),
                        "randomized invariant suite",
                        vec![format!("seed {}", cli.seed), format!("cases {}", o.cases)],
                        format!("{} cases, {} failures", o.cases, o.failures.len()),
                        o.ok(),
                    );
                    if let Some(first) = o.failures.first() {
                        check = check.with_witness(first.clone());
                    }
                    check
                })
                .collect();
            ("property-suite".to_string(), checks)
        }
    };
    let mut report = Report::new(command, checks);
    if !cli.no_time {
        report.time_ms = Some(start.elapsed().as_millis() as u64);
    }
    print_report(&report, cli.json);
    ExitCode::from(report.exit_code() as u8)
}
