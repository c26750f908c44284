//! Command line front end for `reesag`: argument parsing, dispatch to the
//! library, text and JSON reports, and the built-in claim suite.

pub mod args;
pub mod commands;
pub mod report;
pub mod suite;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use serde_json::json;

use reesag::{Error, Field, FieldSpec, PrimeField, Rationals};

use args::{Cli, Command};
use report::{ErrorInfo, Report, EXIT_CHECK_FAILED, EXIT_INTERNAL, EXIT_USAGE};

fn exit_code_for(e: &Error) -> i32 {
    if e.is_usage() {
        EXIT_USAGE
    } else if matches!(e, Error::ExponentOverflow) {
        EXIT_INTERNAL
    } else {
        EXIT_CHECK_FAILED
    }
}

fn fail(report: &mut Report, code: &str, message: String, exit: i32) {
    report.result = serde_json::Value::Null;
    report.witness = None;
    report.error = Some(ErrorInfo { code: code.to_string(), message });
    report.exit_code = exit;
}

fn run_suite_verb<F: Field>(field: F, cli: &Cli, tamper: &[String], report: &mut Report) {
    let tamper: BTreeSet<String> = tamper.iter().cloned().collect();
    let res = suite::run_suite(&field, cli.seed, cli.trials, &tamper);
    let known: BTreeSet<&str> = res.entries.iter().map(|e| e.id.as_str()).collect();
    if let Some(unknown) = tamper.iter().find(|t| !known.contains(t.as_str())) {
        fail(report, "E_USAGE", format!("unknown suite entry `{unknown}`"), EXIT_USAGE);
        return;
    }
    if !res.all_passed() {
        report.exit_code = EXIT_CHECK_FAILED;
    }
    let entries: Vec<_> = res
        .entries
        .iter()
        .map(|e| {
            json!({
                "id": e.id,
                "criterion": e.criterion,
                "claim": e.claim,
                "pass": e.pass,
                "expected": e.expected,
                "observed": e.observed,
            })
        })
        .collect();
    report.result = json!({
        "summary": {
            "total": res.total,
            "passed": res.passed,
            "failed": res.failed,
            "all_passed": res.all_passed(),
        },
        "entries": entries,
    });
}

fn dispatch<F: Field>(field: F, cli: &Cli, report: &mut Report) {
    if let Command::ClaimSuite { tamper } = &cli.command {
        run_suite_verb(field, cli, tamper, report);
        return;
    }
    if let Err(e) = commands::execute(field, cli, report) {
        fail(report, e.code(), e.to_string(), exit_code_for(&e));
    }
}

/// Run one parsed command. Never panics; internal failures become exit
/// code 3 reports.
pub fn run(cli: &Cli) -> Report {
    let start = Instant::now();
    let mut report = Report::new(cli.command.verb(), commands::params(cli));
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| {
        let mut inner = report.clone();
        match FieldSpec::parse(&cli.field) {
            Ok(FieldSpec::Prime(p)) => dispatch(PrimeField::new(p).expect("validated"), cli, &mut inner),
            Ok(FieldSpec::Rational) => dispatch(Rationals, cli, &mut inner),
            Err(e) => fail(&mut inner, e.code(), e.to_string(), EXIT_USAGE),
        }
        inner
    }));
    report = match outcome {
        Ok(r) => r,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(&mut report, "E_INTERNAL", msg, EXIT_INTERNAL);
            report
        }
    };
    if cli.timing {
        report.millis = Some(start.elapsed().as_millis() as u64);
    }
    report
}

/// Render the report as the process would print it.
pub fn render(cli: &Cli, report: &Report) -> String {
    if cli.json {
        let mut s = report.to_json();
        s.push('\n');
        s
    } else {
        report.to_text()
    }
}
