//! Shared output helpers for the `verify` and `search` binaries.

use std::path::Path;

use anyhow::Context;
use spinquandle::verify::{ReportDocument, VerificationReport};

/// Prints the human-readable summary table.
pub fn print_table(reports: &[VerificationReport]) {
    let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
    println!("{:<width$}  {:<5}  {:>7}  {:>12}  result", "check", "mode", "samples", "residual");
    for r in reports {
        println!(
            "{:<width$}  {:<5}  {:>7}  {:>12.3e}  {}",
            r.name,
            format!("{:?}", r.mode).to_lowercase(),
            r.samples,
            r.residual,
            if r.pass { "PASS" } else { "FAIL" }
        );
        for w in &r.witnesses {
            println!("    {w}");
        }
    }
}

/// Writes `text` to `path`, creating nothing but the file itself.
pub fn write_report(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing report to {}", path.display()))
}

/// Prints the table, writes the JSON document if asked, and returns whether
/// every report passed.
pub fn finish(reports: Vec<VerificationReport>, report_path: Option<&Path>) -> anyhow::Result<bool> {
    print_table(&reports);
    let doc = ReportDocument::new(reports);
    if let Some(path) = report_path {
        write_report(path, &doc.to_json())?;
    }
    Ok(doc.pass)
}
