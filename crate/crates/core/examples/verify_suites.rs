//! Runs every verification suite at a small scale and prints the reports.

use blocksym::verify::{run_all, VerifyConfig};

fn main() -> blocksym::Result<()> {
    let scale = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let reports = run_all(&VerifyConfig::new(scale))?;
    for report in &reports {
        println!("{}", serde_json::to_string(report).map_err(|e| blocksym::Error::Internal(e.to_string()))?);
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} suites, {failed} failed", reports.len());
    Ok(())
}
