//! Runs a verification suite from code and replays one dumped instance.
//!
//! `cargo run --release --example verification_suite [suite] [trials]`

use tolcomplex::suites::{replay_file, run_suite, suite_infos, SuiteOptions};

fn main() -> tolcomplex::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "thm1.5".to_string());
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);

    println!("{} suites available", suite_infos().len());
    let report = run_suite(&name, &SuiteOptions { seed: 7, trials: Some(trials), ..SuiteOptions::default() })?;
    print!("{}", report.to_text());

    // a deliberately degenerate run, to show dumping and replay
    let dir = std::env::temp_dir().join("tolcx-example-dumps");
    let opts = SuiteOptions { seed: 3, trials: Some(10), d: Some(0), dump_dir: Some(dir), ..SuiteOptions::default() };
    let failing = run_suite("tolerance-leray", &opts)?;
    if let Some(path) = failing.failures.iter().find_map(|f| f.dump.clone()) {
        println!("\nreplaying {path}");
        print!("{}", replay_file(&path)?.to_text());
    }
    Ok(())
}
