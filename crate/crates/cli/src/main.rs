use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use genusdist_cli::args::Cli;
use genusdist_cli::{execute, exit_code, render, Limits};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match Limits::from_cli(&cli) {
        Ok(l) => l,
        Err(e) => return fail(&e),
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.global.threads {
        pool = pool.num_threads(t);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    let record = match pool.install(|| execute(&cli, &limits)) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let out = render(&record, cli.global.format);
    if std::io::stdout().lock().write_all(out.as_bytes()).is_err() {
        return ExitCode::from(1);
    }
    if record.result.passed() {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: oracle and formula disagree, or a certificate failed");
        ExitCode::from(1)
    }
}

fn fail(e: &genusdist::Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(e) as u8)
}
