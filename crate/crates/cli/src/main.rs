use std::process::ExitCode;

use clap::Parser;
use idealarith_cli::{config, resolve, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_caps = std::env::var(config::CAPS_ENV).ok();
    let outcome = resolve(&cli, env_caps.as_deref())
        .and_then(|cfg| run(&cli.command, &cfg).map(|r| (cfg, r)));
    let (cfg, report) = match outcome {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = report.render(cfg.format);
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
