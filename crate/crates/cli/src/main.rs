mod args;
mod commands;
mod config;
mod error;
mod output;
mod settings;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Method};
use commands::SpectrumOptions;
use error::CliError;
use output::Format;
use settings::{DEFAULT_SAMPLES, DEFAULT_T_MAX};

fn run(cli: &Cli) -> Result<(), CliError> {
    let out = match &cli.command {
        Command::Solve(p) => commands::cmd_solve(&settings::base(cli.units, p)?)?,
        Command::Evolve { params, time, method } => {
            let b = settings::base(cli.units, params)?;
            let w = settings::window(&b, time, DEFAULT_T_MAX, DEFAULT_SAMPLES)?;
            let m = settings::method(&b, *method, Method::All)?;
            commands::cmd_evolve(&b, &w, m)?
        }
        Command::Compare { params, time } => {
            let b = settings::base(cli.units, params)?;
            if let Some(m) = settings::config_enum::<Method>(&b.file, "method")? {
                if m != Method::All {
                    return Err(CliError::Usage(format!("compare needs method = all, recipe has {}", m.column())));
                }
            }
            let w = settings::window(&b, time, DEFAULT_T_MAX, DEFAULT_SAMPLES)?;
            commands::cmd_compare(&b, &w)?
        }
        Command::Sweep { params, sweep } => {
            let b = settings::base(cli.units, params)?;
            commands::cmd_sweep(&b, &settings::sweep(&b, sweep)?)?
        }
        Command::Spectrum {
            params,
            time,
            method,
            pad,
            threshold,
        } => {
            let b = settings::base(cli.units, params)?;
            let d = commands::default_spectrum_window(&b.params)?;
            let w = settings::window(&b, time, d.t_max, d.samples)?;
            let opts = SpectrumOptions {
                method: settings::method(&b, *method, Method::Exact)?,
                pad: pad.or(b.file.get("pad")?),
                threshold: threshold.or(b.file.get("threshold")?),
            };
            commands::cmd_spectrum(&b, &w, &opts)?
        }
    };

    let format = cli.format.unwrap_or(match cli.command {
        Command::Solve(_) => Format::Json,
        _ => Format::Csv,
    });
    match &cli.output {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            output::write(&out, format, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            output::write(&out, format, &mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
