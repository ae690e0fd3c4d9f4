mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{
    bounds_cmd, combine_cmd, conjecture_cmd, construct_cmd, induce_cmd, search_cmd, table_cmd,
    verify_cmd,
};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Induce(a) => induce_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Construct(a) => construct_cmd(a),
        Command::Search(a) => search_cmd(a),
        Command::Table(a) => table_cmd(a),
        Command::Bounds(a) => bounds_cmd(a),
        Command::Combine(a) => combine_cmd(a),
        Command::CheckConjecture(a) => conjecture_cmd(a),
    };
    match result {
        Ok(out) => {
            println!("{}", out.stdout);
            for line in &out.stderr {
                eprintln!("{line}");
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
