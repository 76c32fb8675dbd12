use std::process::ExitCode;

use clap::Parser;

use qgr_cli::commands::Format;
use qgr_cli::{run, Cli};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    // clap exits with 2 on usage errors and 0 for --help / --version
    let cli = Cli::parse_from(&argv);
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let mut json = outcome.json;
    if let Some(obj) = json.as_object_mut() {
        obj.insert("command".into(), argv[1..].join(" ").into());
    }
    let json_text = serde_json::to_string_pretty(&json).expect("JSON value serializes");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{json_text}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    match cli.format {
        Format::Json => println!("{json_text}"),
        Format::Text => print!("{}", outcome.text),
    }
    if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
