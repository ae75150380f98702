use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use urdu_cli::commands::{self, CommandError, Result, Target};
use urdu_cli::service;
use urdu_morph::lexicon::SAMPLE_LEXICON;
use urdu_morph::translit::Script;

/// Urdu transliteration, morphology, lexicon extraction and syntax.
#[derive(Parser)]
#[command(name = "urdu", version, arg_required_else_help = true)]
struct Cli {
    /// Lexicon source file (defaults to the bundled sample lexicon).
    #[arg(long, global = true, value_name = "FILE")]
    lexicon: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert text between Urdu script, roman and phonetic notation.
    Translit {
        #[arg(long)]
        to: Target,
        /// Text to convert; standard input when omitted.
        text: Vec<String>,
    },
    /// Print the inflection table of one entry.
    Inflect { paradigm: String, forms: Vec<String> },
    /// Compile a lexicon file and print its size.
    Compile { lexfile: PathBuf },
    /// Analyze tokens read from standard input, one per line.
    Analyze {
        #[arg(long)]
        script: Option<Script>,
    },
    /// Print every form of a lemma.
    Synth { lemma: String },
    /// Split a corpus into word tokens, one per line.
    Tokenize {
        #[arg(long)]
        script: Option<Script>,
        /// Corpus file; standard input when omitted.
        file: Option<PathBuf>,
    },
    /// Print token and type counts of a corpus.
    Stats {
        #[arg(long)]
        script: Option<Script>,
        file: Option<PathBuf>,
    },
    /// Extract candidate lexicon entries from a corpus.
    Extract {
        /// Paradigm rule file (defaults to the bundled rules).
        #[arg(long)]
        rules: Option<PathBuf>,
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        script: Option<Script>,
    },
    /// Export the compiled lexicon.
    Export {
        #[arg(long, default_value = "fullform-tsv")]
        format: String,
    },
    /// Parse sentences read from standard input, one per line.
    Parse,
    /// Linearize trees read from standard input, one per line.
    Linearize,
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long)]
        state: PathBuf,
    },
}

fn read_file(path: &PathBuf) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| CommandError::Data(format!("{}: {e}", path.display())))
}

fn read_text(path: &PathBuf) -> Result<String> {
    String::from_utf8(read_file(path)?).map_err(|_| CommandError::Data(format!("{}: not UTF-8", path.display())))
}

fn stdin_text() -> Result<String> {
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| CommandError::Data(format!("standard input: {e}")))?;
    Ok(s)
}

fn input(file: &Option<PathBuf>) -> Result<String> {
    file.as_ref().map_or_else(stdin_text, read_text)
}

fn run(cli: Cli) -> Result<Vec<u8>> {
    let lexicon = cli.lexicon.as_ref().map(read_text).transpose()?;
    let dict = || commands::load_dictionary(lexicon.as_deref());
    let out = match cli.command {
        Command::Translit { to, text } => {
            if text.is_empty() {
                commands::translit(&stdin_text()?, to)?
            } else {
                commands::translit(&text.join(" "), to)? + "\n"
            }
        }
        Command::Inflect { paradigm, forms } => {
            let refs: Vec<&str> = forms.iter().map(String::as_str).collect();
            commands::inflect_table(&paradigm, &refs)?
        }
        Command::Compile { lexfile } => {
            commands::compile_summary(&commands::load_dictionary(Some(&read_text(&lexfile)?))?)
        }
        Command::Analyze { script } => commands::analyze_lines(&stdin_text()?, script, &dict()?)?,
        Command::Synth { lemma } => commands::synth(&lemma, &dict()?)?,
        Command::Tokenize { script, file } => commands::tokenize(&input(&file)?, script)?,
        Command::Stats { script, file } => commands::stats(&input(&file)?, script)?,
        Command::Extract { rules, corpus, script } => {
            let rules = rules.as_ref().map(read_file).transpose()?;
            return commands::extract_text(rules.as_deref(), &read_text(&corpus)?, script);
        }
        Command::Export { format } => return commands::export(&dict()?, &format),
        Command::Parse => commands::parse_lines(&stdin_text()?, &dict()?)?,
        Command::Linearize => commands::linearize_lines(&stdin_text()?, &dict()?)?,
        Command::Serve { port, host, state } => {
            serve(&host, port, &state, lexicon.as_deref().unwrap_or(SAMPLE_LEXICON))?;
            String::new()
        }
    };
    Ok(out.into_bytes())
}

fn serve(host: &str, port: u16, state: &std::path::Path, lexicon: &str) -> Result<()> {
    let shared = service::open_state(state, lexicon).map_err(|e| CommandError::Data(e.to_string()))?;
    let runtime = tokio::runtime::Runtime::new().map_err(|e| CommandError::Data(e.to_string()))?;
    runtime.block_on(async {
        let listener = tokio::net::TcpListener::bind((host, port))
            .await
            .map_err(|e| CommandError::Usage(format!("cannot bind {host}:{port}: {e}")))?;
        let addr = listener.local_addr().map_err(|e| CommandError::Data(e.to_string()))?;
        println!("listening on http://{addr}");
        let _ = std::io::stdout().flush();
        service::serve(listener, shared).await.map_err(|e| CommandError::Data(e.to_string()))
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(bytes) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(&bytes).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("urdu: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
