//! Command-line front end for the library.
//!
//! Exit codes follow the grep convention: 0 for "yes" (or plain success),
//! 1 for "no" (the property fails, usually with a witness on stdout), and
//! 2 for any error, including malformed input and flanked operands whose
//! flanking relation does not actually verify.

use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::compose;
use crate::decide;
use crate::error::{Error, Result};
use crate::family;
use crate::format::{self, Document};
use crate::nfa::{Ffa, Symbol, SymbolMap, Word};
use crate::oracle;
use crate::powerset::{self, FlankCheck, FlankViolation, Flankability, DEFAULT_MAX_CLASSES};

#[derive(Parser, Debug)]
#[command(
    name = "flanked",
    about = "Work with prefix-closed automata and their flanking relations",
    version
)]
pub struct Cli {
    /// Cap on the number of run-set classes any subset construction may
    /// explore before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CLASSES)]
    max_classes: usize,

    /// Suppress yes/no chatter; rely on the exit code.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify that the flanking relation of an ffa document is correct.
    CheckFlanked {
        /// Path to an ffa document, or `-` for stdin.
        file: PathBuf,
    },
    /// Decide whether an automaton admits a flanking relation; if so, print
    /// a verified ffa document for it.
    Flankable { file: PathBuf },
    /// Decide whether a verified ffa accepts every word.
    Universal { file: PathBuf },
    /// Decide whether the language of LEFT is contained in that of RIGHT
    /// (RIGHT must be a verified ffa).
    Include { left: PathBuf, right: PathBuf },
    /// Intersect two verified ffa documents.
    Intersect { a: PathBuf, b: PathBuf },
    /// Print the largest prefix-closed language X with L(B) ∩ X ⊆ L(A),
    /// as a verified ffa.
    Quotient { a: PathBuf, b: PathBuf },
    /// Union of two verified ffa documents.
    Union { a: PathBuf, b: PathBuf },
    /// Apply a symbol substitution to an ffa; prints a plain nfa document
    /// because the image need not be flankable.
    Relabel {
        file: PathBuf,
        /// Substitution entries `FROM=TO`; unmapped symbols stay put.
        #[arg(long = "map", value_name = "FROM=TO")]
        map: Vec<String>,
    },
    /// Subset-construct an equivalent deterministic automaton.
    Determinize { file: PathBuf },
    /// Minimize a trimmed deterministic automaton.
    Minimize { file: PathBuf },
    /// Print the n-th member of the built-in family whose minimal DFA needs
    /// at least 2^n states.
    GenFamily { n: usize },
    /// Test whether the automaton accepts a word (given as one
    /// space-separated argument; omit it for the empty word).
    Member {
        file: PathBuf,
        word: Option<String>,
    },
    /// List every accepted word up to the given length, shortest first.
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Input(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))
    }
}

fn load(path: &Path) -> Result<Document> {
    parse_named(path, &read_input(path)?)
}

fn parse_named(path: &Path, text: &str) -> Result<Document> {
    format::parse(text).map_err(|e| match e {
        Error::Parse { line, message } => {
            Error::Input(format!("{}:{line}: {message}", path.display()))
        }
        other => Error::Input(format!("{}: {other}", path.display())),
    })
}

fn load_ffa(path: &Path) -> Result<Ffa> {
    match load(path)? {
        Document::Ffa(f) => Ok(f),
        Document::Nfa(_) => Err(Error::Input(format!(
            "{}: expected an ffa document",
            path.display()
        ))),
    }
}

fn violation_text(kind: FlankViolation) -> &'static str {
    match kind {
        FlankViolation::ForbiddenYetExtendable => "flanked yet still extendable",
        FlankViolation::MissingFlank => "rejected extension without a flank",
    }
}

/// Loads an ffa and insists that its flanking relation verifies; the
/// decision procedures are only sound on verified inputs.
fn load_verified(path: &Path, max_classes: usize) -> Result<Ffa> {
    let f = load_ffa(path)?;
    match powerset::is_flanked(&f, max_classes)? {
        FlankCheck::Flanked => Ok(f),
        FlankCheck::Violation { word, symbol, kind } => Err(Error::Input(format!(
            "{}: flanking relation does not verify: at word {word}, symbol {symbol} ({})",
            path.display(),
            violation_text(kind)
        ))),
    }
}

fn parse_map(entries: &[String], alphabet: &[Symbol]) -> Result<SymbolMap> {
    let mut map = SymbolMap::new();
    for entry in entries {
        let (from, to) = entry
            .split_once('=')
            .ok_or_else(|| Error::Input(format!("bad map entry {entry:?}, expected FROM=TO")))?;
        let from = Symbol::new(from)?;
        let to = Symbol::new(to)?;
        if !alphabet.contains(&from) {
            return Err(Error::UnknownSymbol(from.name().to_string()));
        }
        if map.insert(from, to).is_some() {
            return Err(Error::Input(format!("symbol mapped twice in {entry:?}")));
        }
    }
    for s in alphabet {
        map.entry(s.clone()).or_insert_with(|| s.clone());
    }
    Ok(map)
}

fn verdict(quiet: bool, yes: bool, yes_text: &str, no_text: &str) -> i32 {
    if !quiet {
        println!("{}", if yes { yes_text } else { no_text });
    }
    if yes {
        0
    } else {
        1
    }
}

/// Runs one parsed invocation; returns the process exit code. Errors bubble
/// up to [`main_from`], which turns them into exit code 2.
fn run(cli: Cli) -> Result<i32> {
    let mc = cli.max_classes;
    let quiet = cli.quiet;
    match cli.command {
        Command::CheckFlanked { file } => {
            let f = load_ffa(&file)?;
            match powerset::is_flanked(&f, mc)? {
                FlankCheck::Flanked => Ok(verdict(quiet, true, "flanked", "")),
                FlankCheck::Violation { word, symbol, kind } => {
                    if !quiet {
                        println!(
                            "not flanked: at word {word}, symbol {symbol} ({})",
                            violation_text(kind)
                        );
                    }
                    Ok(1)
                }
            }
        }
        Command::Flankable { file } => {
            let doc = load(&file)?;
            match powerset::is_flankable(doc.automaton(), mc)? {
                Flankability::Flankable(flank) => {
                    let f = Ffa::new(doc.automaton().clone(), flank)?;
                    print!("{}", format::print_ffa(&f));
                    Ok(0)
                }
                Flankability::NotFlankable { word, symbol } => {
                    if !quiet {
                        println!("not flankable: word {word} demands a flank for {symbol} that no state can carry");
                    }
                    Ok(1)
                }
            }
        }
        Command::Universal { file } => {
            let f = load_verified(&file, mc)?.trim();
            Ok(verdict(
                quiet,
                decide::is_universal(&f)?,
                "universal",
                "not universal",
            ))
        }
        Command::Include { left, right } => {
            let left = load(&left)?;
            let right = load_verified(&right, mc)?;
            let res = decide::check_inclusion(left.automaton(), &right)?;
            if res.included {
                Ok(verdict(quiet, true, "included", ""))
            } else {
                if !quiet {
                    println!(
                        "not included: witness {}",
                        res.witness.expect("failed inclusion carries a witness")
                    );
                }
                Ok(1)
            }
        }
        Command::Intersect { a, b } => {
            let out = compose::intersect(&load_verified(&a, mc)?, &load_verified(&b, mc)?)?;
            print!("{}", format::print_ffa(&out));
            Ok(0)
        }
        Command::Quotient { a, b } => {
            let out = compose::quotient(&load_verified(&a, mc)?, &load_verified(&b, mc)?)?;
            print!("{}", format::print_ffa(&out));
            Ok(0)
        }
        Command::Union { a, b } => {
            let out = compose::union(&load_verified(&a, mc)?, &load_verified(&b, mc)?)?;
            print!("{}", format::print_ffa(&out));
            Ok(0)
        }
        Command::Relabel { file, map } => {
            let f = load_ffa(&file)?;
            let map = parse_map(&map, f.automaton().alphabet())?;
            let out = compose::relabel(&f, &map)?;
            print!("{}", format::print_nfa(&out));
            Ok(0)
        }
        Command::Determinize { file } => {
            let doc = load(&file)?;
            let out = powerset::determinize(doc.automaton(), mc)?;
            print!("{}", format::print_nfa(&out));
            Ok(0)
        }
        Command::Minimize { file } => {
            let doc = load(&file)?;
            let out = powerset::minimize(&doc.automaton().trim())?;
            print!("{}", format::print_nfa(&out));
            Ok(0)
        }
        Command::GenFamily { n } => {
            let inst = family::generate(n)?;
            print!("{}", format::print_ffa(inst.ffa()));
            Ok(0)
        }
        Command::Member { file, word } => {
            let doc = load(&file)?;
            let w = Word::parse(word.as_deref().unwrap_or(""))?;
            Ok(verdict(
                quiet,
                doc.automaton().accepts(&w)?,
                "accepted",
                "rejected",
            ))
        }
        Command::Enumerate { file, depth } => {
            let doc = load(&file)?;
            let lang = oracle::enumerate(doc.automaton(), depth);
            let mut words: Vec<&Word> = lang.words().iter().collect();
            words.sort_by(|a, b| a.shortlex_cmp(b));
            for w in words {
                println!("{w}");
            }
            Ok(0)
        }
    }
}

/// Entry point shared by the binary and the tests: parses `args` (including
/// the program name) and returns the exit code.
pub fn main_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version itself; usage errors become
            // exit code 2 like any other bad input.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
