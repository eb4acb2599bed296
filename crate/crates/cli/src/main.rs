use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fuzzydet::determinize::{self, preflight, DEFAULT_CAP};
use fuzzydet::io::{cdfa_to_dot, parse_automaton, parse_relation};
use fuzzydet::{Bounded, Cdfa, Closure, DetOutcome, Equivalence, FuzzyAutomaton, FuzzyMatrix, Method};

const EXIT_DIFFERENT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Fuzzy finite automata and their crisp-deterministic equivalents.
#[derive(Debug, Parser)]
#[command(name = "fuzzydet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the degree to which the automaton accepts a word.
    Eval {
        file: PathBuf,
        /// Symbols joined by `.`, or `_` for the empty word.
        word: String,
    },
    /// Build a crisp-deterministic equivalent and report its states.
    Det {
        file: PathBuf,
        #[arg(long, value_parser = parse_method)]
        method: Method,
        /// Relation file for `--method psi`, or `identity`.
        #[arg(long)]
        psi: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CAP, value_parser = parse_cap)]
        max_states: usize,
        /// Write the result as DOT to this file, or to stdout with `-`.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Print construction counters and elapsed time.
        #[arg(long)]
        stats: bool,
    },
    /// Decide whether two automata recognize the same fuzzy language.
    Equiv {
        file1: PathBuf,
        file2: PathBuf,
        /// One method for both inputs, or two joined by a comma.
        #[arg(long, default_value = "incl", value_parser = parse_method_pair)]
        method: (Method, Method),
        #[arg(long, default_value_t = DEFAULT_CAP, value_parser = parse_cap)]
        max_states: usize,
    },
    /// Report whether the values of the automaton generate a finite subsemiring.
    Semiring {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP, value_parser = parse_cap)]
        cap: usize,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    Method::from_name(s).ok_or_else(|| {
        let names: Vec<_> = Method::ALL.iter().map(|m| m.name()).collect();
        format!("unknown method `{s}`, expected one of {}", names.join(", "))
    })
}

fn parse_method_pair(s: &str) -> Result<(Method, Method), String> {
    match s.split_once(',') {
        Some((a, b)) => Ok((parse_method(a)?, parse_method(b)?)),
        None => parse_method(s).map(|m| (m, m)),
    }
}

fn parse_cap(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<FuzzyAutomaton, Failure> {
    parse_automaton(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(out: &str) -> Result<(), Failure> {
    let mut stdout = io::stdout().lock();
    match stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure {
            code: EXIT_USAGE,
            message: format!("writing output: {e}"),
        }),
        _ => Ok(()),
    }
}

fn eval(file: &Path, word: &str) -> CmdResult {
    let a = load(file)?;
    let w = a
        .alphabet()
        .parse_word(word)
        .map_err(|e| Failure::usage(e.to_string()))?;
    let v = a.evaluate(&w).map_err(|e| Failure::usage(e.to_string()))?;
    emit(&format!("{}\n", a.lattice().format_value(&v)))?;
    Ok(0)
}

fn semiring_line(closure: &Closure, n: usize) -> String {
    match (closure.size(), closure.state_bound(n)) {
        (Some(k), Some(bound)) => format!("finite, k={k}, bound {k}^{n}={bound}"),
        _ => match closure {
            Closure::CapExceeded { cap } => format!("cap exceeded at {cap}"),
            Closure::Closed(_) => unreachable!("closed sets have a size"),
        },
    }
}

fn load_psi(arg: Option<&str>, a: &FuzzyAutomaton) -> Result<Option<FuzzyMatrix>, Failure> {
    match arg {
        None | Some("identity") => Ok(None),
        Some(path) => {
            let text = read(Path::new(path))?;
            parse_relation(&text, a.lattice(), a.states())
                .map(Some)
                .map_err(|e| Failure::usage(format!("{path}: {e}")))
        }
    }
}

fn construct(a: &FuzzyAutomaton, method: Method, psi: Option<&FuzzyMatrix>, cap: usize) -> Result<DetOutcome, Failure> {
    determinize::run(a, method, psi, cap).map_err(|e| Failure::usage(e.to_string()))
}

fn cap_warning(method: Method, cap: usize, built: usize) -> String {
    format!(
        "warning: {} construction stopped after {built} states (--max-states {cap}); its state space may be infinite",
        method.name()
    )
}

fn report(out: &mut String, c: &Cdfa) {
    let l = c.lattice();
    let al = c.alphabet();
    let _ = writeln!(out, "states: {}", c.states());
    for q in 0..c.states() {
        let _ = write!(
            out,
            "q{q} word={} terminal={}",
            al.format_word(&c.label(q).word),
            l.format_value(c.terminal(q))
        );
        for x in 0..al.len() {
            let _ = write!(out, " {}->q{}", al.symbol(x), c.next(q, x));
        }
        out.push('\n');
    }
}

fn det(file: &Path, method: Method, psi: Option<&str>, cap: usize, dot: Option<&Path>, stats: bool) -> CmdResult {
    if psi.is_some() && method != Method::Psi {
        return Err(Failure::usage("--psi only applies to --method psi"));
    }
    let a = load(file)?;
    let psi = load_psi(psi, &a)?;
    let pre = preflight(&a, cap);
    if let Closure::CapExceeded { cap } = pre.closure {
        eprintln!("warning: generated subsemiring has more than {cap} elements; termination is not guaranteed");
    }
    let outcome = construct(&a, method, psi.as_ref(), cap)?;

    let mut out = String::new();
    let _ = writeln!(out, "method: {}", method.name());
    let _ = writeln!(out, "semiring: {}", semiring_line(&pre.closure, a.states()));
    let code = match &outcome.result {
        Bounded::Complete(c) => {
            report(&mut out, c);
            0
        }
        Bounded::CapExceeded { cap, states_built } => {
            let _ = writeln!(out, "states: cap exceeded at {cap}");
            eprintln!("{}", cap_warning(method, *cap, *states_built));
            EXIT_CAP
        }
    };
    if stats {
        let s = &outcome.stats;
        let _ = writeln!(out, "vertices: {}", s.vertices);
        let _ = writeln!(out, "equality checks: {}", s.equality_checks);
        let _ = writeln!(out, "elapsed: {:.3} ms", s.elapsed.as_secs_f64() * 1e3);
    }

    let dot_text = outcome.cdfa().map(cdfa_to_dot);
    match (dot, dot_text) {
        (Some(path), Some(text)) if path == Path::new("-") => {
            // keep stdout pure DOT
            eprint!("{out}");
            emit(&text)?;
        }
        (Some(path), Some(text)) => {
            emit(&out)?;
            fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        }
        (Some(_), None) => {
            emit(&out)?;
            eprintln!("warning: no DOT written because the construction did not complete");
        }
        (None, _) => emit(&out)?,
    }
    Ok(code)
}

fn equiv(file1: &Path, file2: &Path, methods: (Method, Method), cap: usize) -> CmdResult {
    let a = load(file1)?;
    let b = load(file2)?;
    if a.lattice() != b.lattice() {
        return Err(Failure::usage(format!(
            "lattice mismatch: {} uses {}, {} uses {}",
            file1.display(),
            a.lattice(),
            file2.display(),
            b.lattice()
        )));
    }
    if a.alphabet() != b.alphabet() {
        return Err(Failure::usage(format!(
            "alphabet mismatch: {} has {{{}}}, {} has {{{}}}",
            file1.display(),
            a.alphabet(),
            file2.display(),
            b.alphabet()
        )));
    }
    let mut built = Vec::with_capacity(2);
    for (x, m) in [(&a, methods.0), (&b, methods.1)] {
        match construct(x, m, None, cap)?.result {
            Bounded::Complete(c) => built.push(c),
            Bounded::CapExceeded { cap, states_built } => {
                emit(&format!("unknown: cap exceeded at {cap}\n"))?;
                eprintln!("{}", cap_warning(m, cap, states_built));
                return Ok(EXIT_CAP);
            }
        }
    }
    let verdict = built[0]
        .equivalent(&built[1])
        .map_err(|e| Failure::usage(e.to_string()))?;
    match verdict {
        Equivalence::Equivalent => {
            emit("equivalent\n")?;
            Ok(0)
        }
        Equivalence::Distinguished(w) => {
            let l = a.lattice();
            let left = built[0].evaluate(&w).map_err(|e| Failure::usage(e.to_string()))?;
            let right = built[1].evaluate(&w).map_err(|e| Failure::usage(e.to_string()))?;
            emit(&format!(
                "not equivalent\nwitness: {}\n{}: {}\n{}: {}\n",
                a.alphabet().format_word(&w),
                file1.display(),
                l.format_value(&left),
                file2.display(),
                l.format_value(&right)
            ))?;
            Ok(EXIT_DIFFERENT)
        }
    }
}

fn semiring(file: &Path, cap: usize) -> CmdResult {
    let a = load(file)?;
    let pre = preflight(&a, cap);
    emit(&format!("{}\n", semiring_line(&pre.closure, a.states())))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval { file, word } => eval(file, word),
        Command::Det {
            file,
            method,
            psi,
            max_states,
            dot,
            stats,
        } => det(file, *method, psi.as_deref(), *max_states, dot.as_deref(), *stats),
        Command::Equiv {
            file1,
            file2,
            method,
            max_states,
        } => equiv(file1, file2, *method, *max_states),
        Command::Semiring { file, cap } => semiring(file, *cap),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
