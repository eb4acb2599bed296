//! Line-oriented automaton format.
//!
//! ```text
//! lattice goguen            # boolean | godel | goguen | lukasiewicz | chain K
//! alphabet x y
//! states 3
//! initial 1 0 0
//! terminal 0 1 0
//! transitions x
//! 0 0.5 1
//! 0 1 0
//! 0 1 0.5
//! transitions y
//! 0 1 0.3
//! 0 1 0
//! 0 0.3 1
//! ```
//!
//! `#` starts a comment and blank lines are ignored. `lattice` and `states`
//! must precede the vectors, and `alphabet` the transition blocks. Row `i` of
//! a `transitions` block lists the degrees out of state `i`.

use std::fmt::Write as _;

use crate::algebra::{FuzzyMatrix, FuzzyVector};
use crate::automaton::{Alphabet, FuzzyAutomaton};
use crate::error::{Error, ParseErrorKind, Result};
use crate::lattice::{LatticeKind, Value};

/// A block of the format, for mapping errors back to source lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    Lattice,
    Alphabet,
    States,
    Initial,
    Terminal,
    Transitions(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomatonDocument {
    pub automaton: FuzzyAutomaton,
    /// 1-based line where each block starts.
    pub lines: Vec<(Block, usize)>,
}

impl AutomatonDocument {
    pub fn line_of(&self, block: &Block) -> Option<usize> {
        self.lines.iter().find(|(b, _)| b == block).map(|(_, l)| *l)
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn err(line: usize, column: usize, kind: ParseErrorKind, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        kind,
        message: message.into(),
    }
}

fn lex(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content.char_indices().chain([(content.len(), ' ')]) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            text: &content[s..pos],
                            column: content[..s].chars().count() + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        })
        .collect()
}

fn parse_lattice(line: &Line) -> Result<LatticeKind> {
    let args = &line.tokens[1..];
    let bad = |column| {
        err(
            line.number,
            column,
            ParseErrorKind::Syntax,
            "expected boolean, godel, goguen, lukasiewicz or chain K",
        )
    };
    let Some(name) = args.first() else {
        return Err(bad(line.tokens[0].column));
    };
    let kind = match (name.text, args.len()) {
        ("boolean", 1) => LatticeKind::Boolean,
        ("godel", 1) => LatticeKind::Godel,
        ("goguen", 1) => LatticeKind::Goguen,
        ("lukasiewicz", 1) => LatticeKind::Lukasiewicz,
        ("chain", 2) => {
            let k: u32 = args[1].text.parse().ok().filter(|&k| k >= 1).ok_or_else(|| {
                err(
                    line.number,
                    args[1].column,
                    ParseErrorKind::Syntax,
                    "chain length must be a positive integer",
                )
            })?;
            LatticeKind::Chain(k)
        }
        _ => return Err(bad(name.column)),
    };
    Ok(kind)
}

fn parse_values(line: &Line, tokens: &[Token], lattice: LatticeKind, n: usize) -> Result<Vec<Value>> {
    if tokens.len() != n {
        let column = tokens
            .get(n)
            .or(tokens.last())
            .map_or(line.tokens[0].column, |t| t.column);
        return Err(err(
            line.number,
            column,
            ParseErrorKind::Dimension,
            format!("dimension mismatch: expected {n} values, found {}", tokens.len()),
        ));
    }
    tokens
        .iter()
        .map(|t| {
            lattice.parse_value(t.text).map_err(|_| {
                err(
                    line.number,
                    t.column,
                    ParseErrorKind::InvalidValue,
                    format!("`{}` is not an element of the {lattice} structure", t.text),
                )
            })
        })
        .collect()
}

/// Parses an automaton, keeping the line of each block.
pub fn parse_document(text: &str) -> Result<AutomatonDocument> {
    let lines = lex(text);
    let mut lattice = None;
    let mut alphabet: Option<Alphabet> = None;
    let mut states = None;
    let mut initial = None;
    let mut terminal = None;
    let mut delta: Vec<Option<FuzzyMatrix>> = Vec::new();
    let mut blocks: Vec<(Block, usize)> = Vec::new();

    let mut i = 0;
    while i < lines.len() {
        let line = &lines[i];
        let head = &line.tokens[0];
        let block = match head.text {
            "lattice" => Block::Lattice,
            "alphabet" => Block::Alphabet,
            "states" => Block::States,
            "initial" => Block::Initial,
            "terminal" => Block::Terminal,
            "transitions" => {
                let al = alphabet.as_ref().ok_or_else(|| {
                    err(
                        line.number,
                        head.column,
                        ParseErrorKind::Syntax,
                        "`alphabet` must precede `transitions`",
                    )
                })?;
                let [_, sym] = line.tokens.as_slice() else {
                    return Err(err(
                        line.number,
                        head.column,
                        ParseErrorKind::Syntax,
                        "expected `transitions <symbol>`",
                    ));
                };
                let x = al.index_of(sym.text).map_err(|_| {
                    err(
                        line.number,
                        sym.column,
                        ParseErrorKind::Syntax,
                        format!("unknown symbol `{}`", sym.text),
                    )
                })?;
                Block::Transitions(x)
            }
            other => {
                return Err(err(
                    line.number,
                    head.column,
                    ParseErrorKind::Syntax,
                    format!("unknown directive `{other}`"),
                ));
            }
        };
        if blocks.iter().any(|(b, _)| *b == block) {
            return Err(err(
                line.number,
                head.column,
                ParseErrorKind::DuplicateBlock,
                format!(
                    "duplicate `{}` block",
                    line.tokens[..line.tokens.len().min(2)]
                        .iter()
                        .map(|t| t.text)
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
            ));
        }
        blocks.push((block.clone(), line.number));

        let need_lattice = || {
            lattice.ok_or_else(|| {
                err(
                    line.number,
                    head.column,
                    ParseErrorKind::Syntax,
                    "`lattice` must come first",
                )
            })
        };
        let need_states = || {
            states.ok_or_else(|| {
                err(
                    line.number,
                    head.column,
                    ParseErrorKind::Syntax,
                    format!("`states` must precede `{}`", head.text),
                )
            })
        };
        match block {
            Block::Lattice => lattice = Some(parse_lattice(line)?),
            Block::Alphabet => {
                let symbols = line.tokens[1..].iter().map(|t| t.text);
                let al = Alphabet::new(symbols)
                    .map_err(|e| err(line.number, head.column, ParseErrorKind::Syntax, e.to_string()))?;
                delta = vec![None; al.len()];
                alphabet = Some(al);
            }
            Block::States => {
                let n = match line.tokens.as_slice() {
                    [_, n] => n.text.parse::<usize>().ok().filter(|&n| n >= 1),
                    _ => None,
                };
                states = Some(n.ok_or_else(|| {
                    err(
                        line.number,
                        head.column,
                        ParseErrorKind::Syntax,
                        "expected `states N` with N >= 1",
                    )
                })?);
            }
            Block::Initial | Block::Terminal => {
                let l = need_lattice()?;
                let n = need_states()?;
                let v = FuzzyVector::new(l, parse_values(line, &line.tokens[1..], l, n)?)?;
                if block == Block::Initial {
                    initial = Some(v);
                } else {
                    terminal = Some(v);
                }
            }
            Block::Transitions(x) => {
                let l = need_lattice()?;
                let n = need_states()?;
                if line.tokens.len() != 2 {
                    return Err(err(
                        line.number,
                        head.column,
                        ParseErrorKind::Syntax,
                        "expected `transitions <symbol>`",
                    ));
                }
                let mut rows = Vec::with_capacity(n);
                for r in 0..n {
                    let Some(row) = lines.get(i + 1 + r).filter(|row| !is_directive(row)) else {
                        let (at, col) = lines
                            .get(i + 1 + r)
                            .map_or((line.number, head.column), |row| (row.number, 1));
                        return Err(err(
                            at,
                            col,
                            ParseErrorKind::Dimension,
                            format!(
                                "dimension mismatch: transitions block `{}` has {r} rows, expected {n}",
                                line.tokens[1].text
                            ),
                        ));
                    };
                    rows.push(parse_values(row, &row.tokens, l, n)?);
                }
                delta[x] = Some(FuzzyMatrix::from_rows(l, rows)?);
                i += n;
            }
        }
        i += 1;
    }

    let end = lines.last().map_or(1, |l| l.number + 1);
    let missing = |what: &str| err(end, 1, ParseErrorKind::MissingBlock, format!("missing `{what}` block"));
    lattice.ok_or_else(|| missing("lattice"))?;
    let alphabet = alphabet.ok_or_else(|| missing("alphabet"))?;
    states.ok_or_else(|| missing("states"))?;
    let sigma = initial.ok_or_else(|| missing("initial"))?;
    let tau = terminal.ok_or_else(|| missing("terminal"))?;
    let delta = delta
        .into_iter()
        .enumerate()
        .map(|(x, m)| m.ok_or_else(|| missing(&format!("transitions {}", alphabet.symbol(x)))))
        .collect::<Result<Vec<_>>>()?;
    let automaton = FuzzyAutomaton::new(alphabet, sigma, delta, tau)?;
    Ok(AutomatonDocument {
        automaton,
        lines: blocks,
    })
}

fn is_directive(line: &Line) -> bool {
    matches!(
        line.tokens[0].text,
        "lattice" | "alphabet" | "states" | "initial" | "terminal" | "transitions"
    )
}

pub fn parse_automaton(text: &str) -> Result<FuzzyAutomaton> {
    parse_document(text).map(|d| d.automaton)
}

/// Parses an `n × n` relation: `n` lines of `n` values, same comment rules.
pub fn parse_relation(text: &str, lattice: LatticeKind, n: usize) -> Result<FuzzyMatrix> {
    let lines = lex(text);
    if lines.len() != n {
        let line = lines
            .get(n)
            .map_or(lines.last().map_or(1, |l| l.number + 1), |l| l.number);
        return Err(err(
            line,
            1,
            ParseErrorKind::Dimension,
            format!("dimension mismatch: expected {n} rows, found {}", lines.len()),
        ));
    }
    let rows = lines
        .iter()
        .map(|line| parse_values(line, &line.tokens, lattice, n))
        .collect::<Result<Vec<_>>>()?;
    FuzzyMatrix::from_rows(lattice, rows)
}

fn push_values(out: &mut String, lattice: LatticeKind, values: &[Value]) {
    let mut first = true;
    for v in values {
        if !first {
            out.push(' ');
        }
        first = false;
        out.push_str(&lattice.format_value(v));
    }
    out.push('\n');
}

/// Canonical form: blocks in a fixed order, one transitions block per symbol
/// in alphabet order, values in lowest terms.
pub fn serialize_automaton(a: &FuzzyAutomaton) -> String {
    let l = a.lattice();
    let n = a.states();
    let mut out = String::new();
    let _ = writeln!(out, "lattice {l}");
    let _ = writeln!(out, "alphabet {}", a.alphabet());
    let _ = writeln!(out, "states {n}");
    out.push_str("initial ");
    push_values(&mut out, l, a.sigma().entries());
    out.push_str("terminal ");
    push_values(&mut out, l, a.tau().entries());
    for (x, symbol) in a.alphabet().symbols().iter().enumerate() {
        let _ = writeln!(out, "transitions {symbol}");
        for r in 0..n {
            push_values(&mut out, l, a.delta(x).row(r));
        }
    }
    out
}
