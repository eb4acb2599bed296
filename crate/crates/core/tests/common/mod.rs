//! Test-only oracles and generators shared by the integration suites.
#![allow(dead_code)]

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet, VecDeque};

use fuzzydet::{Alphabet, FuzzyAutomaton, FuzzyMatrix, FuzzyVector, LatticeKind, Value};
use rand::rngs::StdRng;
use rand::Rng;

/// A random degree from a small grid: quarters for Gödel and Łukasiewicz,
/// halves and thirds for Goguen, every index on a chain.
pub fn grid_value(rng: &mut StdRng, l: LatticeKind, zero_bias: f64) -> Value {
    if rng.gen_bool(zero_bias) {
        return l.bottom();
    }
    match l {
        LatticeKind::Chain(k) => Value::Index(rng.gen_range(0..=k)),
        LatticeKind::Boolean => Value::ratio(rng.gen_range(0..=1), 1),
        LatticeKind::Goguen => {
            let (p, q) = [(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)][rng.gen_range(0..5)];
            Value::ratio(p, q)
        }
        _ => Value::ratio(rng.gen_range(0..=4), 4),
    }
}

pub fn random_automaton(rng: &mut StdRng, l: LatticeKind, n: usize, m: usize) -> FuzzyAutomaton {
    let zero_bias = rng.gen_range(0.2..0.7);
    let symbols: Vec<String> = (0..m).map(|i| ["x", "y", "z", "w"][i].to_string()).collect();
    let alphabet = Alphabet::new(symbols).unwrap();
    let vector =
        |rng: &mut StdRng| FuzzyVector::new(l, (0..n).map(|_| grid_value(rng, l, zero_bias)).collect()).unwrap();
    let sigma = vector(rng);
    let tau = vector(rng);
    let delta = (0..m)
        .map(|_| FuzzyMatrix::new(l, n, n, (0..n * n).map(|_| grid_value(rng, l, zero_bias)).collect()).unwrap())
        .collect();
    FuzzyAutomaton::new(alphabet, sigma, delta, tau).unwrap()
}

/// All words over `m` symbols of length at most `max_len`, in shortlex order.
pub fn words(m: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut all = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..m).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

/// State count of the minimal complete DFA for a Boolean automaton, via the
/// subset construction followed by Moore partition refinement.
pub fn minimal_dfa_states(a: &FuzzyAutomaton) -> usize {
    let l = a.lattice();
    let n = a.states();
    let m = a.alphabet().len();
    let bits = |v: &FuzzyVector| -> u64 { (0..n).filter(|&i| l.is_top(v.get(i))).fold(0, |s, i| s | 1 << i) };
    let rows: Vec<Vec<u64>> = (0..m)
        .map(|x| {
            (0..n)
                .map(|p| {
                    (0..n)
                        .filter(|&q| l.is_top(a.delta(x).at(p, q)))
                        .fold(0, |s, q| s | 1 << q)
                })
                .collect()
        })
        .collect();
    let accept = bits(a.tau());
    let step = |s: u64, x: usize| (0..n).filter(|&p| s >> p & 1 == 1).fold(0, |t, p| t | rows[x][p]);

    let start = bits(a.sigma());
    let mut index = HashMap::from([(start, 0usize)]);
    let mut subsets = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for x in 0..m {
            let t = step(s, x);
            if let Entry::Vacant(e) = index.entry(t) {
                e.insert(subsets.len());
                subsets.push(t);
                queue.push_back(t);
            }
        }
    }
    let trans: Vec<Vec<usize>> = subsets
        .iter()
        .map(|&s| (0..m).map(|x| index[&step(s, x)]).collect())
        .collect();

    let mut class: Vec<usize> = subsets.iter().map(|&s| usize::from(s & accept != 0)).collect();
    let mut count = class.iter().collect::<HashSet<_>>().len();
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let refined: Vec<usize> = (0..subsets.len())
            .map(|q| {
                let mut sig = vec![class[q]];
                sig.extend(trans[q].iter().map(|&t| class[t]));
                let next = ids.len();
                *ids.entry(sig).or_insert(next)
            })
            .collect();
        let refined_count = ids.len();
        class = refined;
        if refined_count == count {
            return count;
        }
        count = refined_count;
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    Punct(&'static str),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '"' {
            let mut s = String::new();
            i += 1;
            loop {
                match chars.get(i) {
                    None => return Err("unterminated string".into()),
                    Some('"') => break,
                    Some('\\') => {
                        s.push('\\');
                        s.push(*chars.get(i + 1).ok_or("dangling escape")?);
                        i += 2;
                    }
                    Some(&ch) => {
                        s.push(ch);
                        i += 1;
                    }
                }
            }
            i += 1;
            out.push(Tok::Id(s));
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push(Tok::Punct("->"));
            i += 2;
        } else if c == '-' && chars.get(i + 1) == Some(&'-') {
            return Err("undirected edge in digraph".into());
        } else if let Some(p) = ["{", "}", "[", "]", ";", ",", "="]
            .into_iter()
            .find(|p| p.starts_with(c))
        {
            out.push(Tok::Punct(p));
            i += 1;
        } else if c.is_alphanumeric() || c == '_' || c == '.' || c == '-' {
            let start = i;
            i += 1;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                i += 1;
            }
            let id: String = chars[start..i].iter().collect();
            let numeral = id.trim_start_matches('-');
            let is_numeral = !numeral.is_empty()
                && numeral.chars().all(|c| c.is_ascii_digit() || c == '.')
                && numeral.matches('.').count() <= 1
                && numeral != ".";
            let is_name = !id.starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '.')
                && id.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !is_numeral && !is_name {
                return Err(format!("bad identifier `{id}`"));
            }
            out.push(Tok::Id(id));
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct DotParser {
    toks: Vec<Tok>,
    pos: usize,
    declared: HashSet<String>,
    referenced: HashSet<String>,
}

impl DotParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn punct(&mut self, p: &str) -> Result<(), String> {
        match self.peek() {
            Some(Tok::Punct(q)) if *q == p => {
                self.pos += 1;
                Ok(())
            }
            other => Err(format!("expected `{p}`, found {other:?}")),
        }
    }

    fn id(&mut self) -> Result<String, String> {
        match self.peek() {
            Some(Tok::Id(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            other => Err(format!("expected identifier, found {other:?}")),
        }
    }

    fn at_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Some(Tok::Punct(q)) if *q == p)
    }

    fn attr_lists(&mut self) -> Result<(), String> {
        while self.at_punct("[") {
            self.punct("[")?;
            while !self.at_punct("]") {
                self.id()?;
                self.punct("=")?;
                self.id()?;
                if self.at_punct(",") || self.at_punct(";") {
                    self.pos += 1;
                }
            }
            self.punct("]")?;
        }
        Ok(())
    }

    fn stmt(&mut self) -> Result<(), String> {
        let first = self.id()?;
        if matches!(first.as_str(), "graph" | "node" | "edge") && self.at_punct("[") {
            return self.attr_lists();
        }
        if self.at_punct("=") {
            self.punct("=")?;
            self.id()?;
            return Ok(());
        }
        if self.at_punct("->") {
            self.referenced.insert(first);
            while self.at_punct("->") {
                self.punct("->")?;
                let target = self.id()?;
                self.referenced.insert(target);
            }
        } else {
            self.declared.insert(first);
        }
        self.attr_lists()
    }
}

/// Checks `text` against the DOT grammar (digraph subset) and that every
/// edge endpoint is a declared node.
pub fn validate_dot(text: &str) -> Result<(), String> {
    let mut p = DotParser {
        toks: tokenize(text)?,
        pos: 0,
        declared: HashSet::new(),
        referenced: HashSet::new(),
    };
    if p.peek() == Some(&Tok::Id("strict".into())) {
        p.pos += 1;
    }
    if p.id()? != "digraph" {
        return Err("expected `digraph`".into());
    }
    if !p.at_punct("{") {
        p.id()?;
    }
    p.punct("{")?;
    while !p.at_punct("}") {
        if p.peek().is_none() {
            return Err("unexpected end of input".into());
        }
        p.stmt()?;
        if p.at_punct(";") {
            p.pos += 1;
        }
    }
    p.punct("}")?;
    if p.pos != p.toks.len() {
        return Err("trailing input after graph".into());
    }
    if let Some(missing) = p.referenced.difference(&p.declared).next() {
        return Err(format!("edge endpoint `{missing}` is not declared"));
    }
    Ok(())
}
