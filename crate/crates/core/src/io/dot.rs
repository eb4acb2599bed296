//! Graphviz output.
//!
//! Edges whose every label has degree 0 are omitted, and parallel edges
//! between the same ordered pair of states are merged into one edge with a
//! comma-joined label. For Boolean automata `x/1` is written `x`, initial
//! states get an unlabelled incoming arrow and terminal states a double
//! circle.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::automaton::FuzzyAutomaton;
use crate::cdfa::Cdfa;
use crate::lattice::LatticeKind;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub fn automaton_to_dot(a: &FuzzyAutomaton) -> String {
    let l = a.lattice();
    let crisp = l == LatticeKind::Boolean;
    let n = a.states();
    let mut out = String::from("digraph automaton {\n    rankdir=LR;\n    node [shape=circle];\n");
    for q in 0..n {
        let shape = if crisp && l.is_top(a.tau().get(q)) {
            ", shape=doublecircle"
        } else {
            ""
        };
        let _ = writeln!(out, "    a{} [label={}{shape}];", q + 1, quote(&format!("a{}", q + 1)));
    }
    for q in 0..n {
        let s = a.sigma().get(q);
        if !l.is_bottom(s) {
            let _ = writeln!(out, "    __in{} [shape=none, label=\"\", width=0, height=0];", q + 1);
            if crisp {
                let _ = writeln!(out, "    __in{0} -> a{0};", q + 1);
            } else {
                let _ = writeln!(
                    out,
                    "    __in{0} -> a{0} [label={1}];",
                    q + 1,
                    quote(&l.format_value(s))
                );
            }
        }
        let t = a.tau().get(q);
        if !crisp && !l.is_bottom(t) {
            let _ = writeln!(out, "    __out{} [shape=none, label=\"\", width=0, height=0];", q + 1);
            let _ = writeln!(
                out,
                "    a{0} -> __out{0} [label={1}];",
                q + 1,
                quote(&l.format_value(t))
            );
        }
    }
    let mut edges: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    for (x, symbol) in a.alphabet().symbols().iter().enumerate() {
        for p in 0..n {
            for q in 0..n {
                let v = a.delta(x).at(p, q);
                if l.is_bottom(v) {
                    continue;
                }
                let label = if crisp {
                    symbol.clone()
                } else {
                    format!("{symbol}/{}", l.format_value(v))
                };
                edges.entry((p, q)).or_default().push(label);
            }
        }
    }
    let sep = if crisp { "," } else { ", " };
    for ((p, q), labels) in edges {
        let _ = writeln!(
            out,
            "    a{} -> a{} [label={}];",
            p + 1,
            q + 1,
            quote(&labels.join(sep))
        );
    }
    out.push_str("}\n");
    out
}

pub fn cdfa_to_dot(c: &Cdfa) -> String {
    let l = c.lattice();
    let al = c.alphabet();
    let mut out = String::from("digraph cdfa {\n    rankdir=LR;\n    node [shape=circle];\n");
    out.push_str("    __start [shape=none, label=\"\", width=0, height=0];\n");
    for q in 0..c.states() {
        let word = &c.label(q).word;
        let word = if word.is_empty() {
            "ε".to_string()
        } else {
            al.format_word(word)
        };
        let label = format!("{word}\n{}", l.format_value(c.terminal(q)));
        let _ = writeln!(out, "    q{q} [label={}];", quote(&label));
    }
    let _ = writeln!(out, "    __start -> q{};", c.initial());
    let mut edges: BTreeMap<(usize, usize), Vec<&str>> = BTreeMap::new();
    for q in 0..c.states() {
        for x in 0..al.len() {
            edges.entry((q, c.next(q, x))).or_default().push(al.symbol(x));
        }
    }
    for ((p, q), labels) in edges {
        let _ = writeln!(out, "    q{p} -> q{q} [label={}];", quote(&labels.join(",")));
    }
    out.push_str("}\n");
    out
}
