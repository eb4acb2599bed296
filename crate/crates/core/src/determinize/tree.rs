//! The transition tree shared by every construction.
//!
//! Vertices are expanded breadth-first, children in alphabet order. A child
//! whose fuzzy set equals one built earlier is closed and points at that
//! earlier state; otherwise it becomes the next state. Gluing closed leaves
//! onto their targets yields the transition graph.

use std::collections::HashMap;

use crate::algebra::FuzzyVector;
use crate::automaton::Alphabet;
use crate::cdfa::{Cdfa, StateLabel};
use crate::lattice::{LatticeKind, Value};

use super::{Bounded, DetStats};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeVertex {
    /// Labels along the path from the root.
    pub word: Vec<usize>,
    pub vector: FuzzyVector,
    pub closed: bool,
    /// 1-based state number; closed vertices share it with the state they
    /// duplicate.
    pub pointer: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionTree {
    vertices: Vec<TreeVertex>,
    /// Vertex index of each state, by `pointer - 1`.
    states: Vec<usize>,
    /// `children[s][x]` is the vertex index of the x-child of state `s`.
    children: Vec<Vec<usize>>,
}

impl TransitionTree {
    /// Grows the tree from `root`. `child(state, vector, x)` computes the
    /// x-successor of an open vertex; `state` is its 0-based state id.
    pub(crate) fn grow<F>(
        root: FuzzyVector,
        symbols: usize,
        cap: usize,
        stats: &mut DetStats,
        mut child: F,
    ) -> Bounded<TransitionTree>
    where
        F: FnMut(usize, &FuzzyVector, usize) -> FuzzyVector,
    {
        let mut index: HashMap<FuzzyVector, usize> = HashMap::new();
        index.insert(root.clone(), 0);
        let mut tree = TransitionTree {
            vertices: vec![TreeVertex {
                word: Vec::new(),
                vector: root,
                closed: false,
                pointer: 1,
            }],
            states: vec![0],
            children: Vec::new(),
        };
        stats.vertices += 1;
        let mut next_open = 0;
        // Open vertices are exactly `states`, in creation order.
        while next_open < tree.states.len() {
            let v = tree.states[next_open];
            let mut kids = Vec::with_capacity(symbols);
            for x in 0..symbols {
                let vector = child(next_open, &tree.vertices[v].vector, x);
                stats.vertices += 1;
                stats.equality_checks += 1;
                let mut word = tree.vertices[v].word.clone();
                word.push(x);
                let (closed, pointer) = match index.get(&vector) {
                    Some(&s) => (true, s + 1),
                    None => {
                        if tree.states.len() == cap {
                            return Bounded::CapExceeded {
                                cap,
                                states_built: tree.states.len(),
                            };
                        }
                        let s = tree.states.len();
                        index.insert(vector.clone(), s);
                        tree.states.push(tree.vertices.len());
                        (false, s + 1)
                    }
                };
                kids.push(tree.vertices.len());
                tree.vertices.push(TreeVertex {
                    word,
                    vector,
                    closed,
                    pointer,
                });
            }
            tree.children.push(kids);
            next_open += 1;
        }
        Bounded::Complete(tree)
    }

    pub fn vertices(&self) -> &[TreeVertex] {
        &self.vertices
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn state_vertex(&self, state: usize) -> &TreeVertex {
        &self.vertices[self.states[state]]
    }

    pub fn state_vector(&self, state: usize) -> &FuzzyVector {
        &self.state_vertex(state).vector
    }

    pub fn state_vectors(&self) -> impl Iterator<Item = &FuzzyVector> + Clone {
        self.states.iter().map(|&v| &self.vertices[v].vector)
    }

    /// The x-child of a state's vertex, as a vertex index.
    pub fn child_vertex(&self, state: usize, x: usize) -> usize {
        self.children[state][x]
    }

    /// The state the x-child of `state` is glued to.
    pub fn successor(&self, state: usize, x: usize) -> usize {
        self.vertices[self.child_vertex(state, x)].pointer - 1
    }

    /// The glued transition graph, `table[state][x]`.
    pub fn transition_table(&self) -> Vec<Vec<usize>> {
        self.children
            .iter()
            .map(|kids| kids.iter().map(|&c| self.vertices[c].pointer - 1).collect())
            .collect()
    }

    pub(crate) fn to_cdfa(&self, lattice: LatticeKind, alphabet: &Alphabet, terminal: Vec<Value>) -> Cdfa {
        let labels = self
            .states
            .iter()
            .map(|&v| StateLabel {
                word: self.vertices[v].word.clone(),
                vector: self.vertices[v].vector.clone(),
            })
            .collect();
        Cdfa::new(lattice, alphabet.clone(), self.transition_table(), 0, terminal, labels)
            .expect("a transition tree glues into an accessible total automaton")
    }
}
