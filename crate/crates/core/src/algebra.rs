//! Fuzzy vectors and relations with sup-⊗ composition.

use std::fmt;

use indexmap::IndexSet;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lattice::{LatticeKind, Value};

fn same_lattice(left: LatticeKind, right: LatticeKind) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::LatticeMismatch { left, right })
    }
}

fn same_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// A fuzzy subset of a finite set, as a row or column vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuzzyVector {
    lattice: LatticeKind,
    entries: Vec<Value>,
}

impl FuzzyVector {
    pub fn new(lattice: LatticeKind, entries: Vec<Value>) -> Result<Self> {
        for e in &entries {
            lattice.check(e)?;
        }
        Ok(Self { lattice, entries })
    }

    pub(crate) fn from_raw(lattice: LatticeKind, entries: Vec<Value>) -> Self {
        debug_assert!(entries.iter().all(|e| lattice.contains(e)));
        Self { lattice, entries }
    }

    pub fn zeros(lattice: LatticeKind, len: usize) -> Self {
        Self::from_raw(lattice, vec![lattice.bottom(); len])
    }

    pub fn ones(lattice: LatticeKind, len: usize) -> Self {
        Self::from_raw(lattice, vec![lattice.top(); len])
    }

    /// The crisp singleton `{index}`.
    pub fn unit(lattice: LatticeKind, len: usize, index: usize) -> Self {
        let mut v = Self::zeros(lattice, len);
        v.entries[index] = lattice.top();
        v
    }

    pub fn lattice(&self) -> LatticeKind {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Value {
        &self.entries[i]
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &FuzzyVector) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    fn compatible(&self, other: &FuzzyVector) -> Result<()> {
        same_lattice(self.lattice, other.lattice)?;
        same_len(self.len(), other.len())
    }

    /// `f ∘ g = ⋁_a f(a) ⊗ g(a)`.
    pub fn dot(&self, other: &FuzzyVector) -> Result<Value> {
        self.compatible(other)?;
        Ok(self.dot_raw(other))
    }

    pub(crate) fn dot_raw(&self, other: &FuzzyVector) -> Value {
        sup_product(self.lattice, &self.entries, &other.entries)
    }

    /// Degree of inclusion `I(f, g) = ⋀_a f(a) → g(a)`.
    pub fn inclusion_degree(&self, other: &FuzzyVector) -> Result<Value> {
        self.compatible(other)?;
        let l = self.lattice;
        let mut acc = l.top();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if a <= b {
                continue;
            }
            acc = l.min(&acc, &l.imp(a, b));
        }
        Ok(acc)
    }

    /// `f ∘ α`, the row vector times a matrix.
    pub fn compose(&self, m: &FuzzyMatrix) -> Result<FuzzyVector> {
        same_lattice(self.lattice, m.lattice)?;
        same_len(m.rows, self.len())?;
        Ok(self.compose_raw(m))
    }

    pub(crate) fn compose_raw(&self, m: &FuzzyMatrix) -> FuzzyVector {
        FuzzyVector::from_raw(self.lattice, row_times(self.lattice, &self.entries, m))
    }
}

impl fmt::Display for FuzzyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.lattice.format_value(e))?;
        }
        f.write_str("]")
    }
}

fn sup_product(l: LatticeKind, left: &[Value], right: &[Value]) -> Value {
    let mut acc = l.bottom();
    for (a, b) in left.iter().zip(right) {
        if l.is_bottom(a) || l.is_bottom(b) {
            continue;
        }
        let p = l.mul(a, b);
        if p > acc {
            acc = p;
            if l.is_top(&acc) {
                break;
            }
        }
    }
    acc
}

fn row_times(l: LatticeKind, row: &[Value], m: &FuzzyMatrix) -> Vec<Value> {
    let mut out = vec![l.bottom(); m.cols];
    for (i, f) in row.iter().enumerate() {
        if l.is_bottom(f) {
            continue;
        }
        for (slot, e) in out.iter_mut().zip(m.row(i)) {
            if l.is_bottom(e) {
                continue;
            }
            let p = l.mul(f, e);
            if p > *slot {
                *slot = p;
            }
        }
    }
    out
}

/// A fuzzy relation between two finite sets, stored densely row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuzzyMatrix {
    lattice: LatticeKind,
    rows: usize,
    cols: usize,
    entries: Vec<Value>,
}

impl FuzzyMatrix {
    pub fn new(lattice: LatticeKind, rows: usize, cols: usize, entries: Vec<Value>) -> Result<Self> {
        same_len(rows * cols, entries.len())?;
        for e in &entries {
            lattice.check(e)?;
        }
        Ok(Self {
            lattice,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(lattice: LatticeKind, rows: Vec<Vec<Value>>) -> Result<Self> {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            same_len(cols, row.len())?;
            entries.extend(row);
        }
        Self::new(lattice, n, cols, entries)
    }

    pub fn zeros(lattice: LatticeKind, rows: usize, cols: usize) -> Self {
        Self {
            lattice,
            rows,
            cols,
            entries: vec![lattice.bottom(); rows * cols],
        }
    }

    /// The crisp equality relation on `n` elements.
    pub fn identity(lattice: LatticeKind, n: usize) -> Self {
        let mut m = Self::zeros(lattice, n, n);
        for i in 0..n {
            m.entries[i * n + i] = lattice.top();
        }
        m
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: Value) {
        debug_assert!(self.lattice.contains(&v));
        self.entries[i * self.cols + j] = v;
    }

    pub fn lattice(&self) -> LatticeKind {
        self.lattice
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Value {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Value] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    pub fn transpose(&self) -> FuzzyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.at(i, j).clone());
            }
        }
        FuzzyMatrix {
            lattice: self.lattice,
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &FuzzyMatrix) -> Result<bool> {
        same_lattice(self.lattice, other.lattice)?;
        same_len(self.rows, other.rows)?;
        same_len(self.cols, other.cols)?;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    /// `(α ∘ β)(a, c) = ⋁_b α(a, b) ⊗ β(b, c)`.
    pub fn compose(&self, other: &FuzzyMatrix) -> Result<FuzzyMatrix> {
        same_lattice(self.lattice, other.lattice)?;
        same_len(self.cols, other.rows)?;
        let l = self.lattice;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            entries.extend(row_times(l, self.row(i), other));
        }
        Ok(FuzzyMatrix {
            lattice: l,
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// `α ∘ g`, the matrix times a column vector.
    pub fn apply(&self, g: &FuzzyVector) -> Result<FuzzyVector> {
        same_lattice(self.lattice, g.lattice)?;
        same_len(self.cols, g.len())?;
        Ok(self.apply_raw(g))
    }

    pub(crate) fn apply_raw(&self, g: &FuzzyVector) -> FuzzyVector {
        let l = self.lattice;
        let out = (0..self.rows)
            .map(|i| sup_product(l, self.row(i), &g.entries))
            .collect();
        FuzzyVector::from_raw(l, out)
    }
}

/// A finite set of membership values in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueSet {
    lattice: LatticeKind,
    elements: IndexSet<Value>,
}

impl ValueSet {
    pub fn new(lattice: LatticeKind) -> Self {
        Self {
            lattice,
            elements: IndexSet::new(),
        }
    }

    pub fn from_values<I: IntoIterator<Item = Value>>(lattice: LatticeKind, values: I) -> Result<Self> {
        let mut set = Self::new(lattice);
        for v in values {
            set.insert(v)?;
        }
        Ok(set)
    }

    /// Returns whether the value was new.
    pub fn insert(&mut self, v: Value) -> Result<bool> {
        self.lattice.check(&v)?;
        Ok(self.elements.insert(v))
    }

    pub fn lattice(&self) -> LatticeKind {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &Value) -> bool {
        self.elements.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Value> {
        self.elements.iter()
    }

    /// Elements in ascending lattice order.
    pub fn sorted(&self) -> Vec<Value> {
        let mut v: Vec<Value> = self.elements.iter().cloned().collect();
        v.sort();
        v
    }

    pub fn is_subset(&self, other: &ValueSet) -> bool {
        self.elements.iter().all(|v| other.contains(v))
    }
}

/// Result of saturating a seed set under `∨` and `⊗`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Closure {
    Closed(ValueSet),
    /// The working set grew past the cap. Inconclusive: the generated
    /// subsemiring may still be finite, only larger than the cap.
    CapExceeded {
        cap: usize,
    },
}

impl Closure {
    /// Number of elements `k` of a closed subsemiring.
    pub fn size(&self) -> Option<usize> {
        match self {
            Closure::Closed(set) => Some(set.len()),
            Closure::CapExceeded { .. } => None,
        }
    }

    /// The `k^n` bound on the number of distinct fuzzy subsets of an
    /// `n`-element set with values in the closed subsemiring.
    pub fn state_bound(&self, n: usize) -> Option<BigUint> {
        self.size().map(|k| num_traits::pow(BigUint::from(k), n))
    }
}

/// The subsemiring of `(L, ∨, ⊗, 0, 1)` generated by `seed`.
///
/// Every supported structure is a chain, so `∨` never produces a new element
/// and the closure is `{0, 1}` together with all finite `⊗`-products of seed
/// values. The worklist multiplies each element by the generators only.
pub fn semiring_closure(seed: &ValueSet, cap: usize) -> Closure {
    let l = seed.lattice;
    let generators: Vec<Value> = seed
        .elements
        .iter()
        .filter(|v| !l.is_bottom(v) && !l.is_top(v))
        .cloned()
        .collect();
    let mut set = IndexSet::with_capacity(seed.len() + 2);
    set.insert(l.bottom());
    set.insert(l.top());
    set.extend(generators.iter().cloned());
    if set.len() > cap {
        return Closure::CapExceeded { cap };
    }
    let mut next = 2;
    while next < set.len() {
        let x = set[next].clone();
        for g in &generators {
            set.insert(l.mul(&x, g));
            if set.len() > cap {
                return Closure::CapExceeded { cap };
            }
        }
        next += 1;
    }
    Closure::Closed(ValueSet {
        lattice: l,
        elements: set,
    })
}
