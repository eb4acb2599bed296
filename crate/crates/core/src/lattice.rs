//! Complete residuated lattices on chains.
//!
//! Every supported structure is linearly ordered, so meet and join are `min`
//! and `max`. The three structures on the unit interval use exact rationals;
//! the finite chains `a_0 < ... < a_K` are stored as indices.
//!
//! | structure     | `x ⊗ y`              | `x → y`                       |
//! |---------------|----------------------|-------------------------------|
//! | Łukasiewicz   | `max(x + y - 1, 0)`  | `min(1 - x + y, 1)`           |
//! | Goguen        | `x · y`              | `1` if `x ≤ y`, else `y / x`  |
//! | Gödel         | `min(x, y)`          | `1` if `x ≤ y`, else `y`      |
//! | Boolean       | `x ∧ y`              | `¬x ∨ y`                      |
//! | chain `K`     | `a_max(i+j-K, 0)`    | `a_min(K-i+j, K)`             |

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which residuated lattice a container's values live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    Boolean,
    Godel,
    Goguen,
    Lukasiewicz,
    /// The chain `a_0 < a_1 < ... < a_K` with `K + 1` elements.
    Chain(u32),
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeKind::Boolean => f.write_str("boolean"),
            LatticeKind::Godel => f.write_str("godel"),
            LatticeKind::Goguen => f.write_str("goguen"),
            LatticeKind::Lukasiewicz => f.write_str("lukasiewicz"),
            LatticeKind::Chain(k) => write!(f, "chain {k}"),
        }
    }
}

/// A membership degree.
///
/// The lattice a value belongs to is carried by the enclosing container, not
/// by the value. Values of different representations compare by variant, which
/// only matters for hashing and sorting; validated containers never mix them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    /// Element `a_i` of a finite chain.
    Index(u32),
    /// Exact element of the unit interval.
    Ratio(BigRational),
}

impl Value {
    pub fn index(i: u32) -> Self {
        Value::Index(i)
    }

    /// The rational `numer / denom`. Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Value::Ratio(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn zero_ratio() -> Self {
        Value::Ratio(BigRational::zero())
    }

    pub fn one_ratio() -> Self {
        Value::Ratio(BigRational::one())
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Index(a), Value::Index(b)) => a.cmp(b),
            (Value::Ratio(a), Value::Ratio(b)) => a.cmp(b),
            (Value::Index(_), Value::Ratio(_)) => Ordering::Less,
            (Value::Ratio(_), Value::Index(_)) => Ordering::Greater,
        }
    }
}

impl LatticeKind {
    pub fn is_chain(self) -> bool {
        matches!(self, LatticeKind::Chain(_))
    }

    pub fn bottom(self) -> Value {
        match self {
            LatticeKind::Chain(_) => Value::Index(0),
            _ => Value::zero_ratio(),
        }
    }

    pub fn top(self) -> Value {
        match self {
            LatticeKind::Chain(k) => Value::Index(k),
            _ => Value::one_ratio(),
        }
    }

    pub fn is_bottom(self, x: &Value) -> bool {
        match x {
            Value::Index(i) => *i == 0,
            Value::Ratio(r) => r.is_zero(),
        }
    }

    pub fn is_top(self, x: &Value) -> bool {
        match (self, x) {
            (LatticeKind::Chain(k), Value::Index(i)) => *i == k,
            (_, Value::Ratio(r)) => r.is_one(),
            _ => false,
        }
    }

    /// Whether `x` is an element of this structure.
    pub fn contains(self, x: &Value) -> bool {
        match (self, x) {
            (LatticeKind::Chain(k), Value::Index(i)) => *i <= k,
            (LatticeKind::Chain(_), Value::Ratio(_)) => false,
            (_, Value::Index(_)) => false,
            (LatticeKind::Boolean, Value::Ratio(r)) => r.is_zero() || r.is_one(),
            (_, Value::Ratio(r)) => !r.is_negative() && *r <= BigRational::one(),
        }
    }

    pub fn check(self, x: &Value) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::InvalidValue {
                lattice: self,
                value: format!("{x:?}"),
            })
        }
    }

    /// All elements in ascending order, for structures with a finite carrier.
    pub fn elements(self) -> Option<Vec<Value>> {
        match self {
            LatticeKind::Chain(k) => Some((0..=k).map(Value::Index).collect()),
            LatticeKind::Boolean => Some(vec![Value::zero_ratio(), Value::one_ratio()]),
            _ => None,
        }
    }

    fn check2(self, x: &Value, y: &Value) -> Result<()> {
        self.check(x)?;
        self.check(y)
    }

    pub fn le(self, x: &Value, y: &Value) -> bool {
        x <= y
    }

    pub fn meet(self, x: &Value, y: &Value) -> Result<Value> {
        self.check2(x, y)?;
        Ok(self.min(x, y))
    }

    pub fn join(self, x: &Value, y: &Value) -> Result<Value> {
        self.check2(x, y)?;
        Ok(self.max(x, y))
    }

    /// Multiplication `x ⊗ y`.
    pub fn tmul(self, x: &Value, y: &Value) -> Result<Value> {
        self.check2(x, y)?;
        Ok(self.mul(x, y))
    }

    /// Residuum `x → y`.
    pub fn resid(self, x: &Value, y: &Value) -> Result<Value> {
        self.check2(x, y)?;
        Ok(self.imp(x, y))
    }

    /// Biresiduum `(x → y) ∧ (y → x)`.
    pub fn biresid(self, x: &Value, y: &Value) -> Result<Value> {
        self.check2(x, y)?;
        Ok(self.min(&self.imp(x, y), &self.imp(y, x)))
    }

    // Unchecked kernels. Callers guarantee both operands belong to `self`.

    pub(crate) fn min(self, x: &Value, y: &Value) -> Value {
        if x <= y {
            x.clone()
        } else {
            y.clone()
        }
    }

    pub(crate) fn max(self, x: &Value, y: &Value) -> Value {
        if x >= y {
            x.clone()
        } else {
            y.clone()
        }
    }

    pub(crate) fn mul(self, x: &Value, y: &Value) -> Value {
        match (self, x, y) {
            (LatticeKind::Chain(k), Value::Index(i), Value::Index(j)) => Value::Index((i + j).saturating_sub(k)),
            (LatticeKind::Boolean | LatticeKind::Godel, _, _) => self.min(x, y),
            (LatticeKind::Goguen, Value::Ratio(a), Value::Ratio(b)) => {
                if a.is_zero() || b.is_zero() {
                    Value::zero_ratio()
                } else if a.is_one() {
                    y.clone()
                } else if b.is_one() {
                    x.clone()
                } else {
                    Value::Ratio(a * b)
                }
            }
            (LatticeKind::Lukasiewicz, Value::Ratio(a), Value::Ratio(b)) => {
                let s = a + b - BigRational::one();
                if s.is_positive() {
                    Value::Ratio(s)
                } else {
                    Value::zero_ratio()
                }
            }
            _ => unreachable!("operands do not belong to {self}"),
        }
    }

    pub(crate) fn imp(self, x: &Value, y: &Value) -> Value {
        match (self, x, y) {
            (LatticeKind::Chain(k), Value::Index(i), Value::Index(j)) => Value::Index((k - i + j).min(k)),
            _ if x <= y => self.top(),
            (LatticeKind::Boolean | LatticeKind::Godel, _, _) => y.clone(),
            (LatticeKind::Goguen, Value::Ratio(a), Value::Ratio(b)) => Value::Ratio(b / a),
            (LatticeKind::Lukasiewicz, Value::Ratio(a), Value::Ratio(b)) => Value::Ratio(BigRational::one() - a + b),
            _ => unreachable!("operands do not belong to {self}"),
        }
    }

    /// Parses a value literal: a chain index for `chain K`, otherwise a
    /// decimal (`0.25`) or a rational (`1/4`).
    pub fn parse_value(self, text: &str) -> Result<Value> {
        let invalid = || Error::InvalidValue {
            lattice: self,
            value: text.to_string(),
        };
        let value = match self {
            LatticeKind::Chain(_) => {
                if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(invalid());
                }
                Value::Index(text.parse().map_err(|_| invalid())?)
            }
            _ => Value::Ratio(parse_rational(text).ok_or_else(invalid)?),
        };
        if self.contains(&value) {
            Ok(value)
        } else {
            Err(invalid())
        }
    }

    /// Canonical text form: chain indices as integers, rationals in lowest
    /// terms as a decimal when the expansion terminates and `p/q` otherwise.
    pub fn format_value(self, x: &Value) -> String {
        match x {
            Value::Index(i) => i.to_string(),
            Value::Ratio(r) => format_rational(r),
        }
    }
}

fn all_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

fn parse_rational(text: &str) -> Option<BigRational> {
    if let Some((p, q)) = text.split_once('/') {
        if !all_digits(p) || !all_digits(q) {
            return None;
        }
        let q: BigInt = q.parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p.parse().ok()?, q));
    }
    let (int, frac) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if !(all_digits(int) || int.is_empty() && all_digits(frac)) {
        return None;
    }
    if !frac.is_empty() && !all_digits(frac) || text.ends_with('.') {
        return None;
    }
    let digits = format!("{int}{frac}");
    let numer: BigInt = digits.parse().ok()?;
    let denom = num_traits::pow(BigInt::from(10u32), frac.len());
    Some(BigRational::new(numer, denom))
}

fn format_rational(r: &BigRational) -> String {
    let (numer, denom) = (r.numer(), r.denom());
    if denom.is_one() {
        return numer.to_string();
    }
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let mut rest = denom.clone();
    let (mut twos, mut fives) = (0usize, 0usize);
    while rest.is_even() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return format!("{numer}/{denom}");
    }
    let digits = twos.max(fives);
    let scale = num_traits::pow(BigInt::from(10u32), digits);
    let scaled = numer * &scale / denom;
    let (whole, frac) = scaled.div_rem(&scale);
    let frac = frac.to_string();
    format!("{whole}.{}{frac}", "0".repeat(digits - frac.len()))
}
