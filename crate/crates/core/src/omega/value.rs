use std::collections::BTreeSet;
use std::fmt;

/// Elements of every set-like object in this module.
///
/// `Roll` marks elements of an initial algebra: `str` wraps an element of
/// `F(μF)` and `str_inv` unwraps it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Unit,
    Bool(bool),
    Nat(usize),
    Inj(usize, Box<Value>),
    Tuple(Vec<Value>),
    Set(BTreeSet<Value>),
    Roll(Box<Value>),
}

impl Value {
    pub fn inj(i: usize, v: Value) -> Self {
        Value::Inj(i, Box::new(v))
    }

    pub fn roll(v: Value) -> Self {
        Value::Roll(Box::new(v))
    }

    pub fn unroll(&self) -> Option<&Value> {
        match self {
            Value::Roll(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn as_nat(&self) -> Option<usize> {
        match self {
            Value::Nat(n) => Some(*n),
            _ => None,
        }
    }

    /// Number of constructors, used to spread corpus maps.
    pub fn size(&self) -> usize {
        match self {
            Value::Unit | Value::Bool(_) | Value::Nat(_) => 1,
            Value::Inj(_, v) | Value::Roll(v) => 1 + v.size(),
            Value::Tuple(vs) => 1 + vs.iter().map(Value::size).sum::<usize>(),
            Value::Set(vs) => 1 + vs.iter().map(Value::size).sum::<usize>(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<'a>(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = &'a Value>) -> fmt::Result {
            for (i, v) in items.enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
        match self {
            Value::Unit => write!(f, "()"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Nat(n) => write!(f, "{n}"),
            Value::Inj(i, v) => write!(f, "in{i} {v}"),
            Value::Tuple(vs) => {
                write!(f, "(")?;
                list(f, vs.iter())?;
                write!(f, ")")
            }
            Value::Set(vs) => {
                write!(f, "{{")?;
                list(f, vs.iter())?;
                write!(f, "}}")
            }
            Value::Roll(v) => write!(f, "[{v}]"),
        }
    }
}
