use std::fmt;

use super::SyntaxError;
use crate::omega::Value;
use crate::signature::BindingSignature;

/// An untyped term body. Variables are de Bruijn indices; argument `j` of a
/// constructor whose arity entry is `k` lives `k` binders deeper.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tm {
    Var(usize),
    Op(String, Vec<Tm>),
}

/// A term together with the scope it lives in.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub scope: usize,
    pub body: Tm,
}

impl Tm {
    pub fn var(i: usize) -> Self {
        Tm::Var(i)
    }

    pub fn op(name: &str, args: Vec<Tm>) -> Self {
        Tm::Op(name.to_string(), args)
    }

    /// Height of the term tree: variables and nullary constructors have
    /// depth 0, so the terms of depth `< d` are those in chain stage `d`.
    pub fn depth(&self) -> usize {
        match self {
            Tm::Op(_, args) if !args.is_empty() => 1 + args.iter().map(Tm::depth).max().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn mentions(&self, name: &str) -> bool {
        match self {
            Tm::Var(_) => false,
            Tm::Op(c, args) => c == name || args.iter().any(|a| a.mentions(name)),
        }
    }
}

impl Term {
    pub fn new(scope: usize, body: Tm) -> Self {
        Self { scope, body }
    }

    pub fn var(scope: usize, i: usize) -> Self {
        Self::new(scope, Tm::Var(i))
    }
}

impl fmt::Display for Tm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tm::Var(i) => write!(f, "var {i}"),
            Tm::Op(c, args) => {
                write!(f, "{c}(")?;
                for (j, a) in args.iter().enumerate() {
                    if j > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.body.fmt(f)
    }
}

/// Scope-correctness and conformance to the signature, in one traversal.
pub fn check_term(sig: &BindingSignature, t: &Term) -> Result<(), SyntaxError> {
    fn go(sig: &BindingSignature, n: usize, t: &Tm) -> Result<(), SyntaxError> {
        match t {
            Tm::Var(i) if *i < n => Ok(()),
            Tm::Var(i) => Err(SyntaxError::VarOutOfScope { index: *i, scope: n }),
            Tm::Op(c, args) => {
                let (_, ctor) = sig
                    .constructor(c)
                    .ok_or_else(|| SyntaxError::UnknownConstructor(c.clone()))?;
                if ctor.arity.len() != args.len() {
                    return Err(SyntaxError::ArgCount {
                        name: c.clone(),
                        expected: ctor.arity.len(),
                        found: args.len(),
                    });
                }
                ctor.arity.iter().zip(args).try_for_each(|(k, a)| go(sig, n + k, a))
            }
        }
    }
    go(sig, t.scope, &t.body)
}

/// Encodes a term as an element of the initial algebra of the signature
/// functor: `var i` is `[in0 (i)]`, constructor `c` is `[in(c+1) (args)]`.
pub fn term_to_value(sig: &BindingSignature, t: &Tm) -> Result<Value, SyntaxError> {
    Ok(Value::roll(match t {
        Tm::Var(i) => Value::inj(0, Value::Tuple(vec![Value::Nat(*i)])),
        Tm::Op(c, args) => {
            let (idx, _) = sig
                .constructor(c)
                .ok_or_else(|| SyntaxError::UnknownConstructor(c.clone()))?;
            let parts = args.iter().map(|a| term_to_value(sig, a)).collect::<Result<_, _>>()?;
            Value::inj(idx + 1, Value::Tuple(parts))
        }
    }))
}

pub fn value_to_term(sig: &BindingSignature, v: &Value) -> Result<Tm, SyntaxError> {
    let bad = || SyntaxError::NotATerm(v.to_string());
    let Some(Value::Inj(i, body)) = v.unroll() else {
        return Err(bad());
    };
    let Value::Tuple(parts) = &**body else {
        return Err(bad());
    };
    match (*i, parts.as_slice()) {
        (0, [Value::Nat(k)]) => Ok(Tm::Var(*k)),
        (0, _) => Err(bad()),
        (c, parts) => {
            let ctor = sig.constructors.get(c - 1).ok_or_else(bad)?;
            let args = parts.iter().map(|p| value_to_term(sig, p)).collect::<Result<_, _>>()?;
            Ok(Tm::Op(ctor.name.clone(), args))
        }
    }
}

/// Parses `var i` and `name(t1, …, tk)` (a nullary `name` may omit the
/// parentheses) and checks the result against `sig` in scope `scope`.
pub fn parse_term(sig: &BindingSignature, text: &str, scope: usize) -> Result<Term, SyntaxError> {
    let mut p = TermParser {
        s: text.as_bytes(),
        pos: 0,
    };
    let body = p.term()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.error("trailing input"));
    }
    let t = Term::new(scope, body);
    check_term(sig, &t)?;
    Ok(t)
}

struct TermParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl TermParser<'_> {
    fn error(&self, message: &str) -> SyntaxError {
        SyntaxError::Parse {
            col: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> Option<&str> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).expect("ascii"))
    }

    fn term(&mut self) -> Result<Tm, SyntaxError> {
        let start = self.pos;
        let Some(w) = self.word().map(str::to_string) else {
            return Err(self.error("expected a term"));
        };
        if !w.as_bytes()[0].is_ascii_alphabetic() {
            self.pos = start;
            return Err(self.error("expected a term"));
        }
        if self.eat(b'(') {
            let mut args = Vec::new();
            if !self.eat(b')') {
                loop {
                    args.push(self.term()?);
                    if self.eat(b')') {
                        break;
                    }
                    if !self.eat(b',') {
                        return Err(self.error("expected `,` or `)`"));
                    }
                }
            }
            return Ok(Tm::Op(w, args));
        }
        if w == "var" {
            let at = self.pos;
            return match self.word().map(str::parse::<usize>) {
                Some(Ok(i)) => Ok(Tm::Var(i)),
                _ => {
                    self.pos = at;
                    self.ws();
                    Err(self.error("expected a variable index"))
                }
            };
        }
        Ok(Tm::Op(w, Vec::new()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_and_parse() {
        let sig = BindingSignature::lambda();
        let t = parse_term(&sig, "app(var 0, abs(var 1))", 1).unwrap();
        assert_eq!(t.body, Tm::op("app", vec![Tm::var(0), Tm::op("abs", vec![Tm::var(1)])]));
        assert_eq!(t.to_string(), "app(var 0, abs(var 1))");
        assert_eq!(parse_term(&sig, &t.to_string(), 1).unwrap(), t);
        assert_eq!(t.body.depth(), 2);
    }

    #[test]
    fn scope_errors() {
        let sig = BindingSignature::lambda();
        assert_eq!(
            parse_term(&sig, "abs(var 1)", 0),
            Err(SyntaxError::VarOutOfScope { index: 1, scope: 1 })
        );
        assert!(matches!(parse_term(&sig, "lam(var 0)", 1), Err(SyntaxError::UnknownConstructor(_))));
        assert!(matches!(parse_term(&sig, "abs(var 0, var 0)", 1), Err(SyntaxError::ArgCount { .. })));
        assert!(matches!(parse_term(&sig, "abs(var x)", 1), Err(SyntaxError::Parse { col: 9, .. })));
        assert!(matches!(parse_term(&sig, "var 0 var 0", 1), Err(SyntaxError::Parse { .. })));
        assert!(matches!(parse_term(&sig, "app(var 0", 1), Err(SyntaxError::Parse { .. })));
    }

    #[test]
    fn nullary_constructors() {
        let sig = crate::signature::parse_signature("sig u { unit : []; }").unwrap();
        let t = parse_term(&sig, "unit", 0).unwrap();
        assert_eq!(t.to_string(), "unit()");
        assert_eq!(parse_term(&sig, "unit()", 0).unwrap(), t);
    }

    #[test]
    fn value_round_trip() {
        let sig = BindingSignature::lambda();
        let t = Tm::op("abs", vec![Tm::op("app", vec![Tm::var(0), Tm::var(1)])]);
        let v = term_to_value(&sig, &t).unwrap();
        assert_eq!(value_to_term(&sig, &v).unwrap(), t);
        assert!(value_to_term(&sig, &Value::Unit).is_err());
    }
}
