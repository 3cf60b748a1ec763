//! Binding signatures: a small declarative format, its parser and printer,
//! and the associated endofunctor on scoped families.
//!
//! ```text
//! sig lam {
//!   app : [0, 0];
//!   abs : [1];
//! }
//! ```

use std::collections::HashMap;
use std::fmt;

use crate::omega::{Factor, PolyFunctor};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constructor {
    pub name: String,
    /// Entry `i` is the number of variables bound in argument `i`.
    pub arity: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BindingSignature {
    pub name: String,
    pub constructors: Vec<Constructor>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SignatureError {
    #[error("{line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("{line}:{col}: duplicate constructor `{name}`")]
    Duplicate { line: usize, col: usize, name: String },
    #[error("{line}:{col}: `sort` declarations are not supported (signatures are single-sorted)")]
    Unsupported { line: usize, col: usize },
    #[error("invalid identifier `{0}`")]
    InvalidName(String),
}

impl BindingSignature {
    /// Checks identifiers and distinct constructor names.
    pub fn new(name: impl Into<String>, constructors: Vec<Constructor>) -> Result<Self, SignatureError> {
        let sig = Self {
            name: name.into(),
            constructors,
        };
        for n in std::iter::once(&sig.name).chain(sig.constructors.iter().map(|c| &c.name)) {
            if !is_ident(n) || n == "sort" {
                return Err(SignatureError::InvalidName(n.clone()));
            }
        }
        let mut seen = HashMap::new();
        for c in &sig.constructors {
            if seen.insert(c.name.as_str(), ()).is_some() {
                return Err(SignatureError::Duplicate {
                    line: 0,
                    col: 0,
                    name: c.name.clone(),
                });
            }
        }
        Ok(sig)
    }

    /// `app : [0, 0]; abs : [1]`.
    pub fn lambda() -> Self {
        Self {
            name: "lam".into(),
            constructors: vec![
                Constructor {
                    name: "app".into(),
                    arity: vec![0, 0],
                },
                Constructor {
                    name: "abs".into(),
                    arity: vec![1],
                },
            ],
        }
    }

    pub fn constructor(&self, name: &str) -> Option<(usize, &Constructor)> {
        self.constructors.iter().enumerate().find(|(_, c)| c.name == name)
    }
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic()) && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Nat(String),
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Nat(s) => write!(f, "number `{s}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Self, SignatureError> {
        let mut toks = Vec::new();
        let (mut line, mut col) = (1, 1);
        let mut chars = text.chars().peekable();
        while let Some(&c) = chars.peek() {
            let (l0, c0) = (line, col);
            if c == '\n' {
                chars.next();
                line += 1;
                col = 1;
            } else if c.is_whitespace() {
                chars.next();
                col += 1;
            } else if c.is_ascii_alphabetic() || c.is_ascii_digit() || c == '_' {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let tok = if s.chars().all(|d| d.is_ascii_digit()) {
                    Tok::Nat(s)
                } else if is_ident(&s) {
                    Tok::Ident(s)
                } else {
                    return Err(SignatureError::Syntax {
                        line: l0,
                        col: c0,
                        message: format!("malformed token `{s}`"),
                    });
                };
                toks.push((tok, l0, c0));
            } else if "{}[]:;,-".contains(c) {
                chars.next();
                col += 1;
                toks.push((Tok::Punct(c), l0, c0));
            } else {
                return Err(SignatureError::Syntax {
                    line: l0,
                    col: c0,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
        toks.push((Tok::Eof, line, col));
        Ok(Self { toks, pos: 0 })
    }

    fn peek(&self) -> &(Tok, usize, usize) {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> (Tok, usize, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, SignatureError> {
        let (tok, line, col) = self.peek().clone();
        if tok == Tok::Punct('-') {
            return Err(SignatureError::Syntax {
                line,
                col,
                message: "arity entries must be natural numbers, found a negative sign".into(),
            });
        }
        Err(SignatureError::Syntax {
            line,
            col,
            message: format!("expected {expected}, found {tok}"),
        })
    }

    fn punct(&mut self, c: char) -> Result<(), SignatureError> {
        if self.peek().0 == Tok::Punct(c) {
            self.next();
            Ok(())
        } else {
            self.error(&format!("`{c}`"))
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize), SignatureError> {
        match self.peek().clone() {
            (Tok::Ident(s), line, col) if s == "sort" => Err(SignatureError::Unsupported { line, col }),
            (Tok::Ident(s), line, col) => {
                self.next();
                Ok((s, line, col))
            }
            _ => self.error("an identifier"),
        }
    }

    fn nat(&mut self) -> Result<usize, SignatureError> {
        match self.peek().clone() {
            (Tok::Nat(s), line, col) => {
                self.next();
                s.parse().map_err(|_| SignatureError::Syntax {
                    line,
                    col,
                    message: format!("arity `{s}` is out of range"),
                })
            }
            _ => self.error("a natural number"),
        }
    }
}

pub fn parse_signature(text: &str) -> Result<BindingSignature, SignatureError> {
    let mut lx = Lexer::new(text)?;
    match lx.peek().clone() {
        (Tok::Ident(s), _, _) if s == "sig" => {
            lx.next();
        }
        (Tok::Ident(s), line, col) if s == "sort" => return Err(SignatureError::Unsupported { line, col }),
        _ => return lx.error("`sig`"),
    }
    let (name, _, _) = lx.ident()?;
    lx.punct('{')?;
    let mut constructors: Vec<Constructor> = Vec::new();
    while lx.peek().0 != Tok::Punct('}') {
        let (cname, line, col) = lx.ident()?;
        if constructors.iter().any(|c| c.name == cname) {
            return Err(SignatureError::Duplicate { line, col, name: cname });
        }
        lx.punct(':')?;
        lx.punct('[')?;
        let mut arity = Vec::new();
        if lx.peek().0 != Tok::Punct(']') {
            arity.push(lx.nat()?);
            while lx.peek().0 == Tok::Punct(',') {
                lx.next();
                arity.push(lx.nat()?);
            }
        }
        lx.punct(']')?;
        lx.punct(';')?;
        constructors.push(Constructor { name: cname, arity });
    }
    lx.punct('}')?;
    if lx.peek().0 != Tok::Eof {
        return lx.error("end of input");
    }
    Ok(BindingSignature { name, constructors })
}

/// Canonical text: one constructor per line, in declaration order.
pub fn render_signature(sig: &BindingSignature) -> String {
    if sig.constructors.is_empty() {
        return format!("sig {} {{ }}\n", sig.name);
    }
    let mut out = format!("sig {} {{\n", sig.name);
    for c in &sig.constructors {
        let arity: Vec<String> = c.arity.iter().map(ToString::to_string).collect();
        out.push_str(&format!("  {} : [{}];\n", c.name, arity.join(", ")));
    }
    out.push_str("}\n");
    out
}

impl fmt::Display for BindingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_signature(self))
    }
}

/// `F(X)(n) = n ⊎ ⨆_c ∏_i X(n + arity_c[i])`: the variables summand first,
/// then one summand per constructor in declaration order.
pub fn signature_functor(sig: &BindingSignature) -> PolyFunctor {
    let mut summands = vec![vec![Factor::Scope]];
    summands.extend(
        sig.constructors
            .iter()
            .map(|c| c.arity.iter().map(|&k| Factor::Rec(k)).collect()),
    );
    PolyFunctor::new(summands)
}
