//! A small expression language for length-based center functions.
//!
//! ```text
//! expr    = term { ("+" | "-") term } ;
//! term    = unary { ("*" | "/") unary } ;
//! unary   = "-" unary | power ;
//! power   = primary [ "^" unary ] ;              (* right associative *)
//! primary = number
//!         | "d" "(" index "," index ")"
//!         | "perim" [ "(" ")" ]
//!         | ("sqrt" | "abs") "(" expr ")"
//!         | ("min" | "max") "(" expr { "," expr } ")"
//!         | "(" expr ")" ;
//! index   = ( integer | "n" ) { ("+" | "-") integer } ;
//! number  = digits [ "." digits ] [ ("e" | "E") [ "+" | "-" ] digits ] ;
//! ```
//!
//! `d(i, j)` is the distance between vertices `i` and `j` (1-based); index
//! expressions are reduced mod n into `1..n` at evaluation time, so `d(n, 1)`
//! is the closing side. `perim` is the sum of all sides. Whitespace is
//! ignored.

use std::fmt;

use crate::error::{Error, Result};
use crate::framework::{verify_axioms, AxiomReport, CenterFunction, Domain, LengthCenterFunction};
use crate::geom::DistanceMatrix;
use crate::sample::Sampler;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("d({0}, {0}) is a zero-length segment (at byte {1})")]
    Index(Index, usize),
}

/// `base + offset`, where `base` is either 0 or `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Index {
    pub uses_n: bool,
    pub offset: i64,
}

impl Index {
    /// 0-based position for an `n`-gon.
    pub fn resolve(&self, n: usize) -> usize {
        let raw = if self.uses_n {
            n as i64 + self.offset
        } else {
            self.offset
        };
        (raw - 1).rem_euclid(n as i64) as usize
    }

    /// Equal as residues mod every n.
    fn always_equal(&self, other: &Index) -> bool {
        self.offset == other.offset
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.uses_n, self.offset) {
            (false, k) => write!(f, "{k}"),
            (true, 0) => f.write_str("n"),
            (true, k) if k > 0 => write!(f, "n+{k}"),
            (true, k) => write!(f, "n-{}", -k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Dist(Index, Index),
    Perim,
    Neg(Box<Expr>),
    Sqrt(Box<Expr>),
    Abs(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Min(Vec<Expr>),
    Max(Vec<Expr>),
}

/// Fully parenthesized; re-parses to the same tree (for non-negative constants).
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c:?}"),
            Expr::Dist(i, j) => write!(f, "d({i},{j})"),
            Expr::Perim => f.write_str("perim"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Sqrt(e) => write!(f, "sqrt({e})"),
            Expr::Abs(e) => write!(f, "abs({e})"),
            Expr::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Expr::Min(args) | Expr::Max(args) => {
                f.write_str(if matches!(self, Expr::Min(_)) { "min(" } else { "max(" })?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl Expr {
    fn visit_indices(&self, out: &mut impl FnMut(&Index)) {
        match self {
            Expr::Dist(i, j) => {
                out(i);
                out(j);
            }
            Expr::Const(_) | Expr::Perim => {}
            Expr::Neg(e) | Expr::Sqrt(e) | Expr::Abs(e) => e.visit_indices(out),
            Expr::Binary(_, l, r) => {
                l.visit_indices(out);
                r.visit_indices(out);
            }
            Expr::Min(args) | Expr::Max(args) => args.iter().for_each(|a| a.visit_indices(out)),
        }
    }

    pub fn eval(&self, d: &DistanceMatrix) -> Result<f64> {
        let n = d.n();
        let v = match self {
            Expr::Const(c) => *c,
            Expr::Dist(i, j) => {
                let (a, b) = (i.resolve(n), j.resolve(n));
                if a == b {
                    return Err(Error::Eval(format!(
                        "d({i},{j}) names the same vertex twice for n = {n}"
                    )));
                }
                d.get(a, b)
            }
            Expr::Perim => (0..n).map(|k| d.get(k, (k + 1) % n)).sum(),
            Expr::Neg(e) => -e.eval(d)?,
            Expr::Sqrt(e) => {
                let x = e.eval(d)?;
                if x < 0.0 {
                    return Err(Error::Eval(format!("sqrt of negative value {x}")));
                }
                x.sqrt()
            }
            Expr::Abs(e) => e.eval(d)?.abs(),
            Expr::Binary(op, l, r) => {
                let (x, y) = (l.eval(d)?, r.eval(d)?);
                match op {
                    BinOp::Add => x + y,
                    BinOp::Sub => x - y,
                    BinOp::Mul => x * y,
                    BinOp::Div => {
                        if y == 0.0 {
                            return Err(Error::Eval("division by zero".into()));
                        }
                        x / y
                    }
                    BinOp::Pow => x.powf(y),
                }
            }
            Expr::Min(args) => args
                .iter()
                .map(|a| a.eval(d))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .fold(f64::INFINITY, f64::min),
            Expr::Max(args) => args
                .iter()
                .map(|a| a.eval(d))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .fold(f64::NEG_INFINITY, f64::max),
        };
        if !v.is_finite() {
            return Err(Error::Eval(format!("non-finite result from {self}")));
        }
        Ok(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArityPolicy {
    /// Literal indices only, the largest being this `n`.
    Fixed(usize),
    /// Uses `n`-relative indices (or none); any `n >= 3`.
    Generic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedCenter {
    pub expr: Expr,
    pub source: String,
    pub arity: ArityPolicy,
}

impl ParsedCenter {
    pub fn accepts(&self, n: usize) -> bool {
        match self.arity {
            ArityPolicy::Fixed(m) => m == n,
            ArityPolicy::Generic => n >= 3,
        }
    }

    pub fn domain(&self) -> Domain {
        match self.arity {
            ArityPolicy::Fixed(m) => Domain::ALL.with_arity(m),
            ArityPolicy::Generic => Domain::ALL,
        }
    }

    /// Wraps the expression as a length center function (unchecked).
    pub fn to_function(&self) -> LengthCenterFunction {
        let expr = self.expr.clone();
        LengthCenterFunction::new(self.source.clone(), self.domain(), move |d| expr.eval(d))
    }
}

pub fn evaluate(pc: &ParsedCenter, d: &DistanceMatrix) -> Result<f64> {
    if !pc.accepts(d.n()) {
        return Err(Error::DomainViolation {
            name: pc.source.clone(),
            reason: format!("expression is written for {:?}, got n = {}", pc.arity, d.n()),
        });
    }
    pc.expr.eval(d)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> std::result::Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '.' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)) {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    i = j;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text = &src[start..i];
            let v: f64 = text.parse().map_err(|_| ParseError::Syntax {
                pos: start,
                msg: format!("malformed number `{text}`"),
            })?;
            out.push((Tok::Num(v), start));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else if "+-*/^(),".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                pos: i,
                msg: format!("unexpected character `{}`", src[i..].chars().next().unwrap_or(c)),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |&(_, p)| p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> std::result::Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn expr(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat('+') {
                BinOp::Add
            } else if self.eat('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat('*') {
                BinOp::Mul
            } else if self.eat('/') {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> std::result::Result<Expr, ParseError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> std::result::Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.eat('^') {
            Ok(Expr::Binary(BinOp::Pow, Box::new(base), Box::new(self.unary()?)))
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> std::result::Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Expr::Const(v))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "d" => {
                        self.expect('(')?;
                        let i = self.index()?;
                        self.expect(',')?;
                        let j = self.index()?;
                        self.expect(')')?;
                        if i.always_equal(&j) {
                            return Err(ParseError::Index(i, at));
                        }
                        Ok(Expr::Dist(i, j))
                    }
                    "perim" => {
                        if self.eat('(') {
                            self.expect(')')?;
                        }
                        Ok(Expr::Perim)
                    }
                    "sqrt" | "abs" => {
                        self.expect('(')?;
                        let e = Box::new(self.expr()?);
                        self.expect(')')?;
                        Ok(if name == "sqrt" { Expr::Sqrt(e) } else { Expr::Abs(e) })
                    }
                    "min" | "max" => {
                        self.expect('(')?;
                        let mut args = vec![self.expr()?];
                        while self.eat(',') {
                            args.push(self.expr()?);
                        }
                        self.expect(')')?;
                        Ok(if name == "min" {
                            Expr::Min(args)
                        } else {
                            Expr::Max(args)
                        })
                    }
                    _ => Err(ParseError::Syntax {
                        pos: at,
                        msg: format!("unknown name `{name}`"),
                    }),
                }
            }
            Some(Tok::Sym(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }

    fn index(&mut self) -> std::result::Result<Index, ParseError> {
        let mut idx = match self.peek().cloned() {
            Some(Tok::Ident(s)) if s == "n" => {
                self.pos += 1;
                Index {
                    uses_n: true,
                    offset: 0,
                }
            }
            Some(Tok::Num(v)) if v.fract() == 0.0 && v >= 1.0 => {
                self.pos += 1;
                Index {
                    uses_n: false,
                    offset: v as i64,
                }
            }
            _ => return self.err("expected a vertex index (positive integer or `n`)"),
        };
        loop {
            let sign = if self.eat('+') {
                1
            } else if self.eat('-') {
                -1
            } else {
                return Ok(idx);
            };
            match self.peek().cloned() {
                Some(Tok::Num(v)) if v.fract() == 0.0 && v >= 0.0 => {
                    self.pos += 1;
                    idx.offset += sign * v as i64;
                }
                _ => return self.err("expected an integer offset"),
            }
        }
    }
}

pub fn parse(source: &str) -> std::result::Result<ParsedCenter, ParseError> {
    let mut p = Parser {
        toks: lex(source)?,
        pos: 0,
        src: source,
    };
    let expr = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    let (mut uses_n, mut max_literal) = (false, 0i64);
    expr.visit_indices(&mut |i: &Index| {
        uses_n |= i.uses_n;
        if !i.uses_n {
            max_literal = max_literal.max(i.offset);
        }
    });
    let arity = if !uses_n && max_literal >= 3 {
        ArityPolicy::Fixed(max_literal as usize)
    } else {
        ArityPolicy::Generic
    };
    Ok(ParsedCenter {
        expr,
        source: source.to_string(),
        arity,
    })
}

#[derive(Debug, Clone)]
pub struct AdmittedCenter {
    pub function: LengthCenterFunction,
    pub report: AxiomReport,
}

/// Trials used by [`admit`].
pub const ADMIT_TRIALS: usize = 200;

/// Numerically checks relabel symmetry and homogeneity on seeded random
/// polygons with `n` vertices; rejects with the first failing property and
/// its witness.
pub fn admit(pc: &ParsedCenter, n: usize, seed: u64) -> Result<AdmittedCenter> {
    if !pc.accepts(n) {
        return Err(Error::DomainViolation {
            name: pc.source.clone(),
            reason: format!("expression is written for {:?}, not n = {n}", pc.arity),
        });
    }
    let function = pc.to_function();
    let report = verify_axioms(
        &CenterFunction::Length(function.clone()),
        Sampler::Convex { n },
        ADMIT_TRIALS,
        seed,
    )?;
    if let Some((property, witness)) = report.witness.clone() {
        return Err(Error::AxiomViolation { property, witness });
    }
    Ok(AdmittedCenter { function, report })
}
