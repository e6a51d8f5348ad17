//! The textual morphism format and its evaluator.
//!
//! A document is a sequence of declarations and `let` bindings:
//!
//! ```text
//! # objects are natural numbers
//! object A 3
//! object B 2
//!
//! # a 1-morphism is a tgt x src grid of component-dimension lists
//! onemor f : A -> B {
//!   row [1 1] [1] [1]
//!   row [1] [1] [1]
//! }
//!
//! # a 2-morphism gives one block matrix per grid entry (zero-size entries
//! # may be omitted); rationals are written p/q, rows are split by ';'
//! twomor t : f => g {
//!   entry 0 0 [1/2 0; -1 4/3]
//! }
//!
//! matrix q : 2 -> 2 [1 0; 0 1]
//!
//! let composite = g .h f
//! ```
//!
//! Expression operators, loosest to tightest: `+` (addition of
//! 2-morphisms or matrices), `(+)` (biproduct, also `⊕`), `.v` (vertical
//! composition, also `⊙`), `.h`/`.h2` (horizontal composition of 1- and
//! 2-morphisms, also `∘`/`∘₂`). All binary operators associate to the left.
//! Builders: `id(x)`, `zero(a, b)`, `p(n, m, 1|2)`, `i(n, m, 1|2)`,
//! `pi(f, g, 1|2)`, `nu(f, g, 1|2)`, `theta(n, m, a|b|ab|ba|p)`,
//! `normalize(f)`.
//!
//! Parsing is deterministic and the serializer emits one canonical form
//! (sorted declarations, `p/q` scalars, ASCII operators), so serialized
//! documents round-trip byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::BigInt;

use crate::biproduct::{box_inj, box_proj, make_witness};
use crate::matcat::{self, MatMor, MatObj};
use crate::twovect::{
    add_two, hcompose1, hcompose2, id_one, id_two, local_inj, local_proj, normalize,
    oplus_one, oplus_two, vcompose2, OneMor, SpaceDecomp, TwoMor,
};
use crate::{Mat, Rat, Side};

/// Errors from loading a document: syntax errors (exit code 2) versus
/// reference/typing/shape errors (exit code 3).
#[derive(Debug, Clone, thiserror::Error)]
pub enum FormatError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("type error at line {line}: {msg}")]
    Type { line: usize, msg: String },
}

impl FormatError {
    pub fn exit_code(&self) -> i32 {
        match self {
            FormatError::Parse { .. } => 2,
            FormatError::Type { .. } => 3,
        }
    }
}

type FResult<T> = std::result::Result<T, FormatError>;

fn perr<T>(line: usize, msg: impl Into<String>) -> FResult<T> {
    Err(FormatError::Parse {
        line,
        msg: msg.into(),
    })
}

fn terr<T>(line: usize, msg: impl Into<String>) -> FResult<T> {
    Err(FormatError::Type {
        line,
        msg: msg.into(),
    })
}

/// A value an expression can denote.
#[derive(Debug, Clone)]
pub enum Value {
    Obj(usize),
    One(OneMor),
    Two(TwoMor),
    Matrix(MatMor<Rat>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Obj(_) => "object",
            Value::One(_) => "1-morphism",
            Value::Two(_) => "2-morphism",
            Value::Matrix(_) => "matrix",
        }
    }
}

/// A loaded document: named values in declaration order.
#[derive(Debug, Clone, Default)]
pub struct Env {
    names: Vec<String>,
    values: BTreeMap<String, Value>,
}

impl Env {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.values.get(name)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn insert(&mut self, line: usize, name: &str, value: Value) -> FResult<()> {
        if self.values.contains_key(name) {
            return terr(line, format!("name `{name}` is declared twice"));
        }
        self.names.push(name.to_string());
        self.values.insert(name.to_string(), value);
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// lexer

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Colon,
    Semi,
    Slash,
    Arrow,       // ->
    DoubleArrow, // =>
    Equals,
    Comma,
    OpH,     // .h or the ring operator
    OpH2,    // .h2
    OpV,     // .v
    OpPlus,  // +
    OpOplus, // (+)
}

#[derive(Debug, Clone)]
struct Sp {
    tok: Tok,
    line: usize,
}

fn lex(input: &str) -> FResult<Vec<Sp>> {
    let mut out = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = lineno + 1;
        let text = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut chars = text.chars().peekable();
        while let Some(&c) = chars.peek() {
            match c {
                ' ' | '\t' | '\r' => {
                    chars.next();
                }
                '{' => {
                    chars.next();
                    out.push(Sp { tok: Tok::LBrace, line });
                }
                '}' => {
                    chars.next();
                    out.push(Sp { tok: Tok::RBrace, line });
                }
                '[' => {
                    chars.next();
                    out.push(Sp { tok: Tok::LBracket, line });
                }
                ']' => {
                    chars.next();
                    out.push(Sp { tok: Tok::RBracket, line });
                }
                ')' => {
                    chars.next();
                    out.push(Sp { tok: Tok::RParen, line });
                }
                ':' => {
                    chars.next();
                    out.push(Sp { tok: Tok::Colon, line });
                }
                ';' => {
                    chars.next();
                    out.push(Sp { tok: Tok::Semi, line });
                }
                '/' => {
                    chars.next();
                    out.push(Sp { tok: Tok::Slash, line });
                }
                ',' => {
                    chars.next();
                    out.push(Sp { tok: Tok::Comma, line });
                }
                '+' => {
                    chars.next();
                    out.push(Sp { tok: Tok::OpPlus, line });
                }
                '(' => {
                    chars.next();
                    if chars.peek() == Some(&'+') {
                        let mut ahead = chars.clone();
                        ahead.next();
                        if ahead.peek() == Some(&')') {
                            chars.next();
                            chars.next();
                            out.push(Sp { tok: Tok::OpOplus, line });
                            continue;
                        }
                    }
                    out.push(Sp { tok: Tok::LParen, line });
                }
                '=' => {
                    chars.next();
                    if chars.peek() == Some(&'>') {
                        chars.next();
                        out.push(Sp { tok: Tok::DoubleArrow, line });
                    } else {
                        out.push(Sp { tok: Tok::Equals, line });
                    }
                }
                '-' => {
                    chars.next();
                    match chars.peek() {
                        Some('>') => {
                            chars.next();
                            out.push(Sp { tok: Tok::Arrow, line });
                        }
                        Some(d) if d.is_ascii_digit() => {
                            let mut n = String::from("-");
                            while let Some(&d) = chars.peek() {
                                if d.is_ascii_digit() {
                                    n.push(d);
                                    chars.next();
                                } else {
                                    break;
                                }
                            }
                            let v = n
                                .parse()
                                .map_err(|_| FormatError::Parse {
                                    line,
                                    msg: format!("integer literal `{n}` out of range"),
                                })?;
                            out.push(Sp { tok: Tok::Int(v), line });
                        }
                        _ => return perr(line, "stray `-`"),
                    }
                }
                '.' => {
                    chars.next();
                    let mut word = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_alphanumeric() {
                            word.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let tok = match word.as_str() {
                        "h" => Tok::OpH,
                        "h2" => Tok::OpH2,
                        "v" => Tok::OpV,
                        other => return perr(line, format!("unknown operator `.{other}`")),
                    };
                    out.push(Sp { tok, line });
                }
                '\u{2218}' => {
                    // ring operator; followed by subscript two it means the
                    // horizontal composition of 2-morphisms
                    chars.next();
                    if chars.peek() == Some(&'\u{2082}') {
                        chars.next();
                        out.push(Sp { tok: Tok::OpH2, line });
                    } else {
                        out.push(Sp { tok: Tok::OpH, line });
                    }
                }
                '\u{2299}' => {
                    chars.next();
                    out.push(Sp { tok: Tok::OpV, line });
                }
                '\u{2295}' => {
                    chars.next();
                    out.push(Sp { tok: Tok::OpOplus, line });
                }
                d if d.is_ascii_digit() => {
                    let mut n = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_digit() {
                            n.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let v = n.parse().map_err(|_| FormatError::Parse {
                        line,
                        msg: format!("integer literal `{n}` out of range"),
                    })?;
                    out.push(Sp { tok: Tok::Int(v), line });
                }
                d if d.is_ascii_alphabetic() || d == '_' => {
                    let mut word = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_alphanumeric() || d == '_' {
                            word.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    out.push(Sp {
                        tok: Tok::Ident(word),
                        line,
                    });
                }
                other => return perr(line, format!("unexpected character `{other}`")),
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// parser + evaluator

/// Expression tree; evaluation happens against the environment built so far.
#[derive(Debug, Clone)]
pub enum Expr {
    Name(String, usize),
    Nat(usize, usize),
    Binary(Op, Box<Expr>, Box<Expr>, usize),
    Call(String, Vec<Expr>, usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Op {
    Add,
    Oplus,
    Vert,
    Horiz,
    Horiz2,
}

struct Parser {
    toks: Vec<Sp>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn line(&self) -> usize {
        self.toks
            .get(self.pos.min(self.toks.len().saturating_sub(1)))
            .map(|s| s.line)
            .unwrap_or(0)
    }

    fn next(&mut self) -> Option<Sp> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> FResult<usize> {
        let line = self.line();
        match self.next() {
            Some(sp) if sp.tok == want => Ok(sp.line),
            Some(sp) => perr(sp.line, format!("expected {what}")),
            None => perr(line, format!("unexpected end of input, expected {what}")),
        }
    }

    fn ident(&mut self, what: &str) -> FResult<(String, usize)> {
        let line = self.line();
        match self.next() {
            Some(Sp {
                tok: Tok::Ident(s),
                line,
            }) => Ok((s, line)),
            Some(sp) => perr(sp.line, format!("expected {what}")),
            None => perr(line, format!("unexpected end of input, expected {what}")),
        }
    }

    fn nat(&mut self, what: &str) -> FResult<(usize, usize)> {
        let line = self.line();
        match self.next() {
            Some(Sp {
                tok: Tok::Int(v),
                line,
            }) if v >= 0 => Ok((v as usize, line)),
            Some(sp) => perr(sp.line, format!("expected {what}")),
            None => perr(line, format!("unexpected end of input, expected {what}")),
        }
    }

    fn rat(&mut self) -> FResult<Rat> {
        let line = self.line();
        let n = match self.next() {
            Some(Sp {
                tok: Tok::Int(v), ..
            }) => v,
            _ => return perr(line, "expected a rational number"),
        };
        if self.peek() == Some(&Tok::Slash) {
            self.next();
            let (d, dline) = match self.next() {
                Some(Sp {
                    tok: Tok::Int(v),
                    line,
                }) => (v, line),
                _ => return perr(line, "expected a denominator"),
            };
            if d == 0 {
                return perr(dline, "zero denominator");
            }
            Ok(Rat::new(n.into(), d.into()))
        } else {
            Ok(Rat::from_integer(n.into()))
        }
    }

    /// `[a b; c d]` -> rows of rationals. `[]` is the empty matrix.
    fn matrix_body(&mut self) -> FResult<Vec<Vec<Rat>>> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let mut row: Vec<Rat> = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::RBracket) => {
                    self.next();
                    if !row.is_empty() || !rows.is_empty() {
                        rows.push(row);
                    }
                    return Ok(rows);
                }
                Some(Tok::Semi) => {
                    self.next();
                    rows.push(std::mem::take(&mut row));
                }
                Some(Tok::Int(_)) => row.push(self.rat()?),
                _ => return perr(self.line(), "expected a matrix entry, `;` or `]`"),
            }
        }
    }

    /// `[1 2 0]` -> component dimension list.
    fn dim_list(&mut self) -> FResult<SpaceDecomp> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut dims = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::RBracket) => {
                    self.next();
                    return Ok(SpaceDecomp::new(dims));
                }
                Some(Tok::Int(_)) => {
                    let (v, _) = self.nat("a component dimension")?;
                    dims.push(v);
                }
                _ => return perr(self.line(), "expected a component dimension or `]`"),
            }
        }
    }

    fn expr(&mut self) -> FResult<Expr> {
        self.binary(0)
    }

    fn binary(&mut self, level: usize) -> FResult<Expr> {
        const LEVELS: [&[(Tok, Op)]; 4] = [
            &[(Tok::OpPlus, Op::Add)],
            &[(Tok::OpOplus, Op::Oplus)],
            &[(Tok::OpV, Op::Vert)],
            &[(Tok::OpH, Op::Horiz), (Tok::OpH2, Op::Horiz2)],
        ];
        if level == LEVELS.len() {
            return self.primary();
        }
        let mut lhs = self.binary(level + 1)?;
        loop {
            let op = LEVELS[level]
                .iter()
                .find(|(t, _)| self.peek() == Some(t))
                .map(|(_, o)| *o);
            match op {
                Some(op) => {
                    let line = self.line();
                    self.next();
                    let rhs = self.binary(level + 1)?;
                    lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs), line);
                }
                None => return Ok(lhs),
            }
        }
    }

    fn primary(&mut self) -> FResult<Expr> {
        let line = self.line();
        match self.next() {
            Some(Sp {
                tok: Tok::Ident(name),
                line,
            }) => {
                if self.peek() == Some(&Tok::LParen) {
                    self.next();
                    let mut args = Vec::new();
                    if self.peek() != Some(&Tok::RParen) {
                        loop {
                            args.push(self.expr()?);
                            if self.peek() == Some(&Tok::Comma) {
                                self.next();
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(Expr::Call(name, args, line))
                } else {
                    Ok(Expr::Name(name, line))
                }
            }
            Some(Sp {
                tok: Tok::Int(v),
                line,
            }) if v >= 0 => Ok(Expr::Nat(v as usize, line)),
            Some(Sp {
                tok: Tok::LParen,
                ..
            }) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => perr(line, "expected a name, builder call or `(`"),
        }
    }
}

/// Parses a standalone expression (the `--expr` argument of `compose`).
pub fn parse_expr(input: &str) -> FResult<Expr> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return perr(p.line(), "trailing input after the expression");
    }
    Ok(e)
}

/// Parses a document and evaluates all declarations and `let` bindings in
/// order, producing the environment of named values.
pub fn load(input: &str) -> FResult<Env> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0 };
    let mut env = Env::default();

    while let Some(tok) = p.peek().cloned() {
        match tok {
            Tok::Ident(word) => match word.as_str() {
                "object" => {
                    p.next();
                    let (name, line) = p.ident("an object name")?;
                    let (dim, _) = p.nat("an object dimension")?;
                    env.insert(line, &name, Value::Obj(dim))?;
                }
                "onemor" => parse_onemor(&mut p, &mut env)?,
                "twomor" => parse_twomor(&mut p, &mut env)?,
                "matrix" => parse_matrix(&mut p, &mut env)?,
                "let" => {
                    p.next();
                    let (name, line) = p.ident("a binding name")?;
                    p.expect(Tok::Equals, "`=`")?;
                    let expr = p.expr()?;
                    let value = eval(&expr, &env)?;
                    env.insert(line, &name, value)?;
                }
                other => {
                    return perr(p.line(), format!("unknown declaration `{other}`"));
                }
            },
            _ => return perr(p.line(), "expected a declaration"),
        }
    }
    Ok(env)
}

fn lookup_obj(env: &Env, name: &str, line: usize) -> FResult<usize> {
    match env.get(name) {
        Some(Value::Obj(d)) => Ok(*d),
        Some(v) => terr(line, format!("`{name}` is a {}, expected an object", v.kind())),
        None => terr(line, format!("unknown object `{name}`")),
    }
}

fn parse_onemor(p: &mut Parser, env: &mut Env) -> FResult<()> {
    p.next();
    let (name, line) = p.ident("a 1-morphism name")?;
    p.expect(Tok::Colon, "`:`")?;
    let (src_name, sline) = p.ident("a source object")?;
    p.expect(Tok::Arrow, "`->`")?;
    let (tgt_name, tline) = p.ident("a target object")?;
    let src = lookup_obj(env, &src_name, sline)?;
    let tgt = lookup_obj(env, &tgt_name, tline)?;
    p.expect(Tok::LBrace, "`{`")?;
    let mut rows: Vec<Vec<SpaceDecomp>> = Vec::new();
    loop {
        match p.peek() {
            Some(Tok::RBrace) => {
                p.next();
                break;
            }
            Some(Tok::Ident(w)) if w == "row" => {
                let row_line = p.line();
                p.next();
                let mut row = Vec::new();
                while p.peek() == Some(&Tok::LBracket) {
                    row.push(p.dim_list()?);
                }
                if row.len() != src {
                    return perr(
                        row_line,
                        format!("row has {} entries, the grid needs {src}", row.len()),
                    );
                }
                rows.push(row);
            }
            _ => return perr(p.line(), "expected `row` or `}`"),
        }
    }
    if rows.len() != tgt {
        return perr(line, format!("grid has {} rows, needs {tgt}", rows.len()));
    }
    let entries = rows.into_iter().flatten().collect();
    let mor = OneMor::new(src, tgt, entries)
        .map_err(|e| FormatError::Type { line, msg: e.to_string() })?;
    env.insert(line, &name, Value::One(mor))
}

fn parse_twomor(p: &mut Parser, env: &mut Env) -> FResult<()> {
    p.next();
    let (name, line) = p.ident("a 2-morphism name")?;
    p.expect(Tok::Colon, "`:`")?;
    let (src_name, sline) = p.ident("a source 1-morphism")?;
    p.expect(Tok::DoubleArrow, "`=>`")?;
    let (tgt_name, tline) = p.ident("a target 1-morphism")?;
    let src = match env.get(&src_name) {
        Some(Value::One(f)) => f.clone(),
        _ => return terr(sline, format!("unknown 1-morphism `{src_name}`")),
    };
    let tgt = match env.get(&tgt_name) {
        Some(Value::One(f)) => f.clone(),
        _ => return terr(tline, format!("unknown 1-morphism `{tgt_name}`")),
    };
    if src.src() != tgt.src() || src.tgt() != tgt.tgt() {
        return terr(line, "source and target 1-morphisms are not parallel");
    }
    p.expect(Tok::LBrace, "`{`")?;
    type EntryBody = (Vec<Vec<Rat>>, usize);
    let mut given: BTreeMap<(usize, usize), EntryBody> = BTreeMap::new();
    loop {
        match p.peek() {
            Some(Tok::RBrace) => {
                p.next();
                break;
            }
            Some(Tok::Ident(w)) if w == "entry" => {
                p.next();
                let (k, kline) = p.nat("a row index")?;
                let (j, _) = p.nat("a column index")?;
                let body = p.matrix_body()?;
                if k >= src.tgt() || j >= src.src() {
                    return terr(kline, format!("entry ({k}, {j}) is outside the grid"));
                }
                given.insert((k, j), (body, kline));
            }
            _ => return perr(p.line(), "expected `entry` or `}`"),
        }
    }
    let mut entries = Vec::with_capacity(src.src() * src.tgt());
    for k in 0..src.tgt() {
        for j in 0..src.src() {
            let (r, c) = (tgt.entry(k, j).total(), src.entry(k, j).total());
            match given.remove(&(k, j)) {
                None => entries.push(Mat::zero(r, c)),
                Some((body, bline)) => {
                    if body.len() != r || body.iter().any(|row| row.len() != c) {
                        return terr(
                            bline,
                            format!("entry ({k}, {j}) must be a {r} x {c} matrix"),
                        );
                    }
                    entries.push(
                        Mat::from_rows(body)
                            .map_err(|e| FormatError::Type { line: bline, msg: e.to_string() })?,
                    );
                }
            }
        }
    }
    let mor = TwoMor::new(src, tgt, entries)
        .map_err(|e| FormatError::Type { line, msg: e.to_string() })?;
    env.insert(line, &name, Value::Two(mor))
}

fn parse_matrix(p: &mut Parser, env: &mut Env) -> FResult<()> {
    p.next();
    let (name, line) = p.ident("a matrix name")?;
    p.expect(Tok::Colon, "`:`")?;
    let (src, _) = p.nat("a source dimension")?;
    p.expect(Tok::Arrow, "`->`")?;
    let (tgt, _) = p.nat("a target dimension")?;
    let body = p.matrix_body()?;
    if body.len() != tgt || body.iter().any(|row| row.len() != src) {
        return terr(line, format!("matrix body must be {tgt} x {src}"));
    }
    let mat = Mat::from_rows(body).map_err(|e| FormatError::Type { line, msg: e.to_string() })?;
    let mor = MatMor::new(MatObj(src), MatObj(tgt), mat)
        .map_err(|e| FormatError::Type { line, msg: e.to_string() })?;
    env.insert(line, &name, Value::Matrix(mor))
}

/// Evaluates an expression against the environment.
pub fn eval(expr: &Expr, env: &Env) -> FResult<Value> {
    match expr {
        Expr::Name(name, line) => env
            .get(name)
            .cloned()
            .ok_or_else(|| FormatError::Type {
                line: *line,
                msg: format!("unknown name `{name}`"),
            }),
        Expr::Nat(v, _) => Ok(Value::Obj(*v)),
        Expr::Binary(op, a, b, line) => {
            let a = eval(a, env)?;
            let b = eval(b, env)?;
            apply_binary(*op, a, b, *line)
        }
        Expr::Call(name, args, line) if name == "theta" => {
            // the third argument is a selector keyword, not a value
            if args.len() != 3 {
                return terr(*line, "theta takes (n, m, a|b|ab|ba|p)");
            }
            let n = match eval(&args[0], env)? {
                Value::Obj(n) => n,
                v => return terr(*line, format!("theta needs an object, got a {}", v.kind())),
            };
            let m = match eval(&args[1], env)? {
                Value::Obj(m) => m,
                v => return terr(*line, format!("theta needs an object, got a {}", v.kind())),
            };
            let Expr::Name(sel, _) = &args[2] else {
                return terr(*line, "theta selector must be a, b, ab, ba or p");
            };
            let w = make_witness(n, m);
            let t = match sel.as_str() {
                "a" => w.theta_a,
                "b" => w.theta_b,
                "ab" => w.theta_ab,
                "ba" => w.theta_ba,
                "p" => w.theta_p,
                _ => return terr(*line, "theta selector must be a, b, ab, ba or p"),
            };
            Ok(Value::Two(t))
        }
        Expr::Call(name, args, line) => {
            let vals = args
                .iter()
                .map(|a| eval(a, env))
                .collect::<FResult<Vec<_>>>()?;
            apply_builder(name, &vals, *line)
        }
    }
}

fn lift(line: usize) -> impl Fn(crate::Error) -> FormatError {
    move |e| FormatError::Type {
        line,
        msg: e.to_string(),
    }
}

fn apply_binary(op: Op, a: Value, b: Value, line: usize) -> FResult<Value> {
    use Value::*;
    match (op, a, b) {
        (Op::Horiz, One(x), One(y)) => Ok(One(hcompose1(&x, &y).map_err(lift(line))?)),
        (Op::Horiz2, Two(x), Two(y)) => Ok(Two(hcompose2(&x, &y).map_err(lift(line))?)),
        (Op::Vert, Two(x), Two(y)) => Ok(Two(vcompose2(&x, &y).map_err(lift(line))?)),
        (Op::Oplus, One(x), One(y)) => Ok(One(oplus_one(&x, &y).map_err(lift(line))?)),
        (Op::Oplus, Two(x), Two(y)) => Ok(Two(oplus_two(&x, &y).map_err(lift(line))?)),
        (Op::Oplus, Matrix(x), Matrix(y)) => Ok(Matrix(matcat::oplus(&x, &y))),
        (Op::Add, Two(x), Two(y)) => Ok(Two(add_two(&x, &y).map_err(lift(line))?)),
        (Op::Add, Matrix(x), Matrix(y)) => {
            Ok(Matrix(matcat::add_via_biproduct(&x, &y).map_err(lift(line))?))
        }
        (Op::Horiz, Two(_), Two(_)) => terr(
            line,
            "`.h` composes 1-morphisms; use `.h2` for 2-morphisms",
        ),
        (Op::Horiz, Matrix(x), Matrix(y)) => {
            Ok(Matrix(matcat::compose(&x, &y).map_err(lift(line))?))
        }
        (op, a, b) => terr(
            line,
            format!(
                "operator {:?} does not apply to a {} and a {}",
                op,
                a.kind(),
                b.kind()
            ),
        ),
    }
}

fn side_arg(v: &Value, line: usize) -> FResult<Side> {
    match v {
        Value::Obj(1) => Ok(Side::First),
        Value::Obj(2) => Ok(Side::Second),
        _ => terr(line, "side argument must be 1 or 2"),
    }
}

fn apply_builder(name: &str, args: &[Value], line: usize) -> FResult<Value> {
    use Value::*;
    match (name, args) {
        ("id", [Obj(n)]) => Ok(One(id_one(*n))),
        ("id", [One(f)]) => Ok(Two(id_two(f))),
        ("zero", [Obj(src), Obj(tgt)]) => Ok(One(crate::twovect::zero_one(*src, *tgt))),
        ("zero", [One(f), One(g)]) => {
            Ok(Two(crate::twovect::zero_two(f, g).map_err(lift(line))?))
        }
        ("p", [Obj(n), Obj(m), side]) => Ok(One(box_proj(*n, *m, side_arg(side, line)?))),
        ("i", [Obj(n), Obj(m), side]) => Ok(One(box_inj(*n, *m, side_arg(side, line)?))),
        ("pi", [One(f), One(g), side]) => Ok(Two(
            local_proj(f, g, side_arg(side, line)?).map_err(lift(line))?,
        )),
        ("nu", [One(f), One(g), side]) => Ok(Two(
            local_inj(f, g, side_arg(side, line)?).map_err(lift(line))?,
        )),
        ("normalize", [One(f)]) => Ok(One(normalize(f).0)),
        ("normalize", [Two(t)]) => {
            // transport along the deletion isos on both ends
            let (_, _, src_bwd) = normalize(t.src());
            let (_, tgt_fwd, _) = normalize(t.tgt());
            let inner = vcompose2(t, &src_bwd).map_err(lift(line))?;
            Ok(Two(vcompose2(&tgt_fwd, &inner).map_err(lift(line))?))
        }
        _ => terr(
            line,
            format!("no builder `{name}` for these {} argument(s)", args.len()),
        ),
    }
}

// ---------------------------------------------------------------------------
// serializer

/// Renders a rational in the canonical `p/q` form (`q` omitted when 1).
pub fn render_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_matrix_body(m: &Mat) -> String {
    let mut out = String::from("[");
    for i in 0..m.rows() {
        if i > 0 {
            out.push_str("; ");
        }
        for j in 0..m.cols() {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&render_rat(&m[(i, j)]));
        }
    }
    out.push(']');
    out
}

/// Collects named values and renders them as one canonical document:
/// objects first, then 1-morphisms, then 2-morphisms, then matrices, each
/// group sorted by name. Auto-registers the objects and source/target
/// 1-morphisms a value depends on.
#[derive(Debug, Default)]
pub struct DocBuilder {
    objects: BTreeMap<String, usize>,
    obj_names: BTreeMap<usize, String>,
    onemors: BTreeMap<String, OneMor>,
    twomors: BTreeMap<String, TwoMor>,
    matrices: BTreeMap<String, MatMor<Rat>>,
}

impl DocBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object_name(&mut self, dim: usize) -> String {
        if let Some(name) = self.obj_names.get(&dim) {
            return name.clone();
        }
        let name = format!("X{dim}");
        self.objects.insert(name.clone(), dim);
        self.obj_names.insert(dim, name.clone());
        name
    }

    pub fn add_one_mor(&mut self, name: &str, f: &OneMor) {
        self.object_name(f.src());
        self.object_name(f.tgt());
        self.onemors.insert(name.to_string(), f.clone());
    }

    pub fn add_two_mor(&mut self, name: &str, t: &TwoMor) {
        self.add_one_mor(&format!("{name}_src"), t.src());
        self.add_one_mor(&format!("{name}_tgt"), t.tgt());
        self.twomors.insert(name.to_string(), t.clone());
    }

    pub fn add_matrix(&mut self, name: &str, m: &MatMor<Rat>) {
        self.matrices.insert(name.to_string(), m.clone());
    }

    pub fn add_value(&mut self, name: &str, v: &Value) {
        match v {
            Value::Obj(d) => {
                let auto = self.object_name(*d);
                if auto != name {
                    self.objects.insert(name.to_string(), *d);
                }
            }
            Value::One(f) => self.add_one_mor(name, f),
            Value::Two(t) => self.add_two_mor(name, t),
            Value::Matrix(m) => self.add_matrix(name, m),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, dim) in &self.objects {
            writeln!(out, "object {name} {dim}").unwrap();
        }
        for (name, f) in &self.onemors {
            if !out.is_empty() {
                out.push('\n');
            }
            let src = self.obj_names[&f.src()].clone();
            let tgt = self.obj_names[&f.tgt()].clone();
            writeln!(out, "onemor {name} : {src} -> {tgt} {{").unwrap();
            for k in 0..f.tgt() {
                out.push_str("  row");
                for j in 0..f.src() {
                    out.push_str(" [");
                    let comps = f.entry(k, j).components();
                    for (i, d) in comps.iter().enumerate() {
                        if i > 0 {
                            out.push(' ');
                        }
                        write!(out, "{d}").unwrap();
                    }
                    out.push(']');
                }
                out.push('\n');
            }
            out.push_str("}\n");
        }
        for (name, t) in &self.twomors {
            out.push('\n');
            writeln!(out, "twomor {name} : {name}_src => {name}_tgt {{").unwrap();
            for k in 0..t.src().tgt() {
                for j in 0..t.src().src() {
                    let m = t.entry(k, j);
                    if m.rows() == 0 || m.cols() == 0 {
                        continue;
                    }
                    writeln!(out, "  entry {k} {j} {}", render_matrix_body(m)).unwrap();
                }
            }
            out.push_str("}\n");
        }
        for (name, m) in &self.matrices {
            out.push('\n');
            writeln!(
                out,
                "matrix {name} : {} -> {} {}",
                m.src().0,
                m.tgt().0,
                render_matrix_body(m.mat())
            )
            .unwrap();
        }
        out
    }
}

/// Serializes one named value as a standalone canonical document.
pub fn render_value(name: &str, v: &Value) -> String {
    let mut b = DocBuilder::new();
    b.add_value(name, v);
    b.render()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::{gen_one_mor, gen_two_mor, LawConfig};
    use crate::twovect::zero_one;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const FIXTURE: &str = include_str!("../../fixtures/worked_example.mor");

    fn get_one<'a>(env: &'a Env, name: &str) -> &'a OneMor {
        match env.get(name) {
            Some(Value::One(f)) => f,
            other => panic!("{name}: {other:?}"),
        }
    }

    #[test]
    fn fixture_loads() {
        let env = load(FIXTURE).unwrap();
        let f = get_one(&env, "f");
        assert_eq!((f.src(), f.tgt()), (3, 2));
        assert_eq!(f.entry(0, 0).components(), &[1, 1]);
        assert!(matches!(env.get("theta"), Some(Value::Two(_))));
    }

    #[test]
    fn expressions_compose_fixture_morphisms() {
        let env = load(FIXTURE).unwrap();
        let hf = eval(&parse_expr("h .h f").unwrap(), &env).unwrap();
        match hf {
            Value::One(m) => {
                assert_eq!(m.entry(0, 0).components(), &[1, 1, 1, 1, 1]);
            }
            other => panic!("expected a 1-morphism, got {other:?}"),
        }
        // unicode spellings parse to the same operators
        let uni = eval(&parse_expr("h \u{2218} f").unwrap(), &env).unwrap();
        match (uni, eval(&parse_expr("h .h f").unwrap(), &env).unwrap()) {
            (Value::One(a), Value::One(b)) => assert_eq!(a, b),
            _ => panic!("expected 1-morphisms"),
        }
        let vert = eval(&parse_expr("eta .v theta").unwrap(), &env).unwrap();
        assert!(matches!(vert, Value::Two(_)));
        let horiz = eval(&parse_expr("xi .h2 theta").unwrap(), &env).unwrap();
        match horiz {
            Value::Two(t) => assert_eq!(t.entry(0, 0).rows(), 3),
            other => panic!("expected a 2-morphism, got {other:?}"),
        }
    }

    #[test]
    fn builders_and_precedence() {
        let env = load(FIXTURE).unwrap();
        // identity builder on objects and morphisms
        match eval(&parse_expr("id(B)").unwrap(), &env).unwrap() {
            Value::One(m) => assert_eq!(m, crate::twovect::id_one(2)),
            other => panic!("{other:?}"),
        }
        match eval(&parse_expr("id(f)").unwrap(), &env).unwrap() {
            Value::Two(t) => assert!(t.is_identity()),
            other => panic!("{other:?}"),
        }
        match eval(&parse_expr("zero(A, C)").unwrap(), &env).unwrap() {
            Value::One(m) => assert_eq!(m, zero_one(3, 1)),
            other => panic!("{other:?}"),
        }
        match eval(&parse_expr("p(2, 3, 1) .h i(2, 3, 1)").unwrap(), &env).unwrap() {
            Value::One(m) => assert_eq!(crate::twovect::normalize(&m).0, crate::twovect::id_one(2)),
            other => panic!("{other:?}"),
        }
        match eval(&parse_expr("theta(1, 1, p)").unwrap(), &env).unwrap() {
            Value::Two(t) => assert_eq!(t.tgt(), &crate::twovect::id_one(2)),
            other => panic!("{other:?}"),
        }
        // + binds loosest: pi . nu + pi . nu is (pi . nu) + (pi . nu)
        let expr = parse_expr("nu(f, g, 1) .v pi(f, g, 1) + nu(f, g, 2) .v pi(f, g, 2)").unwrap();
        match eval(&expr, &env).unwrap() {
            Value::Two(t) => assert!(t.is_identity()),
            other => panic!("{other:?}"),
        }
        // normalize builder strips zero-dimensional components
        match eval(&parse_expr("normalize(p(1, 1, 1) .h i(1, 1, 1))").unwrap(), &env).unwrap() {
            Value::One(m) => assert_eq!(m, crate::twovect::id_one(1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_lines() {
        // malformed grid: wrong number of entries in a row
        let bad = "object A 2\nobject B 1\nonemor f : A -> B {\n  row [1]\n}\n";
        match load(bad) {
            Err(FormatError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        // stray token
        assert!(matches!(load("object A 2 %"), Err(FormatError::Parse { .. })));
        // unknown reference is a type error
        match load("let x = missing .h missing") {
            Err(FormatError::Type { .. }) => {}
            other => panic!("{other:?}"),
        }
        // wrong entry shape is a type error
        let bad_shape = "object A 1\nobject B 1\nonemor f : A -> B {\n  row [2]\n}\ntwomor t : f => f {\n  entry 0 0 [1]\n}\n";
        match load(bad_shape) {
            Err(FormatError::Type { line, .. }) => assert_eq!(line, 7),
            other => panic!("{other:?}"),
        }
        // exit codes
        assert_eq!(
            FormatError::Parse { line: 1, msg: String::new() }.exit_code(),
            2
        );
        assert_eq!(FormatError::Type { line: 1, msg: String::new() }.exit_code(), 3);
    }

    #[test]
    fn operator_type_errors() {
        let env = load(FIXTURE).unwrap();
        // .h on 2-morphisms points at .h2
        match eval(&parse_expr("theta .h eta").unwrap(), &env) {
            Err(FormatError::Type { msg, .. }) => assert!(msg.contains(".h2")),
            other => panic!("{other:?}"),
        }
        assert!(eval(&parse_expr("theta .v f").unwrap(), &env).is_err());
    }

    #[test]
    fn serializer_round_trips_generated_morphisms() {
        let cfg = LawConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for case in 0..40 {
            let f = gen_one_mor(&mut rng, &cfg, 2, 3);
            let g = gen_one_mor(&mut rng, &cfg, 2, 3);
            let t = gen_two_mor(&mut rng, &cfg, &f, &g);
            let doc = render_value("result", &Value::Two(t.clone()));
            let env = load(&doc).unwrap_or_else(|e| panic!("case {case}: {e}\n{doc}"));
            match env.get("result") {
                Some(Value::Two(back)) => assert_eq!(back, &t),
                other => panic!("{other:?}"),
            }
            // serializing the canonical document again is byte-identical
            let again = render_value("result", env.get("result").unwrap());
            assert_eq!(doc, again);

            let doc = render_value("result", &Value::One(f.clone()));
            let env = load(&doc).unwrap();
            match env.get("result") {
                Some(Value::One(back)) => assert_eq!(back, &f),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(render_rat(&crate::rat(1, 2)), "1/2");
        assert_eq!(render_rat(&crate::rat(-4, 6)), "-2/3");
        assert_eq!(render_rat(&crate::rati(7)), "7");
        assert_eq!(render_rat(&crate::rati(0)), "0");
    }
}
