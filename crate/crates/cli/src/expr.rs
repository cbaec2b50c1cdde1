//! Surface syntax for scalar-tier elements.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := '-' term | factor ('*' factor)*
//! factor := atom ('^' exp)?
//! exp    := '-'? int | '(' '-'? int ('/' int)? ')'
//! atom   := '(' expr ')' | 'dag(' expr ')' | 'nf(' expr ')' | generator | scalar
//! generator := ('g'|'Op'|'Om'|'Omega'|'Sigma') '[' int ',' int ']' | 'K' | 'Kinv' | 'Xp' | 'Xm'
//! scalar := int ('/' int)? | 'q' | 'i' | 'lambda'
//! ```
//! Fractional exponents are accepted on `q` only.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use tgq_core::star::{star_apply, StarMap};
use tgq_core::{Algebra, Error, Letter, NCPoly, Poly, QRing, Result, Ring, Scalar, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Ratio<i64>),
    Dag(Box<Expr>),
    Nf(Box<Expr>),
    Gen(Letter),
    /// Non-negative rational literal.
    Num(BigRational),
    Q,
    I,
    Lambda,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, k) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            Tok::Ident(s)
        } else if "+-*^()[],/".contains(c) {
            chars.next();
            col += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Syntax {
                line: l,
                col: k,
                msg: format!("unexpected character `{c}`"),
            });
        };
        out.push(Token { tok, line: l, col: k });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
    n: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn at(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|t| (t.line, t.col)).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.at();
        Err(Error::Syntax {
            line,
            col,
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

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn small_int(&mut self) -> Result<i64> {
        let v = self.int()?;
        match i64::try_from(&v) {
            Ok(x) => Ok(x),
            Err(_) => self.err("integer too large"),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.term()?)));
        }
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.at();
        let e = if self.eat('(') {
            let neg = self.eat('-');
            let num = self.small_int()?;
            let den = if self.eat('/') { self.small_int()? } else { 1 };
            self.expect(')')?;
            if den == 0 {
                return Err(Error::Syntax {
                    line: at.0,
                    col: at.1,
                    msg: "zero denominator in exponent".into(),
                });
            }
            Ratio::new(if neg { -num } else { num }, den)
        } else {
            let neg = self.eat('-');
            let num = self.small_int()?;
            Ratio::from_integer(if neg { -num } else { num })
        };
        if !e.is_integer() && base != Expr::Q {
            return Err(Error::Syntax {
                line: at.0,
                col: at.1,
                msg: "fractional exponents are only allowed on q".into(),
            });
        }
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expr> {
        let (line, col) = self.at();
        match self.peek().cloned() {
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Int(v)) => {
                self.pos += 1;
                let den = if self.eat('/') { self.int()? } else { BigInt::one() };
                if den.is_zero() {
                    return Err(Error::Syntax {
                        line,
                        col,
                        msg: "zero denominator".into(),
                    });
                }
                Ok(Expr::Num(BigRational::new(v, den)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "q" => Ok(Expr::Q),
                    "i" => Ok(Expr::I),
                    "lambda" => Ok(Expr::Lambda),
                    "K" => Ok(Expr::Gen(Letter::K)),
                    "Kinv" => Ok(Expr::Gen(Letter::Kinv)),
                    "Xp" => Ok(Expr::Gen(Letter::Xp)),
                    "Xm" => Ok(Expr::Gen(Letter::Xm)),
                    "dag" | "nf" => {
                        self.expect('(')?;
                        let e = Box::new(self.expr()?);
                        self.expect(')')?;
                        Ok(if name == "dag" { Expr::Dag(e) } else { Expr::Nf(e) })
                    }
                    "g" | "Op" | "Om" | "Omega" | "Sigma" => {
                        self.expect('[')?;
                        let (il, ic) = self.at();
                        let i = self.small_int()?;
                        self.expect(',')?;
                        let j = self.small_int()?;
                        self.expect(']')?;
                        if i < 1 || j < 1 || i as usize > self.n || j as usize > self.n {
                            return Err(Error::UnknownGenerator {
                                name: format!("{name}[{i},{j}]"),
                                line: il,
                                col: ic,
                            });
                        }
                        let (i, j) = ((i - 1) as u8, (j - 1) as u8);
                        Ok(Expr::Gen(match name.as_str() {
                            "g" => Letter::G(i, j),
                            "Op" => Letter::OmPlus(i, j),
                            "Om" => Letter::OmMinus(i, j),
                            "Omega" => Letter::Omega(i, j),
                            _ => Letter::Sigma(i, j),
                        }))
                    }
                    _ => Err(Error::UnknownGenerator { name, line, col }),
                }
            }
            Some(Tok::Sym(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression for rank `n` matrices (only n = 2 can be evaluated).
pub fn parse_expr_n(src: &str, n: usize) -> Result<Expr> {
    let toks = lex(src)?;
    let end = src.lines().enumerate().last().map_or((1, 1), |(l, s)| (l + 1, s.chars().count() + 1));
    let mut p = Parser { toks, pos: 0, end, n };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    parse_expr_n(src, 2)
}

// Binding strength for printing.
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Neg(_) => 1,
        Expr::Mul(..) => 2,
        Expr::Pow(..) => 3,
        Expr::Num(r) if !r.is_integer() => 3,
        _ => 4,
    }
}

fn wrap(e: &Expr, min: u8) -> String {
    if prec(e) < min {
        format!("({e})")
    } else {
        e.to_string()
    }
}

fn render_exp(e: Ratio<i64>) -> String {
    if e.is_integer() && !e.is_negative() {
        e.to_integer().to_string()
    } else {
        format!("({e})")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Add(a, b) => write!(f, "{} + {}", wrap(a, 0), wrap(b, 1)),
            Expr::Sub(a, b) => write!(f, "{} - {}", wrap(a, 0), wrap(b, 1)),
            Expr::Neg(a) => write!(f, "-{}", wrap(a, 1)),
            Expr::Mul(a, b) => write!(f, "{}*{}", wrap(a, 2), wrap(b, 3)),
            Expr::Pow(a, e) => write!(f, "{}^{}", wrap(a, 4), render_exp(*e)),
            Expr::Dag(a) => write!(f, "dag({a})"),
            Expr::Nf(a) => write!(f, "nf({a})"),
            Expr::Gen(l) => write!(f, "{l}"),
            Expr::Num(r) => write!(f, "{r}"),
            Expr::Q => f.write_str("q"),
            Expr::I => f.write_str("i"),
            Expr::Lambda => f.write_str("lambda"),
        }
    }
}

/// Algebra and star map used by `eval`.
pub struct Context<'a> {
    pub alg: &'a Algebra,
    pub star: StarMap<Scalar>,
}

fn invert(p: &Poly, e: &Expr) -> Result<Poly> {
    if p.len() == 1 {
        let (w, c) = p.leading().expect("one term");
        let inv: Option<Vec<Letter>> = w
            .letters()
            .iter()
            .rev()
            .map(|l| match l {
                Letter::K => Some(Letter::Kinv),
                Letter::Kinv => Some(Letter::K),
                _ => None,
            })
            .collect();
        if let (Some(inv), Ok(ci)) = (inv, c.inv_unit()) {
            return Ok(NCPoly::monomial(ci, Word(inv)));
        }
    }
    Err(Error::NotInvertible(e.to_string()))
}

/// Evaluates `e`; the result is in normal form.
pub fn eval(e: &Expr, ctx: &Context) -> Result<Poly> {
    ctx.alg.nf(&eval_raw(e, ctx)?)
}

fn eval_raw(e: &Expr, ctx: &Context) -> Result<Poly> {
    let c = |s: Scalar| Ok(NCPoly::constant(s));
    match e {
        Expr::Add(a, b) => Ok(eval_raw(a, ctx)? + eval_raw(b, ctx)?),
        Expr::Sub(a, b) => Ok(eval_raw(a, ctx)? - eval_raw(b, ctx)?),
        Expr::Neg(a) => Ok(-eval_raw(a, ctx)?),
        Expr::Mul(a, b) => Ok(eval_raw(a, ctx)? * eval_raw(b, ctx)?),
        Expr::Pow(a, k) => {
            if !k.is_integer() {
                return c(Scalar::q_pow(*k.numer(), *k.denom()));
            }
            let k = k.to_integer();
            let base = eval_raw(a, ctx)?;
            let base = if k < 0 { invert(&base, a)? } else { base };
            let k = u32::try_from(k.unsigned_abs()).map_err(|_| Error::Config("exponent too large".into()))?;
            Ok(base.pow(k))
        }
        Expr::Dag(a) => star_apply(&eval_raw(a, ctx)?, &ctx.star, ctx.alg),
        Expr::Nf(a) => ctx.alg.nf(&eval_raw(a, ctx)?),
        Expr::Gen(Letter::OmPlus(i, j)) => Ok(ctx.alg.om_plus.get(*i as usize, *j as usize).clone()),
        Expr::Gen(Letter::OmMinus(i, j)) => Ok(ctx.alg.om_minus.get(*i as usize, *j as usize).clone()),
        Expr::Gen(l) => Ok(NCPoly::letter(*l)),
        Expr::Num(r) => c(Scalar::from_rational(r)),
        Expr::Q => c(Scalar::q()),
        Expr::I => c(Scalar::imaginary_unit().expect("Gaussian scalars")),
        Expr::Lambda => c(Scalar::lambda()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_generators() {
        let e = parse_expr("g[1,1]*g[1,2]").unwrap();
        assert_eq!(
            e,
            Expr::Mul(Box::new(Expr::Gen(Letter::G(0, 0))), Box::new(Expr::Gen(Letter::G(0, 1))))
        );
    }

    #[test]
    fn dag_power_plus_scalar() {
        let e = parse_expr("dag(Op[1,2])^2 + q*lambda").unwrap();
        assert_eq!(e.to_string(), "dag(Op[1,2])^2 + q*lambda");
    }

    #[test]
    fn out_of_range_index() {
        match parse_expr("g[1,3]") {
            Err(Error::UnknownGenerator { name, line, col }) => {
                assert_eq!(name, "g[1,3]");
                assert_eq!((line, col), (1, 3));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_error_position() {
        match parse_expr("g[1,1] *\n  + K") {
            Err(Error::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(parse_expr("2*Y"), Err(Error::UnknownGenerator { col: 3, .. })));
    }

    #[test]
    fn fractional_exponent_only_on_q() {
        assert!(parse_expr("q^(-1/2)").is_ok());
        assert!(matches!(parse_expr("K^(1/2)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn printing_keeps_grouping() {
        for s in ["g[1,1] - (K - Xp)", "-(K + Xp)*Xm", "(-K)*Xm", "(K^2)^3", "2/3*q^(-1/2)", "(2/3)^2"] {
            let e = parse_expr(s).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{s}");
        }
    }
}
