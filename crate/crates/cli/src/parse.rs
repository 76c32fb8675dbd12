//! Recursive-descent parser for the expression grammar
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ('+' | '-')? factor ('*' factor)*
//! factor := int ('/' int)? | 'q' ('^' '-'? int)?
//!         | 'a[' int ',' int ']'
//!         | 'D[' intlist (';' intlist)? ']'
//!         | 'D[' intlist? '|' int ']'
//!         | '(' expr ')'
//! ```
//!
//! `a[...]` builds matrix-algebra elements, `D[rows]` Grassmannian minors and
//! `D[prefix|order]` stable generators of the direct limit. The three kinds
//! cannot be mixed in one expression.

use num::{BigInt, BigRational, Zero};
use thiserror::Error;

use qgr_core::coeff::LaurentScalar;
use qgr_core::grassmann::MinorExpr;
use qgr_core::limits::{LimitElement, MayaDiagram};
use qgr_core::qmatrix::{Level, NCPoly};
use qgr_core::QgrError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("at line {line}, column {col}: {source}")]
    Domain {
        line: usize,
        col: usize,
        source: QgrError,
    },
    #[error("at line {line}, column {col}: cannot mix {left} and {right} generators")]
    Mixed {
        line: usize,
        col: usize,
        left: &'static str,
        right: &'static str,
    },
}

/// A parsed expression, routed by the kind of generator it uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Poly(NCPoly),
    Minor(MinorExpr),
    Limit(LimitElement),
}

impl std::fmt::Display for Parsed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parsed::Poly(x) => x.fmt(f),
            Parsed::Minor(x) => x.fmt(f),
            Parsed::Limit(x) => x.fmt(f),
        }
    }
}

/// Canonical text of a parsed value; `parse_expr` reads it back.
pub fn render(x: &Parsed) -> String {
    x.to_string()
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, col);
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
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                col += 1;
            }
            Tok::Int(digits.parse().expect("ascii digits"))
        } else {
            chars.next();
            col += 1;
            match c {
                'a' | 'D' | 'q' => Tok::Ident(c),
                '+' | '-' | '*' | '/' | '^' | '(' | ')' | '[' | ']' | ',' | ';' | '|' => Tok::Sym(c),
                _ => {
                    return Err(ParseError::Syntax {
                        line: l0,
                        col: c0,
                        msg: format!("unexpected character {c:?}"),
                    })
                }
            }
        };
        out.push(Token {
            tok,
            line: l0,
            col: c0,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

#[derive(Clone, Debug)]
enum Val {
    Scalar(LaurentScalar),
    Poly(NCPoly),
    Minor(MinorExpr),
    Limit(LimitElement),
}

impl Val {
    fn kind(&self) -> &'static str {
        match self {
            Val::Scalar(_) => "scalar",
            Val::Poly(_) => "matrix (a[i,j])",
            Val::Minor(_) => "minor (D[rows])",
            Val::Limit(_) => "stable (D[prefix|order])",
        }
    }
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    level: &'a Level,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, t: &Token, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            line: t.line,
            col: t.col,
            msg: msg.into(),
        })
    }

    fn at_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            self.err(&t, format!("expected '{c}'"))
        }
    }

    fn domain<T>(&self, t: &Token, r: Result<T, QgrError>) -> Result<T, ParseError> {
        r.map_err(|source| ParseError::Domain {
            line: t.line,
            col: t.col,
            source,
        })
    }

    fn int(&mut self) -> Result<i32, ParseError> {
        let neg = if self.at_sym('-') {
            self.next();
            true
        } else {
            false
        };
        let t = self.next();
        match &t.tok {
            Tok::Int(v) => {
                let v: i64 = v
                    .try_into()
                    .or_else(|_| self.err(&t, "integer out of range"))?;
                let v = if neg { -v } else { v };
                i32::try_from(v).or_else(|_| self.err(&t, "integer out of range"))
            }
            _ => self.err(&t, "expected an integer"),
        }
    }

    fn int_list(&mut self) -> Result<Vec<i32>, ParseError> {
        let mut out = Vec::new();
        if matches!(self.peek().tok, Tok::Sym(']' | ';' | '|')) {
            return Ok(out);
        }
        out.push(self.int()?);
        while self.at_sym(',') {
            self.next();
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn combine(
        &self,
        t: &Token,
        x: Val,
        y: Val,
        op: char,
    ) -> Result<Val, ParseError> {
        use Val::*;
        let mixed = |a: &Val, b: &Val| ParseError::Mixed {
            line: t.line,
            col: t.col,
            left: a.kind(),
            right: b.kind(),
        };
        let lift = |v: Val, like: &Val| -> Val {
            match (v, like) {
                (Scalar(c), Poly(p)) => Poly(NCPoly::scalar(p.level(), c)),
                (Scalar(c), Minor(m)) => Minor(MinorExpr::scalar(m.level(), c)),
                (Scalar(c), Limit(_)) => Limit(LimitElement::scalar(c)),
                (v, _) => v,
            }
        };
        let x = lift(x, &y);
        let y = lift(y, &x);
        Ok(match (x, y, op) {
            (Scalar(a), Scalar(b), '+') => Scalar(&a + &b),
            (Scalar(a), Scalar(b), '-') => Scalar(&a - &b),
            (Scalar(a), Scalar(b), _) => Scalar(&a * &b),
            (Poly(a), Poly(b), op) => Poly(self.domain(
                t,
                match op {
                    '+' => a.try_add(&b),
                    '-' => a.try_sub(&b),
                    _ => a.nc_mul(&b),
                },
            )?),
            (Minor(a), Minor(b), op) => Minor(self.domain(
                t,
                match op {
                    '+' => a.try_add(&b),
                    '-' => a.try_sub(&b),
                    _ => a.try_mul(&b),
                },
            )?),
            (Limit(a), Limit(b), op) => Limit(match op {
                '+' => a.add(&b),
                '-' => a.sub(&b),
                _ => a.mul(&b),
            }),
            (a, b, _) => return Err(mixed(&a, &b)),
        })
    }

    fn expr(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.term()?;
        while matches!(self.peek().tok, Tok::Sym('+' | '-')) {
            let t = self.next();
            let Tok::Sym(op) = t.tok else { unreachable!() };
            let rhs = self.term()?;
            acc = self.combine(&t, acc, rhs, op)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Val, ParseError> {
        let negate = match self.peek().tok {
            Tok::Sym('-') => {
                self.next();
                true
            }
            Tok::Sym('+') => {
                self.next();
                false
            }
            _ => false,
        };
        let mut acc = self.factor()?;
        while self.at_sym('*') {
            let t = self.next();
            let rhs = self.factor()?;
            acc = self.combine(&t, acc, rhs, '*')?;
        }
        if negate {
            let t = self.peek().clone();
            acc = self.combine(&t, Val::Scalar(LaurentScalar::from_int(-1)), acc, '*')?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Val, ParseError> {
        let t = self.next();
        match t.tok.clone() {
            Tok::Int(n) => {
                let mut r = BigRational::from_integer(n);
                if self.at_sym('/') {
                    self.next();
                    let dt = self.next();
                    match dt.tok {
                        Tok::Int(d) if !d.is_zero() => r /= BigRational::from_integer(d),
                        Tok::Int(_) => return self.err(&dt, "division by zero"),
                        _ => return self.err(&dt, "expected a denominator"),
                    }
                }
                Ok(Val::Scalar(LaurentScalar::from_rational(r)))
            }
            Tok::Ident('q') => {
                let e = if self.at_sym('^') {
                    self.next();
                    self.int()?
                } else {
                    1
                };
                Ok(Val::Scalar(LaurentScalar::q_pow(e)))
            }
            Tok::Ident('a') => {
                self.expect_sym('[')?;
                let i = self.int()?;
                self.expect_sym(',')?;
                let j = self.int()?;
                self.expect_sym(']')?;
                Ok(Val::Poly(self.domain(&t, NCPoly::gen(*self.level, i, j))?))
            }
            Tok::Ident('D') => self.minor_literal(&t),
            Tok::Sym('(') => {
                let v = self.expr()?;
                self.expect_sym(')')?;
                Ok(v)
            }
            Tok::End => self.err(&t, "expected a term"),
            _ => self.err(&t, "expected a scalar, a[i,j], D[...] or '('"),
        }
    }

    fn minor_literal(&mut self, t: &Token) -> Result<Val, ParseError> {
        self.expect_sym('[')?;
        let rows = self.int_list()?;
        if self.at_sym('|') {
            self.next();
            let order = self.int()?;
            self.expect_sym(']')?;
            let prefix: Vec<String> = rows.iter().map(i32::to_string).collect();
            let text = format!("[{}|{order}]", prefix.join(","));
            let d: MayaDiagram = self.domain(t, text.parse())?;
            return Ok(Val::Limit(LimitElement::generator(d)));
        }
        let level = self.level.as_rect();
        let leading: Vec<i32> = (-(rows.len() as i32)..0).collect();
        if self.at_sym(';') {
            self.next();
            let cols = self.int_list()?;
            self.expect_sym(']')?;
            if cols != leading {
                return self.err(
                    t,
                    format!("Grassmannian generators use the columns {leading:?}, found {cols:?}"),
                );
            }
        } else {
            self.expect_sym(']')?;
        }
        Ok(Val::Minor(self.domain(t, MinorExpr::generator(level, rows))?))
    }
}

/// Parses and normalizes an expression at `level`. Matrix generators use the
/// level's column window; minors always live at the rectangular level.
pub fn parse_expr(text: &str, level: Level) -> Result<Parsed, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        level: &level,
    };
    let v = p.expr()?;
    let end = p.next();
    if end.tok != Tok::End {
        return p.err(&end, "unexpected input after expression");
    }
    Ok(match v {
        Val::Scalar(c) => Parsed::Poly(NCPoly::scalar(level, c)),
        Val::Poly(x) => Parsed::Poly(x),
        Val::Minor(x) => Parsed::Minor(x),
        Val::Limit(x) => Parsed::Limit(x),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lvl(m: i32, n: i32) -> Level {
        Level::new(m, n).unwrap()
    }

    #[test]
    fn same_column_relation_is_zero() {
        let x = parse_expr("a[-1,-1]*a[0,-1] - q^-1*a[0,-1]*a[-1,-1]", lvl(1, 1)).unwrap();
        assert_eq!(x, Parsed::Poly(NCPoly::zero(lvl(1, 1))));
    }

    #[test]
    fn minor_literal() {
        let Parsed::Minor(x) = parse_expr("D[-2,-1]", lvl(2, 2)).unwrap() else {
            panic!("expected a minor expression");
        };
        assert_eq!(x, MinorExpr::generator(Level::rect(2, 2).unwrap(), vec![-2, -1]).unwrap());
        assert!(parse_expr("D[-2,-1;-2,-1]", lvl(2, 2)).is_ok());
        assert!(parse_expr("D[-2,-1;-1,0]", lvl(2, 2)).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(
            parse_expr("", lvl(1, 1)),
            Err(ParseError::Syntax { line: 1, col: 1, .. })
        ));
        assert!(matches!(
            parse_expr("a[-1,-1] +\n  # ", lvl(1, 1)),
            Err(ParseError::Syntax { line: 2, col: 3, .. })
        ));
        assert!(matches!(
            parse_expr("a[-1,-1] * D[-1]", lvl(1, 1)),
            Err(ParseError::Mixed { .. })
        ));
        assert!(matches!(
            parse_expr("a[5,0]", lvl(1, 1)),
            Err(ParseError::Domain { .. })
        ));
    }

    #[test]
    fn scalars_and_limits() {
        let x = parse_expr("(q - q^-1)*(q + q^-1)", lvl(1, 1)).unwrap();
        assert_eq!(x.to_string(), "(q^2 - q^-2)");
        let Parsed::Limit(y) = parse_expr("D[-1,1|3]*D[|1] - 3/2", lvl(1, 1)).unwrap() else {
            panic!("expected a limit element");
        };
        assert_eq!(y.terms().len(), 2);
    }
}
