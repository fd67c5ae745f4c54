//! Recursive-descent parser for the operator expression grammar.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := '-' factor | power
//! power    := atom ('^' '-'? integer)?
//! atom     := rational | identifier | '(' expr ')' | '[' expr ',' expr ']'
//! rational := digits ('/' digits)?
//! ```
//!
//! Identifiers in the three-dimensional context are `x1..x3`, `p1..p3`,
//! `s1..s3`, `r`, `i` and the parameters `m`, `alpha`, `q`, `E`; an optional
//! symbol table supplies further named operators. The radial context accepts
//! `r`, `dr`, `s1..s3`, `i`, the parameters `m` and `alpha`, and `j` (which
//! is substituted by the concrete quantum number). `[A,B]` is sugar for
//! `A*B - B*A`. Negative exponents are legal only on invertible factors
//! (`r`, parameters and nonzero scalars).

use alloc::collections::BTreeMap;
use alloc::fmt;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::expr::OperatorExpr;
use super::radial::{RadialOp, RadialParam};
use crate::opalg::coeff::Param3D;
use crate::scalar::{Rational, Scalar};

/// Named operators made available to the three-dimensional parser.
pub type SymbolTable = BTreeMap<String, OperatorExpr>;

/// Parse failure with a 1-based column position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub column: usize,
}

impl ParseError {
    fn new(message: impl Into<String>, column: usize) -> Self {
        ParseError {
            message: message.into(),
            column,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at column {}", self.message, self.column)
    }
}

impl core::error::Error for ParseError {}

/// Parse a three-dimensional operator expression.
pub fn parse_three_d(text: &str) -> Result<OperatorExpr, ParseError> {
    parse_three_d_with(text, &SymbolTable::new())
}

/// Parse a three-dimensional operator expression with extra named operators.
pub fn parse_three_d_with(
    text: &str,
    symbols: &SymbolTable,
) -> Result<OperatorExpr, ParseError> {
    let ctx = Context::ThreeD { symbols };
    match parse_value(text, &ctx)? {
        Value::ThreeD(op) => Ok(op),
        Value::Radial(_) => unreachable!(),
    }
}

/// Parse a radial operator expression with the quantum number `j`
/// instantiated to a concrete rational.
pub fn parse_radial(text: &str, j: &Rational) -> Result<RadialOp, ParseError> {
    let ctx = Context::Radial { j };
    match parse_value(text, &ctx)? {
        Value::Radial(op) => Ok(op),
        Value::ThreeD(_) => unreachable!(),
    }
}

enum Context<'a> {
    ThreeD { symbols: &'a SymbolTable },
    Radial { j: &'a Rational },
}

#[derive(Clone)]
enum Value {
    ThreeD(OperatorExpr),
    Radial(RadialOp),
}

impl Value {
    fn add(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::ThreeD(a), Value::ThreeD(b)) => Value::ThreeD(&a + &b),
            (Value::Radial(a), Value::Radial(b)) => Value::Radial(&a + &b),
            _ => unreachable!("values from one parse share a context"),
        }
    }

    fn sub(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::ThreeD(a), Value::ThreeD(b)) => Value::ThreeD(&a - &b),
            (Value::Radial(a), Value::Radial(b)) => Value::Radial(&a - &b),
            _ => unreachable!(),
        }
    }

    fn mul(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::ThreeD(a), Value::ThreeD(b)) => Value::ThreeD(&a * &b),
            (Value::Radial(a), Value::Radial(b)) => Value::Radial(&a * &b),
            _ => unreachable!(),
        }
    }

    fn neg(self) -> Value {
        match self {
            Value::ThreeD(a) => Value::ThreeD(-&a),
            Value::Radial(a) => Value::Radial(-&a),
        }
    }

    fn commutator(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::ThreeD(a), Value::ThreeD(b)) => Value::ThreeD(a.commutator(&b)),
            (Value::Radial(a), Value::Radial(b)) => Value::Radial(a.commutator(&b)),
            _ => unreachable!(),
        }
    }

    fn pow(self, n: i32) -> Option<Value> {
        match self {
            Value::ThreeD(a) => a.pow(n).map(Value::ThreeD),
            Value::Radial(a) => a.pow(n).map(Value::Radial),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                out.push((Token::Plus, col));
                i += 1;
            }
            '-' => {
                out.push((Token::Minus, col));
                i += 1;
            }
            '*' => {
                out.push((Token::Star, col));
                i += 1;
            }
            '^' => {
                out.push((Token::Caret, col));
                i += 1;
            }
            '(' => {
                out.push((Token::LParen, col));
                i += 1;
            }
            ')' => {
                out.push((Token::RParen, col));
                i += 1;
            }
            '[' => {
                out.push((Token::LBracket, col));
                i += 1;
            }
            ']' => {
                out.push((Token::RBracket, col));
                i += 1;
            }
            ',' => {
                out.push((Token::Comma, col));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let numerator: String = chars[start..i].iter().collect();
                let mut denominator = String::from("1");
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    let dstart = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    denominator = chars[dstart..i].iter().collect();
                }
                let n: BigInt = numerator.parse().expect("digits");
                let d: BigInt = denominator.parse().expect("digits");
                if d == BigInt::from(0) {
                    return Err(ParseError::new("zero denominator in rational literal", col));
                }
                out.push((Token::Num(Rational::new(n, d)), col));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                out.push((Token::Ident(name), col));
            }
            '/' => {
                return Err(ParseError::new(
                    "'/' is only valid inside a rational literal (write p/q with no spaces)",
                    col,
                ));
            }
            other => {
                return Err(ParseError::new(
                    alloc::format!("unexpected character '{other}'"),
                    col,
                ));
            }
        }
    }
    Ok(out)
}

struct Parser<'a, 'c> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end_col: usize,
    ctx: &'a Context<'c>,
}

fn parse_value(text: &str, ctx: &Context<'_>) -> Result<Value, ParseError> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(ParseError::new("empty expression", 1));
    }
    let end_col = text.chars().count() + 1;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end_col,
        ctx,
    };
    let value = parser.expr()?;
    if let Some((tok, col)) = parser.peek() {
        return Err(ParseError::new(
            alloc::format!("unexpected token {}", describe(tok)),
            col,
        ));
    }
    Ok(value)
}

fn describe(tok: &Token) -> String {
    match tok {
        Token::Num(n) => alloc::format!("number {n}"),
        Token::Ident(s) => alloc::format!("identifier `{s}`"),
        Token::Plus => "'+'".to_string(),
        Token::Minus => "'-'".to_string(),
        Token::Star => "'*'".to_string(),
        Token::Caret => "'^'".to_string(),
        Token::LParen => "'('".to_string(),
        Token::RParen => "')'".to_string(),
        Token::LBracket => "'['".to_string(),
        Token::RBracket => "']'".to_string(),
        Token::Comma => "','".to_string(),
    }
}

impl<'a, 'c> Parser<'a, 'c> {
    fn peek(&self) -> Option<(&Token, usize)> {
        self.tokens.get(self.pos).map(|(t, c)| (t, *c))
    }

    fn next(&mut self) -> Option<(Token, usize)> {
        let item = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        item
    }

    fn here(&self) -> usize {
        self.peek().map(|(_, c)| c).unwrap_or(self.end_col)
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        match self.next() {
            Some((tok, _)) if tok == want => Ok(()),
            Some((tok, col)) => Err(ParseError::new(
                alloc::format!("expected {}, found {}", describe(&want), describe(&tok)),
                col,
            )),
            None => Err(ParseError::new(
                alloc::format!("expected {}, found end of input", describe(&want)),
                self.end_col,
            )),
        }
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some((Token::Plus, _)) => {
                    self.next();
                    acc = acc.add(self.term()?);
                }
                Some((Token::Minus, _)) => {
                    self.next();
                    acc = acc.sub(self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.factor()?;
        while let Some((Token::Star, _)) = self.peek() {
            self.next();
            acc = acc.mul(self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value, ParseError> {
        if let Some((Token::Minus, _)) = self.peek() {
            self.next();
            return Ok(self.factor()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value, ParseError> {
        let base_col = self.here();
        let base = self.atom()?;
        if let Some((Token::Caret, _)) = self.peek() {
            self.next();
            let mut negative = false;
            if let Some((Token::Minus, _)) = self.peek() {
                self.next();
                negative = true;
            }
            let exp_col = self.here();
            let exp = match self.next() {
                Some((Token::Num(n), col)) => {
                    if !n.is_integer() {
                        return Err(ParseError::new("exponent must be an integer", col));
                    }
                    let digits: i32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| ParseError::new("exponent out of range", col))?;
                    digits
                }
                Some((tok, col)) => {
                    return Err(ParseError::new(
                        alloc::format!("expected integer exponent, found {}", describe(&tok)),
                        col,
                    ))
                }
                None => {
                    return Err(ParseError::new(
                        "expected integer exponent, found end of input",
                        exp_col,
                    ))
                }
            };
            let exp = if negative { -exp } else { exp };
            return base.pow(exp).ok_or_else(|| {
                ParseError::new(
                    "negative exponent requires an invertible factor (r or a parameter)",
                    base_col,
                )
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Value, ParseError> {
        match self.next() {
            Some((Token::Num(n), _)) => Ok(self.scalar(Scalar::from_rational(n))),
            Some((Token::Ident(name), col)) => self.resolve(&name, col),
            Some((Token::LParen, _)) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some((Token::LBracket, _)) => {
                let a = self.expr()?;
                self.expect(Token::Comma)?;
                let b = self.expr()?;
                self.expect(Token::RBracket)?;
                Ok(a.commutator(b))
            }
            Some((tok, col)) => Err(ParseError::new(
                alloc::format!("expected an operand, found {}", describe(&tok)),
                col,
            )),
            None => Err(ParseError::new(
                "expected an operand, found end of input",
                self.end_col,
            )),
        }
    }

    fn scalar(&self, s: Scalar) -> Value {
        match self.ctx {
            Context::ThreeD { .. } => Value::ThreeD(OperatorExpr::scalar(s)),
            Context::Radial { .. } => Value::Radial(RadialOp::scalar(s)),
        }
    }

    fn resolve(&self, name: &str, col: usize) -> Result<Value, ParseError> {
        match self.ctx {
            Context::ThreeD { symbols } => {
                let op = match name {
                    "x1" => OperatorExpr::x(1),
                    "x2" => OperatorExpr::x(2),
                    "x3" => OperatorExpr::x(3),
                    "p1" => OperatorExpr::p(1),
                    "p2" => OperatorExpr::p(2),
                    "p3" => OperatorExpr::p(3),
                    "s1" => OperatorExpr::sigma(1),
                    "s2" => OperatorExpr::sigma(2),
                    "s3" => OperatorExpr::sigma(3),
                    "r" => OperatorExpr::r_pow(1),
                    "i" => OperatorExpr::imaginary(),
                    "m" => OperatorExpr::param(Param3D::Mass, 1),
                    "alpha" => OperatorExpr::param(Param3D::Alpha, 1),
                    "q" => OperatorExpr::param(Param3D::Charge, 1),
                    "E" => OperatorExpr::param(Param3D::Energy, 1),
                    "dr" => {
                        return Err(ParseError::new(
                            "`dr` is only available in the radial context",
                            col,
                        ))
                    }
                    "j" => {
                        return Err(ParseError::new(
                            "`j` is only available in the radial context",
                            col,
                        ))
                    }
                    other => match symbols.get(other) {
                        Some(op) => op.clone(),
                        None => {
                            return Err(ParseError::new(
                                alloc::format!("unknown identifier `{other}`"),
                                col,
                            ))
                        }
                    },
                };
                Ok(Value::ThreeD(op))
            }
            Context::Radial { j } => {
                let op = match name {
                    "r" => RadialOp::r_pow(1),
                    "dr" => RadialOp::d_r(),
                    "s1" => RadialOp::sigma(1),
                    "s2" => RadialOp::sigma(2),
                    "s3" => RadialOp::sigma(3),
                    "i" => RadialOp::scalar(Scalar::i()),
                    "m" => RadialOp::param(RadialParam::Mass, 1),
                    "alpha" => RadialOp::param(RadialParam::Alpha, 1),
                    "j" => RadialOp::from_rational((*j).clone()),
                    "q" | "E" => {
                        return Err(ParseError::new(
                            alloc::format!("parameter `{name}` is not available in radial operators"),
                            col,
                        ))
                    }
                    other => {
                        return Err(ParseError::new(
                            alloc::format!("unknown identifier `{other}` in radial context"),
                            col,
                        ))
                    }
                };
                Ok(Value::Radial(op))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    #[test]
    fn parses_angular_momentum_component() {
        let l1 = parse_three_d("x2*p3 - x3*p2").unwrap();
        assert_eq!(l1.term_count(), 2);
        let expected = &(&OperatorExpr::x(2) * &OperatorExpr::p(3))
            - &(&OperatorExpr::x(3) * &OperatorExpr::p(2));
        assert_eq!(l1, expected);
    }

    #[test]
    fn commutator_sugar() {
        let c = parse_three_d("[p1, x1]").unwrap();
        assert_eq!(c, -&OperatorExpr::imaginary());
    }

    #[test]
    fn pauli_product() {
        let p = parse_three_d("s1*s2").unwrap();
        assert_eq!(p, OperatorExpr::sigma(3).scale(&Scalar::i()));
    }

    #[test]
    fn unknown_identifier_reports_column() {
        let err = parse_three_d("x4").unwrap_err();
        assert_eq!(err.column, 1);
        assert!(err.message.contains("unknown identifier"));
        let err = parse_three_d("x1 + zz2").unwrap_err();
        assert_eq!(err.column, 6);
    }

    #[test]
    fn negative_exponent_needs_invertible() {
        let err = parse_three_d("p1^-1").unwrap_err();
        assert!(err.message.contains("invertible"));
        assert_eq!(err.column, 1);
        let ok = parse_three_d("r^-2").unwrap();
        assert_eq!(ok, OperatorExpr::r_pow(-2));
        let ok = parse_three_d("(2*m)^-1").unwrap();
        assert_eq!(
            ok,
            OperatorExpr::param(Param3D::Mass, -1).scale(&Scalar::from_ratio(1, 2))
        );
    }

    #[test]
    fn rational_literals() {
        let v = parse_three_d("3/2").unwrap();
        assert_eq!(v.as_scalar().unwrap(), Scalar::from_rational(ratio(3, 2)));
        let err = parse_three_d("1 / 2").unwrap_err();
        assert!(err.message.contains("rational literal"));
    }

    #[test]
    fn malformed_syntax() {
        assert!(parse_three_d("").is_err());
        assert!(parse_three_d("x1 +").is_err());
        assert!(parse_three_d("(x1").is_err());
        assert!(parse_three_d("[x1 x2]").is_err());
        assert!(parse_three_d("x1^x2").is_err());
    }

    #[test]
    fn radial_context() {
        let j = ratio(1, 2);
        let w = parse_radial("(1/2*s3 - j - 1)*r^-1 + (2*(j+1))^-1*s1", &j).unwrap();
        assert_eq!(w.term_count(), 3);
        assert!(parse_radial("x1", &j).is_err());
        assert!(parse_radial("q", &j).is_err());
        let jj = parse_radial("j*(j+1)", &j).unwrap();
        assert_eq!(
            jj,
            RadialOp::from_rational(ratio(3, 4))
        );
        assert_eq!(rat(2), ratio(2, 1));
    }

    #[test]
    fn three_d_symbol_table() {
        let mut symbols = SymbolTable::new();
        symbols.insert(
            String::from("L3"),
            parse_three_d("x1*p2 - x2*p1").unwrap(),
        );
        let v = parse_three_d_with("[x1, L3]", &symbols).unwrap();
        // [x1, L3] = -i x2
        assert_eq!(v, OperatorExpr::x(2).scale(&-Scalar::i()));
    }

    #[test]
    fn print_parse_round_trip_is_fixed_point() {
        for text in [
            "x2*p3 - x3*p2",
            "[p1, x1]",
            "s1*s2*s3 + r^-2*x1*p2^2",
            "1/2*m^-1*(p1^2+p2^2+p3^2) - q*r^-1",
            "alpha*(s1*x1+s2*x2+s3*x3)*r^-2",
        ] {
            let a = parse_three_d(text).unwrap();
            let printed = alloc::format!("{a}");
            let b = parse_three_d(&printed).unwrap();
            assert_eq!(a.terms(), b.terms(), "round trip failed for {text}: {printed}");
        }
        let j = ratio(3, 2);
        for text in ["dr^2 - j*(j+1)*r^-2", "(1/2*s3 - j - 1)*r^-1 + s1*alpha*m^-1"] {
            let a = parse_radial(text, &j).unwrap();
            let printed = alloc::format!("{a}");
            let b = parse_radial(&printed, &j).unwrap();
            assert_eq!(a.terms(), b.terms());
        }
    }
}
