//! The expression grammar shared by all subcommands:
//!
//! ```text
//! expr    := ('-')? term (('+' | '-') term)*
//! term    := factor (('*' | '/')? factor)*    -- implicit product before '[' or '{'
//! factor  := atom ('^' int)?
//! atom    := int | 'q' | 'X' '[' int ',' int ']'
//!          | '[' ints ('|' ints)? ']' | '{' ints '}' | '(' expr ')'
//! ints    := int ((',')? int)*                -- whitespace or comma separated
//! ```
//!
//! Indices are validated against the ambient while parsing, so every error
//! carries a byte offset into the input.

use num::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset} (line {line}, column {column})")]
pub struct ParseError {
    pub message: String,
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

fn err_at(src: &str, offset: usize, message: impl Into<String>) -> ParseError {
    let prefix = &src[..offset.min(src.len())];
    let line = prefix.chars().filter(|&c| c == '\n').count() + 1;
    let column = prefix.chars().rev().take_while(|&c| c != '\n').count() + 1;
    ParseError { message: message.into(), offset, line, column }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    Gen { row: u16, col: u16 },
    /// `[cols]` (maximal minor) or `[rows|cols]` (general minor).
    Minor { rows: Option<Vec<u16>>, cols: Vec<u16> },
    Brace { cols: Vec<u16> },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Q,
    X,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Pipe,
    Comma,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    offset: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let t = Tok::Int(src[i..j].parse().expect("digit run"));
                i = j;
                out.push(Spanned { tok: t, offset: start });
                continue;
            }
            'q' => Tok::Q,
            'X' => Tok::X,
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '|' => Tok::Pipe,
            ',' => Tok::Comma,
            other => {
                return Err(err_at(src, start, format!("unexpected character '{}'", other)))
            }
        };
        out.push(Spanned { tok, offset: start });
        i += 1;
    }
    Ok(out)
}

pub struct Parser<'a> {
    src: &'a str,
    toks: Vec<Spanned>,
    pos: usize,
    m: u16,
    n: u16,
}

/// Parse an expression against the ambient `(m, n)`.
pub fn parse_expr(src: &str, m: u16, n: u16) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { src, toks, pos: 0, m, n };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(err_at(src, t.offset, "trailing input"));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eof_offset(&self) -> usize {
        self.src.len()
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<usize, ParseError> {
        match self.next() {
            Some(t) if t.tok == tok => Ok(t.offset),
            Some(t) => Err(err_at(self.src, t.offset, format!("expected {}", what))),
            None => Err(err_at(self.src, self.eof_offset(), format!("expected {}", what))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let negated = matches!(self.peek(), Some(t) if t.tok == Tok::Minus);
        if negated {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negated {
            acc = Expr::Neg(Box::new(acc));
        }
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = Expr::Mul(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = Expr::Div(Box::new(acc), Box::new(rhs));
                }
                // Juxtaposition: a bracketed atom directly after a factor
                // multiplies, so printed tableau products re-parse.
                Some(Tok::LBrack) | Some(Tok::LBrace) => {
                    let rhs = self.factor()?;
                    acc = Expr::Mul(Box::new(acc), Box::new(rhs));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(t) if t.tok == Tok::Caret) {
            self.pos += 1;
            let neg = matches!(self.peek(), Some(t) if t.tok == Tok::Minus);
            if neg {
                self.pos += 1;
            }
            let (offset, value) = self.int("an integer exponent")?;
            let e: i64 = value
                .try_into()
                .map_err(|_| err_at(self.src, offset, "exponent out of range"))?;
            return Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn int(&mut self, what: &str) -> Result<(usize, BigInt), ParseError> {
        match self.next() {
            Some(Spanned { tok: Tok::Int(v), offset }) => Ok((offset, v)),
            Some(t) => Err(err_at(self.src, t.offset, format!("expected {}", what))),
            None => Err(err_at(self.src, self.eof_offset(), format!("expected {}", what))),
        }
    }

    fn small_index(&mut self, what: &str) -> Result<(usize, u16), ParseError> {
        let (offset, v) = self.int(what)?;
        let idx: u16 = v
            .try_into()
            .map_err(|_| err_at(self.src, offset, format!("{} out of range", what)))?;
        Ok((offset, idx))
    }

    /// Whitespace- or comma-separated index list.
    fn ints(&mut self) -> Result<Vec<(usize, u16)>, ParseError> {
        let mut out = vec![self.small_index("an index")?];
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Comma) => {
                    self.pos += 1;
                    out.push(self.small_index("an index")?);
                }
                Some(Tok::Int(_)) => {
                    out.push(self.small_index("an index")?);
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some(t) = self.next() else {
            return Err(err_at(self.src, self.eof_offset(), "expected an expression"));
        };
        match t.tok {
            Tok::Int(v) => Ok(Expr::Int(v)),
            Tok::Q => Ok(Expr::Q),
            Tok::X => {
                self.expect(Tok::LBrack, "'[' after X")?;
                let (ro, row) = self.small_index("a row index")?;
                if !(1..=self.m).contains(&row) {
                    return Err(err_at(self.src, ro, format!("row {} exceeds m = {}", row, self.m)));
                }
                self.expect(Tok::Comma, "',' between generator indices")?;
                let (co, col) = self.small_index("a column index")?;
                if !(1..=self.n).contains(&col) {
                    return Err(err_at(self.src, co, format!("column {} exceeds n = {}", col, self.n)));
                }
                self.expect(Tok::RBrack, "']' closing the generator")?;
                Ok(Expr::Gen { row, col })
            }
            Tok::LBrack => {
                let first = self.ints()?;
                let (rows, cols) = if matches!(self.peek(), Some(t) if t.tok == Tok::Pipe) {
                    self.pos += 1;
                    let second = self.ints()?;
                    (Some(first), second)
                } else {
                    (None, first)
                };
                self.expect(Tok::RBrack, "']' closing the minor")?;
                if let Some(rows) = &rows {
                    self.check_index_list(rows, self.m, "row")?;
                    self.check_index_list(&cols, self.n, "column")?;
                    if rows.len() != cols.len() {
                        return Err(err_at(
                            self.src,
                            t.offset,
                            "minor row and column sets must have equal size",
                        ));
                    }
                } else {
                    self.check_index_list(&cols, self.n, "column")?;
                    if cols.len() != self.m as usize {
                        return Err(err_at(
                            self.src,
                            t.offset,
                            format!("maximal minor needs {} columns, got {}", self.m, cols.len()),
                        ));
                    }
                }
                Ok(Expr::Minor {
                    rows: rows.map(|r| r.into_iter().map(|(_, v)| v).collect()),
                    cols: cols.into_iter().map(|(_, v)| v).collect(),
                })
            }
            Tok::LBrace => {
                let cols = self.ints()?;
                self.expect(Tok::RBrace, "'}' closing the brace")?;
                self.check_index_list(&cols, self.n, "column")?;
                if cols.len() != self.m as usize {
                    return Err(err_at(
                        self.src,
                        t.offset,
                        format!("brace needs {} columns, got {}", self.m, cols.len()),
                    ));
                }
                Ok(Expr::Brace { cols: cols.into_iter().map(|(_, v)| v).collect() })
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            other => Err(err_at(self.src, t.offset, format!("unexpected token {:?}", other))),
        }
    }

    fn check_index_list(
        &self,
        xs: &[(usize, u16)],
        bound: u16,
        what: &str,
    ) -> Result<(), ParseError> {
        for (offset, v) in xs {
            if !(1..=bound).contains(v) {
                return Err(err_at(
                    self.src,
                    *offset,
                    format!("{} index {} out of range 1..={}", what, v, bound),
                ));
            }
        }
        for w in xs.windows(2) {
            if w[0].1 >= w[1].1 {
                return Err(err_at(
                    self.src,
                    w[1].0,
                    format!("{} indices must be strictly increasing", what),
                ));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_product() {
        let e = parse_expr("X[2,1]*X[1,2]", 2, 4).unwrap();
        assert_eq!(
            e,
            Expr::Mul(
                Box::new(Expr::Gen { row: 2, col: 1 }),
                Box::new(Expr::Gen { row: 1, col: 2 })
            )
        );
    }

    #[test]
    fn tableau_difference() {
        let e = parse_expr("[1 2]*[3 4] - q^2*[3 4]*[1 2]", 2, 4).unwrap();
        match e {
            Expr::Sub(_, _) => {}
            other => panic!("expected a difference, got {:?}", other),
        }
    }

    #[test]
    fn juxtaposed_minors_multiply() {
        let a = parse_expr("[1 3][2 4]", 2, 4).unwrap();
        let b = parse_expr("[1 3]*[2 4]", 2, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unterminated_bracket_error_offset() {
        let err = parse_expr("[12", 2, 4).unwrap_err();
        assert_eq!(err.offset, 3);
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let err = parse_expr("X[3,1]", 2, 4).unwrap_err();
        assert!(err.message.contains("row 3"));
        let err = parse_expr("[1 5]", 2, 4).unwrap_err();
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn comma_and_space_lists_agree() {
        assert_eq!(parse_expr("[1,3]", 2, 4).unwrap(), parse_expr("[1 3]", 2, 4).unwrap());
    }

    #[test]
    fn bimino_and_braces() {
        let e = parse_expr("[1 2|1 3]", 2, 4).unwrap();
        assert_eq!(e, Expr::Minor { rows: Some(vec![1, 2]), cols: vec![1, 3] });
        let e = parse_expr("{1 3}", 2, 4).unwrap();
        assert_eq!(e, Expr::Brace { cols: vec![1, 3] });
    }

    #[test]
    fn negative_exponents_parse() {
        let e = parse_expr("q^-2", 2, 4).unwrap();
        assert_eq!(e, Expr::Pow(Box::new(Expr::Q), -2));
    }

    #[test]
    fn leading_minus() {
        let e = parse_expr("-q + 1", 2, 4).unwrap();
        match e {
            Expr::Add(l, _) => assert!(matches!(*l, Expr::Neg(_))),
            other => panic!("unexpected {:?}", other),
        }
    }
}
