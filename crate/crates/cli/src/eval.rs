//! Evaluation of parsed expressions into algebra elements.

use num::{BigInt, BigRational};
use thiserror::Error;

use qgr_core::coeff::{CoeffError, Scalar};
use qgr_core::dehom::{DhomElem, DhomError};
use qgr_core::grassmann::{GrassAmbient, GrassElem, GrassError, IndexSet};
use qgr_core::qmatrix::{quantum_minor, Ambient, GenIndex, MatAlgElem, QMatrixError};

use crate::expr::Expr;

/// Which algebra the expression lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    Matrix,
    Grass,
    Dhom,
}

#[derive(Clone, Debug)]
pub enum Value {
    Scalar(Scalar),
    Mat(MatAlgElem),
    Grass(GrassElem),
    Dhom(DhomElem),
}

#[derive(Debug, Clone, Error)]
pub enum EvalError {
    #[error("{0}")]
    Message(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Matrix(#[from] QMatrixError),
    #[error(transparent)]
    Grass(#[from] GrassError),
    #[error(transparent)]
    Dhom(#[from] DhomError),
}

fn msg(s: impl Into<String>) -> EvalError {
    EvalError::Message(s.into())
}

pub struct Evaluator {
    pub m: u16,
    pub n: u16,
    pub context: Context,
}

impl Evaluator {
    pub fn new(m: u16, n: u16, context: Context) -> Self {
        Evaluator { m, n, context }
    }

    fn mat_ambient(&self) -> Ambient {
        Ambient::new(self.m, self.n)
    }

    fn grass_ambient(&self) -> GrassAmbient {
        GrassAmbient::new(self.m, self.n)
    }

    pub fn eval(&self, e: &Expr) -> Result<Value, EvalError> {
        match e {
            Expr::Int(v) => Ok(Value::Scalar(Scalar::from_rational(BigRational::from_integer(
                v.clone(),
            )))),
            Expr::Q => Ok(Value::Scalar(Scalar::q_pow(1))),
            Expr::Gen { row, col } => {
                if self.context != Context::Matrix {
                    return Err(msg("generators X[i,j] only live in the matrix algebra"));
                }
                Ok(Value::Mat(MatAlgElem::generator(
                    self.mat_ambient(),
                    GenIndex::new(*row, *col),
                )?))
            }
            Expr::Minor { rows, cols } => self.eval_minor(rows.as_deref(), cols),
            Expr::Brace { cols } => {
                if self.context != Context::Dhom {
                    return Err(msg("brace literals only live in the dehomogenisation"));
                }
                let set = IndexSet::new(cols.clone()).map_err(EvalError::Grass)?;
                Ok(Value::Dhom(DhomElem::brace(self.grass_ambient(), set)?))
            }
            Expr::Neg(inner) => Ok(self.neg(self.eval(inner)?)),
            Expr::Add(a, b) => self.add(self.eval(a)?, self.eval(b)?, false),
            Expr::Sub(a, b) => self.add(self.eval(a)?, self.eval(b)?, true),
            Expr::Mul(a, b) => self.mul(self.eval(a)?, self.eval(b)?),
            Expr::Div(a, b) => self.div(self.eval(a)?, self.eval(b)?),
            Expr::Pow(base, exp) => self.pow(self.eval(base)?, *exp),
        }
    }

    fn eval_minor(&self, rows: Option<&[u16]>, cols: &[u16]) -> Result<Value, EvalError> {
        match self.context {
            Context::Matrix => {
                let default_rows: Vec<u16> = (1..=self.m).collect();
                let rows = rows.map(|r| r.to_vec()).unwrap_or(default_rows);
                Ok(Value::Mat(quantum_minor(self.mat_ambient(), &rows, cols)?))
            }
            Context::Grass | Context::Dhom => {
                if rows.is_some() {
                    return Err(msg(
                        "row-qualified minors only live in the matrix algebra (use [cols])",
                    ));
                }
                let set = IndexSet::new(cols.to_vec()).map_err(EvalError::Grass)?;
                let g = GrassElem::generator(self.grass_ambient(), set)?;
                if self.context == Context::Grass {
                    Ok(Value::Grass(g))
                } else {
                    Ok(Value::Dhom(DhomElem::from_numerator(g, 0)?))
                }
            }
        }
    }

    fn promote(&self, v: Value, like: &Value) -> Result<Value, EvalError> {
        match (v, like) {
            (Value::Scalar(s), Value::Mat(_)) => {
                Ok(Value::Mat(MatAlgElem::from_scalar(self.mat_ambient(), s)))
            }
            (Value::Scalar(s), Value::Grass(_)) => {
                Ok(Value::Grass(GrassElem::from_scalar(self.grass_ambient(), s)))
            }
            (Value::Scalar(s), Value::Dhom(_)) => {
                Ok(Value::Dhom(DhomElem::one(self.grass_ambient()).scale(&s)))
            }
            (v, _) => Ok(v),
        }
    }

    fn neg(&self, v: Value) -> Value {
        match v {
            Value::Scalar(s) => Value::Scalar(-&s),
            Value::Mat(e) => Value::Mat(e.neg()),
            Value::Grass(e) => Value::Grass(e.neg()),
            Value::Dhom(e) => Value::Dhom(e.neg()),
        }
    }

    fn add(&self, a: Value, b: Value, subtract: bool) -> Result<Value, EvalError> {
        let a = self.promote(a, &b)?;
        let b = self.promote(b, &a)?;
        let b = if subtract { self.neg(b) } else { b };
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x + &y)),
            (Value::Mat(x), Value::Mat(y)) => Ok(Value::Mat(x.add(&y)?)),
            (Value::Grass(x), Value::Grass(y)) => Ok(Value::Grass(x.add(&y)?)),
            (Value::Dhom(x), Value::Dhom(y)) => Ok(Value::Dhom(x.add(&y)?)),
            _ => Err(msg("cannot mix element kinds in a sum")),
        }
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value, EvalError> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
            (Value::Scalar(x), Value::Mat(y)) | (Value::Mat(y), Value::Scalar(x)) => {
                Ok(Value::Mat(y.scale(&x)))
            }
            (Value::Scalar(x), Value::Grass(y)) | (Value::Grass(y), Value::Scalar(x)) => {
                Ok(Value::Grass(y.scale(&x)))
            }
            (Value::Scalar(x), Value::Dhom(y)) | (Value::Dhom(y), Value::Scalar(x)) => {
                Ok(Value::Dhom(y.scale(&x)))
            }
            (Value::Mat(x), Value::Mat(y)) => Ok(Value::Mat(x.mul(&y)?)),
            (Value::Grass(x), Value::Grass(y)) => Ok(Value::Grass(x.mul(&y)?)),
            (Value::Dhom(x), Value::Dhom(y)) => Ok(Value::Dhom(x.mul(&y)?)),
            _ => Err(msg("cannot mix element kinds in a product")),
        }
    }

    fn div(&self, a: Value, b: Value) -> Result<Value, EvalError> {
        let Value::Scalar(d) = b else {
            return Err(msg("division requires a scalar divisor"));
        };
        let inv = d.inv()?;
        self.mul(a, Value::Scalar(inv))
    }

    fn pow(&self, base: Value, exp: i64) -> Result<Value, EvalError> {
        match base {
            Value::Scalar(s) => Ok(Value::Scalar(s.pow(exp)?)),
            Value::Mat(e) => {
                if exp < 0 {
                    return Err(msg("negative powers are only defined for scalars"));
                }
                Ok(Value::Mat(e.pow(exp as u32)?))
            }
            Value::Grass(e) => {
                if exp < 0 {
                    return Err(msg("negative powers are only defined for scalars"));
                }
                Ok(Value::Grass(e.pow(exp as u32)?))
            }
            Value::Dhom(e) => {
                if exp >= 0 {
                    return Ok(Value::Dhom(e.pow(exp as u32)?));
                }
                // Negative powers exist only for the top minor.
                let amb = self.grass_ambient();
                let top = DhomElem::from_numerator(
                    GrassElem::generator(amb, amb.top_set())?,
                    0,
                )?;
                if e != top {
                    return Err(msg(
                        "negative powers are only defined for q, scalars, and the top minor",
                    ));
                }
                Ok(Value::Dhom(DhomElem::b_inverse_power(amb, (-exp) as u32)))
            }
        }
    }
}

/// Evaluate every scalar coefficient at a rational point, for display.
pub fn value_at(v: &Value, q0: &BigRational) -> Result<Value, EvalError> {
    let at = |c: &Scalar| -> Result<Scalar, EvalError> {
        Ok(Scalar::from_rational(c.eval(q0)?))
    };
    Ok(match v {
        Value::Scalar(s) => Value::Scalar(at(s)?),
        Value::Mat(e) => {
            let mut out = MatAlgElem::zero(e.ambient());
            for (mono, c) in e.terms() {
                let base = MatAlgElem::normal_form(
                    e.ambient(),
                    &qgr_core::qmatrix::Word::new(mono.factors()),
                    qgr_core::qmatrix::ReductionStrategy::Leftmost,
                )?;
                out = out.add(&base.scale(&at(c)?))?;
            }
            Value::Mat(out)
        }
        Value::Grass(e) => {
            let mut out = GrassElem::zero(e.ambient());
            for (t, c) in e.terms() {
                out = out.add(&GrassElem::from_tableau(e.ambient(), t.clone()).scale(&at(c)?))?;
            }
            Value::Grass(out)
        }
        Value::Dhom(e) => {
            let mut out = DhomElem::zero(e.ambient());
            for (power, g) in e.parts() {
                let mut part = GrassElem::zero(g.ambient());
                for (t, c) in g.terms() {
                    part = part
                        .add(&GrassElem::from_tableau(g.ambient(), t.clone()).scale(&at(c)?))?;
                }
                out = out.add(&DhomElem::from_numerator(part, power)?)?;
            }
            Value::Dhom(out)
        }
    })
}

/// Parse a rational like `2`, `1/2`, or `-3/5` for the evaluation flag.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let parts: Vec<&str> = text.split('/').collect();
    let parse_int = |s: &str| -> Result<BigInt, String> {
        s.trim().parse().map_err(|_| format!("bad integer '{}'", s))
    };
    match parts.as_slice() {
        [n] => Ok(BigRational::from_integer(parse_int(n)?)),
        [n, d] => {
            let den = parse_int(d)?;
            if den == BigInt::from(0) {
                return Err("zero denominator".to_string());
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
        _ => Err(format!("cannot parse rational '{}'", text)),
    }
}

pub fn display_value(v: &Value) -> String {
    match v {
        Value::Scalar(s) => s.to_string(),
        Value::Mat(e) => e.to_string(),
        Value::Grass(e) => e.to_string(),
        Value::Dhom(e) => e.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;

    fn eval_str(src: &str, m: u16, n: u16, ctx: Context) -> Result<Value, EvalError> {
        let e = parse_expr(src, m, n).map_err(|e| msg(e.to_string()))?;
        Evaluator::new(m, n, ctx).eval(&e)
    }

    #[test]
    fn matrix_relation_evaluates_to_zero() {
        let v = eval_str("X[1,1]*X[1,2] - q*X[1,2]*X[1,1]", 2, 2, Context::Matrix).unwrap();
        match v {
            Value::Mat(e) => assert!(e.is_zero()),
            _ => panic!("expected a matrix element"),
        }
    }

    #[test]
    fn grass_pluecker_is_formally_nonzero() {
        let v = eval_str("[1 2][3 4] - q[1 3][2 4] + q^2[1 4][2 3]", 2, 4, Context::Grass).unwrap();
        match v {
            Value::Grass(e) => {
                assert_eq!(e.num_terms(), 3);
                assert!(e.embed().unwrap().is_zero());
            }
            _ => panic!("expected a Grassmannian element"),
        }
    }

    #[test]
    fn dehom_braces_and_inverse_top() {
        let v = eval_str("[1 3]*[3 4]^-1", 2, 4, Context::Dhom).unwrap();
        let w = eval_str("{1 3}", 2, 4, Context::Dhom).unwrap();
        match (v, w) {
            (Value::Dhom(a), Value::Dhom(b)) => assert_eq!(a, b),
            _ => panic!("expected localized elements"),
        }
    }

    #[test]
    fn negative_power_of_non_top_minor_fails() {
        assert!(eval_str("[1 3]^-1", 2, 4, Context::Dhom).is_err());
        assert!(eval_str("{1 3}", 2, 4, Context::Grass).is_err());
        assert!(eval_str("X[1,1]", 2, 4, Context::Grass).is_err());
    }

    #[test]
    fn scalar_division() {
        let v = eval_str("(q^2 - 1)/q", 2, 4, Context::Matrix).unwrap();
        match v {
            Value::Scalar(s) => {
                assert_eq!(s, &Scalar::q_pow(1) - &Scalar::q_pow(-1));
            }
            _ => panic!("expected a scalar"),
        }
    }
}
