use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::ratfunc::RatFunc;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// A matrix or polynomial coefficient: either an exact rational (coupling
/// fixed to a rational value) or a rational function of the symbol `A`.
///
/// The `std::ops` impls panic on mixed modes; use the `checked_*` methods
/// where operands come from outside.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Symbolic(RatFunc),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Symbolic(f) => f.is_zero(),
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Scalar::Symbolic(_))
    }

    /// Zero in the same mode as `self`.
    pub fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(Rational::zero()),
            Scalar::Symbolic(_) => Scalar::Symbolic(RatFunc::zero()),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Symbolic(_) => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match self {
            Scalar::Symbolic(f) => Some(f),
            Scalar::Rational(_) => None,
        }
    }

    /// Evaluates at a rational `A` (identity in rational mode).
    pub fn eval(&self, a: &Rational) -> Result<Rational> {
        match self {
            Scalar::Rational(r) => Ok(r.clone()),
            Scalar::Symbolic(f) => f.eval(a),
        }
    }

    /// Multiplies by a plain rational constant, staying in the same mode.
    pub fn scale(&self, c: &Rational) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r * c),
            Scalar::Symbolic(f) => Scalar::Symbolic(f.scale(c)),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => Ok(Scalar::Symbolic(a.add(b))),
            _ => Err(Error::MixedScalarMode),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a - b)),
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => Ok(Scalar::Symbolic(a.sub(b))),
            _ => Err(Error::MixedScalarMode),
        }
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => Ok(Scalar::Symbolic(a.mul(b))),
            _ => Err(Error::MixedScalarMode),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => {
                if b.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(a / b))
                }
            }
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => Ok(Scalar::Symbolic(a.div(b)?)),
            _ => Err(Error::MixedScalarMode),
        }
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("scalar {}: {e}", stringify!($method)))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Symbolic(f) => Scalar::Symbolic(f.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Symbolic(g) => write!(f, "{g}"),
        }
    }
}

/// Rationals go out as "p/q" strings, rational functions as `{"num", "den"}`.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Scalar::Rational(r) => rational::serialize(r, s),
            Scalar::Symbolic(f) => f.serialize(s),
        }
    }
}

/// Which sign of the square root in `A(λ)` and `β(λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

/// How the coupling `A` enters exact computations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coupling {
    /// `A` fixed to a rational value; scalars are [`Scalar::Rational`].
    Fixed(Rational),
    /// `A` kept as a formal symbol; scalars are [`Scalar::Symbolic`].
    Symbolic,
}

impl Coupling {
    pub fn fixed(a: Rational) -> Self {
        Coupling::Fixed(a)
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Coupling::Symbolic)
    }

    /// A constant in this coupling's scalar mode.
    pub fn constant(&self, c: Rational) -> Scalar {
        match self {
            Coupling::Fixed(_) => Scalar::Rational(c),
            Coupling::Symbolic => Scalar::Symbolic(RatFunc::constant(c)),
        }
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.constant(rational::int(n))
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.constant(Rational::one())
    }

    /// The coupling `A` as a scalar.
    pub fn a(&self) -> Scalar {
        match self {
            Coupling::Fixed(a) => Scalar::Rational(a.clone()),
            Coupling::Symbolic => Scalar::Symbolic(RatFunc::var()),
        }
    }

    /// `c0 + c1·A`
    pub fn linear(&self, c0: Rational, c1: Rational) -> Scalar {
        match self {
            Coupling::Fixed(a) => Scalar::Rational(c0 + c1 * a),
            Coupling::Symbolic => Scalar::Symbolic(RatFunc::from_poly(super::Poly::linear(c0, c1))),
        }
    }

    /// `1/A`, failing with `ZeroCoupling` for a fixed zero coupling.
    pub fn a_inverse(&self) -> Result<Scalar> {
        match self {
            Coupling::Fixed(a) if a.is_zero() => Err(Error::ZeroCoupling),
            Coupling::Fixed(a) => Ok(Scalar::Rational(Rational::one() / a)),
            Coupling::Symbolic => Ok(Scalar::Symbolic(RatFunc::var().recip()?)),
        }
    }

    /// Rejects a fixed `A = 0`.
    pub fn require_nonzero(&self) -> Result<()> {
        match self {
            Coupling::Fixed(a) if a.is_zero() => Err(Error::ZeroCoupling),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Coupling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coupling::Fixed(a) => write!(f, "{a}"),
            Coupling::Symbolic => f.write_str("symbolic"),
        }
    }
}

/// Floating-point couplings obtained from `λ`: `A(λ)` and `β(λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambdaCoupling {
    pub lambda: f64,
    pub branch: Branch,
    pub a: f64,
    pub beta: f64,
}

/// `A = ½(1 ± √(1+8λ²))`, `β = ½(1 − 4λ ± √(1+8λ²))` with the same sign.
pub fn coupling_from_lambda(lambda: f64, branch: Branch) -> LambdaCoupling {
    let root = (1.0 + 8.0 * lambda * lambda).sqrt();
    let s = branch.sign();
    LambdaCoupling {
        lambda,
        branch,
        a: 0.5 * (1.0 + s * root),
        beta: 0.5 * (1.0 - 4.0 * lambda + s * root),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::{frac, int};
    use crate::scalars::Poly;

    #[test]
    fn lambda_zero() {
        let plus = coupling_from_lambda(0.0, Branch::Plus);
        assert_eq!((plus.a, plus.beta), (1.0, 1.0));
        let minus = coupling_from_lambda(0.0, Branch::Minus);
        assert_eq!((minus.a, minus.beta), (0.0, 0.0));
    }

    #[test]
    fn lambda_one_plus() {
        // sqrt(9) = 3: A = 2, beta = (1 - 4 + 3)/2 = 0
        let c = coupling_from_lambda(1.0, Branch::Plus);
        assert_eq!(c.a, 2.0);
        assert_eq!(c.beta, 0.0);
        assert_eq!(c.a - 2.0 * c.lambda - c.beta, 0.0);
        let m = coupling_from_lambda(1.0, Branch::Minus);
        assert_eq!((m.a, m.beta), (-1.0, -3.0));
    }

    #[test]
    fn a_equals_two_lambda_plus_beta_on_grid() {
        for i in 0..100 {
            let lambda = -5.0 + 10.0 * i as f64 / 99.0;
            for branch in [Branch::Plus, Branch::Minus] {
                let c = coupling_from_lambda(lambda, branch);
                assert!((c.a - 2.0 * lambda - c.beta).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn mixed_modes_rejected() {
        let r = Scalar::Rational(int(1));
        let s = Scalar::Symbolic(RatFunc::var());
        assert_eq!(r.checked_add(&s), Err(Error::MixedScalarMode));
        assert_eq!(r.checked_div(&Scalar::Rational(int(0))), Err(Error::DivisionByZero));
    }

    #[test]
    fn arithmetic_in_both_modes() {
        let third = Scalar::Rational(frac(1, 3));
        let sixth = Scalar::Rational(frac(1, 6));
        assert_eq!(&third + &sixth, Scalar::Rational(frac(1, 2)));

        let two_a_over = Scalar::Symbolic(
            RatFunc::new(Poly::linear(int(0), int(2)), Poly::linear(int(1), int(1))).unwrap(),
        );
        let back = Scalar::Symbolic(RatFunc::new(Poly::linear(int(1), int(1)), Poly::constant(int(2))).unwrap());
        assert_eq!(&two_a_over * &back, Coupling::Symbolic.a());
    }

    #[test]
    fn coupling_constants() {
        let c = Coupling::Fixed(int(2));
        assert_eq!(c.linear(int(62), int(16)), Scalar::Rational(int(94)));
        assert_eq!(Coupling::Fixed(int(0)).a_inverse(), Err(Error::ZeroCoupling));
        assert_eq!(Coupling::Symbolic.linear(int(4), int(2)).to_string(), "4+2A");
    }
}
