use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Reduced rational function `num(A) / den(A)` with a monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds and reduces `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.degree() == Some(0) {
            let inv = Rational::one() / den.lead().unwrap();
            return RatFunc {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let inv = Rational::one() / den.lead().unwrap();
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// The coupling symbol `A`.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.degree() == Some(0) {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Value at `a`, or `DivisionByZero` when `a` is a pole.
    pub fn eval(&self, a: &Rational) -> Result<Rational> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(a) / d)
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // Cross-cancel first to keep intermediate degrees small.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = other.den.div_rem(&g1).0;
        let n2 = other.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        Self::reduce(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn recip(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `lim_{A→0}`; `None` if the function has a pole at 0.
    pub fn limit_at_zero(&self) -> Option<Rational> {
        let d = self.den.eval(&Rational::zero());
        if d.is_zero() {
            // Reduced, so the numerator does not vanish at 0.
            return None;
        }
        Some(self.num.eval(&Rational::zero()) / d)
    }

    /// `lim_{A→∞}`; `None` if the function grows without bound.
    pub fn limit_at_infinity(&self) -> Option<Rational> {
        let (Some(dn), Some(dd)) = (self.num.degree(), self.den.degree()) else {
            return Some(Rational::zero());
        };
        match dn.cmp(&dd) {
            std::cmp::Ordering::Less => Some(Rational::zero()),
            std::cmp::Ordering::Equal => Some(self.num.lead().unwrap() / self.den.lead().unwrap()),
            std::cmp::Ordering::Greater => None,
        }
    }
}

impl fmt::Display for RatFunc {
    /// `2A/(1+A)`, `4+2A`, `(1+A)/A`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write!(f, "{}", self.num);
        }
        let terms = |p: &Poly| p.coeffs().iter().filter(|c| !c.is_zero()).count();
        let num = if terms(&self.num) > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        let den = if terms(&self.den) > 1 {
            format!("({})", self.den)
        } else {
            self.den.to_string()
        };
        write!(f, "{num}/{den}")
    }
}

/// JSON wire form: `{"num": [c0, c1, ...], "den": [...], "text": "2A/(1+A)"}`
/// with "p/q" coefficients. `text` is for reading only and ignored on input.
#[derive(Serialize, Deserialize)]
struct RatFuncWire {
    num: Vec<String>,
    den: Vec<String>,
    #[serde(default, skip_deserializing)]
    text: String,
}

impl Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFuncWire {
            num: self.num.coeffs().iter().map(rational::to_pq).collect(),
            den: self.den.coeffs().iter().map(rational::to_pq).collect(),
            text: self.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = RatFuncWire::deserialize(d)?;
        let parse = |v: &[String]| -> std::result::Result<Poly, D::Error> {
            v.iter()
                .map(|s| rational::parse_rational(s))
                .collect::<Result<Vec<_>>>()
                .map(Poly::new)
                .map_err(serde::de::Error::custom)
        };
        RatFunc::new(parse(&wire.num)?, parse(&wire.den)?).map_err(serde::de::Error::custom)
    }
}
