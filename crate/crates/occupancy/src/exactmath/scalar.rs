use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};
use num_traits::One;

use super::ExactMathError;

/// Arbitrary-precision rational. `num` keeps these in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Exact scalar usable as a polynomial coefficient: a field with a decidable
/// sign. Implemented by [`Rat`] (the rationals) and [`Quad`] (Q(√15)).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Exact sign: -1, 0 or +1. Never goes through floating point.
    fn signum_exact(&self) -> i32;

    /// Embed a rational.
    fn from_rat(r: Rat) -> Self;

    /// Recover a rational if the value lies in Q.
    fn to_rat(&self) -> Option<Rat>;

    /// Parse the coefficient syntax used in serialized polynomials:
    /// `p/q` or `p/q+r/s*sqrt15` (also `-`, and integers without `/q`).
    fn parse_scalar(s: &str) -> Result<Self, ExactMathError>;
}

pub(crate) fn parse_rat(s: &str) -> Result<Rat, ExactMathError> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim())
                .map_err(|e| ExactMathError::Parse(format!("bad numerator {s:?}: {e}")))?;
            let q = BigInt::from_str(q.trim())
                .map_err(|e| ExactMathError::Parse(format!("bad denominator {s:?}: {e}")))?;
            if q.is_zero() {
                return Err(ExactMathError::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => BigInt::from_str(s)
            .map(Rat::from_integer)
            .map_err(|e| ExactMathError::Parse(format!("bad rational {s:?}: {e}"))),
    }
}

impl Scalar for Rat {
    fn signum_exact(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    fn from_rat(r: Rat) -> Self {
        r
    }

    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }

    fn parse_scalar(s: &str) -> Result<Self, ExactMathError> {
        if s.contains("sqrt15") {
            return Err(ExactMathError::Parse(format!(
                "irrational coefficient {s:?} in a rational context"
            )));
        }
        parse_rat(s)
    }
}

/// An element a + b·√15 of the real quadratic field Q(√15).
///
/// Values with `b = 0` are exactly the rationals, so Q embeds. The only
/// irrational quantity the toolkit needs is √(3/5) = √15/5, an interval
/// endpoint of one of the built-in certificates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quad {
    a: Rat,
    b: Rat,
}

impl Quad {
    pub fn new(a: Rat, b: Rat) -> Self {
        Quad { a, b }
    }

    /// √15 itself.
    pub fn sqrt15() -> Self {
        Quad::new(Rat::zero(), Rat::one())
    }

    /// √(3/5) = √15 / 5.
    pub fn sqrt_three_fifths() -> Self {
        Quad::new(Rat::zero(), Rat::new(BigInt::from(1), BigInt::from(5)))
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn radical_part(&self) -> &Rat {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl From<Rat> for Quad {
    fn from(r: Rat) -> Self {
        Quad::new(r, Rat::zero())
    }
}

impl Add for Quad {
    type Output = Quad;
    fn add(self, o: Quad) -> Quad {
        Quad::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Quad {
    type Output = Quad;
    fn sub(self, o: Quad) -> Quad {
        Quad::new(self.a - o.a, self.b - o.b)
    }
}

impl Mul for Quad {
    type Output = Quad;
    fn mul(self, o: Quad) -> Quad {
        let fifteen = Rat::from_integer(BigInt::from(15));
        Quad::new(
            &self.a * &o.a + fifteen * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad::new(-self.a, -self.b)
    }
}

impl Div for Quad {
    type Output = Quad;
    fn div(self, o: Quad) -> Quad {
        // 1/(a+b√15) = (a-b√15)/(a²-15b²); the norm vanishes only at 0
        // because 15 is not a rational square.
        let fifteen = Rat::from_integer(BigInt::from(15));
        let norm = &o.a * &o.a - fifteen * &o.b * &o.b;
        assert!(!norm.is_zero(), "division by zero in Q(\u{221a}15)");
        let conj = Quad::new(o.a.clone(), -o.b.clone());
        let prod = self * conj;
        Quad::new(prod.a / &norm, prod.b / &norm)
    }
}

impl Zero for Quad {
    fn zero() -> Self {
        Quad::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Quad {
    fn one() -> Self {
        Quad::new(Rat::one(), Rat::zero())
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "{}-{}*sqrt15", self.a, -self.b.clone())
        } else {
            write!(f, "{}+{}*sqrt15", self.a, self.b)
        }
    }
}

impl Scalar for Quad {
    fn signum_exact(&self) -> i32 {
        // Decide sign(a + b√15) by integer comparison of a² against 15b².
        let sa = self.a.signum_exact();
        let sb = self.b.signum_exact();
        match (sa, sb) {
            (0, s) | (s, 0) => s,
            (x, y) if x == y => x,
            _ => {
                let fifteen = Rat::from_integer(BigInt::from(15));
                let aa = &self.a * &self.a;
                let bb = fifteen * &self.b * &self.b;
                match aa.cmp(&bb) {
                    std::cmp::Ordering::Greater => sa,
                    std::cmp::Ordering::Less => sb,
                    // a² = 15b² with b ≠ 0 would make √15 rational.
                    std::cmp::Ordering::Equal => 0,
                }
            }
        }
    }

    fn from_rat(r: Rat) -> Self {
        Quad::new(r, Rat::zero())
    }

    fn to_rat(&self) -> Option<Rat> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn parse_scalar(s: &str) -> Result<Self, ExactMathError> {
        let s = s.trim();
        match s.split_once("*sqrt15") {
            None => Ok(Quad::from(parse_rat(s)?)),
            Some((head, tail)) => {
                if !tail.trim().is_empty() {
                    return Err(ExactMathError::Parse(format!(
                        "trailing garbage after sqrt15 term in {s:?}"
                    )));
                }
                // head is "a+b" or "a-b" or just "b" / "-b"; split at the last
                // +/- that is not a leading sign.
                let bytes = head.as_bytes();
                let mut split = None;
                for i in (1..bytes.len()).rev() {
                    if bytes[i] == b'+' || bytes[i] == b'-' {
                        split = Some(i);
                        break;
                    }
                }
                match split {
                    Some(i) => {
                        let a = parse_rat(&head[..i])?;
                        let sign = if bytes[i] == b'-' { -Rat::one() } else { Rat::one() };
                        let b = parse_rat(&head[i + 1..])? * sign;
                        Ok(Quad::new(a, b))
                    }
                    None => Ok(Quad::new(Rat::zero(), parse_rat(head)?)),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn sign_of_zero() {
        assert_eq!(Quad::zero().signum_exact(), 0);
        assert_eq!(Rat::zero().signum_exact(), 0);
    }

    #[test]
    fn sign_of_mixed_terms() {
        // -7 + 2√15 > 0 because (2√15)² = 60 > 49 = 7²
        let x = Quad::new(rat(-7, 1), rat(2, 1));
        assert_eq!(x.signum_exact(), 1);
        // -8 + 2√15 < 0 because 64 > 60
        let y = Quad::new(rat(-8, 1), rat(2, 1));
        assert_eq!(y.signum_exact(), -1);
        // 7 - 2√15 < 0
        let z = Quad::new(rat(7, 1), rat(-2, 1));
        assert_eq!(z.signum_exact(), -1);
    }

    #[test]
    fn sign_of_plain_rational() {
        assert_eq!(rat(11, 20).signum_exact(), 1);
        assert_eq!(Quad::from(rat(11, 20)).signum_exact(), 1);
        assert_eq!(rat(-1, 3).signum_exact(), -1);
    }

    #[test]
    fn quad_field_ops() {
        let x = Quad::new(rat(1, 2), rat(1, 3));
        let y = Quad::new(rat(-2, 1), rat(5, 7));
        let prod = x.clone() * y.clone();
        let back = prod / y;
        assert_eq!(back, x);
        let inv = Quad::one() / Quad::sqrt15();
        assert_eq!(inv, Quad::new(rat(0, 1), rat(1, 15)));
    }

    #[test]
    fn sqrt_three_fifths_squares_correctly() {
        let s = Quad::sqrt_three_fifths();
        assert_eq!(s.clone() * s, Quad::from(rat(3, 5)));
    }

    #[test]
    fn display_parse_round_trip() {
        for q in [
            Quad::new(rat(3, 16), rat(0, 1)),
            Quad::new(rat(-1, 2), rat(2, 5)),
            Quad::new(rat(0, 1), rat(-1, 5)),
            Quad::new(rat(7, 1), rat(-3, 4)),
        ] {
            let shown = q.to_string();
            assert_eq!(Quad::parse_scalar(&shown).unwrap(), q, "{shown}");
        }
        assert_eq!(Rat::parse_scalar("11/20").unwrap(), rat(11, 20));
        assert_eq!(Rat::parse_scalar("-4").unwrap(), rat(-4, 1));
        assert!(Rat::parse_scalar("1+1*sqrt15").is_err());
    }
}
