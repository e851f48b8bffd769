use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::{Poly, Var};
use super::scalar::Scalar;
use super::ExactMathError;

/// Rational function num/den. When `reduced` the gcd is constant and the
/// denominator is monic, so equal functions have equal representations.
#[derive(Clone, Debug)]
pub struct RatFunc<S> {
    num: Poly<S>,
    den: Poly<S>,
    reduced: bool,
}

impl<S: Scalar> RatFunc<S> {
    pub fn new(num: Poly<S>, den: Poly<S>) -> Result<Self, ExactMathError> {
        if den.is_zero() {
            return Err(ExactMathError::DivisionByZero);
        }
        if num.var() != den.var() {
            return Err(ExactMathError::VariableMismatch(num.var(), den.var()));
        }
        Ok(RatFunc { num, den, reduced: false }.reduce())
    }

    /// Keep the given representation as-is (certificate work wants control
    /// over denominator factorizations).
    pub fn new_unreduced(num: Poly<S>, den: Poly<S>) -> Result<Self, ExactMathError> {
        if den.is_zero() {
            return Err(ExactMathError::DivisionByZero);
        }
        if num.var() != den.var() {
            return Err(ExactMathError::VariableMismatch(num.var(), den.var()));
        }
        Ok(RatFunc { num, den, reduced: false })
    }

    pub fn from_poly(p: Poly<S>) -> Self {
        let var = p.var();
        RatFunc { num: p, den: Poly::one(var), reduced: true }
    }

    pub fn zero(var: Var) -> Self {
        RatFunc::from_poly(Poly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        RatFunc::from_poly(Poly::one(var))
    }

    pub fn num(&self) -> &Poly<S> {
        &self.num
    }

    pub fn den(&self) -> &Poly<S> {
        &self.den
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Remove the gcd and normalize the denominator to be monic.
    pub fn reduce(&self) -> Self {
        if self.reduced {
            return self.clone();
        }
        if self.num.is_zero() {
            return RatFunc {
                num: Poly::zero(self.num.var()),
                den: Poly::one(self.num.var()),
                reduced: true,
            };
        }
        let g = self.num.gcd(&self.den);
        let (num, den) = if g.degree() == Some(0) {
            (self.num.clone(), self.den.clone())
        } else {
            (
                self.num.div_exact(&g).expect("gcd divides numerator"),
                self.den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lead = den.leading_coeff().expect("nonzero denominator").clone();
        let inv = S::one() / lead;
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
            reduced: true,
        }
    }

    pub fn eval(&self, x: &S) -> Result<S, ExactMathError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ExactMathError::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn recip(&self) -> Result<Self, ExactMathError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

impl<S: Scalar> PartialEq for RatFunc<S> {
    fn eq(&self, other: &Self) -> bool {
        // cross-multiplied equality, independent of representation
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<'a, S: Scalar> Add<&'a RatFunc<S>> for &'a RatFunc<S> {
    type Output = RatFunc<S>;
    fn add(self, o: &'a RatFunc<S>) -> RatFunc<S> {
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        RatFunc::new(num, &self.den * &o.den).expect("nonzero denominators")
    }
}

impl<'a, S: Scalar> Sub<&'a RatFunc<S>> for &'a RatFunc<S> {
    type Output = RatFunc<S>;
    fn sub(self, o: &'a RatFunc<S>) -> RatFunc<S> {
        let num = &(&self.num * &o.den) - &(&o.num * &self.den);
        RatFunc::new(num, &self.den * &o.den).expect("nonzero denominators")
    }
}

impl<'a, S: Scalar> Mul<&'a RatFunc<S>> for &'a RatFunc<S> {
    type Output = RatFunc<S>;
    fn mul(self, o: &'a RatFunc<S>) -> RatFunc<S> {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominators")
    }
}

impl<'a, S: Scalar> Div<&'a RatFunc<S>> for &'a RatFunc<S> {
    type Output = RatFunc<S>;
    fn div(self, o: &'a RatFunc<S>) -> RatFunc<S> {
        assert!(!o.is_zero(), "division by the zero rational function");
        RatFunc::new(&self.num * &o.den, &self.den * &o.num).expect("nonzero denominators")
    }
}

impl<S: Scalar> Neg for RatFunc<S> {
    type Output = RatFunc<S>;
    fn neg(self) -> RatFunc<S> {
        RatFunc { num: -self.num, den: self.den, reduced: self.reduced }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl<S: Scalar> $trait for RatFunc<S> {
            type Output = RatFunc<S>;
            fn $method(self, o: RatFunc<S>) -> RatFunc<S> {
                (&self).$method(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl<S: Scalar> fmt::Display for RatFunc<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Rat;
    use num::BigInt;

    fn qp(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_integers(Var::Lambda, coeffs)
    }

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn reduce_removes_common_factor() {
        // (λ²-1)/(λ-1) -> (λ+1)/1
        let r = RatFunc::new(qp(&[-1, 0, 1]), qp(&[-1, 1])).unwrap();
        assert_eq!(r.num(), &qp(&[1, 1]));
        assert_eq!(r.den(), &Poly::one(Var::Lambda));
        // (2λ)/4 -> λ/2 (monic denominator normalization gives (1/2)λ / 1)
        let r = RatFunc::new(qp(&[0, 2]), qp(&[4])).unwrap();
        assert_eq!(r, RatFunc::new(qp(&[0, 1]), qp(&[2])).unwrap());
    }

    #[test]
    fn arithmetic_and_equality() {
        let a = RatFunc::new(qp(&[0, 1]), qp(&[1, 2])).unwrap(); // λ/(1+2λ)
        let b = RatFunc::new(qp(&[1]), qp(&[1, 2])).unwrap(); // 1/(1+2λ)
        let s = &a + &b;
        assert_eq!(s, RatFunc::new(qp(&[1, 1]), qp(&[1, 2])).unwrap());
        let p = &a * &b;
        assert_eq!(p, RatFunc::new(qp(&[0, 1]), qp(&[1, 4, 4])).unwrap());
        let d = &a / &a;
        assert_eq!(d, RatFunc::one(Var::Lambda));
        assert_eq!(s.eval(&rat(1, 1)).unwrap(), rat(2, 3));
    }

    #[test]
    fn heawood_occupancy_is_already_reduced() {
        let num = qp(&[1, 10, 33, 42, 20, 6, 1]).shift_up(1);
        let den = qp(&[1, 14, 70, 154, 147, 56, 14, 2]);
        let g = num.gcd(&den);
        assert_eq!(g.degree(), Some(0));
        let r = RatFunc::new(num.clone(), den.clone()).unwrap();
        // reduction only rescales to a monic denominator
        assert_eq!(r, RatFunc::new_unreduced(num, den).unwrap());
    }
}
