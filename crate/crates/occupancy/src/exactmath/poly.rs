use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use super::scalar::{Quad, Rat, Scalar};
use super::ExactMathError;

/// Default cap on the Pólya exponent tried by [`Poly::nonneg_on_halfline`].
pub const DEFAULT_POLYA_LIMIT: u32 = 64;

/// Formal variable of a univariate polynomial. `Lambda` is the fugacity,
/// `T` the auxiliary variable of the interval substitution λ = (a+bt)/(1+t).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize)]
pub enum Var {
    Lambda,
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Lambda => write!(f, "\u{3bb}"),
            Var::T => write!(f, "t"),
        }
    }
}

/// Dense univariate polynomial, coefficients in ascending degree.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<S> {
    var: Var,
    coeffs: Vec<S>,
}

/// Outcome of the half-line nonnegativity check.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Positivity {
    IdenticallyZero,
    NonnegCoeffs,
    PolyaPositive(u32),
    Indeterminate,
}

impl<S: Scalar> Poly<S> {
    pub fn new(var: Var, mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: S) -> Self {
        Poly::new(var, vec![c])
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(var, S::one())
    }

    /// The monomial `x` in the given variable.
    pub fn x(var: Var) -> Self {
        Poly::new(var, vec![S::zero(), S::one()])
    }

    pub fn from_integers(var: Var, ints: &[i64]) -> Self {
        Poly::new(
            var,
            ints.iter()
                .map(|&k| S::from_rat(Rat::from_integer(k.into())))
                .collect(),
        )
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&S> {
        self.coeffs.last()
    }

    fn check_var(&self, other: &Self) -> Result<(), ExactMathError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(ExactMathError::VariableMismatch(self.var, other.var))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactMathError> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Ok(Poly::new(self.var, out))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactMathError> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Ok(Poly::new(self.var, out))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactMathError> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.var));
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Poly::new(self.var, out))
    }

    pub fn scale(&self, c: &S) -> Self {
        Poly::new(
            self.var,
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        )
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![S::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Poly::new(self.var, out)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let out: Vec<S> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| {
                let k = S::from_rat(Rat::from_integer((k as i64).into()));
                k * c.clone()
            })
            .collect();
        Poly::new(self.var, out)
    }

    /// Exact division: returns `r` with `self = divisor * r`, or
    /// [`ExactMathError::NotDivisible`] when a remainder is left.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, ExactMathError> {
        self.check_var(divisor)?;
        if divisor.is_zero() {
            return Err(ExactMathError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero(self.var));
        }
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactMathError::NotDivisible)
        }
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead = divisor.leading_coeff().unwrap().clone();
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quo: Vec<S> = Vec::new();
        while rem.len() > ddeg && !rem.is_empty() {
            let c = rem.last().unwrap().clone() / dlead.clone();
            let pos = rem.len() - 1 - ddeg;
            if quo.len() < pos + 1 {
                quo.resize(pos + 1, S::zero());
            }
            quo[pos] = c.clone();
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[pos + i] = rem[pos + i].clone() - c.clone() * b.clone();
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(self.var, quo), Poly::new(self.var, rem))
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divide through by the leading coefficient (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lead) => {
                let inv = S::one() / lead.clone();
                self.scale(&inv)
            }
        }
    }

    /// Certify nonnegativity on [0, ∞): identically zero, visibly nonnegative
    /// coefficients, or positive after multiplying by (1+x)^k for some
    /// k ≤ `polya_limit` (Pólya's trick). `Indeterminate` means no certificate
    /// was found, not that the polynomial is negative somewhere.
    pub fn nonneg_on_halfline(&self, polya_limit: u32) -> Positivity {
        if self.is_zero() {
            return Positivity::IdenticallyZero;
        }
        let nonneg = |p: &Poly<S>| p.coeffs.iter().all(|c| c.signum_exact() >= 0);
        if nonneg(self) {
            return Positivity::NonnegCoeffs;
        }
        let one_plus_x = Poly::new(self.var, vec![S::one(), S::one()]);
        let mut cur = self.clone();
        for k in 1..=polya_limit {
            cur = &cur * &one_plus_x;
            if nonneg(&cur) {
                return Positivity::PolyaPositive(k);
            }
        }
        Positivity::Indeterminate
    }

    /// Serialize as `deg k: c0 c1 ... ck` (the zero polynomial as `deg -1:`).
    pub fn serialize_line(&self) -> String {
        match self.degree() {
            None => "deg -1:".to_string(),
            Some(d) => {
                let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
                format!("deg {}: {}", d, cs.join(" "))
            }
        }
    }

    pub fn parse_line(var: Var, line: &str) -> Result<Self, ExactMathError> {
        let rest = line
            .trim()
            .strip_prefix("deg")
            .ok_or_else(|| ExactMathError::Parse(format!("missing `deg` in {line:?}")))?;
        let (d, cs) = rest
            .split_once(':')
            .ok_or_else(|| ExactMathError::Parse(format!("missing `:` in {line:?}")))?;
        let d: i64 = d
            .trim()
            .parse()
            .map_err(|e| ExactMathError::Parse(format!("bad degree in {line:?}: {e}")))?;
        let coeffs: Vec<S> = cs
            .split_whitespace()
            .map(S::parse_scalar)
            .collect::<Result<_, _>>()?;
        if d < 0 && !coeffs.is_empty() || d >= 0 && coeffs.len() != (d as usize) + 1 {
            return Err(ExactMathError::Parse(format!(
                "degree {} does not match {} coefficients",
                d,
                coeffs.len()
            )));
        }
        Ok(Poly::new(var, coeffs))
    }
}

impl Poly<Rat> {
    /// Embed a rational polynomial into Q(√15).
    pub fn embed_quad(&self) -> Poly<Quad> {
        Poly::new(
            self.var,
            self.coeffs.iter().map(|c| Quad::from(c.clone())).collect(),
        )
    }
}

/// Substitute λ = (a + b·t)/(1 + t) into `p`, clearing denominators:
/// returns `(N, d)` with p(λ(t)) = N(t)/(1+t)^d and d = deg p.
///
/// For 0 ≤ a ≤ b this parametrizes λ over [a, b) as t runs over [0, ∞).
pub fn mobius_substitute<S: Scalar>(p: &Poly<S>, a: &S, b: &S) -> (Poly<S>, usize) {
    assert_eq!(p.var(), Var::Lambda, "interval substitution expects a \u{3bb}-polynomial");
    assert!(
        a.signum_exact() >= 0 && (b.clone() - a.clone()).signum_exact() >= 0,
        "interval substitution needs 0 <= a <= b"
    );
    let d = match p.degree() {
        None => return (Poly::zero(Var::T), 0),
        Some(d) => d,
    };
    let lin_ab = Poly::new(Var::T, vec![a.clone(), b.clone()]);
    let lin_1t = Poly::new(Var::T, vec![S::one(), S::one()]);
    // Power tables keep this O(d^3) worst case, fine for the degrees here.
    let mut pow_ab = Vec::with_capacity(d + 1);
    let mut pow_1t = Vec::with_capacity(d + 1);
    pow_ab.push(Poly::one(Var::T));
    pow_1t.push(Poly::one(Var::T));
    for k in 1..=d {
        pow_ab.push(&pow_ab[k - 1] * &lin_ab);
        pow_1t.push(&pow_1t[k - 1] * &lin_1t);
    }
    let mut acc = Poly::zero(Var::T);
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = pow_ab[k].scale(c);
        acc = &acc + &(&term * &pow_1t[d - k]);
    }
    (acc, d)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, S: Scalar> $trait<&'a Poly<S>> for &'a Poly<S> {
            type Output = Poly<S>;
            fn $method(self, other: &'a Poly<S>) -> Poly<S> {
                self.$checked(other).expect("polynomial variable mismatch")
            }
        }
        impl<S: Scalar> $trait for Poly<S> {
            type Output = Poly<S>;
            fn $method(self, other: Poly<S>) -> Poly<S> {
                (&self).$method(&other)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        let var = self.var;
        Poly::new(var, self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Rat;
    use num::BigInt;
    use num_traits::One;

    fn qp(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_integers(Var::Lambda, coeffs)
    }

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn mul_and_normalize() {
        let p = qp(&[1, 1]);
        assert_eq!(&p * &p, qp(&[1, 2, 1]));
        assert_eq!(&p - &p, Poly::zero(Var::Lambda));
        assert_eq!((&p - &p).degree(), None);
    }

    #[test]
    fn petersen_occupancy_numerator_expansion() {
        // λ(1+6λ+9λ²+2λ³) = λ+6λ²+9λ³+2λ⁴
        let inner = qp(&[1, 6, 9, 2]);
        let expanded = inner.shift_up(1);
        assert_eq!(expanded, qp(&[0, 1, 6, 9, 2]));
        assert_eq!(&Poly::x(Var::Lambda) * &inner, expanded);
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let p = qp(&[1, 1]);
        let t = Poly::<Rat>::from_integers(Var::T, &[1, 1]);
        assert_eq!(
            p.checked_add(&t),
            Err(ExactMathError::VariableMismatch(Var::Lambda, Var::T))
        );
    }

    #[test]
    fn div_exact_cases() {
        // (λ²-1)/(λ-1) = λ+1
        let num = qp(&[-1, 0, 1]);
        let den = qp(&[-1, 1]);
        assert_eq!(num.div_exact(&den).unwrap(), qp(&[1, 1]));
        // p/1 = p
        let p = qp(&[3, 0, 7, 2]);
        assert_eq!(p.div_exact(&Poly::one(Var::Lambda)).unwrap(), p);
        // (λ+6λ²+9λ³+2λ⁴)/λ
        let n = qp(&[0, 1, 6, 9, 2]);
        assert_eq!(n.div_exact(&Poly::x(Var::Lambda)).unwrap(), qp(&[1, 6, 9, 2]));
        // remainder case
        assert_eq!(
            qp(&[1, 0, 1]).div_exact(&qp(&[-1, 1])),
            Err(ExactMathError::NotDivisible)
        );
    }

    #[test]
    fn eval_and_derivative() {
        // sum of Heawood coefficients
        let ph = qp(&[1, 14, 70, 154, 147, 56, 14, 2]);
        assert_eq!(ph.eval(&rat(1, 1)), rat(458, 1));
        let pp = qp(&[1, 10, 30, 30, 5]);
        assert_eq!(pp.eval(&rat(1, 1)), rat(76, 1));
        assert_eq!(pp.derivative(), qp(&[10, 60, 90, 20]));
    }

    #[test]
    fn mobius_examples() {
        // λ with (a,b) = (0, 3/16): N = (3/16)t, power 1
        let (n, d) = mobius_substitute(&qp(&[0, 1]), &rat(0, 1), &rat(3, 16));
        assert_eq!(d, 1);
        assert_eq!(n, Poly::new(Var::T, vec![rat(0, 1), rat(3, 16)]));
        // λ with (a,b) = (√(3/5), 1): N = √15/5 + t
        let lam = Poly::<Quad>::from_integers(Var::Lambda, &[0, 1]);
        let (n, d) = mobius_substitute(&lam, &Quad::sqrt_three_fifths(), &Quad::one());
        assert_eq!(d, 1);
        assert_eq!(
            n,
            Poly::new(Var::T, vec![Quad::sqrt_three_fifths(), Quad::one()])
        );
        // constants pass through with power 0
        let (n, d) = mobius_substitute(&qp(&[7]), &rat(1, 2), &rat(3, 4));
        assert_eq!((n, d), (Poly::from_integers(Var::T, &[7]), 0));
    }

    #[test]
    fn nonneg_verdicts() {
        assert_eq!(
            Poly::<Rat>::zero(Var::Lambda).nonneg_on_halfline(DEFAULT_POLYA_LIMIT),
            Positivity::IdenticallyZero
        );
        // λ⁶(2λ⁵+11λ⁴+30λ³+41λ²+20λ+3)
        let p = qp(&[3, 20, 41, 30, 11, 2]).shift_up(6);
        assert_eq!(
            p.nonneg_on_halfline(DEFAULT_POLYA_LIMIT),
            Positivity::NonnegCoeffs
        );
        assert_eq!(
            qp(&[-1, 1]).nonneg_on_halfline(DEFAULT_POLYA_LIMIT),
            Positivity::Indeterminate
        );
        // (1+x)²-ish mix that needs one Pólya round: (1-x+x²)... stays mixed;
        // x²+2x-... use a genuinely positive example: 3x²-2x+1 > 0 on [0,∞)
        let p = qp(&[1, -2, 3]);
        match p.nonneg_on_halfline(DEFAULT_POLYA_LIMIT) {
            Positivity::PolyaPositive(k) => assert!(k >= 1),
            v => panic!("expected a P\u{f3}lya certificate, got {v:?}"),
        }
    }

    #[test]
    fn serialization_round_trip() {
        let p = qp(&[1, -14, 0, 154]).scale(&rat(1, 3));
        let line = p.serialize_line();
        assert_eq!(Poly::<Rat>::parse_line(Var::Lambda, &line).unwrap(), p);
        let z = Poly::<Rat>::zero(Var::Lambda);
        assert_eq!(
            Poly::<Rat>::parse_line(Var::Lambda, &z.serialize_line()).unwrap(),
            z
        );
    }
}
