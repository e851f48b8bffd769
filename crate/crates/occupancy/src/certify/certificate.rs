use std::collections::BTreeMap;


use thiserror::Error;

use crate::exactmath::{ExactMathError, Poly, Quad, Rat, RatFunc, Scalar, Var};
use crate::graphs::NamedGraphId;
use crate::localview::GirthClass;
use crate::lp::Sense;
use crate::QPoly;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CertifyError {
    #[error("unknown certificate {0:?}")]
    UnknownCertificate(String),
    #[error("certificate is broken: {0}")]
    Broken(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Math(#[from] ExactMathError),
    #[error("the tight system is singular")]
    SingularSystem,
}

/// A dual-feasibility certificate: the target occupancy function, the three
/// dual multipliers as rational functions of λ, and the λ-interval on which
/// nonnegativity of every slack is claimed (`None` = all λ > 0).
///
/// The Λ's are stored unreduced with their denominators as given, so slack
/// numerators can be formed over a once-certified positive denominator.
#[derive(Clone, Debug)]
pub struct DualCertificate {
    pub name: String,
    pub girth_class: GirthClass,
    pub sense: Sense,
    /// Target α as an unreduced (λ·P', n·P) pair.
    pub target: RatFunc<Rat>,
    pub lambdas: [RatFunc<Rat>; 3],
    /// Interval endpoints in Q(√15); `None` means the whole half-line λ > 0.
    pub interval: Option<(Quad, Quad)>,
    /// Möbius substitution endpoints; equal to `interval` for the interval
    /// certificates, `None` for the half-line ones.
    pub substitution: Option<(Quad, Quad)>,
    /// Polynomials asserted positive on the interval; every denominator used
    /// by `target` and `lambdas` divides their product.
    pub positive_den_factors: Vec<QPoly>,
    /// For half-line certificates: s(λ) with s·Z(C)·slack required to be a
    /// polynomial with nonnegative coefficients (or identically zero).
    pub scaling: Option<QPoly>,
}

fn qp(coeffs: &[i64]) -> QPoly {
    Poly::from_integers(Var::Lambda, coeffs)
}

/// α_G as the unreduced pair (λ·P'_G, |V|·P_G).
fn target_alpha(id: NamedGraphId) -> RatFunc<Rat> {
    let g = id.load().expect("catalog graph");
    let p = g.graph.independence_polynomial().expect("within size guard");
    let num = p.derivative().shift_up(1);
    let den = p.scale(&Rat::from_integer((g.order as i64).into()));
    RatFunc::new_unreduced(num, den).expect("nonzero denominator")
}

fn heawood_certificate(class: GirthClass, name: &str) -> DualCertificate {
    let p_h = qp(&[1, 14, 70, 154, 147, 56, 14, 2]);
    let one_l = qp(&[1, 1]); // 1+λ
    let two_l = qp(&[2, 1]); // 2+λ
    let den12 = &two_l * &p_h;
    let den0 = &one_l * &den12;
    let l0 = RatFunc::new_unreduced(
        qp(&[-3, -27, -94, -139, -20, 139, 124, 45, 9, 1]),
        den0.clone(),
    )
    .unwrap();
    let l1 = RatFunc::new_unreduced(
        qp(&[-3, -24, -73, -99, -25, 63, 55, 15, 1]),
        den12.clone(),
    )
    .unwrap();
    let l2 = RatFunc::new_unreduced(
        qp(&[-3, -27, -94, -160, -132, -46, -3, 1]),
        den12.clone(),
    )
    .unwrap();
    let scaling = (&qp(&[6, 3]) * &p_h).clone(); // 3(λ+2)·P_H
    DualCertificate {
        name: name.to_string(),
        girth_class: class,
        sense: Sense::Max,
        target: target_alpha(NamedGraphId::Heawood),
        lambdas: [l0, l1, l2],
        interval: None,
        substitution: None,
        positive_den_factors: vec![one_l, two_l, p_h],
        scaling: Some(scaling),
    }
}

fn petersen_certificate(
    name: &str,
    lambdas: [RatFunc<Rat>; 3],
    interval: (Quad, Quad),
    extra_factors: Vec<QPoly>,
) -> DualCertificate {
    DualCertificate {
        name: name.to_string(),
        girth_class: GirthClass::G4,
        sense: Sense::Min,
        target: target_alpha(NamedGraphId::Petersen),
        lambdas,
        interval: Some(interval.clone()),
        substitution: Some(interval),
        positive_den_factors: extra_factors,
        scaling: None,
    }
}

fn quad_rat(p: i64, q: i64) -> Quad {
    Quad::from(Rat::new(p.into(), q.into()))
}

/// The built-in certificates, keyed by name: `heawood-g6`, `heawood-g5`,
/// and `petersen-i1` … `petersen-i4`.
pub fn builtin_certificates() -> BTreeMap<String, DualCertificate> {
    let mut out = BTreeMap::new();
    let p_p = qp(&[1, 10, 30, 30, 5]);
    let zero = RatFunc::new_unreduced(Poly::zero(Var::Lambda), Poly::one(Var::Lambda)).unwrap();

    out.insert(
        "heawood-g6".to_string(),
        heawood_certificate(GirthClass::G6, "heawood-g6"),
    );
    out.insert(
        "heawood-g5".to_string(),
        heawood_certificate(GirthClass::G5, "heawood-g5"),
    );

    // interval 1: λ ∈ (0, 3/16]
    let den_a = qp(&[1, 7, 11, 10, 4]);
    let den_i1 = &den_a * &p_p;
    let l1 = RatFunc::new_unreduced(
        qp(&[1, 10, 38, 67, 57, 21, 4]).shift_up(2).scale(&Rat::from_integer((-3).into())),
        den_i1.clone(),
    )
    .unwrap();
    let l2 = RatFunc::new_unreduced(
        qp(&[1, 9, 33, 64, 68, 31, 4]).shift_up(2).scale(&Rat::from_integer((-3).into())),
        den_i1.clone(),
    )
    .unwrap();
    out.insert(
        "petersen-i1".to_string(),
        petersen_certificate(
            "petersen-i1",
            [zero.clone(), l1, l2],
            (quad_rat(0, 1), quad_rat(3, 16)),
            vec![den_a, p_p.clone()],
        ),
    );

    // interval 2: λ ∈ [3/16, 11/20]
    let den_b1 = qp(&[1, 12, 52, 111, 135, 100, 40, 5]).scale(&Rat::from_integer(2.into()));
    let quad_f = qp(&[1, 1, 1]);
    let den_b2 = (&quad_f * &p_p).scale(&Rat::from_integer(2.into()));
    let l1 = RatFunc::new_unreduced(qp(&[0, 0, -6, -36, -75, -64, -13, 4]), den_b1.clone()).unwrap();
    let l2 = RatFunc::new_unreduced(qp(&[0, 0, -3, -21, -49, -45, -6]), den_b2.clone()).unwrap();
    out.insert(
        "petersen-i2".to_string(),
        petersen_certificate(
            "petersen-i2",
            [zero.clone(), l1, l2],
            (quad_rat(3, 16), quad_rat(11, 20)),
            vec![den_b1, quad_f, p_p.clone()],
        ),
    );

    // interval 3: λ ∈ [11/20, √(3/5)]
    let den_c1 = qp(&[1, 13, 63, 152, 205, 165, 75, 10]).scale(&Rat::from_integer(2.into()));
    let cubic = qp(&[1, 3, 3, 2]);
    let den_c2 = (&cubic * &p_p).scale(&Rat::from_integer(2.into()));
    let l1 = RatFunc::new_unreduced(qp(&[0, 0, -6, -42, -111, -125, -41, 5]), den_c1.clone()).unwrap();
    let l2 = RatFunc::new_unreduced(qp(&[0, 0, -3, -24, -83, -140, -96, -12]), den_c2.clone()).unwrap();
    out.insert(
        "petersen-i3".to_string(),
        petersen_certificate(
            "petersen-i3",
            [zero, l1, l2],
            (quad_rat(11, 20), Quad::sqrt_three_fifths()),
            vec![den_c1, cubic, p_p.clone()],
        ),
    );

    // interval 4: λ ∈ [√(3/5), 1]
    let six_l = qp(&[0, 6]); // 6λ
    let one_l = qp(&[1, 1]);
    let den_d0 = &(&six_l * &(&one_l * &one_l)) * &p_p; // 6λ(1+λ)²·P_P
    let den_d12 = &(&six_l * &one_l) * &p_p; // 6λ(1+λ)·P_P
    let l0 = RatFunc::new_unreduced(
        qp(&[-3, -30, -117, -196, -88, 86, 66, 12]),
        den_d0,
    )
    .unwrap();
    let l1 = RatFunc::new_unreduced(
        qp(&[-3, -27, -87, -118, -54, -3, -18]),
        den_d12.clone(),
    )
    .unwrap();
    let l2 = RatFunc::new_unreduced(
        qp(&[-3, -30, -105, -160, -100, -18, -6]),
        den_d12,
    )
    .unwrap();
    out.insert(
        "petersen-i4".to_string(),
        petersen_certificate(
            "petersen-i4",
            [l0, l1, l2],
            (Quad::sqrt_three_fifths(), quad_rat(1, 1)),
            vec![six_l, one_l, p_p],
        ),
    );
    out
}

pub fn builtin_certificate(name: &str) -> Result<DualCertificate, CertifyError> {
    builtin_certificates()
        .remove(name)
        .ok_or_else(|| CertifyError::UnknownCertificate(name.to_string()))
}

impl DualCertificate {
    /// Common denominator of the three Λ's: the product of their declared
    /// denominators.
    pub fn lambda_common_den(&self) -> QPoly {
        let mut d = Poly::one(Var::Lambda);
        for l in &self.lambdas {
            d = &d * l.den();
        }
        d
    }

    /// Λ_t numerator over [`Self::lambda_common_den`].
    pub fn lambda_num_over_common(&self, t: usize) -> QPoly {
        let mut n = self.lambdas[t].num().clone();
        for (s, l) in self.lambdas.iter().enumerate() {
            if s != t {
                n = &n * l.den();
            }
        }
        n
    }

    /// Serialize in the certificate file format.
    pub fn to_file_format(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("girth {}\n", self.girth_class.min_girth()));
        out.push_str(&format!("sense {}\n", self.sense));
        match &self.interval {
            None => out.push_str("interval 0 inf\n"),
            Some((a, b)) => out.push_str(&format!("interval {a} {b}\n")),
        }
        match &self.substitution {
            None => out.push_str("substitution none\n"),
            Some((a, b)) => out.push_str(&format!("substitution {a} {b}\n")),
        }
        out.push_str(&format!("target num {}\n", self.target.num().serialize_line()));
        out.push_str(&format!("target den {}\n", self.target.den().serialize_line()));
        for (t, l) in self.lambdas.iter().enumerate() {
            out.push_str(&format!("lambda{t} num {}\n", l.num().serialize_line()));
            out.push_str(&format!("lambda{t} den {}\n", l.den().serialize_line()));
        }
        for f in &self.positive_den_factors {
            out.push_str(&format!("posfactor {}\n", f.serialize_line()));
        }
        if let Some(s) = &self.scaling {
            out.push_str(&format!("scaling {}\n", s.serialize_line()));
        }
        out
    }

    /// Parse the certificate file format (see [`Self::to_file_format`]).
    pub fn parse(name: &str, text: &str) -> Result<Self, CertifyError> {
        let mut girth = None;
        let mut sense = None;
        let mut interval = None;
        let mut substitution = None;
        let mut polys: BTreeMap<String, QPoly> = BTreeMap::new();
        let mut factors = Vec::new();
        let mut scaling = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (head, rest) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| CertifyError::Parse(format!("bad line {line:?}")))?;
            match head {
                "girth" => {
                    girth = Some(match rest.trim() {
                        "4" => GirthClass::G4,
                        "5" => GirthClass::G5,
                        "6" => GirthClass::G6,
                        other => {
                            return Err(CertifyError::Parse(format!("bad girth {other:?}")))
                        }
                    })
                }
                "sense" => {
                    sense = Some(match rest.trim() {
                        "max" => Sense::Max,
                        "min" => Sense::Min,
                        other => {
                            return Err(CertifyError::Parse(format!("bad sense {other:?}")))
                        }
                    })
                }
                "interval" => {
                    let mut it = rest.split_whitespace();
                    let a = it
                        .next()
                        .ok_or_else(|| CertifyError::Parse("interval needs two endpoints".into()))?;
                    let b = it
                        .next()
                        .ok_or_else(|| CertifyError::Parse("interval needs two endpoints".into()))?;
                    interval = if b == "inf" {
                        None
                    } else {
                        Some((Quad::parse_scalar(a)?, Quad::parse_scalar(b)?))
                    };
                }
                "substitution" => {
                    let rest = rest.trim();
                    substitution = if rest == "none" {
                        None
                    } else {
                        let mut it = rest.split_whitespace();
                        let a = it.next().ok_or_else(|| {
                            CertifyError::Parse("substitution needs two endpoints".into())
                        })?;
                        let b = it.next().ok_or_else(|| {
                            CertifyError::Parse("substitution needs two endpoints".into())
                        })?;
                        Some((Quad::parse_scalar(a)?, Quad::parse_scalar(b)?))
                    };
                }
                "posfactor" => factors.push(Poly::parse_line(Var::Lambda, rest)?),
                "scaling" => scaling = Some(Poly::parse_line(Var::Lambda, rest)?),
                "target" | "lambda0" | "lambda1" | "lambda2" => {
                    let (part, poly_line) = rest
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| CertifyError::Parse(format!("bad line {line:?}")))?;
                    if part != "num" && part != "den" {
                        return Err(CertifyError::Parse(format!(
                            "expected num/den, got {part:?}"
                        )));
                    }
                    polys.insert(format!("{head}.{part}"), Poly::parse_line(Var::Lambda, poly_line)?);
                }
                other => return Err(CertifyError::Parse(format!("unknown entry {other:?}"))),
            }
        }
        let fetch = |key: &str| -> Result<QPoly, CertifyError> {
            polys
                .get(key)
                .cloned()
                .ok_or_else(|| CertifyError::Parse(format!("missing {key}")))
        };
        let rf = |num: QPoly, den: QPoly| -> Result<RatFunc<Rat>, CertifyError> {
            if den.is_zero() {
                return Err(CertifyError::Parse("zero denominator".into()));
            }
            Ok(RatFunc::new_unreduced(num, den)?)
        };
        let target = rf(fetch("target.num")?, fetch("target.den")?)?;
        let lambdas = [
            rf(fetch("lambda0.num")?, fetch("lambda0.den")?)?,
            rf(fetch("lambda1.num")?, fetch("lambda1.den")?)?,
            rf(fetch("lambda2.num")?, fetch("lambda2.den")?)?,
        ];
        Ok(DualCertificate {
            name: name.to_string(),
            girth_class: girth.ok_or_else(|| CertifyError::Parse("missing girth".into()))?,
            sense: sense.ok_or_else(|| CertifyError::Parse("missing sense".into()))?,
            target,
            lambdas,
            interval,
            substitution,
            positive_den_factors: factors,
            scaling,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_is_complete() {
        let certs = builtin_certificates();
        let names: Vec<&str> = certs.keys().map(String::as_str).collect();
        assert_eq!(
            names,
            [
                "heawood-g5",
                "heawood-g6",
                "petersen-i1",
                "petersen-i2",
                "petersen-i3",
                "petersen-i4"
            ]
        );
    }

    #[test]
    fn heawood_lambda2_numerator_matches_the_claim() {
        let c = builtin_certificate("heawood-g6").unwrap();
        assert_eq!(
            c.lambdas[2].num(),
            &qp(&[-3, -27, -94, -160, -132, -46, -3, 1])
        );
    }

    #[test]
    fn interval_one_lambda0_is_zero() {
        let c = builtin_certificate("petersen-i1").unwrap();
        assert!(c.lambdas[0].is_zero());
        assert_eq!(
            c.interval,
            Some((quad_rat(0, 1), quad_rat(3, 16)))
        );
    }

    #[test]
    fn interval_four_endpoints() {
        let c = builtin_certificate("petersen-i4").unwrap();
        assert_eq!(
            c.interval,
            Some((Quad::sqrt_three_fifths(), quad_rat(1, 1)))
        );
    }

    #[test]
    fn file_format_round_trip() {
        for (name, cert) in builtin_certificates() {
            let text = cert.to_file_format();
            let back = DualCertificate::parse(&name, &text).unwrap();
            assert_eq!(back.girth_class, cert.girth_class);
            assert_eq!(back.sense, cert.sense);
            assert_eq!(back.interval, cert.interval);
            assert_eq!(back.substitution, cert.substitution);
            assert_eq!(back.target, cert.target);
            for t in 0..3 {
                assert_eq!(back.lambdas[t], cert.lambdas[t], "{name} lambda{t}");
            }
        }
    }
}
