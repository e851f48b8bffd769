use num::BigInt;

use super::config::Configuration;
use crate::exactmath::{Poly, Rat, RatFunc, Var};

/// Which vertex the neighbor-count statistic is about: the center v or a
/// uniformly random neighbor u.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    V,
    U,
}

/// Exact partition functions and conditional neighbor statistics of one
/// configuration.
///
/// With W the uncovered second neighbors, the sums run over S1 ⊆ {u1,u2,u3}
/// and S2 ⊆ W with S2 independent in the view and no edge between S1 and S2:
/// occupied-v terms contribute λ^(1+|S2|), unoccupied-v terms λ^(|S1|+|S2|).
#[derive(Clone, Debug)]
pub struct ConfigFunctions {
    z_plus: Poly<Rat>,
    z_minus: Poly<Rat>,
    z: Poly<Rat>,
    /// gamma_v[t]·z as a polynomial (the t = 0 entry includes its (1+λ) factor)
    gv_num: [Poly<Rat>; 4],
    /// gamma_u[t]·3z as a polynomial
    gu_num: [Poly<Rat>; 4],
}

impl ConfigFunctions {
    pub fn compute(cfg: &Configuration) -> Self {
        let w: Vec<usize> = (0..cfg.vertex_count())
            .filter(|&i| cfg.is_uncovered(i))
            .collect();
        let nw = w.len();
        // adjacency among W by position, and attachment masks of W
        let mut wadj = vec![0u32; nw];
        for &(a, b) in cfg.e22() {
            let pa = w.iter().position(|&x| x == a as usize).expect("edge endpoint uncovered");
            let pb = w.iter().position(|&x| x == b as usize).expect("edge endpoint uncovered");
            wadj[pa] |= 1 << pb;
            wadj[pb] |= 1 << pa;
        }
        let watt: Vec<u8> = w.iter().map(|&x| cfg.attach_mask(x)).collect();
        // per-u membership masks over W positions
        let mut unbr = [0u32; 3];
        for (p, &att) in watt.iter().enumerate() {
            for u in 0..3 {
                if att >> u & 1 == 1 {
                    unbr[u] |= 1 << p;
                }
            }
        }

        // integer coefficient accumulators indexed by λ-degree
        let maxdeg = nw + 4;
        let zeros = || vec![BigInt::from(0); maxdeg + 1];
        let mut z_plus = zeros();
        let mut z_minus = zeros();
        let mut gv = [zeros(), zeros(), zeros(), zeros()];
        let mut gu_plus = [zeros(), zeros(), zeros(), zeros()];
        let mut gu_minus = [zeros(), zeros(), zeros(), zeros()];

        for s2 in 0u32..(1 << nw) {
            // S2 independent in the view
            if (0..nw).any(|p| s2 >> p & 1 == 1 && s2 & wadj[p] != 0) {
                continue;
            }
            let s2size = s2.count_ones() as usize;
            // v occupied: S1 empty
            z_plus[1 + s2size] += 1;
            for u in 0..3 {
                let t = (s2 & unbr[u]).count_ones() as usize;
                // u sees v occupied plus its occupied second neighbors
                gu_plus[t + 1][1 + s2size] += 1;
            }
            // v unoccupied: S1 ranges over neighbor subsets avoiding S2's attachments
            let blocked: u8 = (0..nw)
                .filter(|&p| s2 >> p & 1 == 1)
                .fold(0, |m, p| m | watt[p]);
            for s1 in 0u8..8 {
                if s1 & blocked != 0 {
                    continue;
                }
                let s1size = s1.count_ones() as usize;
                z_minus[s1size + s2size] += 1;
                gv[s1size][s1size + s2size] += 1;
                for u in 0..3 {
                    let t = (s2 & unbr[u]).count_ones() as usize;
                    gu_minus[t][s1size + s2size] += 1;
                }
            }
        }

        let to_poly = |v: Vec<BigInt>| {
            Poly::new(Var::Lambda, v.into_iter().map(Rat::from_integer).collect())
        };
        let z_plus = to_poly(z_plus);
        let z_minus = to_poly(z_minus);
        let z = &z_plus + &z_minus;
        let one_plus = Poly::from_integers(Var::Lambda, &[1, 1]);
        let gv_num = [
            &to_poly(gv[0].clone()) * &one_plus,
            to_poly(gv[1].clone()),
            to_poly(gv[2].clone()),
            to_poly(gv[3].clone()),
        ];
        let gu_num = std::array::from_fn(|t| {
            &to_poly(gu_plus[t].clone()) + &to_poly(gu_minus[t].clone())
        });
        ConfigFunctions { z_plus, z_minus, z, gv_num, gu_num }
    }

    /// Partition function restricted to views with v occupied.
    pub fn z_plus(&self) -> &Poly<Rat> {
        &self.z_plus
    }

    /// Partition function restricted to views with v unoccupied.
    pub fn z_minus(&self) -> &Poly<Rat> {
        &self.z_minus
    }

    pub fn z(&self) -> &Poly<Rat> {
        &self.z
    }

    /// Pr[v occupied | view] = Z+/Z, reduced.
    pub fn alpha(&self) -> RatFunc<Rat> {
        RatFunc::new(self.z_plus.clone(), self.z.clone()).expect("Z has constant term 1")
    }

    /// Pr[the side's vertex has t occupied neighbors | view], reduced.
    pub fn gamma(&self, side: Side, t: usize) -> RatFunc<Rat> {
        assert!(t <= 3, "a vertex of a cubic graph has at most 3 neighbors");
        match side {
            Side::V => RatFunc::new(self.gv_num[t].clone(), self.z.clone()),
            Side::U => RatFunc::new(
                self.gu_num[t].clone(),
                self.z.scale(&Rat::from_integer(3.into())),
            ),
        }
        .expect("Z has constant term 1")
    }

    /// Numerator of gamma_v(t) over the denominator z (factor included).
    pub fn gamma_v_num(&self, t: usize) -> &Poly<Rat> {
        &self.gv_num[t]
    }

    /// Numerator of gamma_u(t) over the denominator 3z.
    pub fn gamma_u_num(&self, t: usize) -> &Poly<Rat> {
        &self.gu_num[t]
    }

    /// 3·gamma_v_num(t) − gamma_u_num(t): the numerator of
    /// gamma_v(t) − gamma_u(t) over the common denominator 3z.
    pub fn gamma_diff_num(&self, t: usize) -> Poly<Rat> {
        &self.gv_num[t].scale(&Rat::from_integer(3.into())) - &self.gu_num[t]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localview::config::config_from_counts as g6_config;
    use crate::localview::{enumerate_configurations, GirthClass};
    use num::{BigInt, One, Zero};

    fn qp(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_integers(Var::Lambda, coeffs)
    }

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn closed_forms_for_edgeless_views() {
        // counts (0,0,0): Z- = (1+λ)^3, Z+ = λ
        let f = ConfigFunctions::compute(&g6_config([0, 0, 0]));
        assert_eq!(f.z_minus(), &qp(&[1, 3, 3, 1]));
        assert_eq!(f.z_plus(), &qp(&[0, 1]));
        // counts (2,2,2): Z+ = λ(1+λ)^6
        let f = ConfigFunctions::compute(&g6_config([2, 2, 2]));
        let expect = qp(&[1, 1]).pow(6).shift_up(1);
        assert_eq!(f.z_plus(), &expect);
    }

    #[test]
    fn alpha_examples() {
        // (0,0,0): α = λ/(λ + (1+λ)^3)
        let f = ConfigFunctions::compute(&g6_config([0, 0, 0]));
        assert_eq!(f.alpha(), RatFunc::new(qp(&[0, 1]), qp(&[1, 4, 3, 1])).unwrap());
        // (1,1,1): α = λ(1+λ)^3 / (λ(1+λ)^3 + (1+2λ)^3)
        let f = ConfigFunctions::compute(&g6_config([1, 1, 1]));
        let num = qp(&[1, 1]).pow(3).shift_up(1);
        let den = &num + &qp(&[1, 2]).pow(3);
        assert_eq!(f.alpha(), RatFunc::new(num, den).unwrap());
    }

    #[test]
    fn gamma_examples() {
        // (0,0,0): gamma_v(2) = 3λ² / (λ + (1+λ)^3)
        let f = ConfigFunctions::compute(&g6_config([0, 0, 0]));
        assert_eq!(
            f.gamma(Side::V, 2),
            RatFunc::new(qp(&[0, 0, 3]), qp(&[1, 4, 3, 1])).unwrap()
        );
    }

    #[test]
    fn probabilities_sum_to_one_and_alpha_identity() {
        let lam = rat(2, 3);
        for cfg in enumerate_configurations(GirthClass::G5) {
            let f = ConfigFunctions::compute(&cfg);
            let mut sv = Rat::zero();
            let mut su = Rat::zero();
            for t in 0..4 {
                sv += f.gamma(Side::V, t).eval(&lam).unwrap();
                su += f.gamma(Side::U, t).eval(&lam).unwrap();
            }
            assert!(sv.is_one(), "gamma_v sums to {sv} for {cfg}");
            assert!(su.is_one(), "gamma_u sums to {su} for {cfg}");
            // α = γ_v(0)·λ/(1+λ)
            let lhs = f.alpha().eval(&lam).unwrap();
            let g0 = f.gamma(Side::V, 0).eval(&lam).unwrap();
            assert_eq!(lhs, g0 * lam.clone() / (Rat::one() + lam.clone()), "{cfg}");
            // z has constant term 1
            assert!(f.z().coeff(0).is_one());
        }
    }
}
