use std::collections::HashMap;

use num::BigInt;

use super::graph::{Graph, GraphError};
use super::MAX_VERTICES;
use crate::exactmath::{Poly, Rat, RatFunc, Var};

impl Graph {
    /// Exact independence polynomial P(λ) = Σ_I λ^|I| over independent sets.
    ///
    /// Deletion recursion P(G) = P(G−v) + λ·P(G−N[v]) pivoting on a vertex of
    /// maximum residual degree, memoized on the residual vertex set (which
    /// identifies the induced subgraph, isolated vertices included).
    pub fn independence_polynomial(&self) -> Result<Poly<Rat>, GraphError> {
        let n = self.vertex_count();
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n, MAX_VERTICES));
        }
        let masks: Vec<u64> = (0..n)
            .map(|v| self.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect();
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut memo: HashMap<u64, Vec<BigInt>> = HashMap::new();
        let coeffs = indpoly_rec(&masks, full, &mut memo);
        Ok(Poly::new(
            Var::Lambda,
            coeffs.into_iter().map(Rat::from_integer).collect(),
        ))
    }

    /// Size of a maximum independent set.
    pub fn independence_number(&self) -> Result<usize, GraphError> {
        Ok(self.independence_polynomial()?.degree().unwrap_or(0))
    }

    /// Occupancy fraction α(λ) = λ·P'(λ) / (n·P(λ)) as a reduced function.
    pub fn occupancy_fraction(&self) -> Result<RatFunc<Rat>, GraphError> {
        let p = self.independence_polynomial()?;
        let num = p.derivative().shift_up(1);
        let n = Rat::from_integer((self.vertex_count() as i64).into());
        let den = p.scale(&n);
        RatFunc::new(num, den).map_err(|e| GraphError::Precondition(e.to_string()))
    }
}

fn indpoly_rec(masks: &[u64], active: u64, memo: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    // pivot: max residual degree
    let mut pivot = usize::MAX;
    let mut best_deg = 0usize;
    let mut m = active;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let d = (masks[v] & active).count_ones() as usize;
        if pivot == usize::MAX || d > best_deg {
            best_deg = d;
            pivot = v;
        }
    }
    if pivot == usize::MAX || best_deg == 0 {
        // edgeless residual: (1+λ)^k
        let k = active.count_ones() as usize;
        let mut out = vec![BigInt::from(1)];
        for _ in 0..k {
            let mut next = vec![BigInt::from(0); out.len() + 1];
            for (i, c) in out.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            out = next;
        }
        return out;
    }
    if let Some(hit) = memo.get(&active) {
        return hit.clone();
    }
    let without = indpoly_rec(masks, active & !(1 << pivot), memo);
    let closed = indpoly_rec(masks, active & !(1 << pivot) & !masks[pivot], memo);
    let mut out = vec![BigInt::from(0); without.len().max(closed.len() + 1)];
    for (i, c) in without.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in closed.iter().enumerate() {
        out[i + 1] += c;
    }
    memo.insert(active, out.clone());
    out
}

/// Order of a (d, g)-Moore graph: the minimum vertex count of a d-regular
/// graph of girth g, split by the parity of g.
pub fn moore_order(d: u64, g: u64) -> u64 {
    assert!(d >= 2 && g >= 3, "moore_order needs d >= 2, g >= 3");
    if g % 2 == 1 {
        let mut sum = 0;
        for j in 0..=(g - 3) / 2 {
            sum += (d - 1).pow(j as u32);
        }
        1 + d * sum
    } else {
        let mut sum = 0;
        for j in 0..=(g - 4) / 2 {
            sum += (d - 1).pow(j as u32);
        }
        1 + (d - 1).pow((g / 2 - 1) as u32) + d * sum
    }
}
