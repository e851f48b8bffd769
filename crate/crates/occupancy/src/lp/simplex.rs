//! Dense two-phase simplex over exact rationals with Bland's anti-cycling
//! rule. Sized for small dense problems (here: 4 rows, a few hundred
//! columns), where the textbook tableau is the simplest correct choice.

use num::{One, Zero};

use crate::exactmath::{Rat, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplexError {
    Infeasible,
    Unbounded,
}

#[derive(Debug)]
pub struct Outcome {
    pub value: Rat,
    pub primal: Vec<Rat>,
    /// One multiplier per constraint row.
    pub dual: Vec<Rat>,
    /// Basic column indices (into the original columns).
    pub basis: Vec<usize>,
}

/// Minimize c·x subject to A x = b, x ≥ 0. Rows of `a` must all have the
/// same length; `b` entries may be any sign (rows are flipped as needed).
pub fn solve_min(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> Result<Outcome, SimplexError> {
    let m = a.len();
    let n = c.len();
    // tableau: n structural + m artificial columns + rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].signum_exact() < 0;
        let mut row = Vec::with_capacity(width);
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // phase 1: minimize the sum of artificials
    let mut cost1 = vec![Rat::zero(); n + m];
    for j in n..n + m {
        cost1[j] = Rat::one();
    }
    let v1 = run(&mut t, &mut basis, &cost1, n + m)?;
    if !v1.is_zero() {
        return Err(SimplexError::Infeasible);
    }
    // drive artificial columns out of the basis where possible
    for i in 0..m {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut basis, i, j);
            }
            // a row with no structural pivot is a redundant constraint; its
            // artificial stays basic at value 0 and never re-enters because
            // phase 2 restricts entering columns to the structural ones
        }
    }

    // phase 2
    let mut cost2 = vec![Rat::zero(); n + m];
    cost2[..n].clone_from_slice(c);
    let value = run(&mut t, &mut basis, &cost2, n)?;

    let mut primal = vec![Rat::zero(); n];
    for (i, &bj) in basis.iter().enumerate() {
        if bj < n {
            primal[bj] = t[i][n + m].clone();
        }
    }
    // duals: reduced cost of the i-th artificial column is -y_i when its
    // original column was +e_i (flipped rows negate), since its true cost is 0
    let mut dual = Vec::with_capacity(m);
    for i in 0..m {
        let mut y = Rat::zero();
        for (r, &bj) in basis.iter().enumerate() {
            y += cost2[bj].clone() * t[r][n + i].clone();
        }
        if b[i].signum_exact() < 0 {
            y = -y;
        }
        dual.push(y);
    }
    Ok(Outcome { value, primal, dual, basis })
}

/// Run the simplex on the current tableau until optimal, allowing entering
/// columns with index < `allowed`. Returns the objective value.
fn run(
    t: &mut [Vec<Rat>],
    basis: &mut [usize],
    cost: &[Rat],
    allowed: usize,
) -> Result<Rat, SimplexError> {
    let m = t.len();
    let width = t[0].len();
    loop {
        // reduced costs r_j = c_j − c_B·B⁻¹A_j over the maintained tableau
        let mut entering = None;
        for j in 0..allowed {
            if basis.contains(&j) {
                continue;
            }
            let mut r = cost[j].clone();
            for (i, &bj) in basis.iter().enumerate() {
                if !cost[bj].is_zero() {
                    r -= cost[bj].clone() * t[i][j].clone();
                }
            }
            if r.signum_exact() < 0 {
                entering = Some(j); // Bland: first improving index
                break;
            }
        }
        let Some(j) = entering else {
            let mut value = Rat::zero();
            for (i, &bj) in basis.iter().enumerate() {
                value += cost[bj].clone() * t[i][width - 1].clone();
            }
            return Ok(value);
        };
        // ratio test; Bland tie-break on the smallest basis index
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if t[i][j].signum_exact() > 0 {
                let ratio = t[i][width - 1].clone() / t[i][j].clone();
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((i, _)) = leave else {
            return Err(SimplexError::Unbounded);
        };
        pivot(t, basis, i, j);
    }
}

fn pivot(t: &mut [Vec<Rat>], basis: &mut [usize], row: usize, col: usize) {
    let inv = Rat::one() / t[row][col].clone();
    for x in &mut t[row] {
        *x *= inv.clone();
    }
    for r in 0..t.len() {
        if r != row && !t[r][col].is_zero() {
            let f = t[r][col].clone();
            for c in 0..t[r].len() {
                let delta = f.clone() * t[row][c].clone();
                t[r][c] -= delta;
            }
        }
    }
    basis[row] = col;
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(BigInt::from(p), BigInt::from(q))
    }

    fn r(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn tiny_equality_lp() {
        // min x0 + 2x1 s.t. x0 + x1 = 1
        let out = solve_min(&[r(&[1, 1])], &r(&[1]), &r(&[1, 2])).unwrap();
        assert_eq!(out.value, rat(1, 1));
        assert_eq!(out.primal, r(&[1, 0]));
        assert_eq!(out.dual, r(&[1]));
    }

    #[test]
    fn two_constraints() {
        // min -x0 - x1 s.t. x0 + 2x1 = 4; 3x0 + x1 = 7  (x = (2,1), value -3)
        let out = solve_min(
            &[r(&[1, 2]), r(&[3, 1])],
            &r(&[4, 7]),
            &r(&[-1, -1]),
        )
        .unwrap();
        assert_eq!(out.value, rat(-3, 1));
        assert_eq!(out.primal, r(&[2, 1]));
    }

    #[test]
    fn infeasible_detected() {
        // x0 = 1 and x0 = 2
        let res = solve_min(&[r(&[1]), r(&[1])], &r(&[1, 2]), &r(&[0]));
        assert_eq!(res.unwrap_err(), SimplexError::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        // min -x0 s.t. x0 - x1 = 0
        let res = solve_min(&[r(&[1, -1])], &r(&[0]), &r(&[-1, 0]));
        assert_eq!(res.unwrap_err(), SimplexError::Unbounded);
    }

    #[test]
    fn negative_rhs_rows_are_flipped() {
        // -x0 = -1
        let out = solve_min(&[r(&[-1])], &r(&[-1]), &r(&[5])).unwrap();
        assert_eq!(out.primal, r(&[1]));
        assert_eq!(out.value, rat(5, 1));
        // dual: y * (-1) row... c - y·a = 0 at the basic column: 5 = y·(-1) => y = -5
        assert_eq!(out.dual, r(&[-5]));
    }
}
