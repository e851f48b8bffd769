use super::certificate::CertifyError;
use crate::localview::{ConfigFunctions, Configuration, Side};
use crate::QRatFunc;

/// Solve the three dual equations Σ_t Λ_t·(γ_v(t) − γ_u(t)) = α_C − target
/// for the given tight configurations over the rational-function field,
/// returning the candidate dual multipliers (Λ_0, Λ_1, Λ_2) reduced.
///
/// Fails when the 3×3 system is singular (for instance when one of the
/// configurations has identically vanishing consistency terms).
pub fn derive_dual_from_tight(
    tight: &[Configuration; 3],
    target_alpha: &QRatFunc,
) -> Result<[QRatFunc; 3], CertifyError> {
    // rows: [γdiff_0, γdiff_1, γdiff_2 | α_C − target]
    let mut m: Vec<[QRatFunc; 4]> = Vec::with_capacity(3);
    for cfg in tight {
        let f = ConfigFunctions::compute(cfg);
        let gd = |t: usize| {
            let gv = f.gamma(Side::V, t);
            let gu = f.gamma(Side::U, t);
            &gv - &gu
        };
        let rhs = &f.alpha() - target_alpha;
        m.push([gd(0), gd(1), gd(2), rhs]);
    }
    // Gaussian elimination over Q(λ)
    for col in 0..3 {
        let pivot = (col..3)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(CertifyError::SingularSystem)?;
        m.swap(col, pivot);
        let inv = m[col][col].recip().map_err(|_| CertifyError::SingularSystem)?;
        for c in col..4 {
            m[col][c] = &m[col][c] * &inv;
        }
        for r in 0..3 {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..4 {
                    let sub = &factor * &m[col][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
    }
    Ok([m[0][3].clone(), m[1][3].clone(), m[2][3].clone()])
}
