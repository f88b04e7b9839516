use num_traits::Zero;

use super::lie::LieAlgebraData;
use crate::jet::JetPolynomial;
use crate::scalar::GQ;

/// `ρ^I_{ab} = i(p_a α^I_b − p_b α^I_a) + c^I_{JK} α^J_a α^K_b`, for
/// symbolic momentum components `p[a]` and gauge components `alpha[a][I]`.
/// Returns `rho[I][a][b]`.
pub fn curvature_like(
    algebra: &LieAlgebraData,
    p: &[JetPolynomial],
    alpha: &[Vec<JetPolynomial>],
) -> Vec<Vec<Vec<JetPolynomial>>> {
    let m = p.len();
    let d = algebra.dim();
    let i = GQ::i();
    (0..d)
        .map(|cap| {
            (0..m)
                .map(|a| {
                    (0..m)
                        .map(|b| {
                            let mut out = (&(&p[a] * &alpha[b][cap]) - &(&p[b] * &alpha[a][cap])).scale(&i);
                            for j in 0..d {
                                for k in 0..d {
                                    let c = algebra.c(cap, j, k);
                                    if !c.is_zero() {
                                        out += &(&alpha[a][j] * &alpha[b][k]).scale(c);
                                    }
                                }
                            }
                            out
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// `ρ[p⊗χ + α] − ρ[α]`, exposed for inspection of the gauge-class
/// dependence of `ρ`; nothing is asserted about it.
pub fn curvature_shift_residual(
    algebra: &LieAlgebraData,
    p: &[JetPolynomial],
    chi: &[JetPolynomial],
    alpha: &[Vec<JetPolynomial>],
) -> Vec<Vec<Vec<JetPolynomial>>> {
    let shifted: Vec<Vec<JetPolynomial>> =
        alpha.iter().enumerate().map(|(a, row)| row.iter().zip(chi).map(|(x, c)| x + &(&p[a] * c)).collect()).collect();
    let base = curvature_like(algebra, p, alpha);
    let moved = curvature_like(algebra, p, &shifted);
    moved
        .iter()
        .zip(&base)
        .map(|(r1, r0)| r1.iter().zip(r0).map(|(x1, x0)| x1.iter().zip(x0).map(|(a, b)| a - b).collect()).collect())
        .collect()
}
