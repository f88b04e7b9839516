use num_traits::Zero;

use super::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::GQ;
use crate::Error;

/// Contravariant gamma matrices `γ^a` for a diagonal Minkowski metric
/// `diag(1, −1, ..., −1)`, in the Dirac basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaAlgebra {
    pub gammas: Vec<Matrix>,
    pub metric: Vec<i64>,
}

impl GammaAlgebra {
    /// Dirac basis: `m = 4` uses `γ⁰ = diag(1, 1, −1, −1)` and
    /// `γ^k = [[0, σ_k], [−σ_k, 0]]`; `m = 2` uses `γ⁰ = σ_3`, `γ¹ = iσ_2`.
    pub fn dirac(base_dim: usize) -> Result<Self, Error> {
        let c = |re: i64, im: i64| (re, im);
        let z = c(0, 0);
        let gammas = match base_dim {
            2 => vec![
                Matrix::from_ints(&[&[c(1, 0), z], &[z, c(-1, 0)]]),
                Matrix::from_ints(&[&[z, c(1, 0)], &[c(-1, 0), z]]),
            ],
            4 => {
                let g0 = Matrix::from_ints(&[
                    &[c(1, 0), z, z, z],
                    &[z, c(1, 0), z, z],
                    &[z, z, c(-1, 0), z],
                    &[z, z, z, c(-1, 0)],
                ]);
                let sigma: [[[(i64, i64); 2]; 2]; 3] = [
                    [[z, c(1, 0)], [c(1, 0), z]],
                    [[z, c(0, -1)], [c(0, 1), z]],
                    [[c(1, 0), z], [z, c(-1, 0)]],
                ];
                let mut out = vec![g0];
                for s in &sigma {
                    let mut m = Matrix::zero(4);
                    for r in 0..2 {
                        for col in 0..2 {
                            let v = GQ::complex(s[r][col].0, s[r][col].1);
                            m.set(r, col + 2, v.clone());
                            m.set(r + 2, col, -v);
                        }
                    }
                    out.push(m);
                }
                out
            }
            other => return Err(Error::UnsupportedDimension(other)),
        };
        let metric = (0..base_dim).map(|a| if a == 0 { 1 } else { -1 }).collect();
        Ok(GammaAlgebra { gammas, metric })
    }

    pub fn base_dim(&self) -> usize {
        self.gammas.len()
    }

    pub fn spinor_dim(&self) -> usize {
        self.gammas[0].size()
    }

    /// `γ_p = g_{ab} p^b γ^a` for a contravariant momentum `p`.
    pub fn slash(&self, p: &[GQ]) -> Matrix {
        let mut out = Matrix::zero(self.spinor_dim());
        for (a, pa) in p.iter().enumerate() {
            let lowered = pa * &GQ::int(self.metric[a]);
            out = &out + &self.gammas[a].scale(&lowered);
        }
        out
    }

    /// Clifford relation and the Dirac conjugation convention (`γ⁰`
    /// Hermitian, spatial gammas anti-Hermitian).
    pub fn validate(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let n = self.spinor_dim();
        let mut witness = None;
        'cl: for a in 0..self.base_dim() {
            for b in 0..self.base_dim() {
                let ac = self.gammas[a].anticommutator(&self.gammas[b]);
                let g = if a == b { 2 * self.metric[a] } else { 0 };
                if ac != Matrix::identity(n).scale(&GQ::int(g)) {
                    witness = Some(format!("{{γ^{a}, γ^{b}}} ≠ {g}·1"));
                    break 'cl;
                }
            }
        }
        r.record("Clifford relation", witness);
        let witness = (0..self.base_dim())
            .find(|&a| self.gammas[a].adjoint() != self.gammas[a].scale(&GQ::int(self.metric[a])))
            .map(|a| format!("γ^{a} has the wrong hermiticity"));
        r.record("gamma hermiticity", witness);
        let witness = (0..self.base_dim())
            .find(|&a| !self.gammas[a].trace().is_zero())
            .map(|a| format!("tr γ^{a} ≠ 0"));
        r.record("traceless gammas", witness);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirac_bases_validate() {
        for m in [2, 4] {
            let g = GammaAlgebra::dirac(m).unwrap();
            assert!(g.validate().passed(), "m = {m}");
        }
        assert!(GammaAlgebra::dirac(3).is_err());
    }

    #[test]
    fn slash_squares_to_mass() {
        let g = GammaAlgebra::dirac(4).unwrap();
        let p: Vec<GQ> = [3, 1, 2, 0].iter().map(|&x| GQ::int(x)).collect();
        let s = g.slash(&p);
        assert_eq!(&s * &s, Matrix::identity(4).scale(&GQ::int(4)));
    }
}
