use num_traits::{One, Zero};

use super::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::GQ;
use crate::Error;

/// Frame `(l_I)` of a compact Lie algebra in a matrix representation,
/// with structure constants `[l_J, l_K] = c^I_{JK} l_I` and an
/// ad-invariant pairing `κ_{IJ}` used to lower indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraData {
    pub name: String,
    /// `c[i][j][k] = c^i_{jk}`.
    pub structure: Vec<Vec<Vec<GQ>>>,
    pub rep: Vec<Matrix>,
    /// `κ_{IJ}`; the identity for an orthonormal frame.
    pub pairing: Vec<Vec<GQ>>,
}

fn pauli() -> [Matrix; 3] {
    [
        Matrix::from_ints(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]),
        Matrix::from_ints(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]),
        Matrix::from_ints(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]),
    ]
}

fn minus_half_i() -> GQ {
    &GQ::i() * &GQ::ratio(-1, 2)
}

impl LieAlgebraData {
    pub fn dim(&self) -> usize {
        self.rep.len()
    }

    pub fn rep_dim(&self) -> usize {
        self.rep.first().map_or(0, Matrix::size)
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &GQ {
        &self.structure[i][j][k]
    }

    pub fn is_orthonormal(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.pairing[i][j] == GQ::int((i == j) as i64)))
    }

    /// Abelian `u(1)` acting on a doublet with charges `±1/2`,
    /// `l = −(i/2) σ_3`.
    pub fn u1() -> Self {
        let l = pauli()[2].scale(&minus_half_i());
        LieAlgebraData {
            name: "u1".into(),
            structure: vec![vec![vec![GQ::zero()]]],
            rep: vec![l],
            pairing: vec![vec![GQ::one()]],
        }
    }

    /// `su(2)` with `l_I = −(i/2) σ_I` and `c^I_{JK} = ε_{IJK}`.
    pub fn su2() -> Self {
        let rep: Vec<Matrix> = pauli().iter().map(|s| s.scale(&minus_half_i())).collect();
        let mut c = vec![vec![vec![GQ::zero(); 3]; 3]; 3];
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            c[i][j][k] = GQ::one();
            c[i][k][j] = GQ::int(-1);
        }
        LieAlgebraData { name: "su2".into(), structure: c, rep, pairing: identity(3) }
    }

    /// `su(3)` in the rational frame `l_I = −(i/2) λ_I` with the eighth
    /// Gell-Mann matrix replaced by `diag(1, 1, −2)`. The frame is
    /// orthogonal with `κ = diag(1, ..., 1, 3)`; structure constants are
    /// computed from the matrices.
    pub fn su3() -> Self {
        let e = |r: usize, c: usize, v: GQ| {
            let mut m = Matrix::zero(3);
            m.set(r, c, v);
            m
        };
        let one = GQ::one();
        let i = GQ::i();
        let lambdas = [
            &e(0, 1, one.clone()) + &e(1, 0, one.clone()),
            &e(0, 1, -&i) + &e(1, 0, i.clone()),
            &e(0, 0, one.clone()) + &e(1, 1, -&one),
            &e(0, 2, one.clone()) + &e(2, 0, one.clone()),
            &e(0, 2, -&i) + &e(2, 0, i.clone()),
            &e(1, 2, one.clone()) + &e(2, 1, one.clone()),
            &e(1, 2, -&i) + &e(2, 1, i.clone()),
            &(&e(0, 0, one.clone()) + &e(1, 1, one.clone())) + &e(2, 2, GQ::int(-2)),
        ];
        let rep: Vec<Matrix> = lambdas.iter().map(|l| l.scale(&minus_half_i())).collect();
        Self::from_matrices("su3", rep).expect("su(3) frame is orthogonal")
    }

    /// Builds the data from representation matrices of an orthogonal frame
    /// (`Tr(l_I l_J) = 0` for `I ≠ J`), with `κ_{IJ} = −2 Tr(l_I l_J)`.
    pub fn from_matrices(name: &str, rep: Vec<Matrix>) -> Result<Self, Error> {
        let d = rep.len();
        let trace_form = |a: &Matrix, b: &Matrix| &(a * b).trace() * &GQ::int(-2);
        let mut pairing = vec![vec![GQ::zero(); d]; d];
        for a in 0..d {
            for b in 0..d {
                pairing[a][b] = trace_form(&rep[a], &rep[b]);
                if a != b && !pairing[a][b].is_zero() {
                    return Err(Error::LieAxiom(format!("frame is not orthogonal at ({a},{b})")));
                }
            }
            if pairing[a][a].is_zero() {
                return Err(Error::LieAxiom(format!("degenerate trace form at {a}")));
            }
        }
        let mut c = vec![vec![vec![GQ::zero(); d]; d]; d];
        for j in 0..d {
            for k in 0..d {
                let br = rep[j].commutator(&rep[k]);
                for i in 0..d {
                    let num = trace_form(&br, &rep[i]);
                    let inv = pairing[i][i].inverse().expect("nonzero");
                    c[i][j][k] = &num * &inv;
                }
            }
        }
        Ok(LieAlgebraData { name: name.into(), structure: c, rep, pairing })
    }

    /// Data given directly, with `κ_{IJ} = −2 Tr(l_I l_J)`. Nothing is
    /// validated here; see [`Self::validate`].
    pub fn from_parts(name: &str, structure: Vec<Vec<Vec<GQ>>>, rep: Vec<Matrix>) -> Result<Self, Error> {
        let d = rep.len();
        if d == 0 || structure.len() != d || rep.iter().any(|m| m.size() != rep[0].size()) {
            return Err(Error::InvalidModel("structure constants and representation disagree in size".into()));
        }
        let pairing: Vec<Vec<GQ>> =
            (0..d).map(|a| (0..d).map(|b| &(&rep[a] * &rep[b]).trace() * &GQ::int(-2)).collect()).collect();
        if super::matrix::determinant(&pairing).is_zero() {
            return Err(Error::LieAxiom("the trace form −2 Tr(l_I l_J) is degenerate".into()));
        }
        Ok(LieAlgebraData { name: name.into(), structure, rep, pairing })
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "u1" => Some(Self::u1()),
            "su2" => Some(Self::su2()),
            "su3" => Some(Self::su3()),
            _ => None,
        }
    }

    /// Checks antisymmetry, the Jacobi identity, the representation
    /// property, tracelessness and anti-Hermiticity of the frame, and
    /// symmetry and ad-invariance of the pairing.
    pub fn validate(&self) -> CheckReport {
        let d = self.dim();
        let mut r = CheckReport::new();
        let shape_ok = self.structure.len() == d
            && self.structure.iter().all(|m| m.len() == d && m.iter().all(|row| row.len() == d))
            && self.pairing.len() == d
            && self.pairing.iter().all(|row| row.len() == d)
            && self.rep.iter().all(|m| m.size() == self.rep_dim());
        if !shape_ok || d == 0 {
            r.fail("index ranges", format!("inconsistent dimensions for {}", self.name));
            return r;
        }
        let mut witness = None;
        'anti: for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if self.c(i, j, k) != &-self.c(i, k, j) {
                        witness = Some(format!("c^{i}_{{{j}{k}}} = {} but c^{i}_{{{k}{j}}} = {}", self.c(i, j, k), self.c(i, k, j)));
                        break 'anti;
                    }
                }
            }
        }
        r.record("structure constants antisymmetric", witness);

        let mut witness = None;
        'jac: for j in 0..d {
            for k in 0..d {
                for h in 0..d {
                    for i in 0..d {
                        let mut s = GQ::zero();
                        for l in 0..d {
                            s += &(self.c(i, j, l) * self.c(l, k, h));
                            s += &(self.c(i, k, l) * self.c(l, h, j));
                            s += &(self.c(i, h, l) * self.c(l, j, k));
                        }
                        if !s.is_zero() {
                            witness = Some(format!("Jacobi fails for (J,K,H) = ({j},{k},{h}), component {i}: {s}"));
                            break 'jac;
                        }
                    }
                }
            }
        }
        r.record("Jacobi identity", witness);

        let mut witness = None;
        'rep: for j in 0..d {
            for k in 0..d {
                let lhs = self.rep[j].commutator(&self.rep[k]);
                let mut rhs = Matrix::zero(self.rep_dim());
                for i in 0..d {
                    rhs = &rhs + &self.rep[i].scale(self.c(i, j, k));
                }
                if lhs != rhs {
                    witness = Some(format!("[l_{j}, l_{k}] differs from c^I_{{{j}{k}}} l_I"));
                    break 'rep;
                }
            }
        }
        r.record("representation bracket", witness);

        let witness = (0..d).find(|&i| !self.rep[i].trace().is_zero()).map(|i| format!("tr l_{i} = {}", self.rep[i].trace()));
        r.record("traceless frame", witness);
        let witness =
            (0..d).find(|&i| self.rep[i].adjoint() != self.rep[i].scale(&GQ::int(-1))).map(|i| format!("l_{i} is not anti-Hermitian"));
        r.record("anti-Hermitian frame", witness);

        let mut witness = None;
        'kappa: for i in 0..d {
            for j in 0..d {
                if self.pairing[i][j] != self.pairing[j][i] {
                    witness = Some(format!("kappa not symmetric at ({i},{j})"));
                    break 'kappa;
                }
                for k in 0..d {
                    let mut s = GQ::zero();
                    for l in 0..d {
                        s += &(&self.pairing[i][l] * self.c(l, k, j));
                        s += &(&self.pairing[j][l] * self.c(l, k, i));
                    }
                    if !s.is_zero() {
                        witness = Some(format!("kappa not ad-invariant at ({i},{j},{k})"));
                        break 'kappa;
                    }
                }
            }
        }
        r.record("invariant pairing", witness);
        r
    }
}

fn identity(d: usize) -> Vec<Vec<GQ>> {
    (0..d).map(|i| (0..d).map(|j| GQ::int((i == j) as i64)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for name in ["u1", "su2", "su3"] {
            let data = LieAlgebraData::builtin(name).unwrap();
            let r = data.validate();
            assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
        }
        assert!(LieAlgebraData::su2().is_orthonormal());
        assert!(!LieAlgebraData::su3().is_orthonormal());
    }

    #[test]
    fn su3_structure_constants() {
        let d = LieAlgebraData::su3();
        // f_123 = 1 and, in the rescaled frame, c^8_{45} = f_458/√3 · ... = 1/2
        assert_eq!(d.c(2, 0, 1), &GQ::one());
        assert_eq!(d.c(7, 3, 4), &GQ::ratio(1, 2));
        assert_eq!(d.c(3, 4, 7), &GQ::ratio(3, 2));
    }

    #[test]
    fn flipped_constant_breaks_jacobi() {
        let mut d = LieAlgebraData::su2();
        d.structure[0][0][1] = GQ::one();
        d.structure[0][1][0] = GQ::int(-1);
        let r = d.validate();
        let failed: Vec<_> = r.failures().map(|f| f.name.clone()).collect();
        assert!(failed.contains(&"Jacobi identity".to_string()), "{failed:?}");
        assert!(r.failures().any(|f| f.witness.as_deref().unwrap_or("").contains("(J,K,H)")));
    }
}
