use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gamma::GammaAlgebra;
use super::matrix::{determinant, Matrix};
use crate::report::CheckReport;
use crate::scalar::GQ;
use crate::Error;

/// Electron and positron projectors `P± = (m ± γ_p)/(2m)` at an on-shell
/// momentum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiracProjectors {
    pub plus: Matrix,
    pub minus: Matrix,
}

fn real(x: &GQ) -> Option<&BigRational> {
    x.is_real().then(|| x.re())
}

/// `P±` for a contravariant momentum `p` with `p² = m²`, `p⁰ > 0`, `m > 0`.
pub fn dirac_projectors(gamma: &GammaAlgebra, p: &[GQ], mass: &GQ) -> Result<DiracProjectors, Error> {
    if p.len() != gamma.base_dim() {
        return Err(Error::OffShell(format!("momentum has {} components, expected {}", p.len(), gamma.base_dim())));
    }
    let m = real(mass).filter(|m| m.is_positive()).ok_or_else(|| Error::OffShell(format!("mass {mass} is not positive")))?;
    if p.iter().any(|x| !x.is_real()) || !p[0].re().is_positive() {
        return Err(Error::OffShell("momentum must be real with positive energy".into()));
    }
    let mut square = GQ::zero();
    for (a, pa) in p.iter().enumerate() {
        square += &(&(pa * pa) * &GQ::int(gamma.metric[a]));
    }
    if square != mass * mass {
        return Err(Error::OffShell(format!("p² = {square} but m² = {}", mass * mass)));
    }
    let n = gamma.spinor_dim();
    let slash = gamma.slash(p);
    let m_id = Matrix::identity(n).scale(mass);
    let inv = GQ::real(BigRational::one() / (m * BigRational::from_integer(BigInt::from(2))));
    Ok(DiracProjectors { plus: (&m_id + &slash).scale(&inv), minus: (&m_id - &slash).scale(&inv) })
}

/// Dirac form `u† γ⁰ w`.
fn dirac_form(gamma: &GammaAlgebra, u: &[GQ], w: &[GQ]) -> GQ {
    let g0 = &gamma.gammas[0];
    let mut out = GQ::zero();
    for (i, ui) in u.iter().enumerate() {
        for (j, wj) in w.iter().enumerate() {
            let e = g0.get(i, j);
            if !e.is_zero() {
                out += &(&(&ui.conj() * e) * wj);
            }
        }
    }
    out
}

/// Sign of a Hermitian Gram matrix: `Some(1)` if positive definite,
/// `Some(-1)` if negative definite, `None` otherwise (leading minors).
fn definiteness(gram: &[Vec<GQ>]) -> Option<i32> {
    let minors: Vec<GQ> = (1..=gram.len())
        .map(|k| determinant(&gram[..k].iter().map(|r| r[..k].to_vec()).collect::<Vec<_>>()))
        .collect();
    if minors.iter().any(|d| !d.is_real()) {
        return None;
    }
    if minors.iter().all(|d| d.re().is_positive()) {
        return Some(1);
    }
    let alternating = minors.iter().enumerate().all(|(k, d)| {
        let s = d.re();
        if k % 2 == 0 { s.is_negative() } else { s.is_positive() }
    });
    alternating.then_some(-1)
}

impl DiracProjectors {
    /// Projector algebra, ranks, and the Dirac-form signature on `W±`.
    pub fn check(&self, gamma: &GammaAlgebra) -> CheckReport {
        let n = gamma.spinor_dim();
        let id = Matrix::identity(n);
        let mut r = CheckReport::new();
        let (p, q) = (&self.plus, &self.minus);
        r.record("P+² = P+", (&(p * p) != p).then(|| "P+² ≠ P+".to_string()));
        r.record("P-² = P-", (&(q * q) != q).then(|| "P-² ≠ P-".to_string()));
        r.record("P+ P- = 0", (!(p * q).is_zero()).then(|| "P+P- ≠ 0".to_string()));
        r.record("P+ + P- = 1", ((p + q) != id).then(|| "P+ + P- ≠ 1".to_string()));
        let (bp, bm) = (p.column_basis(), q.column_basis());
        let half = n / 2;
        r.record(
            "rank P± = half the spinor dimension",
            (bp.len() != half || bm.len() != half).then(|| format!("ranks {} and {}", bp.len(), bm.len())),
        );
        let cross = bp.iter().flat_map(|u| bm.iter().map(move |w| (u, w))).find(|(u, w)| !dirac_form(gamma, u, w).is_zero());
        r.record("W+ ⊥ W- under the Dirac form", cross.map(|_| "nonzero cross pairing".to_string()));
        let gram = |b: &[Vec<GQ>]| -> Vec<Vec<GQ>> {
            b.iter().map(|u| b.iter().map(|w| dirac_form(gamma, u, w)).collect()).collect()
        };
        let sp = definiteness(&gram(&bp));
        let sm = definiteness(&gram(&bm));
        r.record("Dirac form positive on W+", (sp != Some(1)).then(|| format!("signature {sp:?}")));
        r.record("Dirac form negative on W-", (sm != Some(-1)).then(|| format!("signature {sm:?}")));
        r
    }
}

/// Integer on-shell momenta `(p, m)` with `p⁰ > 0`, `m > 0`, spatial
/// components in `−bound..=bound`, in a fixed enumeration order.
pub fn on_shell_momenta(base_dim: usize, bound: i64, count: usize) -> Vec<(Vec<i64>, i64)> {
    let mut out = Vec::new();
    let spatial = base_dim - 1;
    let mut idx = vec![-bound; spatial];
    'outer: loop {
        let p2: i64 = idx.iter().map(|x| x * x).sum();
        for mass in 1..=3 * bound {
            let e2 = p2 + mass * mass;
            let e = (e2 as f64).sqrt().round() as i64;
            if e * e == e2 {
                let mut p = vec![e];
                p.extend(&idx);
                out.push((p, mass));
                if out.len() >= count {
                    break 'outer;
                }
            }
        }
        let mut k = 0;
        loop {
            if k == spatial {
                break 'outer;
            }
            idx[k] += 1;
            if idx[k] <= bound {
                break;
            }
            idx[k] = -bound;
            k += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<GQ> {
        v.iter().map(|&x| GQ::int(x)).collect()
    }

    #[test]
    fn rest_frame() {
        let g = GammaAlgebra::dirac(4).unwrap();
        let pr = dirac_projectors(&g, &q(&[2, 0, 0, 0]), &GQ::int(2)).unwrap();
        let half = GQ::ratio(1, 2);
        assert_eq!(pr.plus, (&Matrix::identity(4) + &g.gammas[0]).scale(&half));
        assert_eq!(pr.plus.trace(), GQ::int(2));
        assert!(pr.check(&g).passed());
    }

    #[test]
    fn off_shell_rejected() {
        let g = GammaAlgebra::dirac(4).unwrap();
        assert!(matches!(dirac_projectors(&g, &q(&[3, 1, 2, 1]), &GQ::int(2)), Err(Error::OffShell(_))));
        assert!(dirac_projectors(&g, &q(&[3, 1, 2, 0]), &GQ::int(2)).is_ok());
        assert!(dirac_projectors(&g, &q(&[-3, 1, 2, 0]), &GQ::int(2)).is_err());
    }

    #[test]
    fn enumeration_is_on_shell() {
        let ps = on_shell_momenta(4, 3, 25);
        assert_eq!(ps.len(), 25);
        for (p, m) in ps {
            assert_eq!(p[0] * p[0] - p[1..].iter().map(|x| x * x).sum::<i64>(), m * m);
        }
    }
}
