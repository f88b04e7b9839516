use super::field::VerticalField;
use super::form::BasicForm;
use crate::jet::{FieldId, Generator, JetPolynomial, JetSpace, MultiIndex};
use crate::scalar::{Grade, GQ};
use crate::Error;

/// Lagrangian density `L = ℓ d^m x` of order `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangianDensity {
    density: JetPolynomial,
    order: usize,
}

impl LagrangianDensity {
    pub fn new(density: JetPolynomial) -> Result<Self, Error> {
        if !density.has_grade(Grade::Even) {
            return Err(Error::GradeMismatch("lagrangian density must be even".into()));
        }
        let order = density.max_jet_order();
        Ok(LagrangianDensity { density, order })
    }

    pub fn density(&self) -> &JetPolynomial {
        &self.density
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn form(&self, space: &JetSpace) -> BasicForm {
        BasicForm::volume(space.base_dim(), self.density.clone())
    }

    /// `F_i = Σ_A (−1)^{|A|} d_A ∂_i^A ℓ`, indexed by field id.
    pub fn euler_lagrange(&self, space: &JetSpace) -> Vec<JetPolynomial> {
        let mut out = vec![JetPolynomial::zero(); space.num_fields()];
        for g in self.density.generators() {
            if let Generator::Jet { field, deriv, .. } = g {
                let d = self.density.partial(&g).total_derivative_multi(&deriv.indices());
                let slot = &mut out[field.0 as usize];
                if deriv.len() % 2 == 0 {
                    *slot += d;
                } else {
                    *slot -= &d;
                }
            }
        }
        out
    }

    /// Momentum for orders one and two.
    pub fn momentum(&self, space: &JetSpace) -> Result<Momentum, Error> {
        Momentum::of(space, &self.density, self.order.max(1))
    }
}

/// The momentum `P` entering the splitting `δ[v]L − F⌋v = d_H(P⌋v)`.
/// `first[a][i] = ∂ℓ/∂y^i_a`; `second[a][b][i]` is `∂ℓ/∂y^i_{ab}` shared
/// evenly between the orderings of `ab`.
#[derive(Clone, Debug)]
pub struct Momentum {
    order: usize,
    base_dim: usize,
    first: Vec<Vec<JetPolynomial>>,
    second: Vec<Vec<Vec<JetPolynomial>>>,
}

impl Momentum {
    pub fn of(space: &JetSpace, density: &JetPolynomial, order: usize) -> Result<Self, Error> {
        if order == 0 || order > 2 || density.max_jet_order() > order {
            return Err(Error::UnsupportedOrder(density.max_jet_order().max(order)));
        }
        let m = space.base_dim();
        let n = space.num_fields();
        let first = (0..m)
            .map(|a| {
                (0..n)
                    .map(|i| {
                        let id = FieldId(i as u16);
                        density.partial(&space.jet_generator(id, MultiIndex::single(a)))
                    })
                    .collect()
            })
            .collect();
        let mut second = Vec::new();
        if order == 2 {
            let half = GQ::ratio(1, 2);
            for a in 0..m {
                let mut row = Vec::new();
                for b in 0..m {
                    let mi = MultiIndex::from_indices(&[a, b]);
                    row.push(
                        (0..n)
                            .map(|i| {
                                let p = density.partial(&space.jet_generator(FieldId(i as u16), mi));
                                if a == b {
                                    p
                                } else {
                                    p.scale(&half)
                                }
                            })
                            .collect(),
                    );
                }
                second.push(row);
            }
        }
        Ok(Momentum { order, base_dim: m, first, second })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn first(&self, a: usize, i: FieldId) -> &JetPolynomial {
        &self.first[a][i.0 as usize]
    }

    pub fn second(&self, a: usize, b: usize, i: FieldId) -> Option<&JetPolynomial> {
        self.second.get(a).map(|row| &row[b][i.0 as usize])
    }

    /// Components `J^a` of `P ⌋ v_(k−1)`.
    pub fn contract(&self, v: &VerticalField) -> Vec<JetPolynomial> {
        (0..self.base_dim)
            .map(|a| {
                let mut ja = JetPolynomial::zero();
                for (id, vi) in v.components() {
                    let i = id.0 as usize;
                    let mut pa = self.first[a][i].clone();
                    if self.order == 2 {
                        for b in 0..self.base_dim {
                            let pab = &self.second[a][b][i];
                            if pab.is_zero() {
                                continue;
                            }
                            pa -= &pab.total_derivative(b);
                            ja += &vi.total_derivative(b) * pab;
                        }
                    }
                    ja += vi * &pa;
                }
                ja
            })
            .collect()
    }

    pub fn contract_form(&self, v: &VerticalField) -> BasicForm {
        BasicForm::current(self.base_dim, &self.contract(v))
    }
}

/// Outcome of building a Noether current.
#[derive(Clone, Debug)]
pub struct NoetherCurrent {
    pub current: BasicForm,
    /// `d_H J + F⌋v d^m x`; zero for a valid current.
    pub certificate: BasicForm,
}

/// `J[v] = P⌋v_(k−1) − N`, given `δ[v]L = d_H N`. A mismatch is returned
/// as `Err` carrying the residual `δ[v]L − d_H N`.
pub fn noether_current(
    space: &JetSpace,
    lagrangian: &LagrangianDensity,
    v: &VerticalField,
    n: &BasicForm,
) -> Result<NoetherCurrent, BasicForm> {
    let m = space.base_dim();
    let dl = BasicForm::volume(m, v.delta(lagrangian.density()));
    let residual = &dl - &n.d_h();
    if !residual.is_zero() {
        return Err(residual);
    }
    let p = lagrangian.momentum(space).map_err(|_| residual.clone())?;
    let current = &p.contract_form(v) - n;
    let el = lagrangian.euler_lagrange(space);
    let certificate = &current.d_h() + &BasicForm::volume(m, v.contract_covector(&el));
    Ok(NoetherCurrent { current, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kg(s: &mut JetSpace) -> (FieldId, JetPolynomial) {
        let y = s.add_field("y", Grade::Even);
        let half = GQ::ratio(1, 2);
        let l = (&s.jet(y, &[0]) * &s.jet(y, &[0]) - &s.jet(y, &[1]) * &s.jet(y, &[1])
            - (&s.coord(y) * &s.coord(y)).scale(&GQ::int(3)))
        .scale(&half);
        (y, l)
    }

    #[test]
    fn klein_gordon_equation() {
        let mut s = JetSpace::new(2).unwrap();
        let (y, l) = kg(&mut s);
        let f = LagrangianDensity::new(l).unwrap().euler_lagrange(&s);
        let expected = -s.jet(y, &[0, 0]) + s.jet(y, &[1, 1]) - s.coord(y).scale(&GQ::int(3));
        assert_eq!(f[0], expected);
    }

    #[test]
    fn mass_term_only() {
        let mut s = JetSpace::new(2).unwrap();
        let y = s.add_field("y", Grade::Even);
        let l = (&s.coord(y) * &s.coord(y)).scale(&GQ::ratio(1, 2));
        assert_eq!(LagrangianDensity::new(l).unwrap().euler_lagrange(&s)[0], s.coord(y));
    }

    #[test]
    fn klein_gordon_momentum() {
        let mut s = JetSpace::new(2).unwrap();
        let (y, l) = kg(&mut s);
        let p = LagrangianDensity::new(l).unwrap().momentum(&s).unwrap();
        assert_eq!(p.first(0, y), &s.jet(y, &[0]));
        assert_eq!(p.first(1, y), &-s.jet(y, &[1]));
    }

    #[test]
    fn odd_density_rejected() {
        let mut s = JetSpace::new(2).unwrap();
        let w = s.add_field("w", Grade::Odd);
        assert!(LagrangianDensity::new(s.coord(w)).is_err());
    }

    #[test]
    fn phase_current_of_complex_scalar() {
        let mut s = JetSpace::new(2).unwrap();
        let y = s.add_field("y", Grade::Even);
        let yb = s.add_field("yb", Grade::Even);
        let eta = [1i64, -1];
        let mut l = JetPolynomial::zero();
        for a in 0..2 {
            l += (&s.jet(yb, &[a]) * &s.jet(y, &[a])).scale(&GQ::int(eta[a]));
        }
        l -= &(&s.coord(yb) * &s.coord(y));
        let lag = LagrangianDensity::new(l).unwrap();
        let i = GQ::i();
        let v = VerticalField::new(&s, [(y, s.coord(y).scale(&i)), (yb, s.coord(yb).scale(&-&i))]).unwrap();
        let nc = noether_current(&s, &lag, &v, &BasicForm::zero(2, 1)).unwrap();
        assert!(nc.certificate.is_zero());
        let j = nc.current.current_components();
        for a in 0..2 {
            let expected = (&s.jet(yb, &[a]) * &s.coord(y) - &s.jet(y, &[a]) * &s.coord(yb))
                .scale(&(&i * &GQ::int(eta[a])));
            assert_eq!(j[a], expected);
        }
    }
}
