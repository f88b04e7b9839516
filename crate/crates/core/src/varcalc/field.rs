use std::collections::BTreeMap;

use super::form::BasicForm;
use crate::jet::{FieldId, Generator, JetPolynomial, JetSpace, MultiIndex};
use crate::Error;

/// Vertical vector field `v = v^i ∂_i`. Each component has the grade of
/// its fiber coordinate, so `δ[v]` is an even derivation.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerticalField {
    components: BTreeMap<FieldId, JetPolynomial>,
}

impl VerticalField {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(
        space: &JetSpace,
        components: impl IntoIterator<Item = (FieldId, JetPolynomial)>,
    ) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for (id, p) in components {
            let want = space.grade(id);
            if !p.has_grade(want) {
                return Err(Error::GradeMismatch(format!(
                    "component for `{}` has grade {:?}, expected {:?}",
                    space.field(id).name,
                    p.grade(),
                    want
                )));
            }
            if !p.is_zero() {
                map.insert(id, p);
            }
        }
        Ok(VerticalField { components: map })
    }

    pub fn component(&self, id: FieldId) -> JetPolynomial {
        self.components.get(&id).cloned().unwrap_or_else(JetPolynomial::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (FieldId, &JetPolynomial)> {
        self.components.iter().map(|(k, v)| (*k, v))
    }

    /// `d_A v^i`.
    pub fn prolonged_component(&self, id: FieldId, deriv: &MultiIndex) -> JetPolynomial {
        match self.components.get(&id) {
            Some(p) => p.total_derivative_multi(&deriv.indices()),
            None => JetPolynomial::zero(),
        }
    }

    /// The table `(i, A) ↦ d_A v^i` for `|A| ≤ k`, nonzero entries only.
    pub fn prolong(&self, space: &JetSpace, k: usize) -> BTreeMap<(FieldId, MultiIndex), JetPolynomial> {
        let mut out = BTreeMap::new();
        for (id, p) in &self.components {
            for mi in MultiIndex::all_up_to(space.base_dim(), k) {
                let d = p.total_derivative_multi(&mi.indices());
                if !d.is_zero() {
                    out.insert((*id, mi), d);
                }
            }
        }
        out
    }

    /// `δ[v] f = Σ (d_A v^i) ∂_i^A f`.
    pub fn delta(&self, f: &JetPolynomial) -> JetPolynomial {
        f.derive_with(|g| match g {
            Generator::Jet { field, deriv, .. } => Some(self.prolonged_component(*field, deriv)),
            _ => None,
        })
    }

    pub fn delta_form(&self, alpha: &BasicForm) -> BasicForm {
        alpha.map(|p| self.delta(p))
    }

    /// `[v, w]^i = δ[v] w^i − δ[w] v^i`.
    pub fn bracket(&self, other: &VerticalField) -> VerticalField {
        let mut map = BTreeMap::new();
        let ids: std::collections::BTreeSet<FieldId> =
            self.components.keys().chain(other.components.keys()).copied().collect();
        for id in ids {
            let c = self.delta(&other.component(id)) - other.delta(&self.component(id));
            if !c.is_zero() {
                map.insert(id, c);
            }
        }
        VerticalField { components: map }
    }

    /// `F ⌋ v = Σ v^i F_i`.
    pub fn contract_covector(&self, f: &[JetPolynomial]) -> JetPolynomial {
        self.components.iter().map(|(id, v)| v * &f[id.0 as usize]).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Grade, GQ};

    #[test]
    fn prolongation_of_scaling() {
        let mut s = JetSpace::new(2).unwrap();
        let y = s.add_field("y", Grade::Even);
        let v = VerticalField::new(&s, [(y, s.coord(y))]).unwrap();
        let table = v.prolong(&s, 1);
        assert_eq!(table.len(), 3);
        assert_eq!(table[&(y, MultiIndex::single(1))], s.jet(y, &[1]));
    }

    #[test]
    fn delta_of_quadratic() {
        let mut s = JetSpace::new(2).unwrap();
        let y = s.add_field("y", Grade::Even);
        let v = VerticalField::new(&s, [(y, s.coord(y))]).unwrap();
        let l = (&s.coord(y) * &s.coord(y)).scale(&GQ::ratio(1, 2));
        assert_eq!(v.delta(&l), &s.coord(y) * &s.coord(y));
        let c = VerticalField::new(&s, [(y, JetPolynomial::int(3))]).unwrap();
        assert_eq!(c.prolong(&s, 2).len(), 1);
        assert!(c.delta(&JetPolynomial::int(7)).is_zero());
    }

    #[test]
    fn grade_is_checked() {
        let mut s = JetSpace::new(2).unwrap();
        let y = s.add_field("y", Grade::Even);
        let w = s.add_field("w", Grade::Odd);
        assert!(VerticalField::new(&s, [(y, s.coord(w))]).is_err());
        assert!(VerticalField::new(&s, [(y, JetPolynomial::theta_times(&s.coord(w)))]).is_ok());
    }
}
