use std::collections::HashMap;

use super::index::{BackgroundId, FieldId, Generator, MultiIndex, MAX_BASE_DIM};
use super::poly::JetPolynomial;
use crate::scalar::Grade;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDecl {
    pub name: String,
    pub grade: Grade,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackgroundDecl {
    pub name: String,
    pub varies: bool,
}

/// Declaration of the fiber coordinates and background symbols of a jet
/// ring over a base of dimension `base_dim`.
#[derive(Clone, Debug, Default)]
pub struct JetSpace {
    base_dim: usize,
    fields: Vec<FieldDecl>,
    backgrounds: Vec<BackgroundDecl>,
    by_name: HashMap<String, FieldId>,
}

impl JetSpace {
    pub fn new(base_dim: usize) -> Result<Self, Error> {
        if base_dim == 0 || base_dim > MAX_BASE_DIM {
            return Err(Error::UnsupportedDimension(base_dim));
        }
        Ok(JetSpace { base_dim, ..Default::default() })
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn add_field(&mut self, name: impl Into<String>, grade: Grade) -> FieldId {
        let name = name.into();
        let id = FieldId(self.fields.len() as u16);
        self.by_name.insert(name.clone(), id);
        self.fields.push(FieldDecl { name, grade });
        id
    }

    pub fn add_background(&mut self, name: impl Into<String>, varies: bool) -> BackgroundId {
        let id = BackgroundId(self.backgrounds.len() as u16);
        self.backgrounds.push(BackgroundDecl { name: name.into(), varies });
        id
    }

    pub fn field(&self, id: FieldId) -> &FieldDecl {
        &self.fields[id.0 as usize]
    }

    pub fn field_by_name(&self, name: &str) -> Option<FieldId> {
        self.by_name.get(name).copied()
    }

    pub fn fields(&self) -> impl Iterator<Item = FieldId> + '_ {
        (0..self.fields.len()).map(|i| FieldId(i as u16))
    }

    pub fn num_fields(&self) -> usize {
        self.fields.len()
    }

    pub fn backgrounds(&self) -> &[BackgroundDecl] {
        &self.backgrounds
    }

    pub fn background(&self, id: BackgroundId) -> &BackgroundDecl {
        &self.backgrounds[id.0 as usize]
    }

    pub fn grade(&self, id: FieldId) -> Grade {
        self.field(id).grade
    }

    pub fn jet_generator(&self, field: FieldId, deriv: MultiIndex) -> Generator {
        Generator::Jet { field, deriv, grade: self.grade(field) }
    }

    /// `y^i_A` with `A` given as a list of base indices.
    pub fn jet(&self, field: FieldId, deriv: &[usize]) -> JetPolynomial {
        let mi = MultiIndex::from_indices(deriv);
        debug_assert!(mi.fits(self.base_dim));
        JetPolynomial::generator(self.jet_generator(field, mi))
    }

    /// The fiber coordinate `y^i` itself.
    pub fn coord(&self, field: FieldId) -> JetPolynomial {
        self.jet(field, &[])
    }

    pub fn background_generator(&self, id: BackgroundId) -> Generator {
        Generator::Background { symbol: id, deriv: MultiIndex::EMPTY, varies: self.background(id).varies }
    }

    pub fn background_symbol(&self, id: BackgroundId) -> JetPolynomial {
        JetPolynomial::generator(self.background_generator(id))
    }

    pub fn base_coordinate(&self, a: usize) -> JetPolynomial {
        JetPolynomial::generator(Generator::Base(a as u8))
    }

    pub fn generator_name(&self, g: &Generator) -> String {
        match g {
            Generator::Jet { field, deriv, .. } => {
                let name = &self.field(*field).name;
                if deriv.is_empty() {
                    name.clone()
                } else {
                    format!("{name},{deriv}")
                }
            }
            Generator::Background { symbol, deriv, .. } => {
                let name = &self.background(*symbol).name;
                if deriv.is_empty() {
                    name.clone()
                } else {
                    format!("{name},{deriv}")
                }
            }
            Generator::Base(a) => format!("x{a}"),
        }
    }
}
