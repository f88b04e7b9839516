use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::jet::{JetPolynomial, JetSpace};

/// Horizontal `q`-form `Σ_T α_T dx^T` over increasing index tuples `T`,
/// stored as bitmasks. Coefficients sit to the left of the `dx`s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicForm {
    base_dim: usize,
    degree: usize,
    components: BTreeMap<u16, JetPolynomial>,
}

fn sign_below(mask: u16, a: usize) -> i64 {
    if (mask & ((1u16 << a) - 1)).count_ones() % 2 == 1 {
        -1
    } else {
        1
    }
}

impl BasicForm {
    pub fn zero(base_dim: usize, degree: usize) -> Self {
        assert!(degree <= base_dim, "form degree exceeds base dimension");
        BasicForm { base_dim, degree, components: BTreeMap::new() }
    }

    /// Degree-0 form.
    pub fn function(base_dim: usize, f: JetPolynomial) -> Self {
        let mut out = Self::zero(base_dim, 0);
        out.set(&[], f);
        out
    }

    /// `f d^m x`.
    pub fn volume(base_dim: usize, f: JetPolynomial) -> Self {
        let mut out = Self::zero(base_dim, base_dim);
        out.set_mask(Self::full_mask(base_dim), f);
        out
    }

    /// `Σ_a J^a dx_a` with `dx_a = ∂_a ⌋ d^m x`.
    pub fn current(base_dim: usize, j: &[JetPolynomial]) -> Self {
        assert_eq!(j.len(), base_dim);
        let mut out = Self::zero(base_dim, base_dim - 1);
        let full = Self::full_mask(base_dim);
        for (a, ja) in j.iter().enumerate() {
            let sign = if a % 2 == 0 { 1 } else { -1 };
            out.set_mask(full & !(1 << a), ja.scale(&sign.into()));
        }
        out
    }

    pub fn full_mask(base_dim: usize) -> u16 {
        ((1u32 << base_dim) - 1) as u16
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (u16, &JetPolynomial)> {
        self.components.iter().map(|(m, p)| (*m, p))
    }

    /// Component on the increasing tuple `indices`.
    pub fn component(&self, indices: &[usize]) -> JetPolynomial {
        self.component_mask(mask_of(indices))
    }

    pub fn component_mask(&self, mask: u16) -> JetPolynomial {
        self.components.get(&mask).cloned().unwrap_or_else(JetPolynomial::zero)
    }

    /// Sets the coefficient of `dx^{i1}∧...∧dx^{iq}`; unordered index lists
    /// are sorted with the permutation sign applied.
    pub fn set(&mut self, indices: &[usize], f: JetPolynomial) {
        assert_eq!(indices.len(), self.degree);
        let mut v = indices.to_vec();
        let mut sign = 1i64;
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return;
        }
        let f = if sign < 0 { -f } else { f };
        self.set_mask(mask_of(&v), f);
    }

    fn set_mask(&mut self, mask: u16, f: JetPolynomial) {
        if f.is_zero() {
            self.components.remove(&mask);
        } else {
            self.components.insert(mask, f);
        }
    }

    fn add_to(&mut self, mask: u16, f: JetPolynomial) {
        let mut cur = self.components.remove(&mask).unwrap_or_else(JetPolynomial::zero);
        cur += f;
        self.set_mask(mask, cur);
    }

    /// Coefficient of `d^m x` for a top-degree form.
    pub fn density(&self) -> JetPolynomial {
        assert_eq!(self.degree, self.base_dim, "density of a non-top form");
        self.component_mask(Self::full_mask(self.base_dim))
    }

    /// The `J^a` of a degree `m−1` form written as `Σ J^a dx_a`.
    pub fn current_components(&self) -> Vec<JetPolynomial> {
        assert_eq!(self.degree + 1, self.base_dim, "not a current");
        let full = Self::full_mask(self.base_dim);
        (0..self.base_dim)
            .map(|a| {
                let c = self.component_mask(full & !(1 << a));
                if a % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect()
    }

    /// Applies `f` to every coefficient.
    pub fn map<F: FnMut(&JetPolynomial) -> JetPolynomial>(&self, mut f: F) -> Self {
        let mut out = Self::zero(self.base_dim, self.degree);
        for (m, p) in &self.components {
            out.set_mask(*m, f(p));
        }
        out
    }

    /// Horizontal differential `d_H α = Σ_a dx^a ∧ d_a α`.
    pub fn d_h(&self) -> Self {
        if self.degree == self.base_dim {
            return Self::zero(self.base_dim, self.degree);
        }
        let mut out = Self::zero(self.base_dim, self.degree + 1);
        for (mask, p) in &self.components {
            for a in 0..self.base_dim {
                if mask & (1 << a) != 0 {
                    continue;
                }
                let d = p.total_derivative(a);
                if d.is_zero() {
                    continue;
                }
                let d = if sign_below(*mask, a) < 0 { -d } else { d };
                out.add_to(mask | (1 << a), d);
            }
        }
        out
    }

    /// `α ∧ β`, with coefficients multiplied in order (`dx`s are even).
    pub fn wedge(&self, other: &BasicForm) -> Self {
        assert_eq!(self.base_dim, other.base_dim);
        let degree = self.degree + other.degree;
        if degree > self.base_dim {
            return Self::zero(self.base_dim, self.base_dim);
        }
        let mut out = Self::zero(self.base_dim, degree);
        for (m1, p1) in &self.components {
            for (m2, p2) in &other.components {
                if m1 & m2 != 0 {
                    continue;
                }
                // sign of merging two increasing tuples
                let mut swaps = 0;
                for b in 0..self.base_dim {
                    if m2 & (1 << b) != 0 {
                        swaps += (m1 >> (b + 1)).count_ones();
                    }
                }
                let prod = p1 * p2;
                out.add_to(m1 | m2, if swaps % 2 == 1 { -prod } else { prod });
            }
        }
        out
    }

    /// `f · α` for a function `f`.
    pub fn left_mul(&self, f: &JetPolynomial) -> Self {
        self.map(|p| f * p)
    }

    pub fn theta_times(&self) -> Self {
        self.map(JetPolynomial::theta_times)
    }

    pub fn to_text(&self, space: &JetSpace) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(m, p)| {
                let dx: Vec<String> =
                    (0..self.base_dim).filter(|a| m & (1 << a) != 0).map(|a| format!("dx{a}")).collect();
                if dx.is_empty() {
                    format!("({})", p.to_text(space))
                } else {
                    format!("({})*{}", p.to_text(space), dx.join("^"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn mask_of(indices: &[usize]) -> u16 {
    indices.iter().fold(0u16, |m, &a| m | (1 << a))
}

impl<'a> Add<&'a BasicForm> for &'a BasicForm {
    type Output = BasicForm;
    fn add(self, rhs: &BasicForm) -> BasicForm {
        assert_eq!((self.base_dim, self.degree), (rhs.base_dim, rhs.degree));
        let mut out = self.clone();
        for (m, p) in &rhs.components {
            out.add_to(*m, p.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BasicForm> for &'a BasicForm {
    type Output = BasicForm;
    fn sub(self, rhs: &BasicForm) -> BasicForm {
        self + &(-rhs)
    }
}

impl Neg for &BasicForm {
    type Output = BasicForm;
    fn neg(self) -> BasicForm {
        self.map(|p| -p)
    }
}
