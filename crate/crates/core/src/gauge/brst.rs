use std::collections::BTreeMap;

use num_traits::Zero;

use super::model::GaugeSystem;
use crate::jet::{FieldId, Generator, JetPolynomial, JetSpace};
use crate::scalar::GQ;
use crate::varcalc::{BasicForm, VerticalField};

/// The BRST transformation `S`: the odd antiderivation fixed by its values
/// on fiber coordinates and commuting with total derivatives.
#[derive(Clone, Debug)]
pub struct BrstTransformation {
    table: BTreeMap<FieldId, JetPolynomial>,
}

impl BrstTransformation {
    pub fn on_coordinate(&self, id: FieldId) -> JetPolynomial {
        self.table.get(&id).cloned().unwrap_or_else(JetPolynomial::zero)
    }

    pub fn apply(&self, f: &JetPolynomial) -> JetPolynomial {
        f.antiderive_with(|g| match g {
            Generator::Jet { field, deriv, .. } => {
                self.table.get(field).map(|p| p.total_derivative_multi(&deriv.indices()))
            }
            _ => None,
        })
    }

    pub fn apply_form(&self, alpha: &BasicForm) -> BasicForm {
        alpha.map(|p| self.apply(p))
    }
}

impl GaugeSystem {
    fn rep_entry(&self, cap: usize, i: usize, j: usize) -> &GQ {
        self.algebra().rep[cap].get(i, j)
    }

    /// `S` on each fiber coordinate:
    /// `Sψ^{αi} = l^i_{Ij} ω^I ψ^{αj}`, `Sψ̄_{αi} = l^j_{Ii} ψ̄_{αj} ω^I`,
    /// `S A^I_a = ∇_a ω^I`, `S ω^I = ½ c^I_{JH} ω^J ω^H`, `S ϖ_I = n_I`,
    /// `S n^I = 0`.
    pub fn brst(&self) -> BrstTransformation {
        let d = self.dim();
        let r = self.algebra().rep_dim();
        let sp = &self.space;
        let mut table = BTreeMap::new();
        for alpha in 0..self.psi.len() {
            for i in 0..r {
                let mut s_psi = JetPolynomial::zero();
                let mut s_bar = JetPolynomial::zero();
                for cap in 0..d {
                    let omega = sp.coord(self.ghost[cap]);
                    for j in 0..r {
                        let e = self.rep_entry(cap, i, j);
                        if !e.is_zero() {
                            s_psi += &(&omega * &sp.coord(self.psi[alpha][j])).scale(e);
                        }
                        let e = self.rep_entry(cap, j, i);
                        if !e.is_zero() {
                            s_bar += &(&sp.coord(self.psibar[alpha][j]) * &omega).scale(e);
                        }
                    }
                }
                table.insert(self.psi[alpha][i], s_psi);
                table.insert(self.psibar[alpha][i], s_bar);
            }
        }
        for a in 0..self.base_dim() {
            for i in 0..d {
                table.insert(self.gauge[a][i], self.covariant_ghost(i, a));
            }
        }
        let half = GQ::ratio(1, 2);
        let lowered = self.nl_lowered();
        for i in 0..d {
            let mut s_omega = JetPolynomial::zero();
            for j in 0..d {
                for h in 0..d {
                    let c = self.algebra().c(i, j, h);
                    if !c.is_zero() {
                        s_omega += &(&sp.coord(self.ghost[j]) * &sp.coord(self.ghost[h])).scale(&(c * &half));
                    }
                }
            }
            table.insert(self.ghost[i], s_omega);
            table.insert(self.antighost[i], lowered[i].clone());
        }
        table.retain(|_, p| !p.is_zero());
        BrstTransformation { table }
    }

    /// The BRST vertical field `v = θ·S(y^i) ∂_i`.
    pub fn brst_field(&self) -> VerticalField {
        let s = self.brst();
        VerticalField::new(&self.space, s.table.iter().map(|(id, p)| (*id, p.theta_times())))
            .expect("θ·S(y) has the grade of y")
    }

    /// Ghost-number field `v_FP = ω^I ∂/∂ω^I − ϖ_I ∂/∂ϖ_I`.
    pub fn ghost_number_field(&self) -> VerticalField {
        let comps = self
            .ghost
            .iter()
            .map(|&id| (id, self.space.coord(id)))
            .chain(self.antighost.iter().map(|&id| (id, -self.space.coord(id))));
        VerticalField::new(&self.space, comps).expect("grade-matched")
    }

    /// `K = ϖ_I (f^I + ½ ξ n^I) √|g|`.
    pub fn gauge_fixing_fermion(&self) -> JetPolynomial {
        let half_xi = &self.model.xi * &GQ::ratio(1, 2);
        (0..self.dim())
            .map(|i| {
                let inner =
                    &self.gauge_divergence(i) + &(&self.space.coord(self.nl[i]) * &self.sqrt_g()).scale(&half_xi);
                &self.space.coord(self.antighost[i]) * &inner
            })
            .sum()
    }

    /// Components `g^{ab} √|g| X_I ∇_b ω^I` for a covector-valued `X`.
    fn paired_with_covariant_ghost(&self, x: &[JetPolynomial]) -> Vec<JetPolynomial> {
        let m = self.base_dim();
        (0..m)
            .map(|a| {
                let mut out = JetPolynomial::zero();
                for b in 0..m {
                    let g = self.densitized_metric(a, b);
                    if g.is_zero() {
                        continue;
                    }
                    let inner: JetPolynomial = (0..self.dim()).map(|i| &x[i] * &self.covariant_ghost(i, b)).sum();
                    out += &(&g * &inner);
                }
                out
            })
            .collect()
    }

    /// `M^a = g^{ab} √|g| ϖ_I ∇_b ω^I`.
    pub fn antighost_current(&self) -> Vec<JetPolynomial> {
        let x: Vec<_> = self.antighost.iter().map(|&id| self.space.coord(id)).collect();
        self.paired_with_covariant_ghost(&x)
    }

    /// `N^a = g^{ab} √|g| n_I ∇_b ω^I`.
    pub fn nl_current(&self) -> Vec<JetPolynomial> {
        self.paired_with_covariant_ghost(&self.nl_lowered())
    }

    /// The matter part `−i ψ̄ γ^a ω ψ` of the displayed BRST current.
    pub fn matter_current(&self) -> Vec<JetPolynomial> {
        let m = self.base_dim();
        let Some(gamma) = &self.gamma else { return vec![JetPolynomial::zero(); m] };
        let r = self.algebra().rep_dim();
        let sp = &self.space;
        let minus_i = -GQ::i();
        (0..m)
            .map(|a| {
                let mut out = JetPolynomial::zero();
                for alpha in 0..gamma.spinor_dim() {
                    for beta in 0..gamma.spinor_dim() {
                        let g = gamma.gammas[a].get(alpha, beta);
                        if g.is_zero() {
                            continue;
                        }
                        for cap in 0..self.dim() {
                            for i in 0..r {
                                for j in 0..r {
                                    let e = self.rep_entry(cap, i, j);
                                    if e.is_zero() {
                                        continue;
                                    }
                                    let t = &(&sp.coord(self.psibar[alpha][i]) * &sp.coord(self.ghost[cap]))
                                        * &sp.coord(self.psi[beta][j]);
                                    out += &t.scale(&(&(g * e) * &minus_i));
                                }
                            }
                        }
                    }
                }
                out
            })
            .collect()
    }

    /// The gauge part `κ_{IJ} F^{I,ab} ∇_b ω^J √|g|`.
    pub fn gauge_current(&self) -> Vec<JetPolynomial> {
        let m = self.base_dim();
        let d = self.dim();
        (0..m)
            .map(|a| {
                let mut out = JetPolynomial::zero();
                for b in 0..m {
                    let cov: Vec<_> = (0..d).map(|j| self.covariant_ghost(j, b)).collect();
                    let lowered = self.lower(&cov);
                    for i in 0..d {
                        out += &(&self.raised_field_strength(i, a, b) * &lowered[i]);
                    }
                }
                &out * &self.sqrt_g()
            })
            .collect()
    }

    /// The ghost part `g^{ab}(n_I ∇_b ω^I − ½ ϖ_{I,b} c^I_{JH} ω^J ω^H) √|g|`.
    pub fn ghost_current(&self) -> Vec<JetPolynomial> {
        let m = self.base_dim();
        let d = self.dim();
        let half = GQ::ratio(-1, 2);
        let sp = &self.space;
        let mut out = self.nl_current();
        for (a, slot) in out.iter_mut().enumerate() {
            for b in 0..m {
                let g = self.densitized_metric(a, b);
                if g.is_zero() {
                    continue;
                }
                let mut inner = JetPolynomial::zero();
                for i in 0..d {
                    for j in 0..d {
                        for h in 0..d {
                            let c = self.algebra().c(i, j, h);
                            if c.is_zero() {
                                continue;
                            }
                            let t = &(&sp.jet(self.antighost[i], &[b]) * &sp.coord(self.ghost[j])) * &sp.coord(self.ghost[h]);
                            inner += &t.scale(&(c * &half));
                        }
                    }
                }
                *slot += &(&g * &inner);
            }
        }
        out
    }

    /// The displayed Faddeev–Popov current
    /// `g^{ab}(ϖ_{I,b} ω^I + ϖ_I ∇_b ω^I) √|g|`.
    pub fn fp_current_display(&self) -> Vec<JetPolynomial> {
        let mut out = self.antighost_current();
        for (a, slot) in out.iter_mut().enumerate() {
            *slot += &self.antighost_gradient_pairing(a);
        }
        out
    }

    /// Noether current of the ghost-number field,
    /// `g^{ab}(ϖ_{I,b} ω^I − ϖ_I ∇_b ω^I) √|g|`. It differs from
    /// [`Self::fp_current_display`] by `−2 M^a`.
    pub fn fp_current_noether(&self) -> Vec<JetPolynomial> {
        let m = self.antighost_current();
        (0..self.base_dim()).map(|a| &self.antighost_gradient_pairing(a) - &m[a]).collect()
    }

    /// `g^{ab} √|g| ϖ_{I,b} ω^I`.
    pub fn antighost_gradient_pairing(&self, a: usize) -> JetPolynomial {
        let mut out = JetPolynomial::zero();
        for b in 0..self.base_dim() {
            let g = self.densitized_metric(a, b);
            if g.is_zero() {
                continue;
            }
            let inner: JetPolynomial = (0..self.dim())
                .map(|i| &self.space.jet(self.antighost[i], &[b]) * &self.space.coord(self.ghost[i]))
                .sum();
            out += &(&g * &inner);
        }
        out
    }

    /// `g^{ab} √|g| n_{I,b} ω^I`.
    pub fn nl_gradient_pairing(&self) -> Vec<JetPolynomial> {
        let lowered = self.nl_lowered();
        (0..self.base_dim())
            .map(|a| {
                let mut out = JetPolynomial::zero();
                for b in 0..self.base_dim() {
                    let g = self.densitized_metric(a, b);
                    if g.is_zero() {
                        continue;
                    }
                    let inner: JetPolynomial = (0..self.dim())
                        .map(|i| &lowered[i].total_derivative(b) * &self.space.coord(self.ghost[i]))
                        .sum();
                    out += &(&g * &inner);
                }
                out
            })
            .collect()
    }
}

/// Short text of a nonzero residual for reports.
pub fn witness(space: &JetSpace, label: &str, residual: &JetPolynomial) -> Option<String> {
    if residual.is_zero() {
        return None;
    }
    let text = residual.to_text(space);
    let shown: String = text.chars().take(400).collect();
    let tail = if shown.len() < text.len() { " ..." } else { "" };
    Some(format!("{label}: residual with {} terms: {shown}{tail}", residual.num_terms()))
}

/// [`witness`] applied to every component of a form.
pub fn form_witness(space: &JetSpace, label: &str, residual: &BasicForm) -> Option<String> {
    residual.components().find_map(|(mask, p)| witness(space, &format!("{label} [component {mask:b}]"), p))
}
