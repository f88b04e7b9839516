use num_traits::{One, Zero};

use super::gamma::GammaAlgebra;
use super::lie::LieAlgebraData;
use crate::jet::{BackgroundId, FieldId, JetPolynomial, JetSpace};
use crate::scalar::{Grade, GQ};
use crate::varcalc::{BasicForm, LagrangianDensity};
use crate::Error;

/// How the spacetime metric enters the model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricMode {
    /// Minkowski `diag(1, −1, ..., −1)` with `√|g| = 1`.
    Constant,
    /// Arbitrary x-dependent background: symbols `g^{ab}` (`a ≤ b`) and
    /// an independent symbol for `√|g|`.
    Formal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Sectors {
    pub fermion: bool,
    pub gauge: bool,
    pub ghost: bool,
}

impl Default for Sectors {
    fn default() -> Self {
        Sectors { fermion: true, gauge: true, ghost: true }
    }
}

/// Field content and parameters of the gauge model.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldModel {
    pub base_dim: usize,
    pub metric_mode: MetricMode,
    pub algebra: LieAlgebraData,
    pub xi: GQ,
    pub mass: GQ,
    pub sectors: Sectors,
}

impl FieldModel {
    pub fn new(base_dim: usize, metric_mode: MetricMode, algebra: LieAlgebraData) -> Self {
        FieldModel { base_dim, metric_mode, algebra, xi: GQ::one(), mass: GQ::one(), sectors: Sectors::default() }
    }

    pub fn with_sectors(mut self, sectors: Sectors) -> Self {
        self.sectors = sectors;
        self
    }

    pub fn with_metric(mut self, metric_mode: MetricMode) -> Self {
        self.metric_mode = metric_mode;
        self
    }
}

/// A [`FieldModel`] realised on a jet space, with the building blocks of
/// the Lagrangian.
#[derive(Clone, Debug)]
pub struct GaugeSystem {
    pub model: FieldModel,
    pub space: JetSpace,
    pub gamma: Option<GammaAlgebra>,
    /// `psi[α][i]`.
    pub psi: Vec<Vec<FieldId>>,
    pub psibar: Vec<Vec<FieldId>>,
    /// `gauge[a][I]`.
    pub gauge: Vec<Vec<FieldId>>,
    pub ghost: Vec<FieldId>,
    pub antighost: Vec<FieldId>,
    pub nl: Vec<FieldId>,
    inverse_metric: Vec<Vec<Option<BackgroundId>>>,
    sqrt_g: Option<BackgroundId>,
}

impl GaugeSystem {
    pub fn new(model: FieldModel) -> Result<Self, Error> {
        let m = model.base_dim;
        let d = model.algebra.dim();
        let r = model.algebra.rep_dim();
        if d == 0 || model.algebra.structure.len() != d || model.algebra.pairing.len() != d {
            return Err(Error::InvalidModel("inconsistent Lie algebra index ranges".into()));
        }
        if model.sectors.fermion && model.metric_mode == MetricMode::Formal {
            return Err(Error::InvalidModel("the fermion sector requires the constant metric".into()));
        }
        let mut space = JetSpace::new(m)?;
        let gamma = if model.sectors.fermion { Some(GammaAlgebra::dirac(m)?) } else { None };
        let spinor = gamma.as_ref().map_or(0, GammaAlgebra::spinor_dim);
        let mut psi = Vec::new();
        let mut psibar = Vec::new();
        for alpha in 0..spinor {
            psi.push((0..r).map(|i| space.add_field(format!("psi[{alpha};{i}]"), Grade::Odd)).collect());
        }
        for alpha in 0..spinor {
            psibar.push((0..r).map(|i| space.add_field(format!("psibar[{alpha};{i}]"), Grade::Odd)).collect());
        }
        let gauge = (0..m)
            .map(|a| (0..d).map(|i| space.add_field(format!("A[{a};{i}]"), Grade::Even)).collect())
            .collect();
        let ghost = (0..d).map(|i| space.add_field(format!("omega[{i}]"), Grade::Odd)).collect();
        let antighost = (0..d).map(|i| space.add_field(format!("varpi[{i}]"), Grade::Odd)).collect();
        let nl = (0..d).map(|i| space.add_field(format!("n[{i}]"), Grade::Even)).collect();
        let mut inverse_metric = vec![vec![None; m]; m];
        let mut sqrt_g = None;
        if model.metric_mode == MetricMode::Formal {
            for a in 0..m {
                for b in a..m {
                    let id = space.add_background(format!("g[{a};{b}]"), true);
                    inverse_metric[a][b] = Some(id);
                    inverse_metric[b][a] = Some(id);
                }
            }
            sqrt_g = Some(space.add_background("sqrtg", true));
        }
        Ok(GaugeSystem { model, space, gamma, psi, psibar, gauge, ghost, antighost, nl, inverse_metric, sqrt_g })
    }

    pub fn base_dim(&self) -> usize {
        self.model.base_dim
    }

    pub fn algebra(&self) -> &LieAlgebraData {
        &self.model.algebra
    }

    pub fn dim(&self) -> usize {
        self.model.algebra.dim()
    }

    /// `g^{ab}`.
    pub fn inverse_metric(&self, a: usize, b: usize) -> JetPolynomial {
        match self.inverse_metric[a][b] {
            Some(id) => self.space.background_symbol(id),
            None if a != b => JetPolynomial::zero(),
            None if a == 0 => JetPolynomial::one(),
            None => JetPolynomial::int(-1),
        }
    }

    /// `√|g|`.
    pub fn sqrt_g(&self) -> JetPolynomial {
        self.sqrt_g.map_or_else(JetPolynomial::one, |id| self.space.background_symbol(id))
    }

    /// `g^{ab} √|g|`.
    pub fn densitized_metric(&self, a: usize, b: usize) -> JetPolynomial {
        &self.inverse_metric(a, b) * &self.sqrt_g()
    }

    fn c(&self, i: usize, j: usize, h: usize) -> &GQ {
        self.model.algebra.c(i, j, h)
    }

    /// Lowers a Lie-algebra index with the invariant pairing.
    pub fn lower(&self, upper: &[JetPolynomial]) -> Vec<JetPolynomial> {
        let k = &self.model.algebra.pairing;
        (0..self.dim())
            .map(|i| (0..self.dim()).filter(|&j| !k[i][j].is_zero()).map(|j| upper[j].scale(&k[i][j])).sum())
            .collect()
    }

    pub fn gauge_jet(&self, a: usize, i: usize, deriv: &[usize]) -> JetPolynomial {
        self.space.jet(self.gauge[a][i], deriv)
    }

    /// `n_I = κ_{IJ} n^J`.
    pub fn nl_lowered(&self) -> Vec<JetPolynomial> {
        let upper: Vec<_> = self.nl.iter().map(|&id| self.space.coord(id)).collect();
        self.lower(&upper)
    }

    /// `F^I_{ac} = A^I_{a,c} − A^I_{c,a} + c^I_{JH} A^J_a A^H_c`, where
    /// `A^I_{a,c}` is the jet coordinate `∂_c A^I_a`.
    pub fn field_strength(&self, i: usize, a: usize, c: usize) -> JetPolynomial {
        let mut out = &self.gauge_jet(a, i, &[c]) - &self.gauge_jet(c, i, &[a]);
        for j in 0..self.dim() {
            for h in 0..self.dim() {
                let k = self.c(i, j, h);
                if !k.is_zero() {
                    out += &(&self.gauge_jet(a, j, &[]) * &self.gauge_jet(c, h, &[])).scale(k);
                }
            }
        }
        out
    }

    /// `∇_b ω^I = ω^I_{,b} + c^I_{JH} ω^J A^H_b`.
    pub fn covariant_ghost(&self, i: usize, b: usize) -> JetPolynomial {
        let mut out = self.space.jet(self.ghost[i], &[b]);
        for j in 0..self.dim() {
            for h in 0..self.dim() {
                let k = self.c(i, j, h);
                if !k.is_zero() {
                    out += &(&self.space.coord(self.ghost[j]) * &self.gauge_jet(b, h, &[])).scale(k);
                }
            }
        }
        out
    }

    /// `√|g| f^I = d_a(g^{ab} √|g| A^I_b)`.
    pub fn gauge_divergence(&self, i: usize) -> JetPolynomial {
        let m = self.base_dim();
        let mut out = JetPolynomial::zero();
        for a in 0..m {
            let inner: JetPolynomial =
                (0..m).map(|b| &self.densitized_metric(a, b) * &self.gauge_jet(b, i, &[])).sum();
            out += &inner.total_derivative(a);
        }
        out
    }

    /// `F^{I,ab} = g^{ac} g^{bd} F^I_{cd}`.
    pub fn raised_field_strength(&self, i: usize, a: usize, b: usize) -> JetPolynomial {
        let m = self.base_dim();
        let mut out = JetPolynomial::zero();
        for c in 0..m {
            let gac = self.inverse_metric(a, c);
            if gac.is_zero() {
                continue;
            }
            for d in 0..m {
                let gbd = self.inverse_metric(b, d);
                if gbd.is_zero() || c == d {
                    continue;
                }
                out += &(&(&gac * &gbd) * &self.field_strength(i, c, d));
            }
        }
        out
    }


    /// `A_a` as a matrix acting on `ψ`: `(A_a ψ)^{α i} = A^I_a l^i_{Ij} ψ^{α j}`.
    fn gauge_on_psi(&self, a: usize, alpha: usize, i: usize, psi: &[Vec<JetPolynomial>]) -> JetPolynomial {
        let mut out = JetPolynomial::zero();
        for (cap, l) in self.algebra().rep.iter().enumerate() {
            for j in 0..l.size() {
                let e = l.get(i, j);
                if !e.is_zero() {
                    out += &(&self.gauge_jet(a, cap, &[]) * &psi[alpha][j]).scale(e);
                }
            }
        }
        out
    }

    /// Fermion density
    /// `(i/2)(ψ̄ γ^a (ψ_{,a} − A_a ψ) − (ψ̄_{,a} + ψ̄ A_a) γ^a ψ) − m ψ̄ ψ`.
    pub fn fermion_density(&self) -> JetPolynomial {
        let Some(gamma) = &self.gamma else { return JetPolynomial::zero() };
        let m = self.base_dim();
        let r = self.algebra().rep_dim();
        let s = gamma.spinor_dim();
        let coords = |ids: &Vec<Vec<FieldId>>, deriv: &[usize]| -> Vec<Vec<JetPolynomial>> {
            ids.iter().map(|row| row.iter().map(|&f| self.space.jet(f, deriv)).collect()).collect()
        };
        let psi0 = coords(&self.psi, &[]);
        let bar0 = coords(&self.psibar, &[]);
        let mut kinetic = JetPolynomial::zero();
        for a in 0..m {
            let psi_a = coords(&self.psi, &[a]);
            let bar_a = coords(&self.psibar, &[a]);
            for alpha in 0..s {
                for beta in 0..s {
                    let g = gamma.gammas[a].get(alpha, beta);
                    if g.is_zero() {
                        continue;
                    }
                    for i in 0..r {
                        // ψ̄_{αi} γ^a_{αβ} (ψ^{βi}_{,a} − (A_a ψ)^{βi})
                        let cov = &psi_a[beta][i] - &self.gauge_on_psi(a, beta, i, &psi0);
                        kinetic += &(&bar0[alpha][i] * &cov).scale(g);
                        // (ψ̄_{αi,a} + (ψ̄ A_a)_{αi}) γ^a_{αβ} ψ^{βi}
                        let mut cov_bar = bar_a[alpha][i].clone();
                        for (cap, l) in self.algebra().rep.iter().enumerate() {
                            for j in 0..r {
                                let e = l.get(j, i);
                                if !e.is_zero() {
                                    cov_bar += &(&self.gauge_jet(a, cap, &[]) * &bar0[alpha][j]).scale(e);
                                }
                            }
                        }
                        kinetic -= &(&cov_bar * &psi0[beta][i]).scale(g);
                    }
                }
            }
        }
        let mut mass = JetPolynomial::zero();
        for alpha in 0..s {
            for i in 0..r {
                mass += &(&bar0[alpha][i] * &psi0[alpha][i]);
            }
        }
        kinetic.scale(&(&GQ::i() * &GQ::ratio(1, 2))) - mass.scale(&self.model.mass)
    }

    /// `−¼ g^{ab} g^{cd} κ_{IJ} F^I_{ac} F^J_{bd} √|g|`.
    pub fn gauge_density(&self) -> JetPolynomial {
        let m = self.base_dim();
        let d = self.dim();
        let mut out = JetPolynomial::zero();
        for i in 0..d {
            for j in 0..d {
                let k = &self.model.algebra.pairing[i][j];
                if k.is_zero() {
                    continue;
                }
                for a in 0..m {
                    for c in 0..m {
                        if a == c {
                            continue;
                        }
                        let fi = self.field_strength(i, a, c);
                        let mut contracted = JetPolynomial::zero();
                        for b in 0..m {
                            let gab = self.inverse_metric(a, b);
                            if gab.is_zero() {
                                continue;
                            }
                            for dd in 0..m {
                                let gcd = self.inverse_metric(c, dd);
                                if gcd.is_zero() || b == dd {
                                    continue;
                                }
                                contracted += &(&(&gab * &gcd) * &self.field_strength(j, b, dd));
                            }
                        }
                        out += &(&fi * &contracted).scale(k);
                    }
                }
            }
        }
        (&out * &self.sqrt_g()).scale(&GQ::ratio(-1, 4))
    }

    /// `g^{ab} ϖ_{I,a} ∇_b ω^I √|g| + n_I (f^I + ½ ξ n^I) √|g|`.
    pub fn ghost_density(&self) -> JetPolynomial {
        let m = self.base_dim();
        let mut out = JetPolynomial::zero();
        let half_xi = &self.model.xi * &GQ::ratio(1, 2);
        let lowered = self.nl_lowered();
        for i in 0..self.dim() {
            for b in 0..m {
                let cov = self.covariant_ghost(i, b);
                let outer: JetPolynomial =
                    (0..m).map(|a| &self.densitized_metric(a, b) * &self.space.jet(self.antighost[i], &[a])).sum();
                out += &(&outer * &cov);
            }
            let fixing = &self.gauge_divergence(i) + &(&self.space.coord(self.nl[i]) * &self.sqrt_g()).scale(&half_xi);
            out += &(&lowered[i] * &fixing);
        }
        out
    }

    /// The density of the enabled sectors.
    pub fn density(&self) -> JetPolynomial {
        let mut out = JetPolynomial::zero();
        if self.model.sectors.fermion {
            out += &self.fermion_density();
        }
        if self.model.sectors.gauge {
            out += &self.gauge_density();
        }
        if self.model.sectors.ghost {
            out += &self.ghost_density();
        }
        out
    }

    pub fn lagrangian(&self) -> LagrangianDensity {
        LagrangianDensity::new(self.density()).expect("gauge densities are even")
    }

    /// `Σ_a J^a dx_a`.
    pub fn current_form(&self, components: &[JetPolynomial]) -> BasicForm {
        BasicForm::current(self.base_dim(), components)
    }
}
