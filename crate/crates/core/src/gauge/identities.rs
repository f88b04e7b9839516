use super::brst::{form_witness, witness};
use super::model::GaugeSystem;
use crate::jet::JetPolynomial;
use crate::random::{random_poly, rng, PolyOptions};
use crate::report::CheckReport;
use crate::varcalc::{noether_current, BasicForm, LagrangianDensity};

fn corpus(sys: &GaugeSystem, seed: u64, size: usize) -> Vec<JetPolynomial> {
    let mut r = rng(seed);
    let opts = PolyOptions { backgrounds: true, complex: true, ..PolyOptions::default() };
    (0..size)
        .map(|_| random_poly(&mut r, &sys.space, &opts))
        .collect()
}

/// `S² = 0` on every fiber coordinate and on a seeded corpus.
pub fn check_nilpotent(sys: &GaugeSystem, seed: u64, size: usize) -> CheckReport {
    let s = sys.brst();
    let mut report = CheckReport::new();
    let w = sys.space.fields().find_map(|id| {
        let y = sys.space.coord(id);
        witness(&sys.space, &format!("S²({})", sys.space.field(id).name), &s.apply(&s.apply(&y)))
    });
    report.record("S² = 0 on fiber coordinates", w);
    let w = corpus(sys, seed, size)
        .iter()
        .enumerate()
        .find_map(|(k, p)| witness(&sys.space, &format!("S² on random polynomial #{k}"), &s.apply(&s.apply(p))));
    report.record("S² = 0 on random polynomials", w);
    report
}

/// `θ·S(Φ) = δ[v]Φ` on a seeded corpus.
pub fn check_theta_s(sys: &GaugeSystem, seed: u64, size: usize) -> CheckReport {
    let s = sys.brst();
    let v = sys.brst_field();
    let w = corpus(sys, seed, size).iter().enumerate().find_map(|(k, p)| {
        witness(&sys.space, &format!("random polynomial #{k}"), &(&s.apply(p).theta_times() - &v.delta(p)))
    });
    let mut report = CheckReport::new();
    report.record("θ·S = δ[v]", w);
    report
}

/// Decomposition `L_ghost = S K + d_H M` and `δ[v] L_ghost = θ d_H N`.
pub fn ghost_exactness(sys: &GaugeSystem) -> (JetPolynomial, BasicForm, CheckReport) {
    let m = sys.base_dim();
    let s = sys.brst();
    let k = sys.gauge_fixing_fermion();
    let big_m = sys.current_form(&sys.antighost_current());
    let big_n = sys.current_form(&sys.nl_current());
    let ghost = BasicForm::volume(m, sys.ghost_density());
    let mut report = CheckReport::new();
    let split = &(&ghost - &BasicForm::volume(m, s.apply(&k))) - &big_m.d_h();
    report.record("L_ghost = S K + d_H M", form_witness(&sys.space, "L_ghost − S K − d_H M", &split));
    let v = sys.brst_field();
    let lhs = v.delta_form(&ghost);
    let rhs = big_n.d_h().theta_times();
    report.record("δ[v] L_ghost = θ d_H N", form_witness(&sys.space, "δ[v] L_ghost − θ d_H N", &(&lhs - &rhs)));
    (k, big_m, report)
}

/// `δ[v](L_ψ + L_A) = 0` and `δ[v] L = θ d_H N` for the enabled sectors.
pub fn gauge_invariance(sys: &GaugeSystem) -> CheckReport {
    let v = sys.brst_field();
    let mut report = CheckReport::new();
    let mut matter = JetPolynomial::zero();
    if sys.model.sectors.fermion {
        matter += &sys.fermion_density();
    }
    if sys.model.sectors.gauge {
        matter += &sys.gauge_density();
    }
    report.record("δ[v](L_ψ + L_A) = 0", witness(&sys.space, "δ[v](L_ψ + L_A)", &v.delta(&matter)));
    let full = BasicForm::volume(sys.base_dim(), v.delta(&sys.density()));
    let expected = if sys.model.sectors.ghost {
        sys.current_form(&sys.nl_current()).d_h().theta_times()
    } else {
        BasicForm::zero(sys.base_dim(), sys.base_dim())
    };
    report.record("δ[v] L = θ d_H N", form_witness(&sys.space, "δ[v] L − θ d_H N", &(&full - &expected)));
    report
}

/// Displayed BRST current components `J^a`, restricted to enabled sectors.
pub fn displayed_brst_current(sys: &GaugeSystem) -> (Vec<JetPolynomial>, Vec<JetPolynomial>) {
    let m = sys.base_dim();
    let mut matter = vec![JetPolynomial::zero(); m];
    if sys.model.sectors.fermion {
        for (slot, t) in matter.iter_mut().zip(sys.matter_current()) {
            *slot += &t;
        }
    }
    if sys.model.sectors.gauge {
        for (slot, t) in matter.iter_mut().zip(sys.gauge_current()) {
            *slot += &t;
        }
    }
    let ghost = if sys.model.sectors.ghost { sys.ghost_current() } else { vec![JetPolynomial::zero(); m] };
    (matter, ghost)
}

fn sum(a: &[JetPolynomial], b: &[JetPolynomial]) -> Vec<JetPolynomial> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Noether current of the BRST field with `N = θ⟨n, *∇ω⟩`, compared with
/// the displayed `J`, plus the conservation certificates.
pub fn brst_current(sys: &GaugeSystem) -> (BasicForm, CheckReport) {
    let m = sys.base_dim();
    let mut report = CheckReport::new();
    let v = sys.brst_field();
    let lag = sys.lagrangian();
    let n = if sys.model.sectors.ghost {
        sys.current_form(&sys.nl_current()).theta_times()
    } else {
        BasicForm::zero(m, m - 1)
    };
    let (matter, ghost) = displayed_brst_current(sys);
    let displayed = sys.current_form(&sum(&matter, &ghost)).theta_times();
    let derived = match noether_current(&sys.space, &lag, &v, &n) {
        Ok(nc) => {
            report.record(
                "Noether current equals displayed J",
                form_witness(&sys.space, "P⌋v − θN − θJ", &(&nc.current - &displayed)),
            );
            report.record("d_H(θJ) + F⌋v = 0", form_witness(&sys.space, "certificate", &nc.certificate));
            nc.current
        }
        Err(residual) => {
            report.fail("Noether current equals displayed J", form_witness(&sys.space, "δ[v]L − d_H N", &residual).unwrap_or_default());
            displayed.clone()
        }
    };
    let mut sector = JetPolynomial::zero();
    if sys.model.sectors.fermion {
        sector += &sys.fermion_density();
    }
    if sys.model.sectors.gauge {
        sector += &sys.gauge_density();
    }
    let el = LagrangianDensity::new(sector).expect("even").euler_lagrange(&sys.space);
    let j_matter = sys.current_form(&matter).theta_times();
    let cert = &j_matter.d_h() + &BasicForm::volume(m, v.contract_covector(&el));
    report.record(
        "d_H J_(ψ,A) = 0 on (ψ, A) critical sections",
        form_witness(&sys.space, "d_H(θJ_(ψ,A)) + F[L_ψ + L_A]⌋v", &cert),
    );
    (derived, report)
}

/// Faddeev–Popov symmetry: invariance, the displayed current, its
/// Noether derivation, `S J_FP` and `[v_FP, v] = v`.
pub fn fp_current(sys: &GaugeSystem) -> CheckReport {
    let m = sys.base_dim();
    let mut report = CheckReport::new();
    let vfp = sys.ghost_number_field();
    let v = sys.brst_field();
    let lag = sys.lagrangian();
    report.record("δ[v_FP] L = 0", witness(&sys.space, "δ[v_FP] L", &vfp.delta(lag.density())));
    let displayed = sys.fp_current_display();
    match noether_current(&sys.space, &lag, &vfp, &BasicForm::zero(m, m - 1)) {
        Ok(nc) => {
            let expected = sys.current_form(&sys.fp_current_noether());
            report.record(
                "Noether current of v_FP = g(ϖ_{,b}ω − ϖ∇_bω)√|g| dx_a",
                form_witness(&sys.space, "P⌋v_FP − expected", &(&nc.current - &expected)),
            );
            report.record("d_H J_FP + F⌋v_FP = 0", form_witness(&sys.space, "certificate", &nc.certificate));
        }
        Err(residual) => report.fail("Noether current of v_FP = g(ϖ_{,b}ω − ϖ∇_bω)√|g| dx_a", form_witness(&sys.space, "δ[v_FP]L", &residual).unwrap_or_default()),
    }
    let s = sys.brst();
    let (_, ghost) = displayed_brst_current(sys);
    let lhs: Vec<_> = displayed.iter().map(|p| s.apply(p)).collect();
    let rhs = sum(&sys.nl_gradient_pairing(), &ghost);
    let diff: Vec<_> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
    report.record(
        "S J_FP = g n_{,b} ω √|g| dx_a + J_ghost",
        form_witness(&sys.space, "S J_FP − rhs", &sys.current_form(&diff)),
    );
    let br = vfp.bracket(&v);
    let w = sys.space.fields().find_map(|id| {
        witness(&sys.space, &format!("[v_FP, v] − v on {}", sys.space.field(id).name), &(&br.component(id) - &v.component(id)))
    });
    report.record("[v_FP, v] = v", w);
    report
}

/// Second-order ghost density `L' = L − d_H M`.
pub fn second_order_equivalence(sys: &GaugeSystem) -> CheckReport {
    let m = sys.base_dim();
    let mut report = CheckReport::new();
    let v = sys.brst_field();
    let big_m = sys.current_form(&sys.antighost_current());
    let big_n = sys.current_form(&sys.nl_current());
    report.record("δ[v] M = θ N", form_witness(&sys.space, "δ[v]M − θN", &(&v.delta_form(&big_m) - &big_n.theta_times())));
    let density = &sys.density() - &big_m.d_h().density();
    let lag = LagrangianDensity::new(density).expect("even");
    report.record("δ[v] L' = 0", witness(&sys.space, "δ[v]L'", &v.delta(lag.density())));
    let (matter, ghost) = displayed_brst_current(sys);
    let displayed = sys.current_form(&sum(&matter, &ghost)).theta_times();
    match noether_current(&sys.space, &lag, &v, &BasicForm::zero(m, m - 1)) {
        Ok(nc) => {
            report.record("P'⌋v_(1) = θJ", form_witness(&sys.space, "P'⌋v_(1) − θJ", &(&nc.current - &displayed)));
            report.record("d_H(P'⌋v_(1)) + F'⌋v = 0", form_witness(&sys.space, "certificate", &nc.certificate));
        }
        Err(residual) => report.fail("P'⌋v_(1) = θJ", form_witness(&sys.space, "δ[v]L'", &residual).unwrap_or_default()),
    }
    report
}
