//! Seeded property suites for the Fock algebra, the jet ring and the
//! variational operations.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::fock::{charge_commutator_check, free_field_check, ChargeModel, FockSpace, FockState, Mode, ModeSet, Sector, Statistics};
use crate::gauge::{form_witness, witness};
use crate::jet::{JetPolynomial, JetSpace};
use crate::random::{random_form, random_homogeneous, random_poly, random_vertical_field, rng, PolyOptions};
use crate::report::CheckReport;
use crate::scalar::{Grade, GQ};
use crate::varcalc::{BasicForm, LagrangianDensity};
use crate::Error;

/// Space with two even and two odd fields and one varying background.
pub fn sample_space(base_dim: usize) -> JetSpace {
    let mut s = JetSpace::new(base_dim).expect("supported dimension");
    s.add_field("y", Grade::Even);
    s.add_field("z", Grade::Even);
    s.add_field("u", Grade::Odd);
    s.add_field("w", Grade::Odd);
    s.add_background("h", true);
    s
}

fn opts() -> PolyOptions {
    PolyOptions { backgrounds: true, complex: true, ..PolyOptions::default() }
}

fn random_modes(r: &mut ChaCha8Rng) -> ModeSet {
    let points = r.gen_range(1..=3);
    let nsec = r.gen_range(1..=2);
    let sectors = (0..nsec)
        .map(|i| {
            let stat = if r.gen_bool(0.5) { Statistics::Fermion } else { Statistics::Boson };
            Sector::new(format!("s{i}"), r.gen_range(1..=2), stat)
        })
        .collect();
    ModeSet::lattice(points, sectors).expect("small mode set")
}

/// `⟦a[ζ], a[ξ]⟧ = ⟦a†[y], a†[z]⟧ = 0` and `⟦a[ζ], a†[z]⟧ = ⟨ζ, z⟩` acting on
/// basis states, for random mode sets; boson states are restricted to
/// occupancy `≤ n_max − 2`.
pub fn fock_axioms(seed: u64, cases: usize) -> CheckReport {
    let mut r = rng(seed);
    let mut report = CheckReport::new();
    let mut failure = None;
    'cases: for case in 0..cases {
        let space = FockSpace::new(random_modes(&mut r), 4);
        let n = space.modes().len() as Mode;
        let vector = |r: &mut ChaCha8Rng, fermion: bool| -> Vec<(Mode, GQ)> {
            (0..n)
                .filter(|&m| space.modes().is_fermion(m) == fermion)
                .map(|m| (m, GQ::complex(r.gen_range(-2..=2), r.gen_range(-2..=2))))
                .collect()
        };
        let f1 = r.gen_bool(0.5);
        let f2 = r.gen_bool(0.5);
        let zeta = vector(&mut r, f1);
        let xi = vector(&mut r, f2);
        let z = vector(&mut r, f2);
        let y = vector(&mut r, f1);
        let absorb = |v: &[(Mode, GQ)], s: &FockState| {
            v.iter().fold(FockState::zero(), |acc, (m, c)| acc.add(&space.annihilate(*m, s).scale(c)))
        };
        let emit = |v: &[(Mode, GQ)], s: &FockState| {
            v.iter().fold(FockState::zero(), |acc, (m, c)| acc.add(&space.create(*m, s).scale(c)))
        };
        let both_odd = f1 && f2 && !zeta.is_empty() && !z.is_empty();
        let sign = GQ::int(if both_odd { 1 } else { -1 });
        let pairing: GQ = zeta.iter().flat_map(|(m, c)| z.iter().filter(move |(k, _)| k == m).map(move |(_, d)| c * d)).sum();
        for occ in space.basis(space.n_max() - 2) {
            let psi: FockState = space.basis_state(occ.clone());
            let aa = absorb(&zeta, &absorb(&xi, &psi)).add(&absorb(&xi, &absorb(&zeta, &psi)).scale(&sign));
            let cc = emit(&y, &emit(&z, &psi)).add(&emit(&z, &emit(&y, &psi)).scale(&sign));
            let ac = absorb(&zeta, &emit(&z, &psi)).add(&emit(&z, &absorb(&zeta, &psi)).scale(&sign));
            let expected = psi.scale(&pairing);
            if !aa.without_flag().is_zero() {
                failure = Some(format!("case {case}: ⟦a, a⟧ ≠ 0 on {occ:?}"));
            } else if !cc.without_flag().is_zero() {
                failure = Some(format!("case {case}: ⟦a†, a†⟧ ≠ 0 on {occ:?}"));
            } else if ac.without_flag() != expected {
                failure = Some(format!("case {case}: ⟦a, a†⟧ ≠ ⟨ζ, z⟩ on {occ:?}"));
            }
            if failure.is_some() {
                break 'cases;
            }
        }
    }
    report.record("ladder super-commutation relations", failure);
    report
}

/// Lattice equal-time relations and charge generation.
pub fn fock_lattice() -> Result<CheckReport, Error> {
    let mut report = CheckReport::new();
    for n in 2..=3 {
        let r = free_field_check(n, GQ::int(1), Statistics::Fermion, 1)?;
        report.extend(prefixed(&format!("fermion chain N={n}"), r));
    }
    for n in 2..=3 {
        let r = free_field_check(n, GQ::int(1), Statistics::Boson, 3)?;
        report.extend(prefixed(&format!("boson chain N={n}"), r));
    }
    let rotation = vec![vec![GQ::int(0), GQ::int(-1)], vec![GQ::int(1), GQ::int(0)]];
    let boson = ChargeModel { points: 2, statistics: Statistics::Boson, generator: rotation.clone(), n_max: 3 };
    report.extend(prefixed("internal rotation, bosons", charge_commutator_check(&boson)?));
    let fermion = ChargeModel { points: 2, statistics: Statistics::Fermion, generator: rotation, n_max: 1 };
    report.extend(prefixed("internal rotation, fermions", charge_commutator_check(&fermion)?));
    Ok(report)
}

fn prefixed(prefix: &str, r: CheckReport) -> CheckReport {
    let mut out = CheckReport::new();
    for f in r.findings {
        out.record(format!("{prefix}: {}", f.name), f.witness.or_else(|| (!f.passed).then(String::new)));
    }
    out
}

/// Associativity, graded commutativity and the graded Leibniz rule for
/// partial derivatives on a seeded corpus.
pub fn jet_ring(seed: u64, cases: usize) -> CheckReport {
    let mut r = rng(seed);
    let s = sample_space(2);
    let o = opts();
    let mut report = CheckReport::new();
    let (mut assoc, mut comm, mut leibniz) = (None, None, None);
    for case in 0..cases {
        let ga = if r.gen_bool(0.5) { Grade::Odd } else { Grade::Even };
        let gb = if r.gen_bool(0.5) { Grade::Odd } else { Grade::Even };
        let a = random_homogeneous(&mut r, &s, &o, ga);
        let b = random_homogeneous(&mut r, &s, &o, gb);
        let c = random_poly(&mut r, &s, &o);
        if assoc.is_none() {
            assoc = witness(&s, &format!("case {case}"), &(&(&(&a * &b) * &c) - &(&a * &(&b * &c))));
        }
        let sign = GQ::int(if ga.is_odd() && gb.is_odd() { -1 } else { 1 });
        if comm.is_none() {
            comm = witness(&s, &format!("case {case}"), &(&(&a * &b) - &(&b * &a).scale(&sign)));
        }
        let pool: Vec<_> = s.fields().collect();
        let field = pool[r.gen_range(0..pool.len())];
        let g = s.jet_generator(field, crate::jet::MultiIndex::from_indices(&[r.gen_range(0..2)]));
        let sg = GQ::int(if ga.is_odd() && g.is_odd() { -1 } else { 1 });
        let lhs = (&a * &b).partial(&g);
        let rhs = &(&a.partial(&g) * &b) + &(&a * &b.partial(&g)).scale(&sg);
        if leibniz.is_none() {
            leibniz = witness(&s, &format!("case {case}"), &(&lhs - &rhs));
        }
    }
    report.record("product associative", assoc);
    report.record("product graded commutative", comm);
    report.record("partial derivative graded Leibniz", leibniz);
    report
}

/// `d_H ∘ d_H = 0` on random forms of degree `≤ m − 2`.
pub fn d_h_nilpotent(seed: u64, base_dim: usize, cases: usize) -> CheckReport {
    let mut r = rng(seed);
    let s = sample_space(base_dim);
    let o = opts();
    let w = (0..cases).find_map(|case| {
        let q = r.gen_range(0..=base_dim - 2);
        let alpha = random_form(&mut r, &s, &o, q);
        form_witness(&s, &format!("case {case}"), &alpha.d_h().d_h())
    });
    let mut report = CheckReport::new();
    report.record(format!("d_H² = 0 (m={base_dim})"), w);
    report
}

/// `δ[v] ∘ d_H = d_H ∘ δ[v]` on random forms and random vertical fields.
pub fn d_h_delta_commute(seed: u64, base_dim: usize, cases: usize) -> CheckReport {
    let mut r = rng(seed);
    let s = sample_space(base_dim);
    let o = opts();
    let vo = PolyOptions { max_terms: 2, max_order: 1, ..opts() };
    let w = (0..cases).find_map(|case| {
        let q = r.gen_range(0..base_dim);
        let alpha = random_form(&mut r, &s, &o, q);
        let v = random_vertical_field(&mut r, &s, &vo);
        let lhs = v.delta_form(&alpha.d_h());
        let rhs = v.delta_form(&alpha).d_h();
        form_witness(&s, &format!("case {case}"), &(&lhs - &rhs))
    });
    let mut report = CheckReport::new();
    report.record(format!("[d_H, δ[v]] = 0 (m={base_dim})"), w);
    report
}

/// `δ[v]L − F⌋v = d_H(P⌋v_(k−1))` for random Lagrangians of order `k`.
pub fn splitting(seed: u64, order: usize, cases: usize) -> Result<CheckReport, Error> {
    let mut r = rng(seed);
    let s = sample_space(2);
    let lo = PolyOptions { max_order: order, ..opts() };
    let vo = PolyOptions { max_terms: 2, max_order: 1, ..opts() };
    let mut w = None;
    for case in 0..cases {
        let l = random_homogeneous(&mut r, &s, &lo, Grade::Even);
        let lag = LagrangianDensity::new(l)?;
        let v = random_vertical_field(&mut r, &s, &vo);
        let el = lag.euler_lagrange(&s);
        let lhs = BasicForm::volume(2, &v.delta(lag.density()) - &v.contract_covector(&el));
        let p = crate::varcalc::Momentum::of(&s, lag.density(), order)?;
        let rhs = p.contract_form(&v).d_h();
        w = form_witness(&s, &format!("case {case}"), &(&lhs - &rhs));
        if w.is_some() {
            break;
        }
    }
    let mut report = CheckReport::new();
    report.record(format!("δ[v]L − F⌋v = d_H(P⌋v) (k={order})"), w);
    Ok(report)
}

/// Euler–Lagrange of a total divergence vanishes, and `δ[v]` is an even
/// derivation for grade-matched `v`.
pub fn variational_triviality(seed: u64, cases: usize) -> Result<CheckReport, Error> {
    let mut r = rng(seed);
    let s = sample_space(2);
    let o = PolyOptions { max_order: 1, ..opts() };
    let (mut triv, mut deriv) = (None, None);
    for case in 0..cases {
        let l = random_homogeneous(&mut r, &s, &o, Grade::Even);
        let j: Vec<JetPolynomial> = (0..2).map(|_| random_homogeneous(&mut r, &s, &o, Grade::Even)).collect();
        let div = BasicForm::current(2, &j).d_h().density();
        let base = LagrangianDensity::new(l.clone())?.euler_lagrange(&s);
        let shifted = LagrangianDensity::new(&l + &div)?.euler_lagrange(&s);
        if triv.is_none() {
            triv = base.iter().zip(&shifted).find_map(|(a, b)| witness(&s, &format!("case {case}"), &(a - b)));
        }
        let v = random_vertical_field(&mut r, &s, &PolyOptions { max_terms: 2, max_order: 1, ..opts() });
        let a = random_poly(&mut r, &s, &o);
        let b = random_poly(&mut r, &s, &o);
        let lhs = v.delta(&(&a * &b));
        let rhs = &(&v.delta(&a) * &b) + &(&a * &v.delta(&b));
        if deriv.is_none() {
            deriv = witness(&s, &format!("case {case}"), &(&lhs - &rhs));
        }
    }
    let mut report = CheckReport::new();
    report.record("EL(ℓ + d_a J^a) = EL(ℓ)", triv);
    report.record("δ[v] even derivation", deriv);
    Ok(report)
}

/// `[v, w]` of grade-matched fields is grade-matched and `[v, v] = 0` for
/// constant even fields.
pub fn vertical_bracket(seed: u64, cases: usize) -> CheckReport {
    let mut r = rng(seed);
    let s = sample_space(2);
    let vo = PolyOptions { max_terms: 2, max_order: 1, ..opts() };
    let w = (0..cases).find_map(|case| {
        let v = random_vertical_field(&mut r, &s, &vo);
        let u = random_vertical_field(&mut r, &s, &vo);
        let b = v.bracket(&u);
        let f = random_poly(&mut r, &s, &vo);
        let lhs = b.delta(&f);
        let rhs = &v.delta(&u.delta(&f)) - &u.delta(&v.delta(&f));
        witness(&s, &format!("case {case}"), &(&lhs - &rhs))
    });
    let mut report = CheckReport::new();
    report.record("δ[[v, w]] = [δ[v], δ[w]]", w);
    report
}
