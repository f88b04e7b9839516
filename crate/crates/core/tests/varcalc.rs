#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;
use superjet::checks::properties::{d_h_delta_commute, d_h_nilpotent, sample_space, splitting, variational_triviality};
use superjet::jet::{Generator, JetPolynomial, JetSpace, MultiIndex};
use superjet::scalar::{Grade, GQ};
use superjet::varcalc::{noether_current, BasicForm, LagrangianDensity, Momentum, VerticalField};
use superjet::Error;

mod common;

fn q(n: i64) -> GQ {
    GQ::int(n)
}

fn half() -> GQ {
    GQ::ratio(1, 2)
}

#[test]
fn horizontal_differential_examples() {
    let mut s = JetSpace::new(2).unwrap();
    let y = s.add_field("y", Grade::Even);
    let f = BasicForm::function(2, s.coord(y));
    let df = f.d_h();
    assert_eq!(df.degree(), 1);
    assert_eq!(df.component(&[0]), s.jet(y, &[0]));
    assert_eq!(df.component(&[1]), s.jet(y, &[1]));
    // y dx¹: the hand expansion d_H(y dx¹) = dx⁰ ∧ y_0 dx¹ and the
    // cross-check d_H(y) ∧ dx¹ agree
    let mut alpha = BasicForm::zero(2, 1);
    alpha.set(&[1], s.coord(y));
    let mut dx1 = BasicForm::zero(2, 1);
    dx1.set(&[1], JetPolynomial::one());
    assert_eq!(alpha.d_h().component(&[0, 1]), s.jet(y, &[0]));
    assert_eq!(alpha.d_h(), df.wedge(&dx1));
    assert!(df.d_h().is_zero());
    // top-degree forms map to zero
    assert!(BasicForm::volume(2, s.coord(y)).d_h().is_zero());
}

#[test]
fn prolongation_examples() {
    let mut s = JetSpace::new(2).unwrap();
    let y = s.add_field("y", Grade::Even);
    let v = VerticalField::new(&s, [(y, s.coord(y))]).unwrap();
    let table = v.prolong(&s, 1);
    assert_eq!(table.len(), 3);
    assert_eq!(table[&(y, MultiIndex::EMPTY)], s.coord(y));
    for a in 0..2 {
        assert_eq!(table[&(y, MultiIndex::single(a))], s.jet(y, &[a]));
    }
    let shift = VerticalField::new(&s, [(y, JetPolynomial::constant(q(3)))]).unwrap();
    let table = shift.prolong(&s, 2);
    assert_eq!(table.len(), 1);
    assert_eq!(table[&(y, MultiIndex::EMPTY)], JetPolynomial::int(3));
}

#[test]
fn delta_examples() {
    let mut s = JetSpace::new(2).unwrap();
    let y = s.add_field("y", Grade::Even);
    let v = VerticalField::new(&s, [(y, s.coord(y))]).unwrap();
    let l = (&s.coord(y) * &s.coord(y)).scale(&half());
    assert_eq!(v.delta(&l), &s.coord(y) * &s.coord(y));
    assert!(v.delta(&JetPolynomial::int(7)).is_zero());
    // δ[v]L = Σ P^A_i d_A v^i for a first-order density
    let kg = (&s.jet(y, &[0]) * &s.jet(y, &[0]) - &s.jet(y, &[1]) * &s.jet(y, &[1])).scale(&half());
    let expected = &(&s.jet(y, &[0]) * &s.jet(y, &[0])) - &(&s.jet(y, &[1]) * &s.jet(y, &[1]));
    assert_eq!(v.delta(&kg), expected);
}

#[test]
fn grade_mismatched_field_rejected() {
    let mut s = JetSpace::new(2).unwrap();
    let y = s.add_field("y", Grade::Even);
    let w = s.add_field("w", Grade::Odd);
    assert!(matches!(VerticalField::new(&s, [(y, s.coord(w))]), Err(Error::GradeMismatch(_))));
    assert!(VerticalField::new(&s, [(y, s.coord(w).theta_times())]).is_ok());
}

fn klein_gordon(s: &mut JetSpace, mu_sq: i64) -> (superjet::jet::FieldId, JetPolynomial) {
    let y = s.add_field("y", Grade::Even);
    let l = (&s.jet(y, &[0]) * &s.jet(y, &[0]) - &s.jet(y, &[1]) * &s.jet(y, &[1])
        - (&s.coord(y) * &s.coord(y)).scale(&q(mu_sq)))
    .scale(&half());
    (y, l)
}

#[test]
fn euler_lagrange_examples() {
    let mut s = JetSpace::new(2).unwrap();
    let y = s.add_field("y", Grade::Even);
    let l = (&s.coord(y) * &s.coord(y)).scale(&half());
    assert_eq!(LagrangianDensity::new(l).unwrap().euler_lagrange(&s)[0], s.coord(y));

    let mut s = JetSpace::new(2).unwrap();
    let (y, l) = klein_gordon(&mut s, 5);
    let f = LagrangianDensity::new(l).unwrap().euler_lagrange(&s);
    assert_eq!(f[0], &(&s.jet(y, &[1, 1]) - &s.jet(y, &[0, 0])) - &s.coord(y).scale(&q(5)));
}

#[test]
fn momentum_examples() {
    let mut s = JetSpace::new(2).unwrap();
    let (y, l) = klein_gordon(&mut s, 1);
    let p = LagrangianDensity::new(l.clone()).unwrap().momentum(&s).unwrap();
    assert_eq!(p.order(), 1);
    assert_eq!(p.first(0, y), &s.jet(y, &[0]));
    assert_eq!(p.first(1, y), &-s.jet(y, &[1]));
    // order-1 contraction P^a⌋v = P^a_i v^i
    let v = VerticalField::new(&s, [(y, s.coord(y))]).unwrap();
    let c = p.contract(&v);
    assert_eq!(c[0], &s.coord(y) * &s.jet(y, &[0]));
    // densities of order three are rejected
    let third = &s.jet(y, &[0, 0, 1]) * &s.coord(y);
    assert!(matches!(Momentum::of(&s, &third, 3), Err(Error::UnsupportedOrder(3))));
}

#[test]
fn second_order_contraction_formula() {
    // ℓ = y y_{01}: P^{01} = P^{10} = y/2, P^0 = P^1 = 0, P = y_{01}
    let mut s = JetSpace::new(2).unwrap();
    let y = s.add_field("y", Grade::Even);
    let l = &s.coord(y) * &s.jet(y, &[0, 1]);
    let p = Momentum::of(&s, &l, 2).unwrap();
    assert_eq!(p.second(0, 1, y), Some(&s.coord(y).scale(&half())));
    assert_eq!(p.second(1, 0, y), Some(&s.coord(y).scale(&half())));
    assert!(p.second(0, 0, y).unwrap().is_zero());
    assert!(p.first(0, y).is_zero());
    let v = VerticalField::new(&s, [(y, s.coord(y))]).unwrap();
    // (P^a − d_b P^{ab}) v + P^{ab} d_b v, here with a = 0:
    // −(d_1 (y/2)) y + (y/2) y_1 = 0
    assert!(p.contract(&v)[0].is_zero());
    let w = VerticalField::new(&s, [(y, JetPolynomial::generator(Generator::Base(0)))]).unwrap();
    // v = x⁰: −(y_1/2) x⁰ + (y/2)·d_1 x⁰ = −x⁰ y_1 / 2
    let x0 = JetPolynomial::generator(Generator::Base(0));
    assert_eq!(p.contract(&w)[0], (&x0 * &s.jet(y, &[1])).scale(&GQ::ratio(-1, 2)));
}

#[test]
fn phase_current_of_complex_scalar() {
    let mut s = JetSpace::new(2).unwrap();
    let y = s.add_field("y", Grade::Even);
    let yb = s.add_field("ybar", Grade::Even);
    let eta = [1, -1];
    let mut l = (&s.coord(yb) * &s.coord(y)).scale(&q(-2));
    for a in 0..2 {
        l += &(&s.jet(yb, &[a]) * &s.jet(y, &[a])).scale(&q(eta[a]));
    }
    let i = GQ::i();
    let v = VerticalField::new(&s, [(y, s.coord(y).scale(&i)), (yb, s.coord(yb).scale(&-i.clone()))]).unwrap();
    let lag = LagrangianDensity::new(l).unwrap();
    let nc = noether_current(&s, &lag, &v, &BasicForm::zero(2, 1)).unwrap();
    assert!(nc.certificate.is_zero());
    let j = nc.current.current_components();
    for a in 0..2 {
        let expected = (&(&s.jet(yb, &[a]) * &s.coord(y)) - &(&s.jet(y, &[a]) * &s.coord(yb))).scale(&(&i * &q(eta[a])));
        assert_eq!(j[a], expected);
    }
    let zero = noether_current(&s, &lag, &VerticalField::zero(), &BasicForm::zero(2, 1)).unwrap();
    assert!(zero.current.is_zero());
}

#[test]
fn noether_rejects_wrong_n() {
    let mut s = JetSpace::new(2).unwrap();
    let (y, l) = klein_gordon(&mut s, 1);
    let v = VerticalField::new(&s, [(y, JetPolynomial::one())]).unwrap();
    let lag = LagrangianDensity::new(l).unwrap();
    let residual = noether_current(&s, &lag, &v, &BasicForm::zero(2, 1)).unwrap_err();
    assert_eq!(residual.density(), -s.coord(y));
}

#[test]
fn vertical_bracket_examples() {
    let mut s = JetSpace::new(2).unwrap();
    let y = s.add_field("y", Grade::Even);
    let w = s.add_field("w", Grade::Odd);
    let c = VerticalField::new(&s, [(y, JetPolynomial::int(2))]).unwrap();
    assert!(c.bracket(&c).components().next().is_none());
    let fp = VerticalField::new(&s, [(w, s.coord(w))]).unwrap();
    assert!(fp.bracket(&fp).components().next().is_none());
    let scale = VerticalField::new(&s, [(y, s.coord(y))]).unwrap();
    let sq = VerticalField::new(&s, [(y, &s.coord(y) * &s.coord(y))]).unwrap();
    // [y∂, y²∂] = (2y·y − y²)∂ = y²∂
    assert_eq!(scale.bracket(&sq).component(y), &s.coord(y) * &s.coord(y));
}

#[test]
fn euler_lagrange_matches_grid_variation() {
    let (grid, symbolic) = common::grid_euler_lagrange(2e-4);
    let rel = (grid - symbolic).abs() / symbolic.abs();
    assert!(rel < 1e-6, "grid {grid} vs symbolic {symbolic}, relative error {rel}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn d_h_is_nilpotent(seed in any::<u64>(), four: bool) {
        let r = d_h_nilpotent(seed, if four { 4 } else { 2 }, 4);
        prop_assert!(r.passed(), "{:?}", r.findings);
    }

    #[test]
    fn d_h_commutes_with_delta(seed in any::<u64>(), four: bool) {
        let r = d_h_delta_commute(seed, if four { 4 } else { 2 }, 3);
        prop_assert!(r.passed(), "{:?}", r.findings);
    }

    #[test]
    fn splitting_theorem(seed in any::<u64>(), second: bool) {
        let r = splitting(seed, if second { 2 } else { 1 }, 3).unwrap();
        prop_assert!(r.passed(), "{:?}", r.findings);
    }

    #[test]
    fn divergences_are_variationally_trivial(seed in any::<u64>()) {
        let r = variational_triviality(seed, 3).unwrap();
        prop_assert!(r.passed(), "{:?}", r.findings);
    }

    #[test]
    fn euler_lagrange_is_linear(seed in any::<u64>()) {
        let s = sample_space(2);
        let mut r = superjet::random::rng(seed);
        let o = superjet::random::PolyOptions { max_order: 2, ..Default::default() };
        let a = superjet::random::random_homogeneous(&mut r, &s, &o, Grade::Even);
        let b = superjet::random::random_homogeneous(&mut r, &s, &o, Grade::Even);
        let ea = LagrangianDensity::new(a.clone()).unwrap().euler_lagrange(&s);
        let eb = LagrangianDensity::new(b.clone()).unwrap().euler_lagrange(&s);
        let eab = LagrangianDensity::new(&a + &b).unwrap().euler_lagrange(&s);
        for i in 0..eab.len() {
            prop_assert_eq!(&eab[i], &(&ea[i] + &eb[i]));
        }
    }
}
