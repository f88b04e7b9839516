#![allow(clippy::needless_range_loop)]

use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;
use superjet::fock::{
    charge_commutator_check, free_field_check, normal_order, ChargeModel, FockOperator, FockSpace, FockState,
    Ladder, Mode, ModeSet, OrderingRule, Sector, Statistics,
};
use superjet::random::rng;
use superjet::scalar::GQ;

mod common;
use common::{combine, matmul, Dense, Matrix};

fn space(stats: &[Statistics], n_max: usize) -> FockSpace {
    let sectors = stats.iter().enumerate().map(|(i, s)| Sector::new(format!("s{i}"), 1, *s)).collect();
    FockSpace::new(ModeSet::new(vec!["x".into()], sectors).unwrap(), n_max)
}

fn ket(s: &FockSpace, m: Mode) -> FockState {
    s.one_particle(&[(m, GQ::int(1))])
}

#[test]
fn exterior_product_examples() {
    let s = space(&[Statistics::Fermion, Statistics::Fermion], 4);
    assert!(s.exterior_product(&ket(&s, 0), &ket(&s, 0)).is_zero());
    let a = s.exterior_product(&ket(&s, 0), &ket(&s, 1));
    let b = s.exterior_product(&ket(&s, 1), &ket(&s, 0));
    assert_eq!(a, b.scale(&GQ::int(-1)));

    let bos = space(&[Statistics::Boson], 4);
    let two = bos.exterior_product(&ket(&bos, 0), &ket(&bos, 0));
    let d = Dense::new(vec![false], 4);
    let ad = d.ladder(0, true);
    let m = matmul(&ad, &ad);
    let vac = d.index(&[0]).unwrap();
    let target = d.index(&[2]).unwrap();
    assert_eq!(two.coefficient(&[2]), m[target][vac]);
}

#[test]
fn interior_product_examples() {
    let s = space(&[Statistics::Fermion, Statistics::Fermion], 4);
    let vac: FockState = s.vacuum();
    assert_eq!(s.interior_product(&ket(&s, 0), &ket(&s, 0)), vac);
    let both = s.exterior_product(&ket(&s, 0), &ket(&s, 1));
    assert_eq!(s.interior_product(&ket(&s, 0), &both), ket(&s, 1));
    assert_eq!(s.interior_product(&ket(&s, 1), &both), ket(&s, 0).scale(&GQ::int(-1)));
    assert!(s.interior_product(&ket(&s, 0), &vac).is_zero());
}

#[test]
fn ladder_examples() {
    let s = space(&[Statistics::Fermion, Statistics::Boson], 4);
    let modes = s.shared_modes();
    let vac: FockState = s.vacuum();
    let emit = FockOperator::emit(modes.clone(), &[(0, GQ::int(1))]);
    assert_eq!(s.apply(&emit, &vac), ket(&s, 0));
    // linearity in the vector
    let z = FockOperator::emit(modes.clone(), &[(0, GQ::int(1)), (1, GQ::i())]);
    let sum = FockOperator::emit(modes.clone(), &[(0, GQ::int(1))])
        .add(&FockOperator::emit(modes.clone(), &[(1, GQ::int(1))]).scale(&GQ::i()));
    assert_eq!(z, sum);
    // transposition: ⟨λ, ζ|ψ⟩ = ⟨ζ◊λ, ψ⟩
    let psi = s.exterior_product(&ket(&s, 0), &ket(&s, 1));
    let zeta = ket(&s, 0);
    let lambda = ket(&s, 1);
    assert_eq!(
        s.pairing(&lambda, &s.interior_product(&zeta, &psi)),
        s.pairing(&s.exterior_product(&zeta, &lambda), &psi)
    );
}

#[test]
fn apply_examples() {
    let s = space(&[Statistics::Fermion], 4);
    let id: FockOperator = s.identity();
    let psi = ket(&s, 0);
    assert_eq!(s.apply(&id, &psi), psi);
    let n = s.creator::<GQ>(0).mul(&s.annihilator(0));
    assert_eq!(s.apply(&n, &psi), psi);
    assert!(s.apply(&n, &s.vacuum()).is_zero());
    let d = Dense::new(vec![true], 4);
    let dn = matmul(&d.ladder(0, true), &d.ladder(0, false));
    assert_eq!(dn[1][1], GQ::int(1));
    assert_eq!(dn[0][0], GQ::int(0));
}

#[test]
fn superbracket_examples() {
    let s = space(&[Statistics::Fermion, Statistics::Fermion], 4);
    let a0: FockOperator = s.annihilator(0);
    let ad0: FockOperator = s.creator(0);
    let ad1: FockOperator = s.creator(1);
    assert_eq!(a0.superbracket(&ad0).unwrap(), s.identity());
    assert!(a0.superbracket(&ad1).unwrap().is_zero());
    let mixed = a0.add(&s.creator::<GQ>(0).mul(&s.annihilator(0)));
    assert!(mixed.superbracket(&a0).is_err());

    let b = space(&[Statistics::Boson], 4);
    let comm = b.annihilator::<GQ>(0).superbracket(&b.creator(0)).unwrap();
    let d = Dense::new(vec![false], 4);
    let dense = combine(&matmul(&d.ladder(0, false), &d.ladder(0, true)), &matmul(&d.ladder(0, true), &d.ladder(0, false)), -1);
    for n in 0..4u8 {
        let st: FockState = b.basis_state(vec![n]);
        assert_eq!(b.apply(&comm, &st), st);
        assert_eq!(dense[n as usize][n as usize], GQ::int(1));
    }
}

#[test]
fn normal_order_examples() {
    let s = space(&[Statistics::Fermion], 4);
    let modes = s.shared_modes();
    let word = [Ladder::annihilate(0), Ladder::create(0)];
    let number: FockOperator = s.creator::<GQ>(0).mul(&s.annihilator(0));
    let wick = normal_order(&modes, &word, GQ::int(1), OrderingRule::Wick);
    assert_eq!(wick, s.identity().sub(&number));
    let modified = normal_order(&modes, &word, GQ::int(1), OrderingRule::Modified);
    assert_eq!(modified, number.scale(&GQ::int(-1)));
    let normal = [Ladder::create(0), Ladder::annihilate(0)];
    for rule in [OrderingRule::Wick, OrderingRule::Modified] {
        assert_eq!(normal_order(&modes, &normal, GQ::int(1), rule), number);
    }
    let d = Dense::new(vec![true], 4);
    let lhs = matmul(&d.ladder(0, false), &d.ladder(0, true));
    let rhs = combine(&d.identity(), &matmul(&d.ladder(0, true), &d.ladder(0, false)), -1);
    assert_eq!(lhs, rhs);
}

#[test]
fn fermion_chain_matches_dense_anticommutator() {
    let report = free_field_check(2, GQ::int(1), Statistics::Fermion, 4).unwrap();
    assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    // ζ = −1 for two sites: ψ(x) = (a_0 + (−1)^x a_1)/√2
    let d = Dense::new(vec![true, true], 4);
    let psi = |x: usize| {
        let s = if x == 0 { 1 } else { -1 };
        combine(&d.ladder(0, false), &d.ladder(1, false), s)
    };
    let psid = |x: usize| {
        let s = if x == 0 { 1 } else { -1 };
        combine(&d.ladder(0, true), &d.ladder(1, true), s)
    };
    for x in 0..2 {
        for y in 0..2 {
            let anti = combine(&matmul(&psi(x), &psid(y)), &matmul(&psid(y), &psi(x)), 1);
            for (i, row) in anti.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let want = if i == j && x == y { 2 } else { 0 };
                    assert_eq!(v, &GQ::int(want));
                }
            }
        }
    }
}

#[test]
fn lattice_boson_and_larger_chains() {
    for n in 2..=4 {
        let r = free_field_check(n, GQ::int(1), Statistics::Boson, 4).unwrap();
        assert!(r.passed(), "N={n}: {:?}", r.failures().collect::<Vec<_>>());
    }
    let r = free_field_check(3, GQ::ratio(1, 2), Statistics::Fermion, 4).unwrap();
    assert!(r.passed());
    assert!(free_field_check(1, GQ::int(1), Statistics::Fermion, 4).is_err());
}

#[test]
fn single_site_truncated_boson_commutator() {
    // φ = a + a†, Π = −i(a − a†)/2 on the truncated dense space, n_max = 4
    let d = Dense::new(vec![false], 4);
    let a = d.ladder(0, false);
    let ad = d.ladder(0, true);
    let phi = combine(&a, &ad, 1);
    let half_i = &GQ::i() * &GQ::ratio(-1, 2);
    let pi: Matrix = combine(&a, &ad, -1).iter().map(|r| r.iter().map(|x| x * &half_i).collect()).collect();
    let comm = combine(&matmul(&phi, &pi), &matmul(&pi, &phi), -1);
    for n in 0..=2 {
        assert_eq!(comm[n][n], GQ::i());
    }
    assert_ne!(comm[d.n_max][d.n_max], GQ::i());
}

#[test]
fn charge_generates_rotations() {
    let i = GQ::i();
    let z = GQ::int(0);
    let phase = ChargeModel {
        points: 2,
        statistics: Statistics::Boson,
        generator: vec![vec![i.clone(), z.clone()], vec![z.clone(), i.clone()]],
        n_max: 4,
    };
    assert!(charge_commutator_check(&phase).unwrap().passed());
    let trivial = ChargeModel { generator: vec![vec![z.clone()]], points: 1, ..phase.clone() };
    assert!(charge_commutator_check(&trivial).unwrap().passed());
    let paulis = [
        vec![vec![z.clone(), GQ::int(1)], vec![GQ::int(1), z.clone()]],
        vec![vec![z.clone(), -&i], vec![i.clone(), z.clone()]],
        vec![vec![GQ::int(1), z.clone()], vec![z.clone(), GQ::int(-1)]],
    ];
    for p in paulis {
        let gen = p.iter().map(|r| r.iter().map(|x| x * &i).collect()).collect();
        let m = ChargeModel { points: 1, statistics: Statistics::Fermion, generator: gen, n_max: 4 };
        assert!(charge_commutator_check(&m).unwrap().passed());
    }
}

#[test]
fn charge_matches_truncated_dense_commutator() {
    // one site, two real components, M = i·1: [Q, φ^0] = φ^0
    let d = Dense::new(vec![false, false], 4);
    let half_i = &GQ::i() * &GQ::ratio(-1, 2);
    let phi = |k: usize| combine(&d.ladder(k, false), &d.ladder(k, true), 1);
    let pi = |k: usize| -> Matrix {
        combine(&d.ladder(k, false), &d.ladder(k, true), -1).iter().map(|r| r.iter().map(|x| x * &half_i).collect()).collect()
    };
    let iq = combine(&matmul(&pi(0), &phi(0)), &matmul(&pi(1), &phi(1)), 1);
    let q: Matrix = iq.iter().map(|r| r.iter().map(|x| x * &GQ::i()).collect()).collect();
    let comm = combine(&matmul(&q, &phi(0)), &matmul(&phi(0), &q), -1);
    let target = phi(0);
    for col in 0..d.basis.len() {
        if d.boson_count(col) + 2 > d.n_max {
            continue;
        }
        for row in 0..d.basis.len() {
            assert_eq!(comm[row][col], target[row][col]);
        }
    }
}

fn random_modes<R: Rng>(r: &mut R, max_points: usize) -> ModeSet {
    let points = r.gen_range(1..=max_points);
    let nsec = r.gen_range(1..=2);
    let sectors = (0..nsec)
        .map(|i| {
            let stat = if r.gen_bool(0.5) { Statistics::Fermion } else { Statistics::Boson };
            Sector::new(format!("s{i}"), r.gen_range(1..=2), stat)
        })
        .collect();
    ModeSet::lattice(points, sectors).unwrap()
}

fn random_state<R: Rng>(r: &mut R, s: &FockSpace, odd: bool, max_boson: usize) -> FockState {
    let mut st = FockState::zero();
    let n = s.modes().len();
    for _ in 0..3 {
        let mut occ = vec![0u8; n];
        let mut parity = false;
        let mut bosons = 0;
        for m in 0..n {
            if s.modes().is_fermion(m as Mode) {
                if r.gen_bool(0.3) {
                    occ[m] = 1;
                    parity = !parity;
                }
            } else if bosons < max_boson && r.gen_bool(0.3) {
                occ[m] = 1;
                bosons += 1;
            }
        }
        if parity == odd {
            st.add_term(occ, GQ::complex(r.gen_range(-2..=2), r.gen_range(-2..=2)));
        }
    }
    st
}

fn random_vector<R: Rng>(r: &mut R, s: &FockSpace, fermion: bool) -> Vec<(Mode, GQ)> {
    s.modes()
        .modes()
        .filter(|m| s.modes().is_fermion(*m) == fermion)
        .map(|m| (m, GQ::complex(r.gen_range(-2..=2), r.gen_range(-2..=2))))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn exterior_product_is_graded_commutative(seed in any::<u64>(), o1: bool, o2: bool) {
        let mut r = rng(seed);
        let s = FockSpace::new(random_modes(&mut r, 3), 4);
        let a = random_state(&mut r, &s, o1, 1);
        let b = random_state(&mut r, &s, o2, 1);
        let ab = s.exterior_product(&a, &b);
        let ba = s.exterior_product(&b, &a);
        prop_assert_eq!(ab, ba.scale(&GQ::int(if o1 && o2 { -1 } else { 1 })));
    }

    #[test]
    fn dual_products_act_in_sequence(seed in any::<u64>(), o1: bool, o2: bool) {
        let mut r = rng(seed);
        let s = FockSpace::new(random_modes(&mut r, 3), 4);
        let zeta = random_state(&mut r, &s, o1, 1);
        let xi = random_state(&mut r, &s, o2, 1);
        let psi = random_state(&mut r, &s, false, 2);
        let lhs = s.interior_product(&s.exterior_product(&zeta, &xi), &psi);
        let rhs = s.interior_product(&xi, &s.interior_product(&zeta, &psi));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn interior_product_is_graded_leibniz(seed in any::<u64>(), fermion: bool, o1: bool) {
        let mut r = rng(seed);
        let s = FockSpace::new(random_modes(&mut r, 3), 4);
        let z = random_vector(&mut r, &s, fermion);
        let zs = s.one_particle(&z);
        let phi = random_state(&mut r, &s, o1, 1);
        let psi = random_state(&mut r, &s, false, 1);
        let lhs = s.interior_product(&zs, &s.exterior_product(&phi, &psi));
        let second = s.exterior_product(&phi, &s.interior_product(&zs, &psi));
        let sign = if fermion && o1 { -1 } else { 1 };
        let rhs = s.exterior_product(&s.interior_product(&zs, &phi), &psi).add(&second.scale(&GQ::int(sign)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ladder_brackets(seed in any::<u64>(), f1: bool, f2: bool) {
        let mut r = rng(seed);
        let s = FockSpace::new(random_modes(&mut r, 3), 4);
        let modes = s.shared_modes();
        let zeta = random_vector(&mut r, &s, f1);
        let z = random_vector(&mut r, &s, f2);
        let xi = random_vector(&mut r, &s, f2);
        let a = FockOperator::absorb(modes.clone(), &zeta);
        let b = FockOperator::absorb(modes.clone(), &xi);
        let e = FockOperator::emit(modes.clone(), &z);
        let e2 = FockOperator::emit(modes.clone(), &zeta);
        prop_assert!(a.superbracket(&b).unwrap().is_zero());
        prop_assert!(e.superbracket(&e2).unwrap().is_zero());
        let pairing: GQ = zeta.iter().flat_map(|(m, c)| z.iter().filter(move |(n, _)| n == m).map(move |(_, d)| c * d)).sum();
        let expected = FockOperator::scalar(modes.clone(), pairing);
        prop_assert_eq!(a.superbracket(&e).unwrap(), expected);
    }

    #[test]
    fn modified_product_is_graded_commutative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = FockSpace::new(random_modes(&mut r, 3), 4);
        let modes: Arc<ModeSet> = s.shared_modes();
        let n = modes.len() as Mode;
        let pick = |r: &mut rand_chacha::ChaCha8Rng| Ladder { mode: r.gen_range(0..n), dagger: r.gen_bool(0.5) };
        let (x, y, w) = (pick(&mut r), pick(&mut r), pick(&mut r));
        let single = |l: Ladder| normal_order(&modes, &[l], GQ::int(1), OrderingRule::Modified);
        let (ox, oy, ow) = (single(x), single(y), single(w));
        let xy = ox.mul_with(&oy, OrderingRule::Modified);
        let yx = oy.mul_with(&ox, OrderingRule::Modified);
        let both_odd = modes.is_fermion(x.mode) && modes.is_fermion(y.mode);
        prop_assert_eq!(xy.clone(), yx.scale(&GQ::int(if both_odd { -1 } else { 1 })));
        let left = xy.mul_with(&ow, OrderingRule::Modified);
        let right = ox.mul_with(&oy.mul_with(&ow, OrderingRule::Modified), OrderingRule::Modified);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn bracket_of_derivations_is_a_derivation(seed in any::<u64>(), f1: bool, o1: bool) {
        let mut r = rng(seed);
        let s = FockSpace::new(random_modes(&mut r, 2), 4);
        let modes = s.shared_modes();
        let n = modes.len() as Mode;
        // absorption operators and the even bilinears a†_i a_j act as derivations of ◊
        let d1 = FockOperator::absorb(modes.clone(), &random_vector(&mut r, &s, f1));
        let (i, j) = (r.gen_range(0..n), r.gen_range(0..n));
        if modes.is_fermion(i) != modes.is_fermion(j) {
            return Ok(());
        }
        let d2 = s.creator::<GQ>(i).mul(&s.annihilator(j)).scale(&GQ::complex(1, 1));
        let b = d1.superbracket(&d2).unwrap();
        let phi = random_state(&mut r, &s, o1, 1);
        let psi = random_state(&mut r, &s, false, 1);
        let lhs = s.apply(&b, &s.exterior_product(&phi, &psi));
        let sign = if f1 && o1 { -1 } else { 1 };
        let rhs = s.exterior_product(&s.apply(&b, &phi), &psi)
            .add(&s.exterior_product(&phi, &s.apply(&b, &psi)).scale(&GQ::int(sign)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wick_order_agrees_with_dense_composition(seed in any::<u64>(), len in 1usize..=4) {
        let mut r = rng(seed);
        let nm = r.gen_range(1..=3);
        let fermion: Vec<bool> = (0..nm).map(|_| r.gen_bool(0.5)).collect();
        let stats: Vec<Statistics> = fermion.iter().map(|f| if *f { Statistics::Fermion } else { Statistics::Boson }).collect();
        let s = space(&stats, 4);
        let word: Vec<Ladder> = (0..len).map(|_| Ladder { mode: r.gen_range(0..nm as Mode), dagger: r.gen_bool(0.5) }).collect();
        let op = normal_order(&s.shared_modes(), &word, GQ::int(1), OrderingRule::Wick);
        let d = Dense::new(fermion, 4);
        let mut dense = d.identity();
        for l in &word {
            dense = matmul(&dense, &d.ladder(l.mode as usize, l.dagger));
        }
        let creators = word.iter().filter(|l| l.dagger).count();
        for (col, occ) in d.basis.iter().enumerate() {
            if d.boson_count(col) + creators > d.n_max {
                continue;
            }
            let out = s.apply(&op, &s.basis_state(occ.clone()));
            for (row, target) in d.basis.iter().enumerate() {
                prop_assert_eq!(out.coefficient(target), dense[row][col].clone());
            }
        }
    }
}
