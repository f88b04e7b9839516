use std::collections::BTreeMap;
use std::sync::Arc;

use super::modes::{Mode, ModeSet};
use super::operator::FockOperator;
use crate::scalar::{Grade, Scalar, GQ};

/// Occupation numbers, one entry per mode.
pub type Occupation = Vec<u8>;

/// Sparse vector in the (truncated) Fock space over the unnormalised basis
/// `e_n = Π_i (a†_i)^{n_i} |0⟩`, the product taken in mode order.
#[derive(Clone, Debug, PartialEq)]
pub struct FockState<C = GQ> {
    terms: BTreeMap<Occupation, C>,
    truncated: bool,
}

impl<C: Scalar> FockState<C> {
    pub fn zero() -> Self {
        FockState { terms: BTreeMap::new(), truncated: false }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Occupation, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, occ: &[u8]) -> C {
        self.terms.get(occ).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when some term was dropped because it exceeded the truncation.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn add_term(&mut self, occ: Occupation, c: C) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&occ) {
            Some(old) => old + c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(occ, merged);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out.truncated |= other.truncated;
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), c.clone() * v.clone());
        }
        out.truncated = self.truncated;
        out
    }

    /// Same vector with the truncation flag cleared; used when comparing.
    pub fn without_flag(mut self) -> Self {
        self.truncated = false;
        self
    }
}

/// Mode set plus the bosonic truncation `n_max` on total boson occupancy.
#[derive(Clone, Debug)]
pub struct FockSpace {
    modes: Arc<ModeSet>,
    n_max: usize,
}

pub const DEFAULT_N_MAX: usize = 4;

impl FockSpace {
    pub fn new(modes: ModeSet, n_max: usize) -> Self {
        FockSpace { modes: Arc::new(modes), n_max }
    }

    pub fn shared_modes(&self) -> Arc<ModeSet> {
        self.modes.clone()
    }

    pub fn creator<C: Scalar>(&self, m: Mode) -> FockOperator<C> {
        FockOperator::creator(self.modes.clone(), m)
    }

    pub fn annihilator<C: Scalar>(&self, m: Mode) -> FockOperator<C> {
        FockOperator::annihilator(self.modes.clone(), m)
    }

    pub fn identity<C: Scalar>(&self) -> FockOperator<C> {
        FockOperator::identity(self.modes.clone())
    }

    pub fn modes(&self) -> &ModeSet {
        &self.modes
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn boson_occupancy(&self, occ: &[u8]) -> usize {
        occ.iter()
            .enumerate()
            .filter(|(m, _)| !self.modes.is_fermion(*m as Mode))
            .map(|(_, &n)| n as usize)
            .sum()
    }

    pub fn vacuum<C: Scalar>(&self) -> FockState<C> {
        self.basis_state(vec![0; self.modes.len()])
    }

    pub fn basis_state<C: Scalar>(&self, occ: Occupation) -> FockState<C> {
        let mut s = FockState::zero();
        s.add_term(occ, C::one());
        s
    }

    /// `Σ z_m |m⟩`.
    pub fn one_particle<C: Scalar>(&self, z: &[(Mode, C)]) -> FockState<C> {
        let mut s = FockState::zero();
        for (m, c) in z {
            let mut occ = vec![0; self.modes.len()];
            occ[*m as usize] = 1;
            s.add_term(occ, c.clone());
        }
        s
    }

    /// Grade of a basis vector.
    pub fn grade_of(&self, occ: &[u8]) -> Grade {
        let odd: usize = occ
            .iter()
            .enumerate()
            .filter(|(m, _)| self.modes.is_fermion(*m as Mode))
            .map(|(_, &n)| n as usize)
            .sum();
        Grade::from_parity(odd)
    }

    /// Grade of a state, when definite.
    pub fn grade<C: Scalar>(&self, s: &FockState<C>) -> Option<Grade> {
        let mut it = s.terms.keys().map(|k| self.grade_of(k));
        let first = it.next().unwrap_or(Grade::Even);
        it.all(|g| g == first).then_some(first)
    }

    fn fermion_sign(&self, occ: &[u8], m: Mode) -> bool {
        if !self.modes.is_fermion(m) {
            return false;
        }
        let passed: usize = (0..m as usize)
            .filter(|&i| self.modes.is_fermion(i as Mode))
            .map(|i| occ[i] as usize)
            .sum();
        passed % 2 == 1
    }

    /// `a†_m` on a basis vector: the sign, the new occupation, or `None`
    /// (with `true` when the truncation dropped the term).
    fn raise(&self, occ: &[u8], m: Mode) -> Result<(bool, Occupation), bool> {
        let i = m as usize;
        if self.modes.is_fermion(m) {
            if occ[i] == 1 {
                return Err(false);
            }
        } else if self.boson_occupancy(occ) >= self.n_max {
            return Err(true);
        }
        let mut next = occ.to_vec();
        next[i] += 1;
        Ok((self.fermion_sign(occ, m), next))
    }

    /// `a_m` on a basis vector: sign, multiplicity, new occupation.
    fn lower(&self, occ: &[u8], m: Mode) -> Option<(bool, u8, Occupation)> {
        let i = m as usize;
        if occ[i] == 0 {
            return None;
        }
        let mut next = occ.to_vec();
        next[i] -= 1;
        Some((self.fermion_sign(occ, m), occ[i], next))
    }

    pub fn create<C: Scalar>(&self, m: Mode, s: &FockState<C>) -> FockState<C> {
        let mut out = FockState::zero();
        out.truncated = s.truncated;
        for (occ, c) in &s.terms {
            match self.raise(occ, m) {
                Ok((neg, next)) => out.add_term(next, if neg { -c.clone() } else { c.clone() }),
                Err(dropped) => out.truncated |= dropped,
            }
        }
        out
    }

    pub fn annihilate<C: Scalar>(&self, m: Mode, s: &FockState<C>) -> FockState<C> {
        let mut out = FockState::zero();
        out.truncated = s.truncated;
        for (occ, c) in &s.terms {
            if let Some((neg, mult, next)) = self.lower(occ, m) {
                let v = C::from(GQ::int(mult as i64)) * c.clone();
                out.add_term(next, if neg { -v } else { v });
            }
        }
        out
    }

    /// Exterior product `φ ◊ ψ`: the creation word of each term of `φ`
    /// applied to `ψ`.
    pub fn exterior_product<C: Scalar>(&self, phi: &FockState<C>, psi: &FockState<C>) -> FockState<C> {
        let mut out = FockState::zero();
        out.truncated = phi.truncated || psi.truncated;
        for (occ, c) in &phi.terms {
            let mut cur = psi.scale(c);
            for m in self.word(occ).into_iter().rev() {
                cur = self.create(m, &cur);
            }
            out = out.add(&cur);
        }
        out
    }

    /// Interior product `λ | ψ`. A dual basis monomial `ζ_1 ◊ ... ◊ ζ_k`
    /// (in mode order) acts by applying its leftmost factor first.
    pub fn interior_product<C: Scalar>(&self, lambda: &FockState<C>, psi: &FockState<C>) -> FockState<C> {
        let mut out = FockState::zero();
        out.truncated = psi.truncated;
        for (occ, c) in &lambda.terms {
            let mut cur = psi.scale(c);
            for m in self.word(occ) {
                cur = self.annihilate(m, &cur);
            }
            out = out.add(&cur);
        }
        out
    }

    /// `⟨λ, ψ⟩`: the vacuum component of `λ | ψ`.
    pub fn pairing<C: Scalar>(&self, lambda: &FockState<C>, psi: &FockState<C>) -> C {
        self.interior_product(lambda, psi).coefficient(&vec![0; self.modes.len()])
    }

    fn word(&self, occ: &[u8]) -> Vec<Mode> {
        let mut w = Vec::new();
        for (m, &n) in occ.iter().enumerate() {
            for _ in 0..n {
                w.push(m as Mode);
            }
        }
        w
    }

    /// Linear action of a normal-ordered operator: annihilators act first,
    /// rightmost factor first.
    pub fn apply<C: Scalar>(&self, op: &FockOperator<C>, psi: &FockState<C>) -> FockState<C> {
        let mut out = FockState::zero();
        out.truncated = psi.truncated;
        for ((cre, ann), c) in op.terms() {
            let mut cur = psi.scale(c);
            for &m in ann.iter().rev() {
                cur = self.annihilate(m, &cur);
            }
            for &m in cre.iter().rev() {
                cur = self.create(m, &cur);
            }
            out = out.add(&cur);
        }
        out
    }

    /// All basis occupations within the truncation, bosonic occupancy at
    /// most `limit`.
    pub fn basis(&self, limit: usize) -> Vec<Occupation> {
        let n = self.modes.len();
        let mut out = vec![Vec::new()];
        for m in 0..n {
            let mut next = Vec::new();
            for occ in &out {
                let cap = if self.modes.is_fermion(m as Mode) {
                    1
                } else {
                    limit.min(self.n_max) - self.boson_occupancy(occ).min(limit)
                };
                for k in 0..=cap {
                    let mut o: Vec<u8> = occ.clone();
                    o.push(k as u8);
                    next.push(o);
                }
            }
            out = next;
        }
        out
    }
}
