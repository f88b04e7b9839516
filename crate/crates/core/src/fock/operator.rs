use std::collections::BTreeMap;
use std::sync::Arc;

use super::modes::{Mode, ModeSet};
use crate::scalar::{Grade, Scalar, GQ};
use crate::Error;

/// A single creation (`dagger`) or annihilation operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ladder {
    pub mode: Mode,
    pub dagger: bool,
}

impl Ladder {
    pub fn create(mode: Mode) -> Self {
        Ladder { mode, dagger: true }
    }

    pub fn annihilate(mode: Mode) -> Self {
        Ladder { mode, dagger: false }
    }
}

/// How `a_i a†_j` is rewritten when moving emissions to the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingRule {
    /// Exact operator identity, contraction terms kept.
    Wick,
    /// Contractions dropped, i.e. `⟦a, a†⟧ = 0`.
    Modified,
}

type Key = (Vec<Mode>, Vec<Mode>);

/// Normal-ordered operator `Σ c · a†_{i1}...a†_{ip} a_{j1}...a_{jq}` with
/// both index lists ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct FockOperator<C = GQ> {
    modes: Arc<ModeSet>,
    terms: BTreeMap<Key, C>,
}

fn add_into<C: Scalar>(map: &mut BTreeMap<Key, C>, key: Key, c: C) {
    if c.is_zero() {
        return;
    }
    let merged = match map.remove(&key) {
        Some(old) => old + c,
        None => c,
    };
    if !merged.is_zero() {
        map.insert(key, merged);
    }
}

/// Sorts a list of same-kind ladder modes ascending. Returns `None` if a
/// fermionic mode repeats, else whether the sign flipped.
fn sort_modes(modes: &ModeSet, list: &mut [Mode]) -> Option<bool> {
    let mut neg = false;
    for i in 1..list.len() {
        let mut j = i;
        while j > 0 && list[j - 1] > list[j] {
            if modes.is_fermion(list[j - 1]) && modes.is_fermion(list[j]) {
                neg = !neg;
            }
            list.swap(j - 1, j);
            j -= 1;
        }
    }
    if list.windows(2).any(|w| w[0] == w[1] && modes.is_fermion(w[0])) {
        return None;
    }
    Some(neg)
}

/// Normal-ordered expansion of `coeff · word`.
pub fn normal_order<C: Scalar>(
    modes: &Arc<ModeSet>,
    word: &[Ladder],
    coeff: C,
    rule: OrderingRule,
) -> FockOperator<C> {
    let mut out = FockOperator::zero(modes.clone());
    out.accumulate_word(word.to_vec(), coeff, rule);
    out
}

impl<C: Scalar> FockOperator<C> {
    pub fn zero(modes: Arc<ModeSet>) -> Self {
        FockOperator { modes, terms: BTreeMap::new() }
    }

    pub fn identity(modes: Arc<ModeSet>) -> Self {
        Self::scalar(modes, C::one())
    }

    pub fn scalar(modes: Arc<ModeSet>, c: C) -> Self {
        let mut out = Self::zero(modes);
        add_into(&mut out.terms, (Vec::new(), Vec::new()), c);
        out
    }

    pub fn creator(modes: Arc<ModeSet>, m: Mode) -> Self {
        let mut out = Self::zero(modes);
        add_into(&mut out.terms, (vec![m], Vec::new()), C::one());
        out
    }

    pub fn annihilator(modes: Arc<ModeSet>, m: Mode) -> Self {
        let mut out = Self::zero(modes);
        add_into(&mut out.terms, (Vec::new(), vec![m]), C::one());
        out
    }

    /// Emission operator `Σ z_m a†_m` of a one-particle vector.
    pub fn emit(modes: Arc<ModeSet>, z: &[(Mode, C)]) -> Self {
        let mut out = Self::zero(modes);
        for (m, c) in z {
            add_into(&mut out.terms, (vec![*m], Vec::new()), c.clone());
        }
        out
    }

    /// Absorption operator `Σ ζ_m a_m` of a one-particle dual vector.
    pub fn absorb(modes: Arc<ModeSet>, zeta: &[(Mode, C)]) -> Self {
        let mut out = Self::zero(modes);
        for (m, c) in zeta {
            add_into(&mut out.terms, (Vec::new(), vec![*m]), c.clone());
        }
        out
    }

    pub fn modes(&self) -> &Arc<ModeSet> {
        &self.modes
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the identity.
    pub fn scalar_part(&self) -> C {
        self.terms.get(&(Vec::new(), Vec::new())).cloned().unwrap_or_else(C::zero)
    }

    /// True when the operator is `c · 1` for some `c`.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|(a, b)| a.is_empty() && b.is_empty())
    }

    pub fn grade(&self) -> Option<Grade> {
        let mut it = self.terms.keys().map(|(cre, ann)| {
            Grade::from_parity(cre.iter().chain(ann.iter()).filter(|m| self.modes.is_fermion(**m)).count())
        });
        let first = it.next().unwrap_or(Grade::Even);
        it.all(|g| g == first).then_some(first)
    }

    fn accumulate_word(&mut self, word: Vec<Ladder>, coeff: C, rule: OrderingRule) {
        let modes = self.modes.clone();
        let mut stack = vec![(word, coeff)];
        while let Some((w, c)) = stack.pop() {
            if c.is_zero() {
                continue;
            }
            match w.windows(2).position(|p| !p[0].dagger && p[1].dagger) {
                Some(i) => {
                    let (x, y) = (w[i], w[i + 1]);
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    let odd = modes.is_fermion(x.mode) && modes.is_fermion(y.mode);
                    if rule == OrderingRule::Wick && x.mode == y.mode {
                        let mut contracted = w.clone();
                        contracted.drain(i..i + 2);
                        stack.push((contracted, c.clone()));
                    }
                    stack.push((swapped, if odd { -c } else { c }));
                }
                None => {
                    let split = w.iter().position(|l| !l.dagger).unwrap_or(w.len());
                    let mut cre: Vec<Mode> = w[..split].iter().map(|l| l.mode).collect();
                    let mut ann: Vec<Mode> = w[split..].iter().map(|l| l.mode).collect();
                    let (Some(n1), Some(n2)) = (sort_modes(&modes, &mut cre), sort_modes(&modes, &mut ann)) else {
                        continue;
                    };
                    add_into(&mut self.terms, (cre, ann), if n1 ^ n2 { -c } else { c });
                }
            }
        }
    }

    fn word_of(key: &Key) -> Vec<Ladder> {
        key.0
            .iter()
            .map(|&m| Ladder::create(m))
            .chain(key.1.iter().map(|&m| Ladder::annihilate(m)))
            .collect()
    }

    /// Product `self · other` under the given rule.
    pub fn mul_with(&self, other: &Self, rule: OrderingRule) -> Self {
        let mut out = Self::zero(self.modes.clone());
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut w = Self::word_of(k1);
                w.extend(Self::word_of(k2));
                out.accumulate_word(w, c1.clone() * c2.clone(), rule);
            }
        }
        out
    }

    /// Operator composition `self ∘ other`.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_with(other, OrderingRule::Wick)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_into(&mut out.terms, k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.modes.clone());
        for (k, v) in &self.terms {
            add_into(&mut out.terms, k.clone(), c.clone() * v.clone());
        }
        out
    }

    /// `⟦X, Y⟧ = XY − (−1)^{⟦X⟧⟦Y⟧} YX`; both operands need a definite grade.
    pub fn superbracket(&self, other: &Self) -> Result<Self, Error> {
        let gx = self.grade().ok_or(Error::IndefiniteGrade)?;
        let gy = other.grade().ok_or(Error::IndefiniteGrade)?;
        let xy = self.mul(other);
        let yx = other.mul(self);
        Ok(if gx.is_odd() && gy.is_odd() { xy.add(&yx) } else { xy.sub(&yx) })
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((cre, ann), c)| {
                let mut f = vec![format!("({c})")];
                f.extend(cre.iter().map(|m| format!("a+[{}]", self.modes.name(*m))));
                f.extend(ann.iter().map(|m| format!("a[{}]", self.modes.name(*m))));
                f.join("*")
            })
            .collect();
        parts.join(" + ")
    }
}
