use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::index::Generator;
use super::space::JetSpace;
use crate::scalar::{Grade, ThetaFlag, GQ};
use crate::Error;

/// Canonically ordered product of generators with exponents. Odd
/// generators never carry an exponent above one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn grade(&self) -> Grade {
        Grade::from_parity(self.0.iter().filter(|(g, _)| g.is_odd()).count())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Sorts a raw generator list into canonical order. Returns the Koszul
    /// sign of the sorting permutation restricted to odd generators, or
    /// `None` when an odd generator repeats.
    pub fn normalize(raw: &[Generator]) -> Option<(i32, Monomial)> {
        let mut v: Vec<Generator> = raw.to_vec();
        let mut sign = 1;
        // insertion sort, counting odd/odd transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                if v[j - 1].is_odd() && v[j].is_odd() {
                    sign = -sign;
                }
                v.swap(j - 1, j);
                j -= 1;
            }
        }
        let mut out: Vec<(Generator, u32)> = Vec::with_capacity(v.len());
        for g in v {
            match out.last_mut() {
                Some((last, e)) if *last == g => {
                    if g.is_odd() {
                        return None;
                    }
                    *e += 1;
                }
                _ => out.push((g, 1)),
            }
        }
        Some((sign, Monomial(out)))
    }

    /// Product `self · other` brought to canonical order.
    pub fn mul(&self, other: &Monomial) -> Option<(i32, Monomial)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut sign = 1;
        let mut odd_left = a.iter().filter(|(g, _)| g.is_odd()).count();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    if a[i].0.is_odd() {
                        odd_left -= 1;
                    }
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    if b[j].0.is_odd() && odd_left % 2 == 1 {
                        sign = -sign;
                    }
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    if a[i].0.is_odd() {
                        return None;
                    }
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for &(g, e) in &b[j..] {
            if g.is_odd() && odd_left % 2 == 1 {
                sign = -sign;
            }
            out.push((g, e));
        }
        Some((sign, Monomial(out)))
    }

    /// Left derivative with respect to the factor at `pos`: returns the sign,
    /// the exponent and the remaining monomial.
    fn strike(&self, pos: usize) -> (i32, u32, Monomial) {
        let (g, e) = self.0[pos];
        let mut sign = 1;
        if g.is_odd() {
            let before = self.0[..pos].iter().filter(|(h, _)| h.is_odd()).count();
            if before % 2 == 1 {
                sign = -1;
            }
        }
        let mut rest = self.0.clone();
        if e == 1 {
            rest.remove(pos);
        } else {
            rest[pos].1 -= 1;
        }
        (sign, e, Monomial(rest))
    }

    fn position(&self, g: &Generator) -> Option<usize> {
        self.0.binary_search_by(|(h, _)| h.cmp(g)).ok()
    }
}

type Key = (ThetaFlag, Monomial);

/// Exact polynomial in jet coordinates, background symbols and base
/// coordinates, with coefficients `c` or `c·θ`. A θ-carrying term is stored
/// with θ as its leftmost factor.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct JetPolynomial {
    terms: BTreeMap<Key, GQ>,
}

impl JetPolynomial {
    pub fn zero() -> Self {
        JetPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(GQ::one())
    }

    pub fn constant(c: GQ) -> Self {
        let mut p = Self::zero();
        p.add_term(ThetaFlag::NONE, Monomial::one(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GQ::int(n))
    }

    /// The odd parameter θ.
    pub fn theta() -> Self {
        let mut p = Self::zero();
        p.add_term(ThetaFlag::THETA, Monomial::one(), GQ::one());
        p
    }

    pub fn generator(g: Generator) -> Self {
        let mut p = Self::zero();
        p.add_term(ThetaFlag::NONE, Monomial(vec![(g, 1)]), GQ::one());
        p
    }

    /// Canonical term from a raw generator list.
    pub fn from_raw(theta: ThetaFlag, raw: &[Generator], coeff: GQ) -> Self {
        let mut p = Self::zero();
        if let Some((s, m)) = Monomial::normalize(raw) {
            p.add_term(theta, m, if s < 0 { -coeff } else { coeff });
        }
        p
    }

    pub fn add_term(&mut self, theta: ThetaFlag, mono: Monomial, coeff: GQ) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((theta, mono)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (ThetaFlag, &Monomial, &GQ)> {
        self.terms.iter().map(|((t, m), c)| (*t, m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &GQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        JetPolynomial { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Grade when all terms agree; the zero polynomial reports `Even`.
    pub fn grade(&self) -> Option<Grade> {
        let mut it = self.terms.keys().map(|(t, m)| t.grade() + m.grade());
        let first = match it.next() {
            Some(g) => g,
            None => return Some(Grade::Even),
        };
        it.all(|g| g == first).then_some(first)
    }

    /// True when `self` is zero or homogeneous of grade `g`.
    pub fn has_grade(&self, g: Grade) -> bool {
        self.is_zero() || self.grade() == Some(g)
    }

    pub fn contains_theta(&self) -> bool {
        self.terms.keys().any(|(t, _)| t.0)
    }

    /// Writes `self = θ·a + b` and returns `(a, b)`.
    pub fn split_theta(&self) -> (JetPolynomial, JetPolynomial) {
        let mut a = Self::zero();
        let mut b = Self::zero();
        for ((t, m), c) in &self.terms {
            if t.0 {
                a.terms.insert((ThetaFlag::NONE, m.clone()), c.clone());
            } else {
                b.terms.insert((ThetaFlag::NONE, m.clone()), c.clone());
            }
        }
        (a, b)
    }

    /// `θ · self`.
    pub fn theta_times(&self) -> Self {
        let mut out = Self::zero();
        for ((t, m), c) in &self.terms {
            if !t.0 {
                out.terms.insert((ThetaFlag::THETA, m.clone()), c.clone());
            }
        }
        out
    }

    pub fn max_jet_order(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|(_, m)| m.0.iter().map(|(g, _)| g.jet_order()))
            .max()
            .unwrap_or(0)
    }

    pub fn generators(&self) -> BTreeSet<Generator> {
        self.terms.keys().flat_map(|(_, m)| m.0.iter().map(|(g, _)| *g)).collect()
    }

    /// Constant term (no generators, no θ).
    pub fn constant_term(&self) -> GQ {
        self.terms.get(&(ThetaFlag::NONE, Monomial::one())).cloned().unwrap_or_else(GQ::zero)
    }

    /// Accumulates `left · (θ^t · m · c)` into `self`.
    fn add_product_with_term(&mut self, left: &JetPolynomial, t: ThetaFlag, m: &Monomial, c: &GQ) {
        for ((t1, m1), c1) in &left.terms {
            let theta = match t1.times(t) {
                Some(x) => x,
                None => continue,
            };
            let (s, mono) = match m1.mul(m) {
                Some(x) => x,
                None => continue,
            };
            // θ on the right factor moves past m1
            let flip = t.0 && m1.grade().is_odd();
            let sign = if flip { -s } else { s };
            let coeff = c1 * c;
            self.add_term(theta, mono, if sign < 0 { -coeff } else { coeff });
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Left graded partial derivative `∂^L f / ∂g`.
    pub fn partial(&self, g: &Generator) -> Self {
        let mut out = Self::zero();
        for ((t, m), c) in &self.terms {
            if let Some(pos) = m.position(g) {
                let (s, e, rest) = m.strike(pos);
                let mut sign = s;
                if t.0 && g.is_odd() {
                    sign = -sign;
                }
                let coeff = c * &GQ::int(e as i64 * sign as i64);
                out.add_term(*t, rest, coeff);
            }
        }
        out
    }

    /// `Σ_g image(g) · ∂^L f/∂g` over every generator present in `self`.
    ///
    /// For an image of the same grade as `g` this replaces each occurrence
    /// in place (an even derivation); for images of shifted grade it is the
    /// corresponding odd derivation.
    pub fn derive_with<F>(&self, mut image: F) -> Self
    where
        F: FnMut(&Generator) -> Option<JetPolynomial>,
    {
        let mut cache: HashMap<Generator, Option<JetPolynomial>> = HashMap::new();
        let mut out = Self::zero();
        for ((t, m), c) in &self.terms {
            for pos in 0..m.0.len() {
                let g = m.0[pos].0;
                let img = cache.entry(g).or_insert_with(|| image(&g).filter(|p| !p.is_zero()));
                let img = match img {
                    Some(p) => p,
                    None => continue,
                };
                let (s, e, rest) = m.strike(pos);
                let mut sign = s;
                if t.0 && g.is_odd() {
                    sign = -sign;
                }
                let coeff = c * &GQ::int(e as i64 * sign as i64);
                out.add_product_with_term(img, *t, &rest, &coeff);
            }
        }
        out
    }

    /// Odd left antiderivation `D` fixed by its values on generators:
    /// `D(θ^t g_1 ... g_k) = Σ_j (−1)^{t + ⟦g_1...g_{j−1}⟧} θ^t g_1 ... D(g_j) ... g_k`.
    /// Images must be odd for even generators and even for odd ones.
    pub fn antiderive_with<F>(&self, mut image: F) -> Self
    where
        F: FnMut(&Generator) -> Option<JetPolynomial>,
    {
        let mut cache: HashMap<Generator, Option<JetPolynomial>> = HashMap::new();
        let mut out = Self::zero();
        for ((t, m), c) in &self.terms {
            let mut odd_before = t.0 as usize;
            for pos in 0..m.0.len() {
                let (g, e) = m.0[pos];
                let img = cache.entry(g).or_insert_with(|| image(&g).filter(|p| !p.is_zero()));
                if let Some(img) = img {
                    let mut left = Self::zero();
                    let sign = if odd_before % 2 == 1 { -(e as i64) } else { e as i64 };
                    left.add_term(*t, Monomial(m.0[..pos].to_vec()), c * &GQ::int(sign));
                    let mut rest = m.0[pos + 1..].to_vec();
                    if e > 1 {
                        rest.insert(0, (g, e - 1));
                    }
                    let mut right = Self::zero();
                    right.add_term(ThetaFlag::NONE, Monomial(rest), GQ::one());
                    out += &(&left * img) * &right;
                }
                if g.is_odd() {
                    odd_before += 1;
                }
            }
        }
        out
    }

    /// Total derivative `d_a`.
    pub fn total_derivative(&self, a: usize) -> Self {
        self.derive_with(|g| match g {
            Generator::Base(b) => (*b as usize == a).then(JetPolynomial::one),
            other => other.shifted(a).map(JetPolynomial::generator),
        })
    }

    /// `d_A = d_{a1} ∘ ... ∘ d_{ak}`.
    pub fn total_derivative_multi(&self, indices: &[usize]) -> Self {
        let mut r = self.clone();
        for &a in indices {
            r = r.total_derivative(a);
        }
        r
    }

    /// Simultaneous substitution of generators. Every binding must be
    /// homogeneous of the grade of the generator it replaces.
    pub fn substitute(&self, bindings: &HashMap<Generator, JetPolynomial>) -> Result<Self, Error> {
        for (g, v) in bindings {
            if !v.has_grade(g.grade()) {
                return Err(Error::GradeMismatch(format!("binding for {g:?} has grade {:?}", v.grade())));
            }
        }
        let mut out = Self::zero();
        for ((t, m), c) in &self.terms {
            let mut acc = JetPolynomial::zero();
            acc.add_term(*t, Monomial::one(), c.clone());
            for &(g, e) in &m.0 {
                let factor = match bindings.get(&g) {
                    Some(v) => v.pow(e),
                    None => {
                        let mut p = Self::zero();
                        p.add_term(ThetaFlag::NONE, Monomial(vec![(g, e)]), GQ::one());
                        p
                    }
                };
                acc = &acc * &factor;
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        Ok(out)
    }

    /// Floating-point evaluation for numerical cross-checks. Returns `None`
    /// if a θ-term or a non-real coefficient is present.
    pub fn eval_f64<F: Fn(&Generator) -> f64>(&self, value: F) -> Option<f64> {
        let mut total = 0.0;
        for ((t, m), c) in &self.terms {
            if t.0 || !c.is_real() {
                return None;
            }
            let mut v = c.to_f64().0;
            for (g, e) in &m.0 {
                v *= value(g).powi(*e as i32);
            }
            total += v;
        }
        Some(total)
    }

    /// Deterministic text form with generator names taken from `space`.
    pub fn to_text(&self, space: &JetSpace) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (n, ((t, m), c)) in self.terms.iter().enumerate() {
            let negative_real = c.is_real() && c.re().is_negative();
            let mag = if negative_real { -c } else { c.clone() };
            if n == 0 {
                if negative_real {
                    s.push('-');
                }
            } else {
                s.push_str(if negative_real { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if t.0 {
                factors.push("θ".into());
            }
            for (g, e) in &m.0 {
                let name = space.generator_name(g);
                factors.push(if *e == 1 { name } else { format!("{name}^{e}") });
            }
            let coeff = if mag.is_real() { mag.to_string() } else { format!("({mag})") };
            if factors.is_empty() {
                s.push_str(&coeff);
            } else {
                if !mag.is_one() {
                    let _ = write!(s, "{coeff}*");
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl<'a> Add<&'a JetPolynomial> for &'a JetPolynomial {
    type Output = JetPolynomial;
    fn add(self, rhs: &JetPolynomial) -> JetPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for JetPolynomial {
    type Output = JetPolynomial;
    fn add(mut self, rhs: JetPolynomial) -> JetPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&JetPolynomial> for JetPolynomial {
    fn add_assign(&mut self, rhs: &JetPolynomial) {
        for ((t, m), c) in &rhs.terms {
            self.add_term(*t, m.clone(), c.clone());
        }
    }
}

impl AddAssign for JetPolynomial {
    fn add_assign(&mut self, rhs: JetPolynomial) {
        if self.terms.is_empty() {
            *self = rhs;
            return;
        }
        for ((t, m), c) in rhs.terms {
            self.add_term(t, m, c);
        }
    }
}

impl SubAssign<&JetPolynomial> for JetPolynomial {
    fn sub_assign(&mut self, rhs: &JetPolynomial) {
        for ((t, m), c) in &rhs.terms {
            self.add_term(*t, m.clone(), -c);
        }
    }
}

impl<'a> Sub<&'a JetPolynomial> for &'a JetPolynomial {
    type Output = JetPolynomial;
    fn sub(self, rhs: &JetPolynomial) -> JetPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for JetPolynomial {
    type Output = JetPolynomial;
    fn sub(mut self, rhs: JetPolynomial) -> JetPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &JetPolynomial {
    type Output = JetPolynomial;
    fn neg(self) -> JetPolynomial {
        JetPolynomial { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

impl Neg for JetPolynomial {
    type Output = JetPolynomial;
    fn neg(self) -> JetPolynomial {
        -&self
    }
}

impl<'a> Mul<&'a JetPolynomial> for &'a JetPolynomial {
    type Output = JetPolynomial;
    fn mul(self, rhs: &JetPolynomial) -> JetPolynomial {
        let mut out = JetPolynomial::zero();
        for ((t, m), c) in &rhs.terms {
            out.add_product_with_term(self, *t, m, c);
        }
        out
    }
}

impl Mul for JetPolynomial {
    type Output = JetPolynomial;
    fn mul(self, rhs: JetPolynomial) -> JetPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for JetPolynomial {
    fn sum<I: Iterator<Item = JetPolynomial>>(iter: I) -> Self {
        let mut acc = JetPolynomial::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl From<GQ> for JetPolynomial {
    fn from(c: GQ) -> Self {
        JetPolynomial::constant(c)
    }
}
