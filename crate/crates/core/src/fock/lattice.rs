//! Free fields on a periodic one-dimensional lattice with exact momentum
//! space coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::modes::{Mode, ModeSet, Sector, Statistics};
use super::operator::FockOperator;
use super::state::FockSpace;
use crate::report::CheckReport;
use crate::scalar::{Scalar, GQ};
use crate::Error;

/// Integer coefficients of the cyclotomic polynomial `Φ_n`, lowest degree
/// first.
pub fn cyclotomic(n: usize) -> Vec<i64> {
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = divide_exact(&num, &cyclotomic(d));
        }
    }
    num
}

fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    q
}

/// Shared data of a lattice: number of sites and squared mass.
#[derive(Debug)]
pub struct LatticeContext {
    sites: usize,
    mass_sq: GQ,
    phi: Vec<i64>,
}

impl LatticeContext {
    pub fn new(sites: usize, mass_sq: GQ) -> Arc<Self> {
        Arc::new(LatticeContext { sites, mass_sq, phi: cyclotomic(sites) })
    }

    fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn classes(&self) -> usize {
        self.sites / 2 + 1
    }

    fn reduce(&self, mut c: Vec<GQ>) -> Vec<GQ> {
        let d = self.degree();
        for k in (d..c.len()).rev() {
            let top = std::mem::replace(&mut c[k], GQ::zero());
            if top.is_zero() {
                continue;
            }
            for j in 0..d {
                let pj = self.phi[j];
                if pj != 0 {
                    let t = &top * &GQ::int(pj);
                    c[k - d + j] -= &t;
                }
            }
        }
        c.truncate(d);
        c.resize(d, GQ::zero());
        c
    }

    /// `ζ^j` with `ζ = e^{2πi/N}`.
    pub fn zeta(self: &Arc<Self>, j: i64) -> LatticeScalar {
        let n = self.sites as i64;
        let e = j.rem_euclid(n) as usize;
        let mut c = vec![GQ::zero(); n as usize];
        c[e] = GQ::one();
        let c = self.reduce(c);
        LatticeScalar::single(self.clone(), vec![0; self.classes()], c)
    }

    /// `ω_k^{half/2}` where `ω_k² = m² + 2 − ζ^k − ζ^{−k}`.
    pub fn omega_pow(self: &Arc<Self>, k: usize, half: i8) -> LatticeScalar {
        let class = k.min(self.sites - k % self.sites) % self.sites;
        let class = class.min(self.sites / 2);
        let mut exps = vec![0i8; self.classes()];
        exps[class] = half;
        let mut one = vec![GQ::zero(); self.degree()];
        one[0] = GQ::one();
        LatticeScalar::single(self.clone(), exps, one).normalized()
    }

    pub fn constant(self: &Arc<Self>, c: GQ) -> LatticeScalar {
        let mut v = vec![GQ::zero(); self.degree()];
        v[0] = c;
        LatticeScalar::single(self.clone(), vec![0; self.classes()], v)
    }

    fn omega_sq(self: &Arc<Self>, class: usize) -> Vec<GQ> {
        let n = self.sites;
        let mut c = vec![GQ::zero(); n];
        c[0] = &self.mass_sq + &GQ::int(2);
        c[class % n] -= &GQ::one();
        c[(n - class % n) % n] -= &GQ::one();
        self.reduce(c)
    }
}

/// Element of `ℚ(i)(ζ_N)[ω_k^{±1/2}]` with the rewrite `ω_k² → m² + p̂_k²`
/// applied to nonnegative powers. The context is attached lazily so that
/// `0` and `1` exist without one.
#[derive(Clone)]
pub struct LatticeScalar {
    ctx: Option<Arc<LatticeContext>>,
    terms: BTreeMap<Vec<i8>, Vec<GQ>>,
    /// Pure rational constant used before any context is attached.
    plain: GQ,
}

impl LatticeScalar {
    fn single(ctx: Arc<LatticeContext>, exps: Vec<i8>, c: Vec<GQ>) -> Self {
        let mut terms = BTreeMap::new();
        if c.iter().any(|x| !x.is_zero()) {
            terms.insert(exps, c);
        }
        LatticeScalar { ctx: Some(ctx), terms, plain: GQ::zero() }
    }

    fn plain(c: GQ) -> Self {
        LatticeScalar { ctx: None, terms: BTreeMap::new(), plain: c }
    }

    /// Attaches the context, folding the plain constant into the terms.
    fn lift(&self, ctx: &Arc<LatticeContext>) -> Self {
        if self.ctx.is_some() {
            return self.clone();
        }
        let mut out = ctx.constant(self.plain.clone());
        out.terms.retain(|_, c| c.iter().any(|x| !x.is_zero()));
        out
    }

    fn context(a: &Self, b: &Self) -> Option<Arc<LatticeContext>> {
        a.ctx.clone().or_else(|| b.ctx.clone())
    }

    fn normalized(mut self) -> Self {
        let ctx = match &self.ctx {
            Some(c) => c.clone(),
            None => return self,
        };
        loop {
            let key = self.terms.keys().find(|k| k.iter().any(|&e| e >= 4)).cloned();
            let Some(key) = key else { break };
            let c = self.terms.remove(&key).unwrap();
            let class = key.iter().position(|&e| e >= 4).unwrap();
            let mut lowered = key.clone();
            lowered[class] -= 4;
            let prod = cyc_mul(&ctx, &c, &ctx.omega_sq(class));
            add_cyc(&mut self.terms, lowered, prod);
        }
        self
    }

    /// The rational part when the value is a constant in `ℚ(i)`.
    pub fn as_constant(&self) -> Option<GQ> {
        if self.ctx.is_none() {
            return Some(self.plain.clone());
        }
        let d = self.ctx.as_ref().unwrap().degree();
        let zero_key = vec![0i8; self.ctx.as_ref().unwrap().classes()];
        match self.terms.len() {
            0 => Some(GQ::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().unwrap();
                (k == &zero_key && c[1..d].iter().all(|x| x.is_zero())).then(|| c[0].clone())
            }
            _ => None,
        }
    }
}

fn cyc_mul(ctx: &LatticeContext, a: &[GQ], b: &[GQ]) -> Vec<GQ> {
    let mut out = vec![GQ::zero(); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    ctx.reduce(out)
}

fn add_cyc(map: &mut BTreeMap<Vec<i8>, Vec<GQ>>, key: Vec<i8>, c: Vec<GQ>) {
    let entry = map.entry(key.clone()).or_insert_with(|| vec![GQ::zero(); c.len()]);
    for (x, y) in entry.iter_mut().zip(c) {
        *x += y;
    }
    if entry.iter().all(|x| x.is_zero()) {
        map.remove(&key);
    }
}

impl PartialEq for LatticeScalar {
    fn eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
}

impl fmt::Debug for LatticeScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LatticeScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.is_none() {
            return write!(f, "{}", self.plain);
        }
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in &self.terms {
            let cyc: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| if j == 0 { format!("{x}") } else { format!("({x})z^{j}") })
                .collect();
            let om: Vec<String> =
                k.iter().enumerate().filter(|(_, e)| **e != 0).map(|(c, e)| format!("w{c}^({e}/2)")).collect();
            let mut s = format!("[{}]", cyc.join("+"));
            for o in om {
                s.push('*');
                s.push_str(&o);
            }
            parts.push(s);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Zero for LatticeScalar {
    fn zero() -> Self {
        Self::plain(GQ::zero())
    }
    fn is_zero(&self) -> bool {
        match &self.ctx {
            None => self.plain.is_zero(),
            Some(_) => self.terms.is_empty(),
        }
    }
}

impl One for LatticeScalar {
    fn one() -> Self {
        Self::plain(GQ::one())
    }
}

impl From<GQ> for LatticeScalar {
    fn from(c: GQ) -> Self {
        Self::plain(c)
    }
}

impl Add for LatticeScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        match Self::context(&self, &rhs) {
            None => Self::plain(self.plain + rhs.plain),
            Some(ctx) => {
                let mut out = self.lift(&ctx);
                for (k, c) in rhs.lift(&ctx).terms {
                    add_cyc(&mut out.terms, k, c);
                }
                out
            }
        }
    }
}

impl Neg for LatticeScalar {
    type Output = Self;
    fn neg(mut self) -> Self {
        self.plain = -self.plain;
        for c in self.terms.values_mut() {
            for x in c.iter_mut() {
                *x = -&*x;
            }
        }
        self
    }
}

impl Sub for LatticeScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for LatticeScalar {
    type Output = Self;
    // exponent vectors add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        match Self::context(&self, &rhs) {
            None => Self::plain(self.plain * rhs.plain),
            Some(ctx) => {
                let (a, b) = (self.lift(&ctx), rhs.lift(&ctx));
                let mut out = LatticeScalar { ctx: Some(ctx.clone()), terms: BTreeMap::new(), plain: GQ::zero() };
                for (ka, ca) in &a.terms {
                    for (kb, cb) in &b.terms {
                        let k: Vec<i8> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                        add_cyc(&mut out.terms, k, cyc_mul(&ctx, ca, cb));
                    }
                }
                out.normalized()
            }
        }
    }
}

impl Scalar for LatticeScalar {}

/// Lattice fields of one free species, built over momentum modes
/// `k = 0..N`. The fields are the unnormalised
/// `φ̃(x) = Σ_k ω_k^{-1/2}(ζ^{kx} a_k + ζ^{-kx} a†_k)` and
/// `Π̃(x) = −i Σ_k ω_k^{1/2}(ζ^{kx} a_k − ζ^{-kx} a†_k)`, so that
/// `φ = φ̃/√(2N)` and `Π = Π̃/√(2N)`. For fermions `ψ̃(x) = Σ_k ζ^{kx} a_k`
/// and `ψ = ψ̃/√N`.
pub struct FreeLatticeField {
    ctx: Arc<LatticeContext>,
    space: FockSpace,
    statistics: Statistics,
}

impl FreeLatticeField {
    pub fn new(sites: usize, mass: GQ, statistics: Statistics, n_max: usize) -> Result<Self, Error> {
        if sites < 2 {
            return Err(Error::InvalidModel("lattice needs at least two sites".into()));
        }
        let points = (0..sites).map(|k| format!("k{k}")).collect();
        let modes = ModeSet::new(points, vec![Sector::new("a", 1, statistics)])?;
        let ctx = LatticeContext::new(sites, &mass * &mass);
        Ok(FreeLatticeField { ctx, space: FockSpace::new(modes, n_max), statistics })
    }

    pub fn space(&self) -> &FockSpace {
        &self.space
    }

    fn mode(&self, k: usize) -> Mode {
        self.space.modes().mode(k, 0, 0)
    }

    fn sum(&self, coeff_a: impl Fn(usize) -> LatticeScalar, coeff_ad: impl Fn(usize) -> LatticeScalar) -> FockOperator<LatticeScalar> {
        let modes = self.space.shared_modes();
        let mut op = FockOperator::zero(modes.clone());
        for k in 0..self.ctx.sites {
            op = op.add(&FockOperator::annihilator(modes.clone(), self.mode(k)).scale(&coeff_a(k)));
            op = op.add(&FockOperator::creator(modes.clone(), self.mode(k)).scale(&coeff_ad(k)));
        }
        op
    }

    pub fn phi(&self, x: usize) -> FockOperator<LatticeScalar> {
        let ctx = &self.ctx;
        let x = x as i64;
        self.sum(
            |k| ctx.omega_pow(k, -1) * ctx.zeta(k as i64 * x),
            |k| ctx.omega_pow(k, -1) * ctx.zeta(-(k as i64) * x),
        )
    }

    pub fn pi(&self, x: usize) -> FockOperator<LatticeScalar> {
        let ctx = &self.ctx;
        let x = x as i64;
        let mi = ctx.constant(-GQ::i());
        let i = ctx.constant(GQ::i());
        self.sum(
            |k| mi.clone() * ctx.omega_pow(k, 1) * ctx.zeta(k as i64 * x),
            |k| i.clone() * ctx.omega_pow(k, 1) * ctx.zeta(-(k as i64) * x),
        )
    }

    pub fn psi(&self, x: usize) -> FockOperator<LatticeScalar> {
        let ctx = &self.ctx;
        let x = x as i64;
        self.sum(|k| ctx.zeta(k as i64 * x), |_| LatticeScalar::zero())
    }

    pub fn psi_dagger(&self, x: usize) -> FockOperator<LatticeScalar> {
        let ctx = &self.ctx;
        let x = x as i64;
        self.sum(|_| LatticeScalar::zero(), |k| ctx.zeta(-(k as i64) * x))
    }

    fn expect_scalar(
        &self,
        report: &mut CheckReport,
        name: String,
        op: Result<FockOperator<LatticeScalar>, Error>,
        scale: GQ,
        expected: GQ,
    ) {
        let op = match op {
            Ok(op) => op.scale(&self.ctx.constant(scale)),
            Err(e) => return report.fail(name, e.to_string()),
        };
        let ok = op.is_scalar() && op.scalar_part().as_constant() == Some(expected.clone());
        if !ok {
            return report.fail(name, format!("got {}, expected {expected}", op.to_text()));
        }
        // the operator is c·1 exactly; also confirm on the guarded subspace
        let guard = self.space.n_max().saturating_sub(2);
        for occ in self.space.basis(guard) {
            let s = self.space.basis_state::<LatticeScalar>(occ.clone());
            let out = self.space.apply(&op, &s);
            let want = s.scale(&self.ctx.constant(expected.clone()));
            if out.clone().without_flag() != want {
                return report.fail(name, format!("mismatch on occupation {occ:?}"));
            }
        }
        report.pass(name);
    }

    /// Equal-time rules for every pair of sites.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let n = self.ctx.sites;
        for x in 0..n {
            for y in 0..n {
                let delta = if x == y { GQ::one() } else { GQ::zero() };
                match self.statistics {
                    Statistics::Boson => {
                        let norm = GQ::ratio(1, 2 * n as i64);
                        self.expect_scalar(
                            &mut report,
                            format!("[phi({x}),pi({y})] = i delta"),
                            self.phi(x).superbracket(&self.pi(y)),
                            norm.clone(),
                            &GQ::i() * &delta,
                        );
                        self.expect_scalar(
                            &mut report,
                            format!("[phi({x}),phi({y})] = 0"),
                            self.phi(x).superbracket(&self.phi(y)),
                            norm.clone(),
                            GQ::zero(),
                        );
                        self.expect_scalar(
                            &mut report,
                            format!("[pi({x}),pi({y})] = 0"),
                            self.pi(x).superbracket(&self.pi(y)),
                            norm,
                            GQ::zero(),
                        );
                    }
                    Statistics::Fermion => {
                        let norm = GQ::ratio(1, n as i64);
                        self.expect_scalar(
                            &mut report,
                            format!("{{psi({x}),psi+({y})}} = delta"),
                            self.psi(x).superbracket(&self.psi_dagger(y)),
                            norm.clone(),
                            delta,
                        );
                        self.expect_scalar(
                            &mut report,
                            format!("{{psi({x}),psi({y})}} = 0"),
                            self.psi(x).superbracket(&self.psi(y)),
                            norm,
                            GQ::zero(),
                        );
                    }
                }
            }
        }
        report
    }
}

/// Builds the lattice fields and checks the equal-time super-commutation
/// rules exactly.
pub fn free_field_check(sites: usize, mass: GQ, statistics: Statistics, n_max: usize) -> Result<CheckReport, Error> {
    Ok(FreeLatticeField::new(sites, mass, statistics, n_max)?.check())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..7 {
            let ctx = LatticeContext::new(n, GQ::one());
            let s = (0..n as i64).map(|k| ctx.zeta(k)).fold(LatticeScalar::zero(), |a, b| a + b);
            assert!(s.is_zero(), "n = {n}");
            assert_eq!((ctx.zeta(1) * ctx.zeta(-1)).as_constant(), Some(GQ::one()));
        }
    }

    #[test]
    fn omega_rewrite() {
        let ctx = LatticeContext::new(4, GQ::int(1));
        // ω_2² = 1 + 2 − ζ² − ζ^{−2} = 5 for N = 4
        let w = ctx.omega_pow(2, 1);
        assert_eq!((w.clone() * w.clone() * w.clone() * w).as_constant(), Some(GQ::int(5)));
        assert_eq!((ctx.omega_pow(1, -1) * ctx.omega_pow(3, 1)).as_constant(), Some(GQ::one()));
    }
}
