//! Exact scalars and Z2-grading bookkeeping.
//!
//! Every coefficient in the engine is a Gaussian rational `re + i·im` with
//! arbitrary-precision rational parts. Nothing here touches floating point;
//! identities are checked to equality.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GQ {
    re: BigRational,
    im: BigRational,
}

impl GQ {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GQ { re, im }
    }

    pub fn int(n: i64) -> Self {
        GQ::real(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a real Gaussian rational. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        GQ::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn real(re: BigRational) -> Self {
        GQ { re, im: BigRational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GQ { re: BigRational::zero(), im: BigRational::one() }
    }

    /// `re + i·im` from small integers.
    pub fn complex(re: i64, im: i64) -> Self {
        GQ {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        GQ { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `re² + im²`, the field norm down to Q.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        GQ { re: &self.re * r, im: &self.im * r }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    /// Multiplicative inverse, for the elimination helpers that need it.
    pub(crate) fn inverse(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(GQ { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn from_sign(sign: i32) -> Self {
        GQ::int(sign as i64)
    }
}

impl Zero for GQ {
    fn zero() -> Self {
        GQ { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GQ {
    fn one() -> Self {
        GQ { re: BigRational::one(), im: BigRational::zero() }
    }
}

impl From<i64> for GQ {
    fn from(n: i64) -> Self {
        GQ::int(n)
    }
}

impl From<BigRational> for GQ {
    fn from(r: BigRational) -> Self {
        GQ::real(r)
    }
}

impl<'a> Add<&'a GQ> for &'a GQ {
    type Output = GQ;
    fn add(self, rhs: &GQ) -> GQ {
        GQ { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for GQ {
    type Output = GQ;
    fn add(self, rhs: GQ) -> GQ {
        GQ { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl AddAssign<&GQ> for GQ {
    fn add_assign(&mut self, rhs: &GQ) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GQ {
    fn add_assign(&mut self, rhs: GQ) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl<'a> Sub<&'a GQ> for &'a GQ {
    type Output = GQ;
    fn sub(self, rhs: &GQ) -> GQ {
        GQ { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Sub for GQ {
    type Output = GQ;
    fn sub(self, rhs: GQ) -> GQ {
        GQ { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl SubAssign<&GQ> for GQ {
    fn sub_assign(&mut self, rhs: &GQ) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl<'a> Mul<&'a GQ> for &'a GQ {
    type Output = GQ;
    fn mul(self, rhs: &GQ) -> GQ {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GQ::real(&self.re * &rhs.re);
        }
        GQ {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for GQ {
    type Output = GQ;
    fn mul(self, rhs: GQ) -> GQ {
        &self * &rhs
    }
}

impl MulAssign<&GQ> for GQ {
    fn mul_assign(&mut self, rhs: &GQ) {
        *self = &*self * rhs;
    }
}

impl Neg for GQ {
    type Output = GQ;
    fn neg(self) -> GQ {
        GQ { re: -self.re, im: -self.im }
    }
}

impl Neg for &GQ {
    type Output = GQ;
    fn neg(self) -> GQ {
        GQ { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Sum for GQ {
    fn sum<I: Iterator<Item = GQ>>(iter: I) -> GQ {
        iter.fold(GQ::zero(), |acc, x| acc + x)
    }
}

impl Product for GQ {
    fn product<I: Iterator<Item = GQ>>(iter: I) -> GQ {
        iter.fold(GQ::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for GQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => fmt_imag(f, &self.im, false),
            (false, false) => {
                write!(f, "{}", self.re)?;
                fmt_imag(f, &self.im, true)
            }
        }
    }
}

fn fmt_imag(f: &mut fmt::Formatter<'_>, im: &BigRational, with_plus: bool) -> fmt::Result {
    let sign = if im.is_negative() { "-" } else if with_plus { "+" } else { "" };
    let mag = im.abs();
    if mag.is_one() {
        write!(f, "{sign}i")
    } else {
        write!(f, "{sign}{mag}i")
    }
}

/// Parses the forms printed by `Display`: `3`, `-1/2`, `i`, `-3/4i`, `2+3i`.
impl std::str::FromStr for GQ {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || format!("cannot parse `{text}` as a Gaussian rational");
        let rational = |s: &str| -> Result<BigRational, String> {
            let s = s.strip_prefix('+').unwrap_or(s);
            match s.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.parse().map_err(|_| bad())?;
                    let d: BigInt = d.parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    Ok(BigRational::new(n, d))
                }
                None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
            }
        };
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(GQ::real(rational(&t)?));
        };
        let split = body.rfind(['+', '-']).filter(|&p| p > 0);
        let (re, im) = match split {
            Some(p) => (rational(&body[..p])?, &body[p..]),
            None => (BigRational::zero(), body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => rational(other)?,
        };
        Ok(GQ { re, im })
    }
}

impl fmt::Debug for GQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GQ({self})")
    }
}

/// Coefficient rings the Fock machinery can run over.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + From<GQ>
{
}

impl Scalar for GQ {}

/// Z2 grade (parity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Grade {
    #[default]
    Even,
    Odd,
}

impl Grade {
    pub fn from_parity(p: usize) -> Self {
        if p.is_multiple_of(2) {
            Grade::Even
        } else {
            Grade::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Grade::Odd
    }

    pub fn parity(self) -> u8 {
        self as u8
    }

    pub fn flip(self) -> Self {
        Grade::from_parity(self.parity() as usize + 1)
    }
}

impl Add for Grade {
    type Output = Grade;
    fn add(self, rhs: Grade) -> Grade {
        Grade::from_parity((self.parity() + rhs.parity()) as usize)
    }
}

impl Sum for Grade {
    fn sum<I: Iterator<Item = Grade>>(iter: I) -> Grade {
        iter.fold(Grade::Even, |a, b| a + b)
    }
}

/// Sign picked up when every element of `left` is moved past every element
/// of `right`: `(-1)^(Σ left · Σ right)`.
pub fn koszul_sign(left: &[Grade], right: &[Grade]) -> i32 {
    let l: Grade = left.iter().copied().sum();
    let r: Grade = right.iter().copied().sum();
    if l.is_odd() && r.is_odd() {
        -1
    } else {
        1
    }
}

/// Presence of the single odd parameter θ in a coefficient. `θ·θ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ThetaFlag(pub bool);

impl ThetaFlag {
    pub const NONE: ThetaFlag = ThetaFlag(false);
    pub const THETA: ThetaFlag = ThetaFlag(true);

    pub fn grade(self) -> Grade {
        if self.0 {
            Grade::Odd
        } else {
            Grade::Even
        }
    }

    /// Product of flags, `None` when both carry θ.
    pub fn times(self, other: ThetaFlag) -> Option<ThetaFlag> {
        match (self.0, other.0) {
            (true, true) => None,
            (a, b) => Some(ThetaFlag(a || b)),
        }
    }
}
