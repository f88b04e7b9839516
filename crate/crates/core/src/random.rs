//! Seeded random corpora for property checks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::jet::{BackgroundId, Generator, JetPolynomial, JetSpace, MultiIndex};
use crate::scalar::{Grade, ThetaFlag, GQ};
use crate::varcalc::{BasicForm, VerticalField};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of random polynomials.
#[derive(Clone, Debug)]
pub struct PolyOptions {
    pub max_terms: usize,
    pub max_degree: usize,
    pub max_order: usize,
    pub backgrounds: bool,
    pub base_coordinates: bool,
    pub complex: bool,
}

impl Default for PolyOptions {
    fn default() -> Self {
        PolyOptions {
            max_terms: 4,
            max_degree: 3,
            max_order: 2,
            backgrounds: false,
            base_coordinates: false,
            complex: false,
        }
    }
}

fn pool(space: &JetSpace, opts: &PolyOptions) -> Vec<Generator> {
    let mut out = Vec::new();
    for id in space.fields() {
        for mi in MultiIndex::all_up_to(space.base_dim(), opts.max_order) {
            out.push(space.jet_generator(id, mi));
        }
    }
    if opts.backgrounds {
        for (b, decl) in space.backgrounds().iter().enumerate() {
            out.push(Generator::Background {
                symbol: BackgroundId(b as u16),
                deriv: MultiIndex::EMPTY,
                varies: decl.varies,
            });
        }
    }
    if opts.base_coordinates {
        out.extend((0..space.base_dim()).map(|a| Generator::Base(a as u8)));
    }
    out
}

fn coefficient<R: Rng>(rng: &mut R, complex: bool) -> GQ {
    let mut re = 0;
    while re == 0 {
        re = rng.gen_range(-3i64..=3);
    }
    let den = rng.gen_range(1i64..=2);
    let c = GQ::ratio(re, den);
    if complex && rng.gen_bool(0.3) {
        &c * &GQ::i()
    } else {
        c
    }
}

fn term<R: Rng>(rng: &mut R, pool: &[Generator], opts: &PolyOptions) -> JetPolynomial {
    let deg = rng.gen_range(0..=opts.max_degree);
    let raw: Vec<Generator> = (0..deg).filter_map(|_| pool.choose(rng).copied()).collect();
    JetPolynomial::from_raw(ThetaFlag::NONE, &raw, coefficient(rng, opts.complex))
}

/// Random polynomial, not necessarily of definite grade.
pub fn random_poly<R: Rng>(rng: &mut R, space: &JetSpace, opts: &PolyOptions) -> JetPolynomial {
    let pool = pool(space, opts);
    let n = rng.gen_range(1..=opts.max_terms);
    (0..n).map(|_| term(rng, &pool, opts)).sum()
}

/// Random polynomial homogeneous of grade `grade` (possibly zero).
pub fn random_homogeneous<R: Rng>(
    rng: &mut R,
    space: &JetSpace,
    opts: &PolyOptions,
    grade: Grade,
) -> JetPolynomial {
    let pool = pool(space, opts);
    let n = rng.gen_range(1..=opts.max_terms);
    let mut out = JetPolynomial::zero();
    for _ in 0..n {
        for _ in 0..32 {
            let t = term(rng, &pool, opts);
            if !t.is_zero() && t.has_grade(grade) {
                out += t;
                break;
            }
        }
    }
    out
}

/// Random basic form of the given degree with coefficients of mixed grade.
pub fn random_form<R: Rng>(rng: &mut R, space: &JetSpace, opts: &PolyOptions, degree: usize) -> BasicForm {
    let m = space.base_dim();
    let mut out = BasicForm::zero(m, degree);
    for mask in 0u16..(1 << m) {
        if mask.count_ones() as usize == degree && rng.gen_bool(0.7) {
            let indices: Vec<usize> = (0..m).filter(|a| mask & (1 << a) != 0).collect();
            out.set(&indices, random_poly(rng, space, opts));
        }
    }
    out
}

/// Random grade-matched vertical field; some components carry `θ`.
pub fn random_vertical_field<R: Rng>(rng: &mut R, space: &JetSpace, opts: &PolyOptions) -> VerticalField {
    let comps: Vec<_> = space
        .fields()
        .map(|id| {
            let grade = space.grade(id);
            let p = if rng.gen_bool(0.3) {
                random_homogeneous(rng, space, opts, grade.flip()).theta_times()
            } else {
                random_homogeneous(rng, space, opts, grade)
            };
            (id, p)
        })
        .collect();
    VerticalField::new(space, comps).expect("grade-matched by construction")
}
