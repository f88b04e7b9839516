//! Oracles shared by the integration tests.
#![allow(dead_code)]

use superjet::jet::{Generator, JetSpace};
use superjet::scalar::{Grade, GQ};
use superjet::varcalc::LagrangianDensity;

/// Dense matrices of `a†_m` and `a_m` over an explicit basis, built from
/// the occupation-number rules alone.
pub struct Dense {
    pub basis: Vec<Vec<u8>>,
    pub fermion: Vec<bool>,
    pub n_max: usize,
}

pub type Matrix = Vec<Vec<GQ>>;

impl Dense {
    pub fn new(fermion: Vec<bool>, n_max: usize) -> Self {
        let mut basis = vec![vec![]];
        for &f in &fermion {
            let mut next = vec![];
            for b in &basis {
                let used: usize = b.iter().zip(&fermion).filter(|(_, f)| !**f).map(|(n, _)| *n as usize).sum();
                let cap = if f { 1 } else { n_max - used };
                for k in 0..=cap {
                    let mut c: Vec<u8> = b.clone();
                    c.push(k as u8);
                    next.push(c);
                }
            }
            basis = next;
        }
        Dense { basis, fermion, n_max }
    }

    pub fn index(&self, occ: &[u8]) -> Option<usize> {
        self.basis.iter().position(|b| b == occ)
    }

    pub fn ladder(&self, m: usize, dagger: bool) -> Matrix {
        let n = self.basis.len();
        let mut out = vec![vec![GQ::int(0); n]; n];
        for (col, occ) in self.basis.iter().enumerate() {
            let passed: usize = (0..m).filter(|&i| self.fermion[i]).map(|i| occ[i] as usize).sum();
            let sign = if self.fermion[m] && passed % 2 == 1 { -1 } else { 1 };
            let mut next = occ.clone();
            let factor = if dagger {
                next[m] += 1;
                1
            } else {
                if occ[m] == 0 {
                    continue;
                }
                next[m] -= 1;
                occ[m] as i64
            };
            if let Some(row) = self.index(&next) {
                out[row][col] = GQ::int(sign * factor);
            }
        }
        out
    }

    pub fn identity(&self) -> Matrix {
        let n = self.basis.len();
        (0..n).map(|i| (0..n).map(|j| GQ::int((i == j) as i64)).collect()).collect()
    }

    pub fn boson_count(&self, col: usize) -> usize {
        self.basis[col].iter().zip(&self.fermion).filter(|(_, f)| !**f).map(|(n, _)| *n as usize).sum()
    }
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![GQ::int(0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == GQ::int(0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

pub fn combine(a: &Matrix, b: &Matrix, sign: i64) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + &(y * &GQ::int(sign))).collect())
        .collect()
}


/// Discrete action of `ℓ = ½y_0² − ½y_1² − ½μ²y² − ¼g y⁴ + k y y_0²` on a
/// 5×5 grid of spacing `h` with central differences. Returns the exact
/// (five-point) derivative of the action with respect to the centre value,
/// divided by the cell area, together with `euler_lagrange(ℓ)` evaluated at
/// the centre on the same analytic field.
pub fn grid_euler_lagrange(h: f64) -> (f64, f64) {
    let (mu_sq, g, k) = (0.7, 0.3, 0.4);
    let density = |y: f64, y0: f64, y1: f64| {
        0.5 * y0 * y0 - 0.5 * y1 * y1 - 0.5 * mu_sq * y * y - 0.25 * g * y.powi(4) + k * y * y0 * y0
    };
    let mut s = JetSpace::new(2).unwrap();
    let yid = s.add_field("y", Grade::Even);
    let y = s.coord(yid);
    let (y0, y1) = (s.jet(yid, &[0]), s.jet(yid, &[1]));
    let half = GQ::ratio(1, 2);
    let sym = &(&(&(&y0 * &y0).scale(&half) - &(&y1 * &y1).scale(&half)) - &(&y * &y).scale(&GQ::ratio(7, 20)))
        - &(&(&(&y * &y) * &(&y * &y)).scale(&GQ::ratio(3, 40)) - &(&y * &(&y0 * &y0)).scale(&GQ::ratio(2, 5)));
    let el = LagrangianDensity::new(sym).unwrap().euler_lagrange(&s)[0].clone();

    let field = |x: f64, t: f64| 0.3 + 0.5 * x - 0.2 * t + 0.1 * x * x + 0.05 * x * t - 0.3 * t * t + 0.02 * x * x * x;
    let deriv = |c0: u8, c1: u8, x: f64, t: f64| -> f64 {
        match (c0, c1) {
            (0, 0) => field(x, t),
            (1, 0) => 0.5 + 0.2 * x + 0.05 * t + 0.06 * x * x,
            (0, 1) => -0.2 + 0.05 * x - 0.6 * t,
            (2, 0) => 0.2 + 0.12 * x,
            (1, 1) => 0.05,
            (0, 2) => -0.6,
            _ => 0.0,
        }
    };
    let (xc, tc) = (0.4, -0.3);
    let mut grid = [[0.0; 5]; 5];
    for (i, row) in grid.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = field(xc + (i as f64 - 2.0) * h, tc + (j as f64 - 2.0) * h);
        }
    }
    // only the centre and its four neighbours see the centre value
    let action = |g: &[[f64; 5]; 5]| -> f64 {
        let mut total = 0.0;
        for (i, j) in [(2, 2), (1, 2), (3, 2), (2, 1), (2, 3)] {
            let d0 = (g[i + 1][j] - g[i - 1][j]) / (2.0 * h);
            let d1 = (g[i][j + 1] - g[i][j - 1]) / (2.0 * h);
            total += h * h * density(g[i][j], d0, d1);
        }
        total
    };
    let eps = 1e-2;
    let shifted = |d: f64| {
        let mut g = grid;
        g[2][2] += d;
        action(&g)
    };
    let variation =
        (shifted(-2.0 * eps) - 8.0 * shifted(-eps) + 8.0 * shifted(eps) - shifted(2.0 * eps)) / (12.0 * eps) / (h * h);
    let symbolic = el
        .eval_f64(|gen| match gen {
            Generator::Jet { deriv: d, .. } => deriv(d.count(0), d.count(1), xc, tc),
            _ => unreachable!("ℓ has no base or background symbols"),
        })
        .unwrap();
    (variation, symbolic)
}
