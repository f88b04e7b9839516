//! Charges of linear internal symmetries on a finite lattice.

use super::modes::{ModeSet, Sector, Statistics};
use super::operator::FockOperator;
use super::state::FockSpace;
use crate::report::CheckReport;
use crate::scalar::GQ;
use crate::Error;

/// `n` field components on each of `points` sites with the vertical
/// symmetry `v^i = M^i_j φ^j`.
///
/// Bosons use `φ = a + a†`, `Π = −i(a − a†)/2`; fermions use `φ = a`,
/// `Π = i a†`. Both give `⟦φ^i(x), Π_j(x')⟧ = i δ^i_j δ_{xx'}`.
#[derive(Clone, Debug)]
pub struct ChargeModel {
    pub points: usize,
    pub statistics: Statistics,
    pub generator: Vec<Vec<GQ>>,
    pub n_max: usize,
}

impl ChargeModel {
    pub fn components(&self) -> usize {
        self.generator.len()
    }

    fn space(&self) -> Result<FockSpace, Error> {
        let modes = ModeSet::lattice(self.points, vec![Sector::new("phi", self.components(), self.statistics)])?;
        Ok(FockSpace::new(modes, self.n_max))
    }
}

struct Fields {
    space: FockSpace,
    statistics: Statistics,
}

impl Fields {
    fn phi(&self, x: usize, i: usize) -> FockOperator {
        let m = self.space.modes().mode(x, 0, i);
        match self.statistics {
            Statistics::Boson => self.space.annihilator(m).add(&self.space.creator(m)),
            Statistics::Fermion => self.space.annihilator(m),
        }
    }

    fn pi(&self, x: usize, i: usize) -> FockOperator {
        let m = self.space.modes().mode(x, 0, i);
        let a: FockOperator = self.space.annihilator(m);
        let ad: FockOperator = self.space.creator(m);
        match self.statistics {
            Statistics::Boson => a.sub(&ad).scale(&(&GQ::i() * &GQ::ratio(-1, 2))),
            Statistics::Fermion => ad.scale(&GQ::i()),
        }
    }
}

fn expect(report: &mut CheckReport, name: String, got: Result<FockOperator, Error>, want: &FockOperator) -> bool {
    match got {
        Ok(op) if &op == want => {
            report.pass(name);
            true
        }
        Ok(op) => {
            report.fail(name, op.sub(want).to_text());
            false
        }
        Err(e) => {
            report.fail(name, e.to_string());
            false
        }
    }
}

/// Verifies the equal-time rules, then `⟦Q, φ^i(x)⟧ = −i v^i(x)` for
/// `Q = Σ_x Π_i(x) v^i(x)`. If the equal-time rules fail the charge is not
/// examined.
pub fn charge_commutator_check(model: &ChargeModel) -> Result<CheckReport, Error> {
    let n = model.components();
    if model.generator.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidModel("generator must be square".into()));
    }
    let f = Fields { space: model.space()?, statistics: model.statistics };
    let modes = f.space.shared_modes();
    let zero = FockOperator::zero(modes.clone());
    let mut report = CheckReport::new();
    let mut rules_hold = true;
    for x in 0..model.points {
        for y in 0..model.points {
            for i in 0..n {
                for j in 0..n {
                    let want = if x == y && i == j {
                        FockOperator::scalar(modes.clone(), GQ::i())
                    } else {
                        zero.clone()
                    };
                    rules_hold &= expect(
                        &mut report,
                        format!("[phi{i}({x}),pi{j}({y})] = i delta"),
                        f.phi(x, i).superbracket(&f.pi(y, j)),
                        &want,
                    );
                    rules_hold &= expect(
                        &mut report,
                        format!("[phi{i}({x}),phi{j}({y})] = 0"),
                        f.phi(x, i).superbracket(&f.phi(y, j)),
                        &zero,
                    );
                    rules_hold &= expect(
                        &mut report,
                        format!("[pi{i}({x}),pi{j}({y})] = 0"),
                        f.pi(x, i).superbracket(&f.pi(y, j)),
                        &zero,
                    );
                }
            }
        }
    }
    if !rules_hold {
        report.fail("equal-time rules", "charge not examined");
        return Ok(report);
    }
    let v = |x: usize, i: usize| {
        (0..n).fold(zero.clone(), |acc, j| acc.add(&f.phi(x, j).scale(&model.generator[i][j])))
    };
    let mut q = zero.clone();
    for x in 0..model.points {
        for i in 0..n {
            q = q.add(&f.pi(x, i).mul(&v(x, i)));
        }
    }
    for x in 0..model.points {
        for y in 0..model.points {
            for i in 0..n {
                for j in 0..n {
                    expect(&mut report, format!("[phi{i}({x}),v{j}({y})] = 0"), f.phi(x, i).superbracket(&v(y, j)), &zero);
                }
            }
        }
    }
    for x in 0..model.points {
        for i in 0..n {
            let want = v(x, i).scale(&-GQ::i());
            expect(&mut report, format!("[Q,phi{i}({x})] = -i v{i}({x})"), q.superbracket(&f.phi(x, i)), &want);
        }
    }
    Ok(report)
}
