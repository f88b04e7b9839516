use crate::scalar::Grade;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistics {
    Boson,
    Fermion,
}

impl Statistics {
    pub fn grade(self) -> Grade {
        match self {
            Statistics::Boson => Grade::Even,
            Statistics::Fermion => Grade::Odd,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector {
    pub name: String,
    pub fiber_dim: usize,
    pub statistics: Statistics,
}

impl Sector {
    pub fn new(name: impl Into<String>, fiber_dim: usize, statistics: Statistics) -> Self {
        Sector { name: name.into(), fiber_dim, statistics }
    }
}

/// Index of a single-particle mode within a [`ModeSet`].
pub type Mode = u16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModeLabel {
    pub point: usize,
    pub sector: usize,
    pub fiber: usize,
}

/// Finite set of points times the fibers of each sector. Modes are numbered
/// sector by sector, then point, then fiber index; this order fixes every
/// fermionic sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeSet {
    points: Vec<String>,
    sectors: Vec<Sector>,
    labels: Vec<ModeLabel>,
}

impl ModeSet {
    pub fn new(points: Vec<String>, sectors: Vec<Sector>) -> Result<Self, Error> {
        if points.is_empty() || sectors.iter().all(|s| s.fiber_dim == 0) {
            return Err(Error::InvalidModel("mode set must be nonempty".into()));
        }
        let mut labels = Vec::new();
        for (sector, s) in sectors.iter().enumerate() {
            for point in 0..points.len() {
                for fiber in 0..s.fiber_dim {
                    labels.push(ModeLabel { point, sector, fiber });
                }
            }
        }
        if labels.len() > u16::MAX as usize {
            return Err(Error::InvalidModel("too many modes".into()));
        }
        Ok(ModeSet { points, sectors, labels })
    }

    /// `n` points labelled `0..n` with the given sectors.
    pub fn lattice(n: usize, sectors: Vec<Sector>) -> Result<Self, Error> {
        Self::new((0..n).map(|i| i.to_string()).collect(), sectors)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn label(&self, m: Mode) -> ModeLabel {
        self.labels[m as usize]
    }

    pub fn mode(&self, point: usize, sector: usize, fiber: usize) -> Mode {
        let mut base = 0;
        for s in &self.sectors[..sector] {
            base += s.fiber_dim * self.points.len();
        }
        (base + point * self.sectors[sector].fiber_dim + fiber) as Mode
    }

    pub fn statistics(&self, m: Mode) -> Statistics {
        self.sectors[self.labels[m as usize].sector].statistics
    }

    pub fn is_fermion(&self, m: Mode) -> bool {
        self.statistics(m) == Statistics::Fermion
    }

    pub fn grade(&self, m: Mode) -> Grade {
        self.statistics(m).grade()
    }

    pub fn modes(&self) -> impl Iterator<Item = Mode> {
        0..self.labels.len() as Mode
    }

    pub fn name(&self, m: Mode) -> String {
        let l = self.label(m);
        let s = &self.sectors[l.sector];
        if s.fiber_dim == 1 {
            format!("{}@{}", s.name, self.points[l.point])
        } else {
            format!("{}{}@{}", s.name, l.fiber, self.points[l.point])
        }
    }
}
