use std::fmt;

use crate::scalar::Grade;

/// Largest supported base dimension.
pub const MAX_BASE_DIM: usize = 4;

/// Symmetric multi-index `A` of a jet coordinate `y^i_A`, stored as counts
/// per base direction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex([u8; MAX_BASE_DIM]);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex([0; MAX_BASE_DIM]);

    pub fn from_counts(counts: [u8; MAX_BASE_DIM]) -> Self {
        MultiIndex(counts)
    }

    /// Builds the multi-index from a list of base indices, in any order.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut c = [0u8; MAX_BASE_DIM];
        for &a in indices {
            assert!(a < MAX_BASE_DIM, "base index {a} out of range");
            c[a] += 1;
        }
        MultiIndex(c)
    }

    pub fn single(a: usize) -> Self {
        Self::from_indices(&[a])
    }

    pub fn counts(&self) -> &[u8; MAX_BASE_DIM] {
        &self.0
    }

    pub fn count(&self, a: usize) -> u8 {
        self.0[a]
    }

    /// `|A|`.
    pub fn len(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `A + a`.
    pub fn with(&self, a: usize) -> Self {
        let mut c = self.0;
        c[a] += 1;
        MultiIndex(c)
    }

    /// `A + B`.
    pub fn join(&self, other: &MultiIndex) -> Self {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(other.0.iter()) {
            *x += y;
        }
        MultiIndex(c)
    }

    /// `A − a`, if `a ∈ A`.
    pub fn without(&self, a: usize) -> Option<Self> {
        if self.0[a] == 0 {
            return None;
        }
        let mut c = self.0;
        c[a] -= 1;
        Some(MultiIndex(c))
    }

    /// Indices in ascending order, with repetition.
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        for (a, &c) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(a, c as usize));
        }
        out
    }

    /// Number of distinct orderings of the index sequence, `|A|! / Π A_a!`.
    pub fn orderings(&self) -> u64 {
        let fact = |n: u64| (1..=n).product::<u64>().max(1);
        let mut r = fact(self.len() as u64);
        for &c in &self.0 {
            r /= fact(c as u64);
        }
        r
    }

    /// All multi-indices over `base_dim` directions with `|A| <= max_len`,
    /// shortest first.
    pub fn all_up_to(base_dim: usize, max_len: usize) -> Vec<MultiIndex> {
        let mut out = vec![MultiIndex::EMPTY];
        let mut frontier = vec![MultiIndex::EMPTY];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for mi in &frontier {
                let start = mi.indices().last().copied().unwrap_or(0);
                for a in start..base_dim {
                    next.push(mi.with(a));
                }
            }
            out.extend(next.iter().copied());
            frontier = next;
        }
        out
    }

    pub fn fits(&self, base_dim: usize) -> bool {
        self.0[base_dim..].iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for a in self.indices() {
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.indices() {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldId(pub u16);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BackgroundId(pub u16);

/// A ring generator. Grades are carried inline so that polynomials can be
/// multiplied without consulting the declaring [`JetSpace`](super::JetSpace).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Jet coordinate `y^i_A`.
    Jet { field: FieldId, deriv: MultiIndex, grade: Grade },
    /// Background function (metric entry, √|g|, momentum symbol, ...).
    /// `varies == false` means it is constant on the base.
    Background { symbol: BackgroundId, deriv: MultiIndex, varies: bool },
    /// Base coordinate `x^a`.
    Base(u8),
}

impl Generator {
    pub fn grade(&self) -> Grade {
        match self {
            Generator::Jet { grade, .. } => *grade,
            _ => Grade::Even,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.grade().is_odd()
    }

    /// The generator `d_a g` when it is again a single generator.
    pub fn shifted(&self, a: usize) -> Option<Generator> {
        match *self {
            Generator::Jet { field, deriv, grade } => {
                Some(Generator::Jet { field, deriv: deriv.with(a), grade })
            }
            Generator::Background { symbol, deriv, varies: true } => {
                Some(Generator::Background { symbol, deriv: deriv.with(a), varies: true })
            }
            _ => None,
        }
    }

    pub fn jet_order(&self) -> usize {
        match self {
            Generator::Jet { deriv, .. } => deriv.len(),
            _ => 0,
        }
    }
}
