use super::worldset::{WorldSet, MAX_WORLDS};
use super::SemanticsError;

/// Default largest frame for exhaustive fixpoint enumeration.
pub const DEFAULT_FIXPOINT_BOUND: usize = 12;

/// A Kripke frame on worlds `0..size`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteFrame {
    size: usize,
    succ: Vec<u64>,
    pred: Vec<u64>,
}

impl std::fmt::Debug for FiniteFrame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteFrame({}, {:?})", self.size, self.relation())
    }
}

impl FiniteFrame {
    pub fn new<I>(size: usize, relation: I) -> Result<Self, SemanticsError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if size > MAX_WORLDS {
            return Err(SemanticsError::TooManyWorlds { size });
        }
        let mut frame = FiniteFrame {
            size,
            succ: vec![0; size],
            pred: vec![0; size],
        };
        for (from, to) in relation {
            let world = from.max(to);
            if world >= size {
                return Err(SemanticsError::WorldOutOfRange { world, size });
            }
            frame.succ[from] |= 1 << to;
            frame.pred[to] |= 1 << from;
        }
        Ok(frame)
    }

    /// Decodes a relation from row-major adjacency bits: bit `u * size + v`
    /// is the edge `u R v`. Requires `size * size <= 64`.
    pub fn from_code(size: usize, code: u64) -> Self {
        assert!(size * size <= 64, "relation code needs size^2 <= 64");
        let edges = (0..size)
            .flat_map(|u| (0..size).map(move |v| (u, v)))
            .filter(|(u, v)| code >> (u * size + v) & 1 == 1);
        FiniteFrame::new(size, edges).expect("edges in range")
    }

    pub fn code(&self) -> u64 {
        assert!(
            self.size * self.size <= 64,
            "relation code needs size^2 <= 64"
        );
        self.relation()
            .into_iter()
            .fold(0, |acc, (u, v)| acc | 1 << (u * self.size + v))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        from < self.size && to < self.size && self.succ[from] >> to & 1 == 1
    }

    pub fn relation(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|u| (0..self.size).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect()
    }

    pub fn successors(&self, w: usize) -> WorldSet {
        WorldSet::from_bits(self.size, self.succ[w])
    }

    pub fn predecessors(&self, w: usize) -> WorldSet {
        WorldSet::from_bits(self.size, self.pred[w])
    }

    pub fn empty_set(&self) -> WorldSet {
        WorldSet::empty(self.size)
    }

    pub fn full_set(&self) -> WorldSet {
        WorldSet::full(self.size)
    }

    fn check(&self, x: &WorldSet) -> Result<(), SemanticsError> {
        if x.size() == self.size {
            Ok(())
        } else {
            Err(SemanticsError::SizeMismatch {
                expected: self.size,
                found: x.size(),
            })
        }
    }

    /// Worlds with a predecessor in `x` (the ◀ operator).
    pub fn pre(&self, x: &WorldSet) -> Result<WorldSet, SemanticsError> {
        self.check(x)?;
        Ok(self.pre_of(x))
    }

    /// Worlds all of whose successors lie in `x`.
    pub fn box_op(&self, x: &WorldSet) -> Result<WorldSet, SemanticsError> {
        self.check(x)?;
        Ok(self.box_of(x))
    }

    /// Worlds with some successor in `x`; the dual of [`FiniteFrame::box_op`].
    pub fn diamond(&self, x: &WorldSet) -> Result<WorldSet, SemanticsError> {
        self.check(x)?;
        Ok(self.diamond_of(x))
    }

    /// `box(pre(x))`.
    pub fn closure(&self, x: &WorldSet) -> Result<WorldSet, SemanticsError> {
        self.check(x)?;
        Ok(self.closure_of(x))
    }

    pub fn is_fixpoint(&self, x: &WorldSet) -> Result<bool, SemanticsError> {
        self.check(x)?;
        Ok(self.closure_of(x) == *x)
    }

    /// Dead-end worlds, i.e. `box(∅)`; the least fixpoint.
    pub fn bottom(&self) -> WorldSet {
        self.box_of(&self.empty_set())
    }

    /// All fixpoints of [`FiniteFrame::closure`], ordered by bitmask.
    pub fn enumerate_fixpoints(&self) -> Result<Vec<WorldSet>, SemanticsError> {
        self.enumerate_fixpoints_bounded(DEFAULT_FIXPOINT_BOUND)
    }

    pub fn enumerate_fixpoints_bounded(
        &self,
        bound: usize,
    ) -> Result<Vec<WorldSet>, SemanticsError> {
        if self.size > bound {
            return Err(SemanticsError::BoundExceeded {
                size: self.size,
                bound,
            });
        }
        Ok((0..1u64 << self.size)
            .map(|bits| WorldSet::from_bits(self.size, bits))
            .filter(|x| self.closure_of(x) == *x)
            .collect())
    }

    /// Lattice meet of two fixpoints: their intersection.
    pub fn fp_meet(&self, x: &WorldSet, y: &WorldSet) -> Result<WorldSet, SemanticsError> {
        self.require_fixpoint(x)?;
        self.require_fixpoint(y)?;
        Ok(x.intersection(y))
    }

    /// Lattice join of two fixpoints: the closure of their union.
    pub fn fp_join(&self, x: &WorldSet, y: &WorldSet) -> Result<WorldSet, SemanticsError> {
        self.require_fixpoint(x)?;
        self.require_fixpoint(y)?;
        Ok(self.closure_of(&x.union(y)))
    }

    fn require_fixpoint(&self, x: &WorldSet) -> Result<(), SemanticsError> {
        if self.is_fixpoint(x)? {
            Ok(())
        } else {
            Err(SemanticsError::NotFixpoint { set: x.to_vec() })
        }
    }

    pub(crate) fn pre_of(&self, x: &WorldSet) -> WorldSet {
        let bits = x.iter().fold(0, |acc, w| acc | self.succ[w]);
        WorldSet::from_bits(self.size, bits)
    }

    pub(crate) fn box_of(&self, x: &WorldSet) -> WorldSet {
        let target = x.bits();
        let bits = (0..self.size)
            .filter(|&w| self.succ[w] & !target == 0)
            .fold(0, |acc, w| acc | 1 << w);
        WorldSet::from_bits(self.size, bits)
    }

    pub(crate) fn diamond_of(&self, x: &WorldSet) -> WorldSet {
        let target = x.bits();
        let bits = (0..self.size)
            .filter(|&w| self.succ[w] & target != 0)
            .fold(0, |acc, w| acc | 1 << w);
        WorldSet::from_bits(self.size, bits)
    }

    pub(crate) fn closure_of(&self, x: &WorldSet) -> WorldSet {
        self.box_of(&self.pre_of(x))
    }
}
