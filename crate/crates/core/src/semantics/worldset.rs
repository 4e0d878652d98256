use std::fmt;

/// Largest frame a [`WorldSet`] can index.
pub const MAX_WORLDS: usize = 64;

/// A subset of the worlds `0..size` of some frame, stored as a bitmask.
///
/// Binary operations require equal sizes and panic otherwise.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WorldSet {
    size: u8,
    bits: u64,
}

fn mask(size: usize) -> u64 {
    if size == 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    }
}

impl WorldSet {
    pub fn empty(size: usize) -> Self {
        assert!(size <= MAX_WORLDS, "at most {MAX_WORLDS} worlds");
        WorldSet {
            size: size as u8,
            bits: 0,
        }
    }

    pub fn full(size: usize) -> Self {
        assert!(size <= MAX_WORLDS, "at most {MAX_WORLDS} worlds");
        WorldSet {
            size: size as u8,
            bits: mask(size),
        }
    }

    /// Bits beyond `size` are discarded.
    pub fn from_bits(size: usize, bits: u64) -> Self {
        assert!(size <= MAX_WORLDS, "at most {MAX_WORLDS} worlds");
        WorldSet {
            size: size as u8,
            bits: bits & mask(size),
        }
    }

    /// Panics if a world is out of range.
    pub fn from_worlds<I: IntoIterator<Item = usize>>(size: usize, worlds: I) -> Self {
        let mut s = WorldSet::empty(size);
        for w in worlds {
            s.insert(w);
        }
        s
    }

    pub fn singleton(size: usize, w: usize) -> Self {
        WorldSet::from_worlds(size, [w])
    }

    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn insert(&mut self, w: usize) {
        assert!(
            w < self.size(),
            "world {w} out of range for size {}",
            self.size
        );
        self.bits |= 1 << w;
    }

    pub fn contains(&self, w: usize) -> bool {
        w < self.size() && self.bits >> w & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == mask(self.size())
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    fn same_size(&self, other: &WorldSet) {
        assert_eq!(self.size, other.size, "world sets over different frames");
    }

    pub fn union(&self, other: &WorldSet) -> WorldSet {
        self.same_size(other);
        WorldSet {
            size: self.size,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &WorldSet) -> WorldSet {
        self.same_size(other);
        WorldSet {
            size: self.size,
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &WorldSet) -> WorldSet {
        self.same_size(other);
        WorldSet {
            size: self.size,
            bits: self.bits & !other.bits,
        }
    }

    pub fn complement(&self) -> WorldSet {
        WorldSet {
            size: self.size,
            bits: !self.bits & mask(self.size()),
        }
    }

    pub fn is_subset(&self, other: &WorldSet) -> bool {
        self.same_size(other);
        self.bits & !other.bits == 0
    }

    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.size()).filter(move |w| bits >> w & 1 == 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}/{}", self.size)
    }
}

/// Prints as a JSON-style list of worlds, e.g. `[0,1,2]`.
impl fmt::Display for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, w) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra() {
        let a = WorldSet::from_worlds(4, [0, 2]);
        let b = WorldSet::from_worlds(4, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 2, 3]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.complement().to_vec(), vec![1, 3]);
        assert_eq!(a.difference(&b).to_vec(), vec![0]);
        assert!(WorldSet::from_worlds(4, [2]).is_subset(&a));
        assert_eq!(a.to_string(), "[0,2]");
        assert_eq!(WorldSet::full(64).len(), 64);
        assert_eq!(WorldSet::full(64).complement(), WorldSet::empty(64));
    }

    #[test]
    #[should_panic(expected = "different frames")]
    fn size_mismatch_panics() {
        let _ = WorldSet::empty(2).union(&WorldSet::empty(3));
    }
}
