use std::fmt;

/// Largest supported order; symbol sets are 64-bit membership masks.
pub const MAX_ORDER: usize = 64;

/// A subset of the zero-based symbols `0..n`, bit `s` set iff `s` is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolSet(u64);

impl SymbolSet {
    pub const EMPTY: SymbolSet = SymbolSet(0);

    pub fn from_bits(bits: u64) -> Self {
        SymbolSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 64 {
            SymbolSet(u64::MAX)
        } else {
            SymbolSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(s: usize) -> Self {
        SymbolSet(1u64 << s)
    }

    pub fn contains(self, s: usize) -> bool {
        s < MAX_ORDER && self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1u64 << s;
    }

    pub fn remove(&mut self, s: usize) {
        self.0 &= !(1u64 << s);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: SymbolSet) -> Self {
        SymbolSet(self.0 | other.0)
    }

    pub fn intersection(self, other: SymbolSet) -> Self {
        SymbolSet(self.0 & other.0)
    }

    pub fn difference(self, other: SymbolSet) -> Self {
        SymbolSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, ..., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        SymbolSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset(self, other: SymbolSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl FromIterator<usize> for SymbolSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = SymbolSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for SymbolSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let s = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(s)
    }
}

/// Renders one-based members, e.g. `{1,3}`.
impl fmt::Display for SymbolSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", s + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SymbolSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
