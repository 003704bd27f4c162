//! Subsets of the generating set, stored as a 128-bit mask.

use std::fmt;

/// Maximum number of generators a graph may carry.
pub const MAX_GENERATORS: usize = 128;

/// A subset of generator indices `{0, .., 127}`.
///
/// Ordering is by the mask value, which makes iteration and tie-breaking
/// deterministic.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(u128);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn from_bits(bits: u128) -> Self {
        GenSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS);
        if n == MAX_GENERATORS {
            GenSet(u128::MAX)
        } else {
            GenSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(g: usize) -> Self {
        GenSet(1u128 << g)
    }

    pub fn contains(self, g: usize) -> bool {
        g < MAX_GENERATORS && self.0 >> g & 1 == 1
    }

    pub fn insert(&mut self, g: usize) {
        self.0 |= 1u128 << g;
    }

    pub fn remove(&mut self, g: usize) {
        self.0 &= !(1u128 << g);
    }

    pub fn with(self, g: usize) -> Self {
        GenSet(self.0 | 1u128 << g)
    }

    pub fn without(self, g: usize) -> Self {
        GenSet(self.0 & !(1u128 << g))
    }

    pub fn union(self, other: GenSet) -> Self {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> Self {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> Self {
        GenSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let g = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(g)
        })
    }

    /// All subsets `U` with `self ⊆ U ⊆ upper`, smallest cardinality first,
    /// ties broken by mask order.
    pub fn intervals_to(self, upper: GenSet) -> Vec<GenSet> {
        debug_assert!(self.is_subset(upper));
        let free: Vec<usize> = upper.difference(self).iter().collect();
        let mut out: Vec<GenSet> = (0u64..1 << free.len())
            .map(|pick| {
                let mut u = self;
                for (k, &g) in free.iter().enumerate() {
                    if pick >> k & 1 == 1 {
                        u.insert(g);
                    }
                }
                u
            })
            .collect();
        out.sort_by_key(|u| (u.len(), u.sorted_key()));
        out
    }

    /// Sorted member list, used as a lexicographic tie-break key.
    pub fn sorted_key(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = GenSet::EMPTY;
        for g in iter {
            s.insert(g);
        }
        s
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
