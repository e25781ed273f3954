//! Subsets of the variable set `{1, ..., n}` and variable naming.

use std::fmt;

/// A subset of `[n]`, `n <= 16`, stored as a bitmask (bit `i` is variable `i + 1`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(pub u16);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn full(n: usize) -> VarSet {
        if n >= 16 {
            VarSet(u16::MAX)
        } else {
            VarSet(((1u32 << n) - 1) as u16)
        }
    }

    pub fn singleton(i: usize) -> VarSet {
        VarSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> VarSet {
        VarSet(it.into_iter().fold(0u16, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn insert(self, i: usize) -> VarSet {
        VarSet(self.0 | (1 << i))
    }

    pub fn remove(self, i: usize) -> VarSet {
        VarSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Number of elements strictly below index `i`.
    pub fn count_below(self, i: usize) -> usize {
        (self.0 & ((1u32 << i) - 1) as u16).count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |&i| self.contains(i))
    }

    /// Parity of the shuffle that merges `self` (written first) with `other`
    /// into ascending order. Returns `None` when the sets overlap.
    pub fn shuffle_sign(self, other: VarSet) -> Option<bool> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let inversions: usize = self.iter().map(|a| other.count_below(a)).sum();
        Some(inversions % 2 == 1)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|i| i + 1)).finish()
    }
}

const ALIASES: [&str; 4] = ["z", "w", "u", "v"];

/// Display name of variable `i` (0-based) in an ambient space of dimension `n`.
///
/// For `n <= 4` the short aliases `z, w, u, v` are used, otherwise `z1 .. zn`.
pub fn var_name(n: usize, i: usize) -> String {
    if n <= ALIASES.len() {
        ALIASES[i].to_string()
    } else {
        format!("z{}", i + 1)
    }
}

/// Resolve a variable name (`z3`, or an alias when `n <= 4`) to a 0-based index.
pub fn var_index(n: usize, name: &str) -> Option<usize> {
    if let Some(pos) = ALIASES.iter().position(|a| *a == name) {
        return (n <= ALIASES.len() && pos < n).then_some(pos);
    }
    let digits = name.strip_prefix('z')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    let i: usize = digits.parse().ok()?;
    (1..=n).contains(&i).then(|| i - 1)
}
