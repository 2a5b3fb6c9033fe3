//! Fixed-width bit sets over automaton states.

use smallvec::SmallVec;
use std::fmt;

/// A subset of `0..width`, stored as a little-endian vector of 64-bit words.
///
/// Automata with at most 64 states keep the whole set inline in one word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    width: usize,
    words: SmallVec<[u64; 1]>,
}

fn word_count(width: usize) -> usize {
    width.div_ceil(64).max(1)
}

impl StateSet {
    pub fn empty(width: usize) -> Self {
        StateSet {
            width,
            words: SmallVec::from_elem(0, word_count(width)),
        }
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for q in 0..width {
            s.insert(q);
        }
        s
    }

    /// Builds a set of the given width from the low `width` bits of `bits`.
    pub fn from_word(width: usize, bits: u64) -> Self {
        let mut s = Self::empty(width);
        let mask = if width >= 64 {
            u64::MAX
        } else {
            (1u64 << width) - 1
        };
        s.words[0] = bits & mask;
        s
    }

    pub fn from_states<I: IntoIterator<Item = usize>>(width: usize, states: I) -> Self {
        let mut s = Self::empty(width);
        for q in states {
            s.insert(q);
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// The set as a single word. Only meaningful for widths up to 64.
    pub fn as_word(&self) -> u64 {
        debug_assert!(self.width <= 64);
        self.words[0]
    }

    pub fn contains(&self, q: usize) -> bool {
        q < self.width && self.words[q / 64] & (1 << (q % 64)) != 0
    }

    pub fn insert(&mut self, q: usize) {
        assert!(
            q < self.width,
            "state {q} out of range for width {}",
            self.width
        );
        self.words[q / 64] |= 1 << (q % 64);
    }

    pub fn remove(&mut self, q: usize) {
        if q < self.width {
            self.words[q / 64] &= !(1 << (q % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &StateSet) {
        assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &StateSet) {
        assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn complement(&self) -> StateSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        let tail = self.width % 64;
        if tail != 0 {
            let last = s.words.len() - 1;
            s.words[last] &= (1u64 << tail) - 1;
        }
        if self.width == 0 {
            s.words[0] = 0;
        }
        s
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// States in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, q) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "}}")
    }
}
