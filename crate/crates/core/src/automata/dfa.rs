use crate::error::{Error, Result};
use crate::stateset::StateSet;
use std::collections::VecDeque;

/// Display names for an alphabet of `k` letters: `a`, `b` for up to two
/// letters and `a1`..`ak` beyond that.
pub fn default_letter_names(k: usize) -> Vec<String> {
    match k {
        1 => vec!["a".into()],
        2 => vec!["a".into(), "b".into()],
        _ => (1..=k).map(|i| format!("a{i}")).collect(),
    }
}

/// A complete deterministic finite automaton over states `0..n` and letters `0..k`.
///
/// The transition table is dense and row-major: the image of `(q, a)` lives
/// at index `q * k + a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    letters: Vec<String>,
    state_count: usize,
    delta: Vec<usize>,
    initial: usize,
    accepting: StateSet,
}

impl Dfa {
    /// Validates and builds a DFA from one transition row per state.
    pub fn new(
        state_count: usize,
        alphabet_size: usize,
        delta: Vec<Vec<usize>>,
        initial: usize,
        accepting: impl IntoIterator<Item = usize>,
    ) -> Result<Dfa> {
        if alphabet_size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Self::with_letters(
            default_letter_names(alphabet_size),
            state_count,
            delta,
            initial,
            accepting,
        )
    }

    /// Like [`Dfa::new`], with explicit letter names.
    pub fn with_letters(
        letters: Vec<String>,
        state_count: usize,
        delta: Vec<Vec<usize>>,
        initial: usize,
        accepting: impl IntoIterator<Item = usize>,
    ) -> Result<Dfa> {
        let k = letters.len();
        if k == 0 {
            return Err(Error::EmptyAlphabet);
        }
        for (i, name) in letters.iter().enumerate() {
            if letters[..i].contains(name) {
                return Err(Error::DuplicateLetter(name.clone()));
            }
        }
        if state_count == 0 {
            return Err(Error::NoStates);
        }
        if delta.len() != state_count {
            return Err(Error::RowCount {
                expected: state_count,
                found: delta.len(),
            });
        }
        let mut table = Vec::with_capacity(state_count * k);
        for (q, row) in delta.iter().enumerate() {
            if row.len() != k {
                return Err(Error::PartialRow {
                    state: q,
                    expected: k,
                    found: row.len(),
                });
            }
            for &t in row {
                if t >= state_count {
                    return Err(Error::StateOutOfRange(t));
                }
                table.push(t);
            }
        }
        if initial >= state_count {
            return Err(Error::StateOutOfRange(initial));
        }
        let mut acc = StateSet::empty(state_count);
        for q in accepting {
            if q >= state_count {
                return Err(Error::StateOutOfRange(q));
            }
            acc.insert(q);
        }
        Ok(Dfa {
            letters,
            state_count,
            delta: table,
            initial,
            accepting: acc,
        })
    }

    /// Builds a DFA from an already validated row-major table.
    pub(crate) fn from_parts(
        letters: Vec<String>,
        state_count: usize,
        delta: Vec<usize>,
        initial: usize,
        accepting: StateSet,
    ) -> Dfa {
        debug_assert_eq!(delta.len(), state_count * letters.len());
        debug_assert!(delta.iter().all(|&t| t < state_count));
        debug_assert!(initial < state_count);
        debug_assert_eq!(accepting.width(), state_count);
        Dfa {
            letters,
            state_count,
            delta,
            initial,
            accepting,
        }
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet_size(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn accepting(&self) -> &StateSet {
        &self.accepting
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting.contains(q)
    }

    /// The row-major transition table.
    pub fn table(&self) -> &[usize] {
        &self.delta
    }

    pub fn next(&self, q: usize, letter: usize) -> usize {
        self.delta[q * self.letters.len() + letter]
    }

    pub fn row(&self, q: usize) -> &[usize] {
        let k = self.letters.len();
        &self.delta[q * k..(q + 1) * k]
    }

    /// Same automaton with the letters renamed.
    pub fn rename_letters(mut self, letters: Vec<String>) -> Result<Dfa> {
        if letters.len() != self.letters.len() {
            return Err(Error::LetterOutOfRange(letters.len()));
        }
        for (i, name) in letters.iter().enumerate() {
            if letters[..i].contains(name) {
                return Err(Error::DuplicateLetter(name.clone()));
            }
        }
        self.letters = letters;
        Ok(self)
    }

    /// State reached from `q` after reading `word`.
    pub fn run_from(&self, q: usize, word: &[usize]) -> usize {
        word.iter().fold(q, |p, &a| self.next(p, a))
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.is_accepting(self.run_from(self.initial, word))
    }

    /// States reachable from the initial state, in breadth-first discovery
    /// order with letters scanned in index order.
    pub fn reachable_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.state_count];
        let mut order = Vec::with_capacity(self.state_count);
        let mut queue = VecDeque::new();
        seen[self.initial] = true;
        queue.push_back(self.initial);
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for &t in self.row(q) {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        order
    }

    /// Swaps accepting and non-accepting states.
    pub fn complement(&self) -> Dfa {
        Dfa {
            accepting: self.accepting.complement(),
            ..self.clone()
        }
    }

    /// Non-accepting states that loop under every letter.
    pub fn dead_states(&self) -> StateSet {
        let mut dead = StateSet::empty(self.state_count);
        for q in 0..self.state_count {
            if !self.is_accepting(q) && self.row(q).iter().all(|&t| t == q) {
                dead.insert(q);
            }
        }
        dead
    }
}
