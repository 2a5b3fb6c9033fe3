use super::dfa::Dfa;
use crate::stateset::StateSet;
use std::collections::{HashMap, VecDeque};

/// A nondeterministic automaton with set-valued transitions and a set of
/// initial states. It carries no ε-transitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    letters: Vec<String>,
    state_count: usize,
    delta: Vec<StateSet>,
    initials: StateSet,
    accepting: StateSet,
}

impl Nfa {
    /// An automaton with no transitions.
    pub fn new(letters: Vec<String>, state_count: usize) -> Nfa {
        let k = letters.len();
        Nfa {
            letters,
            state_count,
            delta: vec![StateSet::empty(state_count); state_count * k],
            initials: StateSet::empty(state_count),
            accepting: StateSet::empty(state_count),
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

    pub fn initials(&self) -> &StateSet {
        &self.initials
    }

    pub fn accepting(&self) -> &StateSet {
        &self.accepting
    }

    pub fn successors(&self, q: usize, letter: usize) -> &StateSet {
        &self.delta[q * self.letters.len() + letter]
    }

    pub fn add_transition(&mut self, from: usize, letter: usize, to: usize) {
        let k = self.letters.len();
        self.delta[from * k + letter].insert(to);
    }

    pub fn set_initial(&mut self, q: usize) {
        self.initials.insert(q);
    }

    pub fn set_accepting(&mut self, q: usize) {
        self.accepting.insert(q);
    }

    /// Image of a set of states under one letter.
    pub fn step(&self, from: &StateSet, letter: usize) -> StateSet {
        let mut out = StateSet::empty(self.state_count);
        for q in from.iter() {
            out.union_with(self.successors(q, letter));
        }
        out
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        let mut cur = self.initials.clone();
        for &a in word {
            cur = self.step(&cur, a);
        }
        cur.intersects(&self.accepting)
    }
}

/// Reverses every transition of `dfa` and swaps initial and accepting states.
pub fn reverse(dfa: &Dfa) -> Nfa {
    let n = dfa.state_count();
    let mut nfa = Nfa::new(dfa.letters().to_vec(), n);
    for q in 0..n {
        for a in 0..dfa.alphabet_size() {
            nfa.add_transition(dfa.next(q, a), a, q);
        }
    }
    nfa.initials = dfa.accepting().clone();
    nfa.set_accepting(dfa.initial());
    nfa
}

/// Result of the subset construction: a DFA whose state `i` denotes
/// `subsets[i]` of the source automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetAutomaton {
    pub dfa: Dfa,
    pub subsets: Vec<StateSet>,
}

impl SubsetAutomaton {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn index_of(&self, set: &StateSet) -> Option<usize> {
        self.subsets.iter().position(|s| s == set)
    }
}

/// Subset construction restricted to subsets reachable from the initial set.
///
/// States are numbered in breadth-first discovery order, letters scanned in
/// index order. The empty subset appears if it is reachable.
pub fn determinize(nfa: &Nfa) -> SubsetAutomaton {
    let k = nfa.alphabet_size();
    let mut index: HashMap<StateSet, usize> = HashMap::new();
    let mut subsets = vec![nfa.initials().clone()];
    index.insert(nfa.initials().clone(), 0);
    let mut table = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for a in 0..k {
            let image = nfa.step(&subsets[i], a);
            let next = subsets.len();
            let j = *index.entry(image).or_insert_with_key(|key| {
                subsets.push(key.clone());
                queue.push_back(next);
                next
            });
            table.push(j);
        }
    }
    let accepting = StateSet::from_states(
        subsets.len(),
        subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.intersects(nfa.accepting()))
            .map(|(i, _)| i),
    );
    let dfa = Dfa::from_parts(nfa.letters().to_vec(), subsets.len(), table, 0, accepting);
    SubsetAutomaton { dfa, subsets }
}
