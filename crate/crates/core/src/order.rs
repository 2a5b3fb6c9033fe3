//! Partial order, R-triviality and J-triviality of DFAs.
//!
//! J-triviality is decided three ways: by checking that the minimal DFAs of
//! the language and of its reverse are both partially ordered, by Simon's
//! condition over every letter subset, and by Trahtman's condition over the
//! self-loop alphabet of each state.

use crate::automata::{determinize, minimize, reverse, Dfa};
use crate::error::{Error, Result};
use crate::stateset::StateSet;
use serde::{Deserialize, Serialize};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;
use std::str::FromStr;

/// A set of letters, bit `a` standing for letter `a`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterSet(pub u64);

impl LetterSet {
    pub fn all(k: usize) -> LetterSet {
        if k >= 64 {
            LetterSet(u64::MAX)
        } else {
            LetterSet((1 << k) - 1)
        }
    }

    pub fn contains(self, a: usize) -> bool {
        a < 64 && self.0 >> a & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&a| self.contains(a))
    }
}

impl FromIterator<usize> for LetterSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        LetterSet(iter.into_iter().fold(0, |m, a| m | 1 << a))
    }
}

/// Numbering of the states compatible with reachability, plus the maximal
/// states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrderCert {
    /// `order[q]` is the position of `q` in a topological order of `G(M)`
    /// without self-loops.
    pub order: Vec<usize>,
    pub maximal: StateSet,
}

/// Checks that the reachability relation of `dfa` is a partial order, i.e.
/// that its transition graph has no cycles other than self-loops.
///
/// Ties in the topological order are broken by smallest state index. On
/// failure the error carries one cycle of length at least two.
pub fn reachability_order(dfa: &Dfa) -> Result<PartialOrderCert> {
    let n = dfa.state_count();
    let mut indegree = vec![0usize; n];
    for q in 0..n {
        for t in distinct_successors(dfa, q) {
            indegree[t] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&q| indegree[q] == 0).map(Reverse).collect();
    let mut order = vec![usize::MAX; n];
    let mut next = 0;
    while let Some(Reverse(q)) = ready.pop() {
        order[q] = next;
        next += 1;
        for t in distinct_successors(dfa, q) {
            indegree[t] -= 1;
            if indegree[t] == 0 {
                ready.push(Reverse(t));
            }
        }
    }
    if next < n {
        let (states, letters) = find_cycle(dfa);
        return Err(Error::NotPartiallyOrdered { states, letters });
    }
    let maximal = StateSet::from_states(n, (0..n).filter(|&q| dfa.row(q).iter().all(|&t| t == q)));
    Ok(PartialOrderCert { order, maximal })
}

pub fn is_partially_ordered(dfa: &Dfa) -> bool {
    reachability_order(dfa).is_ok()
}

fn distinct_successors(dfa: &Dfa, q: usize) -> Vec<usize> {
    let mut ts: Vec<usize> = dfa.row(q).iter().copied().filter(|&t| t != q).collect();
    ts.sort_unstable();
    ts.dedup();
    ts
}

/// Depth-first search for a back edge; only called when a cycle exists.
fn find_cycle(dfa: &Dfa) -> (Vec<usize>, Vec<usize>) {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let n = dfa.state_count();
    let k = dfa.alphabet_size();
    let mut color = vec![Color::White; n];
    for root in 0..n {
        if color[root] != Color::White {
            continue;
        }
        // (state, next letter to try)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        color[root] = Color::Gray;
        while let Some(top) = stack.len().checked_sub(1) {
            let (q, letter) = stack[top];
            if letter == k {
                color[q] = Color::Black;
                stack.pop();
                continue;
            }
            stack[top].1 += 1;
            let t = dfa.next(q, letter);
            if t == q {
                continue;
            }
            match color[t] {
                Color::White => {
                    color[t] = Color::Gray;
                    stack.push((t, 0));
                }
                Color::Gray => {
                    let start = stack.iter().position(|&(s, _)| s == t).unwrap();
                    let states: Vec<usize> = stack[start..].iter().map(|&(s, _)| s).collect();
                    // the letter that left each state is one less than its cursor
                    let letters: Vec<usize> = stack[start..].iter().map(|&(_, c)| c - 1).collect();
                    return (states, letters);
                }
                Color::Black => {}
            }
        }
    }
    unreachable!("find_cycle called on an acyclic automaton")
}

/// Transition graph of a DFA restricted to a letter subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterGraph {
    /// Sorted, deduplicated successors of each state; self-loops included.
    pub successors: Vec<Vec<usize>>,
}

impl LetterGraph {
    pub fn vertex_count(&self) -> usize {
        self.successors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    pub fn has_edge(&self, p: usize, q: usize) -> bool {
        self.successors[p].binary_search(&q).is_ok()
    }

    /// A state with no outgoing edge to another state.
    pub fn is_maximal(&self, p: usize) -> bool {
        self.successors[p].iter().all(|&q| q == p)
    }
}

pub fn letter_graph(dfa: &Dfa, gamma: LetterSet) -> LetterGraph {
    let successors = (0..dfa.state_count())
        .map(|q| {
            let mut ts: Vec<usize> = (0..dfa.alphabet_size())
                .filter(|&a| gamma.contains(a))
                .map(|a| dfa.next(q, a))
                .collect();
            ts.sort_unstable();
            ts.dedup();
            ts
        })
        .collect();
    LetterGraph { successors }
}

/// States reachable from `p` in `g`, including `p`.
pub fn component_cone(g: &LetterGraph, p: usize) -> StateSet {
    let mut cone = StateSet::empty(g.vertex_count());
    cone.insert(p);
    let mut queue = VecDeque::from([p]);
    while let Some(q) = queue.pop_front() {
        for &t in &g.successors[q] {
            if !cone.contains(t) {
                cone.insert(t);
                queue.push_back(t);
            }
        }
    }
    cone
}

/// Letters under which `p` loops.
pub fn self_loop_alphabet(dfa: &Dfa, p: usize) -> LetterSet {
    (0..dfa.alphabet_size())
        .filter(|&a| dfa.next(p, a) == p)
        .collect()
}

/// Largest alphabet `simon_condition` accepts.
pub const SIMON_MAX_LETTERS: usize = 16;

/// For every letter subset, every cone of the restricted graph has a unique
/// maximal state.
///
/// Cones are forward closed, so a state is maximal inside its cone exactly
/// when it is maximal in the restricted graph. Cost grows as `2^k`.
pub fn simon_condition(dfa: &Dfa) -> Result<bool> {
    reachability_order(dfa)?;
    let k = dfa.alphabet_size();
    if k > SIMON_MAX_LETTERS {
        return Err(Error::Guard {
            what: "simon_condition",
            requirement: "at most 16 letters",
            value: k,
        });
    }
    for gamma in 0..1u64 << k {
        let g = letter_graph(dfa, LetterSet(gamma));
        for p in 0..dfa.state_count() {
            let maxima = component_cone(&g, p)
                .iter()
                .filter(|&q| g.is_maximal(q))
                .count();
            if maxima != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For every state `p`, the weakly connected component of `p` in the graph
/// restricted to the self-loop letters of `p` has a unique maximal state.
pub fn trahtman_condition(dfa: &Dfa) -> Result<bool> {
    reachability_order(dfa)?;
    Ok(trahtman_unchecked(dfa))
}

pub(crate) fn trahtman_unchecked(dfa: &Dfa) -> bool {
    let n = dfa.state_count();
    (0..n).all(|p| {
        let g = letter_graph(dfa, self_loop_alphabet(dfa, p));
        let mut undirected: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (q, ts) in g.successors.iter().enumerate() {
            for &t in ts {
                if t != q {
                    undirected[q].push(t);
                    undirected[t].push(q);
                }
            }
        }
        let mut seen = vec![false; n];
        seen[p] = true;
        let mut queue = VecDeque::from([p]);
        let mut maxima = 0;
        while let Some(q) = queue.pop_front() {
            if g.is_maximal(q) {
                maxima += 1;
            }
            for &t in &undirected[q] {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        maxima == 1
    })
}

/// The language of `dfa` has a partially ordered minimal DFA.
pub fn is_r_trivial(dfa: &Dfa) -> bool {
    is_partially_ordered(&minimize(dfa))
}

/// Decision procedure used by [`is_j_trivial`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JMethod {
    /// Minimal DFAs of the language and of its reverse are partially ordered.
    ReversePo,
    Simon,
    Trahtman,
}

impl JMethod {
    pub const ALL: [JMethod; 3] = [JMethod::ReversePo, JMethod::Simon, JMethod::Trahtman];
}

impl fmt::Display for JMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JMethod::ReversePo => "reverse-po",
            JMethod::Simon => "simon",
            JMethod::Trahtman => "trahtman",
        })
    }
}

impl FromStr for JMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "reverse-po" => Ok(JMethod::ReversePo),
            "simon" => Ok(JMethod::Simon),
            "trahtman" => Ok(JMethod::Trahtman),
            _ => Err(format!("unknown method {s:?}")),
        }
    }
}

/// Whether the language of `dfa` is J-trivial (piecewise testable).
///
/// The input does not need to be minimal. With [`JMethod::Simon`], alphabets
/// larger than [`SIMON_MAX_LETTERS`] are decided by Trahtman's condition.
pub fn is_j_trivial(dfa: &Dfa, method: JMethod) -> bool {
    let min = minimize(dfa);
    if !is_partially_ordered(&min) {
        return false;
    }
    match method {
        JMethod::ReversePo => is_partially_ordered(&minimize(&determinize(&reverse(&min)).dfa)),
        JMethod::Simon => match simon_condition(&min) {
            Ok(v) => v,
            Err(Error::Guard { .. }) => trahtman_unchecked(&min),
            Err(e) => unreachable!("minimal DFA already checked: {e}"),
        },
        JMethod::Trahtman => trahtman_unchecked(&min),
    }
}

/// Copy of `dfa` in which every transition under a letter of `gamma` is
/// replaced by a self-loop. Reachability in the result is reachability in
/// the graph restricted to the remaining letters.
pub fn without_letters(dfa: &Dfa, gamma: LetterSet) -> Dfa {
    let k = dfa.alphabet_size();
    let rows = (0..dfa.state_count())
        .map(|q| {
            (0..k)
                .map(|a| if gamma.contains(a) { q } else { dfa.next(q, a) })
                .collect()
        })
        .collect();
    Dfa::with_letters(
        dfa.letters().to_vec(),
        dfa.state_count(),
        rows,
        dfa.initial(),
        dfa.accepting().iter(),
    )
    .expect("same shape as a valid automaton")
}
