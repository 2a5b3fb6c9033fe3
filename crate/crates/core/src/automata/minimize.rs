//! Hopcroft partition refinement and canonical renumbering.

use super::dfa::Dfa;
use super::nfa::{determinize, reverse};
use crate::stateset::StateSet;
use std::collections::VecDeque;

/// Refinable partition of `0..n` kept as a permuted element array with
/// contiguous blocks.
struct Partition {
    elems: Vec<usize>,
    pos: Vec<usize>,
    block_of: Vec<usize>,
    first: Vec<usize>,
    end: Vec<usize>,
    marked: Vec<usize>,
}

impl Partition {
    fn new(n: usize) -> Self {
        Partition {
            elems: (0..n).collect(),
            pos: (0..n).collect(),
            block_of: vec![0; n],
            first: vec![0],
            end: vec![n],
            marked: vec![0],
        }
    }

    fn block_count(&self) -> usize {
        self.first.len()
    }

    fn size(&self, b: usize) -> usize {
        self.end[b] - self.first[b]
    }

    fn members(&self, b: usize) -> &[usize] {
        &self.elems[self.first[b]..self.end[b]]
    }

    /// Moves `q` into the marked prefix of its block.
    fn mark(&mut self, q: usize) {
        let b = self.block_of[q];
        let i = self.pos[q];
        let j = self.first[b] + self.marked[b];
        if i < j {
            return;
        }
        self.elems.swap(i, j);
        self.pos[self.elems[i]] = i;
        self.pos[self.elems[j]] = j;
        self.marked[b] += 1;
    }

    /// Splits the marked prefix off `b`; returns the new block if both halves
    /// are nonempty.
    fn split(&mut self, b: usize) -> Option<usize> {
        let m = self.marked[b];
        self.marked[b] = 0;
        if m == 0 || m == self.size(b) {
            return None;
        }
        let nb = self.first.len();
        let start = self.first[b];
        self.first.push(start);
        self.end.push(start + m);
        self.marked.push(0);
        self.first[b] = start + m;
        for i in start..start + m {
            self.block_of[self.elems[i]] = nb;
        }
        Some(nb)
    }
}

/// Equivalence classes of a complete DFA: `class[q]` for every state.
fn refine(dfa: &Dfa) -> (Vec<usize>, usize) {
    let n = dfa.state_count();
    let k = dfa.alphabet_size();
    let mut inverse: Vec<Vec<usize>> = vec![Vec::new(); n * k];
    for q in 0..n {
        for a in 0..k {
            inverse[dfa.next(q, a) * k + a].push(q);
        }
    }

    let mut part = Partition::new(n);
    for q in dfa.accepting().iter() {
        part.mark(q);
    }
    part.split(0);

    let mut pending: VecDeque<(usize, usize)> = VecDeque::new();
    let mut queued: Vec<Vec<bool>> = Vec::new();
    let smaller = if part.block_count() == 2 && part.size(1) < part.size(0) {
        1
    } else {
        0
    };
    for _ in 0..part.block_count() {
        queued.push(vec![false; k]);
    }
    for a in 0..k {
        pending.push_back((smaller, a));
        queued[smaller][a] = true;
    }

    let mut touched = Vec::new();
    while let Some((splitter, a)) = pending.pop_front() {
        queued[splitter][a] = false;
        let targets: Vec<usize> = part.members(splitter).to_vec();
        for t in targets {
            for &p in &inverse[t * k + a] {
                let b = part.block_of[p];
                if part.marked[b] == 0 {
                    touched.push(b);
                }
                part.mark(p);
            }
        }
        for b in touched.drain(..) {
            if let Some(nb) = part.split(b) {
                queued.push(vec![false; k]);
                for c in 0..k {
                    if queued[b][c] {
                        queued[nb][c] = true;
                        pending.push_back((nb, c));
                    } else {
                        let pick = if part.size(nb) <= part.size(b) { nb } else { b };
                        queued[pick][c] = true;
                        pending.push_back((pick, c));
                    }
                }
            }
        }
    }
    (part.block_of.clone(), part.block_count())
}

/// The minimal complete DFA of the same language.
///
/// Unreachable states are dropped, equivalent states merged, and the result
/// is numbered in breadth-first discovery order from the initial state with
/// letters scanned in index order.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let reach = dfa.reachable_order();
    let k = dfa.alphabet_size();
    let mut local = vec![usize::MAX; dfa.state_count()];
    for (i, &q) in reach.iter().enumerate() {
        local[q] = i;
    }
    let mut rows = Vec::with_capacity(reach.len() * k);
    for &q in &reach {
        rows.extend(dfa.row(q).iter().map(|&t| local[t]));
    }
    let trimmed = Dfa::from_parts(
        dfa.letters().to_vec(),
        reach.len(),
        rows,
        0,
        StateSet::from_states(
            reach.len(),
            reach
                .iter()
                .enumerate()
                .filter(|(_, &q)| dfa.is_accepting(q))
                .map(|(i, _)| i),
        ),
    );

    let (class, count) = refine(&trimmed);

    // BFS over classes from the initial class gives the canonical numbering.
    let mut number = vec![usize::MAX; count];
    let mut repr = Vec::with_capacity(count);
    let mut queue = VecDeque::new();
    number[class[0]] = 0;
    repr.push(0usize);
    queue.push_back(0usize);
    while let Some(q) = queue.pop_front() {
        for &t in trimmed.row(q) {
            let c = class[t];
            if number[c] == usize::MAX {
                number[c] = repr.len();
                repr.push(t);
                queue.push_back(t);
            }
        }
    }
    let mut table = Vec::with_capacity(count * k);
    for &q in &repr {
        table.extend(trimmed.row(q).iter().map(|&t| number[class[t]]));
    }
    let accepting = StateSet::from_states(
        count,
        repr.iter()
            .enumerate()
            .filter(|(_, &q)| trimmed.is_accepting(q))
            .map(|(i, _)| i),
    );
    Dfa::from_parts(dfa.letters().to_vec(), count, table, 0, accepting)
}

/// Number of states of the minimal DFA of the language.
pub fn state_complexity(dfa: &Dfa) -> usize {
    minimize(dfa).state_count()
}

/// Number of states of the minimal DFA of the reversed language.
///
/// The input is minimized first; the subset automaton of the reverse of a
/// minimal DFA has no equivalent states, so its reachable subsets are counted
/// directly.
pub fn reverse_state_complexity(dfa: &Dfa) -> usize {
    determinize(&reverse(&minimize(dfa))).len()
}

/// True when every reachable state is pairwise distinguishable.
pub fn is_minimal(dfa: &Dfa) -> bool {
    dfa.reachable_order().len() == dfa.state_count() && refine(dfa).1 == dfa.state_count()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Table-filling distinguishability, quadratic and independent of the
    /// refinement above.
    fn brute_force_classes(dfa: &Dfa) -> usize {
        let n = dfa.state_count();
        let mut dist = vec![vec![false; n]; n];
        for p in 0..n {
            for q in 0..n {
                dist[p][q] = dfa.is_accepting(p) != dfa.is_accepting(q);
            }
        }
        loop {
            let mut changed = false;
            for p in 0..n {
                for q in 0..n {
                    if !dist[p][q]
                        && (0..dfa.alphabet_size()).any(|a| dist[dfa.next(p, a)][dfa.next(q, a)])
                    {
                        dist[p][q] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let reach = dfa.reachable_order();
        let mut reps: Vec<usize> = Vec::new();
        for &q in &reach {
            if !reps.iter().any(|&r| !dist[r][q]) {
                reps.push(q);
            }
        }
        reps.len()
    }

    fn all_words(k: usize, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for a in 0..k {
                    let mut v: Vec<usize> = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn duplicate_accepting_sinks_merge() {
        let d = Dfa::new(3, 1, vec![vec![1], vec![2], vec![2]], 0, [1, 2]).unwrap();
        let m = minimize(&d);
        assert_eq!(m.state_count(), 2);
        assert_eq!(m.table(), &[1, 1]);
    }

    #[test]
    fn empty_language_has_one_state() {
        let d = Dfa::new(1, 1, vec![vec![0]], 0, []).unwrap();
        assert_eq!(state_complexity(&d), 1);
        let d = Dfa::new(3, 2, vec![vec![1, 2], vec![2, 1], vec![2, 2]], 0, []).unwrap();
        assert_eq!(state_complexity(&d), 1);
    }

    #[test]
    fn unreachable_states_dropped() {
        let d = Dfa::new(3, 1, vec![vec![0], vec![2], vec![1]], 0, [0, 2]).unwrap();
        assert_eq!(minimize(&d).state_count(), 1);
    }

    #[test]
    fn canonical_numbering_is_bfs() {
        // a*b(a+b)* written with permuted state numbers
        let d = Dfa::new(2, 2, vec![vec![0, 0], vec![1, 0]], 1, [0]).unwrap();
        let m = minimize(&d);
        assert_eq!(m.table(), &[0, 1, 1, 1]);
        assert_eq!(m.accepting(), &StateSet::from_states(2, [1]));
    }

    #[test]
    fn matches_table_filling_on_small_automata() {
        // every complete DFA with 3 states over 2 letters, initial 0
        let mut count = 0;
        for code in 0..3usize.pow(6) {
            let mut c = code;
            let rows: Vec<Vec<usize>> = (0..3)
                .map(|_| {
                    (0..2)
                        .map(|_| {
                            let t = c % 3;
                            c /= 3;
                            t
                        })
                        .collect()
                })
                .collect();
            for mask in 0..8u64 {
                let d =
                    Dfa::new(3, 2, rows.clone(), 0, (0..3).filter(|q| mask >> q & 1 == 1)).unwrap();
                let m = minimize(&d);
                assert_eq!(m.state_count(), brute_force_classes(&d));
                for w in all_words(2, 5) {
                    assert_eq!(m.accepts(&w), d.accepts(&w));
                }
                assert_eq!(minimize(&m), m);
                count += 1;
            }
        }
        assert_eq!(count, 729 * 8);
    }
}
