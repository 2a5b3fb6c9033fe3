//! Property suites shared by the acceptance and property test targets.

#![allow(dead_code)]

use revsc_core::order::{is_partially_ordered, without_letters};
use revsc_core::search::kernel::{
    all_reachable, is_minimal as table_minimal, letter_permutations, orbit_weight,
};
use revsc_core::search::{partition_workload, table_to_dfa, CandidateCursor};
use revsc_core::{
    complement, determinize, fig2_witness, fig5_witness, is_j_trivial, jtrivial_alphabet_bound,
    lemma2_bound, minimize, reverse, reverse_state_complexity, simon_condition, table1_witness,
    theorem1_bound, Bound, Dfa, JMethod, LetterSet, StateSet,
};
use std::fmt;

pub const PROPERTIES: [&str; 6] = [
    "fact1-no-merge",
    "complement-duality",
    "lemma5-letter-removal",
    "unary-stabilization",
    "three-way-j",
    "upper-bound-conformance",
];

/// Checked and violated counts per property, plus the first offenders.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: [u64; 6],
    pub violated: [u64; 6],
    pub samples: Vec<(usize, String)>,
}

impl Report {
    pub fn is_clean(&self) -> bool {
        self.violated.iter().all(|&v| v == 0)
    }

    fn record(&mut self, prop: usize, ok: bool, dfa: &Dfa) {
        self.checked[prop] += 1;
        if !ok {
            self.violated[prop] += 1;
            if self.samples.len() < 5 {
                self.samples.push((prop, dfa.to_json()));
            }
        }
    }

    pub fn merge(&mut self, other: &Report) {
        for i in 0..6 {
            self.checked[i] += other.checked[i];
            self.violated[i] += other.violated[i];
        }
        self.samples.extend(other.samples.iter().cloned());
        self.samples.truncate(5);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, name) in PROPERTIES.iter().enumerate() {
            writeln!(
                f,
                "{name}: checked={} violated={}",
                self.checked[i], self.violated[i]
            )?;
        }
        for (prop, dump) in &self.samples {
            writeln!(f, "violation of {}: {dump}", PROPERTIES[*prop])?;
        }
        Ok(())
    }
}

/// F·a^(n-1) = F·a^n for every letter, with F the accepting set as the
/// initial subset of the reversed automaton.
pub fn unary_stabilizes(dfa: &Dfa) -> bool {
    let nfa = reverse(dfa);
    let n = dfa.state_count();
    (0..dfa.alphabet_size()).all(|a| {
        let mut s: StateSet = nfa.initials().clone();
        for _ in 0..n - 1 {
            s = nfa.step(&s, a);
        }
        nfa.step(&s, a) == s
    })
}

/// Runs the structural property on any partially ordered DFA.
pub fn check_structure(dfa: &Dfa, report: &mut Report) {
    report.record(3, unary_stabilizes(dfa), dfa);
}

/// Runs the language-level properties on a minimal DFA.
pub fn check_minimal(dfa: &Dfa, report: &mut Report) {
    let n = dfa.state_count();
    let k = dfa.alphabet_size();

    let subsets = determinize(&reverse(dfa));
    let rsc = subsets.len();
    report.record(0, minimize(&subsets.dfa).state_count() == rsc, dfa);

    report.record(1, reverse_state_complexity(&complement(dfa)) == rsc, dfa);

    let verdicts = JMethod::ALL.map(|m| is_j_trivial(dfa, m));
    report.record(4, verdicts.iter().all(|&v| v == verdicts[0]), dfa);
    let j = verdicts[0];

    if simon_condition(dfa) == Ok(true) {
        let closed = (0..1u64 << k)
            .all(|g| simon_condition(&without_letters(dfa, LetterSet(g))) == Ok(true));
        report.record(2, closed, dfa);
    }

    if is_partially_ordered(dfa) {
        let mut ok = rsc as u64 <= theorem1_bound(n, k).unwrap();
        if k == 2 && n >= 2 {
            ok &= rsc as u64 <= lemma2_bound(n).unwrap();
        }
        if j {
            if let Ok(Bound::Known(b)) = jtrivial_alphabet_bound(n, k) {
                ok &= rsc as u64 <= b;
            }
            if n >= 2 && k + 1 < n {
                ok &= (rsc as u64) < 1 << (n - 1);
            }
        }
        report.record(5, ok, dfa);
    }
}

/// Every DFA with a monotone table in `cursor`: the structural property
/// on all of them, the language properties on the minimal ones. With
/// `orbits`, only the lexicographically least table of each
/// letter-permutation orbit is checked; every property is invariant under
/// renaming letters.
pub fn cursor_report(cursor: &CandidateCursor, orbits: bool) -> Report {
    let (n, k) = (cursor.n, cursor.k);
    let mut report = Report::default();
    let perms = letter_permutations(k);
    let mut tables = cursor.tables();
    while tables.advance() {
        let t = tables.table();
        if orbits && orbit_weight(t, k, &perms).is_none() {
            continue;
        }
        let connected = all_reachable(t, n, k);
        for mask in 0..1u64 << n {
            let dfa = table_to_dfa(n, k, t, mask);
            check_structure(&dfa, &mut report);
            if connected && table_minimal(t, n, k, mask) {
                check_minimal(&dfa, &mut report);
            }
        }
    }
    report
}

/// Splits the enumeration over `workers` threads and merges the reports
/// in cursor order.
pub fn enumeration_report(n: usize, k: usize, orbits: bool, workers: usize) -> Report {
    let cursors = partition_workload(n, k, workers.max(1) * 4).unwrap();
    let chunk = cursors.len().div_ceil(workers.max(1));
    let parts: Vec<Report> = std::thread::scope(|scope| {
        let handles: Vec<_> = cursors
            .chunks(chunk)
            .map(|group| {
                scope.spawn(move || {
                    let mut r = Report::default();
                    for c in group {
                        r.merge(&cursor_report(c, orbits));
                    }
                    r
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut report = Report::default();
    for p in &parts {
        report.merge(p);
    }
    report
}

/// The witness families at the sizes used by the acceptance checks.
pub fn witness_corpus() -> Vec<Dfa> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push(fig2_witness(n).unwrap());
    }
    for n in 3..=8 {
        out.push(fig5_witness(n).unwrap());
    }
    for n in 2..=7 {
        out.push(table1_witness(n).unwrap());
    }
    out
}

pub fn witness_report() -> Report {
    let mut report = Report::default();
    for dfa in witness_corpus() {
        let min = minimize(&dfa);
        check_structure(&dfa, &mut report);
        check_minimal(&min, &mut report);
        check_minimal(&complement(&min), &mut report);
    }
    report
}
