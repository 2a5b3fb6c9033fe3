//! Exhaustive search for the worst-case reverse state complexity over
//! minimal partially ordered DFAs.
//!
//! Every partially ordered DFA whose states are all reachable can be
//! renumbered so that transitions never decrease and the initial state is
//! 0, so scanning monotone tables with initial state 0 over every
//! acceptance mask covers all of them (some languages more than once).
//!
//! The scan is split into [`CandidateCursor`]s that are processed
//! independently and merged with a commutative fold, in parallel when the
//! `parallel` feature is on.

mod cursor;
pub mod kernel;

pub use cursor::{
    candidate_count, enumerate_po_dfas, monotone_table_count, partition_workload, table_to_dfa,
    CandidateCursor, TableIter, MAX_LETTERS, MAX_STATES,
};

use crate::automata::{Dfa, DfaJson};
use crate::error::Result;
use crate::order::trahtman_unchecked;
use kernel::{
    all_reachable, is_minimal, letter_permutations, orbit_weight, sink_mask, ReverseScratch,
};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

/// Language class kept by the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassFilter {
    RTrivial,
    JTrivial,
}

/// Which candidates to keep depending on whether they have a dead state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeadMode {
    Require,
    Forbid,
    Any,
}

/// Letter-permutation and complement pruning. Never changes the result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    Full,
    None,
}

impl FromStr for ClassFilter {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "r" | "r-trivial" => Ok(ClassFilter::RTrivial),
            "j" | "j-trivial" => Ok(ClassFilter::JTrivial),
            _ => Err(format!("unknown class {s:?}")),
        }
    }
}

impl FromStr for DeadMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "require" => Ok(DeadMode::Require),
            "forbid" => Ok(DeadMode::Forbid),
            "any" => Ok(DeadMode::Any),
            _ => Err(format!("unknown dead-state mode {s:?}")),
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassFilter::RTrivial => "r-trivial",
            ClassFilter::JTrivial => "j-trivial",
        })
    }
}

impl fmt::Display for DeadMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeadMode::Require => "require",
            DeadMode::Forbid => "forbid",
            DeadMode::Any => "any",
        })
    }
}

impl DeadMode {
    fn admits(self, has_dead: bool) -> bool {
        match self {
            DeadMode::Require => has_dead,
            DeadMode::Forbid => !has_dead,
            DeadMode::Any => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchConfig {
    pub n: usize,
    pub k: usize,
    pub class: ClassFilter,
    pub dead: DeadMode,
    pub symmetry: Symmetry,
}

impl SearchConfig {
    pub fn new(n: usize, k: usize, class: ClassFilter, dead: DeadMode) -> SearchConfig {
        SearchConfig {
            n,
            k,
            class,
            dead,
            symmetry: Symmetry::Full,
        }
    }

    pub fn with_symmetry(self, symmetry: Symmetry) -> SearchConfig {
        SearchConfig { symmetry, ..self }
    }
}

/// Best candidate found so far: reverse state complexity plus the
/// (table, mask) encoding used for tie-breaking.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Best {
    value: usize,
    table: Vec<u8>,
    mask: u64,
}

impl Best {
    /// Larger value wins; among equal values the smaller encoding wins.
    fn beats(&self, other: &Best) -> bool {
        match self.value.cmp(&other.value) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => (&self.table, self.mask) < (&other.table, other.mask),
        }
    }
}

/// Partial result of scanning some cursors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialScan {
    best: Option<Best>,
    pub candidates: u128,
    pub qualifying: u128,
    pub evaluated: u128,
}

impl PartialScan {
    fn offer(&mut self, value: usize, table: &[u8], mask: u64) {
        let better = match &self.best {
            None => true,
            Some(b) => match value.cmp(&b.value) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => (table, mask) < (b.table.as_slice(), b.mask),
            },
        };
        if better {
            self.best = Some(Best {
                value,
                table: table.to_vec(),
                mask,
            });
        }
    }

    /// Commutative, associative merge.
    pub fn merge(mut self, other: PartialScan) -> PartialScan {
        self.candidates += other.candidates;
        self.qualifying += other.qualifying;
        self.evaluated += other.evaluated;
        self.best = match (self.best.take(), other.best) {
            (None, b) | (b, None) => b,
            (Some(a), Some(b)) => Some(if b.beats(&a) { b } else { a }),
        };
        self
    }

    pub fn max_value(&self) -> Option<usize> {
        self.best.as_ref().map(|b| b.value)
    }
}

/// Scans one cursor sequentially.
pub fn scan_cursor(cursor: &CandidateCursor, cfg: &SearchConfig) -> PartialScan {
    let (n, k) = (cursor.n, cursor.k);
    let full_mask = (1u64 << n) - 1;
    let top = 1u64 << (n - 1);
    let perms = match cfg.symmetry {
        Symmetry::Full => letter_permutations(k),
        Symmetry::None => vec![(0..k).collect()],
    };
    let pair_complements = cfg.symmetry == Symmetry::Full;
    let mut scratch = ReverseScratch::new(n, k);
    let mut out = PartialScan::default();
    let mut tables = cursor.tables();
    while tables.advance() {
        out.candidates += 1 << n;
        let table = tables.table();
        if !all_reachable(table, n, k) {
            continue;
        }
        let Some(weight) = orbit_weight(table, k, &perms) else {
            continue;
        };
        if cfg.class == ClassFilter::JTrivial && !trahtman_unchecked(&table_to_dfa(n, k, table, 0))
        {
            continue;
        }
        let sinks = sink_mask(table, n, k);
        scratch.load(table);
        for mask in 0..=full_mask {
            if pair_complements && mask & top != 0 {
                break;
            }
            if !is_minimal(table, n, k, mask) {
                continue;
            }
            let own = cfg.dead.admits(sinks & !mask != 0);
            let twin = !mask & full_mask;
            let twin_ok = pair_complements && cfg.dead.admits(sinks & mask != 0);
            if !own && !twin_ok {
                continue;
            }
            let value = scratch.reachable_subsets(mask);
            out.evaluated += 1;
            if own {
                out.qualifying += weight as u128;
                out.offer(value, table, mask);
            }
            if twin_ok {
                out.qualifying += weight as u128;
                out.offer(value, table, twin);
            }
        }
    }
    out
}

/// Scans the given cursors and merges the results. Uses the rayon pool
/// when `parallel` is enabled and `jobs > 1`.
pub fn scan_cursors(cursors: &[CandidateCursor], cfg: &SearchConfig, jobs: usize) -> PartialScan {
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        return pool.install(|| {
            cursors
                .par_iter()
                .map(|c| scan_cursor(c, cfg))
                .reduce(PartialScan::default, PartialScan::merge)
        });
    }
    let _ = jobs;
    cursors
        .iter()
        .map(|c| scan_cursor(c, cfg))
        .fold(PartialScan::default(), PartialScan::merge)
}

/// Outcome of one search cell.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SearchRecord {
    pub n: usize,
    pub k: usize,
    pub class: ClassFilter,
    pub dead: DeadMode,
    /// Largest reverse state complexity among kept candidates; `None` when
    /// no candidate passes the filters.
    pub max_reverse_sc: Option<usize>,
    pub witness: Option<DfaJson>,
    /// Size of the raw enumeration covered.
    pub candidates_scanned: u128,
    /// Candidates that are connected, minimal and pass the filters.
    pub minimal_count: u128,
    /// Subset constructions actually run; depends on pruning.
    pub evaluated: u128,
    pub wall_time_ms: u64,
}

impl SearchRecord {
    /// Equality of everything that must not depend on pruning, worker
    /// count or timing.
    pub fn same_result(&self, other: &SearchRecord) -> bool {
        self.n == other.n
            && self.k == other.k
            && self.class == other.class
            && self.dead == other.dead
            && self.max_reverse_sc == other.max_reverse_sc
            && self.witness == other.witness
            && self.candidates_scanned == other.candidates_scanned
            && self.minimal_count == other.minimal_count
    }

    pub fn witness_dfa(&self) -> Option<Dfa> {
        self.witness
            .clone()
            .map(|j| Dfa::try_from(j).expect("recorded witness is valid"))
    }
}

/// Default number of cursors handed to the workers.
fn default_parts(jobs: usize) -> usize {
    (jobs.max(1) * 64).max(256)
}

/// Worst-case reverse state complexity over minimal partially ordered DFAs
/// with `n` states and `k` letters that pass the class and dead-state
/// filters. The witness is the lexicographically least (table, mask)
/// encoding among the maximizers.
pub fn worst_case_reverse(cfg: &SearchConfig, jobs: usize) -> Result<SearchRecord> {
    let start = Instant::now();
    let cursors = partition_workload(cfg.n, cfg.k, default_parts(jobs))?;
    let scan = scan_cursors(&cursors, cfg, jobs);
    let witness = scan
        .best
        .as_ref()
        .map(|b| DfaJson::from(&table_to_dfa(cfg.n, cfg.k, &b.table, b.mask)));
    Ok(SearchRecord {
        n: cfg.n,
        k: cfg.k,
        class: cfg.class,
        dead: cfg.dead,
        max_reverse_sc: scan.max_value(),
        witness,
        candidates_scanned: scan.candidates,
        minimal_count: scan.qualifying,
        evaluated: scan.evaluated,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Calls `f` on every connected minimal DFA with a monotone table,
/// sequentially and in enumeration order.
pub fn for_each_minimal_po_dfa<F: FnMut(Dfa)>(n: usize, k: usize, mut f: F) -> Result<()> {
    cursor::check_guard(n, k)?;
    let mut tables = CandidateCursor::full(n, k).tables();
    while tables.advance() {
        let t = tables.table();
        if !all_reachable(t, n, k) {
            continue;
        }
        for mask in 0..1u64 << n {
            if is_minimal(t, n, k, mask) {
                f(table_to_dfa(n, k, t, mask));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{dead_states, is_minimal as generic_minimal, reverse_state_complexity};
    use crate::order::{is_j_trivial, JMethod};

    /// Straight scan over `enumerate_po_dfas` with the generic library
    /// routines, independent of the kernel and of pruning.
    fn brute_force(cfg: &SearchConfig) -> (Option<usize>, Option<Dfa>, u128) {
        let mut best: Option<(usize, Dfa)> = None;
        let mut count = 0u128;
        for d in enumerate_po_dfas(cfg.n, cfg.k).unwrap() {
            if !generic_minimal(&d) {
                continue;
            }
            if !cfg.dead.admits(!dead_states(&d).is_empty()) {
                continue;
            }
            if cfg.class == ClassFilter::JTrivial && !is_j_trivial(&d, JMethod::ReversePo) {
                continue;
            }
            count += 1;
            let v = reverse_state_complexity(&d);
            if best.as_ref().is_none_or(|(b, _)| v > *b) {
                best = Some((v, d));
            }
        }
        (best.as_ref().map(|b| b.0), best.map(|b| b.1), count)
    }

    #[test]
    fn agrees_with_brute_force() {
        for (n, k) in [(1, 1), (2, 2), (3, 2), (4, 2), (3, 3)] {
            for class in [ClassFilter::RTrivial, ClassFilter::JTrivial] {
                for dead in [DeadMode::Require, DeadMode::Forbid, DeadMode::Any] {
                    let base = SearchConfig::new(n, k, class, dead);
                    let (max, witness, count) = brute_force(&base);
                    for sym in [Symmetry::None, Symmetry::Full] {
                        let rec = worst_case_reverse(&base.with_symmetry(sym), 1).unwrap();
                        assert_eq!(rec.max_reverse_sc, max, "{base:?} {sym:?}");
                        assert_eq!(rec.minimal_count, count, "{base:?} {sym:?}");
                        assert_eq!(rec.witness_dfa(), witness, "{base:?} {sym:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn small_table_rows() {
        let cfg = SearchConfig::new(4, 2, ClassFilter::RTrivial, DeadMode::Any);
        assert_eq!(worst_case_reverse(&cfg, 1).unwrap().max_reverse_sc, Some(7));
        let cfg = SearchConfig::new(4, 2, ClassFilter::JTrivial, DeadMode::Any);
        assert_eq!(worst_case_reverse(&cfg, 1).unwrap().max_reverse_sc, Some(7));
    }

    #[test]
    fn partitioned_scan_matches_sequential() {
        let cfg = SearchConfig::new(5, 2, ClassFilter::RTrivial, DeadMode::Any);
        let whole = scan_cursor(&CandidateCursor::full(5, 2), &cfg);
        let parts = partition_workload(5, 2, 8).unwrap();
        assert_eq!(parts.len(), 8);
        let merged = scan_cursors(&parts, &cfg, 1);
        assert_eq!(merged, whole);
        let reversed = parts
            .iter()
            .rev()
            .map(|c| scan_cursor(c, &cfg))
            .fold(PartialScan::default(), PartialScan::merge);
        assert_eq!(reversed, whole);
        assert_eq!(whole.candidates, candidate_count(5, 2));
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let cfg = SearchConfig::new(5, 2, ClassFilter::JTrivial, DeadMode::Forbid);
        let seq = worst_case_reverse(&cfg, 1).unwrap();
        let par = worst_case_reverse(&cfg, 4).unwrap();
        assert!(seq.same_result(&par));
    }

    #[test]
    fn record_json_round_trip() {
        let cfg = SearchConfig::new(3, 2, ClassFilter::RTrivial, DeadMode::Require);
        let rec = worst_case_reverse(&cfg, 1).unwrap();
        let back: SearchRecord =
            serde_json::from_str(&serde_json::to_string(&rec).unwrap()).unwrap();
        assert_eq!(back, rec);
        let w = back.witness_dfa().unwrap();
        assert_eq!(Some(reverse_state_complexity(&w)), back.max_reverse_sc);
        assert!(!dead_states(&w).is_empty());
    }
}
