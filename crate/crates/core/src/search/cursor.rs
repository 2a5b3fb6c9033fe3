use crate::automata::Dfa;
use crate::error::{Error, Result};

/// Largest state count the enumerator accepts.
pub const MAX_STATES: usize = 12;
/// Largest alphabet the enumerator accepts.
pub const MAX_LETTERS: usize = 4;

pub(crate) fn check_guard(n: usize, k: usize) -> Result<()> {
    if n == 0 || n > MAX_STATES {
        return Err(Error::Guard {
            what: "enumeration",
            requirement: "1 <= n <= 12",
            value: n,
        });
    }
    if k == 0 || k > MAX_LETTERS {
        return Err(Error::Guard {
            what: "enumeration",
            requirement: "1 <= k <= 4",
            value: k,
        });
    }
    Ok(())
}

/// Number of monotone tables (`δ(i, σ) >= i`) with `n` states and `k`
/// letters whose first `rows` rows are free.
pub fn monotone_table_count(n: usize, k: usize, rows: usize) -> u128 {
    (0..rows).map(|i| ((n - i) as u128).pow(k as u32)).product()
}

/// Closed-form size of the raw enumeration: every monotone table times
/// every acceptance mask.
pub fn candidate_count(n: usize, k: usize) -> u128 {
    monotone_table_count(n, k, n) << n
}

/// A contiguous slice of the enumeration.
///
/// The first `prefix_rows` rows of the transition table range over the
/// prefixes with lexicographic index in `start..end`; the remaining rows
/// and the acceptance mask range over everything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateCursor {
    pub n: usize,
    pub k: usize,
    pub prefix_rows: usize,
    pub start: u64,
    pub end: u64,
}

impl CandidateCursor {
    /// The whole enumeration.
    pub fn full(n: usize, k: usize) -> CandidateCursor {
        CandidateCursor {
            n,
            k,
            prefix_rows: 0,
            start: 0,
            end: 1,
        }
    }

    /// Number of tables covered.
    pub fn table_count(&self) -> u128 {
        (self.end - self.start) as u128
            * (self.prefix_rows..self.n)
                .map(|i| ((self.n - i) as u128).pow(self.k as u32))
                .product::<u128>()
    }

    pub fn candidate_count(&self) -> u128 {
        self.table_count() << self.n
    }

    /// Monotone tables of this slice in lexicographic order.
    pub fn tables(&self) -> TableIter {
        TableIter::new(self)
    }
}

/// Splits the enumeration into at most `parts` disjoint cursors, in
/// lexicographic order, whose union is the whole enumeration.
pub fn partition_workload(n: usize, k: usize, parts: usize) -> Result<Vec<CandidateCursor>> {
    check_guard(n, k)?;
    let parts = parts.max(1) as u128;
    let mut rows = 0;
    while rows < n && monotone_table_count(n, k, rows) < parts {
        rows += 1;
    }
    let total = monotone_table_count(n, k, rows);
    let chunks = parts.min(total);
    let mut out = Vec::with_capacity(chunks as usize);
    for c in 0..chunks {
        let start = total * c / chunks;
        let end = total * (c + 1) / chunks;
        out.push(CandidateCursor {
            n,
            k,
            prefix_rows: rows,
            start: start as u64,
            end: end as u64,
        });
    }
    Ok(out)
}

/// Odometer over the monotone tables of one cursor.
pub struct TableIter {
    n: usize,
    k: usize,
    fixed: usize,
    next_prefix: u64,
    end_prefix: u64,
    table: Vec<u8>,
    fresh: bool,
    done: bool,
}

impl TableIter {
    fn new(c: &CandidateCursor) -> TableIter {
        let mut it = TableIter {
            n: c.n,
            k: c.k,
            fixed: c.prefix_rows * c.k,
            next_prefix: c.start,
            end_prefix: c.end,
            table: vec![0; c.n * c.k],
            fresh: true,
            done: c.start >= c.end,
        };
        if !it.done {
            it.load_prefix();
        }
        it
    }

    /// Writes prefix `next_prefix` into the fixed rows and resets the rest
    /// to their smallest values.
    fn load_prefix(&mut self) {
        let mut idx = self.next_prefix;
        for pos in (0..self.fixed).rev() {
            let row = pos / self.k;
            let radix = (self.n - row) as u64;
            self.table[pos] = (row as u64 + idx % radix) as u8;
            idx /= radix;
        }
        for pos in self.fixed..self.table.len() {
            self.table[pos] = (pos / self.k) as u8;
        }
        self.next_prefix += 1;
        self.fresh = true;
    }

    /// Advances to the next table; returns false when the slice is done.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if self.fresh {
            self.fresh = false;
            return true;
        }
        let max = (self.n - 1) as u8;
        for pos in (self.fixed..self.table.len()).rev() {
            if self.table[pos] < max {
                self.table[pos] += 1;
                for p in pos + 1..self.table.len() {
                    self.table[p] = (p / self.k) as u8;
                }
                return true;
            }
        }
        if self.next_prefix < self.end_prefix {
            self.load_prefix();
            self.fresh = false;
            return true;
        }
        self.done = true;
        false
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }
}

/// Builds the DFA with initial state 0 for a table and acceptance mask.
pub fn table_to_dfa(n: usize, k: usize, table: &[u8], mask: u64) -> Dfa {
    let rows = table
        .chunks(k)
        .map(|r| r.iter().map(|&t| t as usize).collect())
        .collect();
    Dfa::new(n, k, rows, 0, (0..n).filter(|q| mask >> q & 1 == 1)).expect("valid monotone table")
}

/// Every DFA with a monotone table, initial state 0, and any acceptance
/// mask, in lexicographic order of (table, mask).
pub fn enumerate_po_dfas(n: usize, k: usize) -> Result<impl Iterator<Item = Dfa>> {
    check_guard(n, k)?;
    let mut tables = CandidateCursor::full(n, k).tables();
    let mut current: Option<Vec<u8>> = None;
    let mut mask = 0u64;
    Ok(std::iter::from_fn(move || loop {
        if let Some(t) = &current {
            if mask < 1 << n {
                mask += 1;
                return Some(table_to_dfa(n, k, t, mask - 1));
            }
        }
        if !tables.advance() {
            return None;
        }
        current = Some(tables.table().to_vec());
        mask = 0;
    }))
}
