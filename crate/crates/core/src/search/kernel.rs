//! Allocation-free per-table routines for the search hot loop. Tables are
//! row-major `u8` slices with `n <= 12` states and `k <= 4` letters; state
//! sets are bit masks.

use super::cursor::{MAX_LETTERS, MAX_STATES};

/// Whether every state is reachable from state 0. Monotone tables only send
/// states upward, so one increasing pass suffices.
pub fn all_reachable(table: &[u8], n: usize, k: usize) -> bool {
    let mut reach = 1u32;
    for q in 0..n {
        if reach >> q & 1 == 0 {
            return false;
        }
        for &t in &table[q * k..(q + 1) * k] {
            reach |= 1 << t;
        }
    }
    true
}

/// States looping under every letter.
pub fn sink_mask(table: &[u8], n: usize, k: usize) -> u64 {
    (0..n)
        .filter(|&q| table[q * k..(q + 1) * k].iter().all(|&t| t as usize == q))
        .fold(0, |m, q| m | 1 << q)
}

/// Moore refinement; true when all `n` states are pairwise distinguishable.
pub fn is_minimal(table: &[u8], n: usize, k: usize, mask: u64) -> bool {
    let mut class = [0u8; MAX_STATES];
    for (q, c) in class.iter_mut().enumerate().take(n) {
        *c = (mask >> q & 1) as u8;
    }
    let accepting = (mask.count_ones() as usize).min(n);
    let mut count = if accepting == 0 || accepting == n {
        1
    } else {
        2
    };
    if count == n {
        return true;
    }
    loop {
        let mut sigs = [0u32; MAX_STATES];
        let mut next = [0u8; MAX_STATES];
        let mut found = 0usize;
        for q in 0..n {
            let mut sig = class[q] as u32;
            for &t in &table[q * k..(q + 1) * k] {
                sig = sig << 4 | class[t as usize] as u32;
            }
            let id = match sigs[..found].iter().position(|&s| s == sig) {
                Some(i) => i,
                None => {
                    sigs[found] = sig;
                    found += 1;
                    found - 1
                }
            };
            next[q] = id as u8;
        }
        if found == n {
            return true;
        }
        if found == count {
            return false;
        }
        count = found;
        class = next;
    }
}

/// Reverse images of every subset under every letter, plus scratch space
/// for the breadth-first count.
pub struct ReverseScratch {
    n: usize,
    k: usize,
    image: Vec<u16>,
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<u16>,
}

impl ReverseScratch {
    pub fn new(n: usize, k: usize) -> ReverseScratch {
        assert!(n <= MAX_STATES && k <= MAX_LETTERS);
        ReverseScratch {
            n,
            k,
            image: vec![0; k << n],
            stamp: vec![0; 1 << n],
            epoch: 0,
            queue: Vec::with_capacity(1 << n),
        }
    }

    /// Fills `image[σ][X] = { p | δ(p, σ) ∈ X }` for the given table.
    pub fn load(&mut self, table: &[u8]) {
        let (n, k) = (self.n, self.k);
        let mut pre = [[0u16; MAX_STATES]; MAX_LETTERS];
        for p in 0..n {
            for a in 0..k {
                pre[a][table[p * k + a] as usize] |= 1 << p;
            }
        }
        for a in 0..k {
            let base = a << n;
            self.image[base] = 0;
            for x in 1usize..1 << n {
                let low = x.trailing_zeros() as usize;
                self.image[base + x] = self.image[base + (x & (x - 1))] | pre[a][low];
            }
        }
    }

    /// Number of subsets reachable from `start` in the subset automaton of
    /// the reversed table loaded last.
    pub fn reachable_subsets(&mut self, start: u64) -> usize {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        self.queue.clear();
        self.queue.push(start as u16);
        self.stamp[start as usize] = epoch;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head] as usize;
            head += 1;
            for a in 0..self.k {
                let y = self.image[(a << self.n) + x];
                if self.stamp[y as usize] != epoch {
                    self.stamp[y as usize] = epoch;
                    self.queue.push(y);
                }
            }
        }
        self.queue.len()
    }
}

/// All permutations of `0..k` in lexicographic order.
pub fn letter_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        out.push(perm.clone());
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// If `table` is the lexicographically least of its letter-permutation
/// orbit, returns the number of distinct tables in the orbit.
pub fn orbit_weight(table: &[u8], k: usize, perms: &[Vec<usize>]) -> Option<u64> {
    let mut distinct: Vec<Vec<u8>> = Vec::with_capacity(perms.len());
    for perm in perms {
        let image: Vec<u8> = table
            .chunks(k)
            .flat_map(|row| perm.iter().map(move |&a| row[a]))
            .collect();
        if image.as_slice() < table {
            return None;
        }
        if !distinct.contains(&image) {
            distinct.push(image);
        }
    }
    Some(distinct.len() as u64)
}
