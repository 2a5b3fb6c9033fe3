//! Witness automaton families and closed-form bounds on the state
//! complexity of the reverse.

use crate::automata::{default_letter_names, Dfa};
use crate::error::{Error, Result};
use crate::regex::regex_to_min_dfa;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Binary partially ordered DFA with `n` states whose reverse needs at
/// least `2^(n-2)` states.
///
/// State 0 is an accepting sink and `n-1` a dead state; the initial state
/// `n-2` walks down the chain `n-2 -> ... -> 1` under both letters, and
/// state 1 splits into 0 under `a` and `n-1` under `b`.
pub fn fig2_witness(n: usize) -> Result<Dfa> {
    if n < 3 {
        return Err(Error::Guard {
            what: "fig2_witness",
            requirement: "n >= 3",
            value: n,
        });
    }
    let dead = n - 1;
    let rows = (0..n)
        .map(|q| match q {
            0 => vec![0, 0],
            1 => vec![0, dead],
            q if q == dead => vec![dead, dead],
            q => vec![q - 1, q - 1],
        })
        .collect();
    Dfa::new(n, 2, rows, n - 2, [0])
}

/// J-trivial DFA over `n-2` letters `a1..a(n-2)` whose reverse has
/// `2^(n-1) - 1` states.
///
/// State 0 is an accepting sink and 1 is initial. From `i >= 1`, letter
/// `a_j` moves to `i+1` when `i <= j`, to 0 when `j = i-1`, and loops
/// otherwise.
pub fn fig5_witness(n: usize) -> Result<Dfa> {
    if n < 3 {
        return Err(Error::Guard {
            what: "fig5_witness",
            requirement: "n >= 3",
            value: n,
        });
    }
    let k = n - 2;
    let rows = (0..n)
        .map(|i| {
            (1..=k)
                .map(|j| {
                    if i == 0 {
                        0
                    } else if i <= j {
                        i + 1
                    } else if j == i - 1 {
                        0
                    } else {
                        i
                    }
                })
                .collect()
        })
        .collect();
    let letters = (1..=k).map(|j| format!("a{j}")).collect();
    Dfa::with_letters(letters, n, rows, 1, [0])
}

const L2: &str = "a*b(a+b)*";
const L3: &str = "b*+b*a(a*b(a+b)*)";

/// Binary witness expressions reaching the worst case for `n = 2..=7`,
/// with every reference to a smaller witness substituted in place.
pub fn table1_expression(n: usize) -> Result<String> {
    let l2 = format!("({L2})");
    let l3 = format!("({L3})");
    let l5 = format!("b*a(a{l3}+b{l2})");
    Ok(match n {
        2 => L2.to_string(),
        3 => L3.to_string(),
        4 => format!("b*a{l3}"),
        5 => l5,
        6 => format!("b*a(b*a+{l5})"),
        7 => format!("b*ab*a(a+b)(ε+a{l3}+b{l2})"),
        _ => {
            return Err(Error::Guard {
                what: "table1_witness",
                requirement: "2 <= n <= 7",
                value: n,
            })
        }
    })
}

/// Minimal DFA of the `n`-state binary witness language.
pub fn table1_witness(n: usize) -> Result<Dfa> {
    regex_to_min_dfa(&table1_expression(n)?, &default_letter_names(2))
}

/// Language class a bound applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundFamily {
    #[serde(rename = "r")]
    RTrivial,
    #[serde(rename = "j")]
    JTrivial,
}

impl FromStr for BoundFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "r" | "r-trivial" => Ok(BoundFamily::RTrivial),
            "j" | "j-trivial" | "j-trivial-binary" => Ok(BoundFamily::JTrivial),
            _ => Err(format!("unknown family {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundQuery {
    pub n: usize,
    pub k: usize,
    pub family: BoundFamily,
}

/// Value of a bound function; `Unknown` where no tight value is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    Known(u64),
    Unknown,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Known(v) => write!(f, "{v}"),
            Bound::Unknown => write!(f, "unknown"),
        }
    }
}

fn pow2(e: usize) -> u64 {
    1u64.checked_shl(e as u32)
        .filter(|_| e < 64)
        .expect("bound exceeds u64")
}

/// Worst-case state complexity of the reverse of R-trivial languages with
/// state complexity `n` over `k` letters.
pub fn theorem1_bound(n: usize, k: usize) -> Result<u64> {
    if n == 0 || k == 0 {
        return Err(Error::Guard {
            what: "theorem1_bound",
            requirement: "n >= 1 and k >= 1",
            value: n.min(k),
        });
    }
    Ok(match (k, n) {
        (1, n) => n as u64,
        (2, 1) => 1,
        (2, 2..=6) => pow2(n - 2) + n as u64 - 1,
        (2, 7) => 34,
        (2, n) => pow2(n - 2),
        (_, n) => pow2(n - 1),
    })
}

/// Upper bound `2^(n-2) + n - 1` for binary R-trivial languages with
/// `n >= 2` states.
pub fn lemma2_bound(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::Guard {
            what: "lemma2_bound",
            requirement: "n >= 2",
            value: n,
        });
    }
    Ok(pow2(n - 2) + n as u64 - 1)
}

/// Upper bound for binary J-trivial languages with `n >= 4` states:
/// `2^(n-3) + min(max(2n-3, (n-2)^2), 2^(n-3)) + (n-1)`.
pub fn corollary3_bound(n: usize) -> Result<u64> {
    if n < 4 {
        return Err(Error::Guard {
            what: "corollary3_bound",
            requirement: "n >= 4",
            value: n,
        });
    }
    let n64 = n as u64;
    let half = pow2(n - 3);
    let middle = (2 * n64 - 3).max((n64 - 2) * (n64 - 2)).min(half);
    Ok(half + middle + n64 - 1)
}

/// Bound on the reverse of J-trivial languages with `n >= 3` states over
/// `k` letters.
///
/// `k >= n-1` gives `2^(n-1)`, `k = n-2` gives `2^(n-1) - 1`, and a unary
/// alphabet gives `n`. Binary alphabets with `n >= 5` fall back on
/// [`corollary3_bound`]; all other cases are open.
pub fn jtrivial_alphabet_bound(n: usize, k: usize) -> Result<Bound> {
    if n < 3 || k == 0 {
        return Err(Error::Guard {
            what: "jtrivial_alphabet_bound",
            requirement: "n >= 3 and k >= 1",
            value: n,
        });
    }
    Ok(if k >= n - 1 {
        Bound::Known(pow2(n - 1))
    } else if k == n - 2 {
        Bound::Known(pow2(n - 1) - 1)
    } else if k == 1 {
        Bound::Known(n as u64)
    } else if k == 2 && n >= 4 {
        Bound::Known(corollary3_bound(n)?)
    } else {
        Bound::Unknown
    })
}

/// Dispatches a [`BoundQuery`] to the bound function of its family.
pub fn evaluate_bound(q: BoundQuery) -> Result<Bound> {
    match q.family {
        BoundFamily::RTrivial => theorem1_bound(q.n, q.k).map(Bound::Known),
        BoundFamily::JTrivial => jtrivial_alphabet_bound(q.n, q.k),
    }
}
