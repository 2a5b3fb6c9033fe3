//! JSON and Graphviz DOT encodings of [`Dfa`].
//!
//! JSON shape:
//! `{ "states": n, "alphabet": ["a","b"], "initial": 0, "accepting": [..], "delta": [[..], ..] }`
//! with one row per state holding one target per letter.

use super::dfa::Dfa;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DfaJson {
    pub states: usize,
    pub alphabet: Vec<String>,
    pub initial: usize,
    pub accepting: Vec<usize>,
    pub delta: Vec<Vec<usize>>,
}

impl From<&Dfa> for DfaJson {
    fn from(d: &Dfa) -> Self {
        DfaJson {
            states: d.state_count(),
            alphabet: d.letters().to_vec(),
            initial: d.initial(),
            accepting: d.accepting().iter().collect(),
            delta: (0..d.state_count()).map(|q| d.row(q).to_vec()).collect(),
        }
    }
}

impl TryFrom<DfaJson> for Dfa {
    type Error = Error;

    fn try_from(j: DfaJson) -> Result<Dfa> {
        Dfa::with_letters(j.alphabet, j.states, j.delta, j.initial, j.accepting)
    }
}

impl Dfa {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DfaJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Dfa> {
        let j: DfaJson = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Dfa::try_from(j)
    }

    /// Graphviz rendering. Parallel edges between the same pair of states are
    /// merged into one edge with a comma-separated label.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let k = self.alphabet_size();
        writeln!(out, "digraph dfa {{").unwrap();
        writeln!(out, "  rankdir=LR;").unwrap();
        writeln!(out, "  comment=\"alphabet: {}\";", self.letters().join(",")).unwrap();
        writeln!(out, "  __start [shape=point];").unwrap();
        for q in 0..self.state_count() {
            let shape = if self.is_accepting(q) {
                "doublecircle"
            } else {
                "circle"
            };
            writeln!(out, "  {q} [shape={shape}];").unwrap();
        }
        writeln!(out, "  __start -> {};", self.initial()).unwrap();
        for q in 0..self.state_count() {
            let mut targets: Vec<usize> = self.row(q).to_vec();
            targets.sort_unstable();
            targets.dedup();
            for t in targets {
                let label: Vec<&str> = (0..k)
                    .filter(|&a| self.next(q, a) == t)
                    .map(|a| self.letters()[a].as_str())
                    .collect();
                writeln!(out, "  {q} -> {t} [label=\"{}\"];", label.join(",")).unwrap();
            }
        }
        writeln!(out, "}}").unwrap();
        out
    }

    /// Reads back the DOT dialect produced by [`Dfa::to_dot`].
    pub fn from_dot(text: &str) -> Result<Dfa> {
        let bad = |msg: &str| Error::Format(format!("dot: {msg}"));
        let mut letters: Option<Vec<String>> = None;
        let mut accepting = Vec::new();
        let mut states = 0usize;
        let mut initial = None;
        let mut edges = Vec::new();
        for line in text.lines().map(str::trim) {
            let line = line.trim_end_matches(';');
            if let Some(rest) = line.strip_prefix("comment=\"alphabet: ") {
                let names = rest.trim_end_matches('"');
                letters = Some(names.split(',').map(str::to_string).collect());
            } else if let Some(rest) = line.strip_prefix("__start -> ") {
                initial = Some(rest.trim().parse::<usize>().map_err(|_| bad("initial"))?);
            } else if let Some((lhs, rhs)) = line.split_once(" -> ") {
                let from: usize = lhs.trim().parse().map_err(|_| bad("edge source"))?;
                let (to, attrs) = rhs.split_once(' ').ok_or_else(|| bad("edge"))?;
                let to: usize = to.parse().map_err(|_| bad("edge target"))?;
                let label = attrs
                    .strip_prefix("[label=\"")
                    .and_then(|s| s.strip_suffix("\"]"))
                    .ok_or_else(|| bad("edge label"))?;
                for name in label.split(',') {
                    edges.push((from, name.to_string(), to));
                }
            } else if let Some((id, attrs)) = line.split_once(" [shape=") {
                if id == "__start" {
                    continue;
                }
                let q: usize = id.parse().map_err(|_| bad("node id"))?;
                if q != states {
                    return Err(bad("nodes out of order"));
                }
                states += 1;
                if attrs.starts_with("doublecircle") {
                    accepting.push(q);
                }
            }
        }
        let letters = letters.ok_or_else(|| bad("missing alphabet comment"))?;
        let initial = initial.ok_or_else(|| bad("missing initial arrow"))?;
        let k = letters.len();
        let mut rows = vec![vec![usize::MAX; k]; states];
        for (from, name, to) in edges {
            let a = letters
                .iter()
                .position(|l| *l == name)
                .ok_or_else(|| bad("unknown letter"))?;
            let slot = rows
                .get_mut(from)
                .and_then(|r| r.get_mut(a))
                .ok_or(Error::StateOutOfRange(from))?;
            *slot = to;
        }
        if let Some(q) = rows.iter().position(|r| r.contains(&usize::MAX)) {
            return Err(Error::PartialRow {
                state: q,
                expected: k,
                found: rows[q].iter().filter(|&&t| t != usize::MAX).count(),
            });
        }
        Dfa::with_letters(letters, states, rows, initial, accepting)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Dfa {
        Dfa::new(3, 2, vec![vec![1, 2], vec![1, 1], vec![2, 2]], 0, [1]).unwrap()
    }

    #[test]
    fn json_shape() {
        let j: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(j["states"], 3);
        assert_eq!(j["alphabet"], serde_json::json!(["a", "b"]));
        assert_eq!(j["delta"][0], serde_json::json!([1, 2]));
        assert_eq!(j["accepting"], serde_json::json!([1]));
    }

    #[test]
    fn json_round_trip() {
        let d = sample();
        assert_eq!(Dfa::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn json_validation_errors() {
        let text = r#"{"states":2,"alphabet":["a"],"initial":0,"accepting":[],"delta":[[0],[]]}"#;
        assert!(matches!(
            Dfa::from_json(text),
            Err(Error::PartialRow { .. })
        ));
        assert!(matches!(Dfa::from_json("{"), Err(Error::Format(_))));
    }

    #[test]
    fn dot_merges_parallel_edges() {
        let dot = sample().to_dot();
        assert!(dot.contains("1 -> 1 [label=\"a,b\"]"));
        assert!(dot.contains("1 [shape=doublecircle]"));
        assert!(dot.contains("__start -> 0"));
    }

    #[test]
    fn dot_round_trip() {
        let d = sample();
        assert_eq!(Dfa::from_dot(&d.to_dot()).unwrap(), d);
    }
}
