//! State complexity of the reverse of R-trivial (partially ordered) and
//! J-trivial (piecewise testable) regular languages.
//!
//! The crate provides complete DFAs and NFAs with reversal, subset
//! construction and minimization ([`automata`]), partial-order and
//! J-triviality tests ([`order`]), a small regex front end ([`regex`]),
//! witness families and bound formulas ([`witness`]), and an exhaustive
//! search over partially ordered DFAs ([`search`]).

#![allow(clippy::needless_range_loop)]

pub mod automata;
pub mod error;
pub mod order;
pub mod regex;
pub mod search;
pub mod stateset;
pub mod witness;

pub use automata::{
    complement, dead_states, determinize, minimize, reverse, reverse_state_complexity,
    state_complexity, Dfa, Nfa, SubsetAutomaton,
};
pub use error::{Error, Result};
pub use order::{
    component_cone, is_j_trivial, is_r_trivial, letter_graph, reachability_order,
    self_loop_alphabet, simon_condition, trahtman_condition, JMethod, LetterGraph, LetterSet,
    PartialOrderCert,
};
pub use regex::{parse_regex, regex_to_min_dfa, regex_to_nfa, RegexAst};
pub use stateset::StateSet;
pub use witness::{
    corollary3_bound, evaluate_bound, fig2_witness, fig5_witness, jtrivial_alphabet_bound,
    lemma2_bound, table1_expression, table1_witness, theorem1_bound, Bound, BoundFamily,
    BoundQuery,
};
