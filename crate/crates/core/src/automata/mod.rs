//! Automaton value types and the operations the rest of the crate composes.

mod dfa;
mod io;
mod minimize;
mod nfa;

pub use dfa::{default_letter_names, Dfa};
pub use io::DfaJson;
pub use minimize::{is_minimal, minimize, reverse_state_complexity, state_complexity};
pub use nfa::{determinize, reverse, Nfa, SubsetAutomaton};

/// Swaps accepting and non-accepting states.
pub fn complement(dfa: &Dfa) -> Dfa {
    dfa.complement()
}

/// Non-accepting states with a self-loop under every letter.
pub fn dead_states(dfa: &Dfa) -> crate::stateset::StateSet {
    dfa.dead_states()
}
