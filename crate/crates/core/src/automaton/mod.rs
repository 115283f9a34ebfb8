//! The normal-form automaton: transitions on extended shadows, synthesis,
//! minimization and export.

pub mod build;
pub mod dfa;
pub mod transition;

pub use build::{
    build_automaton, build_automaton_with, distinguishing_experiment, is_normal, BuildOptions,
    ExperimentReport,
};
pub use dfa::{Dfa, Nfa, NormalFormDfa, DEAD};
pub use transition::{comp, dec, epsilon_state, TransferMaps, Variant};
