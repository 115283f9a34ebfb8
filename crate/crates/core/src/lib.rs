//! Braid normal forms through tight laminations of the punctured disk.
//!
//! The crate computes the relaxation normal form of braids, synthesizes the
//! finite automaton recognizing the normal-form language from extended
//! shadows, classifies σ-positivity and runs small automaticity experiments.

pub mod automatic;
pub mod automaton;
pub mod coords;
pub mod error;
pub mod lamination;
pub mod relax;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use lamination::{ArcRef, Lamination, Side};
pub use relax::{PositivityClass, Strategy};
pub use word::{ArtinWord, Quadrant, SlidingLetter, SlidingWord};
