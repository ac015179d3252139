//! Colored simplicial complexes and their flag f-vectors.
//!
//! A colored complex over `n` colors is a downward-closed family of *rainbow*
//! faces: every face holds at most one vertex of each color. This crate
//! provides
//!
//! * [`ColoredComplex`] with closure, cones, unions and color selection,
//! * flag f-vectors, flag h-vectors and coarse f-vectors ([`flag`]),
//! * the dominance order behind color-shifting, shift-maximal faces and
//!   principal down-sets ([`shift`]),
//! * the cone construction that extends a color-shifted complex to one that is
//!   the only color-shifted complex with its flag f-vector ([`construction`]),
//! * an exhaustive search over color-shifted complexes with a prescribed flag
//!   f-vector, used as an independent oracle ([`oracle`]).
//!
//! The crate is `no_std` (it needs `alloc`). Everything is sized for desk-scale
//! work: at most [`MAX_COLORS`] colors and explicit face sets.
//!
//! ```
//! use colorshift_core::{construction, flag, shift, ColorSet, Face};
//!
//! // Edge {v_2^1, v_1^2} and everything below it in the dominance order.
//! let delta = shift::shift_closure(2, [Face::from_pairs(&[(1, 2), (2, 1)]).unwrap()]).unwrap();
//! assert!(shift::is_color_shifted(&delta));
//!
//! let (gamma, report) = construction::construct_gamma(&delta).unwrap();
//! assert_eq!(report.m, 3);
//! assert_eq!(gamma.color_selected(ColorSet::full(2)).unwrap(), delta);
//! assert_eq!(flag::flag_f(&gamma).get(ColorSet::from_bits(0b101)), 2);
//! ```

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

mod complex;
pub mod construction;
mod error;
mod face;
pub mod flag;
pub mod oracle;
pub mod shift;

pub use complex::{validate, ColoredComplex, Violation};
pub use error::Error;
pub use face::{ColorSet, Face, Vertex};

/// Upper bound on the number of colors of any complex or flag vector.
///
/// Flag vectors are stored densely over all `2^n` color subsets.
pub const MAX_COLORS: usize = 16;
