//! Infinite friezes of positive integers and the admissible triangulations of
//! the infinite strip that realize them.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure
//! computation over finitely presented objects:
//!
//! * [`quiddity`]: eventually periodic quiddity sequences and depth-bounded
//!   validity checks.
//! * [`frieze`]: lazily evaluated frieze entries `t(i, j)` and the algebraic
//!   identities they satisfy.
//! * [`polygon`]: triangulated polygons, Conway-Coxeter labels,
//!   Broline-Crowe-Isaacs counts and frieze patterns of finite rank.
//! * [`strip`]: arcs, crossing, admissibility and Dehn twists for windowed
//!   triangulations of the strip.
//! * [`synthesis`]: the construction of an admissible strip triangulation from
//!   a quiddity sequence, and the enough-ones decision built on it.
//! * [`counting`]: frieze entries recovered by cutting a strip triangulation
//!   down to a finite polygon.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod counting;
pub mod frieze;
pub mod polygon;
pub mod quiddity;
pub mod seq;
pub mod strip;
pub mod synthesis;

pub use num_bigint::BigInt;

pub use counting::{bci_entry, cc_entry, cut_polygon, CountingError, PolygonCut};
pub use frieze::{entry_from_fg, quiddity_from_f, FriezeError, FriezeView};
pub use polygon::{FriezePattern, PolygonError, PolygonTriangulation};
pub use quiddity::{QuiddityDescriptor, QuiddityError, ValidationReport, ValidationStatus};
pub use seq::{PeriodicSeq, SeqError};
pub use strip::{cross, Arc, Boundary, M2Class, MarkedPoint, StripError, StripTriangulation};
pub use synthesis::{
    has_enough_ones, m2_class, psi, EnoughOnes, StepAVerdict, StepFlags, SynthesisError,
    SynthesisOptions, SynthesisOutcome, SynthesisState,
};
