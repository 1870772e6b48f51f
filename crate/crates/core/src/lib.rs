//! Sturm permutations, their meanders and the combinatorics of the associated
//! global attractors: Morse indices, zero numbers, heteroclinic connections,
//! minimax equilibria, suspension and exhaustive enumeration.
//!
//! ```
//! use sturm_meander::{AttractorModel, SturmPermutation};
//!
//! let p: SturmPermutation = "1 4 5 6 3 2 7".parse().unwrap();
//! assert!(p.is_sturm());
//! assert_eq!(p.morse_indices().as_slice(), &[0, 1, 2, 1, 0, 1, 0]);
//!
//! let model = AttractorModel::build(&p).unwrap();
//! assert!(model.connects(3, 5).unwrap());
//! ```

#![allow(clippy::needless_range_loop)]

pub mod attractor;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod meander;
pub mod perm;
pub mod suspension;
pub mod svg;
pub mod zeronum;

pub use attractor::{
    build_model, AttractorModel, Boundary, ConnectionGraph, MinimaxReport, MinimaxSet,
    MinimaxVerdict, NeighborQuartet,
};
pub use enumerate::{
    enumerate_sturm, enumerate_with, property_harness, Engine, EnumerationConfig, HarnessReport,
};
pub use error::{Error, Result};
pub use meander::{MeanderDiagram, Quadrant, Side};
pub use perm::{parse_permutation, IndexBase, KleinOrbit, MorseVector, SturmPermutation};
pub use suspension::{
    suspend, suspend_times, verify_suspension, SuspensionReport, SuspensionResult,
};
pub use svg::{render_svg, SvgStyle};
pub use zeronum::{
    signed_z, window_morse, window_z, z_matrix, z_pair_nsl, MeanderWindow, Sign, SignedZero,
    ZeroMatrix,
};
