//! Operations on free homotopy classes of loops on oriented surfaces with
//! boundary: the Goldman bracket, the Turaev cobracket, the wedge operation
//! `mu`, and the minimal self-intersection number it computes.
//!
//! A surface is modelled as a one-vertex ribbon graph ([`SurfaceModel`]);
//! loops are words in the free fundamental group ([`Word`], [`CyclicWord`]).
//!
//! ```
//! use loopmu::loopops::{minimal_self_intersection, mu};
//! use loopmu::{SurfaceModel, Word};
//!
//! let surface: SurfaceModel = "genus:2,boundary:1".parse()?;
//! let alpha: Word = "a3.a1.A2.a3.a1.A2.a3.a1.A2.A2.A2".parse()?;
//! assert_eq!(mu(&alpha, &surface, false)?.term_count(), 4);
//! assert_eq!(minimal_self_intersection(&alpha, &surface)?, 2);
//! # Ok::<(), loopmu::Error>(())
//! ```

pub mod diagrams;
pub mod error;
pub mod freegroup;
pub mod intersections;
pub mod loopops;
pub mod surface;

pub use error::{Error, Result};
pub use freegroup::{AbelianVector, CyclicWord, Letter, Word};
pub use intersections::{CrossPair, LinkedPair, Ray};
pub use loopops::{ClassTerm, MuResult, TensorTerm, WedgeTerm};
pub use surface::SurfaceModel;
