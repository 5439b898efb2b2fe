//! Exact computations around equivariant bundles on Grassmannians and the
//! Fano threefold `V5`.
//!
//! The crate is `no_std` and only needs `alloc`. Every number it produces is
//! exact: weights are integers, dimensions are arbitrary-precision naturals
//! and intersection numbers are arbitrary-precision rationals.
//!
//! * [`lie`]: type-A weight combinatorics (epsilon coordinates, Weyl group
//!   action, dominantization, Weyl dimension formula).
//! * [`bwb`]: irreducible equivariant bundles on `Gr(k, n)` and their
//!   cohomology by Bott's algorithm.
//! * [`koszul`]: restriction of cohomology to a linear section of
//!   codimension `c` through the Koszul resolution.
//! * [`chow`]: the Chow ring of `V5`, Chern characters, Todd class and
//!   Riemann-Roch.
//! * [`quiver`]: the 3-Kronecker quiver, its Euler form, Hom/Ext and King
//!   stability over small prime fields.

#![no_std]

extern crate alloc;

pub mod bwb;
pub mod chow;
pub mod koszul;
pub mod lie;
pub mod quiver;

pub use bwb::{BundleName, CohomologyEntry, CohomologyTable, EquivariantBundle};
pub use chow::{BundleClassV5, ChowClassV5, HilbertPolynomialV5};
pub use koszul::{KoszulPage, RestrictionResult, RestrictionStatus, UlrichVerdict};
pub use lie::{DominantizationResult, EpsVector, Weight};
pub use quiver::{DimVector, QuiverRep, StabilityStatus, StabilityVerdict};
