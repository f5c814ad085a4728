//! Exact Ext tables for tilting bundles on Grassmannians, partial flag
//! varieties and Grassmann-bundle towers, with rank bookkeeping for their
//! twisted forms.
//!
//! All arithmetic is over arbitrary-precision integers in characteristic
//! zero. Cohomology comes from Borel–Weil–Bott applied to
//! Littlewood–Richardson expansions; torus localization gives an independent
//! check of Euler characteristics.

pub mod bwb;
pub mod collections;
pub mod descent;
pub mod error;
pub mod fibration;
pub mod partitions;
pub mod schur;

pub use error::{Error, Result};
