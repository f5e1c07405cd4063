//! Exact decision procedures for bi-orderability of knot groups and of
//! groups of spaces fibring over the circle.
//!
//! Everything here is arbitrary-precision integer or rational arithmetic;
//! floating point never enters a decision.

pub mod poly;
pub mod roots;
pub mod orderability;
pub mod lspace;
pub mod knot_models;
pub mod census;
