//! Quandle cocycle invariants of ordered oriented links up to link-homotopy.
//!
//! The pipeline: a [`FiniteQuandle`] `X`, a 2-cocycle `θ` of `X` that
//! vanishes on orbit pairs, and an ordered [`LinkDiagram`] `L`. Every
//! `X`-coloring of `L` contributes a tuple of per-component weights, and the
//! multiset of those tuples is invariant under link-homotopy when `X` is
//! quasi-trivial.

pub mod catalog;
pub mod coloring;
pub mod diagram;
pub mod exec;
pub mod homology;
pub mod invariant;
pub mod quandle;

pub use coloring::{ArcColoring, ColoringError, ColoringProblem};
pub use diagram::{parse_pd, DiagramError, LinkDiagram, PdCode, Sign};
pub use exec::Exec;
pub use homology::{Cochain2, DegeneracyMode, HomologyError, QuandleComplex};
pub use invariant::{
    cocycle_invariant, refined_invariant, InvariantError, InvariantMode, InvariantReport, RefinedReport,
};
pub use quandle::{Elem, FiniteQuandle, QuandleError};
