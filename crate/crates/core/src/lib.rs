//! Exact-arithmetic toolkit for bigraphical hyperplane arrangements.
//!
//! A bigraphical arrangement attaches two parallel hyperplanes
//! `x_i - x_j = a_ij` and `x_j - x_i = a_ji` to every edge `{v_i, v_j}` of a
//! simple graph. This crate classifies the partial orientations of the graph
//! that correspond to regions of the arrangement, counts regions both
//! combinatorially and through Tutte/characteristic polynomials, enumerates
//! the parking functions of the sink extension, computes Pak-Stanley labels
//! two independent ways, and decides strict rational feasibility of region
//! systems without ever touching floating point.
//!
//! Modules:
//! - [`graph`]: simple graphs, sink extensions, multigraphs, chip
//!   configurations, cycle and spanning-tree primitives.
//! - [`orient`]: parameter lists, score digraphs, admissibility
//!   classification, region censuses, and indegree realization.
//! - [`parking`]: graphical parking functions by several routes.
//! - [`poly`]: Tutte polynomial, generic characteristic polynomial,
//!   reliability, and closed forms for cycle graphs.
//! - [`geom`]: exact strict feasibility (Fourier-Motzkin), facet adjacency,
//!   and the literal breadth-first Pak-Stanley labeling.
//! - [`svg`]: rank-2 pictures of three-vertex arrangements.

pub mod error;
pub mod geom;
pub mod graph;
pub mod orient;
pub mod parking;
pub mod poly;
pub mod svg;

pub use error::Error;
pub use graph::{ChipConfig, Multigraph, SimpleGraph, SinkedGraph};
pub use orient::{
    AdmissibilityClass, ParameterList, PartialOrientation, RegionCensus, ScoreDigraph, Step,
};
