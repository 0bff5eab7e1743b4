//! Census driver and file formats for planar doodles.
//!
//! [`census`] runs the staged search on a pool of worker threads and turns
//! the result into named [`catalog`] entries stored as JSON lines.
//! [`table`] summarizes catalogs by crossing and component count, and
//! [`render`] draws a diagram as SVG.

pub mod catalog;
pub mod census;
pub mod render;
pub mod table;

pub use catalog::{Catalog, CatalogEntry, CatalogError, Name};
pub use census::{run_census, CensusRun};
