//! File formats, rendering, seeded corpora and the `friezes` command line
//! on top of `frieze-core`.

pub mod app;
pub mod corpus;
pub mod json;
pub mod render;
