//! File formats, reports and the command line for `fewlists-core`.

pub mod app;
pub mod dot;
pub mod edgelist;
pub mod pool;
pub mod report;
