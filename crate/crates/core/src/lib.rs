pub mod bounds;
pub mod cache;
pub mod cli;
pub mod eden;
pub mod enumeration;
pub mod error;
pub mod lattice;
pub mod percolation;
pub mod report;
