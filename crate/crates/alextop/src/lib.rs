//! IO, file formats, and benchmark machinery for `alextop-core`: JSON
//! space documents, census CSV, DOT export of quotient Hasse diagrams,
//! the exhaustive verification suite, and the deterministic large-graph
//! height benchmark. The `alextop` binary wires these into subcommands.

pub mod bench;
pub mod dot;
pub mod format;
pub mod verify;
