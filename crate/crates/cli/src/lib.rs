//! Support code for the `sisp` binary: output records, randomized
//! verification suites and benchmark presets.

pub mod bench;
pub mod output;
pub mod verify;
