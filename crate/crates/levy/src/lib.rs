//! Command line tool, report rendering, parallel path runner and fixture IO
//! on top of [`levy_core`].

pub mod cli;
pub mod fixtures;
pub mod report;
pub mod runner;
pub mod verify;

pub use report::{Cell, Format, Report};
pub use runner::{RayonRunner, StdClock};
