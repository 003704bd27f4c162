//! Word problem solver for Artin–Tits groups whose free-of-infinity
//! parabolic subgroups have solvable word problems, with virtual braid
//! groups as the main application.

pub mod artin_words;
pub mod coxeter;
pub mod cli;
pub mod cubepath;
pub mod error;
pub mod garside;
pub mod genset;
pub mod refcheck;
pub mod virtual_braids;

pub use error::{Error, Result};
pub use genset::GenSet;
