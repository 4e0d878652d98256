#![allow(clippy::result_large_err)]

pub mod bundled;
pub mod certificates;
pub mod frame_props;
pub mod icalc;
pub mod json;
pub mod path;
pub mod sample;
pub mod search;
pub mod semantics;
pub mod sequent;
pub mod syntax;
