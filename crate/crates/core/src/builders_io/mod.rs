//! Fan generators, the JSON document format, DOT export and the
//! verification suite.

pub mod document;
pub mod dot;
pub mod generators;
pub mod verify;
