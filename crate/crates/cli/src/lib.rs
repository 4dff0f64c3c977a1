//! IO, JSON formats, the group catalog and command implementations for the
//! `simconj` command-line tool.

pub mod catalog;
pub mod format;
pub mod registry;
pub mod render;
