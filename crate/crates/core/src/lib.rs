//! Ribbon graphs of link diagrams.

#![allow(clippy::manual_is_multiple_of, clippy::needless_range_loop)]

pub mod arrow;
pub mod catalog;
pub mod cli;
pub mod diagram;
pub mod graph;
pub mod map;
pub mod parallels;
pub mod random;
pub mod states;
pub mod report;
pub mod seifert;
pub mod verify;
