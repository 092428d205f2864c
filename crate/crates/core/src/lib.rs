#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod linalg;
pub mod matrix;
pub mod ring;
pub mod group;
pub mod kmod;
pub mod gmodule;
pub mod constructions;
pub mod stable;
pub mod colimits;
pub mod relcohom;
pub mod idealchain;
pub mod builtins;
pub mod corpus;
pub mod oracles;
pub mod verify;
pub mod document;
pub mod cli;
