//! A workbench for desk-scale finite rings: validated Cayley-table rings,
//! the classical ring constructions, radical computations with exhaustive
//! oracles, class membership with constructive witnesses, and an executable
//! suite of structural checks over a built-in catalog.

pub mod cache;
pub mod catalog;
pub mod classify;
pub mod construct;
pub mod document;
pub mod ideals;
pub mod radicals;
pub mod ring;
pub mod set;
pub mod theorems;
pub mod vanishing;

pub use ring::{ElementId, FiniteRing, Provenance};
pub use set::ElemSet;
