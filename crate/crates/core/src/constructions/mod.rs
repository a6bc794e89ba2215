//! Concrete groups, cover constructions and checkable conditions.

pub mod affine;
pub mod examples;
pub mod lemma;
pub mod named;
pub mod wreath;
