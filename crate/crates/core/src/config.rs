//! Effort caps shared by every computation.

use crate::error::{Error, Result};

pub const DEFAULT_LATTICE_CAP: u64 = 2000;
pub const DEFAULT_ENUM_CAP: u64 = 2_000_000;
pub const DEFAULT_DEGREE_CAP: usize = 20_000;

/// Caps gate effort only; a value computed under any caps stays valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order for which the full subgroup lattice is built.
    pub lattice: u64,
    /// Largest group order whose elements may be enumerated.
    pub enumeration: u64,
    /// Largest permutation degree a construction may produce.
    pub degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            lattice: DEFAULT_LATTICE_CAP,
            enumeration: DEFAULT_ENUM_CAP,
            degree: DEFAULT_DEGREE_CAP,
        }
    }
}

impl Caps {
    pub fn with_lattice(mut self, cap: u64) -> Self {
        self.lattice = cap;
        self
    }

    pub fn with_enumeration(mut self, cap: u64) -> Self {
        self.enumeration = cap;
        self
    }

    pub fn check_lattice(&self, order: u128) -> Result<()> {
        check("lattice", order, self.lattice as u128)
    }

    pub fn check_enumeration(&self, order: u128) -> Result<()> {
        check("element enumeration", order, self.enumeration as u128)
    }

    pub fn check_degree(&self, degree: usize) -> Result<()> {
        check("degree", degree as u128, self.degree as u128)
    }
}

fn check(what: &'static str, size: u128, cap: u128) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
