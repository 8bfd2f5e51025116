//! The full pipeline for one group: classes, table, Galois orbits, `c(G)`.

use crate::chartab::{character_table, CharacterTable};
use crate::error::Result;
use crate::galois::{galois_orbits, GaloisData};
use crate::group::{conjugacy_classes, ClassData, Group};
use crate::quasiperm::{compute_c, Budget, SolverResult};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub group: Group,
    pub classes: ClassData,
    pub table: CharacterTable,
    pub galois: GaloisData,
    pub solver: SolverResult,
}

impl Analysis {
    pub fn run(group: Group, budget: &Budget) -> Result<Self> {
        let classes = conjugacy_classes(&group);
        let table = character_table(&group, &classes)?;
        Self::with_table(group, classes, table, budget)
    }

    /// Continues from an already verified table (for example, a cached one).
    pub fn with_table(
        group: Group,
        classes: ClassData,
        table: CharacterTable,
        budget: &Budget,
    ) -> Result<Self> {
        let galois = galois_orbits(&table, &classes)?;
        let solver = compute_c(&group, &table, &galois, budget)?;
        Ok(Analysis {
            group,
            classes,
            table,
            galois,
            solver,
        })
    }

    pub fn c(&self) -> u64 {
        self.solver.c
    }

    pub fn prime(&self) -> Option<u64> {
        self.group.prime().map(u64::from)
    }
}
