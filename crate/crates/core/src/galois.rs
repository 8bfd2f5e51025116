//! Galois orbits of irreducible characters, `d(χ)`, orbit sums and `m(χ)`.

use std::collections::HashMap;

use crate::chartab::{CharacterTable, Roots};
use crate::cyclo::CycInt;
use crate::error::{Error, Result};
use crate::group::ClassData;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisOrbit {
    /// Character indices, ascending; the first is the representative.
    pub members: Vec<usize>,
    pub degree: u64,
    /// `|Γ(χ)| = [Q(χ):Q]`.
    pub size: usize,
    /// `d(χ) = |Γ(χ)|·χ(1)`.
    pub d_value: u64,
    /// `Σ_{σ∈Γ(χ)} χ^σ`, one integer per class.
    pub orbit_sum: Vec<i64>,
    pub m_value: u64,
    /// Kernel identifier, shared by all members.
    pub kernel: usize,
}

impl GaloisOrbit {
    pub fn rep(&self) -> usize {
        self.members[0]
    }
}

#[derive(Debug, Clone)]
pub struct GaloisData {
    pub orbits: Vec<GaloisOrbit>,
    orbit_of: Vec<usize>,
}

/// `0` if every value is non-negative, otherwise `−min`.
pub fn m_value(values: &[i64]) -> u64 {
    values
        .iter()
        .copied()
        .min()
        .map_or(0, |m| if m < 0 { (-m) as u64 } else { 0 })
}

/// Partitions `Irr(G)` into orbits of `σ_k : χ ↦ χ(g^k)`, `k ∈ (Z/e)*`.
pub fn galois_orbits(table: &CharacterTable, cd: &ClassData) -> Result<GaloisData> {
    let k = table.len();
    let index: HashMap<&Roots, usize> = table
        .chars()
        .iter()
        .enumerate()
        .map(|(i, c)| (c.roots(), i))
        .collect();
    let units = cd.units();
    let mut orbit_of = vec![usize::MAX; k];
    let mut orbits = Vec::new();
    for i in 0..k {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let chi = table.char(i);
        let mut members = Vec::new();
        for &u in &units {
            let pm = cd.power_map(u as i64).unwrap();
            let img: Roots = (0..k)
                .map(|l| chi.roots()[pm[l] as usize].clone())
                .collect();
            let j = *index
                .get(&img)
                .ok_or_else(|| Error::Internal("Galois image missing from table".into()))?;
            members.push(j);
        }
        members.sort_unstable();
        members.dedup();
        let id = orbits.len();
        for &j in &members {
            orbit_of[j] = id;
        }
        for &j in &members {
            if table.kernel_id(j) != table.kernel_id(i) {
                return Err(Error::Internal(
                    "Galois conjugates with different kernels".into(),
                ));
            }
        }
        let orbit_sum: Vec<i64> = (0..k)
            .map(|l| {
                let sum = members.iter().fold(CycInt::zero(), |acc, &j| {
                    acc.add(&table.char(j).values()[l])
                });
                sum.integer_value().ok_or_else(|| {
                    Error::Internal(format!(
                        "orbit sum of character {i} is irrational at class {l}"
                    ))
                })
            })
            .collect::<Result<_>>()?;
        let size = members.len();
        orbits.push(GaloisOrbit {
            degree: chi.degree(),
            size,
            d_value: size as u64 * chi.degree(),
            m_value: m_value(&orbit_sum),
            orbit_sum,
            kernel: table.kernel_id(i),
            members,
        });
    }
    Ok(GaloisData { orbits, orbit_of })
}

impl GaloisData {
    pub fn orbit_of(&self, chi: usize) -> usize {
        self.orbit_of[chi]
    }

    pub fn orbit(&self, chi: usize) -> &GaloisOrbit {
        &self.orbits[self.orbit_of[chi]]
    }

    /// `[Q(χ):Q]`.
    pub fn field_degree(&self, chi: usize) -> usize {
        self.orbit(chi).size
    }

    pub fn d_value(&self, chi: usize) -> u64 {
        self.orbit(chi).d_value
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

/// Classwise sum of integer class functions.
pub fn sum_class_functions<'a>(k: usize, fs: impl IntoIterator<Item = &'a [i64]>) -> Vec<i64> {
    let mut out = vec![0i64; k];
    for f in fs {
        for (o, &x) in out.iter_mut().zip(f) {
            *o += x;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::group::conjugacy_classes;
    use crate::pcparse::parse_group;

    fn orbits(src: &str) -> (CharacterTable, GaloisData) {
        let g = parse_group(src).unwrap().realize(1000).unwrap();
        let cd = conjugacy_classes(&g);
        let t = character_table(&g, &cd).unwrap();
        let gd = galois_orbits(&t, &cd).unwrap();
        (t, gd)
    }

    #[test]
    fn cyclic_three_orbits() {
        let (_, gd) = orbits("perm 3\n(0 1 2)");
        let sizes: Vec<usize> = gd.orbits.iter().map(|o| o.size).collect();
        assert_eq!(sizes, vec![1, 2]);
        assert_eq!(gd.orbits[1].orbit_sum, vec![2, -1, -1]);
        assert_eq!(gd.orbits[1].m_value, 1);
        assert_eq!(gd.orbits[0].m_value, 0);
    }

    #[test]
    fn cyclic_nine_orbits() {
        let (t, gd) = orbits("perm 9\n(0 1 2 3 4 5 6 7 8)");
        let mut sizes: Vec<usize> = gd.orbits.iter().map(|o| o.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 6]);
        let faithful = gd.orbits.iter().find(|o| o.size == 6).unwrap();
        assert_eq!(faithful.d_value, 6);
        assert_eq!(faithful.m_value, 3);
        // Ramanujan sum c_9(3) at an element of order 3
        assert!(faithful.orbit_sum.contains(&-3));
        assert_eq!(faithful.orbit_sum[0], 6);
        assert_eq!(t.len(), 9);
    }

    #[test]
    fn extraspecial_faithful_orbit() {
        let (t, gd) = orbits("p=3; gens a,b,c; [b,a]=c");
        let o = gd.orbit(t.len() - 1);
        assert_eq!(o.size, 2);
        assert_eq!(o.d_value, 6);
    }

    #[test]
    fn m_value_rules() {
        assert_eq!(m_value(&[3, 0, 1]), 0);
        assert_eq!(m_value(&[6, -3, 0]), 3);
    }
}
