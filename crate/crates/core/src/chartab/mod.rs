//! Exact irreducible character tables.
//!
//! Every value is stored as a multiset of `e`-th roots of unity (the
//! eigenvalues of a representing matrix, `e = exp(G)`) and as a cyclotomic
//! integer in the power basis of `Q(ω_e)`.

mod dixon;
mod induce;
pub(crate) mod modp;

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclo::{basis, CycInt, CycNum, RootSum};
use crate::error::{Error, Result};
use crate::group::{ClassData, Group, Subgroup};

pub use dixon::choose_prime;
pub use induce::{inner_product, kernel_of_values, linear_characters, LinearChar, LinearChars};

/// Per class, `(j, m)` pairs meaning `m·ω_e^j`, sorted by `j`.
pub type Roots = Vec<Vec<(u32, u32)>>;

#[derive(Debug, Clone)]
pub struct Character {
    degree: u64,
    roots: Roots,
    values: Vec<CycInt>,
    kernel: usize,
    center: usize,
    kernel_classes: Vec<usize>,
}

impl Character {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }

    pub fn roots(&self) -> &Roots {
        &self.roots
    }

    /// Values as cyclotomic integers over `Q(ω_e)`.
    pub fn values(&self) -> &[CycInt] {
        &self.values
    }

    /// Classes contained in the kernel.
    pub fn kernel_classes(&self) -> &[usize] {
        &self.kernel_classes
    }
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    order: usize,
    exponent: u64,
    class_sizes: Vec<usize>,
    chars: Vec<Character>,
    kernels: Vec<Subgroup>,
    centers: Vec<Subgroup>,
    ell: u64,
}

/// Serializable form used by the on-disk cache.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawTable {
    pub order: usize,
    pub classes: usize,
    pub ell: u64,
    pub chars: Vec<Roots>,
}

/// Computes and verifies the character table.
pub fn character_table(g: &Group, cd: &ClassData) -> Result<CharacterTable> {
    let m = dixon::irreducibles(g, cd)?;
    CharacterTable::from_roots(g, cd, m.chars, m.ell)
}

fn subgroup_of_classes(g: &Group, cd: &ClassData, classes: &[usize]) -> Subgroup {
    let mut bits = FixedBitSet::with_capacity(g.order());
    for &l in classes {
        bits.union_with(&cd.classes[l].members);
    }
    let members: Vec<u32> = bits.ones().map(|x| x as u32).collect();
    g.subgroup_from_set(&members)
}

impl CharacterTable {
    /// Builds a table from root multisets, sorts it canonically, and verifies
    /// it exactly. Fails unless the rows are exactly the irreducibles.
    pub fn from_roots(g: &Group, cd: &ClassData, chars: Vec<Roots>, ell: u64) -> Result<Self> {
        let k = cd.len();
        if chars.len() != k || chars.iter().any(|c| c.len() != k) {
            return Err(Error::Internal(format!(
                "table shape mismatch: {} rows for {k} classes",
                chars.len()
            )));
        }
        let e = g.exponent();
        let b = basis(e as u32);
        let mut kernel_ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut kernel_list: Vec<Vec<usize>> = Vec::new();
        let mut center_ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut center_list: Vec<Vec<usize>> = Vec::new();
        let mut built: Vec<Character> = Vec::with_capacity(k);
        for roots in chars {
            let degree: u64 = roots[0].iter().map(|&(_, m)| m as u64).sum();
            if roots[0] != [(0, degree as u32)] {
                return Err(Error::Internal(
                    "character value at identity is not its degree".into(),
                ));
            }
            for r in &roots {
                if r.iter().map(|&(_, m)| m as u64).sum::<u64>() != degree {
                    return Err(Error::Internal(
                        "root multiset size differs from degree".into(),
                    ));
                }
            }
            let kernel_classes: Vec<usize> = (0..k).filter(|&l| roots[l] == roots[0]).collect();
            let center_classes: Vec<usize> = (0..k).filter(|&l| roots[l].len() == 1).collect();
            let nk = kernel_ids.len();
            let kernel = *kernel_ids.entry(kernel_classes.clone()).or_insert_with(|| {
                kernel_list.push(kernel_classes.clone());
                nk
            });
            let nc = center_ids.len();
            let center = *center_ids.entry(center_classes.clone()).or_insert_with(|| {
                center_list.push(center_classes);
                nc
            });
            let values = roots
                .iter()
                .map(|r| CycInt::from_roots(&b, r.iter().map(|&(j, m)| (j as u64, m as i64))))
                .collect();
            built.push(Character {
                degree,
                roots,
                values,
                kernel,
                center,
                kernel_classes,
            });
        }
        let kernels: Vec<Subgroup> = kernel_list
            .par_iter()
            .map(|cls| subgroup_of_classes(g, cd, cls))
            .collect();
        let centers: Vec<Subgroup> = center_list
            .par_iter()
            .map(|cls| subgroup_of_classes(g, cd, cls))
            .collect();
        built.sort_by(|a, b| {
            a.degree
                .cmp(&b.degree)
                .then(kernels[b.kernel].order().cmp(&kernels[a.kernel].order()))
                .then_with(|| a.roots.cmp(&b.roots))
        });
        let table = CharacterTable {
            order: g.order(),
            exponent: e,
            class_sizes: cd.sizes(),
            chars: built,
            kernels,
            centers,
            ell,
        };
        table.verify(cd)?;
        Ok(table)
    }

    pub fn from_raw(g: &Group, cd: &ClassData, raw: RawTable) -> Result<Self> {
        if raw.order != g.order() || raw.classes != cd.len() {
            return Err(Error::Internal(
                "cached table does not match the group".into(),
            ));
        }
        Self::from_roots(g, cd, raw.chars, raw.ell)
    }

    pub fn to_raw(&self) -> RawTable {
        RawTable {
            order: self.order,
            classes: self.class_sizes.len(),
            ell: self.ell,
            chars: self.chars.iter().map(|c| c.roots.clone()).collect(),
        }
    }

    /// Exact checks: `Σχ(1)² = |G|`, row orthogonality, column orthogonality.
    ///
    /// Galois conjugation permutes both rows and columns, so rows are checked
    /// against one representative per orbit and columns against one
    /// representative per rational class.
    pub fn verify(&self, cd: &ClassData) -> Result<()> {
        let k = self.len();
        let n = self.order as i128;
        let sum_sq: i128 = self.chars.iter().map(|c| (c.degree as i128).pow(2)).sum();
        if sum_sq != n {
            return Err(Error::Internal(format!("Σχ(1)² = {sum_sq} ≠ |G| = {n}")));
        }
        let e = self.exponent;
        let units = cd.units();
        let index: HashMap<&Roots, usize> = self
            .chars
            .iter()
            .enumerate()
            .map(|(i, c)| (&c.roots, i))
            .collect();
        if index.len() != k {
            return Err(Error::Internal("repeated row in character table".into()));
        }
        let mut row_reps = Vec::new();
        let mut seen = vec![false; k];
        for i in 0..k {
            if seen[i] {
                continue;
            }
            row_reps.push(i);
            for &u in &units {
                let pm = cd.power_map(u as i64).unwrap();
                let img: Roots = (0..k)
                    .map(|l| self.chars[i].roots[pm[l] as usize].clone())
                    .collect();
                let j = *index.get(&img).ok_or_else(|| {
                    Error::Internal("table not closed under Galois action".into())
                })?;
                seen[j] = true;
            }
        }
        let mut col_reps = Vec::new();
        let mut seen = vec![false; k];
        for l in 0..k {
            if seen[l] {
                continue;
            }
            col_reps.push(l);
            for &u in &units {
                seen[cd.power_map(u as i64).unwrap()[l] as usize] = true;
            }
        }
        let b = basis(e as u32);
        let sizes = &self.class_sizes;
        let row_check = |i: usize| -> Result<()> {
            for j in 0..k {
                let mut rs = RootSum::new(e as u32);
                for l in 0..k {
                    let (a, c) = (&self.chars[i].roots[l], &self.chars[j].roots[l]);
                    for &(ja, ma) in a {
                        for &(jc, mc) in c {
                            rs.add_root(
                                ja as u64 + e - jc as u64,
                                sizes[l] as i128 * ma as i128 * mc as i128,
                            );
                        }
                    }
                }
                let want = if i == j { n } else { 0 };
                if rs.finish(&b) != CycInt::from_int(want as i64) {
                    return Err(Error::Internal(format!(
                        "row orthogonality fails for characters {i} and {j}"
                    )));
                }
            }
            Ok(())
        };
        let col_check = |l: usize| -> Result<()> {
            for m in 0..k {
                let mut rs = RootSum::new(e as u32);
                for c in &self.chars {
                    for &(ja, ma) in &c.roots[l] {
                        for &(jc, mc) in &c.roots[m] {
                            rs.add_root(ja as u64 + e - jc as u64, ma as i128 * mc as i128);
                        }
                    }
                }
                let want = if l == m { n / sizes[l] as i128 } else { 0 };
                if rs.finish(&b) != CycInt::from_int(want as i64) {
                    return Err(Error::Internal(format!(
                        "column orthogonality fails for classes {l} and {m}"
                    )));
                }
            }
            Ok(())
        };
        row_reps.par_iter().try_for_each(|&i| row_check(i))?;
        col_reps.par_iter().try_for_each(|&l| col_check(l))?;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// The prime `ℓ` used for the modular computation.
    pub fn modulus(&self) -> u64 {
        self.ell
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn chars(&self) -> &[Character] {
        &self.chars
    }

    pub fn char(&self, i: usize) -> &Character {
        &self.chars[i]
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.chars[i].degree
    }

    /// `χ_i(g_l)` as an exact element of `Q(ω_e)`.
    pub fn value(&self, i: usize, l: usize) -> CycNum {
        self.chars[i].values[l].to_cycnum(self.exponent as u32)
    }

    pub fn kernel(&self, i: usize) -> &Subgroup {
        &self.kernels[self.chars[i].kernel]
    }

    /// Identifier of `ker χ_i` among the distinct kernels of the table.
    pub fn kernel_id(&self, i: usize) -> usize {
        self.chars[i].kernel
    }

    pub fn distinct_kernels(&self) -> &[Subgroup] {
        &self.kernels
    }

    /// `Z(χ) = {g : |χ(g)| = χ(1)}`.
    pub fn char_center(&self, i: usize) -> &Subgroup {
        &self.centers[self.chars[i].center]
    }

    /// Degrees of all irreducibles in table order.
    pub fn degrees(&self) -> Vec<u64> {
        self.chars.iter().map(|c| c.degree).collect()
    }

    /// `cd(G)`, sorted.
    pub fn degree_set(&self) -> Vec<u64> {
        let mut d = self.degrees();
        d.dedup();
        d
    }

    /// `b(G) = max cd(G)`.
    pub fn max_degree(&self) -> u64 {
        self.chars.last().map_or(1, |c| c.degree)
    }

    /// `χ_i ∘ (g ↦ g^u)`, located in the table.
    pub fn galois_image(&self, cd: &ClassData, i: usize, u: i64) -> Option<usize> {
        let pm = cd.power_map(u)?;
        let k = self.len();
        let img: Roots = (0..k)
            .map(|l| self.chars[i].roots[pm[l] as usize].clone())
            .collect();
        self.chars.iter().position(|c| c.roots == img)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::conjugacy_classes;
    use crate::pcparse::parse_group;

    fn table(src: &str) -> (Group, ClassData, CharacterTable) {
        let g = parse_group(src).unwrap().realize(20000).unwrap();
        let cd = conjugacy_classes(&g);
        let t = character_table(&g, &cd).unwrap();
        (g, cd, t)
    }

    #[test]
    fn cyclic_three() {
        let (_, _, t) = table("perm 3\n(0 1 2)");
        assert_eq!(t.degrees(), vec![1, 1, 1]);
        let s = &(&t.value(1, 1) + &t.value(2, 1)) + &CycNum::one();
        assert!(s.is_zero());
    }

    #[test]
    fn extraspecial_27_degrees() {
        let (_, _, t) = table("p=3; gens a,b,c; [b,a]=c");
        let mut d = t.degrees();
        d.dedup();
        assert_eq!(t.len(), 11);
        assert_eq!(t.degrees().iter().filter(|&&x| x == 3).count(), 2);
        assert_eq!(d, vec![1, 3]);
        assert_eq!(t.kernel(10).order(), 1);
        assert_eq!(t.char_center(10).order(), 3);
        assert_eq!(t.kernel(0).order(), 27);
    }

    #[test]
    fn example_1_2_degree_set() {
        let (_, _, t) = table("p=3; gens z,y,x; x^9=1; [x,z]=y; [x,y]=x^3");
        assert_eq!(t.degree_set(), vec![1, 3]);
    }

    #[test]
    fn raw_round_trip() {
        let (g, cd, t) = table("p=3; gens a,b; a^9=1; [a,b]=a^3");
        let raw = t.to_raw();
        let json = serde_json::to_string(&raw).unwrap();
        let back: RawTable = serde_json::from_str(&json).unwrap();
        let t2 = CharacterTable::from_raw(&g, &cd, back).unwrap();
        assert_eq!(t2.degrees(), t.degrees());
    }

    #[test]
    fn corrupted_table_is_rejected() {
        let (g, cd, t) = table("perm 3\n(0 1 2)");
        let mut raw = t.to_raw();
        raw.chars[1] = raw.chars[2].clone();
        assert!(CharacterTable::from_raw(&g, &cd, raw).is_err());
    }
}
