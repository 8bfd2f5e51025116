//! Codegrees, Ford pairs and membership in the class `𝒯`.
//!
//! A Ford pair for `χ` is a subgroup `H` of index `χ(1)` with a linear
//! `λ ∈ lin(H)` such that `λ↑G = χ` and `Q(λ) = Q(χ)`. Since `Q(χ) ⊆ Q(λ)`
//! always holds for induced values, the field condition is tested as
//! `φ(o(λ)) = [Q(χ):Q]`. The search only visits subgroups containing `Z(χ)`:
//! an element outside some conjugate of `H` is a zero of `λ↑G`, so every `g`
//! with `|χ(g)| = χ(1)` lies in `Core_G(H)`.

mod classify;
mod verify;

use std::collections::HashMap;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::chartab::{linear_characters, CharacterTable, LinearChar};
use crate::cyclo::euler_phi;
use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};

pub use classify::{abelian_invariants, classify, ClassifierReport};
pub use verify::{verify_identities, Check, Status, VerificationReport};

pub const DEFAULT_MAX_SUBGROUPS: usize = 200_000;

/// `cod(χ) = |G| / (|ker χ|·χ(1))`.
pub fn cod(table: &CharacterTable, chi: usize) -> Result<u64> {
    let denom = table.kernel(chi).order() as u64 * table.degree(chi);
    let n = table.order() as u64;
    if !n.is_multiple_of(denom) {
        return Err(Error::Internal(format!(
            "|G| = {n} is not divisible by |ker χ|·χ(1) = {denom} for character {chi}"
        )));
    }
    Ok(n / denom)
}

pub fn codegrees(table: &CharacterTable) -> Result<Vec<u64>> {
    (0..table.len()).map(|i| cod(table, i)).collect()
}

/// `cod(G)`, sorted.
pub fn cod_set(table: &CharacterTable) -> Result<Vec<u64>> {
    let mut v = codegrees(table)?;
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

#[derive(Debug, Clone)]
pub struct FordPair {
    pub character: usize,
    pub subgroup: Subgroup,
    pub lambda: LinearChar,
    pub ker_lambda: Subgroup,
    /// `|ker λ : ker χ|`.
    pub a_value: u64,
}

impl FordPair {
    pub fn lambda_order(&self) -> u64 {
        self.lambda.order
    }
}

/// What an inducing pair has to satisfy.
#[derive(Debug, Clone, Copy)]
pub struct PairSearch {
    /// Only normal subgroups `H`.
    pub normal_only: bool,
    /// Require `Q(λ) = Q(χ)`.
    pub match_field: bool,
    /// Return every pair instead of the first.
    pub all: bool,
    pub max_subgroups: usize,
}

impl PairSearch {
    pub fn ford(max_subgroups: usize) -> Self {
        PairSearch {
            normal_only: false,
            match_field: true,
            all: false,
            max_subgroups,
        }
    }
}

/// Pairs `(H, λ)` with `λ↑G = χ`, in canonical order (subgroups as
/// enumerated from `Z(χ)`, characters sorted by order then exponents).
pub fn inducing_pairs(a: &Analysis, chi: usize, search: PairSearch) -> Result<Vec<FordPair>> {
    let g = &a.group;
    let t = &a.table;
    let cd = &a.classes;
    let deg = t.degree(chi);
    let roots = t.char(chi).roots();
    let ker_chi = t.kernel(chi).order() as u64;
    let field = a.galois.field_degree(chi) as u64;
    let base = t.char_center(chi);
    let target = g.order() / deg as usize;
    if !g.order().is_multiple_of(deg as usize) {
        return Err(Error::Internal("degree does not divide |G|".into()));
    }
    // χ restricted to Z(χ) is χ(1)·μ
    let mu: Vec<(Elem, u32)> = base
        .iter()
        .map(|z| (z, roots[cd.class_of(z)][0].0))
        .collect();
    let candidates: Vec<Subgroup> = if deg == 1 {
        vec![g.whole()]
    } else {
        let layers = g.subgroups_containing(base, target, search.max_subgroups)?;
        match layers.into_iter().last() {
            Some(top) if top[0].order() == target => top,
            _ => Vec::new(),
        }
    };
    let mut out = Vec::new();
    for h in candidates {
        if search.normal_only && !g.is_normal(&h) {
            continue;
        }
        let lc = linear_characters(g, &h)?;
        let pos: Vec<usize> = mu
            .iter()
            .map(|&(z, _)| lc.members.binary_search(&z).expect("Z(χ) lies in H"))
            .collect();
        for lam in &lc.chars {
            if search.match_field && euler_phi(lam.order) != field {
                continue;
            }
            if pos.iter().zip(&mu).any(|(&i, &(_, j))| lam.exps[i] != j) {
                continue;
            }
            if lc.induce(g, cd, lam) != t.char(chi).values() {
                continue;
            }
            let ker_members = lc.kernel(lam);
            let ker_lambda = g.subgroup_from_set(&ker_members);
            let kl = ker_lambda.order() as u64;
            if !kl.is_multiple_of(ker_chi) {
                return Err(Error::Internal("ker χ is not contained in ker λ".into()));
            }
            out.push(FordPair {
                character: chi,
                subgroup: h.clone(),
                lambda: lam.clone(),
                ker_lambda,
                a_value: kl / ker_chi,
            });
            if !search.all {
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// First Ford pair of `χ`.
pub fn find_ford_pair(a: &Analysis, chi: usize, max_subgroups: usize) -> Result<FordPair> {
    inducing_pairs(a, chi, PairSearch::ford(max_subgroups))?
        .into_iter()
        .next()
        .ok_or(Error::NoFordPair(chi))
}

/// Ford pairs memoised per character.
#[derive(Debug, Default)]
pub struct FordCache {
    pairs: HashMap<usize, FordPair>,
    pub max_subgroups: usize,
}

impl FordCache {
    pub fn new(max_subgroups: usize) -> Self {
        FordCache {
            pairs: HashMap::new(),
            max_subgroups,
        }
    }

    pub fn get(&mut self, a: &Analysis, chi: usize) -> Result<&FordPair> {
        if !self.pairs.contains_key(&chi) {
            let p = find_ford_pair(a, chi, self.max_subgroups)?;
            self.pairs.insert(chi, p);
        }
        Ok(&self.pairs[&chi])
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TEvidence {
    pub witness: usize,
    pub character: usize,
    pub degree: u64,
    pub subgroup_order: usize,
    pub lambda_order: u64,
    pub ker_lambda_order: usize,
    pub a_value: u64,
    pub ker_lambda_normal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TMembership {
    pub member: bool,
    pub evidence: Vec<TEvidence>,
}

/// Whether `ker λ_χ` fails to be normal for every nonlinear member of every
/// optimal witness. One Ford pair per character suffices: normality of
/// `ker λ` does not depend on the pair chosen.
pub fn class_t_membership(a: &Analysis, ford: &mut FordCache) -> Result<TMembership> {
    match a.prime() {
        Some(p) if p != 2 => {}
        _ => {
            return Err(Error::Contract(
                "class 𝒯 is defined for odd p-groups".into(),
            ))
        }
    }
    let mut evidence = Vec::new();
    for (wi, w) in a.solver.witnesses.iter().enumerate() {
        for &chi in &w.members {
            if a.table.degree(chi) == 1 {
                continue;
            }
            let pair = ford.get(a, chi)?;
            evidence.push(TEvidence {
                witness: wi,
                character: chi,
                degree: a.table.degree(chi),
                subgroup_order: pair.subgroup.order(),
                lambda_order: pair.lambda_order(),
                ker_lambda_order: pair.ker_lambda.order(),
                a_value: pair.a_value,
                ker_lambda_normal: a.group.is_normal(&pair.ker_lambda),
            });
        }
    }
    Ok(TMembership {
        member: evidence.iter().all(|e| !e.ker_lambda_normal),
        evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcparse::parse_group;
    use crate::quasiperm::Budget;

    fn analyse(src: &str) -> Analysis {
        let g = parse_group(src).unwrap().realize(5000).unwrap();
        Analysis::run(g, &Budget::default()).unwrap()
    }

    #[test]
    fn extraspecial_codegrees() {
        let a = analyse("p=3; gens a,b,c; [b,a]=c");
        let last = a.table.len() - 1;
        assert_eq!(cod(&a.table, 0).unwrap(), 1);
        assert_eq!(cod(&a.table, last).unwrap(), 9);
        assert_eq!(cod_set(&a.table).unwrap(), vec![1, 3, 9]);
        let pair = find_ford_pair(&a, last, DEFAULT_MAX_SUBGROUPS).unwrap();
        assert_eq!(pair.subgroup.order(), 9);
        assert_eq!(pair.ker_lambda.order(), 3);
        assert_eq!(pair.a_value, 3);
        let mut cache = FordCache::new(DEFAULT_MAX_SUBGROUPS);
        assert!(class_t_membership(&a, &mut cache).unwrap().member);
    }

    #[test]
    fn linear_pair_is_trivial() {
        let a = analyse("p=3; gens a,b,c; [b,a]=c");
        let pair = find_ford_pair(&a, 1, DEFAULT_MAX_SUBGROUPS).unwrap();
        assert_eq!(pair.subgroup.order(), 27);
        assert_eq!(pair.a_value, 1);
    }

    #[test]
    fn smaller_codegree_sum_group() {
        let a = analyse("p=3; gens z,y,x; x^9=1; [x,z]=y; [x,y]=x^3");
        assert_eq!(a.c(), 9);
        let w = &a.solver.witnesses[0];
        assert_eq!(w.members.len(), 1);
        let chi = w.members[0];
        assert_eq!(cod(&a.table, chi).unwrap(), 27);
        let pair = find_ford_pair(&a, chi, DEFAULT_MAX_SUBGROUPS).unwrap();
        assert_eq!(pair.a_value, 9);
        assert_eq!(a.table.degree(chi) * 27 / pair.a_value, 9);
    }

    #[test]
    fn ford_pairs_share_kernel_order() {
        let a = analyse("p=3; gens z,y,x; x^9=1; [x,z]=y; [x,y]=x^3");
        let search = PairSearch {
            all: true,
            ..PairSearch::ford(DEFAULT_MAX_SUBGROUPS)
        };
        for chi in 0..a.table.len() {
            let pairs = inducing_pairs(&a, chi, search).unwrap();
            assert!(!pairs.is_empty());
            let k = pairs[0].ker_lambda.order();
            assert!(pairs.iter().all(|p| p.ker_lambda.order() == k));
            let normal = a.group.is_normal(&pairs[0].ker_lambda);
            assert!(pairs
                .iter()
                .all(|p| a.group.is_normal(&p.ker_lambda) == normal));
        }
    }
}
