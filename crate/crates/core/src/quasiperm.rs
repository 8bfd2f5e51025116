//! The minimal faithful quasi-permutation degree `c(G)`.
//!
//! `c(G)` is the minimum of `ξ_X(1) + m(ξ_X)` over sets `X` of irreducibles
//! whose kernels meet trivially and irredundantly, where `ξ_X` sums the full
//! Galois orbit of each member. The search runs over orbit representatives.
//!
//! Two routes are computed for odd non-abelian p-groups:
//!
//! * the general route evaluates `ξ_X(1) + m(ξ_X)` directly for every
//!   family of kernels and every choice of orbit per kernel;
//! * the fast route uses `c(G) = p/(p−1) · min Σ d(χ)` over families of
//!   exactly `d(Z(G))` kernels, taking a least-`d` orbit per kernel.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::galois::{m_value, GaloisData};
use crate::group::{Elem, Group};

#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_families: usize,
    pub max_expansions: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_families: 1_000_000,
            max_expansions: 20_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Orbit representatives (character indices), ascending.
    pub members: Vec<usize>,
    pub kernel_orders: Vec<usize>,
    pub xi_degree: u64,
    pub m_value: u64,
    pub total: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolverResult {
    pub c: u64,
    /// Value from the fast route, when it applies.
    pub fast: Option<u64>,
    pub general: u64,
    /// Every optimal witness up to Galois conjugacy.
    pub witnesses: Vec<Witness>,
    pub families: usize,
}

/// Which kernel families to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyMode {
    /// Every irredundant family.
    Full,
    /// Only families of exactly this size.
    Exact(usize),
}

struct KernelSpace {
    /// Distinct kernel ids, excluding `G` itself.
    ids: Vec<usize>,
    /// Each kernel restricted to the test set.
    bits: Vec<FixedBitSet>,
    test_size: usize,
}

/// Elements that every nontrivial normal subgroup meets: `Ω_1(Z(G))` for
/// p-groups, otherwise the whole group.
fn test_set(g: &Group) -> Vec<Elem> {
    match g.prime() {
        Some(p) => {
            let z = g.center();
            g.omega(&z, p as u64)
        }
        None => g.elements().collect(),
    }
}

fn kernel_space(g: &Group, table: &CharacterTable, gd: &GaloisData) -> KernelSpace {
    let test = test_set(g);
    let mut ids: Vec<usize> = gd
        .orbits
        .iter()
        .map(|o| o.kernel)
        .filter(|&k| table.distinct_kernels()[k].order() < g.order())
        .collect();
    ids.sort_unstable();
    ids.dedup();
    let bits = ids
        .iter()
        .map(|&k| {
            let ker = &table.distinct_kernels()[k];
            let mut b = FixedBitSet::with_capacity(test.len());
            for (i, &x) in test.iter().enumerate() {
                if ker.contains(x) {
                    b.insert(i);
                }
            }
            b
        })
        .collect();
    KernelSpace {
        ids,
        bits,
        test_size: test.len(),
    }
}

fn irredundant(bits: &[&FixedBitSet], test_size: usize) -> bool {
    (0..bits.len()).all(|skip| {
        let mut acc = FixedBitSet::with_capacity(test_size);
        acc.insert_range(..);
        for (i, b) in bits.iter().enumerate() {
            if i != skip {
                acc.intersect_with(b);
            }
        }
        acc.count_ones(..) > 1
    })
}

fn families_in(space: &KernelSpace, mode: FamilyMode, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut all = FixedBitSet::with_capacity(space.test_size);
    all.insert_range(..);
    let max_len = match mode {
        FamilyMode::Full => usize::MAX,
        FamilyMode::Exact(n) => n,
    };
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        space: &KernelSpace,
        start: usize,
        cur: &FixedBitSet,
        stack: &mut Vec<usize>,
        max_len: usize,
        mode: FamilyMode,
        out: &mut Vec<Vec<usize>>,
        budget: &Budget,
    ) -> Result<()> {
        for i in start..space.ids.len() {
            let mut next = cur.clone();
            next.intersect_with(&space.bits[i]);
            let c = next.count_ones(..);
            if c == cur.count_ones(..) {
                continue;
            }
            stack.push(i);
            if c == 1 {
                let fam: Vec<&FixedBitSet> = stack.iter().map(|&j| &space.bits[j]).collect();
                let size_ok = match mode {
                    FamilyMode::Full => true,
                    FamilyMode::Exact(n) => stack.len() == n,
                };
                if size_ok && irredundant(&fam, space.test_size) {
                    out.push(stack.clone());
                    if out.len() > budget.max_families {
                        return Err(Error::Budget {
                            what: "kernel family",
                            limit: budget.max_families,
                            reached: out.len(),
                            detail: String::new(),
                        });
                    }
                }
            } else if stack.len() < max_len {
                rec(space, i + 1, &next, stack, max_len, mode, out, budget)?;
            }
            stack.pop();
        }
        Ok(())
    }
    rec(space, 0, &all, &mut stack, max_len, mode, &mut out, budget)?;
    Ok(out)
}

/// Irredundant families of distinct kernels with trivial intersection, as
/// kernel identifiers (see [`CharacterTable::kernel_id`]).
pub fn kernel_families(
    g: &Group,
    table: &CharacterTable,
    gd: &GaloisData,
    mode: FamilyMode,
    budget: &Budget,
) -> Result<Vec<Vec<usize>>> {
    let space = kernel_space(g, table, gd);
    Ok(families_in(&space, mode, budget)?
        .into_iter()
        .map(|f| f.into_iter().map(|i| space.ids[i]).collect())
        .collect())
}

/// Evaluates `ξ_X(1) + m(ξ_X)` for a faithful irredundant set `X`.
pub fn evaluate_witness(
    g: &Group,
    table: &CharacterTable,
    gd: &GaloisData,
    chars: &[usize],
) -> Result<Witness> {
    if chars.is_empty() {
        return Err(Error::Contract("empty witness".into()));
    }
    let mut orbits: Vec<usize> = chars.iter().map(|&c| gd.orbit_of(c)).collect();
    orbits.sort_unstable();
    if orbits.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Contract("witness repeats a Galois orbit".into()));
    }
    let n = g.order();
    let kernels: Vec<&FixedBitSet> = orbits
        .iter()
        .map(|&o| table.distinct_kernels()[gd.orbits[o].kernel].members())
        .collect();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let inter = kernels.iter().fold(all, |mut acc, k| {
        acc.intersect_with(k);
        acc
    });
    if inter.count_ones(..) != 1 {
        return Err(Error::Contract(
            "witness kernels do not intersect trivially".into(),
        ));
    }
    if !irredundant(&kernels, n) {
        return Err(Error::Contract("witness is redundant".into()));
    }
    Ok(build_witness(table, gd, &orbits))
}

fn build_witness(table: &CharacterTable, gd: &GaloisData, orbits: &[usize]) -> Witness {
    let k = table.len();
    let mut sum = vec![0i64; k];
    let mut xi = 0;
    for &o in orbits {
        for (s, &v) in sum.iter_mut().zip(&gd.orbits[o].orbit_sum) {
            *s += v;
        }
        xi += gd.orbits[o].d_value;
    }
    let m = m_value(&sum);
    let mut members: Vec<usize> = orbits.iter().map(|&o| gd.orbits[o].rep()).collect();
    members.sort_unstable();
    Witness {
        kernel_orders: members.iter().map(|&c| table.kernel(c).order()).collect(),
        members,
        xi_degree: xi,
        m_value: m,
        total: xi + m,
    }
}

/// Minimises over orbit choices for one kernel family. Returns the best total
/// and every choice attaining it (only choices with total `<= bound` are kept).
fn search_family(
    table: &CharacterTable,
    gd: &GaloisData,
    per_kernel: &[Vec<usize>],
    bound: u64,
    expansions: &mut usize,
    budget: &Budget,
) -> Result<(u64, Vec<Vec<usize>>)> {
    let k = table.len();
    let r = per_kernel.len();
    // least d still to come from kernels i..
    let mut tail_min = vec![0u64; r + 1];
    for i in (0..r).rev() {
        tail_min[i] = tail_min[i + 1]
            + per_kernel[i]
                .iter()
                .map(|&o| gd.orbits[o].d_value)
                .min()
                .unwrap_or(0);
    }
    let mut best = bound;
    let mut found: Vec<(u64, Vec<usize>)> = Vec::new();
    let mut sums: Vec<Vec<i64>> = vec![vec![0; k]; r + 1];
    let mut choice = vec![0usize; r];
    fn rec(
        i: usize,
        d: u64,
        gd: &GaloisData,
        per_kernel: &[Vec<usize>],
        tail_min: &[u64],
        sums: &mut Vec<Vec<i64>>,
        choice: &mut Vec<usize>,
        best: &mut u64,
        found: &mut Vec<(u64, Vec<usize>)>,
        expansions: &mut usize,
        budget: &Budget,
    ) -> Result<()> {
        *expansions += 1;
        if *expansions > budget.max_expansions {
            return Err(Error::Budget {
                what: "witness expansion",
                limit: budget.max_expansions,
                reached: *expansions,
                detail: String::new(),
            });
        }
        if d + tail_min[i] > *best {
            return Ok(());
        }
        if i == per_kernel.len() {
            let total = d + m_value(&sums[i]);
            if total <= *best {
                *best = total;
                found.push((total, choice.clone()));
            }
            return Ok(());
        }
        for &o in &per_kernel[i] {
            let orb = &gd.orbits[o];
            let (lo, hi) = sums.split_at_mut(i + 1);
            for ((t, &s), &v) in hi[0].iter_mut().zip(&lo[i]).zip(&orb.orbit_sum) {
                *t = s + v;
            }
            choice[i] = o;
            rec(
                i + 1,
                d + orb.d_value,
                gd,
                per_kernel,
                tail_min,
                sums,
                choice,
                best,
                found,
                expansions,
                budget,
            )?;
        }
        Ok(())
    }
    rec(
        0,
        0,
        gd,
        per_kernel,
        &tail_min,
        &mut sums,
        &mut choice,
        &mut best,
        &mut found,
        expansions,
        budget,
    )?;
    let winners = found
        .into_iter()
        .filter(|(t, _)| *t == best)
        .map(|(_, c)| c)
        .collect();
    Ok((best, winners))
}

fn orbits_by_kernel(gd: &GaloisData, kernel_id: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..gd.len())
        .filter(|&o| gd.orbits[o].kernel == kernel_id)
        .collect();
    v.sort_by_key(|&o| (gd.orbits[o].d_value, gd.orbits[o].rep()));
    v
}

/// `min Σ d` over families of size `d(Z(G))` with a least-`d` orbit per
/// kernel, scaled by `p/(p−1)`. Returns the value and the winning orbits.
fn fast_route(
    g: &Group,
    table: &CharacterTable,
    gd: &GaloisData,
    budget: &Budget,
) -> Result<Option<(u64, Vec<usize>)>> {
    let Some(p) = g.prime() else { return Ok(None) };
    if p == 2 || g.is_abelian() {
        return Ok(None);
    }
    let dz = g.abelian_rank(&g.center())? as usize;
    let space = kernel_space(g, table, gd);
    let fams = families_in(&space, FamilyMode::Exact(dz), budget)?;
    let mut best: Option<(u64, Vec<usize>)> = None;
    for fam in fams {
        let mut sum = 0;
        let mut pick = Vec::with_capacity(fam.len());
        for &i in &fam {
            let orbs = orbits_by_kernel(gd, space.ids[i]);
            let o = orbs[0];
            sum += gd.orbits[o].d_value;
            pick.push(o);
        }
        if best.as_ref().is_none_or(|(b, _)| sum < *b) {
            best = Some((sum, pick));
        }
    }
    let Some((sum, pick)) = best else {
        return Err(Error::Internal("no faithful family of size d(Z(G))".into()));
    };
    let p = p as u64;
    if !(sum * p).is_multiple_of(p - 1) {
        return Err(Error::Internal(format!(
            "fast route value {sum}·{p}/{} is not an integer",
            p - 1
        )));
    }
    Ok(Some((sum * p / (p - 1), pick)))
}

/// Computes `c(G)` and every optimal witness up to Galois conjugacy.
pub fn compute_c(
    g: &Group,
    table: &CharacterTable,
    gd: &GaloisData,
    budget: &Budget,
) -> Result<SolverResult> {
    if g.order() == 1 {
        return Ok(SolverResult {
            c: 0,
            fast: None,
            general: 0,
            witnesses: Vec::new(),
            families: 0,
        });
    }
    let fast = fast_route(g, table, gd, budget)?;
    let mut bound = u64::MAX;
    if let Some((c_fast, pick)) = &fast {
        let w = build_witness(table, gd, pick);
        if w.total != *c_fast {
            return Err(Error::Internal(format!(
                "fast route winner evaluates to {}, expected {c_fast}",
                w.total
            )));
        }
        bound = *c_fast;
    }
    let space = kernel_space(g, table, gd);
    let fams = families_in(&space, FamilyMode::Full, budget)?;
    let per_family: Vec<Vec<Vec<usize>>> = fams
        .iter()
        .map(|f| {
            f.iter()
                .map(|&i| orbits_by_kernel(gd, space.ids[i]))
                .collect()
        })
        .collect();
    let results: Vec<Result<(u64, Vec<Vec<usize>>)>> = per_family
        .par_iter()
        .map(|pk| {
            let mut exp = 0;
            search_family(table, gd, pk, bound, &mut exp, budget)
        })
        .collect();
    let mut best = u64::MAX;
    let mut winners: Vec<Vec<usize>> = Vec::new();
    for r in results {
        let (b, w) = r?;
        if w.is_empty() {
            continue;
        }
        if b < best {
            best = b;
            winners.clear();
        }
        if b == best {
            winners.extend(w);
        }
    }
    if best == u64::MAX {
        return Err(Error::Internal(
            "no faithful irredundant family found".into(),
        ));
    }
    let mut witnesses: Vec<Witness> = winners
        .iter()
        .map(|orbs| build_witness(table, gd, orbs))
        .collect();
    witnesses.sort_by(|a, b| a.members.cmp(&b.members));
    witnesses.dedup();
    if let Some((c_fast, _)) = fast {
        if c_fast != best {
            return Err(Error::Internal(format!(
                "fast route {c_fast} disagrees with general route {best}"
            )));
        }
    }
    Ok(SolverResult {
        c: best,
        fast: fast.map(|f| f.0),
        general: best,
        witnesses,
        families: fams.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::galois::galois_orbits;
    use crate::group::conjugacy_classes;
    use crate::pcparse::parse_group;

    fn solve(src: &str) -> (Group, CharacterTable, GaloisData, SolverResult) {
        let g = parse_group(src).unwrap().realize(5000).unwrap();
        let cd = conjugacy_classes(&g);
        let t = character_table(&g, &cd).unwrap();
        let gd = galois_orbits(&t, &cd).unwrap();
        let r = compute_c(&g, &t, &gd, &Budget::default()).unwrap();
        (g, t, gd, r)
    }

    #[test]
    fn extraspecial_27() {
        let (g, t, gd, r) = solve("p=3; gens a,b,c; [b,a]=c");
        assert_eq!(r.c, 9);
        assert_eq!(r.fast, Some(9));
        assert_eq!(r.witnesses.len(), 1);
        let w = evaluate_witness(&g, &t, &gd, &[t.len() - 1]).unwrap();
        assert_eq!((w.xi_degree, w.m_value, w.total), (6, 3, 9));
        let fams = kernel_families(&g, &t, &gd, FamilyMode::Full, &Budget::default()).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(t.distinct_kernels()[fams[0][0]].order(), 1);
    }

    #[test]
    fn cyclic_nine() {
        let (_, _, _, r) = solve("perm 9\n(0 1 2 3 4 5 6 7 8)");
        assert_eq!(r.c, 9);
        assert_eq!(r.fast, None);
    }

    #[test]
    fn elementary_abelian_nine() {
        let (g, t, gd, r) = solve("perm 6; (0 1 2); (3 4 5)");
        assert_eq!(r.c, 6);
        let fams = kernel_families(&g, &t, &gd, FamilyMode::Full, &Budget::default()).unwrap();
        assert_eq!(fams.len(), 6);
        assert!(fams.iter().all(|f| f.len() == 2));
    }

    #[test]
    fn redundant_witness_is_rejected() {
        let (g, t, gd, _) = solve("p=3; gens a,b,c; [b,a]=c");
        let last = t.len() - 1;
        let err = evaluate_witness(&g, &t, &gd, &[1, last]).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
        let err = evaluate_witness(&g, &t, &gd, &[1]).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
    }
}
