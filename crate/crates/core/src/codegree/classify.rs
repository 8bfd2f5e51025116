use std::collections::BTreeMap;

use serde::Serialize;

use super::{cod_set, inducing_pairs, PairSearch};
use crate::analysis::Analysis;
use crate::error::{Error, Result};
use crate::group::{log_p, Group, Subgroup};

#[derive(Debug, Clone, Serialize)]
pub struct ClassifierReport {
    pub order: usize,
    pub prime: Option<u64>,
    /// `n` with `|G| = p^n`.
    pub log_order: Option<u32>,
    pub exponent: u64,
    pub class_count: usize,
    pub is_abelian: bool,
    pub nilpotency_class: Option<usize>,
    pub center_order: usize,
    pub center_invariants: Vec<u64>,
    /// `d(Z(G))`.
    pub center_rank: u32,
    pub center_cyclic: bool,
    pub derived_order: usize,
    pub degree_set: Vec<u64>,
    /// `b(G) = max cd(G)`.
    pub b: u64,
    pub cod_set: Vec<u64>,
    pub is_gvz: bool,
    pub is_vz: bool,
    pub is_core_p: Option<bool>,
    pub is_maximal_class: bool,
    /// Kernels of the nonlinear irreducibles form a chain.
    pub kernels_chain: bool,
    pub derived_unique_minimal_normal: bool,
    pub is_normally_monomial: Option<bool>,
    /// Largest number of irreducibles sharing one kernel.
    pub cm_bound: usize,
    pub is_cm_p_minus_1: bool,
    pub values_in_p_cyclotomic: bool,
    /// `|Z(χ) : ker χ| = p` for every nontrivial `χ`.
    pub center_kernel_index_p: bool,
    /// Exponents of the abelian normal subgroups of maximal order.
    pub max_abelian_normal: Option<AbelianNormals>,
    /// Exponents of the abelian normal subgroups of index `b(G)`.
    pub abelian_normal_index_b: Option<Vec<u64>>,
    pub cyclic_normal_index_b: Option<bool>,
    pub derived_exponent: u64,
    /// Flags left undetermined, with the reason.
    pub undetermined: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AbelianNormals {
    pub order: usize,
    pub exponents: Vec<u64>,
}

/// Cyclic factor orders of an abelian p-subgroup, ascending.
pub fn abelian_invariants(g: &Group, a: &Subgroup) -> Result<Vec<u64>> {
    if !g.is_abelian_subgroup(a) {
        return Err(Error::Contract(
            "abelian invariants need an abelian subgroup".into(),
        ));
    }
    if a.order() == 1 {
        return Ok(Vec::new());
    }
    let p = crate::group::prime_power_base(a.order() as u64)
        .ok_or_else(|| Error::Contract("abelian invariants need a p-subgroup".into()))?
        as u64;
    // r[k-1] = number of cyclic factors of order at least p^k
    let mut r = Vec::new();
    let mut prev = 1usize;
    let mut q = p;
    while prev < a.order() {
        let cur = g.omega(a, q).len();
        r.push(log_p((cur / prev) as u64, p).unwrap_or(0));
        prev = cur;
        q *= p;
    }
    let mut out = Vec::new();
    let mut pk = p;
    for k in 0..r.len() {
        let next = r.get(k + 1).copied().unwrap_or(0);
        for _ in 0..(r[k] - next) {
            out.push(pk);
        }
        pk *= p;
    }
    Ok(out)
}

fn is_gvz(a: &Analysis, center_only: bool) -> bool {
    let t = &a.table;
    (0..t.len()).filter(|&i| t.degree(i) > 1).all(|i| {
        let roots = t.char(i).roots();
        let vals = t.char(i).values();
        (0..t.len()).all(|l| {
            let inside = if center_only {
                a.classes.classes[l].size == 1
            } else {
                roots[l].len() == 1
            };
            inside || vals[l].is_zero()
        })
    })
}

fn kernels_chain(a: &Analysis) -> bool {
    let t = &a.table;
    let mut ids: Vec<usize> = (0..t.len())
        .filter(|&i| t.degree(i) > 1)
        .map(|i| t.kernel_id(i))
        .collect();
    ids.sort_unstable();
    ids.dedup();
    let ks = t.distinct_kernels();
    ids.iter().all(|&x| {
        ids.iter()
            .all(|&y| ks[x].is_subset(&ks[y]) || ks[y].is_subset(&ks[x]))
    })
}

/// Values of `χ` lie in `Q(ω_p)` iff `χ` is fixed by every `σ_u` with `u ≡ 1 (mod p)`.
fn values_in_p_cyclotomic(a: &Analysis, p: u64) -> bool {
    let cd = &a.classes;
    let t = &a.table;
    cd.units().into_iter().filter(|u| u % p == 1).all(|u| {
        let pm = cd.power_map(u as i64).unwrap();
        t.chars().iter().all(|c| {
            let r = c.roots();
            (0..r.len()).all(|l| r[pm[l] as usize] == r[l])
        })
    })
}

fn normally_monomial(a: &Analysis, max_subgroups: usize) -> Result<bool> {
    let search = PairSearch {
        normal_only: true,
        match_field: false,
        all: false,
        max_subgroups,
    };
    for o in &a.galois.orbits {
        if o.degree == 1 {
            continue;
        }
        if inducing_pairs(a, o.rep(), search)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn budget_note(flag: &str, e: &Error) -> String {
    format!("{flag}: unknown ({e})")
}

/// Structural flags of `G`. Flags that need the subgroup lattice are
/// `None` when the subgroup budget runs out.
pub fn classify(a: &Analysis, max_subgroups: usize) -> Result<ClassifierReport> {
    let g = &a.group;
    let t = &a.table;
    let p = a.prime();
    let n = p.and_then(|p| log_p(g.order() as u64, p));
    let z = g.center();
    let derived = g.derived_subgroup();
    let center_invariants = if p.is_some() {
        abelian_invariants(g, &z)?
    } else {
        Vec::new()
    };
    let center_rank = center_invariants.len() as u32;
    let nilpotency_class = g.nilpotency_class();
    let is_maximal_class = match (n, nilpotency_class) {
        (Some(n), Some(c)) => n >= 2 && c + 1 == n as usize,
        _ => false,
    };
    let mut per_kernel: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..t.len() {
        *per_kernel.entry(t.kernel_id(i)).or_default() += 1;
    }
    let cm_bound = per_kernel.values().copied().max().unwrap_or(0);
    let is_gvz_flag = is_gvz(a, false);
    let center_kernel_index_p = match p {
        Some(p) => {
            (1..t.len()).all(|i| t.char_center(i).order() == p as usize * t.kernel(i).order())
        }
        None => false,
    };
    let derived_unique_minimal_normal = match p {
        Some(p) => derived.order() == p as usize && g.omega(&z, p).len() == p as usize,
        None => false,
    };

    let mut undetermined = Vec::new();
    let mut is_core_p = None;
    let mut max_abelian_normal = None;
    let mut abelian_normal_index_b = None;
    let mut cyclic_normal_index_b = None;
    let b = t.max_degree();
    if let Some(pp) = p {
        match g.all_subgroups(max_subgroups) {
            Ok(layers) => {
                let subs: Vec<&Subgroup> = layers.iter().flatten().collect();
                is_core_p = Some(
                    subs.iter()
                        .all(|h| h.order() <= pp as usize * g.core(h).order()),
                );
                let normal_abelian: Vec<&Subgroup> = subs
                    .iter()
                    .copied()
                    .filter(|h| g.is_abelian_subgroup(h) && g.is_normal(h))
                    .collect();
                let top = normal_abelian.iter().map(|h| h.order()).max().unwrap_or(1);
                max_abelian_normal = Some(AbelianNormals {
                    order: top,
                    exponents: normal_abelian
                        .iter()
                        .filter(|h| h.order() == top)
                        .map(|h| g.exponent_of(h))
                        .collect(),
                });
                let idx_b: Vec<&&Subgroup> = normal_abelian
                    .iter()
                    .filter(|h| h.order() as u64 * b == g.order() as u64)
                    .collect();
                cyclic_normal_index_b = Some(idx_b.iter().any(|h| g.is_cyclic_subgroup(h)));
                abelian_normal_index_b = Some(idx_b.iter().map(|h| g.exponent_of(h)).collect());
            }
            Err(e @ Error::Budget { .. }) => {
                undetermined.push(budget_note("core-p and abelian normal subgroups", &e));
            }
            Err(e) => return Err(e),
        }
    }
    let is_normally_monomial = if p.is_some() {
        match normally_monomial(a, max_subgroups) {
            Ok(v) => Some(v),
            Err(e @ Error::Budget { .. }) => {
                undetermined.push(budget_note("normally monomial", &e));
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };

    Ok(ClassifierReport {
        order: g.order(),
        prime: p,
        log_order: n,
        exponent: g.exponent(),
        class_count: t.len(),
        is_abelian: g.is_abelian(),
        nilpotency_class,
        center_order: z.order(),
        center_cyclic: center_rank <= 1,
        center_invariants,
        center_rank,
        derived_order: derived.order(),
        degree_set: t.degree_set(),
        b,
        cod_set: cod_set(t)?,
        is_gvz: is_gvz_flag,
        is_vz: is_gvz(a, true),
        is_core_p,
        is_maximal_class,
        kernels_chain: kernels_chain(a),
        derived_unique_minimal_normal,
        is_normally_monomial,
        cm_bound,
        is_cm_p_minus_1: p.is_some_and(|p| (cm_bound as u64) < p),
        values_in_p_cyclotomic: p.is_some_and(|p| values_in_p_cyclotomic(a, p)),
        center_kernel_index_p,
        max_abelian_normal,
        abelian_normal_index_b,
        cyclic_normal_index_b,
        derived_exponent: g.exponent_of(&derived),
        undetermined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codegree::DEFAULT_MAX_SUBGROUPS;
    use crate::pcparse::parse_group;
    use crate::quasiperm::Budget;

    fn report(src: &str) -> ClassifierReport {
        let g = parse_group(src).unwrap().realize(5000).unwrap();
        let a = Analysis::run(g, &Budget::default()).unwrap();
        classify(&a, DEFAULT_MAX_SUBGROUPS).unwrap()
    }

    #[test]
    fn extraspecial() {
        let r = report("p=3; gens a,b,c; [b,a]=c");
        assert!(r.is_gvz && r.is_vz && r.is_maximal_class && r.kernels_chain);
        assert!(r.derived_unique_minimal_normal);
        assert_eq!(r.center_invariants, vec![3]);
        assert_eq!(r.is_normally_monomial, Some(true));
        assert_eq!(r.is_core_p, Some(true));
    }

    #[test]
    fn wreath_product_is_not_gvz() {
        let r = report("perm 9\n[1,2,0,3,4,5,6,7,8]\n[3,4,5,6,7,8,0,1,2]");
        assert_eq!(r.order, 81);
        assert!(!r.is_gvz);
        assert!(r.is_maximal_class);
        assert!(r.kernels_chain);
    }

    #[test]
    fn invariants_of_abelian_groups() {
        let g = parse_group("perm 12\n(0 1 2 3 4 5 6 7 8)\n(9 10 11)")
            .unwrap()
            .realize(5000)
            .unwrap();
        assert_eq!(abelian_invariants(&g, &g.whole()).unwrap(), vec![3, 9]);
    }

    #[test]
    fn example_cd_and_b() {
        let r = report("p=3; gens z,y,x; x^9=1; [x,z]=y; [x,y]=x^3");
        assert_eq!(r.degree_set, vec![1, 3]);
        assert_eq!(r.b, 3);
    }
}
