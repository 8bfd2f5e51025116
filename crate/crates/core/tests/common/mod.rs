//! Independent oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use qpdeg::chartab::{inner_product, kernel_of_values, linear_characters};
use qpdeg::codegree::{codegrees, inducing_pairs, PairSearch, DEFAULT_MAX_SUBGROUPS};
use qpdeg::corpus::{corpus, CorpusEntry, Tier};
use qpdeg::cyclo::euler_phi;
use qpdeg::pcparse::parse_group;
use qpdeg::quasiperm::Budget;
use qpdeg::Analysis;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn analyse_text(text: &str) -> Analysis {
    let g = parse_group(text).unwrap().realize(20000).unwrap();
    Analysis::run(g, &Budget::default()).unwrap()
}

pub fn analyse(name: &str) -> Analysis {
    analyse_text(&qpdeg::corpus::find(name).unwrap().text)
}

/// Fast-tier corpus members up to the given order.
pub fn small_corpus(max_order: usize) -> Vec<CorpusEntry> {
    corpus()
        .into_iter()
        .filter(|e| e.tier == Tier::Fast && e.order <= max_order)
        .collect()
}

/// Row orthogonality by exact inner products, and `Σχ(1)² = |G|`.
pub fn orthogonality(a: &Analysis) -> Check {
    let t = &a.table;
    let k = t.len();
    ensure!(
        k == a.classes.len(),
        "{} characters for {} classes",
        k,
        a.classes.len()
    );
    let sq: u64 = (0..k).map(|i| t.degree(i).pow(2)).sum();
    ensure!(sq as usize == a.group.order(), "Σχ(1)² = {sq} ≠ |G|");
    for i in 0..k {
        for j in i..k {
            let ip = inner_product(&a.group, &a.classes, t.char(i).values(), t.char(j).values())
                .map_err(|e| e.to_string())?;
            let want = if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            ensure!(ip == want, "<χ{i}, χ{j}> = {ip}");
        }
    }
    Ok(())
}

/// Column orthogonality in `Q(ω_e)`: `Σ_χ χ(g)·conj χ(h) = δ·|C_G(g)|`.
pub fn column_orthogonality(a: &Analysis) -> Check {
    let t = &a.table;
    let k = t.len();
    let vals: Vec<Vec<_>> = (0..k)
        .map(|i| (0..k).map(|l| t.value(i, l)).collect())
        .collect();
    for l in 0..k {
        for m in l..k {
            let mut s = qpdeg::cyclo::CycNum::zero(t.exponent() as u32);
            for row in &vals {
                s = &s + &(&row[l] * &row[m].conj());
            }
            let want = if l == m {
                (a.group.order() / a.classes.classes[l].size) as i64
            } else {
                0
            };
            ensure!(
                s == qpdeg::cyclo::CycNum::from_integer(want),
                "columns {l}, {m} give {s}"
            );
        }
    }
    Ok(())
}

pub fn kernels_intersect_trivially(a: &Analysis) -> Check {
    let n = a.group.order();
    let mut inter = vec![true; n];
    for i in 0..a.table.len() {
        let k = a.table.kernel(i);
        for (x, keep) in inter.iter_mut().enumerate() {
            *keep &= k.contains(x as u32);
        }
    }
    ensure!(inter.iter().filter(|&&b| b).count() == 1, "∩ ker χ ≠ 1");
    Ok(())
}

/// `ker(λ↑G) = Core_G(ker λ)` for every subgroup and every linear `λ`.
pub fn induced_kernels(a: &Analysis) -> Result<usize, String> {
    let g = &a.group;
    let layers = g
        .all_subgroups(DEFAULT_MAX_SUBGROUPS)
        .map_err(|e| e.to_string())?;
    let mut count = 0;
    for h in layers.iter().flatten() {
        let lc = linear_characters(g, h).map_err(|e| e.to_string())?;
        for lam in &lc.chars {
            let ind = lc.induce(g, &a.classes, lam);
            let mut lhs = kernel_of_values(g, &a.classes, &ind);
            lhs.sort_unstable();
            let core = g.core(&g.subgroup_from_set(&lc.kernel(lam)));
            let rhs: Vec<u32> = core.iter().collect();
            ensure!(lhs == rhs, "kernel mismatch for |H| = {}", h.order());
            count += 1;
        }
    }
    Ok(count)
}

/// Values of a Galois orbit sum, recomputed from the table.
pub fn orbit_sum(a: &Analysis, chi: usize) -> Vec<i64> {
    let t = &a.table;
    let members = &a.galois.orbit(chi).members;
    (0..t.len())
        .map(|l| {
            let mut s = qpdeg::cyclo::CycNum::zero(t.exponent() as u32);
            for &m in members {
                s = &s + &t.value(m, l);
            }
            let v = s.rational_value().expect("orbit sums are rational");
            assert!(v.is_integer());
            i64::try_from(v.to_integer()).unwrap()
        })
        .collect()
}

/// `(ξ(1), m(ξ))` for the sum of the orbits of `chars`.
pub fn xi_and_m(a: &Analysis, chars: &[usize]) -> (i64, i64) {
    let k = a.table.len();
    let mut xi = vec![0i64; k];
    for &c in chars {
        for (x, v) in xi.iter_mut().zip(orbit_sum(a, c)) {
            *x += v;
        }
    }
    let m = (-xi.iter().copied().min().unwrap()).max(0);
    (xi[0], m)
}

/// `c(G)` by brute force over every set of Galois orbits whose kernels meet
/// trivially, without irredundancy pruning. `None` above `max_orbits`.
pub fn brute_force_c(a: &Analysis, max_orbits: usize) -> Option<i64> {
    let orbits: Vec<usize> = a
        .galois
        .orbits
        .iter()
        .map(|o| o.rep())
        .filter(|&r| a.table.kernel(r).order() < a.group.order())
        .collect();
    if orbits.len() > max_orbits {
        return None;
    }
    let n = a.group.order();
    let sums: Vec<Vec<i64>> = orbits.iter().map(|&r| orbit_sum(a, r)).collect();
    let kernels: Vec<Vec<bool>> = orbits
        .iter()
        .map(|&r| {
            (0..n)
                .map(|x| a.table.kernel(r).contains(x as u32))
                .collect()
        })
        .collect();
    let mut best: Option<i64> = None;
    for mask in 1u64..(1 << orbits.len()) {
        let idx: Vec<usize> = (0..orbits.len()).filter(|i| mask >> i & 1 == 1).collect();
        let trivial = (1..n).all(|x| idx.iter().any(|&i| !kernels[i][x]));
        if !trivial {
            continue;
        }
        let k = a.table.len();
        let mut xi = vec![0i64; k];
        for &i in &idx {
            for l in 0..k {
                xi[l] += sums[i][l];
            }
        }
        let v = xi[0] + (-xi.iter().copied().min().unwrap()).max(0);
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    best
}

/// `|Ω₁(Z(G))| = p^{d(Z)}`, counted directly.
pub fn center_rank(a: &Analysis) -> u32 {
    let p = a.prime().unwrap();
    let g = &a.group;
    let z = g.center();
    let omega = z.iter().filter(|&x| g.pow(x, p as i64) == 0).count() as u64;
    let mut r = 0;
    let mut q = 1;
    while q < omega {
        q *= p;
        r += 1;
    }
    r
}

/// `|X| = d(Z)` and `m(ξ) = ξ(1)/(p−1)` on every optimal witness.
pub fn witness_shape(a: &Analysis) -> Check {
    let p = a.prime().unwrap() as i64;
    let d = center_rank(a) as usize;
    for w in &a.solver.witnesses {
        ensure!(
            w.members.len() == d,
            "|X| = {} but d(Z) = {d}",
            w.members.len()
        );
        let (xi, m) = xi_and_m(a, &w.members);
        ensure!(m * (p - 1) == xi, "m = {m}, ξ(1) = {xi}");
        ensure!((xi + m) as u64 == a.c(), "witness total {} ≠ c", xi + m);
    }
    Ok(())
}

/// `cod(η)(p−1) = p·d(η)` for every nontrivial linear `η`.
pub fn linear_codegrees(a: &Analysis) -> Check {
    let p = a.prime().unwrap();
    let cods = codegrees(&a.table).map_err(|e| e.to_string())?;
    for i in 1..a.table.len() {
        if a.table.degree(i) != 1 {
            continue;
        }
        let d = a.galois.orbit(i).members.len() as u64;
        ensure!(d == euler_phi(cods[i]), "|Γ(η)| = {d}, cod = {}", cods[i]);
        ensure!(
            cods[i] * (p - 1) == p * d,
            "cod(η{i}) = {}, d = {d}",
            cods[i]
        );
    }
    Ok(())
}

/// `c ≤ Σ χ(1)·cod(χ)` over every optimal witness.
pub fn degree_codegree_bound(a: &Analysis) -> Check {
    let cods = codegrees(&a.table).map_err(|e| e.to_string())?;
    for w in &a.solver.witnesses {
        let s: u64 = w.members.iter().map(|&i| a.table.degree(i) * cods[i]).sum();
        ensure!(a.c() <= s, "c = {} > Σχ(1)cod = {s}", a.c());
    }
    Ok(())
}

/// Every inducing pair with matching field, for every nonlinear member of
/// every witness, has a non-normal `ker λ`.
pub fn hypothesis_one(a: &Analysis) -> Result<bool, String> {
    let search = PairSearch {
        all: true,
        ..PairSearch::ford(DEFAULT_MAX_SUBGROUPS)
    };
    let mut chars: Vec<usize> = a
        .solver
        .witnesses
        .iter()
        .flat_map(|w| w.members.iter().copied())
        .filter(|&chi| a.table.degree(chi) > 1)
        .collect();
    chars.sort_unstable();
    chars.dedup();
    for chi in chars {
        let pairs = inducing_pairs(a, chi, search).map_err(|e| e.to_string())?;
        ensure!(!pairs.is_empty(), "no Ford pair for χ{chi}");
        if pairs.iter().any(|p| a.group.is_normal(&p.ker_lambda)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Orders `p³` and `p⁴`: membership in `𝒯` and the codegree sums.
pub fn small_order_theorem(a: &Analysis) -> Result<bool, String> {
    let Some(p) = a.prime() else { return Ok(false) };
    let n = a.group.order() as u64;
    if a.group.is_abelian() || p == 2 || n > p.pow(4) {
        return Ok(false);
    }
    ensure!(hypothesis_one(a)?, "order ≤ p⁴ group outside 𝒯");
    let cods = codegrees(&a.table).map_err(|e| e.to_string())?;
    let z = a.group.center().order() as u64;
    for w in &a.solver.witnesses {
        let s: u64 = w.members.iter().map(|&i| cods[i]).sum();
        if n == p.pow(3) || z == p * p {
            ensure!(a.c() == s, "c = {} ≠ Σcod = {s}", a.c());
        } else {
            ensure!(a.c() <= s, "c = {} > Σcod = {s}", a.c());
        }
    }
    Ok(true)
}

/// The fast route, when it applies, agrees with the exhaustive search.
pub fn routes_agree(a: &Analysis) -> Check {
    let s = &a.solver;
    if a.prime().is_some_and(|p| p != 2) && !a.group.is_abelian() {
        ensure!(s.fast.is_some(), "fast route missing");
    }
    if let Some(f) = s.fast {
        ensure!(f == s.general, "fast {f} ≠ general {}", s.general);
    }
    ensure!(s.c == s.general, "c ≠ general route");
    Ok(())
}

/// Ford pairs of one character share `|ker λ|` and its normality.
pub fn ford_pairs_consistent(a: &Analysis) -> Check {
    let search = PairSearch {
        all: true,
        ..PairSearch::ford(DEFAULT_MAX_SUBGROUPS)
    };
    for chi in 0..a.table.len() {
        let pairs = inducing_pairs(a, chi, search).map_err(|e| e.to_string())?;
        ensure!(!pairs.is_empty(), "χ{chi} has no Ford pair");
        let k = pairs[0].ker_lambda.order();
        let nm = a.group.is_normal(&pairs[0].ker_lambda);
        for p in &pairs {
            ensure!(p.ker_lambda.order() == k, "χ{chi}: |ker λ| varies");
            ensure!(
                a.group.is_normal(&p.ker_lambda) == nm,
                "χ{chi}: normality varies"
            );
            ensure!(
                p.subgroup.order() as u64 * a.table.degree(chi) == a.group.order() as u64,
                "index"
            );
        }
    }
    Ok(())
}
