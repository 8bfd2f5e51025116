//! Dixon–Schneider over `F_ℓ` with `ℓ ≡ 1 (mod e)`.
//!
//! Central characters are simultaneous eigenvectors of the class matrices.
//! The search starts from the decomposition by central character of `Z(G)`
//! (each piece has a basis with disjoint supports), then refines each piece
//! with the class matrices of non-central classes in class order.

use std::collections::HashMap;

use super::induce::linear_characters;
use super::modp::{charpoly, fail, is_prime, nullspace, roots, rref, Fp};
use super::Roots;
use crate::error::Result;
use crate::group::{ClassData, Group};

struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

/// Smallest prime `ℓ ≡ 1 (mod e)` with `ℓ > 2⌈√n⌉`.
pub fn choose_prime(n: u64, e: u64) -> u64 {
    let mut s = (n as f64).sqrt() as u64;
    while s * s < n {
        s += 1;
    }
    let bound = 2 * s;
    let mut ell = e * (bound / e) + 1;
    while ell <= bound || !is_prime(ell) {
        ell += e;
    }
    ell
}

pub(crate) struct Modular {
    pub ell: u64,
    pub chars: Vec<Roots>,
}

pub(crate) fn irreducibles(g: &Group, cd: &ClassData) -> Result<Modular> {
    let n = g.order() as u64;
    let e = g.exponent();
    let k = cd.len();
    let ell = choose_prime(n, e);
    let f = Fp { p: ell };
    let zeta = f.pow(f.primitive_root(), (ell - 1) / e);
    let zpow: Vec<u64> = (0..e).map(|i| f.pow(zeta, i)).collect();

    let mut spaces = central_decomposition(g, cd, &zpow)?;
    for (j, class) in cd.classes.iter().enumerate() {
        if spaces.iter().all(|s| s.rows.len() == 1) {
            break;
        }
        if class.size == 1 {
            continue;
        }
        let a = class_matrix(g, cd, j, f);
        let mut next = Vec::with_capacity(spaces.len());
        for s in spaces {
            if s.rows.len() == 1 {
                next.push(s);
            } else {
                next.extend(split(f, s, &a)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(fail(format!(
            "eigenspace splitting stalled with {} spaces for {k} classes",
            spaces.len()
        )));
    }

    let sizes: Vec<u64> = cd.classes.iter().map(|c| c.size as u64).collect();
    let mut degrees = Vec::with_capacity(k);
    let mut values: Vec<Vec<u64>> = Vec::with_capacity(k);
    for s in &spaces {
        let v = &s.rows[0];
        if v[0] != 1 {
            return Err(fail(
                "central character vector does not start at the identity",
            ));
        }
        let mut sum = 0;
        for l in 0..k {
            let t = f.mul(v[l], v[cd.inverse_class(l)]);
            sum = f.add(sum, f.mul(t, f.inv(sizes[l] % ell)));
        }
        if sum == 0 {
            return Err(fail("degenerate central character"));
        }
        let d2 = f.mul(n % ell, f.inv(sum));
        let d = (1..=ell / 2)
            .find(|&d| f.mul(d, d) == d2)
            .ok_or_else(|| fail("character degree has no square root mod ℓ"))?;
        if !n.is_multiple_of(d) {
            return Err(fail(format!("recovered degree {d} does not divide |G|")));
        }
        degrees.push(d);
        values.push(
            (0..k)
                .map(|l| f.mul(f.mul(d, v[l]), f.inv(sizes[l] % ell)))
                .collect(),
        );
    }

    // classes of rep^t, and rational-class representatives with their unit
    let pow_classes: Vec<Vec<usize>> = cd
        .classes
        .iter()
        .map(|c| {
            (0..c.elem_order as i64)
                .map(|t| cd.class_of(g.pow(c.rep, t)))
                .collect()
        })
        .collect();
    let units = cd.units();
    let mut rational: Vec<Option<(usize, u64)>> = vec![None; k];
    for l in 0..k {
        if rational[l].is_some() {
            continue;
        }
        for &u in &units {
            let m = cd.power_map(u as i64).unwrap()[l] as usize;
            if rational[m].is_none() {
                rational[m] = Some((l, u));
            }
        }
    }

    let index: HashMap<&[u64], usize> = values
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_slice(), i))
        .collect();
    if index.len() != k {
        return Err(fail("two central characters coincide mod ℓ"));
    }
    let mut lifted: Vec<Option<Roots>> = vec![None; k];
    for c in 0..k {
        if lifted[c].is_some() {
            continue;
        }
        let mut r: Roots = vec![Vec::new(); k];
        for l in 0..k {
            let (rep, _) = rational[l].unwrap();
            if rep == l {
                r[l] = lift(f, &zpow, e, degrees[c], &values[c], &pow_classes[l])?;
            }
        }
        for l in 0..k {
            let (rep, u) = rational[l].unwrap();
            if rep != l {
                r[l] = galois_roots(&r[rep], u, e);
            }
        }
        for &u in &units {
            let pm = cd.power_map(u as i64).unwrap();
            let image: Vec<u64> = (0..k).map(|l| values[c][pm[l] as usize]).collect();
            let Some(&c2) = index.get(image.as_slice()) else {
                return Err(fail("Galois image of a character is missing"));
            };
            if lifted[c2].is_none() {
                lifted[c2] = Some((0..k).map(|l| r[pm[l] as usize].clone()).collect());
            }
        }
        if lifted[c].is_none() {
            lifted[c] = Some(r);
        }
    }
    Ok(Modular {
        ell,
        chars: lifted.into_iter().map(Option::unwrap).collect(),
    })
}

fn galois_roots(r: &[(u32, u32)], u: u64, e: u64) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = r
        .iter()
        .map(|&(j, m)| ((j as u64 * u % e) as u32, m))
        .collect();
    out.sort_unstable();
    out
}

/// Recovers eigenvalue multiplicities of `ρ(g)` from `χ(g^t)` mod ℓ.
fn lift(
    f: Fp,
    zpow: &[u64],
    e: u64,
    degree: u64,
    vals: &[u64],
    pow_classes: &[usize],
) -> Result<Vec<(u32, u32)>> {
    let o = pow_classes.len() as u64;
    let step = e / o;
    let inv_o = f.inv(o % f.p);
    let mut out = Vec::new();
    let mut total = 0;
    for j in 0..o {
        let mut s = 0;
        for (t, &cl) in pow_classes.iter().enumerate() {
            // ζ_o^{-jt} = ζ_e^{-jt·e/o}
            let x = (e - (j * t as u64 % o) * step % e) % e;
            s = f.add(s, f.mul(vals[cl], zpow[x as usize]));
        }
        let m = f.mul(s, inv_o);
        if m > degree {
            return Err(fail(format!(
                "eigenvalue multiplicity {m} exceeds degree {degree}"
            )));
        }
        if m > 0 {
            out.push(((j * step) as u32, m as u32));
            total += m;
        }
    }
    if total != degree {
        return Err(fail("eigenvalue multiplicities do not sum to the degree"));
    }
    Ok(out)
}

/// `A[l][m] = #{x ∈ C_j : x⁻¹ z_m ∈ C_l}`; central characters are right eigenvectors.
fn class_matrix(g: &Group, cd: &ClassData, j: usize, f: Fp) -> Vec<Vec<u64>> {
    let k = cd.len();
    let mut a = vec![vec![0u64; k]; k];
    let invs: Vec<u32> = cd.classes[j]
        .members
        .ones()
        .map(|x| g.inv(x as u32))
        .collect();
    for m in 0..k {
        let z = cd.classes[m].rep;
        for &xi in &invs {
            let l = cd.class_of(g.mul(xi, z));
            a[l][m] += 1;
        }
    }
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x %= f.p;
        }
    }
    a
}

fn split(f: Fp, s: Space, a: &[Vec<u64>]) -> Result<Vec<Space>> {
    let d = s.rows.len();
    // T[r][i] = (A b_i)[p_r]: the action in basis coordinates
    let mut t = vec![vec![0u64; d]; d];
    for (i, b) in s.rows.iter().enumerate() {
        let support: Vec<usize> = (0..b.len()).filter(|&m| b[m] != 0).collect();
        for (r, &p) in s.pivots.iter().enumerate() {
            let row = &a[p];
            let mut acc = 0;
            for &m in &support {
                acc = f.add(acc, f.mul(row[m], b[m]));
            }
            t[r][i] = acc;
        }
    }
    let cp = charpoly(f, &t);
    let rts = roots(f, &cp);
    if rts.is_empty() {
        return Err(fail("class matrix has no eigenvalue in F_ℓ"));
    }
    if rts.len() == 1 {
        let lam = rts[0];
        let scalar = (0..d).all(|r| (0..d).all(|i| t[r][i] == if r == i { lam } else { 0 }));
        if !scalar {
            return Err(fail("class matrix restriction is not diagonalizable"));
        }
        return Ok(vec![s]);
    }
    let mut out = Vec::with_capacity(rts.len());
    let mut total = 0;
    for lam in rts {
        let mut m = t.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = f.sub(row[i], lam);
        }
        let ns = nullspace(f, &m);
        let ncols = s.rows[0].len();
        let mut rows: Vec<Vec<u64>> = ns
            .iter()
            .map(|y| {
                let mut v = vec![0u64; ncols];
                for (yi, b) in y.iter().zip(&s.rows) {
                    if *yi != 0 {
                        for (vx, &bx) in v.iter_mut().zip(b) {
                            *vx = f.add(*vx, f.mul(*yi, bx));
                        }
                    }
                }
                v
            })
            .collect();
        let pivots = rref(f, &mut rows);
        total += rows.len();
        out.push(Space { rows, pivots });
    }
    if total != d {
        return Err(fail("class matrix restriction is not diagonalizable"));
    }
    Ok(out)
}

/// Pieces `{ω : ω(zC) = μ(z)ω(C)}` for the linear characters `μ` of `Z(G)`.
fn central_decomposition(g: &Group, cd: &ClassData, zpow: &[u64]) -> Result<Vec<Space>> {
    let k = cd.len();
    let z = g.center();
    let zl = linear_characters(g, &z)?;
    let zmul: Vec<Vec<usize>> = cd
        .classes
        .iter()
        .map(|c| {
            zl.members
                .iter()
                .map(|&x| cd.class_of(g.mul(x, c.rep)))
                .collect()
        })
        .collect();
    let mut orbit_rep = vec![usize::MAX; k];
    let mut reps = Vec::new();
    for l in 0..k {
        if orbit_rep[l] == usize::MAX {
            reps.push(l);
            for &m in &zmul[l] {
                orbit_rep[m] = l;
            }
        }
    }
    let mut spaces = Vec::new();
    for mu in &zl.chars {
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for &l0 in &reps {
            let compatible = zmul[l0]
                .iter()
                .zip(&mu.exps)
                .all(|(&m, &x)| m != l0 || x == 0);
            if !compatible {
                continue;
            }
            let mut v = vec![0u64; k];
            for (&m, &x) in zmul[l0].iter().zip(&mu.exps) {
                v[m] = zpow[x as usize];
            }
            rows.push(v);
            pivots.push(l0);
        }
        if !rows.is_empty() {
            spaces.push(Space { rows, pivots });
        }
    }
    let dims: usize = spaces.iter().map(|s| s.rows.len()).sum();
    if dims != k {
        return Err(fail(format!(
            "central decomposition has total dimension {dims}, expected {k}"
        )));
    }
    Ok(spaces)
}
