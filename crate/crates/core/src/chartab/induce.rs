use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclo::{basis, gcd, CycInt, RootSum};
use crate::error::{Error, Result};
use crate::group::{ClassData, Elem, Group, Subgroup};

/// A linear character of a subgroup: `λ(h) = ω_e^{exps[i]}` for `h = members[i]`,
/// where `e = exp(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearChar {
    pub exps: Vec<u32>,
    /// Multiplicative order `o(λ)`, so `Q(λ) = Q(ω_{o(λ)})`.
    pub order: u64,
}

/// All linear characters of a subgroup `H`.
#[derive(Debug, Clone)]
pub struct LinearChars {
    /// Members of `H` in increasing index order.
    pub members: Vec<Elem>,
    pub exponent: u64,
    pub chars: Vec<LinearChar>,
}

impl LinearChar {
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

/// The `|H/H'|` linear characters of `h`, built by extending characters of
/// `H'` one cyclic step at a time along the generators of `H`.
pub fn linear_characters(g: &Group, h: &Subgroup) -> Result<LinearChars> {
    let e = g.exponent();
    let derived = g.derived_of(h);
    let mut list: Vec<Elem> = derived.iter().collect();
    let mut inside = derived.members().clone();
    let mut chars: Vec<Vec<u32>> = vec![vec![0; list.len()]];
    let mut pos = vec![u32::MAX; g.order()];
    let candidates = h.gens().iter().copied().chain(h.iter());
    for x in candidates {
        if inside.contains(x as usize) {
            continue;
        }
        for (i, &y) in list.iter().enumerate() {
            pos[y as usize] = i as u32;
        }
        let mut r = 1u64;
        let mut xr = x;
        while !inside.contains(xr as usize) {
            xr = g.mul(xr, x);
            r += 1;
        }
        let mut new_list = Vec::with_capacity(list.len() * r as usize);
        let mut xj = 0;
        for _ in 0..r {
            for &s in &list {
                new_list.push(g.mul(xj, s));
            }
            xj = g.mul(xj, x);
        }
        let step = e / r;
        let mut new_chars = Vec::with_capacity(chars.len() * r as usize);
        for lam in &chars {
            let s = lam[pos[xr as usize] as usize] as u64;
            if !s.is_multiple_of(r) {
                return Err(Error::Internal(format!(
                    "linear character cannot extend: λ(x^{r}) = ω^{s}"
                )));
            }
            for i in 0..r {
                let t = (s / r + i * step) % e;
                let mut v = Vec::with_capacity(new_list.len());
                for j in 0..r {
                    let shift = (j * t % e) as u32;
                    v.extend(lam.iter().map(|&a| (a + shift) % e as u32));
                }
                new_chars.push(v);
            }
        }
        for &y in &new_list {
            inside.insert(y as usize);
        }
        list = new_list;
        chars = new_chars;
    }
    if list.len() != h.order() {
        return Err(Error::Internal(
            "linear character construction missed elements".into(),
        ));
    }
    let mut perm: Vec<usize> = (0..list.len()).collect();
    perm.sort_by_key(|&i| list[i]);
    let members: Vec<Elem> = perm.iter().map(|&i| list[i]).collect();
    let mut out: Vec<LinearChar> = chars
        .into_iter()
        .map(|c| {
            let exps: Vec<u32> = perm.iter().map(|&i| c[i]).collect();
            let gd = exps.iter().fold(e, |acc, &x| gcd(acc, x as u64));
            LinearChar {
                exps,
                order: e / gd,
            }
        })
        .collect();
    out.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.exps.cmp(&b.exps)));
    let quotient = h.order() / derived.order();
    if out.len() != quotient {
        return Err(Error::Internal(format!(
            "expected {quotient} linear characters, built {}",
            out.len()
        )));
    }
    Ok(LinearChars {
        members,
        exponent: e,
        chars: out,
    })
}

impl LinearChars {
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// Members of `ker λ`.
    pub fn kernel(&self, lam: &LinearChar) -> Vec<Elem> {
        self.members
            .iter()
            .zip(&lam.exps)
            .filter(|(_, &x)| x == 0)
            .map(|(&m, _)| m)
            .collect()
    }

    /// `λ↑_H^G` evaluated on every class.
    pub fn induce(&self, g: &Group, cd: &ClassData, lam: &LinearChar) -> Vec<CycInt> {
        let e = self.exponent as u32;
        let b = basis(e);
        let k = cd.len();
        let mut acc: Vec<Option<RootSum>> = vec![None; k];
        for (&m, &x) in self.members.iter().zip(&lam.exps) {
            acc[cd.class_of(m)]
                .get_or_insert_with(|| RootSum::new(e))
                .add_root(x as u64, 1);
        }
        let hn = self.members.len() as i64;
        acc.into_iter()
            .enumerate()
            .map(|(l, rs)| match rs {
                None => CycInt::zero(),
                Some(rs) => {
                    let centralizer = (g.order() / cd.classes[l].size) as i64;
                    rs.finish(&b)
                        .scale(centralizer)
                        .exact_div(hn)
                        .expect("induced character values are algebraic integers")
                }
            })
            .collect()
    }

    /// `⟨λ, χ_H⟩_H` for a class function `chi` of `G`.
    pub fn inner_with_restriction(
        &self,
        cd: &ClassData,
        lam: &LinearChar,
        chi: &[CycInt],
    ) -> Result<BigRational> {
        let e = self.exponent as u32;
        let mut rs = RootSum::new(e);
        for (&m, &x) in self.members.iter().zip(&lam.exps) {
            let v = &chi[cd.class_of(m)];
            // λ(h)·conj(χ(h))
            for &(j, c) in v.terms() {
                rs.add_root((x as u64 + e as u64 - j as u64) % e as u64, c as i128);
            }
        }
        rational_over(rs.finish(&basis(e)), self.members.len())
    }
}

fn rational_over(x: CycInt, denom: usize) -> Result<BigRational> {
    let v = x
        .integer_value()
        .ok_or_else(|| Error::Contract("inner product is not rational".into()))?;
    Ok(BigRational::new(BigInt::from(v), BigInt::from(denom)))
}

/// `⟨α, β⟩ = (1/|G|) Σ_l |C_l| α(g_l) conj(β(g_l))` for class functions over `Q(ω_e)`.
pub fn inner_product(
    g: &Group,
    cd: &ClassData,
    alpha: &[CycInt],
    beta: &[CycInt],
) -> Result<BigRational> {
    let e = g.exponent() as u32;
    let mut rs = RootSum::new(e);
    for (l, (a, b)) in alpha.iter().zip(beta).enumerate() {
        let w = cd.classes[l].size as i128;
        for &(ja, ca) in a.terms() {
            for &(jb, cb) in b.terms() {
                rs.add_root(
                    (ja as u64 + e as u64 - jb as u64) % e as u64,
                    w * ca as i128 * cb as i128,
                );
            }
        }
    }
    rational_over(rs.finish(&basis(e)), g.order())
}

/// Elements on which a class function takes its value at the identity.
pub fn kernel_of_values(g: &Group, cd: &ClassData, values: &[CycInt]) -> Vec<Elem> {
    let deg = values[0].clone();
    g.elements()
        .filter(|&x| values[cd.class_of(x)] == deg)
        .collect()
}
