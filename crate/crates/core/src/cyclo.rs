//! Exact arithmetic in cyclotomic fields `Q(ω_n)`.
//!
//! Elements are stored over the power basis `1, ω, …, ω^{φ(n)-1}` after
//! reduction modulo the n-th cyclotomic polynomial `Φ_n`. Two flavours exist:
//!
//! * [`CycNum`] carries arbitrary-precision rational coefficients and is the
//!   public value type.
//! * [`CycInt`] is a sparse integer vector over the same basis. Character
//!   values are algebraic integers, so tables are stored in this form; it is
//!   converted to [`CycNum`] at the API boundary.
//!
//! Reductions `ω^k mod Φ_n` for `0 ≤ k < n` are computed once per conductor
//! and cached process-wide.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            while n.is_multiple_of(q) {
                n /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    fn go(n: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        // x^n - 1
        let mut num = vec![0i64; n as usize + 1];
        num[0] = -1;
        num[n as usize] = 1;
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let den = go(d, memo);
            num = div_monic(&num, &den);
        }
        memo.insert(n, num.clone());
        num
    }
    go(n, &mut HashMap::new())
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Reduction data for one conductor.
#[derive(Debug)]
pub struct Basis {
    n: u32,
    phi: usize,
    /// Sparse power-basis image of `ω^k` for `k` in `0..n`.
    reps: Vec<Vec<(u32, i64)>>,
}

impl Basis {
    fn new(n: u32) -> Self {
        let poly = cyclotomic_polynomial(n);
        let phi = poly.len() - 1;
        let mut reps = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        if phi > 0 {
            cur[0] = 1;
        }
        for _ in 0..n {
            reps.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i as u32, c))
                    .collect(),
            );
            // multiply by x and reduce the overflow coefficient
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * poly[i];
                }
            }
        }
        Basis { n, phi, reps }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn phi(&self) -> usize {
        self.phi
    }

    /// Power-basis image of `ω^k`.
    pub fn rep(&self, k: u64) -> &[(u32, i64)] {
        &self.reps[(k % self.n as u64) as usize]
    }
}

static BASES: OnceLock<Mutex<HashMap<u32, Arc<Basis>>>> = OnceLock::new();

/// Cached reduction data for conductor `n`.
pub fn basis(n: u32) -> Arc<Basis> {
    assert!(n >= 1, "conductor must be positive");
    let cache = BASES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&n) {
        return b.clone();
    }
    let b = Arc::new(Basis::new(n));
    cache.lock().unwrap().entry(n).or_insert(b).clone()
}

fn ratio_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn parse_ratio(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("bad denominator in {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(num, den))
}

/// An exact element of `Q(ω_n)`.
#[derive(Clone, Debug)]
pub struct CycNum {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn zero(n: u32) -> Self {
        let phi = basis(n).phi;
        CycNum {
            conductor: n,
            coeffs: vec![BigRational::zero(); phi],
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        CycNum {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `ω_n^j`, with `j` reduced mod `n`.
    pub fn root_of_unity(n: u32, j: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let k = j.rem_euclid(n as i64) as u64;
        Self::from_terms(n, std::iter::once((k, BigRational::one())))
    }

    /// Builds `Σ c · ω_n^k` from arbitrary exponents.
    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (u64, BigRational)>) -> Self {
        let b = basis(n);
        let mut coeffs = vec![BigRational::zero(); b.phi];
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            for &(i, r) in b.rep(k) {
                coeffs[i as usize] += &c * BigRational::from_integer(BigInt::from(r));
            }
        }
        CycNum {
            conductor: n,
            coeffs,
        }
    }

    /// Builds a value from canonical power-basis coefficients.
    pub fn from_coeffs(n: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        let phi = basis(n).phi;
        if coeffs.len() != phi {
            return Err(Error::Contract(format!(
                "conductor {n} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(CycNum {
            conductor: n,
            coeffs,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-expresses the value in `Q(ω_m)`; `m` must be a multiple of the conductor.
    pub fn lift(&self, m: u32) -> CycNum {
        assert!(
            m.is_multiple_of(self.conductor),
            "cannot lift conductor {} to {m}",
            self.conductor
        );
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as u64;
        CycNum::from_terms(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as u64 * step, c.clone())),
        )
    }

    fn common(&self, other: &CycNum) -> (CycNum, CycNum) {
        let m = lcm(self.conductor as u64, other.conductor as u64) as u32;
        (self.lift(m), other.lift(m))
    }

    /// The image under `σ_k : ω_n ↦ ω_n^k`.
    pub fn galois_apply(&self, k: i64) -> Result<CycNum> {
        let n = self.conductor;
        if gcd(k.unsigned_abs(), n as u64) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        let k = k.rem_euclid(n as i64) as u64;
        Ok(CycNum::from_terms(
            n,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as u64 * k, c.clone())),
        ))
    }

    /// Complex conjugate.
    pub fn conj(&self) -> CycNum {
        self.galois_apply(-1).expect("-1 is a unit")
    }

    pub fn rational_value(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn integer_value(&self) -> Option<BigInt> {
        self.rational_value()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.common(rhs);
        let n = a.conductor;
        let mut ring = vec![BigRational::zero(); n as usize];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                ring[(i + j) % n as usize] += x * y;
            }
        }
        CycNum::from_terms(n, ring.into_iter().enumerate().map(|(k, c)| (k as u64, c)))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => write!(f, "w{}^{i}", self.conductor)?,
                _ => write!(f, "{a}*w{}^{i}", self.conductor)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycNumRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycNumRepr {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(ratio_to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycNumRepr::deserialize(d)?;
        if repr.conductor == 0 {
            return Err(serde::de::Error::custom("conductor must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_ratio(s))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        CycNum::from_coeffs(repr.conductor, coeffs).map_err(serde::de::Error::custom)
    }
}

/// A cyclotomic integer in canonical sparse form: the nonzero power-basis
/// coefficients, sorted by exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycInt {
    terms: Vec<(u32, i64)>,
}

impl CycInt {
    pub fn zero() -> Self {
        CycInt { terms: Vec::new() }
    }

    pub fn from_int(v: i64) -> Self {
        if v == 0 {
            Self::zero()
        } else {
            CycInt {
                terms: vec![(0, v)],
            }
        }
    }

    pub fn terms(&self) -> &[(u32, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ m · ω^k` over the given (exponent, multiplicity) pairs.
    pub fn from_roots(b: &Basis, roots: impl IntoIterator<Item = (u64, i64)>) -> Self {
        let mut acc = RootSum::new(b.n);
        for (k, m) in roots {
            acc.add_root(k, m as i128);
        }
        acc.finish(b)
    }

    fn from_dense(dense: &[i128]) -> Self {
        CycInt {
            terms: dense
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| {
                    (
                        i as u32,
                        i64::try_from(c).expect("cyclotomic integer coefficient overflow"),
                    )
                })
                .collect(),
        }
    }

    pub fn integer_value(&self) -> Option<i64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(0, v)] => Some(*v),
            _ => None,
        }
    }

    pub fn add(&self, other: &CycInt) -> CycInt {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let a = self.terms.get(i);
            let b = other.terms.get(j);
            match (a, b) {
                (Some(&(ea, ca)), Some(&(eb, cb))) if ea == eb => {
                    let s = ca.checked_add(cb).expect("cyclotomic integer overflow");
                    if s != 0 {
                        out.push((ea, s));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(&(ea, ca)), Some(&(eb, _))) if ea < eb => {
                    out.push((ea, ca));
                    i += 1;
                }
                (Some(_), Some(&t)) => {
                    out.push(t);
                    j += 1;
                }
                (Some(&t), None) => {
                    out.push(t);
                    i += 1;
                }
                (None, Some(&t)) => {
                    out.push(t);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        CycInt { terms: out }
    }

    pub fn scale(&self, s: i64) -> CycInt {
        if s == 0 {
            return CycInt::zero();
        }
        CycInt {
            terms: self
                .terms
                .iter()
                .map(|&(e, c)| (e, c.checked_mul(s).expect("cyclotomic integer overflow")))
                .collect(),
        }
    }

    /// Coefficient-wise exact division; `None` if some coefficient is not divisible.
    pub fn exact_div(&self, d: i64) -> Option<CycInt> {
        if self.terms.iter().any(|&(_, c)| c % d != 0) {
            return None;
        }
        Some(CycInt {
            terms: self.terms.iter().map(|&(e, c)| (e, c / d)).collect(),
        })
    }

    pub fn mul(&self, other: &CycInt, b: &Basis) -> CycInt {
        let mut acc = RootSum::new(b.n);
        acc.add_product(self, other, 1);
        acc.finish(b)
    }

    /// The image under `σ_k`; `k` must be coprime to the conductor.
    pub fn galois(&self, b: &Basis, k: u64) -> CycInt {
        let n = b.n as u64;
        debug_assert_eq!(gcd(k % n, n), 1 % n.max(1));
        CycInt::from_roots(b, self.terms.iter().map(|&(e, c)| (e as u64 * k, c)))
    }

    pub fn to_cycnum(&self, n: u32) -> CycNum {
        CycNum::from_terms(
            n,
            self.terms
                .iter()
                .map(|&(e, c)| (e as u64, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    /// Converts an exact value with integral coefficients.
    pub fn from_cycnum(x: &CycNum) -> Option<CycInt> {
        let mut terms = Vec::new();
        for (i, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return None;
            }
            terms.push((i as u32, c.to_integer().to_i64()?));
        }
        Some(CycInt { terms })
    }
}

/// Accumulator in the group ring `Z[C_n]`, reduced to canonical form on demand.
#[derive(Clone, Debug)]
pub struct RootSum {
    acc: Vec<i128>,
}

impl RootSum {
    pub fn new(n: u32) -> Self {
        RootSum {
            acc: vec![0; n as usize],
        }
    }

    pub fn add_root(&mut self, k: u64, m: i128) {
        let n = self.acc.len() as u64;
        self.acc[(k % n) as usize] += m;
    }

    pub fn add(&mut self, x: &CycInt, weight: i128) {
        for &(e, c) in &x.terms {
            self.acc[e as usize] += weight * c as i128;
        }
    }

    /// Adds `weight · a · b`.
    pub fn add_product(&mut self, a: &CycInt, b: &CycInt, weight: i128) {
        let n = self.acc.len();
        for &(ea, ca) in &a.terms {
            let wa = weight * ca as i128;
            for &(eb, cb) in &b.terms {
                let k = ea as usize + eb as usize;
                let k = if k >= n { k - n } else { k };
                self.acc[k] += wa * cb as i128;
            }
        }
    }

    pub fn finish(&self, b: &Basis) -> CycInt {
        let mut dense = vec![0i128; b.phi];
        for (k, &m) in self.acc.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for &(i, r) in b.rep(k as u64) {
                dense[i as usize] += m * r as i128;
            }
        }
        CycInt::from_dense(&dense)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(125), 100);
        assert_eq!(euler_phi(15), 8);
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(CycNum::root_of_unity(1, 0), CycNum::one());
        let s = CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2);
        assert_eq!(s, CycNum::from_integer(-1));
        assert_eq!(CycNum::root_of_unity(9, 3), CycNum::root_of_unity(3, 1));
        assert_eq!(CycNum::root_of_unity(9, 12), CycNum::root_of_unity(9, 3));
    }

    #[test]
    fn ring_examples() {
        let w = |j| CycNum::root_of_unity(3, j);
        assert_eq!(&w(1) * &w(2), CycNum::one());
        let w5 = CycNum::root_of_unity(5, 1);
        assert_eq!(&w5 + &CycNum::zero(5), w5);
        // (1 + ω)(1 + ω²) = 2 + ω + ω² = 1
        let a = &CycNum::one() + &w(1);
        let b = &CycNum::one() + &w(2);
        assert_eq!(&a * &b, CycNum::one());
    }

    #[test]
    fn galois_examples() {
        assert_eq!(
            CycNum::root_of_unity(9, 1).galois_apply(2).unwrap(),
            CycNum::root_of_unity(9, 2)
        );
        let r = CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2);
        assert_eq!(r.galois_apply(2).unwrap(), CycNum::from_integer(-1));
        assert_eq!(
            CycNum::root_of_unity(5, 1).galois_apply(-1).unwrap(),
            CycNum::root_of_unity(5, 4)
        );
        assert!(matches!(
            CycNum::root_of_unity(9, 1).galois_apply(3),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn rational_values() {
        let r = CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2);
        assert_eq!(r.rational_value(), Some(q(-1, 1)));
        assert_eq!(CycNum::root_of_unity(5, 1).rational_value(), None);
        // Ramanujan sum c_9(3): Σ_{gcd(k,9)=1} ω_9^{3k} = -3
        let mut s = CycNum::zero(9);
        for k in (1..9).filter(|k| gcd(*k, 9) == 1) {
            s = &s + &CycNum::root_of_unity(9, 3 * k as i64);
        }
        assert_eq!(s.integer_value(), Some(BigInt::from(-3)));
    }

    #[test]
    fn prime_root_sums_vanish() {
        for p in [2u32, 3, 5, 7, 11, 13, 17, 19] {
            let mut s = CycNum::zero(p);
            for j in 0..p {
                s = &s + &CycNum::root_of_unity(p, j as i64);
            }
            assert!(s.is_zero(), "p = {p}");
        }
    }

    #[test]
    fn mixed_conductor_arithmetic() {
        let a = CycNum::root_of_unity(3, 1);
        let b = CycNum::root_of_unity(5, 1);
        let c = &a * &b;
        assert_eq!(c.conductor(), 15);
        assert_eq!(c, CycNum::root_of_unity(15, 5 + 3));
        // equality across conductors
        assert_eq!(
            CycNum::root_of_unity(3, 1).lift(9),
            CycNum::root_of_unity(9, 3)
        );
    }

    #[test]
    fn json_round_trip() {
        let x = &CycNum::root_of_unity(9, 2) + &CycNum::from_rational(q(1, 3));
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.contains("\"conductor\":9"));
        assert!(s.contains("\"1/3\""));
        let y: CycNum = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        let bad = r#"{"conductor":9,"coeffs":["1/1"]}"#;
        assert!(serde_json::from_str::<CycNum>(bad).is_err());
    }

    #[test]
    fn cycint_matches_cycnum() {
        let b = basis(9);
        let x = CycInt::from_roots(&b, [(1, 2), (7, -1), (4, 3)]);
        let y = CycInt::from_roots(&b, [(8, 1), (2, 1)]);
        let xn = x.to_cycnum(9);
        let yn = y.to_cycnum(9);
        assert_eq!(x.mul(&y, &b).to_cycnum(9), &xn * &yn);
        assert_eq!(x.add(&y).to_cycnum(9), &xn + &yn);
        assert_eq!(x.galois(&b, 2).to_cycnum(9), xn.galois_apply(2).unwrap());
        assert_eq!(CycInt::from_cycnum(&xn), Some(x));
    }
}
