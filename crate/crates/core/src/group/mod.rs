//! Finite groups given by full element enumeration.
//!
//! Elements are indices `0..|G|` with the identity at 0, numbered in
//! breadth-first order from the generators (shorter words first; ties broken
//! by the order in which generators are tried). Products come from one of two
//! backends:
//!
//! * a dense Cayley table for groups of at most [`DENSE_LIMIT`] elements;
//! * above that, a right-multiplication table by generators together with a
//!   normal-form word for every element, so `x·y` is computed by applying the
//!   word of `y` to `x`.

mod classes;
mod subgroup;

use std::collections::HashMap;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclo::{gcd, lcm};
use crate::error::{Error, Result};

pub use classes::{conjugacy_classes, ClassData, ConjClass};
pub use subgroup::Subgroup;

/// Element index.
pub type Elem = u32;

/// Largest order served by the dense product table.
pub const DENSE_LIMIT: usize = 5000;
/// Default enumeration cap.
pub const DEFAULT_MAX_ORDER: usize = 5000;
/// Caps above this are refused.
pub const HARD_MAX_ORDER: usize = 20000;

#[derive(Debug, Clone)]
enum Backend {
    Dense(Vec<u16>),
    Word {
        word_start: Vec<u32>,
        words: Vec<u8>,
    },
}

/// Which product backend a group uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendKind {
    Dense,
    Word,
}

#[derive(Debug, Clone)]
pub struct Group {
    order: usize,
    gens: Vec<Elem>,
    /// `right[x * ngens + s]` is `x · gens[s]`.
    right: Vec<u32>,
    backend: Backend,
    inv: Vec<Elem>,
    elem_order: Vec<u32>,
    prime: Option<u32>,
    exponent: u64,
}

/// `Some(p)` if `n` is a power of the prime `p` (including `p^0 = 1`, reported as `None`).
pub fn prime_power_base(n: u64) -> Option<u32> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n && !n.is_multiple_of(p) {
        p += 1;
    }
    if !n.is_multiple_of(p) {
        p = n;
    }
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p as u32)
}

/// Exact `log_p(n)` if `n` is a power of `p`.
pub fn log_p(n: u64, p: u64) -> Option<u32> {
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        if !m.is_multiple_of(p) {
            return None;
        }
        m /= p;
        k += 1;
    }
    (m == 1).then_some(k)
}

impl Group {
    /// Enumerates the group generated by `gens` under `mul`.
    ///
    /// Fails with a budget error once more than `max_order` elements appear.
    pub fn enumerate<E, F>(identity: E, gens: &[E], mul: F, max_order: usize) -> Result<Group>
    where
        E: Clone + Eq + Hash,
        F: Fn(&E, &E) -> E,
    {
        if max_order > HARD_MAX_ORDER {
            return Err(Error::Budget {
                what: "group order cap",
                limit: HARD_MAX_ORDER,
                reached: max_order,
                detail: String::new(),
            });
        }
        if gens.len() > u8::MAX as usize {
            return Err(Error::Contract("too many generators".into()));
        }
        let ngens = gens.len();
        let mut index: HashMap<E, u32> = HashMap::new();
        let mut elems = vec![identity.clone()];
        let mut parent: Vec<(u32, u8)> = vec![(0, 0)];
        index.insert(identity, 0);
        let mut right: Vec<u32> = Vec::new();
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            for (s, g) in gens.iter().enumerate() {
                let y = mul(&x, g);
                let id = match index.get(&y) {
                    Some(&i) => i,
                    None => {
                        let i = elems.len() as u32;
                        if elems.len() >= max_order {
                            return Err(Error::Budget {
                                what: "group order",
                                limit: max_order,
                                reached: elems.len() + 1,
                                detail: String::new(),
                            });
                        }
                        index.insert(y.clone(), i);
                        elems.push(y);
                        parent.push((head as u32, s as u8));
                        i
                    }
                };
                right.push(id);
            }
            head += 1;
        }
        let order = elems.len();
        let gen_idx: Vec<Elem> = gens.iter().map(|g| index[g]).collect();
        Ok(Self::from_right_table(
            order, gen_idx, right, &parent, ngens,
        ))
    }

    fn from_right_table(
        order: usize,
        gens: Vec<Elem>,
        right: Vec<u32>,
        parent: &[(u32, u8)],
        ngens: usize,
    ) -> Group {
        let backend = if order <= DENSE_LIMIT {
            let mut table = vec![0u16; order * order];
            for x in 0..order {
                let row = x * order;
                table[row] = x as u16;
                for y in 1..order {
                    let (par, s) = parent[y];
                    let xp = table[row + par as usize] as usize;
                    table[row + y] = right[xp * ngens + s as usize] as u16;
                }
            }
            Backend::Dense(table)
        } else {
            let mut word_start = vec![0u32; order + 1];
            let mut words: Vec<u8> = Vec::new();
            let mut tmp: Vec<Vec<u8>> = vec![Vec::new(); order];
            for y in 1..order {
                let (par, s) = parent[y];
                let mut w = tmp[par as usize].clone();
                w.push(s);
                tmp[y] = w;
            }
            for (y, w) in tmp.iter().enumerate() {
                word_start[y] = words.len() as u32;
                words.extend_from_slice(w);
            }
            word_start[order] = words.len() as u32;
            Backend::Word { word_start, words }
        };
        let mut g = Group {
            order,
            gens,
            right,
            backend,
            inv: Vec::new(),
            elem_order: Vec::new(),
            prime: prime_power_base(order as u64),
            exponent: 1,
        };
        g.fill_orders_and_inverses(parent);
        g
    }

    fn fill_orders_and_inverses(&mut self, parent: &[(u32, u8)]) {
        let n = self.order;
        let mut primes = Vec::new();
        let mut m = n as u64;
        let mut q = 2;
        while q * q <= m {
            if m.is_multiple_of(q) {
                primes.push(q);
                while m.is_multiple_of(q) {
                    m /= q;
                }
            }
            q += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        let orders: Vec<u32> = (0..n as Elem)
            .map(|x| {
                let mut o = n as u64;
                for &q in &primes {
                    while o.is_multiple_of(q) && self.pow_raw(x, o / q) == 0 {
                        o /= q;
                    }
                }
                o as u32
            })
            .collect();
        let gen_inv: Vec<Elem> = self
            .gens
            .iter()
            .map(|&s| self.pow_raw(s, orders[s as usize] as u64 - 1))
            .collect();
        let mut inv = vec![0u32; n];
        for y in 1..n {
            let (par, s) = parent[y];
            inv[y] = self.mul(gen_inv[s as usize], inv[par as usize]);
        }
        self.exponent = orders.iter().fold(1u64, |e, &o| lcm(e, o as u64));
        self.elem_order = orders;
        self.inv = inv;
    }

    fn pow_raw(&self, x: Elem, mut e: u64) -> Elem {
        let mut base = x;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Checks associativity on pseudo-random triples and `x⁻¹x = 1` everywhere.
    pub fn sanity_check(&self, samples: usize) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let n = self.order as u32;
        for _ in 0..samples {
            let (a, b, c) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::Internal(format!(
                    "associativity fails on ({a}, {b}, {c})"
                )));
            }
        }
        for x in 0..n {
            if self.mul(self.inv(x), x) != 0 {
                return Err(Error::Internal(format!("bad inverse for {x}")));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    pub fn backend(&self) -> BackendKind {
        match self.backend {
            Backend::Dense(_) => BackendKind::Dense,
            Backend::Word { .. } => BackendKind::Word,
        }
    }

    /// The prime `p` when `|G|` is a nontrivial power of `p`.
    pub fn prime(&self) -> Option<u32> {
        self.prime
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.backend {
            Backend::Dense(t) => t[a as usize * self.order + b as usize] as Elem,
            Backend::Word { word_start, words } => {
                let ngens = self.gens.len();
                let (lo, hi) = (word_start[b as usize], word_start[b as usize + 1]);
                let mut x = a;
                for &s in &words[lo as usize..hi as usize] {
                    x = self.right[x as usize * ngens + s as usize];
                }
                x
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    pub fn elem_order(&self, a: Elem) -> u32 {
        self.elem_order[a as usize]
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let o = self.elem_order(a) as i64;
        self.pow_raw(a, k.rem_euclid(o) as u64)
    }

    /// `[x, y] = x⁻¹y⁻¹xy`.
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    /// `g⁻¹ x g`.
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_p_group(&self) -> bool {
        self.prime.is_some()
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_members(self.order, [0], Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(self.order, self.elements(), self.gens.clone())
    }

    /// `⟨gens⟩`.
    pub fn subgroup_generated(&self, gens: &[Elem]) -> Subgroup {
        let mut members = vec![0 as Elem];
        let mut seen = fixedbitset::FixedBitSet::with_capacity(self.order);
        seen.insert(0);
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &s in gens {
                let y = self.mul(x, s);
                if !seen.put(y as usize) {
                    members.push(y);
                }
            }
            head += 1;
        }
        let gens: Vec<Elem> = gens.iter().copied().filter(|&g| g != 0).collect();
        Subgroup::from_bitset(seen, gens)
    }

    /// Smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &[Elem]) -> Subgroup {
        self.normal_closure_under(set, &self.gens)
    }

    /// Smallest subgroup containing `set` and normalised by `by`.
    pub fn normal_closure_under(&self, set: &[Elem], by: &[Elem]) -> Subgroup {
        let mut gens: Vec<Elem> = set.iter().copied().filter(|&x| x != 0).collect();
        gens.dedup();
        let mut sub = self.subgroup_generated(&gens);
        loop {
            let mut added = false;
            for &s in by {
                for i in 0..gens.len() {
                    let c = self.conj(gens[i], s);
                    if !sub.contains(c) {
                        gens.push(c);
                        sub = self.subgroup_generated(&gens);
                        added = true;
                    }
                }
            }
            if !added {
                return sub;
            }
        }
    }

    pub fn center(&self) -> Subgroup {
        let members: Vec<Elem> = self
            .elements()
            .filter(|&x| self.gens.iter().all(|&s| self.mul(x, s) == self.mul(s, x)))
            .collect();
        self.subgroup_from_set(&members)
    }

    /// Wraps a set already known to be a subgroup, choosing generators greedily.
    pub fn subgroup_from_set(&self, members: &[Elem]) -> Subgroup {
        let mut gens = Vec::new();
        let mut cur = self.trivial_subgroup();
        for &x in members {
            if !cur.contains(x) {
                gens.push(x);
                cur = self.subgroup_generated(&gens);
            }
        }
        debug_assert_eq!(cur.order(), members.len());
        cur
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.derived_of(&self.whole())
    }

    /// Derived subgroup of `h`.
    pub fn derived_of(&self, h: &Subgroup) -> Subgroup {
        let gens = h.gens();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        self.normal_closure_under(&comms, gens)
    }

    /// `γ_1 = G ⊇ γ_2 = G' ⊇ …`, ending at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            let comms: Vec<Elem> = last
                .gens()
                .iter()
                .flat_map(|&x| self.gens.iter().map(move |&s| (x, s)))
                .map(|(x, s)| self.commutator(x, s))
                .collect();
            let next = self.normal_closure(&comms);
            if next.order() == last.order() {
                return series;
            }
            let done = next.order() == 1;
            series.push(next);
            if done {
                return series;
            }
        }
    }

    /// Nilpotency class, or `None` if the lower central series stalls above 1.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let s = self.lower_central_series();
        (s.last().unwrap().order() == 1).then(|| s.len() - 1)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.gens
            .iter()
            .all(|&s| h.gens().iter().all(|&t| h.contains(self.conj(t, s))))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members: Vec<Elem> = self
            .elements()
            .filter(|&g| h.gens().iter().all(|&t| h.contains(self.conj(t, g))))
            .collect();
        self.subgroup_from_set(&members)
    }

    /// `⋂_g g⁻¹Hg`, computed as a fixpoint over generators.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        let mut cur = h.members().clone();
        loop {
            let mut next = cur.clone();
            for &s in &self.gens {
                for x in cur.ones() {
                    if !cur.contains(self.conj(x as Elem, s) as usize) {
                        next.set(x, false);
                    }
                }
            }
            if next == cur {
                break;
            }
            cur = next;
        }
        let members: Vec<Elem> = cur.ones().map(|x| x as Elem).collect();
        self.subgroup_from_set(&members)
    }

    pub fn exponent_of(&self, h: &Subgroup) -> u64 {
        h.iter().fold(1, |e, x| lcm(e, self.elem_order(x) as u64))
    }

    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        let g = h.gens();
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic_subgroup(&self, h: &Subgroup) -> bool {
        h.iter().any(|x| self.elem_order(x) as usize == h.order())
    }

    /// Minimal number of generators `d(A)` of an abelian p-subgroup: `log_p |A/A^p|`.
    pub fn abelian_rank(&self, a: &Subgroup) -> Result<u32> {
        if !self.is_abelian_subgroup(a) {
            return Err(Error::Contract(
                "abelian_rank needs an abelian subgroup".into(),
            ));
        }
        if a.order() == 1 {
            return Ok(0);
        }
        let p = prime_power_base(a.order() as u64)
            .ok_or_else(|| Error::Contract("abelian_rank needs a p-subgroup".into()))?;
        let mut powers = fixedbitset::FixedBitSet::with_capacity(self.order);
        for x in a.iter() {
            powers.insert(self.pow(x, p as i64) as usize);
        }
        let q = a.order() / powers.count_ones(..);
        log_p(q as u64, p as u64).ok_or_else(|| Error::Internal("|A/A^p| not a p-power".into()))
    }

    /// Elements of order dividing `n` in `h` (for abelian `h` this is a subgroup).
    pub fn omega(&self, h: &Subgroup, n: u64) -> Vec<Elem> {
        h.iter()
            .filter(|&x| n.is_multiple_of(self.elem_order(x) as u64))
            .collect()
    }

    /// Enumerates subgroups containing the normal subgroup `base`, layered by
    /// order `|base|·p^k`, stopping at order `max_order`.
    ///
    /// Each subgroup `H` of order `p·|K|` with `K ⊴ H` arises as `⟨K, g⟩` for
    /// some `g ∈ N_G(K)` with `g^p ∈ K`; for p-groups every subgroup is
    /// reached from `base` this way.
    pub fn subgroups_containing(
        &self,
        base: &Subgroup,
        max_order: usize,
        budget: usize,
    ) -> Result<Vec<Vec<Subgroup>>> {
        let p = self
            .prime
            .ok_or_else(|| Error::Contract("subgroup enumeration requires a p-group".into()))?;
        let mut layers = vec![vec![base.clone()]];
        let mut total = 1usize;
        while layers.last().unwrap()[0].order() * (p as usize) <= max_order.min(self.order) {
            let mut next: Vec<Subgroup> = Vec::new();
            let mut seen: std::collections::HashSet<fixedbitset::FixedBitSet> =
                std::collections::HashSet::new();
            for k in layers.last().unwrap() {
                let norm = self.normalizer(k);
                let mut covered = k.members().clone();
                for g in norm.iter() {
                    if covered.contains(g as usize) || !k.contains(self.pow(g, p as i64)) {
                        continue;
                    }
                    let mut members = k.members().clone();
                    let mut gi = g;
                    for _ in 1..p {
                        for x in k.iter() {
                            members.insert(self.mul(x, gi) as usize);
                        }
                        gi = self.mul(gi, g);
                    }
                    covered.union_with(&members);
                    if seen.insert(members.clone()) {
                        total += 1;
                        if total > budget {
                            return Err(Error::Budget {
                                what: "subgroup count",
                                limit: budget,
                                reached: total,
                                detail: format!(
                                    " (layer of order {}, {} complete layers)",
                                    k.order() * p as usize,
                                    layers.len()
                                ),
                            });
                        }
                        let mut gens = k.gens().to_vec();
                        gens.push(g);
                        next.push(Subgroup::from_bitset(members, gens));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }
        Ok(layers)
    }

    /// Every subgroup of a p-group, layered by order.
    pub fn all_subgroups(&self, budget: usize) -> Result<Vec<Vec<Subgroup>>> {
        self.subgroups_containing(&self.trivial_subgroup(), self.order, budget)
    }

    pub fn normal_subgroups(&self, budget: usize) -> Result<Vec<Subgroup>> {
        Ok(self
            .all_subgroups(budget)?
            .into_iter()
            .flatten()
            .filter(|h| self.is_normal(h))
            .collect())
    }
}

/// `gcd`-based test used by power maps.
pub(crate) fn coprime(a: u64, b: u64) -> bool {
    gcd(a, b) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn perm_group(gens: &[Vec<u32>]) -> Group {
        perm_group_capped(gens, DEFAULT_MAX_ORDER)
    }

    fn perm_group_capped(gens: &[Vec<u32>], cap: usize) -> Group {
        let n = gens[0].len();
        let id: Vec<u32> = (0..n as u32).collect();
        Group::enumerate(
            id,
            gens,
            |a: &Vec<u32>, b: &Vec<u32>| a.iter().map(|&i| b[i as usize]).collect(),
            cap,
        )
        .unwrap()
    }

    fn cyclic(n: u32) -> Group {
        perm_group(&[(0..n).map(|i| (i + 1) % n).collect()])
    }

    #[test]
    fn cyclic_basics() {
        let g = cyclic(9);
        assert_eq!(g.order(), 9);
        assert_eq!(g.exponent(), 9);
        assert_eq!(g.prime(), Some(3));
        assert!(g.is_abelian());
        assert_eq!(g.center().order(), 9);
        assert_eq!(g.derived_subgroup().order(), 1);
        assert_eq!(g.abelian_rank(&g.whole()).unwrap(), 1);
        g.sanity_check(100).unwrap();
    }

    #[test]
    fn elementary_abelian_rank() {
        let g = perm_group(&[vec![1, 2, 0, 3, 4, 5], vec![0, 1, 2, 4, 5, 3]]);
        assert_eq!(g.order(), 9);
        assert_eq!(g.abelian_rank(&g.whole()).unwrap(), 2);
        let subs = g.all_subgroups(1000).unwrap();
        let counts: Vec<usize> = subs.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 4, 1]);
    }

    #[test]
    fn word_backend_agrees_with_dense() {
        let n1 = 71u32;
        let n2 = 73u32;
        let mut a: Vec<u32> = (0..n1).map(|i| (i + 1) % n1).collect();
        a.extend(n1..n1 + n2);
        let mut b: Vec<u32> = (0..n1).collect();
        b.extend((0..n2).map(|i| n1 + (i + 1) % n2));
        let g = perm_group_capped(&[a, b], HARD_MAX_ORDER);
        assert_eq!(g.order(), 5183);
        assert_eq!(g.backend(), BackendKind::Word);
        g.sanity_check(200).unwrap();
        assert_eq!(g.exponent(), 5183);
    }

    #[test]
    fn order_cap_is_enforced() {
        let n = 20u32;
        let id: Vec<u32> = (0..n).collect();
        let c: Vec<u32> = (0..n).map(|i| (i + 1) % n).collect();
        let t: Vec<u32> = (0..n).map(|i| if i < 2 { 1 - i } else { i }).collect();
        let err = Group::enumerate(
            id,
            &[c, t],
            |a: &Vec<u32>, b: &Vec<u32>| a.iter().map(|&i| b[i as usize]).collect(),
            100,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power_base(243), Some(3));
        assert_eq!(prime_power_base(15625), Some(5));
        assert_eq!(prime_power_base(12), None);
        assert_eq!(prime_power_base(1), None);
        assert_eq!(log_p(3125, 5), Some(5));
        assert_eq!(log_p(30, 5), None);
    }
}
