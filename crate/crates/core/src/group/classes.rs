use fixedbitset::FixedBitSet;

use super::{coprime, Elem, Group};

#[derive(Debug, Clone)]
pub struct ConjClass {
    /// Least member index.
    pub rep: Elem,
    pub size: usize,
    pub members: FixedBitSet,
    pub elem_order: u32,
}

/// Conjugacy classes with element-to-class lookup and power maps.
#[derive(Debug, Clone)]
pub struct ClassData {
    pub classes: Vec<ConjClass>,
    class_of: Vec<u32>,
    inverse: Vec<u32>,
    exponent: u64,
    prime: Option<u32>,
    /// `power[k]` for `k` coprime to `e` (empty otherwise).
    power: Vec<Vec<u32>>,
    p_power: Option<Vec<u32>>,
}

/// Conjugacy classes sorted by `(size, least member)`, so the identity class is 0.
pub fn conjugacy_classes(g: &Group) -> ClassData {
    let n = g.order();
    let mut class_of = vec![u32::MAX; n];
    let mut raw: Vec<(Vec<Elem>, Elem)> = Vec::new();
    for x in g.elements() {
        if class_of[x as usize] != u32::MAX {
            continue;
        }
        let id = raw.len() as u32;
        class_of[x as usize] = id;
        let mut orbit = vec![x];
        let mut head = 0;
        while head < orbit.len() {
            let y = orbit[head];
            for &s in g.gens() {
                let z = g.conj(y, s);
                if class_of[z as usize] == u32::MAX {
                    class_of[z as usize] = id;
                    orbit.push(z);
                }
            }
            head += 1;
        }
        raw.push((orbit, x));
    }
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&i| (raw[i].0.len(), raw[i].1));
    let mut relabel = vec![0u32; raw.len()];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new as u32;
    }
    for c in class_of.iter_mut() {
        *c = relabel[*c as usize];
    }
    let classes: Vec<ConjClass> = order
        .iter()
        .map(|&i| {
            let (members, rep) = &raw[i];
            let mut bits = FixedBitSet::with_capacity(n);
            for &m in members {
                bits.insert(m as usize);
            }
            ConjClass {
                rep: *rep,
                size: members.len(),
                members: bits,
                elem_order: g.elem_order(*rep),
            }
        })
        .collect();
    let inverse = classes
        .iter()
        .map(|c| class_of[g.inv(c.rep) as usize])
        .collect();
    let e = g.exponent();
    let map_for = |k: u64| -> Vec<u32> {
        classes
            .iter()
            .map(|c| class_of[g.pow(c.rep, k as i64) as usize])
            .collect()
    };
    let power = (0..e)
        .map(|k| {
            if coprime(k, e) {
                map_for(k)
            } else {
                Vec::new()
            }
        })
        .collect();
    let p_power = g.prime().map(|p| map_for(p as u64));
    ClassData {
        classes,
        class_of,
        inverse,
        exponent: e,
        prime: g.prime(),
        power,
        p_power,
    }
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x as usize] as usize
    }

    pub fn class_of_map(&self) -> &[u32] {
        &self.class_of
    }

    /// Class of `g⁻¹` for `g` in class `i`.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Class map `g ↦ g^k`. Defined for `k` coprime to `e` and for `k = p`.
    pub fn power_map(&self, k: i64) -> Option<&[u32]> {
        let e = self.exponent as i64;
        let r = k.rem_euclid(e) as u64;
        if coprime(r, self.exponent) {
            return Some(&self.power[r as usize]);
        }
        match (self.prime, &self.p_power) {
            (Some(p), Some(m)) if k == p as i64 => Some(m),
            _ => None,
        }
    }

    /// Units of `Z/e` in increasing order.
    pub fn units(&self) -> Vec<u64> {
        (1..self.exponent.max(2))
            .filter(|&k| coprime(k, self.exponent))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Group, DEFAULT_MAX_ORDER};
    use super::*;

    fn perm_group(gens: &[Vec<u32>]) -> Group {
        let n = gens[0].len();
        let id: Vec<u32> = (0..n as u32).collect();
        Group::enumerate(
            id,
            gens,
            |a: &Vec<u32>, b: &Vec<u32>| a.iter().map(|&i| b[i as usize]).collect(),
            DEFAULT_MAX_ORDER,
        )
        .unwrap()
    }

    #[test]
    fn cyclic_nine_has_singleton_classes() {
        let g = perm_group(&[(0..9).map(|i| (i + 1) % 9).collect()]);
        let cd = conjugacy_classes(&g);
        assert_eq!(cd.len(), 9);
        assert!(cd.classes.iter().all(|c| c.size == 1));
        assert_eq!(cd.power_map(1).unwrap(), (0..9).collect::<Vec<u32>>());
        assert!(cd.power_map(3).is_some());
        assert!(cd.power_map(6).is_none());
    }

    #[test]
    fn s3_like_orbit_sizes_divide_order() {
        // C3 wr C3 on 9 points, order 81
        let a: Vec<u32> = vec![1, 2, 0, 3, 4, 5, 6, 7, 8];
        let b: Vec<u32> = vec![3, 4, 5, 6, 7, 8, 0, 1, 2];
        let g = perm_group(&[a, b]);
        assert_eq!(g.order(), 81);
        let cd = conjugacy_classes(&g);
        assert_eq!(cd.sizes().iter().sum::<usize>(), 81);
        assert!(cd.sizes().iter().all(|s| 81 % s == 0));
        assert_eq!(cd.classes[0].rep, 0);
        for i in 0..cd.len() {
            assert_eq!(cd.inverse_class(cd.inverse_class(i)), i);
        }
    }
}
