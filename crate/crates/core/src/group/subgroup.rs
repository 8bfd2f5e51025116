use fixedbitset::FixedBitSet;

use super::Elem;

/// A subgroup stored as a membership bitset plus a generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
    gens: Vec<Elem>,
}

impl Subgroup {
    pub(crate) fn from_bitset(members: FixedBitSet, gens: Vec<Elem>) -> Self {
        let order = members.count_ones(..);
        Subgroup {
            members,
            order,
            gens,
        }
    }

    pub(crate) fn from_members(
        group_order: usize,
        members: impl IntoIterator<Item = Elem>,
        gens: Vec<Elem>,
    ) -> Self {
        let mut bits = FixedBitSet::with_capacity(group_order);
        for x in members {
            bits.insert(x as usize);
        }
        Self::from_bitset(bits, gens)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(|x| x as Elem)
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> FixedBitSet {
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        m
    }
}
