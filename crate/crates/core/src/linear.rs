use alloc::collections::btree_map::{self, BTreeMap};

use num_traits::Zero;

use crate::Scalar;

/// Finite formal sum with exact coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Terms<K: Ord> {
    map: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for Terms<K> {
    fn default() -> Self {
        Self { map: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Terms<K> {
    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.map.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.map {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::default();
        }
        Self {
            map: self.map.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            map: self.map.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn get(&self, key: &K) -> Option<&Scalar> {
        self.map.get(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn retain(&mut self, f: impl FnMut(&K, &mut Scalar) -> bool) {
        self.map.retain(f);
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Terms<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut t = Self::default();
        for (k, c) in iter {
            t.add_term(k, c);
        }
        t
    }
}
