use crate::error::{Error, Result};

/// A permutation of {0, ..., n-1} stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for (i, &v) in map.iter().enumerate() {
            if v >= n {
                return Err(Error::EntryRange {
                    index: i,
                    value: v,
                    size: n,
                });
            }
            if seen[v] {
                return Err(Error::NotPermutation { value: v });
            }
            seen[v] = true;
        }
        Ok(Perm { map })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            map: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Perm { map: inv }
    }

    /// self after `other`: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        Perm {
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Least k >= 1 with self^k = id.
    pub fn order(&self) -> u64 {
        let mut k = 1u64;
        let mut p = self.clone();
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// self^e for any integer exponent, using the order for negatives.
    pub fn pow(&self, e: i64) -> Perm {
        let o = self.order() as i64;
        let mut k = ((e % o) + o) % o;
        let mut acc = Perm::identity(self.len());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }
}
