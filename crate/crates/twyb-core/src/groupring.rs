use crate::modular::CoefficientModule;
use std::collections::BTreeMap;

/// An element of the integral group ring Z[M] for M = Z/N: a formal integer
/// combination of residues.  State sums land here, with coefficients
/// counting colorings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    modulus: u64,
    coeffs: BTreeMap<u64, i64>,
}

impl GroupRingElement {
    pub fn zero(modulus: u64) -> Self {
        GroupRingElement {
            modulus,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn add_term(&mut self, element: u64, count: i64) {
        let e = element % self.modulus;
        let c = self.coeffs.entry(e).or_insert(0);
        *c += count;
        if *c == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn add(&mut self, other: &GroupRingElement) {
        assert_eq!(self.modulus, other.modulus);
        for (&e, &c) in &other.coeffs {
            self.add_term(e, c);
        }
    }

    pub fn scale(&mut self, k: i64) {
        if k == 0 {
            self.coeffs.clear();
            return;
        }
        for c in self.coeffs.values_mut() {
            *c *= k;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, element: u64) -> i64 {
        self.coeffs
            .get(&(element % self.modulus))
            .copied()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// Total coefficient mass; for a state sum this is the number of
    /// colorings.
    pub fn total(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// The T-action: [m] -> [u m] on every group element.
    pub fn t_shift(&self, module: &CoefficientModule) -> GroupRingElement {
        assert_eq!(self.modulus, module.modulus());
        let mut out = GroupRingElement::zero(self.modulus);
        for (&e, &c) in &self.coeffs {
            out.add_term(module.mul(module.unit(), e), c);
        }
        out
    }

    /// Canonical representative of the orbit under the T-action: the
    /// lexicographically least serialization among all shifts.
    pub fn normalize_up_to_t(&self, module: &CoefficientModule) -> GroupRingElement {
        let mut best = self.clone();
        let mut cur = self.clone();
        for _ in 1..module.unit_order() {
            cur = cur.t_shift(module);
            if key(&cur) < key(&best) {
                best = cur.clone();
            }
        }
        best
    }
}

fn key(e: &GroupRingElement) -> Vec<(u64, i64)> {
    e.coeffs.iter().map(|(&a, &b)| (a, b)).collect()
}

impl std::fmt::Display for GroupRingElement {
    /// `c1*[m1] + c2*[m2] + ...` with group elements ascending; `0` when
    /// empty.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, &c) in &self.coeffs {
            if first {
                first = false;
            } else {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*[{e}]")?;
        }
        Ok(())
    }
}
