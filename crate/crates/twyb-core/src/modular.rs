use crate::error::{Error, Result};
use num_integer::Integer;

/// The coefficient module Z/N together with the distinguished unit u that
/// realizes the T-action.  All exponents of u are taken modulo the
/// multiplicative order of u, so negative powers are always defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientModule {
    modulus: u64,
    unit: u64,
    /// Multiplicative order of `unit` mod `modulus`.
    order: u64,
    /// unit^0, unit^1, ..., unit^(order-1), all reduced.
    powers: Vec<u64>,
}

impl CoefficientModule {
    pub fn new(modulus: u64, unit: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::BadModulus {
                modulus,
                reason: "modulus must be at least 2",
            });
        }
        let unit = unit % modulus;
        if unit.gcd(&modulus) != 1 {
            return Err(Error::UnitNotInvertible { unit, modulus });
        }
        let mut powers = vec![1u64];
        let mut p = unit;
        while p != 1 {
            powers.push(p);
            p = p * unit % modulus;
            if powers.len() as u64 > modulus {
                // cannot happen for a unit, but guard against a logic slip
                return Err(Error::UnitNotInvertible { unit, modulus });
            }
        }
        let order = powers.len() as u64;
        Ok(CoefficientModule {
            modulus,
            unit,
            order,
            powers,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn unit(&self) -> u64 {
        self.unit
    }

    /// Multiplicative order of the unit.
    pub fn unit_order(&self) -> u64 {
        self.order
    }

    pub fn is_prime_modulus(&self) -> bool {
        is_prime(self.modulus)
    }

    pub fn reduce(&self, a: i128) -> u64 {
        let m = self.modulus as i128;
        (((a % m) + m) % m) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.modulus
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.modulus - b % self.modulus) % self.modulus
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.modulus - a % self.modulus) % self.modulus
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    /// u^e for any (possibly negative) exponent.
    pub fn unit_pow(&self, e: i64) -> u64 {
        let o = self.order as i64;
        let idx = ((e % o) + o) % o;
        self.powers[idx as usize]
    }

    /// Multiplicative inverse, defined only for residues coprime to N.
    pub fn inv(&self, a: u64) -> Option<u64> {
        inv_mod(a % self.modulus, self.modulus)
    }

    /// Scale a residue by u^e.
    pub fn act(&self, e: i64, a: u64) -> u64 {
        self.mul(self.unit_pow(e), a)
    }
}

/// Modular inverse via the extended euclidean algorithm.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    let egcd = (a as i128).extended_gcd(&(n as i128));
    if egcd.gcd != 1 {
        return None;
    }
    let n = n as i128;
    Some((((egcd.x % n) + n) % n) as u64)
}

/// Trial-division primality, plenty for the module sizes in play.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
