use std::fmt;

use super::KernelError;

/// The prime field GF(p). Elements are represented by `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u32;
    while k.saturating_mul(k) <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, KernelError> {
        if !is_prime(p) || p > 1 << 16 {
            return Err(KernelError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// GF(p) for the smallest prime `p >= q` (and `p >= 2`).
    pub fn at_least(q: usize) -> Self {
        let mut p = q.max(2) as u32;
        while !is_prime(p) {
            p += 1;
        }
        PrimeField { p }
    }

    pub fn p(self) -> u32 {
        self.p
    }

    /// Reduces any integer into the field.
    pub fn elem(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// If `a` is zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p as u64 - 2)
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_prime() {
        assert_eq!(PrimeField::at_least(1).p(), 2);
        assert_eq!(PrimeField::at_least(3).p(), 3);
        assert_eq!(PrimeField::at_least(4).p(), 5);
        assert_eq!(PrimeField::at_least(8).p(), 11);
        assert!(PrimeField::new(9).is_err());
    }

    #[test]
    fn arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.elem(-1), 6);
        assert_eq!(f.mul(3, 5), 1);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.pow(3, 6), 1);
    }
}
