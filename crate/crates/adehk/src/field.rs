//! Arithmetic in F_p and in the quadratic extension F_{p^2}.
//!
//! Elements are pairs `(a, b)` representing `a + b*s` where `s^2` equals a
//! fixed non-residue; over the prime field the second component is always 0.
//! The extension is used for catalog entries whose generators mention the
//! imaginary unit when `p = 3 mod 4`.

use serde::{Deserialize, Serialize};

pub type Elem = (u64, u64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Field {
    p: u64,
    /// `Some(n)` for F_{p^2} = F_p[s]/(s^2 - n), `None` for the prime field.
    nonresidue: Option<u64>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Self {
        assert!(is_prime(p), "modulus {p} is not prime");
        Self { p, nonresidue: None }
    }

    pub fn quadratic(p: u64, nonresidue: u64) -> Self {
        assert!(is_prime(p), "modulus {p} is not prime");
        let f = Self {
            p,
            nonresidue: Some(nonresidue % p),
        };
        assert!(
            !(0..p).any(|x| x * x % p == nonresidue % p),
            "{nonresidue} is a square mod {p}"
        );
        f
    }

    /// Smallest field of characteristic `p` containing a square root of -1,
    /// together with that root.
    pub fn with_imaginary_unit(p: u64) -> (Self, Elem) {
        assert!(is_prime(p), "modulus {p} is not prime");
        if p == 2 {
            return (Self::prime(2), (1, 0));
        }
        if let Some(i) = (0..p).find(|&x| x * x % p == p - 1) {
            (Self::prime(p), (i, 0))
        } else {
            // p = 3 mod 4: -1 is a non-residue
            (Self::quadratic(p, p - 1), (0, 1))
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_extension(&self) -> bool {
        self.nonresidue.is_some()
    }

    pub fn zero(&self) -> Elem {
        (0, 0)
    }

    pub fn one(&self) -> Elem {
        (1, 0)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        let p = self.p as i64;
        (((n % p + p) % p) as u64, 0)
    }

    pub fn is_zero(&self, a: Elem) -> bool {
        a == (0, 0)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        ((a.0 + b.0) % self.p, (a.1 + b.1) % self.p)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        ((self.p - a.0) % self.p, (self.p - a.1) % self.p)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p;
        match self.nonresidue {
            None => (a.0 * b.0 % p, 0),
            Some(n) => {
                // (a0 + a1 s)(b0 + b1 s), s^2 = n
                let re = (a.0 * b.0 + a.1 * b.1 % p * n) % p;
                let im = (a.0 * b.1 + a.1 * b.0) % p;
                (re, im)
            }
        }
    }

    fn inv_prime(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        // Fermat
        let mut result = 1u64;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: Elem) -> Elem {
        assert!(!self.is_zero(a), "inverse of zero");
        match self.nonresidue {
            None => (self.inv_prime(a.0), 0),
            Some(n) => {
                // (a0 + a1 s)^-1 = (a0 - a1 s) / (a0^2 - n a1^2)
                let p = self.p;
                let norm = (a.0 * a.0 % p + p * p - n * (a.1 * a.1 % p) % p) % p;
                let ninv = self.inv_prime(norm);
                (a.0 * ninv % p, (p - a.1) % p * ninv % p)
            }
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7);
        assert_eq!(f.add(f.from_i64(5), f.from_i64(4)), f.from_i64(2));
        assert_eq!(f.mul(f.from_i64(3), f.from_i64(5)), f.from_i64(1));
        assert_eq!(f.inv(f.from_i64(3)), f.from_i64(5));
        assert_eq!(f.from_i64(-1), (6, 0));
    }

    #[test]
    fn imaginary_unit_1_mod_4() {
        let (f, i) = Field::with_imaginary_unit(13);
        assert!(!f.is_extension());
        assert_eq!(f.mul(i, i), f.from_i64(-1));
    }

    #[test]
    fn imaginary_unit_3_mod_4() {
        let (f, i) = Field::with_imaginary_unit(7);
        assert!(f.is_extension());
        assert_eq!(f.mul(i, i), f.from_i64(-1));
        // every nonzero element inverts
        for a in 0..7 {
            for b in 0..7 {
                if (a, b) != (0, 0) {
                    assert_eq!(f.mul((a, b), f.inv((a, b))), f.one());
                }
            }
        }
    }

    #[test]
    #[should_panic]
    fn rejects_composite() {
        Field::prime(15);
    }
}
