//! Finite fields `GF(p^f)` with elements numbered `0..p^f`.
//!
//! Element `x` stands for the polynomial whose coefficients are the base-`p`
//! digits of `x`, constant term first. Multiplication goes through
//! exponent/logarithm tables for a fixed primitive element `u`.

use crate::error::{input, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    f: u32,
    q: u32,
    /// Coefficients of the monic modulus, constant term first, leading 1 omitted.
    modulus: Vec<u32>,
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, f)` with `q = p^f`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut r, mut f) = (q, 0);
    while r % p == 0 {
        r /= p;
        f += 1;
    }
    (r == 1).then_some((p as u32, f))
}

fn digits(mut x: u32, p: u32, f: u32) -> Vec<u32> {
    (0..f)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Product of two residues modulo the monic polynomial `x^f + modulus`.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let f = modulus.len();
    let mut prod = vec![0u32; 2 * f];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (f..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        // x^k = x^(k-f) * x^f = -x^(k-f) * modulus
        for (i, &m) in modulus.iter().enumerate() {
            prod[k - f + i] = (prod[k - f + i] + (p - c) * m) % p;
        }
    }
    prod.truncate(f);
    prod
}

/// Trial division by every monic polynomial of degree `1..=f/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let f = modulus.len();
    let mut full: Vec<u32> = modulus.to_vec();
    full.push(1);
    for deg in 1..=f / 2 {
        let count = (p as u64).pow(deg as u32);
        for low in 0..count {
            let mut div = digits(low as u32, p, deg as u32);
            div.push(1);
            if poly_rem(&full, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(a: &[u32], monic: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let d = monic.len() - 1;
    while r.len() > d {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        if c != 0 {
            for (i, &m) in monic.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * m % p) % p;
            }
        }
        r.pop();
    }
    r
}

impl Field {
    pub fn new(p: u32, f: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return input(format!("{p} is not prime"));
        }
        if f == 0 {
            return input("field degree must be at least 1");
        }
        let q64 = (p as u64).checked_pow(f).filter(|&q| q <= 1 << 24);
        let Some(q64) = q64 else { return input(format!("field {p}^{f} is too large")) };
        let q = q64 as u32;
        let modulus = (0..q)
            .map(|low| digits(low, p, f))
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");
        let mut field = Field { p, f, q, modulus, primitive: 0, exp: Vec::new(), log: Vec::new() };
        for cand in 1..q {
            if let Some(exp) = field.power_table(cand) {
                let mut log = vec![0; q as usize];
                for (i, &x) in exp.iter().enumerate() {
                    log[x as usize] = i as u32;
                }
                field.primitive = cand;
                field.exp = exp;
                field.log = log;
                return Ok(field);
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    /// Field of order `q`.
    pub fn of_order(q: u64) -> Result<Field> {
        match prime_power(q) {
            Some((p, f)) => Field::new(p, f),
            None => input(format!("{q} is not a prime power")),
        }
    }

    /// Powers `c^0 .. c^(q-2)` if `c` generates the multiplicative group.
    fn power_table(&self, c: u32) -> Option<Vec<u32>> {
        let cd = digits(c, self.p, self.f);
        let mut cur = digits(1, self.p, self.f);
        let mut out = Vec::with_capacity(self.q as usize - 1);
        for _ in 0..self.q - 1 {
            let v = undigits(&cur, self.p);
            if v == 1 && !out.is_empty() {
                return None;
            }
            out.push(v);
            cur = poly_mulmod(&cur, &cd, &self.modulus, self.p);
        }
        (undigits(&cur, self.p) == 1).then_some(out)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The modulus, constant term first, including the leading 1.
    pub fn modulus(&self) -> Vec<u32> {
        let mut m = self.modulus.clone();
        m.push(1);
        m
    }

    /// The fixed multiplicative generator `u`.
    pub fn primitive(&self) -> u32 {
        self.primitive
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.f == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.f {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        for _ in 0..self.f {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[s as usize]
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        let l = self.log[a as usize];
        self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (e % (self.q as u64 - 1));
        self.exp[(l % (self.q as u64 - 1)) as usize]
    }

    /// `u^k` for the fixed primitive element.
    pub fn exp(&self, k: u64) -> u32 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    /// `a -> a^p` as a permutation of element indices.
    pub fn frobenius_perm(&self) -> Permutation {
        Permutation::from_images_unchecked((0..self.q).map(|a| self.frobenius(a)).collect())
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> u64 {
        let l = self.log[a as usize] as u64;
        (self.q as u64 - 1) / crate::perm::gcd(l, self.q as u64 - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::gcd;

    #[test]
    fn small_fields() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.primitive(), 1);
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(f9.mult_order(f9.primitive()), 8);
        assert!(Field::new(4, 1).is_err());
        assert!(Field::of_order(6).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for &(p, f) in &[(2, 3), (3, 2), (5, 1), (2, 4), (7, 2)] {
            let k = Field::new(p, f).unwrap();
            let q = k.q();
            for a in 0..q {
                assert_eq!(k.add(a, k.neg(a)), 0);
                if a != 0 {
                    assert_eq!(k.mul(a, k.inv(a)), 1);
                }
                for b in 0..q {
                    for c in [0, 1, q - 1, k.primitive()] {
                        let lhs = k.mul(a, k.add(b, c));
                        let rhs = k.add(k.mul(a, b), k.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn suzuki_twist_squares_to_frobenius_squared() {
        // q = 8, r = 4: theta(a) = a^4 and theta^2 = pi
        let k = Field::new(2, 3).unwrap();
        for a in 0..8 {
            let theta = |x| k.pow(x, 4);
            assert_eq!(theta(theta(a)), k.frobenius(a));
        }
    }

    #[test]
    fn frobenius_fixed_points() {
        for &(p, f) in &[(2, 6), (3, 4), (5, 2), (2, 5)] {
            let k = Field::new(p, f).unwrap();
            let pi = k.frobenius_perm();
            for d in 1..=2 * f as i64 {
                let fix = pi.pow(d).fixed_points() as u64;
                assert_eq!(fix, (p as u64).pow(gcd(d as u64, f as u64) as u32));
            }
        }
    }

    #[test]
    fn frobenius_parities() {
        assert_eq!(Field::new(2, 2).unwrap().frobenius_perm().parity(), 1);
        let pi8 = Field::new(2, 3).unwrap().frobenius_perm();
        assert_eq!(pi8.cycle_type(), vec![1, 1, 3, 3]);
        assert_eq!(pi8.parity(), 0);
        assert_eq!(Field::new(3, 2).unwrap().frobenius_perm().parity(), 1);
    }
}
