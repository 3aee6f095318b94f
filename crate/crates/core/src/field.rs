//! Small finite fields GF(p^e) for e in {1, 2, 3}, q = p^e up to 10^4.
//!
//! Elements are dense indices 0..q read as base-p digit vectors, digit i being
//! the coefficient of x^i. Extension fields reduce modulo the
//! lexicographically smallest monic irreducible polynomial of degree e
//! (coefficients compared high degree first), so a given q always produces
//! the same table. For degrees 2 and 3 irreducibility is exactly
//! root-freeness over GF(p).
//!
//! Storage is O(q); `addition_table`/`multiplication_table` materialize the
//! full q x q tables on demand for axiom spot checks on small fields.

use thiserror::Error;

pub const MAX_FIELD_SIZE: usize = 10_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("field size {0} exceeds the supported maximum {MAX_FIELD_SIZE}")]
    TooLarge(usize),
    #[error("{0} is not a prime power p^e with e in 1..=3")]
    NotPrimePower(usize),
}

/// Arithmetic tables for one finite field.
#[derive(Clone, Debug)]
pub struct FieldTable {
    q: usize,
    p: usize,
    e: u32,
    /// Low coefficients c_0..c_{e-1} of the monic reduction polynomial
    /// x^e + c_{e-1} x^{e-1} + ... + c_0. Empty for prime fields.
    poly: Vec<usize>,
    nonzero_square: Vec<bool>,
}

impl FieldTable {
    /// Builds GF(q). Errors unless q = p^e with p prime, e in 1..=3, q ≤ 10^4.
    pub fn build(q: usize) -> Result<Self, FieldError> {
        if q > MAX_FIELD_SIZE {
            return Err(FieldError::TooLarge(q));
        }
        let (p, e) = factor_prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        let poly = if e == 1 { Vec::new() } else { smallest_irreducible(p, e) };
        let mut table = FieldTable { q, p, e, poly, nonzero_square: vec![false; q] };
        for x in 1..q {
            let sq = table.mul(x, x);
            table.nonzero_square[sq] = true;
        }
        Ok(table)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn characteristic(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Low coefficients of the reduction polynomial; empty for prime fields.
    pub fn reduction_polynomial(&self) -> &[usize] {
        &self.poly
    }

    #[inline]
    fn digits(&self, a: usize) -> [usize; 3] {
        match self.e {
            1 => [a, 0, 0],
            2 => [a % self.p, a / self.p, 0],
            _ => [a % self.p, a / self.p % self.p, a / (self.p * self.p)],
        }
    }

    #[inline]
    fn from_digits(&self, d: [usize; 3]) -> usize {
        d[0] + d[1] * self.p + d[2] * self.p * self.p
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.q && b < self.q);
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut out = [0usize; 3];
        for i in 0..self.e as usize {
            out[i] = (x[i] + y[i]) % self.p;
        }
        self.from_digits(out)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        debug_assert!(a < self.q);
        if self.e == 1 {
            return (self.p - a) % self.p;
        }
        let x = self.digits(a);
        let mut out = [0usize; 3];
        for i in 0..self.e as usize {
            out[i] = (self.p - x[i]) % self.p;
        }
        self.from_digits(out)
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.q && b < self.q);
        if self.e == 1 {
            return a * b % self.p;
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let e = self.e as usize;
        // Coefficient convolution, degree up to 2e-2.
        let mut c = [0usize; 5];
        for i in 0..e {
            for j in 0..e {
                c[i + j] += x[i] * y[j];
            }
        }
        // Fold x^k for k >= e using x^e = -(c_{e-1} x^{e-1} + ... + c_0).
        for k in (e..2 * e - 1).rev() {
            let coeff = c[k] % self.p;
            c[k] = 0;
            if coeff == 0 {
                continue;
            }
            for (j, &pc) in self.poly.iter().enumerate() {
                c[k - e + j] += coeff * (self.p - pc) % (self.p * self.p);
            }
        }
        let mut out = [0usize; 3];
        for i in 0..e {
            out[i] = c[i] % self.p;
        }
        self.from_digits(out)
    }

    /// True when a is a nonzero square, i.e. a quadratic residue.
    #[inline]
    pub fn is_nonzero_square(&self, a: usize) -> bool {
        debug_assert!(a < self.q);
        self.nonzero_square[a]
    }

    /// Smallest element that is not a square (and not zero), if any. Every
    /// odd-order field has one.
    pub fn smallest_non_residue(&self) -> Option<usize> {
        (1..self.q).find(|&a| !self.nonzero_square[a])
    }

    /// Full q x q addition table. Quadratic in q; meant for spot checks on
    /// small fields.
    pub fn addition_table(&self) -> Vec<Vec<usize>> {
        (0..self.q).map(|a| (0..self.q).map(|b| self.add(a, b)).collect()).collect()
    }

    /// Full q x q multiplication table. Quadratic in q; meant for spot checks
    /// on small fields.
    pub fn multiplication_table(&self) -> Vec<Vec<usize>> {
        (0..self.q).map(|a| (0..self.q).map(|b| self.mul(a, b)).collect()).collect()
    }
}

fn factor_prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    for e in 1..=3u32 {
        let p = match e {
            1 => q,
            2 => (q as f64).sqrt().round() as usize,
            _ => (q as f64).cbrt().round() as usize,
        };
        if p.checked_pow(e) == Some(q) && is_prime(p) {
            return Some((p, e));
        }
    }
    None
}

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Low coefficients of the lexicographically smallest monic irreducible
/// polynomial of degree e over GF(p), comparing high-degree coefficients
/// first. Only degrees 2 and 3, where irreducible = root-free.
fn smallest_irreducible(p: usize, e: u32) -> Vec<usize> {
    let e = e as usize;
    let count = p.pow(e as u32);
    for m in 0..count {
        let mut coeffs = vec![0usize; e];
        let mut rest = m;
        // m's base-p digits, most significant digit = highest coefficient.
        for c in coeffs.iter_mut() {
            *c = rest % p;
            rest /= p;
        }
        let has_root = (0..p).any(|x| {
            let mut val = 1usize; // leading monic term, Horner from the top
            for i in (0..e).rev() {
                val = (val * x + coeffs[i]) % p;
            }
            val == 0
        });
        if !has_root {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of degree 2 and 3 exist over every prime field")
}
