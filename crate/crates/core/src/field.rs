//! Finite fields `GF(p^f)` with fixed moduli, and matrices over them.
//!
//! An element is stored as the integer `c_0 + c_1 p + .. + c_{f-1} p^{f-1}`
//! encoding the polynomial `c_0 + c_1 x + ..` modulo the field's modulus.
//! Zero is 0 and one is 1.

use crate::error::{Error, Result};
use crate::structure::is_prime;

/// Moduli, lowest coefficient first, leading coefficient 1 omitted.
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),             // x^2 + x + 1
    (2, 3, &[1, 1, 0]),          // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0]),       // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0]),    // x^5 + x^2 + 1
    (2, 6, &[1, 1, 0, 1, 1, 0]), // x^6 + x^4 + x^3 + x + 1
    (3, 2, &[2, 2]),             // x^2 + 2x + 2
    (3, 3, &[1, 2, 0]),          // x^3 + 2x + 1
    (5, 2, &[2, 4]),             // x^2 + 4x + 2
    (7, 2, &[3, 6]),             // x^2 + 6x + 3
    (11, 2, &[2, 7]),            // x^2 + 7x + 2
];

/// Largest supported field size.
pub const MAX_FIELD_ORDER: u32 = 1 << 12;

pub type Fe = u32;

#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    f: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<Fe>,
    neg: Vec<Fe>,
    exp: Vec<Fe>,
    log: Vec<u32>,
}

impl Field {
    /// The field with `q` elements, `q` a prime power.
    pub fn new(q: u32) -> Result<Self> {
        let (p, f) = prime_power(q)
            .ok_or_else(|| Error::UnsupportedParams(format!("{q} is not a prime power")))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::UnsupportedParams(format!(
                "field order {q} exceeds {MAX_FIELD_ORDER}"
            )));
        }
        let modulus = if f == 1 {
            vec![0]
        } else {
            MODULI
                .iter()
                .find(|(mp, mf, _)| *mp == p && *mf == f)
                .map(|(_, _, m)| m.to_vec())
                .ok_or_else(|| Error::UnsupportedParams(format!("no modulus stored for GF({q})")))?
        };
        let mut field = Field {
            p,
            f,
            q,
            modulus,
            add: Vec::new(),
            neg: Vec::new(),
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables()?;
        Ok(field)
    }

    fn coeffs(&self, a: Fe) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.f as usize);
        let mut x = a;
        for _ in 0..self.f {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    fn from_coeffs(&self, c: &[u32]) -> Fe {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    /// Polynomial product reduced by the modulus, used only to build tables.
    fn slow_mul(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        let f = self.f as usize;
        if f == 1 {
            return (a * b) % p;
        }
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let mut prod = vec![0u32; 2 * f - 1];
        for i in 0..f {
            for j in 0..f {
                prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            }
        }
        // x^f = -(m_0 + m_1 x + ..)
        for d in (f..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (k, &m) in self.modulus.iter().enumerate() {
                let idx = d - f + k;
                prod[idx] = (prod[idx] + (p - (c * m) % p)) % p;
            }
        }
        self.from_coeffs(&prod[..f])
    }

    fn build_tables(&mut self) -> Result<()> {
        let q = self.q as usize;
        self.add = vec![0; q * q];
        for a in 0..q as u32 {
            let ca = self.coeffs(a);
            for b in 0..q as u32 {
                let cb = self.coeffs(b);
                let s: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
                self.add[a as usize * q + b as usize] = self.from_coeffs(&s);
            }
        }
        self.neg = (0..q)
            .map(|a| {
                (0..q as u32)
                    .find(|&b| self.add[a * q + b as usize] == 0)
                    .expect("additive inverse")
            })
            .collect();
        // smallest primitive element
        for g in 2..q as u32 {
            let mut exp = Vec::with_capacity(q - 1);
            let mut x = 1;
            loop {
                exp.push(x);
                x = self.slow_mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() == q - 1 {
                let mut log = vec![0u32; q];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                self.exp = exp;
                self.log = log;
                return Ok(());
            }
        }
        if q == 2 {
            self.exp = vec![1];
            self.log = vec![0, 0];
            return Ok(());
        }
        Err(Error::Internal(format!(
            "modulus for GF({}) is not irreducible",
            self.q
        )))
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    /// Modulus coefficients, lowest first, without the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }

    pub fn inv(&self, a: Fe) -> Fe {
        assert!(a != 0, "zero has no inverse");
        let n = self.q - 1;
        self.exp[((n - self.log[a as usize]) % n) as usize]
    }

    pub fn div(&self, a: Fe, b: Fe) -> Fe {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// The generator of the multiplicative group used for the log tables.
    pub fn primitive(&self) -> Fe {
        self.exp[1 % self.exp.len()]
    }

    /// `primitive^k`.
    pub fn exp(&self, k: u64) -> Fe {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    pub fn log(&self, a: Fe) -> u32 {
        assert!(a != 0, "log of zero");
        self.log[a as usize]
    }

    /// `a^(p^e)`.
    pub fn frobenius(&self, a: Fe, e: u32) -> Fe {
        self.pow(a, (self.p as u64).pow(e % self.f.max(1)))
    }

    /// The integer `n` reduced into the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        n.rem_euclid(self.p as i64) as Fe
    }

    /// Coordinates over the prime field, lowest first.
    pub fn to_prime_coords(&self, a: Fe) -> Vec<u32> {
        self.coeffs(a)
    }

    pub fn from_prime_coords(&self, c: &[u32]) -> Fe {
        self.from_coeffs(c)
    }
}

/// `(p, f)` with `q = p^f`, or `None`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    if !is_prime(p as u64) {
        return None;
    }
    let mut n = q;
    let mut f = 0;
    while n % p == 0 {
        n /= p;
        f += 1;
    }
    (n == 1).then_some((p, f))
}

/// A square matrix over a field, stored row-major; vectors act on the left
/// as rows, so `v -> v A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    pub n: usize,
    pub entries: Vec<Fe>,
}

impl FieldMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        FieldMatrix { n, entries }
    }

    pub fn from_rows(rows: &[Vec<Fe>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix");
        FieldMatrix {
            n,
            entries: rows.concat(),
        }
    }

    pub fn diagonal(d: &[Fe]) -> Self {
        let n = d.len();
        let mut m = FieldMatrix {
            n,
            entries: vec![0; n * n],
        };
        for (i, &x) in d.iter().enumerate() {
            m.entries[i * n + i] = x;
        }
        m
    }

    /// Permutation matrix sending coordinate `i` to coordinate `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = FieldMatrix {
            n,
            entries: vec![0; n * n],
        };
        for (i, &j) in perm.iter().enumerate() {
            m.entries[i * n + j] = 1;
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &FieldMatrix, field: &Field) -> FieldMatrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for k in 0..n {
                    s = field.add(s, field.mul(self.get(i, k), other.get(k, j)));
                }
                entries[i * n + j] = s;
            }
        }
        FieldMatrix { n, entries }
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[Fe], field: &Field) -> Vec<Fe> {
        let n = self.n;
        (0..n)
            .map(|j| (0..n).fold(0, |s, i| field.add(s, field.mul(v[i], self.get(i, j)))))
            .collect()
    }

    /// Entrywise Frobenius `a -> a^(p^e)`.
    pub fn frobenius(&self, e: u32, field: &Field) -> FieldMatrix {
        FieldMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|&a| field.frobenius(a, e))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const ORDERS: &[u32] = &[2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32, 49, 64, 121];

    #[test]
    fn every_stored_field_builds() {
        for &q in ORDERS {
            let f = Field::new(q).unwrap();
            assert_eq!(f.order(), q);
            let n = q - 1;
            // primitive element has full order
            let g = f.primitive();
            assert_eq!(f.pow(g, n as u64), 1);
            for d in 1..n {
                if n % d == 0 && d < n {
                    assert!(q == 2 || f.pow(g, d as u64) != 1, "GF({q})");
                }
            }
        }
        assert!(Field::new(6).is_err());
        assert!(Field::new(81).is_err());
    }

    #[test]
    fn frobenius_fixes_prime_field() {
        let f = Field::new(16).unwrap();
        let fixed: Vec<Fe> = f.elements().filter(|&a| f.frobenius(a, 1) == a).collect();
        assert_eq!(fixed, vec![0, 1]);
        let f = Field::new(49).unwrap();
        let fixed = f.elements().filter(|&a| f.frobenius(a, 1) == a).count();
        assert_eq!(fixed, 7);
    }

    #[test]
    fn matrix_action() {
        let f = Field::new(7).unwrap();
        let a = FieldMatrix::from_rows(&[vec![1, 2], vec![0, 3]]);
        let b = FieldMatrix::from_rows(&[vec![4, 0], vec![5, 1]]);
        let v = vec![3, 6];
        assert_eq!(a.mul(&b, &f).apply(&v, &f), b.apply(&a.apply(&v, &f), &f));
        assert_eq!(FieldMatrix::identity(2).apply(&v, &f), v);
    }

    proptest! {
        #[test]
        fn field_axioms(qi in 0usize..ORDERS.len(), a in 0u32..4096, b in 0u32..4096, c in 0u32..4096) {
            let q = ORDERS[qi];
            let f = Field::new(q).unwrap();
            let (a, b, c) = (a % q, b % q, c % q);
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                prop_assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            prop_assert_eq!(f.mul(a, b), f.slow_mul(a, b));
            let e = 1;
            prop_assert_eq!(f.frobenius(f.add(a, b), e), f.add(f.frobenius(a, e), f.frobenius(b, e)));
            prop_assert_eq!(f.frobenius(f.mul(a, b), e), f.mul(f.frobenius(a, e), f.frobenius(b, e)));
        }
    }
}
