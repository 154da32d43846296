//! Exact arithmetic in small finite fields GF(p^m), p^m ≤ 25.
//!
//! Elements are stored as codes in `[0, q)`: the base-p digits of a code are
//! the coefficients of the element in the polynomial basis. GF(4) is built on
//! x² + x + 1, so its codes are 0, 1, α = 2 and α² = α + 1 = 3, and addition
//! in characteristic 2 is bitwise XOR of codes. Each (p, m) uses a fixed
//! modulus so that codes are stable across runs.
//!
//! All operations are lookups into tables precomputed at construction; a
//! [`FieldTable`] is immutable afterwards and can be shared freely across
//! threads.

use std::fmt;

use crate::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: usize = 25;

const MAX_DEGREE: usize = 4;

/// An element of GF(q), identified by its code in `[0, q)`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GfElem(pub u8);

impl GfElem {
    pub const ZERO: GfElem = GfElem(0);
    pub const ONE: GfElem = GfElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn code(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for GfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.0)
    }
}

/// Fixed monic irreducible polynomial per extension field, coefficients in
/// ascending degree order.
fn modulus(p: u64, m: u32) -> Option<&'static [u8]> {
    match (p, m) {
        (2, 2) => Some(&[1, 1, 1]),       // x² + x + 1
        (2, 3) => Some(&[1, 1, 0, 1]),    // x³ + x + 1
        (2, 4) => Some(&[1, 1, 0, 0, 1]), // x⁴ + x + 1
        (3, 2) => Some(&[1, 0, 1]),       // x² + 1
        (5, 2) => Some(&[2, 0, 1]),       // x² + 2
        _ => None,
    }
}

fn is_prime(n: u64) -> bool {
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

/// Lookup tables for GF(p^m).
pub struct FieldTable {
    p: u8,
    m: u8,
    q: usize,
    add: Vec<u8>,
    neg: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>, // inv[0] is a sentinel, never exposed
    frob: Vec<u8>, // m rows of q entries; row j maps x to x^(p^j)
    primitive: u8,
}

const INV_SENTINEL: u8 = u8::MAX;

impl FieldTable {
    /// Builds the tables for GF(p^m). Rejects composite p and orders above
    /// [`MAX_ORDER`].
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = p.checked_pow(m).unwrap_or(u64::MAX);
        if m == 0 || q > MAX_ORDER as u64 {
            return Err(Error::UnsupportedField { p, m });
        }
        let irred: &[u8] = if m == 1 {
            &[]
        } else {
            modulus(p, m).ok_or(Error::UnsupportedField { p, m })?
        };

        let p = p as u8;
        let m = m as u8;
        let q = q as usize;

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = poly_add(a as u8, b as u8, p, m);
                mul[a * q + b] = poly_mul(a as u8, b as u8, p, m, irred);
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![INV_SENTINEL; q];
        for a in 0..q {
            neg[a] = (0..q as u8).find(|&b| add[a * q + b as usize] == 0).unwrap();
            if a != 0 {
                inv[a] = (1..q as u8).find(|&b| mul[a * q + b as usize] == 1).unwrap();
            }
        }

        let mut frob = vec![0u8; m as usize * q];
        for (a, slot) in frob.iter_mut().enumerate().take(q) {
            *slot = a as u8;
        }
        for j in 1..m as usize {
            for a in 0..q {
                let prev = frob[(j - 1) * q + a];
                let mut x = prev;
                for _ in 1..p {
                    x = mul[x as usize * q + prev as usize];
                }
                frob[j * q + a] = x;
            }
        }

        let mut table = FieldTable {
            p,
            m,
            q,
            add,
            neg,
            mul,
            inv,
            frob,
            primitive: 1,
        };
        table.primitive = (1..q as u8)
            .find(|&g| table.order_of(GfElem(g)) == q - 1)
            .expect("the multiplicative group of a finite field is cyclic");
        Ok(table)
    }

    pub fn p(&self) -> usize {
        self.p as usize
    }

    /// Extension degree m.
    pub fn degree(&self) -> usize {
        self.m as usize
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// A fixed primitive element (smallest code generating the nonzero
    /// elements multiplicatively). For GF(4) this is α = 2.
    pub fn primitive(&self) -> GfElem {
        GfElem(self.primitive)
    }

    /// Checked constructor for an element from its code.
    pub fn elem(&self, code: usize) -> Result<GfElem> {
        if code < self.q {
            Ok(GfElem(code as u8))
        } else {
            Err(Error::VectorLength {
                expected: self.q,
                got: code,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = GfElem> {
        (0..self.q as u8).map(GfElem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = GfElem> {
        (1..self.q as u8).map(GfElem)
    }

    #[inline]
    pub fn add(&self, a: GfElem, b: GfElem) -> GfElem {
        GfElem(self.add[a.code() * self.q + b.code()])
    }

    #[inline]
    pub fn neg(&self, a: GfElem) -> GfElem {
        GfElem(self.neg[a.code()])
    }

    #[inline]
    pub fn sub(&self, a: GfElem, b: GfElem) -> GfElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: GfElem, b: GfElem) -> GfElem {
        GfElem(self.mul[a.code() * self.q + b.code()])
    }

    /// Multiplicative inverse; `inv(0)` is an error, never a sentinel leak.
    #[inline]
    pub fn inv(&self, a: GfElem) -> Result<GfElem> {
        if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(GfElem(self.inv[a.code()]))
        }
    }

    /// The automorphism x ↦ x^(p^j); j must lie in `[0, m)`. Row 0 is the
    /// identity and iterating row 1 m times returns to it.
    #[inline]
    pub fn frobenius(&self, a: GfElem, j: usize) -> GfElem {
        debug_assert!(j < self.m as usize);
        GfElem(self.frob[j * self.q + a.code()])
    }

    pub fn pow(&self, a: GfElem, e: u64) -> GfElem {
        let mut acc = GfElem::ONE;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: GfElem) -> usize {
        assert!(!a.is_zero());
        let mut x = a;
        let mut t = 1;
        while x != GfElem::ONE {
            x = self.mul(x, a);
            t += 1;
        }
        t
    }

    /// Text symbol for an element: digits for prime fields, and
    /// '0', '1', 'a', 'b', ... for extension fields (GF(4): α = 'a',
    /// α² = 'b').
    pub fn symbol(&self, a: GfElem) -> char {
        debug_assert!(a.code() < self.q);
        if self.m == 1 {
            (b'0' + a.0) as char
        } else {
            match a.0 {
                0 => '0',
                1 => '1',
                k => (b'a' + k - 2) as char,
            }
        }
    }

    /// Inverse of [`FieldTable::symbol`].
    pub fn parse_symbol(&self, c: char) -> Result<GfElem> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("'{c}' is not an element symbol of GF({})", self.q),
        };
        let code = if self.m == 1 {
            match c {
                '0'..='9' => c as u8 - b'0',
                _ => return Err(bad()),
            }
        } else {
            match c {
                '0' => 0,
                '1' => 1,
                'a'..='z' => c as u8 - b'a' + 2,
                _ => return Err(bad()),
            }
        };
        if (code as usize) < self.q {
            Ok(GfElem(code))
        } else {
            Err(bad())
        }
    }
}

impl fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldTable(GF({}^{}))", self.p, self.m)
    }
}

fn digits(code: u8, p: u8) -> [u8; MAX_DEGREE] {
    let mut d = [0u8; MAX_DEGREE];
    let mut c = code;
    for slot in d.iter_mut() {
        *slot = c % p;
        c /= p;
    }
    d
}

fn from_digits(d: &[u8], p: u8) -> u8 {
    let mut code = 0u32;
    for &c in d.iter().rev() {
        code = code * p as u32 + c as u32;
    }
    code as u8
}

fn poly_add(a: u8, b: u8, p: u8, m: u8) -> u8 {
    let da = digits(a, p);
    let db = digits(b, p);
    let p = p as u16;
    let mut out = [0u8; MAX_DEGREE];
    for i in 0..m as usize {
        out[i] = ((da[i] as u16 + db[i] as u16) % p) as u8;
    }
    from_digits(&out[..m as usize], p as u8)
}

fn poly_mul(a: u8, b: u8, p: u8, m: u8, irred: &[u8]) -> u8 {
    let da = digits(a, p);
    let db = digits(b, p);
    let m = m as usize;
    let p = p as u16;
    let mut prod = [0u16; 2 * MAX_DEGREE];
    for i in 0..m {
        for j in 0..m {
            prod[i + j] = (prod[i + j] + da[i] as u16 * db[j] as u16) % p;
        }
    }
    // Reduce modulo the monic irreducible: x^m = -(lower-degree part).
    for i in (m..2 * m).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &ir) in irred.iter().enumerate().take(m) {
            let sub = (c * ir as u16) % p;
            prod[i - m + j] = (prod[i - m + j] + p - sub) % p;
        }
    }
    let out: Vec<u8> = prod[..m.max(1)].iter().map(|&c| c as u8).collect();
    from_digits(&out, p as u8)
}
