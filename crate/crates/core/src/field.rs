//! Exact arithmetic in GF(q) for q = p^e.
//!
//! Every supported order gets a fixed modulus polynomial, so a given q always
//! denotes the same concrete field. Elements are indices in [0, q); the index
//! is read as a base-p digit vector of polynomial coefficients (lowest degree
//! first). All arithmetic goes through precomputed q x q tables.

use crate::error::{Error, Result};
use std::sync::OnceLock;

/// Field orders this library supports.
pub const SUPPORTED_ORDERS: &[u16] = &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27];

/// Fixed moduli, coefficients lowest degree first (including the leading 1).
/// GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1, GF(16): x^4+x+1,
/// GF(25): x^2+x+1, GF(27): x^3+2x+1. Prime fields carry the trivial modulus.
const FIELD_TABLE: &[(u16, u16, u32, &[u8])] = &[
    (2, 2, 1, &[0, 1]),
    (3, 3, 1, &[0, 1]),
    (4, 2, 2, &[1, 1, 1]),
    (5, 5, 1, &[0, 1]),
    (7, 7, 1, &[0, 1]),
    (8, 2, 3, &[1, 1, 0, 1]),
    (9, 3, 2, &[1, 0, 1]),
    (11, 11, 1, &[0, 1]),
    (13, 13, 1, &[0, 1]),
    (16, 2, 4, &[1, 1, 0, 0, 1]),
    (25, 5, 2, &[1, 1, 1]),
    (27, 3, 3, &[1, 2, 0, 1]),
];

/// An element of GF(q), identified by its index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FieldElem {
    q: u16,
    index: u8,
}

impl FieldElem {
    pub fn order(&self) -> u16 {
        self.q
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }
}

/// A Frobenius power x -> x^(p^power), 0 <= power < e.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub struct FieldAutomorphism {
    pub power: u32,
}

impl FieldAutomorphism {
    pub const IDENTITY: FieldAutomorphism = FieldAutomorphism { power: 0 };

    pub fn is_identity(&self) -> bool {
        self.power == 0
    }
}

/// A concrete finite field with its operation tables.
pub struct FieldSpec {
    q: u16,
    p: u16,
    e: u32,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    frob: Vec<Vec<u8>>,
}

/// Looks up the field of order `q`.
pub fn field(q: u16) -> Result<&'static FieldSpec> {
    static REGISTRY: OnceLock<Vec<FieldSpec>> = OnceLock::new();
    let registry = REGISTRY.get_or_init(|| FIELD_TABLE.iter().map(FieldSpec::build).collect());
    registry
        .iter()
        .find(|f| f.q == q)
        .ok_or(Error::UnsupportedOrder(q))
}

impl FieldSpec {
    fn build(&(q, p, e, modulus): &(u16, u16, u32, &[u8])) -> FieldSpec {
        assert!(is_prime(p), "characteristic {p} is not prime");
        assert_eq!(q as u64, (p as u64).pow(e));
        if e > 1 {
            assert!(
                is_irreducible(modulus, p),
                "modulus for GF({q}) is reducible over GF({p})"
            );
        }

        let qu = q as usize;
        let mut add = vec![0u8; qu * qu];
        let mut mul = vec![0u8; qu * qu];
        for a in 0..qu {
            let da = digits(a, p, e);
            for b in 0..qu {
                let db = digits(b, p, e);
                let sum: Vec<u8> = da
                    .iter()
                    .zip(&db)
                    .map(|(&x, &y)| (x + y) % p as u8)
                    .collect();
                add[a * qu + b] = undigits(&sum, p) as u8;
                mul[a * qu + b] = undigits(&poly_mul_mod(&da, &db, modulus, p), p) as u8;
            }
        }

        let mut neg = vec![0u8; qu];
        let mut inv = vec![0u8; qu];
        for a in 0..qu {
            neg[a] = (0..qu).find(|&b| add[a * qu + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..qu).find(|&b| mul[a * qu + b] == 1).unwrap() as u8;
            }
        }

        // frob[i][x] = x^(p^i); each step raises the previous table to the p-th power
        let mut frob: Vec<Vec<u8>> = vec![(0..qu).map(|x| x as u8).collect()];
        for _ in 1..e {
            let prev = frob.last().unwrap();
            let next = prev
                .iter()
                .map(|&x| {
                    let mut acc = 1u8;
                    for _ in 0..p {
                        acc = mul[acc as usize * qu + x as usize];
                    }
                    acc
                })
                .collect();
            frob.push(next);
        }

        FieldSpec {
            q,
            p,
            e,
            modulus: modulus.to_vec(),
            add,
            mul,
            neg,
            inv,
            frob,
        }
    }

    pub fn order(&self) -> u16 {
        self.q
    }

    pub fn characteristic(&self) -> u16 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn elem(&self, index: usize) -> Result<FieldElem> {
        if index >= self.q as usize {
            return Err(Error::ElementOutOfRange { q: self.q, index });
        }
        Ok(FieldElem {
            q: self.q,
            index: index as u8,
        })
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            q: self.q,
            index: 0,
        }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem {
            q: self.q,
            index: 1,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q).map(|i| FieldElem {
            q: self.q,
            index: i as u8,
        })
    }

    fn check(&self, a: FieldElem, b: FieldElem) -> Result<()> {
        if a.q != b.q || a.q != self.q {
            return Err(Error::FieldMismatch(
                a.q,
                if b.q != self.q { b.q } else { self.q },
            ));
        }
        Ok(())
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        self.check(a, b)?;
        Ok(FieldElem {
            q: self.q,
            index: self.add_idx(a.index, b.index),
        })
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        self.check(a, b)?;
        Ok(FieldElem {
            q: self.q,
            index: self.sub_idx(a.index, b.index),
        })
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        self.check(a, b)?;
        Ok(FieldElem {
            q: self.q,
            index: self.mul_idx(a.index, b.index),
        })
    }

    pub fn neg(&self, a: FieldElem) -> Result<FieldElem> {
        self.check(a, a)?;
        Ok(FieldElem {
            q: self.q,
            index: self.neg_idx(a.index),
        })
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        self.check(a, a)?;
        if a.index == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(FieldElem {
            q: self.q,
            index: self.inv_idx(a.index),
        })
    }

    /// The Galois group over the prime field: e Frobenius powers.
    /// For prime q this is just the identity.
    pub fn automorphisms(&self) -> Vec<FieldAutomorphism> {
        (0..self.e)
            .map(|power| FieldAutomorphism { power })
            .collect()
    }

    pub fn apply_automorphism(&self, aut: FieldAutomorphism, a: FieldElem) -> Result<FieldElem> {
        self.check(a, a)?;
        Ok(FieldElem {
            q: self.q,
            index: self.aut_idx(aut, a.index),
        })
    }

    // Index-level operations for inner loops.

    #[inline]
    pub fn add_idx(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub_idx(&self, a: u8, b: u8) -> u8 {
        self.add_idx(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul_idx(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg_idx(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn inv_idx(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    #[inline]
    pub fn aut_idx(&self, aut: FieldAutomorphism, a: u8) -> u8 {
        self.frob[aut.power as usize % self.e as usize][a as usize]
    }
}

fn is_prime(p: u16) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn digits(mut v: usize, p: u16, e: u32) -> Vec<u8> {
    let mut out = vec![0u8; e as usize];
    for d in out.iter_mut() {
        *d = (v % p as usize) as u8;
        v /= p as usize;
    }
    out
}

fn undigits(d: &[u8], p: u16) -> usize {
    d.iter()
        .rev()
        .fold(0usize, |acc, &x| acc * p as usize + x as usize)
}

/// Product of two coefficient vectors reduced by the monic modulus, all over GF(p).
fn poly_mul_mod(a: &[u8], b: &[u8], modulus: &[u8], p: u16) -> Vec<u8> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u16; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u16 * y as u16) % p;
        }
    }
    // reduce x^(e+t) using x^e = -(modulus tail)
    for i in (e..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &m) in modulus[..e].iter().enumerate() {
            let sub = (c * m as u16) % p;
            prod[i - e + j] = (prod[i - e + j] + p - sub) % p;
        }
    }
    prod[..e].iter().map(|&x| x as u8).collect()
}

/// Remainder of `a` modulo monic `m`, coefficients over GF(p).
fn poly_rem(a: &[u8], m: &[u8], p: u16) -> Vec<u8> {
    let dm = m.len() - 1;
    let mut r: Vec<u16> = a.iter().map(|&x| x as u16).collect();
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let top = r.len() - 1;
        if lead != 0 {
            for (j, &c) in m.iter().enumerate() {
                let sub = (lead * c as u16) % p;
                let idx = top - dm + j;
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        r.pop();
    }
    while r.len() > 1 && *r.last().unwrap() == 0 {
        r.pop();
    }
    r.iter().map(|&x| x as u8).collect()
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(modulus: &[u8], p: u16) -> bool {
    let deg = modulus.len() - 1;
    assert!(*modulus.last().unwrap() == 1, "modulus must be monic");
    for d in 1..=deg / 2 {
        // iterate all monic degree-d polynomials over GF(p)
        let count = (p as usize).pow(d as u32);
        for idx in 0..count {
            let mut cand = digits(idx, p, d as u32);
            cand.push(1);
            let rem = poly_rem(modulus, &cand, p);
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f2 = field(2).unwrap();
        assert_eq!(f2.add(f2.one(), f2.one()).unwrap(), f2.zero());
        assert_eq!(f2.mul(f2.one(), f2.one()).unwrap(), f2.one());
        assert_eq!(f2.inv(f2.one()).unwrap(), f2.one());

        let f3 = field(3).unwrap();
        let two = f3.elem(2).unwrap();
        assert_eq!(f3.add(two, two).unwrap(), f3.one());
        assert_eq!(f3.inv(two).unwrap(), two);

        let f5 = field(5).unwrap();
        let three = f5.elem(3).unwrap();
        let four = f5.elem(4).unwrap();
        assert_eq!(f5.mul(three, four).unwrap(), f5.elem(2).unwrap());
    }

    #[test]
    fn gf4_arithmetic() {
        // modulus x^2+x+1: elem(2) = x, elem(3) = x+1
        let f4 = field(4).unwrap();
        let a = f4.elem(2).unwrap();
        let b = f4.elem(3).unwrap();
        assert_eq!(f4.add(a, b).unwrap(), f4.one());
        assert_eq!(f4.mul(a, a).unwrap(), b);
        assert_eq!(f4.inv(a).unwrap(), b);
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = field(9).unwrap();
        assert!(matches!(f.inv(f.zero()), Err(Error::ZeroInverse)));
    }

    #[test]
    fn mismatched_fields_error() {
        let f2 = field(2).unwrap();
        let f3 = field(3).unwrap();
        let err = f2.add(f2.one(), f3.one());
        assert!(matches!(err, Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn unsupported_order() {
        assert!(matches!(field(6), Err(Error::UnsupportedOrder(6))));
        assert!(matches!(field(32), Err(Error::UnsupportedOrder(32))));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(field(2).unwrap().automorphisms().len(), 1);
        assert_eq!(field(3).unwrap().automorphisms().len(), 1);
        assert_eq!(field(4).unwrap().automorphisms().len(), 2);
        assert_eq!(field(16).unwrap().automorphisms().len(), 4);
        assert_eq!(field(27).unwrap().automorphisms().len(), 3);
    }

    #[test]
    fn gf4_frobenius() {
        let f4 = field(4).unwrap();
        let frob = f4.automorphisms()[1];
        let x = f4.elem(2).unwrap();
        assert_eq!(f4.apply_automorphism(frob, x).unwrap(), f4.elem(3).unwrap());
        assert_eq!(f4.apply_automorphism(frob, f4.one()).unwrap(), f4.one());
    }

    /// Field axioms, exhaustively over every supported order: q^3 triples per law.
    #[test]
    fn field_axioms_exhaustive() {
        for &q in SUPPORTED_ORDERS {
            let f = field(q).unwrap();
            let elems: Vec<FieldElem> = f.elements().collect();
            for &a in &elems {
                for &b in &elems {
                    assert_eq!(f.add(a, b).unwrap(), f.add(b, a).unwrap());
                    assert_eq!(f.mul(a, b).unwrap(), f.mul(b, a).unwrap());
                    for &c in &elems {
                        let ab_c = f.add(f.add(a, b).unwrap(), c).unwrap();
                        let a_bc = f.add(a, f.add(b, c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let m_ab_c = f.mul(f.mul(a, b).unwrap(), c).unwrap();
                        let m_a_bc = f.mul(a, f.mul(b, c).unwrap()).unwrap();
                        assert_eq!(m_ab_c, m_a_bc);
                        let dist_l = f.mul(a, f.add(b, c).unwrap()).unwrap();
                        let dist_r = f.add(f.mul(a, b).unwrap(), f.mul(a, c).unwrap()).unwrap();
                        assert_eq!(dist_l, dist_r);
                    }
                }
                // additive and multiplicative inverses
                assert_eq!(f.add(a, f.neg(a).unwrap()).unwrap(), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()).unwrap(), f.one());
                }
            }
        }
    }

    /// Frobenius maps must be bijective and multiplicative on every supported field.
    #[test]
    fn frobenius_is_field_automorphism() {
        for &q in SUPPORTED_ORDERS {
            let f = field(q).unwrap();
            for aut in f.automorphisms() {
                let mut seen = vec![false; q as usize];
                for a in f.elements() {
                    let fa = f.apply_automorphism(aut, a).unwrap();
                    assert!(!seen[fa.index()]);
                    seen[fa.index()] = true;
                    for b in f.elements() {
                        let lhs = f.apply_automorphism(aut, f.mul(a, b).unwrap()).unwrap();
                        let rhs = f
                            .mul(
                                f.apply_automorphism(aut, a).unwrap(),
                                f.apply_automorphism(aut, b).unwrap(),
                            )
                            .unwrap();
                        assert_eq!(lhs, rhs);
                        let sl = f.apply_automorphism(aut, f.add(a, b).unwrap()).unwrap();
                        let sr = f
                            .add(
                                f.apply_automorphism(aut, a).unwrap(),
                                f.apply_automorphism(aut, b).unwrap(),
                            )
                            .unwrap();
                        assert_eq!(sl, sr);
                    }
                }
                assert!(seen.iter().all(|&s| s));
            }
        }
    }
}
