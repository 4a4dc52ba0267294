//! Arithmetic in GF(p^m) for small prime powers, and the projective-point
//! machinery for the orthogonality graphs.
//!
//! Elements are polynomial residues stored as coefficient vectors
//! `[c_0, ..., c_{m-1}]` modulo a monic irreducible polynomial of degree `m`
//! chosen deterministically at construction: the first irreducible when the
//! coefficient vector is read as a base-`p` integer. Everything here is
//! brute-force small-field arithmetic; fields are capped at 2^16 elements.

use crate::error::{Error, Result};

pub const DEFAULT_FIELD_CAP: u64 = 1 << 16;

/// Element of GF(p^m): coefficients `[c_0, ..., c_{m-1}]`, reduced mod p.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(Vec<u64>);

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

/// The field GF(p^m) with its reduction modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
    m: usize,
    q: u64,
    /// monic, degree m, ascending coefficients (length m+1, last entry 1)
    modulus: Vec<u64>,
}

impl Field {
    pub fn new(q: u64) -> Result<Self> {
        Self::with_cap(q, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(q: u64, cap: u64) -> Result<Self> {
        if q > cap {
            return Err(Error::FieldTooLarge { q, cap });
        }
        let (p, m) = prime_power_split(q).ok_or(Error::NotPrimePower(q))?;
        let modulus = find_modulus(p, m);
        Ok(Field { p, m, q, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![0; self.m])
    }

    pub fn one(&self) -> FieldElement {
        let mut c = vec![0; self.m];
        c[0] = 1;
        FieldElement(c)
    }

    /// Element number `k < q`: the base-p digits of `k` as coefficients.
    pub fn from_index(&self, k: u64) -> FieldElement {
        assert!(k < self.q, "element index {k} out of range for GF({})", self.q);
        let mut c = vec![0; self.m];
        let mut k = k;
        for digit in c.iter_mut() {
            *digit = k % self.p;
            k /= self.p;
        }
        FieldElement(c)
    }

    pub fn index(&self, a: &FieldElement) -> u64 {
        a.0.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// All q elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|k| self.from_index(k))
    }

    fn validate(&self, a: &FieldElement) -> Result<()> {
        if a.0.len() != self.m || a.0.iter().any(|&c| c >= self.p) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        debug_assert!(self.validate(a).is_ok() && self.validate(b).is_ok());
        FieldElement(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| (x + y) % self.p)
                .collect(),
        )
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        debug_assert!(self.validate(a).is_ok());
        FieldElement(a.0.iter().map(|&x| (self.p - x) % self.p).collect())
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        debug_assert!(self.validate(a).is_ok() && self.validate(b).is_ok());
        let mut prod = vec![0u64; 2 * self.m.max(1)];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        poly_rem(&mut prod, &self.modulus, self.p);
        prod.truncate(self.m);
        prod.resize(self.m, 0);
        FieldElement(prod)
    }

    /// Multiplicative inverse via `a^(q-2)`.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.validate(a)?;
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = self.q - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Ok(result)
    }

    /// Renders a projective point as a homogeneous-coordinate string, with
    /// each coordinate shown as its element index.
    pub fn point_string(&self, pt: &ProjectivePoint) -> String {
        format!(
            "({}:{}:{})",
            self.index(&pt.coords[0]),
            self.index(&pt.coords[1]),
            self.index(&pt.coords[2])
        )
    }
}

/// Canonical representative of a 1-dimensional subspace of GF(q)^3: scaled
/// so the first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: [FieldElement; 3],
}

impl ProjectivePoint {
    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.coords
    }

    /// Canonicalizes an arbitrary nonzero triple.
    pub fn new(f: &Field, coords: [FieldElement; 3]) -> Result<Self> {
        for c in &coords {
            f.validate(c)?;
        }
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidParameters("zero triple is not a projective point".into()))?;
        let scale = f.inv(lead)?;
        Ok(ProjectivePoint {
            coords: [
                f.mul(&coords[0], &scale),
                f.mul(&coords[1], &scale),
                f.mul(&coords[2], &scale),
            ],
        })
    }
}

/// The q^2 + q + 1 canonical projective points, in deterministic order:
/// (0:0:1), then (0:1:a), then (1:a:b) with a, b ascending by element index.
pub fn projective_points(f: &Field) -> Vec<ProjectivePoint> {
    let mut points = Vec::with_capacity((f.q * f.q + f.q + 1) as usize);
    points.push(ProjectivePoint {
        coords: [f.zero(), f.zero(), f.one()],
    });
    for a in f.elements() {
        points.push(ProjectivePoint {
            coords: [f.zero(), f.one(), a],
        });
    }
    for a in f.elements() {
        for b in f.elements() {
            points.push(ProjectivePoint {
                coords: [f.one(), a.clone(), b],
            });
        }
    }
    points
}

/// True iff the standard bilinear form a1 b1 + a2 b2 + a3 b3 vanishes.
pub fn orthogonal(f: &Field, a: &ProjectivePoint, b: &ProjectivePoint) -> Result<bool> {
    let mut sum = f.zero();
    for i in 0..3 {
        f.validate(&a.coords[i])?;
        f.validate(&b.coords[i])?;
        sum = f.add(&sum, &f.mul(&a.coords[i], &b.coords[i]));
    }
    Ok(sum.is_zero())
}

fn prime_power_split(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Some((q, 1)); // q itself is prime
    }
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    if rest == 1 {
        Some((p, m))
    } else {
        None
    }
}

/// First monic irreducible of degree m over GF(p), scanning coefficient
/// vectors in base-p integer order. Degree 1 always yields `x`.
fn find_modulus(p: u64, m: usize) -> Vec<u64> {
    let count = p.pow(m as u32);
    for k in 0..count {
        let mut poly = Vec::with_capacity(m + 1);
        let mut k2 = k;
        for _ in 0..m {
            poly.push(k2 % p);
            k2 /= p;
        }
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of degree {m} exists over GF({p})");
}

/// Trial division by every monic polynomial of degree 1..=m/2.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let m = poly.len() - 1;
    if m == 1 {
        return true;
    }
    for d in 1..=m / 2 {
        let count = p.pow(d as u32);
        for k in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut k2 = k;
            for _ in 0..d {
                div.push(k2 % p);
                k2 /= p;
            }
            div.push(1);
            let mut rem = poly.to_vec();
            poly_rem(&mut rem, &div, p);
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// In-place remainder of `a` modulo the monic polynomial `b` over GF(p).
fn poly_rem(a: &mut [u64], b: &[u64], p: u64) {
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1, "divisor must be monic");
    for i in (db..a.len()).rev() {
        let coef = a[i];
        if coef == 0 {
            continue;
        }
        a[i] = 0;
        for (j, &bc) in b.iter().enumerate().take(db) {
            let idx = i - db + j;
            a[idx] = (a[idx] + (p - bc % p) % p * coef) % p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_construction() {
        let f2 = Field::new(2).unwrap();
        assert_eq!((f2.characteristic(), f2.extension_degree()), (2, 1));

        let f4 = Field::new(4).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]); // x^2 + x + 1

        assert!(matches!(Field::new(6), Err(Error::NotPrimePower(6))));
        assert!(matches!(Field::new(1), Err(Error::NotPrimePower(1))));
        assert!(matches!(
            Field::with_cap(1 << 17, DEFAULT_FIELD_CAP),
            Err(Error::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn arithmetic_examples() {
        let f3 = Field::new(3).unwrap();
        let two = f3.from_index(2);
        assert_eq!(f3.add(&two, &two), f3.one());

        let f4 = Field::new(4).unwrap();
        let x = f4.from_index(2); // coefficients [0, 1]
        let x_plus_1 = f4.from_index(3);
        assert_eq!(f4.mul(&x, &x), x_plus_1);

        let f5 = Field::new(5).unwrap();
        assert_eq!(f5.inv(&f5.from_index(2)).unwrap(), f5.from_index(3));
        assert!(matches!(f5.inv(&f5.zero()), Err(Error::ZeroInverse)));
    }

    #[test]
    fn point_counts() {
        for q in [2u64, 3, 4] {
            let f = Field::new(q).unwrap();
            assert_eq!(projective_points(&f).len() as u64, q * q + q + 1);
        }
    }

    #[test]
    fn orthogonality_examples() {
        let f2 = Field::new(2).unwrap();
        let mk = |c: [u64; 3]| {
            ProjectivePoint::new(
                &f2,
                [
                    f2.from_index(c[0]),
                    f2.from_index(c[1]),
                    f2.from_index(c[2]),
                ],
            )
            .unwrap()
        };
        assert!(orthogonal(&f2, &mk([1, 0, 0]), &mk([0, 1, 0])).unwrap());
        // absolute point over GF(2): 1 + 1 = 0
        let d = mk([1, 1, 0]);
        assert!(orthogonal(&f2, &d, &d).unwrap());

        let f3 = Field::new(3).unwrap();
        let e1 = ProjectivePoint::new(&f3, [f3.one(), f3.zero(), f3.zero()]).unwrap();
        let e12 = ProjectivePoint::new(&f3, [f3.one(), f3.one(), f3.zero()]).unwrap();
        assert!(!orthogonal(&f3, &e1, &e12).unwrap());
    }

    #[test]
    fn zero_triple_rejected() {
        let f = Field::new(3).unwrap();
        assert!(ProjectivePoint::new(&f, [f.zero(), f.zero(), f.zero()]).is_err());
    }

    #[test]
    fn point_strings() {
        let f = Field::new(3).unwrap();
        let pts = projective_points(&f);
        assert_eq!(f.point_string(&pts[0]), "(0:0:1)");
        assert_eq!(f.point_string(&pts[1]), "(0:1:0)");
    }

    #[test]
    fn self_orthogonal_count_is_q_plus_1() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = Field::new(q).unwrap();
            let pts = projective_points(&f);
            let absolute = pts
                .iter()
                .filter(|a| orthogonal(&f, a, a).unwrap())
                .count() as u64;
            assert_eq!(absolute, q + 1, "q = {q}");
        }
    }

    #[test]
    fn neighbor_counts() {
        for q in [2u64, 3, 4, 5] {
            let f = Field::new(q).unwrap();
            let pts = projective_points(&f);
            for a in &pts {
                let deg = pts
                    .iter()
                    .filter(|b| *b != a && orthogonal(&f, a, b).unwrap())
                    .count() as u64;
                let expect = if orthogonal(&f, a, a).unwrap() { q } else { q + 1 };
                assert_eq!(deg, expect, "q = {q}, point {}", f.point_string(a));
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = Field::new(q).unwrap();
            let elems: Vec<_> = f.elements().collect();
            for a in &elems {
                // inverses
                if !a.is_zero() {
                    let inv = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, &inv), f.one());
                }
                assert_eq!(f.add(a, &f.neg(a)), f.zero());
                for b in &elems {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in &elems {
                        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, &f.add(b, c)),
                            f.add(&f.mul(a, b), &f.mul(a, c))
                        );
                    }
                }
            }
        }
    }
}
