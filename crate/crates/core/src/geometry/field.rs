use super::GeometryError;
use crate::perm::is_prime;

/// Conway-style primitive polynomials, coefficients from the constant term up.
const PRIMITIVE_POLYNOMIALS: &[(usize, usize, &[usize])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (3, 2, &[2, 1, 1]),
    (5, 2, &[2, 1, 1]),
    (3, 3, &[1, 2, 0, 1]),
];

/// `GF(q)` with elements `0..q`. The integer `Σ cᵢ pⁱ` stands for the
/// polynomial `Σ cᵢ xⁱ` reduced modulo the field's primitive polynomial, so
/// `0` and `1` are the additive and multiplicative identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: usize,
    e: usize,
    q: usize,
    modulus: Vec<usize>,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
    primitive: usize,
}

impl FiniteField {
    /// Supports every prime `q` and `q ∈ {4, 8, 9, 16, 25, 27}`.
    pub fn new(q: usize) -> Result<Self, GeometryError> {
        let (p, e, modulus) = if is_prime(q) {
            (q, 1, vec![0, 1])
        } else {
            let &(p, e, m) = PRIMITIVE_POLYNOMIALS
                .iter()
                .find(|(p, e, _)| p.pow(*e as u32) == q)
                .ok_or(GeometryError::UnsupportedField(q))?;
            (p, e, m.to_vec())
        };
        let digits = |x: usize| -> Vec<usize> {
            let mut d = vec![0; e];
            let mut x = x;
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum);
                mul[a * q + b] = if e == 1 {
                    a * b % p
                } else {
                    let mut prod = vec![0; 2 * e - 1];
                    for (i, x) in da.iter().enumerate() {
                        for (j, y) in db.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    // Reduce with the monic modulus: x^e = -Σ mᵢ xⁱ.
                    for deg in (e..prod.len()).rev() {
                        let c = prod[deg];
                        if c != 0 {
                            prod[deg] = 0;
                            for (i, m) in modulus[..e].iter().enumerate() {
                                prod[deg - e + i] = (prod[deg - e + i] + p * p - c * m % p) % p;
                            }
                        }
                    }
                    encode(&prod[..e])
                };
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap()).collect();
        let mut inv = vec![0; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .ok_or_else(|| GeometryError::Inconsistent(format!("GF({q}): {a} has no inverse")))?;
        }
        let mut field = FiniteField {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            primitive: 0,
        };
        field.primitive = (1..q)
            .find(|&a| field.multiplicative_order(a) == q - 1)
            .ok_or_else(|| GeometryError::Inconsistent(format!("GF({q}) has no primitive element")))?;
        Ok(field)
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    /// Panics on zero.
    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        self.inv[a]
    }

    pub fn pow(&self, a: usize, mut n: usize) -> usize {
        let (mut base, mut acc) = (a, 1);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        self.primitive
    }

    pub fn multiplicative_order(&self, a: usize) -> usize {
        assert!(a != 0);
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// `1, x, …, x^(e-1)`: a basis over the prime field.
    pub fn additive_basis(&self) -> Vec<usize> {
        (0..self.e).map(|i| self.p.pow(i as u32)).collect()
    }
}
