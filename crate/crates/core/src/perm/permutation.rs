use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::One;

use super::PermError;

/// A bijection of `{0, .., degree-1}`.
///
/// Composition follows the right-action convention used throughout the crate:
/// `x^(p*q) = (x^p)^q`, i.e. `p` is applied first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(PermError::PointOutOfRange { point: x, degree: n });
            }
            if seen[x] {
                return Err(PermError::NotABijection);
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &x in cycle {
                if x >= degree {
                    return Err(PermError::PointOutOfRange { point: x, degree });
                }
                if used[x] {
                    return Err(PermError::RepeatedPoint(x + 1));
                }
                used[x] = true;
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation over 1-based points, e.g. `"(1 2 3)(4 5)"`.
    ///
    /// Points inside a cycle may be separated by whitespace or commas.
    /// `"()"` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(PermError::Malformed {
                position: 0,
                reason: "empty input".into(),
            });
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number: Option<(usize, usize)> = None;
        let bytes = trimmed.as_bytes();

        let flush = |number: &mut Option<(usize, usize)>,
                     current: &mut Option<Vec<usize>>|
         -> Result<(), PermError> {
            if let Some((value, _)) = number.take() {
                if value == 0 || value > degree {
                    return Err(PermError::PointOutOfRange {
                        point: value,
                        degree,
                    });
                }
                current
                    .as_mut()
                    .expect("number only accumulates inside a cycle")
                    .push(value - 1);
            }
            Ok(())
        };

        for (pos, &c) in bytes.iter().enumerate() {
            match c {
                b'(' => {
                    if current.is_some() {
                        return Err(PermError::Malformed {
                            position: pos,
                            reason: "nested '('".into(),
                        });
                    }
                    current = Some(Vec::new());
                }
                b')' => {
                    flush(&mut number, &mut current)?;
                    match current.take() {
                        Some(cycle) => {
                            if !cycle.is_empty() {
                                cycles.push(cycle);
                            }
                        }
                        None => {
                            return Err(PermError::Malformed {
                                position: pos,
                                reason: "unmatched ')'".into(),
                            })
                        }
                    }
                }
                b'0'..=b'9' => {
                    if current.is_none() {
                        return Err(PermError::Malformed {
                            position: pos,
                            reason: "point outside of a cycle".into(),
                        });
                    }
                    let digit = (c - b'0') as usize;
                    let (value, start) = number.unwrap_or((0, pos));
                    let value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(digit))
                        .ok_or_else(|| PermError::Malformed {
                            position: start,
                            reason: "point label overflows".into(),
                        })?;
                    number = Some((value, start));
                }
                b',' | b' ' | b'\t' => {
                    if current.is_none() && c == b',' {
                        return Err(PermError::Malformed {
                            position: pos,
                            reason: "',' outside of a cycle".into(),
                        });
                    }
                    flush(&mut number, &mut current)?;
                }
                _ => {
                    return Err(PermError::Malformed {
                        position: pos,
                        reason: format!("unexpected character {:?}", c as char),
                    })
                }
            }
        }
        if current.is_some() {
            return Err(PermError::Malformed {
                position: bytes.len(),
                reason: "unterminated cycle".into(),
            });
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `point`. Panics if `point >= degree`.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Checked point image.
    pub fn try_apply(&self, point: usize) -> Result<usize, PermError> {
        self.images
            .get(point)
            .copied()
            .ok_or(PermError::PointOutOfRange {
                point,
                degree: self.degree(),
            })
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `g^-1 * self * g`, which maps `x^g` to `(x^self)^g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            out[g.images[x]] = g.images[y];
        }
        Permutation { images: out }
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.images[point] == point
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &x)| *i != x).map(|(i, _)| i)
    }

    /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths including fixed points, ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let fixed = self.degree() - lens.iter().sum::<usize>();
        lens.extend(std::iter::repeat_n(1, fixed));
        lens.sort_unstable();
        lens
    }

    /// Element order, the lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for c in self.cycles() {
            let len = BigUint::from(c.len());
            let g = gcd(&acc, &len);
            acc = acc * len / g;
        }
        acc
    }

    /// If the order of `self` is a prime `p`, returns `p`.
    pub fn prime_order(&self) -> Option<usize> {
        let cycles = self.cycles();
        let len = cycles.first()?.len();
        if cycles.iter().all(|c| c.len() == len) && is_prime(len) {
            Some(len)
        } else {
            None
        }
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Same permutation on the first `degree` points. Requires those points to
    /// be mapped among themselves.
    pub fn restrict(&self, degree: usize) -> Result<Permutation, PermError> {
        let images = self.images[..degree].to_vec();
        if images.iter().any(|&x| x >= degree) {
            return Err(PermError::NotInvariant);
        }
        Permutation::from_images(images)
    }
}

fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    let (mut a, mut b) = (a.clone(), b.clone());
    while b != BigUint::from(0u32) {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn is_prime(n: usize) -> bool {
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

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    /// Canonical 1-based cycle notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [deg {}]", self, self.degree())
    }
}
