use num_bigint::BigUint;
use num_traits::One;

use super::{FiniteField, GeometryError, MAX_POINTS};

/// `[n over k]_q`, the number of `k`-subspaces of `GF(q)^n`; zero when `k > n`.
pub fn gaussian_coefficient(n: u32, k: u32, q: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow(n - i) - 1u32;
        den *= q.pow(i + 1) - 1u32;
    }
    debug_assert!((&num % &den) == BigUint::default());
    num / den
}

/// `GF(q)^dim` with vectors indexed in base `q`, coordinate 0 most significant.
#[derive(Clone, Debug)]
pub struct VectorSpace {
    field: FiniteField,
    dim: usize,
    size: usize,
}

impl VectorSpace {
    pub fn new(field: FiniteField, dim: usize) -> Result<Self, GeometryError> {
        if dim == 0 {
            return Err(GeometryError::InvalidParameters("dimension must be positive".into()));
        }
        let size = (0..dim)
            .try_fold(1usize, |acc, _| acc.checked_mul(field.order()))
            .filter(|&s| s <= MAX_POINTS)
            .ok_or_else(|| GeometryError::TooLarge {
                what: format!("GF({})^{dim}", field.order()),
                limit: MAX_POINTS,
            })?;
        Ok(VectorSpace { field, dim, size })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vectors, `q^dim`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn index(&self, v: &[usize]) -> usize {
        v.iter().fold(0, |acc, &c| acc * self.field.order() + c)
    }

    pub fn vector(&self, mut index: usize) -> Vec<usize> {
        let q = self.field.order();
        let mut v = vec![0; self.dim];
        for c in v.iter_mut().rev() {
            *c = index % q;
            index /= q;
        }
        v
    }

    pub fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    pub fn scale(&self, c: usize, a: &[usize]) -> Vec<usize> {
        a.iter().map(|&x| self.field.mul(c, x)).collect()
    }

    /// Row vector times matrix, `v ↦ vM`.
    pub fn apply(&self, v: &[usize], m: &[Vec<usize>]) -> Vec<usize> {
        let mut out = vec![0; self.dim];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                for (o, &x) in out.iter_mut().zip(&m[i]) {
                    *o = self.field.add(*o, self.field.mul(c, x));
                }
            }
        }
        out
    }

    /// Indices of all vectors in the row space of `rows`, sorted.
    pub fn span(&self, rows: &[Vec<usize>]) -> Vec<usize> {
        let q = self.field.order();
        let mut out = Vec::with_capacity(q.pow(rows.len() as u32));
        let mut coeffs = vec![0; rows.len()];
        loop {
            let mut v = vec![0; self.dim];
            for (c, row) in coeffs.iter().zip(rows) {
                v = self.add(&v, &self.scale(*c, row));
            }
            out.push(self.index(&v));
            let mut j = 0;
            while j < coeffs.len() {
                coeffs[j] += 1;
                if coeffs[j] < q {
                    break;
                }
                coeffs[j] = 0;
                j += 1;
            }
            if j == coeffs.len() {
                break;
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Scalar multiple whose first nonzero coordinate is 1; this is also the
    /// smallest index on the line through `v`.
    pub fn normalize(&self, v: &[usize]) -> Vec<usize> {
        match v.iter().find(|&&c| c != 0) {
            Some(&lead) => self.scale(self.field.inv(lead), v),
            None => v.to_vec(),
        }
    }

    /// Indices of the normalized nonzero vectors, one per projective point, ascending.
    pub fn projective_points(&self) -> Vec<usize> {
        (1..self.size)
            .filter(|&i| {
                let v = self.vector(i);
                self.normalize(&v) == v
            })
            .collect()
    }
}

/// The `i`-subspaces of `GF(q)^d`, as reduced row-echelon basis matrices.
#[derive(Clone, Debug)]
pub struct SubspaceList {
    pub d: usize,
    pub i: usize,
    pub q: usize,
    pub canonical_matrices: Vec<Vec<Vec<usize>>>,
}

/// Every `i`-subspace exactly once, by running over pivot sets and the free
/// entries of the reduced echelon form.
pub fn enumerate_subspaces(space: &VectorSpace, i: usize) -> Result<SubspaceList, GeometryError> {
    let d = space.dim();
    if i == 0 || i > d {
        return Err(GeometryError::InvalidParameters(format!("subspace dimension {i} not in 1..={d}")));
    }
    let q = space.field().order();
    let mut out = Vec::new();
    for pivots in combinations(d, i) {
        // Free positions: right of the row's pivot, outside every pivot column.
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| ((pc + 1)..d).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let total = q.pow(free.len() as u32);
        for mut code in 0..total {
            let mut m = vec![vec![0; d]; i];
            for (r, &pc) in pivots.iter().enumerate() {
                m[r][pc] = 1;
            }
            for &(r, c) in &free {
                m[r][c] = code % q;
                code /= q;
            }
            out.push(m);
        }
    }
    let expected = gaussian_coefficient(d as u32, i as u32, q as u64);
    if BigUint::from(out.len()) != expected {
        return Err(GeometryError::Inconsistent(format!(
            "enumerated {} subspaces, expected {expected}",
            out.len()
        )));
    }
    Ok(SubspaceList {
        d,
        i,
        q,
        canonical_matrices: out,
    })
}

/// Increasing `k`-subsets of `0..n`, in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}
