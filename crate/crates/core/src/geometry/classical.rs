use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{FiniteField, GeometryError, VectorSpace};
use crate::perm::{GroupWithChain, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassicalFamily {
    /// On the nonzero vectors.
    GL,
    /// On the projective points.
    PGL,
    /// On all vectors.
    AGL,
    /// On the nonzero vectors, preserving the standard alternating form.
    Sp,
    /// Translations extended by `Sp`, on all vectors.
    ASp,
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalFamily::GL => "GL",
            ClassicalFamily::PGL => "PGL",
            ClassicalFamily::AGL => "AGL",
            ClassicalFamily::Sp => "Sp",
            ClassicalFamily::ASp => "ASp",
        })
    }
}

/// A classical group as a permutation group; point `i` is the vector with
/// index `domain[i]`.
#[derive(Clone, Debug)]
pub struct ClassicalGroup {
    pub family: ClassicalFamily,
    pub space: VectorSpace,
    pub domain: Vec<usize>,
    pub group: GroupWithChain,
}

/// The standard alternating form with hyperbolic pairs on coordinates
/// `(0, 1), (2, 3), …`.
pub fn symplectic_form(field: &FiniteField, x: &[usize], y: &[usize]) -> usize {
    x.chunks(2).zip(y.chunks(2)).fold(0, |acc, (a, b)| {
        let term = field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0]));
        field.add(acc, term)
    })
}

/// `|GL_d(q)|`.
pub fn gl_order(d: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    (0..d).fold(BigUint::one(), |acc, i| acc * (q.pow(d) - q.pow(i)))
}

/// `|Sp_2m(q)| = q^(m²) ∏ (q^(2i) − 1)`.
pub fn sp_order(m: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    (1..=m).fold(q.pow(m * m), |acc, i| acc * (q.pow(2 * i) - 1u32))
}

pub fn expected_order(family: ClassicalFamily, dim: u32, q: u64) -> BigUint {
    let qd = BigUint::from(q).pow(dim);
    match family {
        ClassicalFamily::GL => gl_order(dim, q),
        ClassicalFamily::PGL => gl_order(dim, q) / (q - 1),
        ClassicalFamily::AGL => qd * gl_order(dim, q),
        ClassicalFamily::Sp => sp_order(dim / 2, q),
        ClassicalFamily::ASp => qd * sp_order(dim / 2, q),
    }
}

fn identity_matrix(d: usize) -> Vec<Vec<usize>> {
    (0..d).map(|i| (0..d).map(|j| usize::from(i == j)).collect()).collect()
}

/// Elementary transvections `I + λE_st` with `λ` over a prime-field basis,
/// and `diag(ω, 1, …, 1)`.
fn gl_matrices(space: &VectorSpace) -> Vec<Vec<Vec<usize>>> {
    let d = space.dim();
    let field = space.field();
    let mut out = Vec::new();
    for s in 0..d {
        for t in 0..d {
            if s != t {
                for &lambda in &field.additive_basis() {
                    let mut m = identity_matrix(d);
                    m[s][t] = lambda;
                    out.push(m);
                }
            }
        }
    }
    let mut diag = identity_matrix(d);
    diag[0][0] = field.primitive_element();
    out.push(diag);
    out
}

/// Symplectic transvections `x ↦ x + λ f(x, v) v` for `v` among the basis
/// vectors and their pairwise sums.
fn sp_matrices(space: &VectorSpace) -> Vec<Vec<Vec<usize>>> {
    let d = space.dim();
    let field = space.field();
    let basis: Vec<Vec<usize>> = identity_matrix(d);
    let mut vs = basis.clone();
    for a in 0..d {
        for b in a + 1..d {
            vs.push(space.add(&basis[a], &basis[b]));
        }
    }
    let mut out = Vec::new();
    for v in &vs {
        for &lambda in &field.additive_basis() {
            let m = basis
                .iter()
                .map(|e| {
                    let c = field.mul(lambda, symplectic_form(field, e, v));
                    space.add(e, &space.scale(c, v))
                })
                .collect();
            out.push(m);
        }
    }
    out
}

impl ClassicalGroup {
    /// Position of a vector index in the domain.
    pub fn position(&self, vector_index: usize) -> Option<usize> {
        self.domain.binary_search(&vector_index).ok()
    }

    /// The permutation of the domain induced by `v ↦ vM + t`.
    fn permutation(
        space: &VectorSpace,
        family: ClassicalFamily,
        domain: &[usize],
        matrix: &[Vec<usize>],
        translation: Option<&[usize]>,
    ) -> Result<Permutation, GeometryError> {
        let images = domain
            .iter()
            .map(|&x| {
                let mut w = space.apply(&space.vector(x), matrix);
                if let Some(t) = translation {
                    w = space.add(&w, t);
                }
                if family == ClassicalFamily::PGL {
                    w = space.normalize(&w);
                }
                domain
                    .binary_search(&space.index(&w))
                    .map_err(|_| GeometryError::Inconsistent("image outside the domain".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Permutation::from_images(images)?)
    }
}

/// Builds the group and checks its order against the closed formula.
pub fn classical_group(family: ClassicalFamily, dim: usize, q: usize) -> Result<ClassicalGroup, GeometryError> {
    let field = FiniteField::new(q)?;
    if matches!(family, ClassicalFamily::Sp | ClassicalFamily::ASp) && (dim == 0 || dim % 2 == 1) {
        return Err(GeometryError::InvalidParameters(format!("{family} needs even dimension, got {dim}")));
    }
    let space = VectorSpace::new(field, dim)?;
    let domain: Vec<usize> = match family {
        ClassicalFamily::GL | ClassicalFamily::Sp => (1..space.size()).collect(),
        ClassicalFamily::PGL => space.projective_points(),
        ClassicalFamily::AGL | ClassicalFamily::ASp => (0..space.size()).collect(),
    };
    if domain.len() < 2 {
        return Err(GeometryError::InvalidParameters(format!("{family}({dim}, {q}) acts on fewer than 2 points")));
    }
    let matrices = match family {
        ClassicalFamily::Sp | ClassicalFamily::ASp => sp_matrices(&space),
        _ => gl_matrices(&space),
    };
    let mut gens = matrices
        .iter()
        .map(|m| ClassicalGroup::permutation(&space, family, &domain, m, None))
        .collect::<Result<Vec<_>, _>>()?;
    if matches!(family, ClassicalFamily::AGL | ClassicalFamily::ASp) {
        let mut e0 = vec![0; dim];
        e0[0] = 1;
        gens.push(ClassicalGroup::permutation(
            &space,
            family,
            &domain,
            &identity_matrix(dim),
            Some(&e0),
        )?);
    }
    let group = GroupWithChain::from_generators(gens)?;
    let expected = expected_order(family, dim as u32, q as u64);
    if group.order() != expected {
        return Err(GeometryError::OrderMismatch {
            group: format!("{family}({dim}, {q})"),
            expected,
            actual: group.order(),
        });
    }
    Ok(ClassicalGroup {
        family,
        space,
        domain,
        group,
    })
}
