use std::collections::HashSet;

use super::{
    classical_group, enumerate_subspaces, symplectic_form, ClassicalFamily, GeometryError, VectorSpace,
};
use crate::incidence::IncidenceStructure;
use crate::perm::GroupWithChain;

/// A design together with a group preserving it.
#[derive(Clone, Debug)]
pub struct BuiltInstance {
    pub name: String,
    pub design: IncidenceStructure,
    pub group: GroupWithChain,
}

/// An affine design with its natural parallelism: each class holds the
/// indices of the translates of one subspace.
#[derive(Clone, Debug)]
pub struct AffineInstance {
    pub instance: BuiltInstance,
    pub parallel_classes: Vec<Vec<usize>>,
}

fn check_dims(d: usize, i: usize) -> Result<(), GeometryError> {
    if d < 2 || i == 0 || i >= d {
        return Err(GeometryError::InvalidParameters(format!("need 1 <= i <= d-1 and d >= 2, got d={d}, i={i}")));
    }
    Ok(())
}

/// `PG_i(d, q)`: points of `PG(d, q)` and the point sets of its `i`-flats,
/// with `PGL_{d+1}(q)`.
pub fn build_pg(d: usize, q: usize, i: usize) -> Result<BuiltInstance, GeometryError> {
    check_dims(d, i)?;
    let pgl = classical_group(ClassicalFamily::PGL, d + 1, q)?;
    let space = &pgl.space;
    let blocks = enumerate_subspaces(space, i + 1)?
        .canonical_matrices
        .iter()
        .map(|m| space.span(m).into_iter().filter_map(|x| pgl.position(x)).collect())
        .collect();
    Ok(BuiltInstance {
        name: format!("PG_{i}({d},{q})"),
        design: IncidenceStructure::new(pgl.domain.len(), blocks)?,
        group: pgl.group,
    })
}

/// All translates `U + v` of the given subspaces, grouped by subspace.
fn translates(space: &VectorSpace, subspaces: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    subspaces
        .iter()
        .map(|u| {
            let mut covered = vec![false; space.size()];
            let mut class = Vec::new();
            for v in 0..space.size() {
                if covered[v] {
                    continue;
                }
                let vv = space.vector(v);
                let mut coset: Vec<usize> = u.iter().map(|&x| space.index(&space.add(&space.vector(x), &vv))).collect();
                coset.sort_unstable();
                for &x in &coset {
                    covered[x] = true;
                }
                class.push(coset);
            }
            class
        })
        .collect()
}

fn affine_instance(
    name: String,
    space: &VectorSpace,
    subspaces: &[Vec<usize>],
    group: GroupWithChain,
) -> Result<AffineInstance, GeometryError> {
    let classes = translates(space, subspaces);
    let design = IncidenceStructure::new(space.size(), classes.iter().flatten().cloned().collect())?;
    let parallel_classes = classes
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|b| design.find_block(b).expect("block present"))
                .collect()
        })
        .collect();
    Ok(AffineInstance {
        instance: BuiltInstance { name, design, group },
        parallel_classes,
    })
}

/// `AG_i(d, q)`: vectors of `GF(q)^d` and all translates of `i`-subspaces,
/// with `AGL_d(q)`.
pub fn build_ag(d: usize, q: usize, i: usize) -> Result<AffineInstance, GeometryError> {
    check_dims(d, i)?;
    let agl = classical_group(ClassicalFamily::AGL, d, q)?;
    let space = &agl.space;
    let subspaces: Vec<Vec<usize>> = enumerate_subspaces(space, i)?
        .canonical_matrices
        .iter()
        .map(|m| space.span(m))
        .collect();
    affine_instance(format!("AG_{i}({d},{q})"), space, &subspaces, agl.group)
}

/// Translates of the 2-subspaces of `GF(q)^2m` that are non-degenerate for
/// the standard alternating form, with translations extended by `Sp_2m(q)`.
pub fn build_symplectic_subdesign(m: usize, q: usize) -> Result<AffineInstance, GeometryError> {
    if m < 2 {
        return Err(GeometryError::InvalidParameters(format!("need m >= 2, got {m}")));
    }
    let asp = classical_group(ClassicalFamily::ASp, 2 * m, q)?;
    let space = &asp.space;
    let field = space.field();
    let subspaces: Vec<Vec<usize>> = enumerate_subspaces(space, 2)?
        .canonical_matrices
        .iter()
        .filter(|b| symplectic_form(field, &b[0], &b[1]) != 0)
        .map(|b| space.span(b))
        .collect();
    affine_instance(format!("Sp-sub({m},{q})"), space, &subspaces, asp.group)
}

/// Whether every block of `sub` is a block of `sup`, and `sup` has more.
pub fn is_proper_subdesign(sub: &IncidenceStructure, sup: &IncidenceStructure) -> bool {
    let big: HashSet<&[usize]> = sup.blocks().iter().map(Vec::as_slice).collect();
    sub.v() == sup.v() && sub.blocks().iter().all(|b| big.contains(b.as_slice())) && sub.b() < sup.b()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{t_design_strength, verify_design, DesignAction};

    fn params(s: &IncidenceStructure) -> (u64, u64, u64, u64, u64) {
        let p = verify_design(s).unwrap();
        (p.v, p.b, p.r, p.k, p.lambda)
    }

    #[test]
    fn projective_designs() {
        let fano = build_pg(2, 2, 1).unwrap();
        assert_eq!(params(&fano.design), (7, 7, 3, 3, 1));
        assert_eq!(params(&build_pg(3, 2, 1).unwrap().design), (15, 35, 7, 3, 1));
        let planes = build_pg(3, 2, 2).unwrap();
        assert_eq!(params(&planes.design), (15, 15, 7, 7, 3));
        DesignAction::new(&planes.group, &planes.design).unwrap();
        assert_eq!(params(&build_pg(2, 3, 1).unwrap().design), (13, 13, 4, 4, 1));
        assert!(build_pg(2, 2, 2).is_err());
    }

    #[test]
    fn affine_designs() {
        let ag = build_ag(3, 2, 2).unwrap();
        let s = &ag.instance.design;
        assert_eq!(params(s), (8, 14, 7, 4, 3));
        let t = t_design_strength(s).unwrap();
        assert!(t.t_max >= 3);
        assert_eq!(t.lambdas[2], 1);
        assert_eq!(ag.parallel_classes.len(), 7);
        for class in &ag.parallel_classes {
            let mut cover: Vec<usize> = class.iter().flat_map(|&b| s.block(b).to_vec()).collect();
            cover.sort_unstable();
            assert_eq!(cover, (0..8).collect::<Vec<_>>());
        }
        for b in s.blocks_through(0) {
            let block = s.block(b);
            // Over GF(2) a set containing 0 is a subspace iff closed under addition.
            assert!(block.iter().all(|&x| block.iter().all(|&y| block.contains(&(x ^ y)))));
        }
        DesignAction::new(&ag.instance.group, s).unwrap();
        assert_eq!(params(&build_ag(2, 3, 1).unwrap().instance.design), (9, 12, 4, 3, 1));
    }

    #[test]
    fn symplectic_subdesign() {
        let sp = build_symplectic_subdesign(2, 2).unwrap();
        let s = &sp.instance.design;
        assert_eq!(params(s), (16, 80, 20, 4, 4));
        assert_eq!(t_design_strength(s).unwrap().t_max, 2);
        assert_eq!(sp.instance.group.order_u64(), Some(11520));
        DesignAction::new(&sp.instance.group, s).unwrap();
        let ag = build_ag(4, 2, 2).unwrap();
        assert!(is_proper_subdesign(s, &ag.instance.design));
        assert!(!is_proper_subdesign(&ag.instance.design, s));
    }
}
