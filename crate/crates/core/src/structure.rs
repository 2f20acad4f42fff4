//! Block systems, primitivity and quasiprimitivity, minimal normal subgroups,
//! and recognition of the affine (HA) and almost simple (AS) types.
//!
//! Quasiprimitivity and the normal-subgroup queries work through normal
//! closures of prime-order class representatives. Every nontrivial normal
//! subgroup contains an element of prime order, and that element's normal
//! closure lies inside it, so these closures include every minimal normal
//! subgroup and one of them is intransitive whenever any nontrivial normal
//! subgroup is.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{is_prime, prime_order_class_representatives, GroupWithChain, PermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("group is not transitive")]
    Intransitive,
    #[error("seed points must be distinct")]
    EqualSeeds,
    #[error("seed point {0} out of range")]
    SeedOutOfRange(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A partition of `{0..degree-1}` into equal cells, sorted by least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSystem {
    pub degree: usize,
    pub cells: Vec<Vec<usize>>,
}

impl BlockSystem {
    pub fn cell_size(&self) -> usize {
        self.cells.first().map_or(0, Vec::len)
    }

    /// One cell, or all cells singletons.
    pub fn is_trivial(&self) -> bool {
        self.cells.len() == 1 || self.cell_size() == 1
    }

    pub fn cell_of(&self, point: usize) -> Option<usize> {
        self.cells.iter().position(|c| c.binary_search(&point).is_ok())
    }

    /// Checks the partition property and that every generator maps cells to cells.
    pub fn is_invariant(&self, group: &GroupWithChain) -> bool {
        let mut label = vec![usize::MAX; self.degree];
        for (i, cell) in self.cells.iter().enumerate() {
            if cell.len() != self.cell_size() {
                return false;
            }
            for &x in cell {
                if x >= self.degree || label[x] != usize::MAX {
                    return false;
                }
                label[x] = i;
            }
        }
        if label.contains(&usize::MAX) {
            return false;
        }
        group.generators().iter().all(|g| {
            self.cells.iter().all(|cell| {
                let target = label[g.apply(cell[0])];
                cell.iter().all(|&x| label[g.apply(x)] == target)
            })
        })
    }
}

/// Finest `group`-invariant partition in which `a` and `b` share a cell.
pub fn minimal_block_system(
    group: &GroupWithChain,
    a: usize,
    b: usize,
) -> Result<BlockSystem, StructureError> {
    let n = group.degree();
    for &x in &[a, b] {
        if x >= n {
            return Err(StructureError::SeedOutOfRange(x));
        }
    }
    if a == b {
        return Err(StructureError::EqualSeeds);
    }
    if !group.is_transitive() {
        return Err(StructureError::Intransitive);
    }
    Ok(block_system_unchecked(group, a, b))
}

fn block_system_unchecked(group: &GroupWithChain, a: usize, b: usize) -> BlockSystem {
    let n = group.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let gens: Vec<_> = group.nontrivial_generators().collect();
    let mut queue = vec![(a, b)];
    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
    parent[ra.max(rb)] = ra.min(rb);
    while let Some((x, y)) = queue.pop() {
        for g in &gens {
            let rx = find(&mut parent, g.apply(x));
            let ry = find(&mut parent, g.apply(y));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
                queue.push((rx, ry));
            }
        }
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for x in 0..n {
        let r = find(&mut parent, x);
        if slot[r] == usize::MAX {
            slot[r] = cells.len();
            cells.push(Vec::new());
        }
        cells[slot[r]].push(x);
    }
    BlockSystem { degree: n, cells }
}

/// Outcome of a primitivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primitivity {
    Primitive,
    /// A nontrivial invariant partition witnessing imprimitivity.
    Imprimitive(BlockSystem),
    Intransitive,
}

impl Primitivity {
    pub fn is_primitive(&self) -> bool {
        matches!(self, Primitivity::Primitive)
    }
}

/// Tests primitivity by computing the minimal block system of `{0, x}` for
/// every `x != 0`.
pub fn primitivity(group: &GroupWithChain) -> Primitivity {
    if !group.is_transitive() {
        return Primitivity::Intransitive;
    }
    for x in 1..group.degree() {
        let sys = block_system_unchecked(group, 0, x);
        if sys.cells.len() > 1 {
            return Primitivity::Imprimitive(sys);
        }
    }
    Primitivity::Primitive
}

pub fn is_primitive(group: &GroupWithChain) -> bool {
    primitivity(group).is_primitive()
}

/// Every non-identity normal subgroup is transitive.
pub fn is_quasiprimitive(group: &GroupWithChain, limit: u64) -> Result<bool, StructureError> {
    if !group.is_transitive() {
        return Ok(false);
    }
    Ok(intransitive_normal_subgroup(group, limit)?.is_none())
}

/// First intransitive normal closure of a prime-order class representative,
/// in representative order.
pub fn intransitive_normal_subgroup(
    group: &GroupWithChain,
    limit: u64,
) -> Result<Option<GroupWithChain>, StructureError> {
    for h in prime_order_class_representatives(group, limit)? {
        let n = group.normal_closure(&[h])?;
        if !n.is_transitive() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Inclusion-minimal normal closures of the prime-order class representatives.
pub fn minimal_normal_subgroups(
    group: &GroupWithChain,
    limit: u64,
) -> Result<Vec<GroupWithChain>, StructureError> {
    let mut closures: Vec<GroupWithChain> = Vec::new();
    for h in prime_order_class_representatives(group, limit)? {
        let n = group.normal_closure(&[h])?;
        let mut duplicate = false;
        for c in &closures {
            if c.same_group(&n)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            closures.push(n);
        }
    }
    let mut minimal = Vec::new();
    for (i, n) in closures.iter().enumerate() {
        let mut is_min = true;
        for (j, m) in closures.iter().enumerate() {
            if i != j && m.order() < n.order() && n.contains_group(m)? {
                is_min = false;
                break;
            }
        }
        if is_min {
            debug_assert!(n.is_normal_in(group)?);
            minimal.push(n.clone());
        }
    }
    Ok(minimal)
}

/// If the group is elementary abelian of exponent `p`, returns `p`.
pub fn elementary_abelian_prime(group: &GroupWithChain) -> Option<usize> {
    if group.is_trivial() || !group.is_abelian() {
        return None;
    }
    let mut prime = None;
    for g in group.nontrivial_generators() {
        let p = g.prime_order()?;
        if *prime.get_or_insert(p) != p {
            return None;
        }
    }
    prime
}

/// No proper nontrivial normal subgroup. Abelian groups are simple iff their
/// order is prime.
pub fn is_simple(group: &GroupWithChain, limit: u64) -> Result<bool, StructureError> {
    if group.is_trivial() {
        return Ok(false);
    }
    if group.is_abelian() {
        return Ok(group.order_u64().is_some_and(|o| is_prime(o as usize)));
    }
    let order = group.order();
    for h in prime_order_class_representatives(group, limit)? {
        if group.normal_closure(&[h])?.order() != order {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeTag {
    HA,
    AS,
    OTHER,
}

impl std::fmt::Display for TypeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TypeTag::HA => "HA",
            TypeTag::AS => "AS",
            TypeTag::OTHER => "OTHER",
        })
    }
}

#[derive(Clone, Debug)]
pub struct TypeReport {
    pub tag: TypeTag,
    /// HA: the elementary abelian regular normal subgroup. AS: the simple socle.
    pub witness: Option<GroupWithChain>,
    pub minimal_normal_subgroups: Vec<GroupWithChain>,
}

/// Serializable form of a [`TypeReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeSummary {
    pub tag: TypeTag,
    pub witness_order: Option<String>,
    pub witness_generators: Vec<String>,
    pub minimal_normal_subgroup_orders: Vec<String>,
}

impl TypeReport {
    pub fn summary(&self) -> TypeSummary {
        TypeSummary {
            tag: self.tag,
            witness_order: self.witness.as_ref().map(|w| w.order().to_string()),
            witness_generators: self
                .witness
                .as_ref()
                .map(|w| w.generators().iter().map(|g| g.to_string()).collect())
                .unwrap_or_default(),
            minimal_normal_subgroup_orders: self
                .minimal_normal_subgroups
                .iter()
                .map(|n| n.order().to_string())
                .collect(),
        }
    }
}

/// HA if some minimal normal subgroup is elementary abelian and regular; AS if
/// the unique minimal normal subgroup is nonabelian simple; OTHER otherwise.
pub fn classify_point_action(group: &GroupWithChain, limit: u64) -> Result<TypeReport, StructureError> {
    if !group.is_transitive() {
        return Err(StructureError::Intransitive);
    }
    let minimal = minimal_normal_subgroups(group, limit)?;
    let degree = BigUint::from(group.degree());
    let affine = minimal
        .iter()
        .find(|n| elementary_abelian_prime(n).is_some() && n.is_regular() && n.order() == degree);
    if let Some(n) = affine {
        return Ok(TypeReport {
            tag: TypeTag::HA,
            witness: Some(n.clone()),
            minimal_normal_subgroups: minimal,
        });
    }
    if minimal.len() == 1 && !minimal[0].is_abelian() && is_simple(&minimal[0], limit)? {
        return Ok(TypeReport {
            tag: TypeTag::AS,
            witness: Some(minimal[0].clone()),
            minimal_normal_subgroups: minimal,
        });
    }
    Ok(TypeReport {
        tag: TypeTag::OTHER,
        witness: None,
        minimal_normal_subgroups: minimal,
    })
}
