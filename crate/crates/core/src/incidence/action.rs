//! A permutation group acting on an incidence structure: block stabilizers,
//! the local actions on `D(α)` and `D(β)`, flag-transitivity and local
//! primitivity.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{DesignError, IncidenceStructure};
use crate::limits::Limits;
use crate::perm::{induced_action, ActionImage, GroupWithChain, PermError, Permutation};
use crate::structure::{is_primitive, is_quasiprimitive, StructureError};

/// A group `G` on the points of a design, together with its action on blocks.
///
/// Block stabilizers are computed as point stabilizers in the action on the
/// disjoint union of points `0..v` and blocks `v..v+b`.
#[derive(Clone, Debug)]
pub struct DesignAction<'a> {
    design: &'a IncidenceStructure,
    group: &'a GroupWithChain,
    block_lookup: HashMap<Vec<usize>, Vec<usize>>,
    union: GroupWithChain,
    block_group: GroupWithChain,
}

impl<'a> DesignAction<'a> {
    /// Fails with [`DesignError::NotPreserved`] unless every generator maps
    /// blocks to blocks.
    pub fn new(group: &'a GroupWithChain, design: &'a IncidenceStructure) -> Result<Self, DesignError> {
        if group.degree() != design.v() {
            return Err(DesignError::DegreeMismatch {
                group: group.degree(),
                v: design.v(),
            });
        }
        if design.b() == 0 {
            return Err(DesignError::NoBlocks);
        }
        let block_lookup = design
            .block_index_map()
            .into_iter()
            .map(|(k, v)| (k.to_vec(), v))
            .collect();
        let mut action = DesignAction {
            design,
            group,
            block_lookup,
            union: GroupWithChain::trivial(1),
            block_group: GroupWithChain::trivial(1),
        };
        let mut union_gens = Vec::new();
        let mut block_gens = Vec::new();
        for g in group.generators() {
            let bp = action.block_permutation(g)?;
            union_gens.push(action.join(g, &bp));
            block_gens.push(bp);
        }
        action.union = GroupWithChain::from_generators(union_gens)?;
        action.block_group = GroupWithChain::from_generators(block_gens)?;
        Ok(action)
    }

    pub fn design(&self) -> &IncidenceStructure {
        self.design
    }

    pub fn group(&self) -> &GroupWithChain {
        self.group
    }

    /// `G^B`, the induced group on block indices.
    pub fn block_group(&self) -> &GroupWithChain {
        &self.block_group
    }

    /// `G` on points followed by blocks.
    pub fn union_group(&self) -> &GroupWithChain {
        &self.union
    }

    fn join(&self, g: &Permutation, bp: &Permutation) -> Permutation {
        let v = self.design.v();
        let images = g
            .images()
            .iter()
            .copied()
            .chain(bp.images().iter().map(|&j| j + v))
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// Action of a point permutation on block indices. The i-th copy of a
    /// repeated block goes to the i-th copy of its image.
    pub fn block_permutation(&self, g: &Permutation) -> Result<Permutation, DesignError> {
        let mut seen: HashMap<&[usize], usize> = HashMap::new();
        let mut images = Vec::with_capacity(self.design.b());
        for block in self.design.blocks() {
            let mut img: Vec<usize> = block.iter().map(|&x| g.apply(x)).collect();
            img.sort_unstable();
            let slots = self.block_lookup.get(&img).ok_or(DesignError::NotPreserved)?;
            let occurrence = seen.entry(block.as_slice()).or_insert(0);
            images.push(*slots.get(*occurrence).ok_or(DesignError::NotPreserved)?);
            *occurrence += 1;
        }
        Ok(Permutation::from_images(images)?)
    }

    /// The element acting on points and blocks simultaneously.
    pub fn union_element(&self, g: &Permutation) -> Result<Permutation, DesignError> {
        let bp = self.block_permutation(g)?;
        Ok(self.join(g, &bp))
    }

    fn restrict_to_points(&self, sub: &GroupWithChain) -> Result<GroupWithChain, DesignError> {
        let v = self.design.v();
        let gens = sub
            .generators()
            .iter()
            .map(|g| g.restrict(v))
            .collect::<Result<Vec<_>, PermError>>()?;
        let restricted = GroupWithChain::from_generators(gens)?;
        debug_assert_eq!(restricted.order(), sub.order());
        Ok(restricted)
    }

    /// `G_β` as a group on the points.
    pub fn block_stabilizer(&self, block: usize) -> Result<GroupWithChain, DesignError> {
        self.check_block(block)?;
        let stab = self.union.point_stabilizer(self.design.v() + block)?;
        self.restrict_to_points(&stab)
    }

    /// `G_αβ` as a group on the points.
    pub fn flag_stabilizer(&self, point: usize, block: usize) -> Result<GroupWithChain, DesignError> {
        self.check_point(point)?;
        self.check_block(block)?;
        let stab = self
            .union
            .pointwise_stabilizer(&[point, self.design.v() + block])?;
        self.restrict_to_points(&stab)
    }

    fn check_point(&self, point: usize) -> Result<(), DesignError> {
        if point >= self.design.v() {
            return Err(DesignError::PointOutOfRange { point, v: self.design.v() });
        }
        Ok(())
    }

    fn check_block(&self, block: usize) -> Result<(), DesignError> {
        if block >= self.design.b() {
            return Err(DesignError::Inconsistent(format!("block index {block} out of range")));
        }
        Ok(())
    }

    /// `G_α` acting on `D(α)`, the indices of the blocks through `α`.
    pub fn point_local_action(&self, point: usize) -> Result<ActionImage<usize>, DesignError> {
        self.check_point(point)?;
        let through = self.design.blocks_through(point);
        if through.is_empty() {
            return Err(DesignError::PointInNoBlock(point));
        }
        let stab = self.group.point_stabilizer(point)?;
        let block_perms: HashMap<Permutation, Permutation> = stab
            .generators()
            .iter()
            .map(|g| Ok((g.clone(), self.block_permutation(g)?)))
            .collect::<Result<_, DesignError>>()?;
        Ok(induced_action(&stab, through, |&j, g| block_perms[g].apply(j))?)
    }

    /// `G_β` acting on `D(β)`, the points of block `β`.
    pub fn block_local_action(&self, block: usize) -> Result<ActionImage<usize>, DesignError> {
        let stab = self.block_stabilizer(block)?;
        Ok(induced_action(&stab, self.design.block(block).to_vec(), |&x, g| g.apply(x))?)
    }

    pub fn point_block_actions(
        &self,
        point: usize,
        block: usize,
    ) -> Result<(ActionImage<usize>, ActionImage<usize>), DesignError> {
        Ok((self.point_local_action(point)?, self.block_local_action(block)?))
    }

    fn orbit_representatives(group: &GroupWithChain) -> Vec<usize> {
        group.orbits().iter().map(|o| o[0]).collect()
    }

    /// Flag-transitivity, decided as block-transitivity plus transitivity of
    /// `G_β` on `D(β)`. When every point is on a block the dual route
    /// (point-transitivity plus `G_α` transitive on `D(α)`) is also computed
    /// and must agree.
    pub fn is_flag_transitive(&self) -> Result<bool, DesignError> {
        let by_blocks =
            self.block_group.is_transitive() && self.block_local_action(0)?.image.is_transitive();
        if (0..self.design.v()).all(|x| !self.design.blocks_through(x).is_empty()) {
            let by_points =
                self.group.is_transitive() && self.point_local_action(0)?.image.is_transitive();
            if by_points != by_blocks {
                return Err(DesignError::Inconsistent(
                    "flag-transitivity differs between point and block routes".into(),
                ));
            }
        }
        Ok(by_blocks)
    }

    /// `|G| · |G_αβ|² < |G_α|³` on the flag (α, first block through α).
    pub fn stabilizer_bound(&self, point: usize) -> Result<bool, DesignError> {
        let block = *self
            .design
            .blocks_through(point)
            .first()
            .ok_or(DesignError::PointInNoBlock(point))?;
        let g = self.group.order();
        let ga = self.group.point_stabilizer(point)?.order();
        let gab = self.flag_stabilizer(point, block)?.order();
        Ok(g * &gab * &gab < &ga * &ga * &ga)
    }

    /// Full local-primitivity report. Stabilizer primitivity is checked at one
    /// representative per point orbit and per block orbit.
    pub fn local_primitivity(&self, limits: &Limits) -> Result<LocalPrimitivityReport, DesignError> {
        if self.design.is_trivial() {
            return Err(DesignError::TrivialDesign);
        }
        let point_transitive = self.group.is_transitive();
        let block_transitive = self.block_group.is_transitive();
        let mut point_local_primitive = true;
        for a in Self::orbit_representatives(self.group) {
            match self.point_local_action(a) {
                Ok(act) => point_local_primitive &= is_primitive(&act.image),
                Err(DesignError::PointInNoBlock(_)) => point_local_primitive = false,
                Err(e) => return Err(e),
            }
        }
        let mut block_local_primitive = true;
        for b in Self::orbit_representatives(&self.block_group) {
            block_local_primitive &= is_primitive(&self.block_local_action(b)?.image);
        }
        let flag_transitive = self.is_flag_transitive()?;
        let point_primitive = is_primitive(self.group);

        let mut report = LocalPrimitivityReport {
            flag_transitive,
            point_transitive,
            block_transitive,
            point_local_primitive,
            block_local_primitive,
            point_primitive,
            block_quasiprimitive: None,
            stabilizer_bound_ok: None,
            reason: None,
        };
        if !flag_transitive {
            report.reason = Some(if !block_transitive {
                "not flag-transitive: blocks form more than one orbit".into()
            } else {
                "not flag-transitive: block stabilizer is intransitive on its points".into()
            });
            return Ok(report);
        }
        report.stabilizer_bound_ok = Some(self.stabilizer_bound(0)?);
        report.block_quasiprimitive = match is_quasiprimitive(&self.block_group, limits.element_limit) {
            Ok(q) => Some(q),
            Err(StructureError::Perm(PermError::EnumerationLimit { .. })) => {
                report.reason = Some("block quasiprimitivity unknown: enumeration limit".into());
                None
            }
            Err(StructureError::Perm(e)) => return Err(e.into()),
            Err(e) => return Err(DesignError::Inconsistent(e.to_string())),
        };
        if !report.locally_primitive() {
            report.reason = Some(
                match (point_local_primitive, block_local_primitive) {
                    (false, false) => "both stabilizer actions are imprimitive",
                    (false, true) => "point stabilizer is imprimitive on the blocks through the point",
                    _ => "block stabilizer is imprimitive on the points of the block",
                }
                .into(),
            );
        }
        Ok(report)
    }

    /// Faithfulness of `G` on the blocks.
    pub fn faithful_on_blocks(&self) -> bool {
        self.block_group.order() == self.group.order()
    }

    pub fn order(&self) -> BigUint {
        self.group.order()
    }
}

/// Flag-transitivity and local-primitivity verdicts for `G` acting on a design.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalPrimitivityReport {
    pub flag_transitive: bool,
    pub point_transitive: bool,
    pub block_transitive: bool,
    /// `G_α` primitive on `D(α)` for every point.
    pub point_local_primitive: bool,
    /// `G_β` primitive on `D(β)` for every block.
    pub block_local_primitive: bool,
    pub point_primitive: bool,
    /// `None` when not computed or beyond the enumeration limit.
    pub block_quasiprimitive: Option<bool>,
    /// `|G| < |G_α|³ / |G_αβ|²` on a fixed flag; `None` unless flag-transitive.
    pub stabilizer_bound_ok: Option<bool>,
    pub reason: Option<String>,
}

impl LocalPrimitivityReport {
    pub fn locally_primitive(&self) -> bool {
        self.point_local_primitive && self.block_local_primitive
    }

    /// Local primitivity must imply flag-transitivity and point-primitivity.
    pub fn local_primitivity_consistent(&self) -> bool {
        !self.locally_primitive() || (self.flag_transitive && self.point_primitive)
    }
}
