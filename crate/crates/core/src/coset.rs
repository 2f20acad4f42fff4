//! Right-coset spaces, coset actions and the bipartite coset graph
//! `Cos(G, L, R)` viewed as an incidence structure, with the double-coset
//! count for the number of blocks through two points.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::incidence::{DesignError, IncidenceStructure};
use crate::limits::Limits;
use crate::perm::{induced_action, ActionImage, GroupWithChain, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("index {index} exceeds the coset index limit {limit}")]
    IndexLimit { index: BigUint, limit: usize },
    #[error("subgroup generator {0} is not in the group")]
    NotSubgroup(String),
    #[error("|RL ∩ RLg| = {count} is not divisible by |R| = {r_order}")]
    NotDivisible { count: u64, r_order: u64 },
    #[error("no subgroup of order {order} found in {attempts} attempts")]
    SearchFailed { order: u64, attempts: usize },
    #[error("coset construction inconsistent: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Design(#[from] DesignError),
}

/// The right cosets `Lg` of a subgroup `L ≤ G`, each represented by its
/// canonical element.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    group: GroupWithChain,
    subgroup: GroupWithChain,
    representatives: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
    generator_images: Vec<Permutation>,
}

impl CosetSpace {
    /// Enumerates `[G:L]` by breadth-first search from the coset `L`.
    /// Coset 0 is always `L` itself.
    pub fn new(group: &GroupWithChain, subgroup: &GroupWithChain, index_limit: usize) -> Result<Self, CosetError> {
        if group.degree() != subgroup.degree() {
            return Err(PermError::DegreeMismatch {
                left: group.degree(),
                right: subgroup.degree(),
            }
            .into());
        }
        for h in subgroup.generators() {
            if !group.contains(h)? {
                return Err(CosetError::NotSubgroup(h.to_string()));
            }
        }
        let index = group.order() / subgroup.order();
        if index > BigUint::from(index_limit) {
            return Err(CosetError::IndexLimit { index, limit: index_limit });
        }
        let index = index.to_usize().expect("index below limit");

        let start = subgroup.canonical_coset_rep(&Permutation::identity(group.degree()));
        let mut representatives = vec![start.clone()];
        let mut lookup = HashMap::from([(start, 0)]);
        let mut images: Vec<Vec<usize>> = vec![Vec::with_capacity(index); group.generators().len()];
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for (s, g) in group.generators().iter().enumerate() {
                let rep = subgroup.canonical_coset_rep(&representatives[i].mul_unchecked(g));
                let j = match lookup.get(&rep) {
                    Some(&j) => j,
                    None => {
                        let j = representatives.len();
                        lookup.insert(rep.clone(), j);
                        representatives.push(rep);
                        queue.push_back(j);
                        j
                    }
                };
                images[s].push(j);
            }
        }
        if representatives.len() != index {
            return Err(CosetError::Inconsistent(format!(
                "found {} cosets, expected {index}",
                representatives.len()
            )));
        }
        // BFS visits cosets in index order, so images[s][i] is the image of coset i.
        let generator_images = images
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CosetSpace {
            group: group.clone(),
            subgroup: subgroup.clone(),
            representatives,
            lookup,
            generator_images,
        })
    }

    pub fn group(&self) -> &GroupWithChain {
        &self.group
    }

    pub fn subgroup(&self) -> &GroupWithChain {
        &self.subgroup
    }

    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    /// Index of the coset `Lg`.
    pub fn coset_of(&self, g: &Permutation) -> Option<usize> {
        self.lookup.get(&self.subgroup.canonical_coset_rep(g)).copied()
    }

    /// Action of each generator of `G` on coset indices.
    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    /// The permutation of cosets induced by an arbitrary element of `G`.
    pub fn image_of(&self, g: &Permutation) -> Result<Permutation, CosetError> {
        let images = self
            .representatives
            .iter()
            .map(|x| {
                self.coset_of(&x.mul_unchecked(g))
                    .ok_or_else(|| CosetError::NotSubgroup(g.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Permutation::from_images(images)?)
    }
}

/// `G` acting on `[G:L]` by right multiplication.
///
/// Asserts that the stabilizer of the coset `L` is `L`: `L` fixes it and the
/// orders agree.
pub fn coset_action(
    group: &GroupWithChain,
    subgroup: &GroupWithChain,
    limits: &Limits,
) -> Result<(CosetSpace, ActionImage<usize>), CosetError> {
    let space = CosetSpace::new(group, subgroup, limits.index_limit)?;
    let action = induced_action(group, (0..space.index()).collect(), |&i, g| {
        space.coset_of(&space.representatives[i].mul_unchecked(g)).expect("closed")
    })?;
    for h in subgroup.generators() {
        if space.coset_of(h) != Some(0) {
            return Err(CosetError::Inconsistent("subgroup moves its own coset".into()));
        }
    }
    debug_assert_eq!(BigUint::from(space.index()) * subgroup.order(), group.order());
    Ok((space, action))
}

/// How adjacency between point cosets and block cosets was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdjacencyMethod {
    /// `x·y⁻¹ ∈ LR` against a materialized product set.
    ProductSet,
    /// Images of the `R`-orbit of the coset `L`.
    ROrbit,
}

/// `Cos(G, L, R)` as an incidence structure on `[G:L]` with blocks `[G:R]`.
#[derive(Clone, Debug)]
pub struct CosetDesign {
    pub points: CosetSpace,
    pub blocks: CosetSpace,
    pub design: IncidenceStructure,
    /// `G` acting on the points; the group to pair with `design`.
    pub point_action: ActionImage<usize>,
    /// `G` acts faithfully on the whole graph, i.e. `L ∩ R` is core-free.
    pub faithful: bool,
    pub method: AdjacencyMethod,
}

/// Builds `Cos(G, L, R)`. The product-set test is used when `|G|` is within
/// the element limit, the `R`-orbit construction otherwise.
pub fn coset_graph_design(
    group: &GroupWithChain,
    l: &GroupWithChain,
    r: &GroupWithChain,
    limits: &Limits,
) -> Result<CosetDesign, CosetError> {
    let method = if group.order() <= BigUint::from(limits.element_limit) {
        AdjacencyMethod::ProductSet
    } else {
        AdjacencyMethod::ROrbit
    };
    coset_graph_design_with(group, l, r, limits, method)
}

pub fn coset_graph_design_with(
    group: &GroupWithChain,
    l: &GroupWithChain,
    r: &GroupWithChain,
    limits: &Limits,
    method: AdjacencyMethod,
) -> Result<CosetDesign, CosetError> {
    let (points, point_action) = coset_action(group, l, limits)?;
    let blocks = CosetSpace::new(group, r, limits.index_limit)?;
    let block_sets = match method {
        AdjacencyMethod::ProductSet => {
            let lr = product_set(l, r, limits.element_limit)?;
            blocks
                .representatives()
                .iter()
                .map(|y| {
                    let y_inv = y.inverse();
                    (0..points.index())
                        .filter(|&i| lr.contains(&points.representatives()[i].mul_unchecked(&y_inv)))
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
        }
        AdjacencyMethod::ROrbit => {
            let r_gens: Vec<Permutation> = r
                .generators()
                .iter()
                .map(|g| points.image_of(g))
                .collect::<Result<_, _>>()?;
            let base = orbit_of_zero(&r_gens);
            blocks
                .representatives()
                .iter()
                .map(|y| {
                    let mut block: Vec<usize> = base
                        .iter()
                        .map(|&i| points.coset_of(&points.representatives()[i].mul_unchecked(y)).expect("closed"))
                        .collect();
                    block.sort_unstable();
                    block
                })
                .collect()
        }
    };
    if !block_sets[0].contains(&0) {
        return Err(CosetError::Inconsistent("vertex L is not adjacent to vertex R".into()));
    }
    let union_gens: Vec<Permutation> = points
        .generator_images()
        .iter()
        .zip(blocks.generator_images())
        .map(|(p, b)| {
            let n = p.degree();
            Permutation::from_images(p.images().iter().copied().chain(b.images().iter().map(|&j| j + n)).collect())
        })
        .collect::<Result<_, _>>()?;
    let faithful = GroupWithChain::from_generators(union_gens)?.order() == group.order();
    let design = IncidenceStructure::new(points.index(), block_sets)?;
    Ok(CosetDesign {
        points,
        blocks,
        design,
        point_action,
        faithful,
        method,
    })
}

fn orbit_of_zero(gens: &[Permutation]) -> Vec<usize> {
    let mut seen = HashSet::from([0]);
    let mut orbit = vec![0];
    let mut i = 0;
    while i < orbit.len() {
        for g in gens {
            let y = g.apply(orbit[i]);
            if seen.insert(y) {
                orbit.push(y);
            }
        }
        i += 1;
    }
    orbit
}

/// The set `AB = {ab}` of a pair of subgroups.
fn product_set(a: &GroupWithChain, b: &GroupWithChain, limit: u64) -> Result<HashSet<Permutation>, CosetError> {
    let a_elems = a.elements(limit)?;
    let b_elems = b.elements(limit)?;
    let mut set = HashSet::with_capacity(a_elems.len() * b_elems.len());
    for x in &a_elems {
        for y in &b_elems {
            set.insert(x.mul_unchecked(y));
        }
    }
    Ok(set)
}

/// Counts `|RL ∩ RLg| / |R|` for many `g` against one materialized `RL`.
#[derive(Clone, Debug)]
pub struct DoubleCosetCounter {
    rl: HashSet<Permutation>,
    r_order: u64,
}

impl DoubleCosetCounter {
    /// Requires `|G|` within the element limit.
    pub fn new(
        group: &GroupWithChain,
        l: &GroupWithChain,
        r: &GroupWithChain,
        limit: u64,
    ) -> Result<Self, CosetError> {
        let order = group.order();
        if order > BigUint::from(limit) {
            return Err(PermError::EnumerationLimit { order, limit }.into());
        }
        Ok(DoubleCosetCounter {
            rl: product_set(r, l, limit)?,
            r_order: r.order_u64().expect("order below limit"),
        })
    }

    pub fn rl_size(&self) -> usize {
        self.rl.len()
    }

    /// `|RL ∩ RLg| / |R|`, failing if the division is not exact.
    pub fn lambda(&self, g: &Permutation) -> Result<u64, CosetError> {
        // y ∈ RL ∩ RLg iff y = xg with x, xg ∈ RL.
        let count = self.rl.iter().filter(|x| self.rl.contains(&x.mul_unchecked(g))).count() as u64;
        if !count.is_multiple_of(self.r_order) {
            return Err(CosetError::NotDivisible {
                count,
                r_order: self.r_order,
            });
        }
        Ok(count / self.r_order)
    }
}

pub fn double_coset_lambda(
    group: &GroupWithChain,
    l: &GroupWithChain,
    r: &GroupWithChain,
    g: &Permutation,
    limit: u64,
) -> Result<u64, CosetError> {
    if !group.contains(g)? {
        return Err(PermError::NotInGroup(g.to_string()).into());
    }
    DoubleCosetCounter::new(group, l, r, limit)?.lambda(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrosscheckMode {
    /// One `g` per coset `Lg ≠ L`. `RLg` depends only on `Lg`, so this
    /// covers all of `G ∖ L`.
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub mode: String,
    pub checked: usize,
    /// Each distinct ratio with the first `g` producing it.
    pub ratios: BTreeMap<u64, String>,
    /// `g` for which the graph-side count differs from the ratio.
    pub graph_mismatches: Vec<String>,
    /// The common value, when the ratio is constant.
    pub lambda_constant: Option<u64>,
    pub passed: bool,
}

/// Compares the double-coset ratio over `g ∈ G ∖ L` with the number of blocks
/// of `Cos(G, L, R)` through both `L` and `Lg`, and tests its constancy.
pub fn lemma_2_2_crosscheck(
    group: &GroupWithChain,
    l: &GroupWithChain,
    r: &GroupWithChain,
    mode: CrosscheckMode,
    limits: &Limits,
) -> Result<CrosscheckReport, CosetError> {
    let cd = coset_graph_design(group, l, r, limits)?;
    let counter = DoubleCosetCounter::new(group, l, r, limits.element_limit)?;
    let through_zero: Vec<usize> = cd.design.blocks_through(0);

    let elements: Vec<Permutation> = match mode {
        CrosscheckMode::Exhaustive => cd.points.representatives()[1..].to_vec(),
        CrosscheckMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::with_capacity(samples);
            if cd.points.index() > 1 {
                while out.len() < samples {
                    let g = group.random_element(&mut rng);
                    if !l.contains(&g)? {
                        out.push(g);
                    }
                }
            }
            out
        }
    };

    let mut ratios = BTreeMap::new();
    let mut graph_mismatches = Vec::new();
    for g in &elements {
        let ratio = counter.lambda(g)?;
        let target = cd.points.coset_of(g).expect("g in G");
        let graph = through_zero.iter().filter(|&&j| cd.design.incident(target, j)).count() as u64;
        if graph != ratio {
            graph_mismatches.push(g.to_string());
        }
        ratios.entry(ratio).or_insert_with(|| g.to_string());
    }
    let lambda_constant = (ratios.len() == 1).then(|| *ratios.keys().next().unwrap());
    Ok(CrosscheckReport {
        mode: match mode {
            CrosscheckMode::Exhaustive => "exhaustive".into(),
            CrosscheckMode::Sampled { samples, seed } => format!("sampled({samples}, seed {seed})"),
        },
        checked: elements.len(),
        passed: ratios.len() <= 1 && graph_mismatches.is_empty(),
        ratios,
        graph_mismatches,
        lambda_constant,
    })
}

/// `G = LR`, decided as `|L|·|R| = |G|·|L ∩ R|`.
pub fn is_trivial_factorization(
    group: &GroupWithChain,
    l: &GroupWithChain,
    r: &GroupWithChain,
    limit: u64,
) -> Result<bool, CosetError> {
    let meet = l.intersection(r, limit)?;
    Ok(l.order() * r.order() == group.order() * meet.order())
}

/// JSON summary of a coset construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetRecord {
    #[serde(rename = "index_L")]
    pub index_l: usize,
    #[serde(rename = "index_R")]
    pub index_r: usize,
    pub lambda_constant: Option<u64>,
    pub trivial_factorization: bool,
    pub faithful: bool,
}

/// Randomized subgroup search. Each restart grows `⟨x₁, x₂, …⟩` from random
/// elements, keeping a new element only when the order still divides `order`
/// and increases; the first subgroup of the requested order accepted by
/// `accept` is returned.
///
/// Some targets (the order-72 subgroup of `A7`) are not two-generated, so
/// plain random pairs are not enough.
pub fn find_subgroup<R: Rng + ?Sized>(
    group: &GroupWithChain,
    order: u64,
    rng: &mut R,
    attempts: usize,
    mut accept: impl FnMut(&GroupWithChain) -> Result<bool, CosetError>,
) -> Result<GroupWithChain, CosetError> {
    const STEPS: usize = 200;
    let divides = |h: &GroupWithChain| h.order_u64().is_some_and(|o| order.is_multiple_of(o));
    for _ in 0..attempts {
        let mut gens = vec![group.random_element(rng)];
        let mut current = GroupWithChain::from_generators(gens.clone())?;
        if !divides(&current) {
            continue;
        }
        for _ in 0..STEPS {
            if current.order_u64() == Some(order) {
                break;
            }
            gens.push(group.random_element(rng));
            let candidate = GroupWithChain::from_generators(gens.clone())?;
            if divides(&candidate) && candidate.order() > current.order() {
                current = candidate;
            } else {
                gens.pop();
            }
        }
        if current.order_u64() == Some(order) && accept(&current)? {
            return Ok(current);
        }
    }
    Err(CosetError::SearchFailed { order, attempts })
}

/// Whether `h^g = k` for some `g ∈ G`, by running over all of `G`.
pub fn are_conjugate(
    group: &GroupWithChain,
    h: &GroupWithChain,
    k: &GroupWithChain,
    limit: u64,
) -> Result<bool, CosetError> {
    if h.order() != k.order() {
        return Ok(false);
    }
    for g in group.elements(limit)? {
        let mut inside = true;
        for x in h.nontrivial_generators() {
            if !k.contains(&x.conjugate_by(&g))? {
                inside = false;
                break;
            }
        }
        if inside {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Subgroups of `A7` realizing the two designs on 15 points.
#[derive(Clone, Debug)]
pub struct A7Subgroups {
    pub group: GroupWithChain,
    /// Order 168.
    pub l: GroupWithChain,
    /// Order 72 with `|L ∩ R| = 24`.
    pub r: GroupWithChain,
    /// Order 168, not conjugate to `L`, with `|L ∩ L'| = 24`.
    pub l_prime: GroupWithChain,
}

pub fn a7_subgroups(seed: u64, limits: &Limits) -> Result<A7Subgroups, CosetError> {
    const ATTEMPTS: usize = 2_000;
    let group = GroupWithChain::from_generators(vec![
        Permutation::parse("(1 2 3)", 7)?,
        Permutation::parse("(1 2 3 4 5 6 7)", 7)?,
    ])?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limit = limits.element_limit;
    let meets_in_24 = |l: &GroupWithChain, h: &GroupWithChain| -> Result<bool, CosetError> {
        Ok(l.intersection(h, limit)?.order_u64() == Some(24))
    };
    let l = find_subgroup(&group, 168, &mut rng, ATTEMPTS, |_| Ok(true))?;
    let r = find_subgroup(&group, 72, &mut rng, ATTEMPTS, |h| meets_in_24(&l, h))?;
    let l_prime = find_subgroup(&group, 168, &mut rng, ATTEMPTS, |h| {
        Ok(meets_in_24(&l, h)? && !are_conjugate(&group, &l, h, limit)?)
    })?;
    Ok(A7Subgroups { group, l, r, l_prime })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{verify_design, DesignAction};

    fn group(gens: &[&str], n: usize) -> GroupWithChain {
        GroupWithChain::from_generators(gens.iter().map(|s| Permutation::parse(s, n).unwrap()).collect())
            .unwrap()
    }

    fn s4_s3_a4() -> (GroupWithChain, GroupWithChain, GroupWithChain) {
        (
            GroupWithChain::symmetric(4),
            group(&["(1 2 3)", "(1 2)"], 4),
            GroupWithChain::alternating(4),
        )
    }

    #[test]
    fn canonical_rep_identifies_cosets() {
        let s4 = GroupWithChain::symmetric(4);
        let h = group(&["(1 2)"], 4);
        let elems = s4.elements(100).unwrap();
        let mut reps = HashSet::new();
        for x in &elems {
            let c = h.canonical_coset_rep(x);
            for y in h.elements(10).unwrap() {
                assert_eq!(h.canonical_coset_rep(&y.mul_unchecked(x)), c);
            }
            reps.insert(c);
        }
        assert_eq!(reps.len(), 12);
    }

    #[test]
    fn coset_actions() {
        let limits = Limits::default();
        let frob = group(&["(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)"], 7);
        let stab = frob.point_stabilizer(0).unwrap();
        let (space, act) = coset_action(&frob, &stab, &limits).unwrap();
        assert_eq!(space.index(), 7);
        assert!(act.image.is_transitive() && act.faithful);
        assert_eq!(act.image.order_u64(), Some(21));
        assert_eq!(act.image.point_stabilizer(0).unwrap().order_u64(), Some(3));

        let (space, act) = coset_action(&frob, &frob, &limits).unwrap();
        assert_eq!(space.index(), 1);
        assert!(act.image.is_trivial());

        let outside = GroupWithChain::symmetric(7);
        assert!(matches!(coset_action(&frob, &outside, &limits), Err(CosetError::NotSubgroup(_))));
        let tight = Limits { index_limit: 5, ..limits };
        assert!(matches!(coset_action(&frob, &stab, &tight), Err(CosetError::IndexLimit { .. })));
    }

    #[test]
    fn trivial_factorization_gives_complete_bipartite() {
        let (s4, s3, a4) = s4_s3_a4();
        let limits = Limits::default();
        assert!(is_trivial_factorization(&s4, &s3, &a4, 100).unwrap());
        let cd = coset_graph_design(&s4, &s3, &a4, &limits).unwrap();
        assert!(cd.design.is_trivial());
        assert_eq!(cd.design.b(), 2);
        let report = lemma_2_2_crosscheck(&s4, &s3, &a4, CrosscheckMode::Exhaustive, &limits).unwrap();
        assert!(report.passed);
        assert_eq!(report.lambda_constant, Some(2));
        assert!(is_trivial_factorization(&s4, &s4, &a4, 100).unwrap());
    }

    #[test]
    fn fano_from_cosets() {
        let limits = Limits::default();
        let g = group(&["(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)", "(2 4)(5 6)"], 7);
        let fano = crate::incidence::tests::fano();
        let act = DesignAction::new(&g, &fano).unwrap();
        let l = g.point_stabilizer(0).unwrap();
        let r = act.block_stabilizer(fano.blocks_through(0)[0]).unwrap();
        assert!(!is_trivial_factorization(&g, &l, &r, 1000).unwrap());
        let x = Permutation::parse("(1 2 3 4 5 6 7)", 7).unwrap();
        assert_eq!(double_coset_lambda(&g, &l, &r, &x, 1000).unwrap(), 1);
        let id = Permutation::identity(7);
        assert_eq!(double_coset_lambda(&g, &l, &r, &id, 1000).unwrap(), 3);

        let cd = coset_graph_design(&g, &l, &r, &limits).unwrap();
        let p = verify_design(&cd.design).unwrap();
        assert_eq!((p.v, p.b, p.r, p.k, p.lambda), (7, 7, 3, 3, 1));
        assert!(cd.faithful);
        let sampled = CrosscheckMode::Sampled { samples: 20, seed: 7 };
        let report = lemma_2_2_crosscheck(&g, &l, &r, sampled, &limits).unwrap();
        assert!(report.passed);
        assert_eq!((report.checked, report.lambda_constant), (20, Some(1)));
    }

    #[test]
    fn adjacency_methods_agree() {
        let limits = Limits::default();
        let g = GroupWithChain::symmetric(5);
        let l = group(&["(1 2 3 4)", "(1 2)"], 5);
        let r = group(&["(1 2)", "(3 4 5)", "(3 4)"], 5);
        let a = coset_graph_design_with(&g, &l, &r, &limits, AdjacencyMethod::ProductSet).unwrap();
        let b = coset_graph_design_with(&g, &l, &r, &limits, AdjacencyMethod::ROrbit).unwrap();
        assert_eq!(a.design, b.design);
        DesignAction::new(&a.point_action.image, &a.design).unwrap();
    }

    #[test]
    fn broken_pair_fails_crosscheck() {
        let limits = Limits::default();
        let s4 = GroupWithChain::symmetric(4);
        let l = group(&["(1 2)"], 4);
        let r = group(&["(3 4)"], 4);
        let report = lemma_2_2_crosscheck(&s4, &l, &r, CrosscheckMode::Exhaustive, &limits).unwrap();
        assert!(!report.passed);
        assert!(report.ratios.len() >= 2);
        assert!(report.graph_mismatches.is_empty());
        let cd = coset_graph_design(&s4, &l, &r, &limits).unwrap();
        assert!(verify_design(&cd.design).is_err());
    }

    #[test]
    fn core_of_intersection_makes_action_unfaithful() {
        let limits = Limits::default();
        let s4 = GroupWithChain::symmetric(4);
        let klein = group(&["(1 2)(3 4)", "(1 3)(2 4)"], 4);
        let d4 = group(&["(1 2 3 4)", "(1 3)"], 4);
        let cd = coset_graph_design(&s4, &d4, &GroupWithChain::alternating(4), &limits).unwrap();
        assert!(!cd.faithful);
        assert!(!cd.point_action.faithful);
        assert!(d4.contains_group(&klein).unwrap());
    }
}
