use std::collections::HashSet;

use super::{GroupWithChain, PermError, Permutation};

/// One representative per conjugacy class of elements of prime order.
///
/// Enumerates every element, so `group.order()` must not exceed `limit`.
/// Representatives are listed in element-enumeration order, which is
/// deterministic for a given generator list.
pub fn prime_order_class_representatives(
    group: &GroupWithChain,
    limit: u64,
) -> Result<Vec<Permutation>, PermError> {
    let elements = group.elements(limit)?;
    let gens: Vec<&Permutation> = group.nontrivial_generators().collect();
    let mut classified: HashSet<Permutation> = HashSet::new();
    let mut reps = Vec::new();
    for e in elements {
        if e.prime_order().is_none() || classified.contains(&e) {
            continue;
        }
        let mut frontier = vec![e.clone()];
        classified.insert(e.clone());
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let c = x.conjugate_by(g);
                if classified.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        reps.push(e);
    }
    Ok(reps)
}
