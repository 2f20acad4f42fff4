use std::collections::HashMap;
use std::hash::Hash;

use super::{GroupWithChain, PermError, Permutation};

/// The permutation group induced by a group acting on a finite list of objects.
#[derive(Clone, Debug)]
pub struct ActionImage<T> {
    pub objects: Vec<T>,
    /// Image of each source generator, in order.
    pub generator_images: Vec<Permutation>,
    /// The induced group on object indices.
    pub image: GroupWithChain,
    /// True iff the kernel is trivial.
    pub faithful: bool,
}

impl<T> ActionImage<T> {
    pub fn degree(&self) -> usize {
        self.objects.len()
    }
}

/// Induces the action of `group` on `objects` through `act(object, generator)`.
///
/// Faithfulness is decided by comparing the image order with the source order.
pub fn induced_action<T, F>(
    group: &GroupWithChain,
    objects: Vec<T>,
    act: F,
) -> Result<ActionImage<T>, PermError>
where
    T: Eq + Hash + Clone,
    F: Fn(&T, &Permutation) -> T,
{
    if objects.is_empty() {
        return Err(PermError::ZeroDegree);
    }
    let index: HashMap<&T, usize> = objects.iter().enumerate().map(|(i, o)| (o, i)).collect();
    let mut generator_images = Vec::with_capacity(group.generators().len());
    for g in group.generators() {
        let mut images = Vec::with_capacity(objects.len());
        for o in &objects {
            let img = act(o, g);
            images.push(*index.get(&img).ok_or(PermError::NotInvariant)?);
        }
        generator_images.push(Permutation::from_images(images).map_err(|_| PermError::NotInvariant)?);
    }
    let image = GroupWithChain::from_generators(generator_images.clone())?;
    let faithful = image.order() == group.order();
    Ok(ActionImage {
        objects,
        generator_images,
        image,
        faithful,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_on_unordered_pairs() {
        let s4 = GroupWithChain::symmetric(4);
        let mut pairs = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                pairs.push((a, b));
            }
        }
        let act = induced_action(&s4, pairs, |&(a, b), g| {
            let (x, y) = (g.apply(a), g.apply(b));
            (x.min(y), x.max(y))
        })
        .unwrap();
        assert_eq!(act.degree(), 6);
        assert!(act.faithful);
        assert_eq!(act.image.order_u64(), Some(24));
    }

    #[test]
    fn action_on_single_fixed_object() {
        let s3 = GroupWithChain::symmetric(3);
        let act = induced_action(&s3, vec![()], |_, _| ()).unwrap();
        assert!(act.image.is_trivial());
        assert!(!act.faithful);
        let triv = GroupWithChain::trivial(3);
        assert!(induced_action(&triv, vec![()], |_, _| ()).unwrap().faithful);
    }

    #[test]
    fn action_escaping_object_list() {
        let c3 = GroupWithChain::cyclic(3);
        let err = induced_action(&c3, vec![0usize, 1], |&x, g| g.apply(x)).unwrap_err();
        assert_eq!(err, PermError::NotInvariant);
    }

    #[test]
    fn unfaithful_action_on_blocks_of_d4() {
        let d4 = GroupWithChain::from_generators(vec![
            Permutation::parse("(1 2 3 4)", 4).unwrap(),
            Permutation::parse("(1 3)", 4).unwrap(),
        ])
        .unwrap();
        let cells = vec![vec![0usize, 2], vec![1, 3]];
        let act = induced_action(&d4, cells, |c, g| {
            let mut v: Vec<usize> = c.iter().map(|&x| g.apply(x)).collect();
            v.sort();
            v
        })
        .unwrap();
        assert_eq!(act.image.order_u64(), Some(2));
        assert!(!act.faithful);
    }
}
