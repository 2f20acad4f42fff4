//! Permutation groups backed by a deterministic Schreier–Sims stabilizer chain.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use super::{Permutation, PermError};

/// One level of a stabilizer chain: a base point, the strong generators that
/// fix all earlier base points, and a transversal for the fundamental orbit.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[p] = Some((u, u^-1))` with `base^u = p`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
    /// Schreier generators `(orbit index, generator index)` already sifted.
    checked: HashSet<(usize, usize)>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        transversal[base] = Some((id.clone(), id));
        Level {
            base,
            generators: Vec::new(),
            orbit: vec![base],
            transversal,
            checked: HashSet::new(),
        }
    }

    /// Adds a strong generator and extends the orbit. Existing transversal
    /// elements are left untouched, so previously sifted Schreier generators
    /// remain valid.
    fn add_generator(&mut self, g: Permutation) {
        self.generators.push(g);
        let new_idx = self.generators.len() - 1;
        let mut queue: VecDeque<usize> = VecDeque::new();
        for i in 0..self.orbit.len() {
            let p = self.orbit[i];
            self.visit(p, new_idx, &mut queue);
        }
        while let Some(p) = queue.pop_front() {
            for s in 0..self.generators.len() {
                self.visit(p, s, &mut queue);
            }
        }
    }

    fn visit(&mut self, p: usize, s: usize, queue: &mut VecDeque<usize>) {
        let g = &self.generators[s];
        let q = g.apply(p);
        if self.transversal[q].is_none() {
            let u = self.transversal[p].as_ref().expect("orbit point").0.mul_unchecked(g);
            let inv = u.inverse();
            self.transversal[q] = Some((u, inv));
            self.orbit.push(q);
            queue.push_back(q);
        }
    }
}

/// A permutation group given by generators together with a stabilizer chain.
///
/// Immutable once built.
#[derive(Clone, Debug)]
pub struct GroupWithChain {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl GroupWithChain {
    /// Builds the group generated by `gens`. Base points are chosen as the
    /// smallest point moved by the first generator not fixing the current base.
    pub fn from_generators(gens: Vec<Permutation>) -> Result<Self, PermError> {
        Self::with_base_prefix(gens, &[])
    }

    /// Like [`from_generators`](Self::from_generators), but the chain's base
    /// starts with `prefix`.
    pub fn with_base_prefix(gens: Vec<Permutation>, prefix: &[usize]) -> Result<Self, PermError> {
        let first = gens.first().ok_or(PermError::NoGenerators)?;
        let degree = first.degree();
        for g in &gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        for &b in prefix {
            if b >= degree {
                return Err(PermError::PointOutOfRange { point: b, degree });
            }
        }
        let mut group = GroupWithChain {
            degree,
            generators: gens.clone(),
            levels: prefix.iter().map(|&b| Level::new(degree, b)).collect(),
        };
        for g in gens {
            group.extend_chain(g);
        }
        Ok(group)
    }

    pub fn trivial(degree: usize) -> Self {
        assert!(degree > 0, "degree must be positive");
        GroupWithChain {
            degree,
            generators: vec![Permutation::identity(degree)],
            levels: Vec::new(),
        }
    }

    /// Symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> Self {
        if degree < 2 {
            return Self::trivial(degree.max(1));
        }
        let cycle = Permutation::from_cycles(degree, &[(0..degree).collect()]).unwrap();
        let swap = Permutation::from_cycles(degree, &[vec![0, 1]]).unwrap();
        Self::from_generators(vec![cycle, swap]).unwrap()
    }

    /// Alternating group on `degree` points.
    pub fn alternating(degree: usize) -> Self {
        if degree < 3 {
            return Self::trivial(degree.max(1));
        }
        let gens = (2..degree)
            .map(|i| Permutation::from_cycles(degree, &[vec![0, 1, i]]).unwrap())
            .collect();
        Self::from_generators(gens).unwrap()
    }

    /// Cyclic group generated by the full cycle `(0 1 .. n-1)`.
    pub fn cyclic(degree: usize) -> Self {
        if degree < 2 {
            return Self::trivial(degree.max(1));
        }
        Self::from_generators(vec![Permutation::from_cycles(degree, &[(0..degree).collect()]).unwrap()])
            .unwrap()
    }

    /// Adds `g` as a strong generator to every level whose base prefix it fixes,
    /// then restores the chain property (Holt's formulation of Schreier–Sims).
    fn extend_chain(&mut self, g: Permutation) {
        if g.is_identity() || self.strip(&g, 0).0.is_identity() {
            return;
        }
        let mut deepest = 0;
        let mut added = false;
        for l in 0..self.levels.len() {
            if self.levels[..l].iter().all(|lv| g.fixes(lv.base)) {
                self.levels[l].add_generator(g.clone());
                deepest = l;
                added = true;
            } else {
                break;
            }
        }
        if self.levels.iter().all(|lv| g.fixes(lv.base)) {
            let b = g.smallest_moved_point().expect("non-identity");
            let mut level = Level::new(self.degree, b);
            level.add_generator(g.clone());
            self.levels.push(level);
            deepest = self.levels.len() - 1;
            added = true;
        }
        debug_assert!(added);
        self.complete_from(deepest);
    }

    fn complete_from(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let l = i as usize;
            match self.find_failing_schreier_generator(l) {
                None => i -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let b = h.smallest_moved_point().expect("non-identity residue");
                        self.levels.push(Level::new(self.degree, b));
                    }
                    for m in (l + 1)..=j {
                        self.levels[m].add_generator(h.clone());
                    }
                    i = j as isize;
                }
            }
        }
    }

    fn find_failing_schreier_generator(&mut self, l: usize) -> Option<(Permutation, usize)> {
        let mut oi = 0;
        while oi < self.levels[l].orbit.len() {
            let p = self.levels[l].orbit[oi];
            for si in 0..self.levels[l].generators.len() {
                if self.levels[l].checked.contains(&(oi, si)) {
                    continue;
                }
                let level = &self.levels[l];
                let s = &level.generators[si];
                let q = s.apply(p);
                let (u_p, _) = level.transversal[p].as_ref().expect("orbit point");
                let (_, u_q_inv) = level.transversal[q].as_ref().expect("orbit is closed");
                let schreier = u_p.mul_unchecked(s).mul_unchecked(u_q_inv);
                self.levels[l].checked.insert((oi, si));
                if schreier.is_identity() {
                    continue;
                }
                let (residue, j) = self.strip(&schreier, l + 1);
                if !residue.is_identity() {
                    return Some((residue, j));
                }
            }
            oi += 1;
        }
        None
    }

    /// Sifts `g` through levels `start..`. Returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it went all the way).
    fn strip(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let p = h.apply(level.base);
            match &level.transversal[p] {
                None => return (h, l),
                Some((_, inv)) => h = h.mul_unchecked(inv),
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Generators with identities removed.
    pub fn nontrivial_generators(&self) -> impl Iterator<Item = &Permutation> {
        self.generators.iter().filter(|g| !g.is_identity())
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Lengths of the fundamental orbits along the chain.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// All strong generators, deduplicated.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for l in &self.levels {
            for g in &l.generators {
                if seen.insert(g.clone()) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Order as `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.iter().all(|l| l.orbit.len() == 1)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        let (residue, j) = self.strip(p, 0);
        Ok(j == self.levels.len() && residue.is_identity())
    }

    /// True if every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &GroupWithChain) -> Result<bool, PermError> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same set of elements (orders equal and one contains the other).
    pub fn same_group(&self, other: &GroupWithChain) -> Result<bool, PermError> {
        Ok(self.order() == other.order() && self.contains_group(other)?)
    }

    pub fn orbit(&self, point: usize) -> Result<Vec<usize>, PermError> {
        if point >= self.degree {
            return Err(PermError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(orbit_under(&self.generators, point))
    }

    /// All orbits, each sorted, listed by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let mut orb = orbit_under(&self.generators, x);
                for &y in &orb {
                    seen[y] = true;
                }
                orb.sort_unstable();
                out.push(orb);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        orbit_under(&self.generators, 0).len() == self.degree
    }

    /// Transitive with order equal to the degree.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == BigUint::from(self.degree)
    }

    /// Every point stabilizer is trivial: each orbit length equals the order.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits().iter().all(|o| BigUint::from(o.len()) == order)
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<&Permutation> = self.nontrivial_generators().collect();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if a.mul_unchecked(b) != b.mul_unchecked(a) {
                    return false;
                }
            }
        }
        true
    }

    /// Stabilizer of `point`, with orbit–stabilizer checked.
    pub fn point_stabilizer(&self, point: usize) -> Result<GroupWithChain, PermError> {
        if point >= self.degree {
            return Err(PermError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let with_point = Self::with_base_prefix(self.generators.clone(), &[point])?;
        let levels: Vec<Level> = with_point.levels[1..].to_vec();
        let generators = match levels.first() {
            Some(l) if !l.generators.is_empty() => l.generators.clone(),
            _ => vec![Permutation::identity(self.degree)],
        };
        let stab = GroupWithChain {
            degree: self.degree,
            generators,
            levels,
        };
        let orbit_len = with_point.levels[0].orbit.len();
        assert_eq!(
            self.order(),
            stab.order() * BigUint::from(orbit_len),
            "orbit-stabilizer identity"
        );
        Ok(stab)
    }

    /// Pointwise stabilizer of a sequence of points.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<GroupWithChain, PermError> {
        let mut g = self.clone();
        for &p in points {
            g = g.point_stabilizer(p)?;
        }
        Ok(g)
    }

    /// Uniformly random element, as a product of random transversal elements.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let p = level.orbit[rng.gen_range(0..level.orbit.len())];
            let (u, _) = level.transversal[p].as_ref().unwrap();
            g = g.mul_unchecked(u);
        }
        g
    }

    /// Lists every element, refusing when the order exceeds `limit`.
    pub fn elements(&self, limit: u64) -> Result<Vec<Permutation>, PermError> {
        let order = self.order();
        if order > BigUint::from(limit) {
            return Err(PermError::EnumerationLimit { order, limit });
        }
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for h in &elems {
                for &p in &level.orbit {
                    let (u, _) = level.transversal[p].as_ref().unwrap();
                    next.push(h.mul_unchecked(u));
                }
            }
            elems = next;
        }
        Ok(elems)
    }

    /// Smallest normal subgroup of `self` containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<GroupWithChain, PermError> {
        for s in seeds {
            if !self.contains(s)? {
                return Err(PermError::NotInGroup(s.to_string()));
            }
        }
        let mut gens: Vec<Permutation> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        if gens.is_empty() {
            return Ok(Self::trivial(self.degree));
        }
        let mut closure = Self::from_generators(gens.clone())?;
        let mut queue: VecDeque<Permutation> = gens.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for g in self.nontrivial_generators() {
                let c = x.conjugate_by(g);
                if !closure.contains(&c)? {
                    gens.push(c.clone());
                    closure.generators.push(c.clone());
                    closure.extend_chain(c.clone());
                    queue.push_back(c);
                }
            }
        }
        debug_assert!(closure.is_normal_in(self).unwrap());
        Ok(closure)
    }

    /// Checks `self` ⊴ `parent` by conjugating generators.
    pub fn is_normal_in(&self, parent: &GroupWithChain) -> Result<bool, PermError> {
        if !parent.contains_group(self)? {
            return Ok(false);
        }
        for x in self.nontrivial_generators() {
            for g in parent.nontrivial_generators() {
                if !self.contains(&x.conjugate_by(g))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Intersection with another group on the same domain, computed by
    /// filtering the smaller group's elements.
    pub fn intersection(&self, other: &GroupWithChain, limit: u64) -> Result<GroupWithChain, PermError> {
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let mut gens = Vec::new();
        let mut acc = Self::trivial(self.degree);
        for e in small.elements(limit)? {
            if big.contains(&e)? && !acc.contains(&e)? {
                gens.push(e.clone());
                acc = Self::from_generators(gens.clone())?;
            }
        }
        Ok(acc)
    }

    /// The element of the right coset `self · g` whose base images are
    /// lexicographically least. Two elements give the same result iff they
    /// lie in the same right coset.
    pub fn canonical_coset_rep(&self, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels {
            let best = level
                .orbit
                .iter()
                .copied()
                .min_by_key(|&p| h.apply(p))
                .expect("orbit contains the base point");
            let (u, _) = level.transversal[best].as_ref().unwrap();
            h = u.mul_unchecked(&h);
        }
        h
    }
}

fn orbit_under(gens: &[Permutation], point: usize) -> Vec<usize> {
    let n = gens.first().map_or(point + 1, Permutation::degree);
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut orbit = vec![point];
    let mut i = 0;
    while i < orbit.len() {
        let x = orbit[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
        i += 1;
    }
    orbit
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn group(gens: &[&str], n: usize) -> GroupWithChain {
        GroupWithChain::from_generators(gens.iter().map(|s| p(s, n)).collect()).unwrap()
    }

    #[test]
    fn a7_order() {
        let g = group(&["(1 2 3)", "(1 2 3 4 5 6 7)"], 7);
        assert_eq!(g.order(), BigUint::from(2520u32));
        assert!(g.is_transitive());
        assert!(!g.contains(&p("(1 2)", 7)).unwrap());
        assert!(g.contains(&Permutation::identity(7)).unwrap());
    }

    #[test]
    fn frobenius_21_order_and_stabilizer() {
        let g = group(&["(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)"], 7);
        assert_eq!(g.order_u64(), Some(21));
        for x in 0..7 {
            assert_eq!(g.point_stabilizer(x).unwrap().order_u64(), Some(3));
        }
    }

    #[test]
    fn trivial_group() {
        let g = GroupWithChain::from_generators(vec![Permutation::identity(4)]).unwrap();
        assert_eq!(g.order_u64(), Some(1));
        assert!(g.is_trivial());
        let s = g.point_stabilizer(2).unwrap();
        assert_eq!(s.order_u64(), Some(1));
        assert_eq!(g.orbit(2).unwrap(), vec![2]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            GroupWithChain::from_generators(vec![]).unwrap_err(),
            PermError::NoGenerators
        );
        assert!(matches!(
            GroupWithChain::from_generators(vec![Permutation::identity(3), Permutation::identity(4)]),
            Err(PermError::DegreeMismatch { .. })
        ));
        let g = group(&["(1 2)"], 3);
        assert!(matches!(g.orbit(3), Err(PermError::PointOutOfRange { .. })));
        assert!(matches!(
            g.contains(&Permutation::identity(4)),
            Err(PermError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn orbits_of_small_groups() {
        let g = group(&["(1 2 3 4 5 6 7)"], 7);
        let mut o = g.orbit(0).unwrap();
        o.sort();
        assert_eq!(o, (0..7).collect::<Vec<_>>());
        let h = group(&["(1 2)"], 3);
        assert_eq!(h.orbit(2).unwrap(), vec![2]);
        assert!(!h.is_transitive());
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(GroupWithChain::symmetric(6).order_u64(), Some(720));
        assert_eq!(GroupWithChain::alternating(8).order_u64(), Some(20160));
        assert_eq!(GroupWithChain::cyclic(9).order_u64(), Some(9));
    }

    #[test]
    fn normal_closure_in_s4_is_a4() {
        let s4 = GroupWithChain::symmetric(4);
        let n = s4.normal_closure(&[p("(1 2 3)", 4)]).unwrap();
        assert_eq!(n.order_u64(), Some(12));
        assert!(n.is_normal_in(&s4).unwrap());
        let t = s4.normal_closure(&[Permutation::identity(4)]).unwrap();
        assert!(t.is_trivial());
        assert!(matches!(
            group(&["(1 2 3 4)"], 4).normal_closure(&[p("(1 2)", 4)]),
            Err(PermError::NotInGroup(_))
        ));
    }

    #[test]
    fn normal_closure_of_seven_cycle_in_frobenius() {
        let g = group(&["(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)"], 7);
        let n = g.normal_closure(&[p("(1 2 3 4 5 6 7)", 7)]).unwrap();
        assert_eq!(n.order_u64(), Some(7));
        assert!(n.is_regular());
    }

    #[test]
    fn random_words_are_members() {
        let g = group(&["(1 2 3)(4 5 6)", "(1 4)(2 7)(3 8)", "(5 6 7 8)"], 8);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let gens = g.generators().to_vec();
        for _ in 0..100 {
            let mut w = Permutation::identity(8);
            for _ in 0..rng.gen_range(1..20) {
                w = &w * &gens[rng.gen_range(0..gens.len())];
            }
            assert!(g.contains(&w).unwrap());
            assert!(g.contains(&g.random_element(&mut rng)).unwrap());
        }
    }

    #[test]
    fn elements_respects_limit() {
        let g = GroupWithChain::symmetric(5);
        assert_eq!(g.elements(1000).unwrap().len(), 120);
        let set: HashSet<_> = g.elements(1000).unwrap().into_iter().collect();
        assert_eq!(set.len(), 120);
        assert!(matches!(g.elements(100), Err(PermError::EnumerationLimit { .. })));
    }

    #[test]
    fn base_prefix_is_honoured() {
        let g = GroupWithChain::with_base_prefix(GroupWithChain::symmetric(5).generators().to_vec(), &[3, 1])
            .unwrap();
        assert_eq!(&g.base()[..2], &[3, 1]);
        assert_eq!(g.order_u64(), Some(120));
    }

    #[test]
    fn regular_and_semiregular() {
        assert!(group(&["(1 2 3 4 5 6 7)"], 7).is_regular());
        let s3 = GroupWithChain::symmetric(3);
        assert!(!s3.is_regular());
        assert!(!s3.is_semiregular());
        assert!(group(&["(1 2)(3 4)"], 4).is_semiregular());
    }

    #[test]
    fn intersection_of_subgroups() {
        let s4 = GroupWithChain::symmetric(4);
        let a4 = s4.normal_closure(&[p("(1 2 3)", 4)]).unwrap();
        let s3 = group(&["(1 2 3)", "(1 2)"], 4);
        let i = a4.intersection(&s3, 1000).unwrap();
        assert_eq!(i.order_u64(), Some(3));
    }
}
