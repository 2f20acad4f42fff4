//! Brute-force reference implementations, independent of the library's
//! algorithms. Permutations are plain image vectors composed left to right:
//! `x^(pq) = q[p[x]]`.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use lpdesign::perm::{GroupWithChain, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Perm = Vec<usize>;

pub fn mul(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&x| q[x]).collect()
}

pub fn inv(p: &Perm) -> Perm {
    let mut out = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        out[y] = x;
    }
    out
}

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn raw(gens: &[Permutation]) -> Vec<Perm> {
    gens.iter().map(|g| g.images().to_vec()).collect()
}

pub fn group(gens: &[Perm]) -> GroupWithChain {
    GroupWithChain::from_generators(gens.iter().map(|g| Permutation::from_images(g.clone()).unwrap()).collect())
        .unwrap()
}

/// All elements by breadth-first closure, or `None` once more than `cap` are found.
pub fn closure(gens: &[Perm], n: usize, cap: usize) -> Option<Vec<Perm>> {
    let mut seen: HashSet<Perm> = HashSet::from([identity(n)]);
    let mut queue = VecDeque::from([identity(n)]);
    let mut out = vec![identity(n)];
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return None;
                }
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Some(out)
}

pub fn random_perm<R: Rng>(n: usize, rng: &mut R) -> Perm {
    let mut p = identity(n);
    p.shuffle(rng);
    p
}

/// A random permutation preserving the partition of `0..c*m` into
/// consecutive cells of size `c`.
pub fn random_cell_preserving<R: Rng>(c: usize, m: usize, rng: &mut R) -> Perm {
    let sigma = random_perm(m, rng);
    let mut out = vec![0; c * m];
    for i in 0..m {
        let tau = random_perm(c, rng);
        for j in 0..c {
            out[i * c + j] = sigma[i] * c + tau[j];
        }
    }
    out
}

/// `x ↦ a x + b (mod p)`.
pub fn affine_map(p: usize, a: usize, b: usize) -> Perm {
    (0..p).map(|x| (a * x + b) % p).collect()
}

pub fn orbits(gens: &[Perm], n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut orbit = vec![s];
        let mut i = 0;
        while i < orbit.len() {
            for g in gens {
                let y = g[orbit[i]];
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

pub fn is_transitive(gens: &[Perm], n: usize) -> bool {
    orbits(gens, n).len() == 1
}

/// Every block containing 0, with `1 < |B| < n`, found by testing each
/// candidate subset: `B` is a block iff its set-orbit consists of pairwise
/// equal-or-disjoint sets.
pub fn nontrivial_blocks_through_zero(gens: &[Perm], n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let set: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|&x| mask & (1 << (x - 1)) != 0))
            .collect();
        let size = set.len();
        if size == 1 || size == n || !n.is_multiple_of(size) {
            continue;
        }
        if set_orbit_is_partition(gens, n, &set) {
            out.push(set);
        }
    }
    out
}

fn set_orbit_is_partition(gens: &[Perm], n: usize, set: &[usize]) -> bool {
    let start: u32 = set.iter().map(|&x| 1u32 << x).sum();
    let image = |mask: u32, g: &Perm| (0..n).filter(|&x| mask & (1 << x) != 0).map(|x| 1u32 << g[x]).sum::<u32>();
    let mut seen = HashSet::from([start]);
    let mut queue = vec![start];
    let mut covered = start;
    while let Some(s) = queue.pop() {
        for g in gens {
            let img = image(s, g);
            if seen.insert(img) {
                if covered & img != 0 {
                    return false;
                }
                covered |= img;
                queue.push(img);
            }
        }
    }
    true
}

/// Primitivity by exhaustive block search; intransitive groups are imprimitive.
pub fn is_primitive(gens: &[Perm], n: usize) -> bool {
    is_transitive(gens, n) && nontrivial_blocks_through_zero(gens, n).is_empty()
}

/// Conjugacy classes of an explicit element list.
pub fn conjugacy_classes(elements: &[Perm]) -> Vec<Vec<Perm>> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut out = Vec::new();
    for x in elements {
        if seen.contains(x) {
            continue;
        }
        let class: BTreeSet<Perm> = elements.iter().map(|g| mul(&mul(&inv(g), x), g)).collect();
        seen.extend(class.iter().cloned());
        out.push(class.into_iter().collect());
    }
    out
}

/// The full lattice of normal subgroups of `<elements>`, as sorted element
/// lists. Every normal subgroup is generated by the classes it contains, so
/// the lattice is the closure of `{1}` under joining one class at a time.
pub fn normal_subgroups(elements: &[Perm], n: usize) -> Vec<Vec<Perm>> {
    let classes = conjugacy_classes(elements);
    let mut lattice: BTreeSet<Vec<Perm>> = BTreeSet::from([vec![identity(n)]]);
    let mut frontier: Vec<(Vec<Perm>, Vec<Perm>)> = vec![(vec![identity(n)], Vec::new())];
    while let Some((members, gens)) = frontier.pop() {
        let inside: HashSet<&Perm> = members.iter().collect();
        for class in &classes {
            if inside.contains(&class[0]) {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.extend(class.iter().cloned());
            let mut joined = closure(&joined_gens, n, usize::MAX).unwrap();
            joined.sort();
            if lattice.insert(joined.clone()) {
                frontier.push((joined, joined_gens));
            }
        }
    }
    lattice.into_iter().collect()
}

/// Transitive, and every nontrivial normal subgroup in the lattice is transitive.
pub fn is_quasiprimitive(elements: &[Perm], n: usize) -> bool {
    if !is_transitive(elements, n) {
        return false;
    }
    normal_subgroups(elements, n)
        .iter()
        .filter(|ns| ns.len() > 1)
        .all(|ns| is_transitive(ns, n))
}

/// Pair counting: `Some((v, b, r, k, λ))` iff the block multiset is a
/// nontrivial 2-design (`v ≥ 3`, constant `2 ≤ k < v`, every pair in exactly
/// `λ ≥ 1` blocks).
pub fn design_parameters(v: usize, blocks: &[Vec<usize>]) -> Option<(u64, u64, u64, u64, u64)> {
    if v < 3 || blocks.is_empty() {
        return None;
    }
    let k = blocks[0].len();
    if k < 2 || k >= v || blocks.iter().any(|b| b.len() != k) {
        return None;
    }
    let count = |pred: &dyn Fn(&Vec<usize>) -> bool| blocks.iter().filter(|b| pred(b)).count() as u64;
    let lambda = count(&|b| b.contains(&0) && b.contains(&1));
    if lambda == 0 {
        return None;
    }
    for x in 0..v {
        for y in x + 1..v {
            if count(&|b| b.contains(&x) && b.contains(&y)) != lambda {
                return None;
            }
        }
    }
    let r = count(&|b| b.contains(&0));
    Some((v as u64, blocks.len() as u64, r, k as u64, lambda))
}

/// Diameter of the point-block incidence graph by BFS from every vertex;
/// `None` when disconnected.
pub fn incidence_diameter(v: usize, blocks: &[Vec<usize>]) -> Option<usize> {
    let n = v + blocks.len();
    let mut adj = vec![Vec::new(); n];
    for (j, b) in blocks.iter().enumerate() {
        for &x in b {
            adj[x].push(v + j);
            adj[v + j].push(x);
        }
    }
    let mut diameter = 0;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        diameter = diameter.max(*dist.iter().max().unwrap());
    }
    (diameter != usize::MAX).then_some(diameter)
}

/// Random groups of several shapes: arbitrary generators, generators
/// preserving a partition into equal cells, affine maps mod a prime, and
/// intransitive direct sums.
pub fn sample_group(mode: u8, seed: u64, max_degree: usize) -> (usize, Vec<Perm>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ngens = rng.gen_range(1..=3);
    match mode % 4 {
        0 => {
            let n = rng.gen_range(3..=max_degree);
            (n, (0..ngens).map(|_| random_perm(n, &mut rng)).collect())
        }
        1 => {
            let shapes: Vec<(usize, usize)> = (2..=max_degree)
                .flat_map(|c| (2..=max_degree / c).map(move |m| (c, m)))
                .collect();
            let &(c, m) = shapes.choose(&mut rng).unwrap();
            (c * m, (0..ngens).map(|_| random_cell_preserving(c, m, &mut rng)).collect())
        }
        2 => {
            let primes: Vec<usize> = [3, 5, 7, 11].into_iter().filter(|&p| p <= max_degree).collect();
            let &p = primes.choose(&mut rng).unwrap();
            let a = rng.gen_range(1..p);
            (p, vec![affine_map(p, 1, 1), affine_map(p, a, 0)])
        }
        _ => {
            let n = rng.gen_range(4..=max_degree);
            let split = rng.gen_range(1..n);
            let gens = (0..ngens)
                .map(|_| {
                    let a = random_perm(split, &mut rng);
                    let b = random_perm(n - split, &mut rng);
                    a.into_iter().chain(b.into_iter().map(|x| x + split)).collect()
                })
                .collect();
            (n, gens)
        }
    }
}

/// Random block multisets: orbits of a random subset under a random group,
/// the same with one block disturbed, or blocks drawn independently.
pub fn sample_structure(seed: u64) -> (usize, Vec<Vec<usize>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = rng.gen_range(3..=9);
    let k = rng.gen_range(1..=v);
    let random_block = |rng: &mut ChaCha8Rng| {
        let mut pts: Vec<usize> = (0..v).collect();
        pts.shuffle(rng);
        let mut b = pts[..k].to_vec();
        b.sort_unstable();
        b
    };
    let mode = rng.gen_range(0..3);
    if mode == 2 {
        let b = rng.gen_range(1..=12);
        return (v, (0..b).map(|_| random_block(&mut rng)).collect());
    }
    let gens: Vec<Perm> = (0..rng.gen_range(1..=2)).map(|_| random_perm(v, &mut rng)).collect();
    let start = random_block(&mut rng);
    let mut blocks = vec![start.clone()];
    let mut seen = HashSet::from([start]);
    let mut i = 0;
    while i < blocks.len() {
        for p in &gens {
            let mut img: Vec<usize> = blocks[i].iter().map(|&x| p[x]).collect();
            img.sort_unstable();
            if seen.insert(img.clone()) {
                blocks.push(img);
            }
        }
        i += 1;
    }
    if mode == 1 {
        let j = rng.gen_range(0..blocks.len());
        blocks[j] = random_block(&mut rng);
    }
    if rng.gen_bool(0.2) {
        let dup = blocks.clone();
        blocks.extend(dup);
    }
    (v, blocks)
}

