mod oracles;

use std::collections::{BTreeSet, HashSet};

use lpdesign::coset::{coset_graph_design, double_coset_lambda, is_trivial_factorization, lemma_2_2_crosscheck, CrosscheckMode};
use lpdesign::incidence::{verify_design, DesignAction, IncidenceStructure};
use lpdesign::perm::{induced_action, GroupWithChain, Permutation};
use lpdesign::structure::{classify_point_action, is_primitive, is_quasiprimitive, is_simple, minimal_block_system, TypeTag};
use lpdesign::Limits;
use oracles::Perm;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn lib_perm(p: &Perm) -> Permutation {
    Permutation::from_images(p.clone()).unwrap()
}

fn parity(p: &Perm) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for s in 0..p.len() {
        let mut x = s;
        let mut len = 0usize;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        transpositions += len.saturating_sub(1);
    }
    transpositions % 2 == 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chain_order_matches_closure(mode in 0u8..4, seed in any::<u64>()) {
        let (n, gens) = oracles::sample_group(mode, seed, 8);
        let g = oracles::group(&gens);
        match oracles::closure(&gens, n, 5000) {
            Some(all) => prop_assert_eq!(g.order_u64(), Some(all.len() as u64)),
            None => prop_assert!(g.order_u64().unwrap() > 5000),
        }
        let orbit = g.orbit(0).unwrap();
        let stab = g.point_stabilizer(0).unwrap();
        prop_assert_eq!(g.order(), stab.order() * orbit.len());
    }

    #[test]
    fn membership_soundness(mode in 0u8..4, seed in any::<u64>()) {
        let (n, gens) = oracles::sample_group(mode, seed, 8);
        let g = oracles::group(&gens);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        for _ in 0..100 {
            let mut w = oracles::identity(n);
            for _ in 0..rng.gen_range(0..12) {
                w = oracles::mul(&w, gens.choose(&mut rng).unwrap());
            }
            prop_assert!(g.contains(&lib_perm(&w)).unwrap());
        }
        if gens.iter().all(|p| !parity(p)) {
            let mut t = oracles::identity(n);
            t.swap(0, 1);
            prop_assert!(!g.contains(&lib_perm(&t)).unwrap());
        }
        let orbit: HashSet<usize> = g.orbit(0).unwrap().into_iter().collect();
        if let Some(outside) = (0..n).find(|x| !orbit.contains(x)) {
            let mut t = oracles::identity(n);
            t.swap(0, outside);
            prop_assert!(!g.contains(&lib_perm(&t)).unwrap());
        }
    }

    #[test]
    fn normal_closure_is_normal_and_minimal(mode in 0u8..4, seed in any::<u64>()) {
        let (n, gens) = oracles::sample_group(mode, seed, 7);
        let g = oracles::group(&gens);
        let seed_elem = lib_perm(&gens[0]);
        let ncl = g.normal_closure(std::slice::from_ref(&seed_elem)).unwrap();
        for x in ncl.generators() {
            for h in g.generators() {
                prop_assert!(ncl.contains(&x.conjugate_by(h)).unwrap());
            }
        }
        if let Some(all) = oracles::closure(&gens, n, 2000) {
            let conjugates: Vec<Perm> = all
                .iter()
                .map(|h| oracles::mul(&oracles::mul(&oracles::inv(h), &gens[0]), h))
                .collect();
            let brute = oracles::closure(&conjugates, n, usize::MAX).unwrap();
            prop_assert_eq!(ncl.order_u64(), Some(brute.len() as u64));
        }
    }

    #[test]
    fn primitivity_matches_partition_search(mode in 0u8..4, seed in any::<u64>()) {
        let (n, gens) = oracles::sample_group(mode, seed, 12);
        let g = oracles::group(&gens);
        prop_assert_eq!(is_primitive(&g), oracles::is_primitive(&gens, n));
        if oracles::is_transitive(&gens, n) {
            let blocks = oracles::nontrivial_blocks_through_zero(&gens, n);
            for x in 1..n {
                let sys = minimal_block_system(&g, 0, x).unwrap();
                prop_assert!(sys.is_invariant(&g));
                // Blocks are closed under intersection, so the smallest one
                // holding 0 and x is the meet of all of them.
                let expected = blocks
                    .iter()
                    .filter(|b| b.contains(&x))
                    .fold((0..n).collect::<BTreeSet<usize>>(), |acc, b| {
                        acc.intersection(&b.iter().copied().collect()).copied().collect()
                    });
                let cell: BTreeSet<usize> = sys.cells[sys.cell_of(0).unwrap()].iter().copied().collect();
                prop_assert_eq!(cell, expected);
            }
        }
    }

    #[test]
    fn quasiprimitivity_matches_normal_lattice(mode in 0u8..4, seed in any::<u64>()) {
        let max = if mode % 4 == 1 { 9 } else { 6 };
        let (n, gens) = oracles::sample_group(mode, seed, max);
        let Some(all) = oracles::closure(&gens, n, 2000) else {
            return Ok(());
        };
        let g = oracles::group(&gens);
        prop_assert_eq!(is_quasiprimitive(&g, 1_000_000).unwrap(), oracles::is_quasiprimitive(&all, n));
    }

    #[test]
    fn type_classification_witnesses(mode in 0u8..3, seed in any::<u64>()) {
        let (n, gens) = oracles::sample_group(mode, seed, 9);
        let g = oracles::group(&gens);
        prop_assume!(g.is_transitive());
        let report = classify_point_action(&g, 1_000_000).unwrap();
        match report.tag {
            TypeTag::HA => {
                let w = report.witness.unwrap();
                prop_assert_eq!(w.order_u64(), Some(n as u64));
                let p = (2..=n).find(|p| n % p == 0).unwrap();
                let mut m = n;
                while m % p == 0 {
                    m /= p;
                }
                prop_assert_eq!(m, 1, "degree {} is not a prime power", n);
            }
            TypeTag::AS => {
                let w = report.witness.unwrap();
                prop_assert!(is_simple(&w, 1_000_000).unwrap());
                prop_assert!(!w.is_abelian());
            }
            TypeTag::OTHER => {}
        }
    }

    #[test]
    fn induced_action_faithfulness_matches_kernel(mode in 0u8..4, seed in any::<u64>()) {
        let (n, gens) = oracles::sample_group(mode, seed, 7);
        let Some(all) = oracles::closure(&gens, n, 2000) else {
            return Ok(());
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xface);
        let size = rng.gen_range(1..n);
        let mut start: Vec<usize> = (0..n).collect();
        start.shuffle(&mut rng);
        let start: BTreeSet<usize> = start[..size].iter().copied().collect();
        // The set-orbit of `start`, closed under the generators.
        let mut objects = vec![start.clone()];
        let mut seen = HashSet::from([start]);
        let mut i = 0;
        while i < objects.len() {
            for p in &gens {
                let img: BTreeSet<usize> = objects[i].iter().map(|&x| p[x]).collect();
                if seen.insert(img.clone()) {
                    objects.push(img);
                }
            }
            i += 1;
        }
        let g = oracles::group(&gens);
        let act = induced_action(&g, objects.clone(), |s, h| s.iter().map(|&x| h.apply(x)).collect()).unwrap();
        let kernel = all
            .iter()
            .filter(|h| objects.iter().all(|s| s.iter().map(|&x| h[x]).collect::<BTreeSet<_>>() == *s))
            .count();
        prop_assert_eq!(act.faithful, kernel == 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn verify_design_matches_pair_counting(seed in any::<u64>()) {
        let (v, blocks) = oracles::sample_structure(seed);
        let s = IncidenceStructure::new(v, blocks.clone()).unwrap();
        match (verify_design(&s), oracles::design_parameters(v, &blocks)) {
            (Ok(p), Some(expected)) => {
                prop_assert_eq!((p.v, p.b, p.r, p.k, p.lambda), expected);
                prop_assert!(p.identity_violations().is_empty());
                prop_assert_eq!(p.symmetric, p.b == p.v);
                let d = s.incidence_graph_diameter().unwrap();
                prop_assert_eq!(Some(d), oracles::incidence_diameter(v, &blocks));
                if p.symmetric {
                    prop_assert_eq!(d, 3);
                } else {
                    prop_assert!(d <= 4);
                }
            }
            (Err(_), None) => {}
            (got, expected) => prop_assert!(false, "library {:?} vs oracle {:?}", got, expected),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    /// `Cos(G, G_0, R)` for random `G` and a random cyclic or two-generated `R`.
    #[test]
    fn coset_design_properties(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, gens) = oracles::sample_group(rng.gen_range(0..3), seed, 6);
        let g = oracles::group(&gens);
        prop_assume!(g.is_transitive());
        let l = g.point_stabilizer(0).unwrap();
        let r = GroupWithChain::from_generators(
            (0..rng.gen_range(1..=2)).map(|_| g.random_element(&mut rng)).collect(),
        )
        .unwrap();
        let limits = Limits::default();
        let cd = coset_graph_design(&g, &l, &r, &limits).unwrap();
        prop_assert_eq!(cd.design.v(), n);
        // G preserves the block multiset.
        prop_assert!(DesignAction::new(&cd.point_action.image, &cd.design).is_ok());

        let trivial = is_trivial_factorization(&g, &l, &r, limits.element_limit).unwrap();
        prop_assert_eq!(trivial, cd.design.is_trivial());
        let k = cd.design.block(0).len();
        if trivial || k < 2 || n < 3 {
            return Ok(());
        }
        let verified = verify_design(&cd.design);
        let cross = lemma_2_2_crosscheck(&g, &l, &r, CrosscheckMode::Exhaustive, &limits).unwrap();
        prop_assert!(cross.graph_mismatches.is_empty());
        prop_assert_eq!(verified.is_ok(), cross.passed, "{:?} vs {:?}", verified, cross);
        if let Ok(p) = verified {
            prop_assert_eq!(cross.lambda_constant, Some(p.lambda));
            let id = Permutation::identity(n);
            prop_assert_eq!(double_coset_lambda(&g, &l, &r, &id, limits.element_limit).unwrap(), p.r);
            prop_assert!(cd.design.incidence_graph_diameter().unwrap() <= 4);
        }
    }
}
