//! Library results against independent brute-force computations.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use irredundant::groups::{
    closure, is_generating, product_generates, GeneratingTuple, GroupSpec, Ix, TabulatedGroup,
};
use irredundant::nielsen::{is_nielsen_redundant, mu_rank, orbit_of, orbit_statistics, raw_orbit_verdict, NielsenVerdict};
use irredundant::redundancy::{max_irredundant_size, SearchLimits};

/// Generation by plain BFS over group elements, independent of the table.
fn bfs_generates(t: &GeneratingTuple) -> bool {
    let order = t.group().order().unwrap() as usize;
    closure(t, order).unwrap().order == order
}

fn bitmask_closure(g: &TabulatedGroup, gens: &[Ix]) -> HashSet<Ix> {
    let mut seen = HashSet::from([g.identity()]);
    let mut stack = vec![g.identity()];
    while let Some(x) = stack.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

#[test]
fn fast_sl2_test_on_all_pairs_of_sl2_5() {
    let g = GroupSpec::sl(2, 5).unwrap();
    let tg = TabulatedGroup::from_spec(&g).unwrap();
    let n = tg.order() as Ix;
    for a in 0..n {
        for b in 0..n {
            let t = tg.to_tuple(&[a, b]);
            let oracle = bitmask_closure(&tg, &[a, b]).len() == tg.order();
            assert_eq!(is_generating(&t).unwrap(), oracle, "{t}");
        }
    }
}

#[test]
fn center_does_not_change_m() {
    for p in [5u64, 7] {
        let sl = max_irredundant_size(&GroupSpec::sl(2, p).unwrap(), &SearchLimits::default()).unwrap();
        let psl = max_irredundant_size(&GroupSpec::psl(2, p).unwrap(), &SearchLimits::default()).unwrap();
        assert!(sl.exhaustive && psl.exhaustive);
        assert_eq!(sl.computed, psl.computed, "p = {p}");
    }
}

/// m(A5) by enumerating every set containing a class representative, with
/// no canonical forms and no level pruning.
#[test]
fn brute_force_m_of_a5() {
    let tg = TabulatedGroup::from_spec(&GroupSpec::psl(2, 5).unwrap()).unwrap();
    let n = tg.order() as Ix;
    let full = tg.order();
    let irredundant = |s: &[Ix]| {
        bitmask_closure(&tg, s).len() == full
            && (0..s.len()).all(|i| {
                let rest: Vec<Ix> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
                bitmask_closure(&tg, &rest).len() < full
            })
    };
    let mut best = 0;
    for &r in tg.class_reps() {
        if r == tg.identity() {
            continue;
        }
        for a in 1..n {
            for b in a + 1..n {
                if [a, b].contains(&r) {
                    continue;
                }
                if best < 3 && irredundant(&[r, a, b]) {
                    best = 3;
                }
                // A 4-set needs every 3-subset to be non-generating, in
                // particular {r, a, b}.
                if bitmask_closure(&tg, &[r, a, b]).len() == full {
                    continue;
                }
                for c in b + 1..n {
                    if c != r && irredundant(&[r, a, b, c]) {
                        best = 4;
                    }
                }
            }
        }
    }
    let r = max_irredundant_size(&GroupSpec::psl(2, 5).unwrap(), &SearchLimits::default()).unwrap();
    assert_eq!(r.computed, best);
}

#[test]
fn torus_values_by_brute_force() {
    // In (Z/p)^k a set is independent iff linearly independent, so m = k.
    for (p, k) in [(2u32, 3usize), (3, 2), (5, 2)] {
        let r = max_irredundant_size(&GroupSpec::cyclic_power(p, k).unwrap(), &SearchLimits::default()).unwrap();
        assert_eq!(r.computed, k);
    }
}

#[test]
fn goursat_against_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for (p, q) in [(5u64, 5u64), (5, 7)] {
        let g = GroupSpec::product(vec![GroupSpec::psl(2, p).unwrap(), GroupSpec::psl(2, q).unwrap()]).unwrap();
        let elements = g.elements().unwrap();
        let mut seen = [0usize; 2];
        for _ in 0..150 {
            let k = rng.gen_range(1..=3);
            let items = (0..k).map(|_| elements[rng.gen_range(0..elements.len())].clone()).collect();
            let t = GeneratingTuple::new(g.clone(), items).unwrap();
            let v = product_generates(&t).unwrap();
            assert_eq!(v.generates, bfs_generates(&t), "{t}: {}", v.reason);
            seen[v.generates as usize] += 1;
        }
        assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
    }
}

#[test]
fn canonical_and_raw_orbit_searches_agree() {
    let tg = TabulatedGroup::from_spec(&GroupSpec::psl(2, 5).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 30 {
        let t: Vec<Ix> = (0..3).map(|_| rng.gen_range(0..60)).collect();
        if !tg.generates(&t) {
            continue;
        }
        checked += 1;
        let raw = raw_orbit_verdict(&tg, &t, 300_000);
        let canonical = is_nielsen_redundant(&tg.to_tuple(&t), 300_000).unwrap().verdict;
        assert_eq!(
            matches!(raw, NielsenVerdict::NielsenRedundant { .. }),
            matches!(canonical, NielsenVerdict::NielsenRedundant { .. })
        );
    }
    let klein = TabulatedGroup::from_spec(&GroupSpec::cyclic_power(2, 2).unwrap()).unwrap();
    let raw = orbit_of(&klein, &[1, 2], false);
    assert_eq!(raw.len(), 6);
    assert_eq!(raw_orbit_verdict(&klein, &[1, 2], 100), NielsenVerdict::NielsenIrredundant);
}

#[test]
fn orbit_counts_match_enumeration() {
    let g = GroupSpec::psl(2, 5).unwrap();
    let tg = TabulatedGroup::from_spec(&g).unwrap();
    let mut generating = 0u128;
    for a in 0..60 {
        for b in 0..60 {
            generating += (bitmask_closure(&tg, &[a, b]).len() == 60) as u128;
        }
    }
    let s = orbit_statistics(&g, 2).unwrap();
    assert_eq!(s.generating_tuples, generating);
    assert_eq!(s.orbit_sizes.iter().sum::<u128>(), generating);
    // Nielsen moves fix the conjugacy class of the commutator up to
    // inversion; generating pairs of A5 have commutators of order 3 or 5
    // (two classes), and each class is a single orbit.
    assert_eq!(s.orbits(), 3);
}

#[test]
fn mu_never_exceeds_m() {
    for d in ["cyclic:2^2", "cyclic:3^2", "psl2:5", "sl2:5", "psl2:7"] {
        let g: GroupSpec = d.parse().unwrap();
        let m = max_irredundant_size(&g, &SearchLimits::default()).unwrap();
        let mu = mu_rank(&g, &SearchLimits::default()).unwrap();
        assert!(m.exhaustive && mu.exhaustive);
        assert!(mu.computed <= m.computed, "{d}");
    }
}
