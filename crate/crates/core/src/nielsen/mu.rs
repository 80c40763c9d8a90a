//! μ(G) and orbit statistics for tabulated groups.
//!
//! A redundant tuple is Nielsen-redundant with the empty move path, so only
//! irredundant generating tuples need an orbit search, and by Nielsen moves
//! one ordering per set suffices (swaps permute entries). Tuples of the
//! minimal generating size d(G) are always Nielsen-irredundant: every tuple
//! in their orbit generates, and a redundant one would give a generating
//! set of size d(G) − 1. So μ is the largest k > d(G) with a
//! Nielsen-irredundant irredundant k-set, or d(G) if there is none.

use std::collections::HashSet;
use std::time::Instant;

use super::{orbit_search, tuple_is_redundant, NielsenMove, NielsenVerdict};
use crate::error::{Error, Result};
use crate::groups::{GroupSpec, Ix, TabulatedGroup, TABLE_LIMIT};
use crate::redundancy::{level_search, LevelMode, RankKind, RankSearchResult, SearchLimits, StopReason};

/// Computes μ(G) for a group that can be tabulated.
pub fn mu_rank(g: &GroupSpec, limits: &SearchLimits) -> Result<RankSearchResult> {
    let start = Instant::now();
    let order = g
        .order()
        .ok_or_else(|| Error::Unsupported("μ of an infinite group".into()))?;
    if order > TABLE_LIMIT as u128 {
        return Err(Error::TooLarge {
            order,
            limit: TABLE_LIMIT as u128,
        });
    }
    let tg = TabulatedGroup::from_spec(g)?;
    let run = level_search(&tg, LevelMode::Collect, None, limits);
    let mut stats = run.stats;
    let mut exhaustive = run.exhaustive;
    let mut stop = run.stop;
    let sizes: Vec<usize> = run.by_size.iter().filter(|(_, v)| !v.is_empty()).map(|(&k, _)| k).collect();
    let (Some(&d), Some(&m)) = (sizes.first(), sizes.last()) else {
        stats.wall_time = start.elapsed();
        return Ok(RankSearchResult {
            group: g.clone(),
            kind: RankKind::Nielsen,
            computed: 0,
            witness: (order == 1).then(|| tg.to_tuple(&[])),
            exhaustive,
            upper_bound: exhaustive.then_some(0),
            stop,
            stats,
        });
    };

    let mut known: HashSet<Vec<Ix>> = HashSet::new();
    let mut found: Option<(usize, Vec<Ix>)> = None;
    let mut unknown_above: Option<usize> = None;
    let mut budget_left = limits.node_budget.saturating_sub(stats.nodes);
    'sizes: for k in (d + 1..=m).rev() {
        for set in &run.by_size[&k] {
            if start.elapsed() > limits.time_budget {
                stop = Some(StopReason::TimeBudget);
                exhaustive = false;
                unknown_above.get_or_insert(k);
                break 'sizes;
            }
            let orbit = orbit_search(&tg, set, true, Some(&known), budget_left.min(usize::MAX as u64) as usize, true);
            stats.nodes += orbit.visited as u64;
            budget_left = budget_left.saturating_sub(orbit.visited as u64);
            match orbit.verdict {
                NielsenVerdict::NielsenRedundant { .. } => known.extend(orbit.seen),
                NielsenVerdict::NielsenIrredundant => {
                    found = Some((k, set.clone()));
                    break 'sizes;
                }
                NielsenVerdict::Unknown => {
                    stop = Some(StopReason::NodeBudget);
                    exhaustive = false;
                    unknown_above.get_or_insert(k);
                }
            }
        }
    }
    let (mu, witness) = found.unwrap_or_else(|| (d, run.by_size[&d][0].clone()));
    stats.prunes += known.len() as u64;
    stats.wall_time = start.elapsed();
    let upper_bound = if exhaustive {
        Some(mu)
    } else if run.exhaustive {
        Some(unknown_above.unwrap_or(mu).max(mu))
    } else {
        None
    };
    Ok(RankSearchResult {
        group: g.clone(),
        kind: RankKind::Nielsen,
        computed: mu,
        witness: Some(tg.to_tuple(&witness)),
        exhaustive,
        upper_bound,
        stop,
        stats,
    })
}

/// Nielsen orbits on generating `n`-tuples, counted up to conjugacy and in
/// raw tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitStatistics {
    pub group: GroupSpec,
    pub n: usize,
    /// Conjugacy classes of generating n-tuples.
    pub classes: usize,
    /// Number of generating n-tuples.
    pub generating_tuples: u128,
    /// Raw size of each orbit, in increasing order.
    pub orbit_sizes: Vec<u128>,
    pub redundant_orbits: usize,
}

impl OrbitStatistics {
    pub fn orbits(&self) -> usize {
        self.orbit_sizes.len()
    }

    /// Orbits meeting a redundant tuple, as (numerator, denominator).
    pub fn redundant_fraction(&self) -> (usize, usize) {
        (self.redundant_orbits, self.orbits())
    }
}

/// Largest group accepted by [`orbit_statistics`].
pub const ORBIT_STATISTICS_LIMIT: u128 = 1000;

/// Enumerates generating `n`-tuples up to conjugacy and splits them into
/// Nielsen orbits.
pub fn orbit_statistics(g: &GroupSpec, n: usize) -> Result<OrbitStatistics> {
    let order = g
        .order()
        .ok_or_else(|| Error::Unsupported("orbit statistics of an infinite group".into()))?;
    if order > ORBIT_STATISTICS_LIMIT {
        return Err(Error::TooLarge {
            order,
            limit: ORBIT_STATISTICS_LIMIT,
        });
    }
    let tg = TabulatedGroup::from_spec(g)?;
    let size = tg.order();
    let reps = tg.class_reps().len();
    let work = (reps as u128).saturating_mul((size as u128).saturating_pow(n.saturating_sub(1) as u32));
    if work > 50_000_000 {
        return Err(Error::TooLarge {
            order: work,
            limit: 50_000_000,
        });
    }
    let empty = OrbitStatistics {
        group: g.clone(),
        n,
        classes: 0,
        generating_tuples: 0,
        orbit_sizes: Vec::new(),
        redundant_orbits: 0,
    };
    if n == 0 {
        return Ok(empty);
    }
    // The first entry can be taken to be a class representative.
    let mut classes: Vec<Vec<Ix>> = Vec::new();
    let mut tuple = vec![0 as Ix; n];
    for &r in tg.class_reps() {
        tuple[0] = r;
        let tail = n - 1;
        let total = size.pow(tail as u32);
        for code in 0..total {
            let mut c = code;
            for slot in tuple[1..].iter_mut() {
                *slot = (c % size) as Ix;
                c /= size;
            }
            if tg.generates(&tuple) {
                classes.push(tg.canonical_tuple(&tuple));
            }
        }
    }
    classes.sort_unstable();
    classes.dedup();
    let center = tg.class_reps().iter().filter(|&&r| tg.class_size(r) == 1).count();
    let class_size = (size / center) as u128;

    let index: std::collections::HashMap<&[Ix], usize> =
        classes.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let moves = NielsenMove::all(n);
    let mut orbit_of = vec![usize::MAX; classes.len()];
    let mut orbit_sizes = Vec::new();
    let mut redundant_orbits = 0;
    for startc in 0..classes.len() {
        if orbit_of[startc] != usize::MAX {
            continue;
        }
        let id = orbit_sizes.len();
        orbit_of[startc] = id;
        let mut queue = vec![startc];
        let mut head = 0;
        let mut redundant = false;
        while head < queue.len() {
            let t = &classes[queue[head]];
            head += 1;
            redundant |= tuple_is_redundant(&tg, t);
            for m in &moves {
                let mut c = t.clone();
                m.apply_indices(&tg, &mut c);
                let c = tg.canonical_tuple(&c);
                let k = index[c.as_slice()];
                if orbit_of[k] == usize::MAX {
                    orbit_of[k] = id;
                    queue.push(k);
                }
            }
        }
        orbit_sizes.push(queue.len() as u128 * class_size);
        redundant_orbits += redundant as usize;
    }
    orbit_sizes.sort_unstable();
    Ok(OrbitStatistics {
        classes: classes.len(),
        generating_tuples: classes.len() as u128 * class_size,
        orbit_sizes,
        redundant_orbits,
        ..empty
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_group() {
        let g = GroupSpec::cyclic_power(2, 2).unwrap();
        let s = orbit_statistics(&g, 2).unwrap();
        assert_eq!(s.generating_tuples, 6);
        assert_eq!(s.orbit_sizes, vec![6]);
        assert_eq!(s.redundant_fraction(), (0, 1));
        assert_eq!(orbit_statistics(&g, 0).unwrap().orbits(), 0);
        let mu = mu_rank(&g, &SearchLimits::default()).unwrap();
        assert_eq!(mu.computed, 2);
        assert!(mu.exhaustive);
    }

    #[test]
    fn a5_mu_and_triples() {
        let g = GroupSpec::psl(2, 5).unwrap();
        let mu = mu_rank(&g, &SearchLimits::default()).unwrap();
        assert_eq!(mu.computed, 2);
        assert!(mu.exhaustive);
        let s = orbit_statistics(&g, 3).unwrap();
        assert!(s.orbits() > 0);
        assert_eq!(s.redundant_orbits, s.orbits());
        assert_eq!(s.orbit_sizes.iter().sum::<u128>(), s.generating_tuples);
    }
}
