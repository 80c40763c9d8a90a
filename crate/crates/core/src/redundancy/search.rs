//! Exhaustive search for irredundant generating sets on a tabulated group.
//!
//! Call a set S *independent* if no x ∈ S lies in ⟨S ∖ {x}⟩. Irredundant
//! generating sets are exactly the independent generating sets, and every
//! subset of an independent set is independent. So the search grows
//! independent sets one element at a time, level by level:
//!
//! * each carried set S is non-generating and independent, and is extended
//!   by every allowed x ∉ ⟨S⟩;
//! * the extensions are brought to a canonical form under conjugation
//!   ([`TabulatedGroup::canonical_set`]) and deduplicated;
//! * an extension that generates is a leaf: adding anything to a generating
//!   set makes it redundant. If it is independent it witnesses its size;
//! * an extension that does not generate is carried when independent and
//!   dropped otherwise, since no superset of a dependent set is independent.
//!
//! Because independence and generation are conjugation invariant, every
//! conjugacy class of independent sets is reached, so a search that runs
//! out of carried sets has computed m(G) exactly. Each level is processed in
//! parallel but merged in sorted order, so results do not depend on the
//! number of worker threads.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::random::random_witness;
use crate::error::{Error, Result};
use crate::groups::{GeneratingTuple, GroupSpec, Ix, TabulatedGroup, TABLE_LIMIT};

/// Budgets for the rank searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Stop after this tuple size.
    pub max_size: Option<usize>,
    /// Work units: candidate sets at table level, visited elements or
    /// tuples elsewhere. Checked before each level, so it never cuts a level
    /// in half.
    pub node_budget: u64,
    pub time_budget: Duration,
    /// Seed for the sampling mode used on groups too large to tabulate.
    pub seed: u64,
    /// Number of sampling attempts in that mode.
    pub samples: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_size: None,
            node_budget: 100_000_000,
            time_budget: Duration::from_secs(600),
            seed: 0,
            samples: 64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankKind {
    /// m(G): irredundant generating sets.
    Redundancy,
    /// μ(G): Nielsen-irredundant generating tuples.
    Nielsen,
}

impl fmt::Display for RankKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankKind::Redundancy => "m",
            RankKind::Nielsen => "mu",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StopReason {
    NodeBudget,
    TimeBudget,
    MaxSize,
    /// The group was too large to tabulate and was only sampled.
    Sampling,
}

impl fmt::Display for StopReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StopReason::NodeBudget => "node budget",
            StopReason::TimeBudget => "time budget",
            StopReason::MaxSize => "max size",
            StopReason::Sampling => "sampling only",
        })
    }
}

/// Per-level counters. `size` is the size of the sets built at this level.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelStats {
    pub size: usize,
    /// Extensions S ∪ {x} before deduplication.
    pub candidates: u64,
    /// Distinct conjugacy classes among them.
    pub classes: usize,
    pub generating: usize,
    /// Irredundant generating classes; only counted when every one is needed.
    pub irredundant_generating: Option<usize>,
    /// Independent non-generating classes carried to the next level.
    pub carried: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub levels: Vec<LevelStats>,
    pub wall_time: Duration,
}

/// Output of [`max_irredundant_size`] and of the μ search.
#[derive(Clone, Debug)]
pub struct RankSearchResult {
    pub group: GroupSpec,
    pub kind: RankKind,
    /// Largest size with a verified witness. A lower bound unless exhaustive.
    pub computed: usize,
    pub witness: Option<GeneratingTuple>,
    pub exhaustive: bool,
    /// Equal to `computed` when exhaustive; otherwise the subgroup-chain
    /// bound Ω(|G|) or a bound found by the search.
    pub upper_bound: Option<usize>,
    pub stop: Option<StopReason>,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum LevelMode {
    /// Track the largest witness only.
    Max,
    /// Keep every irredundant generating class, by size.
    Collect,
    /// Stop at this size.
    Target(usize),
}

pub(crate) struct LevelOutcome {
    pub best: usize,
    pub witness: Option<Vec<Ix>>,
    pub by_size: BTreeMap<usize, Vec<Vec<Ix>>>,
    pub exhaustive: bool,
    pub stop: Option<StopReason>,
    pub stats: SearchStats,
}

fn independent(g: &TabulatedGroup, set: &[Ix]) -> bool {
    let mut rest = Vec::with_capacity(set.len());
    (0..set.len()).all(|i| {
        rest.clear();
        rest.extend(set.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &y)| y));
        !g.in_closure(&rest, set[i])
    })
}

/// The level-wise search described in the module docs.
pub(crate) fn level_search(
    g: &TabulatedGroup,
    mode: LevelMode,
    allowed: Option<&[bool]>,
    limits: &SearchLimits,
) -> LevelOutcome {
    let start = Instant::now();
    let deadline = start.checked_add(limits.time_budget);
    let late = || deadline.is_some_and(|d| Instant::now() > d);
    let n = g.order();
    let mut out = LevelOutcome {
        best: 0,
        witness: None,
        by_size: BTreeMap::new(),
        exhaustive: false,
        stop: None,
        stats: SearchStats::default(),
    };
    if n == 1 {
        out.witness = Some(Vec::new());
        out.exhaustive = true;
        return out;
    }
    let mut max_size = limits.max_size.unwrap_or(usize::MAX);
    if let LevelMode::Target(k) = mode {
        max_size = max_size.min(k);
    }
    let is_allowed = |x: Ix| x != 0 && allowed.is_none_or(|a| a[x as usize]);
    let aborted = AtomicBool::new(false);
    let mut carried: Vec<Vec<Ix>> = vec![Vec::new()];
    let mut size = 0;
    loop {
        if carried.is_empty() {
            out.exhaustive = true;
            break;
        }
        if size >= max_size {
            if matches!(mode, LevelMode::Target(k) if k == size) {
                out.exhaustive = true;
            } else {
                out.stop = Some(StopReason::MaxSize);
            }
            break;
        }
        let estimate = carried.len() as u64 * n as u64;
        if out.stats.nodes + estimate > limits.node_budget {
            out.stop = Some(StopReason::NodeBudget);
            break;
        }
        if late() {
            out.stop = Some(StopReason::TimeBudget);
            break;
        }

        let mut cands: Vec<Vec<Ix>> = carried
            .par_iter()
            .flat_map_iter(|s| {
                if late() {
                    aborted.store(true, Ordering::Relaxed);
                }
                let inside = g.closure(s);
                let mut local: Vec<Vec<Ix>> = (0..n as Ix)
                    .filter(|&x| is_allowed(x) && !inside.contains(x))
                    .map(|x| {
                        let mut t = s.clone();
                        t.push(x);
                        g.canonical_set(&t)
                    })
                    .collect();
                local.sort_unstable();
                local.dedup();
                local
            })
            .collect();
        let raw = cands.len() as u64;
        cands.par_sort_unstable();
        cands.dedup();

        let flags: Vec<(bool, bool)> = cands
            .par_iter()
            .map(|t| {
                if late() {
                    aborted.store(true, Ordering::Relaxed);
                    return (false, false);
                }
                let gen = g.generates(t);
                let indep = if gen && mode != LevelMode::Collect {
                    false
                } else {
                    independent(g, t)
                };
                (gen, indep)
            })
            .collect();
        let generating: Vec<&Vec<Ix>> = cands.iter().zip(&flags).filter(|(_, f)| f.0).map(|(t, _)| t).collect();
        let level_witness: Vec<Vec<Ix>> = match mode {
            LevelMode::Collect => cands
                .iter()
                .zip(&flags)
                .filter(|(_, f)| f.0 && f.1)
                .map(|(t, _)| t.clone())
                .collect(),
            _ => generating
                .par_iter()
                .find_first(|t| independent(g, t))
                .map(|t| vec![(*t).clone()])
                .unwrap_or_default(),
        };
        if aborted.load(Ordering::Relaxed) {
            out.stop = Some(StopReason::TimeBudget);
            break;
        }
        size += 1;
        let next: Vec<Vec<Ix>> = cands
            .iter()
            .zip(&flags)
            .filter(|(_, f)| !f.0 && f.1)
            .map(|(t, _)| t.clone())
            .collect();
        out.stats.nodes += raw + cands.len() as u64;
        out.stats.prunes += estimate - raw + (cands.len() - generating.len() - next.len()) as u64;
        out.stats.levels.push(LevelStats {
            size,
            candidates: raw,
            classes: cands.len(),
            generating: generating.len(),
            irredundant_generating: (mode == LevelMode::Collect).then_some(level_witness.len()),
            carried: next.len(),
        });
        if let Some(w) = level_witness.first() {
            out.best = size;
            out.witness = Some(w.clone());
        }
        if mode == LevelMode::Collect {
            out.by_size.insert(size, level_witness);
        }
        carried = next;
    }
    out.stats.wall_time = start.elapsed();
    out
}

/// Ω(n): prime factors counted with multiplicity. Bounds the length of any
/// subgroup chain, hence the size of any independent set.
pub(crate) fn chain_bound(mut n: u128) -> usize {
    let mut count = 0;
    let mut d = 2u128;
    while d * d <= n {
        while n.is_multiple_of(d) {
            n /= d;
            count += 1;
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

/// Computes m(G) by exhaustive search when the group can be tabulated, and
/// a sampled lower bound otherwise.
pub fn max_irredundant_size(g: &GroupSpec, limits: &SearchLimits) -> Result<RankSearchResult> {
    let Some(order) = g.order() else {
        return Err(Error::Unsupported("m(Z) is infinite; see z_witness for explicit witnesses".into()));
    };
    if order > TABLE_LIMIT as u128 {
        return super::random_irredundant_search(g, limits);
    }
    let start = Instant::now();
    let tg = TabulatedGroup::from_spec(g)?;
    let run = level_search(&tg, LevelMode::Max, None, limits);
    let mut stats = run.stats;
    let mut computed = run.best;
    let mut witness = run.witness.map(|w| tg.to_tuple(&w));
    // A node-limited level search only saw small sets; sampling often finds
    // longer independent chains.
    if run.stop == Some(StopReason::NodeBudget) && limits.samples > 0 {
        let sampled = super::random_irredundant_search(g, limits)?;
        stats.nodes += sampled.stats.nodes;
        if sampled.computed > computed {
            computed = sampled.computed;
            witness = sampled.witness;
        }
    }
    stats.wall_time = start.elapsed();
    Ok(RankSearchResult {
        group: g.clone(),
        kind: RankKind::Redundancy,
        computed,
        witness,
        exhaustive: run.exhaustive,
        upper_bound: Some(if run.exhaustive { computed } else { chain_bound(order) }),
        stop: run.stop,
        stats,
    })
}

/// Conjugation-invariant restrictions on witness entries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WitnessConstraints {
    /// Every entry has order 2.
    pub involutions_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessOutcome {
    Found(GeneratingTuple),
    /// The constrained search space was exhausted.
    NoneExists,
    Indeterminate(StopReason),
}

/// An irredundant generating `k`-tuple meeting the constraints. On a
/// tabulated group the least one in canonical order is returned.
pub fn irredundant_witness(
    g: &GroupSpec,
    k: usize,
    constraints: WitnessConstraints,
    limits: &SearchLimits,
) -> Result<WitnessOutcome> {
    let Some(order) = g.order() else {
        return Err(Error::Unsupported("use z_witness for Z".into()));
    };
    if k == 0 {
        return Ok(if order == 1 {
            WitnessOutcome::Found(GeneratingTuple::new(g.clone(), vec![])?)
        } else {
            WitnessOutcome::NoneExists
        });
    }
    if order > TABLE_LIMIT as u128 {
        return random_witness(g, k, constraints, limits);
    }
    let tg = TabulatedGroup::from_spec(g)?;
    let allowed: Option<Vec<bool>> = constraints
        .involutions_only
        .then(|| (0..tg.order() as Ix).map(|x| tg.element_order(x) == 2).collect());
    let mut limits = limits.clone();
    limits.max_size = None;
    let run = level_search(&tg, LevelMode::Target(k), allowed.as_deref(), &limits);
    Ok(match run.witness {
        Some(w) if w.len() == k => WitnessOutcome::Found(tg.to_tuple(&w)),
        _ if run.exhaustive => WitnessOutcome::NoneExists,
        _ => WitnessOutcome::Indeterminate(run.stop.unwrap_or(StopReason::NodeBudget)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Element;
    use crate::redundancy::{is_redundant, RedundancyVerdict};

    #[test]
    fn torus_surrogate_small() {
        for (m, k) in [(2u32, 1usize), (2, 2), (3, 3), (5, 2)] {
            let g = GroupSpec::cyclic_power(m, k).unwrap();
            let r = max_irredundant_size(&g, &SearchLimits::default()).unwrap();
            assert!(r.exhaustive);
            assert_eq!(r.computed, k, "{g}");
        }
        let klein = GroupSpec::cyclic_power(2, 2).unwrap();
        let r = max_irredundant_size(&klein, &SearchLimits::default()).unwrap();
        assert_eq!(
            r.witness.unwrap().items(),
            &[Element::Vector(vec![0, 1]), Element::Vector(vec![1, 0])]
        );
    }

    #[test]
    fn psl2_5_rank_and_witness() {
        let g = GroupSpec::psl(2, 5).unwrap();
        let r = max_irredundant_size(&g, &SearchLimits::default()).unwrap();
        assert!(r.exhaustive);
        assert!((3..=4).contains(&r.computed));
        let w = r.witness.unwrap();
        assert_eq!(w.len(), r.computed);
        assert_eq!(is_redundant(&w).unwrap().verdict, RedundancyVerdict::IrredundantGenerating);
    }

    #[test]
    fn witness_examples() {
        let l = SearchLimits::default();
        let psl5 = GroupSpec::psl(2, 5).unwrap();
        assert_eq!(irredundant_witness(&psl5, 1, WitnessConstraints::default(), &l).unwrap(), WitnessOutcome::NoneExists);
        let sl5 = GroupSpec::sl(2, 5).unwrap();
        assert!(matches!(
            irredundant_witness(&sl5, 2, WitnessConstraints::default(), &l).unwrap(),
            WitnessOutcome::Found(_)
        ));
        let psl7 = GroupSpec::psl(2, 7).unwrap();
        let inv = WitnessConstraints { involutions_only: true };
        let WitnessOutcome::Found(t) = irredundant_witness(&psl7, 3, inv, &l).unwrap() else {
            panic!("no involution triple");
        };
        assert_eq!(is_redundant(&t).unwrap().verdict, RedundancyVerdict::IrredundantGenerating);
        for x in t.items() {
            assert_eq!(psl7.element_order(x, 10).unwrap(), 2);
        }
    }

    #[test]
    fn budget_gives_lower_bound() {
        let g = GroupSpec::psl(2, 7).unwrap();
        let l = SearchLimits { node_budget: 2_000, ..Default::default() };
        let r = max_irredundant_size(&g, &l).unwrap();
        assert!(!r.exhaustive);
        assert_eq!(r.stop, Some(StopReason::NodeBudget));
        assert!(r.upper_bound.unwrap() >= r.computed);
    }

    #[test]
    fn chain_bounds() {
        assert_eq!(chain_bound(60), 4);
        assert_eq!(chain_bound(5616), 8);
        assert_eq!(chain_bound(1), 0);
    }
}
