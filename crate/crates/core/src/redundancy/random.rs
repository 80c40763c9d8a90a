//! Seeded sampling for groups too large to tabulate (SL₃(F₅) and up).
//!
//! Each attempt grows an independent set greedily from random elements
//! until it generates. Half of the draws are random conjugates of the
//! standard transvections, which generate small subgroups and so tend to
//! give long chains. Results are lower bounds only.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::search::{chain_bound, RankKind, RankSearchResult, SearchLimits, SearchStats, StopReason};
use super::{WitnessConstraints, WitnessOutcome};
use crate::error::{Error, Result};
use crate::groups::{Element, GeneratingTuple, GroupSpec, CLOSURE_LIMIT};

struct Sampler<'a> {
    g: &'a GroupSpec,
    rng: ChaCha8Rng,
    state: Vec<Element>,
    seeds: Vec<Element>,
}

impl<'a> Sampler<'a> {
    fn new(g: &'a GroupSpec, seed: u64) -> Result<Self> {
        let seeds: Vec<Element> = g
            .standard_generators()
            .into_iter()
            .filter(|x| !g.is_identity(x))
            .collect();
        if seeds.is_empty() {
            return Err(Error::Unsupported(format!("sampling in {g}")));
        }
        let mut state = seeds.clone();
        while state.len() < 10 {
            state.push(seeds[state.len() % seeds.len()].clone());
        }
        let mut s = Self {
            g,
            rng: ChaCha8Rng::seed_from_u64(seed),
            state,
            seeds,
        };
        for _ in 0..100 {
            s.step()?;
        }
        Ok(s)
    }

    /// One product-replacement step; returns the updated entry.
    fn step(&mut self) -> Result<Element> {
        let n = self.state.len();
        let i = self.rng.gen_range(0..n);
        let mut j = self.rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let y = if self.rng.gen_bool(0.5) {
            self.g.inverse(&self.state[j])?
        } else {
            self.state[j].clone()
        };
        self.state[i] = if self.rng.gen_bool(0.5) {
            self.g.multiply(&self.state[i], &y)?
        } else {
            self.g.multiply(&y, &self.state[i])?
        };
        Ok(self.state[i].clone())
    }

    fn draw(&mut self) -> Result<Element> {
        let r = self.step()?;
        if self.rng.gen_bool(0.5) {
            let s = self.seeds[self.rng.gen_range(0..self.seeds.len())].clone();
            self.g.conjugate(&s, &r)
        } else {
            Ok(r)
        }
    }
}

/// Subgroup generated by `items`, or `None` once it passes half the group
/// order, which no proper subgroup can.
fn capped_closure(g: &GroupSpec, items: &[Element], half: usize, nodes: &mut u64) -> Result<Option<HashSet<Element>>> {
    let gens: Vec<&Element> = items.iter().filter(|x| !g.is_identity(x)).collect();
    let id = g.identity();
    let mut seen: HashSet<Element> = HashSet::from([id.clone()]);
    let mut list = vec![id];
    let mut head = 0;
    while head < list.len() {
        let x = list[head].clone();
        head += 1;
        for s in &gens {
            let y = g.multiply(&x, s)?;
            if !seen.contains(&y) {
                if list.len() >= half {
                    *nodes += list.len() as u64;
                    return Ok(None);
                }
                seen.insert(y.clone());
                list.push(y);
            }
        }
    }
    *nodes += list.len() as u64;
    Ok(Some(seen))
}

struct Attempt {
    tuple: Vec<Element>,
    generates: bool,
}

/// Grows one independent set. With `target`, stops at that size.
fn attempt(
    s: &mut Sampler<'_>,
    half: usize,
    target: Option<usize>,
    constraints: WitnessConstraints,
    nodes: &mut u64,
) -> Result<Attempt> {
    let g = s.g;
    let mut set: Vec<Element> = Vec::new();
    let mut inside: HashSet<Element> = HashSet::from([g.identity()]);
    let mut failures = 0;
    while failures < 24 {
        let x = s.draw()?;
        if inside.contains(&x) || (constraints.involutions_only && !g.is_identity(&g.multiply(&x, &x)?)) {
            failures += 1;
            continue;
        }
        let mut t = set.clone();
        t.push(x);
        let independent = (0..set.len()).try_fold(true, |ok, i| -> Result<bool> {
            if !ok {
                return Ok(false);
            }
            let rest: Vec<Element> = t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, y)| y.clone()).collect();
            Ok(match capped_closure(g, &rest, half, nodes)? {
                Some(c) => !c.contains(&t[i]),
                None => false,
            })
        })?;
        if !independent {
            failures += 1;
            continue;
        }
        set = t;
        match capped_closure(g, &set, half, nodes)? {
            None => return Ok(Attempt { tuple: set, generates: true }),
            Some(c) => inside = c,
        }
        if target.is_some_and(|k| set.len() >= k) {
            break;
        }
    }
    Ok(Attempt { tuple: set, generates: false })
}

fn check_sampleable(g: &GroupSpec) -> Result<usize> {
    let order = g
        .order()
        .ok_or_else(|| Error::Unsupported("sampling an infinite group".into()))?;
    if order > CLOSURE_LIMIT {
        return Err(Error::TooLarge { order, limit: CLOSURE_LIMIT });
    }
    Ok((order / 2) as usize)
}

/// Sampled lower bound for m(G).
pub fn random_irredundant_search(g: &GroupSpec, limits: &SearchLimits) -> Result<RankSearchResult> {
    let start = Instant::now();
    let half = check_sampleable(g)?;
    let mut s = Sampler::new(g, limits.seed)?;
    let mut stats = SearchStats::default();
    let mut best: Option<Vec<Element>> = None;
    let mut stop = StopReason::Sampling;
    for _ in 0..limits.samples {
        if stats.nodes > limits.node_budget {
            stop = StopReason::NodeBudget;
            break;
        }
        if start.elapsed() > limits.time_budget {
            stop = StopReason::TimeBudget;
            break;
        }
        let a = attempt(&mut s, half, limits.max_size, WitnessConstraints::default(), &mut stats.nodes)?;
        if a.generates && best.as_ref().is_none_or(|b| a.tuple.len() > b.len()) {
            best = Some(a.tuple);
        } else {
            stats.prunes += 1;
        }
    }
    stats.wall_time = start.elapsed();
    Ok(RankSearchResult {
        group: g.clone(),
        kind: RankKind::Redundancy,
        computed: best.as_ref().map_or(0, |b| b.len()),
        witness: best.map(|b| GeneratingTuple::new_unchecked(g.clone(), b)),
        exhaustive: false,
        upper_bound: g.order().map(chain_bound),
        stop: Some(stop),
        stats,
    })
}

/// Sampled search for a constrained irredundant generating `k`-tuple.
pub(crate) fn random_witness(
    g: &GroupSpec,
    k: usize,
    constraints: WitnessConstraints,
    limits: &SearchLimits,
) -> Result<WitnessOutcome> {
    let start = Instant::now();
    let half = check_sampleable(g)?;
    let mut s = Sampler::new(g, limits.seed)?;
    let mut nodes = 0;
    for _ in 0..limits.samples {
        if nodes > limits.node_budget {
            return Ok(WitnessOutcome::Indeterminate(StopReason::NodeBudget));
        }
        if start.elapsed() > limits.time_budget {
            return Ok(WitnessOutcome::Indeterminate(StopReason::TimeBudget));
        }
        let a = attempt(&mut s, half, Some(k), constraints, &mut nodes)?;
        if a.generates && a.tuple.len() == k {
            return Ok(WitnessOutcome::Found(GeneratingTuple::new_unchecked(g.clone(), a.tuple)));
        }
    }
    Ok(WitnessOutcome::Indeterminate(StopReason::Sampling))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::redundancy::{is_redundant, RedundancyVerdict};

    #[test]
    fn sampled_witnesses_are_irredundant() {
        let g = GroupSpec::psl(2, 7).unwrap();
        let l = SearchLimits { samples: 6, seed: 3, ..Default::default() };
        let r = random_irredundant_search(&g, &l).unwrap();
        assert!(r.computed >= 2);
        let w = r.witness.unwrap();
        assert_eq!(is_redundant(&w).unwrap().verdict, RedundancyVerdict::IrredundantGenerating);
        let again = random_irredundant_search(&g, &l).unwrap();
        assert_eq!(again.witness.unwrap(), w);
    }
}
