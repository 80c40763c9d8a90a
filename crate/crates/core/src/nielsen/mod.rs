//! Elementary Nielsen moves and orbits of generating tuples.
//!
//! The moves below generate the action of Aut(F_n) on n-tuples (Nielsen),
//! so a tuple is Nielsen-redundant iff some tuple reachable by moves is
//! redundant. Moves commute with simultaneous conjugation and redundancy is
//! conjugation invariant, so the orbit search works on conjugacy classes of
//! tuples: each visited tuple is replaced by
//! [`TabulatedGroup::canonical_tuple`]. Replaying a move path on the
//! original tuple then lands on a conjugate of the tuple the search found.

mod mu;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{is_generating, GeneratingTuple, Ix, TabulatedGroup, TABLE_LIMIT};
use crate::redundancy::is_redundant;

pub use mu::{mu_rank, orbit_statistics, OrbitStatistics};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// An elementary Nielsen move. Indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NielsenMove {
    /// `x_i ← x_j^s · x_i`
    LeftMult(usize, usize, Sign),
    /// `x_i ← x_i · x_j^s`
    RightMult(usize, usize, Sign),
    /// `x_i ← x_i⁻¹`
    Invert(usize),
    /// exchange `x_i` and `x_j`
    Swap(usize, usize),
}

impl NielsenMove {
    pub fn validate(&self, len: usize) -> Result<()> {
        let (i, j) = match *self {
            NielsenMove::LeftMult(i, j, _) | NielsenMove::RightMult(i, j, _) | NielsenMove::Swap(i, j) => (i, Some(j)),
            NielsenMove::Invert(i) => (i, None),
        };
        for k in std::iter::once(i).chain(j) {
            if k >= len {
                return Err(Error::InvalidIndex { index: k, len });
            }
        }
        if j == Some(i) {
            return Err(Error::InvalidIndex { index: i, len });
        }
        Ok(())
    }

    /// The move undoing this one.
    pub fn inverse(&self) -> Self {
        match *self {
            NielsenMove::LeftMult(i, j, s) => NielsenMove::LeftMult(i, j, s.flip()),
            NielsenMove::RightMult(i, j, s) => NielsenMove::RightMult(i, j, s.flip()),
            m => m,
        }
    }

    /// Every move on an `n`-tuple, in a fixed order.
    pub fn all(n: usize) -> Vec<NielsenMove> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    for s in [Sign::Plus, Sign::Minus] {
                        out.push(NielsenMove::LeftMult(i, j, s));
                        out.push(NielsenMove::RightMult(i, j, s));
                    }
                }
            }
        }
        out.extend((0..n).map(NielsenMove::Invert));
        for i in 0..n {
            for j in i + 1..n {
                out.push(NielsenMove::Swap(i, j));
            }
        }
        out
    }

    /// Applies the move to a tuple of table indices.
    pub fn apply_indices(&self, g: &TabulatedGroup, t: &mut [Ix]) {
        let pow = |x: Ix, s: Sign| if s == Sign::Plus { x } else { g.inv(x) };
        match *self {
            NielsenMove::LeftMult(i, j, s) => t[i] = g.mul(pow(t[j], s), t[i]),
            NielsenMove::RightMult(i, j, s) => t[i] = g.mul(t[i], pow(t[j], s)),
            NielsenMove::Invert(i) => t[i] = g.inv(t[i]),
            NielsenMove::Swap(i, j) => t.swap(i, j),
        }
    }
}

impl fmt::Display for NielsenMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |s: &Sign| if *s == Sign::Plus { "" } else { "^-1" };
        match self {
            NielsenMove::LeftMult(i, j, s) => write!(f, "x{i} <- x{j}{} x{i}", sign(s)),
            NielsenMove::RightMult(i, j, s) => write!(f, "x{i} <- x{i} x{j}{}", sign(s)),
            NielsenMove::Invert(i) => write!(f, "x{i} <- x{i}^-1"),
            NielsenMove::Swap(i, j) => write!(f, "swap x{i} x{j}"),
        }
    }
}

/// Applies a move to a tuple. Generation is preserved.
pub fn apply_move(t: &GeneratingTuple, m: NielsenMove) -> Result<GeneratingTuple> {
    m.validate(t.len())?;
    let g = t.group();
    let mut items = t.items().to_vec();
    let pow = |x: &crate::groups::Element, s: Sign| -> Result<_> {
        if s == Sign::Plus {
            Ok(x.clone())
        } else {
            g.inverse(x)
        }
    };
    match m {
        NielsenMove::LeftMult(i, j, s) => items[i] = g.multiply(&pow(&items[j], s)?, &items[i])?,
        NielsenMove::RightMult(i, j, s) => items[i] = g.multiply(&items[i], &pow(&items[j], s)?)?,
        NielsenMove::Invert(i) => items[i] = g.inverse(&items[i])?,
        NielsenMove::Swap(i, j) => items.swap(i, j),
    }
    Ok(GeneratingTuple::new_unchecked(g.clone(), items))
}

/// Applies a sequence of moves.
pub fn replay(t: &GeneratingTuple, path: &[NielsenMove]) -> Result<GeneratingTuple> {
    path.iter().try_fold(t.clone(), |acc, &m| apply_move(&acc, m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NielsenVerdict {
    /// Replaying the path reaches a redundant tuple.
    NielsenRedundant { path: Vec<NielsenMove> },
    /// The whole orbit was explored without meeting a redundant tuple.
    NielsenIrredundant,
    /// The visit budget ran out first.
    Unknown,
}

impl fmt::Display for NielsenVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NielsenVerdict::NielsenRedundant { .. } => write!(f, "NielsenRedundant"),
            NielsenVerdict::NielsenIrredundant => write!(f, "NielsenIrredundant"),
            NielsenVerdict::Unknown => write!(f, "Unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub start: GeneratingTuple,
    /// Conjugacy classes of tuples visited.
    pub visited: usize,
    pub verdict: NielsenVerdict,
    pub frontier_peak: usize,
}

/// Redundancy of an index tuple that is known to generate. Cheap filters
/// first: identity entries, then repeated or mutually inverse entries.
pub fn tuple_is_redundant(g: &TabulatedGroup, t: &[Ix]) -> bool {
    if t.contains(&0) {
        return true;
    }
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if t[i] == t[j] || t[i] == g.inv(t[j]) {
                return true;
            }
        }
    }
    let mut rest = Vec::with_capacity(t.len());
    (0..t.len()).any(|i| {
        rest.clear();
        rest.extend(t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x));
        g.generates(&rest)
    })
}

pub(crate) struct OrbitRun {
    pub verdict: NielsenVerdict,
    pub visited: usize,
    pub frontier_peak: usize,
    /// Canonical tuples visited, when the caller wants them.
    pub seen: Vec<Vec<Ix>>,
}

/// Breadth-first orbit search over canonical tuples. `known` holds tuples
/// already proven Nielsen-redundant; meeting one ends the search (with a
/// path only up to that tuple, so it is not replayable to a redundant one).
pub(crate) fn orbit_search(
    g: &TabulatedGroup,
    start: &[Ix],
    canonical: bool,
    known: Option<&HashSet<Vec<Ix>>>,
    max_visited: usize,
    keep_seen: bool,
) -> OrbitRun {
    let canon = |t: &[Ix]| if canonical { g.canonical_tuple(t) } else { t.to_vec() };
    let moves = NielsenMove::all(start.len());
    let root = canon(start);
    let mut nodes: Vec<(Vec<Ix>, usize, Option<NielsenMove>)> = vec![(root.clone(), usize::MAX, None)];
    let mut index: HashMap<Vec<Ix>, usize> = HashMap::from([(root, 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut frontier_peak = 1;
    let path_to = |nodes: &[(Vec<Ix>, usize, Option<NielsenMove>)], mut k: usize| {
        let mut path = Vec::new();
        while let Some(m) = nodes[k].2 {
            path.push(m);
            k = nodes[k].1;
        }
        path.reverse();
        path
    };
    let finish = |verdict, nodes: Vec<(Vec<Ix>, usize, Option<NielsenMove>)>, peak| OrbitRun {
        verdict,
        visited: nodes.len(),
        frontier_peak: peak,
        seen: if keep_seen { nodes.into_iter().map(|n| n.0).collect() } else { Vec::new() },
    };
    while let Some(k) = queue.pop_front() {
        let t = nodes[k].0.clone();
        if tuple_is_redundant(g, &t) || known.is_some_and(|s| s.contains(&t)) {
            let path = path_to(&nodes, k);
            return finish(NielsenVerdict::NielsenRedundant { path }, nodes, frontier_peak);
        }
        let mut child = t.clone();
        for m in &moves {
            child.copy_from_slice(&t);
            m.apply_indices(g, &mut child);
            let c = canon(&child);
            if !index.contains_key(&c) {
                if nodes.len() >= max_visited {
                    return finish(NielsenVerdict::Unknown, nodes, frontier_peak);
                }
                index.insert(c.clone(), nodes.len());
                queue.push_back(nodes.len());
                nodes.push((c, k, Some(*m)));
            }
        }
        frontier_peak = frontier_peak.max(queue.len());
    }
    finish(NielsenVerdict::NielsenIrredundant, nodes, frontier_peak)
}

/// Default cap on visited classes for a single orbit search.
pub const DEFAULT_ORBIT_BUDGET: usize = 2_000_000;

/// Decides Nielsen redundancy of a generating tuple by orbit search.
pub fn is_nielsen_redundant(t: &GeneratingTuple, max_visited: usize) -> Result<OrbitReport> {
    if !t.group().is_finite() {
        return Err(Error::Unsupported("Nielsen orbits in an infinite group".into()));
    }
    if t.group().order().expect("finite") > TABLE_LIMIT as u128 {
        return Err(Error::TooLarge {
            order: t.group().order().expect("finite"),
            limit: TABLE_LIMIT as u128,
        });
    }
    if !is_generating(t)? {
        return Err(Error::NotGenerating);
    }
    let g = TabulatedGroup::from_spec(t.group())?;
    is_nielsen_redundant_in(&g, t, max_visited)
}

/// As [`is_nielsen_redundant`], reusing a tabulated group.
pub fn is_nielsen_redundant_in(g: &TabulatedGroup, t: &GeneratingTuple, max_visited: usize) -> Result<OrbitReport> {
    let ix = g.tuple_indices(t)?;
    if !g.generates(&ix) {
        return Err(Error::NotGenerating);
    }
    let run = orbit_search(g, &ix, true, None, max_visited.max(1), false);
    if let NielsenVerdict::NielsenRedundant { path } = &run.verdict {
        debug_assert!(is_redundant(&replay(t, path)?)?.droppable.iter().any(|&d| d));
    }
    Ok(OrbitReport {
        start: t.clone(),
        visited: run.visited,
        verdict: run.verdict,
        frontier_peak: run.frontier_peak,
    })
}

/// The full orbit of a tuple, either as raw tuples or as canonical classes.
pub fn orbit_of(g: &TabulatedGroup, start: &[Ix], canonical: bool) -> Vec<Vec<Ix>> {
    let moves = NielsenMove::all(start.len());
    let canon = |t: &[Ix]| if canonical { g.canonical_tuple(t) } else { t.to_vec() };
    let root = canon(start);
    let mut seen: HashSet<Vec<Ix>> = HashSet::from([root.clone()]);
    let mut queue = vec![root];
    let mut head = 0;
    while head < queue.len() {
        let t = queue[head].clone();
        head += 1;
        for m in &moves {
            let mut c = t.clone();
            m.apply_indices(g, &mut c);
            let c = canon(&c);
            if seen.insert(c.clone()) {
                queue.push(c);
            }
        }
    }
    queue.sort();
    queue
}

/// Orbit search without conjugacy reduction, for cross-checking.
pub fn raw_orbit_verdict(g: &TabulatedGroup, start: &[Ix], max_visited: usize) -> NielsenVerdict {
    orbit_search(g, start, false, None, max_visited, false).verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{psl_element, GroupSpec};
    use crate::redundancy::RedundancyVerdict;

    fn psl5_tuple(entries: &[[i64; 4]]) -> GeneratingTuple {
        let g = GroupSpec::psl(2, 5).unwrap();
        GeneratingTuple::new(g, entries.iter().map(|e| psl_element(2, 5, e).unwrap()).collect()).unwrap()
    }

    #[test]
    fn moves_invert() {
        let t = psl5_tuple(&[[0, -1, 1, 0], [1, 1, 0, 1], [1, 0, 2, 1]]);
        for m in NielsenMove::all(3) {
            let back = apply_move(&apply_move(&t, m).unwrap(), m.inverse()).unwrap();
            assert_eq!(back, t, "{m}");
        }
        let sw = apply_move(&t, NielsenMove::Swap(0, 1)).unwrap();
        assert_eq!(sw.items()[0], t.items()[1]);
        assert!(apply_move(&t, NielsenMove::Swap(1, 1)).is_err());
        assert!(apply_move(&t, NielsenMove::Invert(3)).is_err());
    }

    #[test]
    fn identity_entry_has_empty_path() {
        let g = GroupSpec::psl(2, 5).unwrap();
        let mut t = psl5_tuple(&[[0, -1, 1, 0], [1, 1, 0, 1]]).into_items();
        t.push(g.identity());
        let t = GeneratingTuple::new(g, t).unwrap();
        let r = is_nielsen_redundant(&t, 1000).unwrap();
        assert_eq!(r.verdict, NielsenVerdict::NielsenRedundant { path: vec![] });
    }

    #[test]
    fn generating_triples_of_a5_are_nielsen_redundant() {
        let t = psl5_tuple(&[[0, -1, 1, 0], [1, 1, 0, 1], [1, 0, 2, 1]]);
        let r = is_nielsen_redundant(&t, DEFAULT_ORBIT_BUDGET).unwrap();
        let NielsenVerdict::NielsenRedundant { path } = r.verdict else {
            panic!("expected redundant");
        };
        let end = replay(&t, &path).unwrap();
        assert_eq!(is_redundant(&end).unwrap().verdict, RedundancyVerdict::RedundantGenerating);
    }

    #[test]
    fn non_generating_is_rejected() {
        let t = psl5_tuple(&[[1, 1, 0, 1]]);
        assert_eq!(is_nielsen_redundant(&t, 100).unwrap_err(), Error::NotGenerating);
    }
}
