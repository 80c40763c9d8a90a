//! Finite groups as multiplication tables over element indices.
//!
//! Every exhaustive search runs on a [`TabulatedGroup`]: elements are
//! numbered by increasing element order (ties broken by the element's own
//! ordering), so index 0 is the identity and index order is the candidate
//! order used by the searches.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{Element, GeneratingTuple, GroupSpec};
use crate::error::{Error, Result};

/// Element index inside a tabulated group.
pub type Ix = u16;

/// Groups larger than this are not tabulated by default.
pub const TABLE_LIMIT: usize = 6000;

/// An explicit multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    mul: Vec<Ix>,
    inv: Vec<Ix>,
    identity: Ix,
}

impl CayleyTable {
    /// Validates a table given as rows: `rows[a][b] = a·b`. Checks the Latin
    /// property, a two-sided identity, and associativity for `n ≤ 256`.
    pub fn new(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > u16::MAX as usize {
            return Err(Error::Unsupported(format!("table of order {n}")));
        }
        let mut mul = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Parse("table is not square".into()));
            }
            let mut seen = vec![false; n];
            for &v in row {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Parse("table row is not a permutation".into()));
                }
                mul.push(v as Ix);
            }
        }
        for col in 0..n {
            let mut seen = vec![false; n];
            for row in 0..n {
                if std::mem::replace(&mut seen[mul[row * n + col] as usize], true) {
                    return Err(Error::Parse("table column is not a permutation".into()));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x && mul[x * n + e] as usize == x))
            .ok_or_else(|| Error::Parse("table has no identity".into()))?;
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    let ab = mul[a * n + b] as usize;
                    for c in 0..n {
                        let bc = mul[b * n + c] as usize;
                        if mul[ab * n + c] != mul[a * n + bc] {
                            return Err(Error::Parse("table is not associative".into()));
                        }
                    }
                }
            }
        }
        Ok(Self::from_raw(n, mul, identity as Ix))
    }

    fn from_raw(n: usize, mul: Vec<Ix>, identity: Ix) -> Self {
        let mut inv = vec![0; n];
        for a in 0..n {
            let b = (0..n).find(|&b| mul[a * n + b] == identity).expect("Latin square");
            inv[a] = b as Ix;
        }
        Self {
            n,
            mul,
            inv,
            identity,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: Ix, b: Ix) -> Ix {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Ix) -> Ix {
        self.inv[a as usize]
    }

    pub fn identity(&self) -> Ix {
        self.identity
    }

    /// Rows of the table, `rows[a][b] = a·b`.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.mul[a * self.n + b] as usize).collect())
            .collect()
    }

    /// A generating set chosen greedily: repeatedly add the first element
    /// outside the current subgroup.
    pub fn generators(&self) -> Vec<Ix> {
        let mut gens: Vec<Ix> = Vec::new();
        loop {
            let inside = closure_bits(self, &gens);
            match (0..self.n as Ix).find(|&x| !inside.contains(x)) {
                Some(x) => gens.push(x),
                None => return gens,
            }
        }
    }
}

/// Bitset of a subgroup together with its member list.
#[derive(Clone, Debug)]
pub struct SubgroupBits {
    words: Vec<u64>,
    members: Vec<Ix>,
}

impl SubgroupBits {
    #[inline]
    pub fn contains(&self, x: Ix) -> bool {
        self.words[x as usize >> 6] >> (x & 63) & 1 == 1
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Ix] {
        &self.members
    }
}

fn closure_bits(t: &CayleyTable, gens: &[Ix]) -> SubgroupBits {
    let mut words = vec![0u64; t.n.div_ceil(64)];
    let e = t.identity;
    words[e as usize >> 6] |= 1 << (e & 63);
    let mut members = vec![e];
    let mut head = 0;
    while head < members.len() {
        let x = members[head];
        head += 1;
        for &s in gens {
            let y = t.mul(x, s);
            let (w, b) = (y as usize >> 6, y & 63);
            if words[w] >> b & 1 == 0 {
                words[w] |= 1 << b;
                members.push(y);
            }
        }
    }
    SubgroupBits { words, members }
}

/// A finite group with a full multiplication table plus conjugacy data.
pub struct TabulatedGroup {
    spec: GroupSpec,
    table: CayleyTable,
    elements: Vec<Element>,
    index: HashMap<Element, Ix>,
    orders: Vec<u32>,
    class_rep: Vec<Ix>,
    transporter: Vec<Ix>,
    centralizers: HashMap<Ix, Vec<Ix>>,
    class_reps: Vec<Ix>,
    generators: Vec<Ix>,
    abelian: bool,
}

impl std::fmt::Debug for TabulatedGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TabulatedGroup")
            .field("spec", &self.spec)
            .field("order", &self.order())
            .field("classes", &self.class_reps.len())
            .finish()
    }
}

impl TabulatedGroup {
    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        Self::from_spec_with_limit(spec, TABLE_LIMIT)
    }

    pub fn from_spec_with_limit(spec: &GroupSpec, limit: usize) -> Result<Self> {
        let order = spec
            .order()
            .ok_or_else(|| Error::Unsupported("tabulating an infinite group".into()))?;
        let limit = limit.min(u16::MAX as usize);
        if order > limit as u128 {
            return Err(Error::TooLarge {
                order,
                limit: limit as u128,
            });
        }
        let n = order as usize;
        let gens: Vec<Element> = spec
            .standard_generators()
            .into_iter()
            .filter(|g| !spec.is_identity(g))
            .collect();

        // Spanning tree of the Cayley graph: elems[j] = elems[parent[j]]·gens[via[j]].
        let mut elems = vec![spec.identity()];
        let mut pos: HashMap<Element, usize> = HashMap::new();
        pos.insert(elems[0].clone(), 0);
        let mut parent = vec![usize::MAX];
        let mut via = vec![usize::MAX];
        let mut right: Vec<Vec<usize>> = vec![Vec::with_capacity(n); gens.len()];
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            for (gi, s) in gens.iter().enumerate() {
                let y = spec.multiply(&x, s)?;
                let j = match pos.get(&y) {
                    Some(&j) => j,
                    None => {
                        let j = elems.len();
                        pos.insert(y.clone(), j);
                        elems.push(y);
                        parent.push(head);
                        via.push(gi);
                        j
                    }
                };
                right[gi].push(j);
            }
            head += 1;
        }
        if elems.len() != n {
            return Err(Error::Unsupported(format!(
                "standard generators of {spec} reach {} of {n} elements",
                elems.len()
            )));
        }

        let rows: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![0usize; n];
                row[0] = i;
                for j in 1..n {
                    row[j] = right[via[j]][row[parent[j]]];
                }
                row
            })
            .collect();

        let power_order = |x: usize| -> u32 {
            let mut acc = x;
            let mut k = 1;
            while acc != 0 {
                acc = rows[acc][x];
                k += 1;
            }
            k
        };
        let raw_orders: Vec<u32> = (0..n).into_par_iter().map(power_order).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by(|&a, &b| raw_orders[a].cmp(&raw_orders[b]).then_with(|| elems[a].cmp(&elems[b])));
        let mut new_of = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            new_of[old] = new;
        }
        let mut mul = vec![0 as Ix; n * n];
        mul.par_chunks_mut(n).enumerate().for_each(|(new_a, out)| {
            let old_a = perm[new_a];
            for (new_b, slot) in out.iter_mut().enumerate() {
                *slot = new_of[rows[old_a][perm[new_b]]] as Ix;
            }
        });
        let table = CayleyTable::from_raw(n, mul, 0);
        let elements: Vec<Element> = perm.iter().map(|&old| elems[old].clone()).collect();
        let orders: Vec<u32> = perm.iter().map(|&old| raw_orders[old]).collect();
        let generators: Vec<Ix> = (0..gens.len()).map(|gi| new_of[right[gi][0]] as Ix).collect();
        Ok(Self::with_table(spec.clone(), table, elements, orders, generators))
    }

    fn with_table(
        spec: GroupSpec,
        table: CayleyTable,
        elements: Vec<Element>,
        orders: Vec<u32>,
        generators: Vec<Ix>,
    ) -> Self {
        let n = table.order();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as Ix))
            .collect();
        let abelian = generators
            .iter()
            .all(|&a| generators.iter().all(|&b| table.mul(a, b) == table.mul(b, a)));

        let mut class_rep = vec![Ix::MAX; n];
        let mut transporter = vec![0 as Ix; n];
        let mut class_reps = Vec::new();
        for x in 0..n {
            if class_rep[x] != Ix::MAX {
                continue;
            }
            let rep = x as Ix;
            class_reps.push(rep);
            class_rep[x] = rep;
            transporter[x] = table.identity();
            let mut queue = vec![rep];
            let mut head = 0;
            while head < queue.len() {
                let y = queue[head];
                head += 1;
                for &s in &generators {
                    let z = table.mul(table.mul(s, y), table.inv(s));
                    if class_rep[z as usize] == Ix::MAX {
                        class_rep[z as usize] = rep;
                        transporter[z as usize] = table.mul(transporter[y as usize], table.inv(s));
                        queue.push(z);
                    }
                }
            }
        }
        let centralizers = class_reps
            .par_iter()
            .map(|&r| {
                let c: Vec<Ix> = (0..n as Ix).filter(|&g| table.mul(g, r) == table.mul(r, g)).collect();
                (r, c)
            })
            .collect();
        Self {
            spec,
            table,
            elements,
            index,
            orders,
            class_rep,
            transporter,
            centralizers,
            class_reps,
            generators,
            abelian,
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    #[inline]
    pub fn mul(&self, a: Ix, b: Ix) -> Ix {
        self.table.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: Ix) -> Ix {
        self.table.inv(a)
    }

    pub fn identity(&self) -> Ix {
        0
    }

    pub fn element(&self, i: Ix) -> &Element {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, x: &Element) -> Option<Ix> {
        self.index.get(x).copied()
    }

    pub fn element_order(&self, i: Ix) -> u32 {
        self.orders[i as usize]
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    /// `g·x·g⁻¹`.
    #[inline]
    pub fn conj(&self, x: Ix, g: Ix) -> Ix {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Least index in the conjugacy class of `x`.
    pub fn class_rep(&self, x: Ix) -> Ix {
        self.class_rep[x as usize]
    }

    pub fn class_reps(&self) -> &[Ix] {
        &self.class_reps
    }

    /// Centralizer of a class representative.
    pub fn centralizer_of_rep(&self, rep: Ix) -> &[Ix] {
        &self.centralizers[&rep]
    }

    pub fn class_size(&self, x: Ix) -> usize {
        self.order() / self.centralizer_of_rep(self.class_rep(x)).len()
    }

    /// Generators of the whole group, as indices.
    pub fn generators(&self) -> &[Ix] {
        &self.generators
    }

    pub fn closure(&self, gens: &[Ix]) -> SubgroupBits {
        closure_bits(&self.table, gens)
    }

    pub fn closure_order(&self, gens: &[Ix]) -> usize {
        self.closure(gens).order()
    }

    pub fn generates(&self, gens: &[Ix]) -> bool {
        self.closure_order(gens) == self.order()
    }

    /// Whether `target ∈ ⟨gens⟩`, stopping as soon as it is reached.
    pub fn in_closure(&self, gens: &[Ix], target: Ix) -> bool {
        if target == 0 || gens.contains(&target) {
            return true;
        }
        let n = self.order();
        let mut words = vec![0u64; n.div_ceil(64)];
        words[0] |= 1;
        let mut members = vec![0 as Ix];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                let (w, b) = (y as usize >> 6, y & 63);
                if words[w] >> b & 1 == 0 {
                    if y == target {
                        return true;
                    }
                    words[w] |= 1 << b;
                    members.push(y);
                }
            }
        }
        false
    }

    /// Least sorted image of a set under simultaneous conjugation.
    pub fn canonical_set(&self, set: &[Ix]) -> Vec<Ix> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if self.abelian || sorted.is_empty() {
            return sorted;
        }
        let m0 = sorted.iter().map(|&s| self.class_rep(s)).min().expect("nonempty");
        let cent = self.centralizer_of_rep(m0);
        let mut best: Option<Vec<Ix>> = None;
        let mut buf = Vec::with_capacity(sorted.len());
        for &s in sorted.iter().filter(|&&s| self.class_rep(s) == m0) {
            let t = self.transporter[s as usize];
            for &c in cent {
                let g = self.mul(c, t);
                buf.clear();
                buf.extend(sorted.iter().map(|&x| self.conj(x, g)));
                buf.sort_unstable();
                if best.as_ref().is_none_or(|b| buf < *b) {
                    best = Some(buf.clone());
                }
            }
        }
        best.expect("some element realises the minimum")
    }

    /// Least image of an ordered tuple under simultaneous conjugation,
    /// compared lexicographically entry by entry.
    pub fn canonical_tuple(&self, tuple: &[Ix]) -> Vec<Ix> {
        if self.abelian || tuple.is_empty() {
            return tuple.to_vec();
        }
        let first = tuple[0];
        let rep = self.class_rep(first);
        let t = self.transporter[first as usize];
        let mut cands: Vec<Ix> = self
            .centralizer_of_rep(rep)
            .iter()
            .map(|&c| self.mul(c, t))
            .collect();
        let mut out = Vec::with_capacity(tuple.len());
        out.push(rep);
        for &x in &tuple[1..] {
            if cands.len() == 1 {
                out.push(self.conj(x, cands[0]));
                continue;
            }
            let best = cands.iter().map(|&g| self.conj(x, g)).min().expect("nonempty");
            cands.retain(|&g| self.conj(x, g) == best);
            out.push(best);
        }
        out
    }

    pub fn tuple_indices(&self, t: &GeneratingTuple) -> Result<Vec<Ix>> {
        t.items()
            .iter()
            .map(|x| self.index_of(x).ok_or_else(|| Error::NotMember(self.spec.to_string())))
            .collect()
    }

    pub fn to_tuple(&self, indices: &[Ix]) -> GeneratingTuple {
        GeneratingTuple::new_unchecked(
            self.spec.clone(),
            indices.iter().map(|&i| self.element(i).clone()).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::closure;

    #[test]
    fn tabulates_small_groups() {
        for (d, n, classes) in [("psl2:5", 60, 5), ("sl2:5", 120, 9), ("psl2:7", 168, 6), ("cyclic:2^2", 4, 4)] {
            let g: GroupSpec = d.parse().unwrap();
            let t = TabulatedGroup::from_spec(&g).unwrap();
            assert_eq!(t.order(), n);
            assert_eq!(t.class_reps().len(), classes, "{d}");
            assert_eq!(t.element_order(0), 1);
            for a in 0..n as Ix {
                assert_eq!(t.mul(a, t.inv(a)), 0);
                for b in [1 as Ix, 7, (n - 1) as Ix].into_iter().filter(|&b| (b as usize) < n) {
                    let prod = g.multiply(t.element(a), t.element(b)).unwrap();
                    assert_eq!(t.index_of(&prod), Some(t.mul(a, b)));
                }
                let rep = t.class_rep(a);
                assert_eq!(t.conj(a, t.transporter[a as usize]), rep);
            }
            let total: usize = t.class_reps().iter().map(|&r| t.class_size(r)).sum();
            assert_eq!(total, n);
            assert!(t.orders.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn table_closure_matches_element_closure() {
        let g: GroupSpec = "sl2:5".parse().unwrap();
        let t = TabulatedGroup::from_spec(&g).unwrap();
        for gens in [vec![3 as Ix], vec![5, 9], vec![20, 40, 77]] {
            let tuple = t.to_tuple(&gens);
            assert_eq!(t.closure_order(&gens), closure(&tuple, 1000).unwrap().order);
        }
    }

    #[test]
    fn canonical_forms_are_conjugation_invariant() {
        let g: GroupSpec = "psl2:7".parse().unwrap();
        let t = TabulatedGroup::from_spec(&g).unwrap();
        let set = [11 as Ix, 40, 99];
        let canon = t.canonical_set(&set);
        let tup = t.canonical_tuple(&set);
        for h in 0..t.order() as Ix {
            let conj: Vec<Ix> = set.iter().map(|&x| t.conj(x, h)).collect();
            assert_eq!(t.canonical_set(&conj), canon);
            assert_eq!(t.canonical_tuple(&conj), tup);
        }
        // brute-force minimum over all conjugators
        let brute = (0..t.order() as Ix)
            .map(|h| set.iter().map(|&x| t.conj(x, h)).collect::<Vec<_>>())
            .min()
            .unwrap();
        assert_eq!(tup, brute);
    }

    #[test]
    fn cayley_validation() {
        let z3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let t = CayleyTable::new(&z3).unwrap();
        assert_eq!(t.inv(1), 2);
        assert_eq!(t.generators(), vec![1]);
        assert!(CayleyTable::new(&[vec![0, 1], vec![0, 1]]).is_err());
        // Latin square without associativity
        let bad = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(CayleyTable::new(&bad).is_err());
    }
}
