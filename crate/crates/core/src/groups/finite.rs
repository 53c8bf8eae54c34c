//! A small permutation group enumerated into index space with a full
//! multiplication table. Used where many subgroup closures are needed.

use rustc_hash::FxHashMap;

use super::closure::{closure_with_budget, ClosureError};
use crate::perm::Permutation;

/// Largest order accepted by [`FiniteGroup::new`]; the table is `order^2` entries.
pub const MAX_TABLE_ORDER: usize = 12_000;

/// Fixed-size set of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Returns true if `i` was newly inserted.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &Bitset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let t = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + t)
                }
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiniteGroupError {
    #[error("group order exceeds the table limit of {limit}")]
    TooLarge { limit: usize },
    #[error(transparent)]
    Closure(#[from] ClosureError),
}

/// An enumerated permutation group. Index 0 is the identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: FxHashMap<Box<[u16]>, u32>,
    table: Vec<u16>,
    inverse: Vec<u16>,
    orders: Vec<u32>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Enumerates `<generators>` (degree `degree`), refusing groups larger
    /// than `limit` (capped at [`MAX_TABLE_ORDER`]).
    pub fn new(
        degree: usize,
        generators: &[Permutation],
        limit: usize,
    ) -> Result<Self, FiniteGroupError> {
        let limit = limit.min(MAX_TABLE_ORDER);
        let id = Permutation::identity(degree);
        let mut seeds = vec![id.clone()];
        seeds.extend(generators.iter().cloned());
        let set = closure_with_budget(&seeds, limit).map_err(|e| match e {
            ClosureError::BudgetExceeded { .. } => FiniteGroupError::TooLarge { limit },
            other => other.into(),
        })?;
        let mut elements = vec![id.clone()];
        elements.extend(set.iter().filter(|x| !x.is_identity()));
        let n = elements.len();

        let mut index = FxHashMap::default();
        for (i, e) in elements.iter().enumerate() {
            index.insert(Box::<[u16]>::from(e.raw()), i as u32);
        }
        let mut table = vec![0u16; n * n];
        let mut buf = vec![0u16; degree];
        for (i, a) in elements.iter().enumerate() {
            let a = a.raw();
            for (j, b) in elements.iter().enumerate() {
                let b = b.raw();
                for (k, slot) in buf.iter_mut().enumerate() {
                    *slot = b[a[k] as usize];
                }
                table[i * n + j] = index[&buf[..]] as u16;
            }
        }
        let mut inverse = vec![0u16; n];
        for i in 0..n {
            let row = &table[i * n..(i + 1) * n];
            inverse[i] = row.iter().position(|&x| x == 0).expect("finite group") as u16;
        }
        let orders = elements.iter().map(|e| e.order() as u32).collect();
        let generators = generators
            .iter()
            .map(|g| index[g.raw()] as usize)
            .filter(|&g| g != 0)
            .collect();
        Ok(Self {
            degree,
            elements,
            index,
            table,
            inverse,
            orders,
            generators,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Indices of the (non-identity) generators the group was built from.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, f: &Permutation) -> Option<usize> {
        if f.degree() != self.degree {
            return None;
        }
        self.index.get(f.raw()).map(|&i| i as usize)
    }

    pub fn element_order(&self, i: usize) -> u32 {
        self.orders[i]
    }

    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn power(&self, x: usize, k: u32) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    /// Subgroup generated by `gens`, as a bitset over element indices.
    pub fn generated(&self, gens: &[usize]) -> Bitset {
        self.generated_from(Bitset::new(self.order()), gens)
    }

    /// Closure of `start ∪ gens` under right multiplication by `gens`, where
    /// `start` is assumed to be a subgroup generated by a subset of `gens`.
    fn generated_from(&self, mut set: Bitset, gens: &[usize]) -> Bitset {
        let n = self.order();
        let mut queue: Vec<usize> = set.iter().collect();
        if set.insert(0) {
            queue.push(0);
        }
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let row = &self.table[x * n..(x + 1) * n];
            for &g in gens {
                let y = row[g] as usize;
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// `<sub, x>` where `sub = <gens>`.
    pub fn extend(&self, sub: &Bitset, gens: &[usize], x: usize) -> Bitset {
        let mut all = gens.to_vec();
        all.push(x);
        self.generated_from(sub.clone(), &all)
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.generated(gens).count() == self.order()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, each sorted, ordered by least element index.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = Bitset::new(n);
        let mut classes = Vec::new();
        for x in 0..n {
            if seen.contains(x) {
                continue;
            }
            seen.insert(x);
            let mut class = vec![x];
            let mut head = 0;
            while head < class.len() {
                let y = class[head];
                head += 1;
                for &g in &self.generators {
                    let z = self.conjugate(y, g);
                    if seen.insert(z) {
                        class.push(z);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[usize]) -> Bitset {
        let mut gens: Vec<usize> = seeds.iter().copied().filter(|&s| s != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        loop {
            let sub = self.generated(&gens);
            let mut added = false;
            for x in gens.clone() {
                for &g in &self.generators {
                    let c = self.conjugate(x, g);
                    if !sub.contains(c) && !gens.contains(&c) {
                        gens.push(c);
                        added = true;
                    }
                }
            }
            if !added {
                return sub;
            }
        }
    }

    /// Distinct primes dividing the group order.
    pub fn prime_divisors(&self) -> Vec<u32> {
        let mut n = self.order() as u32;
        let mut primes = Vec::new();
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                primes.push(p);
                while n.is_multiple_of(p) {
                    n /= p;
                }
            }
            p += 1;
        }
        if n > 1 {
            primes.push(n);
        }
        primes
    }

    /// Rank `r` of the largest elementary abelian `p`-quotient `G / G'G^p`,
    /// which has order `p^r`.
    pub fn elementary_abelian_quotient_rank(&self, p: u32) -> usize {
        let g = &self.generators;
        let mut seeds: Vec<usize> = g.iter().map(|&x| self.power(x, p)).collect();
        for (i, &a) in g.iter().enumerate() {
            for &b in &g[i + 1..] {
                seeds.push(self.commutator(a, b));
            }
        }
        let kernel = self.normal_closure(&seeds).count();
        let mut index = self.order() / kernel;
        let mut r = 0;
        while index > 1 {
            debug_assert_eq!(index % p as usize, 0);
            index /= p as usize;
            r += 1;
        }
        r
    }
}
