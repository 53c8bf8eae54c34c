//! Exhaustive search for generating tuples in an enumerated group.

use rustc_hash::FxHashSet;

use crate::groups::{Bitset, FiniteGroup};

pub(super) struct Searcher<'a> {
    group: &'a FiniteGroup,
    reps: Vec<usize>,
    /// `failed[r]`: subgroups known not to reach the whole group with `r`
    /// more elements.
    failed: Vec<FxHashSet<Bitset>>,
}

impl<'a> Searcher<'a> {
    pub(super) fn new(group: &'a FiniteGroup) -> Self {
        let reps = group
            .conjugacy_classes()
            .into_iter()
            .map(|c| c[0])
            .filter(|&x| x != 0)
            .collect();
        Self {
            group,
            reps,
            failed: Vec::new(),
        }
    }

    /// A generating `k`-tuple of element indices, or `None` after a complete
    /// search. The first element runs over conjugacy class representatives:
    /// conjugating a generating tuple gives a generating tuple.
    pub(super) fn find(&mut self, k: usize) -> Option<Vec<usize>> {
        if k == 0 {
            return None;
        }
        if self.failed.len() < k {
            self.failed.resize_with(k, FxHashSet::default);
        }
        let reps = self.reps.clone();
        for x in reps {
            let mut path = vec![x];
            let sub = self.group.generated(&path);
            if self.extend(&sub, &mut path, k - 1) {
                return Some(path);
            }
        }
        None
    }

    fn extend(&mut self, sub: &Bitset, path: &mut Vec<usize>, remaining: usize) -> bool {
        let n = self.group.order();
        if sub.count() == n {
            return true;
        }
        if remaining == 0 || self.failed[remaining].contains(sub) {
            return false;
        }
        // Any x inside a subgroup already tried at this level gives a smaller
        // subgroup, which cannot succeed either.
        let mut tried: Vec<Bitset> = Vec::new();
        for x in 0..n {
            if sub.contains(x) || tried.iter().any(|t| t.contains(x)) {
                continue;
            }
            let next = self.group.extend(sub, path, x);
            path.push(x);
            if self.extend(&next, path, remaining - 1) {
                return true;
            }
            path.pop();
            tried.push(next);
        }
        self.failed[remaining].insert(sub.clone());
        false
    }
}
