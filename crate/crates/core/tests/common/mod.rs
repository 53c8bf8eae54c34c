//! Strategies, property bodies and brute-force oracles shared by the
//! integration tests.

#![allow(dead_code)]

use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use wreathgen::groups::{bsgs_order, closure, Bsgs, Element, GroupSpec};
use wreathgen::perm::{Parity, Permutation};
use wreathgen::wreath::WreathElement;

/// A uniformly random permutation of the given degree.
pub fn perm_of(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

/// Three permutations sharing a degree in `1..=max`.
pub fn perm_triple(max: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| (perm_of(n), perm_of(n), perm_of(n)))
}

pub fn perm_pair(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| (perm_of(n), perm_of(n)))
}

/// An element of `S_m wr S_n`.
pub fn wreath_of(m: usize, n: usize) -> impl Strategy<Value = WreathElement> {
    (proptest::collection::vec(perm_of(m), n), perm_of(n))
        .prop_map(|(t, f)| WreathElement::new(t, f).unwrap())
}

/// Three elements of one `S_m wr S_n`, `m, n <= 4`.
pub fn wreath_triple() -> impl Strategy<Value = (WreathElement, WreathElement, WreathElement)> {
    (1..=4usize, 1..=4usize)
        .prop_flat_map(|(m, n)| (wreath_of(m, n), wreath_of(m, n), wreath_of(m, n)))
}

/// One to three generators of degree `2..=7`.
pub fn small_generators() -> impl Strategy<Value = Vec<Permutation>> {
    (2..=7usize).prop_flat_map(|n| proptest::collection::vec(perm_of(n), 1..=3))
}

/// Generators of degree `2..=9` plus a conjugating element.
pub fn generators_and_conjugator() -> impl Strategy<Value = (Vec<Permutation>, Permutation)> {
    (2..=9usize).prop_flat_map(|n| (proptest::collection::vec(perm_of(n), 1..=3), perm_of(n)))
}

/// `i(pq) = (ip)q` computed from image lists, independent of the library.
pub fn naive_compose(p: &Permutation, q: &Permutation) -> Vec<usize> {
    let (p, q) = (p.images(), q.images());
    p.iter().map(|&i| q[i - 1]).collect()
}

pub fn naive_parity(p: &Permutation) -> Parity {
    let im = p.images();
    let inversions = (0..im.len())
        .flat_map(|i| (i + 1..im.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| im[i] > im[j])
        .count();
    if inversions % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

pub fn check_associativity(
    (p, q, r): (Permutation, Permutation, Permutation),
) -> Result<(), TestCaseError> {
    let left = p.compose(&q).unwrap().compose(&r).unwrap();
    let right = p.compose(&q.compose(&r).unwrap()).unwrap();
    prop_assert_eq!(&left, &right);
    prop_assert_eq!(p.compose(&q).unwrap().images(), naive_compose(&p, &q));
    Ok(())
}

pub fn check_wreath_associativity(
    (x, y, z): (WreathElement, WreathElement, WreathElement),
) -> Result<(), TestCaseError> {
    let left = x.mul(&y).unwrap().mul(&z).unwrap();
    let right = x.mul(&y.mul(&z).unwrap()).unwrap();
    prop_assert_eq!(&left, &right);
    prop_assert!(x.mul(&x.inverse()).unwrap().is_identity());
    Ok(())
}

pub fn check_parity((p, q): (Permutation, Permutation)) -> Result<(), TestCaseError> {
    let pq = p.compose(&q).unwrap();
    prop_assert_eq!(pq.parity(), p.parity().combine(q.parity()));
    prop_assert_eq!(p.parity(), naive_parity(&p));
    Ok(())
}

pub fn check_embed(
    (x, y, _): (WreathElement, WreathElement, WreathElement),
) -> Result<(), TestCaseError> {
    let xy = x.mul(&y).unwrap();
    prop_assert_eq!(xy.embed(), x.embed().compose(&y.embed()).unwrap());
    prop_assert_eq!(x.inverse().embed(), x.embed().inverse());
    prop_assert_eq!(x.order(), x.embed().order());
    Ok(())
}

pub fn check_closure_bsgs(gens: Vec<Permutation>) -> Result<(), TestCaseError> {
    let n = gens[0].degree();
    let set = closure(&gens).unwrap();
    let bsgs = Bsgs::new(n, &gens).unwrap();
    prop_assert_eq!(BigUint::from(set.len()), bsgs.order());
    for x in set.iter().step_by(set.len() / 16 + 1) {
        prop_assert!(bsgs.contains(&x));
    }
    // Anything the BSGS accepts lies in the enumerated set and vice versa.
    let probe = gens.iter().fold(Permutation::identity(n), |acc, g| {
        acc.compose(g).unwrap().inverse()
    });
    prop_assert_eq!(bsgs.contains(&probe), set.contains(&probe));
    let transposition = Permutation::cycle(n, &[1, 2]).unwrap();
    prop_assert_eq!(bsgs.contains(&transposition), set.contains(&transposition));
    Ok(())
}

pub fn check_conjugation_invariance(
    (gens, g): (Vec<Permutation>, Permutation),
) -> Result<(), TestCaseError> {
    let n = g.degree();
    let conj: Vec<Permutation> = gens.iter().map(|x| x.conjugate(&g).unwrap()).collect();
    prop_assert_eq!(bsgs_order(n, &gens).unwrap(), bsgs_order(n, &conj).unwrap());
    for (x, y) in gens.iter().zip(&conj) {
        prop_assert_eq!(x.cycle_type(), y.cycle_type());
    }
    Ok(())
}

pub fn check_text_round_trip(p: Permutation) -> Result<(), TestCaseError> {
    let text = p.to_string();
    prop_assert_eq!(Permutation::parse_cycles(&text, p.degree()).unwrap(), p);
    Ok(())
}

/// All elements of a small permutation group, identity first.
pub fn elements(spec: &GroupSpec) -> Vec<Permutation> {
    let id = Permutation::identity(spec.degree());
    let mut gens = vec![id.clone()];
    gens.extend(spec.generators());
    let mut all = vec![id];
    all.extend(closure(&gens).unwrap().iter().filter(|x| !x.is_identity()));
    all
}

/// `G wr S` held as index tables: every element `(a_1, ..., a_n; f)` is a
/// digit vector over the enumerations of `G` and `S`. Used to enumerate the
/// whole product and compute element orders without the library's closure.
pub struct WreathOracle {
    n: usize,
    g_mul: Vec<Vec<usize>>,
    s_mul: Vec<Vec<usize>>,
    /// `s_act[f][i] = i f`, 0-based.
    s_act: Vec<Vec<usize>>,
    g_len: usize,
    s_len: usize,
}

impl WreathOracle {
    pub fn new(g: &GroupSpec, s: &GroupSpec) -> Self {
        let ge = elements(g);
        let se = elements(s);
        let index =
            |list: &[Permutation], x: &Permutation| list.iter().position(|y| y == x).unwrap();
        let table = |list: &[Permutation]| -> Vec<Vec<usize>> {
            list.iter()
                .map(|a| {
                    list.iter()
                        .map(|b| index(list, &a.compose(b).unwrap()))
                        .collect()
                })
                .collect()
        };
        Self {
            n: s.degree(),
            g_mul: table(&ge),
            s_mul: table(&se),
            s_act: se
                .iter()
                .map(|f| f.images().iter().map(|i| i - 1).collect())
                .collect(),
            g_len: ge.len(),
            s_len: se.len(),
        }
    }

    pub fn order(&self) -> u128 {
        (self.g_len as u128).pow(self.n as u32) * self.s_len as u128
    }

    fn mul(&self, x: &[usize], y: &[usize], out: &mut [usize]) {
        let f = x[self.n];
        for i in 0..self.n {
            out[i] = self.g_mul[x[i]][y[self.s_act[f][i]]];
        }
        out[self.n] = self.s_mul[f][y[self.n]];
    }

    fn element_order(&self, x: &[usize]) -> u128 {
        let mut acc = x.to_vec();
        let mut next = vec![0; x.len()];
        let mut k = 1u128;
        while acc.iter().any(|&d| d != 0) {
            self.mul(&acc, x, &mut next);
            std::mem::swap(&mut acc, &mut next);
            k += 1;
        }
        k
    }

    /// Whether some element's order equals the group order, by enumerating
    /// every element.
    pub fn is_cyclic(&self) -> bool {
        let total = self.order();
        let mut digits = vec![0usize; self.n + 1];
        let radix: Vec<usize> = (0..=self.n)
            .map(|i| if i < self.n { self.g_len } else { self.s_len })
            .collect();
        loop {
            if self.element_order(&digits) == total {
                return true;
            }
            let mut i = 0;
            loop {
                if i > self.n {
                    return false;
                }
                digits[i] += 1;
                if digits[i] < radix[i] {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }
}

/// Whether `gens` generate the whole group, given its order, by closure.
pub fn closure_generates(gens: &[Permutation], order: usize) -> bool {
    closure(gens).map(|s| s.len() == order).unwrap_or(false)
}

/// Conjugacy class representatives of the group with the given elements, by
/// conjugating with every element.
pub fn class_representatives(all: &[Permutation]) -> Vec<Permutation> {
    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for x in all {
        if seen.contains(x) {
            continue;
        }
        reps.push(x.clone());
        for g in all {
            seen.insert(x.conjugate(g).unwrap());
        }
    }
    reps
}
