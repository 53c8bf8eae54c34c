//! Minimal generating numbers `d(H)`.
//!
//! Exact values come from an exhaustive search over an enumerated group;
//! upper bounds from random tuples checked by Schreier-Sims; lower bounds from
//! non-cyclicity and elementary abelian quotients.

mod search;
mod table;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{Bsgs, FiniteGroup, FiniteGroupError, GroupSpec, SpecError, MAX_TABLE_ORDER};
use crate::perm::{PermError, Permutation};
use crate::wreath::{tower_generators, TowerGenerators, WreathError};

pub use table::{
    check_filter_pair_claim, table1, table1_cell, table1_result, table_value, Computed, Table1Cell,
    TABLE1_COLUMNS, TABLE1_ROWS,
};

/// Default largest group order for which exact search is attempted.
pub const DEFAULT_EXACT_ORDER: usize = 5_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankError {
    #[error("group of order {order} exceeds the enumeration budget of {budget}")]
    BudgetExceeded { order: String, budget: usize },
    #[error("{group} is cyclic; the claim needs a non-cyclic top group")]
    CyclicTop { group: String },
    #[error("tower factor {0} is not symmetric or alternating")]
    NotNamed(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Wreath(#[from] WreathError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Finite(#[from] FiniteGroupError),
}

/// How a rank value was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Certificate {
    #[serde(rename = "Exact-Exhaustive")]
    ExactExhaustive,
    #[serde(rename = "Exact-Cyclic")]
    ExactCyclic,
    #[serde(rename = "Exact-ElementaryAbelian")]
    ExactElementaryAbelian,
    #[serde(rename = "Bounds-Only")]
    BoundsOnly,
}

impl Certificate {
    pub fn as_str(self) -> &'static str {
        match self {
            Certificate::ExactExhaustive => "Exact-Exhaustive",
            Certificate::ExactCyclic => "Exact-Cyclic",
            Certificate::ExactElementaryAbelian => "Exact-ElementaryAbelian",
            Certificate::BoundsOnly => "Bounds-Only",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankValue {
    Exact(usize),
    Bounds { lower: usize, upper: usize },
}

impl RankValue {
    pub fn exact(self) -> Option<usize> {
        match self {
            RankValue::Exact(d) => Some(d),
            RankValue::Bounds { .. } => None,
        }
    }

    pub fn lower(self) -> usize {
        match self {
            RankValue::Exact(d) => d,
            RankValue::Bounds { lower, .. } => lower,
        }
    }

    pub fn upper(self) -> usize {
        match self {
            RankValue::Exact(d) => d,
            RankValue::Bounds { upper, .. } => upper,
        }
    }

    pub fn contains(self, d: usize) -> bool {
        self.lower() <= d && d <= self.upper()
    }
}

impl fmt::Display for RankValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankValue::Exact(d) => write!(f, "{d}"),
            RankValue::Bounds { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

/// The outcome of a rank computation. `witness` generates the whole group and
/// has `value.upper()` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub value: RankValue,
    pub witness: Vec<Permutation>,
    pub certificate: Certificate,
    pub group_order: BigUint,
}

/// An iterated wreath product `G_1 wr G_2 wr ... wr G_k`, nested to the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerSpec {
    factors: Vec<GroupSpec>,
}

impl TowerSpec {
    pub fn new(factors: Vec<GroupSpec>) -> Result<Self, RankError> {
        if factors.is_empty() {
            return Err(WreathError::EmptyTower.into());
        }
        if let Some(bad) = factors.iter().find(|f| !f.is_symmetric_or_alternating()) {
            return Err(RankError::NotNamed(bad.to_string()));
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[GroupSpec] {
        &self.factors
    }

    pub fn generators(&self) -> TowerGenerators {
        tower_generators(&self.factors).expect("tower is non-empty")
    }
}

impl fmt::Display for TowerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for TowerSpec {
    type Err = RankError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let factors = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<GroupSpec>, _>>()?;
        TowerSpec::new(factors)
    }
}

fn group_order(degree: usize, generators: &[Permutation]) -> Result<BigUint, PermError> {
    Ok(Bsgs::new(degree, generators)?.order())
}

/// `d(<generators>)` by enumeration, for groups of order at most `budget`.
///
/// Trivial and cyclic groups give 1, elementary abelian groups their
/// dimension. Otherwise tuples of increasing size are searched exhaustively,
/// starting from the largest of 2 and the ranks of the elementary abelian
/// quotients. If nothing of size `max_k` generates, the result is
/// [`RankValue::Bounds`] with the given generators as the upper witness.
pub fn rank_exact(
    generators: &[Permutation],
    degree: usize,
    max_k: usize,
    budget: usize,
) -> Result<RankResult, RankError> {
    let order = group_order(degree, generators)?;
    let fits = order.to_usize().is_some_and(|n| n <= budget);
    if !fits {
        return Err(RankError::BudgetExceeded {
            order: order.to_string(),
            budget,
        });
    }
    let exact = |d, witness, certificate| RankResult {
        value: RankValue::Exact(d),
        witness,
        certificate,
        group_order: order.clone(),
    };
    if order.is_one() {
        return Ok(exact(
            1,
            vec![Permutation::identity(degree)],
            Certificate::ExactCyclic,
        ));
    }
    if let Some((r, basis)) = elementary_abelian_basis(generators) {
        let witness = basis.into_iter().map(|i| generators[i].clone()).collect();
        let certificate = if r == 1 {
            Certificate::ExactCyclic
        } else {
            Certificate::ExactElementaryAbelian
        };
        return Ok(exact(r, witness, certificate));
    }
    let group = FiniteGroup::new(degree, generators, budget)?;
    let n = group.order();
    if let Some(x) = (0..n).find(|&x| group.element_order(x) as usize == n) {
        return Ok(exact(
            1,
            vec![group.element(x).clone()],
            Certificate::ExactCyclic,
        ));
    }
    let quotient = group
        .prime_divisors()
        .into_iter()
        .map(|p| group.elementary_abelian_quotient_rank(p))
        .max()
        .unwrap_or(0);
    let lower = quotient.max(2);
    let mut searcher = search::Searcher::new(&group);
    for k in lower..=max_k {
        if let Some(tuple) = searcher.find(k) {
            let witness = tuple.iter().map(|&i| group.element(i).clone()).collect();
            // Below the quotient bound no search is needed; the quotient
            // itself needs `quotient` generators.
            let certificate = if k == quotient && k > 2 {
                Certificate::ExactElementaryAbelian
            } else {
                Certificate::ExactExhaustive
            };
            return Ok(exact(k, witness, certificate));
        }
    }
    Ok(RankResult {
        value: RankValue::Bounds {
            lower: (max_k + 1).max(lower),
            upper: generators.len().max(max_k + 1),
        },
        witness: generators.to_vec(),
        certificate: Certificate::BoundsOnly,
        group_order: order,
    })
}

/// `d` of a tower: elementary abelian towers at any order, exact search up to
/// `max_exact_order`, otherwise bounds. The upper bound is the least `k` for
/// which [`rank_upper`] finds a witness.
pub fn rank_tower(
    tower: &TowerSpec,
    max_exact_order: usize,
    trials: usize,
    seed: u64,
) -> RankResult {
    let t = tower.generators();
    let gens = &t.generators;
    if let Some((r, basis)) = elementary_abelian_basis(gens) {
        return RankResult {
            value: RankValue::Exact(r),
            witness: basis.into_iter().map(|i| gens[i].clone()).collect(),
            certificate: if r == 1 {
                Certificate::ExactCyclic
            } else {
                Certificate::ExactElementaryAbelian
            },
            group_order: t.expected_order,
        };
    }
    if t.expected_order
        .to_usize()
        .is_some_and(|n| n <= max_exact_order.min(MAX_TABLE_ORDER))
    {
        if let Ok(result) = rank_exact(gens, t.degree, gens.len().max(1), max_exact_order) {
            return result;
        }
    }
    let mut lower = if commute(gens) { 1 } else { 2 };
    if let Some(q) = square_quotient_bound(tower.factors()) {
        lower = lower.max(q);
    }
    let witness = (lower..gens.len())
        .find_map(|k| {
            rank_upper(gens, t.degree, k, trials, seed, None).expect("tower degrees agree")
        })
        .unwrap_or_else(|| gens.clone());
    RankResult {
        value: RankValue::Bounds {
            lower,
            upper: witness.len(),
        },
        witness,
        certificate: Certificate::BoundsOnly,
        group_order: t.expected_order,
    }
}

/// For a tower ending in `A_2`, the group is the direct square of the inner
/// tower `H`, and `d(H x H)` is at least twice the rank of any elementary
/// abelian quotient of `H`. Needs `H` small enough to enumerate.
fn square_quotient_bound(factors: &[GroupSpec]) -> Option<usize> {
    let (last, inner) = factors.split_last()?;
    if *last != GroupSpec::Alternating(2) || inner.is_empty() {
        return None;
    }
    let t = tower_generators(inner).ok()?;
    let group = FiniteGroup::new(t.degree, &t.generators, MAX_TABLE_ORDER).ok()?;
    group
        .prime_divisors()
        .into_iter()
        .map(|p| 2 * group.elementary_abelian_quotient_rank(p))
        .max()
}

fn commute(gens: &[Permutation]) -> bool {
    gens.iter().enumerate().all(|(i, a)| {
        gens[i + 1..]
            .iter()
            .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
    })
}

/// A random product of `2 deg .. 3 deg` generators.
fn random_word(generators: &[Permutation], degree: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let len = rng.gen_range(2 * degree..=3 * degree);
    let mut x = Permutation::identity(degree);
    for _ in 0..len {
        x = x.compose_unchecked(&generators[rng.gen_range(0..generators.len())]);
    }
    x
}

/// Searches for `target_k` elements generating `<generators>`.
///
/// `first_candidate`, if given, is tried before the random trials. Each trial
/// draws `target_k` random words and accepts them when Schreier-Sims gives the
/// full order. The result depends only on the inputs and `seed`.
pub fn rank_upper(
    generators: &[Permutation],
    degree: usize,
    target_k: usize,
    trials: usize,
    seed: u64,
    first_candidate: Option<&[Permutation]>,
) -> Result<Option<Vec<Permutation>>, RankError> {
    let order = group_order(degree, generators)?;
    if target_k == 0 {
        return Ok(None);
    }
    if let Some(candidate) = first_candidate {
        if candidate.len() == target_k && group_order(degree, candidate)? == order {
            return Ok(Some(candidate.to_vec()));
        }
    }
    if order.is_one() {
        return Ok(Some(vec![Permutation::identity(degree); target_k]));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let tuple: Vec<Permutation> = (0..target_k)
            .map(|_| random_word(generators, degree, &mut rng))
            .collect();
        if group_order(degree, &tuple)? == order {
            return Ok(Some(tuple));
        }
    }
    Ok(None)
}

/// `r` when `<generators>` is elementary abelian of order `p^r`, else `None`.
/// The trivial group gives `None`.
pub fn elementary_abelian_rank(generators: &[Permutation]) -> Option<usize> {
    elementary_abelian_basis(generators).map(|(r, _)| r)
}

/// The rank together with the indices of generators forming a basis.
fn elementary_abelian_basis(generators: &[Permutation]) -> Option<(usize, Vec<usize>)> {
    let gens: Vec<(usize, &Permutation)> = generators
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_identity())
        .collect();
    let (_, first) = gens.first()?;
    let degree = first.degree();
    if gens.iter().any(|(_, g)| g.degree() != degree) {
        return None;
    }
    let p = first.order();
    if !is_prime(p) || gens.iter().any(|(_, g)| g.order() != p) {
        return None;
    }
    for (i, (_, a)) in gens.iter().enumerate() {
        for (_, b) in &gens[i + 1..] {
            if a.compose_unchecked(b) != b.compose_unchecked(a) {
                return None;
            }
        }
    }
    let p = p as u64;
    let only: Vec<Permutation> = gens.iter().map(|(_, g)| (*g).clone()).collect();
    let rows = coordinates(&only, degree, p);
    let pivots = row_reduce(rows, p);
    Some((
        pivots.len(),
        pivots.into_iter().map(|i| gens[i].0).collect(),
    ))
}

fn is_prime(n: u128) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Coordinates over `F_p` of commuting generators of exponent `p`.
///
/// An abelian group acts regularly on each of its orbits, so on an orbit with
/// base point `o` an element is determined by the image of `o`. A basis of the
/// restriction is chosen greedily from the generators and every point of the
/// orbit is labelled with its coordinates. The rows concatenate the
/// coordinates over all orbits.
fn coordinates(gens: &[Permutation], degree: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows = vec![Vec::new(); gens.len()];
    let mut done = vec![false; degree];
    for o in 0..degree {
        if done[o] {
            continue;
        }
        // label[q] = coordinates of the element taking o to q.
        let mut label: Vec<Option<Vec<u64>>> = vec![None; degree];
        label[o] = Some(Vec::new());
        let mut points = vec![o];
        let mut dim = 0;
        let mut local = Vec::with_capacity(gens.len());
        for g in gens {
            let q = g.apply0(o);
            if label[q].is_none() {
                dim += 1;
                let mut fresh = Vec::new();
                for &x in &points {
                    let base = label[x].clone().expect("labelled");
                    let mut y = x;
                    for j in 1..p {
                        y = g.apply0(y);
                        let mut c = base.clone();
                        c.resize(dim, 0);
                        c[dim - 1] = j;
                        label[y] = Some(c);
                        fresh.push(y);
                    }
                }
                points.extend(fresh);
            }
            local.push(label[q].clone().expect("labelled"));
        }
        for &x in &points {
            done[x] = true;
        }
        for (row, mut c) in rows.iter_mut().zip(local) {
            c.resize(dim, 0);
            row.extend(c);
        }
    }
    rows
}

/// Gaussian elimination over `F_p`; returns the indices of rows that are
/// independent of the rows before them.
fn row_reduce(rows: Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let inverse = |a: u64| (1..p).find(|b| a * b % p == 1).expect("field");
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut pivots = Vec::new();
    for (i, mut row) in rows.into_iter().enumerate() {
        for (col, b) in &basis {
            let c = row[*col];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(b) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
        }
        if let Some(col) = row.iter().position(|&x| x != 0) {
            let s = inverse(row[col]);
            for x in row.iter_mut() {
                *x = *x * s % p;
            }
            basis.push((col, row));
            pivots.push(i);
        }
    }
    pivots
}
