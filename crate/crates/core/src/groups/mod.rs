//! Finite groups: element traits, named group specifications, closure
//! enumeration, and the Schreier-Sims engine.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::perm::{Parity, PermError, Permutation};

mod bsgs;
mod closure;
mod finite;

pub use bsgs::{bsgs_order, Bsgs, BsgsJson};
pub use closure::{
    closure, closure_with_budget, is_cyclic, ClosureError, ElementSet, DEFAULT_BUDGET,
};
pub use finite::{Bitset, FiniteGroup, FiniteGroupError, MAX_TABLE_ORDER};

/// A group element that can be multiplied, inverted and compared.
///
/// `op` may panic if `compatible` is false for the two operands.
pub trait Element: Clone + Eq + fmt::Debug {
    fn op(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self;
    /// Identity of the carrier `self` lives in.
    fn identity_like(&self) -> Self;
    fn is_identity(&self) -> bool;
    /// Whether `self` and `other` live in the same carrier.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
}

/// An element of a finite group.
pub trait FiniteElement: Element {
    fn order(&self) -> u128;
}

/// Elements with a canonical hashable encoding, used by [`closure`].
pub trait Encode: Element {
    type Key: Clone + Eq + Hash;

    fn key(&self) -> Self::Key;
    /// Decodes a key produced by an element of the same carrier as `self`.
    fn decode(&self, key: &Self::Key) -> Self;
    /// Whether every element of the carrier has a key.
    fn encodable(&self) -> bool {
        true
    }
}

/// Elements of a finite carrier indexed by `0..carrier_size`.
pub trait Ranked: Element {
    /// Carrier size, or `None` when it does not fit in a `u64`.
    fn carrier_size(&self) -> Option<u64>;
    fn rank(&self) -> u64;
    fn unrank(&self, rank: u64) -> Self;
}

/// `x^k` for `k >= 0` by repeated squaring.
pub fn power<E: Element>(x: &E, mut k: u128) -> E {
    let mut result = x.identity_like();
    let mut base = x.clone();
    while k > 0 {
        if k & 1 == 1 {
            result = result.op(&base);
        }
        k >>= 1;
        if k > 0 {
            base = base.op(&base);
        }
    }
    result
}

impl Element for Permutation {
    fn op(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inv(&self) -> Self {
        self.inverse()
    }

    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }

    fn is_identity(&self) -> bool {
        Permutation::is_identity(self)
    }

    fn compatible(&self, other: &Self) -> bool {
        self.degree() == other.degree()
    }
}

impl FiniteElement for Permutation {
    fn order(&self) -> u128 {
        Permutation::order(self)
    }
}

/// Closure key for permutations: the image table packed in radix `degree`
/// when it fits in 128 bits, otherwise the table itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PermKey {
    Packed(u128),
    Wide(Box<[u16]>),
}

const MAX_PACKED_DEGREE: usize = 26;

impl Encode for Permutation {
    type Key = PermKey;

    fn key(&self) -> PermKey {
        let n = self.degree();
        if n <= MAX_PACKED_DEGREE {
            let radix = n as u128;
            PermKey::Packed(
                self.raw()
                    .iter()
                    .rev()
                    .fold(0u128, |acc, &p| acc * radix + p as u128),
            )
        } else {
            PermKey::Wide(self.raw().into())
        }
    }

    fn decode(&self, key: &PermKey) -> Self {
        let n = self.degree();
        match key {
            PermKey::Packed(mut packed) => {
                let radix = n as u128;
                let images = (0..n)
                    .map(|_| {
                        let p = (packed % radix) as u16;
                        packed /= radix;
                        p
                    })
                    .collect();
                Permutation::from_raw(images)
            }
            PermKey::Wide(images) => Permutation::from_raw(images.to_vec()),
        }
    }
}

impl Ranked for Permutation {
    fn carrier_size(&self) -> Option<u64> {
        (1..=self.degree() as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
    }

    fn rank(&self) -> u64 {
        self.lehmer_rank().expect("degree too large to rank")
    }

    fn unrank(&self, rank: u64) -> Self {
        Permutation::from_lehmer_rank(self.degree(), rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("malformed group spec {0:?}; expected S:n or A:n")]
    Malformed(String),
    #[error("group degree must be at least 1")]
    ZeroDegree,
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A named finite permutation group together with its degree.
///
/// `S:1`, `A:1` and `A:2` are all trivial as groups but keep their degree,
/// which matters when they act as the top group of a wreath product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    Explicit {
        generators: Vec<Permutation>,
        degree: usize,
    },
}

impl GroupSpec {
    pub fn explicit(degree: usize, generators: Vec<Permutation>) -> Result<Self, SpecError> {
        if degree == 0 {
            return Err(SpecError::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                }
                .into());
            }
        }
        Ok(GroupSpec::Explicit { generators, degree })
    }

    pub fn degree(&self) -> usize {
        match self {
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) => *n,
            GroupSpec::Explicit { degree, .. } => *degree,
        }
    }

    pub fn order(&self) -> BigUint {
        match self {
            GroupSpec::Symmetric(n) => factorial(*n),
            GroupSpec::Alternating(n) if *n >= 2 => factorial(*n) / 2u32,
            GroupSpec::Alternating(_) => BigUint::one(),
            GroupSpec::Explicit { generators, degree } => Bsgs::new(*degree, generators)
                .expect("explicit generators share the degree")
                .order(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order().is_one()
    }

    /// A small generating set of non-identity permutations; empty for the
    /// trivial groups.
    ///
    /// `S_n`: `(1,2)` and `(1,2,...,n)`. `A_n`: `(1,2,3)` together with
    /// `(1,2,...,n)` for odd `n` or `(2,3,...,n)` for even `n`.
    pub fn generators(&self) -> Vec<Permutation> {
        let cycle = |pts: Vec<usize>, n| Permutation::cycle(n, &pts).expect("points in range");
        let mut gens = match self {
            GroupSpec::Symmetric(n) if *n >= 2 => {
                vec![cycle(vec![1, 2], *n), cycle((1..=*n).collect(), *n)]
            }
            GroupSpec::Alternating(n) if *n >= 3 => {
                let long = if n % 2 == 1 { 1..=*n } else { 2..=*n };
                vec![cycle(vec![1, 2, 3], *n), cycle(long.collect(), *n)]
            }
            GroupSpec::Explicit { generators, .. } => generators.clone(),
            _ => vec![],
        };
        gens.retain(|g| !g.is_identity());
        gens.dedup();
        gens
    }

    pub fn contains(&self, f: &Permutation) -> bool {
        if f.degree() != self.degree() {
            return false;
        }
        match self {
            GroupSpec::Symmetric(_) => true,
            GroupSpec::Alternating(_) => f.parity() == Parity::Even,
            GroupSpec::Explicit { generators, degree } => Bsgs::new(*degree, generators)
                .map(|b| b.contains(f))
                .unwrap_or(false),
        }
    }

    pub fn is_symmetric_or_alternating(&self) -> bool {
        !matches!(self, GroupSpec::Explicit { .. })
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "S:{n}"),
            GroupSpec::Alternating(n) => write!(f, "A:{n}"),
            GroupSpec::Explicit { generators, degree } => {
                write!(f, "<")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, ">:{degree}")
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || SpecError::Malformed(s.to_string());
        let (kind, n) = s.trim().split_once(':').ok_or_else(malformed)?;
        let n: usize = n.trim().parse().map_err(|_| malformed())?;
        if n == 0 {
            return Err(SpecError::ZeroDegree);
        }
        match kind.trim() {
            "S" => Ok(GroupSpec::Symmetric(n)),
            "A" => Ok(GroupSpec::Alternating(n)),
            _ => Err(malformed()),
        }
    }
}

/// Orbit of a 1-based point under the group generated by `generators`, sorted.
pub fn orbit(degree: usize, generators: &[Permutation], point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    let mut queue = vec![point - 1];
    seen[point - 1] = true;
    let mut head = 0;
    while head < queue.len() {
        let p = queue[head];
        head += 1;
        for g in generators {
            let q = g.apply0(p);
            if !seen[q] {
                seen[q] = true;
                queue.push(q);
            }
        }
    }
    let mut out: Vec<usize> = queue.into_iter().map(|p| p + 1).collect();
    out.sort_unstable();
    out
}

/// Orbits of the generated group on `1..=degree`, each sorted, ordered by least point.
pub fn orbits(degree: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; degree];
    let mut out = Vec::new();
    for p in 1..=degree {
        if !assigned[p - 1] {
            let o = orbit(degree, generators, p);
            for &q in &o {
                assigned[q - 1] = true;
            }
            out.push(o);
        }
    }
    out
}

/// Whether the group generated by `generators` is transitive on `1..=degree`.
pub fn is_transitive(degree: usize, generators: &[Permutation]) -> bool {
    orbit(degree, generators, 1).len() == degree
}
