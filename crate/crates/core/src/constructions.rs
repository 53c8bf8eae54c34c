//! Explicit generating sets for symmetric and alternating groups and for
//! wreath products of them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{factorial, is_transitive, Bsgs, GroupSpec};
use crate::perm::{PermError, Permutation};
use crate::wreath::{WreathElement, WreathError, WreathShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{case} needs {requirement}; got n = {n}")]
    OutOfRange {
        case: LemmaCase,
        n: usize,
        requirement: &'static str,
    },
    #[error("{case} is excluded at n = {n}: the stated group is not generated there")]
    Excluded { case: LemmaCase, n: usize },
    #[error("unknown lemma case {0:?}")]
    UnknownCase(String),
    #[error(
        "crt_exponent needs gcd(p, q) = gcd(r, p) = 1 and positive inputs; got p={p}, q={q}, r={r}"
    )]
    NotCoprime { p: u128, q: u128, r: u128 },
    #[error("{group} is outside the scope of this construction: {reason}")]
    OutOfScope { group: String, reason: &'static str },
    #[error("the top group is not transitive on {degree} points")]
    NotTransitive { degree: usize },
    #[error(transparent)]
    Wreath(#[from] WreathError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Least `k >= 1` with `k r ≡ 1 (mod p)` and `k ≡ 0 (mod q)`.
///
/// With `p = ord(a)` and `q = ord(b)` this gives `a^{kr} = a` and `b^k = 1`.
pub fn crt_exponent(p: u128, q: u128, r: u128) -> Result<u128, ConstructionError> {
    let err = ConstructionError::NotCoprime { p, q, r };
    if p == 0 || q == 0 || r == 0 || p.gcd(&q) != 1 || r.gcd(&p) != 1 {
        return Err(err);
    }
    if p == 1 {
        return Ok(q);
    }
    // k = q t with (q r) t ≡ 1 (mod p); take the least t in 1..=p.
    let qr = ((q % p) * (r % p)) % p;
    let t = mod_inverse(qr, p).ok_or(err)?;
    Ok(q * if t == 0 { p } else { t })
}

fn mod_inverse(a: u128, m: u128) -> Option<u128> {
    let (a, m) = (a as i128, m as i128);
    let e = a.extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m) as u128)
}

/// Identifiers of the classic generating sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaCase {
    /// `(1,2), (2,3), ..., (n-1,n)` generate `S_n`.
    Coxeter,
    /// `(1,2,3), (2,3,4), ..., (n-2,n-1,n)` generate `A_n`.
    Consecutive3,
    /// `(1,2,3), (1,2,4), ..., (1,2,n)` generate `A_n`.
    FixedPair3,
    /// `(1,2,3), (1,3,4), ..., (1,n-1,n)` generate `A_n`.
    Fan3,
    /// `(1,2), (1,2,...,n)` generate `S_n`.
    TranspositionLongCycle,
    /// `(1,2), (2,3,...,n)` generate `S_n`.
    TranspositionShortCycle,
    /// `(1,2,3), (1,2,...,n)` generate `A_n` for odd `n`.
    ThreeCycleOdd,
    /// `(1,2,3), (2,3,...,n)` generate `A_n` for even `n`.
    ThreeCycleEven,
    /// `(1,2,3), (3,4,...,n)`: `A_n` for odd `n`, `S_n` for even `n`.
    ThreeCycleTail3,
    /// `(1,2,3), (2,3,...,n)`: `S_n` for odd `n`, `A_n` for even `n`.
    ThreeCycleTail2,
    /// `(1,2)(3,4), (2,3,...,n)`: `S_n` for odd `n != 5`, `A_n` for even `n`.
    DoubleTranspositionTail2,
    /// `(1,2)(3,4), (2,4,5,...,n)`: `A_n` for odd `n`, `S_n` for even `n != 6`.
    DoubleTranspositionSkip3,
    /// `(1,2,3,4), (3,4,...,n)` generate `S_n` for `n = 5` or `n >= 7`.
    FourCycleTail3,
}

impl LemmaCase {
    pub const ALL: [LemmaCase; 13] = [
        LemmaCase::Coxeter,
        LemmaCase::Consecutive3,
        LemmaCase::FixedPair3,
        LemmaCase::Fan3,
        LemmaCase::TranspositionLongCycle,
        LemmaCase::TranspositionShortCycle,
        LemmaCase::ThreeCycleOdd,
        LemmaCase::ThreeCycleEven,
        LemmaCase::ThreeCycleTail3,
        LemmaCase::ThreeCycleTail2,
        LemmaCase::DoubleTranspositionTail2,
        LemmaCase::DoubleTranspositionSkip3,
        LemmaCase::FourCycleTail3,
    ];

    pub fn id(self) -> &'static str {
        match self {
            LemmaCase::Coxeter => "L2.2-coxeter",
            LemmaCase::Consecutive3 => "L2.2-consec3",
            LemmaCase::FixedPair3 => "L2.2-u",
            LemmaCase::Fan3 => "L2.2-v",
            LemmaCase::TranspositionLongCycle => "L2.3-1a",
            LemmaCase::TranspositionShortCycle => "L2.3-1b",
            LemmaCase::ThreeCycleOdd => "L2.3-2",
            LemmaCase::ThreeCycleEven => "L2.3-3",
            LemmaCase::ThreeCycleTail3 => "L2.4-1",
            LemmaCase::ThreeCycleTail2 => "L2.4-2",
            LemmaCase::DoubleTranspositionTail2 => "L2.5-1",
            LemmaCase::DoubleTranspositionSkip3 => "L2.5-2",
            LemmaCase::FourCycleTail3 => "L2.6",
        }
    }

    fn min_degree(self) -> usize {
        match self {
            LemmaCase::Coxeter
            | LemmaCase::TranspositionLongCycle
            | LemmaCase::TranspositionShortCycle => 2,
            LemmaCase::Consecutive3
            | LemmaCase::FixedPair3
            | LemmaCase::Fan3
            | LemmaCase::ThreeCycleOdd
            | LemmaCase::ThreeCycleTail3
            | LemmaCase::ThreeCycleTail2 => 3,
            LemmaCase::ThreeCycleEven | LemmaCase::DoubleTranspositionTail2 => 4,
            LemmaCase::DoubleTranspositionSkip3 | LemmaCase::FourCycleTail3 => 5,
        }
    }

    fn requirement(self) -> &'static str {
        match self {
            LemmaCase::ThreeCycleOdd => "odd n >= 3",
            LemmaCase::ThreeCycleEven => "even n >= 4",
            LemmaCase::Coxeter
            | LemmaCase::TranspositionLongCycle
            | LemmaCase::TranspositionShortCycle => "n >= 2",
            LemmaCase::DoubleTranspositionTail2 => "n >= 4",
            LemmaCase::DoubleTranspositionSkip3 | LemmaCase::FourCycleTail3 => "n >= 5",
            _ => "n >= 3",
        }
    }

    /// Whether `n` is a valid, non-excluded degree for this case.
    pub fn is_valid(self, n: usize) -> bool {
        self.check(n).is_ok()
    }

    fn check(self, n: usize) -> Result<(), ConstructionError> {
        let parity_ok = match self {
            LemmaCase::ThreeCycleOdd => n % 2 == 1,
            LemmaCase::ThreeCycleEven => n.is_multiple_of(2),
            _ => true,
        };
        if n < self.min_degree() || !parity_ok {
            return Err(ConstructionError::OutOfRange {
                case: self,
                n,
                requirement: self.requirement(),
            });
        }
        let excluded = match self {
            LemmaCase::DoubleTranspositionTail2 => n == 5,
            LemmaCase::DoubleTranspositionSkip3 | LemmaCase::FourCycleTail3 => n == 6,
            _ => false,
        };
        if excluded {
            return Err(ConstructionError::Excluded { case: self, n });
        }
        Ok(())
    }

    /// The generators at degree `n`, without range checks.
    pub fn raw_generators(self, n: usize) -> Vec<Permutation> {
        let c = |pts: &[usize]| Permutation::cycle(n, pts).expect("points within degree");
        let range = |a: usize| (a..=n).collect::<Vec<_>>();
        match self {
            LemmaCase::Coxeter => (1..n).map(|i| c(&[i, i + 1])).collect(),
            LemmaCase::Consecutive3 => (1..=n - 2).map(|i| c(&[i, i + 1, i + 2])).collect(),
            LemmaCase::FixedPair3 => (3..=n).map(|i| c(&[1, 2, i])).collect(),
            LemmaCase::Fan3 => (2..n).map(|i| c(&[1, i, i + 1])).collect(),
            LemmaCase::TranspositionLongCycle => vec![c(&[1, 2]), c(&range(1))],
            LemmaCase::TranspositionShortCycle => vec![c(&[1, 2]), c(&range(2))],
            LemmaCase::ThreeCycleOdd => vec![c(&[1, 2, 3]), c(&range(1))],
            LemmaCase::ThreeCycleEven | LemmaCase::ThreeCycleTail2 => {
                vec![c(&[1, 2, 3]), c(&range(2))]
            }
            LemmaCase::ThreeCycleTail3 => vec![c(&[1, 2, 3]), c(&range(3))],
            LemmaCase::DoubleTranspositionTail2 => {
                vec![
                    Permutation::from_cycles(n, &[[1, 2], [3, 4]]).unwrap(),
                    c(&range(2)),
                ]
            }
            LemmaCase::DoubleTranspositionSkip3 => {
                let mut pts = vec![2];
                pts.extend(4..=n);
                vec![
                    Permutation::from_cycles(n, &[[1, 2], [3, 4]]).unwrap(),
                    c(&pts),
                ]
            }
            LemmaCase::FourCycleTail3 => vec![c(&[1, 2, 3, 4]), c(&range(3))],
        }
    }

    /// The full group the generators are claimed to generate at degree `n`.
    pub fn expected(self, n: usize) -> ExpectedGroup {
        use ExpectedGroup::*;
        let odd = n % 2 == 1;
        match self {
            LemmaCase::Coxeter
            | LemmaCase::TranspositionLongCycle
            | LemmaCase::TranspositionShortCycle
            | LemmaCase::FourCycleTail3 => FullSymmetric(n),
            LemmaCase::Consecutive3
            | LemmaCase::FixedPair3
            | LemmaCase::Fan3
            | LemmaCase::ThreeCycleOdd
            | LemmaCase::ThreeCycleEven => FullAlternating(n),
            LemmaCase::ThreeCycleTail3 | LemmaCase::DoubleTranspositionSkip3 => {
                if odd {
                    FullAlternating(n)
                } else {
                    FullSymmetric(n)
                }
            }
            LemmaCase::ThreeCycleTail2 | LemmaCase::DoubleTranspositionTail2 => {
                if odd {
                    FullSymmetric(n)
                } else {
                    FullAlternating(n)
                }
            }
        }
    }
}

impl fmt::Display for LemmaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for LemmaCase {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaCase::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| ConstructionError::UnknownCase(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExpectedGroup {
    FullSymmetric(usize),
    FullAlternating(usize),
}

impl ExpectedGroup {
    pub fn order(self) -> BigUint {
        match self {
            ExpectedGroup::FullSymmetric(n) => factorial(n),
            ExpectedGroup::FullAlternating(n) => factorial(n) / 2u32,
        }
    }

    pub fn spec(self) -> GroupSpec {
        match self {
            ExpectedGroup::FullSymmetric(n) => GroupSpec::Symmetric(n),
            ExpectedGroup::FullAlternating(n) => GroupSpec::Alternating(n),
        }
    }
}

impl fmt::Display for ExpectedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec().fmt(f)
    }
}

/// The generating set of `case` at degree `n` and the group it generates.
pub fn classic_generators(
    case: LemmaCase,
    n: usize,
) -> Result<(Vec<Permutation>, ExpectedGroup), ConstructionError> {
    case.check(n)?;
    Ok((case.raw_generators(n), case.expected(n)))
}

fn cycle(n: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    Permutation::cycle(n, &pts).expect("points within degree")
}

/// A pair `(f, g)` generating `S` with `n f = n`, `1 g = 1`, `ord(f)` a power
/// of two and `ord(g)` odd. Defined for `S_n` with `n >= 4` and `A_n` with `n >= 5`.
pub fn special_pair(s: &GroupSpec) -> Result<(Permutation, Permutation), ConstructionError> {
    let double_transposition = |n| Permutation::from_cycles(n, &[[1, 2], [3, 4]]).unwrap();
    match *s {
        GroupSpec::Symmetric(n) if n >= 4 && n % 2 == 0 => Ok((cycle(n, [1, 2]), cycle(n, 2..=n))),
        GroupSpec::Symmetric(n) if n >= 5 => Ok((cycle(n, 1..=4), cycle(n, 3..=n))),
        GroupSpec::Alternating(n) if n >= 6 && n % 2 == 0 => {
            Ok((double_transposition(n), cycle(n, 2..=n)))
        }
        GroupSpec::Alternating(n) if n >= 5 => Ok((
            double_transposition(n),
            cycle(n, std::iter::once(2).chain(4..=n)),
        )),
        _ => Err(ConstructionError::OutOfScope {
            group: s.to_string(),
            reason: "needs S_n with n >= 4 or A_n with n >= 5",
        }),
    }
}

/// A pair `(a, b)` generating `G` with `ord(a)` odd and `ord(b)` a power of two.
pub fn base_pair(g: &GroupSpec) -> Result<(Permutation, Permutation), ConstructionError> {
    let n = g.degree();
    let id = || Permutation::identity(n);
    match *g {
        GroupSpec::Symmetric(1) | GroupSpec::Alternating(1) | GroupSpec::Alternating(2) => {
            Ok((id(), id()))
        }
        GroupSpec::Symmetric(2) => Ok((id(), cycle(2, [1, 2]))),
        GroupSpec::Symmetric(3) => Ok((cycle(3, [1, 2, 3]), cycle(3, [1, 2]))),
        GroupSpec::Alternating(3) => Ok((cycle(3, [1, 2, 3]), id())),
        GroupSpec::Alternating(4) => Ok((
            cycle(4, [1, 2, 3]),
            Permutation::from_cycles(4, &[[1, 2], [3, 4]]).unwrap(),
        )),
        GroupSpec::Symmetric(_) | GroupSpec::Alternating(_) => {
            let (f, g) = special_pair(g)?;
            Ok((g, f))
        }
        GroupSpec::Explicit { .. } => Err(ConstructionError::OutOfScope {
            group: g.to_string(),
            reason: "base pairs are defined for symmetric and alternating groups",
        }),
    }
}

/// The four elements `(1; f)`, `(1; g)`, `(.., a, ..; h1)`, `(.., b, ..; h2)`
/// with `a` at `pos_a` and `b` at `pos_b` (1-based).
#[allow(clippy::too_many_arguments)]
pub fn four_generators(
    shape: &WreathShape,
    (a, b): (&Permutation, &Permutation),
    (f, g): (&Permutation, &Permutation),
    h1: &Permutation,
    h2: &Permutation,
    pos_a: usize,
    pos_b: usize,
) -> Result<[WreathElement; 4], ConstructionError> {
    let n = shape.top_degree();
    if !is_transitive(n, &[f.clone(), g.clone()]) {
        return Err(ConstructionError::NotTransitive { degree: n });
    }
    let id = Permutation::identity(shape.base_degree());
    Ok([
        shape.spike(&id, 1, f.clone())?,
        shape.spike(&id, 1, g.clone())?,
        shape.spike(a, pos_a, h1.clone())?,
        shape.spike(b, pos_b, h2.clone())?,
    ])
}

/// Which construction produced a [`GeneratingSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Single generator of a cyclic wreath product.
    Cyclic,
    /// Top group of degree 1: the base pair on one coordinate.
    TrivialTop,
    /// `S_2` on top: `(a b^-1, 1; id)`, `(1, b; (1,2))`.
    Symmetric2,
    /// `S_3` on top: `(a, b, 1; (2,3))`, `(1, 1, 1; (1,2))`.
    Symmetric3,
    /// `A_2` on top: `(a, b; id)`, `(b, a; id)`.
    Alternating2,
    /// `A_3` on top: `(a b^-1, 1, 1; id)`, `(b, 1, 1; (1,2,3))`.
    Alternating3,
    /// `A_4` on top: `(a, 1, 1, b; (1,2,3))`, `(1, 1, 1, 1; (2,3,4))`.
    Alternating4,
    /// `S_n` (n >= 4) or `A_n` (n >= 5) on top: `(1, ..., 1, a; f)`, `(b, 1, ..., 1; g)`.
    SpecialPair,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

/// A generating set for a wreath product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    pub shape: WreathShape,
    pub elements: Vec<WreathElement>,
    pub provenance: Provenance,
}

impl GeneratingSet {
    /// The elements in the imprimitive action of degree `m n`.
    pub fn embedded(&self) -> Vec<Permutation> {
        self.elements.iter().map(WreathElement::embed).collect()
    }

    /// Order of the generated group, computed by Schreier-Sims on the embedding.
    pub fn generated_order(&self) -> BigUint {
        let degree = self.shape.base_degree() * self.shape.top_degree();
        Bsgs::new(degree, &self.embedded())
            .expect("embedded degrees agree")
            .order()
    }
}

fn is_trivial_sa(g: &GroupSpec) -> bool {
    matches!(
        g,
        GroupSpec::Symmetric(1) | GroupSpec::Alternating(1) | GroupSpec::Alternating(2)
    )
}

fn is_cyclic_sa(g: &GroupSpec) -> bool {
    is_trivial_sa(g) || matches!(g, GroupSpec::Symmetric(2) | GroupSpec::Alternating(3))
}

fn is_degree_one(g: &GroupSpec) -> bool {
    matches!(g, GroupSpec::Symmetric(1) | GroupSpec::Alternating(1))
}

/// Whether `G wr S` is cyclic, for symmetric or alternating `G` and `S`.
///
/// True exactly when `G` is trivial and `S` is one of `S_1, S_2, A_2, A_3`, or
/// `G` is one of `S_1, S_2, A_2, A_3` and `S = S_1`.
pub fn rank_one_classifier(g: &GroupSpec, s: &GroupSpec) -> bool {
    let small_top = matches!(
        s,
        GroupSpec::Symmetric(1)
            | GroupSpec::Alternating(1)
            | GroupSpec::Symmetric(2)
            | GroupSpec::Alternating(2)
            | GroupSpec::Alternating(3)
    );
    (is_trivial_sa(g) && small_top) || (is_cyclic_sa(g) && is_degree_one(s))
}

fn cyclic_generator(g: &GroupSpec) -> Permutation {
    match *g {
        GroupSpec::Symmetric(2) => cycle(2, [1, 2]),
        GroupSpec::Alternating(3) => cycle(3, [1, 2, 3]),
        _ => Permutation::identity(g.degree()),
    }
}

/// A generating set of size `rank(G wr S)` (one or two) for symmetric or
/// alternating `G` and `S`.
pub fn two_generators(g: &GroupSpec, s: &GroupSpec) -> Result<GeneratingSet, ConstructionError> {
    for x in [g, s] {
        if !x.is_symmetric_or_alternating() {
            return Err(ConstructionError::OutOfScope {
                group: x.to_string(),
                reason: "needs a symmetric or alternating group",
            });
        }
    }
    let shape = WreathShape::new(g.clone(), s.clone());
    let n = s.degree();
    let m = g.degree();
    let one = Permutation::identity(m);
    let t = |pts: &[&Permutation]| pts.iter().map(|&p| p.clone()).collect::<Vec<_>>();
    let top = |pts: &[usize]| Permutation::cycle(n, pts).expect("points within degree");
    let id_n = Permutation::identity(n);

    if rank_one_classifier(g, s) {
        let tuple = vec![cyclic_generator(g); n];
        let top = cyclic_generator(s);
        return Ok(GeneratingSet {
            elements: vec![shape.element(tuple, top)?],
            shape,
            provenance: Provenance::Cyclic,
        });
    }

    let (a, b) = base_pair(g)?;
    let b_inv = crate::groups::power(&b, b.order() - 1);
    let a_b_inv = &a * &b_inv;
    let (elements, provenance) = match *s {
        GroupSpec::Symmetric(1) | GroupSpec::Alternating(1) => (
            vec![
                shape.element(t(&[&a]), id_n.clone())?,
                shape.element(t(&[&b]), id_n)?,
            ],
            Provenance::TrivialTop,
        ),
        GroupSpec::Symmetric(2) => (
            vec![
                shape.element(t(&[&a_b_inv, &one]), id_n)?,
                shape.element(t(&[&one, &b]), top(&[1, 2]))?,
            ],
            Provenance::Symmetric2,
        ),
        GroupSpec::Symmetric(3) => (
            vec![
                shape.element(t(&[&a, &b, &one]), top(&[2, 3]))?,
                shape.element(t(&[&one, &one, &one]), top(&[1, 2]))?,
            ],
            Provenance::Symmetric3,
        ),
        GroupSpec::Alternating(2) => (
            vec![
                shape.element(t(&[&a, &b]), id_n.clone())?,
                shape.element(t(&[&b, &a]), id_n)?,
            ],
            Provenance::Alternating2,
        ),
        GroupSpec::Alternating(3) => (
            vec![
                shape.element(t(&[&a_b_inv, &one, &one]), id_n)?,
                shape.element(t(&[&b, &one, &one]), top(&[1, 2, 3]))?,
            ],
            Provenance::Alternating3,
        ),
        GroupSpec::Alternating(4) => (
            vec![
                shape.element(t(&[&a, &one, &one, &b]), top(&[1, 2, 3]))?,
                shape.element(t(&[&one, &one, &one, &one]), top(&[2, 3, 4]))?,
            ],
            Provenance::Alternating4,
        ),
        _ => {
            let (f, g_top) = special_pair(s)?;
            (
                vec![shape.spike(&a, n, f)?, shape.spike(&b, 1, g_top)?],
                Provenance::SpecialPair,
            )
        }
    };
    Ok(GeneratingSet {
        shape,
        elements,
        provenance,
    })
}
