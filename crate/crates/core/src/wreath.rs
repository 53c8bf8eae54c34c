//! The wreath product `G wr S = G^n ⋊ S` for `S <= S_n`.
//!
//! Elements are pairs `(a_1, ..., a_n; f)`. With permutations acting on the
//! right, the product is
//!
//! ```text
//! (a_1, ..., a_n; f)(b_1, ..., b_n; g) = (a_1 b_{1f}, ..., a_n b_{nf}; fg)
//! ```
//!
//! For a permutation base group of degree `m`, [`WreathElement::embed`] gives
//! the imprimitive action on `m * n` points, where block `i` is
//! `{(i-1)m + 1, ..., im}` and `(block i, point j)` maps to
//! `(block i f, point j a_i)`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Pow;
use thiserror::Error;

use crate::groups::{orbits, Element, Encode, FiniteElement, GroupSpec, Ranked};
use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WreathError {
    #[error("tuple has length {tuple} but the top permutation has degree {top}")]
    TupleLength { tuple: usize, top: usize },
    #[error("wreath elements have different shapes")]
    ShapeMismatch,
    #[error("coordinate {coordinate} is not in the base group {base}")]
    NotInBase { coordinate: usize, base: String },
    #[error("top permutation {top} is not in the top group {group}")]
    NotInTop { top: String, group: String },
    #[error("malformed wreath element: {0}")]
    Malformed(String),
    #[error("a tower needs at least one factor")]
    EmptyTower,
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// The pair of groups `G` (base) and `S` (top) defining `G wr S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathShape {
    pub base: GroupSpec,
    pub top: GroupSpec,
}

impl WreathShape {
    pub fn new(base: GroupSpec, top: GroupSpec) -> Self {
        Self { base, top }
    }

    /// Number of coordinates `n`: the degree of the top group.
    pub fn top_degree(&self) -> usize {
        self.top.degree()
    }

    pub fn base_degree(&self) -> usize {
        self.base.degree()
    }

    /// `|G|^n |S|`.
    pub fn order(&self) -> BigUint {
        Pow::pow(self.base.order(), self.top_degree()) * self.top.order()
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement::identity(Permutation::identity(self.base_degree()), self.top_degree())
    }

    /// Builds an element, checking every coordinate against the base group and
    /// the top permutation against the top group.
    pub fn element(
        &self,
        tuple: Vec<Permutation>,
        top: Permutation,
    ) -> Result<WreathElement, WreathError> {
        for (i, a) in tuple.iter().enumerate() {
            if !self.base.contains(a) {
                return Err(WreathError::NotInBase {
                    coordinate: i + 1,
                    base: self.base.to_string(),
                });
            }
        }
        if !self.top.contains(&top) {
            return Err(WreathError::NotInTop {
                top: top.to_string(),
                group: self.top.to_string(),
            });
        }
        WreathElement::new(tuple, top)
    }

    /// `(1, ..., a, ..., 1; top)` with `a` at 1-based `position`.
    pub fn spike(
        &self,
        a: &Permutation,
        position: usize,
        top: Permutation,
    ) -> Result<WreathElement, WreathError> {
        let mut tuple = vec![Permutation::identity(self.base_degree()); self.top_degree()];
        tuple[position - 1] = a.clone();
        self.element(tuple, top)
    }

    /// Parses the textual form `(c1, c2, ..., cn; f)`.
    pub fn parse_element(&self, text: &str) -> Result<WreathElement, WreathError> {
        let (coords, top) = split_element(text)?;
        if coords.len() != self.top_degree() {
            return Err(WreathError::TupleLength {
                tuple: coords.len(),
                top: self.top_degree(),
            });
        }
        let tuple = coords
            .iter()
            .map(|c| Permutation::parse_cycles(c, self.base_degree()))
            .collect::<Result<Vec<_>, _>>()?;
        let top = Permutation::parse_cycles(top, self.top_degree())?;
        self.element(tuple, top)
    }
}

impl fmt::Display for WreathShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} wr {}", self.base, self.top)
    }
}

/// Splits `(c1, ..., cn; f)` into coordinate texts and the top text, honouring
/// the parentheses of the cycle notation inside.
fn split_element(text: &str) -> Result<(Vec<&str>, &str), WreathError> {
    let malformed = |why: &str| WreathError::Malformed(format!("{why} in {text:?}"));
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| malformed("missing outer parentheses"))?;
    let mut depth = 0i32;
    let mut coords = Vec::new();
    let mut start = 0;
    let mut top = None;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(malformed("unbalanced parentheses"));
                }
            }
            ',' if depth == 0 && top.is_none() => {
                coords.push(inner[start..i].trim());
                start = i + 1;
            }
            ';' if depth == 0 => {
                if top.is_some() {
                    return Err(malformed("more than one ';'"));
                }
                coords.push(inner[start..i].trim());
                top = Some(i + 1);
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(malformed("unbalanced parentheses"));
    }
    let top = top.ok_or_else(|| malformed("missing ';'"))?;
    Ok((coords, inner[top..].trim()))
}

/// An element `(a_1, ..., a_n; f)` of a wreath product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WreathElement<B = Permutation> {
    tuple: Vec<B>,
    top: Permutation,
}

impl<B: Element> WreathElement<B> {
    pub fn new(tuple: Vec<B>, top: Permutation) -> Result<Self, WreathError> {
        if tuple.len() != top.degree() {
            return Err(WreathError::TupleLength {
                tuple: tuple.len(),
                top: top.degree(),
            });
        }
        if tuple.iter().any(|a| !a.compatible(&tuple[0])) {
            return Err(WreathError::ShapeMismatch);
        }
        Ok(Self { tuple, top })
    }

    /// `(1, ..., 1; id_n)`.
    pub fn identity(base_identity: B, n: usize) -> Self {
        Self {
            tuple: vec![base_identity; n],
            top: Permutation::identity(n),
        }
    }

    pub fn tuple(&self) -> &[B] {
        &self.tuple
    }

    pub fn top(&self) -> &Permutation {
        &self.top
    }

    pub fn degree(&self) -> usize {
        self.top.degree()
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.degree() == other.degree() && self.tuple[0].compatible(&other.tuple[0])
    }

    /// The product rule: coordinate `i` is `a_i b_{i f}`, top is `fg`.
    pub fn mul(&self, other: &Self) -> Result<Self, WreathError> {
        if !self.same_shape(other) {
            return Err(WreathError::ShapeMismatch);
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let tuple = self
            .tuple
            .iter()
            .enumerate()
            .map(|(i, a)| a.op(&other.tuple[self.top.apply0(i)]))
            .collect();
        Self {
            tuple,
            top: self.top.compose_unchecked(&other.top),
        }
    }

    /// `(b; f^-1)` with `b_j = (a_{j f^-1})^-1`.
    pub fn inverse(&self) -> Self {
        let top = self.top.inverse();
        let tuple = (0..self.degree())
            .map(|j| self.tuple[top.apply0(j)].inv())
            .collect();
        Self { tuple, top }
    }
}

impl<B: FiniteElement> WreathElement<B> {
    /// Least `k >= 1` with `x^k` the identity. Uses that `x^{ord f}` has trivial
    /// top, so its order is the lcm of its coordinates' orders.
    pub fn order(&self) -> u128 {
        let k = self.top.order();
        let y = crate::groups::power(self, k);
        k * y.tuple.iter().fold(1u128, |acc, a| acc.lcm(&a.order()))
    }
}

impl WreathElement<Permutation> {
    pub fn base_degree(&self) -> usize {
        self.tuple[0].degree()
    }

    /// The imprimitive permutation of degree `m n` described in the module docs.
    pub fn embed(&self) -> Permutation {
        let m = self.base_degree();
        let n = self.degree();
        let mut images = Vec::with_capacity(m * n);
        for i in 0..n {
            let block = self.top.apply0(i);
            let a = &self.tuple[i];
            for j in 0..m {
                images.push((block * m + a.apply0(j)) as u16);
            }
        }
        Permutation::from_raw(images)
    }
}

impl<B: Element> Element for WreathElement<B> {
    fn op(&self, rhs: &Self) -> Self {
        assert!(self.same_shape(rhs), "wreath elements of different shapes");
        self.mul_unchecked(rhs)
    }

    fn inv(&self) -> Self {
        self.inverse()
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.tuple[0].identity_like(), self.degree())
    }

    fn is_identity(&self) -> bool {
        self.top.is_identity() && self.tuple.iter().all(Element::is_identity)
    }

    fn compatible(&self, other: &Self) -> bool {
        self.same_shape(other)
    }
}

impl<B: FiniteElement> FiniteElement for WreathElement<B> {
    fn order(&self) -> u128 {
        WreathElement::order(self)
    }
}

impl<B: Ranked> Ranked for WreathElement<B> {
    fn carrier_size(&self) -> Option<u64> {
        let base = self.tuple[0].carrier_size()?;
        let top = self.top.carrier_size()?;
        (0..self.degree()).try_fold(top, |acc, _| acc.checked_mul(base))
    }

    /// Mixed radix: coordinates (first least significant), then the top.
    fn rank(&self) -> u64 {
        let base = self.tuple[0].carrier_size().expect("base carrier fits");
        let top = self.top.lehmer_rank().expect("top degree fits");
        self.tuple
            .iter()
            .rev()
            .fold(top, |acc, a| acc * base + a.rank())
    }

    fn unrank(&self, mut rank: u64) -> Self {
        let template = &self.tuple[0];
        let base = template.carrier_size().expect("base carrier fits");
        let tuple = (0..self.degree())
            .map(|_| {
                let r = rank % base;
                rank /= base;
                template.unrank(r)
            })
            .collect();
        Self {
            tuple,
            top: Permutation::from_lehmer_rank(self.degree(), rank),
        }
    }
}

impl<B: Ranked> Encode for WreathElement<B> {
    type Key = u64;

    fn key(&self) -> u64 {
        self.rank()
    }

    fn decode(&self, key: &u64) -> Self {
        self.unrank(*key)
    }

    fn encodable(&self) -> bool {
        self.carrier_size().is_some()
    }
}

impl fmt::Display for WreathElement<Permutation> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.tuple.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "; {})", self.top)
    }
}

impl<B: fmt::Debug> fmt::Debug for WreathElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WreathElement")
            .field("tuple", &self.tuple)
            .field("top", &self.top)
            .finish()
    }
}

/// `a` acting inside block `block` (1-based) of `n_blocks` blocks.
pub fn block_lift(a: &Permutation, block: usize, n_blocks: usize) -> Permutation {
    let m = a.degree();
    let offset = (block - 1) * m;
    let mut images: Vec<u16> = (0..(m * n_blocks) as u16).collect();
    for j in 0..m {
        images[offset + j] = (offset + a.apply0(j)) as u16;
    }
    Permutation::from_raw(images)
}

/// `f` permuting blocks of size `block_size` rigidly.
pub fn top_lift(f: &Permutation, block_size: usize) -> Permutation {
    let m = block_size;
    let mut images = Vec::with_capacity(m * f.degree());
    for i in 0..f.degree() {
        let target = f.apply0(i);
        images.extend((0..m).map(|j| (target * m + j) as u16));
    }
    Permutation::from_raw(images)
}

/// Permutation generators of an iterated wreath product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerGenerators {
    pub generators: Vec<Permutation>,
    pub degree: usize,
    pub expected_order: BigUint,
}

/// Generators of the left-nested product `(((G_1 wr G_2) wr G_3) ... ) wr G_k`
/// in its imprimitive action of degree `n_1 n_2 ... n_k`.
///
/// At each step the inner group's generators are copied into one block per
/// orbit of the outer factor on blocks, and the outer factor's generators
/// permute whole blocks. For transitive outer factors this is a single copy
/// in the first block.
pub fn tower_generators(specs: &[GroupSpec]) -> Result<TowerGenerators, WreathError> {
    let (first, rest) = specs.split_first().ok_or(WreathError::EmptyTower)?;
    let mut degree = first.degree();
    let mut generators = first.generators();
    let mut order = first.order();
    for spec in rest {
        let n = spec.degree();
        let outer = spec.generators();
        let mut next = Vec::new();
        let block_orbits = orbits(n, &outer);
        for orbit in &block_orbits {
            next.extend(generators.iter().map(|g| block_lift(g, orbit[0], n)));
        }
        next.extend(outer.iter().map(|f| top_lift(f, degree)));
        order = Pow::pow(order, n) * spec.order();
        degree *= n;
        generators = next;
    }
    Ok(TowerGenerators {
        generators,
        degree,
        expected_order: order,
    })
}
