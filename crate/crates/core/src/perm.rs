//! Permutations of `{1, ..., n}`.
//!
//! Permutations act on the right of their arguments and compose from left to
//! right: `i (fg) = (i f) g`. Every permutation carries its degree explicitly;
//! permutations of different degrees never compare equal and never compose.
//!
//! Points are 1-based in the public API and in cycle notation. The image table
//! is stored 0-based.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use thiserror::Error;

/// Largest supported degree.
pub const MAX_DEGREE: usize = u16::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("degree {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image table is not a bijection on 1..={degree}")]
    NotBijective { degree: usize },
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at byte {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input text.
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    PointOutOfRange { point: usize, degree: usize },
    RepeatedPoint(usize),
    EmptyCycle,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            Self::UnexpectedEnd => f.write_str("unexpected end of input"),
            Self::PointOutOfRange { point, degree } => {
                write!(f, "point {point} is outside 1..={degree}")
            }
            Self::RepeatedPoint(p) => write!(f, "point {p} appears more than once"),
            Self::EmptyCycle => f.write_str("empty cycle inside a product"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// `+1` for even, `-1` for odd.
    pub fn sign(self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A bijection on `{1, ..., degree}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be at least 1");
        assert!(degree <= MAX_DEGREE, "permutation degree too large");
        Self {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its 1-based image list: `images[i-1]` is the
    /// image of point `i`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let degree = images.len();
        check_degree(degree)?;
        let mut seen = vec![false; degree];
        let mut table = Vec::with_capacity(degree);
        for &p in images {
            if p == 0 || p > degree || seen[p - 1] {
                return Err(PermError::NotBijective { degree });
            }
            seen[p - 1] = true;
            table.push((p - 1) as u16);
        }
        Ok(Self {
            images: table.into_boxed_slice(),
        })
    }

    /// Builds a permutation from 0-based images. The caller guarantees bijectivity.
    pub(crate) fn from_raw(images: Vec<u16>) -> Self {
        debug_assert!(is_bijection(&images));
        Self {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds the product of the given cycles, each a list of 1-based points.
    /// Cycles need not be disjoint; they are multiplied left to right.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self, PermError> {
        check_degree(degree)?;
        let mut result = Self::identity(degree);
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
            }
            let mut c = Self::identity(degree);
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                c.images[p - 1] = (q - 1) as u16;
            }
            if !is_bijection(&c.images) {
                return Err(PermError::NotBijective { degree });
            }
            result = result.compose_unchecked(&c);
        }
        Ok(result)
    }

    /// The `k`-cycle `(p1, ..., pk)` in the given degree.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Self, PermError> {
        Self::from_cycles(degree, &[points])
    }

    /// Parses disjoint-cycle notation such as `(1,2)(3,4,5)`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        check_degree(degree)?;
        Ok(parse(text, degree)?)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `point`.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&p| p as usize + 1).collect()
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub(crate) fn apply0(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &p)| i == p as usize)
    }

    /// `i -> (i self) other`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u16;
        }
        Self::from_raw(inv)
    }

    /// `g^-1 self g`.
    pub fn conjugate(&self, g: &Self) -> Result<Self, PermError> {
        Ok(g.inverse().compose(self)?.compose_unchecked(g))
    }

    /// Nontrivial cycles as 0-based points, each led by its least point, sorted by
    /// leading point.
    pub(crate) fn cycles0(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply0(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply0(p);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Nontrivial cycles in canonical form, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles0()
            .into_iter()
            .map(|c| c.into_iter().map(|p| p + 1).collect())
            .collect()
    }

    /// Multiset of cycle lengths including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles0().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Least `k >= 1` with `self^k = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        self.cycles0()
            .iter()
            .fold(1u128, |acc, c| acc.lcm(&(c.len() as u128)))
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles0().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// 1-based points fixed by the permutation, ascending.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&i| self.apply0(i) == i)
            .map(|i| i + 1)
            .collect()
    }

    /// First point (1-based) moved by the permutation.
    pub fn first_moved(&self) -> Option<usize> {
        (0..self.degree())
            .find(|&i| self.apply0(i) != i)
            .map(|i| i + 1)
    }

    pub fn pow(&self, exponent: u128) -> Self {
        let mut images = vec![0u16; self.degree()];
        for (i, img) in images.iter_mut().enumerate() {
            *img = i as u16;
        }
        for cycle in self.cycles0() {
            let len = cycle.len();
            let shift = (exponent % len as u128) as usize;
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + shift) % len] as u16;
            }
        }
        Self::from_raw(images)
    }

    /// The same permutation regarded as an element of a larger symmetric group,
    /// fixing the new points.
    pub fn extend(&self, degree: usize) -> Result<Self, PermError> {
        if degree < self.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: degree,
            });
        }
        check_degree(degree)?;
        let mut images = self.images.to_vec();
        images.extend(self.degree() as u16..degree as u16);
        Ok(Self::from_raw(images))
    }

    /// Position of the permutation in the lexicographic order of `S_degree`
    /// (Lehmer code). `None` when `degree! > u64::MAX`.
    pub fn lehmer_rank(&self) -> Option<u64> {
        let n = self.degree();
        if n > 20 {
            return None;
        }
        let mut rank = 0u64;
        let mut used = 0u32;
        for i in 0..n {
            let p = self.images[i] as u32;
            let smaller_unused = p - (used & ((1u32 << p) - 1)).count_ones();
            rank = rank * (n - i) as u64 + smaller_unused as u64;
            used |= 1 << p;
        }
        Some(rank)
    }

    /// Inverse of [`Permutation::lehmer_rank`].
    pub fn from_lehmer_rank(degree: usize, mut rank: u64) -> Self {
        assert!((1..=20).contains(&degree));
        let mut digits = vec![0usize; degree];
        for i in (0..degree).rev() {
            let base = (degree - i) as u64;
            digits[i] = (rank % base) as usize;
            rank /= base;
        }
        let mut free: Vec<u16> = (0..degree as u16).collect();
        let images = digits.into_iter().map(|d| free.remove(d)).collect();
        Self::from_raw(images)
    }
}

fn check_degree(degree: usize) -> Result<(), PermError> {
    if degree == 0 {
        Err(PermError::ZeroDegree)
    } else if degree > MAX_DEGREE {
        Err(PermError::DegreeTooLarge(degree))
    } else {
        Ok(())
    }
}

fn is_bijection(images: &[u16]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&p| {
        let p = p as usize;
        p < seen.len() && !std::mem::replace(&mut seen[p], true)
    })
}

fn parse(text: &str, degree: usize) -> Result<Permutation, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut images: Vec<u16> = (0..degree as u16).collect();
    let mut used = vec![false; degree];
    let mut cycles = 0usize;

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let err = |kind, position| ParseError { kind, position };
    let unexpected = |pos: usize| match text[pos..].chars().next() {
        Some(c) => err(ParseErrorKind::UnexpectedChar(c), pos),
        None => err(ParseErrorKind::UnexpectedEnd, pos),
    };

    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(unexpected(pos));
        }
        let open = pos;
        pos += 1;
        skip_ws(&mut pos);
        cycles += 1;
        if pos < bytes.len() && bytes[pos] == b')' {
            // "()" is the identity, but only on its own.
            pos += 1;
            skip_ws(&mut pos);
            if pos != bytes.len() || cycles > 1 {
                return Err(err(ParseErrorKind::EmptyCycle, open));
            }
            break;
        }
        let mut points = Vec::new();
        loop {
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(unexpected(pos));
            }
            let point: usize = text[start..pos].parse().unwrap_or(usize::MAX);
            if point == 0 || point > degree {
                return Err(err(
                    ParseErrorKind::PointOutOfRange { point, degree },
                    start,
                ));
            }
            if used[point - 1] {
                return Err(err(ParseErrorKind::RepeatedPoint(point), start));
            }
            used[point - 1] = true;
            points.push(point - 1);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(unexpected(pos)),
            }
        }
        for (k, &p) in points.iter().enumerate() {
            images[p] = points[(k + 1) % points.len()] as u16;
        }
    }
    Ok(Permutation::from_raw(images))
}

/// Canonical disjoint-cycle form: cycles led by their least point, sorted by
/// leading point, fixed points omitted, identity as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles0();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] to get an error instead.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutation degrees differ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("(1,2,3,4)", 5).images(), vec![2, 3, 4, 1, 5]);
        assert_eq!(p("", 3).images(), vec![1, 2, 3]);
        assert_eq!(p("()", 3), Permutation::identity(3));
        assert_eq!(p("(2,4,5,6,7)", 7).images(), vec![1, 4, 3, 5, 6, 7, 2]);
        assert_eq!(p(" ( 1 , 2 ) (3,4, 5) ", 5), p("(1,2)(3,4,5)", 5));
        assert_eq!(p("(2)", 3), Permutation::identity(3));
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = |t: &str, n| match Permutation::parse_cycles(t, n) {
            Err(PermError::Parse(e)) => e,
            other => panic!("expected parse error, got {other:?}"),
        };
        let out = e("(1,6)", 5);
        assert_eq!(out.position, 3);
        assert!(matches!(
            out.kind,
            ParseErrorKind::PointOutOfRange { point: 6, .. }
        ));
        assert_eq!(e("(1,2)(2,3)", 4).kind, ParseErrorKind::RepeatedPoint(2));
        assert_eq!(e("(1,2)(2,3)", 4).position, 6);
        assert_eq!(e("(1,1)", 4).kind, ParseErrorKind::RepeatedPoint(1));
        assert_eq!(e("(1,2", 4).kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(e("1,2)", 4).kind, ParseErrorKind::UnexpectedChar('1'));
        assert_eq!(e("(1;2)", 4).position, 2);
        assert_eq!(e("(1,2)()", 4).kind, ParseErrorKind::EmptyCycle);
        assert_eq!(
            e("(0)", 4).kind,
            ParseErrorKind::PointOutOfRange {
                point: 0,
                degree: 4
            }
        );
        assert_eq!(Permutation::parse_cycles("", 0), Err(PermError::ZeroDegree));
    }

    #[test]
    fn compose_example() {
        let f = p("(1,2,3,4)", 5);
        let g = p("(1,2)(3,4,5)", 5);
        let fg = f.compose(&g).unwrap();
        assert_eq!(fg.images(), vec![1, 4, 5, 2, 3]);
        assert_eq!(fg.to_string(), "(2,4)(3,5)");
        let t = p("(1,2)", 5);
        assert!(t.compose(&t).unwrap().is_identity());
        assert_eq!(Permutation::identity(5).compose(&g).unwrap(), g);
        assert_eq!(
            f.compose(&Permutation::identity(4)),
            Err(PermError::DegreeMismatch { left: 5, right: 4 })
        );
    }

    #[test]
    fn inverse_order_parity() {
        assert_eq!(p("(1,2,3)", 3).inverse(), p("(1,3,2)", 3));
        assert_eq!(p("(1,2)(3,4,5)", 5).inverse(), p("(1,2)(3,5,4)", 5));
        assert!(Permutation::identity(4).inverse().is_identity());

        assert_eq!(p("(1,2,3)", 3).order(), 3);
        assert_eq!(Permutation::identity(3).order(), 1);
        let x = p("(1,2)(3,4,5)", 5);
        assert_eq!(x.order(), 6);
        // Cross-check against repeated composition.
        let mut acc = x.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = &acc * &x;
            k += 1;
        }
        assert_eq!(k, 6);

        assert_eq!(p("(1,2,3)", 3).parity(), Parity::Even);
        assert_eq!(Permutation::identity(6).parity(), Parity::Even);
        for n in [4usize, 6, 8] {
            let pts: Vec<usize> = (3..=n).collect();
            assert_eq!(Permutation::cycle(n, &pts).unwrap().parity(), Parity::Odd);
        }
    }

    #[test]
    fn conjugates_from_the_lemmas() {
        let n = 7;
        let f = p("(1,2)(3,4)", n);
        let g = Permutation::cycle(n, &[2, 3, 4, 5, 6, 7]).unwrap();
        assert_eq!(f.conjugate(&g).unwrap(), p("(1,3)(4,5)", n));
        let g = Permutation::cycle(n, &[2, 4, 5, 6, 7]).unwrap();
        assert_eq!(f.conjugate(&g).unwrap(), p("(1,4)(3,5)", n));
        assert_eq!(f.conjugate(&Permutation::identity(n)).unwrap(), f);
    }

    #[test]
    fn fixed_points_examples() {
        assert_eq!(p("(1,2)", 4).fixed_points(), vec![3, 4]);
        for n in 3..10 {
            let pts: Vec<usize> = (2..=n).collect();
            assert_eq!(Permutation::cycle(n, &pts).unwrap().fixed_points(), vec![1]);
        }
        assert_eq!(Permutation::identity(4).fixed_points(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let x = p("(1,2,3,4)(5,6)", 7);
        let mut acc = Permutation::identity(7);
        for k in 0..13u128 {
            assert_eq!(x.pow(k), acc);
            acc = &acc * &x;
        }
    }

    #[test]
    fn extend_fixes_new_points() {
        let x = p("(1,2,3)", 3).extend(5).unwrap();
        assert_eq!(x, p("(1,2,3)", 5));
        assert_ne!(p("(1,2,3)", 3), x);
        assert!(p("(1,2)", 3).extend(2).is_err());
    }

    #[test]
    fn lehmer_round_trip_small() {
        for n in 1..=5usize {
            let total: u64 = (1..=n as u64).product();
            let mut seen = std::collections::HashSet::new();
            for r in 0..total {
                let x = Permutation::from_lehmer_rank(n, r);
                assert_eq!(x.lehmer_rank(), Some(r));
                seen.insert(x);
            }
            assert_eq!(seen.len() as u64, total);
        }
        assert_eq!(Permutation::identity(21).lehmer_rank(), None);
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[]).is_err());
        assert_eq!(
            Permutation::from_images(&[2, 1]).unwrap().to_string(),
            "(1,2)"
        );
    }
}
