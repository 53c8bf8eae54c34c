//! Deterministic Schreier-Sims.
//!
//! Base points are chosen greedily as the least point moved by a strong
//! generator that fixes the current base. Transversals store explicit coset
//! representatives and their inverses.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    /// Indices into the strong generators fixing every earlier base point.
    gens: Vec<usize>,
    orbit: Vec<usize>,
    /// `reps[p] = (u, u^-1)` with `point^u = p`, for `p` in the orbit.
    reps: Vec<Option<(Permutation, Permutation)>>,
}

/// A base and strong generating set for a permutation group.
#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

/// Serialized form: 1-based base points and strong generators in cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BsgsJson {
    pub degree: usize,
    pub base: Vec<usize>,
    pub strong_generators: Vec<String>,
}

impl Bsgs {
    /// Runs Schreier-Sims on `generators`, all of the given degree. An empty
    /// generator list gives the trivial group.
    pub fn new(degree: usize, generators: &[Permutation]) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        for g in generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut bsgs = Bsgs {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for g in generators {
            if !g.is_identity() && !bsgs.strong.contains(g) {
                bsgs.strong.push(g.clone());
            }
        }
        for s in 0..bsgs.strong.len() {
            if bsgs
                .levels
                .iter()
                .all(|l| bsgs.strong[s].apply0(l.point) == l.point)
            {
                let p = bsgs.strong[s].first_moved().expect("non-identity") - 1;
                bsgs.push_level(p);
            }
        }
        for i in 0..bsgs.levels.len() {
            bsgs.levels[i].gens = (0..bsgs.strong.len())
                .filter(|&s| bsgs.fixes_prefix(&bsgs.strong[s], i))
                .collect();
            bsgs.rebuild_orbit(i);
        }
        bsgs.complete();
        Ok(bsgs)
    }

    fn push_level(&mut self, point: usize) {
        self.levels.push(Level {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            reps: Vec::new(),
        });
    }

    fn fixes_prefix(&self, g: &Permutation, len: usize) -> bool {
        self.levels[..len]
            .iter()
            .all(|l| g.apply0(l.point) == l.point)
    }

    fn rebuild_orbit(&mut self, i: usize) {
        let n = self.degree;
        let level = &mut self.levels[i];
        let mut reps: Vec<Option<(Permutation, Permutation)>> = vec![None; n];
        let id = Permutation::identity(n);
        reps[level.point] = Some((id.clone(), id));
        let mut orbit = vec![level.point];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for &s in &level.gens {
                let g = &self.strong[s];
                let q = g.apply0(p);
                if reps[q].is_none() {
                    let u = reps[p].as_ref().unwrap().0.compose_unchecked(g);
                    let u_inv = u.inverse();
                    reps[q] = Some((u, u_inv));
                    orbit.push(q);
                }
            }
        }
        level.orbit = orbit;
        level.reps = reps;
    }

    /// Sifts `g` through levels `from..`. Returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply0(level.point);
            match &level.reps[b] {
                Some((_, u_inv)) => g = g.compose_unchecked(u_inv),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            for &b in &orbit {
                for &s in &gens {
                    let (u_b, _) = self.levels[lvl].reps[b].as_ref().unwrap();
                    let g = &self.strong[s];
                    let c = g.apply0(b);
                    let (_, u_c_inv) = self.levels[lvl].reps[c].as_ref().unwrap();
                    let schreier = u_b.compose_unchecked(g).compose_unchecked(u_c_inv);
                    let (h, j) = self.strip(schreier, lvl + 1);
                    if h.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let p = h.first_moved().expect("non-identity") - 1;
                        self.push_level(p);
                    }
                    self.strong.push(h);
                    let idx = self.strong.len() - 1;
                    for l in lvl + 1..=j {
                        self.levels[l].gens.push(idx);
                        self.rebuild_orbit(l);
                    }
                    i = j as isize;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point + 1).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// Basic orbit lengths, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Group order: the product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * l.orbit.len())
    }

    pub fn contains(&self, f: &Permutation) -> bool {
        f.degree() == self.degree && {
            let (h, j) = self.strip(f.clone(), 0);
            j == self.levels.len() && h.is_identity()
        }
    }

    pub fn to_json(&self) -> BsgsJson {
        BsgsJson {
            degree: self.degree,
            base: self.base(),
            strong_generators: self.strong.iter().map(ToString::to_string).collect(),
        }
    }

    /// Rebuilds a BSGS from its serialized strong generators.
    pub fn from_json(json: &BsgsJson) -> Result<Self, PermError> {
        let gens = json
            .strong_generators
            .iter()
            .map(|s| Permutation::parse_cycles(s, json.degree))
            .collect::<Result<Vec<_>, _>>()?;
        Bsgs::new(json.degree, &gens)
    }
}

/// Order of the group generated by `generators` (all of degree `degree`).
pub fn bsgs_order(degree: usize, generators: &[Permutation]) -> Result<BigUint, PermError> {
    Ok(Bsgs::new(degree, generators)?.order())
}
