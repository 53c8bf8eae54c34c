//! Breadth-first closure of a generating set under multiplication.

use rustc_hash::FxHashSet;
use thiserror::Error;

use super::{Encode, FiniteElement};

/// Default element budget for [`closure`].
pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("closure needs at least one generator")]
    NoGenerators,
    #[error("generators do not share a carrier")]
    IncompatibleCarriers,
    #[error("carrier has no fixed-width encoding")]
    NotEncodable,
    #[error("closure exceeded the budget of {budget} elements")]
    BudgetExceeded { budget: usize },
}

/// A finite set of elements of one carrier, stored by canonical key in
/// breadth-first discovery order.
#[derive(Debug, Clone)]
pub struct ElementSet<E: Encode> {
    template: E,
    keys: Vec<E::Key>,
    index: FxHashSet<E::Key>,
}

impl<E: Encode> ElementSet<E> {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn contains(&self, x: &E) -> bool {
        self.template.compatible(x) && self.index.contains(&x.key())
    }

    /// Elements in discovery order.
    pub fn iter(&self) -> impl Iterator<Item = E> + '_ {
        self.keys.iter().map(|k| self.template.decode(k))
    }

    pub fn to_vec(&self) -> Vec<E> {
        self.iter().collect()
    }

    /// Identity of the carrier.
    pub fn identity(&self) -> E {
        self.template.identity_like()
    }
}

/// Semigroup closure of `generators` with the default budget.
pub fn closure<E: Encode>(generators: &[E]) -> Result<ElementSet<E>, ClosureError> {
    closure_with_budget(generators, DEFAULT_BUDGET)
}

/// All products of one or more generators, discovered breadth-first by
/// left-multiplication. For a finite group this is the generated subgroup.
pub fn closure_with_budget<E: Encode>(
    generators: &[E],
    budget: usize,
) -> Result<ElementSet<E>, ClosureError> {
    let first = generators.first().ok_or(ClosureError::NoGenerators)?;
    if generators.iter().any(|g| !first.compatible(g)) {
        return Err(ClosureError::IncompatibleCarriers);
    }
    if !first.encodable() {
        return Err(ClosureError::NotEncodable);
    }
    let mut set = ElementSet {
        template: first.clone(),
        keys: Vec::new(),
        index: FxHashSet::default(),
    };
    let push = |set: &mut ElementSet<E>, key: E::Key| -> Result<(), ClosureError> {
        if set.index.insert(key.clone()) {
            if set.keys.len() == budget {
                return Err(ClosureError::BudgetExceeded { budget });
            }
            set.keys.push(key);
        }
        Ok(())
    };
    for g in generators {
        push(&mut set, g.key())?;
    }
    let mut head = 0;
    while head < set.keys.len() {
        let x = set.template.decode(&set.keys[head]);
        head += 1;
        for g in generators {
            push(&mut set, g.op(&x).key())?;
        }
    }
    Ok(set)
}

/// True iff some element's order equals the size of the set.
pub fn is_cyclic<E: Encode + FiniteElement>(elements: &ElementSet<E>) -> bool {
    let n = elements.len() as u128;
    elements.iter().any(|x| x.order() == n)
}
