//! The table of `d(G_1 wr G_2 wr G_3)` for small symmetric and alternating
//! factors, and the exhaustive check on tuple-only elements.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    commute, elementary_abelian_basis, rank_exact, rank_upper, square_quotient_bound, Certificate,
    RankError, RankResult, RankValue, TowerSpec,
};
use crate::groups::{FiniteGroup, GroupSpec, MAX_TABLE_ORDER};
use crate::wreath::tower_generators;

use GroupSpec::{Alternating as A, Symmetric as S};

/// Row labels `G_1 wr G_2`, in table order.
pub const TABLE1_ROWS: [(GroupSpec, GroupSpec); 16] = [
    (A(2), A(2)),
    (A(2), A(3)),
    (A(2), S(2)),
    (A(2), S(3)),
    (A(3), A(2)),
    (A(3), A(3)),
    (A(3), S(2)),
    (A(3), S(3)),
    (S(2), A(2)),
    (S(2), A(3)),
    (S(2), S(2)),
    (S(2), S(3)),
    (S(3), A(2)),
    (S(3), A(3)),
    (S(3), S(2)),
    (S(3), S(3)),
];

/// Column labels `G_3`.
pub const TABLE1_COLUMNS: [GroupSpec; 6] = [A(2), A(3), A(4), S(2), S(3), S(4)];

const TABLE_VALUES: [[usize; 6]; 16] = [
    [1, 1, 2, 1, 2, 2],
    [2, 2, 2, 2, 2, 2],
    [2, 2, 2, 2, 2, 2],
    [2, 2, 2, 2, 2, 2],
    [4, 3, 3, 3, 2, 2],
    [4, 3, 3, 3, 2, 2],
    [2, 2, 2, 2, 2, 2],
    [2, 2, 2, 2, 2, 2],
    [4, 3, 2, 3, 3, 3],
    [2, 2, 2, 2, 2, 2],
    [4, 3, 2, 3, 3, 3],
    [4, 3, 2, 3, 3, 3],
    [4, 3, 2, 3, 3, 3],
    [2, 2, 2, 2, 2, 2],
    [4, 3, 2, 3, 3, 3],
    [4, 3, 2, 3, 3, 3],
];

/// The reference value for a cell.
pub fn table_value(row: usize, col: usize) -> usize {
    TABLE_VALUES[row][col]
}

/// Largest tuple size tried by exact search in the table.
const MAX_K: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Computed {
    Exact { exact: usize },
    Bounds { lower: usize, upper: usize },
}

impl From<RankValue> for Computed {
    fn from(v: RankValue) -> Self {
        match v {
            RankValue::Exact(exact) => Computed::Exact { exact },
            RankValue::Bounds { lower, upper } => Computed::Bounds { lower, upper },
        }
    }
}

/// One cell of the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Cell {
    pub row: String,
    pub col: String,
    pub order: String,
    pub paper_value: usize,
    pub computed: Computed,
    pub certificate: Certificate,
    pub witness: Vec<String>,
    pub agrees: bool,
}

fn cell_seed(seed: u64, row: usize, col: usize) -> u64 {
    seed ^ (((row * TABLE1_COLUMNS.len() + col) as u64) << 40)
}

/// The rank of one cell.
///
/// Exact search runs when the order is at most `max_exact_order`; elementary
/// abelian groups are exact at any order. Everything else gets bounds: below
/// by non-cyclicity and, in the `A_2` column, by the quotient ranks of the
/// square; above by [`rank_upper`] started at the reference value.
pub fn table1_result(
    row: usize,
    col: usize,
    max_exact_order: usize,
    trials: usize,
    seed: u64,
) -> RankResult {
    let (g1, g2) = &TABLE1_ROWS[row];
    let g3 = &TABLE1_COLUMNS[col];
    let spec = TowerSpec::new(vec![g1.clone(), g2.clone(), g3.clone()]).expect("named factors");
    let tower = spec.generators();
    let gens = &tower.generators;
    let order = tower.expected_order.clone();

    if let Some((r, basis)) = elementary_abelian_basis(gens) {
        return RankResult {
            value: RankValue::Exact(r),
            witness: basis.into_iter().map(|i| gens[i].clone()).collect(),
            certificate: if r == 1 {
                Certificate::ExactCyclic
            } else {
                Certificate::ExactElementaryAbelian
            },
            group_order: order,
        };
    }
    if order
        .to_usize()
        .is_some_and(|n| n <= max_exact_order.min(MAX_TABLE_ORDER))
    {
        if let Ok(result) = rank_exact(gens, tower.degree, MAX_K, max_exact_order) {
            if result.certificate != Certificate::BoundsOnly {
                return result;
            }
        }
    }

    let mut lower = if commute(gens) { 1 } else { 2 };
    if let Some(q) = square_quotient_bound(spec.factors()) {
        lower = lower.max(q);
    }
    let expected = table_value(row, col);
    let mut found = None;
    for k in expected.min(gens.len())..=gens.len() {
        let w = rank_upper(
            gens,
            tower.degree,
            k,
            trials,
            cell_seed(seed, row, col),
            None,
        )
        .expect("tower generators share the degree");
        if let Some(w) = w {
            found = Some(w);
            break;
        }
    }
    let witness = found.unwrap_or_else(|| gens.clone());
    RankResult {
        value: RankValue::Bounds {
            lower,
            upper: witness.len(),
        },
        witness,
        certificate: Certificate::BoundsOnly,
        group_order: order,
    }
}

fn label(g: &GroupSpec) -> String {
    g.to_string()
}

/// The report entry for one cell.
pub fn table1_cell(
    row: usize,
    col: usize,
    max_exact_order: usize,
    trials: usize,
    seed: u64,
) -> Table1Cell {
    let result = table1_result(row, col, max_exact_order, trials, seed);
    let (g1, g2) = &TABLE1_ROWS[row];
    let expected = table_value(row, col);
    let agrees = match result.value {
        RankValue::Exact(d) => d == expected,
        bounds => bounds.contains(expected),
    };
    Table1Cell {
        row: format!("{}×{}", label(g1), label(g2)),
        col: label(&TABLE1_COLUMNS[col]),
        order: result.group_order.to_string(),
        paper_value: expected,
        computed: result.value.into(),
        certificate: result.certificate,
        witness: result.witness.iter().map(ToString::to_string).collect(),
        agrees,
    }
}

/// All 96 cells, row by row. Cells are computed in parallel; each has its own
/// seed derived from `seed`, so the output depends only on the arguments.
pub fn table1(max_exact_order: usize, trials: usize, seed: u64) -> Vec<Table1Cell> {
    let cells: Vec<(usize, usize)> = (0..TABLE1_ROWS.len())
        .flat_map(|r| (0..TABLE1_COLUMNS.len()).map(move |c| (r, c)))
        .collect();
    cells
        .into_par_iter()
        .map(|(r, c)| table1_cell(r, c, max_exact_order, trials, seed))
        .collect()
}

/// Whether no non-identity element `(a_1, ..., a_n; id)` of `G wr S` lies in a
/// generating pair, checked over every partner. `S` must not be cyclic.
pub fn check_filter_pair_claim(
    g: &GroupSpec,
    s: &GroupSpec,
    budget: usize,
) -> Result<bool, RankError> {
    let top = FiniteGroup::new(s.degree(), &s.generators(), budget)?;
    let top_order = top.order();
    if (0..top_order).any(|x| top.element_order(x) as usize == top_order) {
        return Err(RankError::CyclicTop {
            group: s.to_string(),
        });
    }
    let tower = tower_generators(&[g.clone(), s.clone()])?;
    let whole: BigUint = tower.expected_order.clone();
    if whole.to_usize().is_none_or(|n| n > budget) {
        return Err(RankError::BudgetExceeded {
            order: whole.to_string(),
            budget,
        });
    }
    let group = FiniteGroup::new(tower.degree, &tower.generators, budget)?;
    let m = g.degree();
    let blocks = s.degree();
    let tuple_only = |x: usize| {
        let f = group.element(x);
        (0..blocks).all(|b| f.apply0(b * m) / m == b)
    };
    for x in (1..group.order()).filter(|&x| tuple_only(x)) {
        if (0..group.order()).any(|y| group.generates(&[x, y])) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::wreath::WreathShape;

    #[test]
    fn table_values_shape() {
        assert_eq!(table_value(0, 0), 1);
        assert_eq!(table_value(15, 0), 4);
        assert_eq!(table_value(13, 0), 2);
        assert_eq!(table_value(4, 2), 3);
    }

    #[test]
    fn row_labels() {
        let cell = table1_cell(0, 2, 5000, 100, 0);
        assert_eq!(cell.row, "A:2×A:2");
        assert_eq!(cell.col, "A:4");
        assert_eq!(cell.computed, Computed::Exact { exact: 2 });
        assert!(cell.agrees);
    }

    #[test]
    fn square_cell_bounds() {
        let r = table1_result(15, 0, 5000, 2000, 0);
        assert_eq!(r.group_order, BigUint::from(1296u32 * 1296));
        assert_eq!(r.value, RankValue::Bounds { lower: 4, upper: 4 });
        assert_eq!(r.certificate, Certificate::BoundsOnly);
    }

    #[test]
    fn cell_json_round_trip() {
        let cell = table1_cell(4, 0, 5000, 100, 0);
        let text = serde_json::to_string(&cell).unwrap();
        assert!(text.contains("\"certificate\":\"Exact-ElementaryAbelian\""));
        assert!(text.contains("\"computed\":{\"exact\":4}"));
        let back: Table1Cell = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cell);
        let bounds = Computed::Bounds { lower: 2, upper: 3 };
        let text = serde_json::to_string(&bounds).unwrap();
        assert_eq!(text, "{\"lower\":2,\"upper\":3}");
        assert_eq!(serde_json::from_str::<Computed>(&text).unwrap(), bounds);
    }

    #[test]
    fn filter_pair_claim() {
        assert!(check_filter_pair_claim(&S(2), &S(3), 100_000).unwrap());
        assert!(matches!(
            check_filter_pair_claim(&S(2), &A(3), 100_000),
            Err(RankError::CyclicTop { .. })
        ));
        // Tuple-only elements are exactly the embedded (a; id) pairs.
        let shape = WreathShape::new(S(2), S(3));
        let x = shape
            .spike(
                &Permutation::cycle(2, &[1, 2]).unwrap(),
                1,
                Permutation::identity(3),
            )
            .unwrap();
        let f = x.embed();
        assert!((0..3).all(|b| f.apply0(b * 2) / 2 == b));
    }
}
