//! Exact simplex for covering LPs `min 1ᵀx  s.t.  Ax ≥ 1, x ≥ 0`, where
//! every column of `A` is the indicator vector of a vertex set.
//!
//! The tableau is kept over the covering rows with surplus variables
//! `t_v`, so the basis has one entry per vertex regardless of how many
//! columns exist. Starting from the all-surplus basis is dual feasible;
//! dual simplex pivots (which are primal pivots on the packing dual
//! `max 1ᵀy  s.t.  Aᵀy ≤ 1, y ≥ 0`) drive it to optimality. Columns added
//! later keep the basis primal feasible, and primal pivots restore
//! optimality. Both directions use Bland's smallest-index rule.
//!
//! Variable indices: `0..n` are the surplus variables, `n + j` is column `j`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::sets::VertexSet;

/// A covering LP: one row per vertex, one unit-cost column per set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringLP {
    pub num_rows: usize,
    pub columns: Vec<VertexSet>,
}

impl CoveringLP {
    pub fn new(num_rows: usize, columns: Vec<VertexSet>) -> Self {
        CoveringLP { num_rows, columns }
    }

    /// Rows not touched by any column; the LP is infeasible iff nonempty.
    pub fn uncovered_rows(&self) -> Vec<usize> {
        let mut hit = vec![false; self.num_rows];
        for c in &self.columns {
            for &v in &c.members {
                if v < self.num_rows {
                    hit[v] = true;
                }
            }
        }
        (0..self.num_rows).filter(|&v| !hit[v]).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
}

/// Pivot bookkeeping for one solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct PivotStats {
    pub pivots: usize,
    /// Largest numerator/denominator bit length seen in a pivot row.
    pub max_bits: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LPSolution {
    pub status: LpStatus,
    pub value: Rational,
    /// Column index to weight, positive entries only.
    pub primal: BTreeMap<usize, Rational>,
    /// One label per row.
    pub dual: Vec<Rational>,
    pub stats: PivotStats,
}

/// Dense rational tableau supporting incremental column addition.
#[derive(Debug, Clone)]
pub struct CoveringSimplex {
    n: usize,
    columns: Vec<VertexSet>,
    /// `rows[i][k]`: coefficient of variable `k` in tableau row `i`.
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    /// Reduced cost of every variable.
    reduced: Vec<Rational>,
    basis: Vec<usize>,
    stats: PivotStats,
}

impl CoveringSimplex {
    pub fn new(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut row = vec![Rational::zero(); n];
                row[i] = Rational::one();
                row
            })
            .collect();
        CoveringSimplex {
            n,
            columns: Vec::new(),
            rows,
            rhs: vec![-Rational::one(); n],
            reduced: vec![Rational::zero(); n],
            basis: (0..n).collect(),
            stats: PivotStats::default(),
        }
    }

    pub fn columns(&self) -> &[VertexSet] {
        &self.columns
    }

    pub fn stats(&self) -> PivotStats {
        self.stats
    }

    /// Current dual labels `y_v`, the reduced costs of the surplus variables.
    pub fn dual(&self) -> Vec<Rational> {
        self.reduced[..self.n].to_vec()
    }

    /// Appends a unit-cost column for `set`. Its tableau column is
    /// `B⁻¹a = -Σ_{v∈set} (surplus column v)` since the surplus block of
    /// the tableau holds `-B⁻¹`.
    pub fn add_column(&mut self, set: VertexSet) -> Result<()> {
        if let Some(&v) = set.members.iter().find(|&&v| v >= self.n) {
            return Err(Error::InvalidArgument(format!(
                "column member {v} out of range for {} rows",
                self.n
            )));
        }
        for row in &mut self.rows {
            let entry = set
                .members
                .iter()
                .fold(Rational::zero(), |acc, &v| acc - &row[v]);
            row.push(entry);
        }
        let price = rational::sum(set.members.iter().map(|&v| &self.reduced[v]));
        self.reduced.push(Rational::one() - price);
        self.columns.push(set);
        Ok(())
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.rows[r][j].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let support: Vec<usize> = (0..pivot_row.len())
            .filter(|&k| !pivot_row[k].is_zero())
            .collect();
        let bits = support
            .iter()
            .map(|&k| rational::bit_length(&pivot_row[k]))
            .chain(std::iter::once(rational::bit_length(&self.rhs[r])))
            .max()
            .unwrap_or(0);
        self.stats.max_bits = self.stats.max_bits.max(bits);
        let rhs_r = self.rhs[r].clone();

        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for &k in &support {
                row[k] -= &f * &pivot_row[k];
            }
            self.rhs[i] -= &f * &rhs_r;
        }
        if !self.reduced[j].is_zero() {
            let f = self.reduced[j].clone();
            for &k in &support {
                self.reduced[k] -= &f * &pivot_row[k];
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = j;
        self.stats.pivots += 1;
    }

    /// Dual simplex with Bland's rule. Returns `false` if the LP is infeasible.
    fn dual_phase(&mut self) -> bool {
        loop {
            let leaving = (0..self.n)
                .filter(|&i| self.rhs[i].is_negative())
                .min_by_key(|&i| self.basis[i]);
            let Some(r) = leaving else {
                return true;
            };
            let mut entering: Option<(usize, Rational)> = None;
            for (k, a) in self.rows[r].iter().enumerate() {
                if !a.is_negative() {
                    continue;
                }
                let ratio = &self.reduced[k] / -a;
                // Strict improvement keeps the smallest index on ties.
                if entering.as_ref().is_none_or(|(_, best)| ratio < *best) {
                    entering = Some((k, ratio));
                }
            }
            match entering {
                Some((j, _)) => self.pivot(r, j),
                None => return false,
            }
        }
    }

    /// Primal simplex with Bland's rule from a primal-feasible basis.
    fn primal_phase(&mut self) -> Result<()> {
        loop {
            let Some(j) = (0..self.reduced.len()).find(|&k| self.reduced[k].is_negative()) else {
                return Ok(());
            };
            match self.ratio_test(j) {
                Some(r) => self.pivot(r, j),
                None => {
                    return Err(Error::Internal(
                        "covering LP reported unbounded below zero".into(),
                    ))
                }
            }
        }
    }

    /// Re-optimizes after construction or after new columns were added.
    pub fn optimize(&mut self) -> Result<LpStatus> {
        if self.rhs.iter().any(Signed::is_negative) {
            if self.reduced.iter().any(Signed::is_negative) {
                return Err(Error::Internal(
                    "basis is neither primal nor dual feasible".into(),
                ));
            }
            if !self.dual_phase() {
                return Ok(LpStatus::Infeasible);
            }
        }
        self.primal_phase()?;
        Ok(LpStatus::Optimal)
    }

    /// Among optimal bases, moves to one minimizing `Σ cost[j] x_j` over the
    /// columns. Only variables with zero reduced cost may enter, so the
    /// objective value and the dual labels are unchanged. Call after
    /// [`CoveringSimplex::optimize`] returned [`LpStatus::Optimal`].
    pub fn minimize_secondary(&mut self, cost: &[Rational]) -> Result<()> {
        if cost.len() != self.columns.len() {
            return Err(Error::InvalidArgument(format!(
                "{} secondary costs for {} columns",
                cost.len(),
                self.columns.len()
            )));
        }
        let cost_of = |k: usize| -> Rational {
            if k < self.n {
                Rational::zero()
            } else {
                cost[k - self.n].clone()
            }
        };
        let mut secondary: Vec<Rational> = (0..self.reduced.len()).map(cost_of).collect();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost_of(b);
            if cb.is_zero() {
                continue;
            }
            for (k, a) in self.rows[i].iter().enumerate() {
                if !a.is_zero() {
                    secondary[k] -= &cb * a;
                }
            }
        }
        loop {
            let entering = (0..self.reduced.len())
                .find(|&k| self.reduced[k].is_zero() && secondary[k].is_negative());
            let Some(j) = entering else {
                return Ok(());
            };
            let r = self.ratio_test(j).ok_or_else(|| {
                Error::Internal("secondary objective unbounded on the optimal face".into())
            })?;
            let f = secondary[j].clone() / &self.rows[r][j];
            for (k, a) in self.rows[r].iter().enumerate() {
                if !a.is_zero() {
                    secondary[k] -= &f * a;
                }
            }
            self.pivot(r, j);
        }
    }

    /// Row leaving when `j` enters: minimum ratio, ties to the smallest
    /// basic variable index.
    fn ratio_test(&self, j: usize) -> Option<usize> {
        let mut leaving: Option<(usize, Rational)> = None;
        for i in 0..self.n {
            let a = &self.rows[i][j];
            if !a.is_positive() {
                continue;
            }
            let ratio = &self.rhs[i] / a;
            let better = match &leaving {
                None => true,
                Some((b, best)) => {
                    ratio < *best || (ratio == *best && self.basis[i] < self.basis[*b])
                }
            };
            if better {
                leaving = Some((i, ratio));
            }
        }
        leaving.map(|(i, _)| i)
    }

    /// Positive primal column weights at the current basis.
    pub fn primal(&self) -> BTreeMap<usize, Rational> {
        self.basis
            .iter()
            .zip(&self.rhs)
            .filter(|(&var, x)| var >= self.n && x.is_positive())
            .map(|(&var, x)| (var - self.n, x.clone()))
            .collect()
    }

    pub fn solution(&self, status: LpStatus) -> LPSolution {
        match status {
            LpStatus::Optimal => {
                let primal = self.primal();
                LPSolution {
                    status,
                    value: rational::sum(primal.values()),
                    primal,
                    dual: self.dual(),
                    stats: self.stats,
                }
            }
            LpStatus::Infeasible => LPSolution {
                status,
                value: Rational::zero(),
                primal: BTreeMap::new(),
                dual: Vec::new(),
                stats: self.stats,
            },
        }
    }
}

/// Solves `lp` exactly from scratch.
pub fn solve_covering(lp: &CoveringLP) -> Result<LPSolution> {
    let mut simplex = CoveringSimplex::new(lp.num_rows);
    for c in &lp.columns {
        simplex.add_column(c.clone())?;
    }
    let status = simplex.optimize()?;
    Ok(simplex.solution(status))
}

/// Recomputes primal feasibility, dual feasibility and weight equality from
/// the raw LP data, without trusting the solver's tableau.
pub fn check_duality(sol: &LPSolution, lp: &CoveringLP) -> bool {
    if sol.status != LpStatus::Optimal || sol.dual.len() != lp.num_rows {
        return false;
    }
    if sol
        .primal
        .iter()
        .any(|(&j, x)| j >= lp.columns.len() || x.is_negative())
    {
        return false;
    }
    if sol.dual.iter().any(Signed::is_negative) {
        return false;
    }
    let mut coverage = vec![Rational::zero(); lp.num_rows];
    for (&j, x) in &sol.primal {
        for &v in &lp.columns[j].members {
            coverage[v] += x;
        }
    }
    if coverage.iter().any(|c| *c < Rational::one()) {
        return false;
    }
    let packing_ok = lp
        .columns
        .iter()
        .all(|c| rational::sum(c.members.iter().map(|&v| &sol.dual[v])) <= Rational::one());
    let primal_weight = rational::sum(sol.primal.values());
    let dual_weight = rational::sum(&sol.dual);
    packing_ok && primal_weight == dual_weight && primal_weight == sol.value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn ind(m: &[usize]) -> VertexSet {
        VertexSet::independent(m.to_vec())
    }

    fn c5_lp() -> CoveringLP {
        CoveringLP::new(
            5,
            vec![
                ind(&[0, 2]),
                ind(&[0, 3]),
                ind(&[1, 3]),
                ind(&[1, 4]),
                ind(&[2, 4]),
            ],
        )
    }

    #[test]
    fn single_full_column() {
        let lp = CoveringLP::new(3, vec![ind(&[0, 1, 2])]);
        let sol = solve_covering(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.value, int(1));
        assert_eq!(sol.primal.get(&0), Some(&int(1)));
        assert!(check_duality(&sol, &lp));
    }

    #[test]
    fn singletons_only() {
        let lp = CoveringLP::new(4, (0..4).map(|v| ind(&[v])).collect());
        let sol = solve_covering(&lp).unwrap();
        assert_eq!(sol.value, int(4));
        assert!(check_duality(&sol, &lp));
    }

    /// Frozen from the brute-force basis oracle below: the unique optimum
    /// puts 1/2 on each 2-set and the dual is all-1/2.
    #[test]
    fn five_cycle_independent_sets() {
        let lp = c5_lp();
        assert_eq!(brute_force_optimum(&lp), Some(ratio(5, 2)));
        let sol = solve_covering(&lp).unwrap();
        assert_eq!(sol.value, ratio(5, 2));
        assert!(sol.primal.values().all(|x| *x == ratio(1, 2)));
        assert_eq!(sol.primal.len(), 5);
        assert_eq!(sol.dual, vec![ratio(1, 2); 5]);
        assert!(check_duality(&sol, &lp));
    }

    #[test]
    fn uncovered_row_is_infeasible() {
        let lp = CoveringLP::new(3, vec![ind(&[0, 1])]);
        assert_eq!(lp.uncovered_rows(), vec![2]);
        let sol = solve_covering(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Infeasible);
        assert!(!check_duality(&sol, &lp));
    }

    #[test]
    fn empty_lp() {
        let sol = solve_covering(&CoveringLP::new(0, vec![])).unwrap();
        assert_eq!(sol.value, int(0));
    }

    #[test]
    fn tampered_certificates_fail() {
        let lp = c5_lp();
        let sol = solve_covering(&lp).unwrap();

        let mut low = sol.clone();
        *low.primal.values_mut().next().unwrap() = ratio(1, 4);
        assert!(!check_duality(&low, &lp));

        let mut doubled = sol.clone();
        for y in &mut doubled.dual {
            *y *= int(2);
        }
        assert!(!check_duality(&doubled, &lp));
    }

    #[test]
    fn warm_start_matches_cold_solve() {
        let mut s = CoveringSimplex::new(5);
        for v in 0..5 {
            s.add_column(ind(&[v])).unwrap();
        }
        assert_eq!(s.optimize().unwrap(), LpStatus::Optimal);
        assert_eq!(s.solution(LpStatus::Optimal).value, int(5));
        for c in c5_lp().columns {
            s.add_column(c).unwrap();
        }
        s.optimize().unwrap();
        let sol = s.solution(LpStatus::Optimal);
        assert_eq!(sol.value, ratio(5, 2));
        let lp = CoveringLP::new(5, s.columns().to_vec());
        assert!(check_duality(&sol, &lp));
    }

    #[test]
    fn secondary_moves_weight_off_edges() {
        let mut lp = c5_lp();
        lp.columns
            .extend((0..5).map(|i| VertexSet::clique(vec![i, (i + 1) % 5])));
        let mut s = CoveringSimplex::new(5);
        for c in &lp.columns {
            s.add_column(c.clone()).unwrap();
        }
        s.optimize().unwrap();
        let cost: Vec<Rational> = (0..10).map(|j| int(i64::from(j >= 5))).collect();
        s.minimize_secondary(&cost).unwrap();
        let sol = s.solution(LpStatus::Optimal);
        assert_eq!(sol.value, ratio(5, 2));
        assert!(sol.primal.keys().all(|&j| j < 5));
        assert!(s.minimize_secondary(&cost[..3]).is_err());
    }

    // --- brute-force basis enumeration oracle -----------------------------

    /// Solves `M z = b` exactly by Gauss–Jordan elimination; `None` if singular.
    fn solve_square(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
        let n = b.len();
        for col in 0..n {
            let p = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, p);
            b.swap(col, p);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= &inv;
            }
            b[col] *= &inv;
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[col].clone();
                    for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                        *x -= &f * p;
                    }
                    let d = &f * &b[col];
                    b[r] -= d;
                }
            }
        }
        Some(b)
    }

    /// Minimum objective over every basic feasible solution of
    /// `[A | -I] z = 1, z ≥ 0`; `None` when no basis is feasible.
    fn brute_force_optimum(lp: &CoveringLP) -> Option<Rational> {
        brute_force_lex(lp, &vec![int(0); lp.columns.len()]).map(|(v, _)| v)
    }

    /// Lexicographic minimum of `(1ᵀx, costᵀx)` over basic feasible solutions.
    fn brute_force_lex(lp: &CoveringLP, cost: &[Rational]) -> Option<(Rational, Rational)> {
        let n = lp.num_rows;
        let m = lp.columns.len();
        let total = m + n;
        let column = |k: usize| -> Vec<Rational> {
            (0..n)
                .map(|v| {
                    if k < m {
                        if lp.columns[k].members.contains(&v) {
                            int(1)
                        } else {
                            int(0)
                        }
                    } else if k - m == v {
                        int(-1)
                    } else {
                        int(0)
                    }
                })
                .collect()
        };
        let mut best: Option<(Rational, Rational)> = None;
        for mask in 0u32..(1 << total) {
            if mask.count_ones() as usize != n {
                continue;
            }
            let chosen: Vec<usize> = (0..total).filter(|k| mask >> k & 1 == 1).collect();
            let cols: Vec<Vec<Rational>> = chosen.iter().map(|&k| column(k)).collect();
            let matrix: Vec<Vec<Rational>> = (0..n)
                .map(|r| cols.iter().map(|c| c[r].clone()).collect())
                .collect();
            let Some(z) = solve_square(matrix, vec![int(1); n]) else {
                continue;
            };
            if z.iter().any(|x| x.is_negative()) {
                continue;
            }
            let (obj, secondary) = chosen
                .iter()
                .zip(&z)
                .filter(|(&k, _)| k < m)
                .fold((int(0), int(0)), |(a, b), (&k, x)| {
                    (a + x, b + &cost[k] * x)
                });
            let candidate = (obj, secondary);
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
        best
    }

    fn arb_lp() -> impl Strategy<Value = CoveringLP> {
        (1usize..=4).prop_flat_map(|rows| {
            let col = proptest::collection::btree_set(0..rows, 1..=rows)
                .prop_map(|s| ind(&s.into_iter().collect::<Vec<_>>()));
            proptest::collection::vec(col, 1..=(10 - rows).min(6))
                .prop_map(move |cols| CoveringLP::new(rows, cols))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn matches_basis_enumeration(lp in arb_lp()) {
            let sol = solve_covering(&lp).unwrap();
            match brute_force_optimum(&lp) {
                None => prop_assert_eq!(sol.status, LpStatus::Infeasible),
                Some(best) => {
                    prop_assert_eq!(sol.status, LpStatus::Optimal);
                    prop_assert_eq!(&sol.value, &best);
                    prop_assert!(check_duality(&sol, &lp));
                }
            }
        }

        #[test]
        fn adding_a_column_never_increases_value(lp in arb_lp(), extra in proptest::collection::btree_set(0usize..4, 1..=4)) {
            let before = solve_covering(&lp).unwrap();
            let extra: Vec<usize> = extra.into_iter().filter(|&v| v < lp.num_rows).collect();
            prop_assume!(!extra.is_empty());
            let mut bigger = lp.clone();
            bigger.columns.push(ind(&extra));
            let after = solve_covering(&bigger).unwrap();
            if before.status == LpStatus::Optimal {
                prop_assert!(after.value <= before.value);
            }
        }

        #[test]
        fn secondary_matches_lexicographic_enumeration(
            lp in arb_lp(),
            raw in proptest::collection::vec(0i64..3, 6),
        ) {
            let cost: Vec<Rational> = (0..lp.columns.len()).map(|j| int(raw[j % raw.len()])).collect();
            let mut s = CoveringSimplex::new(lp.num_rows);
            for c in &lp.columns {
                s.add_column(c.clone()).unwrap();
            }
            prop_assume!(s.optimize().unwrap() == LpStatus::Optimal);
            let dual_before = s.dual();
            s.minimize_secondary(&cost).unwrap();
            let sol = s.solution(LpStatus::Optimal);
            let secondary = sol.primal.iter().fold(int(0), |acc, (&j, x)| acc + &cost[j] * x);
            let (best, best_secondary) = brute_force_lex(&lp, &cost).unwrap();
            prop_assert_eq!(&sol.value, &best);
            prop_assert_eq!(secondary, best_secondary);
            prop_assert_eq!(&sol.dual, &dual_before);
            prop_assert!(check_duality(&sol, &lp));
        }

        #[test]
        fn deterministic(lp in arb_lp()) {
            prop_assert_eq!(solve_covering(&lp).unwrap(), solve_covering(&lp).unwrap());
        }
    }
}
