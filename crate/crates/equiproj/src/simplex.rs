//! Exact feasibility testing for systems of linear equalities and inequalities
//! over the rationals.
//!
//! This is a dense phase-1 simplex with Bland's anti-cycling rule, so it
//! terminates on every input and never needs a tolerance. Free variables are
//! handled with the shared-offset substitution `x_i = u_i - w` (`u_i, w ≥ 0`),
//! which keeps the tableau at `n + 1` structural columns instead of `2n`.
//! All the geometry in this crate reduces to calls of [`find_feasible`]; the
//! systems are small (tens of cells), so the dense tableau is the right tool.

use crate::linalg::Rat;
use num_traits::{One, Signed, Zero};

/// Relation of a single constraint `⟨coeffs, x⟩ rel rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Eq,
}

/// One linear constraint over `num_vars` free variables.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rel: Rel,
    pub rhs: Rat,
}

impl Constraint {
    pub fn le(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Constraint { coeffs, rel: Rel::Le, rhs }
    }

    pub fn eq(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Constraint { coeffs, rel: Rel::Eq, rhs }
    }
}

/// Returns a point satisfying all constraints, or `None` if the system is
/// infeasible. The answer is exact in both directions.
pub fn find_feasible(num_vars: usize, constraints: &[Constraint]) -> Option<Vec<Rat>> {
    Tableau::build(num_vars, constraints).solve()
}

/// Convenience wrapper: feasibility without the witness.
pub fn is_feasible(num_vars: usize, constraints: &[Constraint]) -> bool {
    find_feasible(num_vars, constraints).is_some()
}

struct Tableau {
    num_vars: usize,
    cols: usize, // total columns excluding the rhs
    first_artificial: usize,
    rows: Vec<Vec<Rat>>, // each row: cols coefficients followed by the rhs
    basis: Vec<usize>,   // basic column of each row
    objective: Vec<Rat>, // phase-1 objective row (same layout as rows)
}

impl Tableau {
    /// Standard-form construction. Rows are normalized to a non-negative rhs;
    /// `≤`-rows keep a basic slack where possible, everything else gets an
    /// artificial variable.
    fn build(num_vars: usize, constraints: &[Constraint]) -> Tableau {
        let m = constraints.len();
        let structural = num_vars + 1; // u_0 … u_{n-1}, shared offset w
        // classify rows after rhs normalization: Le stays Le, flipped Le becomes Ge
        let mut needs_surplus = 0usize;
        let mut needs_artificial = 0usize;
        let mut num_slack = 0usize;
        for c in constraints {
            match (c.rel, c.rhs.is_negative()) {
                (Rel::Le, false) => num_slack += 1,
                (Rel::Le, true) => {
                    needs_surplus += 1;
                    needs_artificial += 1;
                }
                (Rel::Eq, _) => needs_artificial += 1,
            }
        }
        let cols = structural + num_slack + needs_surplus + needs_artificial;
        let first_artificial = structural + num_slack + needs_surplus;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_slack = structural;
        let mut next_surplus = structural + num_slack;
        let mut next_artificial = first_artificial;
        for c in constraints {
            assert_eq!(c.coeffs.len(), num_vars, "constraint arity mismatch");
            let flip = c.rhs.is_negative();
            let mut row = vec![Rat::zero(); cols + 1];
            let mut coeff_sum = Rat::zero();
            for (i, a) in c.coeffs.iter().enumerate() {
                let v = if flip { -a.clone() } else { a.clone() };
                coeff_sum += &v;
                row[i] = v;
            }
            // the shared offset w contributes -Σ coeffs
            row[num_vars] = -coeff_sum;
            row[cols] = if flip { -c.rhs.clone() } else { c.rhs.clone() };
            match (c.rel, flip) {
                (Rel::Le, false) => {
                    row[next_slack] = Rat::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                (Rel::Le, true) => {
                    row[next_surplus] = -Rat::one();
                    next_surplus += 1;
                    row[next_artificial] = Rat::one();
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
                (Rel::Eq, _) => {
                    row[next_artificial] = Rat::one();
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
            }
            rows.push(row);
        }
        // phase-1 objective: minimize the sum of artificials, priced out over
        // the rows where an artificial is basic
        let mut objective = vec![Rat::zero(); cols + 1];
        for (r, row) in rows.iter().enumerate() {
            if basis[r] >= first_artificial {
                for (j, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        objective[j] += v;
                    }
                }
            }
        }
        Tableau { num_vars, cols, first_artificial, rows, basis, objective }
    }

    fn pivot(&mut self, enter: usize, leave_row: usize) {
        let inv = self.rows[leave_row][enter].clone();
        for v in self.rows[leave_row].iter_mut() {
            if !v.is_zero() {
                *v = &*v / &inv;
            }
        }
        let pivot_row = self.rows[leave_row].clone();
        for (r, row) in self.rows.iter_mut().enumerate() {
            if r == leave_row || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (j, v) in row.iter_mut().enumerate() {
                if !pivot_row[j].is_zero() {
                    *v = &*v - &f * &pivot_row[j];
                }
            }
        }
        if !self.objective[enter].is_zero() {
            let f = self.objective[enter].clone();
            for (j, v) in self.objective.iter_mut().enumerate() {
                if !pivot_row[j].is_zero() {
                    *v = &*v - &f * &pivot_row[j];
                }
            }
        }
        self.basis[leave_row] = enter;
    }

    fn solve(mut self) -> Option<Vec<Rat>> {
        loop {
            // Bland: entering column = smallest non-artificial index that
            // still reduces the artificial sum.
            let enter = (0..self.first_artificial).find(|&j| self.objective[j].is_positive());
            let Some(enter) = enter else { break };
            // ratio test; Bland tie-break on the smallest basic column index
            let mut best: Option<(Rat, usize, usize)> = None; // (ratio, basis column, row)
            for r in 0..self.rows.len() {
                let a = &self.rows[r][enter];
                if a.is_positive() {
                    let ratio = &self.rows[r][self.cols] / a;
                    let key = (ratio, self.basis[r], r);
                    if best.as_ref().map_or(true, |b| (key.0.clone(), key.1) < (b.0.clone(), b.1)) {
                        best = Some(key);
                    }
                }
            }
            let (_, _, leave_row) = best.expect("phase-1 objective is bounded below by zero");
            self.pivot(enter, leave_row);
        }
        if !self.objective[self.cols].is_zero() {
            return None; // artificial sum cannot reach zero: infeasible
        }
        // read off u and w, then undo the shared-offset substitution
        let mut values = vec![Rat::zero(); self.cols];
        for (r, &b) in self.basis.iter().enumerate() {
            values[b] = self.rows[r][self.cols].clone();
        }
        let w = values[self.num_vars].clone();
        Some((0..self.num_vars).map(|i| &values[i] - &w).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{dot, rat, ratio};
    use proptest::prelude::*;

    fn check_witness(num_vars: usize, cons: &[Constraint]) -> Option<Vec<Rat>> {
        let x = find_feasible(num_vars, cons)?;
        assert_eq!(x.len(), num_vars);
        for c in cons {
            let lhs = dot(&c.coeffs, &x);
            match c.rel {
                Rel::Le => assert!(lhs <= c.rhs, "witness violates {:?}", c),
                Rel::Eq => assert_eq!(lhs, c.rhs, "witness violates {:?}", c),
            }
        }
        Some(x)
    }

    #[test]
    fn interval_is_feasible() {
        let cons = vec![
            Constraint::le(vec![rat(-1)], rat(-1)), // x ≥ 1
            Constraint::le(vec![rat(1)], rat(2)),   // x ≤ 2
        ];
        let x = check_witness(1, &cons).unwrap();
        assert!(x[0] >= rat(1) && x[0] <= rat(2));
    }

    #[test]
    fn contradiction_is_infeasible() {
        let cons = vec![
            Constraint::le(vec![rat(1)], rat(-1)),  // x ≤ -1
            Constraint::le(vec![rat(-1)], rat(-1)), // x ≥ 1
        ];
        assert!(find_feasible(1, &cons).is_none());
    }

    #[test]
    fn equalities_solve_exactly() {
        let cons = vec![
            Constraint::eq(vec![rat(1), rat(1)], rat(1)),
            Constraint::eq(vec![rat(1), rat(-1)], rat(0)),
        ];
        let x = check_witness(2, &cons).unwrap();
        assert_eq!(x[0], ratio(1, 2));
        assert_eq!(x[1], ratio(1, 2));
    }

    #[test]
    fn inconsistent_equalities() {
        let cons = vec![
            Constraint::eq(vec![rat(1), rat(1)], rat(1)),
            Constraint::eq(vec![rat(2), rat(2)], rat(3)),
        ];
        assert!(find_feasible(2, &cons).is_none());
    }

    #[test]
    fn homogeneous_degenerate_system() {
        let cons = vec![
            Constraint::le(vec![rat(1), rat(0)], rat(0)),
            Constraint::le(vec![rat(-1), rat(0)], rat(0)),
            Constraint::eq(vec![rat(0), rat(1)], rat(0)),
        ];
        let x = check_witness(2, &cons).unwrap();
        assert_eq!(x, vec![rat(0), rat(0)]);
    }

    #[test]
    fn unbounded_direction_still_feasible() {
        let cons = vec![Constraint::le(vec![rat(-1), rat(0)], rat(-5))]; // x ≥ 5
        let x = check_witness(2, &cons).unwrap();
        assert!(x[0] >= rat(5));
    }

    #[test]
    fn zero_variables() {
        assert!(is_feasible(0, &[Constraint::eq(vec![], rat(0))]));
        assert!(!is_feasible(0, &[Constraint::eq(vec![], rat(1))]));
        assert!(!is_feasible(0, &[Constraint::le(vec![], rat(-1))]));
        assert!(is_feasible(0, &[]));
    }

    #[test]
    fn fractional_coefficients() {
        let cons = vec![
            Constraint::le(vec![ratio(1, 3), ratio(-2, 7)], ratio(-5, 21)),
            Constraint::eq(vec![ratio(1, 2), ratio(1, 2)], ratio(3, 2)),
        ];
        check_witness(2, &cons).unwrap();
    }

    proptest! {
        /// Systems built to be satisfied by a planted point must come back feasible,
        /// and the returned witness must satisfy every constraint exactly.
        #[test]
        fn planted_point_systems_are_feasible(
            point in proptest::collection::vec(-6i64..=6, 1..5),
            rows in proptest::collection::vec(
                (proptest::collection::vec(-4i64..=4, 5), 0i64..=5, prop::bool::ANY),
                0..8,
            ),
        ) {
            let n = point.len();
            let x_star: Vec<Rat> = point.iter().map(|&v| rat(v)).collect();
            let mut cons = Vec::new();
            for (coeffs, slack, make_eq) in rows {
                let a: Vec<Rat> = coeffs[..n].iter().map(|&v| rat(v)).collect();
                let val = dot(&a, &x_star);
                if make_eq {
                    cons.push(Constraint::eq(a, val));
                } else {
                    cons.push(Constraint::le(a, val + rat(slack)));
                }
            }
            prop_assert!(check_witness(n, &cons).is_some());
        }

        /// Adding an explicit contradiction makes any system infeasible.
        #[test]
        fn contradictions_are_detected(
            rows in proptest::collection::vec(
                (proptest::collection::vec(-4i64..=4, 3), -4i64..=4),
                0..6,
            ),
        ) {
            let mut cons: Vec<Constraint> = rows
                .into_iter()
                .map(|(coeffs, rhs)| Constraint::le(coeffs.into_iter().map(rat).collect(), rat(rhs)))
                .collect();
            cons.push(Constraint::le(vec![rat(1), rat(1), rat(0)], rat(-1)));
            cons.push(Constraint::le(vec![rat(-1), rat(-1), rat(0)], rat(-1)));
            prop_assert!(find_feasible(3, &cons).is_none());
        }
    }
}
