//! Exact rational linear feasibility.
//!
//! Two-phase tableau simplex with Bland's rule over free variables (split as
//! differences of nonnegative ones). Strict inequalities are handled by a
//! shared slack `t`: each strict row becomes `a·x + t <= b`, `t <= 1` is
//! added, and the system is strictly feasible iff the maximum of `t` is
//! positive.

use num_traits::{One, Signed, Zero};

use crate::num::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Lt,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// A conjunction of linear constraints over free rational variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearSystem {
    vars: usize,
    rows: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(vars: usize) -> Self {
        LinearSystem { vars, rows: Vec::new() }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn rows(&self) -> &[Constraint] {
        &self.rows
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.vars, "constraint width");
        self.rows.push(Constraint { coeffs, relation, rhs });
    }

    pub fn extend(&mut self, other: &LinearSystem) {
        assert_eq!(self.vars, other.vars);
        self.rows.extend(other.rows.iter().cloned());
    }

    pub fn truncate(&mut self, len: usize) {
        self.rows.truncate(len);
    }

    /// Whether `x` satisfies every row exactly.
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        self.rows.iter().all(|r| {
            let lhs: Rational = r.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
            match r.relation {
                Relation::Le => lhs <= r.rhs,
                Relation::Lt => lhs < r.rhs,
                Relation::Eq => lhs == r.rhs,
            }
        })
    }

    /// A feasible point, or `None` if the system has no solution.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        // Rows with no variables are checked directly.
        let mut rows = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            if r.coeffs.iter().all(Zero::is_zero) {
                let zero = Rational::zero();
                let ok = match r.relation {
                    Relation::Le => zero <= r.rhs,
                    Relation::Lt => zero < r.rhs,
                    Relation::Eq => zero == r.rhs,
                };
                if !ok {
                    return None;
                }
            } else {
                rows.push(r);
            }
        }
        let strict = rows.iter().any(|r| r.relation == Relation::Lt);

        // Column layout: x⁺ (n), x⁻ (n), t (if strict), one slack per
        // inequality, one artificial per row.
        let n = self.vars;
        let t_col = 2 * n;
        let mut cols = 2 * n + usize::from(strict);
        let ineqs = rows.iter().filter(|r| r.relation != Relation::Eq).count() + usize::from(strict);
        let slack_start = cols;
        cols += ineqs;
        let total_rows = rows.len() + usize::from(strict);
        let art_start = cols;
        cols += total_rows;

        let mut tab = Tableau::new(total_rows, cols);
        let mut slack = slack_start;
        for (i, r) in rows.iter().enumerate() {
            for (j, a) in r.coeffs.iter().enumerate() {
                if !a.is_zero() {
                    tab.a[i][j] = a.clone();
                    tab.a[i][n + j] = -a;
                }
            }
            if r.relation != Relation::Eq {
                tab.a[i][slack] = Rational::one();
                slack += 1;
            }
            if r.relation == Relation::Lt {
                tab.a[i][t_col] = Rational::one();
            }
            tab.b[i] = r.rhs.clone();
        }
        if strict {
            let i = rows.len();
            tab.a[i][t_col] = Rational::one();
            tab.a[i][slack] = Rational::one();
            tab.b[i] = Rational::one();
        }
        for i in 0..total_rows {
            if tab.b[i].is_negative() {
                for v in tab.a[i].iter_mut() {
                    *v = -&*v;
                }
                tab.b[i] = -&tab.b[i];
            }
            tab.a[i][art_start + i] = Rational::one();
            tab.basis[i] = art_start + i;
        }

        // Phase 1: maximize −Σ artificials.
        let mut cost = vec![Rational::zero(); cols];
        for c in &mut cost[art_start..] {
            *c = -Rational::one();
        }
        let allowed: Vec<bool> = vec![true; cols];
        tab.maximize(&cost, &allowed);
        let infeasibility: Rational = tab
            .basis
            .iter()
            .zip(&tab.b)
            .filter(|(c, _)| **c >= art_start)
            .map(|(_, b)| b.clone())
            .sum();
        if infeasibility.is_positive() {
            return None;
        }
        // Drive zero-valued artificials out where possible.
        for i in 0..total_rows {
            if tab.basis[i] >= art_start {
                if let Some(j) = (0..art_start).find(|&j| !tab.a[i][j].is_zero()) {
                    tab.pivot(i, j);
                }
            }
        }
        let mut allowed = allowed;
        for a in &mut allowed[art_start..] {
            *a = false;
        }

        if strict {
            let mut cost = vec![Rational::zero(); cols];
            cost[t_col] = Rational::one();
            tab.maximize(&cost, &allowed);
            if !tab.value(t_col).is_positive() {
                return None;
            }
        }
        let x: Vec<Rational> = (0..n).map(|j| tab.value(j) - tab.value(n + j)).collect();
        debug_assert!(self.satisfied_by(&x));
        Some(x)
    }
}

struct Tableau {
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn new(rows: usize, cols: usize) -> Self {
        Tableau {
            a: vec![vec![Rational::zero(); cols]; rows],
            b: vec![Rational::zero(); rows],
            basis: vec![0; rows],
        }
    }

    fn value(&self, col: usize) -> Rational {
        self.basis
            .iter()
            .position(|&c| c == col)
            .map_or_else(Rational::zero, |i| self.b[i].clone())
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.a[r][c].clone();
        for v in self.a[r].iter_mut() {
            *v /= &p;
        }
        self.b[r] /= &p;
        let (row, br) = (self.a[r].clone(), self.b[r].clone());
        for i in 0..self.a.len() {
            if i == r || self.a[i][c].is_zero() {
                continue;
            }
            let f = self.a[i][c].clone();
            for (v, w) in self.a[i].iter_mut().zip(&row) {
                if !w.is_zero() {
                    *v -= &f * w;
                }
            }
            self.b[i] -= &f * &br;
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost · y` from the current basic feasible solution using
    /// Bland's rule. Returns `false` if the objective is unbounded.
    fn maximize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let mut entering = None;
            for j in 0..cost.len() {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut d = cost[j].clone();
                for (i, &bc) in self.basis.iter().enumerate() {
                    if !cost[bc].is_zero() && !self.a[i][j].is_zero() {
                        d -= &cost[bc] * &self.a[i][j];
                    }
                }
                if d.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else { return true };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.a.len() {
                if self.a[i][j].is_positive() {
                    let ratio = &self.b[i] / &self.a[i][j];
                    let better = match &leave {
                        None => true,
                        Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                Some((i, _)) => self.pivot(i, j),
                None => return false,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, ratio};

    fn row(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&v| rat(v)).collect()
    }

    #[test]
    fn box_is_feasible() {
        let mut s = LinearSystem::new(2);
        s.push(row(&[1, 0]), Relation::Le, rat(2));
        s.push(row(&[-1, 0]), Relation::Le, rat(-1));
        s.push(row(&[0, 1]), Relation::Le, rat(-3));
        let x = s.solve().unwrap();
        assert!(s.satisfied_by(&x));
        assert!(x[1] <= rat(-3));
    }

    #[test]
    fn contradictory_rows() {
        let mut s = LinearSystem::new(1);
        s.push(row(&[1]), Relation::Le, rat(1));
        s.push(row(&[-1]), Relation::Le, rat(-2));
        assert_eq!(s.solve(), None);
    }

    #[test]
    fn strict_rows_need_interior() {
        let mut s = LinearSystem::new(1);
        s.push(row(&[1]), Relation::Le, rat(1));
        s.push(row(&[-1]), Relation::Lt, rat(-1));
        assert_eq!(s.solve(), None);
        let mut s = LinearSystem::new(1);
        s.push(row(&[1]), Relation::Le, rat(2));
        s.push(row(&[-1]), Relation::Lt, rat(-1));
        let x = s.solve().unwrap();
        assert!(x[0] > rat(1) && x[0] <= rat(2));
    }

    #[test]
    fn equalities_and_redundancy() {
        let mut s = LinearSystem::new(3);
        s.push(row(&[1, 1, 0]), Relation::Eq, rat(1));
        s.push(row(&[2, 2, 0]), Relation::Eq, rat(2));
        s.push(row(&[0, 1, -1]), Relation::Eq, ratio(1, 2));
        s.push(row(&[-1, 0, 0]), Relation::Le, rat(0));
        s.push(row(&[0, 0, 1]), Relation::Le, rat(0));
        let x = s.solve().unwrap();
        assert!(s.satisfied_by(&x));
        s.push(row(&[0, 0, 0]), Relation::Lt, rat(0));
        assert_eq!(s.solve(), None);
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's cycling example, posed as feasibility with an objective cut.
        let mut s = LinearSystem::new(4);
        s.push(vec![ratio(1, 4), rat(-8), rat(-1), rat(9)], Relation::Le, rat(0));
        s.push(vec![ratio(1, 2), rat(-12), ratio(-1, 2), rat(3)], Relation::Le, rat(0));
        s.push(row(&[0, 0, 1, 0]), Relation::Le, rat(1));
        for j in 0..4 {
            let mut c = vec![rat(0); 4];
            c[j] = rat(-1);
            s.push(c, Relation::Le, rat(0));
        }
        s.push(vec![ratio(-3, 4), rat(20), ratio(-1, 2), rat(6)], Relation::Lt, ratio(-1, 5));
        let x = s.solve().unwrap();
        assert!(s.satisfied_by(&x));
        // the optimum is exactly 5/4
        let mut beyond = s.clone();
        beyond.push(vec![ratio(-3, 4), rat(20), ratio(-1, 2), rat(6)], Relation::Lt, ratio(-5, 4));
        assert_eq!(beyond.solve(), None);
        s.push(vec![ratio(-3, 4), rat(20), ratio(-1, 2), rat(6)], Relation::Le, ratio(-5, 4));
        assert!(s.solve().is_some());
    }
}
