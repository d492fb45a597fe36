//! Integer lattices via Hermite normal form.
//!
//! All arithmetic is checked `i64`; the lattices here have tiny entries, so an
//! overflow means a bug and panics rather than silently wrapping.

use crate::error::{Error, Result};

fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("lattice arithmetic overflow")
}

fn axpy(dst: &mut [i64], q: i64, src: &[i64]) {
    // dst -= q * src
    for (d, s) in dst.iter_mut().zip(src) {
        *d = d.checked_sub(mul(q, *s)).expect("lattice arithmetic overflow");
    }
}

/// Row-style Hermite normal form of a generator list, with the unimodular
/// transform that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hermite {
    dim: usize,
    ngens: usize,
    /// Nonzero HNF rows; pivots strictly increasing, pivot entries positive,
    /// entries above a pivot reduced into `[0, pivot)`.
    pub rows: Vec<Vec<i64>>,
    pub pivots: Vec<usize>,
    /// `rows[i] = sum_j transform[i][j] * gens[j]`.
    pub transform: Vec<Vec<i64>>,
    /// Z-basis of integer relations `c` with `sum_j c_j gens[j] = 0`.
    pub kernel: Vec<Vec<i64>>,
}

impl Hermite {
    pub fn new(dim: usize, gens: &[Vec<i64>]) -> Result<Self> {
        for g in gens {
            if g.len() != dim {
                return Err(Error::Dimension { expected: dim, got: g.len() });
            }
        }
        let m = gens.len();
        let mut a: Vec<Vec<i64>> = gens.to_vec();
        let mut u: Vec<Vec<i64>> = (0..m)
            .map(|i| (0..m).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..dim {
            if r == m {
                break;
            }
            let mut found = false;
            loop {
                let best = (r..m)
                    .filter(|&i| a[i][col] != 0)
                    .min_by_key(|&i| (a[i][col].unsigned_abs(), i));
                let Some(b) = best else { break };
                found = true;
                a.swap(r, b);
                u.swap(r, b);
                let mut clean = true;
                for i in r + 1..m {
                    if a[i][col] != 0 {
                        let q = a[i][col].div_euclid(a[r][col]);
                        let (ar, ur) = (a[r].clone(), u[r].clone());
                        axpy(&mut a[i], q, &ar);
                        axpy(&mut u[i], q, &ur);
                        clean &= a[i][col] == 0;
                    }
                }
                if clean {
                    break;
                }
            }
            if !found {
                continue;
            }
            if a[r][col] < 0 {
                a[r].iter_mut().for_each(|x| *x = -*x);
                u[r].iter_mut().for_each(|x| *x = -*x);
            }
            let (ar, ur) = (a[r].clone(), u[r].clone());
            for i in 0..r {
                let q = a[i][col].div_euclid(ar[col]);
                if q != 0 {
                    axpy(&mut a[i], q, &ar);
                    axpy(&mut u[i], q, &ur);
                }
            }
            pivots.push(col);
            r += 1;
        }
        let kernel = u.split_off(r);
        a.truncate(r);
        Ok(Hermite { dim, ngens: m, rows: a, pivots, transform: u, kernel })
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates of `target` in the HNF rows, if it lies in the lattice.
    pub fn reduce(&self, target: &[i64]) -> Option<Vec<i64>> {
        if target.len() != self.dim {
            return None;
        }
        let mut x = target.to_vec();
        let mut coeffs = Vec::with_capacity(self.rows.len());
        let mut start = 0;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if x[start..p].iter().any(|&v| v != 0) {
                return None;
            }
            if x[p] % row[p] != 0 {
                return None;
            }
            let q = x[p] / row[p];
            axpy(&mut x, q, row);
            coeffs.push(q);
            start = p + 1;
        }
        x[start..].iter().all(|&v| v == 0).then_some(coeffs)
    }

    /// Integer coefficients over the original generators, if `target` lies in
    /// their span. One particular solution; add `kernel` for the rest.
    pub fn solve(&self, target: &[i64]) -> Option<Vec<i64>> {
        let d = self.reduce(target)?;
        let mut c = vec![0i64; self.ngens];
        for (di, t) in d.iter().zip(&self.transform) {
            for (cj, tj) in c.iter_mut().zip(t) {
                *cj += mul(*di, *tj);
            }
        }
        Some(c)
    }
}

/// A full-rank-in-its-span integer lattice given by an independent basis.
#[derive(Clone, Debug)]
pub struct IntegerLattice {
    dim: usize,
    basis: Vec<Vec<i64>>,
    hnf: Hermite,
}

impl IntegerLattice {
    /// Errors when the basis is not linearly independent.
    pub fn new(dim: usize, basis: Vec<Vec<i64>>) -> Result<Self> {
        let hnf = Hermite::new(dim, &basis)?;
        if hnf.rank() != basis.len() {
            return Err(Error::DependentBasis);
        }
        Ok(IntegerLattice { dim, basis, hnf })
    }

    /// Lattice generated by arbitrary (possibly dependent) vectors; the basis
    /// is the HNF.
    pub fn from_generators(dim: usize, gens: &[Vec<i64>]) -> Result<Self> {
        let rows = Hermite::new(dim, gens)?.rows;
        Self::new(dim, rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn hermite(&self) -> &Hermite {
        &self.hnf
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.hnf.reduce(v).is_some()
    }

    /// Equal as sets of points.
    pub fn same_lattice(&self, other: &IntegerLattice) -> bool {
        self.dim == other.dim && self.hnf.rows == other.hnf.rows
    }

    pub fn combination(&self, coeffs: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.dim];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            axpy(&mut out, -c, b);
        }
        out
    }
}

/// Coefficients `c` with `sum c_i basis_i = target`, or `None` when `target`
/// is not a lattice point.
pub fn lattice_solve(lattice: &IntegerLattice, target: &[i64]) -> Option<Vec<i64>> {
    if target.len() != lattice.dim {
        return None;
    }
    lattice.hnf.solve(target)
}
