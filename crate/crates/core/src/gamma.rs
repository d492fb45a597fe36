//! Γ-series over integer lattices: support enumeration, evaluation at sign
//! vectors, polynomial expansion and binomially weighted variants.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::IntegerLattice;
use crate::pattern::{bgc_lattice, Minor, ShiftVector6};
use crate::poly::{Monomial, SparsePoly};
use crate::scalar::{binom_poly, factorial_product, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.iter().all(|&e| e == 1 || e == -1) {
            Ok(SignVector(entries))
        } else {
            Err(Error::Index("sign entries must be +1 or -1".into()))
        }
    }

    pub fn all_plus(n: usize) -> Self {
        SignVector(vec![1; n])
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `prod signs_i ^ x_i`
    pub fn eval(&self, x: &[u32]) -> i8 {
        let odd = self
            .0
            .iter()
            .zip(x)
            .filter(|(&s, &e)| s < 0 && e % 2 == 1)
            .count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// A shift vector together with a lattice whose translate has finitely many
/// nonnegative points. Boundedness is certified at construction by a
/// partition of the moved coordinates into groups whose sums every lattice
/// vector preserves.
#[derive(Clone, Debug)]
pub struct GammaSeriesSpec {
    shift: Vec<i64>,
    lattice: IntegerLattice,
    upper: Vec<i64>,
    support: OnceLock<Vec<Vec<u32>>>,
}

impl GammaSeriesSpec {
    /// Groups are the connected components of the coordinates moved together
    /// by basis vectors.
    pub fn new(shift: Vec<i64>, lattice: IntegerLattice) -> Result<Self> {
        let n = lattice.dim();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while p[r] != r {
                r = p[r];
            }
            p[i] = r;
            r
        }
        for b in lattice.hermite().rows.iter() {
            let nz: Vec<usize> = (0..n).filter(|&i| b[i] != 0).collect();
            for w in nz.windows(2) {
                let (a, c) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = c;
            }
        }
        let moved: Vec<bool> = (0..n)
            .map(|i| lattice.hermite().rows.iter().any(|b| b[i] != 0))
            .collect();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_of = vec![usize::MAX; n];
        for i in (0..n).filter(|&i| moved[i]) {
            let r = find(&mut parent, i);
            if root_of[r] == usize::MAX {
                root_of[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[root_of[r]].push(i);
        }
        Self::with_groups(shift, lattice, &groups)
    }

    /// Explicit conserved groups; each must have zero sum on every basis
    /// vector and together they must cover every moved coordinate.
    pub fn with_groups(shift: Vec<i64>, lattice: IntegerLattice, groups: &[Vec<usize>]) -> Result<Self> {
        let n = lattice.dim();
        if shift.len() != n {
            return Err(Error::Dimension { expected: n, got: shift.len() });
        }
        let mut upper: Vec<Option<i64>> = vec![None; n];
        for g in groups {
            for b in lattice.basis() {
                if g.iter().map(|&i| b[i]).sum::<i64>() != 0 {
                    return Err(Error::UnboundedSupport);
                }
            }
            let total: i64 = g.iter().map(|&i| shift[i]).sum();
            for &i in g {
                upper[i] = Some(upper[i].map_or(total, |u: i64| u.min(total)));
            }
        }
        let mut bounds = Vec::with_capacity(n);
        for i in 0..n {
            let moved = lattice.basis().iter().any(|b| b[i] != 0);
            match (moved, upper[i]) {
                (true, None) => return Err(Error::UnboundedSupport),
                (true, Some(u)) => bounds.push(u),
                (false, _) => bounds.push(shift[i]),
            }
        }
        Ok(GammaSeriesSpec { shift, lattice, upper: bounds, support: OnceLock::new() })
    }

    /// The B_GC series of a 6-dimensional shift vector.
    pub fn bgc(mu: &ShiftVector6) -> Self {
        Self::with_groups(mu.0.to_vec(), bgc_lattice(), &[vec![1, 2, 3, 4]])
            .expect("B_GC is bounded by the x1+x2+x13+x23 group")
    }

    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    pub fn lattice(&self) -> &IntegerLattice {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.shift.len()
    }

    /// All nonnegative points of `shift + lattice`, sorted.
    pub fn support_points(&self) -> &[Vec<u32>] {
        self.support.get_or_init(|| self.walk())
    }

    fn walk(&self) -> Vec<Vec<u32>> {
        let n = self.dim();
        let h = self.lattice.hermite();
        let rows = &h.rows;
        // last row touching each coordinate; None means fixed
        let last: Vec<Option<usize>> = (0..n)
            .map(|j| (0..rows.len()).rev().find(|&r| rows[r][j] != 0))
            .collect();
        let fixed_ok = (0..n)
            .filter(|&j| last[j].is_none())
            .all(|j| self.shift[j] >= 0);
        if !fixed_ok || self.upper.iter().any(|&u| u < 0) {
            return Vec::new();
        }
        let mut checks: Vec<Vec<usize>> = vec![Vec::new(); rows.len()];
        for j in 0..n {
            if let Some(r) = last[j] {
                checks[r].push(j);
            }
        }
        let mut out = Vec::new();
        let mut x = self.shift.clone();
        self.descend(0, &mut x, rows, &h.pivots, &checks, &mut out);
        out.sort();
        out
    }

    fn descend(
        &self,
        level: usize,
        x: &mut Vec<i64>,
        rows: &[Vec<i64>],
        pivots: &[usize],
        checks: &[Vec<usize>],
        out: &mut Vec<Vec<u32>>,
    ) {
        if level == rows.len() {
            out.push(x.iter().map(|&v| v as u32).collect());
            return;
        }
        let row = &rows[level];
        let p = pivots[level];
        let b = row[p];
        // 0 <= x[p] + c b <= upper[p]
        let lo = (-x[p]).div_euclid(b) + i64::from((-x[p]).rem_euclid(b) != 0);
        let hi = (self.upper[p] - x[p]).div_euclid(b);
        for c in lo..=hi {
            for (xi, ri) in x.iter_mut().zip(row) {
                *xi += c * ri;
            }
            let ok = checks[level]
                .iter()
                .all(|&j| x[j] >= 0 && x[j] <= self.upper[j]);
            if ok {
                self.descend(level + 1, x, rows, pivots, checks, out);
            }
            for (xi, ri) in x.iter_mut().zip(row) {
                *xi -= c * ri;
            }
        }
    }
}

fn recip_fact<C: Scalar>(x: &[u32]) -> C {
    C::one() / C::from_bigint(factorial_product(x.iter().copied()))
}

/// `sum over support of signs^x / x!`; zero for empty support.
pub fn gamma_value<C: Scalar>(spec: &GammaSeriesSpec, signs: &SignVector) -> C {
    spec.support_points().iter().fold(C::zero(), |acc, x| {
        let t: C = recip_fact(x);
        if signs.eval(x) < 0 {
            acc - t
        } else {
            acc + t
        }
    })
}

/// `sum over support of A^x / x!`.
pub fn gamma_poly<C: Scalar>(spec: &GammaSeriesSpec) -> SparsePoly<C> {
    SparsePoly::from_terms(
        spec.dim(),
        spec.support_points()
            .iter()
            .map(|x| (Monomial::new(x.clone()), recip_fact(x))),
    )
}

/// Per-letter bookkeeping for the binomially weighted series: for each ambient
/// coordinate, which minor of letters a, b, c it carries, and the base shift
/// vector each letter's projection is measured from (along B_GC).
#[derive(Clone, Copy, Debug)]
pub struct LetterGrading<'a> {
    pub content: &'a [[Option<Minor>; 3]],
    pub bases: [ShiftVector6; 3],
}

impl LetterGrading<'_> {
    pub fn project(&self, letter: usize, x: &[u32]) -> ShiftVector6 {
        let mut out = [0i64; 6];
        for (c, &e) in self.content.iter().zip(x) {
            if let Some(m) = c[letter] {
                out[m.index()] += i64::from(e);
            }
        }
        ShiftVector6(out)
    }

    /// Offset `τ` with `project(x) = base + τ v` for each letter.
    pub fn tau(&self, x: &[u32]) -> [i64; 3] {
        let mut t = [0i64; 3];
        for (l, tl) in t.iter_mut().enumerate() {
            let d = self.project(l, x).sub(&self.bases[l]);
            *tl = d.0[Minor::X23.index()];
            debug_assert_eq!(d.add_scaled(&crate::pattern::V_GEN, -*tl).0, [0; 6]);
        }
        t
    }
}

/// `sum over support of signs^x / x! * prod_l binom(τ_l + s_l, s_l)`.
pub fn weighted_gamma_value(
    spec: &GammaSeriesSpec,
    grading: &LetterGrading,
    s: [u32; 3],
    signs: &SignVector,
) -> BigRational {
    weighted_gamma_table(spec, grading, s, signs)
        .pop()
        .unwrap_or_else(BigRational::zero)
}

/// Weighted values for every `s' <= s_max` componentwise, in row-major order
/// over `(s'_1, s'_2, s'_3)`; one pass over the support.
pub fn weighted_gamma_table(
    spec: &GammaSeriesSpec,
    grading: &LetterGrading,
    s_max: [u32; 3],
    signs: &SignVector,
) -> Vec<BigRational> {
    let dims = s_max.map(|s| s as usize + 1);
    let mut table = vec![BigRational::zero(); dims[0] * dims[1] * dims[2]];
    for x in spec.support_points() {
        let base = BigRational::new(
            BigInt::from(signs.eval(x)),
            factorial_product(x.iter().copied()),
        );
        let tau = grading.tau(x);
        let w: Vec<Vec<BigRational>> = (0..3)
            .map(|l| (0..dims[l] as u32).map(|s| binom_poly(tau[l] + s as i64, s)).collect())
            .collect();
        for i in 0..dims[0] {
            if w[0][i].is_zero() {
                continue;
            }
            let a = &base * &w[0][i];
            for j in 0..dims[1] {
                if w[1][j].is_zero() {
                    continue;
                }
                let ab = &a * &w[1][j];
                for k in 0..dims[2] {
                    let idx = (i * dims[1] + j) * dims[2] + k;
                    if w[2][k].is_one() {
                        table[idx] += &ab;
                    } else if !w[2][k].is_zero() {
                        table[idx] += &ab * &w[2][k];
                    }
                }
            }
        }
    }
    table
}
