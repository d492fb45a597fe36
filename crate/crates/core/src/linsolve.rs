//! Fraction-free sparse elimination over the integers.
//!
//! Vectors are sparse maps from an ordered key (e.g. a monomial) to an
//! integer. Every row keeps the integer combination of input columns that
//! produced it, so solutions come out exactly without ever dividing.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug)]
struct Row<K, I> {
    vec: BTreeMap<K, I>,
    comb: BTreeMap<usize, I>,
}

fn scale_sub<K: Ord + Clone, I: Integer + Signed + Clone>(dst: &mut BTreeMap<K, I>, a: &I, src: &BTreeMap<K, I>, b: &I) {
    // dst = a * dst - b * src
    if !a.is_one() {
        for v in dst.values_mut() {
            *v = v.clone() * a.clone();
        }
    }
    for (k, s) in src {
        let t = s.clone() * b.clone();
        match dst.get_mut(k) {
            Some(v) => {
                *v = v.clone() - t;
                if v.is_zero() {
                    dst.remove(k);
                }
            }
            None => {
                dst.insert(k.clone(), -t);
            }
        }
    }
}

impl<K: Ord + Clone, I: Integer + Signed + Clone> Row<K, I> {
    fn normalize(&mut self) {
        let g = self
            .vec
            .values()
            .chain(self.comb.values())
            .fold(I::zero(), |g, v| g.gcd(v));
        if !g.is_zero() && !g.is_one() {
            for v in self.vec.values_mut().chain(self.comb.values_mut()) {
                *v = v.clone() / g.clone();
            }
        }
    }
}

/// Incremental echelon form; the pivot of each row is its smallest key.
#[derive(Clone, Debug)]
pub struct FractionFree<K, I> {
    rows: BTreeMap<K, Row<K, I>>,
    ncols: usize,
}

impl<K: Ord + Clone, I: Integer + Signed + Clone> Default for FractionFree<K, I> {
    fn default() -> Self {
        FractionFree { rows: BTreeMap::new(), ncols: 0 }
    }
}

impl<K: Ord + Clone, I: Integer + Signed + Clone> FractionFree<K, I> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, row: &mut Row<K, I>) {
        for (pk, p) in &self.rows {
            let Some(a) = row.vec.get(pk).cloned() else { continue };
            let b = p.vec[pk].clone();
            let g = a.gcd(&b);
            let (bm, am) = (b / g.clone(), a / g);
            scale_sub(&mut row.vec, &bm, &p.vec, &am);
            scale_sub(&mut row.comb, &bm, &p.comb, &am);
            row.normalize();
        }
    }

    /// Adds a column; returns false when it depends on earlier columns.
    pub fn push(&mut self, col: BTreeMap<K, I>) -> bool {
        let idx = self.ncols;
        self.ncols += 1;
        let mut row = Row { vec: col, comb: BTreeMap::from([(idx, I::one())]) };
        self.reduce(&mut row);
        match row.vec.keys().next().cloned() {
            Some(k) => {
                self.rows.insert(k, row);
                true
            }
            None => false,
        }
    }

    /// Integer `(c, d)` with `d * target = sum_j c_j col_j`, if `target` is in
    /// the span. `d` is nonzero.
    pub fn express(&self, target: BTreeMap<K, I>) -> Option<(BTreeMap<usize, I>, I)> {
        let rhs = self.ncols;
        let mut row = Row { vec: target, comb: BTreeMap::from([(rhs, I::one())]) };
        self.reduce(&mut row);
        if !row.vec.is_empty() {
            return None;
        }
        let d = row.comb.remove(&rhs)?;
        let c = row.comb.into_iter().map(|(j, v)| (j, -v)).collect();
        Some((c, d))
    }
}

fn integral<K: Ord + Clone>(v: &BTreeMap<K, Rational>) -> (BTreeMap<K, BigInt>, BigInt) {
    let l = v.values().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let iv = v
        .iter()
        .map(|(k, q)| (k.clone(), q.numer() * (&l / q.denom())))
        .collect();
    (iv, l)
}

/// The unique `x` with `sum_j x_j cols[j] = rhs`. Errors when the columns are
/// dependent or `rhs` is outside their span.
pub fn solve_rational<K: Ord + Clone>(cols: &[BTreeMap<K, Rational>], rhs: &BTreeMap<K, Rational>) -> Result<Vec<Rational>> {
    let mut ff: FractionFree<K, BigInt> = FractionFree::new();
    let mut scales = Vec::with_capacity(cols.len());
    for (j, c) in cols.iter().enumerate() {
        let (ic, l) = integral(c);
        scales.push(l);
        if !ff.push(ic) {
            return Err(Error::Inconsistent(format!("column {j} is dependent")));
        }
    }
    let (ir, lr) = integral(rhs);
    let (c, d) = ff
        .express(ir)
        .ok_or_else(|| Error::Inconsistent("right-hand side outside the column span".into()))?;
    // d * ir = sum c_j ic_j, ic_j = l_j col_j, ir = lr rhs
    Ok((0..cols.len())
        .map(|j| match c.get(&j) {
            Some(cj) => Rational::new(cj * &scales[j], &d * &lr),
            None => Rational::zero(),
        })
        .collect())
}

pub fn rank_rational<K: Ord + Clone>(vectors: &[BTreeMap<K, Rational>]) -> usize {
    let mut ff: FractionFree<K, BigInt> = FractionFree::new();
    for v in vectors {
        ff.push(integral(v).0);
    }
    ff.rank()
}
