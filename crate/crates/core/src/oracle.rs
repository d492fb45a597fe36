//! Brute-force ground truth in the 27 matrix entries `x_i^j` (letter `x`,
//! column `i`, row `j`).
//!
//! Basis vectors are Γ-series with each minor variable replaced by the
//! expanded minor; the invariant `g` is a product of expanded determinants.
//! Coefficients come from one exact linear solve per label. Nothing here
//! touches the 30-variable alphabet or the A-GKZ bases.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::alphabet::{Letter, MultiplicityLabel};
use crate::error::{Error, Result};
use crate::gamma::{gamma_poly, GammaSeriesSpec};
use crate::linsolve::{rank_rational, solve_rational};
use crate::pattern::{pattern_shift_vector, patterns_of, weight_of_pattern, GtPattern, HighestWeight, Minor};
use crate::poly::Monomial;
use crate::scalar::factorial;
use crate::{QPoly, Rational};

pub const NE: usize = 27;

/// Default bound on the degree of `g` in each letter.
pub const DEFAULT_DEGREE_CAP: u32 = 12;

/// Variable index of `x_col^row` (both 1-based).
pub fn entry(letter: Letter, col: usize, row: usize) -> usize {
    letter.index() * 9 + (row - 1) * 3 + (col - 1)
}

fn entry_var(letter: Letter, col: usize, row: usize) -> QPoly {
    QPoly::var(NE, entry(letter, col, row))
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        // insert n-1 at every position; each step right past an element flips sign
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// Determinant of a square matrix of polynomials by permutation expansion.
fn det(m: &[Vec<QPoly>]) -> QPoly {
    let n = m.len();
    let mut out = QPoly::zero(NE);
    for (p, s) in permutations(n) {
        let mut t = QPoly::one(NE);
        for (r, &c) in p.iter().enumerate() {
            t = &t * &m[r][c];
        }
        out.add_scaled(&t, &Rational::from_integer(s.into()));
    }
    out
}

/// Minor on rows `1..=|X|` and columns `X`.
pub fn minor_poly(letter: Letter, cols: &[usize]) -> Result<QPoly> {
    if cols.is_empty() || cols.len() > 3 || cols.iter().any(|&c| !(1..=3).contains(&c)) {
        return Err(Error::Index(format!("bad column set {cols:?}")));
    }
    let m: Vec<Vec<QPoly>> = (1..=cols.len())
        .map(|row| cols.iter().map(|&c| entry_var(letter, c, row)).collect())
        .collect();
    Ok(det(&m))
}

/// The basis vector of `pattern` realized in the entries of one letter.
pub fn gt_vector_poly(letter: Letter, weight: &HighestWeight, pattern: &GtPattern) -> Result<QPoly> {
    if pattern.top != weight.m {
        return Err(Error::InvalidPattern(format!("{pattern} for {weight}")));
    }
    let mu = pattern_shift_vector(pattern)?;
    let series: QPoly = gamma_poly(&GammaSeriesSpec::bgc(&mu));
    let images: Vec<QPoly> = Minor::ALL
        .iter()
        .map(|m| minor_poly(letter, m.columns()))
        .collect::<Result<_>>()?;
    Ok(series.substitute(&images))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionTarget {
    Letter(Letter),
    Diagonal,
}

/// `sum_l x_i^l ∂/∂x_j^l`, for one letter or summed over all three.
pub fn e_action(target: ActionTarget, i: usize, j: usize, f: &QPoly) -> QPoly {
    let letters: Vec<Letter> = match target {
        ActionTarget::Letter(l) => vec![l],
        ActionTarget::Diagonal => Letter::ALL.to_vec(),
    };
    let mut out = QPoly::zero(f.nvars());
    for l in letters {
        for row in 1..=3 {
            let d = f.derivative(entry(l, j, row));
            if !d.is_zero() {
                out.add_scaled(&(&entry_var(l, i, row) * &d), &Rational::one());
            }
        }
    }
    out
}

pub fn invariance_check(f: &QPoly) -> bool {
    (1..=3)
        .flat_map(|i| (1..=3).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .all(|(i, j)| e_action(ActionTarget::Diagonal, i, j, f).is_zero())
}

fn row(letter: Letter, r: usize) -> Vec<QPoly> {
    (1..=3).map(|c| entry_var(letter, c, r)).collect()
}

/// `(x23, -x13, x12)` built from the first two rows.
fn tilde_row(letter: Letter) -> Result<Vec<QPoly>> {
    Ok(vec![
        minor_poly(letter, &[2, 3])?,
        -&minor_poly(letter, &[1, 3])?,
        minor_poly(letter, &[1, 2])?,
    ])
}

/// Degrees of `g` in the entries of a, b, c.
pub fn letter_degrees(label: &MultiplicityLabel) -> [u32; 3] {
    let [a, b, g, d, w, f, p, t] = label.to_array();
    [a + 2 * g + 2 * p + f + w + 2 * t, b + 2 * d + p + 2 * f + w + 2 * t, 2 * a + g + 2 * b + d + w + 2 * t]
}

/// `g = prod det^e / e!` in the 27 entries.
pub fn g_poly_entries(
    label: &MultiplicityLabel,
    v: &HighestWeight,
    w: &HighestWeight,
    degree_cap: u32,
) -> Result<QPoly> {
    label.validate(v, w)?;
    g_poly_unchecked(label, degree_cap)
}

fn g_poly_unchecked(label: &MultiplicityLabel, degree_cap: u32) -> Result<QPoly> {
    let degree = letter_degrees(label).into_iter().max().unwrap_or(0);
    if degree > degree_cap {
        return Err(Error::DegreeCap { cap: degree_cap, degree });
    }
    use Letter::{A, B, C};
    let dets = [
        (label.gamma, det(&[row(A, 1), row(A, 2), row(C, 1)])),
        (label.alpha, det(&[row(A, 1), row(C, 1), row(C, 2)])),
        (label.delta, det(&[row(B, 1), row(B, 2), row(C, 1)])),
        (label.beta, det(&[row(B, 1), row(C, 1), row(C, 2)])),
        (label.psi, det(&[row(A, 1), row(A, 2), row(B, 1)])),
        (label.phi, det(&[row(A, 1), row(B, 1), row(B, 2)])),
        (label.omega, det(&[row(A, 1), row(B, 1), row(C, 1)])),
        (label.theta, det(&[tilde_row(A)?, tilde_row(B)?, tilde_row(C)?])),
    ];
    let mut g = QPoly::one(NE);
    for (e, d) in dets {
        if e > 0 {
            g = (&g * &d.pow(e)).scale(&(Rational::one() / Rational::from_integer(factorial(e))));
        }
    }
    Ok(g)
}

fn as_map(p: &QPoly) -> BTreeMap<Monomial, Rational> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Basis products whose weights add to `(M1, M1, M1)`.
fn weight_matched(
    v: &HighestWeight,
    w: &HighestWeight,
    c: &HighestWeight,
    m1: i64,
) -> Vec<(GtPattern, GtPattern, GtPattern)> {
    let mut out = Vec::new();
    for a in patterns_of(*v) {
        for b in patterns_of(*w) {
            for z in patterns_of(*c) {
                let (wa, wb, wz) = (weight_of_pattern(&a), weight_of_pattern(&b), weight_of_pattern(&z));
                if (0..3).all(|i| wa[i] + wb[i] + wz[i] == m1) {
                    out.push((a, b, z));
                }
            }
        }
    }
    out
}

struct ProductBasis {
    triples: Vec<(GtPattern, GtPattern, GtPattern)>,
    products: Vec<QPoly>,
}

fn product_basis(v: &HighestWeight, w: &HighestWeight, c: &HighestWeight, m1: i64) -> Result<ProductBasis> {
    let triples = weight_matched(v, w, c, m1);
    let mut cache: BTreeMap<(usize, GtPattern), QPoly> = BTreeMap::new();
    let mut get = |l: Letter, hw: &HighestWeight, p: &GtPattern| -> Result<QPoly> {
        if let Some(x) = cache.get(&(l.index(), *p)) {
            return Ok(x.clone());
        }
        let x = gt_vector_poly(l, hw, p)?;
        cache.insert((l.index(), *p), x.clone());
        Ok(x)
    };
    let mut products = Vec::with_capacity(triples.len());
    for (a, b, z) in &triples {
        let pa = get(Letter::A, v, a)?;
        let pb = get(Letter::B, w, b)?;
        let pc = get(Letter::C, c, z)?;
        products.push(&(&pa * &pb) * &pc);
    }
    Ok(ProductBasis { triples, products })
}

/// The dual-slot weight `[M1-M3, M1-M2, 0]` of `U`.
pub fn c_slot_weight(u: &HighestWeight) -> HighestWeight {
    HighestWeight { m: [u.m[0] - u.m[2], u.m[0] - u.m[1], 0] }
}

/// Every coefficient of `g` in the product basis, keyed by
/// `(p_V, p_W, third-slot pattern)`; triples whose weights cannot add up are
/// present with value 0.
pub fn oracle_threej_all(
    v: &HighestWeight,
    w: &HighestWeight,
    u: &HighestWeight,
    label: &MultiplicityLabel,
) -> Result<BTreeMap<(GtPattern, GtPattern, GtPattern), Rational>> {
    label.validate(v, w)?;
    if label.target() != *u {
        return Err(Error::InvalidLabel(format!("{label} does not select {u}")));
    }
    let c = c_slot_weight(u);
    let g = g_poly_unchecked(label, DEFAULT_DEGREE_CAP)?;
    let basis = product_basis(v, w, &c, u.m[0])?;
    let cols: Vec<BTreeMap<Monomial, Rational>> = basis.products.iter().map(as_map).collect();
    let x = solve_rational(&cols, &as_map(&g))?;
    let mut out = BTreeMap::new();
    for a in patterns_of(*v) {
        for b in patterns_of(*w) {
            for z in patterns_of(c) {
                out.insert((a, b, z), Rational::zero());
            }
        }
    }
    for (t, val) in basis.triples.iter().zip(x) {
        out.insert(*t, val);
    }
    Ok(out)
}

/// Dimension of the invariants in the weight-`(M1,M1,M1)` part of
/// `V ⊗ W ⊗ C`, where `C` is the dual slot of `U`.
pub fn invariant_space_rank(v: &HighestWeight, w: &HighestWeight, u: &HighestWeight) -> Result<usize> {
    let c = c_slot_weight(u);
    let basis = product_basis(v, w, &c, u.m[0])?;
    let n = basis.products.len();
    if rank_rational(&basis.products.iter().map(as_map).collect::<Vec<_>>()) != n {
        return Err(Error::Inconsistent("basis products are dependent".into()));
    }
    // stack the six images, tagging monomials with the operator index
    let images: Vec<BTreeMap<(usize, Monomial), Rational>> = basis
        .products
        .iter()
        .map(|p| {
            let mut m = BTreeMap::new();
            let ops = [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)];
            for (k, (i, j)) in ops.into_iter().enumerate() {
                for (mon, coef) in e_action(ActionTarget::Diagonal, i, j, p).terms() {
                    m.insert((k, mon.clone()), coef.clone());
                }
            }
            m
        })
        .collect();
    Ok(n - rank_rational(&images))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(a: i64, b: i64, c: i64) -> HighestWeight {
        HighestWeight::new(a, b, c).unwrap()
    }

    fn pat(top: [i64; 3], k1: i64, k2: i64, s: i64) -> GtPattern {
        GtPattern::new(top, [k1, k2], s).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn minors() {
        let a11 = entry_var(Letter::A, 1, 1);
        assert_eq!(minor_poly(Letter::A, &[1]).unwrap(), a11);
        let m = minor_poly(Letter::A, &[1, 2]).unwrap();
        let expect = &(&a11 * &entry_var(Letter::A, 2, 2)) - &(&entry_var(Letter::A, 2, 1) * &entry_var(Letter::A, 1, 2));
        assert_eq!(m, expect);
        assert_eq!(minor_poly(Letter::A, &[1, 2, 3]).unwrap().len(), 6);
        assert!(minor_poly(Letter::A, &[]).is_err());
    }

    #[test]
    fn gt_vectors() {
        let f = hw(1, 0, 0);
        assert_eq!(gt_vector_poly(Letter::A, &f, &pat([1, 0, 0], 1, 0, 1)).unwrap(), entry_var(Letter::A, 1, 1));
        let a = hw(1, 1, 0);
        assert_eq!(
            gt_vector_poly(Letter::A, &a, &pat([1, 1, 0], 1, 1, 1)).unwrap(),
            minor_poly(Letter::A, &[1, 2]).unwrap()
        );
        let ad = hw(2, 1, 0);
        let expect = &minor_poly(Letter::A, &[1]).unwrap() * &minor_poly(Letter::A, &[1, 2]).unwrap();
        assert_eq!(gt_vector_poly(Letter::A, &ad, &pat([2, 1, 0], 2, 1, 2)).unwrap(), expect);
    }

    #[test]
    fn actions_on_minors() {
        let a21 = entry_var(Letter::A, 2, 1);
        let e = e_action(ActionTarget::Letter(Letter::A), 1, 2, &a21);
        assert_eq!(e, entry_var(Letter::A, 1, 1));
        let m13 = minor_poly(Letter::A, &[1, 3]).unwrap();
        assert!(e_action(ActionTarget::Letter(Letter::A), 1, 2, &m13).is_zero());
        assert_eq!(e_action(ActionTarget::Letter(Letter::A), 2, 3, &m13), minor_poly(Letter::A, &[1, 2]).unwrap());
    }

    #[test]
    fn invariance() {
        let f = hw(1, 0, 0);
        let abc = g_poly_entries(&MultiplicityLabel::from_array([0, 0, 0, 0, 1, 0, 0, 0]), &f, &f, 12).unwrap();
        let d = det(&[row(Letter::A, 1), row(Letter::B, 1), row(Letter::C, 1)]);
        assert_eq!(abc, d);
        assert!(invariance_check(&abc));
        assert!(!invariance_check(&entry_var(Letter::A, 1, 1)));
        // column operations kill any product of row determinants, so the
        // unbalanced (abc)(aab) is still annihilated; only its label is invalid
        let l = MultiplicityLabel::from_array([0, 0, 0, 0, 1, 0, 1, 0]);
        assert!(invariance_check(&g_poly_unchecked(&l, 12).unwrap()));
        assert!(g_poly_entries(&l, &f, &f, 12).is_err());
        assert!(!invariance_check(&(&abc * &minor_poly(Letter::A, &[1, 2]).unwrap())));
    }

    #[test]
    fn g_symmetric_square() {
        let f = hw(1, 0, 0);
        let g = g_poly_entries(&MultiplicityLabel::from_array([1, 1, 0, 0, 0, 0, 0, 0]), &f, &f, 12).unwrap();
        let acc = det(&[row(Letter::A, 1), row(Letter::C, 1), row(Letter::C, 2)]);
        let bcc = det(&[row(Letter::B, 1), row(Letter::C, 1), row(Letter::C, 2)]);
        assert_eq!(g, &acc * &bcc);
    }

    #[test]
    fn commutation() {
        // [E_ij, E_kl] = δ_jk E_il - δ_li E_kj on a mixed polynomial
        let f = &(&gt_vector_poly(Letter::A, &hw(2, 1, 0), &pat([2, 1, 0], 1, 0, 1)).unwrap()
            * &entry_var(Letter::B, 3, 2))
            + &minor_poly(Letter::C, &[2, 3]).unwrap();
        let e = |i, j, p: &QPoly| e_action(ActionTarget::Diagonal, i, j, p);
        for (i, j, k, l) in [(1, 2, 2, 3), (1, 2, 2, 1), (3, 1, 1, 3), (2, 3, 1, 2), (1, 3, 2, 3)] {
            let lhs = &e(i, j, &e(k, l, &f)) - &e(k, l, &e(i, j, &f));
            let mut rhs = QPoly::zero(NE);
            if j == k {
                rhs = &rhs + &e(i, l, &f);
            }
            if l == i {
                rhs = &rhs - &e(k, j, &f);
            }
            assert_eq!(lhs, rhs, "{i}{j} {k}{l}");
        }
    }

    #[test]
    fn gt_vectors_independent() {
        for (a, b) in [(1, 0), (2, 1), (2, 2), (3, 1)] {
            let w = hw(a, b, 0);
            let polys: Vec<_> = patterns_of(w).iter().map(|p| as_map(&gt_vector_poly(Letter::A, &w, p).unwrap())).collect();
            assert_eq!(polys.len(), w.dimension());
            assert_eq!(rank_rational(&polys), polys.len());
        }
    }

    #[test]
    fn oracle_examples() {
        let f = hw(1, 0, 0);
        let t = pat([1, 0, 0], 1, 0, 1);
        let l = MultiplicityLabel::from_array([1, 1, 0, 0, 0, 0, 0, 0]);
        let all = oracle_threej_all(&f, &f, &hw(2, 0, 0), &l).unwrap();
        assert_eq!(all[&(t, t, pat([2, 2, 0], 2, 0, 0))], q(2));
        let l = MultiplicityLabel::from_array([0, 0, 0, 0, 1, 0, 0, 0]);
        let all = oracle_threej_all(&f, &f, &hw(1, 1, 0), &l).unwrap();
        assert_eq!(all[&(t, pat([1, 0, 0], 1, 0, 0), pat([1, 0, 0], 0, 0, 0))], q(1));
        assert_eq!(all[&(pat([1, 0, 0], 1, 0, 0), t, pat([1, 0, 0], 0, 0, 0))], q(-1));
        assert_eq!(all[&(t, t, pat([1, 0, 0], 0, 0, 0))], q(0));
    }

    #[test]
    fn invariant_ranks() {
        let f = hw(1, 0, 0);
        assert_eq!(invariant_space_rank(&f, &f, &hw(2, 0, 0)).unwrap(), 1);
        assert_eq!(invariant_space_rank(&f, &f, &hw(1, 1, 0)).unwrap(), 1);
        assert_eq!(invariant_space_rank(&f, &f, &hw(3, 0, 0)).unwrap(), 0);
    }

    #[test]
    fn degree_cap() {
        let l = MultiplicityLabel::from_array([1, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(letter_degrees(&l), [1, 1, 4]);
        assert!(matches!(g_poly_unchecked(&l, 3), Err(Error::DegreeCap { .. })));
    }
}
