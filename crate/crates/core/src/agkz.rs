//! The A-GKZ realization in six free minor variables `A_X`, ordered as
//! `(A3, A1, A2, A13, A23, A12)`.
//!
//! `F_μ` solves the antisymmetrized GKZ system and restricts to the Γ-series
//! `𝓕_μ` on the Plücker quadric. `F̃_μ` is a second solution basis, lower
//! triangular with respect to the order `μ - r ⪯ μ`; `d` and `f` convert
//! between the two.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gamma::{gamma_poly, gamma_value, GammaSeriesSpec, SignVector};
use crate::pattern::{pattern_from_shift, Minor, ShiftVector6, R_VEC};
use crate::poly::{Monomial, SparsePoly};
use crate::scalar::{binom_poly, factorial_product, harmonic, Scalar};
use crate::{QPoly, Rational};

const NV: usize = 6;
const E3_E12: ShiftVector6 = ShiftVector6([1, 0, 0, 0, 0, 1]);

/// Overall scale of `F_μ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// Leading (`s = 0`) coefficient 1.
    #[default]
    Unit,
    /// Divided by `sum_{s>=0} t_s` over all `s`, i.e. `1 + H_{c+1}/(c+1)`.
    SummedInfinite,
    /// Divided by `sum t_s` over the `s` where the series is nonzero.
    SummedTruncated,
}

fn c_index(mu: &ShiftVector6) -> i64 {
    mu.0[1] + mu.0[2] + mu.0[3] + mu.0[4]
}

fn check_valid(mu: &ShiftVector6) -> Result<()> {
    pattern_from_shift(mu).map(|_| ()).ok_or(Error::InvalidShift(mu.0))
}

/// `t_0 = 1`, `t_s = 1 / (s(s+1) + s c)` with `c = μ1 + μ2 + μ13 + μ23`.
pub fn t_coeff(mu: &ShiftVector6, s: usize) -> Result<Rational> {
    if s == 0 {
        return Ok(Rational::one());
    }
    let s64 = s as i64;
    let den = s64 * (s64 + 1) + s64 * c_index(mu);
    if den == 0 {
        return Err(Error::DegenerateShift(s));
    }
    Ok(Rational::new(BigInt::one(), BigInt::from(den)))
}

/// Coefficient of `ζ^s 𝓕_{μ - s(e3+e12)}` in `F_μ`: `prod_{j<=s} (-t_j)`.
///
/// This is what annihilation forces: the box part of the operator lowers
/// `ζ^s` with factor `s(s+1+c)` while `∂3∂12` raises the Γ-index by one.
pub fn zeta_coeff(mu: &ShiftVector6, s: usize) -> Result<Rational> {
    let mut c = Rational::one();
    for j in 1..=s {
        c = -c * t_coeff(mu, j)?;
    }
    Ok(c)
}

/// Number of nonzero `ζ`-layers: `min(μ3, μ12) + 1` (or 0).
fn zeta_depth(mu: &ShiftVector6) -> usize {
    (mu.0[0].min(mu.0[5]) + 1).max(0) as usize
}

pub fn normalization_constant(mu: &ShiftVector6, norm: Normalization) -> Result<Rational> {
    match norm {
        Normalization::Unit => Ok(Rational::one()),
        Normalization::SummedInfinite => {
            let c = c_index(mu);
            if c < 0 {
                return Err(Error::DegenerateShift(0));
            }
            let c1 = (c + 1) as u64;
            Ok(Rational::one() + harmonic(c1) / Rational::from_integer(BigInt::from(c1)))
        }
        Normalization::SummedTruncated => {
            (0..zeta_depth(mu)).try_fold(Rational::zero(), |acc, s| Ok(acc + t_coeff(mu, s)?))
        }
    }
}

pub fn zeta_poly() -> QPoly {
    let mut z = QPoly::zero(NV);
    z.add_term(Monomial::new(vec![0, 1, 0, 0, 1, 0]), Rational::one());
    z.add_term(Monomial::new(vec![0, 0, 1, 1, 0, 0]), -Rational::one());
    z
}

pub fn big_f_poly(mu: &ShiftVector6) -> Result<QPoly> {
    big_f_poly_with(mu, Normalization::Unit)
}

/// `F_μ = sum_s c_s ζ^s 𝓕_{μ - s(e3+e12)}`, scaled per `norm`.
pub fn big_f_poly_with(mu: &ShiftVector6, norm: Normalization) -> Result<QPoly> {
    check_valid(mu)?;
    let zeta = zeta_poly();
    let mut zs = QPoly::one(NV);
    let mut out = QPoly::zero(NV);
    for s in 0..zeta_depth(mu) {
        let g: QPoly = gamma_poly(&GammaSeriesSpec::bgc(&mu.add_scaled(&E3_E12, -(s as i64))));
        out.add_scaled(&(&zs * &g), &zeta_coeff(mu, s)?);
        zs = &zs * &zeta;
    }
    let k = normalization_constant(mu, norm)?;
    Ok(if k.is_one() { out } else { out.scale(&(Rational::one() / k)) })
}

/// Offsets `τ` with `x = λ + τ v` for the support points `x` of `𝓕_λ`.
fn offsets(lambda: &ShiftVector6) -> impl Iterator<Item = (Vec<u32>, i64)> + '_ {
    let spec = GammaSeriesSpec::bgc(lambda);
    let pts = spec.support_points().to_vec();
    pts.into_iter().map(move |x| {
        let t = i64::from(x[Minor::X23.index()]) - lambda.0[Minor::X23.index()];
        (x, t)
    })
}

/// `F̃_μ = sum_{s>=0} (-1)^s sum_t binom(t+s, s) [μ - s r + t v]`, with
/// `[x] = A^x / x!` and `t` measured from the representative `μ - s r`.
pub fn tilde_f_poly(mu: &ShiftVector6) -> Result<QPoly> {
    check_valid(mu)?;
    let mut out = QPoly::zero(NV);
    for s in 0..=mu.0[0].max(0) {
        let lambda = mu.add_scaled(&R_VEC, -s);
        let sign = if s % 2 == 0 { Rational::one() } else { -Rational::one() };
        for (x, t) in offsets(&lambda) {
            let w = binom_poly(t + s, s as u32) * &sign
                / Rational::from_integer(factorial_product(x.iter().copied()));
            out.add_term(Monomial::new(x), w);
        }
    }
    Ok(out)
}

/// `𝓕^s_λ(1) = sum_t binom(t+s, s) / (λ + t v)!`.
pub fn weighted_bgc_value(lambda: &ShiftVector6, s: u32) -> Rational {
    offsets(lambda).fold(Rational::zero(), |acc, (x, t)| {
        acc + binom_poly(t + i64::from(s), s) / Rational::from_integer(factorial_product(x.iter().copied()))
    })
}

/// `𝓕_μ(1)`.
pub fn bgc_value(mu: &ShiftVector6) -> Rational {
    gamma_value(&GammaSeriesSpec::bgc(mu), &SignVector::all_plus(NV))
}

/// `μ, μ - r, μ - 2r, ...` up to the first coset with empty support.
pub fn family(mu: &ShiftVector6) -> Vec<ShiftVector6> {
    (0..)
        .map(|s| mu.add_scaled(&R_VEC, -s))
        .take_while(|l| !GammaSeriesSpec::bgc(l).support_points().is_empty())
        .collect()
}

/// Fischer product: `sum_α f_α h_α α!`.
pub fn scalar_product<C: Scalar>(f: &SparsePoly<C>, h: &SparsePoly<C>) -> C {
    let (small, large) = if f.len() <= h.len() { (f, h) } else { (h, f) };
    small.terms().fold(C::zero(), |acc, (m, c)| match large.get(m) {
        Some(d) => acc + c.clone() * d.clone() * C::from_bigint(factorial_product(m.exps().iter().copied())),
        None => acc,
    })
}

/// `E_ij A_X`: replace column `j` by `i` and re-sort, with the sign of the sort.
pub fn e_on_minor(i: usize, j: usize, x: Minor) -> Option<(Minor, i64)> {
    let cols = x.columns();
    let pos = cols.iter().position(|&c| c == j)?;
    if i == j {
        return Some((x, 1));
    }
    if cols.contains(&i) {
        return None;
    }
    let mut new: Vec<usize> = cols.to_vec();
    new[pos] = i;
    let mut sign = 1;
    for a in 0..new.len() {
        for b in a + 1..new.len() {
            if new[a] > new[b] {
                sign = -sign;
            }
        }
    }
    new.sort_unstable();
    Minor::from_columns(&new).map(|m| (m, sign))
}

/// Leibniz extension of `E_ij` to polynomials in the six `A_X`.
pub fn act_e<C: Scalar>(i: usize, j: usize, f: &SparsePoly<C>) -> SparsePoly<C> {
    assert!((1..=3).contains(&i) && (1..=3).contains(&j), "E indices are 1..=3");
    let mut out = SparsePoly::zero(f.nvars());
    for x in Minor::ALL {
        if let Some((y, sign)) = e_on_minor(i, j, x) {
            let d = f.derivative(x.index());
            if d.is_zero() {
                continue;
            }
            let t = &SparsePoly::var(NV, y.index()) * &d;
            out.add_scaled(&t, &C::from_i64(sign));
        }
    }
    out
}

fn d2<C: Scalar>(f: &SparsePoly<C>, a: Minor, b: Minor) -> SparsePoly<C> {
    f.derivative(a.index()).derivative(b.index())
}

/// GKZ box operator of B_GC: `∂1∂23 - ∂2∂13`.
pub fn gkz_box<C: Scalar>(f: &SparsePoly<C>) -> SparsePoly<C> {
    &d2(f, Minor::X1, Minor::X23) - &d2(f, Minor::X2, Minor::X13)
}

/// `∂1∂23 - ∂2∂13 + ∂3∂12`.
pub fn agkz_apply<C: Scalar>(f: &SparsePoly<C>) -> SparsePoly<C> {
    &gkz_box(f) + &d2(f, Minor::X3, Minor::X12)
}

fn pad(mut v: Vec<Rational>, s_max: usize) -> Vec<Rational> {
    v.truncate(s_max + 1);
    v.resize(s_max + 1, Rational::zero());
    v
}

/// `d_s` in `F̃_μ = sum_s d_s F_{μ - s r}`, by a triangular solve against the
/// Gram matrix `<F_{μ-sr}, 𝓕_{μ-kr}>`. Entries past the family are 0.
pub fn d_coeffs(mu: &ShiftVector6, s_max: usize) -> Result<Vec<Rational>> {
    let fam = family(mu);
    let n = fam.len().min(s_max + 1);
    let tilde = tilde_f_poly(mu)?;
    let bigs: Vec<QPoly> = fam[..n].iter().map(big_f_poly).collect::<Result<_>>()?;
    let mut d: Vec<Rational> = Vec::with_capacity(n);
    for k in 0..n {
        let g: QPoly = gamma_poly(&GammaSeriesSpec::bgc(&fam[k]));
        let mut rhs = scalar_product(&tilde, &g);
        for (s, ds) in d.iter().enumerate() {
            rhs -= scalar_product(&bigs[s], &g) * ds;
        }
        let diag = scalar_product(&bigs[k], &g);
        if diag.is_zero() {
            return Err(Error::Inconsistent(format!("zero Gram diagonal at {}", fam[k])));
        }
        d.push(rhs / diag);
    }
    Ok(pad(d, s_max))
}

/// Closed form `d_s = (-1)^s 𝓕^s_{μ-sr}(1) / 𝓕_{μ-sr}(1)`.
pub fn d_coeffs_ratio(mu: &ShiftVector6, s_max: usize) -> Vec<Rational> {
    let fam = family(mu);
    let d = fam
        .iter()
        .take(s_max + 1)
        .enumerate()
        .map(|(s, l)| {
            let v = weighted_bgc_value(l, s as u32) / bgc_value(l);
            if s % 2 == 0 { v } else { -v }
        })
        .collect();
    pad(d, s_max)
}

/// `D[j][k] = d_{k-j}(μ - j r)` over the family of `μ`; row `j` expresses
/// `F̃_{μ-jr}` in the `F` basis. Upper unitriangular.
pub fn d_matrix(mu: &ShiftVector6) -> Vec<Vec<Rational>> {
    let fam = family(mu);
    let n = fam.len();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (j, lam) in fam.iter().enumerate() {
        for (s, d) in d_coeffs_ratio(lam, n - 1 - j).into_iter().enumerate() {
            m[j][j + s] = d;
        }
    }
    m
}

/// `f_s` in `F_μ = sum_s f_s F̃_{μ - s r}`: the first row of `D^{-1}`.
pub fn f_coeffs(mu: &ShiftVector6, s_max: usize) -> Result<Vec<Rational>> {
    check_valid(mu)?;
    let d = d_matrix(mu);
    Ok(pad(first_row_of_inverse(&d), s_max))
}

pub fn first_row_of_inverse(d: &[Vec<Rational>]) -> Vec<Rational> {
    let n = d.len();
    let mut f: Vec<Rational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut v = if k == 0 { Rational::one() } else { Rational::zero() };
        for (j, fj) in f.iter().enumerate() {
            v -= fj * &d[j][k];
        }
        f.push(v);
    }
    f
}

/// Full inverse of an upper unitriangular matrix.
pub fn inverse_unitriangular(d: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = d.len();
    let mut inv = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        inv[i][i] = Rational::one();
        for k in i + 1..n {
            let mut v = Rational::zero();
            for j in i..k {
                v -= &inv[i][j] * &d[j][k];
            }
            inv[i][k] = v;
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{pattern_shift_vector, patterns_of, HighestWeight};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn sv(x: [i64; 6]) -> ShiftVector6 {
        ShiftVector6(x)
    }

    fn all_shifts(max_m1: i64) -> Vec<ShiftVector6> {
        let mut out = Vec::new();
        for m1 in 1..=max_m1 {
            for m2 in 0..=m1 {
                for p in patterns_of(HighestWeight::new(m1, m2, 0).unwrap()) {
                    out.push(pattern_shift_vector(&p).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn t_coeff_examples() {
        let mu = sv([0, 1, 1, 0, 0, 0]); // c = 2
        assert_eq!(t_coeff(&mu, 0).unwrap(), q(1, 1));
        assert_eq!(t_coeff(&mu, 1).unwrap(), q(1, 4));
        assert_eq!(t_coeff(&sv([0; 6]), 2).unwrap(), q(1, 6));
        assert_eq!(t_coeff(&sv([0, -2, 0, 0, 0, 0]), 1).unwrap_err(), Error::DegenerateShift(1));
    }

    #[test]
    fn big_f_examples() {
        let f = big_f_poly(&sv([0, 1, 0, 0, 0, 0])).unwrap();
        assert_eq!(f, QPoly::var(6, Minor::X1.index()));
        let f = big_f_poly(&sv([0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(f, QPoly::var(6, Minor::X12.index()));
        assert!(big_f_poly(&sv([-1, 0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn big_f_two_layers() {
        let mu = sv([1, 1, 0, 0, 0, 1]);
        let f = big_f_poly(&mu).unwrap();
        let g0: QPoly = gamma_poly(&GammaSeriesSpec::bgc(&mu));
        let g1: QPoly = gamma_poly(&GammaSeriesSpec::bgc(&sv([0, 1, 0, 0, 0, 0])));
        let c1 = zeta_coeff(&mu, 1).unwrap();
        assert_eq!(c1, -t_coeff(&mu, 1).unwrap());
        let expect = &g0 + &(&zeta_poly() * &g1).scale(&c1);
        assert_eq!(f, expect);
        assert!(agkz_apply(&f).is_zero());
    }

    #[test]
    fn uncorrected_coefficients_fail_annihilation() {
        // Using t_1 itself as the ζ coefficient leaves a residual.
        let mu = sv([1, 1, 0, 0, 0, 1]);
        let g0: QPoly = gamma_poly(&GammaSeriesSpec::bgc(&mu));
        let g1: QPoly = gamma_poly(&GammaSeriesSpec::bgc(&sv([0, 1, 0, 0, 0, 0])));
        let wrong = &g0 + &(&zeta_poly() * &g1).scale(&t_coeff(&mu, 1).unwrap());
        assert!(!agkz_apply(&wrong).is_zero());
    }

    #[test]
    fn annihilation_small() {
        for mu in all_shifts(3) {
            assert!(agkz_apply(&big_f_poly(&mu).unwrap()).is_zero(), "F {mu}");
            assert!(agkz_apply(&tilde_f_poly(&mu).unwrap()).is_zero(), "F~ {mu}");
        }
    }

    #[test]
    fn tilde_f_examples() {
        assert_eq!(tilde_f_poly(&sv([0, 1, 0, 0, 0, 0])).unwrap(), QPoly::var(6, 1));
        assert_eq!(tilde_f_poly(&sv([0, 0, 0, 0, 0, 1])).unwrap(), QPoly::var(6, 5));
        let mu = sv([0, 1, 1, 1, 1, 0]);
        let t = tilde_f_poly(&mu).unwrap();
        assert_eq!(t, gamma_poly(&GammaSeriesSpec::bgc(&mu)));
    }

    #[test]
    fn scalar_product_examples() {
        let a1 = QPoly::var(6, 1);
        let a2 = QPoly::var(6, 2);
        let a13 = QPoly::var(6, 3);
        assert_eq!(scalar_product(&a1.pow(2), &a1.pow(2)), q(2, 1));
        assert_eq!(scalar_product(&(&a1 * &a2), &(&a1 * &a13)), q(0, 1));
        assert_eq!(scalar_product(&a1, &a1.scale(&q(2, 1))), q(2, 1));
    }

    #[test]
    fn e_action_examples() {
        let v = |m: Minor| QPoly::var(6, m.index());
        assert_eq!(act_e(1, 2, &v(Minor::X2)), v(Minor::X1));
        assert!(act_e(1, 2, &v(Minor::X13)).is_zero());
        assert_eq!(act_e(2, 3, &v(Minor::X13)), v(Minor::X12));
        assert_eq!(act_e(3, 1, &v(Minor::X12)), -&v(Minor::X23));
    }

    #[test]
    fn agkz_examples() {
        let v = |m: Minor| QPoly::var(6, m.index());
        let p = &v(Minor::X1) * &v(Minor::X23);
        assert!(agkz_apply(&p).is_one());
        // each of the three terms contributes +1
        let p = &(&p - &(&v(Minor::X2) * &v(Minor::X13))) + &(&v(Minor::X3) * &v(Minor::X12));
        assert_eq!(agkz_apply(&p), QPoly::constant(6, q(3, 1)));
    }

    #[test]
    fn highest_vector_and_weights() {
        for m1 in 1..=3 {
            for m2 in 0..=m1 {
                let w = HighestWeight::new(m1, m2, 0).unwrap();
                for p in patterns_of(w) {
                    let mu = pattern_shift_vector(&p).unwrap();
                    let f = big_f_poly(&mu).unwrap();
                    let wt = crate::pattern::weight_of_pattern(&p);
                    for i in 1..=3 {
                        assert_eq!(act_e(i, i, &f), f.scale(&q(wt[i - 1], 1)));
                    }
                }
                let top = pattern_shift_vector(&patterns_of(w)[0]).unwrap();
                let f = big_f_poly(&top).unwrap();
                for (i, j) in [(1, 2), (2, 3), (1, 3)] {
                    assert!(act_e(i, j, &f).is_zero());
                }
                // a1^(m1-m2) a12^m2 / (m1-m2)! m2!
                let mut e = vec![0u32; 6];
                e[Minor::X1.index()] = (m1 - m2) as u32;
                e[Minor::X12.index()] = m2 as u32;
                let c = Rational::one() / Rational::from_integer(factorial_product(e.iter().copied()));
                assert_eq!(f, QPoly::monomial(Monomial::new(e), c));
            }
        }
    }

    #[test]
    fn d_and_f_examples() {
        let mu = sv([0, 1, 0, 0, 0, 0]);
        assert_eq!(d_coeffs(&mu, 3).unwrap(), vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)]);
        assert_eq!(f_coeffs(&mu, 2).unwrap(), vec![q(1, 1), q(0, 1), q(0, 1)]);
        for mu in all_shifts(3) {
            let d = d_coeffs(&mu, 4).unwrap();
            assert_eq!(d[0], q(1, 1));
            assert_eq!(d, d_coeffs_ratio(&mu, 4), "{mu}");
        }
    }

    #[test]
    fn f_reconstructs_big_f() {
        for mu in all_shifts(3) {
            let fam = family(&mu);
            let f = f_coeffs(&mu, fam.len() - 1).unwrap();
            let mut acc = QPoly::zero(6);
            for (fk, lam) in f.iter().zip(&fam) {
                acc.add_scaled(&tilde_f_poly(lam).unwrap(), fk);
            }
            assert_eq!(acc, big_f_poly(&mu).unwrap(), "{mu}");
        }
    }

    #[test]
    fn two_step_family_inverse() {
        // [2,1,0] with (k1,k2) = (1,1) has family length 2
        let mu = sv([1, 0, 0, 0, 0, 1]);
        assert_eq!(family(&mu).len(), 2);
        let d = d_matrix(&mu);
        let f = f_coeffs(&mu, 1).unwrap();
        assert_eq!(f[1], -d[0][1].clone());
        let inv = inverse_unitriangular(&d);
        assert_eq!(inv[0], f);
    }

    #[test]
    fn normalization_constants() {
        let mu = sv([1, 1, 0, 0, 0, 1]); // c = 1
        assert_eq!(normalization_constant(&mu, Normalization::SummedInfinite).unwrap(), q(7, 4));
        assert_eq!(normalization_constant(&mu, Normalization::SummedTruncated).unwrap(), q(4, 3));
        let f = big_f_poly_with(&mu, Normalization::SummedTruncated).unwrap();
        assert_eq!(f.scale(&q(4, 3)), big_f_poly(&mu).unwrap());
    }
}
