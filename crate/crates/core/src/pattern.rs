//! Highest weights, Gelfand-Tsetlin patterns and their shift vectors.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{lattice_solve, IntegerLattice};

/// Dominant gl(3) weight `[m1, m2, m3]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight {
    pub m: [i64; 3],
}

impl HighestWeight {
    pub fn new(m1: i64, m2: i64, m3: i64) -> Result<Self> {
        if m1 >= m2 && m2 >= m3 {
            Ok(HighestWeight { m: [m1, m2, m3] })
        } else {
            Err(Error::NotDominant(m1, m2, m3))
        }
    }

    /// Number of GT patterns (the dimension of the irreducible).
    pub fn dimension(&self) -> usize {
        let [a, b, c] = self.m;
        ((a - b + 1) * (b - c + 1) * (a - c + 2) / 2) as usize
    }

    pub fn patterns(&self) -> Vec<GtPattern> {
        patterns_of(*self)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.m[0], self.m[1], self.m[2])
    }
}

/// Gelfand-Tsetlin pattern: top row, middle row `(k1, k2)` and bottom `σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GtPattern {
    pub top: [i64; 3],
    pub mid: [i64; 2],
    pub bot: i64,
}

impl GtPattern {
    pub fn new(top: [i64; 3], mid: [i64; 2], bot: i64) -> Result<Self> {
        let p = GtPattern { top, mid, bot };
        if p.is_valid() {
            Ok(p)
        } else {
            Err(Error::InvalidPattern(p.to_string()))
        }
    }

    pub fn is_valid(&self) -> bool {
        let [m1, m2, m3] = self.top;
        let [k1, k2] = self.mid;
        m1 >= k1 && k1 >= m2 && m2 >= k2 && k2 >= m3 && k1 >= self.bot && self.bot >= k2
    }

    pub fn highest_weight(&self) -> HighestWeight {
        HighestWeight { m: self.top }
    }

    /// `(k1, k2, σ)`
    pub fn lower(&self) -> [i64; 3] {
        [self.mid[0], self.mid[1], self.bot]
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{}|{},{}|{}]",
            self.top[0], self.top[1], self.top[2], self.mid[0], self.mid[1], self.bot
        )
    }
}

/// The six minors of one letter, in shift-vector order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Minor {
    X3,
    X1,
    X2,
    X13,
    X23,
    X12,
}

impl Minor {
    pub const ALL: [Minor; 6] = [Minor::X3, Minor::X1, Minor::X2, Minor::X13, Minor::X23, Minor::X12];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Column set, 1-based and increasing.
    pub fn columns(self) -> &'static [usize] {
        match self {
            Minor::X3 => &[3],
            Minor::X1 => &[1],
            Minor::X2 => &[2],
            Minor::X13 => &[1, 3],
            Minor::X23 => &[2, 3],
            Minor::X12 => &[1, 2],
        }
    }

    pub fn from_columns(cols: &[usize]) -> Option<Minor> {
        Minor::ALL.into_iter().find(|m| m.columns() == cols)
    }

    pub fn is_single(self) -> bool {
        self.columns().len() == 1
    }

    pub fn label(self) -> &'static str {
        match self {
            Minor::X3 => "3",
            Minor::X1 => "1",
            Minor::X2 => "2",
            Minor::X13 => "13",
            Minor::X23 => "23",
            Minor::X12 => "12",
        }
    }
}

/// Exponent vector over `(x3, x1, x2, x13, x23, x12)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftVector6(pub [i64; 6]);

/// Generator of B_GC: `e1 + e23 - e2 - e13`.
pub const V_GEN: ShiftVector6 = ShiftVector6([0, 1, -1, -1, 1, 0]);
/// `e3 + e12 - e1 - e23`; moving down the basis order.
pub const R_VEC: ShiftVector6 = ShiftVector6([1, -1, 0, 0, -1, 1]);

impl ShiftVector6 {
    pub fn add(&self, other: &ShiftVector6) -> ShiftVector6 {
        self.add_scaled(other, 1)
    }

    pub fn add_scaled(&self, other: &ShiftVector6, k: i64) -> ShiftVector6 {
        let mut out = self.0;
        for (o, x) in out.iter_mut().zip(other.0) {
            *o += k * x;
        }
        ShiftVector6(out)
    }

    pub fn sub(&self, other: &ShiftVector6) -> ShiftVector6 {
        self.add_scaled(other, -1)
    }

    /// Per-column weights `weight_i = sum over minors X containing i of mu_X`.
    pub fn weight(&self) -> [i64; 3] {
        let mut w = [0i64; 3];
        for m in Minor::ALL {
            for &c in m.columns() {
                w[c - 1] += self.0[m.index()];
            }
        }
        w
    }

    /// Image in `Z^6 / Z v`: `(x3, x1 - x23, x2 + x23, x13 + x23, x12)`.
    pub fn quotient(&self) -> [i64; 5] {
        let x = self.0;
        [x[0], x[1] - x[4], x[2] + x[4], x[3] + x[4], x[5]]
    }
}

impl fmt::Display for ShiftVector6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn bgc_lattice() -> IntegerLattice {
    IntegerLattice::new(6, vec![V_GEN.0.to_vec()]).expect("B_GC basis is independent")
}

/// `(m1-k1, σ-m2, k1-σ, m2-k2, 0, k2)`.
pub fn pattern_shift_vector(p: &GtPattern) -> Result<ShiftVector6> {
    if !p.is_valid() {
        return Err(Error::InvalidPattern(p.to_string()));
    }
    let [m1, m2, m3] = p.top;
    if m3 != 0 {
        return Err(Error::NonzeroM3(m3));
    }
    let [k1, k2] = p.mid;
    let s = p.bot;
    Ok(ShiftVector6([m1 - k1, s - m2, k1 - s, m2 - k2, 0, k2]))
}

/// Standard GT weight `(σ, k1+k2-σ, m1+m2+m3-k1-k2)`.
pub fn weight_of_pattern(p: &GtPattern) -> [i64; 3] {
    let [k1, k2] = p.mid;
    [p.bot, k1 + k2 - p.bot, p.top.iter().sum::<i64>() - k1 - k2]
}

/// Inverse of [`pattern_shift_vector`] on cosets mod B_GC: the pattern (with
/// `m3 = 0`) whose shift vector is congruent to `mu`, if there is one.
pub fn pattern_from_shift(mu: &ShiftVector6) -> Option<GtPattern> {
    let y = mu.add_scaled(&V_GEN, -mu.0[4]).0;
    let k2 = y[5];
    let m2 = y[3] + k2;
    let s = y[1] + m2;
    let k1 = y[2] + s;
    let m1 = y[0] + k1;
    let p = GtPattern { top: [m1, m2, 0], mid: [k1, k2], bot: s };
    p.is_valid().then_some(p)
}

pub fn same_coset(mu: &ShiftVector6, nu: &ShiftVector6) -> bool {
    lattice_solve(&bgc_lattice(), &mu.sub(nu).0).is_some()
}

/// True iff `mu = nu - s r (mod B_GC)` for some integer `s >= 0`.
pub fn coset_leq(mu: &ShiftVector6, nu: &ShiftVector6) -> bool {
    let l = IntegerLattice::new(6, vec![R_VEC.0.to_vec(), V_GEN.0.to_vec()])
        .expect("r and v are independent");
    // nu - mu = s r + t v
    match lattice_solve(&l, &nu.sub(mu).0) {
        Some(c) => c[0] >= 0,
        None => false,
    }
}

/// All patterns of a dominant weight, ordered by `(k1, k2, σ)` descending so
/// the highest-weight pattern comes first.
pub fn patterns_of(w: HighestWeight) -> Vec<GtPattern> {
    let [m1, m2, m3] = w.m;
    let mut out = Vec::with_capacity(w.dimension());
    for k1 in (m2..=m1).rev() {
        for k2 in (m3..=m2).rev() {
            for s in (k2..=k1).rev() {
                out.push(GtPattern { top: w.m, mid: [k1, k2], bot: s });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(top: [i64; 3], k1: i64, k2: i64, s: i64) -> GtPattern {
        GtPattern::new(top, [k1, k2], s).unwrap()
    }

    #[test]
    fn shift_vector_examples() {
        let sv = |p| pattern_shift_vector(&p).unwrap().0;
        assert_eq!(sv(pat([2, 1, 0], 2, 1, 2)), [0, 1, 0, 0, 0, 1]);
        assert_eq!(sv(pat([1, 0, 0], 1, 0, 1)), [0, 1, 0, 0, 0, 0]);
        assert_eq!(sv(pat([1, 1, 0], 1, 1, 1)), [0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn nonzero_m3_rejected() {
        let p = pat([2, 1, 1], 2, 1, 1);
        assert_eq!(pattern_shift_vector(&p).unwrap_err(), Error::NonzeroM3(1));
    }

    #[test]
    fn weights() {
        assert_eq!(weight_of_pattern(&pat([2, 1, 0], 2, 1, 2)), [2, 1, 0]);
        assert_eq!(weight_of_pattern(&pat([1, 0, 0], 1, 0, 0)), [0, 1, 0]);
        assert_eq!(weight_of_pattern(&pat([2, 2, 0], 2, 0, 0)), [0, 2, 2]);
    }

    #[test]
    fn invalid_patterns_rejected() {
        assert!(GtPattern::new([2, 1, 0], [3, 1], 2).is_err());
        assert!(GtPattern::new([2, 1, 0], [2, 1], 0).is_err());
        assert!(HighestWeight::new(1, 2, 0).is_err());
    }

    #[test]
    fn dimensions_match_enumeration() {
        for (a, b, c) in [(1, 0, 0), (1, 1, 0), (2, 1, 0), (3, 1, 0), (2, 2, 0), (3, 2, 1), (4, 0, 0)] {
            let w = HighestWeight::new(a, b, c).unwrap();
            assert_eq!(w.patterns().len(), w.dimension());
        }
        assert_eq!(HighestWeight::new(2, 1, 0).unwrap().dimension(), 8);
    }

    #[test]
    fn shift_weight_matches_pattern_weight() {
        for (a, b) in [(1, 0), (2, 1), (3, 1), (3, 3), (4, 2)] {
            for p in patterns_of(HighestWeight::new(a, b, 0).unwrap()) {
                let mu = pattern_shift_vector(&p).unwrap();
                assert_eq!(mu.weight(), weight_of_pattern(&p), "{p}");
            }
        }
    }

    #[test]
    fn inverse_from_coset() {
        for (a, b) in [(1, 0), (2, 1), (3, 2), (4, 4)] {
            for p in patterns_of(HighestWeight::new(a, b, 0).unwrap()) {
                let mu = pattern_shift_vector(&p).unwrap();
                assert_eq!(pattern_from_shift(&mu.add_scaled(&V_GEN, 3)), Some(p));
                assert_eq!(pattern_from_shift(&mu.add_scaled(&V_GEN, -2)), Some(p));
            }
        }
        assert_eq!(pattern_from_shift(&ShiftVector6([-1, 0, 0, 0, 0, 0])), None);
    }

    #[test]
    fn r_moves_k1_up_and_k2_down() {
        let p = pat([2, 1, 0], 1, 1, 1);
        let mu = pattern_shift_vector(&p).unwrap().sub(&R_VEC);
        assert_eq!(pattern_from_shift(&mu), Some(pat([2, 1, 0], 2, 0, 1)));
    }

    #[test]
    fn coset_order_examples() {
        let mu = ShiftVector6([1, 1, 0, 1, 0, 1]);
        assert!(coset_leq(&mu, &mu));
        assert!(coset_leq(&mu.sub(&R_VEC), &mu));
        assert!(!coset_leq(&mu.add(&R_VEC), &mu));
        assert!(coset_leq(&mu.add_scaled(&V_GEN, 5), &mu));
        assert!(!coset_leq(&ShiftVector6([0, 1, 0, 0, 0, 0]), &ShiftVector6([0, 0, 0, 0, 0, 1])));
    }
}
