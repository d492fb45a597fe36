//! The invariant `g` of a multiplicity label and its 30-variable alphabet.
//!
//! Expanding each determinant factor of `g` gives monomials in 30 symbols
//! `Z`, each a product of one minor per letter with a sign. Exponent vectors
//! over `Z` project to shift vectors of the three letters.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_traits::One;

use crate::error::{Error, Result};
use crate::gamma::SignVector;
use crate::lattice::{Hermite, IntegerLattice};
use crate::pattern::{HighestWeight, Minor, ShiftVector6, R_VEC, V_GEN};
use crate::poly::{Monomial, SparsePoly};
use crate::scalar::factorial;
use crate::{QPoly, Rational};

pub const NZ: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        ['a', 'b', 'c'][self.index()]
    }
}

/// Determinant factors of `g`, in alphabet order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Determinant {
    Aac,
    Acc,
    Bbc,
    Bcc,
    Aab,
    Abb,
    Abc,
    Aabbcc,
}

impl Determinant {
    pub const ALL: [Determinant; 8] = [
        Determinant::Aac,
        Determinant::Acc,
        Determinant::Bbc,
        Determinant::Bcc,
        Determinant::Aab,
        Determinant::Abb,
        Determinant::Abc,
        Determinant::Aabbcc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Determinant::Aac => "aac",
            Determinant::Acc => "acc",
            Determinant::Bbc => "bbc",
            Determinant::Bcc => "bcc",
            Determinant::Aab => "aab",
            Determinant::Abb => "abb",
            Determinant::Abc => "abc",
            Determinant::Aabbcc => "aabbcc",
        }
    }

    /// Indices of this determinant's Z-variables.
    pub fn range(self) -> std::ops::Range<usize> {
        match self {
            Determinant::Abc => 18..24,
            Determinant::Aabbcc => 24..30,
            d => {
                let i = d as usize * 3;
                i..i + 3
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZVariable {
    pub index: usize,
    pub name: String,
    pub det: Determinant,
    /// Minor of letters a, b, c carried by this symbol.
    pub content: [Option<Minor>; 3],
    pub sign: i8,
}

fn complement(i: usize) -> Minor {
    let cols: Vec<usize> = (1..=3).filter(|&k| k != i).collect();
    Minor::from_columns(&cols).expect("two-column minor")
}

fn single(i: usize) -> Minor {
    Minor::from_columns(&[i]).expect("one-column minor")
}

fn perm_sign(p: [usize; 3]) -> i8 {
    let inv = (0..3)
        .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

const PERMS: [[usize; 3]; 6] = [[1, 2, 3], [2, 3, 1], [3, 1, 2], [2, 1, 3], [1, 3, 2], [3, 2, 1]];

fn build_alphabet() -> Vec<ZVariable> {
    let mut out = Vec::with_capacity(NZ);
    let mut push = |det: Determinant, content: [Option<Minor>; 3], order: &[Letter], sign: i8| {
        let name: String = order
            .iter()
            .map(|l| format!("{}{}", l.symbol(), content[l.index()].unwrap().label()))
            .collect();
        out.push(ZVariable { index: out.len(), name: format!("[{name}]"), det, content, sign });
    };
    // det(s; d; d) expanded along the single row: s1 d23 - s2 d13 + s3 d12
    let two = [
        (Determinant::Aac, Letter::C, Letter::A),
        (Determinant::Acc, Letter::A, Letter::C),
        (Determinant::Bbc, Letter::C, Letter::B),
        (Determinant::Bcc, Letter::B, Letter::C),
        (Determinant::Aab, Letter::B, Letter::A),
        (Determinant::Abb, Letter::A, Letter::B),
    ];
    for (det, s, d) in two {
        for (i, sign) in [(1, 1), (2, -1), (3, 1)] {
            let mut content = [None; 3];
            content[s.index()] = Some(single(i));
            content[d.index()] = Some(complement(i));
            push(det, content, &[s, d], sign);
        }
    }
    for p in PERMS {
        push(Determinant::Abc, [Some(single(p[0])), Some(single(p[1])), Some(single(p[2]))], &Letter::ALL, perm_sign(p));
    }
    // rows ã = (a23, -a13, a12): the middle sign flips each term once
    for p in PERMS {
        let content = [Some(complement(p[0])), Some(complement(p[1])), Some(complement(p[2]))];
        push(Determinant::Aabbcc, content, &Letter::ALL, -perm_sign(p));
    }
    out
}

pub fn z_alphabet() -> &'static [ZVariable] {
    static TABLE: OnceLock<Vec<ZVariable>> = OnceLock::new();
    TABLE.get_or_init(build_alphabet)
}

/// Minor content of every Z-variable, for the weighted Γ-series grading.
pub fn content_table() -> &'static [[Option<Minor>; 3]] {
    static TABLE: OnceLock<Vec<[Option<Minor>; 3]>> = OnceLock::new();
    TABLE.get_or_init(|| z_alphabet().iter().map(|z| z.content).collect())
}

/// Index of a Z-variable by its bracket name, e.g. `"[a1c23]"`.
pub fn z_index(name: &str) -> Option<usize> {
    z_alphabet().iter().position(|z| z.name == name)
}

pub fn sign_vector() -> SignVector {
    SignVector::new(z_alphabet().iter().map(|z| z.sign).collect()).expect("signs are ±1")
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExpVector30(pub [i64; NZ]);

impl ExpVector30 {
    pub fn zero() -> Self {
        ExpVector30([0; NZ])
    }

    pub fn unit(i: usize) -> Self {
        let mut v = [0; NZ];
        v[i] = 1;
        ExpVector30(v)
    }

    /// Sum of `coeff * e_name`; panics on an unknown name.
    pub fn from_named(terms: &[(i64, &str)]) -> Self {
        let mut v = Self::zero();
        for &(c, name) in terms {
            let i = z_index(name).unwrap_or_else(|| panic!("unknown Z-variable {name}"));
            v.0[i] += c;
        }
        v
    }

    pub fn add_scaled(&self, other: &ExpVector30, k: i64) -> ExpVector30 {
        let mut out = self.0;
        for (o, x) in out.iter_mut().zip(other.0) {
            *o += k * x;
        }
        ExpVector30(out)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn block_sum(&self, det: Determinant) -> i64 {
        self.0[det.range()].iter().sum()
    }
}

impl fmt::Display for ExpVector30 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (z, &c) in z_alphabet().iter().zip(&self.0) {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}e{}", z.name)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn projector(letter: Letter, v: &ExpVector30) -> ShiftVector6 {
    let mut out = [0i64; 6];
    for (z, &e) in z_alphabet().iter().zip(&v.0) {
        if let Some(m) = z.content[letter.index()] {
            out[m.index()] += e;
        }
    }
    ShiftVector6(out)
}

/// Exponents of the eight determinant factors of `g`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplicityLabel {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
    pub delta: u32,
    pub omega: u32,
    pub phi: u32,
    pub psi: u32,
    pub theta: u32,
}

impl MultiplicityLabel {
    /// From `(α, β, γ, δ, ω, φ, ψ, θ)`.
    pub fn from_array(a: [u32; 8]) -> Self {
        let [alpha, beta, gamma, delta, omega, phi, psi, theta] = a;
        MultiplicityLabel { alpha, beta, gamma, delta, omega, phi, psi, theta }
    }

    pub fn to_array(&self) -> [u32; 8] {
        [self.alpha, self.beta, self.gamma, self.delta, self.omega, self.phi, self.psi, self.theta]
    }

    pub fn exponent(&self, det: Determinant) -> u32 {
        match det {
            Determinant::Aac => self.gamma,
            Determinant::Acc => self.alpha,
            Determinant::Bbc => self.delta,
            Determinant::Bcc => self.beta,
            Determinant::Aab => self.psi,
            Determinant::Abb => self.phi,
            Determinant::Abc => self.omega,
            Determinant::Aabbcc => self.theta,
        }
    }

    /// The weight `U` whose copy in `V ⊗ W` this label selects.
    pub fn target(&self) -> HighestWeight {
        let [a, b, g, d, w, f, p, t] = self.to_array().map(i64::from);
        HighestWeight { m: [a + b + g + d + w + f + p + 2 * t, g + d + w + f + p + t, f + p + t] }
    }

    /// Top row `[M1-M3, M1-M2, 0]` carried by the third letter.
    pub fn c_slot(&self) -> HighestWeight {
        let [m1, m2, m3] = self.target().m;
        HighestWeight { m: [m1 - m3, m1 - m2, 0] }
    }

    /// Per-letter weight bookkeeping: `(m1 - m2, m2)` for a and `(m1' - m2', m2')` for b.
    pub fn letter_rows(&self) -> ([i64; 2], [i64; 2]) {
        let [a, b, g, d, w, f, p, t] = self.to_array().map(i64::from);
        ([a + w + f, g + t + p], [b + w + p, d + f + t])
    }

    pub fn validate(&self, v: &HighestWeight, w: &HighestWeight) -> Result<()> {
        let (ra, rb) = self.letter_rows();
        let ok = v.m[2] == 0
            && w.m[2] == 0
            && self.omega * self.theta == 0
            && ra == [v.m[0] - v.m[1], v.m[1]]
            && rb == [w.m[0] - w.m[1], w.m[1]];
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLabel(format!("{self} for {v} ⊗ {w}")))
        }
    }

    pub fn lattice_kind(&self) -> LatticeKind {
        if self.omega > 0 {
            LatticeKind::Second
        } else {
            LatticeKind::First
        }
    }

    pub fn active(&self) -> Vec<Determinant> {
        Determinant::ALL.into_iter().filter(|&d| self.exponent(d) > 0).collect()
    }
}

impl fmt::Display for MultiplicityLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.to_array().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Every label for `V ⊗ W` (any target), ordered descending.
pub fn labels_for(v: &HighestWeight, w: &HighestWeight) -> Vec<MultiplicityLabel> {
    if v.m[2] != 0 || w.m[2] != 0 {
        return Vec::new();
    }
    let a1 = v.m[0] - v.m[1];
    let a2 = v.m[1];
    let b1 = w.m[0] - w.m[1];
    let b2 = w.m[1];
    let mut out = Vec::new();
    for omega in 0..=a1.min(b1) {
        for theta in 0..=a2.min(b2) {
            if omega * theta != 0 {
                continue;
            }
            for phi in 0..=(a1 - omega).min(b2 - theta) {
                for psi in 0..=(a2 - theta).min(b1 - omega) {
                    let alpha = a1 - omega - phi;
                    let gamma = a2 - theta - psi;
                    let beta = b1 - omega - psi;
                    let delta = b2 - phi - theta;
                    if alpha < 0 || gamma < 0 || beta < 0 || delta < 0 {
                        continue;
                    }
                    let l = [alpha, beta, gamma, delta, omega, phi, psi, theta].map(|x| x as u32);
                    out.push(MultiplicityLabel::from_array(l));
                }
            }
        }
    }
    out.sort_by_key(|l| std::cmp::Reverse(l.to_array()));
    out
}

pub fn multiplicity_basis(v: &HighestWeight, w: &HighestWeight, u: &HighestWeight) -> Vec<MultiplicityLabel> {
    labels_for(v, w).into_iter().filter(|l| l.target() == *u).collect()
}

/// Irreducible constituents of `V ⊗ W`, each once, in descending order.
pub fn decomposition(v: &HighestWeight, w: &HighestWeight) -> Vec<HighestWeight> {
    let set: BTreeSet<HighestWeight> = labels_for(v, w).iter().map(|l| l.target()).collect();
    set.into_iter().rev().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    /// Cycles pairing a two-letter determinant with `(aabbcc)`.
    First,
    /// Cycles pairing a two-letter determinant with `(abc)`.
    Second,
}

impl LatticeKind {
    pub fn name(self) -> &'static str {
        match self {
            LatticeKind::First => "B'1",
            LatticeKind::Second => "B''1",
        }
    }

    fn partner(self) -> Determinant {
        match self {
            LatticeKind::First => Determinant::Aabbcc,
            LatticeKind::Second => Determinant::Abc,
        }
    }

    fn blocks(self) -> Vec<Determinant> {
        let mut b: Vec<Determinant> = Determinant::ALL[..6].to_vec();
        b.push(self.partner());
        b
    }
}

/// `v0`: each determinant's exponent on its first symbol.
pub fn g_support_data(label: &MultiplicityLabel, v: &HighestWeight, w: &HighestWeight) -> Result<(ExpVector30, LatticeKind)> {
    label.validate(v, w)?;
    let mut v0 = ExpVector30::zero();
    for d in Determinant::ALL {
        v0.0[d.range().start] = i64::from(label.exponent(d));
    }
    Ok((v0, label.lattice_kind()))
}

/// `e_first - e_j` for every other symbol `j` of each determinant.
pub fn p_vectors_of(blocks: &[Determinant]) -> Vec<ExpVector30> {
    let mut out = Vec::new();
    for &d in blocks {
        let r = d.range();
        for j in r.start + 1..r.end {
            let mut v = ExpVector30::unit(r.start);
            v.0[j] = -1;
            out.push(v);
        }
    }
    out
}

pub fn p_vectors() -> Vec<ExpVector30> {
    p_vectors_of(&Determinant::ALL)
}

fn projections_in_bgc(t: &ExpVector30) -> bool {
    Letter::ALL.iter().all(|&l| {
        let p = projector(l, t);
        p.add_scaled(&V_GEN, -p.0[Minor::X23.index()]).0 == [0; 6]
    })
}

/// Elementary cycles between two determinants.
pub fn cycles_between(d1: Determinant, d2: Determinant) -> Vec<ExpVector30> {
    let mut out = BTreeSet::new();
    for x in d1.range() {
        for y in d1.range().filter(|&y| y != x) {
            for z in d2.range() {
                for w in d2.range().filter(|&w| w != z) {
                    let mut t = ExpVector30::zero();
                    t.0[x] += 1;
                    t.0[y] -= 1;
                    t.0[z] += 1;
                    t.0[w] -= 1;
                    if projections_in_bgc(&t) {
                        out.insert(t);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

pub fn cycle_vectors(kind: LatticeKind) -> Vec<ExpVector30> {
    Determinant::ALL[..6]
        .iter()
        .flat_map(|&d| cycles_between(d, kind.partner()))
        .collect()
}

/// Elementary cycles over every pair of distinct determinants.
pub fn all_cycle_vectors() -> Vec<ExpVector30> {
    let mut out = Vec::new();
    for (i, &d1) in Determinant::ALL.iter().enumerate() {
        for &d2 in &Determinant::ALL[i + 1..] {
            out.extend(cycles_between(d1, d2));
        }
    }
    out
}

fn rows(vs: &[ExpVector30]) -> Vec<Vec<i64>> {
    vs.iter().map(|v| v.0.to_vec()).collect()
}

pub fn cycle_lattice(kind: LatticeKind) -> Result<IntegerLattice> {
    let l = IntegerLattice::from_generators(NZ, &rows(&cycle_vectors(kind)))?;
    if l.rank() != 6 {
        return Err(Error::LatticeRank { expected: 6, got: l.rank() });
    }
    Ok(l)
}

/// A hand-reduced basis of the first-type lattice, kept as a regression fixture.
pub fn reference_first_basis() -> [ExpVector30; 6] {
    let v = ExpVector30::from_named;
    [
        v(&[(-1, "[a1b23]"), (1, "[a2b13]"), (-1, "[a23b13c12]"), (1, "[a13b23c12]")]),
        v(&[(-1, "[a1c23]"), (1, "[a2c13]"), (-1, "[a23b12c13]"), (1, "[a13b12c23]")]),
        v(&[(-1, "[b1a23]"), (1, "[b2a13]"), (-1, "[a13b23c12]"), (1, "[a23b13c12]")]),
        v(&[(-1, "[b1c23]"), (1, "[b2c13]"), (-1, "[a12b23c13]"), (1, "[a12b13c23]")]),
        v(&[(-1, "[c1a23]"), (1, "[c2a13]"), (-1, "[a13b12c23]"), (1, "[a23b12c13]")]),
        v(&[(-1, "[c1b23]"), (1, "[c2b13]"), (-1, "[a12b13c23]"), (1, "[a12b23c13]")]),
    ]
}

/// Candidate `f_a, f_b, f_c` (first kind) as signed term lists. None of them
/// satisfies its constraints as listed; see [`f_vectors`].
pub const CANDIDATE_F_TERMS: [[(i64, &str); 4]; 3] = [
    [(-1, "[a1c23]"), (1, "[a3c12]"), (-1, "[a23b13c12]"), (-1, "[a12b13c23]")],
    [(-1, "[b1c23]"), (1, "[b3c12]"), (-1, "[a13b23c12]"), (-1, "[a13b12c23]")],
    [(-1, "[a1b23]"), (1, "[a3b12]"), (-1, "[a12b23c13]"), (-1, "[a23b12c13]")],
];

pub fn candidate_f_vectors() -> [ExpVector30; 3] {
    CANDIDATE_F_TERMS.map(|t| ExpVector30::from_named(&t))
}

/// `pr_x(f) = r` for the given letter and `0` for the other two.
pub fn satisfies_f_constraints(letter: Letter, f: &ExpVector30) -> bool {
    Letter::ALL.iter().all(|&l| {
        let want = if l == letter { R_VEC } else { ShiftVector6([0; 6]) };
        projector(l, f) == want
    })
}

fn l1(v: &ExpVector30) -> i64 {
    v.0.iter().map(|x| x.abs()).sum()
}

/// Vectors in the span of the kind's summand differences with
/// `pr_x(f_x) = r` and zero projections elsewhere. A candidate vector, or the
/// candidate with its fourth sign flipped, is preferred when it
/// satisfies the constraints; otherwise the solver's solution is shortened
/// greedily along the exact-projection kernel.
pub fn f_vectors(kind: LatticeKind) -> Result<[ExpVector30; 3]> {
    let ps = p_vectors_of(&kind.blocks());
    let gens: Vec<Vec<i64>> = ps
        .iter()
        .map(|p| Letter::ALL.iter().flat_map(|&l| projector(l, p).0).collect())
        .collect();
    let h = Hermite::new(18, &gens)?;
    let kernel: Vec<ExpVector30> = h.kernel.iter().map(|c| combine(&ps, c)).collect();
    let candidates = candidate_f_vectors();
    let mut out = [ExpVector30::zero(); 3];
    for l in Letter::ALL {
        if kind == LatticeKind::First {
            let p = candidates[l.index()];
            let mut terms = CANDIDATE_F_TERMS[l.index()];
            terms[3].0 = -terms[3].0;
            let flipped = ExpVector30::from_named(&terms);
            if let Some(c) = [p, flipped].into_iter().find(|c| satisfies_f_constraints(l, c)) {
                out[l.index()] = c;
                continue;
            }
        }
        let mut target = vec![0i64; 18];
        target[l.index() * 6..l.index() * 6 + 6].copy_from_slice(&R_VEC.0);
        let c = h
            .solve(&target)
            .ok_or_else(|| Error::NoSolution(format!("f vector for letter {}", l.symbol())))?;
        let mut f = combine(&ps, &c);
        loop {
            let best = kernel
                .iter()
                .flat_map(|k| [f.add_scaled(k, 1), f.add_scaled(k, -1)])
                .min_by_key(|c| (l1(c), *c))
                .filter(|c| l1(c) < l1(&f));
            match best {
                Some(b) => f = b,
                None => break,
            }
        }
        out[l.index()] = f;
    }
    Ok(out)
}

fn combine(ps: &[ExpVector30], c: &[i64]) -> ExpVector30 {
    ps.iter().zip(c).fold(ExpVector30::zero(), |acc, (p, &k)| acc.add_scaled(p, k))
}

/// Integer lattice of `τ` in the span of the active summand differences
/// whose three projections all lie in `Z v`: the directions along which a
/// fiber of the projection map can be walked.
pub fn fiber_lattice(active: &[Determinant]) -> Result<(IntegerLattice, Vec<ExpVector30>)> {
    let ps = p_vectors_of(active);
    let gens: Vec<Vec<i64>> = ps.iter().map(|p| quotient_projection(p).to_vec()).collect();
    let h = Hermite::new(15, &gens)?;
    let basis: Vec<Vec<i64>> = h.kernel.iter().map(|c| combine(&ps, c).0.to_vec()).collect();
    Ok((IntegerLattice::from_generators(NZ, &basis)?, ps))
}

/// The three projections, each reduced mod `Z v`, stacked into 15 integers.
pub fn quotient_projection(x: &ExpVector30) -> [i64; 15] {
    let mut out = [0i64; 15];
    for l in Letter::ALL {
        out[l.index() * 5..l.index() * 5 + 5].copy_from_slice(&projector(l, x).quotient());
    }
    out
}

/// `g = prod det^e / e!` expanded in the Z-variables.
pub fn g_poly_in_z(label: &MultiplicityLabel, v: &HighestWeight, w: &HighestWeight, degree_cap: u32) -> Result<QPoly> {
    label.validate(v, w)?;
    let degree: u32 = label.to_array().iter().sum();
    if degree > degree_cap {
        return Err(Error::DegreeCap { cap: degree_cap, degree });
    }
    let mut g = QPoly::one(NZ);
    for d in Determinant::ALL {
        let e = label.exponent(d);
        if e == 0 {
            continue;
        }
        let block = SparsePoly::from_terms(
            NZ,
            d.range().map(|i| (Monomial::unit(NZ, i), Rational::from_integer(z_alphabet()[i].sign.into()))),
        );
        g = &g * &block.pow(e);
        g = g.scale(&(Rational::one() / Rational::from_integer(factorial(e))));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(a: i64, b: i64, c: i64) -> HighestWeight {
        HighestWeight::new(a, b, c).unwrap()
    }

    fn lab(a: [u32; 8]) -> MultiplicityLabel {
        MultiplicityLabel::from_array(a)
    }

    #[test]
    fn alphabet_shape() {
        let z = z_alphabet();
        assert_eq!(z.len(), 30);
        assert_eq!(z[0].name, "[c1a23]");
        assert_eq!(z[3].name, "[a1c23]");
        assert_eq!(z[18].name, "[a1b2c3]");
        assert_eq!(z[24].name, "[a23b13c12]");
        let names: BTreeSet<&str> = z.iter().map(|v| v.name.as_str()).collect();
        assert_eq!(names.len(), 30);
    }

    #[test]
    fn signs() {
        let s = sign_vector();
        let at = |n| s.entries()[z_index(n).unwrap()];
        assert_eq!(at("[a1c23]"), 1);
        assert_eq!(at("[a2c13]"), -1);
        assert_eq!(at("[a3b2c1]"), -1);
        assert_eq!(at("[a2b3c1]"), 1);
        assert_eq!(at("[a23b13c12]"), -1);
        assert_eq!(at("[a13b23c12]"), 1);
    }

    #[test]
    fn projector_examples() {
        let e = |n| ExpVector30::unit(z_index(n).unwrap());
        assert_eq!(projector(Letter::A, &e("[c1a23]")), ShiftVector6([0, 0, 0, 0, 1, 0]));
        assert_eq!(projector(Letter::B, &e("[c1a23]")), ShiftVector6([0; 6]));
        assert_eq!(projector(Letter::C, &e("[a1b2c3]")), ShiftVector6([1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn basis_examples() {
        let f = hw(1, 0, 0);
        assert_eq!(multiplicity_basis(&f, &f, &hw(2, 0, 0)), vec![lab([1, 1, 0, 0, 0, 0, 0, 0])]);
        assert_eq!(multiplicity_basis(&f, &f, &hw(1, 1, 0)), vec![lab([0, 0, 0, 0, 1, 0, 0, 0])]);
        let ad = hw(2, 1, 0);
        assert_eq!(
            multiplicity_basis(&ad, &ad, &hw(3, 2, 1)),
            vec![lab([1, 0, 0, 1, 0, 0, 1, 0]), lab([0, 1, 1, 0, 0, 1, 0, 0])]
        );
        assert!(multiplicity_basis(&f, &f, &hw(3, 0, 0)).is_empty());
    }

    #[test]
    fn decomposition_of_adjoint_square() {
        let ad = hw(2, 1, 0);
        let d = decomposition(&ad, &ad);
        let total: usize = d
            .iter()
            .map(|u| multiplicity_basis(&ad, &ad, u).len() * u.dimension())
            .sum();
        assert_eq!(total, 64);
    }

    #[test]
    fn dimensions_add_up() {
        let ws = [hw(1, 0, 0), hw(1, 1, 0), hw(2, 0, 0), hw(2, 1, 0), hw(2, 2, 0), hw(3, 1, 0)];
        for v in &ws {
            for w in &ws {
                let total: usize = labels_for(v, w).iter().map(|l| l.target().dimension()).sum();
                assert_eq!(total, v.dimension() * w.dimension(), "{v} {w}");
            }
        }
    }

    #[test]
    fn support_data_examples() {
        let f = hw(1, 0, 0);
        let (v0, k) = g_support_data(&lab([0, 0, 0, 0, 1, 0, 0, 0]), &f, &f).unwrap();
        assert_eq!(v0, ExpVector30::from_named(&[(1, "[a1b2c3]")]));
        assert_eq!(k, LatticeKind::Second);
        let (v0, k) = g_support_data(&lab([1, 1, 0, 0, 0, 0, 0, 0]), &f, &f).unwrap();
        assert_eq!(v0, ExpVector30::from_named(&[(1, "[a1c23]"), (1, "[b1c23]")]));
        assert_eq!(k, LatticeKind::First);
        let a = hw(1, 1, 0);
        let (v0, k) = g_support_data(&lab([0, 0, 0, 0, 0, 0, 0, 1]), &a, &a).unwrap();
        assert_eq!(v0.0[z_index("[a23b13c12]").unwrap()], 1);
        assert_eq!(k, LatticeKind::First);
        assert!(g_support_data(&lab([1, 0, 0, 0, 0, 0, 0, 0]), &f, &f).is_err());
    }

    #[test]
    fn twenty_two_p_vectors() {
        let ps = p_vectors();
        assert_eq!(ps.len(), 22);
        let l = IntegerLattice::new(NZ, rows(&ps)).unwrap();
        assert_eq!(l.rank(), 22);
    }

    #[test]
    fn cycle_examples() {
        let first = cycle_vectors(LatticeKind::First);
        let [v1a, ..] = reference_first_basis();
        assert!(first.contains(&v1a));
        for t in &first {
            assert!(projections_in_bgc(t));
        }
        let u1 = ExpVector30::from_named(&[(-1, "[a1b23]"), (1, "[a2b13]"), (-1, "[b1a23]"), (1, "[b2a13]")]);
        assert!(all_cycle_vectors().contains(&u1));
    }

    #[test]
    fn cycle_lattices() {
        let first = cycle_lattice(LatticeKind::First).unwrap();
        let second = cycle_lattice(LatticeKind::Second).unwrap();
        assert_eq!(second.rank(), 6);
        let reference = IntegerLattice::new(NZ, rows(&reference_first_basis())).unwrap();
        assert!(first.same_lattice(&reference));
        let p = IntegerLattice::new(NZ, rows(&p_vectors())).unwrap();
        for b in first.basis().iter().chain(second.basis()) {
            assert!(p.contains(b));
        }
    }

    #[test]
    fn every_cycle_in_both_series() {
        let mut gens = rows(&cycle_vectors(LatticeKind::First));
        gens.extend(rows(&cycle_vectors(LatticeKind::Second)));
        let both = IntegerLattice::from_generators(NZ, &gens).unwrap();
        for c in all_cycle_vectors() {
            assert!(both.contains(&c.0), "{c}");
        }
        assert_eq!(both.rank(), 9);
    }

    #[test]
    fn f_vectors_satisfy_constraints() {
        for kind in [LatticeKind::First, LatticeKind::Second] {
            let fs = f_vectors(kind).unwrap();
            for l in Letter::ALL {
                assert!(satisfies_f_constraints(l, &fs[l.index()]), "{kind:?} {l:?}");
            }
        }
        let [fa, fb, _] = f_vectors(LatticeKind::First).unwrap();
        let [pa, pb, pc] = candidate_f_vectors();
        assert!(!satisfies_f_constraints(Letter::A, &pa));
        assert!(!satisfies_f_constraints(Letter::C, &pc));
        assert_eq!(fa, ExpVector30::from_named(&[(-1, "[a1c23]"), (1, "[a3c12]"), (-1, "[a23b13c12]"), (1, "[a12b13c23]")]));
        assert_eq!(fb, ExpVector30::from_named(&[(-1, "[b1c23]"), (1, "[b3c12]"), (-1, "[a13b23c12]"), (1, "[a13b12c23]")]));
        let _ = pb;
    }

    #[test]
    fn g_expansions() {
        let f = hw(1, 0, 0);
        let g = g_poly_in_z(&lab([0, 0, 0, 0, 1, 0, 0, 0]), &f, &f, 12).unwrap();
        assert_eq!(g.len(), 6);
        let g = g_poly_in_z(&lab([1, 1, 0, 0, 0, 0, 0, 0]), &f, &f, 12).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(
            g_poly_in_z(&lab([1, 1, 0, 0, 0, 0, 0, 0]), &f, &f, 1).unwrap_err(),
            Error::DegreeCap { cap: 1, degree: 2 }
        );
    }
}
