//! 3j-symbols and Clebsch-Gordan coefficients.
//!
//! For a label with invariant `g`, the 3j-symbol of a pattern triple is
//! `<g, F_μ F_ν F_ρ> / (𝓕_μ(1) 𝓕_ν(1) 𝓕_ρ(1))`. Expanding each `F` in the
//! `F̃` basis splits the numerator into layers `k = (k1, k2, k3)`, one per
//! choice of `(μ - k1 r, ν - k2 r, ρ - k3 r)`; each layer is a signed,
//! binomially weighted Γ-series over the monomials of `g` projecting there.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::agkz::{bgc_value, family, f_coeffs, normalization_constant, Normalization};
use crate::alphabet::{
    content_table, f_vectors, fiber_lattice, g_support_data, multiplicity_basis, projector,
    quotient_projection, sign_vector, Determinant, ExpVector30, LatticeKind, Letter,
    MultiplicityLabel,
};
use crate::error::{Error, Result};
use crate::gamma::{weighted_gamma_table, GammaSeriesSpec, LetterGrading, SignVector};
use crate::lattice::{Hermite, IntegerLattice};
use crate::pattern::{
    pattern_shift_vector, patterns_of, weight_of_pattern, GtPattern, HighestWeight, ShiftVector6,
    R_VEC,
};
use crate::Rational;

/// A fully specified coefficient request.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThreeJQuery {
    pub v: HighestWeight,
    pub w: HighestWeight,
    pub u: HighestWeight,
    pub p_v: GtPattern,
    pub p_w: GtPattern,
    pub p_u: GtPattern,
    pub label: MultiplicityLabel,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThreeJResult {
    pub value: Rational,
    pub varpi: Option<ExpVector30>,
    pub lattice_kind: LatticeKind,
    pub numerator: Rational,
    pub denominators: [Rational; 3],
}

/// Third-slot pattern: the contragredient of `p_U` twisted by `M1 (1,1,1)`.
pub fn dual_slot_pattern(u: &HighestWeight, p_u: &GtPattern) -> Result<GtPattern> {
    if p_u.top != u.m || !p_u.is_valid() {
        return Err(Error::InvalidPattern(format!("{p_u} for {u}")));
    }
    let [m1, m2, m3] = u.m;
    let [k1, k2] = p_u.mid;
    let p = GtPattern { top: [m1 - m3, m1 - m2, 0], mid: [m1 - k2, m1 - k1], bot: m1 - p_u.bot };
    debug_assert!(p.is_valid());
    Ok(p)
}

/// Inverse of [`dual_slot_pattern`].
pub fn dual_slot_inverse(u: &HighestWeight, p_c: &GtPattern) -> Result<GtPattern> {
    let m1 = u.m[0];
    GtPattern::new(u.m, [m1 - p_c.mid[1], m1 - p_c.mid[0]], m1 - p_c.bot)
}

/// Necessary conditions for a nonzero coefficient: top rows, middle rows and
/// bottom entries each add up consistently.
pub fn selection_check(
    v: &HighestWeight,
    w: &HighestWeight,
    u: &HighestWeight,
    p_v: &GtPattern,
    p_w: &GtPattern,
    p_u: &GtPattern,
) -> bool {
    let (m, mp, big) = (v.m, w.m, u.m);
    // [m] + [m'] + ω[-1,1,0] + κ[-1,0,1] + θ[0,-1,1] = [M]
    let top = (0..=(m[0] + mp[0] - big[0]).max(-1)).any(|omega| {
        let kappa = m[0] + mp[0] - big[0] - omega;
        let theta = m[1] + mp[1] + omega - big[1];
        kappa >= 0 && theta >= 0 && m[2] + mp[2] + kappa + theta == big[2]
    });
    let (k, kp, kk) = (p_v.mid, p_w.mid, p_u.mid);
    let omega2 = k[0] + kp[0] - kk[0];
    let mid = omega2 >= 0 && k[1] + kp[1] + omega2 == kk[1];
    top && mid && p_v.bot + p_w.bot == p_u.bot
}

/// Everything about a label's invariant that does not depend on the patterns.
#[derive(Debug)]
pub struct LabelSupport {
    pub label: MultiplicityLabel,
    pub v0: ExpVector30,
    pub kind: LatticeKind,
    pub active: Vec<Determinant>,
    ps: Vec<ExpVector30>,
    solver: Hermite,
    fiber: IntegerLattice,
    groups: Vec<Vec<usize>>,
    pub f: [ExpVector30; 3],
}

impl LabelSupport {
    pub fn new(label: &MultiplicityLabel, v: &HighestWeight, w: &HighestWeight) -> Result<Self> {
        let (v0, kind) = g_support_data(label, v, w)?;
        let active = label.active();
        let (fiber, ps) = fiber_lattice(&active)?;
        let gens: Vec<Vec<i64>> = ps.iter().map(|p| quotient_projection(p).to_vec()).collect();
        let solver = Hermite::new(15, &gens)?;
        let groups = active.iter().map(|d| d.range().collect()).collect();
        Ok(LabelSupport { label: *label, v0, kind, active, ps, solver, fiber, groups, f: f_vectors(kind)? })
    }

    /// The lattice of directions inside one projection class.
    pub fn fiber_lattice(&self) -> &IntegerLattice {
        &self.fiber
    }

    /// A point of `v0 + span(active differences)` whose projections are
    /// congruent to the targets mod B_GC.
    pub fn solve_layer(&self, targets: &[ShiftVector6; 3]) -> Option<ExpVector30> {
        let base = quotient_projection(&self.v0);
        let mut t = Vec::with_capacity(15);
        for (l, target) in targets.iter().enumerate() {
            let q = target.quotient();
            t.extend((0..5).map(|i| q[i] - base[l * 5 + i]));
        }
        let c = self.solver.solve(&t)?;
        Some(self.ps.iter().zip(&c).fold(self.v0, |acc, (p, &k)| acc.add_scaled(p, k)))
    }

    /// True when `x` differs from `v0` only by active summand differences.
    pub fn in_affine_span(&self, x: &ExpVector30) -> bool {
        Determinant::ALL.iter().all(|&d| {
            if self.active.contains(&d) {
                x.block_sum(d) == self.v0.block_sum(d)
            } else {
                x.0[d.range()].iter().all(|&e| e == 0)
            }
        })
    }

    pub fn layer_series(&self, rep: &ExpVector30) -> GammaSeriesSpec {
        GammaSeriesSpec::with_groups(rep.0.to_vec(), self.fiber.clone(), &self.groups)
            .expect("fiber directions preserve block sums")
    }
}

fn congruent(a: &ShiftVector6, b: &ShiftVector6) -> bool {
    a.quotient() == b.quotient()
}

fn layer_bases(bases: &[ShiftVector6; 3], k: [usize; 3]) -> [ShiftVector6; 3] {
    [0, 1, 2].map(|l| bases[l].add_scaled(&R_VEC, -(k[l] as i64)))
}

/// A family `μ, μ - r, ...` with the coefficients of `F_μ` over its `F̃`.
type FamilyData = Arc<(Vec<ShiftVector6>, Vec<Rational>)>;

/// Pattern-independent caches plus the normalization convention.
#[derive(Debug, Default)]
pub struct Engine {
    norm: Normalization,
    supports: Mutex<HashMap<(MultiplicityLabel, HighestWeight, HighestWeight), Arc<LabelSupport>>>,
    fams: Mutex<HashMap<ShiftVector6, FamilyData>>,
}

impl Engine {
    pub fn new(norm: Normalization) -> Self {
        Engine { norm, ..Default::default() }
    }

    pub fn normalization(&self) -> Normalization {
        self.norm
    }

    pub fn support(&self, label: &MultiplicityLabel, v: &HighestWeight, w: &HighestWeight) -> Result<Arc<LabelSupport>> {
        let key = (*label, *v, *w);
        if let Some(s) = self.supports.lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return Ok(s.clone());
        }
        let s = Arc::new(LabelSupport::new(label, v, w)?);
        self.supports
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .entry(key)
            .or_insert(s.clone());
        Ok(s)
    }

    /// Family `μ, μ - r, ...` and the coefficients of `F_μ` in the `F̃` basis.
    fn family_data(&self, mu: &ShiftVector6) -> Result<FamilyData> {
        if let Some(d) = self.fams.lock().unwrap_or_else(|e| e.into_inner()).get(mu) {
            return Ok(d.clone());
        }
        let fam = family(mu);
        let f = f_coeffs(mu, fam.len().saturating_sub(1))?;
        let d = Arc::new((fam, f));
        self.fams
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .entry(*mu)
            .or_insert(d.clone());
        Ok(d)
    }

    fn layers(&self, bases: &[ShiftVector6; 3]) -> Result<Vec<[usize; 3]>> {
        let lens: Vec<usize> = bases
            .iter()
            .map(|b| self.family_data(b).map(|d| d.0.len()))
            .collect::<Result<_>>()?;
        let mut out = Vec::new();
        for i in 0..lens[0] {
            for j in 0..lens[1] {
                for k in 0..lens[2] {
                    out.push([i, j, k]);
                }
            }
        }
        Ok(out)
    }

    /// Smallest support point of layer `k`, if the layer has any.
    fn layer_witness(&self, s: &LabelSupport, bases: &[ShiftVector6; 3], k: [usize; 3]) -> Option<ExpVector30> {
        let rep = s.solve_layer(&layer_bases(bases, k))?;
        let spec = s.layer_series(&rep);
        spec.support_points().first().map(|x| {
            let mut v = ExpVector30::zero();
            for (o, &e) in v.0.iter_mut().zip(x) {
                *o = i64::from(e);
            }
            v
        })
    }

    /// A representative `ϖ` for the triple: the first layer (in
    /// lexicographic order) containing a monomial of `g`, shifted back by
    /// `k1 f_a + k2 f_b + k3 f_c`. `None` means no monomial of `g` meets
    /// any layer, so the symbol vanishes.
    pub fn solve_varpi(
        &self,
        label: &MultiplicityLabel,
        v: &HighestWeight,
        w: &HighestWeight,
        bases: &[ShiftVector6; 3],
    ) -> Result<Option<ExpVector30>> {
        let s = self.support(label, v, w)?;
        for k in self.layers(bases)? {
            if let Some(h) = self.layer_witness(&s, bases, k) {
                let varpi = (0..3).fold(h, |acc, l| acc.add_scaled(&s.f[l], k[l] as i64));
                return Ok(Some(varpi));
            }
        }
        Ok(None)
    }

    /// `<g, F_μ F_ν F_ρ>` evaluated layer by layer.
    pub fn numerator_value(&self, s: &LabelSupport, varpi: &ExpVector30, bases: &[ShiftVector6; 3]) -> Result<Rational> {
        let signs: SignVector = sign_vector();
        let fam: Vec<Arc<(Vec<ShiftVector6>, Vec<Rational>)>> =
            bases.iter().map(|b| self.family_data(b)).collect::<Result<_>>()?;
        let mut total = Rational::zero();
        for k in self.layers(bases)? {
            let lb = layer_bases(bases, k);
            let shifted = (0..3).fold(*varpi, |acc, l| acc.add_scaled(&s.f[l], -(k[l] as i64)));
            let rep = if s.in_affine_span(&shifted)
                && (0..3).all(|l| congruent(&projector(Letter::ALL[l], &shifted), &lb[l]))
            {
                shifted
            } else {
                match s.solve_layer(&lb) {
                    Some(r) => r,
                    None => continue,
                }
            };
            let spec = s.layer_series(&rep);
            if spec.support_points().is_empty() {
                continue;
            }
            let grading = LetterGrading { content: content_table(), bases: lb };
            let s_max = k.map(|x| x as u32);
            let table = weighted_gamma_table(&spec, &grading, s_max, &signs);
            let dims = k.map(|x| x + 1);
            for a in 0..dims[0] {
                for b in 0..dims[1] {
                    for c in 0..dims[2] {
                        let w = &table[(a * dims[1] + b) * dims[2] + c];
                        if w.is_zero() {
                            continue;
                        }
                        // f^x_{k_x - s'_x} (-1)^{s'_x}
                        let mut coef = fam[0].1[k[0] - a].clone() * &fam[1].1[k[1] - b] * &fam[2].1[k[2] - c];
                        if (a + b + c) % 2 == 1 {
                            coef = -coef;
                        }
                        total += coef * w;
                    }
                }
            }
        }
        Ok(total)
    }

    pub fn threej(&self, q: &ThreeJQuery) -> Result<ThreeJResult> {
        validate_query(q)?;
        let p_c = dual_slot_pattern(&q.u, &q.p_u)?;
        let bases = [
            pattern_shift_vector(&q.p_v)?,
            pattern_shift_vector(&q.p_w)?,
            pattern_shift_vector(&p_c)?,
        ];
        let denominators = bases.map(|b| bgc_value(&b));
        let s = self.support(&q.label, &q.v, &q.w)?;
        let zero = |varpi| ThreeJResult {
            value: Rational::zero(),
            varpi,
            lattice_kind: s.kind,
            numerator: Rational::zero(),
            denominators: denominators.clone(),
        };
        let m1 = q.u.m[0];
        let wsum: Vec<i64> = (0..3)
            .map(|i| weight_of_pattern(&q.p_v)[i] + weight_of_pattern(&q.p_w)[i] + weight_of_pattern(&p_c)[i])
            .collect();
        if wsum != [m1; 3] {
            return Ok(zero(None));
        }
        let Some(varpi) = self.solve_varpi(&q.label, &q.v, &q.w, &bases)? else {
            return Ok(zero(None));
        };
        let numerator = self.numerator_value(&s, &varpi, &bases)?;
        let mut value = numerator.clone() / (denominators[0].clone() * &denominators[1] * &denominators[2]);
        if self.norm != Normalization::Unit {
            for b in &bases {
                value /= normalization_constant(b, self.norm)?;
            }
        }
        Ok(ThreeJResult { value, varpi: Some(varpi), lattice_kind: s.kind, numerator, denominators })
    }
}

fn validate_query(q: &ThreeJQuery) -> Result<()> {
    for (w, p) in [(&q.v, &q.p_v), (&q.w, &q.p_w), (&q.u, &q.p_u)] {
        if p.top != w.m || !p.is_valid() {
            return Err(Error::InvalidPattern(format!("{p} for {w}")));
        }
    }
    for w in [&q.v, &q.w] {
        if w.m[2] != 0 {
            return Err(Error::NonzeroM3(w.m[2]));
        }
    }
    q.label.validate(&q.v, &q.w)?;
    if q.label.target() != q.u {
        return Err(Error::InvalidLabel(format!("{} selects {}, not {}", q.label, q.label.target(), q.u)));
    }
    Ok(())
}

fn default_engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::default)
}

pub fn threej(q: &ThreeJQuery) -> Result<ThreeJResult> {
    default_engine().threej(q)
}

/// `ϖ` for shift vectors `μ, ν, ρ` (the third already in dual-slot form).
pub fn solve_varpi(
    label: &MultiplicityLabel,
    v: &HighestWeight,
    w: &HighestWeight,
    mu: &ShiftVector6,
    nu: &ShiftVector6,
    rho: &ShiftVector6,
) -> Result<Option<ExpVector30>> {
    default_engine().solve_varpi(label, v, w, &[*mu, *nu, *rho])
}

pub fn numerator_value(
    label: &MultiplicityLabel,
    v: &HighestWeight,
    w: &HighestWeight,
    varpi: &ExpVector30,
    mu: &ShiftVector6,
    nu: &ShiftVector6,
    rho: &ShiftVector6,
) -> Result<Rational> {
    let e = default_engine();
    let s = e.support(label, v, w)?;
    e.numerator_value(&s, varpi, &[*mu, *nu, *rho])
}

/// `D^{U}_{V,W}` coupling `p_V ⊗ p_W` to `p_U`: the 3j-symbol with the
/// contragredient third slot.
pub fn clebsch_gordan(
    v: &HighestWeight,
    w: &HighestWeight,
    u: &HighestWeight,
    p_v: &GtPattern,
    p_w: &GtPattern,
    p_u: &GtPattern,
    label: &MultiplicityLabel,
) -> Result<Rational> {
    let q = ThreeJQuery { v: *v, w: *w, u: *u, p_v: *p_v, p_w: *p_w, p_u: *p_u, label: *label };
    Ok(threej(&q)?.value)
}

/// Every `(p_V, p_W, p_U)` in a fixed order.
pub fn pattern_triples(v: &HighestWeight, w: &HighestWeight, u: &HighestWeight) -> Vec<(GtPattern, GtPattern, GtPattern)> {
    let (pv, pw, pu) = (patterns_of(*v), patterns_of(*w), patterns_of(*u));
    let mut out = Vec::with_capacity(pv.len() * pw.len() * pu.len());
    for a in &pv {
        for b in &pw {
            for c in &pu {
                out.push((*a, *b, *c));
            }
        }
    }
    out
}

/// All `(U, label)` pairs for `V ⊗ W`, in a fixed order.
pub fn coupling_channels(v: &HighestWeight, w: &HighestWeight) -> Vec<(HighestWeight, MultiplicityLabel)> {
    crate::alphabet::decomposition(v, w)
        .into_iter()
        .flat_map(|u| multiplicity_basis(v, w, &u).into_iter().map(move |l| (u, l)))
        .collect()
}
