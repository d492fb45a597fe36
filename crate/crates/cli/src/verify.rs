//! Property suites and the formula-vs-oracle comparison behind `verify`.

use std::fmt::Write as _;
use std::time::Instant;

use gl3cg::agkz::{
    act_e, agkz_apply, big_f_poly, d_matrix, f_coeffs, gkz_box, inverse_unitriangular, scalar_product,
    tilde_f_poly,
};
use gl3cg::alphabet::{
    cycle_lattice, f_vectors, labels_for, multiplicity_basis, reference_first_basis, satisfies_f_constraints,
    LatticeKind, Letter, MultiplicityLabel,
};
use gl3cg::gamma::{gamma_poly, GammaSeriesSpec};
use gl3cg::lattice::IntegerLattice;
use gl3cg::oracle::{g_poly_entries, invariance_check, invariant_space_rank, oracle_threej_all, DEFAULT_DEGREE_CAP};
use gl3cg::pattern::{coset_leq, pattern_shift_vector, patterns_of, ShiftVector6};
use gl3cg::poly::Monomial;
use gl3cg::scalar::format_rational;
use gl3cg::threej::{coupling_channels, dual_slot_pattern, pattern_triples, selection_check, Engine, ThreeJQuery};
use gl3cg::{HighestWeight, QPoly, Rational};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::args::Suite;
use crate::compute::describe;
use crate::query::{CliError, CliResult};

pub const SUITES: [Suite; 9] = [
    Suite::Lattice,
    Suite::Annihilation,
    Suite::Gkz,
    Suite::Contravariance,
    Suite::Triangularity,
    Suite::Invariance,
    Suite::Multiplicity,
    Suite::Oracle,
    Suite::Selection,
];

pub const CONTRAVARIANCE_SAMPLES: usize = 100;
const SEED: u64 = 0x6c33_6367;

pub fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::All => "all",
        Suite::Lattice => "lattice",
        Suite::Annihilation => "annihilation",
        Suite::Gkz => "gkz",
        Suite::Contravariance => "contravariance",
        Suite::Triangularity => "triangularity",
        Suite::Invariance => "invariance",
        Suite::Multiplicity => "multiplicity",
        Suite::Oracle => "oracle",
        Suite::Selection => "selection",
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub max_weight: i64,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    /// The deterministic text report (no timings).
    pub fn render(&self) -> String {
        let mut out = format!("verify --max-weight {}\n", self.max_weight);
        let mut total = 0;
        let mut failed = 0;
        for s in &self.suites {
            let status = if s.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{:<15} {status} {} checks", suite_name(s.suite), s.checks);
            for f in &s.failures {
                let _ = writeln!(out, "  failure: {f}");
            }
            total += s.checks;
            failed += s.failures.len();
        }
        if failed == 0 {
            let _ = writeln!(out, "result: PASS ({total} checks in {} suites)", self.suites.len());
        } else {
            let _ = writeln!(out, "result: FAIL ({failed} of {total} checks failed)");
        }
        out
    }
}

/// `V`, `W` for the corpus: `[a, b, 0]` with `1 <= a <= n`.
pub fn input_weights(n: i64) -> Vec<HighestWeight> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 0..=a {
            out.push(HighestWeight::new(a, b, 0).expect("dominant"));
        }
    }
    out
}

/// Shift vectors of every pattern with `m3 = 0` and `m1 <= n`.
pub fn shift_corpus(n: i64) -> Vec<ShiftVector6> {
    let mut out = vec![ShiftVector6([0; 6])];
    for w in input_weights(n) {
        out.extend(patterns_of(w).iter().map(|p| pattern_shift_vector(p).expect("m3 = 0")));
    }
    out
}

fn channels(n: i64) -> Vec<(HighestWeight, HighestWeight, HighestWeight, MultiplicityLabel)> {
    let ws = input_weights(n);
    let mut out = Vec::new();
    for v in &ws {
        for w in &ws {
            out.extend(coupling_channels(v, w).into_iter().map(|(u, l)| (*v, *w, u, l)));
        }
    }
    out
}

/// Run `check` over `items` in parallel, keeping input order in the output.
fn gather<T: Sync, F>(items: &[T], check: F) -> (usize, Vec<String>)
where
    F: Fn(&T) -> (usize, Vec<String>) + Sync + Send,
{
    let parts: Vec<(usize, Vec<String>)> = items.par_iter().map(check).collect();
    parts.into_iter().fold((0, Vec::new()), |(n, mut f), (k, g)| {
        f.extend(g);
        (n + k, f)
    })
}

fn one_check(ok: bool, msg: impl FnOnce() -> String) -> (usize, Vec<String>) {
    (1, if ok { Vec::new() } else { vec![msg()] })
}

fn lattice_suite() -> (usize, Vec<String>) {
    let mut checks = 0;
    let mut failures = Vec::new();
    for kind in [LatticeKind::First, LatticeKind::Second] {
        checks += 1;
        match cycle_lattice(kind) {
            Ok(l) => {
                if kind == LatticeKind::First {
                    checks += 1;
                    let reference: Vec<Vec<i64>> = reference_first_basis().iter().map(|v| v.0.to_vec()).collect();
                    match IntegerLattice::new(30, reference) {
                        Ok(p) if p.same_lattice(&l) => {}
                        _ => failures.push("first cycle lattice differs from the reference basis".into()),
                    }
                }
            }
            Err(e) => failures.push(format!("{} cycle lattice: {e}", kind.name())),
        }
        match f_vectors(kind) {
            Ok(fs) => {
                for (letter, f) in Letter::ALL.iter().zip(&fs) {
                    checks += 1;
                    if !satisfies_f_constraints(*letter, f) {
                        failures.push(format!("{} f_{}: {f} violates its projections", kind.name(), letter.symbol()));
                    }
                }
            }
            Err(e) => {
                checks += 1;
                failures.push(format!("{} f-vectors: {e}", kind.name()));
            }
        }
    }
    (checks, failures)
}

fn annihilation_suite(n: i64) -> (usize, Vec<String>) {
    gather(&shift_corpus(n), |mu| {
        let mut failures = Vec::new();
        for (name, f) in [("F", big_f_poly(mu)), ("F~", tilde_f_poly(mu))] {
            match f {
                Ok(f) if agkz_apply(&f).is_zero() => {}
                Ok(_) => failures.push(format!("A-GKZ residual of {name} at mu={mu}")),
                Err(e) => failures.push(format!("{name} at mu={mu}: {e}")),
            }
        }
        (2, failures)
    })
}

fn gkz_suite(n: i64) -> (usize, Vec<String>) {
    gather(&shift_corpus(2 * n), |mu| {
        let g: QPoly = gamma_poly(&GammaSeriesSpec::bgc(mu));
        one_check(gkz_box(&g).is_zero(), || format!("GKZ residual at mu={mu}"))
    })
}

fn random_poly(rng: &mut ChaCha8Rng) -> QPoly {
    let terms = rng.gen_range(1..=4);
    QPoly::from_terms(
        6,
        (0..terms).map(|_| {
            let e: Vec<u32> = (0..6).map(|_| rng.gen_range(0..=2)).collect();
            let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
            (Monomial::new(e), Rational::from_integer(i64::from(c).into()))
        }),
    )
}

fn contravariance_suite() -> (usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let samples: Vec<(QPoly, QPoly, usize, usize)> = (0..CONTRAVARIANCE_SAMPLES)
        .map(|_| {
            let f = random_poly(&mut rng);
            let h = random_poly(&mut rng);
            let i = rng.gen_range(1..=3);
            let j = rng.gen_range(1..=3);
            (f, h, i, j)
        })
        .collect();
    gather(&samples, |(f, h, i, j)| {
        let lhs = scalar_product(&act_e(*i, *j, f), h);
        let rhs = scalar_product(f, &act_e(*j, *i, h));
        one_check(lhs == rhs, || format!("<E{i}{j} f, h> != <f, E{j}{i} h> for f={f}, h={h}"))
    })
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).fold(Rational::zero(), |acc, (x, r)| acc + x * &r[j])).collect())
        .collect()
}

fn triangularity_suite(n: i64) -> (usize, Vec<String>) {
    gather(&shift_corpus(2 * n), |mu| {
        let mut checks = 0;
        let mut failures = Vec::new();
        let ft = match tilde_f_poly(mu) {
            Ok(f) => f,
            Err(e) => return (1, vec![format!("F~ at mu={mu}: {e}")]),
        };
        let top = gl3cg::pattern::pattern_from_shift(mu).expect("corpus shifts are patterns");
        for p in patterns_of(top.highest_weight()) {
            let nu = pattern_shift_vector(&p).expect("m3 = 0");
            let g: QPoly = gamma_poly(&GammaSeriesSpec::bgc(&nu));
            let sp = scalar_product(&ft, &g);
            checks += 1;
            if nu == *mu && sp.is_zero() {
                failures.push(format!("<F~, F> vanishes on the diagonal at mu={mu}"));
            } else if !coset_leq(&nu, mu) && !sp.is_zero() {
                failures.push(format!("<F~_mu, F_nu> = {} with mu={mu}, nu={nu} not below", format_rational(&sp)));
            }
        }
        let d = d_matrix(mu);
        let inv = inverse_unitriangular(&d);
        let prod = mat_mul(&d, &inv);
        checks += 2;
        let identity = prod
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, x)| *x == if i == j { Rational::one() } else { Rational::zero() }));
        if !identity {
            failures.push(format!("d-matrix times its inverse is not the identity at mu={mu}"));
        }
        match f_coeffs(mu, d.len().saturating_sub(1)) {
            Ok(f) if inv.first().is_some_and(|r| *r == f) => {}
            _ => failures.push(format!("f coefficients differ from the inverse's first row at mu={mu}")),
        }
        (checks, failures)
    })
}

fn invariance_suite(n: i64) -> (usize, Vec<String>) {
    let ws = input_weights(n);
    let mut items = Vec::new();
    for v in &ws {
        for w in &ws {
            items.extend(labels_for(v, w).into_iter().map(|l| (*v, *w, l)));
        }
    }
    gather(&items, |(v, w, l)| match g_poly_entries(l, v, w, DEFAULT_DEGREE_CAP) {
        Ok(g) => one_check(invariance_check(&g), || format!("g not invariant for V={v} W={w} label={l}")),
        Err(e) => (1, vec![format!("g for V={v} W={w} label={l}: {e}")]),
    })
}

/// Dominant `U` with the right total size and `u1 <= v1 + w1`.
fn candidate_targets(v: &HighestWeight, w: &HighestWeight) -> Vec<HighestWeight> {
    let total: i64 = v.m.iter().chain(&w.m).sum();
    let mut out = Vec::new();
    for a in 0..=v.m[0] + w.m[0] {
        for b in 0..=a {
            let c = total - a - b;
            if (0..=b).contains(&c) {
                out.push(HighestWeight::new(a, b, c).expect("dominant"));
            }
        }
    }
    out
}

fn multiplicity_suite(n: i64) -> (usize, Vec<String>) {
    let ws = input_weights(n);
    let mut items = Vec::new();
    for v in &ws {
        for w in &ws {
            items.extend(candidate_targets(v, w).into_iter().map(|u| (*v, *w, u)));
        }
    }
    gather(&items, |(v, w, u)| {
        let labels = multiplicity_basis(v, w, u).len();
        match invariant_space_rank(v, w, u) {
            Ok(rank) => one_check(rank == labels, || format!("V={v} W={w} U={u}: {labels} labels, invariant rank {rank}")),
            Err(e) => (1, vec![format!("V={v} W={w} U={u}: {e}")]),
        }
    })
}

/// Formula against oracle (`oracle`) or the selection-rule implications
/// (`selection`) for every pattern triple of every corpus channel.
fn corpus_suite(n: i64, engine: &Engine, selection: bool) -> (usize, Vec<String>) {
    gather(&channels(n), |(v, w, u, label)| {
        let table = match oracle_threej_all(v, w, u, label) {
            Ok(t) => t,
            Err(e) => return (1, vec![format!("oracle for V={v} W={w} U={u} label={label}: {e}")]),
        };
        let mut checks = 0;
        let mut failures = Vec::new();
        for (p_v, p_w, p_u) in pattern_triples(v, w, u) {
            let q = ThreeJQuery { v: *v, w: *w, u: *u, p_v, p_w, p_u, label: *label };
            checks += 1;
            let formula = match engine.threej(&q) {
                Ok(r) => r.value,
                Err(e) => {
                    failures.push(format!("{}: formula error {e}", describe(&q)));
                    continue;
                }
            };
            let oracle = dual_slot_pattern(u, &p_u).ok().and_then(|p_c| table.get(&(p_v, p_w, p_c)));
            let Some(oracle) = oracle else {
                failures.push(format!("{}: missing oracle entry", describe(&q)));
                continue;
            };
            if selection {
                let passes = selection_check(v, w, u, &p_v, &p_w, &p_u);
                if !formula.is_zero() && !passes {
                    failures.push(format!("{}: nonzero {} violates the selection rules", describe(&q), format_rational(&formula)));
                }
                if formula.is_zero() && passes && !oracle.is_zero() {
                    failures.push(format!("{}: formula zero, oracle {}", describe(&q), format_rational(oracle)));
                }
            } else if formula != *oracle {
                failures.push(format!(
                    "{}: formula {} oracle {}",
                    describe(&q),
                    format_rational(&formula),
                    format_rational(oracle)
                ));
            }
        }
        (checks, failures)
    })
}

pub fn run_suite(suite: Suite, max_weight: i64, engine: &Engine) -> SuiteReport {
    let t = Instant::now();
    let (checks, failures) = match suite {
        Suite::Lattice => lattice_suite(),
        Suite::Annihilation => annihilation_suite(max_weight),
        Suite::Gkz => gkz_suite(max_weight),
        Suite::Contravariance => contravariance_suite(),
        Suite::Triangularity => triangularity_suite(max_weight),
        Suite::Invariance => invariance_suite(max_weight),
        Suite::Multiplicity => multiplicity_suite(max_weight),
        Suite::Oracle => corpus_suite(max_weight, engine, false),
        Suite::Selection => corpus_suite(max_weight, engine, true),
        Suite::All => unreachable!("expanded by run_verify"),
    };
    SuiteReport { suite, checks, failures, seconds: t.elapsed().as_secs_f64() }
}

/// Run one suite or all of them on a pool of `jobs` workers.
pub fn run_verify(max_weight: i64, suite: Suite, jobs: usize) -> CliResult<VerifyReport> {
    if max_weight < 1 {
        return Err(CliError::Input(format!("--max-weight must be at least 1, got {max_weight}")));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Internal(format!("worker pool: {e}")))?;
    let engine = Engine::default();
    let suites: Vec<Suite> = if suite == Suite::All { SUITES.to_vec() } else { vec![suite] };
    let reports = pool.install(|| suites.iter().map(|s| run_suite(*s, max_weight, &engine)).collect());
    Ok(VerifyReport { max_weight, suites: reports })
}
