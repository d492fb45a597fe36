//! Formula against brute-force expansion over the small-weight corpus.

use gl3cg::oracle::{c_slot_weight, oracle_threej_all};
use gl3cg::threej::{coupling_channels, dual_slot_pattern, pattern_triples, threej, ThreeJQuery};
use gl3cg::alphabet::multiplicity_basis;
use gl3cg::HighestWeight;
use num_traits::Zero;

fn corpus() -> Vec<HighestWeight> {
    [[1, 0, 0], [1, 1, 0], [2, 0, 0], [2, 1, 0], [2, 2, 0]]
        .into_iter()
        .map(|[a, b, c]| HighestWeight::new(a, b, c).unwrap())
        .collect()
}

#[test]
fn formula_matches_oracle() {
    let mut checked = 0usize;
    let mut nonzero = 0usize;
    let mut multi = 0usize;
    let mut failures = Vec::new();
    for v in corpus() {
        for w in corpus() {
            for (u, label) in coupling_channels(&v, &w) {
                if multiplicity_basis(&v, &w, &u).len() > 1 {
                    multi += 1;
                }
                let oracle = oracle_threej_all(&v, &w, &u, &label).unwrap();
                assert_eq!(oracle.len(), v.dimension() * w.dimension() * c_slot_weight(&u).dimension());
                for (p_v, p_w, p_u) in pattern_triples(&v, &w, &u) {
                    let q = ThreeJQuery { v, w, u, p_v, p_w, p_u, label };
                    let got = threej(&q).unwrap().value;
                    let want = &oracle[&(p_v, p_w, dual_slot_pattern(&u, &p_u).unwrap())];
                    checked += 1;
                    nonzero += usize::from(!want.is_zero());
                    if &got != want {
                        failures.push(format!("{v} {w} {u} {label} {p_v} {p_w} {p_u}: {got} vs {want}"));
                    }
                }
            }
        }
    }
    for f in failures.iter().take(40) {
        eprintln!("{f}");
    }
    assert!(failures.is_empty(), "{} of {checked} differ", failures.len());
    assert!(nonzero > 1000, "only {nonzero} nonzero coefficients");
    assert!(multi >= 2);
    eprintln!("{checked} coefficients agree, {nonzero} nonzero, {multi} labels in multiplicity > 1");
}
