//! Named verification suites: pinned small-case values, structural sweeps,
//! cross-implementation oracles, and randomized classifier round-trips.
//! Every suite is deterministic for a fixed seed and reports one line per
//! check with a counterexample on failure.

use std::collections::BTreeSet;

use num::{BigInt, BigRational};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cells::{euler_characteristic, f_vector, normal_star, Ambient, FVector};
use crate::classify::{classify, classify_family, expand_from_divisor, negativity_components, FamilyPolynomial};
use crate::composition::Composition;
use crate::markers::{
    marked_insert, marked_merge, marker_set, transport, transport_set, MarkedComposition,
};
use crate::poset::{
    bullet_geq_oracle, bullet_mor_exists, generate_bullet, generate_omega, geq, hasse,
    mor_enumerate, pred_at_distance, reachable_bfs, GenerationMode, PosetKind,
};
use crate::tmodel::{build_t_model, enumerate_labels, fiber_report, link_complex, ProductLabel};
use crate::{Error, Result};

/// Size and seed knobs shared by all suites.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteOptions {
    /// Degree ceiling for composition-universe sweeps.
    pub max_d: u32,
    /// Tangency ceiling for bullet sweeps.
    pub max_n: u32,
    /// Number of randomized classifier cases.
    pub cases: u32,
    /// Seed for the randomized suites.
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_d: 6,
            max_n: 4,
            cases: 120,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<CheckResult>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        SuiteReport {
            suite: suite.to_string(),
            checks,
            passed,
        }
    }
}

/// All recognized suite names, in the order `all` runs them.
pub fn suite_names() -> &'static [&'static str] {
    &[
        "census",
        "order-examples",
        "order-oracle",
        "bullet-order-oracle",
        "cells4",
        "euler",
        "star-counts",
        "bounds",
        "marker-coherence",
        "tmodel4",
        "tmodel-covers",
        "classifier-roundtrip",
        "families",
    ]
}

/// Runs one suite by name, or every suite for "all".
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<SuiteReport>> {
    let single = |checks: Vec<CheckResult>| vec![SuiteReport::new(name, checks)];
    match name {
        "census" => Ok(single(census(opts))),
        "order-examples" => Ok(single(order_examples())),
        "order-oracle" => Ok(single(order_oracle(opts))),
        "bullet-order-oracle" => Ok(single(bullet_order_oracle()?)),
        "cells4" => Ok(single(cells4())),
        "euler" => Ok(single(euler(opts))),
        "star-counts" => Ok(single(star_counts(opts))),
        "bounds" => Ok(single(bounds(opts)?)),
        "marker-coherence" => Ok(single(marker_coherence(opts)?)),
        "tmodel4" => Ok(single(tmodel4()?)),
        "tmodel-covers" => Ok(single(tmodel_covers(opts)?)),
        "classifier-roundtrip" => Ok(single(classifier_roundtrip(opts)?)),
        "families" => Ok(single(families()?)),
        "all" => {
            let mut reports = Vec::new();
            for suite in suite_names() {
                reports.extend(run_suite(suite, opts)?);
            }
            Ok(reports)
        }
        _ => Err(Error::Parse {
            detail: format!(
                "unknown suite {name:?}; known: {} and all",
                suite_names().join(", ")
            ),
        }),
    }
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

/// Aggregates one named property over many cases, keeping the first
/// counterexample.
struct Agg {
    name: &'static str,
    total: u64,
    failures: u64,
    first: Option<String>,
}

impl Agg {
    fn new(name: &'static str) -> Self {
        Agg {
            name,
            total: 0,
            failures: 0,
            first: None,
        }
    }

    fn hit(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(detail());
            }
        }
    }

    fn into_check(self) -> CheckResult {
        let detail = match &self.first {
            None => format!("{} cases", self.total),
            Some(first) => format!(
                "{} of {} cases failed; first: {}",
                self.failures, self.total, first
            ),
        };
        check(self.name, self.failures == 0, detail)
    }
}

fn c(entries: &[u32]) -> Composition {
    Composition::from(entries)
}

fn census(opts: &SuiteOptions) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (d, want) in [(4u32, 11usize), (6, 43), (8, 171)] {
        if d > opts.max_d {
            continue;
        }
        let got = generate_omega(d, GenerationMode::Upto).len();
        out.push(check(
            &format!("universe-count-d{d}"),
            got == want,
            format!("|universe ≤ {d}| = {got}, expected {want}"),
        ));
    }
    let mut exact = Agg::new("exact-count-power");
    for d in 1..=opts.max_d.min(12) {
        let got = generate_omega(d, GenerationMode::Exact).len();
        let want = 1usize << (d - 1);
        exact.hit(got == want, || format!("d={d}: {got} ≠ {want}"));
    }
    out.push(exact.into_check());
    for (n, want) in [(0u32, 1usize), (1, 3), (3, 11), (4, 19), (5, 32)] {
        if n > opts.max_n {
            continue;
        }
        let got = generate_bullet(n).len();
        out.push(check(
            &format!("bullet-count-n{n}"),
            got == want,
            format!("|realizable ≤ {n}| = {got}, expected {want}"),
        ));
    }
    out
}

fn order_examples() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let cases: Vec<(Composition, Composition, bool)> = vec![
        (c(&[1, 1, 1, 1]), c(&[2, 1, 1]), true),
        (c(&[2, 1, 1]), c(&[1, 1, 1, 1]), false),
        (c(&[1, 2, 1]), c(&[1, 1]), false),
        (c(&[1, 1]), c(&[1, 2, 1]), true),
        (Composition::empty(), c(&[2]), true),
        (c(&[2]), c(&[2, 2]), true),
        (c(&[2, 2]), c(&[2]), false),
        (c(&[2]), c(&[4]), true),
        (c(&[4]), c(&[2]), false),
    ];
    for (a, b, want) in &cases {
        out.push(check(
            &format!("order({a:?},{b:?})"),
            geq(a, b) == *want,
            format!("expected {want}"),
        ));
    }
    let maps: Vec<Vec<usize>> = mor_enumerate(&c(&[1, 1]), &c(&[1, 2, 1]))
        .iter()
        .map(|m| m.map.clone())
        .collect();
    out.push(check(
        "morphisms((1,1),(1,2,1))",
        maps == vec![vec![1, 3]],
        format!("maps {maps:?}, expected [[1, 3]]"),
    ));
    match bullet_geq_oracle(&c(&[3, 1]), &c(&[1, 4, 1])) {
        Ok(v) => out.push(check("bullet-order((3,1),(1,4,1))", v, "expected true")),
        Err(e) => out.push(check("bullet-order((3,1),(1,4,1))", false, e.to_string())),
    }
    match hasse(&generate_bullet(3), PosetKind::Bullet) {
        Ok(poset) => {
            let covers = poset.covered_by(&c(&[1, 1]));
            let want = vec![c(&[2]), c(&[1, 2, 1])];
            out.push(check(
                "bullet-covers-of-(1,1)",
                covers == want,
                format!("{covers:?}, expected {want:?}"),
            ));
        }
        Err(e) => out.push(check("bullet-covers-of-(1,1)", false, e.to_string())),
    }
    out
}

fn order_oracle(opts: &SuiteOptions) -> Vec<CheckResult> {
    let universe = generate_omega(opts.max_d, GenerationMode::Upto);
    let mut agg = Agg::new("morphism-vs-reachability");
    for a in &universe {
        for b in &universe {
            let via_mor = geq(a, b);
            let via_bfs = reachable_bfs(a, b);
            agg.hit(via_mor == via_bfs, || {
                format!("({a:?},{b:?}): morphism {via_mor}, reachability {via_bfs}")
            });
        }
    }
    vec![agg.into_check()]
}

/// The two bullet-order tests agree in one direction only; the reverse gap
/// is pinned to an exact frozen list of one-sided pairs.
fn bullet_order_oracle() -> Result<Vec<CheckResult>> {
    let universe = generate_bullet(4);
    let mut forward = Agg::new("occurrence-implies-morphism");
    let mut one_sided: Vec<(Composition, Composition)> = Vec::new();
    for a in &universe {
        for b in &universe {
            let via_mor = bullet_mor_exists(a, b)?;
            let via_oracle = bullet_geq_oracle(a, b)?;
            forward.hit(!via_oracle || via_mor, || {
                format!("({a:?},{b:?}): occurrence order without morphism")
            });
            if via_mor && !via_oracle {
                one_sided.push((a.clone(), b.clone()));
            }
        }
    }
    let frozen: Vec<(Composition, Composition)> = vec![
        (c(&[2]), c(&[1, 2, 1])),
        (c(&[2]), c(&[1, 2, 2, 1])),
        (c(&[2]), c(&[1, 2, 2, 2, 1])),
        (c(&[2]), c(&[1, 2, 2, 2, 2, 1])),
        (c(&[4]), c(&[1, 4, 1])),
        (c(&[4]), c(&[1, 2, 4, 1])),
        (c(&[4]), c(&[1, 4, 2, 1])),
    ];
    let mut sorted = one_sided.clone();
    sorted.sort();
    let mut frozen_sorted = frozen;
    frozen_sorted.sort();
    Ok(vec![
        forward.into_check(),
        check(
            "one-sided-pairs-frozen",
            sorted == frozen_sorted,
            format!("{} one-sided pairs: {sorted:?}", sorted.len()),
        ),
    ])
}

fn fv(counts: &[u64]) -> FVector {
    FVector {
        counts: counts.to_vec(),
    }
}

fn cells4() -> Vec<CheckResult> {
    let cases: Vec<(u32, Ambient, Vec<u64>)> = vec![
        (4, Ambient::Balanced, vec![1, 3, 4, 3]),
        (4, Ambient::BalancedSphere, vec![3, 4, 3]),
        (2, Ambient::Full, vec![0, 1, 2]),
        (2, Ambient::Sphere, vec![2, 2]),
        (4, Ambient::Sphere, vec![2, 3, 4, 3]),
    ];
    cases
        .into_iter()
        .map(|(d, ambient, want)| {
            let got = f_vector(d, ambient);
            let want = fv(&want);
            check(
                &format!("f-vector-d{d}-{ambient}"),
                got == want,
                format!("{got}, expected {want}"),
            )
        })
        .collect()
}

fn euler(opts: &SuiteOptions) -> Vec<CheckResult> {
    let mut sphere = Agg::new("euler-sphere");
    let mut balanced = Agg::new("euler-balanced-sphere");
    for d in 2..=opts.max_d {
        let got = euler_characteristic(&f_vector(d, Ambient::Sphere));
        let want = 1 + if d % 2 == 1 { 1 } else { -1 };
        sphere.hit(got == want, || format!("d={d}: χ={got}, expected {want}"));
        let got = euler_characteristic(&f_vector(d, Ambient::BalancedSphere));
        let want = 1 + if d % 2 == 0 { 1 } else { -1 };
        balanced.hit(got == want, || format!("d={d}: χ={got}, expected {want}"));
    }
    vec![sphere.into_check(), balanced.into_check()]
}

fn star_counts(opts: &SuiteOptions) -> Vec<CheckResult> {
    let universe = generate_omega(opts.max_d, GenerationMode::Upto);
    let mut agg = Agg::new("star-counts-vs-order-distance");
    for w in &universe {
        let star = match normal_star(w, opts.max_d) {
            Ok(s) => s,
            Err(e) => {
                agg.hit(false, || format!("star of {w:?} failed: {e}"));
                continue;
            }
        };
        let counts = star.f_vector();
        for k in 0..=w.reduced_norm() {
            let expected = pred_at_distance(w, k, &universe).len() as u64;
            let got = counts.counts.get(k as usize).copied().unwrap_or(0);
            agg.hit(got == expected, || {
                format!("{w:?} at distance {k}: star {got}, order {expected}")
            });
        }
    }
    vec![agg.into_check()]
}

fn bounds(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let mut marker_bound = Agg::new("marker-count-bound");
    let mut d = 2;
    while d <= opts.max_d {
        for w in generate_omega(d, GenerationMode::Exact) {
            let count = marker_set(&w)?.len() as u32;
            marker_bound.hit(count <= w.norm() / 2, || {
                format!("{w:?}: {count} markers > {}/2", w.norm())
            });
        }
        d += 2;
    }
    let mut bullet_norm = Agg::new("bullet-norm-bound");
    let mut bullet_support = Agg::new("bullet-support-bound");
    let mut bullet_marker = Agg::new("bullet-single-marker");
    for n in 0..=opts.max_n {
        for w in generate_bullet(n) {
            bullet_norm.hit(w.norm() % 2 == 0 && w.norm() <= 2 * n + 2, || {
                format!("n={n}: {w:?} has norm {}", w.norm())
            });
            bullet_support.hit(w.support_size() as u32 <= n + 2, || {
                format!("n={n}: {w:?} has {} entries", w.support_size())
            });
            match marker_set(&w) {
                Ok(m) => bullet_marker.hit(m == vec![1], || format!("{w:?}: markers {m:?}")),
                Err(e) => bullet_marker.hit(false, || format!("{w:?}: {e}")),
            }
        }
    }
    Ok(vec![
        marker_bound.into_check(),
        bullet_norm.into_check(),
        bullet_support.into_check(),
        bullet_marker.into_check(),
    ])
}

fn marker_coherence(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();

    // pinned elementary-operation values
    let m = |entries: &[u32], k: usize| MarkedComposition::new(c(entries), k).unwrap();
    let merges = [
        (m(&[1, 1, 1, 1], 3), 1usize, m(&[2, 1, 1], 2)),
        (m(&[1, 1, 1, 1], 3), 2, m(&[1, 2, 1], 1)),
        (m(&[1, 1, 1, 1], 3), 3, m(&[1, 1, 2], 3)),
    ];
    for (start, j, want) in &merges {
        let got = marked_merge(start, *j)?;
        out.push(check(
            &format!("marked-merge({start},{j})"),
            &got == want,
            format!("{got}, expected {want}"),
        ));
    }
    let inserts = [
        (m(&[2], 1), 0usize, m(&[2, 2], 2)),
        (m(&[2], 1), 1, m(&[2, 2], 1)),
        (m(&[1, 1], 1), 1, m(&[1, 2, 1], 1)),
    ];
    for (start, j, want) in &inserts {
        let got = marked_insert(start, *j)?;
        out.push(check(
            &format!("marked-insert({start},{j})"),
            &got == want,
            format!("{got}, expected {want}"),
        ));
    }

    // marked operations always land on a valid marker
    let mut closure = Agg::new("marked-ops-stay-valid");
    let mut d = 2;
    while d <= opts.max_d {
        for w in generate_omega(d, GenerationMode::Exact) {
            for k in marker_set(&w)? {
                let mc = MarkedComposition::new(w.clone(), k)?;
                for j in 1..w.support_size() {
                    match marked_merge(&mc, j) {
                        Ok(moved) => {
                            let valid = marker_set(moved.omega())?.contains(&moved.marker());
                            closure.hit(valid, || format!("merge {mc} at {j} gave {moved}"));
                        }
                        Err(e) => closure.hit(false, || format!("merge {mc} at {j}: {e}")),
                    }
                }
                if w.norm() + 2 <= opts.max_d {
                    for j in 0..=w.support_size() {
                        match marked_insert(&mc, j) {
                            Ok(moved) => {
                                let valid =
                                    marker_set(moved.omega())?.contains(&moved.marker());
                                closure.hit(valid, || format!("insert {mc} at {j} gave {moved}"));
                            }
                            Err(e) => closure.hit(false, || format!("insert {mc} at {j}: {e}")),
                        }
                    }
                }
            }
        }
        d += 2;
    }
    out.push(closure.into_check());

    // merge-only transport (equal norms) is single-valued
    let mut confluent = Agg::new("merge-only-transport-confluent");
    let mut d = 2;
    while d <= opts.max_d {
        let level = generate_omega(d, GenerationMode::Exact);
        for a in &level {
            for b in &level {
                if a == b || !geq(a, b) {
                    continue;
                }
                for k in marker_set(a)? {
                    let mc = MarkedComposition::new(a.clone(), k)?;
                    let set = transport_set(&mc, b)?;
                    confluent.hit(set.len() == 1, || {
                        format!("{mc} onto {b:?} reaches markers {set:?}")
                    });
                }
            }
        }
        d += 2;
    }
    out.push(confluent.into_check());

    // a pinned genuinely ambiguous transport
    let ambiguous = transport(&m(&[1, 1], 1), &c(&[2, 2]));
    let pinned = match &ambiguous {
        Err(Error::Ambiguous { markers, .. }) => markers == &vec![1, 2],
        _ => false,
    };
    out.push(check(
        "transport-(1,1)k1-onto-(2,2)-is-ambiguous",
        pinned,
        format!("{ambiguous:?}, expected markers [1, 2]"),
    ));
    let identity = transport(&m(&[2, 2], 2), &c(&[2, 2]))?;
    out.push(check(
        "transport-identity",
        identity == 2,
        format!("marker {identity}, expected 2"),
    ));
    Ok(out)
}

fn tmodel4() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let model = build_t_model(&c(&[4]))?;
    let got = model.f_vector();
    out.push(check(
        "model-(4)-f-vector",
        got == fv(&[1, 4, 6, 3]),
        format!("{got}, expected [1,4,6,3]"),
    ));
    let link = link_complex(&c(&[4]))?;
    let got = link.f_vector();
    out.push(check(
        "link-(4)-f-vector",
        got == fv(&[4, 6, 3]),
        format!("{got}, expected [4,6,3]"),
    ));
    let model2 = build_t_model(&c(&[2]))?;
    out.push(check(
        "model-(2)",
        model2.f_vector() == fv(&[1, 1]) && model2.covers == vec![(0, 1)],
        format!("{} covers {:?}", model2.f_vector(), model2.covers),
    ));
    let model11 = build_t_model(&c(&[1, 1]))?;
    out.push(check(
        "model-(1,1)",
        model11.f_vector() == fv(&[1]),
        format!("{}", model11.f_vector()),
    ));
    for (base, want) in [
        (c(&[2]), 3usize),
        (c(&[1, 1]), 1),
        (c(&[4]), 11),
        (c(&[2, 2]), 9),
    ] {
        let got = enumerate_labels(&base)?.len();
        out.push(check(
            &format!("label-count-{base:?}"),
            got == want,
            format!("{got}, expected {want}"),
        ));
    }
    out.push(check(
        "model-rejects-non-realizable-base",
        build_t_model(&c(&[3])).is_err(),
        "expected a domain error for base (3)",
    ));

    // incidences under the top cell of the full pattern
    let model = build_t_model(&c(&[4]))?;
    let top = model
        .find_cell(
            &ProductLabel {
                components: vec![c(&[1, 1, 1, 1])],
            },
            3,
        )
        .expect("top cell present");
    let covered: BTreeSet<(String, usize)> = model
        .covered_by(top)
        .into_iter()
        .map(|i| {
            let cell = &model.cells[i];
            (cell.label.to_string(), cell.marker)
        })
        .collect();
    let want: BTreeSet<(String, usize)> = [
        ("[2,1,1]".to_string(), 2usize),
        ("[1,2,1]".to_string(), 1),
        ("[1,1,2]".to_string(), 3),
    ]
    .into_iter()
    .collect();
    out.push(check(
        "covers-under-([1,1,1,1],3)",
        covered == want,
        format!("{covered:?}"),
    ));
    Ok(out)
}

fn tmodel_covers(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let mut grading = Agg::new("covers-drop-dimension-by-one");
    let mut non_orphan = Agg::new("positive-cells-cover-something");
    let mut cone = Agg::new("cone-identity-with-link");
    let mut fiber_bound = Agg::new("fiber-marker-bound");
    for n in 0..=opts.max_n.min(4) {
        for base in generate_bullet(n) {
            let model = build_t_model(&base)?;
            let _ = model.apex();
            for &(a, b) in &model.covers {
                grading.hit(model.cells[a].dim == model.cells[b].dim + 1, || {
                    format!("base {base:?}: cover ({a},{b})")
                });
            }
            for (i, cell) in model.cells.iter().enumerate() {
                if cell.dim == 0 {
                    continue;
                }
                non_orphan.hit(!model.covered_by(i).is_empty(), || {
                    format!("base {base:?}: cell {} k={} covers nothing", cell.label, cell.marker)
                });
            }
            let link = link_complex(&base)?;
            let model_counts = model.f_vector().counts;
            let link_counts = link.f_vector().counts;
            cone.hit(model_counts.first() == Some(&1), || {
                format!("base {base:?}: {} zero-cells", model_counts.first().unwrap_or(&0))
            });
            for (i, &count) in model_counts.iter().enumerate().skip(1) {
                let from_link = link_counts.get(i - 1).copied().unwrap_or(0);
                cone.hit(count == from_link, || {
                    format!("base {base:?}: dim {i} has {count} cells, link has {from_link}")
                });
            }
            for (label, count) in fiber_report(&base)? {
                let cap = label.kappa().norm() / 2;
                fiber_bound.hit(count as u32 <= cap, || {
                    format!("base {base:?}: label {label} has {count} markers > {cap}")
                });
            }
        }
    }
    Ok(vec![
        grading.into_check(),
        non_orphan.into_check(),
        cone.into_check(),
        fiber_bound.into_check(),
    ])
}

fn rational(rng: &mut ChaCha8Rng, span: i64) -> BigRational {
    let numer = rng.gen_range(-span..=span);
    let denom = rng.gen_range(1..=4i64);
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

fn classifier_roundtrip(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut round_trip = Agg::new("expand-classify-round-trip");
    let mut translation = Agg::new("translation-invariance");
    let mut scaling = Agg::new("positive-scale-invariance");
    let mut parity = Agg::new("degree-parity");
    let mut blocks = Agg::new("negativity-matches-blocks");

    for _ in 0..opts.cases {
        // a random divisor: distinct ascending rational roots, total degree ≤ 10
        let root_count = rng.gen_range(0..=3usize);
        let mut roots: BTreeSet<BigRational> = BTreeSet::new();
        while roots.len() < root_count {
            roots.insert(rational(&mut rng, 12));
        }
        let mut budget = 10u32;
        let mut real: Vec<(BigRational, u32)> = Vec::new();
        for root in roots {
            if budget == 0 {
                break;
            }
            let mult = rng.gen_range(1..=3u32).min(budget);
            budget -= mult;
            real.push((root, mult));
        }
        let mut pairs: Vec<(BigRational, BigRational, u32)> = Vec::new();
        if budget >= 2 && rng.gen_bool(0.4) {
            let re = rational(&mut rng, 6);
            let im = num::Signed::abs(&rational(&mut rng, 4))
                + BigRational::new(BigInt::from(1), BigInt::from(7));
            pairs.push((re, im, 1));
        }

        let f = expand_from_divisor(&real, &pairs)?;
        let want = Composition::new(real.iter().map(|(_, m)| *m).collect())
            .unwrap_or_else(|_| Composition::empty());
        let got = classify(&f)?;
        round_trip.hit(got == want, || format!("{f:?}: {got:?}, expected {want:?}"));

        let shift = rational(&mut rng, 5);
        let moved = classify(&f.translate(&shift))?;
        translation.hit(moved == want, || {
            format!("{f:?} shifted by {shift}: {moved:?}")
        });

        let factor = num::Signed::abs(&rational(&mut rng, 5))
            + BigRational::new(BigInt::from(1), BigInt::from(3));
        let scaled = classify(&f.scale(&factor))?;
        scaling.hit(scaled == want, || format!("{f:?} scaled: {scaled:?}"));

        let degree = f.degree().unwrap_or(0) as u32;
        parity.hit(got.norm() % 2 == degree % 2, || {
            format!("{f:?}: norm {} vs degree {degree}", got.norm())
        });

        if degree.is_multiple_of(2) && !got.is_empty() {
            let comps = negativity_components(&f)?;
            match got.decompose() {
                Ok(decomp) => {
                    let same = comps.len() == decomp.blocks.len()
                        && comps.iter().zip(&decomp.blocks).all(|(comp, block)| {
                            comp.component_type == block.element
                                && comp.marker_root_index == block.start
                        });
                    blocks.hit(same, || format!("{f:?}: {comps:?} vs {decomp:?}"));
                }
                Err(e) => blocks.hit(false, || format!("{f:?}: decompose failed: {e}")),
            }
        }
    }
    Ok(vec![
        round_trip.into_check(),
        translation.into_check(),
        scaling.into_check(),
        parity.into_check(),
        blocks.into_check(),
    ])
}

fn families() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let fam: FamilyPolynomial = "0,0,-1;0;1".parse()?;
    let samples = [
        BigRational::from(BigInt::from(1)),
        BigRational::new(BigInt::from(1), BigInt::from(2)),
        BigRational::from(BigInt::from(0)),
    ];
    let report = classify_family(&fam, &samples)?;
    let types: Vec<Composition> = report.rows.iter().map(|r| r.divisor_type.clone()).collect();
    out.push(check(
        "pinching-pair",
        types == vec![c(&[1, 1]), c(&[1, 1]), c(&[2])] && report.consistent,
        format!("types {types:?}, consistent {}", report.consistent),
    ));

    let fam: FamilyPolynomial = "0,1;0;1".parse()?;
    let samples = [
        BigRational::from(BigInt::from(1)),
        BigRational::from(BigInt::from(0)),
    ];
    let report = classify_family(&fam, &samples)?;
    let ok = report.rows[0].divisor_type.is_empty()
        && report.rows[1].divisor_type == c(&[2])
        && report.consistent;
    out.push(check(
        "appearing-pair",
        ok,
        format!(
            "types {:?}, consistent {}",
            report.rows.iter().map(|r| r.divisor_type.clone()).collect::<Vec<_>>(),
            report.consistent
        ),
    ));

    let fam: FamilyPolynomial = "1;1".parse()?;
    let samples = [
        BigRational::from(BigInt::from(0)),
        BigRational::from(BigInt::from(3)),
    ];
    let report = classify_family(&fam, &samples)?;
    out.push(check(
        "constant-family",
        report.transitions.is_empty() && report.consistent,
        format!("{} transitions", report.transitions.len()),
    ));
    Ok(out)
}
