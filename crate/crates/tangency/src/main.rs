//! Command-line front end. All domain logic lives in the library; this
//! binary parses flags, dispatches, and renders JSON / DOT / text tables
//! with byte-deterministic output.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tangency::cells::{f_vector, normal_star, ramification_o};
use tangency::classify::{
    classify, classify_family, negativity_components, parse_samples, NegativityComponent,
};
use tangency::dot::{link_dot, poset_dot, star_dot, tmodel_dot};
use tangency::markers::{blocks, marker_set, transport, MarkedComposition};
use tangency::poly::{isolated_roots_with_multiplicity, ratio_display};
use tangency::poset::{
    bullet_geq_oracle, bullet_mor_enumerate, generate_bullet, generate_omega, geq, hasse,
    mor_enumerate, GenerationMode, PosetKind,
};
use tangency::tmodel::{build_t_model, fiber_report, link_complex, ProductLabel};
use tangency::verify::{run_suite, suite_names, SuiteOptions, SuiteReport};
use tangency::{
    Ambient, BlockStructure, Composition, Error, FamilyPolynomial, IsolatedRoot, Morphism,
    RationalPolynomial,
};

#[derive(Parser)]
#[command(
    name = "tangency",
    version,
    about = "Posets of boundary-tangency patterns, their cell complexes, and an exact polynomial classifier"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PosetArg {
    Omega,
    Bullet,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Upto,
}

impl From<ModeArg> for GenerationMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => GenerationMode::Exact,
            ModeArg::Upto => GenerationMode::Upto,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// List the elements of a pattern universe.
    Gen {
        #[arg(long, value_enum)]
        poset: PosetArg,
        /// Degree bound for the full universe (`--poset omega`).
        #[arg(long)]
        d: Option<u32>,
        /// Tangency bound for the realizable universe (`--poset bullet`).
        #[arg(long)]
        n: Option<u32>,
        /// exact: norm = d; upto: norm ≤ d with matching parity.
        #[arg(long, value_enum, default_value_t = ModeArg::Upto)]
        mode: ModeArg,
    },
    /// Decide whether A ≥ B in the chosen order, with a witnessing morphism.
    Order {
        #[arg(long, value_enum, default_value_t = PosetArg::Omega)]
        kind: PosetArg,
        a: Composition,
        b: Composition,
    },
    /// Enumerate all monotone multiplicity-respecting morphisms A → B.
    Mor {
        #[arg(long, value_enum, default_value_t = PosetArg::Omega)]
        kind: PosetArg,
        a: Composition,
        b: Composition,
    },
    /// Hasse diagram of a pattern universe.
    Hasse {
        #[arg(long, value_enum)]
        poset: PosetArg,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_enum, default_value_t = ModeArg::Upto)]
        mode: ModeArg,
    },
    /// f-vector of the divisor-type cell structure on a degree-d space.
    /// Ambients: full, balanced, sphere, balanced_sphere.
    Cells {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        ambient: Ambient,
    },
    /// Normal star of a stratum inside its degree-d universe.
    Star {
        #[arg(long)]
        omega: Composition,
        #[arg(long)]
        d: u32,
    },
    /// Ramification count o(omega, target) over the merge closure.
    Ram {
        #[arg(long)]
        omega: Composition,
        #[arg(long)]
        target: Composition,
    },
    /// Marker set and block structure; with --marker and --target, transport
    /// the marker along all degenerations onto the target.
    Markers {
        #[arg(long)]
        omega: Composition,
        #[arg(long)]
        marker: Option<usize>,
        #[arg(long)]
        target: Option<Composition>,
    },
    /// Local trajectory-space model over a realizable base pattern.
    Tmodel {
        #[arg(long)]
        omega: Composition,
        /// Emit the link of the apex instead of the full cone.
        #[arg(long)]
        link: bool,
        /// Emit the per-label marker counts of the fiber.
        #[arg(long)]
        fiber: bool,
    },
    /// Divisor type and negativity components of an exact rational polynomial
    /// (comma-separated coefficients, constant first).
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        poly: RationalPolynomial,
    },
    /// Classify a one-parameter family at given samples and check the
    /// degeneration order along the way.
    Family {
        /// u-coefficients as polynomials in t, ';'-separated: "0,0,-1;0;1".
        #[arg(long, allow_hyphen_values = true)]
        family: FamilyPolynomial,
        /// Comma-separated rational parameter values, generic first.
        #[arg(long, allow_hyphen_values = true)]
        samples: String,
    },
    /// Run a named verification suite (or "all").
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_d: u32,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value_t = 120)]
        cases: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn usage(detail: impl Into<String>) -> Error {
    Error::Parse {
        detail: detail.into(),
    }
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| Error::Domain {
            detail: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, Error> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Domain {
        detail: format!("serialization failed: {e}"),
    })?;
    s.push('\n');
    Ok(s)
}

fn no_dot() -> Error {
    usage("this command has no DOT form; use --format json or table")
}

#[derive(Serialize)]
struct GenPayload {
    kind: String,
    count: usize,
    elements: Vec<Composition>,
}

#[derive(Serialize)]
struct OrderPayload {
    kind: String,
    a: Composition,
    b: Composition,
    related: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Morphism>,
}

#[derive(Serialize)]
struct MorPayload {
    kind: String,
    source: Composition,
    target: Composition,
    count: usize,
    morphisms: Vec<Morphism>,
}

#[derive(Serialize)]
struct CellsPayload {
    ambient: String,
    d: u32,
    counts: Vec<u64>,
}

#[derive(Serialize)]
struct RamPayload {
    omega: Composition,
    target: Composition,
    count: u64,
}

#[derive(Serialize)]
struct MarkersPayload {
    omega: Composition,
    markers: Vec<usize>,
    blocks: BlockStructure,
    #[serde(skip_serializing_if = "Option::is_none")]
    stratum: Option<Composition>,
}

#[derive(Serialize)]
struct TransportPayload {
    omega: Composition,
    marker: usize,
    target: Composition,
    transported: usize,
}

#[derive(Serialize)]
struct FiberRow {
    label: ProductLabel,
    markers: usize,
}

#[derive(Serialize)]
struct FiberPayload {
    base: Composition,
    rows: Vec<FiberRow>,
}

#[derive(Serialize)]
struct ClassifyPayload {
    poly: RationalPolynomial,
    #[serde(rename = "type")]
    divisor_type: Composition,
    roots: Vec<IsolatedRoot>,
    /// None when {P ≤ 0} is unbounded (odd degree or negative lead).
    components: Option<Vec<NegativityComponent>>,
}

fn run(cli: Cli) -> Result<u8, Error> {
    let format = cli.format;
    let out = cli.out;
    match cli.command {
        Cmd::Gen { poset, d, n, mode } => {
            let (kind, elements) = resolve_universe(poset, d, n, mode)?;
            let payload = GenPayload {
                kind,
                count: elements.len(),
                elements,
            };
            let body = match format {
                Format::Json => json(&payload)?,
                Format::Dot => return Err(no_dot()),
                Format::Table => {
                    let mut t = format!("{} elements ({})\n", payload.count, payload.kind);
                    for e in &payload.elements {
                        let _ = writeln!(t, "  {e}");
                    }
                    t
                }
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Cmd::Order { kind, a, b } => {
            let (related, witness, kind_name) = match kind {
                PosetArg::Omega => {
                    let related = geq(&a, &b);
                    let witness = mor_enumerate(&a, &b).into_iter().next();
                    (related, witness, "omega")
                }
                PosetArg::Bullet => {
                    let related = bullet_geq_oracle(&a, &b)?;
                    let witness = if related {
                        bullet_mor_enumerate(&a, &b)?.into_iter().next()
                    } else {
                        None
                    };
                    (related, witness, "bullet")
                }
            };
            let payload = OrderPayload {
                kind: kind_name.into(),
                a: a.clone(),
                b: b.clone(),
                related,
                witness: if related { witness } else { None },
            };
            let body = match format {
                Format::Json => json(&payload)?,
                Format::Dot => return Err(no_dot()),
                Format::Table => {
                    let mut t = format!("{a} >= {b} ({kind_name}): {related}\n");
                    if let Some(w) = &payload.witness {
                        let _ = writeln!(t, "  witness map {:?}", w.map);
                    }
                    t
                }
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Cmd::Mor { kind, a, b } => {
            let (morphisms, kind_name) = match kind {
                PosetArg::Omega => (mor_enumerate(&a, &b), "omega"),
                PosetArg::Bullet => (bullet_mor_enumerate(&a, &b)?, "bullet"),
            };
            let payload = MorPayload {
                kind: kind_name.into(),
                source: a.clone(),
                target: b.clone(),
                count: morphisms.len(),
                morphisms,
            };
            let body = match format {
                Format::Json => json(&payload)?,
                Format::Dot => return Err(no_dot()),
                Format::Table => {
                    let mut t = format!(
                        "{} morphisms {a} -> {b} ({kind_name})\n",
                        payload.count
                    );
                    for m in &payload.morphisms {
                        let _ = writeln!(t, "  map {:?} parity {:?}", m.map, m.parity);
                    }
                    t
                }
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Cmd::Hasse { poset, d, n, mode } => {
            let (_, elements) = resolve_universe(poset, d, n, mode)?;
            let kind = match poset {
                PosetArg::Omega => PosetKind::Omega,
                PosetArg::Bullet => PosetKind::Bullet,
            };
            let diagram = hasse(&elements, kind)?;
            let body = match format {
                Format::Json => json(&diagram)?,
                Format::Dot => poset_dot(&diagram),
                Format::Table => {
                    let mut t = format!(
                        "{} elements, {} covers\n",
                        diagram.elements.len(),
                        diagram.covers.len()
                    );
                    for &(i, j) in &diagram.covers {
                        let _ = writeln!(t, "  {} -> {}", diagram.elements[i], diagram.elements[j]);
                    }
                    t
                }
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Cmd::Cells { d, ambient } => {
            let f = f_vector(d, ambient);
            let payload = CellsPayload {
                ambient: ambient.to_string(),
                d,
                counts: f.counts.clone(),
            };
            let body = match format {
                Format::Json => json(&payload)?,
                Format::Dot => return Err(no_dot()),
                Format::Table => format!(
                    "d={d} ambient={ambient}: f={f} euler={}\n",
                    f.euler_characteristic()
                ),
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Cmd::Star { omega, d } => {
            let star = normal_star(&omega, d)?;
            let body = match format {
                Format::Json => json(&star)?,
                Format::Dot => star_dot(&star),
                Format::Table => {
                    let mut t = format!(
                        "star of {omega} in degree {d}: f={} ({} covers)\n",
                        star.f_vector(),
                        star.covers.len()
                    );
                    for cell in &star.cells {
                        let _ = writeln!(t, "  dim {}: {}", cell.dim, cell.label);
                    }
                    t
                }
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Cmd::Ram { omega, target } => {
            let count = ramification_o(&omega, &target)?;
            let payload = RamPayload {
                omega: omega.clone(),
                target: target.clone(),
                count,
            };
            let body = match format {
                Format::Json => json(&payload)?,
                Format::Dot => return Err(no_dot()),
                Format::Table => format!("o({omega}, {target}) = {count}\n"),
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Cmd::Markers {
            omega,
            marker,
            target,
        } => match (marker, target) {
            (None, Some(_)) => Err(usage("--target requires --marker")),
            (marker, None) => {
                let markers = marker_set(&omega)?;
                let stratum = match marker {
                    Some(k) => {
                        let mc = MarkedComposition::new(omega.clone(), k)?;
                        Some(mc.xi_at_marker())
                    }
                    None => None,
                };
                let payload = MarkersPayload {
                    omega: omega.clone(),
                    markers,
                    blocks: blocks(&omega)?,
                    stratum,
                };
                let body = match format {
                    Format::Json => json(&payload)?,
                    Format::Dot => return Err(no_dot()),
                    Format::Table => {
                        let mut t = format!("markers of {omega}: {:?}\n", payload.markers);
                        for b in &payload.blocks.blocks {
                            let _ = writeln!(
                                t,
                                "  block {}..{} marker {}",
                                b.start, b.end, b.marker
                            );
                        }
                        if let Some(s) = &payload.stratum {
                            let _ = writeln!(t, "  stratum at marker: {s}");
                        }
                        t
                    }
                };
                emit(&out, &body)?;
                Ok(0)
            }
            (Some(k), Some(target)) => {
                let mc = MarkedComposition::new(omega.clone(), k)?;
                let transported = transport(&mc, &target)?;
                let payload = TransportPayload {
                    omega: omega.clone(),
                    marker: k,
                    target: target.clone(),
                    transported,
                };
                let body = match format {
                    Format::Json => json(&payload)?,
                    Format::Dot => return Err(no_dot()),
                    Format::Table => {
                        format!("marker {k} of {omega} lands on {transported} in {target}\n")
                    }
                };
                emit(&out, &body)?;
                Ok(0)
            }
        },
        Cmd::Tmodel { omega, link, fiber } => {
            if link && fiber {
                return Err(usage("--link and --fiber are mutually exclusive"));
            }
            let body = if fiber {
                let rows: Vec<FiberRow> = fiber_report(&omega)?
                    .into_iter()
                    .map(|(label, markers)| FiberRow { label, markers })
                    .collect();
                let payload = FiberPayload {
                    base: omega.clone(),
                    rows,
                };
                match format {
                    Format::Json => json(&payload)?,
                    Format::Dot => return Err(no_dot()),
                    Format::Table => {
                        let mut t = format!("fiber over {omega}\n");
                        for row in &payload.rows {
                            let _ = writeln!(t, "  {}: {} markers", row.label, row.markers);
                        }
                        t
                    }
                }
            } else if link {
                let complex = link_complex(&omega)?;
                match format {
                    Format::Json => json(&complex)?,
                    Format::Dot => link_dot(&complex),
                    Format::Table => {
                        let mut t = format!(
                            "link over {omega}: f={}\n",
                            complex.f_vector()
                        );
                        for cell in &complex.cells {
                            let _ = writeln!(
                                t,
                                "  dim {}: {} k={} stratum {}",
                                cell.dim, cell.label, cell.marker, cell.stratum
                            );
                        }
                        t
                    }
                }
            } else {
                let model = build_t_model(&omega)?;
                match format {
                    Format::Json => json(&model)?,
                    Format::Dot => tmodel_dot(&model),
                    Format::Table => {
                        let mut t = format!(
                            "model over {omega}: f={} ({} covers)\n",
                            model.f_vector(),
                            model.covers.len()
                        );
                        for cell in &model.cells {
                            let _ = writeln!(
                                t,
                                "  dim {}: {} k={} stratum {}",
                                cell.dim, cell.label, cell.marker, cell.stratum
                            );
                        }
                        t
                    }
                }
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Cmd::Classify { poly } => {
            let divisor_type = classify(&poly)?;
            let roots = isolated_roots_with_multiplicity(&poly)?;
            let components = match negativity_components(&poly) {
                Ok(c) => Some(c),
                Err(Error::UnboundedNegative) => None,
                Err(e) => return Err(e),
            };
            let payload = ClassifyPayload {
                poly: poly.clone(),
                divisor_type: divisor_type.clone(),
                roots,
                components,
            };
            let body = match format {
                Format::Json => json(&payload)?,
                Format::Dot => return Err(no_dot()),
                Format::Table => {
                    let mut t = format!("{}\n  type: {divisor_type}\n", poly.pretty("u"));
                    for r in &payload.roots {
                        let _ = writeln!(
                            t,
                            "  root in {} multiplicity {}",
                            r.enclosure, r.multiplicity
                        );
                    }
                    match &payload.components {
                        None => {
                            let _ = writeln!(t, "  negativity set unbounded");
                        }
                        Some(comps) => {
                            for c in comps {
                                let _ = writeln!(t, "  component {c}");
                            }
                        }
                    }
                    t
                }
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Cmd::Family { family, samples } => {
            let samples = parse_samples(&samples)?;
            let report = classify_family(&family, &samples)?;
            let body = match format {
                Format::Json => json(&report)?,
                Format::Dot => return Err(no_dot()),
                Format::Table => {
                    let mut t = String::new();
                    for row in &report.rows {
                        let _ = writeln!(
                            t,
                            "  t={}: type {}",
                            ratio_display(&row.t),
                            row.divisor_type
                        );
                    }
                    for tr in &report.transitions {
                        let _ = writeln!(
                            t,
                            "  {} -> {}: {} => {} order {} reduced-norm {}",
                            ratio_display(&tr.from_t),
                            ratio_display(&tr.to_t),
                            tr.generic,
                            tr.degenerate,
                            if tr.order_holds { "ok" } else { "VIOLATED" },
                            if tr.reduced_norm_rises { "rises" } else { "FLAT" },
                        );
                    }
                    let _ = writeln!(t, "consistent: {}", report.consistent);
                    t
                }
            };
            emit(&out, &body)?;
            Ok(if report.consistent { 0 } else { 1 })
        }
        Cmd::Verify {
            suite,
            max_d,
            max_n,
            cases,
            seed,
        } => {
            if suite != "all" && !suite_names().contains(&suite.as_str()) {
                return Err(usage(format!(
                    "unknown suite {suite:?}; known: {} and all",
                    suite_names().join(", ")
                )));
            }
            let opts = SuiteOptions {
                max_d,
                max_n,
                cases,
                seed,
            };
            let reports = run_suite(&suite, &opts)?;
            let all_passed = reports.iter().all(|r| r.passed);
            let body = match format {
                Format::Json => json(&reports)?,
                Format::Dot => return Err(no_dot()),
                Format::Table => render_verify(&reports),
            };
            emit(&out, &body)?;
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn resolve_universe(
    poset: PosetArg,
    d: Option<u32>,
    n: Option<u32>,
    mode: ModeArg,
) -> Result<(String, Vec<Composition>), Error> {
    match poset {
        PosetArg::Omega => {
            let d = d.ok_or_else(|| usage("--poset omega requires --d"))?;
            Ok((
                format!("omega-{d}"),
                generate_omega(d, mode.into()),
            ))
        }
        PosetArg::Bullet => {
            let n = n.ok_or_else(|| usage("--poset bullet requires --n"))?;
            Ok((format!("bullet-{n}"), generate_bullet(n)))
        }
    }
}

fn render_verify(reports: &[SuiteReport]) -> String {
    let mut t = String::new();
    for report in reports {
        let _ = writeln!(
            t,
            "suite {} — {}",
            report.suite,
            if report.passed { "PASS" } else { "FAIL" }
        );
        for check in &report.checks {
            let _ = writeln!(
                t,
                "  {} {} — {}",
                if check.passed { "PASS" } else { "FAIL" },
                check.name,
                check.detail
            );
        }
    }
    t
}
