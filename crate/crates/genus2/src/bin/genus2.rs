//! Command-line workbench: verification, invariants, rewriting, building,
//! planning, and region plots for genus-2 positive factorizations.
//!
//! Exit code is 0 iff every verification in the invocation succeeded.
//! Reports are `key: value` lines in a stable order; `--json` emits the
//! same lines as a JSON array of `[key, value]` pairs (same order).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use genus2::catalog::{self, load_catalog};
use genus2::factorization::{
    apply_moves_script, document_for, CatalogDocument, Factorization, FibrationType,
};
use genus2::geography::{
    invariants_from_type, pi1_presentation, plan, region_check, slope, tietze_simplify,
    GeographyPoint, RegionClass, DEFAULT_TIETZE_BUDGET,
};
use genus2::mcg::relation_checks;
use genus2::words::DEFAULT_MAX_LEN;
use genus2::McgWord;

#[derive(Parser)]
#[command(name = "genus2", version, about = "genus-2 positive factorization workbench")]
struct Cli {
    /// Emit the report as JSON (same key/value pairs, same order).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify a named factorization from a file: identity, type, H1.
    Verify {
        file: PathBuf,
        name: String,
        /// Cap on intermediate word lengths during composition.
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        word_cap: usize,
        /// Rewrite budget for the pi_1 presentation simplification.
        #[arg(long, default_value_t = DEFAULT_TIETZE_BUDGET)]
        tietze_budget: usize,
    },
    /// Numerical invariants of a fibration type N,S.
    Invariants {
        /// Fibration type as `N,S` (non-separating, separating counts).
        #[arg(long = "type", value_name = "N,S")]
        ty: String,
    },
    /// Apply a rewrite script to a named factorization and re-verify.
    Rewrite {
        file: PathBuf,
        name: String,
        /// Script file: hurwitz/rotate/conjugate/simplify/lantern/chain lines.
        #[arg(long)]
        script: PathBuf,
        /// Output file for the rewritten factorization (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fiber sum of two factorization files (first fact of each by default).
    Fibersum {
        f1: PathBuf,
        f2: PathBuf,
        /// Twisting word applied to the second factorization.
        #[arg(long, default_value = "e")]
        twist: String,
        /// Factorization name in the first file.
        #[arg(long)]
        name1: Option<String>,
        /// Factorization name in the second file.
        #[arg(long)]
        name2: Option<String>,
        /// Output file for the sum (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a catalog build script: X, Xt, W2438, or Mt.
    Build {
        /// One of `X`, `Xt`, `W2438`, `Mt`.
        target: String,
        /// Induction parameter for Xt and Mt.
        #[arg(long, default_value_t = 1)]
        t: u32,
        /// Output file for the built factorization (omitted: report only).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Plan a construction for a geography point (chi_h, c1^2).
    Plan {
        #[arg(long)]
        chi: i64,
        #[arg(long)]
        c1sq: i64,
        /// Materialize the recipe into a verified factorization.
        #[arg(long)]
        materialize: bool,
    },
    /// Classify the lattice points of the geography region.
    Region {
        /// Largest chi_h column to scan (columns 0..=xmax).
        #[arg(long, default_value_t = 12)]
        xmax: i64,
        /// Write an SVG plot of the classified points.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the table as tab-separated values.
        #[arg(long)]
        tsv: Option<PathBuf>,
    },
    /// Run the full relation suite for the twist generators.
    Relcheck,
}

/// Report: ordered key/value lines plus an overall pass flag.
struct Report {
    lines: Vec<(String, String)>,
    ok: bool,
}

impl Report {
    fn new() -> Self {
        Report { lines: Vec::new(), ok: true }
    }

    fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.lines.push((key.into(), value.to_string()));
    }

    fn fail(&mut self, key: impl Into<String>, value: impl ToString) {
        self.push(key, value);
        self.ok = false;
    }

    fn emit(&self, json: bool) {
        if json {
            let pairs: Vec<serde_json::Value> = self
                .lines
                .iter()
                .map(|(k, v)| serde_json::json!([k, v]))
                .collect();
            let doc = serde_json::json!({ "ok": self.ok, "report": pairs });
            println!("{doc}");
        } else {
            for (k, v) in &self.lines {
                println!("{k}: {v}");
            }
        }
    }
}

fn parse_type(s: &str) -> Result<FibrationType, String> {
    let (n, t) = s.split_once(',').ok_or("expected `N,S`")?;
    let n = n.trim().parse().map_err(|_| "N must be a non-negative integer")?;
    let s = t.trim().parse().map_err(|_| "S must be a non-negative integer")?;
    Ok(FibrationType { n, s })
}

fn read_document(path: &Path) -> genus2::Result<CatalogDocument> {
    CatalogDocument::parse(&std::fs::read_to_string(path)?)
}

fn write_or_print(doc: &CatalogDocument, out: Option<&Path>) -> genus2::Result<()> {
    let text = doc.render();
    // outputs must round-trip through the parser bit-exactly
    debug_assert_eq!(CatalogDocument::parse(&text)?.render(), text);
    match out {
        Some(path) => std::fs::write(path, text).map_err(genus2::Error::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify_into(report: &mut Report, fact: &Factorization, word_cap: usize) -> genus2::Result<()> {
    let vr = fact.verify_identity_capped(word_cap)?;
    report.push("type", vr.fibration_type);
    if vr.verified {
        report.push("verified", "true");
        if let Some(w) = &vr.witness {
            report.push("witness-length", w.letters().len());
        }
    } else {
        report.fail("verified", "false");
        report.fail("failure", vr.failure.unwrap_or_default());
    }
    Ok(())
}

fn run_verify(
    report: &mut Report,
    file: &Path,
    name: &str,
    word_cap: usize,
    tietze_budget: usize,
) -> genus2::Result<()> {
    let doc = read_document(file)?;
    let fact = doc.factorization(name)?;
    report.push("name", name);
    verify_into(report, &fact, word_cap)?;
    let (_, h1) = fact.mark_h1();
    report.push("H1", h1);
    let pres = tietze_simplify(&pi1_presentation(&fact)?, tietze_budget);
    report.push("pi1-generators", pres.generator_count());
    report.push("pi1-relators", pres.relators.len());
    if pres.budget_exhausted {
        report.push("pi1-budget-exhausted", "true");
    }
    Ok(())
}

fn run_invariants(report: &mut Report, ty: FibrationType) -> genus2::Result<()> {
    let inv = invariants_from_type(ty)?;
    report.push("type", ty);
    report.push("e", inv.e);
    report.push("sigma", inv.sigma);
    report.push("chi_h", inv.chi_h);
    report.push("c1sq", inv.c1sq);
    report.push("m", inv.m);
    match slope(ty) {
        Ok(a) => report.push("slope", a),
        Err(_) => report.push("slope", "undefined (chi_h = 0)"),
    }
    Ok(())
}

fn run_rewrite(
    report: &mut Report,
    file: &Path,
    name: &str,
    script: &Path,
    out: Option<&Path>,
) -> genus2::Result<()> {
    let doc = read_document(file)?;
    let fact = doc.factorization(name)?;
    let text = std::fs::read_to_string(script)?;
    let rewritten = apply_moves_script(&doc, &fact, &text)?;
    report.push("name", name);
    verify_into(report, &rewritten, DEFAULT_MAX_LEN)?;
    write_or_print(&document_for(name, &rewritten), out)?;
    Ok(())
}

fn run_fibersum(
    report: &mut Report,
    f1: &Path,
    f2: &Path,
    twist: &str,
    name1: Option<&str>,
    name2: Option<&str>,
    out: Option<&Path>,
) -> genus2::Result<()> {
    let d1 = read_document(f1)?;
    let d2 = read_document(f2)?;
    let first_fact = |d: &CatalogDocument, path: &Path| -> genus2::Result<String> {
        d.fact_names()
            .first()
            .map(|s| s.to_string())
            .ok_or_else(|| genus2::Error::UnknownEntry(format!("no fact in {}", path.display())))
    };
    let n1 = match name1 {
        Some(n) => n.to_string(),
        None => first_fact(&d1, f1)?,
    };
    let n2 = match name2 {
        Some(n) => n.to_string(),
        None => first_fact(&d2, f2)?,
    };
    let fa = d1.factorization(&n1)?;
    let fb = d2.factorization(&n2)?;
    let phi: McgWord = twist.parse()?;
    let sum = fa.fiber_sum(&fb, &phi)?;
    report.push("summands", format!("{n1} + {n2}"));
    report.push("twist", &phi);
    verify_into(report, &sum, DEFAULT_MAX_LEN)?;
    write_or_print(&document_for("sum", &sum), out)?;
    Ok(())
}

fn run_build(
    report: &mut Report,
    target: &str,
    t: u32,
    out: Option<&Path>,
) -> genus2::Result<()> {
    let cat = load_catalog()?;
    let (fact, build) = match target {
        "X" => catalog::build_x(&cat)?,
        "Xt" => catalog::build_xt(&cat, t)?,
        "W2438" => catalog::build_2438(&cat)?,
        "Mt" => catalog::build_mt(&cat, t)?,
        other => return Err(genus2::Error::UnknownEntry(format!("build target `{other}`"))),
    };
    report.push("target", target);
    for (k, v) in &build.lines {
        report.push(k, v);
    }
    verify_into(report, &fact, DEFAULT_MAX_LEN)?;
    if out.is_some() {
        write_or_print(&document_for(target, &fact), out)?;
    }
    Ok(())
}

fn run_plan(report: &mut Report, chi: i64, c1sq: i64, materialize: bool) -> genus2::Result<()> {
    let p = GeographyPoint { x: chi, y: c1sq };
    report.push("point", format!("({chi}, {c1sq})"));
    report.push("region", region_check(p, false));
    let recipe = plan(p)?;
    report.push("recipe", &recipe);
    let predicted = recipe.predicted_type()?;
    report.push("predicted-type", predicted);
    if let Some(stub) = recipe.stub_leaf() {
        report.push("stub-leaf", stub);
    }
    if materialize {
        if let Some(stub) = recipe.stub_leaf() {
            return Err(genus2::Error::StubEntry(stub.to_string()));
        }
        let cat = load_catalog()?;
        let fact = catalog::materialize(&cat, &recipe)?;
        verify_into(report, &fact, DEFAULT_MAX_LEN)?;
        if fact.type_of()? != predicted {
            report.fail("type-mismatch", format!("built {} != predicted {predicted}", fact.type_of()?));
        }
    }
    Ok(())
}

fn region_rows(xmax: i64) -> Vec<(i64, i64, RegionClass)> {
    let mut rows = Vec::new();
    for x in 0..=xmax {
        // pad two rows beyond the admissible band so the violations show
        for y in (2 * x - 8)..=(6 * x - 1) {
            rows.push((x, y, region_check(GeographyPoint { x, y }, false)));
        }
    }
    rows
}

fn region_svg(rows: &[(i64, i64, RegionClass)], xmax: i64) -> String {
    let color = |c: RegionClass| match c {
        RegionClass::ViolatesNoether | RegionClass::ViolatesUpper => "#d0d0d0",
        RegionClass::AdmissibleBelowBk => "#7fbf7f",
        RegionClass::OnBk => "#1f6f1f",
        RegionClass::BetweenBkAndCeiling => "#3f8fdf",
        RegionClass::BetweenCeilingAndUpper => "#df8f3f",
    };
    let cell = 12;
    let ymin = -8;
    let ymax = 6 * xmax - 1;
    let width = (xmax + 2) * cell;
    let height = (ymax - ymin + 2) * cell;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    );
    for &(x, y, class) in rows {
        let px = (x + 1) * cell;
        let py = (ymax - y) * cell;
        out.push_str(&format!(
            "  <rect x=\"{px}\" y=\"{py}\" width=\"{cell}\" height=\"{cell}\" \
             fill=\"{}\"><title>({x},{y}) {class}</title></rect>\n",
            color(class)
        ));
    }
    out.push_str("</svg>\n");
    out
}

fn run_region(
    report: &mut Report,
    xmax: i64,
    svg: Option<&Path>,
    tsv: Option<&Path>,
) -> genus2::Result<()> {
    let rows = region_rows(xmax);
    report.push("points", rows.len());
    for &(x, y, class) in &rows {
        report.push(format!("({x},{y})"), class);
    }
    if let Some(path) = tsv {
        let mut text = String::from("chi_h\tc1sq\tclass\n");
        for &(x, y, class) in &rows {
            text.push_str(&format!("{x}\t{y}\t{class}\n"));
        }
        std::fs::write(path, text)?;
    }
    if let Some(path) = svg {
        std::fs::write(path, region_svg(&rows, xmax))?;
    }
    Ok(())
}

fn run_relcheck(report: &mut Report) {
    for (name, holds) in relation_checks() {
        if holds {
            report.push(name, "ok");
        } else {
            report.fail(name, "FAIL");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = Report::new();
    let result = match &cli.cmd {
        Cmd::Verify { file, name, word_cap, tietze_budget } => {
            run_verify(&mut report, file, name, *word_cap, *tietze_budget)
        }
        Cmd::Invariants { ty } => match parse_type(ty) {
            Ok(t) => run_invariants(&mut report, t),
            Err(msg) => Err(genus2::Error::Parse(msg.to_string())),
        },
        Cmd::Rewrite { file, name, script, out } => {
            run_rewrite(&mut report, file, name, script, out.as_deref())
        }
        Cmd::Fibersum { f1, f2, twist, name1, name2, out } => run_fibersum(
            &mut report,
            f1,
            f2,
            twist,
            name1.as_deref(),
            name2.as_deref(),
            out.as_deref(),
        ),
        Cmd::Build { target, t, out } => run_build(&mut report, target, *t, out.as_deref()),
        Cmd::Plan { chi, c1sq, materialize } => {
            run_plan(&mut report, *chi, *c1sq, *materialize)
        }
        Cmd::Region { xmax, svg, tsv } => {
            run_region(&mut report, *xmax, svg.as_deref(), tsv.as_deref())
        }
        Cmd::Relcheck => {
            run_relcheck(&mut report);
            Ok(())
        }
    };
    if let Err(e) = result {
        report.fail("error", e);
    }
    report.emit(cli.json);
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
