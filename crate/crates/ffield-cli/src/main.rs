//! Command-line surface: parse exact inputs, run individual checks or named
//! suites, and emit deterministic machine-readable reports.
//!
//! Exit codes: 0 when every check holds, 1 when a proved inequality was
//! violated (always a defect or a genuine counterexample — never swallowed),
//! 2 for invalid input.

mod output;
mod solution_file;
mod suites;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ffield::conic::{
    classify_theorem_3_4, divisibility_check, fermat_type_check, image_degree, theorem_3_1_check,
    PlaneMorphism, SolutionCase,
};
use ffield::error::Error;
use ffield::families::Family;
use ffield::gcd_bounds::{
    check_cor_2_3, check_prop_2_1, check_prop_2_2, gcd_sum, multiple_zero_excess,
    unit_sum_lower_bound, wronskian_witness, Witness, DEFAULT_WRONSKIAN_CAP,
};
use ffield::implicitize::implicitize;
use ffield::poly::fmt_rat;
use ffield::report::BoundReport;
use ffield::sunit::certify_sunit;
use ffield::wronskian::wronskian;
use ffield::{
    parse_bivariate, parse_place_set, parse_polynomial, parse_ratfun, PlaceSet, Rat, SUnit,
};

use output::{csv_field, print_reports, Format};
use suites::SuiteParams;

#[derive(Parser)]
#[command(
    name = "ffield",
    about = "Exact checks for gcd and degree bounds on the rational function field",
    version
)]
struct Cli {
    /// Output format: json, csv, or text (default from FFIELD_FORMAT).
    #[arg(long, global = true)]
    format: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PairArgs {
    /// First S-unit, e.g. "t^3".
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Second S-unit, e.g. "-t*(t+1)".
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    /// Place set, e.g. "t, t+1, inf".
    #[arg(long)]
    places: String,
}

#[derive(Subcommand)]
enum Command {
    /// Sum over places outside S of min(v(1-a), v(1-b)).
    GcdSum(PairArgs),
    /// The gcd-sum bound for a unit pair, with its dependent cases.
    Cor23(PairArgs),
    /// Height form of the gcd proposition with parameters h, k.
    Prop21 {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long = "h", default_value_t = 1)]
        h: u64,
        #[arg(long = "k", default_value_t = 1)]
        k: u64,
    },
    /// Gcd-sum form of the proposition with parameters h, k.
    Prop22 {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long = "h", default_value_t = 1)]
        h: u64,
        #[arg(long = "k", default_value_t = 1)]
        k: u64,
    },
    /// Multiple-zero excess of 1 - b against chi.
    Mason {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        places: String,
    },
    /// Lower bound for the zeros of a sum of units (no vanishing subsum).
    UnitSum {
        /// A unit; repeat the flag for each summand.
        #[arg(long = "theta", required = true, allow_hyphen_values = true)]
        thetas: Vec<String>,
        #[arg(long)]
        places: String,
    },
    /// Wronskian witness: nonzero certificate or polynomial relation.
    Witness {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long = "h", default_value_t = 1)]
        h: u64,
        #[arg(long = "k", default_value_t = 1)]
        k: u64,
        #[arg(long, default_value_t = DEFAULT_WRONSKIAN_CAP)]
        cap: u64,
    },
    /// Resultant of two univariate polynomials.
    Resultant {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Implicit equation and index of a parametrized plane curve.
    Implicitize {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Height of a rational function (and H_S if places are given).
    Height {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        places: Option<String>,
    },
    /// Zero/pole divisor of a rational function.
    Divisor {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Wronskian of a list of rational functions.
    Wronskian {
        #[arg(long = "f", required = true, allow_hyphen_values = true)]
        fs: Vec<String>,
    },
    /// One family certificate: cusp, node, secant, three-lines, tangent.
    Families {
        family: String,
        #[arg(long)]
        n: u32,
        /// Auxiliary polynomial for the cusp family (default 1 + t).
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
    },
    /// Degree table of a family (CSV): strictly growing at chi = 0.
    Table {
        family: String,
        #[arg(long = "n-max")]
        n_max: u32,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
    },
    /// gcd(f^n - 1, g^n - 1) against the corollary bound for n <= n_max.
    ArScan {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long = "n-max")]
        n_max: u32,
    },
    /// Validate a solution file and run divisibility and classification.
    SolutionCheck {
        #[arg(long)]
        file: std::path::PathBuf,
    },
    /// Multiple-zero trichotomy for a squarefree A(X, Y) at a unit pair.
    Thm12 {
        /// Constant-coefficient polynomial in X and Y.
        #[arg(long = "a-poly", allow_hyphen_values = true)]
        a_poly: String,
        #[arg(long, allow_hyphen_values = true)]
        u1: String,
        #[arg(long, allow_hyphen_values = true)]
        u2: String,
        #[arg(long)]
        places: String,
        /// Positive rational, e.g. "1/2".
        #[arg(long)]
        eps: String,
    },
    /// Coprime-pair trichotomy with the explicit constant C2.
    Prop315 {
        #[arg(long, allow_hyphen_values = true)]
        a1: String,
        #[arg(long, allow_hyphen_values = true)]
        a2: String,
        #[arg(long, allow_hyphen_values = true)]
        u1: String,
        #[arg(long, allow_hyphen_values = true)]
        u2: String,
        #[arg(long)]
        places: String,
        #[arg(long)]
        eps: String,
    },
    /// Degeneracy check for z^d = P(x^m, y^n).
    Fermat {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long = "p-poly", allow_hyphen_values = true)]
        p_poly: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        places: String,
        #[arg(long, default_value = "1/2")]
        eps: String,
    },
    /// Run an aggregate suite: cor23-random, mason-random, unit-sum-random,
    /// conic-fixtures, families-all, ar-scan, prop-agreement.
    Suite {
        name: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: u32,
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        g: Option<String>,
    },
}

fn parse_unit(expr: &str, places: &PlaceSet) -> Result<SUnit, Error> {
    certify_sunit(&parse_ratfun(expr)?, places)
}

fn parse_eps(s: &str) -> Result<Rat, Error> {
    parse_ratfun(s)?
        .constant_value()
        .ok_or_else(|| Error::InvalidInput("eps must be a rational constant".into()))
}

fn family_by_name(name: &str, p: Option<&str>) -> Result<Family, Error> {
    Ok(match name {
        "cusp" => {
            let p = match p {
                Some(expr) => parse_polynomial(expr)?,
                None => parse_polynomial("1+t")?,
            };
            Family::Cusp { p }
        }
        "node" => Family::Node,
        "secant" => Family::SecantConic,
        "three-lines" => Family::ThreeLines,
        "tangent" => Family::TangentCrossing,
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown family '{other}' (expected cusp, node, secant, three-lines, tangent)"
            )))
        }
    })
}

/// Reports produced by a command, with a flag for any genuine violation.
struct Outcome {
    reports: Vec<BoundReport>,
    extra_lines: Vec<String>,
    violated: bool,
}

impl Outcome {
    fn from_reports(reports: Vec<BoundReport>) -> Self {
        let violated = reports.iter().any(output::is_violation);
        Outcome {
            reports,
            extra_lines: Vec::new(),
            violated,
        }
    }

    fn lines(lines: Vec<String>) -> Self {
        Outcome {
            reports: Vec::new(),
            extra_lines: lines,
            violated: false,
        }
    }
}

fn run(cli: Cli, format: Format) -> Result<Outcome, Error> {
    match cli.command {
        Command::GcdSum(pair) => {
            let s = parse_place_set(&pair.places)?;
            let a = parse_unit(&pair.a, &s)?;
            let b = parse_unit(&pair.b, &s)?;
            let value = gcd_sum(&a, &b)?;
            let mut rep = BoundReport::new(
                "gcd-sum",
                Rat::from_integer(value.into()),
                Rat::from_integer(value.into()),
                true,
            )
            .with_branch("value");
            rep.push_context("a", pair.a.clone());
            rep.push_context("b", pair.b.clone());
            rep.push_context("places", s.to_display());
            Ok(Outcome::from_reports(vec![rep]))
        }
        Command::Cor23(pair) => {
            let s = parse_place_set(&pair.places)?;
            let a = parse_unit(&pair.a, &s)?;
            let b = parse_unit(&pair.b, &s)?;
            Ok(Outcome::from_reports(vec![check_cor_2_3(&a, &b)?]))
        }
        Command::Prop21 { pair, h, k } => {
            let s = parse_place_set(&pair.places)?;
            let a = parse_unit(&pair.a, &s)?;
            let b = parse_unit(&pair.b, &s)?;
            Ok(Outcome::from_reports(vec![check_prop_2_1(&a, &b, h, k)?]))
        }
        Command::Prop22 { pair, h, k } => {
            let s = parse_place_set(&pair.places)?;
            let a = parse_unit(&pair.a, &s)?;
            let b = parse_unit(&pair.b, &s)?;
            Ok(Outcome::from_reports(vec![check_prop_2_2(&a, &b, h, k)?]))
        }
        Command::Mason { b, places } => {
            let s = parse_place_set(&places)?;
            let b = parse_unit(&b, &s)?;
            Ok(Outcome::from_reports(vec![multiple_zero_excess(&b)?]))
        }
        Command::UnitSum { thetas, places } => {
            let s = parse_place_set(&places)?;
            let units: Result<Vec<_>, _> = thetas.iter().map(|t| parse_unit(t, &s)).collect();
            Ok(Outcome::from_reports(vec![unit_sum_lower_bound(&units?)?]))
        }
        Command::Witness { pair, h, k, cap } => {
            let s = parse_place_set(&pair.places)?;
            let a = parse_unit(&pair.a, &s)?;
            let b = parse_unit(&pair.b, &s)?;
            let line = match wronskian_witness(&a, &b, h, k, cap)? {
                Witness::Nonzero(w) => format!("nonzero wronskian: {}", w.to_display("t")),
                Witness::Relation(p) => {
                    format!("polynomial relation: {}", p.to_display("X", "Y"))
                }
            };
            Ok(Outcome::lines(vec![line]))
        }
        Command::Resultant { p, q } => {
            let p = parse_polynomial(&p)?;
            let q = parse_polynomial(&q)?;
            let r = p.resultant(&q)?;
            Ok(Outcome::lines(vec![fmt_rat(&r)]))
        }
        Command::Implicitize { a, b } => {
            let (p, index) = implicitize(&parse_ratfun(&a)?, &parse_ratfun(&b)?)?;
            Ok(Outcome::lines(vec![format!(
                "curve: {} (index {index}, total degree {})",
                p.to_display("X", "Y"),
                p.total_degree().unwrap_or(0)
            )]))
        }
        Command::Height { f, places } => {
            let f = parse_ratfun(&f)?;
            let mut lines = vec![format!("H = {}", f.height())];
            if let Some(places) = places {
                let s = parse_place_set(&places)?;
                lines.push(format!("H_S = {}", ffield::height::height_outside(&f, &s)));
            }
            Ok(Outcome::lines(lines))
        }
        Command::Divisor { f } => {
            let f = parse_ratfun(&f)?;
            let d = ffield::divisor::divisor_of(&f)?;
            let mut lines = Vec::new();
            for (p, m) in d.finite_terms() {
                lines.push(format!("({}) : {m:+}", p.to_display("t")));
            }
            if d.infinity_mult() != 0 {
                lines.push(format!("(inf) : {:+}", d.infinity_mult()));
            }
            if lines.is_empty() {
                lines.push("0 (empty divisor)".into());
            }
            Ok(Outcome::lines(lines))
        }
        Command::Wronskian { fs } => {
            let parsed: Result<Vec<_>, _> = fs.iter().map(|f| parse_ratfun(f)).collect();
            let w = wronskian(&parsed?)?;
            Ok(Outcome::lines(vec![w.to_display("t")]))
        }
        Command::Families { family, n, p } => {
            let fam = family_by_name(&family, p.as_deref())?;
            let cert = fam.certificate(n)?;
            let (c, k) = cert.witness_monomial();
            let line = match format {
                Format::Csv => format!(
                    "family,n,degree,euler_char,witness\n{},{n},{},{},{}",
                    fam.name(),
                    cert.degree,
                    cert.euler_char,
                    csv_field(&cert.avoidance_witness.to_display("t"))
                ),
                _ => format!(
                    "{} n = {n}: degree {}, chi {}, witness {} (= {} * t^{k}) avoiding {}",
                    fam.name(),
                    cert.degree,
                    cert.euler_char,
                    cert.avoidance_witness.to_display("t"),
                    fmt_rat(&c),
                    cert.divisor_id
                ),
            };
            Ok(Outcome::lines(vec![line]))
        }
        Command::Table { family, n_max, p } => {
            let fam = family_by_name(&family, p.as_deref())?;
            let rows = ffield::families::unboundedness_table(&fam, n_max)?;
            let mut lines = vec!["family,n,degree,euler_char,witness".to_string()];
            for (n, degree, chi) in rows {
                let cert = fam.certificate(n)?;
                lines.push(format!(
                    "{},{n},{degree},{chi},{}",
                    fam.name(),
                    csv_field(&cert.avoidance_witness.to_display("t"))
                ));
            }
            Ok(Outcome::lines(lines))
        }
        Command::ArScan { f, g, n_max } => {
            let rows = ffield::gcd_bounds::ar_gcd_table(
                &parse_polynomial(&f)?,
                &parse_polynomial(&g)?,
                n_max,
            )?;
            let mut lines = vec!["n,gcd_degree,rhs_cubed,holds".to_string()];
            let mut violated = false;
            for row in &rows {
                violated |= !row.holds;
                lines.push(format!(
                    "{},{},{},{}",
                    row.n,
                    row.gcd_degree,
                    fmt_rat(&row.rhs_cubed),
                    row.holds
                ));
            }
            let mut out = Outcome::lines(lines);
            out.violated = violated;
            Ok(out)
        }
        Command::SolutionCheck { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::InvalidInput(format!("cannot read {file:?}: {e}")))?;
            let parsed = solution_file::parse_solution_file(&text)?;
            let sol = solution_file::into_solution(parsed)?;
            let mut reports = vec![divisibility_check(&sol)?];
            let cases = classify_theorem_3_4(&sol)?;
            let mut rep = BoundReport::new(
                "theorem-3.4-classification",
                Rat::from_integer(cases.len().into()),
                Rat::from_integer(1.into()),
                !cases.is_empty(),
            )
            .with_branch("trichotomy");
            for case in &cases {
                rep.push_note(match case {
                    SolutionCase::VanishingSubsum(ix) => {
                        format!("vanishing subsum at term indices {ix:?}")
                    }
                    SolutionCase::Dependence { r, s, mu } => {
                        format!("dependence u1^{r} * u2^{s} = {}", fmt_rat(mu))
                    }
                    SolutionCase::SmallHeight => "height within 2^14 * 35 * chi".to_string(),
                });
            }
            reports.push(rep);
            let morphism = PlaneMorphism::from_affine(sol.u1().value(), sol.y())?;
            if image_degree(&morphism).is_ok() {
                reports.push(theorem_3_1_check(&morphism, sol.places())?);
            }
            Ok(Outcome::from_reports(reports))
        }
        Command::Thm12 {
            a_poly,
            u1,
            u2,
            places,
            eps,
        } => {
            let s = parse_place_set(&places)?;
            let a = parse_bivariate(&a_poly)?;
            let u1 = parse_unit(&u1, &s)?;
            let u2 = parse_unit(&u2, &s)?;
            let eps = parse_eps(&eps)?;
            Ok(Outcome::from_reports(vec![
                ffield::conic::check_theorem_1_2(&a, &u1, &u2, &eps)?,
            ]))
        }
        Command::Prop315 {
            a1,
            a2,
            u1,
            u2,
            places,
            eps,
        } => {
            let s = parse_place_set(&places)?;
            let u1 = parse_unit(&u1, &s)?;
            let u2 = parse_unit(&u2, &s)?;
            let eps = parse_eps(&eps)?;
            Ok(Outcome::from_reports(vec![ffield::conic::check_prop_3_15(
                &parse_bivariate(&a1)?,
                &parse_bivariate(&a2)?,
                &u1,
                &u2,
                &eps,
            )?]))
        }
        Command::Fermat {
            d,
            m,
            n,
            p_poly,
            x,
            y,
            z,
            places,
            eps,
        } => {
            let s = parse_place_set(&places)?;
            Ok(Outcome::from_reports(vec![fermat_type_check(
                d,
                m,
                n,
                &parse_bivariate(&p_poly)?,
                &parse_ratfun(&x)?,
                &parse_ratfun(&y)?,
                &parse_ratfun(&z)?,
                &s,
                &parse_eps(&eps)?,
            )?]))
        }
        Command::Suite {
            name,
            seed,
            count,
            n_max,
            f,
            g,
        } => {
            let params = SuiteParams {
                seed,
                count,
                n_max,
                f: f.as_deref().map(parse_polynomial).transpose()?,
                g: g.as_deref().map(parse_polynomial).transpose()?,
            };
            let agg = match name.as_str() {
                "cor23-random" => suites::cor23_random(&params)?,
                "prop-agreement" => suites::prop_agreement_random(&params)?,
                "mason-random" => suites::mason_random(&params)?,
                "unit-sum-random" => suites::unit_sum_random(&params)?,
                "conic-fixtures" => suites::conic_fixtures(&params)?,
                "families-all" => suites::families_all(&params)?,
                "ar-scan" => suites::ar_scan(&params)?.0,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown suite '{other}' (expected cor23-random, prop-agreement, \
                         mason-random, unit-sum-random, conic-fixtures, families-all, ar-scan)"
                    )))
                }
            };
            let mut out = Outcome::lines(vec![agg.to_json()]);
            out.violated = agg.violated > 0;
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match Format::resolve(cli.format.as_deref()) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(cli, format) {
        Ok(outcome) => {
            print_reports(&outcome.reports, format);
            for line in &outcome.extra_lines {
                println!("{line}");
            }
            if outcome.violated {
                eprintln!("error: a proved inequality was violated");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e @ Error::TheoremViolation(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
