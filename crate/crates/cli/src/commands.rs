use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uedetect_core::ue_probability::{classify, dual_identity_residual, p_max, pue, pue_perp};
use uedetect_core::{
    Classification, DistributionA, EnumerationLimits, LargeDimension, LargeDistance, SeriesApprox,
    ThresholdProblem,
};

use crate::codefile::CodeFile;
use crate::curve;
use crate::error::{CliError, Status};
use crate::report::{num, small, table};

/// Undetected-error analysis of block codes on the q-ary symmetric channel.
#[derive(Debug, Parser)]
#[command(name = "uedetect", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length threshold beyond which every code with the given d and k is bad.
    Mu(MuArgs),
    /// Weight distribution, good/bad verdicts and threshold for a code file.
    Analyze(AnalyzeArgs),
    /// Cross-checks the dual-code identities on a linear code file.
    DualCheck(DualCheckArgs),
    /// Recomputes the published worked examples.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Regime {
    /// `dk` when d >= k, otherwise `kd`.
    Auto,
    /// Expansion for d large relative to k.
    Dk,
    /// Expansion for k large relative to d.
    Kd,
}

#[derive(Debug, Args)]
pub struct MuArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub d: u64,
    #[arg(long)]
    pub k: u32,
    /// Use the non-linear constant (k = log_q M).
    #[arg(long)]
    pub nonlinear: bool,
    /// Print this many partial sums of the asymptotic series.
    #[arg(long)]
    pub terms: Option<usize>,
    #[arg(long, value_enum, default_value_t = Regime::Auto)]
    pub regime: Regime,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub code: PathBuf,
    /// Number of p samples for the verdict scan and the CSV curve.
    #[arg(long, default_value_t = 2048)]
    pub grid: usize,
    /// Write the sampled curve to this CSV file.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DualCheckArgs {
    #[arg(long)]
    pub code: PathBuf,
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub example: u8,
}

/// What a command prints, and the exit status it asks for.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub status: Status,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self {
            text,
            status: Status::Ok,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Mu(a) => cmd_mu(&a),
        Command::Analyze(a) => cmd_analyze(&a),
        Command::DualCheck(a) => cmd_dual_check(&a),
        Command::Reproduce(a) => cmd_reproduce(&a),
    }
}

// ---------------------------------------------------------------------------
// mu
// ---------------------------------------------------------------------------

fn series(
    t: &ThresholdProblem,
    regime: Regime,
    terms: usize,
) -> Result<(Regime, SeriesApprox), CliError> {
    let regime = match regime {
        Regime::Auto if t.d() as f64 >= t.k() => Regime::Dk,
        Regime::Auto => Regime::Kd,
        r => r,
    };
    let s = match regime {
        Regime::Dk => LargeDistance::new(t).mu_series(terms)?,
        _ => LargeDimension::new(t).mu_series(terms)?,
    };
    Ok((regime, s))
}

pub fn cmd_mu(a: &MuArgs) -> Result<Outcome, CliError> {
    let t = if a.nonlinear {
        ThresholdProblem::nonlinear(a.q, a.d, a.k as f64)?
    } else {
        ThresholdProblem::linear(a.q, a.d, a.k)?
    };
    let r = t.minimize()?;
    let (p_label, mu_label) = if a.nonlinear {
        ("p_N", "mu_N")
    } else {
        ("p_m", "mu")
    };

    let mut out = String::new();
    let kind = if a.nonlinear { "non-linear" } else { "linear" };
    writeln!(out, "{kind} codes, q = {}, d = {}, k = {}", a.q, a.d, a.k).unwrap();
    writeln!(out, "{p_label} = {}", num(r.p_m)).unwrap();
    writeln!(out, "{mu_label} = {}", num(r.mu)).unwrap();

    if let Some(terms) = a.terms {
        let (regime, s) = series(&t, a.regime, terms)?;
        let name = match regime {
            Regime::Dk => "large-distance series (d >> k)",
            _ => "large-dimension series (k >> d)",
        };
        writeln!(out, "\n{name}").unwrap();
        let rows: Vec<Vec<String>> = s
            .partial_sums
            .iter()
            .enumerate()
            .map(|(i, v)| vec![(i + 1).to_string(), num(*v), small((v - r.mu).abs())])
            .collect();
        out.push_str(&table(
            &["terms", "value", &format!("|value - {mu_label}|")],
            &rows,
        ));
        if let Some(p) = s.p_approx {
            writeln!(
                out,
                "{p_label} from series = {} (|diff| {})",
                num(p),
                small((p - r.p_m).abs())
            )
            .unwrap();
        }
    }
    Ok(Outcome::ok(out))
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn format_distribution(a: &DistributionA) -> String {
    let cells: Vec<String> = (0..=a.n())
        .map(|i| {
            let (v, d) = a.ratio(i);
            let g = gcd(v, d);
            match (v / g, d / g) {
                (v, 1) => v.to_string(),
                (v, d) => format!("{v}/{d}"),
            }
        })
        .collect();
    cells.join(" ")
}

fn format_verdict(c: &Classification) -> String {
    format!(
        "{} (max P_ue {} at p = {}; good bound {}, bad bound {})",
        c.verdict,
        num(c.max_pue),
        num(c.worst_p),
        num(c.good_bound),
        num(c.bad_bound)
    )
}

pub fn cmd_analyze(a: &AnalyzeArgs) -> Result<Outcome, CliError> {
    let code = CodeFile::read(&a.code)?;
    let limits = EnumerationLimits::default();
    let (q, n, size) = (code.q(), code.n(), code.size());
    let dist = match &code {
        CodeFile::Linear(g) => g.weight_distribution(&limits)?,
        CodeFile::Nonlinear(c) => c.distance_distribution(&limits)?,
    };
    let d = dist.min_distance()?;

    let mut out = String::new();
    match &code {
        CodeFile::Linear(g) => {
            writeln!(out, "linear code over GF({q})").unwrap();
            writeln!(out, "n = {n}\nk = {}\nd = {d}", g.k()).unwrap();
        }
        CodeFile::Nonlinear(c) => {
            writeln!(out, "non-linear code over GF({q})").unwrap();
            writeln!(out, "n = {n}\nM = {}\nd = {d}", c.m()).unwrap();
        }
    }
    writeln!(out, "A = {}", format_distribution(&dist)).unwrap();

    let verdict = classify(&dist, q, size, a.grid)?;
    writeln!(out, "verdict C:  {}", format_verdict(&verdict)).unwrap();
    if let CodeFile::Linear(g) = &code {
        let dual = g.dual();
        match dual.weight_distribution(&limits) {
            Ok(dd) => {
                let v = classify(&dd, q, dual.size(), a.grid)?;
                writeln!(out, "verdict C⊥: {}", format_verdict(&v)).unwrap();
            }
            Err(e @ uedetect_core::Error::CapExceeded { .. }) => {
                writeln!(out, "verdict C⊥: skipped, {e}").unwrap();
            }
            Err(e) => return Err(e.into()),
        }
    }

    let (t, label) = match &code {
        CodeFile::Linear(g) => (ThresholdProblem::linear(q, d as u64, g.k() as u32)?, "mu"),
        CodeFile::Nonlinear(c) => (
            ThresholdProblem::nonlinear_with_words(q, d as u64, c.m() as u64)?,
            "mu_N",
        ),
    };
    let mu = t.minimize()?.mu;
    writeln!(out, "{label}(d, k) = {}", num(mu)).unwrap();
    writeln!(
        out,
        "n >= {label}: {}",
        if n as f64 >= mu { "yes" } else { "no" }
    )
    .unwrap();

    if let Some(path) = &a.csv {
        let rows = curve::sample(&dist, q, size, a.grid)?;
        let file = std::fs::File::create(path)
            .map_err(|e| CliError::input(format!("cannot create {}: {e}", path.display())))?;
        curve::write_csv(&rows, std::io::BufWriter::new(file))
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
        writeln!(out, "wrote {} rows to {}", rows.len(), path.display()).unwrap();
    }
    Ok(Outcome::ok(out))
}

// ---------------------------------------------------------------------------
// dual-check
// ---------------------------------------------------------------------------

/// Tolerance for both dual-code checks.
pub const DUAL_CHECK_TOL: f64 = 1e-10;

pub fn cmd_dual_check(a: &DualCheckArgs) -> Result<Outcome, CliError> {
    let CodeFile::Linear(g) = CodeFile::read(&a.code)? else {
        return Err(CliError::input("dual-check needs a linear code file"));
    };
    if a.samples == 0 {
        return Err(CliError::input("--samples must be at least 1"));
    }
    let limits = EnumerationLimits::default();
    let q = g.q();
    let dist = g.weight_distribution(&limits)?;
    let dual = g.dual();
    let dual_dist = dual.weight_distribution(&limits)?;

    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let pmax = p_max(q);
    let (mut deviation, mut residual) = (0.0f64, 0.0f64);
    for _ in 0..a.samples {
        let p = loop {
            let p = rng.gen_range(0.0..pmax);
            if p > 0.0 {
                break p;
            }
        };
        let direct = pue(&dual_dist, q, p)?;
        let via_weights = pue_perp(&dist, q, g.size(), p)?;
        deviation = deviation.max((direct - via_weights).abs() / direct.abs().max(1.0));
        residual = residual.max(dual_identity_residual(&dist, q, g.size(), p)?);
    }

    let pass = deviation <= DUAL_CHECK_TOL && residual <= DUAL_CHECK_TOL;
    let mut out = String::new();
    writeln!(
        out,
        "[{}, {}] code over GF({q}), {} samples, seed {}",
        g.n(),
        g.k(),
        a.samples,
        a.seed
    )
    .unwrap();
    writeln!(
        out,
        "max |P_ue(C⊥) - dual-from-weights| = {}",
        small(deviation)
    )
    .unwrap();
    writeln!(
        out,
        "max identity residual            = {}",
        small(residual)
    )
    .unwrap();
    writeln!(
        out,
        "{} (tolerance {})",
        if pass { "PASS" } else { "FAIL" },
        small(DUAL_CHECK_TOL)
    )
    .unwrap();
    Ok(Outcome {
        text: out,
        status: if pass {
            Status::Ok
        } else {
            Status::Verification
        },
    })
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

#[derive(Debug)]
struct Check {
    name: String,
    computed: f64,
    published: f64,
    tol: f64,
}

impl Check {
    fn new(name: impl Into<String>, computed: f64, published: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            computed,
            published,
            tol,
        }
    }

    fn diff(&self) -> f64 {
        (self.computed - self.published).abs()
    }

    fn ok(&self) -> bool {
        self.diff() <= self.tol
    }
}

fn example_checks(example: u8) -> Result<(String, Vec<Check>), CliError> {
    Ok(match example {
        1 => {
            let t = ThresholdProblem::linear(2, 1000, 2)?;
            let r = t.minimize()?;
            let s = LargeDistance::new(&t).mu_series(4)?;
            let published = [2000.0, 2074.4659482, 2075.8522426, 2075.8565439];
            let mut checks = vec![
                Check::new("p_m", r.p_m, 0.0352540, 1e-6),
                Check::new("mu(1000, 2)", r.mu, 2075.8565430, 1e-5),
            ];
            for (i, (v, p)) in s.partial_sums.iter().zip(published).enumerate() {
                checks.push(Check::new(format!("{} term(s)", i + 1), *v, p, 1e-5));
            }
            (
                "q = 2, d = 1000, k = 2 (large-distance series)".into(),
                checks,
            )
        }
        2 => {
            let t = ThresholdProblem::linear(2, 2, 1000)?;
            let r = t.minimize()?;
            let s = LargeDimension::new(&t).mu_series(4)?;
            let sums = &s.partial_sums;
            let published = [1000.0, 1020.8169587, 1020.8741383, 1020.8737362];
            let mut checks = vec![
                Check::new("p_m", r.p_m, 0.4990185, 1e-6),
                Check::new("mu(2, 1000)", r.mu, 1020.8737393, 1e-5),
            ];
            for (i, (v, p)) in sums.iter().zip(published).enumerate() {
                let tol = if i < 2 { 1e-5 } else { 1e-4 };
                checks.push(Check::new(format!("{} term(s)", i + 1), *v, p, tol));
            }
            checks.push(Check::new(
                "4 terms - 3 terms",
                sums[3] - sums[2],
                published[3] - published[2],
                1e-6,
            ));
            if let Some(p) = s.p_approx {
                checks.push(Check::new("p_m from series", p, 0.4990185, 1e-6));
            }
            (
                "q = 2, d = 2, k = 1000 (large-dimension series)".into(),
                checks,
            )
        }
        3 => {
            let mut checks = Vec::new();
            for (d, k, lin, nonlin) in [(1000, 2, 2075.86, 2108.10), (2, 1000, 1020.87, 2022.85)] {
                let mu = ThresholdProblem::linear(2, d, k)?.minimize()?.mu;
                let mu_n = ThresholdProblem::nonlinear(2, d, k as f64)?.minimize()?.mu;
                checks.push(Check::new(format!("mu({d}, {k})"), mu, lin, 0.01));
                checks.push(Check::new(format!("mu_N({d}, {k})"), mu_n, nonlin, 0.01));
            }
            ("q = 2, linear and non-linear thresholds".into(), checks)
        }
        other => {
            return Err(CliError::input(format!(
                "no example {other}; choose 1, 2 or 3"
            )))
        }
    })
}

pub fn cmd_reproduce(a: &ReproduceArgs) -> Result<Outcome, CliError> {
    let (title, checks) = example_checks(a.example)?;
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                num(c.computed),
                num(c.published),
                small(c.diff()),
                small(c.tol),
                if c.ok() { "ok" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    let pass = checks.iter().all(Check::ok);
    let mut out = format!("example {}: {title}\n", a.example);
    out.push_str(&table(
        &[
            "quantity",
            "computed",
            "published",
            "|diff|",
            "tolerance",
            "",
        ],
        &rows,
    ));
    Ok(Outcome {
        text: out,
        status: if pass {
            Status::Ok
        } else {
            Status::Verification
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_regime_follows_d_versus_k() {
        let t = ThresholdProblem::linear(2, 5, 5).unwrap();
        assert_eq!(series(&t, Regime::Auto, 2).unwrap().0, Regime::Dk);
        let t = ThresholdProblem::linear(2, 4, 5).unwrap();
        assert_eq!(series(&t, Regime::Auto, 2).unwrap().0, Regime::Kd);
        assert_eq!(series(&t, Regime::Dk, 2).unwrap().0, Regime::Dk);
    }

    #[test]
    fn rational_distribution_display() {
        let a = DistributionA::from_rational(vec![3, 4, 2], 3).unwrap();
        assert_eq!(format_distribution(&a), "1 4/3 2/3");
    }

    #[test]
    fn every_example_reproduces() {
        for example in 1..=3 {
            let (_, checks) = example_checks(example).unwrap();
            for c in &checks {
                assert!(c.ok(), "example {example} {}: diff {}", c.name, c.diff());
            }
        }
    }

    #[test]
    fn unknown_example_is_input_error() {
        assert_eq!(example_checks(4).unwrap_err().status, Status::Input);
    }
}
