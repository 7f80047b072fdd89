//! Command line front end: argument parsing, dispatch to `hk-core`, and JSON
//! or table rendering of the resulting reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hk_core::brauer::{self, BrauerClass, BrauerType, PRIME_RANK};
use hk_core::chern::{self, Factor, OMEGA_P2};
use hk_core::fermat::{self, FermatCheck};
use hk_core::heegner::{self, Column};
use hk_core::lattice::{self, Lattice};
use hk_core::mukai::{self, MukaiElement};
use hk_core::pell::{self, CertificateKind, Hilb2Column, Parity};
use hk_core::{suite, Report, Q};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(
    name = "hk",
    version,
    about = "Exact lattice, Brauer class, Chern class and polynomial checks"
)]
pub struct Cli {
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gram matrices, Smith normal form, discriminant groups.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Order-two Brauer classes on a polarized K3 surface.
    #[command(subcommand)]
    Brauer(BrauerCmd),
    /// Twisted Mukai lattice arithmetic.
    #[command(subcommand)]
    Mukai(MukaiCmd),
    /// Chern classes on the plane and intersection numbers.
    #[command(subcommand)]
    Chern(ChernCmd),
    /// Heegner divisor columns and classical examples.
    #[command(subcommand)]
    Heegner(HeegnerCmd),
    /// Pell equations and birationality to Hilbert squares.
    #[command(subcommand)]
    Pell(PellCmd),
    /// Polynomial identities of the Fermat-type example.
    #[command(subcommand)]
    Fermat(FermatCmd),
    /// Run every module suite.
    VerifyAll(SampleArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    /// Sampling seed; defaults to HK_SEED, then 0.
    #[arg(long, env = "HK_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = fermat::DEFAULT_SAMPLES)]
    pub samples: usize,
}

#[derive(Debug, Subcommand)]
pub enum LatticeCmd {
    /// A named lattice: U, E8_minus, diag, K3, Lambda_K3_2, MukaiK3, Lambda_prime.
    Standard {
        #[arg(long)]
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        param: Vec<i64>,
    },
    /// A Gram matrix read from a file, one row per line.
    Gram {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum BrauerCmd {
    /// Type and discriminant group of a class `(a, lambda mod 2)`.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        a: u8,
        /// Twenty comma separated integers lifting the class mod 2.
        #[arg(
            long,
            conflicts_with = "lambda_sq_mod4",
            required_unless_present = "lambda_sq_mod4"
        )]
        lambda: Option<String>,
        /// Use a standard representative with this value of lambda^2 mod 4.
        #[arg(long = "lambda-sq-mod4")]
        lambda_sq_mod4: Option<u8>,
    },
    /// Count all classes by type.
    Count,
}

#[derive(Debug, Subcommand)]
pub enum MukaiCmd {
    /// Mukai pairing of two vectors written `r;l1,...,l22;s`.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Whether a rank-two vector of square -2 exists for the given type.
    ExistsMinus2 {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long = "type")]
        kind: String,
    },
    /// Mukai vector of the rank-two bundle for odd `d`.
    Bundle {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChernCmd {
    /// A named example: order-two, odd-theta, even-theta, bx.
    Example {
        #[arg(long)]
        name: String,
    },
    /// Products `E^i (H-E)^(4-i)` on `<2d> + <-2>`.
    ///
    /// With `--gram a,b;b,c --vectors x1,y1;x2,y2;x3,y3;x4,y4` computes the
    /// symmetrized product of four vectors in a rank-two lattice instead.
    Fujiki {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "gram")]
        d: Option<i64>,
        #[arg(
            long,
            allow_hyphen_values = true,
            requires = "vectors",
            conflicts_with = "d"
        )]
        gram: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "gram")]
        vectors: Option<String>,
    },
    /// Product of factors `rank:twist:power`, with rank `omega` for the
    /// cotangent bundle.
    Product {
        #[arg(long = "factor", allow_hyphen_values = true, required = true)]
        factors: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum HeegnerCmd {
    /// Mukai vectors and divisibilities for one column.
    Case {
        #[arg(long, visible_alias = "label")]
        column: String,
        #[arg(long, allow_hyphen_values = true)]
        param: i64,
        /// Accepted for compatibility; the checks always run.
        #[arg(long)]
        verify: bool,
    },
    /// Transcendental lattice of the K3 surface attached to a column.
    Transcendental {
        #[arg(long, visible_alias = "label")]
        column: String,
        #[arg(long, allow_hyphen_values = true)]
        param: i64,
    },
    /// Index-two image of the orthogonal complement and the induced B-field.
    Image {
        #[arg(long, visible_alias = "label")]
        column: String,
        #[arg(long, allow_hyphen_values = true)]
        param: i64,
    },
    /// Integer identities of a classical example.
    Classical {
        #[arg(long)]
        name: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum PellCmd {
    /// Solutions of `b^2 - D a^2 = N` with `0 < a <= bound`.
    Solve {
        #[arg(long, visible_alias = "D", allow_hyphen_values = true)]
        d: i64,
        #[arg(long, visible_alias = "N", allow_hyphen_values = true)]
        n: i64,
        /// Comma separated: a-odd, b-odd, b-even.
        #[arg(long, default_value = "")]
        parity: String,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
    /// Certificate of nonexistence: square, modular (with --modulus) or parity-cycle.
    Certificate {
        #[arg(long, visible_alias = "D", allow_hyphen_values = true)]
        d: i64,
        #[arg(long, visible_alias = "N", allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value = "")]
        parity: String,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        modulus: Option<i64>,
    },
    /// Whether the column's fourfold is birational to a Hilbert square.
    Hilb2 {
        #[arg(long)]
        column: String,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum FermatCmd {
    Verify {
        /// curves, del-pezzo, mu, sextic, very-singular, line or conic.
        #[arg(long)]
        check: String,
        #[command(flatten)]
        sampling: SampleArgs,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] hk_core::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{0}")]
    Usage(String),
}

pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_MALFORMED: u8 = 3;
pub const EXIT_PRECONDITION: u8 = 4;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use hk_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Core(E::UnknownName(_)) => EXIT_USAGE,
            CliError::Io { .. }
            | CliError::Malformed(_)
            | CliError::Core(
                E::Parse { .. } | E::Dimension { .. } | E::NotSymmetric | E::OddDiagonal(_),
            ) => EXIT_MALFORMED,
            CliError::Core(_) => EXIT_PRECONDITION,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOut {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Output {
    pub command: String,
    pub pass: bool,
    pub elapsed_ms: u64,
    pub result: BTreeMap<String, Value>,
    pub checks: Vec<CheckOut>,
}

impl Output {
    fn new(command: &str) -> Output {
        Output {
            command: command.into(),
            pass: true,
            elapsed_ms: 0,
            result: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    fn set(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.result.insert(key.into(), v.into());
        self
    }

    fn add_report(&mut self, r: &Report) {
        for c in &r.checks {
            let name = if r.topic.is_empty() {
                c.name.clone()
            } else {
                format!("{}/{}", r.topic, c.name)
            };
            self.checks.push(CheckOut {
                name,
                expected: c.expected.clone(),
                got: c.got.clone(),
                pass: c.pass,
            });
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.pass {
            0
        } else {
            EXIT_FAILED
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.command);
        for (k, v) in &self.result {
            let v = match v {
                Value::String(x) => x.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(s, "  {k}: {v}");
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            if c.pass {
                let _ = writeln!(s, "{tag}  {:width$}  {}", c.name, c.got);
            } else {
                let _ = writeln!(
                    s,
                    "{tag}  {:width$}  expected {}  got {}",
                    c.name, c.expected, c.got
                );
            }
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        let _ = writeln!(
            s,
            "{} checks, {failed} failed, {} ms",
            self.checks.len(),
            self.elapsed_ms
        );
        s
    }
}

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| malformed(format!("`{t}` is not an integer")))
        })
        .collect()
}

fn parse_rationals(s: &str) -> Result<Vec<Q>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Q>()
                .map_err(|_| malformed(format!("`{t}` is not a rational number")))
        })
        .collect()
}

/// `r;l1,...,l22;s` with rational entries.
pub fn parse_mukai(s: &str) -> Result<MukaiElement, CliError> {
    let parts: Vec<&str> = s.split(';').collect();
    let [r, lam, t] = parts.as_slice() else {
        return Err(malformed(format!("`{s}` is not of the form r;lambda;s")));
    };
    let one = |x: &str| -> Result<Q, CliError> {
        match parse_rationals(x)?.as_slice() {
            [q] => Ok(*q),
            _ => Err(malformed(format!("`{x}` is not a single number"))),
        }
    };
    Ok(MukaiElement::new(one(r)?, parse_rationals(lam)?, one(t)?)?)
}

#[derive(Debug, Deserialize)]
struct GramJson {
    rank: usize,
    gram: Vec<Vec<Value>>,
}

fn json_entry(v: &Value) -> Result<i64, CliError> {
    match v {
        Value::Number(n) => n.as_i64(),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
    .ok_or_else(|| malformed(format!("`{v}` is not an integer")))
}

/// Either `{"rank": n, "gram": [[...]]}` with integer or string entries, or
/// plain text with one row per line, entries separated by whitespace or
/// commas and `#` starting a comment.
pub fn parse_gram(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    if text.trim_start().starts_with('{') {
        let g: GramJson = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
        let rows = g
            .gram
            .iter()
            .map(|row| row.iter().map(json_entry).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        if rows.len() != g.rank || rows.iter().any(|r| r.len() != g.rank) {
            return Err(malformed(format!("gram is not {0} x {0}", g.rank)));
        }
        return Ok(rows);
    }
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| malformed(format!("line {}: `{t}` is not an integer", i + 1)))
            })
            .collect::<Result<Vec<i64>, CliError>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(malformed("empty Gram matrix"));
    }
    Ok(rows)
}

/// `x1,y1;x2,y2;...` with exactly `count` pairs.
fn pairs(s: &str, count: usize) -> Result<Vec<[Q; 2]>, CliError> {
    let rows = s
        .split(';')
        .map(|row| match parse_rationals(row)?.as_slice() {
            [x, y] => Ok([*x, *y]),
            _ => Err(malformed(format!("`{row}` is not a pair"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if rows.len() != count {
        return Err(malformed(format!("expected {count} pairs in `{s}`")));
    }
    Ok(rows)
}

fn parse_factor(s: &str) -> Result<Factor, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let [rank, twist, power] = parts.as_slice() else {
        return Err(malformed(format!("factor `{s}` is not rank:twist:power")));
    };
    let twist: i64 = twist
        .parse()
        .map_err(|_| malformed(format!("bad twist in `{s}`")))?;
    let power: u32 = power
        .parse()
        .map_err(|_| malformed(format!("bad power in `{s}`")))?;
    if *rank == "omega" {
        return Ok(Factor {
            rank: 2,
            twist,
            power,
            base: OMEGA_P2,
        });
    }
    match rank.parse::<i64>() {
        Ok(1) => Ok(Factor {
            twist,
            ..Factor::line(0, power)
        }),
        _ => Err(malformed(format!("rank in `{s}` must be 1 or omega"))),
    }
}

fn column(s: &str) -> Result<Column, CliError> {
    Column::parse(s).ok_or_else(|| CliError::Usage(format!("unknown column `{s}`")))
}

fn describe_lattice(out: &mut Output, l: &Lattice) -> Result<(), CliError> {
    let dg = lattice::discriminant_group(l)?;
    out.set("rank", l.rank().to_string());
    out.set("det", l.det().to_string());
    out.set(
        "discriminant_orders",
        dg.cyclic_orders
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>(),
    );
    out.set(
        "q_values",
        dg.q_values.iter().map(Q::to_string).collect::<Vec<_>>(),
    );
    let mut r = Report::new("");
    r.check(
        "order = |det|",
        l.det().magnitude().to_string(),
        dg.order().to_string(),
    );
    out.add_report(&r);
    Ok(())
}

fn chern_expected(name: &str) -> Option<i64> {
    match name {
        "order-two" | "odd-theta" => Some(6),
        "even-theta" => Some(30),
        "bx" => Some(8),
        _ => None,
    }
}

fn run_lattice(cmd: &LatticeCmd, out: &mut Output) -> Result<(), CliError> {
    match cmd {
        LatticeCmd::Standard { name, param } => {
            let l = lattice::make_standard(name, param)?;
            describe_lattice(out, &l)
        }
        LatticeCmd::Gram { file } => {
            let text = std::fs::read_to_string(file).map_err(|source| CliError::Io {
                path: file.display().to_string(),
                source,
            })?;
            let l = Lattice::new(parse_gram(&text)?)?;
            describe_lattice(out, &l)
        }
    }
}

fn run_brauer(cmd: &BrauerCmd, out: &mut Output) -> Result<(), CliError> {
    match cmd {
        BrauerCmd::Classify {
            d,
            a,
            lambda,
            lambda_sq_mod4,
        } => {
            let c = match (lambda, lambda_sq_mod4) {
                (Some(lambda), _) => {
                    let lam = parse_ints(lambda)?;
                    if lam.len() != PRIME_RANK {
                        return Err(malformed(format!(
                            "lambda needs {PRIME_RANK} entries, got {}",
                            lam.len()
                        )));
                    }
                    BrauerClass::new(*d, *a, lam)?
                }
                (None, Some(sq)) => brauer::representative(*d, *a, *sq)?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let t = brauer::brauer_type(&c)?;
            let b = brauer::bfield_of_class(&c);
            out.set("type", t.label());
            out.set("Bh", brauer::invariant_bh(&b).to_string());
            out.set(
                "B2",
                brauer::invariant_b2(&b).map_or(Value::Null, |x| x.to_string().into()),
            );
            if let Some(g) = t.geometric_name(*d) {
                out.set("name", g);
            }
            out.add_report(&brauer::gamma_discriminant_report(&c)?);
        }
        BrauerCmd::Count => {
            let r = suite::brauer_counts();
            let c = brauer::count_classes();
            for (k, v) in [
                ("Bh=0,B2=0", c.bh0_sq0),
                ("Bh=0,B2=1/2", c.bh0_sq2),
                ("Bh=1/2,B2=0", c.bhhalf_sq0),
                ("Bh=1/2,B2=1/2", c.bhhalf_sq2),
            ] {
                out.set(k, v.to_string());
            }
            out.add_report(&r);
        }
    }
    Ok(())
}

fn run_mukai(cmd: &MukaiCmd, out: &mut Output) -> Result<(), CliError> {
    match cmd {
        MukaiCmd::Pair { x, y } => {
            let (x, y) = (parse_mukai(x)?, parse_mukai(y)?);
            out.set("pairing", mukai::mukai_pairing(&x, &y).to_string());
            out.set("x^2", x.square().to_string());
            out.set("y^2", y.square().to_string());
        }
        MukaiCmd::ExistsMinus2 { d, kind } => {
            let t = BrauerType::parse(kind)
                .ok_or_else(|| CliError::Usage(format!("unknown type `{kind}`")))?;
            let ans = mukai::exists_minus2_sheaf(*d, t)?;
            out.set("exists", ans.exists);
            out.set(
                "residues_mod_4",
                ans.residues.iter().map(i64::to_string).collect::<Vec<_>>(),
            );
            if let Some((k, v)) = &ans.witness {
                out.set("k", k.to_string());
                out.set("witness", v.to_string());
            }
            let mut r = Report::new("");
            r.check("parity rule", mukai::minus2_predicted(*d, t), ans.exists);
            out.add_report(&r);
        }
        MukaiCmd::Bundle { d } => {
            let v = mukai::mukai_bundle_vector(*d)?;
            let (c2, ke3) = mukai::conic_bundle_c2(&v)?;
            out.set("vector", v.to_string());
            out.set("c2", c2.to_string());
            out.set("KE3", ke3.to_string());
            let mut r = Report::new("");
            r.check(
                "(c2, KE^3)",
                "(6, 12)".to_string(),
                format!("({c2}, {ke3})"),
            );
            out.add_report(&r);
        }
    }
    Ok(())
}

fn run_chern(cmd: &ChernCmd, out: &mut Output) -> Result<(), CliError> {
    match cmd {
        ChernCmd::Example { name } => {
            let ex = chern::named_example(name)?;
            out.set("rank", ex.rank.to_string());
            out.set("pushforward", ex.push.to_string());
            out.set("c2", ex.c2.to_string());
            let mut r = Report::new("");
            if let Some(want) = chern_expected(name) {
                r.check("c2", want, ex.c2);
            }
            out.add_report(&r);
        }
        ChernCmd::Fujiki {
            gram: Some(gram),
            vectors: Some(vectors),
            ..
        } => {
            let g = pairs(gram, 2)?;
            let v = pairs(vectors, 4)?;
            let g = [g[0], g[1]];
            if g[0][1] != g[1][0] {
                return Err(hk_core::Error::NotSymmetric.into());
            }
            let p = chern::fujiki_product(&g, &v[0], &v[1], &v[2], &v[3]);
            out.set("product", p.to_string());
        }
        ChernCmd::Fujiki { d, .. } => {
            let d = d.ok_or_else(|| CliError::Usage("give --d or --gram with --vectors".into()))?;
            let [a, b, c] = chern::exceptional_products(d);
            out.set("E(H-E)^3", a.to_string());
            out.set("E^2(H-E)^2", b.to_string());
            out.set("E^3(H-E)", c.to_string());
            let mut r = Report::new("");
            r.check("E(H-E)^3 = 12(d-1)", hk_core::lattice::q(12 * (d - 1)), a);
            r.check("E^2(H-E)^2 = 4(3-d)", hk_core::lattice::q(4 * (3 - d)), b);
            r.check("E^3(H-E) = -12", hk_core::lattice::q(-12), c);
            out.add_report(&r);
        }
        ChernCmd::Product { factors } => {
            let fs = factors
                .iter()
                .map(|f| parse_factor(f))
                .collect::<Result<Vec<_>, _>>()?;
            out.set("product", chern::chern_product(&fs).to_string());
        }
    }
    Ok(())
}

fn run_heegner(cmd: &HeegnerCmd, out: &mut Output) -> Result<(), CliError> {
    match cmd {
        HeegnerCmd::Case {
            column: c, param, ..
        } => {
            let case = heegner::build_case(column(c)?, *param)?;
            out.set("d", case.d.to_string());
            out.set("v", case.v.to_string());
            out.set("H", case.h.to_string());
            out.set("E", case.e.to_string());
            out.set("gamma", case.gamma.to_string());
            out.add_report(&heegner::verify_case(&case)?);
        }
        HeegnerCmd::Transcendental { column: c, param } => {
            let col = column(c)?;
            let t = heegner::transcendental_gram(col, *param)?;
            out.set("det_T", t.det_tx.to_string());
            out.set("det_Pic", t.det_pic.to_string());
            out.set(
                "block",
                t.block
                    .gram()
                    .iter()
                    .map(|r| format!("{r:?}"))
                    .collect::<Vec<_>>(),
            );
            out.add_report(&heegner::verify_transcendental(col, *param)?);
        }
        HeegnerCmd::Image { column: c, param } => {
            out.add_report(&heegner::index_two_image(column(c)?, *param)?);
        }
        HeegnerCmd::Classical { name } => {
            let (emb, r) = heegner::classical_example(name)?;
            out.set("H", format!("{:?}", emb.h));
            out.set("E", format!("{:?}", emb.e));
            out.add_report(&r);
        }
    }
    Ok(())
}

fn parity(s: &str) -> Result<Parity, CliError> {
    Ok(Parity::parse(s)?)
}

fn run_pell(cmd: &PellCmd, out: &mut Output) -> Result<(), CliError> {
    match cmd {
        PellCmd::Solve {
            d,
            n,
            parity: p,
            bound,
        } => {
            let sols = pell::solve_pell(*d, *n, parity(p)?, *bound)?;
            out.set("equation", format!("b^2 - {d} a^2 = {n}"));
            out.set(
                "solutions",
                sols.iter()
                    .map(|s| format!("({}, {})", s.a, s.b))
                    .collect::<Vec<_>>(),
            );
            out.set(
                "minimal",
                sols.first()
                    .map_or(Value::Null, |s| json!([s.a.to_string(), s.b.to_string()])),
            );
            let mut r = Report::new("");
            r.truth(
                "all solutions satisfy the equation",
                sols.iter().all(|s| s.holds()),
                "bad solution",
            );
            out.add_report(&r);
        }
        PellCmd::Certificate {
            d,
            n,
            parity: p,
            kind,
            modulus,
        } => {
            let k = CertificateKind::parse(kind, *modulus)?;
            let c = pell::no_solution_certificate(*d, *n, parity(p)?, k)?;
            out.set("certificate", c.kind());
            out.set("detail", c.to_string());
            if matches!(k, CertificateKind::Modular(_)) {
                let mut r = Report::new("");
                r.truth(
                    "modular recheck",
                    pell::recheck_modular(*d, *n, parity(p)?, &c),
                    "residues differ",
                );
                out.add_report(&r);
            }
        }
        PellCmd::Hilb2 { column: c, d } => {
            let col = Hilb2Column::parse(c)
                .ok_or_else(|| CliError::Usage(format!("unknown column `{c}`")))?;
            let dec = pell::birational_to_hilb2(col, *d)?;
            out.set(
                "decision",
                if dec.birational {
                    "birational"
                } else {
                    "not birational"
                },
            );
            if let Some((a, b)) = &dec.witness {
                out.set("witness", json!([a.to_string(), b.to_string()]));
            }
            if let Some(cert) = &dec.certificate {
                out.set("certificate", cert.kind());
                out.set("certificate_detail", cert.to_string());
            }
            out.add_report(&dec.report);
        }
    }
    Ok(())
}

fn run_verify_all(args: &SampleArgs, out: &mut Output) -> Result<(), CliError> {
    type Job = Box<dyn Fn(&SampleArgs) -> hk_core::Result<Report> + Send + Sync>;
    let jobs: Vec<(&str, Job)> = vec![
        ("brauer", Box::new(|_| suite::brauer_report())),
        ("chern", Box::new(|_| suite::chern_report())),
        (
            "fermat",
            Box::new(|a| fermat::fermat_report(a.samples, a.seed)),
        ),
        ("heegner", Box::new(|_| suite::heegner_report())),
        ("mukai", Box::new(|_| suite::mukai_report())),
        ("pell", Box::new(|_| pell::pell_report(1_000_000))),
        ("properties", Box::new(|a| suite::property_suites(a.seed))),
    ];
    let results: Vec<(&str, hk_core::Result<Report>)> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|(name, job)| (*name, s.spawn(|| job(args))))
            .collect();
        handles
            .into_iter()
            .map(|(name, h)| (name, h.join().expect("suite thread panicked")))
            .collect()
    });
    for (name, r) in results {
        let mut r = r?;
        r.topic = name.to_string();
        out.set(name, if r.passed() { "pass" } else { "fail" });
        out.add_report(&r);
    }
    out.set("seed", args.seed.to_string());
    Ok(())
}

fn command_name(cmd: &Command) -> String {
    let sub = match cmd {
        Command::Lattice(LatticeCmd::Standard { .. }) => "lattice standard",
        Command::Lattice(LatticeCmd::Gram { .. }) => "lattice gram",
        Command::Brauer(BrauerCmd::Classify { .. }) => "brauer classify",
        Command::Brauer(BrauerCmd::Count) => "brauer count",
        Command::Mukai(MukaiCmd::Pair { .. }) => "mukai pair",
        Command::Mukai(MukaiCmd::ExistsMinus2 { .. }) => "mukai exists-minus2",
        Command::Mukai(MukaiCmd::Bundle { .. }) => "mukai bundle",
        Command::Chern(ChernCmd::Example { .. }) => "chern example",
        Command::Chern(ChernCmd::Fujiki { .. }) => "chern fujiki",
        Command::Chern(ChernCmd::Product { .. }) => "chern product",
        Command::Heegner(HeegnerCmd::Case { .. }) => "heegner case",
        Command::Heegner(HeegnerCmd::Transcendental { .. }) => "heegner transcendental",
        Command::Heegner(HeegnerCmd::Image { .. }) => "heegner image",
        Command::Heegner(HeegnerCmd::Classical { .. }) => "heegner classical",
        Command::Pell(PellCmd::Solve { .. }) => "pell solve",
        Command::Pell(PellCmd::Certificate { .. }) => "pell certificate",
        Command::Pell(PellCmd::Hilb2 { .. }) => "pell hilb2",
        Command::Fermat(FermatCmd::Verify { .. }) => "fermat verify",
        Command::VerifyAll(_) => "verify-all",
    };
    sub.to_string()
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let start = Instant::now();
    let mut out = Output::new(&command_name(&cli.command));
    match &cli.command {
        Command::Lattice(c) => run_lattice(c, &mut out)?,
        Command::Brauer(c) => run_brauer(c, &mut out)?,
        Command::Mukai(c) => run_mukai(c, &mut out)?,
        Command::Chern(c) => run_chern(c, &mut out)?,
        Command::Heegner(c) => run_heegner(c, &mut out)?,
        Command::Pell(c) => run_pell(c, &mut out)?,
        Command::Fermat(FermatCmd::Verify { check, sampling }) => {
            let c = FermatCheck::parse(check)?;
            out.set("check", c.label());
            out.set("seed", sampling.seed.to_string());
            out.add_report(&c.run(sampling.samples, sampling.seed)?);
        }
        Command::VerifyAll(args) => run_verify_all(args, &mut out)?,
    }
    out.pass = out.checks.iter().all(|c| c.pass);
    out.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(out)
}

/// The JSON schema every successful run validates against.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");
