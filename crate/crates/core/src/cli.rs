//! Command-line front end. [`run`] never exits the process; the binary
//! prints the returned streams and exits with `status`.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 usage error (bad flags,
//! unparsable rationals, invalid adjacency, unsupported parameter points).

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::correspondence::solve_weights_from_relation;
use crate::elevenvertex::{r11v, similarity_fused};
use crate::error::{Error, Result};
use crate::exactcore::scalar::{self, Scalar};
use crate::exactcore::Matrix;
use crate::fusion::fuse_nm;
use crate::lattice::{partition_sos, partition_vertex_transfer, LatticeSpec};
use crate::sos::{w_nm_hypergeometric, w_nm_sum, WeightQuery};
use crate::suite::{self, Outcome};
use crate::vertex::{r7v, ModelParams};

/// Environment variable capping the worker threads of the suites.
pub const THREADS_ENV: &str = "FUSION_SOS_THREADS";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { status: 0, stdout, stderr: String::new() }
    }

    fn usage(stderr: String) -> Self {
        Output { status: 2, stdout: String::new(), stderr }
    }
}

fn rational(text: &str) -> std::result::Result<Scalar, String> {
    scalar::parse(text).map_err(|e| e.to_string())
}

fn window(text: &str) -> std::result::Result<(i64, i64), String> {
    let (lo, hi) = text.split_once("..").ok_or_else(|| format!("expected LO..HI, got {text:?}"))?;
    let p = |s: &str| s.trim().parse::<i64>().map_err(|e| format!("{s:?}: {e}"));
    Ok((p(lo)?, p(hi)?))
}

#[derive(Parser, Debug)]
#[command(name = "fusion-sos", version, about = "Exact seven-vertex, fused and SOS model computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Seven,
    Eleven,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Sum,
    Hyper,
    Solve,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Model {
    Vertex,
    Sos,
}

/// Model parameters. `--w` sets `s = 2w`, `t = 0`.
#[derive(Args, Debug, Clone)]
struct ParamArgs {
    #[arg(long, value_parser = rational, default_value = "1", allow_hyphen_values = true)]
    alpha: Scalar,
    #[arg(long, value_parser = rational, conflicts_with = "w", allow_hyphen_values = true)]
    s: Option<Scalar>,
    #[arg(long, value_parser = rational, conflicts_with = "w", allow_hyphen_values = true)]
    t: Option<Scalar>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    w: Option<Scalar>,
}

impl ParamArgs {
    fn params(&self) -> Result<ModelParams> {
        match &self.w {
            Some(w) => ModelParams::with_w(self.alpha.clone(), w.clone()),
            None => {
                let d = ModelParams::default();
                ModelParams::new(
                    self.alpha.clone(),
                    self.s.clone().unwrap_or(d.s),
                    self.t.clone().unwrap_or(d.t),
                )
            }
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// R-matrix of the seven- or eleven-vertex family.
    Rmatrix {
        #[arg(long, value_enum, default_value = "seven")]
        family: Family,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Spectral parameter (seven-vertex family).
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        u: Option<Scalar>,
        /// Spectral difference (eleven-vertex family).
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        d: Option<Scalar>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Fused R-matrix R^(n,m)(u).
    Fuse {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        u: Scalar,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// One SOS face weight W^(n,m)(a,b;b',c|u).
    Weights {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        bprime: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        u: Scalar,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "sum")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run identity checks; exit 1 if any parameter tuple fails.
    Verify {
        #[command(subcommand)]
        check: Check,
        #[arg(long, value_enum, default_value = "pretty", global = true)]
        format: Format,
    },
    /// Partition function on a periodic N x M lattice.
    Partition {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long = "N")]
        cols: usize,
        #[arg(long = "M")]
        rows: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        u: Scalar,
        /// Height window for SOS sums; the value depends on it.
        #[arg(long, value_parser = window, allow_hyphen_values = true, default_value = "-2..2")]
        range: (i64, i64),
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum Check {
    /// Seven-vertex Yang-Baxter equation.
    YbeSeven,
    /// R(-1) = -(I - P).
    Degeneracy,
    /// Fused Yang-Baxter equation for all k+n+l <= max-sum.
    YbeVertex {
        #[arg(long, default_value_t = 6)]
        max_sum: usize,
        #[arg(long, default_value_t = 10)]
        pairs: usize,
        #[arg(long, default_value_t = 3)]
        seed: u64,
    },
    /// Fused R^(n,1) against its difference-operator form.
    Representation {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    StarTriangle {
        #[arg(long, default_value_t = 3)]
        max_kl: usize,
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
    /// Product and gamma-factorized forms of O_m.
    Om {
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
    /// Sum formula, 9F8 form and linear-solve oracle.
    Weights {
        #[arg(long, default_value_t = 4)]
        bound: i64,
    },
    PathFunction {
        #[arg(long, default_value_t = 6)]
        max_total: usize,
    },
    YbeSos {
        #[arg(long, default_value_t = 6)]
        max_sum: usize,
        #[arg(long, default_value_t = 50)]
        boundaries: usize,
        #[arg(long, default_value_t = 5)]
        spectral: usize,
        #[arg(long, default_value_t = 9)]
        seed: u64,
    },
    /// Matrix-level vertex-SOS correspondence at fixed (u, v).
    Correspondence(Box<CorrespondenceArgs>),
    /// Path independence and linear independence of intertwiners.
    Independence,
    /// Eleven-vertex family.
    Eleven,
    /// Float checks of the gauge-transformed model.
    Gauge,
    Lattice {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
    /// The complete battery.
    All,
}

#[derive(Args, Debug)]
struct CorrespondenceArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    u: Scalar,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    v: Scalar,
    /// Labels `a` range over `-bound..=bound`.
    #[arg(long, default_value_t = 3)]
    bound: i64,
    #[command(flatten)]
    params: ParamArgs,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.exit_code() {
                0 => Output::ok(text),
                _ => Output::usage(text),
            };
        }
    };
    let threads = std::env::var(THREADS_ENV).ok().and_then(|t| t.parse::<usize>().ok()).filter(|&t| t > 0);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let dispatched = match builder.build() {
        Ok(pool) => pool.install(|| dispatch(cli.command)),
        Err(e) => return Output::usage(format!("cannot start worker pool: {e}\n")),
    };
    dispatched.unwrap_or_else(|e| Output::usage(format!("error: {e}\n")))
}

fn dispatch(command: Command) -> Result<Output> {
    match command {
        Command::Rmatrix { family, n, m, u, d, params, format } => {
            let p = params.params()?;
            let (label, x, r) = match family {
                Family::Seven => {
                    let u = u.ok_or_else(|| Error::InvalidParameter("--u is required for --family seven".into()))?;
                    let r = if (n, m) == (1, 1) { r7v(&u, &p) } else { fuse_nm(n, m, &u, &p) };
                    ("u", u, r)
                }
                Family::Eleven => {
                    let d = d.ok_or_else(|| Error::InvalidParameter("--d is required for --family eleven".into()))?;
                    let r = if (n, m) == (1, 1) {
                        r11v(&d, &p)
                    } else {
                        similarity_fused(n, m, &d, &Scalar::default(), &p)
                    };
                    ("d", d, r)
                }
            };
            let family = match family {
                Family::Seven => "seven",
                Family::Eleven => "eleven",
            };
            let meta = json!({ "family": family, "n": n, "m": m, label: scalar::format(&x), "params": p });
            Ok(Output::ok(matrix_report(meta, &r, format)))
        }
        Command::Fuse { n, m, u, params, format } => {
            let p = params.params()?;
            let r = fuse_nm(n, m, &u, &p);
            let meta = json!({ "n": n, "m": m, "u": scalar::format(&u), "params": p });
            Ok(Output::ok(matrix_report(meta, &r, format)))
        }
        Command::Weights { n, m, a, b, bprime, c, u, params, method, format } => {
            let p = params.params()?;
            let q = WeightQuery::new(n, m, [a, b, bprime, c], u);
            weights(&q, &p, method, format)
        }
        Command::Verify { check, format } => {
            let outcomes = verify(check)?;
            Ok(verify_report(&outcomes, format))
        }
        Command::Partition { model, cols, rows, n, m, u, range, params, format } => {
            let p = params.params()?;
            let spec = LatticeSpec { cols, rows, n, m, u };
            let value = match model {
                Model::Vertex => partition_vertex_transfer(&spec, &p)?,
                Model::Sos => partition_sos(&spec, range.0, range.1, &p)?,
            };
            let mut spec_json = serde_json::to_value(&spec).expect("serializable");
            spec_json["model"] = json!(model);
            spec_json["params"] = json!(p);
            if model == Model::Sos {
                spec_json["range"] = json!([range.0, range.1]);
            }
            let v = scalar::format(&value);
            let text = match format {
                Format::Json => {
                    format!("{}\n", serde_json::to_string_pretty(&json!({ "value": v, "spec": spec_json })).expect("json"))
                }
                Format::Csv => format!("model,N,M,n,m,u,value\n{},{cols},{rows},{n},{m},{},{v}\n", json!(model).as_str().unwrap_or(""), scalar::format(&spec.u)),
                Format::Pretty => format!("Z = {v}\n"),
            };
            Ok(Output::ok(text))
        }
    }
}

fn matrix_report(meta: serde_json::Value, r: &Matrix, format: Format) -> String {
    match format {
        Format::Json => {
            let mut v = meta;
            v["matrix"] = json!(r);
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => (0..r.rows())
            .map(|i| r.row(i).iter().map(scalar::format).collect::<Vec<_>>().join(",") + "\n")
            .collect(),
        Format::Pretty => format!("{r}\n"),
    }
}

fn weights(q: &WeightQuery, p: &ModelParams, method: Method, format: Format) -> Result<Output> {
    let invalid = !q.is_valid();
    let value = if invalid {
        Scalar::default()
    } else {
        match method {
            Method::Sum => w_nm_sum(q, p)?,
            Method::Hyper => w_nm_hypergeometric(q, p)?,
            Method::Solve => solve_weights_from_relation(q.n, q.m, q.a, q.b, q.c, &q.u, p)?
                .get(&q.bprime)
                .cloned()
                .unwrap_or_default(),
        }
    };
    let v = scalar::format(&value);
    let method_name = json!(method);
    let method_name = method_name.as_str().unwrap_or("");
    let mut stdout = match format {
        Format::Json => {
            let mut obj = json!({
                "n": q.n, "m": q.m, "a": q.a, "b": q.b, "bprime": q.bprime, "c": q.c,
                "u": scalar::format(&q.u), "params": p, "method": method_name, "value": v,
            });
            if invalid {
                obj["error"] = json!("invalid adjacency");
            }
            serde_json::to_string_pretty(&obj).expect("json")
        }
        Format::Csv => format!(
            "n,m,a,b,bprime,c,u,method,value\n{},{},{},{},{},{},{},{method_name},{v}",
            q.n,
            q.m,
            q.a,
            q.b,
            q.bprime,
            q.c,
            scalar::format(&q.u)
        ),
        Format::Pretty => format!(
            "W^({},{})({},{};{},{}|{}) = {v}",
            q.n,
            q.m,
            q.a,
            q.b,
            q.bprime,
            q.c,
            scalar::format(&q.u)
        ),
    };
    stdout.push('\n');
    if invalid {
        let stderr = format!(
            "invalid adjacency: (a,b,b',c) = ({},{},{},{}) is not a face of type ({},{})\n",
            q.a, q.b, q.bprime, q.c, q.n, q.m
        );
        return Ok(Output { status: 2, stdout, stderr });
    }
    Ok(Output::ok(stdout))
}

fn verify(check: Check) -> Result<Vec<Outcome>> {
    use scalar::q;
    let alphas = || vec![scalar::int(1), q(5, 3), q(-2, 7)];
    Ok(match check {
        Check::YbeSeven => vec![suite::seven_vertex_ybe(&alphas(), 25, 1)],
        Check::Degeneracy => vec![suite::degeneracy(&alphas())],
        Check::YbeVertex { max_sum, pairs, seed } => vec![suite::fused_ybe(max_sum, pairs, seed)],
        Check::Representation { max_n } => {
            vec![suite::representation_agreement(max_n, &[q(1, 2), q(-7, 3), q(11, 5), q(3, 8), q(-13, 6)])]
        }
        Check::StarTriangle { max_kl, degree } => {
            vec![suite::star_triangle(max_kl, degree, &alphas(), &[q(1, 3), q(-5, 2), q(7, 4)])]
        }
        Check::Om { max_m, degree } => vec![suite::o_m_identity(max_m, degree)],
        Check::Weights { bound } => vec![suite::three_way(
            &[(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)],
            &[q(7, 3), q(-5, 7), q(13, 4)],
            &[q(1, 2), q(-3, 5)],
            bound,
        )],
        Check::PathFunction { max_total } => {
            vec![suite::path_function(max_total, &[q(1, 2), q(-7, 3), q(5, 4), q(19, 7), q(-1, 9)])]
        }
        Check::YbeSos { max_sum, boundaries, spectral, seed } => {
            vec![suite::sos_ybe(max_sum, boundaries, spectral, seed)]
        }
        Check::Correspondence(c) => {
            let p = c.params.params()?;
            p.require_generic_w()?;
            vec![suite::correspondence_at(c.n, c.m, &c.u, &c.v, &p, c.bound)]
        }
        Check::Independence => vec![suite::path_and_linear_independence(
            4,
            &[q(1, 2), q(-3, 5), q(7, 3)],
            &[q(2, 5), q(-9, 4)],
            3,
        )],
        Check::Eleven => vec![suite::eleven_vertex(12)],
        Check::Gauge => vec![suite::gauge(13)],
        Check::Lattice { max_size } => vec![suite::lattice(max_size, 14)],
        Check::All => suite::standard().into_iter().map(|c| (c.run)()).collect(),
    })
}

fn verify_report(outcomes: &[Outcome], format: Format) -> Output {
    let passed = outcomes.iter().all(Outcome::passed);
    let stdout = match format {
        Format::Json => {
            let v = json!({ "passed": passed, "checks": outcomes.iter().map(|o| json!({
                "name": o.name,
                "passed": o.passed(),
                "cases": o.cases,
                "failures": o.failures,
                "notes": o.notes,
                "tuples": o.tuples.iter().map(|(t, ok)| json!({ "case": t, "pass": ok })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>() });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => {
            let mut s = String::from("check,case,pass\n");
            for o in outcomes {
                for (t, ok) in &o.tuples {
                    s.push_str(&format!("{},\"{}\",{ok}\n", o.name, t.replace('"', "\"\"")));
                }
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for o in outcomes {
                s.push_str(&format!("{o}\n"));
                for line in o.details() {
                    s.push_str(&line);
                    s.push('\n');
                }
            }
            s.push_str(if passed { "pass\n" } else { "FAIL\n" });
            s
        }
    };
    Output { status: if passed { 0 } else { 1 }, stdout, stderr: String::new() }
}
