//! Command-line front end.
//!
//! Every command prints one JSON object per result on stdout (census prints
//! one per line) and diagnostics on stderr. Integers are emitted as decimal
//! strings. Exit codes: 0 affirmative, 1 well-formed negative, 2 usage,
//! parse or precondition error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::classify::{descriptor_for, is_member, DimensionPair};
use crate::construct::{construct_witness, verify_witness, CubeWitness, LatticeVector};
use crate::error::Error;
use crate::exact::{Natural, Ratio};
use crate::oracle::{Oracle, SearchBudget};
use crate::qform::{basis_to_equivalence, gram_schmidt_extend, verify_equivalence, RationalVector};
use crate::squares::decompose_n_squares;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lattice-cubes",
    version,
    about = "Decide, construct and verify hypercubes with vertices in Z^n"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Compact JSON output, one object per line (default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Indented JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Worker threads for the exhaustive search; results do not depend on it.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,

    /// Largest squared norm the exhaustive search accepts.
    #[arg(long, global = true, value_name = "N")]
    max_norm: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Which set J(d, n) is, by the classification table.
    Classify { d: usize, n: usize },
    /// Whether m is the squared side of a d-cube in Z^n.
    Member { m: Natural, d: usize, n: usize },
    /// Build and self-check an integer cube frame.
    Construct {
        m: Natural,
        d: usize,
        n: usize,
        /// Also write the frame to FILE in witness format.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check a frame stored in witness format.
    Verify { path: PathBuf },
    /// Canonical decomposition of m into k squares.
    Decompose { m: Natural, k: usize },
    /// Exhaustive search for a d-frame of norm m in Z^n.
    Oracle { m: Natural, d: usize, n: usize },
    /// Oracle verdicts and frame counts for 0 <= m <= m_max, one line each.
    Census { d: usize, n: usize, m_max: u64 },
    /// Two rational squares summing to m from orthogonal (a,b,c), (d,e,f).
    #[command(allow_negative_numbers = true)]
    Witt {
        #[arg(value_parser = parse_bigint, num_args = 6, value_names = ["A", "B", "C", "D", "E", "F"])]
        entries: Vec<BigInt>,
    },
    /// Complete the rows of a witness-format file to an orthogonal basis.
    Extend { path: PathBuf },
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not a decimal integer"));
    }
    s.parse().map_err(|e| format!("{e}"))
}

// Command outcome: exit code plus the records to print.
struct Outcome {
    code: i32,
    records: Vec<serde_json::Value>,
}

impl Outcome {
    fn one(code: i32, record: impl Serialize) -> Self {
        Outcome {
            code,
            records: vec![serde_json::to_value(record).expect("records serialize")],
        }
    }
}

#[derive(Serialize)]
struct Record<I, P> {
    command: &'static str,
    inputs: I,
    #[serde(flatten)]
    payload: P,
}

#[derive(Serialize)]
struct DimsIn {
    d: String,
    n: String,
}

#[derive(Serialize)]
struct MemberIn {
    m: String,
    d: String,
    n: String,
}

#[derive(Serialize)]
struct PathIn {
    path: String,
}

#[derive(Serialize)]
struct WitnessJson {
    d: String,
    n: String,
    m: String,
    rows: Vec<Vec<String>>,
}

impl From<&CubeWitness> for WitnessJson {
    fn from(w: &CubeWitness) -> Self {
        WitnessJson {
            d: w.d().to_string(),
            n: w.n().to_string(),
            m: w.m().to_string(),
            rows: w
                .rows()
                .iter()
                .map(|r| r.coords().iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

fn dims(d: usize, n: usize) -> Result<DimensionPair, Error> {
    DimensionPair::new(d, n)
}

fn read_witness(path: &PathBuf) -> Result<CubeWitness, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    CubeWitness::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn pretty_square(r: &Ratio) -> String {
    if r.is_negative() || !r.is_integer() {
        format!("({r})^2")
    } else {
        format!("{r}^2")
    }
}

fn execute(cli: &Cli) -> Result<Outcome, String> {
    let budget = SearchBudget {
        max_norm: cli.global.max_norm.unwrap_or(SearchBudget::default().max_norm),
        ..SearchBudget::default()
    };
    let threads = cli.global.threads.unwrap_or(1) as usize;
    let oracle = Oracle::new(budget).parallel(threads > 1);
    let in_pool = |f: &mut (dyn FnMut() -> Result<Outcome, String> + Send)| -> Result<Outcome, String> {
        if threads > 1 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| e.to_string())?
                .install(f)
        } else {
            f()
        }
    };

    match &cli.command {
        Command::Classify { d, n } => {
            let p = dims(*d, *n).map_err(|e| e.to_string())?;
            let (d_mod_4, n_minus_d) = p.table_coordinates();
            #[derive(Serialize)]
            struct Table {
                d_mod_4: String,
                n_minus_d: String,
            }
            #[derive(Serialize)]
            struct Out {
                descriptor: String,
                table: Table,
            }
            Ok(Outcome::one(
                EXIT_OK,
                Record {
                    command: "classify",
                    inputs: DimsIn { d: d.to_string(), n: n.to_string() },
                    payload: Out {
                        descriptor: descriptor_for(p).to_string(),
                        table: Table {
                            d_mod_4: d_mod_4.to_string(),
                            n_minus_d: n_minus_d.to_string(),
                        },
                    },
                },
            ))
        }

        Command::Member { m, d, n } => {
            let p = dims(*d, *n).map_err(|e| e.to_string())?;
            let v = is_member(m, p);
            #[derive(Serialize)]
            struct Out {
                member: bool,
                descriptor: String,
                reason: Option<String>,
            }
            Ok(Outcome::one(
                if v.member { EXIT_OK } else { EXIT_NEGATIVE },
                Record {
                    command: "member",
                    inputs: MemberIn { m: m.to_string(), d: d.to_string(), n: n.to_string() },
                    payload: Out {
                        member: v.member,
                        descriptor: v.descriptor.to_string(),
                        reason: v.reason.map(|r| r.to_string()),
                    },
                },
            ))
        }

        Command::Construct { m, d, n, output } => {
            let p = dims(*d, *n).map_err(|e| e.to_string())?;
            let descriptor = descriptor_for(p).to_string();
            #[derive(Serialize)]
            struct Out {
                member: bool,
                descriptor: String,
                witness: Option<WitnessJson>,
                verified: Option<bool>,
                reason: Option<String>,
            }
            let inputs = MemberIn { m: m.to_string(), d: d.to_string(), n: n.to_string() };
            match construct_witness(m, p) {
                Ok(w) => {
                    let report = verify_witness(&w);
                    if !report.valid {
                        return Err(format!("internal error: constructed frame failed verification: {report:?}"));
                    }
                    if let Some(path) = output {
                        std::fs::write(path, w.to_text())
                            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    }
                    Ok(Outcome::one(
                        EXIT_OK,
                        Record {
                            command: "construct",
                            inputs,
                            payload: Out {
                                member: true,
                                descriptor,
                                witness: Some((&w).into()),
                                verified: Some(true),
                                reason: None,
                            },
                        },
                    ))
                }
                Err(Error::NotMember { reason, .. }) => Ok(Outcome::one(
                    EXIT_NEGATIVE,
                    Record {
                        command: "construct",
                        inputs,
                        payload: Out {
                            member: false,
                            descriptor,
                            witness: None,
                            verified: None,
                            reason: Some(reason.to_string()),
                        },
                    },
                )),
                Err(e) => Err(e.to_string()),
            }
        }

        Command::Verify { path } => {
            let w = read_witness(path)?;
            let report = verify_witness(&w);
            #[derive(Serialize)]
            struct Dot {
                i: String,
                j: String,
                value: String,
            }
            #[derive(Serialize)]
            struct Out {
                valid: bool,
                d: String,
                n: String,
                m: String,
                dot_products: Vec<Dot>,
                norm_deviations: Vec<String>,
            }
            Ok(Outcome::one(
                if report.valid { EXIT_OK } else { EXIT_NEGATIVE },
                Record {
                    command: "verify",
                    inputs: PathIn { path: path.display().to_string() },
                    payload: Out {
                        valid: report.valid,
                        d: w.d().to_string(),
                        n: w.n().to_string(),
                        m: w.m().to_string(),
                        dot_products: report
                            .dot_products
                            .iter()
                            .map(|p| Dot {
                                i: p.i.to_string(),
                                j: p.j.to_string(),
                                value: p.value.to_string(),
                            })
                            .collect(),
                        norm_deviations: report.norm_deviations.iter().map(ToString::to_string).collect(),
                    },
                },
            ))
        }

        Command::Decompose { m, k } => {
            #[derive(Serialize)]
            struct In {
                m: String,
                k: String,
            }
            #[derive(Serialize)]
            struct Out {
                representable: bool,
                terms: Option<Vec<String>>,
                reason: Option<String>,
            }
            let inputs = In { m: m.to_string(), k: k.to_string() };
            match decompose_n_squares(m, *k) {
                Ok(t) => Ok(Outcome::one(
                    EXIT_OK,
                    Record {
                        command: "decompose",
                        inputs,
                        payload: Out {
                            representable: true,
                            terms: Some(t.terms().iter().map(ToString::to_string).collect()),
                            reason: None,
                        },
                    },
                )),
                Err(e @ Error::NotRepresentable { .. }) => Ok(Outcome::one(
                    EXIT_NEGATIVE,
                    Record {
                        command: "decompose",
                        inputs,
                        payload: Out {
                            representable: false,
                            terms: None,
                            reason: Some(e.to_string()),
                        },
                    },
                )),
                Err(e) => Err(e.to_string()),
            }
        }

        Command::Oracle { m, d, n } => {
            let p = dims(*d, *n).map_err(|e| e.to_string())?;
            in_pool(&mut || {
                let v = oracle.oracle_is_member(m, p).map_err(|e| e.to_string())?;
                #[derive(Serialize)]
                struct Out {
                    member: bool,
                    witness: Option<WitnessJson>,
                }
                Ok(Outcome::one(
                    if v.member { EXIT_OK } else { EXIT_NEGATIVE },
                    Record {
                        command: "oracle",
                        inputs: MemberIn { m: m.to_string(), d: d.to_string(), n: n.to_string() },
                        payload: Out {
                            member: v.member,
                            witness: v.witness.as_ref().map(Into::into),
                        },
                    },
                ))
            })
        }

        Command::Census { d, n, m_max } => in_pool(&mut || {
            let rows = oracle.census(*d, *n, *m_max).map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct In {
                d: String,
                n: String,
                m_max: String,
            }
            #[derive(Serialize)]
            struct Out {
                m: String,
                member: bool,
                frames: String,
                capped: bool,
            }
            let records = rows
                .iter()
                .map(|r| {
                    serde_json::to_value(Record {
                        command: "census",
                        inputs: In {
                            d: d.to_string(),
                            n: n.to_string(),
                            m_max: m_max.to_string(),
                        },
                        payload: Out {
                            m: r.m.to_string(),
                            member: r.member,
                            frames: r.frames.to_string(),
                            capped: r.capped,
                        },
                    })
                    .expect("records serialize")
                })
                .collect();
            Ok(Outcome { code: EXIT_OK, records })
        }),

        Command::Witt { entries } => {
            let v = LatticeVector::new(entries[..3].to_vec());
            let w = LatticeVector::new(entries[3..].to_vec());
            let t = crate::qform::witt_extract_two_squares(&v, &w).map_err(|e| e.to_string())?;
            let identity = crate::qform::remark_identity_check(&v, &w).map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct In {
                v: Vec<String>,
                w: Vec<String>,
            }
            #[derive(Serialize)]
            struct Out {
                m: String,
                x: String,
                y: String,
                sign_flipped: bool,
                identity_holds: bool,
                check: String,
            }
            let strings = |xs: &[BigInt]| xs.iter().map(ToString::to_string).collect();
            Ok(Outcome::one(
                EXIT_OK,
                Record {
                    command: "witt",
                    inputs: In { v: strings(&entries[..3]), w: strings(&entries[3..]) },
                    payload: Out {
                        m: t.m.to_string(),
                        x: t.x.to_string(),
                        y: t.y.to_string(),
                        sign_flipped: t.sign_flipped,
                        identity_holds: identity,
                        check: format!("{}+{}={}", pretty_square(&t.x), pretty_square(&t.y), t.m),
                    },
                },
            ))
        }

        Command::Extend { path } => {
            let w = read_witness(path)?;
            let rows: Vec<RationalVector> = w.rows().iter().map(RationalVector::from_lattice).collect();
            let ext = gram_schmidt_extend(&rows).map_err(|e| e.to_string())?;
            let equivalence = basis_to_equivalence(&ext.basis).map_err(|e| e.to_string())?;
            let verified = verify_equivalence(&equivalence).map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct Out {
                basis: Vec<Vec<String>>,
                residual_norms: Vec<String>,
                target_form: Vec<String>,
                equivalence_verified: bool,
            }
            Ok(Outcome::one(
                EXIT_OK,
                Record {
                    command: "extend",
                    inputs: PathIn { path: path.display().to_string() },
                    payload: Out {
                        basis: ext
                            .basis
                            .iter()
                            .map(|v| v.coords().iter().map(ToString::to_string).collect())
                            .collect(),
                        residual_norms: ext.residual_norms.iter().map(ToString::to_string).collect(),
                        target_form: equivalence.target.entries().iter().map(ToString::to_string).collect(),
                        equivalence_verified: verified,
                    },
                },
            ))
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            for record in &outcome.records {
                let text = if cli.global.pretty {
                    serde_json::to_string_pretty(record)
                } else {
                    serde_json::to_string(record)
                }
                .expect("records serialize");
                let _ = writeln!(out, "{text}");
            }
            outcome.code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("lattice-cubes").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn classify_outputs() {
        let (code, out, _) = call(&["classify", "3", "3"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"command\":\"classify\",\"inputs\":{\"d\":\"3\",\"n\":\"3\"},\"descriptor\":\"I1\",\"table\":{\"d_mod_4\":\"3\",\"n_minus_d\":\"0\"}}\n"
        );
        let (code, _, err) = call(&["classify", "5", "4"]);
        assert_eq!(code, 2);
        assert!(err.contains("1 <= d <= n"));
        assert_eq!(call(&["classify", "x", "4"]).0, 2);
    }

    #[test]
    fn witt_accepts_negative_entries() {
        let (code, out, _) = call(&["witt", "1", "2", "2", "2", "1", "-2"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"check\":\"0^2+(-3)^2=9\""), "{out}");
        assert_eq!(call(&["witt", "1", "2", "2", "2", "1"]).0, 2);
        assert_eq!(call(&["witt", "1", "1", "1", "1", "-1", "1"]).0, 2);
    }

    #[test]
    fn pretty_and_json_conflict() {
        assert_eq!(call(&["--json", "--pretty", "classify", "1", "1"]).0, 2);
        let (code, out, _) = call(&["--pretty", "classify", "1", "1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("{\n  \"command\": \"classify\""));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("census"));
    }

    #[test]
    fn threads_do_not_change_output() {
        let single = call(&["census", "3", "5", "12"]);
        let multi = call(&["--threads", "4", "census", "3", "5", "12"]);
        assert_eq!(single, multi);
        assert_eq!(call(&["--threads", "0", "census", "1", "1", "2"]).0, 2);
    }
}
