mod batch;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use braid3_core::braid::{parse_with_limit, DEFAULT_MAX_WORD_LEN};
use braid3_core::burau::{fingerprint, words_equal};
use braid3_core::cobordism::{torus_sum_cobordism, twist_trick, verify, CobordismCertificate};
use braid3_core::invariants::report;
use braid3_core::normal_form::{garside_normal_form, murasugi_normal_form, ConjugacyCertificate};
use braid3_core::{BraidWord, Error, ParseErrorKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "braid3", version, about = "Normal forms and knot invariants of 3-braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Garside or Murasugi normal form of a word.
    Normalize {
        word: String,
        #[arg(long, value_enum, default_value_t = FormKind::Garside)]
        form: FormKind,
        /// Also print the conjugator and its Burau check.
        #[arg(long)]
        certificate: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print every invariant of the closure.
    Invariants {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Build and check a cobordism certificate.
    Certify {
        word: String,
        #[arg(long, value_enum)]
        kind: CertKind,
        /// Number of full twists for `--kind twist`.
        #[arg(long, default_value_t = 1)]
        n: i64,
        /// Also write the bare certificate to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate file, word equality or conjugacy.
    Verify(VerifyArgs),
    /// Evaluate a CSV file with header `name,word`.
    Batch {
        #[arg(long)]
        csv: PathBuf,
        /// JSON lines by default, CSV when the path ends in `.csv`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct VerifyArgs {
    #[arg(long, value_name = "PATH")]
    cert: Option<PathBuf>,
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    equal: Option<Vec<String>>,
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    conjugate: Option<Vec<String>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormKind {
    Garside,
    Murasugi,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertKind {
    TorusSum,
    Twist,
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Precondition(String),
    Internal(String),
    Io(String),
    /// A check ran and came out negative.
    Rejected,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Rejected => 1,
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Precondition(m) | CliError::Io(m) => f.write_str(m),
            CliError::Internal(m) => write!(f, "internal inconsistency: {m}"),
            CliError::Rejected => f.write_str("rejected"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) if matches!(p.kind, ParseErrorKind::TooLong { .. }) => {
                CliError::Precondition(p.to_string())
            }
            Error::Parse(p) => CliError::Parse(p.to_string()),
            Error::Internal(m) => CliError::Internal(m),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

pub fn max_word_len() -> Result<usize, CliError> {
    match std::env::var("BRAID3_MAX_WORD_LEN") {
        Err(_) => Ok(DEFAULT_MAX_WORD_LEN),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| {
                CliError::Precondition(format!(
                    "BRAID3_MAX_WORD_LEN must be a positive integer, got '{v}'"
                ))
            }),
    }
}

pub fn parse_word(text: &str, limit: usize) -> Result<BraidWord, CliError> {
    parse_with_limit(text, limit).map_err(|e| Error::Parse(e).into())
}

fn show(w: &BraidWord) -> String {
    if w.is_identity() {
        "(identity)".to_string()
    } else {
        w.to_string()
    }
}

fn certificate_json(c: &ConjugacyCertificate, verified: bool) -> Value {
    json!({
        "conjugator": c.conjugator.to_string(),
        "source": c.source.to_string(),
        "target": c.target.to_string(),
        "verified": verified,
    })
}

fn normalize(word: &str, form: FormKind, with_cert: bool, as_json: bool) -> Result<(), CliError> {
    let w = parse_word(word, max_word_len()?)?;
    let (display, case, structure, cert) = match form {
        FormKind::Garside => {
            let (g, c) = garside_normal_form(&w);
            let s = serde_json::to_value(&g).expect("forms serialize");
            (g.to_string(), g.case_name(), s, c)
        }
        FormKind::Murasugi => {
            let (m, c) = murasugi_normal_form(&w);
            let s = serde_json::to_value(&m).expect("forms serialize");
            (m.to_string(), m.case_name(), s, c)
        }
    };
    let verified = with_cert && cert.verify();
    if as_json {
        let mut out = json!({ "form": display, "case": case, "structure": structure });
        if with_cert {
            out["certificate"] = certificate_json(&cert, verified);
        }
        println!("{out}");
    } else {
        if display.is_empty() {
            println!("identity (case {case}, ℓ=0, p=0)");
        } else {
            println!("{display}");
        }
        if with_cert {
            println!("conjugator: {}", show(&cert.conjugator));
            println!("certificate: {}", if verified { "verified" } else { "REJECTED" });
        }
    }
    if with_cert && !verified {
        return Err(CliError::Internal(format!("certificate for {word} failed the Burau check")));
    }
    Ok(())
}

fn invariants(word: &str, as_json: bool) -> Result<(), CliError> {
    let w = parse_word(word, max_word_len()?)?;
    let r = report(&w)?;
    let value = serde_json::to_value(&r).expect("reports serialize");
    if as_json {
        println!("{value}");
        return Ok(());
    }
    let flags = &value["flags"];
    for (key, v) in value.as_object().expect("object").iter() {
        if key == "flags" {
            continue;
        }
        let text = match v {
            Value::Null => "-".to_string(),
            Value::String(s) if s.is_empty() => "(identity)".to_string(),
            Value::String(s) => s.clone(),
            Value::Object(o) if o["exact"] == Value::Bool(true) => o["lo"].to_string(),
            Value::Object(o) => format!("[{}, {}]", o["lo"], o["hi"]),
            other => other.to_string(),
        };
        match flags.get(key).and_then(Value::as_str) {
            Some(flag) if flag != "exact" => println!("{key:<20} {text} ({flag})"),
            _ => println!("{key:<20} {text}"),
        }
    }
    Ok(())
}

fn certify(word: &str, kind: CertKind, n: i64, out: Option<PathBuf>) -> Result<(), CliError> {
    let w = parse_word(word, max_word_len()?)?;
    let (name, cert) = match kind {
        CertKind::TorusSum => ("torus-sum", torus_sum_cobordism(&w)?),
        CertKind::Twist => ("twist", twist_trick(&w, n)?),
    };
    let v = verify(&cert);
    let summary = json!({
        "kind": name,
        "start": cert.start.to_string(),
        "end": cert.end.to_string(),
        "euler_char": cert.euler_char,
        "genus": cert.genus.to_string(),
        "verified": v.ok,
        "reasons": v.reasons,
        "certificate": cert,
    });
    println!("{}", serde_json::to_string_pretty(&summary).expect("json"));
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&cert).expect("json");
        std::fs::write(&path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    if !v.ok {
        return Err(CliError::Internal(format!(
            "constructed certificate failed verification: {}",
            v.reasons.join("; ")
        )));
    }
    Ok(())
}

fn verify_cmd(args: VerifyArgs) -> Result<(), CliError> {
    let limit = max_word_len()?;
    if let Some(path) = args.cert {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        let mut value: Value = serde_json::from_str(&text)
            .map_err(|e| CliError::Precondition(format!("malformed certificate: {e}")))?;
        if let Some(inner) = value.get_mut("certificate") {
            value = inner.take();
        }
        let cert: CobordismCertificate = serde_json::from_value(value)
            .map_err(|e| CliError::Precondition(format!("malformed certificate: {e}")))?;
        let v = verify(&cert);
        println!("{}", serde_json::to_string(&v).expect("json"));
        return if v.ok { Ok(()) } else { Err(CliError::Rejected) };
    }
    if let Some(pair) = args.equal {
        let u = parse_word(&pair[0], limit)?;
        let v = parse_word(&pair[1], limit)?;
        let equal = words_equal(&u, &v);
        println!("{}", json!({ "equal": equal }));
        return if equal { Ok(()) } else { Err(CliError::Rejected) };
    }
    let pair = args.conjugate.expect("clap enforces one mode");
    let u = parse_word(&pair[0], limit)?;
    let v = parse_word(&pair[1], limit)?;
    let (gu, cu) = garside_normal_form(&u);
    let (gv, cv) = garside_normal_form(&v);
    if gu != gv {
        let out = json!({
            "conjugate": false,
            "forms": [gu.to_string(), gv.to_string()],
            "fingerprints_differ": fingerprint(&u) != fingerprint(&v),
        });
        println!("{out}");
        return Err(CliError::Rejected);
    }
    let conjugator = cv.conjugator.inverse().concat(&cu.conjugator);
    let verified = words_equal(&u.conjugate_by(&conjugator), &v);
    let out = json!({
        "conjugate": true,
        "form": gu.to_string(),
        "conjugator": conjugator.to_string(),
        "verified": verified,
    });
    println!("{out}");
    if verified {
        Ok(())
    } else {
        Err(CliError::Internal("conjugator failed the Burau check".into()))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Normalize {
            word,
            form,
            certificate,
            json,
        } => normalize(&word, form, certificate, json),
        Command::Invariants { word, json } => invariants(&word, json),
        Command::Certify { word, kind, n, out } => certify(&word, kind, n, out),
        Command::Verify(args) => verify_cmd(args),
        Command::Batch { csv, out } => batch::run(&csv, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Rejected) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
