use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ocrlab::classify::classify;
use ocrlab::decompose::{
    free_normal_band, nocr_embedding, rectangular_group_embedding, standard_example, Variant, STANDARD_NAMES,
};
use ocrlab::io::{certificate_json, parse_semigroup, to_canonical_json, to_pretty_json, SemigroupFile};
use ocrlab::terms::{letter_name, parse_relation};
use ocrlab::varieties::{member_with, satisfies_with, Counterexample};
use ocrlab::verify::{run_suite, SuiteConfig, Verdict, SUITES};
use ocrlab::{Error, OrderedSemigroup};

#[derive(Parser)]
#[command(name = "ocrlab", version, about = "Finite ordered completely regular semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a semigroup file is well formed, associative and stably ordered
    Validate { file: PathBuf },
    /// Green's relations, idempotents and stability
    Green { file: PathBuf },
    /// Decide a relation such as "x^w y^w x^w <= x^w"
    Check {
        relation: String,
        file: PathBuf,
        /// Run even when the search exceeds the size guard
        #[arg(long)]
        force: bool,
    },
    /// Membership in a named pseudovariety
    Member { name: String, file: PathBuf },
    /// Classify the pseudovariety generated by the semigroup
    Classify {
        file: PathBuf,
        /// Power bound for divisor searches
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
    /// Embed into a product of the idempotents and maximal subgroups
    Decompose {
        file: PathBuf,
        #[arg(long, value_parser = ["top", "bottom", "zero"])]
        variant: Option<String>,
    },
    /// Write a built-in example
    Gen {
        name: String,
        #[arg(short, long)]
        o: Option<PathBuf>,
        /// Single-line output
        #[arg(long)]
        canonical: bool,
    },
    /// Write the free normal band on K letters
    FreeNb {
        k: usize,
        #[arg(short, long)]
        o: Option<PathBuf>,
    },
    /// Run a property suite
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        bound: usize,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
    },
}

enum Outcome {
    Yes,
    No,
    Inconclusive,
}

impl Outcome {
    fn code(self) -> ExitCode {
        match self {
            Outcome::Yes => ExitCode::SUCCESS,
            Outcome::No => ExitCode::from(1),
            Outcome::Inconclusive => ExitCode::from(3),
        }
    }

    fn of(b: bool) -> Self {
        if b {
            Outcome::Yes
        } else {
            Outcome::No
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(o) => o.code(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

// A closed pipe (`| head`) is not an error worth reporting.
fn out(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn print(v: &Value) {
    out(&serde_json::to_string_pretty(v).expect("serializable"));
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> anyhow::Result<OrderedSemigroup> {
    parse_semigroup(&read(path)?).with_context(|| format!("invalid semigroup file {}", path.display()))
}

fn write_out(text: &str, o: Option<&Path>) -> anyhow::Result<()> {
    match o {
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("cannot write {}", p.display())),
        None => {
            out(text);
            Ok(())
        }
    }
}

fn counterexample(a: &OrderedSemigroup, c: &Counterexample) -> Value {
    let assignment: serde_json::Map<String, Value> = c
        .assignment
        .iter()
        .map(|&(l, e)| (letter_name(l), json!(e)))
        .collect();
    json!({
        "assignment": assignment,
        "lhs": c.lhs,
        "rhs": c.rhs,
        "description": c.describe(a),
    })
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Validate { file } => {
            let text = read(&file)?;
            let parsed: SemigroupFile = serde_json::from_str(&text)
                .map_err(|e| anyhow!("{}: not a semigroup file: {e}", file.display()))?;
            match parsed.to_ordered() {
                Ok(a) => {
                    print(&json!({
                        "valid": true,
                        "name": a.name(),
                        "size": a.size(),
                        "equality_order": a.has_equality_order(),
                        "completely_regular": a.sgp().is_completely_regular(),
                    }));
                    eprintln!("{}: valid, {} elements", file.display(), a.size());
                    Ok(Outcome::Yes)
                }
                Err(e) => {
                    print(&json!({"valid": false, "error": e.to_string()}));
                    eprintln!("{}: {e}", file.display());
                    Ok(Outcome::No)
                }
            }
        }
        Command::Green { file } => {
            let a = load(&file)?;
            let g = a.sgp().green();
            let stable = g.stability_violation(a.sgp());
            print(&json!({
                "r_classes": g.r_class,
                "l_classes": g.l_class,
                "h_classes": g.h_class,
                "j_classes": g.j_class,
                "idempotents": a.sgp().idempotents(),
                "completely_regular": a.sgp().is_completely_regular(),
                "dch": a.sgp().is_dch(),
                "stability_violation": stable,
            }));
            eprintln!(
                "{} R-, {} L-, {} H- and {} J-classes",
                g.num_r_classes(),
                g.num_l_classes(),
                g.num_h_classes(),
                g.num_j_classes()
            );
            Ok(Outcome::Yes)
        }
        Command::Check { relation, file, force } => {
            let r = parse_relation(&relation)?;
            let a = load(&file)?;
            let s = match satisfies_with(&a, &r, force) {
                Ok(s) => s,
                Err(e @ Error::TooExpensive { .. }) => {
                    eprintln!("{e}");
                    return Ok(Outcome::Inconclusive);
                }
                Err(e) => return Err(e.into()),
            };
            print(&json!({
                "relation": r.to_string(),
                "holds": s.holds,
                "counterexample": s.counterexample.as_ref().map(|c| counterexample(&a, c)),
            }));
            eprintln!("{r}: {}", if s.holds { "holds" } else { "fails" });
            Ok(Outcome::of(s.holds))
        }
        Command::Member { name, file } => {
            let a = load(&file)?;
            let m = match member_with(&a, &name, false) {
                Ok(m) => m,
                Err(e @ Error::TooExpensive { .. }) => {
                    eprintln!("{e}");
                    return Ok(Outcome::Inconclusive);
                }
                Err(e) => return Err(e.into()),
            };
            print(&json!({
                "name": name,
                "holds": m.holds,
                "failure": m.failure.as_ref().map(|(r, c)| json!({
                    "relation": r.to_string(),
                    "counterexample": counterexample(&a, c),
                })),
            }));
            eprintln!("{name}: {}", if m.holds { "member" } else { "not a member" });
            Ok(Outcome::of(m.holds))
        }
        Command::Classify { file, bound } => {
            let a = load(&file)?;
            let report = classify(&[a], bound)?;
            print(&serde_json::to_value(&report)?);
            eprintln!("node {}", report.emery.node);
            for n in &report.notes {
                eprintln!("note: {n}");
            }
            Ok(Outcome::Yes)
        }
        Command::Decompose { file, variant } => {
            let a = load(&file)?;
            let cert = match variant {
                Some(v) => nocr_embedding(&a, v.parse::<Variant>()?)?,
                None => rectangular_group_embedding(&a)
                    .or_else(|_| nocr_embedding(&a, Variant::Top))
                    .or_else(|_| nocr_embedding(&a, Variant::Bottom))
                    .or_else(|_| nocr_embedding(&a, Variant::Zero))?,
            };
            out(&certificate_json(&cert));
            let v = &cert.validation;
            eprintln!(
                "{} factors, target of {} elements; multiplicative {}, isotone {}, injective {}",
                cert.factors.len(),
                cert.target_size(),
                v.multiplicative,
                v.isotone,
                v.injective
            );
            Ok(Outcome::of(v.is_valid()))
        }
        Command::Gen { name, o, canonical } => {
            let a = standard_example(&name)
                .map_err(|_| anyhow!("unknown example {name}; known: {}", STANDARD_NAMES.join(", ")))?;
            let text = if canonical {
                to_canonical_json(&a)
            } else {
                to_pretty_json(&a)
            };
            write_out(&text, o.as_deref())?;
            Ok(Outcome::Yes)
        }
        Command::FreeNb { k, o } => {
            let (sgp, _) = free_normal_band(k)?;
            let a = OrderedSemigroup::unordered(sgp).with_name(format!("FNB{k}"));
            write_out(&to_canonical_json(&a), o.as_deref())?;
            eprintln!("free normal band on {k} letters: {} elements", a.size());
            Ok(Outcome::Yes)
        }
        Command::Verify {
            suite,
            samples,
            seed,
            bound,
            json,
        } => {
            let config = SuiteConfig {
                samples,
                seed,
                bound,
                ..SuiteConfig::default()
            };
            let report = run_suite(&suite, &config)
                .map_err(|e| anyhow!("{e}; suites: {}", SUITES.join(", ")))?;
            if json {
                print(&serde_json::to_value(&report)?);
            } else if let Some(w) = &report.witness {
                print(w);
            }
            eprintln!(
                "{}: {:?} after {} samples, {} checks, {} ms",
                report.suite, report.verdict, report.samples, report.checks, report.elapsed_ms
            );
            for n in &report.notes {
                eprintln!("note: {n}");
            }
            Ok(match report.verdict {
                Verdict::Pass => Outcome::Yes,
                Verdict::Fail => Outcome::No,
                Verdict::Inconclusive => Outcome::Inconclusive,
            })
        }
    }
}
