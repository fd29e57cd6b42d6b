//! Command-line front end: solve frameworks, classify expansions, check
//! rationality principles, audit document sequences, search for
//! counterexamples and generate random fixtures.
//!
//! Exit codes: 0 when the command succeeds and every requested check holds,
//! 1 when a check fails or a violation is found, 2 on usage or input errors.

use std::error::Error;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use afaudit::{
    aggregate, check_paf_reference_independence, check_principle, classify_expansion,
    classify_paf_expansion, generate_framework, generate_normal_expansion,
    generate_rational_mans_expansion, parse_framework, run_audit, search_counterexamples,
    serialize_framework, Aggregated, AggregationMode, ArgumentSet, ArgumentationFramework,
    AuditOptions, AuditOutcome, AuditStep, Counterexample, ExpansionFlags, ExpansionKind,
    ExtensionSet, FrameworkDocument, GenParams, PafExpansionFlags, PrincipleId, PrincipleVerdict,
    SearchBounds, SearchMode, SemanticsId, StepFlags, Witness,
};

#[derive(Parser)]
#[command(
    name = "afaudit",
    version,
    about = "Extension solving, expansion classification and rationality audits \
             for abstract argumentation frameworks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Compute extensions or a decision set for one framework document
    Solve {
        /// Framework document (arg/att statements)
        #[arg(long)]
        file: PathBuf,
        /// complete, grounded, preferred, stable, semi_stable, ideal,
        /// eager, naive, stage, cf2 or stage2
        #[arg(long)]
        semantics: String,
        /// credulous, skeptical, decide_union or decide_intersection
        #[arg(long)]
        mode: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Classify how one framework extends another
    CheckExpansion {
        /// Document for the framework being extended
        #[arg(long)]
        base: PathBuf,
        /// Document for the extending framework
        #[arg(long)]
        expanded: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a rationality principle on a framework pair
    CheckPrinciple {
        /// weak/strong_ref_independence, weak/strong_monotony,
        /// weak/strong_cautious_monotony, weak/strong_rational_monotony,
        /// directionality or decision_ref_independence
        #[arg(long)]
        principle: String,
        /// Semantics the principle is checked under
        #[arg(long)]
        semantics: String,
        /// credulous or skeptical for pairwise principles, decide_union or
        /// decide_intersection for decision_ref_independence
        #[arg(long, default_value = "credulous")]
        mode: String,
        /// Document for the framework being extended
        #[arg(long)]
        base: PathBuf,
        /// Document for the extending framework
        #[arg(long)]
        expanded: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Audit a document sequence pairwise for decision-level reference
    /// independence
    Audit {
        /// Two or more framework documents, in dialogue order
        #[arg(long, num_args = 1.., required = true)]
        files: Vec<PathBuf>,
        /// Semantics the decisions are taken under
        #[arg(long)]
        semantics: String,
        /// decide_union or decide_intersection
        #[arg(long)]
        mode: String,
        /// Fail early unless every consecutive pair is an expansion of this
        /// kind (for example rational-man)
        #[arg(long)]
        require: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Search small framework pairs for violations of a principle
    #[command(group(ArgGroup::new("strategy").required(true).args(["exhaustive", "random"])))]
    Search {
        /// Semantics the principle is checked under
        #[arg(long)]
        semantics: String,
        /// Principle whose violations are searched for
        #[arg(long)]
        principle: String,
        /// Aggregation the principle is checked under
        #[arg(long, default_value = "credulous")]
        mode: String,
        /// Largest expanded framework considered
        #[arg(long)]
        max_args: usize,
        /// Enumerate every pair up to isomorphism
        #[arg(long)]
        exhaustive: bool,
        /// Try this many random candidate pairs instead
        #[arg(long, requires = "seed")]
        random: Option<usize>,
        /// Seed for --random; the same seed replays the same pairs
        #[arg(long)]
        seed: Option<u64>,
        /// Whether searched frameworks may contain self-attacks
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        allow_self_attacks: bool,
        /// Expansion kind the searched pairs must have
        #[arg(long, default_value = "normal")]
        kind: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Generate a random framework, or a random expansion of an existing one
    Generate {
        /// Number of arguments (ignored when --expand-from is given)
        #[arg(long)]
        args: usize,
        /// Probability of each possible attack, in [0, 1]
        #[arg(long)]
        attack_prob: f64,
        /// Generation seed; the same parameters replay the same framework
        #[arg(long)]
        seed: u64,
        /// Expand this document instead of generating from scratch
        #[arg(long)]
        expand_from: Option<PathBuf>,
        /// Number of added arguments when expanding
        #[arg(long, default_value_t = 0, requires = "expand_from")]
        new_args: usize,
        /// Whether the generated attacks may include self-attacks
        #[arg(long, default_value_t = false, action = ArgAction::Set)]
        allow_self_attacks: bool,
        /// normal or rational-man expansion when expanding
        #[arg(long, default_value = "normal", requires = "expand_from")]
        kind: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(cli.command, &mut out) {
        Ok(code) => {
            // One atomic write; a pipe closed by the reader is their call,
            // not an error of ours.
            use std::io::Write as _;
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

type CliResult<T> = Result<T, Box<dyn Error>>;

fn load_document(path: &Path) -> CliResult<FrameworkDocument> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_framework(&text).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_abstract(path: &Path) -> CliResult<ArgumentationFramework> {
    match load_document(path)? {
        FrameworkDocument::Abstract(af) => Ok(af),
        FrameworkDocument::PreferenceBased(_) => Err(format!(
            "{}: expected an abstract framework document (pref statements present)",
            path.display()
        )
        .into()),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn set_json(set: &ArgumentSet) -> Value {
    Value::Array(
        set.iter()
            .map(|a| Value::String(a.as_str().to_owned()))
            .collect(),
    )
}

fn family_json(family: &ExtensionSet) -> Value {
    Value::Array(family.iter().map(set_json).collect())
}

fn framework_json(af: &ArgumentationFramework) -> Value {
    json!({
        "arguments": af.arguments().iter().map(|a| a.as_str()).collect::<Vec<_>>(),
        "attacks": af
            .attacks()
            .iter()
            .map(|(x, y)| vec![x.as_str(), y.as_str()])
            .collect::<Vec<_>>(),
    })
}

fn abstract_flags_json(flags: &ExpansionFlags) -> Value {
    json!({
        "expansion": flags.expansion,
        "normal": flags.normal,
        "non_cyclic": flags.non_cyclic,
        "rational_man": flags.rational_man,
    })
}

fn paf_flags_json(flags: &PafExpansionFlags) -> Value {
    json!({
        "normal_paf": flags.normal_paf,
        "rational_man_paf": flags.rational_man_paf,
    })
}

fn witness_json(witness: &Witness) -> Value {
    json!({
        "base_extension": witness.base_extension.as_ref().map(set_json),
        "expanded_extension": witness.expanded_extension.as_ref().map(set_json),
        "expanded_extensions": witness.expanded_extensions.as_ref().map(family_json),
        "detail": witness.detail,
    })
}

fn verdict_json(verdict: &PrincipleVerdict) -> Value {
    json!({
        "principle": verdict.principle.name(),
        "holds": verdict.holds,
        "vacuous": verdict.vacuous,
        "universally_defined": verdict.universally_defined,
        "witness": verdict.witness.as_ref().map(|w| witness_json(w)),
    })
}

fn write_verdict_text(out: &mut String, verdict: &PrincipleVerdict) {
    let _ = writeln!(out, "principle: {}", verdict.principle);
    let _ = writeln!(out, "holds: {}", yes_no(verdict.holds));
    let _ = writeln!(out, "vacuous: {}", yes_no(verdict.vacuous));
    if let Some(defined) = verdict.universally_defined {
        let _ = writeln!(out, "universally_defined: {}", yes_no(defined));
    }
    if let Some(witness) = &verdict.witness {
        let _ = writeln!(out, "witness: {}", witness.detail);
        if let Some(e) = &witness.base_extension {
            let _ = writeln!(out, "  base extension: {e}");
        }
        if let Some(e) = &witness.expanded_extension {
            let _ = writeln!(out, "  expanded extension: {e}");
        }
        if let Some(f) = &witness.expanded_extensions {
            let _ = writeln!(out, "  expanded extensions: {f}");
        }
    }
}

fn step_json(step: &AuditStep) -> Value {
    let (kind, flags) = match &step.flags {
        StepFlags::Abstract(flags) => ("abstract", abstract_flags_json(flags)),
        StepFlags::PreferenceBased(flags) => ("preference_based", paf_flags_json(flags)),
    };
    json!({
        "index": step.index,
        "kind": kind,
        "flags": flags,
        "base_decision": step.base_decision.as_ref().map(set_json),
        "expanded_decision": step.expanded_decision.as_ref().map(set_json),
        "verdict": step.verdict.as_ref().map(|v| verdict_json(v)),
    })
}

fn run(command: Command, out: &mut String) -> CliResult<u8> {
    match command {
        Command::Solve {
            file,
            semantics,
            mode,
            format,
        } => {
            let sem: SemanticsId = semantics.parse()?;
            let mode: AggregationMode = mode.parse()?;
            let framework = load_abstract(&file)?;
            let aggregated = aggregate(&framework, sem, mode)?;
            match format {
                Format::Json => {
                    let value = match &aggregated {
                        Aggregated::Extensions(family) => family_json(family),
                        Aggregated::Decision(set) => set_json(set),
                    };
                    let _ = writeln!(out, "{}", serde_json::to_string(&value)?);
                }
                Format::Text => {
                    let _ = writeln!(out, "{aggregated}");
                }
            }
            Ok(0)
        }

        Command::CheckExpansion {
            base,
            expanded,
            format,
        } => {
            let base_doc = load_document(&base)?;
            let expanded_doc = load_document(&expanded)?;
            match (&base_doc, &expanded_doc) {
                (FrameworkDocument::Abstract(b), FrameworkDocument::Abstract(x)) => {
                    let flags = classify_expansion(b, x)?;
                    match format {
                        Format::Json => {
                            let _ = writeln!(
                                out,
                                "{}",
                                serde_json::to_string(&abstract_flags_json(&flags))?
                            );
                        }
                        Format::Text => {
                            let _ = writeln!(out, "expansion: {}", yes_no(flags.expansion));
                            let _ = writeln!(out, "normal: {}", yes_no(flags.normal));
                            let _ = writeln!(out, "non_cyclic: {}", yes_no(flags.non_cyclic));
                            let _ = writeln!(out, "rational_man: {}", yes_no(flags.rational_man));
                        }
                    }
                    Ok(u8::from(!flags.expansion))
                }
                (
                    FrameworkDocument::PreferenceBased(b),
                    FrameworkDocument::PreferenceBased(x),
                ) => {
                    let flags = classify_paf_expansion(b, x)?;
                    match format {
                        Format::Json => {
                            let _ = writeln!(
                                out,
                                "{}",
                                serde_json::to_string(&paf_flags_json(&flags))?
                            );
                        }
                        Format::Text => {
                            let _ = writeln!(out, "normal_paf: {}", yes_no(flags.normal_paf));
                            let _ = writeln!(
                                out,
                                "rational_man_paf: {}",
                                yes_no(flags.rational_man_paf)
                            );
                        }
                    }
                    Ok(u8::from(!flags.normal_paf))
                }
                _ => Err(Box::new(afaudit::Error::MixedDocumentKinds)),
            }
        }

        Command::CheckPrinciple {
            principle,
            semantics,
            mode,
            base,
            expanded,
            format,
        } => {
            let principle: PrincipleId = principle.parse()?;
            let sem: SemanticsId = semantics.parse()?;
            let base_doc = load_document(&base)?;
            let expanded_doc = load_document(&expanded)?;
            let verdict = match (&base_doc, &expanded_doc) {
                (FrameworkDocument::Abstract(b), FrameworkDocument::Abstract(x)) => {
                    check_principle(principle, sem, mode.parse()?, b, x)?
                }
                (
                    FrameworkDocument::PreferenceBased(b),
                    FrameworkDocument::PreferenceBased(x),
                ) if principle == PrincipleId::DecisionRefIndependence => {
                    check_paf_reference_independence(b, x)?
                }
                (FrameworkDocument::PreferenceBased(_), FrameworkDocument::PreferenceBased(_)) => {
                    return Err(format!(
                        "preference documents support only decision_ref_independence, not {principle}"
                    )
                    .into())
                }
                _ => return Err(Box::new(afaudit::Error::MixedDocumentKinds)),
            };
            match format {
                Format::Json => {
                    let _ = writeln!(out, "{}", serde_json::to_string(&verdict_json(&verdict))?);
                }
                Format::Text => write_verdict_text(out, &verdict),
            }
            Ok(u8::from(!verdict.holds))
        }

        Command::Audit {
            files,
            semantics,
            mode,
            require,
            format,
        } => {
            let options = AuditOptions {
                semantics: semantics.parse()?,
                mode: mode.parse()?,
                require: require.map(|k| k.parse::<ExpansionKind>()).transpose()?,
            };
            let documents = files
                .iter()
                .map(|p| load_document(p))
                .collect::<CliResult<Vec<_>>>()?;
            let report = run_audit(&documents, &options)?;
            match format {
                Format::Json => {
                    let value = json!({
                        "outcome": match report.outcome {
                            AuditOutcome::Pass => "pass",
                            AuditOutcome::RequirementFailedAt(_) => "requirement_failed",
                            AuditOutcome::NotNormalAt(_) => "not_normal",
                            AuditOutcome::ViolationAt(_) => "violation",
                        },
                        "at": match report.outcome {
                            AuditOutcome::Pass => Value::Null,
                            AuditOutcome::RequirementFailedAt(i)
                            | AuditOutcome::NotNormalAt(i)
                            | AuditOutcome::ViolationAt(i) => json!(i),
                        },
                        "steps": report.steps.iter().map(step_json).collect::<Vec<_>>(),
                    });
                    let _ = writeln!(out, "{}", serde_json::to_string(&value)?);
                }
                Format::Text => {
                    for step in &report.steps {
                        let _ = write!(out, "pair {}: flags {}", step.index, step.flags);
                        if let Some(d) = &step.base_decision {
                            let _ = write!(out, "; base decision {d}");
                        }
                        if let Some(d) = &step.expanded_decision {
                            let _ = write!(out, "; expanded decision {d}");
                        }
                        match &step.verdict {
                            Some(v) if v.holds => {
                                let _ = write!(out, "; reference independence holds");
                            }
                            Some(_) => {
                                let _ = write!(out, "; reference independence VIOLATED");
                            }
                            None => {}
                        }
                        let _ = writeln!(out);
                    }
                    let _ = writeln!(out, "outcome: {}", report.outcome);
                }
            }
            Ok(u8::from(!report.outcome.passed()))
        }

        Command::Search {
            semantics,
            principle,
            mode,
            max_args,
            exhaustive,
            random,
            seed,
            allow_self_attacks,
            kind,
            format,
        } => {
            let bounds = SearchBounds {
                max_arguments: max_args,
                mode: if exhaustive {
                    SearchMode::Exhaustive
                } else {
                    SearchMode::Random {
                        count: random.expect("clap enforces the strategy group"),
                        seed: seed.expect("clap ties --seed to --random"),
                    }
                },
                allow_self_attacks,
                required_kind: kind.parse()?,
            };
            let found = search_counterexamples(
                semantics.parse()?,
                mode.parse::<AggregationMode>()?,
                principle.parse()?,
                &bounds,
            )?;
            match format {
                Format::Json => {
                    let value = Value::Array(
                        found
                            .iter()
                            .map(|c: &Counterexample| {
                                json!({
                                    "base": framework_json(&c.base),
                                    "expanded": framework_json(&c.expanded),
                                    "verdict": verdict_json(&c.verdict),
                                })
                            })
                            .collect(),
                    );
                    let _ = writeln!(out, "{}", serde_json::to_string(&value)?);
                }
                Format::Text => {
                    let _ = writeln!(out, "counterexamples: {}", found.len());
                    for (i, c) in found.iter().enumerate() {
                        let _ = writeln!(out);
                        let _ = writeln!(out, "--- counterexample {} ---", i + 1);
                        let _ = writeln!(out, "base:");
                        let _ = write!(out, "{}", serialize_framework(&c.base));
                        let _ = writeln!(out, "expanded:");
                        let _ = write!(out, "{}", serialize_framework(&c.expanded));
                        if let Some(w) = &c.verdict.witness {
                            let _ = writeln!(out, "witness: {}", w.detail);
                        }
                    }
                }
            }
            Ok(u8::from(!found.is_empty()))
        }

        Command::Generate {
            args,
            attack_prob,
            seed,
            expand_from,
            new_args,
            allow_self_attacks,
            kind,
        } => {
            let params = GenParams {
                num_arguments: args,
                attack_probability: attack_prob,
                allow_self_attacks,
                num_new_arguments: new_args,
                seed,
            };
            let framework = match expand_from {
                None => generate_framework(&params)?,
                Some(path) => {
                    let base = load_abstract(&path)?;
                    match kind.parse::<ExpansionKind>()? {
                        ExpansionKind::RationalMan => {
                            generate_rational_mans_expansion(&base, &params)?
                        }
                        ExpansionKind::Normal => generate_normal_expansion(&base, &params)?,
                        other => {
                            return Err(format!(
                                "generation supports normal and rational-man expansions, not {other}"
                            )
                            .into())
                        }
                    }
                }
            };
            let _ = write!(out, "{}", serialize_framework(&framework));
            Ok(0)
        }
    }
}
