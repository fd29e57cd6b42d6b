//! Multi-step audits: walk a sequence of framework documents, classify each
//! consecutive pair, and check decision-level reference independence step
//! by step.

use std::fmt;

use crate::error::{Error, Result};
use crate::expansions::{classify_expansion, ExpansionFlags, ExpansionKind};
use crate::framework::ArgumentSet;
use crate::preferences::{
    check_paf_reference_independence, classify_paf_expansion, tau_preferred, PafExpansionFlags,
};
use crate::principles::{check_decision_reference_independence, PrincipleVerdict};
use crate::semantics::{decision_set, AggregationMode, SemanticsId};
use crate::text::FrameworkDocument;

/// Settings for [`run_audit`]. The mode must be one of the decide rules;
/// preference-based sequences are decided by `tau_preferred` directly and
/// ignore both the semantics and the mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditOptions {
    pub semantics: SemanticsId,
    pub mode: AggregationMode,
    pub require: Option<ExpansionKind>,
}

/// Classification of one audited pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepFlags {
    Abstract(ExpansionFlags),
    PreferenceBased(PafExpansionFlags),
}

impl StepFlags {
    fn includes(&self, kind: ExpansionKind) -> bool {
        match self {
            StepFlags::Abstract(flags) => flags.includes(kind),
            // A PAF pair counts as an expansion of the respective kind via
            // its normal/rational-man classification.
            StepFlags::PreferenceBased(flags) => match kind {
                ExpansionKind::RationalMan => flags.rational_man_paf,
                _ => flags.normal_paf,
            },
        }
    }

    fn is_normal(&self) -> bool {
        match self {
            StepFlags::Abstract(flags) => flags.normal,
            StepFlags::PreferenceBased(flags) => flags.normal_paf,
        }
    }
}

impl fmt::Display for StepFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepFlags::Abstract(flags) => flags.fmt(f),
            StepFlags::PreferenceBased(flags) => flags.fmt(f),
        }
    }
}

/// One consecutive pair of the sequence: documents `index - 1` and `index`
/// (1-based pair numbering). Decision sets and the verdict stay `None` when
/// the audit stopped before evaluating this pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditStep {
    pub index: usize,
    pub flags: StepFlags,
    pub base_decision: Option<ArgumentSet>,
    pub expanded_decision: Option<ArgumentSet>,
    pub verdict: Option<PrincipleVerdict>,
}

/// Overall audit result; the contained index names the offending pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditOutcome {
    Pass,
    /// A required expansion kind is missing; detected before any verdict is
    /// computed.
    RequirementFailedAt(usize),
    /// A pair is not a normal expansion, so the reference-independence
    /// check is undefined on it.
    NotNormalAt(usize),
    /// Decision-level reference independence fails at this pair.
    ViolationAt(usize),
}

impl AuditOutcome {
    pub fn passed(self) -> bool {
        self == AuditOutcome::Pass
    }
}

impl fmt::Display for AuditOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditOutcome::Pass => f.write_str("pass"),
            AuditOutcome::RequirementFailedAt(i) => {
                write!(f, "required expansion kind missing at pair {i}")
            }
            AuditOutcome::NotNormalAt(i) => write!(f, "pair {i} is not a normal expansion"),
            AuditOutcome::ViolationAt(i) => {
                write!(f, "reference independence violated at pair {i}")
            }
        }
    }
}

/// The audit verdict for a whole sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub steps: Vec<AuditStep>,
    pub outcome: AuditOutcome,
}

/// Audits a document sequence pairwise.
///
/// Every consecutive pair is classified first; when a required expansion
/// kind is missing anywhere, the audit stops with no verdicts computed.
/// Otherwise pairs are checked in order for decision-level reference
/// independence until the first non-normal pair or violation; later pairs
/// keep their classification but stay unevaluated.
pub fn run_audit(documents: &[FrameworkDocument], options: &AuditOptions) -> Result<AuditReport> {
    match options.mode {
        AggregationMode::DecideUnion | AggregationMode::DecideIntersection => {}
        other => {
            return Err(Error::InvalidParameter(format!(
                "audits decide acceptance with decide_union or decide_intersection, got {other}"
            )))
        }
    }
    let preference_based = match documents {
        [] | [_] => {
            return Ok(AuditReport {
                steps: Vec::new(),
                outcome: AuditOutcome::Pass,
            })
        }
        [first, ..] => first.is_preference_based(),
    };
    if documents.iter().any(|d| d.is_preference_based() != preference_based) {
        return Err(Error::MixedDocumentKinds);
    }

    let mut steps = Vec::new();
    for (i, pair) in documents.windows(2).enumerate() {
        let flags = match (&pair[0], &pair[1]) {
            (FrameworkDocument::Abstract(b), FrameworkDocument::Abstract(x)) => {
                StepFlags::Abstract(classify_expansion(b, x)?)
            }
            (FrameworkDocument::PreferenceBased(b), FrameworkDocument::PreferenceBased(x)) => {
                StepFlags::PreferenceBased(classify_paf_expansion(b, x)?)
            }
            _ => return Err(Error::MixedDocumentKinds),
        };
        steps.push(AuditStep {
            index: i + 1,
            flags,
            base_decision: None,
            expanded_decision: None,
            verdict: None,
        });
    }

    if let Some(kind) = options.require {
        if let Some(step) = steps.iter().find(|s| !s.flags.includes(kind)) {
            let index = step.index;
            return Ok(AuditReport {
                steps,
                outcome: AuditOutcome::RequirementFailedAt(index),
            });
        }
    }

    let mut outcome = AuditOutcome::Pass;
    for (step, pair) in steps.iter_mut().zip(documents.windows(2)) {
        if !step.flags.is_normal() {
            outcome = AuditOutcome::NotNormalAt(step.index);
            break;
        }
        let verdict = match (&pair[0], &pair[1]) {
            (FrameworkDocument::Abstract(b), FrameworkDocument::Abstract(x)) => {
                step.base_decision = Some(decision_set(b, options.semantics, options.mode)?);
                step.expanded_decision = Some(decision_set(x, options.semantics, options.mode)?);
                check_decision_reference_independence(options.semantics, options.mode, b, x)?
            }
            (FrameworkDocument::PreferenceBased(b), FrameworkDocument::PreferenceBased(x)) => {
                step.base_decision = Some(tau_preferred(b));
                step.expanded_decision = Some(tau_preferred(x));
                check_paf_reference_independence(b, x)?
            }
            _ => unreachable!("mixed sequences are rejected above"),
        };
        let holds = verdict.holds;
        step.verdict = Some(verdict);
        if !holds {
            outcome = AuditOutcome::ViolationAt(step.index);
            break;
        }
    }
    Ok(AuditReport { steps, outcome })
}
