//! Abstract argumentation with an eye on how acceptance shifts when a
//! framework grows.
//!
//! The crate computes extension families under eleven semantics, classifies
//! framework pairs along the expansion hierarchy (expansion, normal,
//! non-cyclic, rational man's), checks pairs against monotony and
//! reference-independence principles, and audits whole document sequences
//! at the decision level. Preference-based frameworks are supported through
//! their own acceptability function and expansion relations.
//!
//! Solving enumerates candidate subsets exactly, so frameworks are capped
//! at 24 arguments; within that cap every result is definitional, not
//! approximated. Subset filtering runs on all cores by default; disable the
//! `parallel` feature (or pass [`ExecMode::Sequential`] to the `*_with_mode`
//! entry points) for strictly single-threaded use.

pub mod audit;
mod dense;
pub mod error;
pub mod exec;
pub mod expansions;
mod framework;
pub mod graph;
pub mod preferences;
pub mod principles;
pub mod semantics;
pub mod text;

pub use error::{Error, Result};
pub use exec::ExecMode;
pub use expansions::{
    classify_expansion, generate_framework, generate_normal_expansion,
    generate_rational_mans_expansion, is_expansion, is_normal_expansion, ExpansionFlags,
    ExpansionKind, GenParams,
};
pub use framework::{Argument, ArgumentSet, ArgumentationFramework};
pub use graph::{AttackCycle, DpuPartition, SccPartition};
pub use audit::{run_audit, AuditOptions, AuditOutcome, AuditReport, AuditStep, StepFlags};
pub use preferences::{
    check_paf_reference_independence, classify_paf_expansion, tau_preferred, PafExpansionFlags,
    PreferenceBasedFramework,
};
pub use principles::{
    check_cautious_monotony, check_decision_reference_independence, check_directionality,
    check_monotony, check_principle, check_rational_monotony, check_reference_independence,
    search_counterexamples, search_counterexamples_with_mode, Counterexample, PrincipleId,
    PrincipleVerdict, SearchBounds, SearchMode, Strength, Witness, ALL_PRINCIPLES,
    MAX_DIRECTIONALITY_ARGUMENTS, MAX_EXHAUSTIVE_ARGUMENTS, MAX_SEARCH_ARGUMENTS,
};
pub use text::{
    parse_framework, serialize_document, serialize_framework, serialize_paf, FrameworkDocument,
};
pub use semantics::{
    aggregate, decision_set, extensions, extensions_with_mode, uniqueness_guarantee, Aggregated,
    AggregationMode, ExtensionSet, ReasoningMode, SemanticsId, ALL_SEMANTICS,
};
