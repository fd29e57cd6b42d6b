//! Randomized structural invariants. These complement the oracle comparison
//! by checking relationships that must hold for every framework, not just
//! the sampled values.

mod common;

use proptest::prelude::*;

use afaudit::{
    check_monotony, check_paf_reference_independence, check_rational_monotony,
    check_reference_independence, classify_expansion, classify_paf_expansion, extensions,
    extensions_with_mode, generate_framework, generate_normal_expansion,
    generate_rational_mans_expansion, parse_framework, serialize_document, serialize_framework,
    tau_preferred, ArgumentSet, ArgumentationFramework, ExecMode, ExtensionSet,
    FrameworkDocument, GenParams, PreferenceBasedFramework, ReasoningMode, SemanticsId, Strength,
    ALL_SEMANTICS,
};

fn label(i: usize) -> String {
    format!("a{i}")
}

fn build(n: usize, matrix: &[bool]) -> ArgumentationFramework {
    let labels: Vec<String> = (0..n).map(label).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let attacks: Vec<(&str, &str)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| matrix[i * n + j])
        .map(|(i, j)| (refs[i], refs[j]))
        .collect();
    ArgumentationFramework::new(&refs, &attacks).unwrap()
}

prop_compose! {
    fn arb_framework(max_n: usize)
        (n in 0..=max_n)
        (matrix in prop::collection::vec(any::<bool>(), n * n), n in Just(n))
    -> ArgumentationFramework {
        build(n, &matrix)
    }
}

prop_compose! {
    /// A base framework and a normal expansion of it, built directly from
    /// adjacency bits: every added attack touches an added argument.
    fn arb_normal_pair()
        (base_n in 0usize..=4, new_n in 0usize..=3)
        (
            base_matrix in prop::collection::vec(any::<bool>(), base_n * base_n),
            added_matrix in prop::collection::vec(
                any::<bool>(),
                (base_n + new_n) * (base_n + new_n),
            ),
            base_n in Just(base_n),
            new_n in Just(new_n),
        )
    -> (ArgumentationFramework, ArgumentationFramework) {
        let base = build(base_n, &base_matrix);
        let total = base_n + new_n;
        let labels: Vec<String> = (0..total).map(label).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let mut attacks: Vec<(&str, &str)> = base
            .attacks()
            .iter()
            .map(|(x, y)| {
                let xi: usize = x.as_str()[1..].parse().unwrap();
                let yi: usize = y.as_str()[1..].parse().unwrap();
                (refs[xi], refs[yi])
            })
            .collect();
        for i in 0..total {
            for j in 0..total {
                if (i >= base_n || j >= base_n) && added_matrix[i * total + j] {
                    attacks.push((refs[i], refs[j]));
                }
            }
        }
        (base, ArgumentationFramework::new(&refs, &attacks).unwrap())
    }
}

fn contains_all(outer: &ExtensionSet, inner: &ExtensionSet) -> bool {
    inner.iter().all(|s| outer.contains(s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn extension_families_relate_as_the_definitions_require(
        framework in arb_framework(6),
    ) {
        let get = |sem| extensions(&framework, sem).unwrap();
        let complete = get(SemanticsId::Complete);
        let grounded = get(SemanticsId::Grounded);
        let preferred = get(SemanticsId::Preferred);
        let stable = get(SemanticsId::Stable);
        let semi_stable = get(SemanticsId::SemiStable);
        let ideal = get(SemanticsId::Ideal);
        let eager = get(SemanticsId::Eager);
        let naive = get(SemanticsId::Naive);
        let stage = get(SemanticsId::Stage);
        let cf2 = get(SemanticsId::Cf2);
        let stage2 = get(SemanticsId::Stage2);

        // Every extension of every semantics is conflict-free.
        for family in [
            &complete, &grounded, &preferred, &stable, &semi_stable, &ideal, &eager,
            &naive, &stage, &cf2, &stage2,
        ] {
            for ext in family.iter() {
                prop_assert!(framework.is_conflict_free(ext).unwrap());
            }
        }

        // Admissibility-based families contain only admissible sets.
        for family in [&complete, &grounded, &preferred, &stable, &semi_stable, &ideal, &eager] {
            for ext in family.iter() {
                prop_assert!(framework.is_admissible(ext).unwrap());
            }
        }

        // Single-status semantics yield exactly one extension.
        prop_assert_eq!(grounded.len(), 1);
        prop_assert_eq!(ideal.len(), 1);
        prop_assert_eq!(eager.len(), 1);

        // The grounded extension sits inside every complete extension, the
        // ideal inside every preferred, the eager inside every semi-stable.
        let grounded_ext = &grounded.sets()[0];
        prop_assert!(complete.iter().all(|c| grounded_ext.is_subset_of(c)));
        let ideal_ext = &ideal.sets()[0];
        prop_assert!(preferred.iter().all(|p| ideal_ext.is_subset_of(p)));
        let eager_ext = &eager.sets()[0];
        prop_assert!(semi_stable.iter().all(|s| eager_ext.is_subset_of(s)));

        // Family inclusions: semi-stable and stable extensions are
        // preferred, preferred are complete, stage and cf2 are naive,
        // stable extensions are stage extensions.
        prop_assert!(contains_all(&preferred, &semi_stable));
        prop_assert!(contains_all(&preferred, &stable));
        prop_assert!(contains_all(&complete, &preferred));
        prop_assert!(contains_all(&naive, &stage));
        prop_assert!(contains_all(&naive, &cf2));
        prop_assert!(contains_all(&stage, &stable));

        // When a stable extension exists, stage and semi-stable coincide
        // with stable.
        if !stable.is_empty() {
            prop_assert_eq!(&stage, &stable);
            prop_assert_eq!(&semi_stable, &stable);
        }

        // Stable extensions cover the framework with their range.
        let everyone = framework.argument_set();
        for ext in stable.iter() {
            prop_assert_eq!(&framework.range_of(ext).unwrap(), &everyone);
        }

        // Only stable may come up empty.
        for family in [
            &complete, &grounded, &preferred, &semi_stable, &ideal, &eager,
            &naive, &stage, &cf2, &stage2,
        ] {
            prop_assert!(!family.is_empty());
        }
    }

    #[test]
    fn execution_modes_agree(framework in arb_framework(6)) {
        for sem in ALL_SEMANTICS {
            let sequential =
                extensions_with_mode(&framework, sem, ExecMode::Sequential).unwrap();
            let default_mode = extensions_with_mode(&framework, sem, ExecMode::default()).unwrap();
            prop_assert_eq!(&sequential, &default_mode, "{}", sem);
            #[cfg(feature = "parallel")]
            {
                let parallel =
                    extensions_with_mode(&framework, sem, ExecMode::Parallel).unwrap();
                prop_assert_eq!(&sequential, &parallel, "{}", sem);
            }
        }
    }

    #[test]
    fn relabeling_permutes_extensions(framework in arb_framework(6)) {
        // Reverse the label order; z-names sort opposite to a-names.
        let n = framework.argument_count();
        let rename = |a: &afaudit::Argument| -> String {
            let i: usize = a.as_str()[1..].parse().unwrap();
            format!("z{}", n - 1 - i)
        };
        let labels: Vec<String> = framework.arguments().iter().map(rename).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let renamed_attacks: Vec<(String, String)> = framework
            .attacks()
            .iter()
            .map(|(x, y)| (rename(x), rename(y)))
            .collect();
        let attack_refs: Vec<(&str, &str)> = renamed_attacks
            .iter()
            .map(|(x, y)| (x.as_str(), y.as_str()))
            .collect();
        let relabeled = ArgumentationFramework::new(&refs, &attack_refs).unwrap();

        for sem in ALL_SEMANTICS {
            let original = extensions(&framework, sem).unwrap();
            let mapped: ExtensionSet = original
                .iter()
                .map(|ext| {
                    ext.iter()
                        .map(|a| rename(a))
                        .map(|l| afaudit::Argument::new(l).unwrap())
                        .collect::<ArgumentSet>()
                })
                .collect();
            prop_assert_eq!(extensions(&relabeled, sem).unwrap(), mapped, "{}", sem);
        }
    }

    #[test]
    fn identity_pairs_carry_every_expansion_flag(framework in arb_framework(6)) {
        let flags = classify_expansion(&framework, &framework).unwrap();
        prop_assert!(flags.expansion && flags.normal && flags.non_cyclic && flags.rational_man);
    }

    #[test]
    fn constructed_pairs_classify_as_normal(pair in arb_normal_pair()) {
        let (base, expanded) = pair;
        let flags = classify_expansion(&base, &expanded).unwrap();
        prop_assert!(flags.expansion && flags.normal);
        if flags.rational_man {
            prop_assert!(flags.non_cyclic);
        }
    }

    #[test]
    fn generators_meet_their_postconditions(
        n in 0usize..=6,
        new_n in 0usize..=3,
        prob in 0.0f64..=1.0,
        self_attacks in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let base = generate_framework(&GenParams {
            num_arguments: n,
            attack_probability: prob,
            allow_self_attacks: self_attacks,
            num_new_arguments: 0,
            seed,
        }).unwrap();
        prop_assert_eq!(base.argument_count(), n);
        if !self_attacks {
            prop_assert!(base.attacks().iter().all(|(x, y)| x != y));
        }

        let params = GenParams {
            num_arguments: 0,
            attack_probability: prob,
            allow_self_attacks: self_attacks,
            num_new_arguments: new_n,
            seed: seed ^ 0x5DEECE66D,
        };
        let normal = generate_normal_expansion(&base, &params).unwrap();
        prop_assert_eq!(normal.argument_count(), n + new_n);
        prop_assert!(classify_expansion(&base, &normal).unwrap().normal);

        let rational = generate_rational_mans_expansion(&base, &params).unwrap();
        let flags = classify_expansion(&base, &rational).unwrap();
        prop_assert!(flags.rational_man && flags.normal && flags.non_cyclic);
    }

    #[test]
    fn maximality_semantics_keep_the_proved_implications(pair in arb_normal_pair()) {
        let (base, expanded) = pair;
        let mode = ReasoningMode::Credulous;
        for sem in [
            SemanticsId::Naive,
            SemanticsId::Stage,
            SemanticsId::Cf2,
            SemanticsId::Stage2,
            SemanticsId::Preferred,
        ] {
            let wm = check_monotony(sem, mode, &base, &expanded, Strength::Weak).unwrap();
            let wrm =
                check_rational_monotony(sem, mode, &base, &expanded, Strength::Weak).unwrap();
            let wri =
                check_reference_independence(sem, mode, &base, &expanded, Strength::Weak)
                    .unwrap();
            prop_assert!(!(wm.holds && !wri.holds), "{}", sem);
            prop_assert!(!(wrm.holds && !wri.holds), "{}", sem);

            let sm = check_monotony(sem, mode, &base, &expanded, Strength::Strong).unwrap();
            let sri =
                check_reference_independence(sem, mode, &base, &expanded, Strength::Strong)
                    .unwrap();
            prop_assert!(!(sm.holds && !sri.holds), "{}", sem);
        }
    }

    #[test]
    fn naive_and_cf2_never_violate_weak_reference_independence(pair in arb_normal_pair()) {
        let (base, expanded) = pair;
        for sem in [SemanticsId::Naive, SemanticsId::Cf2] {
            let verdict = check_reference_independence(
                sem,
                ReasoningMode::Credulous,
                &base,
                &expanded,
                Strength::Weak,
            ).unwrap();
            prop_assert!(verdict.holds, "{}", sem);
        }
    }

    #[test]
    fn failed_weak_verdicts_carry_sound_witnesses(pair in arb_normal_pair()) {
        let (base, expanded) = pair;
        let within = base.argument_set();
        for sem in [SemanticsId::Complete, SemanticsId::Stage, SemanticsId::Grounded] {
            let verdict = check_reference_independence(
                sem,
                ReasoningMode::Credulous,
                &base,
                &expanded,
                Strength::Weak,
            ).unwrap();
            if verdict.holds {
                continue;
            }
            let witness = verdict.witness.unwrap();
            let e = witness.base_extension.unwrap();
            prop_assert!(extensions(&base, sem).unwrap().contains(&e));
            // No expanded extension rescues the witness: each stays inside
            // the base arguments yet differs from it.
            for e2 in extensions(&expanded, sem).unwrap().iter() {
                prop_assert!(e2.is_subset_of(&within) && e2 != &e);
            }
        }
    }

    #[test]
    fn text_round_trip_is_exact(framework in arb_framework(6)) {
        let text = serialize_framework(&framework);
        let parsed = parse_framework(&text).unwrap();
        match &parsed {
            FrameworkDocument::Abstract(af) => prop_assert_eq!(af, &framework),
            FrameworkDocument::PreferenceBased(_) => prop_assert!(false),
        }
        // Serialization is canonical: a second round trip is byte-identical.
        prop_assert_eq!(serialize_document(&parsed), text);
    }
}

prop_compose! {
    /// Preference-based framework whose preferences come from integer ranks,
    /// keeping the closure antisymmetric by construction.
    fn arb_paf(max_n: usize)
        (n in 0..=max_n)
        (
            matrix in prop::collection::vec(any::<bool>(), n * n),
            ranks in prop::collection::vec(0usize..4, n),
            pref_bits in prop::collection::vec(any::<bool>(), n * n),
            n in Just(n),
        )
    -> PreferenceBasedFramework {
        let framework = build(n, &matrix);
        let labels: Vec<String> = (0..n).map(label).collect();
        let mut prefs: Vec<(&str, &str)> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if pref_bits[i * n + j] && ranks[i] > ranks[j] {
                    prefs.push((labels[i].as_str(), labels[j].as_str()));
                }
            }
        }
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let attacks: Vec<(&str, &str)> = framework
            .attacks()
            .iter()
            .map(|(x, y)| {
                let xi: usize = x.as_str()[1..].parse().unwrap();
                let yi: usize = y.as_str()[1..].parse().unwrap();
                (refs[xi], refs[yi])
            })
            .collect();
        PreferenceBasedFramework::new(&refs, &attacks, &prefs).unwrap()
    }
}

prop_compose! {
    /// A PAF pair that is a preference-based normal expansion by
    /// construction: added attacks touch new arguments and added
    /// preferences put a new argument on the left, so the closure can only
    /// grow by pairs touching new arguments.
    fn arb_paf_pair()
        (base_n in 0usize..=3, new_n in 0usize..=3)
        (
            base_matrix in prop::collection::vec(any::<bool>(), base_n * base_n),
            added_matrix in prop::collection::vec(
                any::<bool>(),
                (base_n + new_n) * (base_n + new_n),
            ),
            ranks in prop::collection::vec(0usize..4, base_n + new_n),
            pref_bits in prop::collection::vec(any::<bool>(), (base_n + new_n) * (base_n + new_n)),
            base_n in Just(base_n),
            new_n in Just(new_n),
        )
    -> (PreferenceBasedFramework, PreferenceBasedFramework) {
        let total = base_n + new_n;
        let labels: Vec<String> = (0..total).map(label).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();

        let mut base_attacks: Vec<(&str, &str)> = Vec::new();
        for i in 0..base_n {
            for j in 0..base_n {
                if base_matrix[i * base_n + j] {
                    base_attacks.push((refs[i], refs[j]));
                }
            }
        }
        let mut expanded_attacks = base_attacks.clone();
        for i in 0..total {
            for j in 0..total {
                if (i >= base_n || j >= base_n) && added_matrix[i * total + j] {
                    expanded_attacks.push((refs[i], refs[j]));
                }
            }
        }

        let mut base_prefs: Vec<(&str, &str)> = Vec::new();
        let mut expanded_prefs: Vec<(&str, &str)> = Vec::new();
        for i in 0..total {
            for j in 0..total {
                if i == j || !pref_bits[i * total + j] || ranks[i] <= ranks[j] {
                    continue;
                }
                if i < base_n && j < base_n {
                    base_prefs.push((refs[i], refs[j]));
                    expanded_prefs.push((refs[i], refs[j]));
                } else if i >= base_n {
                    expanded_prefs.push((refs[i], refs[j]));
                }
            }
        }

        let base = PreferenceBasedFramework::new(
            &refs[..base_n],
            &base_attacks,
            &base_prefs,
        ).unwrap();
        let expanded = PreferenceBasedFramework::new(
            &refs,
            &expanded_attacks,
            &expanded_prefs,
        ).unwrap();
        (base, expanded)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn accepted_arguments_always_include_the_unattacked(paf in arb_paf(6)) {
        let accepted = tau_preferred(&paf);
        let framework = paf.abstract_framework();
        for a in framework.arguments() {
            if framework.attackers_of(a).is_empty() {
                prop_assert!(accepted.contains(a));
            }
        }
    }

    #[test]
    fn without_preferences_and_self_attacks_tau_is_the_unattacked_set(
        framework in arb_framework(6),
    ) {
        let labels: Vec<String> =
            framework.arguments().iter().map(|a| a.as_str().to_string()).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let attacks: Vec<(&str, &str)> = framework
            .attacks()
            .iter()
            .filter(|(x, y)| x != y)
            .map(|(x, y)| {
                let xi = labels.iter().position(|l| l == x.as_str()).unwrap();
                let yi = labels.iter().position(|l| l == y.as_str()).unwrap();
                (refs[xi], refs[yi])
            })
            .collect();
        let paf = PreferenceBasedFramework::new(&refs, &attacks, &[]).unwrap();
        let stripped = paf.abstract_framework();
        let unattacked: ArgumentSet = stripped
            .arguments()
            .iter()
            .filter(|a| stripped.attackers_of(a).is_empty())
            .cloned()
            .collect();
        prop_assert_eq!(tau_preferred(&paf), unattacked);
    }

    #[test]
    fn paf_classification_projects_onto_the_attack_level(pair in arb_paf_pair()) {
        let (base, expanded) = pair;
        let flags = classify_paf_expansion(&base, &expanded).unwrap();
        let abstract_flags =
            classify_expansion(base.abstract_framework(), expanded.abstract_framework())
                .unwrap();
        // Preferences were constructed to satisfy the preference-level
        // conditions, so the PAF flags reduce to the attack-level ones.
        prop_assert_eq!(flags.normal_paf, abstract_flags.normal);
        prop_assert_eq!(flags.rational_man_paf, abstract_flags.rational_man);
        if flags.rational_man_paf {
            prop_assert!(flags.normal_paf);
        }

        if flags.normal_paf {
            let verdict = check_paf_reference_independence(&base, &expanded).unwrap();
            if verdict.holds && !verdict.vacuous {
                // A non-vacuous pass means the expanded decision stayed put.
                prop_assert_eq!(tau_preferred(&expanded), tau_preferred(&base));
            }
        }
    }

    #[test]
    fn paf_round_trip_is_exact(paf in arb_paf(5)) {
        let document = FrameworkDocument::PreferenceBased(paf.clone());
        let text = serialize_document(&document);
        let parsed = parse_framework(&text).unwrap();
        match &parsed {
            FrameworkDocument::PreferenceBased(back) => prop_assert_eq!(back, &paf),
            FrameworkDocument::Abstract(af) => {
                // No preferences at all serializes as a plain framework.
                prop_assert!(paf.preferences().is_empty());
                prop_assert_eq!(af, paf.abstract_framework());
            }
        }
        prop_assert_eq!(serialize_document(&parsed), text);
    }
}
