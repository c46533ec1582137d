//! `sagbi`: subduction traces, generator completeness, and the
//! degeneration onto the semigroup algebra.

use serde_json::json;

use stringval::nok::ValueSemigroup;
use stringval::ratio::format_rat;
use stringval::sagbi::{
    degeneration_family, degeneration_matches_semigroup, is_sagbi, section_ring_sample,
    semigroup_algebra, try_subduct, valued_generators, GradedElement, TermValuation,
    ValuedGenerator,
};
use stringval::rootdata::RootSystemSpec;

use crate::config::{
    resolve_word, CliError, CliResult, SagbiCheckArgs, SagbiCmd, SagbiDegenerateArgs,
    SagbiSampleArgs,
};
use crate::report::{tuple_str, Report};

pub fn run(cmd: &SagbiCmd) -> CliResult<Report> {
    match cmd {
        SagbiCmd::Subduct(args) => subduct_report(args),
        SagbiCmd::Check(args) => check_report(args),
        SagbiCmd::Degenerate(args) => degenerate_report(args),
    }
}

struct RingSetup {
    spec: RootSystemSpec,
    word: Vec<usize>,
    valuation: TermValuation,
    generators: Vec<ValuedGenerator>,
    sample: Vec<GradedElement>,
}

fn ring_setup(args: &SagbiSampleArgs) -> CliResult<RingSetup> {
    let spec = args.sys.spec()?;
    let word = resolve_word(&spec, &args.word)?;
    let valuation = TermValuation::highest(word.len());
    let generators = valued_generators(
        &section_ring_sample(&spec, &word, &args.lambda, 1)?,
        &valuation,
    )?;
    let sample = section_ring_sample(&spec, &word, &args.lambda, args.level_cap)?;
    Ok(RingSetup { spec, word, valuation, generators, sample })
}

fn subduct_report(args: &SagbiSampleArgs) -> CliResult<Report> {
    let setup = ring_setup(args)?;
    let config = json!({
        "family": setup.spec.family.to_string(),
        "rank": setup.spec.rank,
        "word": setup.word,
        "lambda": args.lambda,
        "level_cap": args.level_cap,
        "step_cap": args.step_cap,
    });
    let mut report = Report::new("sagbi-subduct", config);

    report.columns = vec![
        "level".into(),
        "value".into(),
        "steps".into(),
        "remainder".into(),
        "replay_exact".into(),
    ];
    let mut traces = Vec::new();
    let mut all_ok = true;
    for h in &setup.sample {
        let value = setup.valuation.graded_value(h)?;
        let trace = try_subduct(h, &setup.generators, &setup.valuation, args.step_cap)?;
        let replay_exact = trace.replay(&setup.generators)? == *h;
        let clean = trace.remainder.is_none() && replay_exact;
        all_ok &= clean;
        report.rows.push(vec![
            h.level.to_string(),
            tuple_str(&value.tail),
            trace.steps.len().to_string(),
            trace.remainder.is_some().to_string(),
            replay_exact.to_string(),
        ]);
        let steps: Vec<_> = trace
            .steps
            .iter()
            .map(|s| json!({ "exponents": s.exponents, "coeff": format_rat(&s.coeff) }))
            .collect();
        traces.push(json!({
            "level": h.level,
            "value": value.tail,
            "steps": steps,
            "remainder": trace.remainder.is_some(),
            "replay_exact": replay_exact,
        }));
    }

    report.push_summary("family", setup.spec.family);
    report.push_summary("rank", setup.spec.rank);
    report.push_summary("lambda", tuple_str(&args.lambda));
    report.push_summary("word", tuple_str(&setup.word));
    report.push_summary("generators", setup.generators.len());
    report.push_summary("sample", setup.sample.len());
    report.push_summary("all_zero_remainder", all_ok);

    report.ok = all_ok;
    report.data = json!({ "traces": traces });
    Ok(report)
}

fn check_report(args: &SagbiCheckArgs) -> CliResult<Report> {
    let mut setup = ring_setup(&args.base)?;
    if let Some(drop) = args.drop_generator {
        if drop >= setup.generators.len() {
            return Err(CliError::Usage(format!(
                "generator index {drop} out of range 0..{}",
                setup.generators.len()
            )));
        }
        setup.generators.remove(drop);
    }
    let config = json!({
        "family": setup.spec.family.to_string(),
        "rank": setup.spec.rank,
        "word": setup.word,
        "lambda": args.base.lambda,
        "level_cap": args.base.level_cap,
        "step_cap": args.base.step_cap,
        "drop_generator": args.drop_generator,
    });
    let mut report = Report::new("sagbi-check", config);

    let outcome = is_sagbi(
        &setup.generators,
        &setup.sample,
        &setup.valuation,
        args.base.step_cap,
    )?;

    report.push_summary("family", setup.spec.family);
    report.push_summary("rank", setup.spec.rank);
    report.push_summary("lambda", tuple_str(&args.base.lambda));
    report.push_summary("word", tuple_str(&setup.word));
    report.push_summary("generators", setup.generators.len());
    report.push_summary("sample", setup.sample.len());
    report.push_summary("checked", outcome.checked);
    report.push_summary("holds", outcome.holds);
    if let Some(value) = &outcome.witness_value {
        report.push_summary("witness_level", value.level);
        report.push_summary("witness_value", tuple_str(&value.tail));
    }

    report.ok = outcome.holds;
    report.data = json!({
        "holds": outcome.holds,
        "checked": outcome.checked,
        "witness_value": outcome.witness_value.as_ref().map(|v| json!({
            "level": v.level,
            "tail": v.tail,
        })),
        "witness": outcome.witness.as_ref().map(|w| json!({
            "level": w.level,
            "poly": serde_json::to_value(w.poly.to_json()).expect("poly serializes"),
        })),
    });
    Ok(report)
}

fn degenerate_report(args: &SagbiDegenerateArgs) -> CliResult<Report> {
    let spec = args.sys.spec()?;
    let word = resolve_word(&spec, &args.word)?;
    let config = json!({
        "family": spec.family.to_string(),
        "rank": spec.rank,
        "word": word,
        "lambda": args.lambda,
        "level_cap": args.level_cap,
    });
    let mut report = Report::new("sagbi-degenerate", config);

    let family = degeneration_family(&spec, &word, &args.lambda, args.level_cap)?;
    let semigroup =
        ValueSemigroup::from_string_values(&spec, &word, &args.lambda, args.level_cap)?;
    let algebra = semigroup_algebra(&semigroup)?;
    let matches = degeneration_matches_semigroup(&family, &algebra);
    let nonzero_leading =
        family.entries.iter().all(|e| e.leading_coeff != stringval::ratio::rat(0));

    report.columns = vec![
        "left".into(),
        "right".into(),
        "leading_value".into(),
        "leading_coeff".into(),
        "lower_terms".into(),
    ];
    let mut entries = Vec::new();
    for e in &family.entries {
        report.rows.push(vec![
            format!("{}:{}", e.left.0, tuple_str(&e.left.1)),
            format!("{}:{}", e.right.0, tuple_str(&e.right.1)),
            format!("{}:{}", e.leading.0, tuple_str(&e.leading.1)),
            format_rat(&e.leading_coeff),
            e.lower.len().to_string(),
        ]);
        let lower: Vec<_> = e
            .lower
            .iter()
            .map(|(v, c, gap)| json!({
                "value": v,
                "coeff": format_rat(c),
                "gap": gap,
            }))
            .collect();
        entries.push(json!({
            "left": { "level": e.left.0, "value": e.left.1 },
            "right": { "level": e.right.0, "value": e.right.1 },
            "leading": { "level": e.leading.0, "value": e.leading.1 },
            "leading_coeff": format_rat(&e.leading_coeff),
            "lower": lower,
        }));
    }

    report.push_summary("family", spec.family);
    report.push_summary("rank", spec.rank);
    report.push_summary("lambda", tuple_str(&args.lambda));
    report.push_summary("word", tuple_str(&word));
    report.push_summary("level_cap", args.level_cap);
    report.push_summary("products", family.entries.len());
    report.push_summary("constant_family", family.is_constant());
    report.push_summary("limit_matches_semigroup_algebra", matches);
    report.push_summary("leading_constants_nonzero", nonzero_leading);

    report.ok = matches && nonzero_leading;
    report.data = json!({
        "entries": entries,
        "semigroup_basis": algebra.basis,
        "limit_matches_semigroup_algebra": matches,
        "constant_family": family.is_constant(),
    });
    Ok(report)
}
