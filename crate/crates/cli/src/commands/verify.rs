//! `verify-main-theorem`: string parameters versus the negated chart
//! valuation, over the full dual basis plus seeded random functionals.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use stringval::bott_samelson::verify_many;
use stringval::hwmodule::DualVector;
use stringval::ratio::ratio;
use stringval::build_hw_module;

use crate::config::{resolve_word, CliResult, VerifyArgs};
use crate::report::{tuple_str, Report};

/// Nonzero rational functional with small entries.
pub fn random_functional(rng: &mut ChaCha8Rng, dim: usize) -> DualVector {
    loop {
        let v: DualVector = (0..dim)
            .map(|_| ratio(rng.gen_range(-9..=9i64), rng.gen_range(1..=4i64)))
            .collect();
        if v.iter().any(|c| *c != ratio(0, 1)) {
            return v;
        }
    }
}

pub fn run(args: &VerifyArgs) -> CliResult<Report> {
    let spec = args.sys.spec()?;
    let word = resolve_word(&spec, &args.word)?;
    let config = json!({
        "family": spec.family.to_string(),
        "rank": spec.rank,
        "word": word,
        "lambda": args.lambda,
        "random": args.random,
        "seed": args.seed,
    });
    let mut report = Report::new("verify-main-theorem", config);

    let module = build_hw_module(&spec, &args.lambda)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let extras: Vec<DualVector> =
        (0..args.random).map(|_| random_functional(&mut rng, module.dim)).collect();
    let outcomes = verify_many(&module, &word, &extras)?;

    let label = |k: usize| -> String {
        if k < module.dim {
            format!("delta_{k}")
        } else {
            format!("random_{}", k - module.dim)
        }
    };
    report.columns = vec![
        "functional".into(),
        "string_parameters".into(),
        "negated_valuation".into(),
        "agree".into(),
    ];
    let mut matched = 0usize;
    let mut pairs = Vec::new();
    for (k, outcome) in outcomes.iter().enumerate() {
        if outcome.agree {
            matched += 1;
        }
        report.rows.push(vec![
            label(k),
            tuple_str(&outcome.string_side),
            tuple_str(&outcome.valuation_side),
            outcome.agree.to_string(),
        ]);
        pairs.push(json!({
            "functional": label(k),
            "string_side": outcome.string_side,
            "valuation_side": outcome.valuation_side,
            "agree": outcome.agree,
        }));
    }

    report.push_summary("family", spec.family);
    report.push_summary("rank", spec.rank);
    report.push_summary("lambda", tuple_str(&args.lambda));
    report.push_summary("word", tuple_str(&word));
    report.push_summary("dimension", module.dim);
    report.push_summary("random_functionals", args.random);
    report.push_summary("pairs", outcomes.len());
    report.push_summary("matched", matched);

    report.ok = matched == outcomes.len();
    report.data = json!({ "pairs": pairs });
    Ok(report)
}
