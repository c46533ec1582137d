//! `expand`: all basis-functional products of two modules, expanded over
//! the adapted dual basis of the target module.

use serde_json::json;

use stringval::bott_samelson::{expand_in_context, ExpansionContext, SectionPoly};
use stringval::ratio::format_rat;
use stringval::build_hw_module;

use crate::config::{resolve_word, CliError, CliResult, ExpandArgs};
use crate::report::{tuple_str, Report};

pub fn run(args: &ExpandArgs) -> CliResult<Report> {
    let spec = args.sys.spec()?;
    let word = resolve_word(&spec, &args.word)?;
    if args.lambda.len() != args.mu.len() {
        return Err(CliError::Usage(format!(
            "lambda has {} coordinates, mu has {}",
            args.lambda.len(),
            args.mu.len()
        )));
    }
    let config = json!({
        "family": spec.family.to_string(),
        "rank": spec.rank,
        "word": word,
        "lambda": args.lambda,
        "mu": args.mu,
    });
    let mut report = Report::new("expand", config);

    let target_weight: Vec<i64> =
        args.lambda.iter().zip(&args.mu).map(|(a, b)| a + b).collect();
    let left_module = build_hw_module(&spec, &args.lambda)?;
    let right_module = build_hw_module(&spec, &args.mu)?;
    let target_module = build_hw_module(&spec, &target_weight)?;
    let left = ExpansionContext::new(&left_module, &word)?;
    let right = ExpansionContext::new(&right_module, &word)?;
    let target = ExpansionContext::new(&target_module, &word)?;

    let section = |ctx: &ExpansionContext, lambda: &[i64], i: usize| SectionPoly {
        poly: ctx.basis_polys[i].clone(),
        lambda: lambda.to_vec(),
        word: word.clone(),
        sigma: ctx.adapted.vectors[i].clone(),
    };

    report.columns = vec![
        "left".into(),
        "right".into(),
        "leading_value".into(),
        "additive".into(),
        "lower_terms".into(),
        "strictly_smaller".into(),
    ];
    let mut entries = Vec::new();
    let mut all_ok = true;
    for i in 0..left.basis_polys.len() {
        for j in 0..right.basis_polys.len() {
            let expansion = expand_in_context(
                &target,
                &section(&left, &args.lambda, i),
                &section(&right, &args.mu, j),
            )?;
            let good =
                expansion.leading_is_additive && expansion.lower_terms_strictly_smaller;
            all_ok &= good;
            report.rows.push(vec![
                tuple_str(&left.adapted.params[i]),
                tuple_str(&right.adapted.params[j]),
                tuple_str(&expansion.leading_value),
                expansion.leading_is_additive.to_string(),
                (expansion.coefficients.len() - 1).to_string(),
                expansion.lower_terms_strictly_smaller.to_string(),
            ]);
            let terms: Vec<_> = expansion
                .coefficients
                .iter()
                .zip(&expansion.term_values)
                .map(|((_, c), v)| json!({ "value": v, "coeff": format_rat(c) }))
                .collect();
            entries.push(json!({
                "left": left.adapted.params[i],
                "right": right.adapted.params[j],
                "expected_value": expansion.expected_value,
                "leading_value": expansion.leading_value,
                "leading_coeff": format_rat(&expansion.leading_coeff),
                "additive": expansion.leading_is_additive,
                "strictly_smaller": expansion.lower_terms_strictly_smaller,
                "terms": terms,
            }));
        }
    }

    report.push_summary("family", spec.family);
    report.push_summary("rank", spec.rank);
    report.push_summary("lambda", tuple_str(&args.lambda));
    report.push_summary("mu", tuple_str(&args.mu));
    report.push_summary("word", tuple_str(&word));
    report.push_summary("products", entries.len());
    report.push_summary("all_products_multiplicative", all_ok);

    report.ok = all_ok;
    report.data = json!({ "products": entries });
    Ok(report)
}
