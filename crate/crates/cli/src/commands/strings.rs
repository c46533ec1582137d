//! `strings value-set`: string parameters of a module's dual basis.

use serde_json::json;

use stringval::strings::value_set;
use stringval::build_hw_module;

use crate::config::{resolve_word, CliResult, StringsCmd, WordWeightArgs};
use crate::report::{tuple_str, Report};

pub fn run(cmd: &StringsCmd) -> CliResult<Report> {
    match cmd {
        StringsCmd::ValueSet(args) => value_set_report(args),
    }
}

fn value_set_report(args: &WordWeightArgs) -> CliResult<Report> {
    let spec = args.sys.spec()?;
    let word = resolve_word(&spec, &args.word)?;
    let config = json!({
        "family": spec.family.to_string(),
        "rank": spec.rank,
        "word": word,
        "lambda": args.lambda,
    });
    let mut report = Report::new("strings-value-set", config);

    let module = build_hw_module(&spec, &args.lambda)?;
    let set = value_set(&module, &word)?;

    report.push_summary("family", spec.family);
    report.push_summary("rank", spec.rank);
    report.push_summary("word", tuple_str(&word));
    report.push_summary("lambda", tuple_str(&args.lambda));
    report.push_summary("dimension", module.dim);
    report.push_summary("points", set.points.len());

    report.columns = vec!["string_parameters".into()];
    for p in &set.points {
        report.rows.push(vec![tuple_str(p)]);
    }

    report.data = json!({
        "word": word,
        "lambda": args.lambda,
        "points": set.points.iter().cloned().collect::<Vec<_>>(),
    });
    report.ok = set.points.len() == module.dim;
    Ok(report)
}
