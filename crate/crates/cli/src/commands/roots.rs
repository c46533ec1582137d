//! `roots`: Cartan data and reduced words for the longest element.

use serde_json::json;

use crate::config::{CliResult, SystemArgs};
use crate::report::{tuple_str, Report};

pub fn run(args: &SystemArgs) -> CliResult<Report> {
    let spec = args.spec()?;
    let config = json!({ "family": spec.family.to_string(), "rank": spec.rank });
    let mut report = Report::new("roots", config);

    let cartan = spec.cartan_matrix();
    let simple_roots: Vec<Vec<i64>> = (1..=spec.rank)
        .map(|i| spec.simple_root(i))
        .collect::<Result<_, _>>()?;
    let words = spec.longest_element_words();
    let canonical = spec.some_longest_word();

    report.push_summary("family", spec.family);
    report.push_summary("rank", spec.rank);
    report.push_summary("positive_roots", spec.num_positive_roots());
    report.push_summary("reduced_longest_words", words.len());
    report.push_summary("canonical_longest_word", tuple_str(&canonical));

    report.columns = vec!["simple_root".into(), "fundamental_coordinates".into()];
    for (i, root) in simple_roots.iter().enumerate() {
        report.rows.push(vec![format!("alpha_{}", i + 1), tuple_str(root)]);
    }

    report.data = json!({
        "spec": serde_json::to_value(spec).expect("spec serializes"),
        "cartan": cartan,
        "simple_roots": simple_roots,
        "canonical_longest_word": canonical,
        "longest_words": words,
    });
    Ok(report)
}
