//! `module`: highest-weight module construction and operator export.

use serde_json::json;

use stringval::build_hw_module;

use crate::config::{CliResult, ModuleArgs};
use crate::report::{matrix_json, tuple_str, Report};

pub fn run(args: &ModuleArgs) -> CliResult<Report> {
    let spec = args.sys.spec()?;
    let config = json!({
        "family": spec.family.to_string(),
        "rank": spec.rank,
        "lambda": args.lambda,
    });
    let mut report = Report::new("module", config);

    let module = build_hw_module(&spec, &args.lambda)?;
    let weyl = spec.weyl_dim(&args.lambda)?;

    report.push_summary("family", spec.family);
    report.push_summary("rank", spec.rank);
    report.push_summary("lambda", tuple_str(&args.lambda));
    report.push_summary("dimension", module.dim);
    report.push_summary("weyl_dimension", weyl);
    report.push_summary("highest_weight_index", module.hw_index);

    report.columns = vec!["basis_index".into(), "weight".into()];
    for (b, w) in module.basis_weights.iter().enumerate() {
        report.rows.push(vec![b.to_string(), tuple_str(w)]);
    }

    report.data = json!({
        "spec": serde_json::to_value(spec).expect("spec serializes"),
        "highest_weight": module.highest_weight,
        "dim": module.dim,
        "hw_index": module.hw_index,
        "basis_weights": module.basis_weights,
        "f_ops": module.op_f.iter().map(|m| matrix_json(m)).collect::<Vec<_>>(),
        "e_ops": module.op_e.iter().map(|m| matrix_json(m)).collect::<Vec<_>>(),
    });
    report.ok = module.dim as u64 == weyl;
    Ok(report)
}
