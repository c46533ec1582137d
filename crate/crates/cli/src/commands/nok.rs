//! `nok`: string polytopes, Hilbert-growth degree checks, and fibered
//! polytopes over built-in isotypic data.

use serde_json::json;

use stringval::nok::{
    a1_interval_data, degree_check, fibered_count_oracle, fibered_polytope, flag_ray_data,
    string_polytope, IsotypicData,
};
use stringval::polytope::{lattice_count, volume};
use stringval::ratio::format_rat;
use stringval::rootdata::{Family, RootSystemSpec, WeylWord};
use stringval::Error;

use crate::config::{
    resolve_word, BuiltinData, CliError, CliResult, NokCmd, NokDegreeArgs, NokFiberedArgs,
    NokPolytopeArgs, SystemArgs,
};
use crate::report::{polytope_json, rat_tuple_str, tuple_str, Report};

pub fn run(cmd: &NokCmd) -> CliResult<Report> {
    match cmd {
        NokCmd::StringPolytope(args) => string_polytope_report(args),
        NokCmd::Degree(args) => degree_report(args),
        NokCmd::Fibered(args) => fibered_report(args),
    }
}

/// Volume cell: exact rational for full-dimensional bodies, a marker for
/// lower-dimensional ones that do not project to axis subspaces.
fn volume_cell(p: &stringval::RationalPolytope) -> CliResult<(String, serde_json::Value)> {
    match volume(p) {
        Ok(v) => Ok((format_rat(&v), serde_json::Value::String(format_rat(&v)))),
        Err(Error::Degenerate(_)) => {
            Ok(("degenerate".into(), serde_json::Value::Null))
        }
        Err(e) => Err(e.into()),
    }
}

fn string_polytope_report(args: &NokPolytopeArgs) -> CliResult<Report> {
    let spec = args.sys.spec()?;
    let word = resolve_word(&spec, &args.word)?;
    let config = json!({
        "family": spec.family.to_string(),
        "rank": spec.rank,
        "word": word,
        "lambda": args.lambda,
        "level_cap": args.level_cap,
    });
    let mut report = Report::new("nok-string-polytope", config);

    let polytope = string_polytope(&spec, &word, &args.lambda, args.level_cap)?;
    let count = lattice_count(&polytope, 1)?;
    let weyl = spec.weyl_dim(&args.lambda)?;
    let (vol_str, vol_json) = volume_cell(&polytope)?;

    report.push_summary("family", spec.family);
    report.push_summary("rank", spec.rank);
    report.push_summary("word", tuple_str(&word));
    report.push_summary("lambda", tuple_str(&args.lambda));
    report.push_summary("dim", polytope.dim);
    report.push_summary("vertices", polytope.vertices.len());
    report.push_summary("facets", polytope.facets.len());
    report.push_summary("lattice_count", count);
    report.push_summary("weyl_dimension", weyl);
    report.push_summary("counts_match", count == weyl);
    report.push_summary("volume", &vol_str);

    report.columns = vec!["vertex".into()];
    for v in &polytope.vertices {
        report.rows.push(vec![rat_tuple_str(v)]);
    }

    report.ok = count == weyl;
    report.data = json!({
        "polytope": polytope_json(&polytope),
        "lattice_count": count,
        "weyl_dimension": weyl,
        "volume": vol_json,
    });
    Ok(report)
}

fn degree_report(args: &NokDegreeArgs) -> CliResult<Report> {
    let spec = args.sys.spec()?;
    let word = resolve_word(&spec, &args.word)?;
    let config = json!({
        "family": spec.family.to_string(),
        "rank": spec.rank,
        "word": word,
        "lambda": args.lambda,
        "levels": args.levels,
    });
    let mut report = Report::new("nok-degree", config);

    let mut hilbert = Vec::with_capacity(args.levels as usize + 1);
    for k in 0..=args.levels {
        let scaled: Vec<i64> = args.lambda.iter().map(|&x| x * k as i64).collect();
        hilbert.push(spec.weyl_dim(&scaled)?);
    }
    let polytope = string_polytope(&spec, &word, &args.lambda, 2)?;
    let fit = degree_check(&hilbert, &polytope)?;

    report.push_summary("family", spec.family);
    report.push_summary("rank", spec.rank);
    report.push_summary("lambda", tuple_str(&args.lambda));
    report.push_summary("levels", args.levels);
    report.push_summary("fitted_degree", fit.degree);
    report.push_summary("polytope_dim", polytope.dim);
    report.push_summary("leading_coefficient", format_rat(&fit.leading));
    report.push_summary("scaled_leading", format_rat(&fit.scaled_leading));
    report.push_summary("scaled_volume", format_rat(&fit.scaled_volume));
    report.push_summary("degree_matches_dimension", fit.degree_matches_dimension);
    report.push_summary("volume_matches_growth", fit.volume_matches_growth);

    report.columns = vec!["level".into(), "dimension".into()];
    for (k, h) in hilbert.iter().enumerate() {
        report.rows.push(vec![k.to_string(), h.to_string()]);
    }

    report.ok = fit.degree_matches_dimension && fit.volume_matches_growth;
    report.data = json!({
        "hilbert": hilbert,
        "degree": fit.degree,
        "leading": format_rat(&fit.leading),
        "scaled_leading": format_rat(&fit.scaled_leading),
        "scaled_volume": format_rat(&fit.scaled_volume),
        "degree_matches_dimension": fit.degree_matches_dimension,
        "volume_matches_growth": fit.volume_matches_growth,
    });
    Ok(report)
}

fn fibered_setup(
    args: &NokFiberedArgs,
    data_cap: u32,
) -> CliResult<(IsotypicData, RootSystemSpec, WeylWord, &'static str)> {
    match args.data {
        BuiltinData::A1Interval => {
            let spec = RootSystemSpec::new(Family::A, 1)?;
            let word = resolve_word(&spec, &args.word)?;
            Ok((a1_interval_data(data_cap)?, spec, word, "a1-interval"))
        }
        BuiltinData::FlagRay => {
            let (Some(family), Some(rank), Some(lambda)) =
                (&args.family, &args.rank, &args.lambda)
            else {
                return Err(CliError::Usage(
                    "flag-ray data requires --family, --rank, and --lambda".into(),
                ));
            };
            let spec = SystemArgs { family: family.clone(), rank: *rank }.spec()?;
            let word = resolve_word(&spec, &args.word)?;
            Ok((flag_ray_data(&spec, lambda, data_cap)?, spec, word, "flag-ray"))
        }
    }
}

fn fibered_report(args: &NokFiberedArgs) -> CliResult<Report> {
    let data_cap = args.level_cap.max(args.count_levels);
    let (data, spec, word, kind) = fibered_setup(args, data_cap)?;
    let config = json!({
        "data": kind,
        "family": spec.family.to_string(),
        "rank": spec.rank,
        "lambda": args.lambda,
        "word": word,
        "level_cap": args.level_cap,
        "count_levels": args.count_levels,
    });
    let mut report = Report::new("nok-fibered", config);

    let polytope = fibered_polytope(&data, &word, args.level_cap)?;

    report.columns = vec![
        "level".into(),
        "lattice_count".into(),
        "dimension_sum".into(),
        "match".into(),
    ];
    let mut counts = Vec::new();
    let mut all_match = true;
    for k in 1..=args.count_levels {
        let count = lattice_count(&polytope, k)?;
        let oracle = fibered_count_oracle(&data, k)?;
        all_match &= count == oracle;
        report.rows.push(vec![
            k.to_string(),
            count.to_string(),
            oracle.to_string(),
            (count == oracle).to_string(),
        ]);
        counts.push(json!({ "level": k, "count": count, "dimension_sum": oracle }));
    }

    report.push_summary("data", kind);
    report.push_summary("family", spec.family);
    report.push_summary("rank", spec.rank);
    report.push_summary("word", tuple_str(&word));
    report.push_summary("ambient", polytope.ambient);
    report.push_summary("dim", polytope.dim);
    report.push_summary("vertices", polytope.vertices.len());
    report.push_summary("levels_checked", args.count_levels);
    report.push_summary("all_counts_match", all_match);

    report.ok = all_match;
    report.data = json!({
        "polytope": polytope_json(&polytope),
        "counts": counts,
    });
    Ok(report)
}
