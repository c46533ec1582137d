//! `poly`: term valuations of serialized polynomials and the axiom
//! property suite over seeded random pairs.

use std::io::Read;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use stringval::poly_val::{
    check_prevaluation_axioms, extremal_coeff, highest_term_valuation, identity_order,
    lowest_term_valuation, MultiPolyJson,
};
use stringval::ratio::{format_rat, ratio};
use stringval::{MultiPoly, ValVector};

use crate::config::{CliError, CliResult, PolyAxiomsArgs, PolyCmd, PolyValueArgs, ValKind};
use crate::report::{tuple_str, Report};

pub fn run(cmd: &PolyCmd) -> CliResult<Report> {
    match cmd {
        PolyCmd::Value(args) => value_report(args),
        PolyCmd::Axioms(args) => axioms_report(args),
    }
}

fn kind_str(kind: ValKind) -> &'static str {
    match kind {
        ValKind::Highest => "highest",
        ValKind::Lowest => "lowest",
    }
}

fn read_poly(input: &str) -> CliResult<MultiPoly> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| CliError::Usage(format!("cannot read {input:?}: {e}")))?
    };
    let parsed: MultiPolyJson = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed polynomial JSON: {e}")))?;
    Ok(MultiPoly::from_json(&parsed)?)
}

fn value_report(args: &PolyValueArgs) -> CliResult<Report> {
    let config = json!({
        "input": args.input,
        "valuation": kind_str(args.valuation),
    });
    let mut report = Report::new("poly-value", config);

    let poly = read_poly(&args.input)?;
    let order = identity_order(poly.vars());
    let value = match args.valuation {
        ValKind::Highest => highest_term_valuation(&poly, &order)?,
        ValKind::Lowest => lowest_term_valuation(&poly, &order)?,
    };
    let (exp, coeff) =
        extremal_coeff(&poly, &order, args.valuation == ValKind::Highest)?;

    report.push_summary("vars", poly.vars());
    report.push_summary("terms", poly.num_terms());
    report.push_summary("valuation", kind_str(args.valuation));
    report.push_summary("value", tuple_str(&value));
    report.push_summary("leading_exponent", tuple_str(&exp));
    report.push_summary("leading_coeff", format_rat(&coeff));

    report.data = json!({
        "value": value,
        "leading_exponent": exp,
        "leading_coeff": format_rat(&coeff),
        "polynomial": serde_json::to_value(poly.to_json()).expect("poly serializes"),
    });
    Ok(report)
}

/// Random polynomial with small integer exponents and small rational
/// coefficients; never zero.
fn random_poly(rng: &mut ChaCha8Rng, vars: usize) -> MultiPoly {
    loop {
        let n_terms = rng.gen_range(1..=4usize);
        let mut terms = Vec::with_capacity(n_terms);
        for _ in 0..n_terms {
            let exp: Vec<u32> = (0..vars).map(|_| rng.gen_range(0..=3u32)).collect();
            let mut num = 0i64;
            while num == 0 {
                num = rng.gen_range(-9..=9i64);
            }
            terms.push((exp, ratio(num, rng.gen_range(1..=4i64))));
        }
        let poly = MultiPoly::from_terms(vars, terms).expect("well-shaped terms");
        if !poly.is_zero() {
            return poly;
        }
    }
}

fn axioms_report(args: &PolyAxiomsArgs) -> CliResult<Report> {
    if args.vars == 0 {
        return Err(CliError::Usage("need at least one variable".into()));
    }
    let config = json!({
        "vars": args.vars,
        "random": args.random,
        "seed": args.seed,
        "valuation": kind_str(args.valuation),
        "negative_control": args.negative_control,
    });
    let mut report = Report::new("poly-axioms", config);

    let order = identity_order(args.vars);
    let highest = args.valuation == ValKind::Highest;
    let value = |f: &MultiPoly| -> stringval::Result<ValVector> {
        if args.negative_control {
            // deliberately broken: the unnegated top exponent satisfies
            // multiplicativity but breaks the sum rule under distinct
            // values, so the suite must flag it
            let (exp, _) = extremal_coeff(f, &order, true)?;
            Ok(exp.iter().map(|&e| e as i64).collect())
        } else if highest {
            highest_term_valuation(f, &order)
        } else {
            lowest_term_valuation(f, &order)
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut checks = 0usize;
    let mut violations: Vec<String> = Vec::new();
    for pair_index in 0..args.random {
        let f = random_poly(&mut rng, args.vars);
        let g = random_poly(&mut rng, args.vars);
        let outcome = check_prevaluation_axioms(&[f, g], value, true)?;
        checks += outcome.checks;
        for v in outcome.violations {
            violations.push(format!("pair {pair_index}: {v}"));
        }
    }

    let flagged = !violations.is_empty();
    report.ok = if args.negative_control { flagged } else { !flagged };

    report.push_summary("vars", args.vars);
    report.push_summary("pairs", args.random);
    report.push_summary("checks", checks);
    report.push_summary("violations", violations.len());
    report.push_summary(
        "mode",
        if args.negative_control { "negative-control" } else { "valuation" },
    );
    if args.negative_control {
        report.push_summary("control_flagged", flagged);
    }

    report.data = json!({
        "checks": checks,
        "violations": violations.iter().take(10).collect::<Vec<_>>(),
        "violation_count": violations.len(),
        "flagged": flagged,
    });
    Ok(report)
}
