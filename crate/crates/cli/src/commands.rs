use ncshuffle_core::combinatorics::{
    enumerate, monotone_count, nesting_forest, omega, tree_factorial, Enumeration, Family, PartitionJson,
};
use ncshuffle_core::convolutions::{
    additive_convolve, belinschi_nica, cfree_convolve, cmonotone_convolve, cmonotone_power, orthogonal,
    subordination, Additive,
};
use ncshuffle_core::cumulants::{
    cfree_cumulants, cfree_from_cmonotone, cmonotone_cumulants, cmonotone_from_cfree, cumulant_cross, cumulants_of,
    moments_of, t_boolean, t_boolean_shift, t_monotone, CumulantFamily, CumulantKind,
};
use ncshuffle_core::rational;
use ncshuffle_core::ts_expansion::{ts_expansion, MAX_ORDER};
use ncshuffle_core::verify::{run_suite, suites, SuiteConfig};
use ncshuffle_core::{Error, Functional, Rational};
use serde::Serialize;
use serde_json::json;

use crate::error::{CliError, CliResult};
use crate::io::{check_degree, inline_moments, load_cumulants, load_functional, load_pair, Output};
use crate::{Cli, Command, Inputs};

const MAX_COEFFICIENT_N: usize = 8;

pub fn run(cli: Cli) -> CliResult<()> {
    let out = Output::new(cli.output);
    let truncation = cli.truncation.map(|n| n as usize);
    match cli.command {
        Command::Enumerate { family, n, count_only } => enumerate_cmd(&out, family, n, count_only),
        Command::Transform { inputs, from, to, t } => transform(&out, &inputs, truncation, &from, &to, t),
        Command::Ctransform { input, to, via_relation } => {
            let p = load_pair(&input, truncation)?;
            let c = match (to.replace('-', "").as_str(), via_relation) {
                ("cfree", false) => cfree_cumulants(&p)?,
                ("cfree", true) => cfree_from_cmonotone(&p)?,
                ("cmonotone", false) => cmonotone_cumulants(&p)?,
                ("cmonotone", true) => cmonotone_from_cfree(&p)?,
                _ => return Err(CliError::Usage(format!("--to must be cfree or cmonotone, got {to:?}"))),
            };
            out.json(&c.to_json())
        }
        Command::Convolve { inputs, kind, t } => convolve(&out, &inputs, truncation, &kind, t),
        Command::Cconvolve { input, kind, power } => {
            let pairs = input
                .iter()
                .map(|p| load_pair(p, truncation))
                .collect::<CliResult<Vec<_>>>()?;
            let cmonotone = match kind.replace('-', "").as_str() {
                "cfree" => false,
                "cmonotone" => true,
                _ => return Err(CliError::Usage(format!("--kind must be cfree or cmonotone, got {kind:?}"))),
            };
            let result = match (power, pairs.as_slice()) {
                (Some(m), [p]) if cmonotone => cmonotone_power(p, m)?,
                (Some(_), [_]) => return Err(CliError::Usage("--power is only defined for cmonotone".into())),
                (None, [p1, p2]) if cmonotone => cmonotone_convolve(p1, p2)?,
                (None, [p1, p2]) => cfree_convolve(p1, p2)?,
                _ => {
                    return Err(CliError::Usage(
                        "expected two pair inputs, or one with --power".into(),
                    ))
                }
            };
            out.json(&result.to_json())
        }
        Command::Coefficients { n, family, format } => coefficients(&out, n, family, &format),
        Command::Verify {
            suite,
            degree,
            seed,
            cases,
            letters,
            list,
        } => {
            if list {
                let text: String = suites().iter().map(|(n, about)| format!("{n}\t{about}\n")).collect();
                return out.text(&text);
            }
            if let Some(d) = degree {
                check_degree("verify", d)?;
            }
            let config = SuiteConfig {
                seed,
                degree,
                cases,
                letters,
            };
            verify(&out, suite.as_deref().unwrap_or("all"), &config)
        }
        Command::TsExpansion { order, format } => {
            if order == 0 || order > MAX_ORDER {
                return Err(Error::Limit {
                    family: "ts-expansion order".into(),
                    n: order,
                    limit: MAX_ORDER,
                }
                .into());
            }
            let e = ts_expansion(order)?;
            match format.as_str() {
                "text" => out.text(&e.to_string()),
                "json" => {
                    let rows: Vec<_> = e
                        .coefficients()
                        .iter()
                        .map(|(tree, p)| json!({ "tree": tree.to_string(), "coefficient": p.to_string() }))
                        .collect();
                    out.json(&json!({ "order": order, "coefficients": rows }))
                }
                _ => Err(CliError::Usage(format!("--format must be text or json, got {format:?}"))),
            }
        }
    }
}

fn enumerate_cmd(out: &Output, family: Family, n: usize, count_only: bool) -> CliResult<()> {
    let e = enumerate(n, family)?;
    if count_only {
        return out.text(&format!("{}\n", e.len()));
    }
    let partitions: Vec<PartitionJson> = match &e {
        Enumeration::Plain(v) => v.iter().map(PartitionJson::from).collect(),
        Enumeration::Monotone(v) => v.iter().map(|m| m.to_json()).collect(),
    };
    out.json(&json!({
        "family": family.name(),
        "n": n,
        "count": e.len(),
        "partitions": partitions,
    }))
}

/// Single functional input for commands that take exactly `want` of them.
fn characters(inputs: &Inputs, truncation: Option<usize>, want: usize) -> CliResult<Vec<Functional>> {
    let mut fs = Vec::new();
    for p in &inputs.input {
        fs.push(load_functional(p, truncation)?);
    }
    for m in &inputs.moments {
        fs.push(inline_moments(m, truncation)?);
    }
    if fs.len() != want {
        return Err(CliError::Usage(format!("expected {want} input(s), got {}", fs.len())));
    }
    Ok(fs)
}

fn target_kind(to: &str, t: Option<Rational>) -> CliResult<CumulantKind> {
    let kind = CumulantKind::from_name(to, t)?;
    if matches!(kind, CumulantKind::CFree | CumulantKind::CMonotone) {
        return Err(CliError::Usage(format!("{to} cumulants belong to pair states; use ctransform")));
    }
    Ok(kind)
}

fn cumulants(phi: &Functional, kind: CumulantKind) -> CliResult<CumulantFamily> {
    Ok(match kind {
        CumulantKind::TBoolean(t) => t_boolean(phi, &t)?,
        CumulantKind::TMonotone(t) => t_monotone(phi, &t)?,
        k => cumulants_of(phi, k)?,
    })
}

fn transform(
    out: &Output,
    inputs: &Inputs,
    truncation: Option<usize>,
    from: &str,
    to: &str,
    t: Option<Rational>,
) -> CliResult<()> {
    let to_moments = to == "moments";
    let target = if to_moments { None } else { Some(target_kind(to, t)?) };
    if from == "moments" {
        let phi = characters(inputs, truncation, 1)?.remove(0);
        return match target {
            None => out.json(&phi.to_json()),
            Some(k) => out.json(&cumulants(&phi, k)?.to_json()),
        };
    }
    let [path] = inputs.input.as_slice() else {
        return Err(CliError::Usage("cumulant input needs exactly one --input file".into()));
    };
    if !inputs.moments.is_empty() {
        return Err(CliError::Usage("--moments only applies with --from moments".into()));
    }
    let src = load_cumulants(path, truncation)?;
    let declared = src.kind().name();
    if declared != from.replace('-', "") {
        return Err(Error::Mismatch(format!("--from {from} but the file holds {} cumulants", src.kind())).into());
    }
    let result = match target {
        None => return out.json(&moments_of(&src)?.to_json()),
        Some(k) if src.kind().is_basic() && k.is_basic() => cumulant_cross(&src, k)?,
        Some(CumulantKind::TBoolean(t)) if shift_source(src.kind()).is_some() => {
            let s = shift_source(src.kind()).expect("checked");
            t_boolean_shift(&src, &s, &t)?
        }
        Some(k) => cumulants(&moments_of(&src)?, k)?,
    };
    out.json(&result.to_json())
}

/// Parameter of a family that the t-Boolean shift accepts as its source.
fn shift_source(kind: &CumulantKind) -> Option<Rational> {
    match kind {
        CumulantKind::TBoolean(s) => Some(s.clone()),
        CumulantKind::Boolean => Some(rational::zero()),
        CumulantKind::Free => Some(rational::one()),
        _ => None,
    }
}

fn convolve(out: &Output, inputs: &Inputs, truncation: Option<usize>, kind: &str, t: Option<Rational>) -> CliResult<()> {
    let kind = kind.replace('_', "-");
    let result = if kind == "belinschi-nica" {
        let t = t.ok_or_else(|| CliError::Usage("belinschi-nica needs --t".into()))?;
        if rational::is_negative(&t) {
            return Err(Error::Domain("the Belinschi–Nica map needs t >= 0".into()).into());
        }
        belinschi_nica(&characters(inputs, truncation, 1)?[0], &t)?
    } else {
        let fs = characters(inputs, truncation, 2)?;
        let (a, b) = (&fs[0], &fs[1]);
        match kind.as_str() {
            "orthogonal" => orthogonal(a, b)?,
            "subordination" => subordination(a, b)?,
            k => {
                let additive: Additive = k
                    .parse()
                    .map_err(|_| CliError::Usage(format!("unknown convolution kind {k:?}")))?;
                additive_convolve(a, b, additive)?
            }
        }
    };
    out.json(&result.to_json())
}

#[derive(Serialize)]
struct CoefficientRow {
    blocks: Vec<Vec<usize>>,
    /// Only defined for irreducible partitions.
    omega: Option<String>,
    tree_factorial: String,
    monotone_count: String,
}

fn coefficients(out: &Output, n: usize, family: Family, format: &str) -> CliResult<()> {
    if n == 0 || n > MAX_COEFFICIENT_N {
        return Err(Error::Limit {
            family: "coefficients".into(),
            n,
            limit: MAX_COEFFICIENT_N,
        }
        .into());
    }
    let partitions = match enumerate(n, family)? {
        Enumeration::Plain(v) => v,
        Enumeration::Monotone(_) => {
            return Err(CliError::Usage("coefficients are indexed by plain partition families".into()))
        }
    };
    let mut rows = Vec::new();
    for p in &partitions {
        rows.push(CoefficientRow {
            blocks: p.blocks().to_vec(),
            omega: if p.is_irreducible() {
                Some(rational::format(&omega(p)?))
            } else {
                None
            },
            tree_factorial: tree_factorial(&nesting_forest(p)).to_string(),
            monotone_count: monotone_count(p).to_string(),
        });
    }
    match format {
        "json" => out.json(&json!({ "n": n, "family": family.name(), "rows": rows })),
        "tsv" => {
            let mut s = String::from("partition\tomega\ttree_factorial\tmonotone_count\n");
            for (p, r) in partitions.iter().zip(&rows) {
                s += &format!(
                    "{p}\t{}\t{}\t{}\n",
                    r.omega.as_deref().unwrap_or("-"),
                    r.tree_factorial,
                    r.monotone_count
                );
            }
            out.text(&s)
        }
        _ => Err(CliError::Usage(format!("--format must be json or tsv, got {format:?}"))),
    }
}

fn verify(out: &Output, suite: &str, config: &SuiteConfig) -> CliResult<()> {
    let names: Vec<&str> = if suite == "all" {
        suites().into_iter().map(|s| s.0).collect()
    } else {
        vec![suite]
    };
    let mut text = String::new();
    let mut failed = 0;
    for name in names {
        let report = run_suite(name, config)?;
        failed += report.checks.iter().filter(|c| !c.passed()).count();
        text += &report.to_string();
    }
    out.text(&text)?;
    if failed > 0 {
        return Err(CliError::Failed(failed));
    }
    Ok(())
}
