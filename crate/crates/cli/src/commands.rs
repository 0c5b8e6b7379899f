use std::path::Path;
use std::time::{Duration, Instant};

use sibirsky::groebner::{Budget, GroebnerConfig};
use sibirsky::reversibility::{
    complexify_quadratic, gamma_relations, hilbert_oracle, is_time_reversible, minimal_elements,
    monomial_of_in, sibirsky_ideal, CoefficientPoint, SibirskyConfig, SibirskyIdeal, SystemFamily,
};
use sibirsky::scalars::parse_rational;

use crate::args::{Cli, Command, CommonArgs};
use crate::input::{split_var_order, FamilySpec, OrderName, PointSpec};
use crate::output::{
    hilbert_entries, CheckSection, FamilyEcho, GeneratorEntry, OracleReport, ResultDocument, Timing,
};
use crate::CliError;

/// What a successful command writes to stdout, plus the wall-clock time of
/// the run for the stderr diagnostics.
pub struct Outcome {
    pub stdout: String,
    pub elapsed: Duration,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

struct Prepared {
    family: SystemFamily,
    order: OrderName,
    config: SibirskyConfig,
}

fn prepare(spec: &FamilySpec, common: &CommonArgs) -> Result<Prepared, CliError> {
    let family = spec.family()?;
    let order = common.order.or(spec.order).unwrap_or(OrderName::Lex);
    let variable_order = match &common.var_order {
        Some(text) => Some(split_var_order(text)),
        None => spec.var_order.clone(),
    };
    let max_time = match common.budget_seconds {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            return Err(CliError::Parse(format!(
                "--budget-seconds {s} is not a duration"
            )));
        }
        s => s.map(Duration::from_secs_f64),
    };
    let config = SibirskyConfig {
        kind: order.kind(),
        variable_order,
        groebner: GroebnerConfig {
            budget: Budget {
                max_time,
                max_degree: common.budget_degree,
                max_generators: common.budget_generators,
            },
            parallel: common.parallel,
        },
    };
    Ok(Prepared {
        family,
        order,
        config,
    })
}

fn base_document(
    command: &'static str,
    prep: &Prepared,
    ideal: &SibirskyIdeal,
    common: &CommonArgs,
) -> ResultDocument {
    ResultDocument {
        command,
        input: None,
        family: FamilyEcho::new(&prep.family, prep.order.as_str(), ideal),
        generators: None,
        hilbert_basis: None,
        oracle: None,
        check: None,
        timing: common.timing.then(|| Timing::new(&ideal.stats)),
    }
}

fn check_section(
    family: &SystemFamily,
    point: &CoefficientPoint,
    ideal: &SibirskyIdeal,
) -> Result<CheckSection, CliError> {
    let verdict = is_time_reversible(family, point, &ideal.generators)?;
    let gamma =
        if verdict.is_reversible() {
            Some(gamma_relations(family, point).map_err(|e| {
                CliError::Internal(format!("reversible point admits no gamma: {e}"))
            })?)
        } else {
            None
        };
    Ok(CheckSection::new(
        point,
        &verdict,
        gamma.as_ref(),
        &ideal.generators,
    ))
}

fn hilbert_document(
    prep: &Prepared,
    ideal: &SibirskyIdeal,
    doc: &mut ResultDocument,
) -> Result<Vec<sibirsky::reversibility::MonoidVector>, CliError> {
    let basis = ideal.hilbert_basis()?;
    let monomials = basis
        .iter()
        .map(|v| monomial_of_in(v, &prep.family, &ideal.ring))
        .collect::<Result<Vec<_>, _>>()?;
    doc.hilbert_basis = Some(hilbert_entries(&basis, &monomials));
    Ok(basis)
}

fn emit(doc: &ResultDocument, json: bool) -> String {
    if json {
        doc.to_json()
    } else {
        doc.to_text()
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let stdout = match cli.command {
        Command::Sibirsky {
            family,
            hilbert,
            common,
        } => {
            let prep = prepare(&FamilySpec::parse(&read(&family)?)?, &common)?;
            let ideal = sibirsky_ideal(&prep.family, &prep.config)?;
            let mut doc = base_document("sibirsky", &prep, &ideal, &common);
            doc.generators = Some(ideal.generators.iter().map(GeneratorEntry::new).collect());
            if hilbert {
                hilbert_document(&prep, &ideal, &mut doc)?;
            }
            emit(&doc, common.json)
        }
        Command::Check {
            family,
            point,
            common,
        } => {
            let prep = prepare(&FamilySpec::parse(&read(&family)?)?, &common)?;
            let point = PointSpec::parse(&read(&point)?)?.point()?;
            if point.len() != 2 * prep.family.len() {
                return Err(CliError::Invariant(format!(
                    "point has {} coordinates, the family needs {}",
                    point.len(),
                    2 * prep.family.len()
                )));
            }
            let ideal = sibirsky_ideal(&prep.family, &prep.config)?;
            let mut doc = base_document("check", &prep, &ideal, &common);
            doc.check = Some(check_section(&prep.family, &point, &ideal)?);
            emit(&doc, common.json)
        }
        Command::Hilbert {
            family,
            oracle,
            common,
        } => {
            let prep = prepare(&FamilySpec::parse(&read(&family)?)?, &common)?;
            if oracle == Some(0) {
                return Err(CliError::Invariant(
                    "--oracle bound must be at least 1".into(),
                ));
            }
            let ideal = sibirsky_ideal(&prep.family, &prep.config)?;
            let mut doc = base_document("hilbert", &prep, &ideal, &common);
            let basis = hilbert_document(&prep, &ideal, &mut doc)?;
            if let Some(bound) = oracle {
                let vectors = hilbert_oracle(&prep.family.zeta(), bound);
                doc.oracle = Some(OracleReport {
                    bound,
                    agreement: minimal_elements(&basis) == vectors,
                    vectors: vectors.into_iter().map(|v| v.0).collect(),
                });
            }
            emit(&doc, common.json)
        }
        Command::Complexify {
            a1,
            a2,
            a3,
            b1,
            b2,
            b3,
            common,
        } => {
            let input = [a1, a2, a3, b1, b2, b3];
            let values = input
                .iter()
                .map(|s| parse_rational(s).map_err(|e| CliError::Parse(format!("{s:?}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let spec = FamilySpec {
                pairs: vec![[1, 0], [0, 1], [-1, 2]],
                order: None,
                var_order: None,
            };
            let prep = prepare(&spec, &common)?;
            let point = complexify_quadratic(
                &values[0], &values[1], &values[2], &values[3], &values[4], &values[5],
            );
            let ideal = sibirsky_ideal(&prep.family, &prep.config)?;
            let mut doc = base_document("complexify", &prep, &ideal, &common);
            doc.input = Some(values.iter().map(|v| v.to_string()).collect());
            doc.check = Some(check_section(&prep.family, &point, &ideal)?);
            emit(&doc, common.json)
        }
    };
    Ok(Outcome {
        stdout,
        elapsed: start.elapsed(),
    })
}
